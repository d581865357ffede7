"""
Unit tests for the non-archimedean local functions.

This module tests:
- Gamma_q / B_q values, poles, reflection and symmetry
- ResidueModule validation
- RamifiedLocalCharacter arithmetic (conductor, conjugate, product)
- kappa_local and the ramified gamma factor
- the local ramified beta function
"""

import cmath
import math

import numpy as np
import pytest

from arithmetic import prime_power
from characters import character_from_index, primitive_characters
from nonarch import (
    RamifiedLocalCharacter,
    ResidueModule,
    beta_local,
    beta_q,
    gamma_q,
    gamma_ramified,
    kappa_local,
    local_gamma,
    ramified_gamma_factor,
)
from utils.error_handlers import (
    NotPrimitiveError,
    PoleError,
    UnsupportedFieldError,
    ValidationError,
)


def local_character(m, k):
    """The k-th character mod the prime power m as a local character."""
    chi = character_from_index(m, k)
    p, a = prime_power(m)
    return RamifiedLocalCharacter(p, a, chi.order, chi.angles)


@pytest.fixture
def chi4():
    return local_character(4, 1)


@pytest.fixture
def chi5():
    """Order-4 character mod 5 with chi(2) = i."""
    return local_character(5, 1)


class TestResidueModule:
    """Tests for residue field sizes."""

    def test_from_q(self):
        """q = 9 is 3^2."""
        module = ResidueModule.from_q(9)
        assert (module.p, module.f, module.q) == (3, 2, 9)
        assert module.log_q == pytest.approx(math.log(9))

    def test_rejects_non_prime_power(self):
        """q must be a prime power."""
        with pytest.raises(ValidationError):
            ResidueModule.from_q(6)
        with pytest.raises(ValidationError):
            ResidueModule(4)


class TestGammaQ:
    """Tests for the reduced gamma function."""

    def test_hand_value(self):
        """Gamma_2(-1) = (1 - 1/4) / (1 - 2) = -0.75."""
        assert gamma_q(-1, 2) == pytest.approx(-0.75, rel=1e-15)

    def test_fixed_points(self):
        """Gamma_q(1/2) = 1 and Gamma_q(1) = 0."""
        for q in (2, 3, 9, 25):
            assert gamma_q(0.5, q) == pytest.approx(1.0)
            assert gamma_q(1, q) == 0

    def test_poles(self):
        """alpha in 2 pi i Z / log q are poles."""
        with pytest.raises(PoleError):
            gamma_q(0, 2)
        with pytest.raises(PoleError):
            gamma_q(2j * math.pi / math.log(3), 3)

    def test_reflection(self):
        """Gamma_q(alpha) Gamma_q(1 - alpha) = 1."""
        rng = np.random.default_rng(11)
        for _ in range(500):
            alpha = complex(rng.uniform(-3, 3), rng.uniform(0.1, 2))
            q = int(rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 49]))
            assert abs(gamma_q(alpha, q) * gamma_q(1 - alpha, q) - 1) <= 1e-10

    def test_beta_symmetry(self):
        """B_q is invariant under permutations of (alpha, beta, 1 - alpha - beta)."""
        rng = np.random.default_rng(12)
        for _ in range(100):
            alpha = complex(rng.uniform(-2, 2), rng.uniform(0.1, 1))
            beta = complex(rng.uniform(-2, 2), rng.uniform(0.1, 1))
            gamma = 1 - alpha - beta
            reference = beta_q(alpha, beta, 5)
            for a, b in [(beta, alpha), (alpha, gamma), (gamma, alpha), (beta, gamma), (gamma, beta)]:
                assert abs(beta_q(a, b, 5) - reference) <= 1e-10 * abs(reference)


class TestRamifiedLocalCharacter:
    """Tests for characters of (Z/p^rho Z)^*."""

    def test_values(self, chi4):
        """chi4(1) = 1, chi4(3) = -1, chi4(2) = 0."""
        assert chi4(1) == 1
        assert chi4(3) == -1
        assert chi4(2) == 0
        assert chi4.sign == -1

    def test_conductor_of_lift(self, chi4):
        """Lifting to 2^3 keeps conductor exponent 2."""
        lifted = chi4.lift(3)
        assert lifted.modulus == 8
        assert lifted.conductor_exponent() == 2
        assert not lifted.is_primitive()
        assert lifted.primitive() == chi4

    def test_trivial_has_no_primitive(self):
        """The principal character has conductor exponent 0."""
        principal = local_character(9, 0)
        assert principal.conductor_exponent() == 0
        assert principal.primitive() is None

    def test_product_with_conjugate(self, chi5):
        """theta * conj(theta) is trivial."""
        assert (chi5 * chi5.conjugate()).is_trivial

    def test_square_is_quadratic(self, chi5):
        """The square of the order-4 character mod 5 is primitive of order 2."""
        square = chi5 * chi5
        assert square.order == 2
        assert square.is_primitive()

    def test_invalid_table(self):
        """theta(1) must be 1 and the table must cover p^rho residues."""
        with pytest.raises(ValidationError):
            RamifiedLocalCharacter(5, 1, 4, (-1, 1, 1, 3, 2))
        with pytest.raises(ValidationError):
            RamifiedLocalCharacter(5, 1, 4, (-1, 0, 1))


class TestKappaLocal:
    """Tests for normalized Gauss sums."""

    def test_chi4(self, chi4):
        """tau(chi4) = 2i, so kappa = i."""
        assert kappa_local(chi4) == pytest.approx(1j, abs=1e-14)

    def test_unimodular(self):
        """|kappa| = 1 for every primitive character mod a prime power up to 200."""
        for m in range(3, 201):
            try:
                p, a = prime_power(m)
            except ValueError:
                continue
            for chi in primitive_characters(m):
                theta = RamifiedLocalCharacter(p, a, chi.order, chi.angles)
                assert abs(abs(kappa_local(theta)) - 1) <= 1e-12

    def test_not_primitive(self, chi4):
        """A lifted character has no Gauss sum normalization."""
        with pytest.raises(NotPrimitiveError):
            kappa_local(chi4.lift(3))

    def test_additive_rank(self):
        """Only r = 0 is supported."""
        theta = RamifiedLocalCharacter(5, 1, 4, (-1, 0, 1, 3, 2), r=1)
        with pytest.raises(UnsupportedFieldError):
            kappa_local(theta)


class TestGammaRamified:
    """Tests for the ramified local gamma function."""

    def test_chi4_value(self, chi4):
        """Gamma(1.5; chi4) = i * 2^(1 * 2) = 4i."""
        assert gamma_ramified(1.5, chi4) == pytest.approx(4j, abs=1e-13)

    def test_factor_parts(self, chi4):
        """The factor keeps base, exponent and kappa apart."""
        factor = ramified_gamma_factor(1.5, chi4)
        assert factor.base == 2
        assert factor.exponent == pytest.approx(2.0)
        assert factor.value == pytest.approx(4j, abs=1e-13)

    @pytest.mark.parametrize("m,k", [(4, 1), (5, 1), (5, 2), (8, 1), (9, 1), (25, 3)])
    def test_reflection(self, m, k):
        """Gamma(alpha; theta) Gamma(1 - alpha; conj theta) = theta(-1)."""
        theta = local_character(m, k)
        if not theta.is_primitive():
            theta = theta.primitive()
        for alpha in (0.3 + 0.2j, -1.7 + 1.1j, 2.5):
            product = gamma_ramified(alpha, theta) * gamma_ramified(1 - alpha, theta.conjugate())
            assert abs(product - theta.sign) <= 1e-12

    def test_dispatch(self, chi4):
        """local_gamma picks Gamma_q for unramified data."""
        module = ResidueModule(3)
        assert local_gamma(-1.5, None, module) == pytest.approx(gamma_q(-1.5, 3))
        assert local_gamma(1.5, chi4) == pytest.approx(4j, abs=1e-13)
        with pytest.raises(ValidationError):
            local_gamma(-1.5, None)


class TestBetaLocal:
    """Tests for the local ramified beta function."""

    def test_unramified_matches_beta_q(self):
        """Without characters the local beta is B_q."""
        module = ResidueModule(7)
        assert beta_local(-1, None, -1.5, None, module) == pytest.approx(beta_q(-1, -1.5, 7))

    def test_permutation_symmetry(self, chi5):
        """Permuting (alpha, theta), (beta, theta'), (gamma, theta'') leaves the value fixed."""
        theta, theta_prime = chi5, chi5
        third = (theta * theta_prime).conjugate().primitive()
        points = [(-1.2 + 0.3j, theta), (-0.7 - 0.2j, theta_prime)]
        points.append((1 - points[0][0] - points[1][0], third))
        reference = beta_local(points[0][0], points[0][1], points[1][0], points[1][1])
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                (a, t), (b, s) = points[i], points[j]
                value = beta_local(a, t, b, s)
                assert cmath.isclose(value, reference, rel_tol=1e-10)

    def test_mixed_primes_rejected(self, chi4, chi5):
        """Characters at different primes cannot share a place."""
        with pytest.raises(ValidationError):
            beta_local(-1, chi4, -1, chi5)
