"""Integer arithmetic shared by the field, character and local modules, on top of sympy.ntheory."""

from functools import lru_cache
from typing import List, Tuple

import numpy as np
from sympy import divisors as _sympy_divisors
from sympy.ntheory import factorint, isprime, jacobi_symbol, n_order, primerange, totient
from sympy.ntheory import primitive_root as _sympy_primitive_root
from sympy.ntheory.modular import crt


@lru_cache(maxsize=4096)
def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, a), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return tuple(sorted((int(p), int(a)) for p, a in factorint(n).items()))


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def prime_power(n: int) -> Tuple[int, int]:
    """Return (p, a) with n = p**a, or raise ValueError."""
    factors = factorize(n) if n > 1 else ()
    if len(factors) != 1:
        raise ValueError(f"{n} is not a prime power")
    return factors[0]


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(a == 1 for _, a in factorize(abs(n)))


def euler_phi(n: int) -> int:
    return int(totient(n))


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)^*; 1 when m == 1."""
    if m == 1:
        return 1
    return int(n_order(a, m))


@lru_cache(maxsize=1024)
def primitive_root(p: int, a: int = 1) -> int:
    """
    A generator of (Z/p^a Z)^* for an odd prime p.

    Args:
        p: odd prime
        a: exponent, >= 1

    Returns:
        The least primitive root g mod p, or g + p when g^(p-1) = 1 mod p^2 and a > 1.
    """
    if p == 2 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    g = int(_sympy_primitive_root(p))
    if a > 1 and pow(g, p - 1, p * p) == 1:
        return g + p
    return g


@lru_cache(maxsize=65536)
def crt_pair(residue: int, modulus: int, other_modulus: int) -> int:
    """The y mod modulus*other_modulus with y = residue mod modulus and y = 1 mod other_modulus."""
    if modulus == 1 or other_modulus == 1:
        return (residue if other_modulus == 1 else 1) % (modulus * other_modulus)
    solution = crt([modulus, other_modulus], [residue % modulus, 1 % other_modulus])
    if solution is None:
        raise ValueError(f"moduli {modulus} and {other_modulus} are not coprime")
    return int(solution[0])


def divisors(n: int) -> List[int]:
    return [int(d) for d in _sympy_divisors(n)]


def simple_sieve(limit: int) -> np.ndarray:
    """All primes p <= limit, ascending."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    return np.fromiter(primerange(2, limit + 1), dtype=np.int64)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    return int(jacobi_symbol(a % n, n))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extending the Jacobi symbol to n even, negative or zero."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(a, n)
