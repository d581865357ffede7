"""
Global error handlers for the adelic numerics toolkit.

Provides centralized error handling for:
- Poles and domain violations of the local and global functions
- Character and field validation errors
- Command-line parse errors with explanatory messages
- Exit-code mapping for the CLI contract (0 pass, 1 fail, 2 usage, 3 domain)
"""

import logging
import sys
from functools import wraps
from typing import Any, Callable, Dict, Tuple

logger = logging.getLogger(__name__)


# --- Custom Exceptions ---

class AdelicError(Exception):
    """Base exception for all toolkit errors."""
    pass


class PoleError(AdelicError):
    """Raised when a function is evaluated on (or within tolerance of) a pole."""
    pass


class DomainError(AdelicError):
    """Raised when an argument lies outside the region an operation supports."""
    pass


class NotPrimitiveError(AdelicError):
    """Raised when a character is induced from a smaller modulus."""
    pass


class UnsupportedFieldError(AdelicError):
    """Raised for ramified data over fields other than Q."""
    pass


class InvalidFieldSpec(AdelicError):
    """Raised when a number field description is malformed."""
    pass


class RankMismatchError(AdelicError):
    """Raised when the local ranks of omega, omega' and omega'' differ."""
    pass


class OracleUnavailable(AdelicError):
    """Raised when no analytic L-function is known for a (field, character) pair."""
    pass


class ValidationError(AdelicError):
    """Raised when input validation fails."""
    pass


class ParseError(ValidationError):
    """Raised when a command-line literal cannot be parsed."""
    pass


# --- Error Messages ---

ERROR_MESSAGES = {
    "pole": "Pole encountered: {details}",
    "domain": "Argument outside the supported domain: {details}",
    "not_primitive": "Character is not primitive: {details}",
    "unsupported_field": "Unsupported field/character combination: {details}",
    "invalid_field": "Invalid field specification: {details}",
    "rank_mismatch": "Local ranks of the characters differ: {details}",
    "oracle_unavailable": "No analytic oracle for this case: {details}",
    "parse": "Could not parse input: {details}",
    "invalid_input": "Invalid input: {details}",
    "unknown_error": "Unexpected error: {details}",
}

# Exit codes frozen for CI use
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_USAGE_KEYS = {"parse", "invalid_input", "invalid_field"}
_DOMAIN_KEYS = {
    "pole",
    "domain",
    "not_primitive",
    "unsupported_field",
    "rank_mismatch",
    "oracle_unavailable",
}


# --- Error Classification ---

def classify_error(error: Exception) -> Tuple[str, Dict[str, Any]]:
    """
    Classify an exception and return the appropriate error key and context.

    Args:
        error: The exception to classify

    Returns:
        Tuple of (error_key, context_dict)
    """
    context = {"details": str(error)}

    if isinstance(error, PoleError):
        return "pole", context
    if isinstance(error, DomainError):
        return "domain", context
    if isinstance(error, NotPrimitiveError):
        return "not_primitive", context
    if isinstance(error, UnsupportedFieldError):
        return "unsupported_field", context
    if isinstance(error, InvalidFieldSpec):
        return "invalid_field", context
    if isinstance(error, RankMismatchError):
        return "rank_mismatch", context
    if isinstance(error, OracleUnavailable):
        return "oracle_unavailable", context
    if isinstance(error, ParseError):
        return "parse", context
    if isinstance(error, (ValidationError, ValueError)):
        return "invalid_input", context

    return "unknown_error", context


def get_error_message(error: Exception) -> str:
    """
    Get a user-friendly error message for the given exception.

    Args:
        error: The exception

    Returns:
        A formatted error message string
    """
    error_key, context = classify_error(error)
    message_template = ERROR_MESSAGES.get(error_key, ERROR_MESSAGES["unknown_error"])

    try:
        return message_template.format(**context)
    except KeyError:
        return message_template


def exit_code_for(error: Exception) -> int:
    """Map an exception onto the CLI exit-code contract."""
    error_key, _ = classify_error(error)
    if error_key in _USAGE_KEYS:
        return EXIT_USAGE
    if error_key in _DOMAIN_KEYS:
        return EXIT_DOMAIN
    return EXIT_FAIL


# --- Error Handler Decorators ---

def handle_command_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorator for CLI handlers.

    Toolkit errors are logged, reported on stderr as ``<ErrorName>: <message>``
    and turned into the matching exit code. Anything else propagates.
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except (AdelicError, ValueError) as e:
            error_key, _ = classify_error(e)
            logger.error(f"Command {func.__name__} failed: [{error_key}] {e}")
            print(f"{type(e).__name__}: {get_error_message(e)}", file=sys.stderr)
            return exit_code_for(e)
    return wrapper
