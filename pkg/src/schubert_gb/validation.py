"""Input validation helpers shared across the package and its estimators."""

from __future__ import annotations

import os
from typing import Any

import numpy as np

from .words import WORD_LIMIT

DEFAULT_MAX_ENUM_EXPONENT = 24
ENUM_ENV_VAR = "SGB_MAX_N"


class EnumerationLimitError(ValueError):
    """An exhaustive scan would exceed the configured enumeration guard."""


class NotFittedError(ValueError, AttributeError):
    """Estimator used before fit; mirrors scikit-learn's exception of the same name."""


def enum_limit(override: int | None = None) -> int:
    """Maximum number of words an exhaustive scan may enumerate.

    Defaults to 2**24; the environment variable SGB_MAX_N overrides the
    exponent, and an explicit ``override`` (a count, not an exponent) wins
    over both.
    """
    if override is not None:
        return int(override)
    return 2 ** int(os.environ.get(ENUM_ENV_VAR, DEFAULT_MAX_ENUM_EXPONENT))


def guard_enumeration(count: int, what: str, limit: int | None = None) -> None:
    bound = enum_limit(limit)
    if count > bound:
        raise EnumerationLimitError(
            f"enumeration bound exceeded: {what} needs {count} > {bound} words "
            f"(raise the limit explicitly or via {ENUM_ENV_VAR})"
        )


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2:
        raise ValueError(f"modulus must be a prime >= 2, got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus must be prime, got {p} = {d}*{p // d}")
        d += 1
    return p


def check_matrix(matrix: Any, p: int) -> np.ndarray:
    """Validate a residue matrix: integral, 2-D, entries in [0, p)."""
    check_prime(p)
    M = np.asarray(matrix)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {M.shape}")
    if M.size and not np.issubdtype(M.dtype, np.integer):
        if not np.all(M == np.floor(M)):
            raise ValueError("matrix entries must be integers")
    M = M.astype(np.int64)
    if M.size and (M.min() < 0 or M.max() >= p):
        raise ValueError(f"matrix entries must lie in [0, {p})")
    return M


def check_word_mask(mask: int, n: int) -> int:
    mask = int(mask)
    if n > WORD_LIMIT:
        raise ValueError(f"word length {n} exceeds limit {WORD_LIMIT}")
    if not 0 <= mask < (1 << n):
        raise ValueError(f"word mask {mask:#x} out of range for length {n}")
    return mask


def check_words_array(X: Any, n: int) -> np.ndarray:
    """Validate a batch of binary words: 2-D 0/1 array with n columns."""
    W = np.asarray(X)
    if W.ndim == 1:
        W = W.reshape(1, -1)
    if W.ndim != 2 or W.shape[1] != n:
        raise ValueError(f"expected words of length {n}, got shape {W.shape}")
    W = W.astype(np.int64)
    if W.size and not np.isin(W, (0, 1)).all():
        raise ValueError("words must be 0/1 arrays")
    return W


def check_is_fitted(estimator: Any, attribute: str) -> None:
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit() first"
        )
