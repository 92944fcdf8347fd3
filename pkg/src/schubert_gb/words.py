"""Bit-mask words over GF(2) and squarefree monomials.

A length-n binary word is stored as a Python int: bit i-1 holds position i,
so the word string "1101000" (leftmost character = position 1) is the mask
0b0001011.  The support bijection between words and squarefree monomials is
the identity on masks: bit i-1 set means the factor x_i is present.

Words are limited to n <= 64 positions.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

WORD_LIMIT = 64

_MONOMIAL_FACTOR = re.compile(r"x(\d+)$")


def weight(mask: int) -> int:
    """Hamming weight of a word / total degree of a squarefree monomial."""
    return mask.bit_count()


def mask_from_support(positions: Iterable[int]) -> int:
    """Mask with the given 1-based positions set."""
    m = 0
    for i in positions:
        if i < 1:
            raise ValueError(f"positions are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def support(mask: int) -> tuple[int, ...]:
    """Ascending 1-based positions set in the mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def mask_from_bits(bits: Sequence[int]) -> int:
    """Mask from a 0/1 sequence, bits[0] = position 1."""
    m = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {i} is {b}, expected 0 or 1")
        m |= int(b) << i
    return m


def bits_from_mask(mask: int, n: int) -> list[int]:
    """0/1 list of length n, entry i-1 = position i."""
    return [(mask >> i) & 1 for i in range(n)]


def word_from_string(s: str) -> tuple[int, int]:
    """Parse a binary word string (leftmost char = position 1) to (mask, n)."""
    s = s.strip()
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a binary word: {s!r}")
    if len(s) > WORD_LIMIT:
        raise ValueError(f"word length {len(s)} exceeds limit {WORD_LIMIT}")
    return mask_from_bits([int(c) for c in s]), len(s)


def word_to_string(mask: int, n: int) -> str:
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(n))


def monomial_from_string(s: str) -> int:
    """Parse a squarefree monomial like 'x1*x2*x13' (or '1') to its mask."""
    s = s.strip()
    if s == "1":
        return 0
    positions = []
    for factor in s.split("*"):
        m = _MONOMIAL_FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor {factor!r} in {s!r}")
        positions.append(int(m.group(1)))
    if len(set(positions)) != len(positions):
        raise ValueError(f"repeated variable in monomial {s!r}")
    return mask_from_support(positions)


def monomial_to_string(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{i}" for i in support(mask))


def degrevlex_key(mask: int) -> tuple[int, int]:
    """Sort key realizing ascending degrevlex on squarefree monomials.

    Lower total degree sorts first; among equal degrees the monomial whose
    highest-indexed differing variable is present sorts first, which on masks
    is simply descending integer order.
    """
    return (mask.bit_count(), -mask)


def lex_key(mask: int, n: int) -> int:
    """Key for lexicographic word order with position 1 most significant."""
    out = 0
    for i in range(n):
        out = (out << 1) | ((mask >> i) & 1)
    return out
