"""Permutations of [n] in one-line notation.

Vertices of the Cayley graphs built elsewhere are dense integer ranks, so
this module provides the position-swap action together with lexicographic
rank/unrank via the factorial number system.  Symbols are 1-based
everywhere visible from outside.
"""

from __future__ import annotations

import math
from typing import Sequence

Perm = tuple[int, ...]

#: permutation arities above this are rejected by materialization paths
#: (8! = 40320 vertices is the largest graph we ever build in memory)
MAX_ARITY = 8

#: largest arity whose permutations render as separator-free digit strings
MAX_STRING_ARITY = 9


class CapacityError(Exception):
    """A request exceeds a hard materialization limit."""


def validate_perm(symbols: Sequence[int]) -> Perm:
    """Return ``symbols`` as a tuple after checking it permutes 1..n.

    >>> validate_perm([2, 1, 3])
    (2, 1, 3)
    """
    p = tuple(symbols)
    n = len(p)
    if n < 1:
        raise ValueError("permutation must have length >= 1")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p!r}")
    return p


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError("arity must be >= 1")
    return tuple(range(1, n + 1))


def apply_swap(p: Sequence[int], k: int, l: int) -> Perm:
    """Exchange the entries at positions k and l (1-based), k < l.

    This is the right action by the transposition (k l) on positions;
    applying the same swap twice restores the input.

    >>> apply_swap((1, 2, 3, 4), 1, 2)
    (2, 1, 3, 4)
    >>> apply_swap((1, 2, 3, 4), 1, 4)
    (4, 2, 3, 1)
    """
    n = len(p)
    if not (1 <= k < l <= n):
        raise ValueError(f"positions must satisfy 1 <= k < l <= {n}, got ({k}, {l})")
    out = list(p)
    out[k - 1], out[l - 1] = out[l - 1], out[k - 1]
    return tuple(out)


def rank_perm(p: Sequence[int]) -> int:
    """Lexicographic rank of ``p`` among all permutations of its symbols.

    >>> rank_perm((1, 2, 3, 4))
    0
    >>> rank_perm((4, 3, 2, 1))
    23
    """
    q = validate_perm(p)
    n = len(q)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if q[j] < q[i])
        r = r * (n - i) + smaller
    return r


def unrank_perm(index: int, n: int) -> Perm:
    """Inverse of :func:`rank_perm` for arity ``n``.

    >>> unrank_perm(0, 4)
    (1, 2, 3, 4)
    >>> unrank_perm(23, 4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError("arity must be >= 1")
    total = math.factorial(n)
    if not 0 <= index < total:
        raise ValueError(f"rank {index} out of range [0, {total})")
    digits = []
    rest = index
    for base in range(1, n + 1):
        digits.append(rest % base)
        rest //= base
    digits.reverse()
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in digits)


def parity(p: Sequence[int]) -> int:
    """Sign of the permutation as 0 (even) or 1 (odd).

    Flips under every position swap, so it 2-colors any Cayley graph
    generated by transpositions.

    >>> parity((1, 2, 3, 4))
    0
    >>> parity((2, 1, 3, 4))
    1
    """
    q = validate_perm(p)
    n = len(q)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if q[i] > q[j])
    return inv & 1


def perm_string(p: Sequence[int]) -> str:
    """Render as a separator-free digit string, e.g. (4,2,3,1) -> "4231"."""
    if len(p) > MAX_STRING_ARITY:
        raise CapacityError(f"digit-string form is defined for n <= {MAX_STRING_ARITY}")
    return "".join(str(s) for s in p)


def parse_perm_string(text: str) -> Perm:
    """Inverse of :func:`perm_string`.

    >>> parse_perm_string("4231")
    (4, 2, 3, 1)
    """
    if not text.isdigit():
        raise ValueError(f"not a permutation string: {text!r}")
    return validate_perm(tuple(int(ch) for ch in text))
