"""Schubert varieties over prime fields and their evaluation codes.

Points of the Grassmannian G(l, m) are enumerated as echelon basis matrices
in which each row is normalized on its *rightmost* nonzero entry (the pivot);
with the standard flag C_i = span{e_1..e_{a_i}} a subspace lies in the
Schubert variety of a = (a_1 < ... < a_l) exactly when its pivot tuple is
componentwise <= a, which coincides with the vanishing of every Pluecker
coordinate outside the lower Bruhat interval of a.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .validation import check_matrix, check_prime, guard_enumeration

IndexTuple = tuple[int, ...]


def index_tuples(l: int, m: int) -> tuple[IndexTuple, ...]:
    """All strictly increasing l-tuples in [1, m], in lexicographic order."""
    if not 1 <= l <= m:
        raise ValueError(f"need 1 <= l <= m, got l={l}, m={m}")
    return tuple(itertools.combinations(range(1, m + 1), l))


def bruhat_leq(beta: IndexTuple, alpha: IndexTuple) -> bool:
    """Componentwise order: beta <= alpha iff beta_i <= alpha_i for all i."""
    if len(beta) != len(alpha):
        raise ValueError(f"tuple length mismatch: {beta} vs {alpha}")
    return all(b <= a for b, a in zip(beta, alpha))


def gaussian_binomial(m: int, l: int, q: int) -> int:
    """Number of l-dimensional subspaces of GF(q)^m (exact integer).

    Evaluates the product formula prod(q^m - q^i) / prod(q^l - q^i); Python
    integers are unbounded so no overflow is possible.
    """
    if not 1 <= l <= m:
        raise ValueError(f"need 1 <= l <= m, got l={l}, m={m}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    num = den = 1
    for i in range(l):
        num *= q**m - q**i
        den *= q**l - q**i
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class SchubertSpec:
    """Defining data (l, m, q, alpha) of a Schubert code over GF(q)."""

    l: int
    m: int
    q: int
    alpha: IndexTuple

    def __post_init__(self):
        check_prime(self.q)
        if not 1 <= self.l <= self.m:
            raise ValueError(f"need 1 <= l <= m, got l={self.l}, m={self.m}")
        a = tuple(int(x) for x in self.alpha)
        object.__setattr__(self, "alpha", a)
        if len(a) != self.l:
            raise ValueError(f"alpha must have length l={self.l}, got {a}")
        if any(x < 1 or x > self.m for x in a) or any(
            a[i] >= a[i + 1] for i in range(len(a) - 1)
        ):
            raise ValueError(f"alpha must be strictly increasing in [1, {self.m}], got {a}")

    @classmethod
    def grassmann(cls, l: int, m: int, q: int) -> "SchubertSpec":
        """The alpha-maximal spec, whose variety is the whole Grassmannian."""
        return cls(l=l, m=m, q=q, alpha=tuple(range(m - l + 1, m + 1)))


@dataclass(frozen=True)
class SchubertParams:
    """Code parameters: length n, dimension k, and d = q^delta."""

    n: int
    k: int
    delta: int
    d: int


def schubert_params(spec: SchubertSpec, limit: int | None = None) -> SchubertParams:
    """Exact parameters from the Schubert cell decomposition.

    n is the total cell count sum_{pivots <= alpha} q^(sum(pivot_i - i)),
    k counts the index tuples below alpha, and d = q^delta with
    delta = sum(alpha_i - i).
    """
    n = 0
    for piv in _admissible_pivots(spec):
        n += spec.q ** sum(p - i - 1 for i, p in enumerate(piv))
    k = sum(1 for t in index_tuples(spec.l, spec.m) if bruhat_leq(t, spec.alpha))
    delta = sum(a - i - 1 for i, a in enumerate(spec.alpha))
    return SchubertParams(n=n, k=k, delta=delta, d=spec.q**delta)


def _admissible_pivots(spec: SchubertSpec) -> Iterator[IndexTuple]:
    for piv in index_tuples(spec.l, spec.m):
        if bruhat_leq(piv, spec.alpha):
            yield piv


def enumerate_cell_bases(spec: SchubertSpec, limit: int | None = None) -> Iterator[np.ndarray]:
    """Yield one echelon basis matrix per point of the Schubert variety.

    Order: pivot tuples lexicographically ascending, then the free entries
    read row-major as a base-q integer, ascending (first free cell = most
    significant digit).
    """
    guard_enumeration(schubert_params(spec).n, "point enumeration", limit)
    l, m, q = spec.l, spec.m, spec.q
    for piv in _admissible_pivots(spec):
        free = [
            (i, c) for i in range(l) for c in range(1, piv[i]) if c not in piv
        ]
        base = np.zeros((l, m), dtype=np.int64)
        for i, p in enumerate(piv):
            base[i, p - 1] = 1
        for v in range(q ** len(free)):
            A = base.copy()
            rest = v
            for (i, c) in reversed(free):
                A[i, c - 1] = rest % q
                rest //= q
            yield A


def _det_mod(M: np.ndarray, q: int) -> int:
    """Determinant of a square residue matrix mod q (cofactors up to 4x4)."""
    size = M.shape[0]
    if size == 1:
        return int(M[0, 0]) % q
    if size <= 4:
        det = 0
        sign = 1
        rest = np.arange(1, size)
        for j in range(size):
            cols = [c for c in range(size) if c != j]
            det += sign * int(M[0, j]) * _det_mod(M[np.ix_(rest, cols)], q)
            sign = -sign
        return det % q
    # fraction-free style elimination over the prime field
    A = M.astype(np.int64) % q
    det = 1
    for c in range(size):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        pr = c + nz[0]
        if pr != c:
            A[[c, pr]] = A[[pr, c]]
            det = -det
        det = det * int(A[c, c]) % q
        inv = pow(int(A[c, c]), -1, q)
        for i in range(c + 1, size):
            if A[i, c]:
                A[i] = (A[i] - A[i, c] * inv % q * A[c]) % q
    return det % q


def plucker(basis: np.ndarray, q: int) -> tuple[int, ...]:
    """Pluecker coordinates of the row space of an l x m basis matrix.

    All l x l minor determinants in lexicographic tuple order, scaled so the
    first nonzero coordinate is 1.  Raises when the rows are dependent.
    """
    B = check_matrix(basis, q)
    l, m = B.shape
    coords = [
        _det_mod(B[:, [c - 1 for c in cols]], q)
        for cols in index_tuples(l, m)
    ]
    first = next((c for c in coords if c), None)
    if first is None:
        raise ValueError("not a basis")
    inv = pow(first, -1, q)
    return tuple(c * inv % q for c in coords)


def enumerate_schubert_points(
    spec: SchubertSpec, limit: int | None = None
) -> list[tuple[int, ...]]:
    """Pluecker vectors of all points, in enumeration order, no duplicates.

    Every emitted vector vanishes outside the lower Bruhat interval of alpha;
    this is asserted for each point.
    """
    tuples = index_tuples(spec.l, spec.m)
    outside = [i for i, t in enumerate(tuples) if not bruhat_leq(t, spec.alpha)]
    points = []
    for A in enumerate_cell_bases(spec, limit):
        vec = plucker(A, spec.q)
        if any(vec[i] for i in outside):
            raise AssertionError("construction violated variety invariants: "
                                 "nonzero coordinate outside alpha")
        points.append(vec)
    return points


def schubert_points_by_plucker_filter(
    spec: SchubertSpec, limit: int | None = None
) -> list[tuple[int, ...]]:
    """Independent route: filter the full Grassmannian by coordinate vanishing."""
    tuples = index_tuples(spec.l, spec.m)
    outside = [i for i, t in enumerate(tuples) if not bruhat_leq(t, spec.alpha)]
    full = SchubertSpec.grassmann(spec.l, spec.m, spec.q)
    return [
        vec
        for A in enumerate_cell_bases(full, limit)
        for vec in (plucker(A, spec.q),)
        if not any(vec[i] for i in outside)
    ]


def generator_matrix(spec: SchubertSpec, limit: int | None = None) -> np.ndarray:
    """k x n generator of the Schubert code.

    Row r evaluates the r-th surviving coordinate function (tuples <= alpha in
    lexicographic order) across the points in enumeration order.  Full rank
    and the absence of zero columns are asserted.
    """
    from .linalg import rank  # local import keeps module dependencies one-way

    tuples = index_tuples(spec.l, spec.m)
    keep = [i for i, t in enumerate(tuples) if bruhat_leq(t, spec.alpha)]
    points = enumerate_schubert_points(spec, limit)
    G = np.array([[pt[i] for pt in points] for i in keep], dtype=np.int64)
    if not all(pt_col.any() for pt_col in G.T):
        raise AssertionError("construction violated code invariants: zero column")
    if rank(G, spec.q) != len(keep):
        raise AssertionError("construction violated code invariants: rank defect")
    return G
