"""Binomial ideals of binary codes and their reduced degrevlex Groebner bases.

The ideal of an [n, k] binary code is generated by X^w - 1 for the generator
rows w together with the field relations x_i^2 - 1.  Everything in sight is a
difference of two monomials over GF(2), so polynomials never grow past two
terms and a basis element is just a (lead, trail) pair.

Two engines produce the reduced basis and must agree element-for-element:

* :func:`buchberger` - a reference pair-queue run (normal selection, coprime
  criterion, final interreduction).  Monomials are carried as squarefree
  bitmasks; reduction by the field relations is folded into S-polynomial
  formation, which is just a fixed choice of reduction order.
* :func:`coset_engine` - the quotient algebra has one standard monomial per
  coset of the code, namely the degrevlex-minimal coset member; elements are
  read off as u - leader(coset(u)) over the minimal non-standard monomials u.

The exponent-tuple operations (:func:`spoly`, :func:`reduce_poly`) are the
slow, auditable counterparts used to cross-check the mask arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Literal, NamedTuple

import numpy as np

from .linalg import LinearCode, build_coset_leader_table
from .validation import EnumerationLimitError, check_word_mask
from .words import degrevlex_key, support, weight

Monomial = tuple[int, ...]
BinomialPair = tuple[Monomial, Monomial]

ORDER_ID = "degrevlex"


# ---------------------------------------------------------------------------
# order kernel
# ---------------------------------------------------------------------------

def degrevlex_key_exponents(exps: Monomial) -> tuple:
    """Ascending sort key for general exponent vectors under degrevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def degrevlex_compare(a: Monomial, b: Monomial) -> int:
    """Total degrevlex order on exponent vectors: -1 (a<b), 0, or +1.

    Higher total degree is greater; ties go to the monomial with the smaller
    exponent at the highest-indexed variable where they differ.
    """
    if len(a) != len(b):
        raise ValueError(f"variable count mismatch: {len(a)} vs {len(b)}")
    ka, kb = degrevlex_key_exponents(a), degrevlex_key_exponents(b)
    return (ka > kb) - (ka < kb)


def exponents_from_mask(mask: int, n: int) -> Monomial:
    return tuple((mask >> i) & 1 for i in range(n))


# ---------------------------------------------------------------------------
# exponent-tuple reference operations
# ---------------------------------------------------------------------------

def _mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _div(a: Monomial, b: Monomial) -> Monomial | None:
    out = tuple(x - y for x, y in zip(a, b))
    return None if any(e < 0 for e in out) else out


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _orient(a: Monomial, b: Monomial) -> BinomialPair:
    return (a, b) if degrevlex_compare(a, b) > 0 else (b, a)


def spoly(f: BinomialPair, g: BinomialPair) -> BinomialPair | None:
    """S-polynomial of two binomials over GF(2), or None when it cancels.

    S(f, g) = (lcm/lead_f) f - (lcm/lead_g) g; the lcm terms match, so the
    result is again a binomial (lead first), or zero.
    """
    (lf, tf), (lg, tg) = _orient(*f), _orient(*g)
    lcm = _lcm(lf, lg)
    a = _mul(_div(lcm, lf), tf)
    b = _mul(_div(lcm, lg), tg)
    if a == b:
        return None
    return _orient(a, b)


def reduce_poly(
    terms: Iterable[Monomial], basis: Iterable[BinomialPair]
) -> tuple[Monomial, ...]:
    """Remainder of a GF(2) term set under division by binomials.

    Repeatedly rewrites the greatest divisible term t as t * trail / lead
    (equal terms cancel) until nothing is divisible; the degrevlex order is
    well-founded so this terminates.  Returns terms sorted descending.
    """
    basis = [_orient(*b) for b in basis]
    poly: set[Monomial] = set()
    for t in terms:
        poly.symmetric_difference_update({tuple(t)})
    while True:
        for t in sorted(poly, key=degrevlex_key_exponents, reverse=True):
            hit = next(
                ((lead, trail) for lead, trail in basis if _div(t, lead) is not None),
                None,
            )
            if hit is not None:
                lead, trail = hit
                poly.symmetric_difference_update({t, _mul(_div(t, lead), trail)})
                break
        else:
            return tuple(sorted(poly, key=degrevlex_key_exponents, reverse=True))


# ---------------------------------------------------------------------------
# basis element and reduced-basis container
# ---------------------------------------------------------------------------

class Binomial(NamedTuple):
    """A lead-trail pair with GF(2) coefficients, so LT = LM = lead.

    Monomials are squarefree masks, except that a ``field`` element's lead
    mask names the squared variable: ``Binomial(1 << (i-1), 0, "field")`` is
    x_i^2 - 1.  A trail of 0 is the monomial 1.
    """

    lead: int
    trail: int
    kind: Literal["code", "field"] = "code"

    def exponent_pair(self, n: int) -> BinomialPair:
        if self.kind == "field":
            v = self.lead.bit_length()
            exps = tuple(2 if i == v - 1 else 0 for i in range(n))
            return exps, (0,) * n
        return exponents_from_mask(self.lead, n), exponents_from_mask(self.trail, n)

    def lead_degree(self) -> int:
        return 2 if self.kind == "field" else weight(self.lead)


def field_relation(i: int) -> Binomial:
    """The relation x_i^2 - 1 (1-based variable index)."""
    return Binomial(lead=1 << (i - 1), trail=0, kind="field")


def _element_sort_key(b: Binomial, n: int) -> tuple:
    return degrevlex_key_exponents(b.exponent_pair(n)[0])


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    """The unique reduced degrevlex Groebner basis of a binary-code ideal.

    Elements are sorted ascending by lead and always contain exactly the n
    field relations plus squarefree code binomials whose trails are standard
    monomials.
    """

    n: int
    elements: tuple[Binomial, ...]
    order_id: str = field(default=ORDER_ID)

    @cached_property
    def code_binomials(self) -> tuple[Binomial, ...]:
        return tuple(b for b in self.elements if b.kind == "code")

    @cached_property
    def _code_leads(self) -> np.ndarray:
        return np.array([b.lead for b in self.code_binomials], dtype=np.uint64)

    @cached_property
    def _code_trails(self) -> np.ndarray:
        return np.array([b.trail for b in self.code_binomials], dtype=np.uint64)

    def as_pairs(self) -> list[BinomialPair]:
        """All elements as exponent-tuple pairs (reference representation)."""
        return [b.exponent_pair(self.n) for b in self.elements]


def _validated_basis(n: int, elements: Iterable[Binomial]) -> ReducedGroebnerBasis:
    """Order, then machine-check the reduced-basis invariants."""
    elems = sorted(elements, key=lambda b: _element_sort_key(b, n))
    fields = [b for b in elems if b.kind == "field"]
    codes = [b for b in elems if b.kind == "code"]
    if sorted(b.lead for b in fields) != [1 << i for i in range(n)] or any(
        b.trail for b in fields
    ):
        raise ValueError(f"basis must contain exactly the {n} field relations")
    leads = np.array([b.lead for b in codes], dtype=np.uint64)
    trails = np.array([b.trail for b in codes], dtype=np.uint64)
    for b in codes:
        check_word_mask(b.lead, n)
        check_word_mask(b.trail, n)
        if weight(b.lead) < 2:
            raise ValueError(f"degenerate code: single-variable lead x{support(b.lead)}")
        if degrevlex_key(b.lead) <= degrevlex_key(b.trail):
            raise ValueError(f"element not oriented lead > trail: {b}")
        L = np.uint64(b.lead)
        if int(((leads & L) == L).sum()) != 1:
            raise ValueError(f"lead {b.lead:#x} divides another lead: basis not reduced")
        if bool(((trails & L) == L).any()):
            raise ValueError(f"lead {b.lead:#x} divides a trail: basis not reduced")
    return ReducedGroebnerBasis(n=n, elements=tuple(elems))


# ---------------------------------------------------------------------------
# ideal generators
# ---------------------------------------------------------------------------

def ideal_generators(code: LinearCode) -> tuple[Binomial, ...]:
    """Eq-style generating set: X^w - 1 per generator row, plus x_i^2 - 1."""
    rows = code.row_masks()
    if any(r == 0 for r in rows):
        raise ValueError("degenerate generator row")
    gens = [Binomial(lead=r, trail=0, kind="code") for r in rows]
    gens += [field_relation(i) for i in range(1, code.n + 1)]
    return tuple(gens)


# ---------------------------------------------------------------------------
# Buchberger reference engine (mask arithmetic, eager field reduction)
# ---------------------------------------------------------------------------

def _squash_key(mask: int, square: int, n: int) -> tuple:
    """Degrevlex key of mask * x_square^2 (square=0 for a plain mask)."""
    exps = [(mask >> i) & 1 for i in range(n)]
    if square:
        exps[square.bit_length() - 1] += 2
    return degrevlex_key_exponents(tuple(exps))


def buchberger(
    generators: Iterable[Binomial], max_vars: int = 12
) -> ReducedGroebnerBasis:
    """Pair-queue Buchberger run followed by interreduction.

    Pairs are processed by ascending lcm under degrevlex (normal selection)
    and pairs with coprime leads are dropped (product criterion); nothing
    else is pruned, keeping the run auditable.  The unique reduced basis of
    the generated ideal is returned.
    """
    gens = list(generators)
    field_vars = sorted(b.lead.bit_length() for b in gens if b.kind == "field")
    n = len(field_vars)
    used = max(
        ((b.lead | b.trail).bit_length() for b in gens if b.kind == "code"), default=0
    )
    if (
        field_vars != list(range(1, n + 1))
        or used > n
        or any(b.trail for b in gens if b.kind == "field")
    ):
        raise ValueError("generators must include the field relation of every variable")
    if n > max_vars:
        raise EnumerationLimitError(
            f"buchberger guard: n={n} exceeds max_vars={max_vars}; "
            "use the coset engine for larger codes"
        )
    code_gens = [(b.lead, b.trail) for b in gens if b.kind == "code"]
    for pair in code_gens:
        check_word_mask(pair[0], n)
        check_word_mask(pair[1], n)

    basis: list[tuple[int, int]] = []
    pairs: list[tuple] = []  # (lcm degrevlex key, seq, i, j) with j=-v for field pairs
    seq = 0

    def reduce_pair(a: int, b: int) -> tuple[int, int] | None:
        while True:
            if a == b:
                return None
            if degrevlex_key(a) < degrevlex_key(b):
                a, b = b, a
            hit = next((e for e in basis if e[0] & a == e[0]), None)
            if hit is not None:
                a ^= hit[0] ^ hit[1]
                continue
            hit = next((e for e in basis if e[0] & b == e[0]), None)
            if hit is not None:
                b ^= hit[0] ^ hit[1]
                continue
            return a, b

    def push_pairs(idx: int) -> None:
        nonlocal seq
        lead = basis[idx][0]
        for j in range(idx):
            other = basis[j][0]
            if lead & other:  # coprime-lead pairs are skipped outright
                lcm = lead | other
                heapq.heappush(pairs, (_squash_key(lcm, 0, n), seq, j, idx))
                seq += 1
        rest = lead
        while rest:
            bit = rest & -rest
            # lcm with x_v^2 - 1 raises v's exponent from 1 to 2
            heapq.heappush(
                pairs, (_squash_key(lead ^ bit, bit, n), seq, idx, -bit.bit_length())
            )
            seq += 1
            rest ^= bit

    for lead, trail in code_gens:
        reduced = reduce_pair(lead, trail)
        if reduced is not None:
            basis.append(reduced)
            push_pairs(len(basis) - 1)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if j < 0:  # pair with the field relation of variable -j
            lead, trail = basis[i]
            bit = 1 << (-j - 1)
            if not lead & bit:
                continue
            s = reduce_pair(lead ^ bit, trail ^ bit)
        else:
            li, ti = basis[i]
            lj, tj = basis[j]
            lcm = li | lj
            s = reduce_pair(lcm ^ li ^ ti, lcm ^ lj ^ tj)
        if s is not None:
            basis.append(s)
            push_pairs(len(basis) - 1)

    return _interreduce(basis, n)


def _interreduce(basis: list[tuple[int, int]], n: int) -> ReducedGroebnerBasis:
    """Minimalize leads, reduce trails to normal form, sort, validate."""
    minimal: dict[int, int] = {}
    leads = {lead for lead, _ in basis}
    for lead, trail in basis:
        strictly_divisible = any(
            other != lead and other & lead == other for other in leads
        )
        if not strictly_divisible and lead not in minimal:
            minimal[lead] = trail
    for lead in minimal:
        if weight(lead) < 2:
            raise ValueError(
                f"degenerate code: x{lead.bit_length()} is not a standard monomial"
            )
    reduced: dict[int, int] = {}
    for lead in sorted(minimal, key=degrevlex_key):
        trail = minimal[lead]
        changed = True
        while changed:
            changed = False
            for other, other_trail in minimal.items():
                if other != lead and other & trail == other:
                    trail ^= other ^ other_trail
                    changed = True
                    break
        reduced[lead] = trail
    elements = [Binomial(lead, trail, "code") for lead, trail in reduced.items()]
    elements += [field_relation(i) for i in range(1, n + 1)]
    return _validated_basis(n, elements)


# ---------------------------------------------------------------------------
# coset-leader engine
# ---------------------------------------------------------------------------

def coset_engine(code: LinearCode, limit: int | None = None) -> ReducedGroebnerBasis:
    """Reduced basis via the coset-leader table.

    Standard monomials are the supports of the degrevlex coset leaders; the
    code binomials are X^u - X^leader(coset(u)) over the minimal non-standard
    monomials u, found by extending standard monomials one variable at a time
    (standard monomials are closed under divisibility).
    """
    if code.p != 2:
        raise ValueError("binary only")
    n = code.n
    table = build_coset_leader_table(code, limit)
    leaders = table.leaders.astype(np.int64)
    standard = np.zeros(1 << n, dtype=bool)
    standard[leaders] = True
    for i in range(n):
        if not standard[1 << i]:
            raise ValueError(f"degenerate code: x{i + 1} is not a standard monomial")

    extended = [
        (leaders[(leaders >> i) & 1 == 0] | (1 << i)) for i in range(n)
    ]
    candidates = np.unique(np.concatenate(extended))
    keep = ~standard[candidates]
    for j in range(n):
        bit = 1 << j
        has = (candidates & bit) != 0
        keep &= ~has | standard[candidates ^ bit]
    minimal_leads = candidates[keep]

    synd = np.zeros(minimal_leads.shape, dtype=np.int64)
    for i, col in enumerate(code.column_syndromes):
        synd[(minimal_leads >> i) & 1 == 1] ^= col
    trails = leaders[synd]

    elements = [
        Binomial(int(lead), int(trail), "code")
        for lead, trail in zip(minimal_leads, trails)
    ]
    elements += [field_relation(i) for i in range(1, n + 1)]
    return _validated_basis(n, elements)


# ---------------------------------------------------------------------------
# normal forms, capability, Groebner test
# ---------------------------------------------------------------------------

def normal_form(
    monomial: int,
    gb: ReducedGroebnerBasis,
    selector: Callable[[np.ndarray], int] | None = None,
) -> int:
    """Canonical form of a squarefree monomial: its coset's standard monomial.

    Divides by basis elements until nothing applies; each rewrite replaces the
    lead part by the trail and cancels squares via the field relations, i.e.
    m -> m XOR lead XOR trail.  The result is selection-independent;
    ``selector`` picks among applicable divisors (index array -> position)
    and exists so tests can randomize the reduction path.
    """
    m = check_word_mask(monomial, gb.n)
    leads, trails = gb._code_leads, gb._code_trails
    if not leads.size:
        return m
    while True:
        mm = np.uint64(m)
        hits = np.flatnonzero((leads & mm) == leads)
        if hits.size == 0:
            return m
        pick = hits[0] if selector is None else hits[selector(hits)]
        m ^= int(leads[pick]) ^ int(trails[pick])


def capability(gb: ReducedGroebnerBasis) -> int:
    """Error-correcting capability: min lead degree over code binomials, - 1."""
    if not gb.code_binomials:
        raise ValueError("capability undefined: basis has no code binomials")
    return min(weight(b.lead) for b in gb.code_binomials) - 1


def is_groebner(elements: Iterable[Binomial], n: int | None = None) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero.

    Field-relation pairs with coprime partners are settled analytically; all
    code-code pairs (coprime or not) are reduced explicitly.  When the field
    relations do not cover every variable in play, the exponent-tuple route
    is used instead of mask arithmetic.
    """
    elems = list(elements)
    if n is None:
        n = max(
            (b.lead.bit_length() for b in elems), default=0
        )
        n = max(n, max((b.trail.bit_length() for b in elems), default=0))
    field_vars = {b.lead.bit_length() for b in elems if b.kind == "field"}
    used = 0
    for b in elems:
        if b.kind == "code":
            used |= b.lead | b.trail
    if not all(((used >> (v - 1)) & 1) == 0 or v in field_vars for v in range(1, n + 1)):
        pairs = [b.exponent_pair(n) for b in elems]
        return _is_groebner_exponents(pairs)

    codes = [(b.lead, b.trail) for b in elems if b.kind == "code"]
    leads = np.array([c[0] for c in codes], dtype=np.uint64)
    trails = np.array([c[1] for c in codes], dtype=np.uint64)

    def reduces_to_zero(a: int, b: int) -> bool:
        while True:
            if a == b:
                return True
            for t in (a, b):
                tt = np.uint64(t)
                hits = np.flatnonzero((leads & tt) == leads)
                if hits.size:
                    rewritten = t ^ int(leads[hits[0]]) ^ int(trails[hits[0]])
                    if t == a:
                        a = rewritten
                    else:
                        b = rewritten
                    break
            else:
                return False

    for i, (li, ti) in enumerate(codes):
        for lj, tj in codes[:i]:
            lcm = li | lj
            if not reduces_to_zero(lcm ^ li ^ ti, lcm ^ lj ^ tj):
                return False
        rest = li
        while rest:  # pairs with x_v^2 - 1 for v in the lead
            bit = rest & -rest
            if not reduces_to_zero(li ^ bit, ti ^ bit):
                return False
            rest ^= bit
    return True


def _is_groebner_exponents(pairs: list[BinomialPair]) -> bool:
    for i, f in enumerate(pairs):
        for g in pairs[:i]:
            s = spoly(f, g)
            if s is not None and reduce_poly(s, pairs):
                return False
    return True
