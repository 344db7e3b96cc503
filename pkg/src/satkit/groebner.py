"""Buchberger's algorithm, normal forms and reduced Groebner bases.

The engine works on primitive integer-coefficient dictionaries (fraction-free
reduction, content removed after every step) and converts back to monic
rational polynomials at the boundary.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from satkit.poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    RingMismatchError,
    divides,
    mono_lcm,
)

log = logging.getLogger(__name__)

IntPoly = dict  # Monomial -> int


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple[Polynomial, ...]
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.elements]

    def is_unit(self) -> bool:
        """True when the ideal is the whole ring."""
        return any(g.is_constant() for g in self.elements)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_standard(self, m: Monomial) -> bool:
        return not any(divides(lm, m) for lm in self.leading_monomials)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.elements) + "]"


# integer-dictionary kernel


def _to_int(f: Polynomial) -> tuple[IntPoly, Fraction]:
    """Return ``(p, s)`` with ``p`` primitive integral and ``p == s * f``."""
    coeffs = f.coeffs
    if not coeffs:
        return {}, Fraction(1)
    den = lcm(*(c.denominator for c in coeffs.values()))
    p = {m: c.numerator * (den // c.denominator) for m, c in coeffs.items()}
    cont = gcd(*p.values())
    if cont != 1:
        p = {m: c // cont for m, c in p.items()}
    return p, Fraction(den, cont)


def _primitive(p: IntPoly) -> IntPoly:
    if not p:
        return p
    cont = gcd(*p.values())
    if cont == 1:
        return p
    return {m: c // cont for m, c in p.items()}


def _to_poly(ring: PolyRing, p: IntPoly, monic: bool = True) -> Polynomial:
    if not p or not monic:
        return Polynomial(ring, p)
    lc = p[max(p, key=ring.order.sort_key)]
    return Polynomial(ring, {m: Fraction(c, lc) for m, c in p.items()})


class _Basis:
    """Working basis: parallel lists of leading monomials, leading coefficients and polys."""

    def __init__(self, key):
        self.key = key
        self.lms: list[Monomial] = []
        self.lcs: list[int] = []
        self.polys: list[IntPoly] = []

    def add(self, p: IntPoly) -> int:
        lm = max(p, key=self.key)
        if p[lm] < 0:
            p = {m: -c for m, c in p.items()}
        self.lms.append(lm)
        self.lcs.append(p[lm])
        self.polys.append(p)
        return len(self.polys) - 1


def _reduce(f: IntPoly, basis: _Basis, skip: int = -1) -> tuple[IntPoly, Fraction]:
    """Full reduction of ``f`` against ``basis``.

    Returns ``(r, s)`` with ``r == s * NF(f)``; the divisor is always the
    lowest-index basis element whose leading monomial divides the current term.
    """
    key = basis.key
    lms, lcs, polys = basis.lms, basis.lcs, basis.polys
    f = dict(f)
    rem: IntPoly = {}
    scale = Fraction(1)
    # max-heap of candidate monomials; stale entries are skipped lazily
    heap = [(_Neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = f.get(m)
        if not c:
            continue
        # duplicates of m may remain in the heap; they are harmless after deletion
        for i, lm in enumerate(lms):
            if i != skip and all(a <= b for a, b in zip(lm, m)):
                break
        else:
            rem[m] = c
            del f[m]
            continue
        g, lc = polys[i], lcs[i]
        q = tuple(a - b for a, b in zip(m, lm))
        d = gcd(c, lc)
        a, b = lc // d, c // d
        if a != 1:
            for k in f:
                f[k] *= a
            for k in rem:
                rem[k] *= a
            scale *= a
        for k, v in g.items():
            mk = tuple(x + y for x, y in zip(q, k))
            nv = f.get(mk, 0) - b * v
            if nv:
                if mk not in f:
                    heapq.heappush(heap, (_Neg(key(mk)), mk))
                f[mk] = nv
            else:
                f.pop(mk, None)
        if a != 1:
            cont = gcd(*f.values(), *rem.values())
            if cont > 1:
                for k in f:
                    f[k] //= cont
                for k in rem:
                    rem[k] //= cont
                scale /= cont
    return rem, scale


class _Neg:
    """Inverts comparison so ``heapq`` yields the largest key first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def _spoly(basis: _Basis, i: int, j: int) -> IntPoly:
    lmi, lmj = basis.lms[i], basis.lms[j]
    L = mono_lcm(lmi, lmj)
    ci, cj = basis.lcs[i], basis.lcs[j]
    d = gcd(ci, cj)
    ai, aj = cj // d, ci // d
    qi = tuple(a - b for a, b in zip(L, lmi))
    qj = tuple(a - b for a, b in zip(L, lmj))
    acc: IntPoly = {}
    for k, v in basis.polys[i].items():
        mk = tuple(x + y for x, y in zip(qi, k))
        acc[mk] = acc.get(mk, 0) + ai * v
    for k, v in basis.polys[j].items():
        mk = tuple(x + y for x, y in zip(qj, k))
        acc[mk] = acc.get(mk, 0) - aj * v
    return _primitive({m: c for m, c in acc.items() if c})


def _check_ring(polys: Sequence[Polynomial]) -> PolyRing | None:
    if not polys:
        return None
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise RingMismatchError(f"generators live in different rings: {ring} vs {p.ring}")
    return ring


def _complete(gens: Iterable[IntPoly], key, strategy: str, ring_desc: str = "") -> _Basis:
    basis = _Basis(key)
    sugar: list[int] = []
    pending: set[tuple[int, int]] = set()
    queue: list = []

    def push_pairs(new: int):
        lmn = basis.lms[new]
        for i in range(new):
            lmi = basis.lms[i]
            L = mono_lcm(lmi, lmn)
            if strategy == "sugar":
                s = max(sugar[i] + sum(L) - sum(lmi), sugar[new] + sum(L) - sum(lmn))
                prio = (s, key(L), i, new)
            else:
                prio = (sum(L), key(L), i, new)
            heapq.heappush(queue, (prio, i, new, L))
            pending.add((i, new))

    def insert(p: IntPoly, s: int):
        idx = basis.add(p)
        sugar.append(s)
        push_pairs(idx)

    for g in gens:
        if not g:
            continue
        r, _ = _reduce(g, basis)
        if r:
            insert(_primitive(r), max(sum(m) for m in g))

    reductions = 0
    while queue:
        (prio, i, j, L) = heapq.heappop(queue)
        pending.discard((i, j))
        lmi, lmj = basis.lms[i], basis.lms[j]
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        # chain criterion
        if any(
            k != i and k != j
            and divides(basis.lms[k], L)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis.lms))
        ):
            continue
        s = _spoly(basis, i, j)
        if not s:
            continue
        r, _ = _reduce(s, basis)
        reductions += 1
        if r:
            insert(_primitive(r), prio[0])
            if all(v == 0 for v in basis.lms[-1]):
                break
    log.debug("buchberger %s: %d elements, %d reductions", ring_desc, len(basis.polys), reductions)
    return basis


def _minimal_reduced(basis: _Basis) -> list[IntPoly]:
    key = basis.key
    if any(all(v == 0 for v in lm) for lm in basis.lms):
        return [{tuple(0 for _ in basis.lms[0]): 1}]
    idx = sorted(range(len(basis.lms)), key=lambda i: (key(basis.lms[i]), i))
    keep: list[int] = []
    for i in idx:
        if not any(divides(basis.lms[k], basis.lms[i]) for k in keep):
            keep.append(i)
    minimal = _Basis(key)
    for i in keep:
        minimal.add(basis.polys[i])
    out = []
    for n, p in enumerate(minimal.polys):
        r, _ = _reduce(p, minimal, skip=n)
        out.append(_primitive(r))
    return out


def _finish(ring: PolyRing, polys: list[IntPoly], reduced: bool) -> GroebnerBasis:
    key = ring.order.sort_key
    elements = [_to_poly(ring, p) for p in polys]
    if reduced:
        elements.sort(key=lambda g: key(g.lm), reverse=True)
    return GroebnerBasis(ring, tuple(elements), reduced)


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    strategy: str = "normal",
    ring: PolyRing | None = None,
) -> GroebnerBasis:
    """Groebner basis (not inter-reduced) of the ideal generated by ``generators``.

    ``ring`` is only needed for an empty generator list.
    """
    if strategy not in ("normal", "sugar"):
        raise ValueError(f"unknown pair selection strategy {strategy!r}")
    base = _check_ring(generators) or ring
    if base is None:
        raise ValueError("empty generator list needs an explicit ring")
    if order is not None:
        base = base.with_order(order)
    key = base.order.sort_key
    ints = [_to_int(g)[0] for g in generators]
    basis = _complete(ints, key, strategy, str(base))
    return _finish(base, basis.polys, reduced=False)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``basis``.

    The input is completed first if its S-pairs do not all reduce to zero,
    so the result is the unique reduced basis for (ideal, order) either way.
    """
    if basis.reduced:
        return basis
    key = basis.ring.order.sort_key
    ints = [_to_int(g)[0] for g in basis.elements]
    work = _Basis(key)
    for p in ints:
        if p:
            work.add(p)
    if not _is_groebner(work):
        work = _complete(ints, key, "normal", str(basis.ring))
    return _finish(basis.ring, _minimal_reduced(work), reduced=True)


def groebner(
    generators: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    strategy: str = "normal",
    ring: PolyRing | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis in one call."""
    if strategy not in ("normal", "sugar"):
        raise ValueError(f"unknown pair selection strategy {strategy!r}")
    base = _check_ring(generators) or ring
    if base is None:
        raise ValueError("empty generator list needs an explicit ring")
    if order is not None:
        base = base.with_order(order)
    key = base.order.sort_key
    work = _complete((_to_int(g)[0] for g in generators), key, strategy, str(base))
    return _finish(base, _minimal_reduced(work), reduced=True)


def _is_groebner(basis: _Basis) -> bool:
    n = len(basis.polys)
    for i in range(n):
        for j in range(i + 1, n):
            s = _spoly(basis, i, j)
            if s and _reduce(s, basis)[0]:
                return False
    return True


def is_groebner(basis: GroebnerBasis) -> bool:
    """Every S-polynomial of the elements reduces to zero."""
    work = _Basis(basis.ring.order.sort_key)
    for g in basis.elements:
        if g:
            work.add(_to_int(g)[0])
    return _is_groebner(work)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on full division by ``basis`` (exact, not rescaled)."""
    if f.ring.variables != basis.ring.variables:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {basis.ring}")
    ring = basis.ring
    if not f:
        return ring.zero()
    p, s0 = _to_int(f)
    work = _Basis(ring.order.sort_key)
    for g in basis.elements:
        if g:
            work.add(_to_int(g)[0])
    r, s = _reduce(p, work)
    total = s * s0
    return Polynomial(ring, {m: Fraction(c) / total for m, c in r.items()})


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/lt(f))*f - (L/lt(g))*g`` with ``L = lcm(lm(f), lm(g))``."""
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    L = mono_lcm(f.lm, g.lm)
    qf = tuple(a - b for a, b in zip(L, f.lm))
    qg = tuple(a - b for a, b in zip(L, g.lm))
    return f.mul_monomial(qf, 1 / f.lc) - g.mul_monomial(qg, 1 / g.lc)
