"""Ideal membership, radical membership, elimination and kernels."""

from __future__ import annotations

import threading
from typing import TYPE_CHECKING, Iterable, Sequence

from satkit.groebner import GroebnerBasis, groebner, normal_form
from satkit.poly import MonomialOrder, Polynomial, PolyRing, RingMismatchError

if TYPE_CHECKING:
    from satkit.algebra import AffineAlgebra

RABINOWITSCH_VAR = "#rab"


class Ideal:
    """A finitely generated ideal; reduced Groebner bases are cached per order."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = tuple(generators)
        for g in gens:
            if g.ring.variables != ring.variables:
                raise RingMismatchError(f"generator {g} is not in {ring}")
        self.ring = ring
        self.generators = tuple(Polynomial(ring, g.coeffs) for g in gens if g)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner(self.generators, order, ring=self.ring.with_order(order))
            with self._lock:
                gb = self._gb.setdefault(order, gb)
        return gb

    def contains(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def reduce(self, f: Polynomial) -> Polynomial:
        """Canonical representative of ``f`` modulo the ideal."""
        _check(f, self)
        return Polynomial(self.ring, normal_form(f, self.groebner()).coeffs)

    def __add__(self, other: Ideal) -> Ideal:
        if other.ring.variables != self.ring.variables:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def issubset(self, other: Ideal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring.variables != other.ring.variables:
            return False
        return self.groebner().elements == other.groebner(self.ring.order).elements

    __hash__ = None

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")" if self.generators else "(0)"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _check(f: Polynomial, ideal: Ideal):
    if f.ring.variables != ideal.ring.variables:
        raise RingMismatchError(f"{f} is in {f.ring}, ideal is in {ideal.ring}")


def ideal_member(f: Polynomial, ideal: Ideal) -> bool:
    _check(f, ideal)
    return normal_form(f, ideal.groebner()).is_zero()


def radical_member(f: Polynomial, ideal: Ideal) -> bool:
    """Decide whether some power of ``f`` lies in ``ideal``.

    Adjoins a fresh last variable ``#rab`` and tests ``1 in I + (1 - #rab*f)``.
    """
    _check(f, ideal)
    if ideal_member(f, ideal):
        return True
    ring = PolyRing(ideal.ring.variables + (RABINOWITSCH_VAR,), MonomialOrder.grevlex())
    n = ideal.ring.nvars
    positions = list(range(n))
    gens = [g.embed(ring, positions) for g in ideal.generators]
    t = ring.var(RABINOWITSCH_VAR)
    gens.append(1 - t * f.embed(ring, positions))
    return groebner(gens, ring=ring).is_unit()


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """``ideal`` intersected with the polynomial ring in the variables not dropped.

    The result lives in the subring on the remaining variables (original
    relative order, grevlex unless the input ring is lex).
    """
    drop = list(dict.fromkeys(drop))
    names = ideal.ring.variables
    for v in drop:
        if v not in names:
            raise KeyError(f"unknown variable {v!r} in ring {ideal.ring}")
    keep = [v for v in names if v not in drop]
    out_order = MonomialOrder.lex() if ideal.ring.order.kind == "lex" else MonomialOrder.grevlex()
    sub = PolyRing(tuple(keep), out_order)
    if not drop:
        return Ideal(sub, [Polynomial(sub, g.coeffs) for g in ideal.generators])
    elim = PolyRing(tuple(drop) + tuple(keep), MonomialOrder.block(len(drop)))
    gb = groebner([g.rename_into(elim) for g in ideal.generators], ring=elim)
    k = len(drop)
    out = [
        Polynomial(sub, {m[k:]: c for m, c in g.coeffs.items()})
        for g in gb.elements
        if all(not any(m[:k]) for m in g.coeffs)
    ]
    return Ideal(sub, out)


def _graph_ring(
    source_vars: Sequence[str], target: AffineAlgebra
) -> tuple[PolyRing, list[int], list[Polynomial]]:
    """Ring ``#e0..#e(m-1), source_vars`` with relations of the target and embedding positions.

    Target variables become reserved ``#e`` names so they can never clash
    with source names; the order is a block order eliminating them.
    """
    tnames = tuple(f"#e{i}" for i in range(target.ambient.nvars))
    ring = PolyRing(tnames + tuple(source_vars), MonomialOrder.block(len(tnames)))
    positions = list(range(len(tnames)))
    rels = [r.embed(ring, positions) for r in target.relations.generators]
    return ring, positions, rels


def _graph_ideal(source_vars, images, target):
    if len(images) != len(source_vars):
        raise ValueError(f"arity mismatch: {len(source_vars)} variables, {len(images)} images")
    for img in images:
        if img.ring.variables != target.ambient.variables:
            raise RingMismatchError(f"image {img} is not in {target.ambient}")
    ring, positions, gens = _graph_ring(source_vars, target)
    for name, img in zip(source_vars, images):
        gens.append(ring.var(name) - img.embed(ring, positions))
    return ring, positions, gens


def graph_basis(
    source_vars: Sequence[str], images: Sequence[Polynomial], target: AffineAlgebra
) -> tuple[PolyRing, list[int], GroebnerBasis]:
    """Reduced basis of ``I_target + (u_i - image_i)`` under the target-eliminating block order."""
    ring, positions, gens = _graph_ideal(source_vars, images, target)
    return ring, positions, groebner(gens, ring=ring)


def kernel_of_morphism(
    source_vars: Sequence[str], images: Sequence[Polynomial], target: AffineAlgebra
) -> Ideal:
    """Kernel of ``QQ[source_vars] -> target`` sending the i-th variable to ``images[i]``.

    Computed as ``(I_target + (u_i - image_i))`` intersected with ``QQ[u]``.
    """
    _, _, gb = graph_basis(source_vars, images, target)
    k = target.ambient.nvars
    sub = PolyRing(tuple(source_vars))
    out = [
        Polynomial(sub, {m[k:]: c for m, c in g.coeffs.items()})
        for g in gb.elements
        if all(not any(m[:k]) for m in g.coeffs)
    ]
    return Ideal(sub, out)


def subalgebra_member(
    b: Polynomial,
    images: Sequence[Polynomial],
    target: AffineAlgebra,
    source_vars: Sequence[str] | None = None,
    graph: tuple[PolyRing, list[int], GroebnerBasis] | None = None,
) -> Polynomial | None:
    """A preimage ``p`` with ``p(images) = b`` in ``target``, or None if ``b`` is not in the image.

    ``p`` lives in ``QQ[source_vars]`` (tags ``#u0, #u1, ...`` by default).
    ``graph`` may carry a precomputed :func:`graph_basis` for the same data.
    """
    if source_vars is None:
        source_vars = tuple(f"#u{i}" for i in range(len(images)))
    if b.ring.variables != target.ambient.variables:
        raise RingMismatchError(f"{b} is not in {target.ambient}")
    ring, positions, gb = graph or graph_basis(source_vars, images, target)
    r = normal_form(b.embed(ring, positions), gb)
    k = target.ambient.nvars
    if any(any(m[:k]) for m in r.coeffs):
        return None
    return Polynomial(PolyRing(tuple(source_vars)), {m[k:]: c for m, c in r.coeffs.items()})
