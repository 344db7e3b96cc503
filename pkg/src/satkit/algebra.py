"""Finitely presented QQ-algebras and the morphisms between them.

Relation ideals are trusted to be radical, and prime wherever an operation
talks about fraction fields (``generic_degree``, ``is_birational``).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from satkit.groebner import GroebnerBasis
from satkit.ideals import Ideal, graph_basis, ideal_member, kernel_of_morphism, subalgebra_member
from satkit.poly import MonomialOrder, Polynomial, PolyRing, RingMismatchError

TAG_VAR = "#t"


class AlgebraError(Exception):
    """Base class for domain errors on algebras and morphisms."""


class ImproperIdeal(AlgebraError):
    pass


class NotWellDefined(AlgebraError):
    def __init__(self, relation: Polynomial, residue: Polynomial):
        super().__init__(f"relation {relation} does not map into the target relations (residue {residue})")
        self.relation = relation
        self.residue = residue


class NotAnExtension(AlgebraError):
    pass


class CompositionMismatch(AlgebraError):
    pass


class AffineAlgebra:
    """``QQ[variables] / relations``, standing for the coordinate ring of an affine variety."""

    def __init__(self, ambient: PolyRing, relations: Iterable[Polynomial] | Ideal = (), label: str = ""):
        if not isinstance(relations, Ideal):
            relations = Ideal(ambient, [ambient(r) if not isinstance(r, Polynomial) else r for r in relations])
        self.ambient = ambient
        self.relations = relations
        self.label = label or "QQ[" + ",".join(ambient.variables) + "]"
        if relations.is_unit():
            raise ImproperIdeal(f"relations of {self.label} generate the unit ideal")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ambient.variables

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return self.ambient.gens

    def groebner(self) -> GroebnerBasis:
        return self.relations.groebner()

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.relations.reduce(f)

    def is_zero(self, f: Polynomial) -> bool:
        return ideal_member(f, self.relations)

    def same_presentation(self, other: AffineAlgebra) -> bool:
        return self is other or (self.variables == other.variables and self.relations == other.relations)

    def identity(self) -> AlgebraMorphism:
        return AlgebraMorphism(self, self, self.gens)

    def __str__(self):
        return f"{self.label} = {self.ambient} / {self.relations}"

    def __repr__(self):
        return f"AffineAlgebra({self})"


def make_algebra(
    variables: Sequence[str],
    relations: Iterable[Polynomial | str] = (),
    label: str = "",
    order: MonomialOrder | None = None,
) -> AffineAlgebra:
    ring = PolyRing(tuple(variables), order or MonomialOrder.grevlex())
    return AffineAlgebra(ring, [ring(r) for r in relations], label)


class AlgebraMorphism:
    """``source -> target`` given by one image polynomial per source variable."""

    def __init__(self, source: AffineAlgebra, target: AffineAlgebra, images: Sequence[Polynomial | str]):
        if len(images) != source.ambient.nvars:
            raise ValueError(
                f"arity mismatch: {source.label} has {source.ambient.nvars} variables, got {len(images)} images"
            )
        imgs = []
        for img in images:
            if isinstance(img, Polynomial):
                if img.ring.variables != target.variables:
                    raise RingMismatchError(f"image {img} is not in {target.ambient}")
                img = Polynomial(target.ambient, img.coeffs)
            else:
                img = target.ambient(img)
            imgs.append(img)
        self.source = source
        self.target = target
        self.images = tuple(imgs)
        self._tagged: dict[Polynomial, GroebnerBasis] = {}
        for r in source.relations.generators:
            residue = target.reduce(self.apply(r))
            if residue:
                raise NotWellDefined(r, residue)

    def apply(self, f: Polynomial) -> Polynomial:
        """Image of a source-ambient polynomial in the target ambient ring."""
        if f.ring.variables != self.source.variables:
            raise RingMismatchError(f"{f} is not in {self.source.ambient}")
        return f.substitute(self.images, self.target.ambient)

    def then(self, other: AlgebraMorphism) -> AlgebraMorphism:
        """Composite ``other o self``."""
        if not self.target.same_presentation(other.source):
            raise CompositionMismatch(f"{self.target.label} is not {other.source.label}")
        return AlgebraMorphism(self.source, other.target, [other.apply(img) for img in self.images])

    @cached_property
    def kernel(self) -> Ideal:
        k = kernel_of_morphism(self.source.variables, self.images, self.target)
        return Ideal(self.source.ambient, k.generators)

    @cached_property
    def is_extension(self) -> bool:
        return self.kernel.issubset(self.source.relations) and self.source.relations.issubset(self.kernel)

    def require_extension(self):
        if not self.is_extension:
            raise NotAnExtension(f"{self} is not injective (kernel {self.kernel})")

    @cached_property
    def graph(self):
        return graph_basis(self.source.variables, self.images, self.target)

    def preimage(self, b: Polynomial) -> Polynomial | None:
        """Some ``p`` in the source ambient ring with ``p(images) = b`` in the target, or None."""
        p = subalgebra_member(b, self.images, self.target, self.source.variables, graph=self.graph)
        return None if p is None else Polynomial(self.source.ambient, p.coeffs)

    def integral_relations(self, b: Polynomial) -> GroebnerBasis:
        """Lex basis (tag ``#t`` greatest) of the kernel of ``QQ[#t, u] -> target``, ``#t -> b``."""
        b = Polynomial(self.target.ambient, b.coeffs)
        cache = self._tagged
        if b not in cache:
            names = (TAG_VAR,) + self.source.variables
            k = kernel_of_morphism(names, (b,) + self.images, self.target)
            cache[b] = k.groebner(MonomialOrder.lex())
        return cache[b]

    @cached_property
    def is_identity(self) -> bool:
        return self.source.same_presentation(self.target) and all(
            self.target.is_zero(img - g) for img, g in zip(self.images, self.target.gens)
        )

    def __str__(self):
        imgs = ", ".join(str(i) for i in self.images)
        return f"{self.source.label} -> {self.target.label} = [{imgs}]"

    def __repr__(self):
        return f"AlgebraMorphism({self})"


def make_morphism(source: AffineAlgebra, target: AffineAlgebra, images: Sequence[Polynomial | str]) -> AlgebraMorphism:
    return AlgebraMorphism(source, target, images)


def _target_element(b, m: AlgebraMorphism) -> Polynomial:
    if isinstance(b, str):
        return m.target.ambient.parse(b)
    if b.ring.variables != m.target.variables:
        raise RingMismatchError(f"{b} is not in {m.target.ambient}")
    return b


def is_extension(m: AlgebraMorphism) -> bool:
    return m.is_extension


def is_integral_element(b: Polynomial | str, m: AlgebraMorphism) -> bool:
    """Whether ``b`` satisfies a monic polynomial over the image of ``m``.

    Exact: the reduced lex basis of the tagged kernel contains an element
    whose leading monomial is a pure power of the tag iff such a monic
    relation exists.
    """
    m.require_extension()
    b = _target_element(b, m)
    gb = m.integral_relations(b)
    return any(lm[0] > 0 and not any(lm[1:]) for lm in gb.leading_monomials)


def is_integral_morphism(m: AlgebraMorphism) -> bool:
    m.require_extension()
    return all(is_integral_element(g, m) for g in m.target.gens)


is_finite = is_integral_morphism


def _leading_tag_coefficient(g: Polynomial, source: AffineAlgebra) -> tuple[int, Polynomial]:
    d = max(mono[0] for mono in g.coeffs)
    coeff = Polynomial(source.ambient, {mono[1:]: c for mono, c in g.coeffs.items() if mono[0] == d})
    return d, coeff


def generic_degree(b: Polynomial | str, m: AlgebraMorphism) -> int | None:
    """Degree of ``b`` over the fraction field of the source, or None if ``b`` is transcendental.

    Reads the reduced lex basis of the tagged kernel at the generic point of
    the source: the smallest tag-degree among elements whose leading tag
    coefficient is nonzero in the source algebra.
    """
    m.require_extension()
    b = _target_element(b, m)
    best = None
    for g in m.integral_relations(b).elements:
        d, lc = _leading_tag_coefficient(g, m.source)
        if d == 0 or m.source.is_zero(lc):
            continue
        if best is None or d < best:
            best = d
    return best


def is_birational(m: AlgebraMorphism) -> bool:
    m.require_extension()
    return all(generic_degree(g, m) == 1 for g in m.target.gens)
