"""Composite verdicts: subintegrality, seminormality, isomorphism, regulous membership.

Every flag in a :class:`ClassificationReport` is an exact verdict except
``seminormal_in``, which may be bounded by the scan degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from satkit.algebra import (
    AffineAlgebra,
    AlgebraError,
    AlgebraMorphism,
    NotAnExtension,
    TAG_VAR,
    _target_element,
    generic_degree,
    is_birational,
    is_integral_element,
    is_integral_morphism,
)
from satkit.poly import Polynomial, PolyRing
from satkit.saturation import (
    DEFAULT_DEGREE_BOUND,
    in_saturation,
    is_radicial_extension,
    saturation_scan,
)


class NotIntegral(AlgebraError):
    pass


class NotANormalization(AlgebraError):
    pass


@dataclass(frozen=True)
class SeminormalityStatus:
    """``No`` (with an element of the seminormalization outside the source), ``YesUpTo`` or ``Yes``."""

    kind: str
    bound: int | None = None
    witness: Polynomial | None = None

    def __str__(self):
        if self.kind == "No":
            return f"No({self.witness})"
        if self.kind == "YesUpTo":
            return f"YesUpTo({self.bound})"
        return "Yes"


def _all_generators_in_image(m: AlgebraMorphism) -> bool:
    return all(m.preimage(g) is not None for g in m.target.gens)


def is_subintegral(m: AlgebraMorphism) -> bool:
    """Integral, bijective on spectra and equiresidual; decided as integral + radicial.

    Refuses (``NotIntegral``) morphisms that are not integral.
    """
    m.require_extension()
    if not is_integral_morphism(m):
        raise NotIntegral(f"{m} is not integral; subintegrality is only decided for integral morphisms")
    return is_radicial_extension(m)


def is_isomorphism(m: AlgebraMorphism) -> bool:
    return m.is_extension and _all_generators_in_image(m)


def _adjoin(m: AlgebraMorphism, b: Polynomial) -> AlgebraMorphism:
    """The finite extension ``A -> A[b]`` with ``A[b]`` presented on ``(#t, source vars)``."""
    gb = m.integral_relations(b)
    ring = PolyRing(gb.ring.variables)
    sub = AffineAlgebra(ring, [Polynomial(ring, g.coeffs) for g in gb.elements], f"{m.source.label}[{b}]")
    return AlgebraMorphism(m.source, sub, list(ring.gens[1:]))


def seminormality_status(m: AlgebraMorphism, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SeminormalityStatus:
    """Whether the source is seminormal in the target.

    ``Yes`` only when the target is generated by the image; ``No(b)`` needs
    ``b`` outside the image that is certified subintegral over the source;
    otherwise ``YesUpTo(bound)``.
    """
    m.require_extension()
    if _all_generators_in_image(m):
        return SeminormalityStatus("Yes")
    report = saturation_scan(m, degree_bound)
    candidates = report.outside_image
    if is_integral_morphism(m):
        # integral case: seminormalization equals saturation
        if candidates:
            return SeminormalityStatus("No", degree_bound, candidates[0].element)
        return SeminormalityStatus("YesUpTo", degree_bound)
    for finding in candidates:
        b = finding.element
        if not is_integral_element(b, m):
            continue
        # A -> A[b] is finite, so b is subintegral iff it is saturated there
        sub = _adjoin(m, b)
        if in_saturation(sub.target.ambient.var(TAG_VAR), sub):
            return SeminormalityStatus("No", degree_bound, b)
    return SeminormalityStatus("YesUpTo", degree_bound)


def validate_normalization(X: AffineAlgebra, norm: AlgebraMorphism):
    if not X.same_presentation(norm.source):
        raise NotANormalization(f"{norm} does not start at {X.label}")
    if not norm.is_extension:
        raise NotANormalization(f"{norm} is not injective")
    if not is_integral_morphism(norm):
        raise NotANormalization(f"{norm} is not finite")
    if not is_birational(norm):
        raise NotANormalization(f"{norm} is not birational")


def regulous_member(f: Polynomial | str, X: AffineAlgebra, norm: AlgebraMorphism) -> bool:
    """Whether ``f`` (on the normalization) is a continuous rational function on ``X``.

    Such functions are the regular functions of the seminormalization,
    which for the finite normalization map equals the saturation.
    """
    validate_normalization(X, norm)
    return in_saturation(_target_element(f, norm), norm)


@dataclass
class ClassificationReport:
    well_defined: bool = True
    extension: bool = False
    finite: bool | None = None
    integral: bool | None = None
    birational: bool | None = None
    radicial: bool | None = None
    subintegral: bool | None = None
    isomorphism: bool = False
    seminormal_in: SeminormalityStatus | None = None
    generic_degrees: dict[str, int | None] = field(default_factory=dict)
    consistency_violations: list[str] = field(default_factory=list)

    FLAGS = (
        "well_defined",
        "extension",
        "finite",
        "integral",
        "birational",
        "radicial",
        "subintegral",
        "isomorphism",
    )

    def flags(self) -> dict[str, bool | None]:
        return {name: getattr(self, name) for name in self.FLAGS}

    def as_dict(self) -> dict:
        d = self.flags()
        d["seminormal_in"] = None if self.seminormal_in is None else str(self.seminormal_in)
        d["generic_degrees"] = dict(self.generic_degrees)
        d["consistency_violations"] = list(self.consistency_violations)
        return d


def consistency_violations(r: ClassificationReport) -> list[str]:
    """Implications that must hold between the flags; a violation means a bug."""
    out = []
    if not r.extension:
        if r.isomorphism:
            out.append("isomorphism without being an extension")
        return out
    if bool(r.finite and r.radicial) != bool(r.subintegral):
        out.append("finite and radicial must coincide with subintegral")
    if r.isomorphism and not r.radicial:
        out.append("isomorphism that is not radicial")
    if r.isomorphism and r.seminormal_in is not None and r.seminormal_in.kind == "No":
        out.append("isomorphism but source not seminormal in target")
    if r.isomorphism and not (r.finite and r.birational):
        out.append("isomorphism that is not finite and birational")
    if (
        r.finite
        and r.radicial
        and r.seminormal_in is not None
        and r.seminormal_in.kind == "Yes"
        and not r.isomorphism
    ):
        out.append("finite, radicial and exactly seminormal but not an isomorphism")
    if r.subintegral and not r.radicial:
        out.append("subintegral but not radicial")
    if r.subintegral and not r.birational:
        out.append("subintegral but not birational")
    if r.finite is not None and r.finite != r.integral:
        out.append("finite and integral disagree")
    return out


def classify(m: AlgebraMorphism, degree_bound: int = DEFAULT_DEGREE_BOUND) -> ClassificationReport:
    r = ClassificationReport(extension=m.is_extension)
    if r.extension:
        r.integral = r.finite = is_integral_morphism(m)
        r.generic_degrees = {v: generic_degree(g, m) for v, g in zip(m.target.variables, m.target.gens)}
        r.birational = all(d == 1 for d in r.generic_degrees.values())
        r.radicial = is_radicial_extension(m)
        r.subintegral = bool(r.integral and r.radicial)
        r.isomorphism = is_isomorphism(m)
        r.seminormal_in = seminormality_status(m, degree_bound)
    r.consistency_violations = consistency_violations(r)
    return r


__all__ = [
    "ClassificationReport",
    "NotANormalization",
    "NotAnExtension",
    "NotIntegral",
    "SeminormalityStatus",
    "classify",
    "consistency_violations",
    "is_isomorphism",
    "is_subintegral",
    "regulous_member",
    "seminormality_status",
    "validate_normalization",
]
