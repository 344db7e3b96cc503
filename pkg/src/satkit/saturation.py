"""Tensor squares, the difference map and saturation membership.

For an extension ``A -> B`` the tensor square ``B (x)_A B`` is presented on
two copies ``v#1``, ``v#2`` of the target variables.  An element ``b`` of
``B`` is in the saturation of ``A`` in ``B`` exactly when
``delta(b) = b#1 - b#2`` is nilpotent there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from satkit.algebra import AlgebraMorphism, CompositionMismatch, _target_element
from satkit.groebner import normal_form
from satkit.ideals import Ideal, ideal_member, radical_member
from satkit.poly import Monomial, MonomialOrder, Polynomial, PolyRing

DEFAULT_DEGREE_BOUND = 4
MAX_NILPOTENCY_PROBE = 8

SCAN_CAVEAT = (
    "complete only up to total degree {bound}: the saturation need not be "
    "finitely generated, so elements of higher degree are not ruled out"
)


class TensorSquare:
    """Presentation of ``B (x)_A B`` for a morphism ``A -> B``."""

    def __init__(self, base: AlgebraMorphism):
        target = base.target
        names = target.variables
        n = len(names)
        self.base = base
        self.ring = PolyRing(
            tuple(f"{v}#1" for v in names) + tuple(f"{v}#2" for v in names), MonomialOrder.grevlex()
        )
        self.copy1 = list(range(n))
        self.copy2 = list(range(n, 2 * n))
        gens = [r.embed(self.ring, self.copy1) for r in target.relations.generators]
        gens += [r.embed(self.ring, self.copy2) for r in target.relations.generators]
        gens += [self.delta(img) for img in base.images]
        self.J = Ideal(self.ring, gens)

    def phi1(self, b: Polynomial) -> Polynomial:
        """``b (x) 1``."""
        return b.embed(self.ring, self.copy1)

    def phi2(self, b: Polynomial) -> Polynomial:
        """``1 (x) b``."""
        return b.embed(self.ring, self.copy2)

    def delta(self, b: Polynomial) -> Polynomial:
        return self.phi1(b) - self.phi2(b)

    def swap(self, f: Polynomial) -> Polynomial:
        """The involution exchanging the two copies."""
        return f.embed(self.ring, self.copy2 + self.copy1)

    def __str__(self):
        return f"{self.ring} / {self.J}"


def tensor_square(m: AlgebraMorphism) -> TensorSquare:
    m.require_extension()
    cached = m.__dict__.get("_tensor_square")
    if cached is None:
        cached = m.__dict__["_tensor_square"] = TensorSquare(m)
    return cached


def delta(b: Polynomial, T: TensorSquare) -> Polynomial:
    return T.delta(_target_element(b, T.base))


@dataclass(frozen=True)
class SaturationVerdict:
    """``member`` plus how it was decided.

    ``via`` is ``"ideal"`` when delta(b) already lies in J, ``"radical"``
    when only a power does (``nilpotency`` is the least such power when
    found by the probe), and None for non-members.
    """

    element: Polynomial
    member: bool
    via: str | None = None
    nilpotency: int | None = None

    def __bool__(self):
        return self.member

    def certificate(self) -> str:
        d = f"Δ({self.element})"
        if self.via == "ideal":
            return f"{d} ∈ J (ideal membership)"
        if self.via == "radical":
            if self.nilpotency:
                return f"{d}^{self.nilpotency} ∈ J, {d} ∉ J (nilpotent)"
            return f"{d} ∈ √J (Rabinowitsch)"
        return f"{d} ∉ √J (Rabinowitsch: 1 ∉ J + (1 - t·{d}))"


def saturation_verdict(b: Polynomial | str, m: AlgebraMorphism) -> SaturationVerdict:
    T = tensor_square(m)
    b = _target_element(b, m)
    d = T.delta(b)
    if ideal_member(d, T.J):
        return SaturationVerdict(b, True, "ideal", 1)
    if not radical_member(d, T.J):
        return SaturationVerdict(b, False)
    gb = T.J.groebner()
    power = d
    for k in range(2, MAX_NILPOTENCY_PROBE + 1):
        power = normal_form(power * d, gb)
        if not power:
            return SaturationVerdict(b, True, "radical", k)
    return SaturationVerdict(b, True, "radical")


def in_saturation(b: Polynomial | str, m: AlgebraMorphism) -> bool:
    return saturation_verdict(b, m).member


def is_radicial_extension(m: AlgebraMorphism) -> bool:
    """Every target generator lies in the saturation (which is a subring containing the image)."""
    m.require_extension()
    cached = m.__dict__.get("_radicial")
    if cached is None:
        cached = m.__dict__["_radicial"] = all(in_saturation(g, m) for g in m.target.gens)
    return cached


def is_radicial_sequence(m1: AlgebraMorphism, m2: AlgebraMorphism) -> bool:
    """For ``A -> C -> B``: whether every generator of ``C`` lands in the saturation of ``A`` in ``B``."""
    if not m1.target.same_presentation(m2.source):
        raise CompositionMismatch(f"{m1.target.label} is not {m2.source.label}")
    m1.require_extension()
    m2.require_extension()
    composite = m1.then(m2)
    return all(in_saturation(img, composite) for img in m2.images)


# bounded exploration


@dataclass(frozen=True)
class ScanFinding:
    element: Polynomial
    preimage: Polynomial | None
    nilpotency: int | None = None

    @property
    def in_image(self) -> bool:
        return self.preimage is not None


@dataclass
class ScanReport:
    bound: int
    candidates: tuple[Polynomial, ...]
    linear: list[ScanFinding] = field(default_factory=list)
    radical: list[ScanFinding] = field(default_factory=list)

    @property
    def caveat(self) -> str:
        return SCAN_CAVEAT.format(bound=self.bound)

    @property
    def outside_image(self) -> list[ScanFinding]:
        return [f for f in self.linear + self.radical if not f.in_image]


def standard_monomials(m: AlgebraMorphism, bound: int) -> list[Monomial]:
    """Monomials of total degree <= bound not divisible by a leading monomial of the target relations.

    Ordered by increasing degree, then increasing in the target order.
    """
    gb = m.target.groebner()
    n = m.target.ambient.nvars
    key = m.target.ambient.order.sort_key
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int):
        if len(prefix) == n:
            mono = tuple(prefix)
            if gb.is_standard(mono):
                out.append(mono)
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], bound)
    out.sort(key=lambda mono: (sum(mono), key(mono)))
    return out


def _nullspace(columns: Sequence[dict]) -> list[dict[int, Fraction]]:
    """Basis of ``{c : sum_j c_j * columns[j] = 0}``, one vector per non-pivot column.

    Each vector has a 1 at its free column and only earlier pivot columns
    otherwise, so its largest candidate is the free one.
    """
    pivots: list[tuple[object, dict]] = []  # (pivot row key, reduced column with combination)
    out = []
    for j, col in enumerate(columns):
        vec = {k: Fraction(v) for k, v in col.items() if v}
        comb = {j: Fraction(1)}
        for row, (pvec, pcomb) in pivots:
            c = vec.get(row)
            if c:
                for k, v in pvec.items():
                    nv = vec.get(k, 0) - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                for k, v in pcomb.items():
                    nv = comb.get(k, 0) - c * v
                    if nv:
                        comb[k] = nv
                    else:
                        comb.pop(k, None)
        if not vec:
            out.append(comb)
            continue
        row = min(vec, key=repr)
        inv = 1 / vec[row]
        vec = {k: v * inv for k, v in vec.items()}
        comb = {k: v * inv for k, v in comb.items()}
        # keep earlier pivots reduced in the new row
        new_pivots = []
        for prow, (pvec, pcomb) in pivots:
            c = pvec.get(row)
            if c:
                pvec = dict(pvec)
                pcomb = dict(pcomb)
                for k, v in vec.items():
                    nv = pvec.get(k, 0) - c * v
                    if nv:
                        pvec[k] = nv
                    else:
                        pvec.pop(k, None)
                for k, v in comb.items():
                    nv = pcomb.get(k, 0) - c * v
                    if nv:
                        pcomb[k] = nv
                    else:
                        pcomb.pop(k, None)
            new_pivots.append((prow, (pvec, pcomb)))
        pivots = new_pivots + [(row, (vec, comb))]
    return out


def saturation_scan(m: AlgebraMorphism, degree_bound: int = DEFAULT_DEGREE_BOUND) -> ScanReport:
    """Certified saturation elements among target polynomials of degree <= ``degree_bound``.

    ``linear`` spans the space of combinations ``b`` of standard monomials
    with ``delta(b)`` in J; ``radical`` lists the remaining standard
    monomials whose difference is only nilpotent.  Nothing beyond the bound
    is claimed.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    T = tensor_square(m)
    ring = m.target.ambient
    monos = standard_monomials(m, degree_bound)
    gbJ = T.J.groebner()
    columns = [normal_form(T.delta(ring.monomial(mono)), gbJ).coeffs for mono in monos]
    report = ScanReport(degree_bound, tuple(ring.monomial(mono) for mono in monos))
    for comb in _nullspace(columns):
        b = Polynomial(ring, {monos[j]: c for j, c in comb.items()}).monic()
        report.linear.append(ScanFinding(b, m.preimage(b)))
    for mono, col in zip(monos, columns):
        if not col:
            continue
        b = ring.monomial(mono)
        verdict = saturation_verdict(b, m)
        if verdict.member:
            report.radical.append(ScanFinding(b, m.preimage(b), verdict.nilpotency))
    return report
