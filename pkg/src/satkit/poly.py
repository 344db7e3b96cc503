"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a :class:`PolyRing`, which fixes the ordered variable
names and the monomial order.  Monomials are plain tuples of exponents; the
coefficient field is :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence, Union

Rational = Fraction
Monomial = tuple[int, ...]
Coefficient = Union[int, Fraction]

NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Raised when an operation mixes polynomials from different rings."""


def _lex_key(m: Monomial) -> Monomial:
    return m


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``lex``, ``grevlex`` or ``block``.

    ``block`` with ``split=k`` compares the first ``k`` exponents by grevlex
    and breaks ties with grevlex on the remaining ones, so any monomial that
    involves one of the first ``k`` variables beats every monomial free of
    them.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind != "block" and self.split:
            raise ValueError("split index only applies to block orders")
        if self.split < 0:
            raise ValueError("negative split index")

    @classmethod
    def lex(cls) -> MonomialOrder:
        return cls("lex")

    @classmethod
    def grevlex(cls) -> MonomialOrder:
        return cls("grevlex")

    @classmethod
    def block(cls, split: int) -> MonomialOrder:
        return cls("block", split)

    @cached_property
    def sort_key(self) -> Callable[[Monomial], tuple]:
        """Key function: ``key(m1) < key(m2)`` iff ``m1 < m2`` in this order."""
        if self.kind == "lex":
            return _lex_key
        if self.kind == "grevlex":
            base = _grevlex_key
        else:
            k = self.split

            def base(m):
                return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

        cache: dict[Monomial, tuple] = {}

        def key(m):
            r = cache.get(m)
            if r is None:
                r = cache[m] = base(m)
            return r

        return key

    def __str__(self):
        return f"block({self.split})" if self.kind == "block" else self.kind


def monomial_compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError(f"monomial length mismatch: {len(m1)} vs {len(m2)}")
    if order.kind == "block" and order.split > len(m1):
        raise ValueError("block split index exceeds variable count")
    k1, k2 = order.sort_key(tuple(m1)), order.sort_key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def mono_lcm(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))


def mono_div(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m, n))


@dataclass(frozen=True)
class PolyRing:
    """``QQ[variables]`` with a fixed monomial order."""

    variables: tuple[str, ...]
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if any(not v for v in self.variables):
            raise ValueError("empty variable name")
        if self.order.kind == "block" and self.order.split > len(self.variables):
            raise ValueError("block split index exceeds variable count")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in ring {self}") from None

    def with_order(self, order: MonomialOrder) -> PolyRing:
        return PolyRing(self.variables, order)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Coefficient) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def monomial(self, exps: Sequence[int], c: Coefficient = 1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for ring {self}")
        return Polynomial(self, {exps: Fraction(c)})

    def var(self, name: str) -> Polynomial:
        i = self.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(v) for v in self.variables)

    def parse(self, text: str) -> Polynomial:
        from satkit.cli.parser import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} is not {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def __str__(self):
        return f"QQ[{','.join(self.variables)}]"


def _coerce(ring: PolyRing, other) -> Polynomial:
    if isinstance(other, Polynomial):
        if other.ring != ring:
            raise RingMismatchError(f"ring mismatch: {ring} vs {other.ring}")
        return other
    if isinstance(other, (int, Fraction)):
        return ring.constant(other)
    return NotImplemented


class Polynomial:
    """An immutable polynomial; ``terms`` are strictly descending in the ring order."""

    __slots__ = ("ring", "_coeffs", "_terms", "_hash")

    def __init__(self, ring: PolyRing, coeffs: Mapping[Monomial, Coefficient]):
        self.ring = ring
        self._coeffs = {m: c if type(c) is Fraction else Fraction(c) for m, c in coeffs.items() if c}
        self._terms = None
        self._hash = None

    @classmethod
    def _make(cls, ring: PolyRing, coeffs: dict[Monomial, Fraction]) -> Polynomial:
        """Trusted constructor: ``coeffs`` is owned, nonzero and Fraction-valued."""
        self = cls.__new__(cls)
        self.ring = ring
        self._coeffs = coeffs
        self._terms = None
        self._hash = None
        return self

    @classmethod
    def from_terms(cls, ring: PolyRing, terms: Iterable[tuple[Coefficient, Sequence[int]]]) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for c, m in terms:
            m = tuple(m)
            if len(m) != ring.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for ring {ring}")
            acc[m] = acc.get(m, 0) + Fraction(c)
        return cls(ring, acc)

    @property
    def coeffs(self) -> Mapping[Monomial, Fraction]:
        return self._coeffs

    @property
    def terms(self) -> tuple[tuple[Fraction, Monomial], ...]:
        if self._terms is None:
            key = self.ring.order.sort_key
            ms = sorted(self._coeffs, key=key, reverse=True)
            self._terms = tuple((self._coeffs[m], m) for m in ms)
        return self._terms

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    @property
    def lm(self) -> Monomial:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._coeffs, key=self.ring.order.sort_key)

    @property
    def lc(self) -> Fraction:
        return self._coeffs[self.lm]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._coeffs), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self._coeffs), default=-1)

    def support(self) -> set[str]:
        """Names of the variables that actually occur."""
        used = set()
        for m in self._coeffs:
            used.update(v for v, e in zip(self.ring.variables, m) if e)
        return used

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(m), Fraction(0))

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == self.ring.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._coeffs.items())))
        return self._hash

    def __neg__(self):
        return Polynomial._make(self.ring, {m: -c for m, c in self._coeffs.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            v = acc.get(m)
            acc[m] = c if v is None else v + c
        return Polynomial._make(self.ring, {m: c for m, c in acc.items() if c})

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            v = acc.get(m)
            acc[m] = -c if v is None else v - c
        return Polynomial._make(self.ring, {m: c for m, c in acc.items() if c})

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = tuple(map(int.__add__, m1, m2))
                v = acc.get(m)
                acc[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._make(self.ring, {m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.ring, {m: c * v for m, v in self._coeffs.items()})

    def mul_monomial(self, m: Monomial, c: Coefficient = 1) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.ring, {mono_mul(m, k): c * v for k, v in self._coeffs.items()})

    def monic(self) -> Polynomial:
        return self.scale(1 / self.lc) if self else self

    # evaluation and change of ring

    def evaluate(self, point: Sequence[Coefficient]) -> Fraction:
        if len(point) != self.ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self._coeffs.items():
            v = c
            for p, e in zip(point, m):
                if e:
                    v *= p**e
            total += v
        return total

    def substitute(self, images: Sequence[Polynomial], ring: PolyRing | None = None) -> Polynomial:
        """Compose: replace the i-th variable by ``images[i]`` (all in ``ring``)."""
        if len(images) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} images, got {len(images)}")
        if ring is None:
            if not images:
                raise ValueError("target ring required when there are no variables")
            ring = images[0].ring
        for img in images:
            if img.ring != ring:
                raise RingMismatchError(f"image {img} is not in {ring}")
        powers: list[dict[int, Polynomial]] = [{0: ring.one(), 1: img} for img in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e // 2) * power(i, e - e // 2)
            return cache[e]

        acc: dict[Monomial, Fraction] = {}
        for m, c in self._coeffs.items():
            term = ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for k, v in term._coeffs.items():
                acc[k] = acc.get(k, 0) + v
        return Polynomial(ring, acc)

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> Polynomial:
        """Move into ``ring``, sending variable i to variable ``positions[i]``."""
        if len(positions) != self.ring.nvars:
            raise ValueError("position map has the wrong length")
        n = ring.nvars
        acc = {}
        for m, c in self._coeffs.items():
            new = [0] * n
            for p, e in zip(positions, m):
                new[p] += e
            acc[tuple(new)] = c
        return Polynomial(ring, acc)

    def rename_into(self, ring: PolyRing, mapping: Mapping[str, str] | None = None) -> Polynomial:
        """Move into ``ring`` matching variables by (optionally renamed) name."""
        mapping = mapping or {}
        positions = [ring.index(mapping.get(v, v)) for v in self.ring.variables]
        return self.embed(ring, positions)

    def with_order(self, order: MonomialOrder) -> Polynomial:
        return Polynomial(self.ring.with_order(order), self._coeffs)

    # display

    def __str__(self):
        if not self._coeffs:
            return "0"
        out = []
        for i, (c, m) in enumerate(self.terms):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.variables, m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(f"-{body}" if sign == "-" else body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r} in {self.ring})"


def poly_arith(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    """``add``, ``sub`` or ``mul`` of two polynomials of the same ring."""
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def evaluate_poly(f: Polynomial, point: Sequence[Coefficient]) -> Fraction:
    return f.evaluate(point)
