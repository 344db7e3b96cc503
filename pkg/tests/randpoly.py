"""Random small polynomials for property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from satkit.poly import Polynomial, PolyRing

coefficients = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


def exponent_vectors(nvars: int, max_degree: int):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree
    )


@st.composite
def polys(draw, ring: PolyRing, max_degree: int = 3, max_terms: int = 3, nonzero: bool = False):
    terms = draw(
        st.lists(st.tuples(coefficients, exponent_vectors(ring.nvars, max_degree)), min_size=int(nonzero), max_size=max_terms)
    )
    f = Polynomial.from_terms(ring, terms)
    if nonzero and not f:
        f = ring.one()
    return f


def random_poly(
    rng: random.Random,
    ring: PolyRing,
    max_degree: int = 3,
    max_terms: int = 3,
    homogeneous: bool = False,
) -> Polynomial:
    """A nonzero polynomial whose first drawn term has positive degree."""
    terms = []
    top = rng.randint(1, max_degree) if ring.nvars else 0
    for i in range(rng.randint(1, max_terms)):
        d = top if homogeneous or i == 0 else rng.randint(0, max_degree)
        exps = [0] * ring.nvars
        for _ in range(d):
            exps[rng.randrange(ring.nvars)] += 1
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))
        terms.append((c, exps))
    f = Polynomial.from_terms(ring, terms)
    return f if f else ring.one()


def random_rescaling(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-5, -3, -2, -1, 1, 2, 4, 7]), rng.randint(1, 5))
