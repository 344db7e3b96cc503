import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from randpoly import polys

from satkit import corpus
from satkit.algebra import CompositionMismatch, NotAnExtension, is_integral_morphism
from satkit.classify import is_subintegral
from satkit.groebner import normal_form
from satkit.ideals import Ideal, ideal_member, radical_member
from satkit.poly import PolyRing
from satkit.saturation import (
    delta,
    in_saturation,
    is_radicial_extension,
    is_radicial_sequence,
    saturation_scan,
    saturation_verdict,
    standard_monomials,
    tensor_square,
)

nu = corpus.node_to_normalization()
f = corpus.node_to_punctured()
g = corpus.normalization_to_punctured()
cusp = corpus.cusp_normalization()


def test_tensor_square_nodal_punctured():
    T = tensor_square(f)
    assert T.ring.variables == ("x#1", "z#1", "s#1", "x#2", "z#2", "s#2")
    x1, z1, s1, x2, z2, s2 = T.ring.gens
    expected = [z1**2 - x1 - 1, s1 * (z1 - 1) - 1, z2**2 - x2 - 1, s2 * (z2 - 1) - 1, x1 - x2, x1 * z1 - x2 * z2]
    assert list(T.J.generators) == expected
    assert tensor_square(f) is T


def test_tensor_square_identity_and_cusp():
    A = corpus.nodal_curve()
    T = tensor_square(A.identity())
    x1, y1, x2, y2 = T.ring.gens
    assert ideal_member(x1 - x2, T.J) and ideal_member(y1 - y2, T.J)
    Tc = tensor_square(cusp)
    t1, t2 = Tc.ring.gens
    assert Tc.J.groebner().elements == Ideal(Tc.ring, [t1**2 - t2**2, t1**3 - t2**3]).groebner().elements
    with pytest.raises(NotAnExtension):
        tensor_square(corpus.non_dominant())


def test_tensor_square_swap_and_copies():
    for m in (nu, f, cusp):
        T = tensor_square(m)
        for r in T.J.generators:
            assert ideal_member(T.swap(r), T.J)
        for r in m.target.relations.generators:
            assert ideal_member(T.phi1(r), T.J) and ideal_member(T.phi2(r), T.J)


def test_delta_examples():
    T = tensor_square(f)
    x1, z1, s1, x2, z2, s2 = T.ring.gens
    assert delta("z", T) == z1 - z2
    assert delta("x", T) == x1 - x2 and ideal_member(x1 - x2, T.J)
    assert delta(f.target.ambient.constant(7), T).is_zero()


def test_in_saturation_examples():
    v = saturation_verdict("z", f)
    assert v.member and v.via == "ideal"
    assert v.certificate() == "Δ(z) ∈ J (ideal membership)"
    assert in_saturation("s", f)
    v = saturation_verdict("z", nu)
    assert not v.member
    assert v.certificate().startswith("Δ(z) ∉ √J")
    v = saturation_verdict("t", cusp)
    assert v.member and v.via == "radical" and v.nilpotency == 3


def test_radicial_extension_examples():
    assert is_radicial_extension(f)
    assert is_radicial_extension(corpus.node_to_punctured(("t",)))
    assert not is_radicial_extension(nu)
    assert is_radicial_extension(cusp)


def test_radicial_sequence_examples():
    assert is_radicial_sequence(nu, g)
    Ap = nu.target
    assert not is_radicial_sequence(nu, Ap.identity())
    A = nu.source
    assert is_radicial_sequence(A.identity(), f)
    with pytest.raises(CompositionMismatch):
        is_radicial_sequence(g, nu)


def test_standard_monomials_skip_leading_terms():
    # z^2 leads z^2 - x - 1 under grevlex, so no candidate contains z^2
    monos = standard_monomials(nu, 3)
    assert all(m[1] < 2 for m in monos)
    assert monos[0] == (0, 0) and len(monos) == 1 + 2 + 2 + 2


def test_scan_punctured_finds_z_and_s():
    rep = saturation_scan(f, 3)
    outside = {str(x.element) for x in rep.outside_image}
    assert {"z", "s"} <= outside
    linear = {str(x.element) for x in rep.linear}
    assert {"z", "s"} <= linear
    assert "3" in rep.caveat


def test_scan_node_stays_in_image():
    rep = saturation_scan(nu, 4)
    assert rep.outside_image == []
    xz = [x for x in rep.linear if str(x.element) == "x*z"]
    assert xz and str(xz[0].preimage) == "y"


def test_scan_cusp_radical_list():
    rep = saturation_scan(cusp, 1)
    assert [str(x.element) for x in rep.radical] == ["t"]
    assert rep.radical[0].nilpotency == 3 and not rep.radical[0].in_image
    assert [str(x.element) for x in rep.linear] == ["1"]
    with pytest.raises(ValueError):
        saturation_scan(cusp, -1)


def test_scan_deterministic():
    a, b = saturation_scan(f, 2), saturation_scan(f, 2)
    assert [x.element for x in a.linear] == [x.element for x in b.linear]
    assert [x.element for x in a.radical] == [x.element for x in b.radical]


def test_seminormalization_inside_saturation():
    for m in corpus.standard_corpus().values():
        if m.is_extension and is_integral_morphism(m) and is_subintegral(m):
            assert is_radicial_extension(m)


NODE = PolyRing(("x", "z"))
CUSP = PolyRing(("t",))
node_elems = polys(NODE, max_degree=3, max_terms=3)
cusp_elems = polys(CUSP, max_degree=4, max_terms=3)


def _product_rule(m, b1, b2):
    T = tensor_square(m)
    b1, b2 = m.target.ambient(b1), m.target.ambient(b2)
    lhs = T.delta(b1 * b2) - (T.phi1(b1) * T.delta(b2) + T.phi2(b2) * T.delta(b1))
    return normal_form(lhs, T.J.groebner()).is_zero()


@settings(max_examples=60, deadline=None, derandomize=True)
@given(node_elems, node_elems)
def test_product_rule_node(b1, b2):
    assert _product_rule(nu, b1, b2)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(cusp_elems, cusp_elems)
def test_product_rule_cusp(b1, b2):
    assert _product_rule(cusp, b1, b2)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(cusp_elems, polys(PolyRing(("u", "v")), max_degree=2, max_terms=2))
def test_module_property(b, a):
    b = cusp.target.ambient(b)
    a = cusp.apply(cusp.source.ambient(a))
    if in_saturation(b, cusp):
        assert in_saturation(a * b, cusp)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(node_elems)
def test_swap_symmetry(b):
    T = tensor_square(nu)
    d = T.delta(nu.target.ambient(b))
    assert radical_member(d, T.J) == radical_member(T.swap(d), T.J)


PUNCT = PolyRing(("x", "z", "s"))


@settings(max_examples=25, deadline=None, derandomize=True)
@given(polys(PUNCT, max_degree=2, max_terms=3))
def test_monotone_along_chain(b):
    b = f.target.ambient(b)
    if in_saturation(b, f):
        assert in_saturation(b, g)


@settings(max_examples=10, deadline=None, derandomize=True)
@given(st.integers(0, 3))
def test_scan_linear_findings_are_certified(bound):
    rep = saturation_scan(f, bound)
    T = tensor_square(f)
    for x in rep.linear:
        assert ideal_member(T.delta(x.element), T.J)
