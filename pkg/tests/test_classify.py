import pytest
from hypothesis import given, settings
from randpoly import polys

from satkit import corpus
from satkit.algebra import NotAnExtension, make_algebra, make_morphism
from satkit.classify import (
    ClassificationReport,
    NotANormalization,
    NotIntegral,
    SeminormalityStatus,
    classify,
    consistency_violations,
    is_isomorphism,
    is_subintegral,
    regulous_member,
    seminormality_status,
)
from satkit.poly import PolyRing

nu = corpus.node_to_normalization()
f = corpus.node_to_punctured()
cusp = corpus.cusp_normalization()
A = nu.source


def test_is_subintegral_examples():
    assert is_subintegral(cusp)
    assert not is_subintegral(nu)
    assert is_subintegral(A.identity())
    with pytest.raises(NotIntegral):
        is_subintegral(f)
    with pytest.raises(NotAnExtension):
        is_subintegral(corpus.non_dominant())


def test_seminormality_status_examples():
    st = seminormality_status(cusp)
    assert st.kind == "No" and str(st) == "No(t)"
    assert str(seminormality_status(nu, 4)) == "YesUpTo(4)"
    assert seminormality_status(A.identity()) == SeminormalityStatus("Yes")
    assert seminormality_status(corpus.parabola_isomorphism()).kind == "Yes"


def test_seminormality_non_integral():
    # z and s are saturated but s is not integral, and z is not subintegral over A -> A[z]
    assert str(seminormality_status(f, 3)) == "YesUpTo(3)"
    # cusp normalization with a point removed: t stays subintegral over the cusp
    Ac = cusp.source
    punct = make_algebra(("t", "s"), ["s*(t-1) - 1"], "QQ[t,1/(t-1)]")
    m = make_morphism(Ac, punct, ["t^2", "t^3"])
    assert str(seminormality_status(m, 1)) == "No(t)"


def test_is_isomorphism_examples():
    assert is_isomorphism(corpus.parabola_isomorphism())
    par = corpus.parabola_isomorphism()
    assert str(par.preimage(par.target.ambient.var("t"))) == "u"
    assert not is_isomorphism(nu)
    assert is_isomorphism(A.identity())
    assert not is_isomorphism(corpus.non_dominant())


def test_regulous_member_examples():
    assert regulous_member("t", cusp.source, cusp)
    assert not regulous_member("z", A, nu)
    assert regulous_member("x", A, nu)
    assert regulous_member("x*z", A, nu)
    with pytest.raises(NotANormalization):
        regulous_member("s", A, f)
    with pytest.raises(NotANormalization):
        regulous_member("t", make_algebra(("u",), (), "QQ[u]"), corpus.double_cover())
    with pytest.raises(NotANormalization):
        regulous_member("x", corpus.nodal_normalization(), nu)


def test_classify_node_normalization():
    r = classify(nu)
    assert r.flags() == {
        "well_defined": True,
        "extension": True,
        "finite": True,
        "integral": True,
        "birational": True,
        "radicial": False,
        "subintegral": False,
        "isomorphism": False,
    }
    assert str(r.seminormal_in) == "YesUpTo(4)"
    assert r.generic_degrees == {"x": 1, "z": 1}
    assert r.consistency_violations == []


def test_classify_punctured():
    r = classify(f, 3)
    assert r.extension and not r.finite and r.birational and r.radicial
    assert not r.isomorphism and str(r.seminormal_in) == "YesUpTo(3)"
    assert r.consistency_violations == []


def test_classify_identity_and_non_extension():
    r = classify(A.identity())
    assert all(v for v in r.flags().values())
    assert str(r.seminormal_in) == "Yes"
    r = classify(corpus.non_dominant())
    assert not r.extension and r.finite is None and r.seminormal_in is None
    assert r.as_dict()["seminormal_in"] is None


def test_consistency_checker_flags_bugs():
    bad = ClassificationReport(
        extension=True, finite=True, integral=True, birational=False, radicial=True, subintegral=True, isomorphism=False
    )
    assert "subintegral but not birational" in consistency_violations(bad)
    bad = ClassificationReport(
        extension=True, finite=True, integral=True, birational=True, radicial=True, subintegral=False, isomorphism=False
    )
    assert consistency_violations(bad)
    bad = ClassificationReport(
        extension=True,
        finite=True,
        integral=True,
        birational=True,
        radicial=True,
        subintegral=True,
        isomorphism=False,
        seminormal_in=SeminormalityStatus("Yes"),
    )
    assert consistency_violations(bad) == ["finite, radicial and exactly seminormal but not an isomorphism"]


def test_corpus_sweep():
    for name, m in corpus.standard_corpus().items():
        r = classify(m, 3)
        assert r.consistency_violations == [], name


P = PolyRing(("x", "y"))


@settings(max_examples=30, deadline=None, derandomize=True)
@given(polys(P, max_degree=2, max_terms=3))
def test_regular_functions_are_regulous(p):
    b = nu.apply(A.ambient(p.rename_into(A.ambient)))
    assert regulous_member(b, A, nu)
