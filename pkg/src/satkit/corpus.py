"""Reference morphisms: the nodal cubic family, the cusp and a few controls."""

from __future__ import annotations

from satkit.algebra import AffineAlgebra, AlgebraMorphism, make_algebra

NODE = "y^2 - x^2*(x+1)"
NORMALIZATION = "z^2 - (x+1)"
PUNCTURE = "s*(z-1) - 1"


def nodal_curve(extra: tuple[str, ...] = ()) -> AffineAlgebra:
    return make_algebra(("x", "y") + extra, [NODE], "A" + _suffix(extra))


def nodal_normalization(extra: tuple[str, ...] = ()) -> AffineAlgebra:
    return make_algebra(("x", "z") + extra, [NORMALIZATION], "A'" + _suffix(extra))


def punctured_normalization(extra: tuple[str, ...] = ()) -> AffineAlgebra:
    return make_algebra(("x", "z", "s") + extra, [NORMALIZATION, PUNCTURE], "B" + _suffix(extra))


def _suffix(extra: tuple[str, ...]) -> str:
    return f"[{','.join(extra)}]" if extra else ""


def node_to_normalization(extra: tuple[str, ...] = ()) -> AlgebraMorphism:
    """``A -> A'``, ``(x, y) -> (x, x*z)``."""
    return AlgebraMorphism(nodal_curve(extra), nodal_normalization(extra), ["x", "x*z", *extra])


def node_to_punctured(extra: tuple[str, ...] = ()) -> AlgebraMorphism:
    """``A -> B``: the normalization with one point over the node removed."""
    return AlgebraMorphism(nodal_curve(extra), punctured_normalization(extra), ["x", "x*z", *extra])


def normalization_to_punctured(extra: tuple[str, ...] = ()) -> AlgebraMorphism:
    return AlgebraMorphism(nodal_normalization(extra), punctured_normalization(extra), ["x", "z", *extra])


def cusp() -> AffineAlgebra:
    return make_algebra(("u", "v"), ["v^2 - u^3"], "Ac")


def cusp_normalization() -> AlgebraMorphism:
    """``QQ[u,v]/(v^2 - u^3) -> QQ[t]``, ``(u, v) -> (t^2, t^3)``."""
    return AlgebraMorphism(cusp(), make_algebra(("t",), (), "QQ[t]"), ["t^2", "t^3"])


def parabola_isomorphism() -> AlgebraMorphism:
    return AlgebraMorphism(make_algebra(("u", "v"), ["v - u^2"], "P"), make_algebra(("t",), (), "QQ[t]"), ["t", "t^2"])


def non_dominant() -> AlgebraMorphism:
    """``QQ[u,v] -> QQ[x]``, ``(u, v) -> (x, 0)``: kernel ``(v)``."""
    return AlgebraMorphism(make_algebra(("u", "v"), (), "QQ[u,v]"), make_algebra(("x",), (), "QQ[x]"), ["x", "0"])


def double_cover() -> AlgebraMorphism:
    """``QQ[u] -> QQ[t]``, ``u -> t^2``."""
    return AlgebraMorphism(make_algebra(("u",), (), "QQ[u]"), make_algebra(("t",), (), "QQ[t]"), ["t^2"])


def standard_corpus() -> dict[str, AlgebraMorphism]:
    A = nodal_curve()
    line = make_algebra(("t",), (), "QQ[t]")
    return {
        "identity-node": A.identity(),
        "identity-line": line.identity(),
        "node-normalization": node_to_normalization(),
        "punctured-node": node_to_punctured(),
        "normalization-to-punctured": normalization_to_punctured(),
        "cusp-normalization": cusp_normalization(),
        "punctured-node-x-A1": node_to_punctured(("t",)),
        "punctured-node-x-A2": node_to_punctured(("t1", "t2")),
        "node-normalization-x-A1": node_to_normalization(("t",)),
        "parabola-isomorphism": parabola_isomorphism(),
        "non-dominant": non_dominant(),
        "double-cover": double_cover(),
    }
