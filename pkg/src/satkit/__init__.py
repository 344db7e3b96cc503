"""Exact saturation, radiciality and seminormality checks for morphisms of affine varieties over QQ."""

from satkit.algebra import (
    AffineAlgebra,
    AlgebraError,
    AlgebraMorphism,
    CompositionMismatch,
    ImproperIdeal,
    NotAnExtension,
    NotWellDefined,
    generic_degree,
    is_birational,
    is_extension,
    is_finite,
    is_integral_element,
    is_integral_morphism,
    make_algebra,
    make_morphism,
)
from satkit.classify import (
    ClassificationReport,
    NotANormalization,
    NotIntegral,
    SeminormalityStatus,
    classify,
    is_isomorphism,
    is_subintegral,
    regulous_member,
    seminormality_status,
)
from satkit.groebner import GroebnerBasis, buchberger, groebner, is_groebner, normal_form, reduce_basis, s_polynomial
from satkit.ideals import Ideal, eliminate, ideal_member, kernel_of_morphism, radical_member, subalgebra_member
from satkit.poly import (
    MonomialOrder,
    Polynomial,
    PolyRing,
    Rational,
    RingMismatchError,
    evaluate_poly,
    monomial_compare,
    poly_arith,
)
from satkit.saturation import (
    ScanReport,
    TensorSquare,
    delta,
    in_saturation,
    is_radicial_extension,
    is_radicial_sequence,
    saturation_scan,
    saturation_verdict,
    tensor_square,
)

__version__ = "0.1.0"
