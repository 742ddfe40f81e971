"""Test ideals of principal pairs over finite fields, with Bertini-type checks."""

__version__ = "0.1.0"

from .ff import GF, FieldDescriptor, FieldElement, FieldMismatchError
from .poly import ParseError, Polynomial, PolynomialRing, polynomial_ring
from .groebner import (
    DEFAULT_DEGREE_GUARD,
    DegreeGuardExceeded,
    Ideal,
    groebner_basis,
    ideal_contains,
    ideal_equal,
    ideal_member,
    normal_form,
)
from .frobenius import (
    FrobeniusDecomposition,
    PairSpec,
    SlotBudgetExceeded,
    ZeroPolynomialError,
    decompose,
    product_pair_generators,
    projective_chart_test_ideal,
    recompose,
    test_ideal,
    trace,
)
from .bertini import (
    BertiniVerdict,
    FamilyInstance,
    LinearForm,
    ScanReport,
    augmentation_test,
    dim2_probe,
    dim4_family,
    homogeneous_detect,
    hyperplane_scan,
    lines_family,
    restriction_test,
    slice_independence,
)

__all__ = [
    "GF",
    "FieldDescriptor",
    "FieldElement",
    "FieldMismatchError",
    "ParseError",
    "Polynomial",
    "PolynomialRing",
    "polynomial_ring",
    "DEFAULT_DEGREE_GUARD",
    "DegreeGuardExceeded",
    "Ideal",
    "groebner_basis",
    "ideal_contains",
    "ideal_equal",
    "ideal_member",
    "normal_form",
    "FrobeniusDecomposition",
    "PairSpec",
    "SlotBudgetExceeded",
    "ZeroPolynomialError",
    "decompose",
    "product_pair_generators",
    "projective_chart_test_ideal",
    "recompose",
    "test_ideal",
    "trace",
    "BertiniVerdict",
    "FamilyInstance",
    "LinearForm",
    "ScanReport",
    "augmentation_test",
    "dim2_probe",
    "dim4_family",
    "homogeneous_detect",
    "hyperplane_scan",
    "lines_family",
    "restriction_test",
    "slice_independence",
]
