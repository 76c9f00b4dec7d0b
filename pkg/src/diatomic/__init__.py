"""Exact arithmetic on Stern's diatomic table.

Sequence values and table addressing, the design word algebra, continuants
and continued fractions, nonnegative unimodular matrix words, the assembly
map with exact enclosures, periodic designs with their quadratic
irrationals, and difference-quotient probes at rational points.
"""

from ._backend import BACKEND
from .assembly import (
    Enclosure,
    assembly_dyadic,
    assembly_enclose,
    assembly_inverse,
    assembly_of_rational_theta,
    assembly_theta,
    compose_action,
    question_mark_inverse,
    reflection,
)
from .continuant import (
    cf_eval,
    cf_product_decomposition,
    continuant,
    sdi_corner_continuants,
    sdi_from_runs,
)
from .derivative import (
    QuotientScan,
    Side,
    Verdict,
    affine_derivative_factor,
    derivative_at_rational,
    fib_continuant,
    quotient_scan,
)
from .design import (
    EMPTY,
    Design,
    FiniteDesign,
    PeriodicDesign,
    compose,
    conjugate,
    design_number,
    design_of_theta,
    euclidean_design,
    from_runs,
    inverse_design,
    is_primitive,
    is_reduced,
    make_periodic,
    parse_design,
    partial_quotients,
    realizing_pair,
    reduce,
    runs,
    theta_of,
)
from .matrix import (
    UniModMatrix,
    apply_mobius,
    design_of_matrix,
    matrix_symmetries,
    parse_matrix,
    sdm,
)
from .quadratic import (
    FieldElement,
    Purity,
    QuadIrr,
    SurdState,
    cf_of_root,
    classify_type,
    conjugate_root_design,
    periodic_design_of_sqrt,
    purity_test,
    quad_from_period,
    quad_of_periodic,
    sqrt_cf,
)
from .rational import ExtRational, parse_fraction, parse_ratio
from .sdi import SdiAddress, sdi, sdi_quadruple, stern

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Design",
    "EMPTY",
    "Enclosure",
    "ExtRational",
    "FieldElement",
    "FiniteDesign",
    "PeriodicDesign",
    "Purity",
    "QuadIrr",
    "QuotientScan",
    "SdiAddress",
    "Side",
    "SurdState",
    "UniModMatrix",
    "Verdict",
    "affine_derivative_factor",
    "apply_mobius",
    "assembly_dyadic",
    "assembly_enclose",
    "assembly_inverse",
    "assembly_of_rational_theta",
    "assembly_theta",
    "cf_eval",
    "cf_of_root",
    "cf_product_decomposition",
    "classify_type",
    "compose",
    "compose_action",
    "conjugate",
    "conjugate_root_design",
    "continuant",
    "derivative_at_rational",
    "design_number",
    "design_of_matrix",
    "design_of_theta",
    "euclidean_design",
    "fib_continuant",
    "from_runs",
    "inverse_design",
    "is_primitive",
    "is_reduced",
    "make_periodic",
    "matrix_symmetries",
    "parse_design",
    "parse_fraction",
    "parse_matrix",
    "parse_ratio",
    "partial_quotients",
    "periodic_design_of_sqrt",
    "purity_test",
    "quad_from_period",
    "quad_of_periodic",
    "question_mark_inverse",
    "quotient_scan",
    "realizing_pair",
    "reduce",
    "reflection",
    "runs",
    "sdi",
    "sdi_corner_continuants",
    "sdi_from_runs",
    "sdi_quadruple",
    "sdm",
    "sqrt_cf",
    "stern",
    "theta_of",
]
