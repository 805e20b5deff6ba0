"""Exact classification of the subalgebras of so(4,C) up to inner automorphism.

Quick start::

    from so4 import H1, H2, X1, span_close, classify
    label = classify(span_close([X1, H1 + 2 * H2]))
    print(label.name())            # K2^2[a^2=4]

Everything is computed over the Gaussian rationals Q(i) with no floating
point: scalars, brackets, echelon bases, derived series, Killing forms,
radicals, Levi factors, inner automorphisms, and adjoint-module
decompositions.
"""

from .scalars import Scalar, parse_scalar, render_scalar, sqrt_in_field
from .liecore import (
    BASIS,
    COORD_NAMES,
    H1,
    H2,
    X1,
    X2,
    Y1,
    Y2,
    DerivedSeries,
    Element,
    FactorComponent,
    InternalInconsistencyError,
    NotClosedError,
    Sl2ElementType,
    Subalgebra,
    ad_matrix,
    bracket,
    component_types,
    derived_series,
    derived_subalgebra,
    element_from_matrix,
    factor_component,
    factor_intersection,
    factor_projection,
    is_solvable,
    killing_form,
    killing_is_nondegenerate,
    levi_factor,
    matrix_form,
    radical,
    sl2_element_type,
    span_close,
)
from .catalog import (
    ABSTRACT_TYPES,
    AbstractSolvableType,
    ClassLabel,
    NonconstructibleOverFieldError,
    NotSolvableError,
    Representative,
    UnsupportedDimensionError,
    abstract_type_of,
    catalog_from_json,
    catalog_to_json,
    enumerate_catalog,
    load_catalog_file,
    representative_of,
    type_l3,
)
from .classify import StructuralProfile, classify, structural_profile
from .conjugacy import (
    InnerAutomorphism,
    apply,
    apply_subalgebra,
    equivalent,
    factor_swap,
    factor_swap_subalgebra,
    find_witness,
    random_inner,
)
from .modulerep import (
    ModuleDecomposition,
    NotATripleError,
    Sl2Triple,
    adjoint_decompose,
    extension_candidates,
    standard_triple,
)
from .verify import VerificationReport, expected_swap_label, verify_tables

__version__ = "0.1.0"
