"""Exact calculator for the homotopy theory of gauge groups over
S^3-bundles over S^4.

The library classifies principal G-bundles over these 7-manifolds,
decides homotopy equivalence of the total spaces, produces canonical
symbolic decompositions of their gauge groups, computes homotopy groups
of gauge groups from curated tables, and cross-checks its closed-form
homology against an independent Smith-normal-form oracle.
"""

from .abelian import (
    AbGroup,
    Prime,
    direct_sum,
    is_isomorphic,
    localize,
    make_group,
    parse_group,
    tensor_with_cyclic,
    tor_with_cyclic,
    vp,
)
from .bundles import (
    BundleClass,
    classify_bundles,
    projection_induced_map_kind,
    reduce_class,
)
from .errors import (
    BundleGaugeError,
    LocalityError,
    OutOfScopeError,
    UnknownValueError,
)
from .gauge import (
    DecompositionResult,
    GaugeQuery,
    decompose_plocal,
    decompose_pointed_m0,
    decompose_unpointed_m0,
    pi0_unpointed_gauge_m0,
    pi0_unpointed_gauge_plocal,
    pi_of_expr,
    pi_pointed_gauge_m0,
    pi_pointed_gauge_plocal,
    pi_with_coefficients,
    run_query,
    s7_decompose_trivial,
    s7_gauge_equivalent,
    su5_gauge_equivalent_m0,
)
from .manifolds import (
    ManifoldSpec,
    cofibre_of_bottom_cell,
    homology,
    is_homotopy_equivalent,
    normalize,
    skeleton4,
    suspension,
    suspension_plocal,
    twist_class,
)
from .oracle import (
    ChainComplex,
    IntMatrix,
    complex_for_manifold,
    homology_of,
    parse_complex,
    smith_normal_form,
)
from .tables import (
    LieGroupId,
    PiTable,
    default_table,
    pi6,
    pi6_moore,
    pi_lie,
    pi_sphere,
)

__version__ = "0.1.0"
