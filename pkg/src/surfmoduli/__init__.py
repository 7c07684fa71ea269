"""surfmoduli: exact searches and invariant calculators around surfaces
isogenous to a product, bidouble covers, branch-set equivalence, and braid
monodromy factorizations.

The package is organized as:

* :mod:`surfmoduli.groups`    finite permutation-group arithmetic
* :mod:`surfmoduli.catalog`   built-in groups, names, and the group file format
* :mod:`surfmoduli.triangles` generating triples as triangle curves
* :mod:`surfmoduli.beauville` Beauville structures, searches and scans
* :mod:`surfmoduli.invariants` numerical invariants of surfaces
* :mod:`surfmoduli.bidouble`  bidouble/abc types, diffeo and non-deformation tests
* :mod:`surfmoduli.moebius`   rational Moebius equivalence of branch sets
* :mod:`surfmoduli.braids`    braid words, Hurwitz moves, node pairs, orbits
* :mod:`surfmoduli.cli`       the ``surfmoduli`` command-line tool
"""

from .beauville import (
    BeauvilleStructure,
    ScanRow,
    is_beauville_pair,
    isogenous_invariants,
    scan,
    search,
    structure_invariants,
)
from .bidouble import (
    AbcType,
    BidoubleInvariants,
    BidoubleType,
    NondefReport,
    TypeClassification,
    abc_invariants,
    bidouble_invariants,
    diffeo_equivalent,
    diffeo_step,
    enumerate_types,
    nondef_predicate,
)
from .braids import (
    BraidWord,
    Factorization,
    OrbitResult,
    braid_equal,
    canonical_key,
    hurwitz_move,
    hurwitz_move_inverse,
    hurwitz_orbit,
    m_equivalence_orbit,
    node_pair_move,
    product,
    simultaneous_conjugation,
)
from .catalog import (
    abelian_catalog,
    alternating,
    builtin,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    from_file,
    psl2,
    resolve,
    symmetric,
    to_file,
)
from .errors import (
    AutBoundExceeded,
    BudgetExceeded,
    CancelMismatch,
    DegreeMismatch,
    ExcludedParameter,
    GroupMismatch,
    NonIntegralChi,
    NonIntegralGenus,
    OrderBoundExceeded,
    PositionOutOfRange,
    SizeMismatch,
    StrandMismatch,
    SurfModuliError,
)
from .groups import (
    AUT_BOUND,
    ORDER_BOUND,
    ConjugacyClass,
    GroupMap,
    PermGroup,
    Permutation,
    close,
    order_of,
)
from .invariants import SurfaceInvariants
from .moebius import (
    BranchSet,
    MoebiusMap,
    ProjPoint,
    apply_map,
    family_branch_set,
    moebius_equivalent,
)
from .triangles import (
    SphericalTriple,
    TripleType,
    branch_permutation_orbit,
    enumerate_triples,
    genus,
    is_hyperbolic,
    sigma_set,
    triples_equivalent,
)

__version__ = "0.1.0"
