"""liespec: exact truncated Laplace spectra.

Flat tori, bi-invariant metrics on compact semisimple Lie groups, and
naturally reductive metrics built from a subgroup embedding, all in exact
rational arithmetic.  Every public operation is pure and every public type
is immutable, so results are safe to share across threads and are
reproducible bit for bit.
"""

__version__ = "0.1.0"

from .branching import (
    BranchingResult,
    EmbeddingSpec,
    branch,
    embedding_index,
    killing_ratio,
    restriction_norm_bound_sq,
    spherical_mult,
    validate_embedding,
)
from .errors import (
    DomainError,
    InadmissibleMetricError,
    LiespecError,
    MalformedEmbeddingError,
    UnsupportedDimensionError,
)
from .groups import (
    GroupSpec,
    biinvariant_spectrum,
    center_admissible,
    factor_lambda1,
    normal_quotient_spectrum,
)
from .isolation import (
    GammaVector,
    finiteness_window,
    gamma_invariants,
    homothety_invariant,
    isolation_scan,
    torus_search,
)
from .lattices import (
    Lattice,
    congruent,
    reduce_basis,
    short_vectors,
    systole,
    torus_lambda1,
    torus_spectrum,
)
from .natred import (
    BiInvariantOperator,
    NatRedMetric,
    beta_factors,
    containment_check,
    f_map,
    f_map_inverse,
    natred_eigenvalue,
    natred_spectrum,
    natred_terms,
)
from .rootdata import RootSystemData, build, casimir, killing_dual_ip
from .spectrum import SpectrumTable, table_distance
from .weights import (
    dominant_weights_up_to,
    weight_diagram,
    weyl_dim,
)

__all__ = [
    "BiInvariantOperator",
    "BranchingResult",
    "DomainError",
    "EmbeddingSpec",
    "GammaVector",
    "GroupSpec",
    "InadmissibleMetricError",
    "Lattice",
    "LiespecError",
    "MalformedEmbeddingError",
    "NatRedMetric",
    "RootSystemData",
    "SpectrumTable",
    "UnsupportedDimensionError",
    "beta_factors",
    "biinvariant_spectrum",
    "branch",
    "build",
    "casimir",
    "center_admissible",
    "congruent",
    "containment_check",
    "dominant_weights_up_to",
    "embedding_index",
    "f_map",
    "f_map_inverse",
    "factor_lambda1",
    "finiteness_window",
    "gamma_invariants",
    "homothety_invariant",
    "isolation_scan",
    "killing_dual_ip",
    "killing_ratio",
    "natred_eigenvalue",
    "natred_spectrum",
    "natred_terms",
    "normal_quotient_spectrum",
    "reduce_basis",
    "restriction_norm_bound_sq",
    "short_vectors",
    "spherical_mult",
    "systole",
    "table_distance",
    "torus_lambda1",
    "torus_search",
    "torus_spectrum",
    "validate_embedding",
    "weight_diagram",
    "weyl_dim",
    "__version__",
]
