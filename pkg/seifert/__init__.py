# Seifert invariant calculus: classification, monodromy powers, families, periodic maps
from seifert.errors import (
    SeifertError,
    InvalidSeifertDataError,
    NotPeriodicBundleError,
    ExceptionalManifoldError,
    UnitError,
    UnrealizableMapError,
    SeifertInvariantFailure,
)
from seifert.invariants import (
    SeifertData,
    Classification,
    Parity,
    Geometry,
    EUCLIDEAN_TORUS_BUNDLES,
    euler_number,
    orbifold_euler_characteristic,
    is_periodic_bundle,
    require_periodic_bundle,
    classify,
    reverse_orientation,
    unoriented_representative,
    power_monodromy,
    is_exceptional_fibering,
    is_homeomorphic,
    find_distinguishing_k,
    distinguishing_k_guaranteed,
)
from seifert.families import (
    LensInvariants,
    residue_family,
    family_enumerate,
    power_orbit,
    lens_invariants,
)
from seifert.periodic import (
    PeriodicMapData,
    BoundaryCurves,
    periodic_map_from_seifert,
    seifert_from_periodic_map,
    fiber_boundary_data,
)
