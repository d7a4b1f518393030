"""Sandwich centralizer near-rings over finite groups and their 1- and 2-primitivity.

Typical use::

    from sandwich_nearrings import cyclic, automorphism_group, SandwichScheme, cross_check

    g = cyclic(15)
    s = automorphism_group(g)
    orbit = s.orbit(1)
    scheme = SandwichScheme(g, s, tuple(a if a in orbit else 0 for a in g.elements))
    print(cross_check(scheme).summary())   # 1-primitive, not 2-primitive, no identity, |N|=15
"""

from .automorphisms import (
    AutomorphismSet,
    GroupMap,
    automorphism_group,
    closure_as_group,
    fixedpoint_witness,
    identity_map,
    is_automorphism,
    is_endomorphism,
    is_fixedpointfree_on,
    multiplication_map,
    orbit_representatives,
    orbits,
    regular_orbits,
)
from .catalog import alternating4, dicyclic3, dihedral, klein, quaternion, small_groups, symmetric3
from .census import SchemeJob, canonical_recipes, census_record, iter_schemes
from .errors import (
    BadLabeling,
    InternalInconsistency,
    InvalidArgument,
    InvalidOrder,
    InvalidRecipe,
    NearRingError,
    NotAGroup,
    NotEmbeddable,
    NotIsomorphic,
    NotType1,
    ResourceLimit,
    TheoremMismatch,
)
from .groups import (
    FiniteGroup,
    cosets,
    cyclic,
    direct_product,
    from_cayley_table,
    from_elements,
    is_normal,
    is_union_of_cosets,
    normal_subgroups,
    subgroups,
)
from .nearring import (
    AxiomReport,
    IdentityReport,
    IsomorphismCertificate,
    NearRing,
    build_annihilating_nearring,
    centralizer_nearring,
    enumerate_centralizer_nearring,
    identities,
    identities_from_tables,
    is_ring,
    is_ring_bruteforce,
    nr_add,
    nr_mul,
    restriction_isomorphism,
    sandwich_nearring,
    transformation_nearring,
    verify_axioms,
    verify_isomorphism,
)
from .ngroup import (
    NGroupAction,
    TypeVerdict,
    action_from_scheme,
    action_from_transformation,
    aut_n,
    classify,
    equiv_classes,
    generators_split,
    invariant_representatives,
    is_faithful,
    is_n_ideal,
    n_ideals,
    n_subgroups,
    natural_action,
)
from .primitivity import (
    Embedding,
    PrimitivityVerdict,
    PropertyPReport,
    compute_c,
    cross_check,
    density_check,
    direct_verdict,
    embed,
    property_p,
    theorem_verdict,
)
from .sandwich import (
    PhiRecipe,
    SandwichScheme,
    ValidationReport,
    build_phi,
    decompose_phi,
    gamma0,
    identity_scheme,
    trivial_autos,
    validate_scheme,
)

__version__ = "0.1.0"
