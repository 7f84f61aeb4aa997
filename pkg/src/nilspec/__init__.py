"""Prime spectra of finite commutative rngs and their nil compactifications.

The package builds finite commutative rings (identity optional) from
explicit tables, computes ideals, primes and Zariski spectra, and carries
out the compactification of the spectrum of an embedded ideal through the
transfer of its nilradical, together with machine checks of the functorial
structure of that construction. One lazily presented infinite Boolean rng
is handled by decision procedures instead of enumeration.
"""

from .booleanrng import (
    UPair,
    bool_add,
    bool_mul,
    infinity_point_count,
    noncompactness_witness,
    prime_at,
    psi0_decide,
    truncate,
)
from .errors import (
    NilspecError,
    NotEMorphismError,
    NotHomomorphismError,
    NotIdealError,
    RingAxiomError,
    SearchBudgetError,
    SizeLimitError,
    SpecParseError,
    VerificationFault,
)
from .ideals import (
    Ideal,
    PrimeIdeal,
    basic_open,
    enumerate_ideals,
    generated_ideal,
    is_prime,
    kernel_of,
    nilradical,
    spectrum,
    vanishing,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .nilcomp import (
    EtaResult,
    NilcompResult,
    canonical_extension,
    compare_compactifications,
    eta,
    modulus_independence,
    nc_of_hom,
    nilcompactification,
    psi,
    psi_spec,
    q_of_hom,
    reduce_mod_nil,
    spec_open_checks,
    universal_arrow,
    verify_naturality,
)
from .rng import (
    EMorphism,
    FiniteRng,
    IExtension,
    RngHom,
    additive_exponent,
    build_product,
    build_table,
    build_zmod,
    check_e_morphism,
    enumerate_homs,
    find_identity,
    find_isomorphism,
    ideal_subrng,
    make_hom,
    make_rng,
    quotient,
    subring_extension,
    unitization,
)
from .spaces import (
    FiniteSpace,
    SpaceMap,
    homeomorphic,
    is_spectral,
    spec_space,
    strongly_continuous,
    to_dot,
)

__version__ = "0.1.0"
