"""Backend selection for the table kernels.

The compiled extension is preferred when present; NILSPEC_KERNEL=python
forces the portable NumPy backend (useful for benchmarking and debugging).
"""

import os

if os.environ.get("NILSPEC_KERNEL", "").lower() in {"py", "python", "portable"}:
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND

validate_tables = _impl.validate_tables
sampled_law_violation = _impl.sampled_law_violation
find_identity_index = _impl.find_identity_index
negation_vector = _impl.negation_vector
additive_order_vector = _impl.additive_order_vector
sumset_mask = _impl.sumset_mask
additive_closure_mask = _impl.additive_closure_mask
absorb_seed_mask = _impl.absorb_seed_mask
ideal_violation = _impl.ideal_violation
prime_violation = _impl.prime_violation
nilpotent_mask = _impl.nilpotent_mask
psi_mask = _impl.psi_mask
hom_violation = _impl.hom_violation
idempotent_indices = _impl.idempotent_indices
