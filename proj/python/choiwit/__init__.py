"""Non-Markovianity witnesses from Choi-matrix entropies."""

from ._core import (
    DephasingParams,
    PoleError,
    Regime,
    WitnessSample,
    chi_t,
    choi_closed_form,
    choi_from_superop,
    dephasing_intermediate_map,
    gamma_antiderivative,
    gamma_t,
    hermitian_eigen,
    intermediate_map,
    kron,
    lindblad_action,
    linear_entropy,
    linear_entropy_closed_form,
    matrix_power_int,
    max_entangled_state,
    measure_ne,
    measure_ns,
    pole_locations,
    q_closed_form,
    random_cptp,
    random_kraus_set,
    renyi_entropy,
    sur_product_gap,
    sur_q,
    witness_scan,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
