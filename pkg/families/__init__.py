from families.eisenstein import EisensteinValue
from families.trig_minpoly import (
    c_of_n,
    constant_coeff_formula,
    cyclotomic,
    eval_cyclotomic_at_zeta6,
    field_discriminant,
    is_reciprocal,
    pi_degree,
    pi_form,
    pi_galois,
    pi_roots,
    psi,
    psi_form,
    psi_galois,
    psi_one_bound_holds,
    psi_roots,
    trace_stats,
)
from families.chebyshev import (
    chebyshev_T,
    chebyshev_U,
    factor_u_tilde,
    factor_v_tilde,
    t_form,
    u_form,
    u_tilde,
    v_tilde,
)

__all__ = [
    "EisensteinValue",
    "c_of_n",
    "chebyshev_T",
    "chebyshev_U",
    "constant_coeff_formula",
    "cyclotomic",
    "eval_cyclotomic_at_zeta6",
    "factor_u_tilde",
    "factor_v_tilde",
    "field_discriminant",
    "is_reciprocal",
    "pi_degree",
    "pi_form",
    "pi_galois",
    "pi_roots",
    "psi",
    "psi_form",
    "psi_galois",
    "psi_one_bound_holds",
    "psi_roots",
    "t_form",
    "trace_stats",
    "u_form",
    "u_tilde",
    "v_tilde",
]
