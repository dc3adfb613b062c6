from ._hermcert import (
    Form,
    base_divisor_factor,
    bergman_asymptotics,
    blowup_chain,
    cm_psd_onset,
    distinguished_signature,
    eval_diag,
    eval_diag_exact,
    from_matrix_json,
    is_psd,
    jet_check_p1,
    modulus_ratio_exact_diagonal,
    norm_power,
    parse,
    pullback,
    qsn_decide_p1,
    quillen_minimal_exponent,
    sgcs_check,
    signature,
    to_matrix_json,
)

__all__ = [
    "Form",
    "base_divisor_factor",
    "bergman_asymptotics",
    "blowup_chain",
    "cm_psd_onset",
    "distinguished_signature",
    "eval_diag",
    "eval_diag_exact",
    "from_matrix_json",
    "is_psd",
    "jet_check_p1",
    "modulus_ratio_exact_diagonal",
    "norm_power",
    "parse",
    "pullback",
    "qsn_decide_p1",
    "quillen_minimal_exponent",
    "sgcs_check",
    "signature",
    "to_matrix_json",
]
