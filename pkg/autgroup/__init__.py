from autgroup.groups import (
    CLASS_REPRESENTATIVES,
    AutResult,
    GroupClass,
    MatrixGroup,
    classify_group,
    conjugate_group,
    group_closure,
)
from autgroup.search import aut_brute_force, aut_search, is_automorphism
from autgroup.closed_forms import PSI15_F6, PSI15_SEXTIC_COVARIANT, u_f_matrix, xiao_cubic_aut
from autgroup.oracles import ExpectedAut, expected_aut, w_expected

__all__ = [
    "PSI15_F6",
    "PSI15_SEXTIC_COVARIANT",
    "CLASS_REPRESENTATIVES",
    "AutResult",
    "ExpectedAut",
    "GroupClass",
    "MatrixGroup",
    "aut_brute_force",
    "aut_search",
    "classify_group",
    "conjugate_group",
    "expected_aut",
    "group_closure",
    "is_automorphism",
    "u_f_matrix",
    "w_expected",
    "xiao_cubic_aut",
]
