from invariants.area import AreaResult, Divergent, area_fundamental
from invariants.counting import count_represented
from invariants.lattice import lattice_determinant, w_f
from invariants.report import InvariantReport, c_f

__all__ = [
    "AreaResult",
    "Divergent",
    "InvariantReport",
    "area_fundamental",
    "c_f",
    "count_represented",
    "lattice_determinant",
    "w_f",
]
