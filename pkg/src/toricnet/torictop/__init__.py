from .bridge import crn_to_toric
from .charnum import (
    MxiClass,
    chern_numbers,
    class_power,
    class_product,
    complete_class,
    elementary_class,
    hamiltonian_numbers,
    linear_class,
    mxi_numbers,
)
from .complexes import (
    SimplicialComplex,
    ValidityReport,
    boundary_simplex,
    join_complexes,
    orientation_signs,
    sphere_battery,
)
from .delzant import DelzantPolytope, delzant_to_quasitoric, polytope_vertices
from .quasitoric import (
    EvalContext,
    QuasitoricData,
    cpn_data,
    eval_context,
    facet_determinant,
    product_data,
    top_evaluate,
    validate_quasitoric,
)

__all__ = [
    "DelzantPolytope",
    "EvalContext",
    "MxiClass",
    "QuasitoricData",
    "SimplicialComplex",
    "ValidityReport",
    "boundary_simplex",
    "chern_numbers",
    "class_power",
    "class_product",
    "complete_class",
    "cpn_data",
    "crn_to_toric",
    "delzant_to_quasitoric",
    "elementary_class",
    "eval_context",
    "facet_determinant",
    "hamiltonian_numbers",
    "join_complexes",
    "linear_class",
    "mxi_numbers",
    "orientation_signs",
    "polytope_vertices",
    "product_data",
    "sphere_battery",
    "top_evaluate",
    "validate_quasitoric",
]
