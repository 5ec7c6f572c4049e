"""Andrews-Curtis and Nielsen equivalence classes of generating tuples in finite groups.

Exact computations at desk scale: multiplication tables, BFS over
transformation graphs, invariant factors, and unit-group certificates for
metabelian semidirect products.
"""

__version__ = "0.1.0"

from .errors import ACLabError  # noqa: E402
from .groups import (  # noqa: E402
    GroupTable,
    SubgroupSet,
    abelianization,
    builtin_group,
    derived_series,
    group_from_permutations,
    is_soluble,
    normal_closure,
    normal_subgroups,
    quotient,
    rank,
    subgroup_generated,
    w_subgroup,
    weight,
)
from .abelian import (  # noqa: E402
    AbelianInvariants,
    NielsenClass,
    class_count,
    euler_phi_ext,
    invariant_factors,
    nielsen_class,
    nielsen_equivalent,
    smith_normal_form,
)
from .specparse import parse_group_spec  # noqa: E402
