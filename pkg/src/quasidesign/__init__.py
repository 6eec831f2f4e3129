"""Recursively differentiable quasigroups, recursive MDS codes and perfect
Mendelsohn designs."""
from .algebra import (
    Degree,
    Groupoid,
    QuasigroupReport,
    classify,
    cyclic_group,
    differentiability_degree,
    is_recursively_n_differentiable,
    make_groupoid,
    recursive_derivative,
)
from .bounds import bounds_report, degree_lower_bound
from .codes import (
    code_distance,
    generate_recursive_code,
    hamming_distance,
    summarize,
    theorem1_crosscheck,
)
from .constructions import construct_26_pmd, construct_26_quasigroup, develop
from .designs import (
    Block,
    Cycle,
    MendelsohnDesign,
    check_characterization,
    cyclic_decomposition,
    directed_standard_construction,
    perfectness,
    t_apart_pairs,
    verify_design,
)
from .search import search_pmd

__version__ = "0.1.0"
