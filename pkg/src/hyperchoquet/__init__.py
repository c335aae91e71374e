"""Conditional-aggregation Choquet integrals computed as Choquet integrals on a hyperspace."""

from .aggregation import (
    INF as INF_OP,
    SUM,
    SUP,
    BarTTable,
    ChoquetOp,
    FCASpec,
    ShilkretOp,
    SugenoOp,
    TTable,
    axiom_check,
    build_bar_T,
    build_T,
    choquet_std,
    cond_agg,
    is_ybar_idempotent,
    shilkret_std,
    sugeno_std,
)
from .hypermeasure import (
    additivity_characterization,
    counting_oracle,
    dual_pair_check,
    find_nonadditive_pair,
    n_mu,
    n_mu_equals,
    n_mu_is_additive,
    n_mu_is_minitive,
    n_mu_is_monotone,
    n_mu_is_submodular,
    n_mu_is_superadditive,
    n_mu_is_supermodular,
    n_mu_table,
    pi_mu_dual,
    strict_cut,
    strongest_oracle,
    weak_cut,
    weakest_oracle,
    zero_set_check,
)
from .integral import (
    IntegralReport,
    StepFunction,
    choquet_properties_check,
    cond_choquet,
    duality_identity_check,
    fusion_integral,
    integrate_all,
    integrate_formula_i,
    integrate_formula_ii,
    integrate_formula_iii,
    integrate_riemann,
    level_measure_plus,
    linearity_witness,
    survival,
    survival_function,
    survival_via_hyper,
)
from .goldens import GOLDENS, Golden, run_examples
from .kernels import BACKEND
from .measures import (
    INF,
    MonotoneMeasure,
    counting_measure,
    dual_measure,
    is_additive,
    is_maxitive,
    is_minitive,
    is_submodular,
    is_superadditive,
    is_supermodular,
    maxitive_from_distribution,
    minitive_from_distribution,
    necessity_from,
    possibility_from,
    range_of,
    strongest_capacity,
    validate_monotone,
    weakest_capacity,
)
from .moebius import MoebiusTable, allocation_cut_check, integrate_moebius, moebius_transform, t_h_atom, zeta, zeta_table
from .problem import Problem, load_problem, parse_problem
from .setcore import SetFamily, Universe, is_closed_under_complements, make_family, powerset_family

__version__ = "0.1.0"
