"""Sublinear-sample Euclidean mean estimation.

Thin wrapper over the C++ core: batched uniform sampling plus the
gradient-descent (fastgd) and order-statistics (minsum) aggregators,
baseline estimators, instance generators, and the experiment harness.
"""

from meanest._core import (  # noqa: F401
    CandidateMeans,
    ConfigError,
    CostOracle,
    EstimateResult,
    EstimatorConfig,
    GDTrace,
    Instance,
    IoError,
    PointSet,
    WeiszfeldResult,
    approx_ratio,
    compute_winner,
    coordinate_median,
    cost,
    decomposition_check,
    draw_candidate_means,
    empirical_mean_estimate,
    estimate,
    exact_oracle,
    fastgd,
    gen_empirical_mean_lb,
    gen_gaussian,
    gen_pareto_tail,
    gen_two_cluster,
    gen_two_point_lb,
    geo_median_gradient,
    is_eps_approx,
    mean,
    median_1d,
    minsum_select,
    paper_preset_gd,
    paper_preset_minsum,
    practical_preset,
    read_point_set,
    run_experiment_json,
    select_kth,
    truncated_distance_sums,
    weiszfeld,
    write_point_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
