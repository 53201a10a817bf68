"""Line balancing, productivity metrics, uncertainty bounds and discrete-event
simulation for one-piece-flow hanger sewing lines."""
from .balancer import BalanceResult, exhaustive_balance, greedy_balance, optimal_balance
from .errors import (
    DomainError,
    InfeasibleError,
    InstanceTooLargeError,
    InvariantError,
    ParseError,
)
from .io import (
    RunConfig,
    emit_plot_data,
    emit_report,
    emit_tasks,
    fixture_path,
    format_number,
    format_percent,
    format_seconds,
    format_upph,
    load_deviations,
    load_run_config,
    load_tasks,
    parse_deviations,
    parse_report,
    parse_run_config,
    parse_tasks,
    report_from_dict,
    report_to_dict,
)
from .metrics import (
    Comparison,
    ProductivityReport,
    compare,
    eff_improvement,
    productivity_report,
    truncate_decimals,
    upph,
)
from .model import (
    SECONDS_PER_HOUR,
    Allocation,
    LineStats,
    ProcessPlan,
    Task,
    as_fraction,
    bottleneck_tasks,
    classic_lower_bound,
    effective_cycle_time,
    line_cycle_time,
    line_stats,
    parallel_lower_bound,
    throughput,
    work_content,
)
from .robust import (
    CtInterval,
    RobustReport,
    alpha_sweep,
    ct_interval,
    effective_intervals,
    robust_line_report,
)
from .simulator import (
    SimConfig,
    SimResult,
    VerifyCheck,
    VerifyResult,
    WipSample,
    queue_trend,
    simulate,
    verify_against_static,
)

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "BalanceResult",
    "Comparison",
    "CtInterval",
    "DomainError",
    "InfeasibleError",
    "InstanceTooLargeError",
    "InvariantError",
    "LineStats",
    "ParseError",
    "ProcessPlan",
    "ProductivityReport",
    "RobustReport",
    "RunConfig",
    "SECONDS_PER_HOUR",
    "SimConfig",
    "SimResult",
    "Task",
    "VerifyCheck",
    "VerifyResult",
    "WipSample",
    "alpha_sweep",
    "as_fraction",
    "bottleneck_tasks",
    "classic_lower_bound",
    "compare",
    "ct_interval",
    "eff_improvement",
    "effective_cycle_time",
    "effective_intervals",
    "emit_plot_data",
    "emit_report",
    "emit_tasks",
    "exhaustive_balance",
    "fixture_path",
    "format_number",
    "format_percent",
    "format_seconds",
    "format_upph",
    "greedy_balance",
    "line_cycle_time",
    "line_stats",
    "load_deviations",
    "load_run_config",
    "load_tasks",
    "optimal_balance",
    "parallel_lower_bound",
    "parse_deviations",
    "parse_report",
    "parse_run_config",
    "parse_tasks",
    "productivity_report",
    "queue_trend",
    "report_from_dict",
    "report_to_dict",
    "robust_line_report",
    "simulate",
    "throughput",
    "truncate_decimals",
    "upph",
    "verify_against_static",
    "work_content",
]
