"""Workforce productivity metrics: UPPH, improvement, utilization.

Everything is computed at full precision. Shop reports habitually quote UPPH
truncated to two decimals, and improvement percentages recomputed from those
printed figures differ from the full-precision value; compare() returns both
views side by side so neither number looks like a typo.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .model import (
    Allocation,
    ProcessPlan,
    as_fraction,
    effective_cycle_time,
    line_cycle_time,
    throughput,
)


def truncate_decimals(value, places: int = 2) -> Fraction:
    """Cut a nonnegative value to `places` decimals without rounding.

    This is how the printed figures in shop paperwork are produced
    (30/19 = 1.5789... appears as 1.57, not 1.58).
    """
    value = as_fraction(value)
    if value < 0:
        raise DomainError(f"truncation is defined for nonnegative values, got {value}")
    if places < 0:
        raise DomainError(f"places must be >= 0, got {places}")
    scale = Fraction(10) ** places
    return Fraction(int(value * scale), 1) / scale


def upph(output_per_hour, workers: int) -> Fraction:
    """Units per person-hour: hourly output divided by headcount."""
    output_per_hour = as_fraction(output_per_hour)
    if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
        raise DomainError(f"workers must be an integer >= 1, got {workers!r}")
    if output_per_hour < 0:
        raise DomainError(f"output must be >= 0, got {output_per_hour}")
    return output_per_hour / workers


def eff_improvement(upph_new, upph_base) -> Fraction:
    """Relative UPPH gain: (new - base) / base."""
    upph_new = as_fraction(upph_new)
    upph_base = as_fraction(upph_base)
    if upph_base <= 0:
        raise DomainError(f"baseline UPPH must be > 0, got {upph_base}")
    return (upph_new - upph_base) / upph_base


@dataclass(frozen=True)
class ProductivityReport:
    """Productivity snapshot of one allocation.

    Workers equals total stations (one operator per seat). Utilization is
    effective cycle time over line cycle time per task; the bottleneck sits
    at exactly 1.
    """

    line_cycle_time: Fraction
    output_per_hour: Fraction
    workers: int
    upph: Fraction
    utilization: dict[int, Fraction]
    idle_fraction: dict[int, Fraction]


@dataclass(frozen=True)
class Comparison:
    """Before/after productivity pair.

    improvement is the full-precision UPPH gain. improvement_displayed
    recomputes the gain from both UPPH values truncated to two decimals
    first, matching what a reader of the printed report would calculate.
    output_ratio is the plain throughput multiple, kept separate so a 3x
    output jump is not conflated with the (smaller) UPPH improvement.
    """

    before: ProductivityReport
    after: ProductivityReport
    improvement: Fraction
    improvement_displayed: Fraction
    output_ratio: Fraction


def productivity_report(plan: ProcessPlan, allocation: Allocation) -> ProductivityReport:
    """Compute throughput, UPPH and per-task utilization for an allocation.

    Output is per plan.period (an hour by default).
    """
    ct = line_cycle_time(plan, allocation)
    output = throughput(ct, plan.period)
    workers = sum(allocation.count(t.id) for t in plan.tasks)
    utilization = {
        t.id: effective_cycle_time(t.cycle_time, allocation.count(t.id)) / ct
        for t in plan.tasks
    }
    idle = {task_id: 1 - u for task_id, u in utilization.items()}
    return ProductivityReport(
        line_cycle_time=ct,
        output_per_hour=output,
        workers=workers,
        upph=upph(output, workers),
        utilization=utilization,
        idle_fraction=idle,
    )


def compare(
    plan: ProcessPlan,
    baseline_allocation: Allocation,
    new_allocation: Allocation,
) -> Comparison:
    """Before/after report pair with both improvement views."""
    before = productivity_report(plan, baseline_allocation)
    after = productivity_report(plan, new_allocation)
    improvement = eff_improvement(after.upph, before.upph)
    displayed_base = truncate_decimals(before.upph, 2)
    displayed_new = truncate_decimals(after.upph, 2)
    # a baseline too small to survive truncation leaves only the exact view
    improvement_displayed = (
        eff_improvement(displayed_new, displayed_base) if displayed_base > 0 else improvement
    )
    return Comparison(
        before=before,
        after=after,
        improvement=improvement,
        improvement_displayed=improvement_displayed,
        output_ratio=after.output_per_hour / before.output_per_hour,
    )
