"""Shared fixtures for the test suite.

Everything here is built from the bundled 19-task shirt assembly fixture so
individual test modules do not repeat the loading boilerplate. All model
objects are frozen dataclasses, which is what makes session scope safe.
"""
from fractions import Fraction

import pytest

import hangerline as hl

# Station counts the greedy balancer must produce at a 32 seat budget.
EXPECTED_COUNTS_32 = {
    19: 1, 20: 1, 21: 2, 22: 1, 23: 1, 24: 1, 25: 2,
    35: 2, 36: 2, 37: 3, 38: 1, 39: 2, 40: 3, 41: 1,
    42: 2, 43: 2, 44: 2, 45: 2, 46: 1,
}


@pytest.fixture(scope="session")
def main_tasks():
    return hl.load_tasks(hl.fixture_path("shirt_main_assembly.csv"))


@pytest.fixture(scope="session")
def deviations():
    return hl.load_deviations(hl.fixture_path("shirt_deviations.csv"))


@pytest.fixture(scope="session")
def shirt_plan(main_tasks):
    """The 19-task line with the 32 seat budget used throughout."""
    return hl.ProcessPlan(tasks=main_tasks, seat_budget=32)


@pytest.fixture(scope="session")
def baseline_plan(main_tasks):
    """Same line with one seat per task (the pre-improvement layout)."""
    return hl.ProcessPlan(tasks=main_tasks, seat_budget=19)


@pytest.fixture(scope="session")
def balanced(shirt_plan):
    return hl.greedy_balance(shirt_plan)


@pytest.fixture(scope="session")
def devs_plan(main_tasks, deviations):
    """The 32 seat plan with per-task deviations attached to the tasks."""
    merged = tuple(
        hl.Task(
            id=t.id,
            description=t.description,
            cycle_time=t.cycle_time,
            dev_plus=deviations.get(t.id, (Fraction(0), Fraction(0)))[0],
            dev_minus=deviations.get(t.id, (Fraction(0), Fraction(0)))[1],
        )
        for t in main_tasks
    )
    return hl.ProcessPlan(tasks=merged, seat_budget=32)


@pytest.fixture(scope="session")
def tasks_csv_path():
    return str(hl.fixture_path("shirt_main_assembly.csv"))


@pytest.fixture(scope="session")
def deviations_csv_path():
    return str(hl.fixture_path("shirt_deviations.csv"))
