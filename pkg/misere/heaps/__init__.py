from misere.heaps.driver import (
    DriverOptions,
    PartialQuotient,
    extend_one_heap,
    partial_orders,
    solve_octal,
    sweep_repetitions,
)
from misere.heaps.periodicity import PeriodInfo, PeriodPolicy, detect_phi_period
from misere.heaps.transitions import (
    TransitionAlgebra,
    compatibility_masks,
    interpolate_next_heap,
    transition_lower_bounds,
)

__all__ = [
    "DriverOptions",
    "PartialQuotient",
    "PeriodInfo",
    "PeriodPolicy",
    "TransitionAlgebra",
    "compatibility_masks",
    "detect_phi_period",
    "extend_one_heap",
    "interpolate_next_heap",
    "partial_orders",
    "solve_octal",
    "sweep_repetitions",
    "transition_lower_bounds",
]
