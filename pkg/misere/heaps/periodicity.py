"""Observed periodicity of pretending functions.

Nothing here is a proof: a period is reported once the solved prefix shows
enough repetitions. Every value is read in the final quotient, so a change
of partial quotient inside the tail does not disqualify it.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from pydantic import BaseModel

from misere.config import settings
from misere.games.codes import OctalCode


class PeriodPolicy(BaseModel):
    multiplier: int = 2
    move_margin: bool = False

    @classmethod
    def from_settings(cls) -> "PeriodPolicy":
        return cls(multiplier=settings.period_multiplier, move_margin=settings.period_move_margin)


@dataclass(frozen=True)
class PeriodInfo:
    start: int  # first heap of the periodic tail, 1-based
    period: int
    status: str = "observed"

    @property
    def preperiod(self) -> int:
        return self.start - 1


def detect_phi_period(
    phi: Sequence[int],
    code: OctalCode | None = None,
    policy: PeriodPolicy | None = None,
) -> PeriodInfo | None:
    """Smallest period, then earliest start, satisfying the acceptance policy.

    The tail must cover ``multiplier`` periods, plus the largest move when
    the move margin is on.
    """
    policy = policy or PeriodPolicy.from_settings()
    total = len(phi)
    margin = (code.max_move() or 0) if (policy.move_margin and code is not None) else 0
    for p in range(1, total + 1):
        start = 1
        for k in range(total - p, 0, -1):
            if phi[k - 1] != phi[k + p - 1]:
                start = k + 1
                break
        tail = total - start + 1
        if tail < policy.multiplier * p + margin:
            continue
        return PeriodInfo(start, p)
    return None
