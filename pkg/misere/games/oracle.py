"""Brute-force oracles: normal-play Grundy values and misère outcomes.

Both are memoized per rule set. The outcome memo is keyed on positions with
dead symbols removed, since a moveless heap is the game 0.
"""

import logging
from collections.abc import Iterator
from enum import Enum

from misere.config import settings
from misere.core.exceptions import BudgetExceededError
from misere.games.rules import Position, RuleSet, iter_heap_positions, position_options

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    P = "P"  # previous player wins
    N = "N"  # next player wins


def mex(values: set[int]) -> int:
    m = 0
    while m in values:
        m += 1
    return m


class OutcomeOracle:
    """Memoized Grundy and misère outcome computations for one rule set.

    Not thread-safe; keep one oracle per thread of control.
    """

    def __init__(self, rules: RuleSet, follower_budget: int | None = None):
        self.rules = rules
        self.follower_budget = follower_budget or settings.follower_budget
        self._grundy: list[int] = []
        self._is_p: dict[Position, bool] = {}

    def symbol_grundy(self, index: int) -> int:
        while len(self._grundy) <= index:
            i = len(self._grundy)
            values = {self.grundy(o) for o in self.rules.generator_options(i)}
            self._grundy.append(mex(values))
        return self._grundy[index]

    def grundy(self, x: Position) -> int:
        """Nim-sum of the symbol values; odd multiplicities only."""
        g = 0
        for i, c in enumerate(x.counts):
            if c & 1:
                g ^= self.symbol_grundy(i)
        return g

    def strip_dead(self, x: Position) -> Position:
        if not any(c and self.rules.is_dead(i) for i, c in enumerate(x.counts)):
            return x
        return Position(
            tuple(0 if self.rules.is_dead(i) else c for i, c in enumerate(x.counts))
        )

    def is_p(self, x: Position) -> bool:
        """True iff x is a misère P-position."""
        self.rules.check(x)
        root = self.strip_dead(x)
        memo = self._is_p
        if root in memo:
            return memo[root]

        pending_options: dict[Position, list[Position]] = {}
        stack = [root]
        while stack:
            y = stack[-1]
            if y in memo:
                stack.pop()
                continue
            opts = pending_options.get(y)
            if opts is None:
                opts = [self.strip_dead(o) for o in position_options(self.rules, y)]
                pending_options[y] = opts
            unresolved = [o for o in opts if o not in memo]
            if unresolved:
                stack.extend(unresolved)
                continue
            # no options: the player to move has won already
            memo[y] = bool(opts) and not any(memo[o] for o in opts)
            del pending_options[y]
            stack.pop()
            if len(memo) > self.follower_budget:
                raise BudgetExceededError(
                    f"outcome oracle exceeded {self.follower_budget} followers",
                    budget="followers",
                    frontier=y,
                )
        return memo[root]

    def outcome(self, x: Position) -> Outcome:
        return Outcome.P if self.is_p(x) else Outcome.N

    def sweep(
        self, max_beans: int, max_heaps: int | None = None
    ) -> Iterator[tuple[Position, bool]]:
        """(position, is_p) for every heap position up to max_beans beans."""
        if self.rules.kind != "heap":
            raise ValueError("bean sweeps only apply to heap games")
        limit = min(max_beans, self.rules.size)
        for x in iter_heap_positions(max_beans, limit, max_heaps):
            yield x, self.is_p(x)


def grundy_value(rules: RuleSet, x: Position) -> int:
    return rules.oracle().grundy(x)


def misere_outcome(rules: RuleSet, x: Position) -> Outcome:
    return rules.oracle().outcome(x)
