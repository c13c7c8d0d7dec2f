"""Octal codes.

A code d0.d1d2d3... describes a heap game: bit 1 of d_k allows removing k
beans when that empties the heap, bit 2 allows removing k beans leaving one
nonempty heap, bit 4 allows removing k beans and splitting the remainder into
two nonempty heaps. d0 = 4 allows splitting a heap without removing anything.

Text grammar::

    code := digit '.' digits [ '(' digits ')' [ '^' (number | 'inf') ] ]

``(c)`` and ``(c)^inf`` repeat forever, ``(c)^n`` is expanded into a finite
digit string.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from misere.core.exceptions import CodeSyntaxError

_CODE_RE = re.compile(
    r"^(?P<d0>\d)\.(?P<prefix>\d*)(?:\((?P<cycle>\d*)\)(?:\^(?P<rep>\d+|inf))?)?$"
)


@dataclass(frozen=True, slots=True)
class OctalCode:
    """Parsed octal code; a non-empty cycle repeats forever."""

    d0: int
    prefix: tuple[int, ...]
    cycle: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.d0 not in (0, 4):
            raise CodeSyntaxError(f"whole-heap digit must be 0 or 4, got {self.d0}")
        for d in self.prefix + self.cycle:
            if not 0 <= d <= 7:
                raise CodeSyntaxError(f"octal digit out of range: {d}")

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def from_string(cls, text: str) -> "OctalCode":
        return parse_octal_code(text)

    def render(self) -> str:
        digits = "".join(str(d) for d in self.prefix)
        if self.cycle:
            return f"{self.d0}.{digits}({''.join(str(d) for d in self.cycle)})"
        return f"{self.d0}.{digits or '0'}"

    def digit(self, k: int) -> int:
        """Effective digit d_k for k >= 1."""
        if k < 1:
            raise ValueError(f"digit index must be >= 1, got {k}")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        if self.cycle:
            return self.cycle[(k - len(self.prefix) - 1) % len(self.cycle)]
        return 0

    @property
    def is_finite(self) -> bool:
        return not any(self.cycle)

    def max_move(self) -> int | None:
        """Largest k with d_k != 0; None when a nonzero digit repeats forever."""
        if not self.is_finite:
            return None
        for k in range(len(self.prefix), 0, -1):
            if self.prefix[k - 1]:
                return k
        return 0

    def repeated(self, times: int) -> "OctalCode":
        """The finite code d0.(digits)^times built from this code's digits."""
        block = self.prefix + self.cycle
        if times < 1 or not block:
            raise CodeSyntaxError("repetition needs a positive count and a nonempty block")
        return OctalCode(self.d0, block * times)


def parse_octal_code(text: str) -> OctalCode:
    """Parse a code string such as ``0.26``, ``4.7`` or ``0.(3310)^2``."""
    match = _CODE_RE.match(text.strip())
    if match is None:
        raise CodeSyntaxError(f"malformed octal code: {text!r}")

    prefix = tuple(int(c) for c in match["prefix"])
    cycle_text = match["cycle"]
    if cycle_text is None:
        if not prefix:
            raise CodeSyntaxError(f"octal code has no digits: {text!r}")
        return OctalCode(int(match["d0"]), prefix)
    if not cycle_text:
        raise CodeSyntaxError(f"empty repeating block in {text!r}")

    cycle = tuple(int(c) for c in cycle_text)
    rep = match["rep"]
    if rep is None or rep == "inf":
        return OctalCode(int(match["d0"]), prefix, cycle)
    times = int(rep)
    if times < 1:
        raise CodeSyntaxError(f"repetition count must be positive in {text!r}")
    return OctalCode(int(match["d0"]), prefix + cycle * times)


@lru_cache(maxsize=65536)
def heap_options(code: OctalCode, k: int) -> tuple[tuple[int, ...], ...]:
    """Options of a single heap of size k, each a sorted tuple of heap sizes."""
    found: set[tuple[int, ...]] = set()
    if code.d0 & 4:
        for a in range(1, k // 2 + 1):
            found.add((a, k - a))
    for r in range(1, k + 1):
        d = code.digit(r)
        if not d:
            continue
        rest = k - r
        if d & 1 and rest == 0:
            found.add(())
        if d & 2 and rest >= 1:
            found.add((rest,))
        if d & 4 and rest >= 2:
            for a in range(1, rest // 2 + 1):
                found.add((a, rest - a))
    return tuple(sorted(found, key=lambda heaps: (len(heaps), heaps)))
