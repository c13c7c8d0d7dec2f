"""Distinguishing witnesses: for x != y, some z with exactly one of xz, yz in P."""

import logging
from collections.abc import Iterator

from misere.core.exceptions import InconsistentWitnessError
from misere.periodic.elements import ApElement, Tag, ap_in_P, ap_multiply

logger = logging.getLogger(__name__)


def separates(x: ApElement, y: ApElement, z: ApElement) -> bool:
    return ap_in_P(ap_multiply(x, z)) != ap_in_P(ap_multiply(y, z))


def _collapsed_exponent(x: ApElement) -> int:
    """Exponent s with x b^M = a^i b^(s+M) once M absorbs the family generator."""
    return x.m if x.n is None else x.m + x.n + 2


def _witness_026(x: ApElement, y: ApElement) -> ApElement:
    tag = x.tag
    if x.i == 1 and y.i == 1:
        a = ApElement(tag, i=1)
        return ap_multiply(a, _witness_026(ap_multiply(a, x), ap_multiply(a, y)))

    finite = [e.n for e in (x, y) if e.n is not None]
    floor = max(finite) + 1 if finite else 0
    sx, sy = _collapsed_exponent(x), _collapsed_exponent(y)

    if x.i != y.i or sx % 2 != sy % 2:
        # x b^M lands on b^(even) for one side only
        even_side = sy if x.i == 1 else sx
        M = max(floor, 1)
        if (even_side + M) % 2:
            M += 1
        return ApElement(tag, m=M)

    if sx != sy:
        M = floor
        N = max(sx, sy) + M - 1
        return ApElement(tag, m=M, n=N) if M <= N else _normal_bc(tag, M, N)

    if x.n is None or y.n is None:
        return ApElement(tag)

    low = x if x.n - x.m < y.n - y.m else y
    return ApElement(tag, m=low.n - low.m + 1)


def _normal_bc(tag: str, M: int, N: int) -> ApElement:
    return ap_multiply(ApElement(tag, m=M), ApElement(tag, n=N))


def _witness_family(tag: str, bound: int) -> Iterator[ApElement]:
    for j in (0, 1):
        for M in range(bound + 1):
            yield ApElement(tag, i=j, m=M)
        yield ApElement(tag, i=j, c=True)
    for N in range(bound + 1):
        for j in (0, 1):
            for M in range(N + 1):
                yield ApElement(tag, i=j, m=M, n=N)


def _witness_47(x: ApElement, y: ApElement) -> ApElement | None:
    bound = 2 * max(x.m, y.m, x.n or 0, y.n or 0) + 8
    for z in _witness_family(x.tag, bound):
        if separates(x, y, z):
            return z
    return None


def ap_distinguish(tag: Tag, x: ApElement, y: ApElement) -> ApElement | None:
    """A witness separating x from y, or None when they are equal.

    0.26 witnesses are built directly; 4.7 witnesses come from a bounded
    search over elements a^j b^M, a^j c and a^j b^M d_N. Either way the
    witness is checked before it is returned.
    """
    if x.tag != tag or y.tag != tag:
        raise ValueError(f"elements must both belong to {tag}")
    if x == y:
        return None
    z = _witness_026(x, y) if tag == "0.26" else _witness_47(x, y)
    if z is None or not separates(x, y, z):
        raise InconsistentWitnessError(
            f"{tag}: no valid witness for {x.render()} vs {y.render()} (got {z})",
            code="witness",
        )
    logger.debug(f"{tag}: {x.render()} vs {y.render()} separated by {z.render()}")
    return z
