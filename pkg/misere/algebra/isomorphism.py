"""Isomorphism search for bipartite monoids.

A homomorphism out of m1 is fixed by the images of m1's generators, so the
search backtracks over those images. Candidates must share cheap invariants
(P membership, idempotence, cyclic-submonoid shape) with the element they
replace, and each assignment is extended over the submonoid generated so far
before descending.
"""

import logging
from collections import Counter, deque
from collections.abc import Mapping

from misere.algebra.monoid import BipartiteMonoid
from misere.config import settings
from misere.core.exceptions import IsomorphismTooLargeError

logger = logging.getLogger(__name__)

Invariant = tuple[bool, bool, tuple[int, int, tuple[bool, ...]]]


def _invariants(m: BipartiteMonoid) -> list[Invariant]:
    return [(x in m.pset, m.is_idempotent(x), m.power_signature(x)) for x in range(m.size)]


def _extend(
    m1: BipartiteMonoid,
    m2: BipartiteMonoid,
    phi: list[int],
    inv: list[int],
    g: int,
    y: int,
) -> tuple[list[int], list[int]] | None:
    """Close phi under multiplication by g -> y; None on any conflict."""
    phi, inv = phi[:], inv[:]
    col1, col2 = m1.column(g), m2.column(y)
    queue = deque(x for x in range(m1.size) if phi[x] >= 0)
    while queue:
        x = queue.popleft()
        a, b = col1[x], col2[phi[x]]
        if phi[a] >= 0:
            if phi[a] != b:
                return None
            continue
        if inv[b] >= 0 or (a in m1.pset) != (b in m2.pset):
            return None
        phi[a], inv[b] = b, a
        queue.append(a)
    return phi, inv


def iso_check(
    m1: BipartiteMonoid,
    m2: BipartiteMonoid,
    fixed: Mapping[int, int] | None = None,
    max_order: int | None = None,
) -> list[int] | None:
    """An isomorphism m1 -> m2 carrying P onto P, as a list, or None.

    ``fixed`` prescribes images for some elements of m1; they are assigned
    before the generators are searched.
    """
    cap = max_order or settings.iso_max_order
    if m1.size != m2.size or len(m1.pset) != len(m2.pset):
        return None
    if m1.size > cap:
        raise IsomorphismTooLargeError(f"order {m1.size} above the isomorphism cap {cap}")
    if (m1.identity in m1.pset) != (m2.identity in m2.pset):
        return None

    inv1, inv2 = _invariants(m1), _invariants(m2)
    if Counter(inv1) != Counter(inv2):
        return None

    fixed = dict(fixed or {})
    order: list[int] = list(fixed)
    for g in range(m1.rank):
        e = m1.generator_element(g)
        if e != m1.identity and e not in order:
            order.append(e)

    by_invariant: dict[Invariant, list[int]] = {}
    for y in range(m2.size):
        by_invariant.setdefault(inv2[y], []).append(y)

    phi0 = [-1] * m1.size
    back0 = [-1] * m2.size
    phi0[m1.identity], back0[m2.identity] = m2.identity, m1.identity

    def search(i: int, phi: list[int], back: list[int]) -> list[int] | None:
        if i == len(order):
            return phi if min(phi) >= 0 else None
        e = order[i]
        if e in fixed:
            choices = [fixed[e]] if inv2[fixed[e]] == inv1[e] else []
        else:
            choices = by_invariant.get(inv1[e], [])
        if phi[e] >= 0:
            return search(i + 1, phi, back) if phi[e] in choices else None
        for y in choices:
            if back[y] >= 0:
                continue
            extended = _extend(m1, m2, phi, back, e, y)
            if extended is None:
                continue
            found = search(i + 1, *extended)
            if found is not None:
                return found
        return None

    result = search(0, phi0, back0)
    logger.debug(f"iso_check order {m1.size}: {'found' if result else 'none'}")
    return result
