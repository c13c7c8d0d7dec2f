"""Reduction of bipartite monoids.

x and y are indistinguishable when xz in P exactly when yz in P for every z.
Elements are states of an automaton whose letters are the generators and
whose accepting set is P, so indistinguishability is Moore equivalence.
"""

from misere.algebra.monoid import BipartiteMonoid


def indistinguishability_classes(m: BipartiteMonoid) -> list[int]:
    """Class index per element, classes numbered by first appearance."""
    classes = [1 if x in m.pset else 0 for x in range(m.size)]
    count = len(set(classes))
    while True:
        signatures: dict[tuple[int, ...], int] = {}
        refined = []
        for x in range(m.size):
            sig = (classes[x],) + tuple(classes[a[x]] for a in m.actions)
            refined.append(signatures.setdefault(sig, len(signatures)))
        classes = refined
        if len(signatures) == count:
            return classes
        count = len(signatures)


def reduce_bipartite(m: BipartiteMonoid) -> tuple[BipartiteMonoid, list[int]]:
    """Reduced quotient and the factor map (element of m -> element of the quotient)."""
    classes = indistinguishability_classes(m)
    count = max(classes) + 1
    reps = [-1] * count
    for x, c in enumerate(classes):
        if reps[c] < 0:
            reps[c] = x
    actions = [[classes[a[r]] for r in reps] for a in m.actions]
    pset = {classes[p] for p in m.pset}
    q, relabel = BipartiteMonoid.from_actions(actions, classes[m.identity], m.names, pset)
    return q, [relabel[c] for c in classes]


def is_reduced(m: BipartiteMonoid) -> bool:
    return max(indistinguishability_classes(m), default=0) + 1 == m.size
