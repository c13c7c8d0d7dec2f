"""Presentations read off explicit monoids."""

from misere.algebra.monoid import BipartiteMonoid
from misere.algebra.words import MonoidWord, Presentation


def extract_presentation(m: BipartiteMonoid) -> Presentation:
    """Relations u = nf(u) over the minimal non-normal words u.

    Normal words are the lex-least words of the elements. They are closed
    under taking sub-words, so every non-normal word contains a minimal one
    and rewriting with these relations reaches the normal form.
    """
    normal = {w: x for x, w in enumerate(m.words)}
    relations: dict[tuple[int, ...], tuple[int, ...]] = {}
    for x, w in enumerate(m.words):
        for g in range(m.rank):
            u = w[:g] + (w[g] + 1,) + w[g + 1 :]
            if u in normal or u in relations:
                continue
            if all(
                u[:h] + (u[h] - 1,) + u[h + 1 :] in normal for h in range(m.rank) if u[h]
            ):
                relations[u] = m.words[m.actions[g][x]]
    ordered = sorted(relations.items(), key=lambda item: item[0][::-1])
    return Presentation(
        m.names, tuple((MonoidWord(u), MonoidWord(v)) for u, v in ordered)
    )
