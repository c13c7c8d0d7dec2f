"""Pretending-function tables in the published token style: ``a b a b c b ab2``."""

from collections.abc import Sequence

from misere.algebra.words import parse_word
from misere.catalog.records import PhiSpec
from misere.core.exceptions import WordSyntaxError
from misere.solver.closed_set import QuotientSolution

PERIOD_MARK = "|"


def parse_phi_table(
    text: str, period: int | None = None, generators: Sequence[str] | None = None
) -> PhiSpec:
    """Word list for heaps 1, 2, ...; the last ``period`` words repeat.

    A ``|`` token may mark where the repeating block starts instead of an
    explicit period. Tokens are checked against ``generators`` when given.
    """
    tokens = text.split()
    if PERIOD_MARK in tokens:
        if tokens.count(PERIOD_MARK) > 1:
            raise WordSyntaxError(f"more than one period mark in {text!r}")
        mark = tokens.index(PERIOD_MARK)
        tokens.pop(mark)
        marked = len(tokens) - mark
        if period is not None and period != marked:
            raise WordSyntaxError(f"period {period} disagrees with the marked block {marked}")
        period = marked
    if period is not None and not 0 < period <= len(tokens):
        raise WordSyntaxError(f"period {period} longer than the table ({len(tokens)} words)")
    if generators is not None:
        for token in tokens:
            parse_word(token, generators)
    preperiod = len(tokens) - period if period is not None else None
    return PhiSpec(preperiod=preperiod, period=period, words=tokens)


def extend_phi(spec: PhiSpec, heaps: int) -> list[str]:
    """Words for heaps 1..heaps, repeating the periodic block as needed."""
    words = spec.words
    if heaps <= len(words):
        return list(words[:heaps])
    if not spec.period:
        raise WordSyntaxError(f"table of {len(words)} words has no period to extend to {heaps}")
    start = len(words) - spec.period
    return [
        words[k] if k < len(words) else words[start + (k - start) % spec.period]
        for k in range(heaps)
    ]


def render_phi_table(solution: QuotientSolution) -> str:
    return " ".join(solution.phi_words())
