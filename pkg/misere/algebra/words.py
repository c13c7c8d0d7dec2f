"""Commutative words and presentations in the published table notation.

A word is a run of generator factors: ``ab2`` is a·b², ``1`` is the empty
word. Generator names are a letter optionally followed by ``_digits``
(``c_0``, ``d_12``); multi-character names take their exponent after a
caret (``c_0^2``), single letters may use either ``b3`` or ``b^3``.
"""

import re
import string
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from misere.core.exceptions import UnknownGeneratorError, WordSyntaxError

_FACTOR_RE = re.compile(r"([A-Za-z](?:_\d+)?)(?:\^(\d+)|(\d+))?")


@dataclass(frozen=True, slots=True)
class MonoidWord:
    """Exponent vector over a fixed generator list."""

    exponents: tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> "MonoidWord":
        return cls((0,) * rank)

    @classmethod
    def generator(cls, rank: int, index: int, power: int = 1) -> "MonoidWord":
        exps = [0] * rank
        exps[index] = power
        return cls(tuple(exps))

    def __mul__(self, other: "MonoidWord") -> "MonoidWord":
        return MonoidWord(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def letters(self) -> list[int]:
        """Generator indices with multiplicity, in generator order."""
        return [g for g, e in enumerate(self.exponents) for _ in range(e)]

    def lex_key(self) -> tuple[int, ...]:
        return self.exponents[::-1]


def generator_names(count: int) -> tuple[str, ...]:
    """a, b, c, ... then x_26, x_27, ... for very large generator sets."""
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < len(letters) else f"x_{i}" for i in range(count))


def parse_word(text: str, generators: Sequence[str]) -> MonoidWord:
    token = text.strip()
    if not token:
        raise WordSyntaxError("empty word")
    exps = [0] * len(generators)
    if token == "1":
        return MonoidWord(tuple(exps))
    index = {name: i for i, name in enumerate(generators)}
    pos = 0
    while pos < len(token):
        match = _FACTOR_RE.match(token, pos)
        if match is None:
            raise WordSyntaxError(f"malformed word {text!r} at offset {pos}")
        name, caret_exp, plain_exp = match.groups()
        if name not in index:
            raise UnknownGeneratorError(f"unknown generator {name!r} in word {text!r}")
        power = int(caret_exp or plain_exp or 1)
        if power == 0:
            raise WordSyntaxError(f"zero exponent in word {text!r}")
        exps[index[name]] += power
        pos = match.end()
    return MonoidWord(tuple(exps))


def render_word(word: MonoidWord, generators: Sequence[str]) -> str:
    if word.is_identity():
        return "1"
    parts = []
    for name, e in zip(generators, word.exponents):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif len(name) == 1:
            parts.append(f"{name}{e}")
        else:
            parts.append(f"{name}^{e}")
    return "".join(parts)


@dataclass(frozen=True)
class Presentation:
    """Generators and relations u = v of a commutative monoid."""

    generators: tuple[str, ...]
    relations: tuple[tuple[MonoidWord, MonoidWord], ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise WordSyntaxError(f"duplicate generator names in {self.generators}")
        for u, v in self.relations:
            if u == v:
                raise WordSyntaxError("relation sides must be distinct words")

    @classmethod
    def from_pairs(
        cls, generators: Iterable[str], pairs: Iterable[Sequence[str]]
    ) -> "Presentation":
        gens = tuple(generators)
        rels = []
        for pair in pairs:
            if len(pair) != 2:
                raise WordSyntaxError(f"relation needs two sides: {pair!r}")
            rels.append((parse_word(pair[0], gens), parse_word(pair[1], gens)))
        return cls(gens, tuple(rels))

    @classmethod
    def parse(cls, generators: Iterable[str], text: str) -> "Presentation":
        """Parse ``a2=1, b3=b`` style relation text."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            sides = chunk.split("=")
            if len(sides) != 2:
                raise WordSyntaxError(f"relation must be word=word: {chunk!r}")
            pairs.append(sides)
        return cls.from_pairs(generators, pairs)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> MonoidWord:
        return parse_word(text, self.generators)

    def render_relations(self) -> str:
        return ", ".join(
            f"{render_word(u, self.generators)}={render_word(v, self.generators)}"
            for u, v in self.relations
        )

    def pairs(self) -> list[list[str]]:
        return [
            [render_word(u, self.generators), render_word(v, self.generators)]
            for u, v in self.relations
        ]

    def __str__(self) -> str:
        return f"<{','.join(self.generators)} | {self.render_relations()}>"
