"""Exact arithmetic in the infinite quotients of 0.26 and 4.7.

0.26 is generated by a, b and c_0, c_1, ... subject to

    a^2 = 1,   b^(n+1) c_n = b^(2n+3),   c_m c_n = b^(m+2) c_n  (m <= n)

and every element is a^i b^m c_n with m <= n, where n = None stands for
c_inf = 1. 4.7 is generated by a, b, c and d_0, d_1, ... subject to

    a^2 = 1,  bc = ab^3,  c^2 = b^4,  b^(n+1) d_n = a^(n+1) b^(2n+5),
    c d_n = ab^2 d_n,  d_m d_n = a^(m+1) b^(m+4) d_n  (m <= n)

with normal forms a^i b^m, a^i c and a^i b^m d_n (m <= n).
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

from misere.core.exceptions import UnknownGeneratorError, WordSyntaxError

Tag = Literal["0.26", "4.7"]
TAGS: tuple[Tag, ...] = ("0.26", "4.7")

_ELEMENT_RE = re.compile(r"^(?P<a>a)?(?:b(?P<m>\d*))?(?:(?P<fam>[cd])(?P<n>\d*))?$")


@dataclass(frozen=True, order=True)
class ApElement:
    """a^i b^m times c_n (0.26) or d_n (4.7); ``c`` marks the lone 4.7 generator c."""

    tag: str
    i: int = 0
    m: int = 0
    n: int | None = None
    c: bool = False

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise UnknownGeneratorError(f"no algebraic-periodic quotient for {self.tag!r}")
        if self.i not in (0, 1) or self.m < 0 or (self.n is not None and self.n < 0):
            raise ValueError(f"exponents out of range: {self}")

    def __str__(self) -> str:
        return self.render()

    @property
    def family(self) -> str:
        return "c" if self.tag == "0.26" else "d"

    def is_identity(self) -> bool:
        return self.i == 0 and self.m == 0 and self.n is None and not self.c

    def render(self) -> str:
        parts = []
        if self.i:
            parts.append("a")
        if self.m:
            parts.append("b" if self.m == 1 else f"b{self.m}")
        if self.c:
            parts.append("c")
        if self.n is not None:
            parts.append(f"{self.family}{self.n}")
        return "".join(parts) or "1"

    def __mul__(self, other: "ApElement") -> "ApElement":
        return ap_multiply(self, other)


def identity(tag: Tag) -> ApElement:
    return ApElement(tag)


def generator(tag: Tag, name: str) -> ApElement:
    """``a``, ``b``, ``c`` (4.7), ``c<n>`` (0.26) or ``d<n>`` (4.7)."""
    name = name.strip().replace("_", "")
    if name == "a":
        return ApElement(tag, i=1)
    if name == "b":
        return ApElement(tag, m=1)
    if tag == "4.7" and name == "c":
        return ApElement(tag, c=True)
    family = "c" if tag == "0.26" else "d"
    if name[:1] == family and name[1:].isdigit():
        return ApElement(tag, n=int(name[1:]))
    raise UnknownGeneratorError(f"unknown generator {name!r} for {tag}")


def _reduce_026(tag: str, i: int, m: int, family: list[int]) -> ApElement:
    family = sorted(family)
    while len(family) >= 2:
        low = family.pop(0)
        m += low + 2
    n = family[0] if family else None
    if n is not None and m >= n + 1:
        m, n = m + n + 2, None
    return ApElement(tag, i % 2, m, n)


def _reduce_47(tag: str, i: int, m: int, cs: int, family: list[int]) -> ApElement:
    family = sorted(family)
    while cs >= 2:
        cs -= 2
        m += 4
    while len(family) >= 2:
        low = family.pop(0)
        i += low + 1
        m += low + 4
    if cs and family:
        cs = 0
        i += 1
        m += 2
    if cs and m >= 1:
        cs = 0
        i += 1
        m += 2
    n = family[0] if family else None
    if n is not None and m >= n + 1:
        i += n + 1
        m, n = m + n + 4, None
    return ApElement(tag, i % 2, m, n, bool(cs))


def ap_multiply(x: ApElement, y: ApElement) -> ApElement:
    if x.tag != y.tag:
        raise ValueError(f"cannot multiply elements of {x.tag} and {y.tag}")
    family = [n for n in (x.n, y.n) if n is not None]
    if x.tag == "0.26":
        return _reduce_026(x.tag, x.i + y.i, x.m + y.m, family)
    return _reduce_47(x.tag, x.i + y.i, x.m + y.m, int(x.c) + int(y.c), family)


def ap_normalize(tag: Tag, factors: Iterable[ApElement | str]) -> ApElement:
    """Normal form of a formal product of generators or elements."""
    result = identity(tag)
    for f in factors:
        element = generator(tag, f) if isinstance(f, str) else f
        if element.tag != tag:
            raise UnknownGeneratorError(f"{element} does not belong to {tag}")
        result = ap_multiply(result, element)
    return result


def ap_power(x: ApElement, k: int) -> ApElement:
    result = identity(x.tag)  # type: ignore[arg-type]
    for _ in range(k):
        result = ap_multiply(result, x)
    return result


def parse_ap_element(tag: Tag, text: str) -> ApElement:
    """Inverse of ApElement.render, e.g. ``ab3``, ``c0``, ``abc1``, ``d4``."""
    token = text.strip().replace("_", "").replace("^", "")
    if token == "1":
        return identity(tag)
    match = _ELEMENT_RE.match(token)
    if match is None or not token:
        raise WordSyntaxError(f"malformed {tag} element {text!r}")
    factors: list[ApElement] = []
    if match["a"]:
        factors.append(generator(tag, "a"))
    if match["m"] is not None:
        factors.append(ApElement(tag, m=int(match["m"] or 1)))
    if match["fam"]:
        factors.append(generator(tag, match["fam"] + match["n"]))
    return ap_normalize(tag, factors)


def ap_in_P(x: ApElement) -> bool:
    """Membership in the closed-form P-portion; x must be in normal form."""
    if x.c:
        return False
    if x.n is None:
        return (x.i == 1 and x.m == 0) or (x.i == 0 and x.m >= 2 and x.m % 2 == 0)
    if x.tag == "0.26":
        return x.i == 0 and x.m <= x.n and (x.m + x.n) % 2 == 1
    if x.m >= x.n:
        return False
    if x.i == 0:
        return x.m % 2 == 1 and x.n % 2 == 0
    return x.m % 2 == 0 and x.n % 2 == 1


def ap_phi(tag: Tag, k: int) -> ApElement:
    """Value of a single heap of size k."""
    if k < 1:
        raise ValueError(f"heap size must be positive, got {k}")
    if tag == "0.26":
        if k <= 8:
            return ApElement(tag, i=(k - 1) % 2, m=((k - 1) % 4) // 2)
        if k % 2 == 1:
            return ApElement(tag, n=(k - 9) // 2)
        if k == 10:
            return ApElement(tag, i=1, n=0)
        return ap_normalize(tag, ["a", "b", ApElement(tag, n=(k - 12) // 2)])
    if k in (1, 3):
        return ApElement(tag, i=1)
    if k in (2, 4):
        return ApElement(tag, m=1)
    if k == 5:
        return ApElement(tag, c=True)
    if k == 6:
        return ApElement(tag, m=3)
    return ApElement(tag, n=k - 7)


def ap_position_element(tag: Tag, heaps: Iterable[int]) -> ApElement:
    return ap_normalize(tag, [ap_phi(tag, k) for k in heaps])
