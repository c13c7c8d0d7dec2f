"""Explicit impartial games as option DAGs.

Expression grammar::

    position := g ('+' g)*
    g        := '0' | '*' | '*' number | '{' [ g (',' g)* ] '}' | '(' position ')'

Parenthesized sums are only accepted outside option braces. Identical
subgames share a node; node 0 is the empty game.
"""

from collections.abc import Iterable

from misere.core.exceptions import ExpressionSyntaxError

EMPTY = 0


class GameDag:
    """Nodes with sorted, deduplicated option lists and a designated root."""

    def __init__(self) -> None:
        self._options: list[tuple[int, ...]] = [()]
        self._index: dict[tuple[int, ...], int] = {(): EMPTY}
        self._sums: dict[tuple[int, int], int] = {}
        self.root = EMPTY

    def __len__(self) -> int:
        return len(self._options)

    def options(self, node: int) -> tuple[int, ...]:
        return self._options[node]

    def add_node(self, options: Iterable[int]) -> int:
        key = tuple(sorted(set(options)))
        for o in key:
            if not 0 <= o < len(self._options):
                raise ValueError(f"unknown option node {o}")
        node = self._index.get(key)
        if node is None:
            node = len(self._options)
            self._options.append(key)
            self._index[key] = node
        return node

    def nim_heap(self, n: int) -> int:
        node = EMPTY
        heaps = [EMPTY]
        for _ in range(n):
            node = self.add_node(heaps)
            heaps.append(node)
        return heaps[n]

    def add_sum(self, a: int, b: int) -> int:
        """Node for the disjunctive sum a + b."""
        if a == EMPTY:
            return b
        if b == EMPTY:
            return a
        key = (min(a, b), max(a, b))
        if key in self._sums:
            return self._sums[key]
        opts = [self.add_sum(x, b) for x in self._options[a]]
        opts += [self.add_sum(a, y) for y in self._options[b]]
        node = self.add_node(opts)
        self._sums[key] = node
        return node

    def closure_generators(self, root: int | None = None) -> list[int]:
        """Non-empty followers of root (root included), children before parents."""
        start = self.root if root is None else root
        seen: set[int] = set()
        stack = [start]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(self._options[node])
        seen.discard(EMPTY)
        # ids are assigned after all options exist, so id order is topological
        return sorted(seen)

    def birthday(self, node: int) -> int:
        opts = self._options[node]
        return 1 + max(self.birthday(o) for o in opts) if opts else 0

    def render(self, node: int | None = None) -> str:
        node = self.root if node is None else node
        if node == EMPTY:
            return "0"
        n = self._nim_value(node)
        if n is not None:
            return "*" if n == 1 else f"*{n}"
        return "{" + ",".join(self.render(o) for o in self._options[node]) + "}"

    def _nim_value(self, node: int) -> int | None:
        values: list[int] = []
        for o in self._options[node]:
            v = 0 if o == EMPTY else self._nim_value(o)
            if v is None:
                return None
            values.append(v)
        return len(values) if sorted(values) == list(range(len(values))) else None


class _Parser:
    def __init__(self, text: str, dag: GameDag):
        self.text = "".join(text.split())
        self.pos = 0
        self.dag = dag

    def error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(f"{message} at offset {self.pos} in {self.text!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def position(self, top: bool) -> int:
        node = self.game(top)
        while self.peek() == "+":
            if not top:
                raise self.error("sums are only allowed at top level")
            self.pos += 1
            node = self.dag.add_sum(node, self.game(top))
        return node

    def game(self, top: bool) -> int:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return EMPTY
        if ch == "*":
            self.pos += 1
            start = self.pos
            while self.peek().isdigit():
                self.pos += 1
            n = int(self.text[start : self.pos]) if self.pos > start else 1
            return self.dag.nim_heap(n)
        if ch == "{":
            self.pos += 1
            opts: list[int] = []
            if self.peek() != "}":
                opts.append(self.position(top=False))
                while self.peek() == ",":
                    self.pos += 1
                    opts.append(self.position(top=False))
            self.expect("}")
            return self.dag.add_node(opts)
        if ch == "(":
            if not top:
                raise self.error("sums are only allowed at top level")
            self.pos += 1
            node = self.position(top=True)
            self.expect(")")
            return node
        raise self.error("expected a game")


def parse_game_expr(text: str) -> GameDag:
    """Parse a game expression; the root is the (possibly summed) position."""
    dag = GameDag()
    parser = _Parser(text, dag)
    if not parser.text:
        raise ExpressionSyntaxError("empty game expression")
    dag.root = parser.position(top=True)
    if parser.pos != len(parser.text):
        raise parser.error("trailing input")
    return dag


NIM_HEAP_REPRESENTATIVES = ("0", "*", "*2", "*4")
