from misere.games.codes import OctalCode, heap_options, parse_octal_code
from misere.games.dag import GameDag, parse_game_expr
from misere.games.oracle import Outcome, OutcomeOracle, grundy_value, misere_outcome
from misere.games.rules import Position, RuleSet, iter_heap_positions, position_options

__all__ = [
    "GameDag",
    "OctalCode",
    "Outcome",
    "OutcomeOracle",
    "Position",
    "RuleSet",
    "grundy_value",
    "heap_options",
    "iter_heap_positions",
    "misere_outcome",
    "parse_game_expr",
    "parse_octal_code",
    "position_options",
]
