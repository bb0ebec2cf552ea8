"""Small named instances used by tests and demos."""

from __future__ import annotations

from .core import GameGraph, Owner

#: Truncation bound under which the memory game below shows its point.
MEMORY_GAME_BOUND = 15


def memory_game() -> GameGraph:
    """Four-vertex game on which Min needs memory to win.

    Max owns 0, 1 and 3; Min owns vertex 2.  At bound 15 the answers are
    (0, 12, inf, inf), yet neither of Min's two positional strategies alone
    beats vertex 2:

    * fixing 2 -> 0 lets Max survive the single -13 edge with credit 13;
    * fixing 2 -> 3 lets Max circle the non-negative 2/3 cycle forever.

    Min wins by sending the play to 3 first and redirecting it to 0 once it
    returns, making it traverse the path 3 -> 2 -> 0 of weight -20 < -15.
    This instance is a reconstruction pinned down by the published answer
    vector and the -20 segment; it is oracle-verified in the test-suite.
    """
    owners = [Owner.MAX, Owner.MAX, Owner.MIN, Owner.MAX]
    edges = [
        (0, 0, 0),
        (1, 0, -12),
        (1, 2, 1),
        (2, 0, -13),
        (2, 3, 7),
        (3, 2, -7),
    ]
    return GameGraph(4, owners, edges)


def one_vertex_game(loop_weight: int, owner: Owner = Owner.MAX) -> GameGraph:
    """The minimal legal game: a single vertex with one self-loop."""
    return GameGraph(1, [owner], [(0, 0, loop_weight)])


def two_vertex_duel() -> GameGraph:
    """Max vertex 0 (self-loop 0, escape -3) against Min vertex 1 (-3 back).

    At bound 3 the answers are (0, 3).
    """
    owners = [Owner.MAX, Owner.MIN]
    edges = [(0, 1, -3), (0, 0, 0), (1, 0, -3)]
    return GameGraph(2, owners, edges)
