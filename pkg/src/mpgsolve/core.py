"""Domain types for two-player energy games on weighted digraphs.

A game is a finite directed graph with integer edge weights in which every
vertex belongs to exactly one of two players, Max and Min, and has at least
one outgoing edge.  Vertices are dense non-negative integers so that value
vectors are flat lists; external names belong to the IO layer.

Value-vector conventions used throughout the package:

* potential vectors live in ``int | float('-inf')`` per vertex,
* energy vectors live in ``int | float('inf')`` per vertex.

Graphs are immutable after construction and safe to share between solver
runs; strategies and vectors are independent values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    AdjacencyMismatch,
    DanglingEdge,
    EmptyKeepSet,
    InvalidStrategy,
    ValidationError,
    ZeroOutDegree,
)

#: Weight added to vertices that lose all successors in an induced subgame.
#: Any negative value makes such a vertex losing for Max at every finite
#: bound; -1 keeps the maximum absolute weight small.
SUBGAME_SELF_LOOP_WEIGHT = -1

#: Accumulations up to |V| * W must fit well inside 64-bit signed arithmetic
#: so that results stay portable to fixed-width implementations.
WEIGHT_ENVELOPE = 2**63


class Owner(Enum):
    MAX = "MAX"
    MIN = "MIN"

    def opponent(self) -> "Owner":
        return Owner.MIN if self is Owner.MAX else Owner.MAX


class GameGraph:
    """Finite weighted digraph with per-vertex ownership.

    Parallel edges and self-loops are permitted.  The constructor is lenient
    (so malformed graphs can be built and then diagnosed); call
    :func:`validate` to enforce the structural invariants.
    """

    __slots__ = ("vertex_count", "owners", "edges", "out_adjacency", "in_adjacency")

    def __init__(self, vertex_count: int, owners: Sequence[Owner], edges: Iterable[tuple[int, int, int]]):
        self.vertex_count = int(vertex_count)
        self.owners = tuple(owners)
        self.edges = tuple((int(u), int(v), int(w)) for u, v, w in edges)
        n = self.vertex_count
        out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v, w in self.edges:
            if 0 <= u < n and 0 <= v < n:
                out[u].append((v, w))
                inc[v].append((u, w))
        self.out_adjacency = out
        self.in_adjacency = inc

    def __eq__(self, other) -> bool:
        if not isinstance(other, GameGraph):
            return NotImplemented
        # identity up to edge order: the edge list is a multiset
        return (
            self.vertex_count == other.vertex_count
            and self.owners == other.owners
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self):  # pragma: no cover - graphs are not meant to be dict keys
        return hash((self.vertex_count, self.owners, tuple(sorted(self.edges))))

    def __repr__(self) -> str:
        return f"GameGraph(|V|={self.vertex_count}, |E|={len(self.edges)})"

    def vertices_of(self, player: Owner) -> list[int]:
        return [v for v in range(self.vertex_count) if self.owners[v] is player]


@dataclass(frozen=True)
class PositionalStrategy:
    """Total successor choice for one player's vertices."""

    player: Owner
    choice: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "choice", dict(self.choice))


def validate(graph: GameGraph) -> None:
    """Check the structural invariants, raising on the first violation.

    Raises ZeroOutDegree, DanglingEdge or AdjacencyMismatch (all subclasses
    of ValidationError).
    """
    n = graph.vertex_count
    if n <= 0:
        raise ValidationError("a game needs at least one vertex")
    if len(graph.owners) != n:
        raise ValidationError(f"{len(graph.owners)} owner entries for {n} vertices")
    for v, o in enumerate(graph.owners):
        if not isinstance(o, Owner):
            raise ValidationError(f"vertex {v} has owner {o!r}, expected Owner.MAX or Owner.MIN")
    for e in graph.edges:
        u, v, _ = e
        if not (0 <= u < n and 0 <= v < n):
            raise DanglingEdge(e)
    for v in range(n):
        if not graph.out_adjacency[v]:
            raise ZeroOutDegree(v)
    out_count = sum(len(a) for a in graph.out_adjacency)
    in_count = sum(len(a) for a in graph.in_adjacency)
    if not (out_count == in_count == len(graph.edges)):
        raise AdjacencyMismatch()


def validate_strategy(graph: GameGraph, strategy: PositionalStrategy) -> None:
    """Check that a strategy is defined on all and only its player's vertices
    and always picks an actual successor."""
    owned = set(graph.vertices_of(strategy.player))
    if set(strategy.choice) != owned:
        missing = owned - set(strategy.choice)
        extra = set(strategy.choice) - owned
        raise InvalidStrategy(f"strategy domain mismatch (missing {sorted(missing)}, extra {sorted(extra)})")
    for v, u in strategy.choice.items():
        if all(t != u for t, _ in graph.out_adjacency[v]):
            raise InvalidStrategy(f"choice {v} -> {u} is not an edge")


def restrict_to_strategy(graph: GameGraph, strategy: PositionalStrategy) -> GameGraph:
    """Remove every edge from the strategy owner's vertices except the chosen
    one (parallel edges to the chosen successor all survive)."""
    validate_strategy(graph, strategy)
    player = strategy.player
    kept = [
        (u, v, w)
        for (u, v, w) in graph.edges
        if graph.owners[u] is not player or strategy.choice[u] == v
    ]
    return GameGraph(graph.vertex_count, graph.owners, kept)


def induced_subgame(graph: GameGraph, keep: Iterable[int]) -> GameGraph:
    """Subgame induced by a vertex set, with losing self-loops patched in.

    Vertices are re-indexed densely in increasing original order.  A kept
    vertex whose successors were all dropped receives a self-loop of weight
    ``SUBGAME_SELF_LOOP_WEIGHT`` so it is losing for Max at every bound.
    """
    kept = sorted(set(keep))
    if not kept:
        raise EmptyKeepSet("cannot induce a subgame on the empty vertex set")
    n = graph.vertex_count
    for v in kept:
        if not (0 <= v < n):
            raise ValidationError(f"keep set contains out-of-range vertex {v}")
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v], w)
        for (u, v, w) in graph.edges
        if u in index and v in index
    ]
    has_out = [False] * len(kept)
    for u, _, _ in edges:
        has_out[u] = True
    for i in range(len(kept)):
        if not has_out[i]:
            edges.append((i, i, SUBGAME_SELF_LOOP_WEIGHT))
    owners = tuple(graph.owners[v] for v in kept)
    return GameGraph(len(kept), owners, edges)


def max_abs_weight(graph: GameGraph) -> int:
    """Maximum absolute edge weight W; 0 when every weight is zero."""
    return max((abs(w) for _, _, w in graph.edges), default=0)


def _step_weight(graph: GameGraph, u: int, v: int) -> int:
    # With parallel edges the heaviest one is the relevant one for longest
    # paths, and it is what a rational Max would traverse.
    best = None
    for t, w in graph.out_adjacency[u]:
        if t == v and (best is None or w > best):
            best = w
    if best is None:
        raise ValidationError(f"({u}, {v}) is not an edge")
    return best


def path_weight(graph: GameGraph, path: Sequence[int]) -> int:
    """Weight of a path given as a vertex sequence."""
    return sum(_step_weight(graph, path[i], path[i + 1]) for i in range(len(path) - 1))


def cycle_weight(graph: GameGraph, cycle: Sequence[int]) -> int:
    """Weight of a cycle given as a vertex sequence without the closing vertex."""
    if not cycle:
        raise ValidationError("empty cycle")
    return path_weight(graph, list(cycle) + [cycle[0]])
