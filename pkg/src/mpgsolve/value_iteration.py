"""Value-iteration baseline for the bounded energy problem.

Iterates, from the all-zero vector, the update

    x = min over edges (v, u) of max(0, d(u) - w(v, u))   at Max vertices,
    x = max over edges (v, u) of max(0, d(u) - w(v, u))   at Min vertices,

storing infinity as soon as x exceeds the bound, until two consecutive
vectors agree.  After k rounds ``d_k(v)`` is the minimum initial energy
surviving a k-step play, so the fixpoint is the bounded energy requirement,
and at the reduction bound ``(|V|-1) * W`` it solves the unbounded problem.

Two variants: a synchronous round (``vi_step``/``variant="plain"``) and an
asynchronous worklist that recomputes a vertex only when a successor grew.
Both reach the same fixpoint; the worklist is the fast one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import GameGraph, Owner, validate
from .errors import TimeLimitExceeded

INF = float("inf")


@dataclass
class ViState:
    """Current vector plus the vertices whose value may still increase."""

    d: list
    dirty: set[int] = field(default_factory=set)

    @classmethod
    def initial(cls, game: GameGraph) -> "ViState":
        return cls(d=[0] * game.vertex_count, dirty=set(range(game.vertex_count)))


def _value(out_v, d, bound, minimize):
    best = None
    for u, w in out_v:
        c = d[u] - w
        if c < 0:
            c = 0
        if best is None:
            best = c
        elif minimize:
            if c < best:
                best = c
        elif c > best:
            best = c
    if best is None or best > bound:
        return INF
    return best


def vi_step(game: GameGraph, bound: int, state: ViState) -> ViState:
    """One synchronous update round over the dirty vertices.

    Vertices outside the dirty set cannot change (no successor moved last
    round), so iterating from the all-dirty initial state reproduces the
    plain simultaneous iteration exactly.
    """
    out = game.out_adjacency
    inc = game.in_adjacency
    is_max = [o is Owner.MAX for o in game.owners]
    d = state.d
    new_d = list(d)
    grew = []
    for v in state.dirty:
        x = _value(out[v], d, bound, is_max[v])
        if x > d[v]:
            new_d[v] = x
            grew.append(v)
    dirty = set()
    for v in grew:
        for u, _ in inc[v]:
            dirty.add(u)
    return ViState(d=new_d, dirty=dirty)


def vi_solve(
    game: GameGraph,
    bound: int,
    *,
    variant: str = "worklist",
    time_limit: float | None = None,
    stats: dict | None = None,
) -> list:
    """Iterate to the fixpoint; returns the bounded energy requirement."""
    validate(game)
    bound = int(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if variant == "plain":
        return _solve_plain(game, bound, time_limit, stats)
    if variant == "worklist":
        return _solve_worklist(game, bound, time_limit, stats)
    raise ValueError(f"unknown variant {variant!r}")


def _solve_plain(game, bound, time_limit, stats):
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    state = ViState.initial(game)
    rounds = 0
    while state.dirty:
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeLimitExceeded(f"value iteration exceeded {time_limit} s")
        state = vi_step(game, bound, state)
        rounds += 1
    if stats is not None:
        stats["iterations"] = rounds
    return state.d


def _solve_worklist(game, bound, time_limit, stats):
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    n = game.vertex_count
    out = game.out_adjacency
    inc = game.in_adjacency
    is_max = [o is Owner.MAX for o in game.owners]
    d: list = [0] * n
    queue = list(range(n))
    in_queue = bytearray(b"\x01" * n)
    head = 0
    pops = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        in_queue[v] = 0
        pops += 1
        if deadline is not None and pops % 4096 == 0 and time.perf_counter() > deadline:
            raise TimeLimitExceeded(f"value iteration exceeded {time_limit} s")
        x = _value(out[v], d, bound, is_max[v])
        if x > d[v]:
            # monotone ascent: a vertex value never decreases, and infinity,
            # once reached, is final
            d[v] = x
            for u, _ in inc[v]:
                if not in_queue[u]:
                    in_queue[u] = 1
                    queue.append(u)
        if head > 1048576 and head * 2 > len(queue):
            del queue[:head]
            head = 0
    if stats is not None:
        stats["iterations"] = pops
    return d
