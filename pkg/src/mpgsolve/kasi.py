"""Keep-alive strategy improvement (KASI) solver.

Solves the lower-bound and lower-weak-upper-bound problems: the minimum
initial energy per vertex that lets Max keep the running sum of edge
weights non-negative forever, where for the bounded problem the energy is
truncated at ``b`` (equivalently, no traversed segment may weigh less than
``-b``).

The solver maintains a vector ``d`` with ``-d`` a lower estimate of the
answer: ``d(v)`` is the weight of a longest admissible path from ``v`` to
the candidate set ``B`` of vertices that need no initial energy.  It
iterates two phases until a fixpoint:

* *evaluation* solves the one-player game obtained by fixing Min's current
  positional strategy and restricting to the vertices still presumed
  winnable, via repeated longest-path searches to a shrinking ``B``;
* *improvement* switches Min's choice at every vertex owning an edge
  ``(v, u)`` with ``d(v) > d(u) + w(v, u)``.

Parallel edges: the evaluation walks a one-player graph, so choices that
really belong to Min must be resolved adversarially first.  A Min vertex's
parallel edges to one target therefore collapse to the lightest of them
(Max's own parallels need no care: longest paths pick the heaviest).

Max wins with a single positional strategy, read off the final longest-path
forest.  Min in general needs memory: her optimal play is the recorded
*sequence* of positional strategies, replayed by per-vertex death index
(see :func:`verify_min_witness`).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence

from .core import (
    GameGraph,
    Owner,
    PositionalStrategy,
    max_abs_weight,
    validate,
    validate_strategy,
)
from .core import WEIGHT_ENVELOPE
from .errors import (
    InvalidStrategy,
    InvariantViolation,
    OverflowRisk,
    PositiveTransformedEdge,
    PreconditionViolated,
    TimeLimitExceeded,
    WitnessIncomplete,
)

NEG_INF = float("-inf")
INF = float("inf")

#: Condition (i) is verified by Bellman-Ford, which is cubic-ish; the check
#: only runs on instances up to this many vertices.
CYCLE_CHECK_LIMIT = 64


@dataclass
class MinWitness:
    """Min's optimal play: the strategy sequence plus per-vertex death index.

    ``death_index[v]`` is the index of the evaluation that drove ``d(v)`` to
    minus infinity, or None while the vertex stays winnable for Max.
    """

    strategies: list[PositionalStrategy]
    death_index: list[int | None]


@dataclass
class SolveResult:
    lwub: list  # int or float('inf') per vertex
    max_strategy: PositionalStrategy
    min_witness: MinWitness
    iterations: int
    final_d: list  # int or float('-inf') per vertex


@dataclass(frozen=True)
class ViolationTrace:
    """A losing play prefix: vertices visited and the edge weights taken."""

    vertices: tuple[int, ...]
    weights: tuple[int, ...]

    def min_segment_weight(self) -> int:
        best = 0
        running = 0
        for w in self.weights:
            running = min(running, 0) + w
            best = min(best, running)
        return best


def _effective_min_weights(n, out, is_min):
    """Per Min vertex, the lightest parallel weight toward each target."""
    eff: list[dict[int, int] | None] = [None] * n
    for v in range(n):
        if not is_min[v]:
            continue
        table: dict[int, int] = {}
        for u, w in out[v]:
            if u not in table or w < table[u]:
                table[u] = w
        eff[v] = table
    return eff


def _residual(v, out_v, eff_v, pi_v, d, dv):
    """Largest ``w - d(v) + d(u)`` over the strategy-restricted out-edges of v."""
    if pi_v is not None:
        return eff_v[pi_v] - dv + d[pi_v]
    best = NEG_INF
    for u, w in out_v:
        t = w - dv + d[u]
        if t > best:
            best = t
    return best


def _dijkstra(n, inc, is_min, eff, pi, bound, targets, pot, check):
    """Longest admissible paths to ``targets``, by max-priority search.

    Runs backward over in-edges with the potential transformation
    ``w'(x, y) = w(x, y) - pot(x) + pot(y)``, which is non-positive for every
    relevant edge, so a Dijkstra-style settle order is valid.  A relaxation
    is rejected when the candidate true weight ``d(y) + w(x, y)`` drops below
    ``-bound``.  The rejection is sound: extending a path by the maximal
    admissible suffix both maximizes its weight and weakens no earlier suffix
    constraint (every suffix of the extended path is either the whole path,
    checked here, or a suffix of the admissible sub-path, admissible by
    induction), and a smaller value at ``y`` can only produce a smaller, thus
    still inadmissible, candidate at ``x``.  Greedy extraction therefore
    computes exactly the longest path whose every suffix weighs at least
    ``-bound``, and leaves ``d(x) = -inf`` when no such path exists.
    """
    d = [NEG_INF] * n
    parent = [-1] * n
    in_targets = bytearray(n)
    heap = []
    for v in sorted(targets):
        d[v] = 0
        in_targets[v] = 1
        heap.append((0, v))
    heapify(heap)
    while heap:
        key, y = heappop(heap)
        dy = d[y]
        if key != pot[y] - dy:
            continue  # stale heap entry (lazy deletion)
        for x, w in inc[y]:
            if in_targets[x]:
                continue
            if is_min[x]:
                if pi[x] != y:
                    continue  # edge removed by the strategy restriction
                w = eff[x][y]  # Min traverses her lightest parallel
            px = pot[x]
            if px == NEG_INF:
                continue  # already known losing; stays -inf
            cand = dy + w
            if cand < -bound:
                continue  # admissibility pruning, see docstring
            if cand > d[x]:
                if check and w - px + pot[y] > 0:
                    raise PositiveTransformedEdge(
                        f"edge ({x}, {y}) has transformed weight {w - px + pot[y]} > 0"
                    )
                d[x] = cand
                parent[x] = y
                heappush(heap, (px - cand, x))
    if check:
        for v in range(n):
            if d[v] > pot[v]:
                raise InvariantViolation(f"longest-path value exceeds potential at vertex {v}")
    return d, parent


def _check_entry(n, out, is_min, eff, pi, d_prev):
    """Debug check of the evaluation entry conditions.

    (i)  every cycle of the strategy restriction within D minus A is negative
         (Bellman-Ford on small instances);
    (ii) d < 0 on D minus A and d(v) >= d(u) + w(v, u) along restricted edges.
    """
    core = []  # D \ A
    for v in range(n):
        dv = d_prev[v]
        if dv == NEG_INF or dv == 0:
            continue
        if dv > 0:
            raise PreconditionViolated("ii", f"d({v}) = {dv} > 0")
        core.append(v)
        if is_min[v]:
            u = pi[v]
            if dv < d_prev[u] + eff[v][u]:
                raise PreconditionViolated("ii", f"d({v}) < d({u}) + w along edge ({v}, {u})")
        else:
            for u, w in out[v]:
                if dv < d_prev[u] + w:
                    raise PreconditionViolated("ii", f"d({v}) < d({u}) + w along edge ({v}, {u})")
    if len(core) > CYCLE_CHECK_LIMIT:
        return
    # Scale weights so that a Bellman-Ford negative cycle in s(e) exists iff
    # some original cycle has weight >= 0:  s(e) = -(L+1) * w(e) - 1.
    index = {v: i for i, v in enumerate(core)}
    L = len(core)
    edges = []
    for v in core:
        if is_min[v]:
            restricted = [(pi[v], eff[v][pi[v]])]
        else:
            restricted = out[v]
        for u, w in restricted:
            if u in index:
                edges.append((index[v], index[u], -(L + 1) * w - 1))
    dist = [0] * L
    for _ in range(L):
        changed = False
        for a, b, s in edges:
            if dist[a] + s < dist[b]:
                dist[b] = dist[a] + s
                changed = True
        if not changed:
            return
    for a, b, s in edges:
        if dist[a] + s < dist[b]:
            raise PreconditionViolated("i", "restriction contains a non-negative cycle")


def _evaluate(n, out, inc, is_min, eff, pi, bound, d_prev, check, watch_b):
    """One strategy evaluation: returns (d, candidate set, parents, passes)."""
    B = set()
    for v in range(n):
        if d_prev[v] != 0:
            continue
        pv = pi[v] if is_min[v] else None
        if _residual(v, out[v], eff[v], pv, d_prev, 0) >= 0:
            B.add(v)
    if check and watch_b is not None and not B <= watch_b:
        raise InvariantViolation("candidate set gained vertices across evaluations")
    pot = d_prev
    passes = 0
    while True:
        passes += 1
        d, parent = _dijkstra(n, inc, is_min, eff, pi, bound, B, pot, check)
        drop = [
            v for v in B
            if _residual(v, out[v], eff[v], pi[v] if is_min[v] else None, d, 0) < 0
        ]
        if not drop:
            return d, B, parent, passes
        B = B.difference(drop)
        pot = d


def _improve(n, is_min, eff, pi, d):
    """Switch Min choices violating local optimality; returns whether any did.

    The condition is tested on effective (lightest-parallel) weights; ties
    break toward the smallest d(u) + w, then the lowest target index.
    """
    changed = False
    for v in range(n):
        if not is_min[v]:
            continue
        dv = d[v]
        if dv == NEG_INF:
            continue
        cur = pi[v]
        best = None
        for u, w in eff[v].items():
            if u == cur:
                continue  # re-picking the current target is a no-op
            cand = d[u] + w
            if dv > cand and (best is None or (cand, u) < best):
                best = (cand, u)
        if best is not None:
            pi[v] = best[1]
            changed = True
    return changed


def _snapshot(pi, is_min):
    return PositionalStrategy(Owner.MIN, {v: pi[v] for v in range(len(pi)) if is_min[v]})


def _initial_pi(game, is_min, initial_strategy):
    n = game.vertex_count
    pi = [None] * n
    if initial_strategy is None:
        # deterministic default: the lowest-indexed successor
        for v in range(n):
            if is_min[v]:
                pi[v] = min(u for u, _ in game.out_adjacency[v])
        return pi
    if initial_strategy.player is not Owner.MIN:
        raise InvalidStrategy("the improved strategy belongs to Min")
    validate_strategy(game, initial_strategy)
    for v, u in initial_strategy.choice.items():
        pi[v] = u
    return pi


def solve_lwub(
    game: GameGraph,
    bound: int,
    *,
    check: bool = False,
    initial_strategy: PositionalStrategy | None = None,
    time_limit: float | None = None,
) -> SolveResult:
    """Solve the bounded energy problem for ``game`` at truncation bound ``bound``.

    ``check=True`` turns on the debug validation of entry conditions and the
    potential transformation; the correctness test-suite always runs with it,
    benchmarks never do.
    """
    validate(game)
    bound = int(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    n = game.vertex_count
    out = game.out_adjacency
    inc = game.in_adjacency
    is_min = [o is Owner.MIN for o in game.owners]
    eff = _effective_min_weights(n, out, is_min)
    w_max = max_abs_weight(game)
    pi = _initial_pi(game, is_min, initial_strategy)

    d_prev = [0] * n
    strategies: list[PositionalStrategy] = []
    death: list[int | None] = [None] * n
    candidates: set[int] = set()
    parents = [-1] * n
    watch_b: set[int] | None = None
    max_main = n * n * w_max + 1
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    iteration = 0
    d = d_prev
    while True:
        if deadline is not None and time.perf_counter() > deadline:
            raise TimeLimitExceeded(f"solve exceeded {time_limit} s")
        if check:
            _check_entry(n, out, is_min, eff, pi, d_prev)
        strategies.append(_snapshot(pi, is_min))
        d, candidates, parents, passes = _evaluate(
            n, out, inc, is_min, eff, pi, bound, d_prev, check, watch_b
        )
        if passes > max(1, n):
            raise InvariantViolation(f"evaluation ran {passes} passes on {n} vertices")
        strict = False
        for v in range(n):
            if d[v] > d_prev[v]:
                raise InvariantViolation(f"d({v}) increased during evaluation")
            if d[v] < d_prev[v]:
                strict = True
                if d[v] == NEG_INF:
                    death[v] = iteration
        if iteration > 0 and not strict:
            # every iteration after an improvement must strictly decrease d
            raise InvariantViolation("improvement iteration left d unchanged")
        watch_b = candidates
        iteration += 1
        if iteration > max_main:
            raise InvariantViolation(f"main loop exceeded {max_main} iterations")
        if not _improve(n, is_min, eff, pi, d):
            break
        d_prev = d

    lwub = [(-dv if dv != NEG_INF else INF) for dv in d]
    sigma = extract_max_strategy(game, d, candidates, parents)
    witness = MinWitness(strategies=strategies, death_index=death)
    return SolveResult(
        lwub=lwub,
        max_strategy=sigma,
        min_witness=witness,
        iterations=iteration,
        final_d=d,
    )


def solve_lb(
    game: GameGraph,
    *,
    check: bool = False,
    time_limit: float | None = None,
) -> SolveResult:
    """Solve the unbounded problem via the reduction bound ``(|V|-1) * W``."""
    validate(game)
    n = game.vertex_count
    w_max = max_abs_weight(game)
    if (n - 1) * w_max * n >= WEIGHT_ENVELOPE:
        raise OverflowRisk(
            f"(|V|-1)*W*|V| = {(n - 1) * w_max * n} exceeds the 64-bit envelope"
        )
    return solve_lwub(game, (n - 1) * w_max, check=check, time_limit=time_limit)


def winning_sign(game: GameGraph, *, check: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Partition vertices into (mean value >= 0, mean value < 0).

    A vertex has non-negative value exactly when its unbounded energy
    requirement is finite.
    """
    res = solve_lb(game, check=check)
    nonneg = tuple(v for v in range(game.vertex_count) if res.lwub[v] != INF)
    neg = tuple(v for v in range(game.vertex_count) if res.lwub[v] == INF)
    return nonneg, neg


def dijkstra_longest(
    graph: GameGraph,
    bound: int,
    targets: Iterable[int],
    potentials: Sequence,
    *,
    check: bool = False,
) -> list:
    """Longest suffix-admissible path weights from every vertex to ``targets``.

    The graph must already be one-player in the relevant region: a Min
    vertex may keep parallel edges (its lightest one is traversed) but only
    one distinct successor, as in a strategy restriction.  Requires targets
    to carry potential 0 and - for meaningful results - every relevant edge
    to be non-positive under the potential transformation.
    """
    n = graph.vertex_count
    targets = set(targets)
    for v in targets:
        if potentials[v] != 0:
            raise ValueError(f"target {v} has potential {potentials[v]}, expected 0")
    is_min = [o is Owner.MIN for o in graph.owners]
    eff = _effective_min_weights(n, graph.out_adjacency, is_min)
    pi = [None] * n
    for v in range(n):
        if is_min[v]:
            if len(eff[v]) > 1:
                raise InvalidStrategy(
                    f"Min vertex {v} keeps {len(eff[v])} successors; pass a strategy restriction"
                )
            if eff[v]:
                pi[v] = next(iter(eff[v]))
    d, _ = _dijkstra(
        n, graph.in_adjacency, is_min, eff, pi, int(bound), targets, list(potentials), check
    )
    return d


def evaluate_strategy(
    game: GameGraph,
    bound: int,
    strategy: PositionalStrategy,
    d_prev: Sequence,
    *,
    check: bool = False,
) -> list:
    """Evaluate a Min strategy: d with -d the bounded energy requirement of
    the one-player restriction to the still-winnable vertices."""
    if strategy.player is not Owner.MIN:
        raise InvalidStrategy("evaluation expects a Min strategy")
    validate_strategy(game, strategy)
    n = game.vertex_count
    is_min = [o is Owner.MIN for o in game.owners]
    eff = _effective_min_weights(n, game.out_adjacency, is_min)
    pi = [None] * n
    for v, u in strategy.choice.items():
        pi[v] = u
    d_prev = list(d_prev)
    if check:
        _check_entry(n, game.out_adjacency, is_min, eff, pi, d_prev)
    d, _, _, passes = _evaluate(
        n, game.out_adjacency, game.in_adjacency, is_min, eff, pi,
        int(bound), d_prev, check, None,
    )
    if passes > max(1, n):
        raise InvariantViolation(f"evaluation ran {passes} passes on {n} vertices")
    return d


def improve_strategy(
    game: GameGraph,
    d: Sequence,
    strategy: PositionalStrategy,
) -> tuple[PositionalStrategy, bool]:
    """Apply the switch condition ``d(v) > d(u) + w(v, u)`` to a Min strategy."""
    if strategy.player is not Owner.MIN:
        raise InvalidStrategy("only Min strategies are improved")
    validate_strategy(game, strategy)
    n = game.vertex_count
    is_min = [o is Owner.MIN for o in game.owners]
    eff = _effective_min_weights(n, game.out_adjacency, is_min)
    pi = [None] * n
    for v, u in strategy.choice.items():
        pi[v] = u
    changed = _improve(n, is_min, eff, pi, list(d))
    return _snapshot(pi, is_min), changed


def extract_max_strategy(
    game: GameGraph,
    d: Sequence,
    candidates: set[int],
    parents: Sequence[int],
) -> PositionalStrategy:
    """Read Max's optimal positional strategy off the final evaluation state.

    Vertices in the final candidate set follow any edge that is non-negative
    under the potential transformation (first such edge in adjacency order);
    other winnable vertices follow their longest-path forest parent; losing
    vertices take their first edge, the choice being irrelevant.
    """
    choice: dict[int, int] = {}
    for v in range(game.vertex_count):
        if game.owners[v] is not Owner.MAX:
            continue
        dv = d[v]
        if dv == NEG_INF:
            choice[v] = game.out_adjacency[v][0][0]
        elif v in candidates:
            for u, w in game.out_adjacency[v]:
                if w - dv + d[u] >= 0:
                    choice[v] = u
                    break
            else:
                raise InvariantViolation(f"candidate vertex {v} kept no non-negative edge")
        else:
            p = parents[v]
            if p < 0:
                raise InvariantViolation(f"winnable vertex {v} missing from the path forest")
            choice[v] = p
    return PositionalStrategy(Owner.MAX, choice)


def verify_min_witness(
    game: GameGraph,
    bound: int,
    witness: MinWitness,
    vertex: int,
    credit: int,
) -> ViolationTrace:
    """Check that the witness beats every Max behavior from a losing vertex.

    Simulates Min's playback rule over states (vertex, clamped energy,
    strategy index): Min plays the strategy indexed by the death index of the
    current losing region, switching only to lower indices; Max branches over
    all edges.  Energy is clamped to ``bound`` from above, and with that
    clamp a traversed segment of weight below ``-bound`` is exactly a drop of
    the clamped energy below zero, so a single absorbing "violated" outcome
    covers both losing conditions.

    Returns one violating play; raises WitnessIncomplete when some Max
    behavior survives, which signals an implementation bug.
    """
    validate(game)
    bound = int(bound)
    death = witness.death_index
    if death[vertex] is None:
        raise ValueError(f"vertex {vertex} is not losing; nothing to verify")
    if credit < 0:
        raise ValueError("credit must be non-negative")
    last = len(witness.strategies) - 1
    choice = [s.choice for s in witness.strategies]
    is_min = [o is Owner.MIN for o in game.owners]
    # Min traverses the lightest parallel edge to her chosen target.
    min_edge = _effective_min_weights(game.vertex_count, game.out_adjacency, is_min)

    start = (vertex, min(credit, bound), min(death[vertex], last))
    parents: dict[tuple, tuple | None] = {start: None}
    succ: dict[tuple, list[tuple]] = {}
    queue = [start]
    head = 0
    first_violation = None  # (state, final vertex, final weight)
    while head < len(queue):
        state = queue[head]
        head += 1
        v, e, j = state
        if is_min[v]:
            u = choice[j][v]
            moves = [(u, min_edge[v][u])]
        else:
            moves = game.out_adjacency[v]
        kids = []
        for u, w in moves:
            e2 = e + w
            if e2 > bound:
                e2 = bound
            if e2 < 0:
                if first_violation is None:
                    first_violation = (state, u, w)
                continue
            du = death[u]
            j2 = j if du is None or du >= j else du
            nxt = (u, e2, j2)
            kids.append(nxt)
            if nxt not in parents:
                parents[nxt] = (state, u, w)
                queue.append(nxt)
        succ[state] = kids

    # Max survives iff the explored graph of non-violated states has a cycle.
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(succ, WHITE)
    for root in succ:
        if color[root] != WHITE:
            continue
        stack = [(root, 0)]
        color[root] = GRAY
        while stack:
            node, i = stack.pop()
            kids = succ[node]
            advanced = False
            while i < len(kids):
                kid = kids[i]
                i += 1
                c = color[kid]
                if c == GRAY:
                    raise WitnessIncomplete(
                        f"a play may cycle safely through state {kid}"
                    )
                if c == WHITE:
                    stack.append((node, i))
                    color[kid] = GRAY
                    stack.append((kid, 0))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK

    if first_violation is None:
        raise WitnessIncomplete("exploration found no violating play")
    state, final_vertex, final_weight = first_violation
    rev_vertices = [final_vertex]
    rev_weights = [final_weight]
    cur = state
    while cur is not None:
        rev_vertices.append(cur[0])
        link = parents[cur]
        if link is None:
            break
        prev_state, _, w = link
        rev_weights.append(w)
        cur = prev_state
    rev_vertices.reverse()
    rev_weights.reverse()
    return ViolationTrace(tuple(rev_vertices), tuple(rev_weights))
