"""Seeded instance generators.

Families:

* ``sprand``  - a random Hamiltonian cycle plus extra uniform random edges,
  weights uniform in a range and then shifted down by a constant;
* ``torus``   - a 2-d grid with wrap-around (right and down neighbours),
  optionally with extra random cycles;
* ``layered`` - layers connected forward and wrapping around in the layer
  dimension, a documented approximation of layered networks on a torus;
* ``collect`` / ``supply`` / ``taxi`` - small reactive-system models, see
  the builders below.

Generation is a pure function of the spec.  Randomness comes from the
stdlib Mersenne Twister with one substream per phase (structure, weights,
owners), derived as ``seed * 8 + phase``, so adding structure never
perturbs the weights already drawn and owner assignment is independent of
both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .core import GameGraph, Owner, validate
from .errors import InvalidSpec
from .kasi import winning_sign

_PHASE_STRUCTURE = 1
_PHASE_WEIGHTS = 2
_PHASE_OWNERS = 3


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance; unused fields are ignored."""

    family: str
    seed: int = 0
    # sprand
    n: int = 0
    edge_factor: float = 2.0
    # torus / layered grids
    rows: int = 0
    cols: int = 0
    layers: int = 0
    width: int = 0
    added_cycles: int = 0
    cycle_len: int = 8
    # weights
    weight_lo: int = 1
    weight_hi: int = 10000
    shift: int = 0
    # collect
    grid: int = 3
    docks: int = 1
    phases: int = 2
    idle_cost: int = -1
    move_cost: int = -2
    recharge: int = 5
    item_value: int = 1
    # supply
    sites: int = 2
    max_request: int = 2
    refill: int = 3
    # taxi
    zones: int = 3
    margin: int = 1
    idle_fee: int = -1


def _rng(spec: GenSpec, phase: int) -> random.Random:
    return random.Random(spec.seed * 8 + phase)


def _draw_weight(spec: GenSpec, rng: random.Random) -> int:
    if spec.weight_lo > spec.weight_hi:
        raise InvalidSpec(f"empty weight range [{spec.weight_lo}, {spec.weight_hi}]")
    return rng.randint(spec.weight_lo, spec.weight_hi) - spec.shift


def _draw_owners(spec: GenSpec, n: int) -> list[Owner]:
    rng = _rng(spec, _PHASE_OWNERS)
    return [Owner.MAX if rng.randrange(2) == 0 else Owner.MIN for _ in range(n)]


def gen_sprand(spec: GenSpec) -> GameGraph:
    """Random Hamiltonian cycle plus ``edge_factor * n - n`` random edges."""
    n = spec.n
    if n < 1:
        raise InvalidSpec("sprand needs n >= 1")
    m = int(spec.edge_factor * n)
    if m < n:
        raise InvalidSpec("sprand needs edge_factor * n >= n")
    structure = _rng(spec, _PHASE_STRUCTURE)
    weights = _rng(spec, _PHASE_WEIGHTS)
    perm = list(range(n))
    structure.shuffle(perm)
    edges = []
    for i in range(n):
        edges.append((perm[i], perm[(i + 1) % n], _draw_weight(spec, weights)))
    for _ in range(m - n):
        u = structure.randrange(n)
        v = structure.randrange(n)
        edges.append((u, v, _draw_weight(spec, weights)))
    g = GameGraph(n, _draw_owners(spec, n), edges)
    validate(g)
    return g


def _add_cycles(spec: GenSpec, n: int, edges, structure, weights) -> None:
    for _ in range(spec.added_cycles):
        k = min(spec.cycle_len, n)
        if k < 1:
            raise InvalidSpec("cycle_len must be >= 1")
        cyc = structure.sample(range(n), k)
        for i in range(k):
            edges.append((cyc[i], cyc[(i + 1) % k], _draw_weight(spec, weights)))


def gen_torus(spec: GenSpec) -> GameGraph:
    """Grid with wrap-around: every cell points right and down."""
    rows, cols = spec.rows, spec.cols
    if rows < 2 or cols < 2:
        raise InvalidSpec("torus needs rows >= 2 and cols >= 2")
    n = rows * cols
    structure = _rng(spec, _PHASE_STRUCTURE)
    weights = _rng(spec, _PHASE_WEIGHTS)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            edges.append((v, r * cols + (c + 1) % cols, _draw_weight(spec, weights)))
            edges.append((v, ((r + 1) % rows) * cols + c, _draw_weight(spec, weights)))
    _add_cycles(spec, n, edges, structure, weights)
    g = GameGraph(n, _draw_owners(spec, n), edges)
    validate(g)
    return g


def gen_layered(spec: GenSpec) -> GameGraph:
    """Layered approximation: layer l feeds layer l+1 (wrapping), each vertex
    hitting the same and the next column of the next layer."""
    layers, width = spec.layers, spec.width
    if layers < 2 or width < 1:
        raise InvalidSpec("layered needs layers >= 2 and width >= 1")
    n = layers * width
    structure = _rng(spec, _PHASE_STRUCTURE)
    weights = _rng(spec, _PHASE_WEIGHTS)
    edges = []
    for l in range(layers):
        for i in range(width):
            v = l * width + i
            nl = ((l + 1) % layers) * width
            edges.append((v, nl + i, _draw_weight(spec, weights)))
            edges.append((v, nl + (i + 1) % width, _draw_weight(spec, weights)))
    _add_cycles(spec, n, edges, structure, weights)
    g = GameGraph(n, _draw_owners(spec, n), edges)
    validate(g)
    return g


def _gen_collect(spec: GenSpec) -> GameGraph:
    """Robot-on-a-grid model.

    States are (cell, phase) pairs, doubled into a robot half (Max) and a
    scheduler half (Min).  The robot idles (idle_cost), moves four-ways
    (move_cost), recharges on a dock cell (+recharge) and collects the
    phase's item cell on entry (+item_value); after each robot action the
    scheduler re-picks the phase over weight-0 edges.  The energy account is
    the battery; it is not part of the state space.
    """
    side = spec.grid
    if side < 1 or spec.phases < 1:
        raise InvalidSpec("collect needs grid >= 1 and phases >= 1")
    if spec.docks < 0 or spec.docks > side * side:
        raise InvalidSpec("docks out of range")
    if spec.idle_cost >= 0 or spec.move_cost >= 0:
        raise InvalidSpec("idle and move costs must be negative")
    if spec.item_value < 0 or spec.move_cost + spec.item_value >= 0:
        raise InvalidSpec("item_value must be non-negative and keep robot moves negative")
    cells = side * side
    structure = _rng(spec, _PHASE_STRUCTURE)
    dock_cells = set(structure.sample(range(cells), spec.docks))
    item_cells = [structure.randrange(cells) for _ in range(spec.phases)]

    def robot(cell: int, phase: int) -> int:
        return 2 * (phase * cells + cell)

    def scheduler(cell: int, phase: int) -> int:
        return robot(cell, phase) + 1

    n = 2 * cells * spec.phases
    owners = [Owner.MAX] * n
    edges = []
    for phase in range(spec.phases):
        for cell in range(cells):
            owners[scheduler(cell, phase)] = Owner.MIN
            r, c = divmod(cell, side)
            moves = [(cell, spec.idle_cost)]
            for r2, c2 in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if 0 <= r2 < side and 0 <= c2 < side:
                    dest = r2 * side + c2
                    w = spec.move_cost
                    if dest == item_cells[phase]:
                        w += spec.item_value
                    moves.append((dest, w))
            if cell in dock_cells:
                moves.append((cell, spec.recharge))
            for dest, w in moves:
                edges.append((robot(cell, phase), scheduler(dest, phase), w))
            for phase2 in range(spec.phases):
                edges.append((scheduler(cell, phase), robot(cell, phase2), 0))
    return GameGraph(n, owners, edges)


def _gen_supply(spec: GenSpec) -> GameGraph:
    """Delivery-truck model.

    A dispatcher (Min) at each site issues a request (site, amount) over
    weight-0 edges; the truck (Max) either delivers straight away (-amount)
    or restocks first (+refill - amount).  The material stock is the energy
    account.  Site 0 is the depot.
    """
    sites, rmax = spec.sites, spec.max_request
    if sites < 1 or rmax < 1:
        raise InvalidSpec("supply needs sites >= 1 and max_request >= 1")
    if spec.refill <= 0:
        raise InvalidSpec("refill must be positive")

    def dispatch(s: int) -> int:
        return s

    def pending(s: int, t: int, a: int) -> int:
        return sites + ((s * sites + t) * rmax + (a - 1))

    n = sites + sites * sites * rmax
    owners = [Owner.MIN] * sites + [Owner.MAX] * (sites * sites * rmax)
    edges = []
    for s in range(sites):
        for t in range(sites):
            for a in range(1, rmax + 1):
                edges.append((dispatch(s), pending(s, t, a), 0))
                edges.append((pending(s, t, a), dispatch(t), -a))
                edges.append((pending(s, t, a), dispatch(t), spec.refill - a))
    return GameGraph(n, owners, edges)


def _gen_taxi(spec: GenSpec) -> GameGraph:
    """Taxi model.

    Riders (Min) request trips between zones on a ring; the taxi (Max)
    either accepts (earning the trip distance plus a margin, minus the
    deadhead distance to the pickup) or declines and pays an idle fee.  The
    cash balance is the energy account.
    """
    zones = spec.zones
    if zones < 2:
        raise InvalidSpec("taxi needs zones >= 2")
    if spec.idle_fee >= 0:
        raise InvalidSpec("idle_fee must be negative")

    def ring(a: int, b: int) -> int:
        d = abs(a - b)
        return min(d, zones - d)

    def idle(z: int) -> int:
        return z

    offered: dict[tuple[int, int, int], int] = {}
    for z in range(zones):
        for a in range(zones):
            for b in range(zones):
                if a != b:
                    offered[(z, a, b)] = zones + len(offered)

    n = zones + len(offered)
    owners = [Owner.MIN] * zones + [Owner.MAX] * len(offered)
    edges = []
    for (z, a, b), o in offered.items():
        edges.append((idle(z), o, 0))
        edges.append((o, idle(b), -ring(z, a) + ring(a, b) + spec.margin))
        edges.append((o, idle(z), spec.idle_fee))
    return GameGraph(n, owners, edges)


_MODEL_BUILDERS = {
    "collect": _gen_collect,
    "supply": _gen_supply,
    "taxi": _gen_taxi,
}


def gen_model(spec: GenSpec) -> GameGraph:
    """Build one of the reactive-system models (collect, supply, taxi)."""
    builder = _MODEL_BUILDERS.get(spec.family)
    if builder is None:
        raise InvalidSpec(f"unknown model family {spec.family!r}")
    g = builder(spec)
    validate(g)
    return g


_FAMILIES = {
    "sprand": gen_sprand,
    "torus": gen_torus,
    "layered": gen_layered,
    "collect": gen_model,
    "supply": gen_model,
    "taxi": gen_model,
}


def generate(spec: GenSpec) -> GameGraph:
    """Dispatch on ``spec.family``."""
    builder = _FAMILIES.get(spec.family)
    if builder is None:
        raise InvalidSpec(f"unknown family {spec.family!r}; choose from {sorted(_FAMILIES)}")
    return builder(spec)


def find_balancing_shift(spec: GenSpec, lo: int, hi: int) -> int:
    """Smallest shift in [lo, hi] whose instance has both value signs.

    Larger shifts push more vertices to negative value, so the negative
    class appears monotonically; binary search finds the frontier, then the
    neighbourhood is scanned in case the frontier jumps straight from
    all-non-negative to all-negative.  Desk-scale instances only.
    """
    if lo > hi:
        raise InvalidSpec("empty shift range")

    def classes(shift: int):
        g = generate(replace(spec, shift=shift))
        return winning_sign(g)

    a, b = lo, hi
    while a < b:
        mid = (a + b) // 2
        _, neg = classes(mid)
        if neg:
            b = mid
        else:
            a = mid + 1
    for shift in range(max(lo, a - 1), min(hi, a + 1) + 1):
        nonneg, neg = classes(shift)
        if nonneg and neg:
            return shift
    raise InvalidSpec(f"no shift in [{lo}, {hi}] yields both winning classes")
