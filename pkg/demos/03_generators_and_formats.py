"""Tour of the instance generators and the text wire format."""

from dataclasses import replace

from mpgsolve import (
    GenSpec,
    find_balancing_shift,
    generate,
    max_abs_weight,
    parse_game,
    render_game,
    winning_sign,
)

families = [
    GenSpec(family="sprand", n=12, edge_factor=2.0, seed=5, weight_lo=1, weight_hi=10),
    GenSpec(family="torus", rows=3, cols=4, added_cycles=1, cycle_len=4, seed=5,
            weight_lo=-3, weight_hi=3),
    GenSpec(family="layered", layers=3, width=3, seed=5, weight_lo=-3, weight_hi=3),
    GenSpec(family="collect", grid=2, docks=1, phases=2, seed=5),
    GenSpec(family="supply", sites=2, max_request=2, refill=3, seed=5),
    GenSpec(family="taxi", zones=3, margin=1, seed=5),
]

for spec in families:
    g = generate(spec)
    assert parse_game(render_game(g)) == g  # the format round-trips exactly
    print(f"{spec.family:8s} |V|={g.vertex_count:3d} |E|={len(g.edges):4d} W={max_abs_weight(g)}")

print()
print("Balancing a random instance so both winning classes are non-empty:")
spec = GenSpec(family="sprand", n=20, edge_factor=3.0, seed=1, weight_lo=1, weight_hi=10)
shift = find_balancing_shift(spec, 0, 12)
nonneg, neg = winning_sign(generate(replace(spec, shift=shift)))
print(f"shift {shift}: {len(nonneg)} vertices with value >= 0, {len(neg)} below")

print()
print("A small instance in full:")
print(render_game(generate(GenSpec(family="torus", rows=2, cols=2, seed=5,
                                   weight_lo=-2, weight_hi=2))))
