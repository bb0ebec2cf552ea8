import pytest

from mpgsolve import (
    GenSpec,
    InvalidSpec,
    find_balancing_shift,
    generate,
    oracle_lb,
    oracle_lwub,
    validate,
)

INF = float("inf")


class TestSprand:
    def test_factor_one_is_a_plain_cycle(self):
        g = generate(GenSpec(family="sprand", n=5, edge_factor=1.0, seed=11))
        assert g.vertex_count == 5
        assert len(g.edges) == 5
        assert all(len(g.out_adjacency[v]) == 1 for v in range(5))

    def test_rand_family_shape(self):
        spec = GenSpec(family="sprand", n=100, edge_factor=5.0, seed=3, shift=4000)
        g = generate(spec)
        assert g.vertex_count == 100
        assert len(g.edges) == 500
        assert all(1 - 4000 <= w <= 10000 - 4000 for _, _, w in g.edges)

    def test_deterministic(self):
        spec = GenSpec(family="sprand", n=40, edge_factor=2.5, seed=99)
        assert generate(spec) == generate(spec)

    def test_strongly_connected_via_hamiltonian_cycle(self):
        g = generate(GenSpec(family="sprand", n=30, edge_factor=2.0, seed=5))
        reach = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for u, _ in g.out_adjacency[v]:
                if u not in reach:
                    reach.add(u)
                    frontier.append(u)
        assert reach == set(range(30))

    def test_structure_stream_independent_of_weights(self):
        # growing the edge count must not change the weights already drawn
        small = generate(GenSpec(family="sprand", n=10, edge_factor=1.0, seed=1))
        large = generate(GenSpec(family="sprand", n=10, edge_factor=3.0, seed=1))
        assert small.edges == large.edges[: len(small.edges)]

    def test_invalid_factor(self):
        with pytest.raises(InvalidSpec):
            generate(GenSpec(family="sprand", n=10, edge_factor=0.5))


class TestTorus:
    def test_two_by_two_counts(self):
        g = generate(GenSpec(family="torus", rows=2, cols=2, seed=0))
        assert g.vertex_count == 4
        assert len(g.edges) == 8

    def test_added_cycles_count(self):
        g = generate(
            GenSpec(family="torus", rows=16, cols=16, added_cycles=3, cycle_len=8, seed=2)
        )
        assert g.vertex_count == 256
        assert len(g.edges) == 512 + 3 * 8

    def test_deterministic(self):
        spec = GenSpec(family="torus", rows=5, cols=7, added_cycles=2, seed=4)
        assert generate(spec) == generate(spec)


class TestLayered:
    def test_shape(self):
        g = generate(GenSpec(family="layered", layers=6, width=4, seed=8))
        assert g.vertex_count == 24
        assert len(g.edges) == 48
        validate(g)


class TestModels:
    def test_collect_with_dock_is_everywhere_winnable(self):
        g = generate(GenSpec(family="collect", grid=3, docks=1, phases=2, seed=13))
        lb = oracle_lb(g)
        assert all(x != INF for x in lb)

    def test_collect_without_dock_is_lost_everywhere(self):
        g = generate(GenSpec(family="collect", grid=3, docks=0, phases=2, seed=13))
        assert all(x == INF for x in oracle_lb(g))

    def test_supply_depot_survives_small_bound(self):
        g = generate(GenSpec(family="supply", sites=2, max_request=2, refill=3, seed=0))
        values = oracle_lwub(g, 6)
        assert values[0] != INF  # dispatch state of the depot

    def test_taxi_validates_and_is_deterministic(self):
        spec = GenSpec(family="taxi", zones=3, margin=1, seed=21)
        g = generate(spec)
        validate(g)
        assert g == generate(spec)

    def test_all_families_validate(self):
        specs = [
            GenSpec(family="sprand", n=25, edge_factor=2.0, seed=1),
            GenSpec(family="torus", rows=4, cols=4, added_cycles=1, seed=1),
            GenSpec(family="layered", layers=4, width=3, seed=1),
            GenSpec(family="collect", grid=2, docks=1, phases=2, seed=1),
            GenSpec(family="supply", sites=2, max_request=2, seed=1),
            GenSpec(family="taxi", zones=3, seed=1),
        ]
        for spec in specs:
            validate(generate(spec))

    def test_unknown_family(self):
        with pytest.raises(InvalidSpec):
            generate(GenSpec(family="nope"))


class TestBalancingShift:
    def test_both_classes_present_at_found_shift(self):
        from dataclasses import replace

        from mpgsolve import winning_sign

        spec = GenSpec(family="sprand", n=20, edge_factor=3.0, seed=1,
                       weight_lo=1, weight_hi=10)
        shift = find_balancing_shift(spec, 0, 12)
        assert shift == 5
        nonneg, neg = winning_sign(generate(replace(spec, shift=shift)))
        assert nonneg and neg

    def test_unbalanceable_instance_is_reported(self):
        # every vertex flips sign at once on this strongly cyclic instance
        spec = GenSpec(family="sprand", n=12, edge_factor=2.0, seed=17,
                       weight_lo=1, weight_hi=10)
        with pytest.raises(InvalidSpec):
            find_balancing_shift(spec, 0, 12)
