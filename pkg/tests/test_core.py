import pytest

from mpgsolve import (
    DanglingEdge,
    EmptyKeepSet,
    GameGraph,
    InvalidStrategy,
    Owner,
    PositionalStrategy,
    SUBGAME_SELF_LOOP_WEIGHT,
    ZeroOutDegree,
    cycle_weight,
    induced_subgame,
    max_abs_weight,
    oracle_lwub,
    path_weight,
    restrict_to_strategy,
    validate,
)
from conftest import random_game

INF = float("inf")


def chain_abc():
    # a -> b -> c -> c
    return GameGraph(
        3,
        [Owner.MAX, Owner.MAX, Owner.MAX],
        [(0, 1, 2), (1, 2, -3), (2, 2, 0)],
    )


class TestValidate:
    def test_minimal_legal_game(self):
        validate(GameGraph(1, [Owner.MAX], [(0, 0, 0)]))

    def test_single_vertex_without_edges(self):
        with pytest.raises(ZeroOutDegree) as err:
            validate(GameGraph(1, [Owner.MAX], []))
        assert err.value.vertex == 0

    def test_sink_vertex(self):
        g = GameGraph(2, [Owner.MAX, Owner.MIN], [(0, 1, 5)])
        with pytest.raises(ZeroOutDegree) as err:
            validate(g)
        assert err.value.vertex == 1

    def test_dangling_edge(self):
        g = GameGraph(2, [Owner.MAX, Owner.MIN], [(0, 1, 1), (1, 5, 0)])
        with pytest.raises(DanglingEdge):
            validate(g)


class TestRestrict:
    def test_min_choice_removes_other_edges(self):
        g = GameGraph(
            3,
            [Owner.MIN, Owner.MAX, Owner.MAX],
            [(0, 1, 1), (0, 2, 2), (1, 1, 0), (2, 2, 0)],
        )
        restricted = restrict_to_strategy(g, PositionalStrategy(Owner.MIN, {0: 1}))
        assert sorted(restricted.edges) == [(0, 1, 1), (1, 1, 0), (2, 2, 0)]

    def test_empty_strategy_when_no_min_vertices(self):
        g = chain_abc()
        restricted = restrict_to_strategy(g, PositionalStrategy(Owner.MIN, {}))
        assert restricted == g

    def test_memory_game_shape_choice(self):
        # Min vertex 2 with edges to 0 and 3; choosing 3 drops (2, 0)
        from mpgsolve import memory_game

        g = memory_game()
        restricted = restrict_to_strategy(g, PositionalStrategy(Owner.MIN, {2: 3}))
        assert (2, 0, -13) not in restricted.edges
        assert (2, 3, 7) in restricted.edges

    def test_invalid_choice_rejected(self):
        g = chain_abc()
        bad = PositionalStrategy(Owner.MAX, {0: 2, 1: 2, 2: 2})
        with pytest.raises(InvalidStrategy):
            restrict_to_strategy(g, bad)

    def test_partial_domain_rejected(self):
        g = GameGraph(2, [Owner.MIN, Owner.MIN], [(0, 1, 0), (1, 0, 0)])
        with pytest.raises(InvalidStrategy):
            restrict_to_strategy(g, PositionalStrategy(Owner.MIN, {0: 1}))

    def test_restriction_preserves_structure(self, rng):
        for _ in range(50):
            g = random_game(rng)
            min_vs = g.vertices_of(Owner.MIN)
            pi = PositionalStrategy(
                Owner.MIN, {v: min(u for u, _ in g.out_adjacency[v]) for v in min_vs}
            )
            r = restrict_to_strategy(g, pi)
            assert r.vertex_count == g.vertex_count
            assert r.owners == g.owners
            assert set(r.edges) <= set(g.edges)
            for v in range(g.vertex_count):
                if v in pi.choice:
                    assert {u for u, _ in r.out_adjacency[v]} == {pi.choice[v]}
                else:
                    assert r.out_adjacency[v] == g.out_adjacency[v]


class TestInducedSubgame:
    def test_full_set_is_identity(self, rng):
        for _ in range(20):
            g = random_game(rng)
            assert induced_subgame(g, range(g.vertex_count)) == g

    def test_chain_prefix_gets_self_loop(self):
        # pure chain a -> b -> c; cutting c leaves b with no successor
        g = GameGraph(3, [Owner.MAX] * 3, [(0, 1, 2), (1, 2, -3)])
        sub = induced_subgame(g, [0, 1])
        assert sub.vertex_count == 2
        assert sorted(sub.edges) == [(0, 1, 2), (1, 1, SUBGAME_SELF_LOOP_WEIGHT)]

    def test_singleton_is_losing_at_any_bound(self):
        g = GameGraph(3, [Owner.MAX] * 3, [(0, 1, 2), (1, 2, -3)])
        sub = induced_subgame(g, [2])
        assert sub.edges == ((0, 0, SUBGAME_SELF_LOOP_WEIGHT),)
        for b in (0, 3, 12):
            assert oracle_lwub(sub, b) == [INF]

    def test_empty_keep_set(self):
        with pytest.raises(EmptyKeepSet):
            induced_subgame(chain_abc(), [])


class TestWeights:
    def test_max_abs_weight(self):
        g = GameGraph(2, [Owner.MAX, Owner.MAX], [(0, 1, -3), (1, 0, 2)])
        assert max_abs_weight(g) == 3
        assert max_abs_weight(GameGraph(1, [Owner.MAX], [(0, 0, 0)])) == 0
        g = GameGraph(2, [Owner.MAX, Owner.MAX], [(0, 1, -10000), (1, 0, 9999)])
        assert max_abs_weight(g) == 10000

    def test_path_weight_concatenation(self, rng):
        for _ in range(50):
            g = random_game(rng, n_max=6)
            # random walk of length 6 split at a random point
            v = rng.randrange(g.vertex_count)
            walk = [v]
            for _ in range(6):
                walk.append(rng.choice(g.out_adjacency[walk[-1]])[0])
            cut = rng.randint(0, 6)
            left, right = walk[: cut + 1], walk[cut:]
            assert path_weight(g, walk) == path_weight(g, left) + path_weight(g, right)

    def test_cycle_weight_closes_the_loop(self):
        g = GameGraph(2, [Owner.MAX, Owner.MAX], [(0, 1, 2), (1, 0, -1)])
        assert cycle_weight(g, [0, 1]) == 1
        assert cycle_weight(g, [1, 0]) == 1
