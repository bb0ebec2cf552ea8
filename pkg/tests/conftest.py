import random

import pytest

from mpgsolve import GameGraph, Owner


def random_game(rng: random.Random, n_max: int = 7, w_max: int = 4) -> GameGraph:
    """Arbitrary valid game: random owners, out-degrees 1..3, weights in [-w, w]."""
    n = rng.randint(1, n_max)
    owners = [Owner.MAX if rng.random() < 0.5 else Owner.MIN for _ in range(n)]
    edges = []
    for v in range(n):
        for _ in range(rng.randint(1, min(3, n))):
            edges.append((v, rng.randrange(n), rng.randint(-w_max, w_max)))
    return GameGraph(n, owners, edges)


@pytest.fixture
def rng():
    return random.Random(20240917)
