import dataclasses
import itertools
import random
from typing import Callable

import pytest

from hyperwiener.core.hypergraph import Hypergraph
from hyperwiener.settings import settings

RandomConnected = Callable[[random.Random], Hypergraph]


@pytest.fixture(autouse=True)
def default_settings():
    """
    Restore the global settings after every test, the CLI may load a config file.
    """
    saved = dataclasses.asdict(settings)
    yield settings
    for name, value in saved.items():
        setattr(settings, name, value)


def _random_connected(
    rng: random.Random, n_max: int = 10, k_max: int = 4, max_edges: int = 6
) -> Hypergraph:
    k = rng.randint(2, k_max)
    # growing from one edge, each new edge can bring k - 1 new vertices
    n_limit = min(n_max, k + (max_edges - 1) * (k - 1))
    n = rng.randint(k, n_limit)
    order = list(range(1, n + 1))
    rng.shuffle(order)

    covered = order[:k]
    edges = {tuple(sorted(covered))}
    for index in range(k, n, k - 1):
        fresh = order[index : index + k - 1]
        old = rng.sample(covered, k - len(fresh))
        edges.add(tuple(sorted(old + fresh)))
        covered.extend(fresh)

    extra = rng.randint(0, max_edges - len(edges))
    all_edges = list(itertools.combinations(range(1, n + 1), k))
    for edge in rng.sample(all_edges, min(extra, len(all_edges))):
        if len(edges) >= max_edges:
            break
        edges.add(edge)
    return Hypergraph(n, k, tuple(edges))


@pytest.fixture
def random_connected() -> RandomConnected:
    """
    Factory of random connected hypergraphs with n <= 10, k <= 4 and at most 6 edges.
    """
    return _random_connected
