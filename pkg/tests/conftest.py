import random

from abmod.graph import Graph, VertexSet
from abmod.io import gen_random

PARAM_PAIRS = [(0, 0), (1, 0), (0, 1), (1, 1)]


def random_graph(seed: int, n_min: int = 1, n_max: int = 10, p: float | None = None) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    prob = p if p is not None else rng.choice([0.15, 0.3, 0.5, 0.7])
    return gen_random(n, prob, seed * 7919 + 13)


def planted_module_graph(seed: int, n_min: int = 5, n_max: int = 10):
    """Random graph rewired so a chosen set is a classical module.

    Random graphs are almost always prime, so laws about module pairs would
    test vacuously without planting.
    """
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    g = gen_random(n, rng.choice([0.2, 0.4, 0.6]), seed * 31 + 7)
    size = rng.randint(2, max(2, n // 2))
    chosen = rng.sample(range(n), size)
    sset = set(chosen)
    edges = set(g.edges)
    for x in range(n):
        if x in sset:
            continue
        attach = rng.random() < 0.5
        for v in chosen:
            e = (min(x, v), max(x, v))
            if attach:
                edges.add(e)
            else:
                edges.discard(e)
    return Graph(n, sorted(edges)), VertexSet.from_ids(n, sorted(chosen))


def random_subset(rng: random.Random, n: int, size: int) -> VertexSet:
    return VertexSet.from_ids(n, rng.sample(range(n), size))
