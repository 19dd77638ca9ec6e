"""Instance generators: the extremal family, random matching families of
the two classical shapes, and a rejection sampler for the cooperative
hypothesis.  Every generator is a pure function of its parameters and
seed."""

from __future__ import annotations

from .core import BipartiteGraph, EdgeFamily, cooperative_condition
from .rng import SplitMix64


def sharpness_family(n: int, k: int) -> tuple[BipartiteGraph, EdgeFamily]:
    """The 2n+k-4 member family on K_{n,n} witnessing that the member count
    2n+k-3 cannot be lowered: n-1 copies of the diagonal matching, n-2
    copies of the shifted matching, and k-1 copies of the singleton
    {a_1 b_2}.  Every union of at least k members has a matching of size
    n, yet the largest rainbow matching has size n-1.
    """
    if n < 2 or k < 2:
        raise ValueError("need n >= 2 and k >= 2")
    g = BipartiteGraph.complete(n)
    diagonal = frozenset((i, i) for i in range(1, n + 1))
    shifted = frozenset((i, i % n + 1) for i in range(1, n + 1))
    singleton = frozenset({(1, 2)})
    sets = [diagonal] * (n - 1) + [shifted] * (n - 2) + [singleton] * (k - 1)
    return g, EdgeFamily(g, tuple(sets))


def drisko_family(n: int, seed: int = 0) -> EdgeFamily:
    """2n-1 uniformly random perfect matchings of K_{n,n}."""
    if n < 1:
        raise ValueError("need n >= 1")
    g = BipartiteGraph.complete(n)
    rng = SplitMix64(seed)
    sets = []
    for _ in range(2 * n - 1):
        cols = list(range(1, n + 1))
        rng.shuffle(cols)
        sets.append(frozenset((i + 1, cols[i]) for i in range(n)))
    return EdgeFamily(g, tuple(sets))


def staircase_family(k: int, seed: int = 0) -> EdgeFamily:
    """2k-1 random matchings in K_{k,k} with sizes min(i, k) for i = 1..2k-1."""
    if k < 1:
        raise ValueError("need k >= 1")
    g = BipartiteGraph.complete(k)
    rng = SplitMix64(seed)
    sets = []
    for i in range(1, 2 * k):
        size = min(i, k)
        rows = list(range(1, k + 1))
        cols = list(range(1, k + 1))
        rng.shuffle(rows)
        rng.shuffle(cols)
        sets.append(frozenset(zip(rows[:size], cols[:size])))
    return EdgeFamily(g, tuple(sets))


def random_cooperative_family(n: int, k: int, graph: BipartiteGraph,
                              seed: int = 0, attempts: int = 200,
                              density: float = 0.6) -> EdgeFamily | None:
    """Rejection-sample a family of 2n+k-3 nonempty edge subsets whose
    every k-union has matching number at least n; None when the attempt
    budget runs out.  Deterministic per seed."""
    rng = SplitMix64(seed)
    edges = sorted(graph.edges)
    numerator = max(0, min(1000, round(density * 1000)))
    members = 2 * n + k - 3
    for _ in range(attempts):
        sets = []
        for _ in range(members):
            chosen = {e for e in edges if rng.chance(numerator, 1000)}
            if not chosen:
                chosen = {rng.choice(edges)}
            sets.append(frozenset(chosen))
        fam = EdgeFamily(graph, tuple(sets))
        if cooperative_condition(fam, k, n) is None:
            return fam
    return None
