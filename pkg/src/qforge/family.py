"""Built-in test quivers: Euclidean orientations, small wild quivers, Dynkin gates."""

from __future__ import annotations

import itertools
import json
import random
from importlib import resources

from .quiver import Quiver, QuiverClass, classify, is_acyclic, is_connected


def orientations(n: int, edges):
    """Every acyclic quiver on n vertices with the given undirected edges."""
    for flips in itertools.product((False, True), repeat=len(edges)):
        Q = Quiver(n, tuple((j, i) if f else (i, j) for (i, j), f in zip(edges, flips)))
        if is_acyclic(Q):
            yield Q


def cycle_edges(n: int) -> list:
    """Edges of the cycle graph on n vertices (Euclidean type A~_{n-1})."""
    return [(i, (i + 1) % n) for i in range(n)]


def d_tilde_edges(n: int) -> list:
    """D~_n on n + 1 vertices: leaves 0, 1 on vertex 2, a path 2..n-2, leaves n-1, n on n-2."""
    if n == 4:
        return [(0, 4), (1, 4), (2, 4), (3, 4)]
    edges = [(0, 2), (1, 2)]
    edges += [(i, i + 1) for i in range(2, n - 2)]
    edges += [(n - 2, n - 1), (n - 2, n)]
    return edges


E6_TILDE_EDGES = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]


def inward(n: int, edges) -> Quiver:
    return Quiver(n, tuple(edges))


def outward(n: int, edges) -> Quiver:
    return Quiver(n, tuple((j, i) for i, j in edges))


def euclidean_family() -> list:
    """(name, quiver) for every bundled Euclidean orientation."""
    fam = [("theta2", Quiver(2, ((0, 1), (0, 1))))]
    for k, n in ((2, 3), (3, 4)):
        for i, Q in enumerate(orientations(n, cycle_edges(n))):
            fam.append((f"A{k}~/{i}", Q))
    # first edge endpoint is the leaf side for the D~ and E~ edge lists below
    d4 = [(0, 4), (1, 4), (2, 4), (3, 4)]
    fam.append(("D4~/in", Quiver(5, tuple(d4))))
    fam.append(("D4~/out", outward(5, d4)))
    d5 = d_tilde_edges(5)
    fam.append(("D5~/a", Quiver(6, tuple(d5))))
    fam.append(("D5~/b", outward(6, d5)))
    fam.append(("E6~/a", outward(7, E6_TILDE_EDGES)))
    fam.append(("E6~/b", Quiver(7, ((1, 0), (1, 2), (0, 3), (4, 3), (5, 0), (5, 6)))))
    return fam


def random_wild_quiver(n: int, rng: random.Random, extra: int = 2, simple: bool = False) -> Quiver:
    """Random connected acyclic quiver on n vertices that is not Dynkin or Euclidean.

    With ``simple`` the underlying graph has no parallel edges.
    """
    while True:
        order = list(range(n))
        rng.shuffle(order)
        rank = {v: i for i, v in enumerate(order)}
        pairs = [(rng.randrange(i), i) for i in range(1, n)]  # spanning tree
        pairs += [tuple(sorted(rng.sample(range(n), 2))) for _ in range(extra)]
        arrows = []
        for i, j in pairs:
            t, h = (i, j) if rank[i] < rank[j] else (j, i)
            arrows.append((t, h))
        Q = Quiver(n, tuple(arrows))
        if simple and len({tuple(sorted(a)) for a in arrows}) < len(arrows):
            continue
        if is_connected(Q) and is_acyclic(Q) and classify(Q) is QuiverClass.INFINITE_NON_EUCLIDEAN:
            return Q


def random_acyclic_quiver(rng, max_vertices: int = 6, max_arrows: int = 8) -> Quiver:
    """Random (possibly disconnected) acyclic multigraph quiver."""
    n = rng.randint(1, max_vertices)
    order = list(range(n))
    rng.shuffle(order)
    arrows = []
    if n > 1:
        for _ in range(rng.randint(0, max_arrows)):
            i, j = sorted(rng.sample(range(n), 2))
            arrows.append((order[i], order[j]))
    return Quiver(n, tuple(arrows))


def load_bundled(name: str) -> Quiver:
    """Load one of the quiver files shipped in qforge/data (e.g. ``"theta3"``)."""
    text = resources.files("qforge").joinpath("data", f"{name}.json").read_text()
    return Quiver.from_json(json.loads(text))


BUNDLED_FILES = ("theta2", "theta3", "a3", "d4_tilde", "e6_tilde", "wild5_0", "wild5_1", "wild5_2")


def wild_family() -> list:
    return [(f"wild5_{i}", load_bundled(f"wild5_{i}")) for i in range(3)]


def forge_family() -> list:
    """The quivers that forge must handle with an all-pass certificate."""
    extra = [("theta3", load_bundled("theta3"))]
    return euclidean_family() + extra + wild_family()
