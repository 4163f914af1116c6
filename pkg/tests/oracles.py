"""Independent oracles used by the test-suite.

These deliberately avoid qforge's own linear algebra: the graph-table
classifier looks only at degrees, arm lengths and multiplicities, and the
Hom oracle sets up the morphism equations symbolically with sympy.
"""

import itertools
from collections import Counter
from fractions import Fraction

import sympy as sp

FINITE = "Finite"
TAME = "TameEuclidean"
WILD = "InfiniteNonEuclidean"


def _arms(n, adj, center):
    """Lengths of the paths hanging off a branch vertex in a tree."""
    lengths = []
    for start in adj[center]:
        prev, cur, length = center, start, 1
        while len(adj[cur]) == 2:
            nxt = next(y for y in adj[cur] if y != prev)
            prev, cur, length = cur, nxt, length + 1
        lengths.append(length)
    return lengths


def graph_table_class(n, edges):
    """Classify a connected loop-free multigraph by the A/D/E and A~/D~/E~ tables."""
    mult = Counter(tuple(sorted(e)) for e in edges)
    if any(i == j for i, j in mult):
        raise ValueError("loops are not allowed")
    if max(mult.values(), default=0) >= 3:
        return WILD
    if max(mult.values(), default=0) == 2:
        return TAME if n == 2 and len(edges) == 2 else WILD
    m = len(edges)
    adj = [set() for _ in range(n)]
    for i, j in mult:
        adj[i].add(j)
        adj[j].add(i)
    deg = [len(a) for a in adj]
    if m > n:
        return WILD
    if m == n:
        return TAME if all(d == 2 for d in deg) and n >= 3 else WILD
    # tree
    branch = [x for x in range(n) if deg[x] >= 3]
    if not branch:
        return FINITE
    if len(branch) == 1:
        c = branch[0]
        if deg[c] >= 5:
            return WILD
        arms = _arms(n, adj, c)
        if deg[c] == 4:
            return TAME if arms == [1, 1, 1, 1] else WILD
        s = sum(Fraction(1, a + 1) for a in arms)
        return FINITE if s > 1 else TAME if s == 1 else WILD
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        # D~: each branch vertex carries two single-leaf arms
        for b in branch:
            if sum(1 for y in adj[b] if deg[y] == 1) != 2:
                return WILD
        return TAME
    return WILD


def is_connected(n, edges):
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def connected_multigraphs(max_vertices, max_edges):
    """Every connected loop-free multigraph on 1..max_vertices labelled vertices."""
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for k in range(max(n - 1, 0), max_edges + 1):
            for edges in itertools.combinations_with_replacement(pairs, k):
                if is_connected(n, edges):
                    yield n, list(edges)


def _sym(M):
    return sp.Matrix(M.rows, M.cols, [sp.Rational(x.numerator, x.denominator) for x in M.entries])


def sympy_hom_dim(V, W):
    """dim Hom(V, W) from the symbolic system phi_h V(a) = W(a) phi_t."""
    Q = V.quiver
    phis, unknowns = [], []
    for x in Q.vertices:
        syms = sp.symbols(f"p{x}_0:{V.dim[x] * W.dim[x]}") if V.dim[x] * W.dim[x] else ()
        unknowns.extend(syms)
        phis.append(sp.Matrix(W.dim[x], V.dim[x], list(syms)))
    eqs = []
    for a, (t, h) in enumerate(Q.arrows):
        eqs.extend(phis[h] * _sym(V.maps[a]) - _sym(W.maps[a]) * phis[t])
    if not unknowns:
        return 0
    if not eqs:
        return len(unknowns)
    A = sp.Matrix([[sp.diff(e, u) for u in unknowns] for e in eqs])
    return len(unknowns) - A.rank()


def sympy_rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    return _sym(M).rank()
