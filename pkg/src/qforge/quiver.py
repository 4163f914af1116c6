"""Quivers, dimension vectors, Euler/Tits forms and the finite/tame/wild split."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import RatMatrix, inertia, kernel_basis


class QuiverError(ValueError):
    """Raised for invalid quivers, dimension vectors or precondition violations."""


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple  # of (tail, head) pairs; position = arrow index

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(t), int(h)) for t, h in self.arrows))
        if self.vertex_count < 0:
            raise QuiverError("vertex_count must be nonnegative")
        for idx, (t, h) in enumerate(self.arrows):
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise QuiverError(f"arrow {idx} = ({t}->{h}) leaves the vertex range 0..{self.vertex_count - 1}")

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def tail(self, a: int) -> int:
        return self.arrows[a][0]

    def head(self, a: int) -> int:
        return self.arrows[a][1]

    def is_source(self, x: int) -> bool:
        return all(h != x for _, h in self.arrows)

    def is_sink(self, x: int) -> bool:
        return all(t != x for t, _ in self.arrows)

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count,
                "arrows": [{"tail": t, "head": h} for t, h in self.arrows]}

    @classmethod
    def from_json(cls, obj: dict) -> "Quiver":
        try:
            n = obj["vertices"]
            arrows = [(a["tail"], a["head"]) for a in obj["arrows"]]
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"malformed quiver object: {exc!r}") from None
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise QuiverError("'vertices' must be a positive integer")
        return cls(n, tuple(arrows))


def kronecker(m: int) -> Quiver:
    """theta(m): two vertices, m parallel arrows 0 -> 1."""
    return Quiver(2, ((0, 1),) * m)


def check_vector(Q: Quiver, alpha: Sequence[int]) -> tuple:
    if len(alpha) != Q.vertex_count:
        raise QuiverError(f"dimension vector of length {len(alpha)} on a quiver with {Q.vertex_count} vertices")
    return tuple(int(a) for a in alpha)


def unit_vector(Q: Quiver, x: int) -> tuple:
    return tuple(int(y == x) for y in Q.vertices)


# graph predicates --------------------------------------------------------


def is_acyclic(Q: Quiver) -> bool:
    indeg = [0] * Q.vertex_count
    out = [[] for _ in Q.vertices]
    for t, h in Q.arrows:
        indeg[h] += 1
        out[t].append(h)
    queue = deque(x for x in Q.vertices if indeg[x] == 0)
    seen = 0
    while queue:
        x = queue.popleft()
        seen += 1
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen == Q.vertex_count


def is_connected(Q: Quiver) -> bool:
    if Q.vertex_count == 0:
        return False
    adj = [set() for _ in Q.vertices]
    for t, h in Q.arrows:
        adj[t].add(h)
        adj[h].add(t)
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == Q.vertex_count


# forms -------------------------------------------------------------------


def euler_form(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """<alpha, beta> = sum_x alpha(x) beta(x) - sum_a alpha(ta) beta(ha)."""
    alpha = check_vector(Q, alpha)
    beta = check_vector(Q, beta)
    return (sum(a * b for a, b in zip(alpha, beta))
            - sum(alpha[t] * beta[h] for t, h in Q.arrows))


def tits_form(Q: Quiver, alpha: Sequence[int]) -> int:
    return euler_form(Q, alpha, alpha)


def symmetrized_matrix(Q: Quiver) -> RatMatrix:
    """S[x][y] = <e_x, e_y> + <e_y, e_x>."""
    n = Q.vertex_count
    S = [[Fraction(2 if x == y else 0) for y in range(n)] for x in range(n)]
    for t, h in Q.arrows:
        S[t][h] -= 1
        S[h][t] -= 1
    return RatMatrix.from_rows(S, cols=n)


class QuiverClass(enum.Enum):
    FINITE = "Finite"
    TAME_EUCLIDEAN = "TameEuclidean"
    INFINITE_NON_EUCLIDEAN = "InfiniteNonEuclidean"

    def __str__(self):
        return self.value


def _require_connected_acyclic(Q: Quiver) -> None:
    if not is_connected(Q):
        raise QuiverError("quiver is not connected")
    if not is_acyclic(Q):
        raise QuiverError("quiver has an oriented cycle")


def _class_of(Q: Quiver) -> QuiverClass:
    pos, neg, zero = inertia(symmetrized_matrix(Q))
    if neg == 0 and zero == 0:
        return QuiverClass.FINITE
    if neg == 0 and zero == 1:
        return QuiverClass.TAME_EUCLIDEAN
    return QuiverClass.INFINITE_NON_EUCLIDEAN


def classify(Q: Quiver) -> QuiverClass:
    """Finite (Tits form positive definite), TameEuclidean (semidefinite,
    one-dimensional radical) or InfiniteNonEuclidean."""
    _require_connected_acyclic(Q)
    return _class_of(Q)


def isotropic_root(Q: Quiver) -> tuple:
    """The positive primitive generator delta of the radical of the Tits form."""
    if classify(Q) is not QuiverClass.TAME_EUCLIDEAN:
        raise QuiverError("isotropic_root needs a Euclidean quiver")
    (k,) = kernel_basis(symmetrized_matrix(Q))
    lcm = math.lcm(*(x.denominator for x in k))
    ints = [int(x * lcm) for x in k]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise AssertionError(f"radical generator {ints} is not strictly positive")
    return tuple(ints)


# subquivers --------------------------------------------------------------


@dataclass(frozen=True)
class SubquiverWitness:
    kept_vertices: tuple  # ambient ids, ascending; position = subquiver id
    kept_arrows: tuple    # ambient arrow indices, ascending

    @property
    def vertex_map(self) -> dict:
        return {i: v for i, v in enumerate(self.kept_vertices)}

    def validate(self, Q: Quiver) -> None:
        kv = set(self.kept_vertices)
        if list(self.kept_vertices) != sorted(kv) or list(self.kept_arrows) != sorted(set(self.kept_arrows)):
            raise QuiverError("witness lists must be strictly ascending")
        if any(not 0 <= v < Q.vertex_count for v in kv):
            raise QuiverError("witness keeps a vertex outside the quiver")
        for a in self.kept_arrows:
            if not 0 <= a < len(Q.arrows):
                raise QuiverError(f"witness keeps unknown arrow {a}")
            t, h = Q.arrows[a]
            if t not in kv or h not in kv:
                raise QuiverError(f"kept arrow {a} has an endpoint outside the kept vertices")

    def to_json(self) -> dict:
        return {"kept_vertices": list(self.kept_vertices), "kept_arrows": list(self.kept_arrows)}

    @classmethod
    def from_json(cls, obj: dict) -> "SubquiverWitness":
        return cls(tuple(obj["kept_vertices"]), tuple(obj["kept_arrows"]))

    @classmethod
    def full(cls, Q: Quiver) -> "SubquiverWitness":
        return cls(tuple(Q.vertices), tuple(range(len(Q.arrows))))


def induced_subquiver(Q: Quiver, witness: SubquiverWitness) -> Quiver:
    witness.validate(Q)
    index = {v: i for i, v in enumerate(witness.kept_vertices)}
    return Quiver(len(witness.kept_vertices),
                  tuple((index[Q.arrows[a][0]], index[Q.arrows[a][1]]) for a in witness.kept_arrows))


def extend_vector(witness: SubquiverWitness, alpha: Sequence[int], vertex_count: int) -> tuple:
    """Push a dimension vector on the subquiver forward, zero outside kept vertices."""
    if len(alpha) != len(witness.kept_vertices):
        raise QuiverError("vector length does not match the witness")
    out = [0] * vertex_count
    for i, v in enumerate(witness.kept_vertices):
        out[v] = int(alpha[i])
    return tuple(out)


def remove_vertex(Q: Quiver, v: int) -> SubquiverWitness:
    """Witness for Q with vertex v and its incident arrows deleted."""
    kept = tuple(x for x in Q.vertices if x != v)
    arrows = tuple(a for a, (t, h) in enumerate(Q.arrows) if v not in (t, h))
    return SubquiverWitness(kept, arrows)


def find_euclidean_subquiver(Q: Quiver) -> SubquiverWitness:
    """Greedily shrink Q to a minimal connected non-Dynkin subquiver.

    Arrows are tried before vertices, each in ascending ambient index; a
    deletion is accepted when the remainder stays connected and not Finite.
    A minimal connected non-Dynkin graph is Euclidean.
    """
    _require_connected_acyclic(Q)
    if _class_of(Q) is QuiverClass.FINITE:
        raise QuiverError("quiver is of finite type; it has no Euclidean subquiver")

    verts = list(Q.vertices)
    arrows = list(range(len(Q.arrows)))

    def acceptable(vs, arrs):
        sub = induced_subquiver(Q, SubquiverWitness(tuple(vs), tuple(arrs)))
        return is_connected(sub) and _class_of(sub) is not QuiverClass.FINITE

    changed = True
    while changed:
        changed = False
        for a in arrows:
            rest = [b for b in arrows if b != a]
            if acceptable(verts, rest):
                arrows = rest
                changed = True
                break
        if changed:
            continue
        for v in verts:
            vs = [x for x in verts if x != v]
            rest = [b for b in arrows if v not in Q.arrows[b]]
            if vs and acceptable(vs, rest):
                verts, arrows = vs, rest
                changed = True
                break

    witness = SubquiverWitness(tuple(verts), tuple(arrows))
    if _class_of(induced_subquiver(Q, witness)) is not QuiverClass.TAME_EUCLIDEAN:
        raise AssertionError("greedy minimization stopped at a non-Euclidean quiver")
    return witness
