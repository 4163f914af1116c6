"""Quiver representations, Hom and Ext^1 through Ringel's canonical sequence.

For representations V, W the map

    d : (+)_x Hom(V(x), W(x))  -->  (+)_a Hom(V(ta), W(ha)),
        (phi_x)  |-->  (phi_ha V(a) - W(a) phi_ta)_a

has kernel Hom(V, W) and cokernel Ext^1(V, W).  Coordinates on both sides
are fixed once: vertex (resp. arrow) blocks in index order, each block a
matrix vectorized column-major.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactla import RatMatrix, format_rational, kernel_basis, rank
from .quiver import Quiver, QuiverError, SubquiverWitness, check_vector, euler_form


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dim: tuple
    maps: tuple  # RatMatrix per arrow, shape dim(ha) x dim(ta)

    def __post_init__(self):
        dim = check_vector(self.quiver, self.dim)
        if any(d < 0 for d in dim):
            raise RepresentationError(f"negative dimension in {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) != len(self.quiver.arrows):
            raise RepresentationError(f"{len(self.maps)} maps for {len(self.quiver.arrows)} arrows")
        for a, (t, h) in enumerate(self.quiver.arrows):
            if self.maps[a].shape != (dim[h], dim[t]):
                raise RepresentationError(
                    f"map on arrow {a} has shape {self.maps[a].shape}, expected {(dim[h], dim[t])}")

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "dim": list(self.dim),
            "maps": [[[format_rational(x) for x in row] for row in M.to_rows()] for M in self.maps],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Representation":
        try:
            Q = Quiver.from_json(obj["quiver"])
            dim = check_vector(Q, obj["dim"])
            raw = obj["maps"]
            if len(raw) != len(Q.arrows):
                raise RepresentationError(f"{len(raw)} maps for {len(Q.arrows)} arrows")
            maps = [RatMatrix.from_rows(m, cols=dim[t]) if dim[h] else RatMatrix(0, dim[t], ())
                    for m, (t, h) in zip(raw, Q.arrows)]
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (QuiverError, RepresentationError)):
                raise
            raise RepresentationError(f"malformed representation object: {exc!r}") from None
        return cls(Q, dim, tuple(maps))


@dataclass(frozen=True)
class Morphism:
    source: Representation
    target: Representation
    blocks: tuple  # RatMatrix per vertex, shape dim_W(x) x dim_V(x)

    def commutes(self) -> bool:
        V, W = self.source, self.target
        return all(self.blocks[h] @ V.maps[a] == W.maps[a] @ self.blocks[t]
                   for a, (t, h) in enumerate(V.quiver.arrows))


@dataclass
class RngSpec:
    """Seeded stream of integer entries drawn uniformly from [-height, height]."""

    seed: int
    height: int = 10
    _rng: random.Random = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be positive")
        self._rng = random.Random(self.seed)

    def entry(self) -> int:
        return self._rng.randint(-self.height, self.height)

    def randint(self, lo: int, hi: int) -> int:
        return self._rng.randint(lo, hi)

    def split(self, height=None) -> "RngSpec":
        """Independent child stream; advances this stream by one draw."""
        return RngSpec(self._rng.getrandbits(64), self.height if height is None else height)


# constructors --------------------------------------------------------------


def zero_rep(Q: Quiver, alpha: Sequence[int]) -> Representation:
    alpha = check_vector(Q, alpha)
    return Representation(Q, alpha, tuple(RatMatrix.zeros(alpha[h], alpha[t]) for t, h in Q.arrows))


def simple_rep(Q: Quiver, x: int) -> Representation:
    if not 0 <= x < Q.vertex_count:
        raise RepresentationError(f"no vertex {x}")
    return zero_rep(Q, [int(y == x) for y in Q.vertices])


def random_rep(Q: Quiver, alpha: Sequence[int], rng: RngSpec) -> Representation:
    alpha = check_vector(Q, alpha)
    if any(a < 0 for a in alpha):
        raise RepresentationError("random_rep needs a nonnegative dimension vector")
    maps = []
    for t, h in Q.arrows:
        maps.append(RatMatrix(alpha[h], alpha[t], tuple(Fraction(rng.entry()) for _ in range(alpha[h] * alpha[t]))))
    return Representation(Q, alpha, tuple(maps))


def direct_sum(V: Representation, W: Representation) -> Representation:
    if V.quiver != W.quiver:
        raise RepresentationError("direct sum of representations of different quivers")
    dim = tuple(a + b for a, b in zip(V.dim, W.dim))
    maps = []
    for a, (t, h) in enumerate(V.quiver.arrows):
        maps.append(RatMatrix.blocks([
            [V.maps[a], RatMatrix.zeros(V.dim[h], W.dim[t])],
            [RatMatrix.zeros(W.dim[h], V.dim[t]), W.maps[a]],
        ]))
    return Representation(V.quiver, dim, tuple(maps))


def extend_by_zero(V: Representation, witness: SubquiverWitness, Q: Quiver) -> Representation:
    """Push a representation of the induced subquiver forward to Q."""
    from .quiver import extend_vector, induced_subquiver

    if induced_subquiver(Q, witness) != V.quiver:
        raise RepresentationError("representation does not live on the witnessed subquiver")
    dim = extend_vector(witness, V.dim, Q.vertex_count)
    sub_index = {a: i for i, a in enumerate(witness.kept_arrows)}
    maps = []
    for a, (t, h) in enumerate(Q.arrows):
        if a in sub_index:
            maps.append(V.maps[sub_index[a]])
        else:
            maps.append(RatMatrix.zeros(dim[h], dim[t]))
    return Representation(Q, dim, tuple(maps))


def restrict(V: Representation, witness: SubquiverWitness) -> Representation:
    from .quiver import induced_subquiver

    sub = induced_subquiver(V.quiver, witness)
    return Representation(sub, tuple(V.dim[v] for v in witness.kept_vertices),
                          tuple(V.maps[a] for a in witness.kept_arrows))


# Hom / Ext -----------------------------------------------------------------


def _check_same_quiver(V: Representation, W: Representation) -> None:
    if V.quiver != W.quiver:
        raise RepresentationError("representations live on different quivers")


def vertex_offsets(V: Representation, W: Representation) -> list:
    """Start column of each vertex block of the domain of d^V_W."""
    offs, pos = [], 0
    for x in V.quiver.vertices:
        offs.append(pos)
        pos += V.dim[x] * W.dim[x]
    offs.append(pos)
    return offs


def arrow_offsets(V: Representation, W: Representation) -> list:
    """Start row of each arrow block of the codomain of d^V_W."""
    offs, pos = [], 0
    for t, h in V.quiver.arrows:
        offs.append(pos)
        pos += V.dim[t] * W.dim[h]
    offs.append(pos)
    return offs


def differential(V: Representation, W: Representation) -> RatMatrix:
    """Matrix of d^V_W in the fixed coordinates.

    The phi_x coordinate (i, j) (row i of W(x), column j of V(x)) sits at
    column vertex_offsets[x] + j*dim_W(x) + i, and the arrow-a coordinate
    (i, j) at row arrow_offsets[a] + j*dim_W(ha) + i.
    """
    _check_same_quiver(V, W)
    Q = V.quiver
    cols_off = vertex_offsets(V, W)
    rows_off = arrow_offsets(V, W)
    nrows, ncols = rows_off[-1], cols_off[-1]
    D = [[Fraction(0)] * ncols for _ in range(nrows)]
    for a, (t, h) in enumerate(Q.arrows):
        Va, Wa = V.maps[a], W.maps[a]
        vt, wt, wh = V.dim[t], W.dim[t], W.dim[h]
        base = rows_off[a]
        # phi_h V(a): entry (i, j) = sum_k phi_h[i, k] V(a)[k, j]
        for j in range(vt):
            for k in range(V.dim[h]):
                c = Va[k, j]
                if c:
                    for i in range(wh):
                        D[base + j * wh + i][cols_off[h] + k * wh + i] += c
        # - W(a) phi_t: entry (i, j) = sum_k W(a)[i, k] phi_t[k, j]
        for i in range(wh):
            for k in range(wt):
                c = Wa[i, k]
                if c:
                    for j in range(vt):
                        D[base + j * wh + i][cols_off[t] + j * wt + k] -= c
    return RatMatrix.from_rows(D, cols=ncols)


def _unvectorize_blocks(V: Representation, W: Representation, vec) -> tuple:
    offs = vertex_offsets(V, W)
    return tuple(RatMatrix.from_column_major(W.dim[x], V.dim[x], vec[offs[x]:offs[x + 1]])
                 for x in V.quiver.vertices)


def hom_basis(V: Representation, W: Representation) -> list:
    """Basis of Hom(V, W) as Morphism objects, from the kernel of d^V_W."""
    D = differential(V, W)
    return [Morphism(V, W, _unvectorize_blocks(V, W, k)) for k in kernel_basis(D)]


def hom_ext_dims(V: Representation, W: Representation) -> tuple:
    """(dim Hom(V, W), dim Ext^1(V, W)) from one rank computation."""
    D = differential(V, W)
    r = rank(D)
    hom, ext = D.cols - r, D.rows - r
    chi = euler_form(V.quiver, V.dim, W.dim)
    if hom - ext != chi:
        raise AssertionError(f"hom - ext = {hom - ext} but Euler form gives {chi}")
    return hom, ext


def hom_dim(V: Representation, W: Representation) -> int:
    return hom_ext_dims(V, W)[0]


def ext_dim(V: Representation, W: Representation) -> int:
    return hom_ext_dims(V, W)[1]


def _require_nonzero(V: Representation) -> None:
    if V.total_dim == 0:
        raise RepresentationError("the zero representation is neither Schur nor exceptional")


def is_schur(V: Representation) -> bool:
    _require_nonzero(V)
    return hom_dim(V, V) == 1


def is_exceptional(V: Representation) -> bool:
    _require_nonzero(V)
    hom, ext = hom_ext_dims(V, V)
    return hom == 1 and ext == 0


# generic values by sampling -------------------------------------------------


def _generic(Q, alpha, beta, rng, trials, which) -> int:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    best = None
    for _ in range(trials):
        V = random_rep(Q, alpha, rng)
        W = random_rep(Q, beta, rng)
        val = hom_ext_dims(V, W)[which]
        best = val if best is None else min(best, val)
        if best == 0:
            break
    return best


def generic_hom(Q: Quiver, alpha, beta, rng: RngSpec, trials: int = 5) -> int:
    """Minimum of dim Hom over `trials` random pairs; an upper bound for hom(alpha, beta)."""
    return _generic(Q, alpha, beta, rng, trials, 0)


def generic_ext(Q: Quiver, alpha, beta, rng: RngSpec, trials: int = 5) -> int:
    """Minimum of dim Ext^1 over `trials` random pairs; an upper bound for ext(alpha, beta)."""
    return _generic(Q, alpha, beta, rng, trials, 1)


def orth(Q: Quiver, alpha, beta, rng: RngSpec, trials: int = 5) -> bool:
    """alpha is orthogonal to beta when generic hom and ext both vanish."""
    return generic_hom(Q, alpha, beta, rng, trials) == 0 and generic_ext(Q, alpha, beta, rng, trials) == 0
