"""The embedding Rep(Q(eps)) -> Rep(Q) for a two-term quiver exceptional sequence.

Q(eps) is the generalized Kronecker quiver with vertex 0 standing for eps1
and vertex 1 for eps2, and m = -<eps2, eps1> arrows 1 -> 0.  A representation
V with dimension (a1, a2) and arrow matrices M_k : k^a2 -> k^a1 is sent to
the extension of E2^a2 by E1^a1 whose class is sum_k [c_k] (x) M_k, where
c_1..c_m are cocycles representing a basis of Ext^1(E2, E1):

    W(x) = E1(x) (x) k^a1  (+)  E2(x) (x) k^a2
    W(a) = [ E1(a) (x) I_a1    sum_k c_k(a) (x) M_k ]
           [ 0                 E2(a) (x) I_a2       ]
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate
from .exactla import RatMatrix, cokernel_reps, format_rational, residues_independent
from .exceptional import ExceptionalPair
from .quiver import Quiver
from .rep import (
    Representation,
    RepresentationError,
    RngSpec,
    arrow_offsets,
    differential,
    ext_dim,
    hom_ext_dims,
    random_rep,
    simple_rep,
)

ZWARA_A = ((0, 0, 0), (1, 0, 0), (0, 1, 0))
ZWARA_B = ((1, 0, 0), (0, 0, 0), (0, 0, 1))


def kronecker_type(m: int) -> Quiver:
    """Q(eps) for a two-term sequence: m parallel arrows from vertex 1 to vertex 0."""
    if m < 0:
        raise ValueError("number of arrows must be nonnegative")
    return Quiver(2, ((1, 0),) * m)


def zwara_rep() -> Representation:
    """Zwara's (3,3)-dimensional Kronecker representation.

    His tail vertex is our vertex 1 and his head vertex our vertex 0; both
    spaces are 3-dimensional so the two matrices are used verbatim.
    """
    return Representation(kronecker_type(2), (3, 3),
                          (RatMatrix.from_rows(ZWARA_A), RatMatrix.from_rows(ZWARA_B)))


@dataclass(frozen=True)
class CocycleBasis:
    source: Representation  # E2
    target: Representation  # E1
    cocycles: tuple         # each a tuple of RatMatrix, one per ambient arrow

    def vectors(self) -> list:
        """Cocycles flattened into the codomain coordinates of d^{E2}_{E1}."""
        return [[x for M in c for x in M.column_major()] for c in self.cocycles]

    def is_basis(self) -> bool:
        D = differential(self.source, self.target)
        return (len(self.cocycles) == ext_dim(self.source, self.target)
                and residues_independent(D, self.vectors()))


def cocycle_basis(E2: Representation, E1: Representation) -> CocycleBasis:
    D = differential(E2, E1)
    offs = arrow_offsets(E2, E1)
    cocycles = []
    for vec in cokernel_reps(D):
        blocks = []
        for a, (t, h) in enumerate(E2.quiver.arrows):
            blocks.append(RatMatrix.from_column_major(E1.dim[h], E2.dim[t], vec[offs[a]:offs[a + 1]]))
        cocycles.append(tuple(blocks))
    return CocycleBasis(E2, E1, tuple(cocycles))


def transform_basis(basis: CocycleBasis, T) -> CocycleBasis:
    """New cocycles c'_k = sum_j T[j][k] c_j, for an m x m matrix T."""
    T = T if isinstance(T, RatMatrix) else RatMatrix.from_rows(T)
    m = len(basis.cocycles)
    if T.shape != (m, m):
        raise ValueError(f"need a {m}x{m} change of basis")
    new = []
    for k in range(m):
        blocks = []
        for a in range(len(basis.source.quiver.arrows)):
            acc = RatMatrix.zeros(*basis.cocycles[0][a].shape)
            for j in range(m):
                if T[j, k]:
                    acc = acc + basis.cocycles[j][a].scale(T[j, k])
            blocks.append(acc)
        new.append(tuple(blocks))
    return CocycleBasis(basis.source, basis.target, tuple(new))


@dataclass(frozen=True)
class EmbedData:
    pair: ExceptionalPair
    basis: CocycleBasis
    target_quiver: Quiver

    @property
    def m(self) -> int:
        return len(self.basis.cocycles)

    def to_json(self) -> dict:
        return {
            "pair": self.pair.to_json(),
            "cocycles": [[[[format_rational(x) for x in row] for row in M.to_rows()] for M in c]
                         for c in self.basis.cocycles],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EmbedData":
        pair = ExceptionalPair.from_json(obj["pair"])
        Q = pair.ambient
        cocycles = []
        for c in obj["cocycles"]:
            if len(c) != len(Q.arrows):
                raise RepresentationError("cocycle has the wrong number of arrow blocks")
            blocks = []
            for raw, (t, h) in zip(c, Q.arrows):
                rows, cols = pair.E1.dim[h], pair.E2.dim[t]
                blocks.append(RatMatrix.from_rows(raw, cols=cols) if rows else RatMatrix(0, cols, ()))
                if blocks[-1].shape != (rows, cols):
                    raise RepresentationError("cocycle block has the wrong shape")
            cocycles.append(tuple(blocks))
        basis = CocycleBasis(pair.E2, pair.E1, tuple(cocycles))
        return cls(pair, basis, kronecker_type(len(cocycles)))


def embed_data(pair: ExceptionalPair) -> EmbedData:
    basis = cocycle_basis(pair.E2, pair.E1)
    if len(basis.cocycles) != pair.m:
        raise RepresentationError(f"Ext^1(E2, E1) has dimension {len(basis.cocycles)}, expected {pair.m}")
    return EmbedData(pair, basis, kronecker_type(pair.m))


def dim_map_I(pair: ExceptionalPair, alpha) -> tuple:
    """alpha(1) * eps1 + alpha(2) * eps2 (vertex 0 of Q(eps) carries alpha(1))."""
    if len(alpha) != 2 or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative vector of length 2")
    return tuple(alpha[0] * e1 + alpha[1] * e2 for e1, e2 in zip(pair.eps1, pair.eps2))


def embed_rep(data: EmbedData, V: Representation) -> Representation:
    if V.quiver != data.target_quiver:
        raise RepresentationError("representation does not live on Q(eps)")
    E1, E2 = data.pair.E1, data.pair.E2
    Q = data.pair.ambient
    a1, a2 = V.dim
    I1, I2 = RatMatrix.identity(a1), RatMatrix.identity(a2)
    maps = []
    for a, (t, h) in enumerate(Q.arrows):
        off = RatMatrix.zeros(E1.dim[h] * a1, E2.dim[t] * a2)
        for c, M in zip(data.basis.cocycles, V.maps):
            if not c[a].is_zero() and not M.is_zero():
                off = off + c[a].kron(M)
        maps.append(RatMatrix.blocks([
            [E1.maps[a].kron(I1), off],
            [RatMatrix.zeros(E2.dim[h] * a2, E1.dim[t] * a1), E2.maps[a].kron(I2)],
        ]))
    return Representation(Q, dim_map_I(data.pair, V.dim), tuple(maps))


# checks ------------------------------------------------------------------


def check_simples(data: EmbedData, cert: Certificate = None) -> Certificate:
    """F(simple at vertex i) must be isomorphic to E_{i+1}."""
    cert = Certificate() if cert is None else cert
    for i, E in enumerate((data.pair.E1, data.pair.E2)):
        F = embed_rep(data, simple_rep(data.target_quiver, i))
        same_dim = F.dim == E.dim
        hom_fe, _ = hom_ext_dims(F, E)
        hom_ef, _ = hom_ext_dims(E, F)
        end, self_ext = hom_ext_dims(F, F)
        ok = same_dim and hom_fe == 1 and hom_ef == 1 and end == 1 and self_ext == 0
        cert.record(f"F_simple_{i}_is_E{i + 1}", ok, dim=list(F.dim), hom_to=hom_fe, hom_from=hom_ef, end_dim=end)
    return cert


def check_hom_controlled(data: EmbedData, rng: RngSpec, samples: int, max_dim=(3, 3),
                         cert: Certificate = None) -> Certificate:
    """Compare Hom and Ext^1 dimensions before and after F on random pairs over Q(eps)."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    cert = Certificate() if cert is None else cert
    Qe = data.target_quiver
    for s in range(samples):
        alpha = (rng.randint(0, max_dim[0]), rng.randint(0, max_dim[1]))
        beta = (rng.randint(0, max_dim[0]), rng.randint(0, max_dim[1]))
        V, V2 = random_rep(Qe, alpha, rng), random_rep(Qe, beta, rng)
        h, e = hom_ext_dims(V, V2)
        FV, FV2 = embed_rep(data, V), embed_rep(data, V2)
        fh, fe = hom_ext_dims(FV, FV2)
        dims_ok = FV.dim == dim_map_I(data.pair, alpha) and FV2.dim == dim_map_I(data.pair, beta)
        cert.record(f"hom_controlled_{s}", dims_ok and fh == h and fe == e,
                    alpha=list(alpha), beta=list(beta), hom=h, hom_F=fh, ext=e, ext_F=fe)
    return cert

