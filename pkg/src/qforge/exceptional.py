"""Exceptional representations and the two-term quiver exceptional sequence.

For a Euclidean quiver Q with isotropic root delta, pick a vertex v with
delta(v) = 1 that is a source (else a sink).  Then Q minus v is Dynkin,
delta - e_v is a real root on it, and (delta - e_v, e_v) is a quiver
exceptional pair with <e_v, delta - e_v> = -2.  At a sink the two terms
swap places.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .certificate import Certificate
from .quiver import (
    Quiver,
    QuiverClass,
    QuiverError,
    classify,
    euler_form,
    induced_subquiver,
    isotropic_root,
    remove_vertex,
    unit_vector,
)
from .rep import (
    Representation,
    RngSpec,
    extend_by_zero,
    hom_ext_dims,
    random_rep,
    simple_rep,
)

log = logging.getLogger(__name__)

SOURCE = "source"
SINK = "sink"


class ExceptionalError(RuntimeError):
    """No exceptional representation found, or a constructed pair failed its checks."""

    def __init__(self, message, best=None, certificate=None):
        super().__init__(message)
        self.best = best
        self.certificate = certificate


def exceptional_rep(Q: Quiver, beta, rng: RngSpec, max_retries: int = 8) -> Representation:
    """Sample random representations of dimension beta until one is exceptional.

    The height of the entries doubles after every failed attempt.  Raises
    QuiverError when <beta, beta> != 1 (no exceptional object can exist) and
    ExceptionalError once the retries are used up; the latter carries the
    candidate with the smallest endomorphism algebra.
    """
    beta = tuple(beta)
    if len(beta) != Q.vertex_count or any(b < 0 for b in beta) or not any(beta):
        raise QuiverError(f"{beta} is not a nonzero dimension vector on this quiver")
    if euler_form(Q, beta, beta) != 1:
        raise QuiverError(f"<beta, beta> = {euler_form(Q, beta, beta)} != 1, so {beta} is not a real root")
    height = rng.height
    best, best_end = None, None
    for attempt in range(max_retries):
        E = random_rep(Q, beta, rng.split(height))
        hom, ext = hom_ext_dims(E, E)
        if hom == 1 and ext == 0:
            return E
        log.debug("attempt %d at height %d: dim End = %d, dim Ext = %d", attempt, height, hom, ext)
        if best_end is None or hom < best_end:
            best, best_end = E, hom
        height *= 2
    raise ExceptionalError(
        f"no exceptional representation of dimension {beta} after {max_retries} attempts "
        f"(best dim End = {best_end}); {beta} is probably not a real Schur root",
        best=best,
    )


def choose_vertex(Q: Quiver, delta) -> tuple:
    """Smallest v with delta(v) = 1 that is a source, else the smallest such sink."""
    ones = [x for x in Q.vertices if delta[x] == 1]
    for x in ones:
        if Q.is_source(x):
            return x, SOURCE
    for x in ones:
        if Q.is_sink(x):
            return x, SINK
    raise AssertionError(f"no source or sink vertex with delta(v) = 1 (delta = {list(delta)})")


@dataclass(frozen=True)
class ExceptionalPair:
    ambient: Quiver
    v: int
    eps1: tuple
    eps2: tuple
    E1: Representation
    E2: Representation
    m: int
    order_flag: str

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "v": self.v,
            "order_flag": self.order_flag,
            "m": self.m,
            "eps1": list(self.eps1),
            "eps2": list(self.eps2),
            "E1": self.E1.to_json(),
            "E2": self.E2.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExceptionalPair":
        return cls(
            ambient=Quiver.from_json(obj["ambient"]),
            v=int(obj["v"]),
            eps1=tuple(obj["eps1"]),
            eps2=tuple(obj["eps2"]),
            E1=Representation.from_json(obj["E1"]),
            E2=Representation.from_json(obj["E2"]),
            m=int(obj["m"]),
            order_flag=obj["order_flag"],
        )


def build_pair(Q: Quiver, rng: RngSpec, max_retries: int = 8) -> ExceptionalPair:
    if classify(Q) is not QuiverClass.TAME_EUCLIDEAN:
        raise QuiverError("build_pair needs a Euclidean quiver")
    delta = isotropic_root(Q)
    v, flag = choose_vertex(Q, delta)
    e_v = unit_vector(Q, v)
    rest = tuple(d - e for d, e in zip(delta, e_v))

    witness = remove_vertex(Q, v)
    dynkin = induced_subquiver(Q, witness)
    beta = tuple(rest[x] for x in witness.kept_vertices)
    E_rest = extend_by_zero(exceptional_rep(dynkin, beta, rng, max_retries), witness, Q)
    E_v = simple_rep(Q, v)

    if flag == SOURCE:
        eps1, eps2, E1, E2 = rest, e_v, E_rest, E_v
    else:
        eps1, eps2, E1, E2 = e_v, rest, E_v, E_rest
    m = -euler_form(Q, eps2, eps1)
    pair = ExceptionalPair(Q, v, eps1, eps2, E1, E2, m, flag)
    cert = verify_pair(pair)
    if not cert.overall:
        names = ", ".join(e.check for e in cert.failures())
        raise ExceptionalError(f"constructed pair fails: {names}", certificate=cert)
    return pair


def verify_pair(p: ExceptionalPair) -> Certificate:
    """Recheck every ExceptionalPair invariant from scratch; failures are recorded, not raised."""
    cert = Certificate()
    Q = p.ambient
    for name, E, eps in (("E1", p.E1, p.eps1), ("E2", p.E2, p.eps2)):
        cert.record(f"{name}_dimension", E.quiver == Q and E.dim == tuple(eps),
                    dim=list(E.dim), expected=list(eps))
        if E.quiver == Q and E.total_dim:
            hom, ext = hom_ext_dims(E, E)
        else:
            hom, ext = None, None
        cert.record(f"{name}_exceptional", hom == 1 and ext == 0, end_dim=hom, self_ext_dim=ext)
    if p.E1.quiver == Q and p.E2.quiver == Q:
        hom12, ext12 = hom_ext_dims(p.E1, p.E2)
        hom21, ext21 = hom_ext_dims(p.E2, p.E1)
    else:
        hom12 = ext12 = hom21 = ext21 = None
    cert.record("hom_E1_E2_vanishes", hom12 == 0, hom_dim=hom12)
    cert.record("ext_E1_E2_vanishes", ext12 == 0, ext_dim=ext12)
    cert.record("hom_E2_E1_vanishes", hom21 == 0, hom_dim=hom21)
    chi = euler_form(Q, p.eps2, p.eps1)
    cert.record("euler_eps2_eps1", chi == -2 and p.m == -chi, euler=chi, m=p.m)
    cert.record("ext_E2_E1_equals_m", ext21 == p.m, ext_dim=ext21, m=p.m)

    try:
        delta = isotropic_root(Q)
    except QuiverError as exc:
        cert.record("ambient_euclidean", False, error=str(exc))
        return cert
    cert.record("ambient_euclidean", True, delta=list(delta))
    total = [a + b for a, b in zip(p.eps1, p.eps2)]
    cert.record("eps_sum_is_delta", total == list(delta), sum=total)
    cert.record("delta_at_v_is_one", 0 <= p.v < Q.vertex_count and delta[p.v] == 1,
                v=p.v, flag=p.order_flag)
    expected_flag_ok = (p.order_flag == SOURCE and Q.is_source(p.v) and p.eps2 == unit_vector(Q, p.v)) or \
                       (p.order_flag == SINK and Q.is_sink(p.v) and p.eps1 == unit_vector(Q, p.v))
    cert.record("order_matches_flag", expected_flag_ok, v=p.v, flag=p.order_flag)
    try:
        cls = classify(induced_subquiver(Q, remove_vertex(Q, p.v)))
    except (QuiverError, IndexError):
        cls = None
    cert.record("complement_dynkin", cls is QuiverClass.FINITE, complement_class=str(cls))
    return cert
