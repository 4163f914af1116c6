"""Command line interface.

Exit codes: 0 success / all checks pass, 2 certificate failure,
3 precondition refusal or semantic input error, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time

from . import family
from .certificate import Certificate
from .embed import check_hom_controlled, embed_data
from .exceptional import ExceptionalError, build_pair, verify_pair
from .pipeline import RefusalError, check_result, forge
from .quiver import Quiver, QuiverClass, QuiverError, classify, euler_form, isotropic_root
from .rep import Representation, RepresentationError, RngSpec, hom_ext_dims, random_rep

EXIT_OK = 0
EXIT_CERT = 2
EXIT_REFUSED = 3
EXIT_IO = 4

log = logging.getLogger("qforge")


class InputFileError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputFileError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFileError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _load_quiver(path: str) -> Quiver:
    return Quiver.from_json(_load_json(path))


def _default_seed() -> int:
    raw = os.environ.get("QFORGE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputFileError(f"QFORGE_SEED={raw!r} is not an integer") from None


def cmd_classify(args) -> int:
    Q = _load_quiver(args.quiver)
    cls = classify(Q)
    if cls is QuiverClass.TAME_EUCLIDEAN:
        print(f"{cls}, delta = {json.dumps(list(isotropic_root(Q)), separators=(',', ':'))}")
    else:
        print(cls)
    return EXIT_OK


def cmd_forge(args) -> int:
    Q = _load_quiver(args.quiver)
    seed = args.seed if args.seed is not None else _default_seed()
    result = forge(Q, seed)
    text = result.dumps()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputFileError(f"{args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    _report(result.certificate, stream=sys.stderr if not args.out else sys.stdout)
    print(f"dim W = {list(result.W.dim)}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK if result.certificate.overall else EXIT_CERT


def cmd_hom(args) -> int:
    V = Representation.from_json(_load_json(args.V))
    W = Representation.from_json(_load_json(args.W))
    hom, ext = hom_ext_dims(V, W)
    chi = euler_form(V.quiver, V.dim, W.dim)
    print(f"hom_dim = {hom}")
    print(f"ext_dim = {ext}")
    print(f"euler = {chi}")
    if hom - ext != chi:
        print("identity hom - ext = euler FAILED", file=sys.stderr)
        return EXIT_CERT
    print("identity hom - ext = euler holds")
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _load_json(args.result)
    try:
        cert = check_result(obj)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (QuiverError, RepresentationError)):
            raise
        raise InputFileError(f"{args.result}: malformed forge result ({exc!r})") from None
    _report(cert, verbose=args.verbose)
    return EXIT_OK if cert.overall else EXIT_CERT


def _report(cert: Certificate, verbose: bool = False, stream=None) -> None:
    stream = stream or sys.stdout
    for e in cert.entries:
        if verbose or not e.passed:
            status = "PASS" if e.passed else "FAIL"
            print(f"{status} {e.check} {json.dumps(e.details, sort_keys=True)}", file=stream)
    verdict = "all checks pass" if cert.overall else f"{len(cert.failures())} check(s) FAILED"
    print(f"{len(cert.entries)} checks, {verdict}", file=stream)


def selftest(seed: int, euler_cases: int = 300, hom_samples: int = 10) -> Certificate:
    """Euler identity fuzz, pair construction over the Euclidean family and F sampling."""
    cert = Certificate()
    rng = random.Random(seed)
    stream = RngSpec(seed)
    bad = 0
    for _ in range(euler_cases):
        Q = family.random_acyclic_quiver(rng)
        V = random_rep(Q, [rng.randint(0, 4) for _ in Q.vertices], stream)
        W = random_rep(Q, [rng.randint(0, 4) for _ in Q.vertices], stream)
        hom, ext = hom_ext_dims(V, W)
        bad += hom - ext != euler_form(Q, V.dim, W.dim)
    cert.record("euler_identity_fuzz", bad == 0, cases=euler_cases, failures=bad)
    for name, Q in family.euclidean_family():
        t0 = time.perf_counter()
        pair = build_pair(Q, stream.split())
        pc = verify_pair(pair)
        sampled = check_hom_controlled(embed_data(pair), stream.split(), hom_samples, max_dim=(2, 2))
        cert.record(f"pair[{name}]", pc.overall and pair.m == 2 and sampled.overall,
                    m=pair.m, v=pair.v, flag=pair.order_flag,
                    seconds=round(time.perf_counter() - t0, 3))
    return cert


def cmd_selftest(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    cert = selftest(seed, euler_cases=args.cases)
    _report(cert, verbose=True)
    return EXIT_OK if cert.overall else EXIT_CERT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qforge", description=(
        "Build explicit representations with bad orbit closures on representation-infinite quivers."))
    parser.add_argument("-v", "--verbose", action="store_true", help="show every certificate entry")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print Finite / TameEuclidean / InfiniteNonEuclidean")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("forge", help="construct W and its certificate")
    p.add_argument("quiver")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: $QFORGE_SEED or 0)")
    p.add_argument("--out", default=None, help="write the result JSON here instead of stdout")
    p.set_defaults(func=cmd_forge)

    p = sub.add_parser("hom", help="dimensions of Hom and Ext^1 between two representations")
    p.add_argument("V")
    p.add_argument("W")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("check", help="re-verify a forge result from scratch")
    p.add_argument("result")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", help="run the built-in fuzz suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=int, default=300, help="number of Euler-identity fuzz cases")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (QuiverError, RepresentationError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ExceptionalError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":
    sys.exit(main())
