"""Command line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 cap exceeded,
4 internal error. Every file argument accepts ``-`` for stdin.
"""
from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from . import io
from .battery import BatteryConfigError, TheoremBatterySpec, run_battery
from .enumeration import EXHAUSTIVE_CAP, enumerate_mul_lattices, sample_mul_lattices
from .errors import CapExceeded, LatticeError
from .instances import build_instance, three_element_monoid, zn_ring, ring_ideal_lattice
from .morphisms import spec_map
from .solvability import closure_table
from .spectra import radical_elements, spec, spec_dot
from .topology import topology_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_validate(args) -> int:
    text = io.read_text(args.lattice)
    try:
        L = io.lattice_from_json(text)
    except io.InputError:
        raise
    except LatticeError as e:  # order or axiom violation: a diagnosis, not bad input
        _emit({"valid": False, "error": type(e).__name__, "detail": str(e)})
        return EXIT_FAIL
    _emit({"valid": True, "n": L.n, "bottom": L.bottom, "top": L.top})
    return EXIT_OK


def spec_report(L) -> dict:
    S = spec(L)
    return {
        "points": list(S.points),
        "closed_sets": [sorted(c) for c in sorted(S.closed_sets, key=lambda c: (len(c), sorted(c)))],
        "V": [sorted(S.V(x)) for x in range(L.n)],
        "radical_elements": list(radical_elements(L)),
        "topology": topology_report(S).to_dict(),
    }


def cmd_spec(args) -> int:
    L = io.load_lattice(args.lattice)
    rep = spec_report(L)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(spec_dot(spec(L)))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep, fh, indent=2)
            fh.write("\n")
    _emit(rep)
    return EXIT_OK


def cmd_closures(args) -> int:
    L = io.load_lattice(args.lattice)
    k = args.element
    if not 0 <= k < L.n:
        raise io.InputError(f"element {k} out of range 0..{L.n - 1}")
    t = closure_table(L)
    row = {"element": k, "radical": t["radical"][k], "sp": t["sp"][k], "solv": t["solv"][k],
           "loc_solv": t["loc_solv"][k], "Solv": t["upper_solv"][k]}
    if args.json:
        _emit(row)
    else:
        for key, v in row.items():
            sys.stdout.write(f"{key:<9}{v}\n")
    return EXIT_OK


def cmd_instance(args) -> int:
    kind, rest = args.kind, args.arg
    if kind in ("paper-3-5d", "three-element"):
        L = three_element_monoid()
    elif kind == "zn":
        if rest is None:
            raise io.InputError("zn needs a modulus")
        try:
            n = int(rest)
        except ValueError as e:
            raise io.InputError(f"bad modulus {rest!r}") from e
        if n < 1:
            raise io.InputError("modulus must be positive")
        L = ring_ideal_lattice(zn_ring(n)).lattice
    else:
        if rest is None:
            raise io.InputError(f"{kind} needs an algebra file")
        A = io.load_algebra(rest)
        if A.kind != kind:
            raise io.InputError(f"file describes a {A.kind}, not a {kind}")
        L = build_instance(A).lattice
    sys.stdout.write(io.lattice_to_json(L) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec_ = TheoremBatterySpec.parse(args.battery, args.mode)
    L = io.load_lattice(args.lattice)
    reports = run_battery(L, spec_)
    for r in reports:
        sys.stdout.write(r.to_json() + "\n")
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def _verify_one(job):
    idx, L, spec_ = job
    return idx, L, [r for r in run_battery(L, spec_) if not r.passed]


def _corpus(args):
    for L in enumerate_mul_lattices(args.max_size):
        yield "exhaustive", L
    if args.samples:
        for L in sample_mul_lattices(args.samples, args.seed, sizes=args.sizes):
            yield "sample", L


def cmd_enumerate(args) -> int:
    if args.samples and args.seed is None:
        raise io.InputError("--samples needs --seed")
    spec_ = TheoremBatterySpec.parse(args.battery, args.mode)
    if args.max_size > EXHAUSTIVE_CAP:
        raise CapExceeded(f"exhaustive enumeration is capped at n={EXHAUSTIVE_CAP}")
    visited, by_size, failures = 0, {}, 0
    if not args.verify:
        for source, L in _corpus(args):
            visited += 1
            by_size[L.n] = by_size.get(L.n, 0) + 1
            sys.stdout.write(io.lattice_to_json(L) + "\n")
        sys.stderr.write(json.dumps({"visited": visited, "by_size": by_size}) + "\n")
        return EXIT_OK
    jobs = ((i, L, spec_) for i, (_, L) in enumerate(_corpus(args)))
    if args.jobs > 1:
        pool = Pool(args.jobs)
        results = pool.imap(_verify_one, jobs, chunksize=64)
    else:
        pool, results = None, map(_verify_one, jobs)
    try:
        for idx, L, bad in results:
            visited += 1
            by_size[L.n] = by_size.get(L.n, 0) + 1
            for r in bad:
                failures += r.failed
                _emit({"index": idx, "lattice": io.lattice_to_dict(L), **r.to_dict()})
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    _emit({"visited": visited, "by_size": {str(k): v for k, v in sorted(by_size.items())}, "failures": failures})
    return EXIT_FAIL if failures else EXIT_OK


def cmd_morphism(args) -> int:
    adj = io.load_morphism(args.morphism)
    out = {"flags": adj.flags(), "u": list(adj.u)}
    status = EXIT_OK
    if args.check:
        out["right_op_compatible"] = adj.right_op_compatible()
        if adj.compatible:
            sm = spec_map(adj)
            out["spec_map"] = {str(p): q for p, q in sm.mapping.items()}
            out["primes_preserved"] = sm.primes_preserved
            out["preimage_identity"] = sm.preimage_identity
            if not (sm.primes_preserved and sm.preimage_identity):
                status = EXIT_FAIL
        else:
            out["spec_map"] = None
    _emit(out)
    return status


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from e
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mullat", description="finite multiplicative lattices and their spectra")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a lattice JSON file")
    s.add_argument("lattice")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("spec", help="prime spectrum and its topology")
    s.add_argument("lattice")
    s.add_argument("--dot", help="write the specialization order as DOT")
    s.add_argument("--json", help="also write the report to this file")
    s.set_defaults(func=cmd_spec)

    s = sub.add_parser("closures", help="radical, sp, solv, loc_solv, Solv at one element")
    s.add_argument("lattice")
    s.add_argument("--element", "-k", type=int, required=True)
    s.add_argument("--json", action="store_true", help="print one JSON object")
    s.set_defaults(func=cmd_closures)

    s = sub.add_parser("instance", help="build a lattice from an algebra; prints lattice JSON")
    s.add_argument("kind", choices=["zn", "ring", "group", "semiring", "semigroup", "paper-3-5d", "three-element"])
    s.add_argument("arg", nargs="?", help="modulus for zn, algebra JSON file otherwise")
    s.set_defaults(func=cmd_instance)

    s = sub.add_parser("verify", help="run the check battery")
    s.add_argument("lattice")
    s.add_argument("--battery", default="all", help="'all' or comma separated check names")
    s.add_argument("--mode", default="strict", choices=["strict", "forced"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="enumerate (and optionally verify) small lattices")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--samples", type=int, default=0)
    s.add_argument("--sizes", type=_sizes, default=(6, 7))
    s.add_argument("--verify", action="store_true")
    s.add_argument("--battery", default="all")
    s.add_argument("--mode", default="strict", choices=["strict", "forced"])
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("morphism", help="adjunction flags and spectrum certificates")
    s.add_argument("morphism")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_morphism)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as e:
        sys.stderr.write(f"cap exceeded: {e}\n")
        return EXIT_CAP
    except (BatteryConfigError, LatticeError) as e:
        sys.stderr.write(f"input error: {type(e).__name__}: {e}\n")
        return EXIT_INPUT
    except Exception as e:  # noqa: BLE001
        sys.stderr.write(f"internal error: {type(e).__name__}: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
