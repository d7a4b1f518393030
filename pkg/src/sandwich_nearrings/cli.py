"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 theorem/direct mismatch or failed
claim, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import random
import sys
from typing import Optional

from .census import census_record, iter_schemes
from .errors import InvalidArgument, NearRingError, ResourceLimit, TheoremMismatch
from .nearring import DEFAULT_MAX_ELEMENTS, NearRing, enumerate_centralizer_nearring, verify_axioms
from .ngroup import natural_action
from .primitivity import cross_check, density_check, embed
from .sandwich import PhiRecipe, SandwichScheme, build_phi
from .worked_examples import all_claims

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors, not mismatches
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def _scheme_doc(doc: dict) -> dict:
    """Accept a bare scheme, a census line or a verdict document."""
    if "phi" in doc and "group" in doc and isinstance(doc["group"], dict) and "autos" in doc:
        return doc
    if isinstance(doc.get("verdict"), dict) and doc["verdict"].get("scheme"):
        return doc["verdict"]["scheme"]
    if isinstance(doc.get("scheme"), dict):
        return doc["scheme"]
    raise InputError("no scheme found in the document")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# commands ------------------------------------------------------------------------

def cmd_axioms(args) -> int:
    doc = _load(args.file)
    if "elements" in doc:
        n = NearRing.from_json(doc)
    else:
        n = enumerate_centralizer_nearring(SandwichScheme.from_json(_scheme_doc(doc)), args.max_elements)
    rep = verify_axioms(n)
    _emit(args, rep.to_json(), rep.summary())
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_build_phi(args) -> int:
    scheme = build_phi(PhiRecipe.from_json(_load(args.file)))
    print(json.dumps(scheme.to_json(), sort_keys=True))
    return EXIT_OK


def cmd_build_nearring(args) -> int:
    scheme = SandwichScheme.from_json(_scheme_doc(_load(args.file)))
    n = enumerate_centralizer_nearring(scheme, args.max_elements)
    if args.json or args.tables:
        print(json.dumps(n.to_json(tables=args.tables), sort_keys=True))
    else:
        print(f"{n.kind} near-ring with {len(n)} elements on X={list(n.domain)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    scheme = SandwichScheme.from_json(_scheme_doc(_load(args.file)))
    try:
        v = cross_check(scheme, max_elements=args.max_elements)
    except TheoremMismatch as exc:
        _emit(args, exc.verdict.to_json(), f"MISMATCH: {exc}")
        return EXIT_MISMATCH
    _emit(args, v.to_json(), v.summary())
    return EXIT_OK


def cmd_embed(args) -> int:
    doc = _load(args.file)
    if "elements" in doc:
        n = NearRing.from_json(doc)
    else:
        n = enumerate_centralizer_nearring(SandwichScheme.from_json(_scheme_doc(doc)), args.max_elements)
    e = embed(natural_action(n), args.max_elements)
    dense = density_check(e.rows, e.scheme, args.max_elements)
    payload = {"scheme": e.scheme.to_json(), "pairing": e.pairing, "exhaustive": e.exhaustive,
               "dense": dense, "target_size": len(e.target)}
    text = (f"embedded |N|={len(n)} into M0(X, Gamma, phi, S) with X={list(e.scheme.x)}, "
            f"|S|={len(e.scheme.s)}, phi={list(e.scheme.phi)}; dense: {dense}")
    _emit(args, payload, text)
    return EXIT_OK if dense else EXIT_MISMATCH


def _classify_job(job_and_cap):
    job, cap = job_and_cap
    return census_record(job, cap)


def _seen_keys(path: Optional[str]) -> set:
    if not path or not os.path.exists(path):
        return set()
    keys = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            try:
                keys.add(json.loads(line)["key"])
            except (json.JSONDecodeError, KeyError, TypeError):
                continue
    return keys


def cmd_search(args) -> int:
    jobs = iter_schemes(args.max_group_order, args.max_elements, args.cyclic_only)
    seen = _seen_keys(args.resume)
    jobs = (j for j in jobs if j.key not in seen)
    if args.sample:
        jobs = list(jobs)
        rng = random.Random(args.seed)
        jobs = sorted(rng.sample(jobs, min(args.sample, len(jobs))), key=lambda j: j.key)
    work = ((j, args.max_elements) for j in jobs)
    mismatches = 0
    workers = 1 if args.sequential else (args.workers or os.cpu_count() or 1)
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        records = pool.imap_unordered(_classify_job, work, chunksize=32)
    else:
        pool = None
        records = map(_classify_job, work)
    try:
        for rec in records:
            v = rec.get("verdict", {})
            if v.get("agree") is False and not v.get("ring"):
                mismatches += 1
            print(json.dumps(rec, sort_keys=True), flush=False)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    sys.stdout.flush()
    if mismatches:
        print(f"{mismatches} theorem/direct mismatches", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_worked_examples(args) -> int:
    phi = None
    if args.z7_phi:
        try:
            phi = [int(v) for v in args.z7_phi.split(",")]
        except ValueError:
            raise InputError("--z7-phi expects comma-separated integers") from None
    claims, seconds = all_claims(phi)
    failed = [c for c in claims if not c.ok]
    if args.json:
        print(json.dumps({"claims": [c.to_json() for c in claims], "passed": not failed,
                          "seconds": round(seconds, 3)}, sort_keys=True))
    else:
        for c in claims:
            print(c.line())
        print(f"{len(claims) - len(failed)}/{len(claims)} claims hold")
    return EXIT_MISMATCH if failed else EXIT_OK


# parser ----------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-elements", type=_positive, default=DEFAULT_MAX_ELEMENTS,
                        help="largest near-ring to materialize (default %(default)s)")

    p = _Parser(prog="sandwich-nearrings",
                                description="Sandwich centralizer near-rings and their primitivity.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("axioms", parents=[common], help="verify near-ring axioms of a dump or scheme")
    a.add_argument("file")
    a.set_defaults(func=cmd_axioms)

    a = sub.add_parser("build-phi", parents=[common], help="recipe JSON -> scheme JSON")
    a.add_argument("file")
    a.set_defaults(func=cmd_build_phi)

    a = sub.add_parser("build-nearring", parents=[common], help="scheme JSON -> near-ring")
    a.add_argument("file")
    a.add_argument("--tables", action="store_true", help="include + and o' tables in the dump")
    a.set_defaults(func=cmd_build_nearring)

    a = sub.add_parser("classify", parents=[common], help="decide 1-/2-primitivity both ways")
    a.add_argument("file", help="scheme JSON, a census line or '-' for stdin")
    a.set_defaults(func=cmd_classify)

    a = sub.add_parser("embed", parents=[common], help="embed a faithful type-1 near-ring")
    a.add_argument("file", help="near-ring dump or scheme JSON")
    a.set_defaults(func=cmd_embed)

    a = sub.add_parser("search", parents=[common], help="stream a census of schemes as JSON lines")
    a.add_argument("--max-group-order", type=_positive, default=12)
    a.add_argument("--cyclic-only", action="store_true")
    a.add_argument("--sequential", action="store_true", help="one process, deterministic order")
    a.add_argument("--workers", type=_positive, default=None)
    a.add_argument("--sample", type=_positive, default=None, help="classify a random subset of this size")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--resume", metavar="FILE", help="skip keys already present in an earlier census")
    a.set_defaults(func=cmd_search)

    a = sub.add_parser("paper-examples", parents=[common], help="check the four worked examples")
    a.add_argument("--z7-phi", help=argparse.SUPPRESS)
    a.set_defaults(func=cmd_worked_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, InvalidArgument) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except NearRingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
