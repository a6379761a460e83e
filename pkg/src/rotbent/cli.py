"""Command-line front end.

Exit codes: 0 for success (and affirmative predicate verdicts), 1 for a
negative predicate verdict (not bent, or no rule fires), 2 for usage and
capacity errors, 3 when internal cross-checks disagree.

ROTBENT_THREADS > 1 splits an unsharded search into that many shard
processes and merges their results deterministically.
"""

import argparse
import json
import math
import multiprocessing
import os
import sys
import time

from .covercoef import (
    CAPACITY,
    all_cover_coefficients,
    bent_by_valuation,
    cover_coefficient,
    cover_coefficient_from_spectrum,
    two_adic_valuation,
)
from .errors import CapacityError, InternalInconsistencyError
from .gf2poly import classify_degree2
from .nonexistence import NOT_BENT, RULES, verify_witness
from .rotsym import (
    bits_to_mask,
    format_sanf,
    mask_to_bits,
    orbit_count,
    orbit_expand,
    parse_sanf,
    sanf_truth_table,
)
from .search import DEFAULT_BUDGET, SearchTask, _params_hash, exhaustive_search
from .walsh import is_bent, walsh_spectrum

_WALSH_N_MAX = 22  # full-table routes above this are not worth materializing


def _thread_count():
    raw = os.environ.get("ROTBENT_THREADS", "1")
    try:
        t = int(raw)
    except ValueError:
        t = 0
    if t < 1:
        raise ValueError(f"ROTBENT_THREADS must be a positive integer, got {raw!r}")
    return t


def _parse_shard(text):
    if text is None:
        return None
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError("shard must look like INDEX/TOTAL, e.g. 0/4")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError("shard must look like INDEX/TOTAL, e.g. 0/4") from None


def _v2_text(v):
    return "inf" if v == math.inf else int(v)


def cmd_bent_check(args):
    n = args.nvars
    sanf = parse_sanf(args.sanf, n)
    verdicts = []
    if args.method in ("walsh", "auto"):
        if n <= _WALSH_N_MAX:
            verdicts.append(("walsh", is_bent(sanf_truth_table(sanf))))
        elif args.method == "walsh":
            raise CapacityError(
                f"walsh route materializes 2^{n} entries; limited to n <= {_WALSH_N_MAX}"
            )
    if args.method in ("valuation", "auto"):
        try:
            verdicts.append(("valuation", bent_by_valuation(orbit_expand(sanf))))
        except (ValueError, CapacityError):
            if args.method == "valuation":
                raise
    if not verdicts:
        raise CapacityError(f"no bentness route is feasible at n={n}")
    if len({v for _, v in verdicts}) > 1:
        raise InternalInconsistencyError(
            "methods disagree: " + ", ".join(f"{m}={v}" for m, v in verdicts)
        )
    bent = verdicts[0][1]
    methods = [m for m, _ in verdicts]
    if args.format == "json":
        print(
            json.dumps(
                {"n": n, "sanf": format_sanf(sanf), "bent": bent, "methods": methods}
            )
        )
    else:
        word = "bent" if bent else "not bent"
        print(f"{format_sanf(sanf)} on n={n}: {word} [{', '.join(methods)}]")
    return 0 if bent else 1


def cmd_classify_deg2(args):
    found = classify_degree2(args.nvars)
    names = [format_sanf(s) for s in found]
    if args.format == "json":
        print(json.dumps({"n": args.nvars, "bent": names}))
    else:
        for name in names:
            print(name)
        print(f"{len(names)} bent degree-2 functions on n={args.nvars}")
    return 0


def cmd_spectrum(args):
    n = args.nvars
    if n > _WALSH_N_MAX:
        raise CapacityError(f"spectrum output is limited to n <= {_WALSH_N_MAX}")
    sanf = parse_sanf(args.sanf, n)
    values = walsh_spectrum(sanf_truth_table(sanf)).values.tolist()
    if args.format == "json":
        print(json.dumps({"n": n, "sanf": format_sanf(sanf), "values": values}))
    else:
        print(" ".join(map(str, values)))
    return 0


def cmd_hcoeff(args):
    n = args.nvars
    sanf = parse_sanf(args.sanf, n)
    monos = sorted(orbit_expand(sanf).monomials)
    if args.all_u:
        harr = all_cover_coefficients(monos, n)
        order = sorted(range(1 << n), key=lambda u: (u.bit_count(), u))
        rows = [
            {
                "u": mask_to_bits(u, n),
                "value": int(harr[u]),
                "v2": _v2_text(two_adic_valuation(int(harr[u]))),
            }
            for u in order
        ]
        if args.format == "json":
            print(json.dumps({"n": n, "sanf": format_sanf(sanf), "values": rows}))
        else:
            for row in rows:
                print(f"u={row['u']} value={row['value']} v2={row['v2']}")
        return 0
    u = bits_to_mask(args.u, n)
    if len(monos) <= CAPACITY:
        cv = cover_coefficient(monos, u)
    elif n <= _WALSH_N_MAX:
        cv = cover_coefficient_from_spectrum(walsh_spectrum(sanf_truth_table(sanf)), u)
    else:
        raise CapacityError(
            f"{len(monos)} monomials on n={n}: both coefficient routes are out of reach"
        )
    v2 = _v2_text(cv.valuation)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "sanf": format_sanf(sanf),
                    "u": mask_to_bits(u, n),
                    "value": cv.value,
                    "v2": v2,
                }
            )
        )
    else:
        print(f"value={cv.value} v2={v2}")
    return 0


def cmd_nonexist(args):
    n = args.nvars
    sanf = parse_sanf(args.sanf, n)
    selected = RULES if args.rule == "all" else [r for r in RULES if r[0] == args.rule]
    reports = [(name, fn(sanf)) for name, fn in selected]
    for name, rep in reports:
        if rep.witness_u0 is None:
            continue
        try:
            ok = verify_witness(sanf, rep)
        except CapacityError:
            continue
        if not ok:
            raise InternalInconsistencyError(f"{name} witness fails re-verification")
    proved = any(rep.verdict == NOT_BENT for _, rep in reports)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "sanf": format_sanf(sanf),
                    "not_bent": proved,
                    "reports": {name: rep.as_dict() for name, rep in reports},
                }
            )
        )
    elif args.rule != "all":
        print(reports[0][1].text())
    elif args.compare or not proved:
        for name, rep in reports:
            print(f"{name:14} {rep.text()}")
    else:
        first = next(rep for _, rep in reports if rep.verdict == NOT_BENT)
        print(first.text())
    return 0 if proved else 1


def _shard_worker(payload):
    n, d, mode, index, total, long_run, budget = payload
    task = SearchTask(n, d, mode, (index, total), long_run)
    return exhaustive_search(task, budget)


def cmd_search(args):
    n, d = args.nvars, args.degree
    shard = _parse_shard(args.shard)
    threads = _thread_count()
    started = time.perf_counter()
    if shard is None and threads > 1:
        payloads = [
            (n, d, args.mode, i, threads, args.long_run, args.budget)
            for i in range(threads)
        ]
        tested = 0
        merged = []
        total = (1 << orbit_count(n, d)) - 1
        with multiprocessing.Pool(threads) as pool:
            for i, res in enumerate(pool.imap(_shard_worker, payloads)):
                tested += res.candidates
                merged.extend(res.bent)
                if args.checkpoint:
                    task = SearchTask(n, d, args.mode, (i, threads), args.long_run)
                    record = {
                        "n": n,
                        "d": d,
                        "mode": args.mode,
                        "shard": [i, threads],
                        "range": [1 + (total * i) // threads, 1 + (total * (i + 1)) // threads],
                        "candidates_tested": res.candidates,
                        "bent": [format_sanf(s) for s in res.bent],
                        "params_hash": _params_hash(task, args.budget),
                        "elapsed_s": round(time.perf_counter() - started, 3),
                    }
                    with open(args.checkpoint, "a", encoding="utf-8") as fh:
                        fh.write(json.dumps(record, sort_keys=True) + "\n")
        bent = sorted(merged, key=lambda s: s.reps)
    else:
        task = SearchTask(n, d, args.mode, shard, args.long_run)
        result = exhaustive_search(task, args.budget, args.checkpoint)
        tested = result.candidates
        bent = sorted(result.bent, key=lambda s: s.reps)
    payload = {
        "n": n,
        "d": d,
        "mode": args.mode,
        "shard": list(shard) if shard else None,
        "candidates_tested": tested,
        "bent": [format_sanf(s) for s in bent],
        "elapsed_s": round(time.perf_counter() - started, 3),
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for name in payload["bent"]:
            print(name)
        print(f"{len(bent)} bent / {tested} tested")
    return 0


def _add_common(sp, with_sanf=True):
    sp.add_argument("-n", "--nvars", type=int, required=True, help="number of variables")
    if with_sanf:
        sp.add_argument("sanf", help="short ANF, e.g. x1x2x3+x1x2x4")
    sp.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser():
    p = argparse.ArgumentParser(
        prog="rotbent",
        description="Bentness analysis of homogeneous rotation-symmetric "
        "Boolean functions",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("bent-check", help="test one SANF for bentness")
    _add_common(sp)
    sp.add_argument(
        "--method",
        choices=("walsh", "valuation", "auto"),
        default="auto",
        help="auto runs every feasible route and cross-checks them",
    )
    sp.set_defaults(func=cmd_bent_check)

    sp = sub.add_parser(
        "classify-deg2", help="list all bent degree-2 rotation-symmetric functions"
    )
    _add_common(sp, with_sanf=False)
    sp.set_defaults(func=cmd_classify_deg2)

    sp = sub.add_parser("spectrum", help="print the Walsh spectrum")
    _add_common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("hcoeff", help="cover coefficients and their valuations")
    _add_common(sp)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--u", help="mask as a 0/1 string, position 1 first")
    group.add_argument(
        "--all-u", action="store_true", help="every mask, ordered by weight then value"
    )
    sp.set_defaults(func=cmd_hcoeff)

    sp = sub.add_parser("nonexist", help="run the structural nonexistence rules")
    _add_common(sp)
    sp.add_argument(
        "--rule",
        choices=("all",) + tuple(name for name, _ in RULES),
        default="all",
        help="run a single rule instead of all of them",
    )
    sp.add_argument(
        "--compare", action="store_true", help="show every rule's verdict in a table"
    )
    sp.set_defaults(func=cmd_nonexist)

    sp = sub.add_parser("search", help="exhaustive search over a degree layer")
    _add_common(sp, with_sanf=False)
    sp.add_argument("-d", "--degree", type=int, required=True, help="homogeneous degree")
    sp.add_argument("--mode", choices=("full", "early-abort"), default="early-abort")
    sp.add_argument("--shard", help="INDEX/TOTAL slice of the candidate space")
    sp.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="largest candidate count accepted without sharding or --long-run",
    )
    sp.add_argument(
        "--long-run",
        action="store_true",
        help="accept candidate counts over the budget in one call",
    )
    sp.add_argument("--checkpoint", help="append JSON-lines progress records here")
    sp.add_argument("--out", help="write the final result as JSON here")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
