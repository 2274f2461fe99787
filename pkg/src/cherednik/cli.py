"""Command line driver: builds L_{t,c}(tau), checks the expected tables,
the Assumption sums and the conjectural Stand rows.

Exit codes: 0 all verified, 1 mismatch, 2 unterminated, 64 usage error.
"""
import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from sympy import isprime, primerange

from . import closedform as cf
from . import rep3
from .verma import (build_irreducible, casimir_violations, character, default_bound, hilbert,
                    make_params)

EXIT_OK, EXIT_MISMATCH, EXIT_UNTERMINATED, EXIT_USAGE = 0, 1, 2, 64
TABLES = ("p2", "p3", "generic", "special", "conjecture")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- jobs ----------------------------------------------------------------------

def parse_c(text, p):
    s = str(text).strip().lower()
    if s == "zero":
        return 0
    if s == "generic":
        return "generic"
    try:
        c = int(s)
    except ValueError:
        raise UsageError(f"c must be 'zero', 'generic' or an integer, got {text!r}")
    if not 0 <= c < p:
        raise UsageError(f"c={c} is outside 0..{p - 1}")
    return c


def make_job(p, t, c, tau, bound=None, use_filter=True):
    if not isprime(p):
        raise UsageError(f"p={p} is not prime")
    if t not in (0, 1):
        raise UsageError("t must be 0 or 1")
    c = parse_c(c, p)
    try:
        tau = rep3.check_label(tau, p)
    except ValueError as e:
        raise UsageError(str(e))
    return {"p": p, "t": t, "c": c, "tau": tau, "bound": bound, "filter": use_filter}


def _ckey(c):
    return (1, 0) if c == "generic" else (0, c)


def record_key(r):
    return (r["p"], r["t"], _ckey(r["c"]), rep3.labels_for(r["p"]).index(r["tau"]))


def run_job(job):
    """Build one point and compare it with the expected table.  Wall time
    is returned separately so that exported records stay deterministic."""
    t0 = time.perf_counter()
    P = make_params(job["p"], job["t"], job["c"], job["tau"])
    bound = job["bound"] or default_bound(P.p)
    state = build_irreducible(P, bound, use_filter=job["filter"])
    h = hilbert(state)
    chi = character(state)
    gens = [{"degree": g.degree,
             "isotype": {k: int(v) for k, v in g.isotype.counts.items() if v},
             "terms": [v.serialize() for v in g.vectors]}
            for g in state.generators]
    exp = cf.expected_results(P.p, job["t"], P.c, P.tau)
    match = h == exp.hilbert and chi == exp.character
    expected = {"hilbert": exp.hilbert, "character": exp.character.to_dict(),
                "conjectural": exp.conjectural, "match": match}
    if exp.conjectural:
        expected["generators_match"] = cf.conjecture_check(state)
        expected["match"] = match and expected["generators_match"]
    status = state.status()
    if state.terminated and not expected["match"]:
        status = "mismatch"
    rec = {"p": P.p, "t": job["t"], "c": job["c"], "tau": P.tau, "field": str(P.F),
           "bound": bound, "filter": state.filtered, "status": status, "hilbert": h,
           "dimension": sum(h), "character": chi.to_dict(), "generators": gens,
           "casimir_violations": [list(x) for x in casimir_violations(state)],
           "expected": expected}
    return rec, time.perf_counter() - t0


def run_jobs(jobs, workers=1):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            out = list(ex.map(run_job, jobs))
    else:
        out = [run_job(j) for j in jobs]
    pairs = sorted(out, key=lambda rt: record_key(rt[0]))
    return [r for r, _ in pairs], sum(t for _, t in pairs)


def table_jobs(which, primes, bound=None, use_filter=True):
    jobs = []
    if which == "p2":
        cells = [(0, 0), (0, 1), (1, 0), (1, 1), (1, "generic")]
        for t, c in cells:
            for tau in rep3.labels_for(2):
                jobs.append(make_job(2, t, c, tau, bound, use_filter))
        return jobs
    if which == "p3":
        for t in (0, 1):
            for c in [0, 1, 2, "generic"]:
                for tau in rep3.labels_for(3):
                    jobs.append(make_job(3, t, c, tau, bound, use_filter))
        return jobs
    if not primes:
        raise UsageError(f"--which {which} needs --p")
    for p in primes:
        if p <= 3 or not isprime(p):
            raise UsageError(f"--which {which} needs primes p > 3, got {p}")
        for tau in rep3.labels_for(p):
            if which == "generic":
                for t in (0, 1):
                    jobs.append(make_job(p, t, "generic", tau, bound, use_filter))
                continue
            for c in range(p):
                conj = (tau, cf.classify(p, 1, c)) in cf.CONJECTURAL
                if conj == (which == "conjecture"):
                    jobs.append(make_job(p, 1, c, tau, bound, use_filter))
    return jobs


def exit_code(records):
    proven = [r for r in records if not r["expected"]["conjectural"]]
    if any(r["status"] == "mismatch" or r["casimir_violations"] for r in proven):
        return EXIT_MISMATCH
    if any(r["status"] == "unterminated" for r in records):
        return EXIT_UNTERMINATED
    return EXIT_OK


def summary(records):
    def count(rs):
        return {"total": len(rs),
                "match": sum(r["expected"]["match"] for r in rs),
                "mismatch": sum(r["status"] == "mismatch" for r in rs),
                "unterminated": sum(r["status"] == "unterminated" for r in rs)}
    return {"proven": count([r for r in records if not r["expected"]["conjectural"]]),
            "conjectural": count([r for r in records if r["expected"]["conjectural"]])}


# -- export --------------------------------------------------------------------

CSV_FIELDS = ["p", "t", "c", "tau", "field", "status", "match", "conjectural", "dimension", "hilbert",
              "character", "generator_degrees"]


def _join(xs):
    return ",".join(str(x) for x in xs)


def csv_row(r):
    return {"p": r["p"], "t": r["t"], "c": r["c"], "tau": r["tau"], "field": r["field"],
            "status": r["status"], "match": r["expected"]["match"],
            "conjectural": r["expected"]["conjectural"], "dimension": r["dimension"],
            "hilbert": _join(r["hilbert"]),
            "character": ";".join(f"{k}:{_join(v)}" for k, v in r["character"].items()),
            "generator_degrees": _join(g["degree"] for g in r["generators"])}


def export(rows, fmt, fields=None):
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    fields = fields or CSV_FIELDS
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r if fields is not CSV_FIELDS else csv_row(r))
    return buf.getvalue()


def emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def cmd_build(args):
    job = make_job(args.p, args.t, args.c, args.tau, args.bound, not args.no_filter)
    rec, wall = run_job(job)
    emit(export([rec], args.format), args.out)
    tag = " (conjectural)" if rec["expected"]["conjectural"] else ""
    print(f"{rec['status']}, table {'match' if rec['expected']['match'] else 'MISMATCH'}{tag}, "
          f"{wall:.2f}s", file=sys.stderr)
    return exit_code([rec])


def cmd_verify_tables(args, which=None):
    which = which or args.which
    jobs = table_jobs(which, args.p, args.bound, not args.no_filter)
    records, wall = run_jobs(jobs, args.jobs)
    emit(export(records, args.format), args.out)
    s = summary(records)
    for kind, d in s.items():
        if d["total"]:
            print(f"{which} {kind}: {d['match']}/{d['total']} match, {d['mismatch']} mismatch, "
                  f"{d['unterminated']} unterminated", file=sys.stderr)
    print(f"wall {wall:.2f}s", file=sys.stderr)
    return exit_code(records)


def assumption_records(p_max):
    out = []
    for p in primerange(5, p_max):
        for c in range(1, (p - 1) // 3 + 1):
            a = cf.assumption_check(p, c)
            out.append({"p": a.p, "c": a.c, "branch": a.branch, "value": a.value, "holds": a.holds,
                        "note": a.note})
    return out


def cmd_check_assumption(args):
    t0 = time.perf_counter()
    recs = assumption_records(args.p_max)
    emit(export(recs, args.format, ["p", "c", "branch", "value", "holds", "note"]), args.out)
    bad = [r for r in recs if not r["holds"]]
    print(f"{len(recs) - len(bad)}/{len(recs)} hold ({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_check_conjecture(args):
    return cmd_verify_tables(args, "conjecture")


def build_parser():
    ap = _Parser(prog="cherednik", description="Irreducible representations of rational "
                 "Cherednik algebras of S3 over finite fields.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write results here instead of stdout")

    def building(sp):
        sp.add_argument("--bound", type=int, help="degree bound (default: $CHEREDNIK_BOUND or 6p+6)")
        sp.add_argument("--no-filter", action="store_true", help="search every degree (no Casimir filter)")

    b = sub.add_parser("build", help="build one L_{t,c}(tau)")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--t", type=int, choices=(0, 1), required=True)
    b.add_argument("--c", required=True, help="zero, generic or an integer 0 <= c < p")
    b.add_argument("--tau", required=True, help="triv, sign or stand")
    building(b)
    common(b)
    b.set_defaults(func=cmd_build)

    for name, func in (("verify-tables", cmd_verify_tables), ("check-conjecture", cmd_check_conjecture)):
        v = sub.add_parser(name, help="compare every covered point with the expected tables"
                           if name == "verify-tables" else "the Stand rows with p/3 < c < 2p/3")
        if name == "verify-tables":
            v.add_argument("--which", choices=TABLES, required=True)
        v.add_argument("--p", type=int, nargs="+", default=[])
        v.add_argument("--jobs", type=int, default=1, help="worker processes")
        building(v)
        common(v)
        v.set_defaults(func=func)

    a = sub.add_parser("check-assumption", help="evaluate the Assumption sums for 3 < p < p-max")
    a.add_argument("--p-max", type=int, required=True)
    common(a)
    a.set_defaults(func=cmd_check_assumption)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 1:
        ap.exit(EXIT_USAGE, "cherednik: error: --bound must be positive\n")
    if getattr(args, "jobs", 1) < 1:
        ap.exit(EXIT_USAGE, "cherednik: error: --jobs must be positive\n")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"cherednik: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
