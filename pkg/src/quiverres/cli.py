"""Command line entry point: ``quiverres <command> (--job FILE | --example NAME)``.

Exit codes: 0 success, 2 an invariant check failed, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .errors import InvariantViolation, JobError, QuiverError
from .jobs import Job, codimension, desing_data, parse_job
from .quiver import classify, euler_quadratic, positive_roots
from .render import TWIST_CONVENTIONS, render
from .reps import indecomposable
from .resolution import assemble_resolution, hilbert_consistency, thm33_check, verdict

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 2, 3


def _load(args, require_mode=True) -> Job:
    if args.example:
        return parse_job(corpus.example_text(args.example), require_mode)
    if not args.job:
        raise JobError("give --job FILE or --example NAME")
    try:
        with open(args.job, "rb") as fh:
            return parse_job(fh.read(), require_mode)
    except OSError as e:
        raise JobError(f"cannot read {args.job}: {e.strerror}") from None


def _opt(args, job: Job, name: str, default):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return job.options.get(name, default)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_roots(args, out) -> int:
    job = _load(args, require_mode=False)
    q = job.quiver
    roots = positive_roots(q)
    if args.format == "json":
        out.write(_dump({"graph": classify(q).label, "roots": [q.as_mapping(r) for r in roots]}))
    else:
        out.write(f"{classify(q).label}: {len(roots)} positive roots\n")
        for r in roots:
            out.write(f"  {r}\n")
    return EXIT_OK


def _parse_root(job: Job, text: str):
    text = text.strip()
    try:
        value = json.loads(text) if text.startswith(("{", "[")) else [int(x) for x in text.split(",")]
    except ValueError:
        raise JobError(f"cannot read dimension vector {text!r}", "--root") from None
    try:
        return job.quiver.dim(value)
    except QuiverError as e:
        raise JobError(str(e), "--root") from None


def cmd_indec(args, out) -> int:
    job = _load(args, require_mode=False)
    q = job.quiver
    root = _parse_root(job, args.root)
    if euler_quadratic(q, root) != 1 or root not in positive_roots(q):
        raise JobError(f"{root} is not a positive root of {classify(q)}", "--root")
    rep = indecomposable(q, root)
    maps = {a.id: [[str(x) for x in row] for row in rep.matrix(k)] for k, a in enumerate(q.arrows)}
    if args.format == "json":
        out.write(_dump({"root": q.as_mapping(root), "maps": maps}))
        return EXIT_OK
    out.write(f"indecomposable of dimension {root}\n")
    for k, a in enumerate(q.arrows):
        t, h = q.ends(k)
        out.write(f"  {a.id}: V_{a.tail} -> V_{a.head}  ({root[h]} x {root[t]})\n")
        for row in maps[a.id]:
            out.write("    [" + " ".join(f"{x:>3}" for x in row) + "]\n")
    return EXIT_OK


def cmd_desing(args, out) -> int:
    job = _load(args)
    data = desing_data(job)
    codim, source = codimension(job, data)
    q = job.quiver
    info = {
        "mode": data.provenance,
        "graph": classify(q).label,
        "alpha": q.as_mapping(data.alpha),
        "beta": q.as_mapping(data.beta),
        "gamma": q.as_mapping(tuple(a - b for a, b in zip(data.alpha, data.beta))),
        "codim": codim,
        "codim_source": source,
    }
    if data.partition is not None:
        info["first"] = [q.as_mapping(r) for r in data.partition.first]
        info["second"] = [q.as_mapping(r) for r in data.partition.second]
    if args.format == "json":
        out.write(_dump(info))
        return EXIT_OK
    out.write(f"{info['graph']} ({data.provenance} mode)\n")
    out.write(f"  alpha = {data.alpha}\n  beta  = {data.beta}\n")
    if data.partition is not None:
        out.write(f"  first part:  {list(data.partition.first)}\n")
        out.write(f"  second part: {list(data.partition.second)}\n")
    out.write(f"  codim = {codim} ({source})\n")
    return EXIT_OK


def _resolve(job: Job, jobs: int, checks: bool):
    data = desing_data(job)
    res = assemble_resolution(job.quiver, data.alpha, data.beta, jobs=jobs)
    cls = classify(job.quiver)
    v = verdict(res, cls)
    failures = []
    if checks:
        codim, source = codimension(job, data)
        report = hilbert_consistency(res, codim)
        res.checks["hilbert"] = dict(report.to_dict(), codim_source=source)
        if not report.ok:
            failures.append("hilbert series check failed")
        if (cls.is_dynkin or cls.is_extended) and res.checks["thm33"]["violations"]:
            failures.append(f"{res.checks['thm33']['violations']} records violate D >= E_Q(u)")
        if cls.is_dynkin and not v.normal_rational:
            failures.append(f"dynkin input but verdict is {v.label!r}")
    else:
        res.checks = {}
    return res, v, failures


def cmd_resolve(args, out) -> int:
    job = _load(args)
    fmt = _opt(args, job, "format", "text")
    res, v, failures = _resolve(job, _opt(args, job, "jobs", 1), not args.no_checks and job.options.get("checks", True))
    out.write(render(res, fmt, v, args.twist))
    for f in failures:
        print(f"invariant violation: {f}", file=sys.stderr)
    return EXIT_INVARIANT if failures else EXIT_OK


def cmd_check(args, out) -> int:
    job = _load(args)
    res, v, failures = _resolve(job, _opt(args, job, "jobs", 1), True)
    records = thm33_check(job.quiver, res.alpha, res.beta, _opt(args, job, "jobs", 1))
    worst = min((r.D - r.euler for r in records), default=0)
    summary = {
        "verdict": v.label,
        "basis": v.basis,
        "thm33": {"records": len(records), "violations": sum(not r.passed for r in records), "min_slack": worst},
        "hilbert": res.checks["hilbert"],
        "ok": not failures,
        "failures": failures,
    }
    if args.format == "json":
        out.write(_dump(summary))
    else:
        h = summary["hilbert"]
        out.write(f"verdict: {v.label} ({v.basis})\n")
        out.write(f"D >= E_Q(u): {summary['thm33']['violations']} violations in {len(records)} records, "
                  f"min slack {worst}\n")
        out.write(f"hilbert: codim {h['codim']} ({h['codim_source']}), K(1) = {h['K(1)']}, "
                  f"divisible = {h['divisible']}, degree = {h['degree']}\n")
        for f in failures:
            out.write(f"FAILED: {f}\n")
    return EXIT_INVARIANT if failures else EXIT_OK


def cmd_corpus(args, out) -> int:
    report = corpus.run_corpus(jobs=args.jobs or 1)
    out.write(_dump(report.to_dict()) if args.format == "json" else report.text())
    return EXIT_OK if report.ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, job=True, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        if job:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--job", metavar="FILE", help="job file (JSON)")
            src.add_argument("--example", choices=corpus.EXAMPLES, help="bundled example job")
        p.add_argument("--format", choices=formats, default=None if "tex" in formats else "text")
        p.set_defaults(func=func)
        return p

    add("roots", cmd_roots, "list positive roots of a Dynkin quiver")
    p = add("indec", cmd_indec, "print an indecomposable representation")
    p.add_argument("--root", required=True, help="dimension vector, e.g. 1,1,0 or a JSON object")
    add("desing", cmd_desing, "show the 1-step desingularization data")
    p = add("resolve", cmd_resolve, "compute the terms of the complex", formats=("text", "json", "tex"))
    p.add_argument("--jobs", type=int, default=None, help="worker processes")
    p.add_argument("--no-checks", action="store_true", help="skip the consistency checks")
    p.add_argument("--twist", choices=TWIST_CONVENTIONS, default="degree",
                   help="label twists by generator degree t (default) or by t+N")
    p = add("check", cmd_check, "run the inequality and Hilbert series checks")
    p.add_argument("--jobs", type=int, default=None)
    p = add("corpus", cmd_corpus, "run the bundled examples and diff against reference tables", job=False)
    p.add_argument("--jobs", type=int, default=None)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (JobError, QuiverError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
