"""Bundled regression corpus: three Dynkin jobs diffed against reference term tables.

The reference tables are kept verbatim (LaTeX) and may contain misprints.
Nothing is corrected by hand: each reference line is parsed, and whatever
does not agree with the computed complex is reported as ``PAPER-DIFF`` with
the nearest computed term alongside.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from importlib import resources

from .jobs import Job, codimension, desing_data, parse_job
from .quiver import classify
from .render import coordinate_ring_factors, term_string
from .resolution import (
    FreeResolution,
    ResolutionTerm,
    Verdict,
    assemble_resolution,
    bundle_spec,
    enumerate_tuples,
    hilbert_consistency,
    iter_summands,
    verdict,
)
from .schur import negate_reverse

EXAMPLES = ("a4", "d5", "e6")

MATCH = "MATCH"
PAPER_DIFF = "PAPER-DIFF"

_TWIST = re.compile(r"A\(-(\d+)\)")
_STRICT = re.compile(r"(?:\\wedge\^(\d+)|S_\{(\d+)\})?\s*V_(\w+)(\^\*)?")
_LENIENT = re.compile(r"(?:\\wedge\^?\s*(\d+)|S_\{(\d+)\})?\s*V\s*[_-]\s*\{?(\w)\}?(\^\*)?")


def _data(name: str) -> str:
    return resources.files("quiverres").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_job(name: str) -> Job:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return parse_job(_data(f"{name}.json"))


def example_text(name: str) -> str:
    load_job(name)
    return _data(f"{name}.json")


@dataclass(frozen=True)
class GoldenTerm:
    degree: int
    raw: str
    where: str
    twist: int | None  # printed twist; None for the bare "A"
    weights: tuple | None  # per-vertex dominant weight, None if unreadable
    issues: tuple[str, ...] = ()


@dataclass
class Golden:
    name: str
    header: str
    terms: list[GoldenTerm]


def _factor_weight(wedge, shape, star, d):
    if shape is not None:
        parts = tuple(int(c) for c in shape)
    else:
        parts = (1,) * int(wedge or 1)
    if len(parts) > d:
        raise ValueError(f"{len(parts)} rows do not fit in dimension {d}")
    if star:
        return negate_reverse(parts, d)
    return parts + (0,) * (d - len(parts))


def parse_term(raw: str, job: Job) -> tuple[int | None, tuple | None, tuple[str, ...]]:
    """Read one reference term into (twist, weights, issues)."""
    q, alpha = job.quiver, job.alpha
    text = raw.strip()
    if text == "A":
        return None, tuple((0,) * d for d in alpha), ()
    issues = []
    twists = _TWIST.findall(text)
    if len(twists) != 1:
        return None, None, (f"expected one twist A(-n), found {len(twists)}",)
    twist = int(twists[0])
    body = _TWIST.sub("", text)
    weights: dict[int, tuple] = {}
    for piece in body.split("\\otimes"):
        piece = piece.strip().strip("()").strip()
        if not piece:
            continue
        m = _STRICT.fullmatch(piece)
        tokens = [m.groups()] if m else _LENIENT.findall(piece)
        if not m:
            issues.append(f"malformed factor {piece!r}")
            if not tokens:
                continue
            if len(tokens) > 1:
                issues.append(f"missing \\otimes inside {piece!r}")
        for wedge, shape, vertex, star in tokens:
            try:
                x = q.index(vertex)
                w = _factor_weight(wedge, shape or None, star, alpha[x])
            except (KeyError, ValueError) as e:
                issues.append(f"unreadable factor {piece!r}: {e}")
                continue
            if x in weights:
                issues.append(f"vertex {vertex} appears twice")
            weights[x] = w
    full = tuple(weights.get(x, (0,) * d) for x, d in enumerate(alpha))
    if sum(map(sum, full)) != 0:
        issues.append("unbalanced: starred and unstarred boxes differ")
    return twist, full, tuple(issues)


def load_golden(name: str, job: Job | None = None) -> Golden:
    job = job or load_job(name)
    header, terms = "", []
    for line in _data(f"{name}.golden").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if fields[0] == "A":
            header = fields[1]
            continue
        degree, raw, where = int(fields[0]), fields[1], fields[2] if len(fields) > 2 else ""
        twist, weights, issues = parse_term(raw, job)
        terms.append(GoldenTerm(degree, raw, where, twist, weights, issues))
    return Golden(name, header, terms)


@dataclass
class TermDiff:
    status: str  # MATCH or PAPER-DIFF
    kind: str | None  # typo, no-match, duplicate, absent-from-table
    golden: GoldenTerm | None
    computed: ResolutionTerm | None
    notes: tuple[str, ...] = ()

    def to_dict(self, q) -> dict:
        out = {"status": self.status, "kind": self.kind}
        if self.golden is not None:
            g = self.golden
            out["reference"] = {"degree": g.degree, "twist": g.twist, "raw": g.raw, "where": g.where}
        if self.computed is not None:
            c = self.computed
            out["computed"] = {"degree": c.degree, "twist": c.table_twist,
                               "term": term_string(q, c, "tex", "table")}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _table_key(t: ResolutionTerm):
    return (t.degree, 0 if t.is_trivial else t.table_twist, t.weights)


def _golden_key(g: GoldenTerm):
    return (g.degree, g.twist or 0, g.weights)


def _distance(g: GoldenTerm, t: ResolutionTerm) -> tuple:
    differing = sum(a != b for a, b in zip(g.weights or (), t.weights)) if g.weights else len(t.weights)
    return (abs(g.degree - t.degree), differing, abs((g.twist or 0) - t.table_twist))


def diff_terms(golden: Golden, res: FreeResolution) -> list[TermDiff]:
    """Pair reference lines with computed terms (compared under the t+N twist label)."""
    pool = [t for t in res.terms for _ in range(t.mult)]
    used = [False] * len(pool)
    out: list[TermDiff | None] = [None] * len(golden.terms)

    for k, g in enumerate(golden.terms):
        if g.weights is None:
            continue
        key = _golden_key(g)
        for j, t in enumerate(pool):
            if not used[j] and _table_key(t) == key:
                used[j] = True
                out[k] = TermDiff(PAPER_DIFF if g.issues else MATCH, "typo" if g.issues else None, g, t, g.issues)
                break

    # same weights at another (degree, twist): a misplaced line
    for k, g in enumerate(golden.terms):
        if out[k] is not None or g.weights is None:
            continue
        for j, t in enumerate(pool):
            if not used[j] and t.weights == g.weights:
                used[j] = True
                note = f"same weights, computed at degree {t.degree} with twist A(-{t.table_twist})"
                out[k] = TermDiff(PAPER_DIFF, "no-match", g, t, g.issues + (note,))
                break

    # a repeat of a line that was already paired
    for k, g in enumerate(golden.terms):
        if out[k] is not None or g.weights is None:
            continue
        same = [t for t in pool if t.weights == g.weights and t.table_twist == g.twist]
        if same:
            note = f"repeats a term that belongs to degree {same[0].degree}"
            out[k] = TermDiff(PAPER_DIFF, "duplicate", g, same[0], g.issues + (note,))

    for k, g in enumerate(golden.terms):
        if out[k] is not None:
            continue
        free = [j for j in range(len(pool)) if not used[j]]
        nearest = min(free, key=lambda j: _distance(g, pool[j])) if free else None
        if nearest is not None:
            used[nearest] = True
        out[k] = TermDiff(PAPER_DIFF, "no-match", g, pool[nearest] if nearest is not None else None, g.issues)

    diffs = [d for d in out if d is not None]
    diffs.extend(TermDiff(PAPER_DIFF, "absent-from-table", None, pool[j]) for j in range(len(pool)) if not used[j])
    return diffs


def _normalize_sym(s: str) -> list[str]:
    return sorted(re.sub(r"\s+", "", part) for part in s.split("\\oplus"))


def bott_formula_mismatches(job: Job, alpha, beta) -> tuple[int, int]:
    """(checked, mismatches) of Bott degree against block * u on every nonvanishing vertex weight."""
    q = job.quiver
    spec = bundle_spec(q, alpha, beta)
    seen, bad = set(), 0
    for _, _, combo in iter_summands(q, spec, enumerate_tuples(spec)):
        for x, (shape, _, res, u) in enumerate(combo):
            if (x, shape) in seen:
                continue
            seen.add((x, shape))
            block = spec.gamma[x] if q.is_source(x) else spec.beta[x]
            bad += res.degree != block * u
    return len(seen), bad


@dataclass
class ExampleReport:
    name: str
    resolution: FreeResolution
    verdict: Verdict
    diffs: list[TermDiff]
    header_match: bool
    checks: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def invariants_ok(self) -> bool:
        c = self.checks
        return (self.verdict.normal_rational and c["thm33"]["violations"] == 0 and c["hilbert"]["ok"]
                and c["bott_formula"]["mismatches"] == 0 and self.header_match)

    def counts(self) -> dict:
        out: dict = {}
        for d in self.diffs:
            label = d.status if d.kind is None else f"{d.status}:{d.kind}"
            out[label] = out.get(label, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        q = self.resolution.quiver
        return {
            "name": self.name,
            "alpha": list(self.resolution.alpha),
            "beta": list(self.resolution.beta),
            "verdict": str(self.verdict),
            "header_match": self.header_match,
            "checks": self.checks,
            "counts": self.counts(),
            "diffs": [d.to_dict(q) for d in self.diffs],
            "invariants_ok": self.invariants_ok,
        }


@dataclass
class CorpusReport:
    examples: list[ExampleReport]

    @property
    def ok(self) -> bool:
        return all(e.invariants_ok for e in self.examples)

    def to_dict(self) -> dict:
        return {"examples": [e.to_dict() for e in self.examples], "ok": self.ok}

    def text(self) -> str:
        lines = []
        for e in self.examples:
            q = e.resolution.quiver
            lines.append(f"== {e.name}: alpha {e.resolution.alpha}, beta {e.resolution.beta}, {e.verdict}")
            c = e.checks
            lines.append(f"   thm33 {c['thm33']['violations']}/{c['thm33']['records']} violations; "
                         f"hilbert codim {c['hilbert']['codim']} ok={c['hilbert']['ok']}; "
                         f"bott formula {c['bott_formula']['mismatches']}/{c['bott_formula']['checked']} mismatches; "
                         f"A descriptor match={e.header_match}")
            for d in e.diffs:
                tag = d.status if d.kind is None else f"{d.status} [{d.kind}]"
                ref = f"F_{d.golden.degree} {d.golden.raw}" if d.golden else "(not in reference table)"
                lines.append(f"   {tag}: {ref}")
                if d.status != MATCH and d.computed is not None:
                    lines.append(f"      computed F_{d.computed.degree}: {term_string(q, d.computed, 'tex', 'table')}")
                for note in d.notes:
                    lines.append(f"      note: {note}")
            lines.append(f"   summary: {e.counts()}")
        lines.append(f"invariants: {'ok' if self.ok else 'FAILED'}")
        return "\n".join(lines) + "\n"


def run_example(name: str, jobs: int = 1) -> ExampleReport:
    job = load_job(name)
    start = time.perf_counter()
    data = desing_data(job)
    res = assemble_resolution(job.quiver, data.alpha, data.beta, jobs=jobs)
    seconds = time.perf_counter() - start
    v = verdict(res, classify(job.quiver))
    codim, source = codimension(job, data)
    hilbert = hilbert_consistency(res, codim).to_dict()
    hilbert["codim_source"] = source
    checked, bad = bott_formula_mismatches(job, data.alpha, data.beta)
    golden = load_golden(name, job)
    ours = "\\oplus".join(coordinate_ring_factors(job.quiver, "tex"))
    header_match = _normalize_sym(golden.header) == _normalize_sym(ours)
    checks = {"thm33": res.checks["thm33"], "hilbert": hilbert, "bott_formula": {"checked": checked, "mismatches": bad}}
    return ExampleReport(name, res, v, diff_terms(golden, res), header_match, checks, seconds)


def run_corpus(jobs: int = 1) -> CorpusReport:
    return CorpusReport([run_example(name, jobs) for name in EXAMPLES])
