"""Text, JSON and TeX-like renderings of a computed complex."""

from __future__ import annotations

import json

from .quiver import Quiver
from .resolution import FreeResolution, ResolutionTerm

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

TWIST_CONVENTIONS = ("degree", "table")


def _shape(parts) -> str:
    if any(p >= 10 for p in parts):
        return ",".join(map(str, parts))
    return "".join(map(str, parts))


def factor(weight, vertex, fmt: str = "text") -> str | None:
    """Name of the GL(V_x)-module with dominant highest weight ``weight`` (None if trivial)."""
    w = tuple(weight)
    if not any(w):
        return None
    tex = fmt == "tex"
    wedge = (lambda k: f"\\wedge^{{{k}}}" if k >= 10 else f"\\wedge^{k}") if tex else \
        (lambda k: "∧" + str(k).translate(_SUPERSCRIPT))
    v = f"V_{{{vertex}}}" if tex and len(str(vertex)) > 1 else f"V_{vertex}"
    if min(w) >= 0:
        parts = [p for p in w if p]
        if set(parts) == {1}:
            return v if len(parts) == 1 else wedge(len(parts)) + v
        return f"S_{{{_shape(parts)}}}{v}"
    if max(w) <= 0:
        parts = [-p for p in reversed(w) if p]
        if set(parts) == {1}:
            return f"{v}^*" if len(parts) == 1 else f"{wedge(len(parts))}{v}^*"
        return f"S_{{{_shape(parts)}}}{v}^*"
    return f"S_{{({','.join(map(str, w))})}}{v}"


def twist_value(term: ResolutionTerm, twist: str) -> int:
    if twist == "table":
        return term.table_twist
    if twist == "degree":
        return term.twist
    raise ValueError(f"unknown twist convention {twist!r}")


def term_string(q: Quiver, term: ResolutionTerm, fmt: str = "text", twist: str = "degree") -> str:
    tex = fmt == "tex"
    otimes = "\\otimes " if tex else " ⊗ "
    if term.is_trivial:
        body = "A"
    else:
        parts = [f for f in (factor(w, v, fmt) for v, w in zip(q.vertices, term.weights)) if f]
        parts.append(f"A(-{twist_value(term, twist)})")
        body = otimes.join(parts)
    if term.mult > 1:
        body = f"{term.mult} × ({body})" if not tex else f"{term.mult}\\cdot({body})"
    return body


def coordinate_ring_factors(q: Quiver, fmt: str = "text") -> list[str]:
    """One Sym(V_ta (x) V_ha^*) per arrow, for the coordinate ring of Rep(Q, alpha)."""
    if fmt == "tex":
        return [f"Sym(V_{q.vertices[t]} \\otimes V_{q.vertices[h]}^*)" for t, h in map(q.ends, range(len(q.arrows)))]
    return [f"Sym(V_{q.vertices[t]} ⊗ V_{q.vertices[h]}^*)" for t, h in map(q.ends, range(len(q.arrows)))]


def to_dict(res: FreeResolution, verdict=None) -> dict:
    q = res.quiver
    return {
        "A": {"dim": res.rep_dim, "factors": coordinate_ring_factors(q)},
        "alpha": q.as_mapping(res.alpha),
        "beta": q.as_mapping(res.beta),
        "terms": [
            {
                "i": t.degree,
                "twist": t.twist,
                "exchanges": t.exchanges,
                "weights": {str(v): list(w) for v, w in zip(q.vertices, t.weights)},
                "mult": t.mult,
            }
            for t in res.terms
        ],
        "verdict": str(verdict) if verdict is not None else None,
        "checks": res.checks,
    }


def render(res: FreeResolution, fmt: str = "text", verdict=None, twist: str = "degree") -> str:
    if fmt == "json":
        return json.dumps(to_dict(res, verdict), indent=2, ensure_ascii=False) + "\n"
    q = res.quiver
    tex = fmt == "tex"
    if fmt not in ("text", "tex"):
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    plus = "\\oplus " if tex else " ⊕ "
    lines.append(f"A = {plus.join(coordinate_ring_factors(q, fmt))}   (dim {res.rep_dim})")
    lines.append(f"alpha = {res.alpha}, beta = {res.beta}")
    if twist == "table":
        lines.append("twists printed as A(-(t+N)), t = generator degree, N = Bott exchanges")
    for i in res.degrees():
        lines.append(f"F_{i}:")
        for term in res.component(i):
            lines.append("  " + term_string(q, term, fmt, twist))
    if verdict is not None:
        lines.append(f"verdict: {verdict}")
    return "\n".join(lines) + "\n"
