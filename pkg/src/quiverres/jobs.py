"""Job files: a quiver plus either a decomposition or an explicit (alpha, beta) pair."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

from .errors import JobError, QuiverError
from .quiver import Arrow, Quiver, classify, positive_roots
from .reps import Decomposition, DirectedPartition, directed_partition_1step, orbit_codim
from .resolution import bundle_spec, incidence_codim

_VERTEX = {"type": ["string", "integer"]}
_DIMVEC = {
    "oneOf": [
        {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        {"type": "array", "items": {"type": "integer", "minimum": 0}},
    ]
}

QUIVER_SCHEMA = {
    "type": "object",
    "required": ["vertices", "arrows"],
    "properties": {
        "vertices": {"type": "array", "items": _VERTEX, "minItems": 1},
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "from", "to"],
                "properties": {"id": {"type": "string"}, "from": _VERTEX, "to": _VERTEX},
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

JOB_SCHEMA = {
    "type": "object",
    "required": ["quiver"],
    "properties": {
        "name": {"type": "string"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "quiver": QUIVER_SCHEMA,
        "decomposition": {
            "type": "object",
            "required": ["summands"],
            "properties": {
                "summands": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["root", "mult"],
                        "properties": {"root": _DIMVEC, "mult": {"type": "integer", "minimum": 1}},
                        "additionalProperties": False,
                    },
                }
            },
            "additionalProperties": False,
        },
        "alpha": _DIMVEC,
        "beta": _DIMVEC,
        "options": {
            "type": "object",
            "properties": {
                "checks": {"type": "boolean"},
                "format": {"enum": ["text", "json", "tex"]},
                "jobs": {"type": "integer", "minimum": 1},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


@dataclass
class Job:
    quiver: Quiver
    decomposition: Decomposition | None = None
    alpha: tuple | None = None
    beta: tuple | None = None
    options: dict = field(default_factory=dict)
    name: str | None = None
    notes: list = field(default_factory=list)

    @property
    def mode(self) -> str | None:
        if self.decomposition is not None:
            return "decomposition"
        if self.beta is not None:
            return "schofield"
        return None


@dataclass
class DesingData:
    alpha: tuple
    beta: tuple
    provenance: str  # "decomposition" or "schofield"
    partition: DirectedPartition | None = None


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def parse_quiver(data: dict, path: str = "") -> Quiver:
    try:
        jsonschema.validate(data, QUIVER_SCHEMA)
    except jsonschema.ValidationError as e:
        raise JobError(e.message, path + _pointer(e.absolute_path)) from None
    try:
        return Quiver(tuple(data["vertices"]), tuple(Arrow(a["id"], a["from"], a["to"]) for a in data["arrows"]))
    except QuiverError as e:
        raise JobError(str(e), path) from None


def parse_job(text, require_mode: bool = True) -> Job:
    """Parse and validate a job; errors carry a JSON-pointer path."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as e:
        raise JobError(f"invalid JSON: {e}") from None
    if isinstance(data, dict) and "quiver" not in data and "vertices" in data:
        data = {"quiver": data}  # bare quiver file
    try:
        jsonschema.validate(data, JOB_SCHEMA)
    except jsonschema.ValidationError as e:
        best = jsonschema.exceptions.best_match([e])
        raise JobError(best.message, _pointer(best.absolute_path)) from None

    q = parse_quiver(data["quiver"], "/quiver")
    job = Job(q, options=dict(data.get("options", {})), name=data.get("name"), notes=list(data.get("notes", [])))

    def dimvec(value, path):
        try:
            return q.dim(value)
        except QuiverError as e:
            raise JobError(str(e), path) from None

    if "alpha" in data:
        job.alpha = dimvec(data["alpha"], "/alpha")
    if "beta" in data:
        job.beta = dimvec(data["beta"], "/beta")

    if "decomposition" in data:
        if job.beta is not None:
            raise JobError("give either a decomposition or an (alpha, beta) pair, not both", "/beta")
        try:
            roots = set(positive_roots(q))
        except QuiverError as e:
            raise JobError(f"decomposition mode needs a Dynkin quiver: {e}", "/quiver") from None
        pairs = []
        for k, s in enumerate(data["decomposition"]["summands"]):
            root = dimvec(s["root"], f"/decomposition/summands/{k}/root")
            if root not in roots:
                raise JobError(f"summand {k} has dimension {root}, which is not a positive root of {classify(q)}",
                               f"/decomposition/summands/{k}/root")
            pairs.append((root, s["mult"]))
        if not pairs:
            raise JobError("decomposition has no summands", "/decomposition/summands")
        job.decomposition = Decomposition.from_pairs(q, pairs)
        total = job.decomposition.dimension()
        if job.alpha is not None and job.alpha != total:
            raise JobError(f"summands add up to {total}, not the declared alpha {job.alpha}", "/alpha")
        job.alpha = total
    elif job.beta is not None:
        if job.alpha is None:
            raise JobError("schofield mode needs alpha", "/alpha")
        for x, (a, b) in enumerate(zip(job.alpha, job.beta)):
            if b > a:
                raise JobError(f"beta exceeds alpha at vertex {q.vertices[x]!r} ({b} > {a})", "/beta")
    elif require_mode:
        raise JobError("job needs a decomposition or an (alpha, beta) pair", "")
    return job


def desing_data(job: Job) -> DesingData:
    if job.decomposition is not None:
        part = directed_partition_1step(job.quiver, job.decomposition)
        if part is None:
            raise JobError("no 1-step directed partition exists for this decomposition", "/decomposition")
        return DesingData(job.alpha, part.beta, "decomposition", part)
    if job.beta is None:
        raise JobError("job has no input mode", "")
    return DesingData(job.alpha, job.beta, "schofield")


def codimension(job: Job, data: DesingData) -> tuple[int, str]:
    """Codimension of the orbit closure (decomposition mode) or of the incidence image."""
    if job.decomposition is not None:
        return orbit_codim(job.quiver, job.decomposition), "orbit"
    return incidence_codim(bundle_spec(job.quiver, data.alpha, data.beta)), "incidence"


def job_to_dict(job: Job) -> dict:
    q = job.quiver
    out: dict = {}
    if job.name is not None:
        out["name"] = job.name
    if job.notes:
        out["notes"] = list(job.notes)
    out["quiver"] = q.to_dict()
    if job.decomposition is not None:
        out["decomposition"] = {
            "summands": [{"root": q.as_mapping(r), "mult": m} for r, m in job.decomposition.multiplicities]
        }
    elif job.beta is not None:
        out["alpha"] = q.as_mapping(job.alpha)
        out["beta"] = q.as_mapping(job.beta)
    if job.options:
        out["options"] = dict(job.options)
    return out


def dump_job(job: Job) -> str:
    return json.dumps(job_to_dict(job), indent=2, ensure_ascii=False) + "\n"
