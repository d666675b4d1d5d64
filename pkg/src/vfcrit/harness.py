"""Corpus ingestion, criterion-vs-oracle evaluation and report rendering."""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from .errors import CorpusError, InputError, NotWeierstrass
from .parser import VariableContext, parse_poly
from .puiseux import OracleStatus, oracle_verdict
from .tangency import criterion_sweep
from .weierstrass import WeierstrassPolynomial, to_weierstrass

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "id", "k", "orders", "claims_reducible", "witness_r", "oracle_branches",
    "oracle_status", "ground_truth", "theorem_agrees", "reciprocal_claim_holds",
)

NA = "N/A"


class Label(str, enum.Enum):
    REDUCIBLE = "REDUCIBLE"
    IRREDUCIBLE = "IRREDUCIBLE"
    UNLABELED = "UNLABELED"


class GroundTruth(str, enum.Enum):
    REDUCIBLE = "REDUCIBLE"
    IRREDUCIBLE = "IRREDUCIBLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CurveRecord:
    id: str
    variables: tuple
    expr: str
    label: Label
    notes: str
    wpoly: WeierstrassPolynomial
    multiplicity_condition: bool


@dataclass(frozen=True)
class EvaluationRow:
    id: str
    k: int
    per_r: Dict[int, object] = field(default_factory=dict)
    claims_reducible: Optional[bool] = None
    witness_r: Optional[int] = None
    oracle_branches: Optional[int] = None
    oracle_status: Optional[OracleStatus] = None
    ground_truth: GroundTruth = GroundTruth.UNKNOWN
    theorem_agrees: Optional[bool] = None
    reciprocal_claim_holds: Optional[bool] = None
    multiplicity_condition: bool = True
    error: Optional[str] = None


def default_corpus_path() -> Path:
    return Path(str(resources.files("vfcrit") / "data" / "default_corpus.json"))


def make_record(id: str, variables: Sequence[str], expr: str, label="UNLABELED", notes="") -> CurveRecord:
    """Parse and validate one curve; errors name the curve id."""
    if label not in Label.__members__:
        raise CorpusError(f"curve {id!r}: unknown label {label!r}")
    lab = Label(label)
    try:
        ctx = VariableContext(variables)
        p = parse_poly(expr, ctx)
    except ValueError as exc:
        raise CorpusError(f"curve {id!r}: {exc}") from exc
    try:
        wp = to_weierstrass(p)
    except NotWeierstrass as exc:
        raise type(exc)(f"curve {id!r}: {exc}") from exc
    return CurveRecord(id, ctx.names, expr, lab, notes, wp, wp.satisfies_multiplicity())


def load_corpus(path: Union[str, Path, None] = None) -> List[CurveRecord]:
    """Read ``{"curves": [{"id", "variables", "expr", "label", "notes"}]}``.

    Any invalid record aborts the load with an error naming its id.
    """
    path = Path(path) if path is not None else default_corpus_path()
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{path}: malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("curves"), list):
        raise CorpusError(f"{path}: expected an object with a 'curves' list")
    records = []
    seen = set()
    for n, entry in enumerate(doc["curves"]):
        if not isinstance(entry, dict) or not {"id", "variables", "expr"} <= entry.keys():
            raise CorpusError(f"{path}: curve #{n} needs 'id', 'variables' and 'expr'")
        cid = entry["id"]
        if cid in seen:
            raise CorpusError(f"duplicate curve id {cid!r}")
        seen.add(cid)
        names = entry["variables"]
        if isinstance(names, str):
            names = names.split(",")
        records.append(make_record(cid, names, entry["expr"],
                                   entry.get("label", "UNLABELED"), entry.get("notes", "")))
    if not records:
        log.warning("corpus %s contains no curves", path)
    return records


def evaluate_record(rec: CurveRecord) -> EvaluationRow:
    """Evaluate one curve; hypothesis failures are recorded in the row."""
    f = rec.wpoly
    errors = []
    per_r: Dict[int, object] = {}
    claims = witness = None
    try:
        verdict = criterion_sweep(f)
        per_r, claims, witness = verdict.per_r, verdict.claims_reducible, verdict.witness_r
    except InputError as exc:
        errors.append(f"criterion: {type(exc).__name__}: {exc}")

    branches = status = None
    truth = GroundTruth.UNKNOWN
    if f.nvars == 2:
        try:
            ov = oracle_verdict(f)
            branches, status = ov.branches, ov.status
            if ov.status is OracleStatus.EXACT:
                truth = GroundTruth.REDUCIBLE if ov.reducible else GroundTruth.IRREDUCIBLE
        except InputError as exc:
            errors.append(f"oracle: {type(exc).__name__}: {exc}")

    if truth is GroundTruth.UNKNOWN:
        if rec.label is not Label.UNLABELED:
            truth = GroundTruth(rec.label.value)
    elif rec.label is not Label.UNLABELED and rec.label.value != truth.value:
        raise CorpusError(
            f"curve {rec.id!r}: label {rec.label.value} contradicts exact oracle ({branches} branches)")

    agrees = reciprocal = None
    if claims is not None and truth is not GroundTruth.UNKNOWN:
        agrees = claims == (truth is GroundTruth.REDUCIBLE)
    if claims is not None and truth is GroundTruth.IRREDUCIBLE:
        reciprocal = all(o == r - 1 for r, o in per_r.items())

    return EvaluationRow(
        id=rec.id, k=f.k, per_r=dict(per_r), claims_reducible=claims, witness_r=witness,
        oracle_branches=branches, oracle_status=status, ground_truth=truth,
        theorem_agrees=agrees, reciprocal_claim_holds=reciprocal,
        multiplicity_condition=rec.multiplicity_condition,
        error="; ".join(errors) or None,
    )


def evaluate(records: Sequence[CurveRecord], jobs: int = 1) -> List[EvaluationRow]:
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(evaluate_record, records))
    else:
        rows = [evaluate_record(r) for r in records]
    return sorted(rows, key=lambda row: row.id)


def _fmt(v) -> str:
    if v is None:
        return NA
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, enum.Enum):
        return v.value
    return str(v)


def format_orders(per_r: Dict[int, object]) -> str:
    return ";".join(f"{r}={o}" for r, o in sorted(per_r.items()))


def _cells(row: EvaluationRow) -> List[str]:
    return [
        row.id, str(row.k), format_orders(row.per_r), _fmt(row.claims_reducible),
        _fmt(row.witness_r),
        "UNKNOWN" if row.oracle_status is OracleStatus.INCONCLUSIVE else _fmt(row.oracle_branches),
        _fmt(row.oracle_status), _fmt(row.ground_truth), _fmt(row.theorem_agrees),
        _fmt(row.reciprocal_claim_holds),
    ]


def emit_report(rows: Sequence[EvaluationRow], format: str = "csv") -> str:
    fmt = format.lower()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in rows:
            w.writerow(_cells(row))
        return buf.getvalue()
    if fmt in ("md", "markdown"):
        lines = ["| " + " | ".join(CSV_COLUMNS) + " |",
                 "|" + "|".join("---" for _ in CSV_COLUMNS) + "|"]
        for row in rows:
            lines.append("| " + " | ".join(c or " " for c in _cells(row)) + " |")
        judged = [r for r in rows if r.theorem_agrees is not None]
        agree = sum(1 for r in judged if r.theorem_agrees)
        lines.append("")
        lines.append(f"{agree}/{len(judged)} curves agree with the Theorem")
        notes = [f"- {r.id}: {r.error}" for r in rows if r.error]
        notes += [f"- {r.id}: multiplicity of f is below k (ord F_i < k - i for some i)"
                  for r in rows if not r.multiplicity_condition]
        if notes:
            lines.append("")
            lines.extend(notes)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}")
