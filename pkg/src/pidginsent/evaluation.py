"""Corpus loading, label classification and before/after lexicon comparison.

Builds the augmentation study's comparison artifact: every document is
scored against a base and an augmented lexicon, compounds are mapped to
labels by fixed thresholds, and disagreements with expert gold labels are
aggregated (accuracy, confusion matrices, per-class precision/recall/F1,
label-flip transitions).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .engine import DEFAULT_CONFIG, EngineConfig, polarity_scores
from .lexicon import Lexicon

POS_THRESHOLD = 0.05
NEG_THRESHOLD = -0.05


class CorpusError(ValueError):
    """Malformed corpus file or record."""


class Label(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, raw: str) -> "Label":
        try:
            return cls(raw.strip().lower())
        except ValueError:
            raise CorpusError(f"unknown sentiment label {raw!r}") from None

    def __str__(self):
        return self.value


LABELS = (Label.POSITIVE, Label.NEGATIVE, Label.NEUTRAL)


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    text: str
    gold: Label | None = None


@dataclass(frozen=True)
class ComparisonRow:
    id: str
    text: str
    compound_before: float
    compound_after: float
    label_before: Label
    label_after: Label
    gold: Label | None = None


@dataclass
class EvaluationReport:
    corpus_size: int
    gold_count: int
    accuracy_before: float | None
    accuracy_after: float | None
    confusion_before: dict
    confusion_after: dict
    flips: dict
    flip_count: int
    class_metrics_before: dict
    class_metrics_after: dict


def classify(compound: float, pos_threshold: float = POS_THRESHOLD, neg_threshold: float = NEG_THRESHOLD) -> Label:
    """Map a compound score to a label; thresholds are inclusive."""
    if neg_threshold >= pos_threshold:
        raise ValueError("neg_threshold must be below pos_threshold")
    if compound >= pos_threshold:
        return Label.POSITIVE
    if compound <= neg_threshold:
        return Label.NEGATIVE
    return Label.NEUTRAL


def _documents_from_records(records, fmt, path) -> list[LabeledDocument]:
    docs = []
    seen_ids = set()
    for rownum, rec in records:
        text = (rec.get("text") or "").strip()
        if not text:
            raise CorpusError(f"{path}: row {rownum}: empty text")
        raw_label = rec.get("label")
        if raw_label in (None, ""):
            gold = None
        else:
            try:
                gold = Label.parse(raw_label)
            except CorpusError as exc:
                raise CorpusError(f"{path}: row {rownum}: {exc}") from None
        doc_id = (rec.get("id") or "").strip() or f"row-{rownum}"
        if doc_id in seen_ids:
            raise CorpusError(f"{path}: row {rownum}: duplicate id {doc_id!r}")
        seen_ids.add(doc_id)
        docs.append(LabeledDocument(doc_id, text, gold))
    return docs


def load_corpus(path, fmt: str | None = None) -> list[LabeledDocument]:
    """Load a labeled corpus from CSV, TSV or JSONL.

    Delimited formats need a header with at least a ``text`` column
    (``id`` and ``label`` optional); JSONL uses the same keys. Rows
    without an explicit id get ``row-N`` (1-based data row).
    """
    path = Path(path)
    if fmt is None:
        fmt = {".csv": "csv", ".tsv": "tsv", ".jsonl": "jsonl"}.get(path.suffix.lower(), "csv")
    if fmt not in ("csv", "tsv", "jsonl"):
        raise ValueError(f"unknown corpus format {fmt!r}")
    text = path.read_text(encoding="utf-8")
    records = []
    if fmt == "jsonl":
        for rownum, line in enumerate((l for l in text.splitlines() if l.strip()), 1):
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: row {rownum}: bad JSON ({exc})") from None
            if not isinstance(rec, dict):
                raise CorpusError(f"{path}: row {rownum}: expected a JSON object")
            records.append((rownum, rec))
    else:
        delimiter = "\t" if fmt == "tsv" else ","
        reader = csv.DictReader(io.StringIO(text), delimiter=delimiter)
        if reader.fieldnames is None or "text" not in reader.fieldnames:
            raise CorpusError(f"{path}: header must name a 'text' column")
        for rownum, rec in enumerate(reader, 1):
            records.append((rownum, rec))
    return _documents_from_records(records, fmt, path)


def compare_lexicons(
    corpus,
    base: Lexicon,
    augmented: Lexicon,
    cfg: EngineConfig = DEFAULT_CONFIG,
    pos_threshold: float = POS_THRESHOLD,
    neg_threshold: float = NEG_THRESHOLD,
) -> list[ComparisonRow]:
    """Score every document against both lexicons, in corpus order."""
    rows = []
    for doc in corpus:
        before = polarity_scores(doc.text, base, cfg).compound
        after = polarity_scores(doc.text, augmented, cfg).compound
        rows.append(
            ComparisonRow(
                id=doc.id,
                text=doc.text,
                compound_before=before,
                compound_after=after,
                label_before=classify(before, pos_threshold, neg_threshold),
                label_after=classify(after, pos_threshold, neg_threshold),
                gold=doc.gold,
            )
        )
    return rows


def _empty_confusion():
    return {g.value: {p.value: 0 for p in LABELS} for g in LABELS}


def _class_metrics(confusion) -> dict:
    """Per-class precision/recall/F1 plus macro averages."""
    metrics = {}
    for cls in LABELS:
        tp = confusion[cls.value][cls.value]
        pred = sum(confusion[g.value][cls.value] for g in LABELS)
        gold = sum(confusion[cls.value][p.value] for p in LABELS)
        precision = tp / pred if pred else 0.0
        recall = tp / gold if gold else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        metrics[cls.value] = {"precision": precision, "recall": recall, "f1": f1}
    for name in ("precision", "recall", "f1"):
        metrics.setdefault("macro", {})[name] = sum(
            metrics[c.value][name] for c in LABELS
        ) / len(LABELS)
    return metrics


def evaluate(rows) -> EvaluationReport:
    """Aggregate comparison rows into accuracies, confusions and flips."""
    gold_rows = [r for r in rows if r.gold is not None]
    confusion_before = _empty_confusion()
    confusion_after = _empty_confusion()
    for r in gold_rows:
        confusion_before[r.gold.value][r.label_before.value] += 1
        confusion_after[r.gold.value][r.label_after.value] += 1
    flips = {}
    flip_count = 0
    for r in rows:
        if r.label_before != r.label_after:
            key = f"{r.label_before.value}->{r.label_after.value}"
            flips[key] = flips.get(key, 0) + 1
            flip_count += 1
    accuracy_before = accuracy_after = None
    if gold_rows:
        accuracy_before = sum(1 for r in gold_rows if r.label_before == r.gold) / len(gold_rows)
        accuracy_after = sum(1 for r in gold_rows if r.label_after == r.gold) / len(gold_rows)
    return EvaluationReport(
        corpus_size=len(rows),
        gold_count=len(gold_rows),
        accuracy_before=accuracy_before,
        accuracy_after=accuracy_after,
        confusion_before=confusion_before,
        confusion_after=confusion_after,
        flips=dict(sorted(flips.items())),
        flip_count=flip_count,
        class_metrics_before=_class_metrics(confusion_before),
        class_metrics_after=_class_metrics(confusion_after),
    )


def _fmt4(x: float) -> str:
    return f"{x:.4f}"


def report_as_dict(report: EvaluationReport) -> dict:
    return {
        "corpus_size": report.corpus_size,
        "gold_count": report.gold_count,
        "accuracy_before": report.accuracy_before,
        "accuracy_after": report.accuracy_after,
        "confusion_before": report.confusion_before,
        "confusion_after": report.confusion_after,
        "flips": report.flips,
        "flip_count": report.flip_count,
        "class_metrics_before": report.class_metrics_before,
        "class_metrics_after": report.class_metrics_after,
    }


def rows_as_dicts(rows) -> list[dict]:
    return [
        {
            "id": r.id,
            "text": r.text,
            "compound_before": _fmt4(r.compound_before),
            "compound_after": _fmt4(r.compound_after),
            "label_before": r.label_before.value,
            "label_after": r.label_after.value,
            "gold": r.gold.value if r.gold else "",
        }
        for r in rows
    ]


def export_report(report: EvaluationReport, rows, path, fmt: str = "json") -> None:
    """Write rows + aggregate report; byte-deterministic for fixed inputs.

    ``json`` nests rows and report in one object, ``csv`` writes the rows
    only, ``markdown`` renders a human-diffable table with the comparison
    columns in text / before score / after score / before label / after
    label / gold order.
    """
    path = Path(path)
    if fmt == "json":
        payload = {"rows": rows_as_dicts(rows), "report": report_as_dict(report)}
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf,
            fieldnames=[
                "id", "text", "compound_before", "compound_after",
                "label_before", "label_after", "gold",
            ],
            lineterminator="\n",
        )
        writer.writeheader()
        writer.writerows(rows_as_dicts(rows))
        path.write_text(buf.getvalue(), encoding="utf-8")
    elif fmt == "markdown":
        lines = [
            "| Text | Compound before | Compound after | Label before | Label after | Expert label |",
            "| --- | --- | --- | --- | --- | --- |",
        ]
        for r in rows:
            text = r.text.replace("|", "\\|")
            gold = r.gold.value if r.gold else ""
            lines.append(
                f"| {text} | {_fmt4(r.compound_before)} | {_fmt4(r.compound_after)} "
                f"| {r.label_before.value} | {r.label_after.value} | {gold} |"
            )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        raise ValueError(f"unknown export format {fmt!r}")


def summarize(report: EvaluationReport) -> str:
    """Short human summary for CLI standard output."""
    lines = [f"documents: {report.corpus_size} ({report.gold_count} gold-labeled)"]
    if report.accuracy_before is not None:
        lines.append(f"accuracy before: {report.accuracy_before:.4f}")
        lines.append(f"accuracy after:  {report.accuracy_after:.4f}")
    lines.append(f"label flips: {report.flip_count}")
    for key, count in report.flips.items():
        lines.append(f"  {key}: {count}")
    return "\n".join(lines)
