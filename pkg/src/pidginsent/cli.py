"""Command-line interface.

Subcommands wire the lexicon toolchain, the scoring engine and the corpus
evaluator into one pipeline: derive Pidgin valences from their English
meanings, merge them over a base lexicon, score text or whole corpora,
and compare labels before/after augmentation.

Exit codes: 0 success, 2 usage error, 3 input parse failure,
4 unresolved lexicon references, 5 merge/sign policy violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import fields, replace
from pathlib import Path

from . import evaluation, lexicon as lx
from .engine import DEFAULT_CONFIG, EngineConfig, polarity_scores
from .evaluation import (
    CorpusError,
    classify,
    compare_lexicons,
    evaluate,
    export_report,
    load_corpus,
    summarize,
)
from .lexicon import LexiconError, MergePolicy, parse_lexicon_file, serialize_lexicon_file

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNRESOLVED = 4
EXIT_POLICY = 5


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_lexicon(path: str):
    try:
        return parse_lexicon_file(path)
    except (OSError, LexiconError) as exc:
        raise CliFailure(EXIT_PARSE, f"cannot load lexicon {path}: {exc}") from exc


def _load_corpus(path: str, fmt: str | None):
    try:
        return load_corpus(path, fmt)
    except (OSError, CorpusError) as exc:
        raise CliFailure(EXIT_PARSE, f"cannot load corpus {path}: {exc}") from exc


def _load_config(path: str | None) -> EngineConfig:
    """Read ``key = value`` overrides for the engine constants."""
    if path is None:
        return DEFAULT_CONFIG
    known = {f.name: f.type for f in fields(EngineConfig)}
    overrides = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliFailure(EXIT_PARSE, f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliFailure(EXIT_PARSE, f"{path}:{lineno}: expected key = value")
        key, _, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in known:
            raise CliFailure(EXIT_PARSE, f"{path}:{lineno}: unknown config key {key!r}")
        try:
            if key == "normalize_elongation":
                overrides[key] = raw.lower() in ("1", "true", "yes", "on")
            elif key == "max_ngram":
                overrides[key] = int(raw)
            elif key == "booster_distance_decay":
                overrides[key] = tuple(float(x) for x in raw.split(","))
            else:
                overrides[key] = float(raw)
        except ValueError:
            raise CliFailure(EXIT_PARSE, f"{path}:{lineno}: bad value {raw!r}") from None
    try:
        return replace(DEFAULT_CONFIG, **overrides)
    except ValueError as exc:
        raise CliFailure(EXIT_PARSE, f"{path}: {exc}") from exc


def _parse_thresholds(raw: str | None):
    if raw is None:
        return evaluation.POS_THRESHOLD, evaluation.NEG_THRESHOLD
    try:
        pos_s, neg_s = raw.split(",")
        pos, neg = float(pos_s), float(neg_s)
    except ValueError:
        raise CliFailure(EXIT_USAGE, f"bad --thresholds {raw!r}; expected POS,NEG") from None
    if neg >= pos:
        raise CliFailure(EXIT_USAGE, "--thresholds: negative cutoff must be below positive")
    return pos, neg


def _atomic_write(path: str, write_fn):
    """Run a writer; remove the partial file if it fails."""
    try:
        write_fn(path)
    except BaseException:
        Path(path).unlink(missing_ok=True)
        raise


def _cmd_score(args) -> int:
    lexicon = _load_lexicon(args.lexicon)
    cfg = _load_config(args.config)
    scores = polarity_scores(args.text, lexicon, cfg)
    print(json.dumps(scores.as_dict()))
    return 0


def _batch_rows(corpus, lexicon, cfg, pos_t, neg_t):
    for doc in corpus:
        s = polarity_scores(doc.text, lexicon, cfg)
        yield {
            "id": doc.id,
            "text": doc.text,
            "negative": f"{s.negative:.4f}",
            "neutral": f"{s.neutral:.4f}",
            "positive": f"{s.positive:.4f}",
            "compound": f"{s.compound:.4f}",
            "label": classify(s.compound, pos_t, neg_t).value,
        }


def _cmd_batch(args) -> int:
    corpus = _load_corpus(args.corpus, args.corpus_format)
    lexicon = _load_lexicon(args.lexicon)
    cfg = _load_config(args.config)
    pos_t, neg_t = _parse_thresholds(args.thresholds)
    rows = list(_batch_rows(corpus, lexicon, cfg, pos_t, neg_t))
    field_names = ["id", "text", "negative", "neutral", "positive", "compound", "label"]

    def write(path):
        if args.format == "jsonl":
            out = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows)
        else:
            buf = io.StringIO()
            writer = csv.DictWriter(
                buf,
                fieldnames=field_names,
                delimiter="\t" if args.format == "tsv" else ",",
                lineterminator="\n",
            )
            writer.writeheader()
            writer.writerows(rows)
            out = buf.getvalue()
        Path(path).write_text(out, encoding="utf-8")

    _atomic_write(args.out, write)
    return 0


def _cmd_lexicon_derive(args) -> int:
    source = _load_lexicon(args.source_lexicon)
    try:
        mapping = lx.parse_mapping_file(args.mapping)
    except (OSError, LexiconError) as exc:
        raise CliFailure(EXIT_PARSE, f"cannot load mapping {args.mapping}: {exc}") from exc
    result = lx.derive_from_mapping(mapping, source)
    if result.unresolved:
        missing = ", ".join(f"{eng} (for {pidgin})" for pidgin, eng in result.unresolved)
        raise CliFailure(EXIT_UNRESOLVED, f"unresolved English tokens: {missing}")
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args.strict_sign and any("disagree in sign" in w for w in result.warnings):
        raise CliFailure(EXIT_POLICY, "mixed-sign source valences under --strict-sign")
    _atomic_write(args.out, lambda p: serialize_lexicon_file(result.to_lexicon(), p))
    return 0


def _cmd_lexicon_merge(args) -> int:
    base = _load_lexicon(args.base)
    augmentation = _load_lexicon(args.augmentation)
    try:
        merged = lx.merge(base, augmentation, MergePolicy(args.policy))
    except LexiconError as exc:
        print(f"collision: {exc}", file=sys.stderr)
        raise CliFailure(EXIT_POLICY, str(exc)) from exc
    for token in merged.collisions:
        print(f"collision: {token} ({args.policy})", file=sys.stderr)
    _atomic_write(args.out, lambda p: serialize_lexicon_file(merged, p))
    return 0


def _cmd_eval(args) -> int:
    corpus = _load_corpus(args.corpus, args.corpus_format)
    lexicon = _load_lexicon(args.lexicon)
    cfg = _load_config(args.config)
    pos_t, neg_t = _parse_thresholds(args.thresholds)
    rows = compare_lexicons(corpus, lexicon, lexicon, cfg, pos_t, neg_t)
    report = evaluate(rows)
    payload = {
        "corpus_size": report.corpus_size,
        "gold_count": report.gold_count,
        "accuracy": report.accuracy_after,
        "confusion": report.confusion_after,
        "class_metrics": report.class_metrics_after,
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        _atomic_write(args.out, lambda p: Path(p).write_text(text, encoding="utf-8"))
    else:
        sys.stdout.write(text)
    return 0


def _cmd_compare(args) -> int:
    corpus = _load_corpus(args.corpus, args.corpus_format)
    base = _load_lexicon(args.base)
    augmented = _load_lexicon(args.augmented)
    cfg = _load_config(args.config)
    pos_t, neg_t = _parse_thresholds(args.thresholds)
    rows = compare_lexicons(corpus, base, augmented, cfg, pos_t, neg_t)
    report = evaluate(rows)
    _atomic_write(args.out, lambda p: export_report(report, rows, p, args.format))
    print(summarize(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pidginsent",
        description="Lexicon-and-rule sentiment scoring for code-mixed Pidgin/English text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, corpus=False):
        p.add_argument("--config", help="engine config overrides (key = value lines)")
        if corpus:
            p.add_argument("--corpus", required=True, help="corpus file (csv/tsv/jsonl)")
            p.add_argument(
                "--corpus-format",
                choices=["csv", "tsv", "jsonl"],
                help="corpus format (default: by file extension)",
            )
            p.add_argument(
                "--thresholds",
                help="label cutoffs as POS,NEG (default 0.05,-0.05)",
            )

    p = sub.add_parser("score", help="score one text and print JSON scores")
    p.add_argument("--text", required=True, help="text to score")
    p.add_argument("--lexicon", required=True, help="lexicon file")
    add_common(p)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("batch", help="score a corpus into a delimited file")
    p.add_argument("--lexicon", required=True, help="lexicon file")
    p.add_argument("--out", required=True, help="output file")
    p.add_argument("--format", choices=["csv", "tsv", "jsonl"], default="csv")
    add_common(p, corpus=True)
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser(
        "lexicon-derive",
        help="derive Pidgin valences by averaging English source valences",
    )
    p.add_argument("--mapping", required=True, help="pidgin<TAB>english1,english2,... file")
    p.add_argument("--source-lexicon", required=True, help="lexicon supplying English valences")
    p.add_argument("--out", required=True, help="derived lexicon output file")
    p.add_argument(
        "--strict-sign",
        action="store_true",
        help="abort when a token's source valences disagree in sign",
    )
    p.set_defaults(func=_cmd_lexicon_derive)

    p = sub.add_parser("lexicon-merge", help="merge an augmentation lexicon over a base")
    p.add_argument("--base", required=True, help="base lexicon file")
    p.add_argument("--augmentation", required=True, help="augmentation lexicon file")
    p.add_argument("--policy", choices=list(MergePolicy.MODES), default="override")
    p.add_argument("--out", required=True, help="merged lexicon output file")
    p.set_defaults(func=_cmd_lexicon_merge)

    p = sub.add_parser("eval", help="evaluate one lexicon's labels against gold labels")
    p.add_argument("--lexicon", required=True, help="lexicon file")
    p.add_argument("--out", help="report output file (default: standard output)")
    add_common(p, corpus=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser(
        "compare", help="score a corpus with base and augmented lexicons and report"
    )
    p.add_argument("--base", required=True, help="base lexicon file")
    p.add_argument("--augmented", required=True, help="augmented lexicon file")
    p.add_argument("--out", required=True, help="rows + report output file")
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    add_common(p, corpus=True)
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
