"""Command-line front end.

Subcommands wire the pipeline stages together:

    semclone extract ROOT            -> corpus.json + corpus_report.json
    semclone detect-comments ...     -> clone_sets_comments.json + lda_model.json
    semclone detect-code ...         -> clone_sets_code.json + patterns/ + graphdb.veg
    semclone hybrid ROOT             -> clone_sets_hybrid.json + reduction_report.json
    semclone eval ...                -> eval_report.json + a printed table

Exit codes: 0 success, 1 detection ran but found no clone sets in a
non-empty input, 2 usage or input error, 3 resource budget exceeded.
Every artifact embeds the resolved config hash and the master seed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from semclone.clonesets import read_member_sets, write_clone_sets
from semclone.config import RunConfig, config_hash, load_config
from semclone.corpus.builder import (
    build_corpus,
    build_report,
    load_corpus,
    write_corpus,
)
from semclone.corpus.scanner import scan_files
from semclone.errors import (
    ConfigError,
    InputError,
    MiniSyntaxError,
    ResourceBudgetError,
    SemcloneError,
)
from semclone.evaluate import (
    load_ground_truth,
    method1,
    method2,
    render_table,
    report_to_dict,
)
from semclone.hybrid import hybrid_pipeline
from semclone.mining.clonesets import patterns_to_clone_sets, write_pattern_files
from semclone.mining.walk import sample_maximal
from semclone.pdg.builder import build_pdg
from semclone.pdg.minilang import parse_program
from semclone.pdg.veg import GraphDatabase, load_veg, save_veg
from semclone.topicmodel.dictionary import build_dictionary, build_doc_term
from semclone.topicmodel.gibbs import dominant_topic, save_model, train_lda
from semclone.topicmodel.grouping import form_clone_sets

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config) if args.config else RunConfig()
    if args.seed is not None:
        config = config.with_seed(args.seed)
    return config


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_extract(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    out = _out_dir(args)
    scan = scan_files(args.root, config.corpus)
    if not scan.files:
        raise InputError(f"no source files found under {args.root}")
    corpus = build_corpus(scan.files, config.corpus)
    digest = config_hash(config)
    write_corpus(out / "corpus.json", corpus, seed=config.seed, config_hash=digest)
    _write_json(
        out / "corpus_report.json",
        {"seed": config.seed, "config_hash": digest, **build_report(corpus, scan.skipped)},
    )
    logger.info(
        "extracted %d documents (%d excluded empty, %d skipped)",
        len(corpus.documents),
        len(corpus.excluded_empty),
        len(scan.skipped),
    )
    return EXIT_OK


def cmd_detect_comments(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    out = _out_dir(args)
    corpus = load_corpus(args.corpus)
    if not corpus.documents:
        raise InputError("corpus has no documents")
    dictionary = build_dictionary(corpus)
    matrix = build_doc_term(corpus, dictionary)
    model = train_lda(
        matrix,
        num_topics=config.lda.num_topics,
        alpha=config.lda.alpha,
        beta=config.lda.beta,
        iterations=config.lda.iterations,
        passes=config.lda.passes,
        seed=config.seed,
    )
    assignments = {
        document.file_id: dominant_topic(model, index)
        for index, document in enumerate(corpus.documents)
    }
    clone_sets = form_clone_sets(assignments)
    digest = config_hash(config)
    write_clone_sets(
        out / "clone_sets_comments.json", clone_sets, seed=config.seed, config_hash=digest
    )
    save_model(model, out / "lda_model.json", dictionary.sha256)
    logger.info("comment channel found %d clone sets", len(clone_sets))
    return EXIT_OK if clone_sets else EXIT_EMPTY


def _load_database(args: argparse.Namespace) -> GraphDatabase | None:
    if args.veg:
        return load_veg(args.veg)
    root = Path(args.source_dir)
    if not root.is_dir():
        raise InputError(f"source directory not found: {root}")
    graphs = []
    for path in sorted(root.rglob("*.mini"), key=lambda p: p.relative_to(root).as_posix()):
        file_id = path.relative_to(root).as_posix()
        graphs.append(build_pdg(parse_program(path.read_text(encoding="utf-8")), file_id))
    if not graphs:
        return None
    return GraphDatabase.from_graphs(graphs)


def cmd_detect_code(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    out = _out_dir(args)
    digest = config_hash(config)
    database = _load_database(args)
    if database is None or not database.vertices:
        # Vacuously empty input is a success, not a failed detection.
        write_clone_sets(out / "clone_sets_code.json", [], seed=config.seed, config_hash=digest)
        logger.info("graph database is empty; nothing to mine")
        return EXIT_OK
    if not args.veg:
        save_veg(database, out / "graphdb.veg")
    patterns = sample_maximal(database, config.mining, config.seed)
    clone_sets = patterns_to_clone_sets(patterns, database)
    write_clone_sets(
        out / "clone_sets_code.json", clone_sets, seed=config.seed, config_hash=digest
    )
    write_pattern_files(
        patterns, database, out / "patterns", seed=config.seed, config_hash=digest
    )
    logger.info(
        "code channel sampled %d distinct patterns, %d clone sets",
        len(patterns),
        len(clone_sets),
    )
    return EXIT_OK if clone_sets else EXIT_EMPTY


def cmd_hybrid(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    out = _out_dir(args)
    digest = config_hash(config)
    result = hybrid_pipeline(args.root, config)
    write_clone_sets(
        out / "clone_sets_hybrid.json", result.clone_sets, seed=config.seed, config_hash=digest
    )
    write_clone_sets(
        out / "clone_sets_comments.json", result.lda_sets, seed=config.seed, config_hash=digest
    )
    _write_json(
        out / "reduction_report.json",
        {"seed": config.seed, "config_hash": digest, **result.report},
    )
    if result.database is not None:
        write_pattern_files(
            result.patterns,
            result.database,
            out / "patterns",
            seed=config.seed,
            config_hash=digest,
        )
    logger.info(
        "hybrid pipeline: %d stage-1 sets, %d final sets, %d/%d files retained",
        len(result.lda_sets),
        len(result.clone_sets),
        result.report["files_retained"],
        result.report["files_total"],
    )
    return EXIT_OK if result.clone_sets else EXIT_EMPTY


def cmd_eval(args: argparse.Namespace) -> int:
    reported = read_member_sets(args.reported)
    truth = load_ground_truth(args.truth)
    methods = ("m1", "m2") if args.method == "both" else (args.method,)
    reports = []
    for method in methods:
        scorer = method1 if method == "m1" else method2
        reports.append((f"Method {method[1]}", scorer(reported, truth.clone_sets)))
    table = render_table(reports)
    print(table)
    if args.out:
        out = _out_dir(args)
        _write_json(
            out / "eval_report.json",
            {"reports": [report_to_dict(report) for _, report in reports]},
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semclone",
        description="Detect file-level semantic clone sets from comments and code structure.",
    )
    parser.add_argument("--log-level", default="warning", help="logging level (default: warning)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="TOML or JSON run configuration")
        p.add_argument("--seed", type=int, default=None, help="master seed override")
        p.add_argument("--out", default=".", help="output directory (default: cwd)")

    p_extract = sub.add_parser("extract", help="scan a tree and build the comment corpus")
    p_extract.add_argument("root", help="source tree to scan")
    common(p_extract)
    p_extract.set_defaults(func=cmd_extract)

    p_comments = sub.add_parser("detect-comments", help="comment channel over a corpus")
    p_comments.add_argument("--corpus", required=True, help="corpus.json from 'extract'")
    common(p_comments)
    p_comments.set_defaults(func=cmd_detect_comments)

    p_code = sub.add_parser("detect-code", help="code channel over sources or a .veg database")
    group = p_code.add_mutually_exclusive_group(required=True)
    group.add_argument("--source-dir", help="directory of .mini sources")
    group.add_argument("--veg", help="prebuilt graph database (.veg)")
    common(p_code)
    p_code.set_defaults(func=cmd_detect_code)

    p_hybrid = sub.add_parser("hybrid", help="comment channel, then mining on the reduced set")
    p_hybrid.add_argument("root", help="source tree to scan")
    common(p_hybrid)
    p_hybrid.set_defaults(func=cmd_hybrid)

    p_eval = sub.add_parser("eval", help="score clone sets against ground truth")
    p_eval.add_argument("--reported", required=True, help="clone-set JSON to score")
    p_eval.add_argument("--truth", required=True, help="ground-truth JSON")
    p_eval.add_argument(
        "--method", choices=("m1", "m2", "both"), default="both", help="scoring protocol"
    )
    p_eval.add_argument("--out", default=None, help="optional output directory")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except ResourceBudgetError as exc:
        logger.error("%s", exc)
        return EXIT_BUDGET
    except (ConfigError, InputError, MiniSyntaxError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT
    except SemcloneError as exc:  # internal invariants and the like
        logger.error("internal error: %s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
