"""Command-line workflows: train, eval, order, baseline, synth, report.

Exit codes: 0 success, 1 usage error, 2 data/format error. Standard output
carries only the documented results; logs go to stderr.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, Optional, Sequence, Type

from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import (
    CorpusFormatException,
    FileFormatException,
    ModelFormatException,
    ScriptModelException,
    UsageException,
    ValidationException,
    exit_code_for,
)
from app.models.events import FULL, VERB_ONLY, Mode
from app.models.hyperparams import CliConfig, Hyperparams, SynthConfig
from app.services.evaluation.pair_eval import evaluate, evaluate_by_scenario
from app.services.evaluation.report import build_report, render_report, write_report_xlsx
from app.services.evaluation.verb_baseline import evaluate_bl, evaluate_bl_by_scenario, train_bl
from app.services.event_model import corpus_vocabulary, init_params, score_events
from app.services.training.learner import train
from app.utils.corpus_io import (
    parse_corpus,
    parse_event_list,
    parse_pairs,
    serialize_corpus,
    serialize_pairs,
)
from app.utils.embedding_loader import parse_embeddings
from app.utils.model_io import read_model, write_model
from app.utils.synthetic import generate_synthetic

logger = logging.getLogger(__name__)

MODE_CHOICES: Dict[str, Mode] = {"full": FULL, "verb": VERB_ONLY, "verb_only": VERB_ONLY}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns the exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageException(f"{self.prog}: {message}")


def _dims(text: str) -> tuple:
    try:
        dims = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--dims expects d,h,e integers, got {text!r}") from None
    if len(dims) != 3:
        raise argparse.ArgumentTypeError(f"--dims expects three values, got {text!r}")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="eescript", description="Event-embedding script ordering")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_ArgumentParser)

    p = sub.add_parser("train", help="Learn event embeddings and the ranker from an ESD corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True, help="Model file to write")
    p.add_argument("--embeddings", help="Pretrained word vectors (text)")
    p.add_argument("--mode", choices=sorted(MODE_CHOICES), default="full")
    p.add_argument("--gamma", type=float, default=settings.GAMMA)
    p.add_argument("--eta", type=float, default=settings.ETA)
    p.add_argument("--lambda", dest="lam", type=float, default=settings.LAMBDA)
    p.add_argument("--epochs", type=int, default=settings.EPOCHS)
    p.add_argument("--dims", type=_dims, default=settings.DIMS, help="d,h,e")
    p.add_argument("--seed", type=int, default=settings.SEED)
    p.add_argument("--freeze-embeddings", action="store_true")
    p.add_argument("--shuffle", action="store_true")

    p = sub.add_parser("eval", help="Precision/recall/F1 of a model on labeled pairs")
    p.add_argument("--model", required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--mode", choices=sorted(MODE_CHOICES), default="full")

    p = sub.add_parser("order", help="Print events sorted by descending score")
    p.add_argument("--model", required=True)
    p.add_argument("--events", required=True)
    p.add_argument("--mode", choices=sorted(MODE_CHOICES), default="full")

    p = sub.add_parser("baseline", help="Verb-frequency baseline on labeled pairs")
    p.add_argument("--corpus", required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--seed", type=int, default=settings.SEED)

    p = sub.add_parser("synth", help="Write a synthetic corpus and its test pairs")
    p.add_argument("--out-corpus", required=True)
    p.add_argument("--out-pairs", required=True)
    p.add_argument("--types", type=int, default=settings.SYNTH_TYPES)
    p.add_argument("--esds", type=int, default=settings.SYNTH_ESDS)
    p.add_argument("--dropout", type=float, default=settings.SYNTH_DROPOUT)
    p.add_argument("--variants", type=int, default=settings.SYNTH_VARIANTS)
    p.add_argument("--arg-determined", action="store_true")
    p.add_argument("--groups", type=int, default=settings.SYNTH_PREDICATE_GROUPS)
    p.add_argument("--scenario", default=settings.SYNTH_SCENARIO)
    p.add_argument("--seed", type=int, default=settings.SEED)

    p = sub.add_parser("report", help="Per-scenario P/R/F1 table for BL, EE_verb and EE")
    p.add_argument("--corpus", required=True, help="Training ESDs for the baseline")
    p.add_argument("--pairs", required=True)
    p.add_argument("--model", required=True, help="Full model")
    p.add_argument("--verb-model", help="Model trained with --mode verb")
    p.add_argument("--seed", type=int, default=settings.SEED)
    p.add_argument("--xlsx", help="Also write the table to an Excel file")
    return parser


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    if args.subcommand is None:
        raise UsageException("missing subcommand")
    path_keys = ("corpus", "out", "embeddings", "model", "verb_model", "pairs", "events", "out_corpus", "out_pairs", "xlsx")
    paths = {k: getattr(args, k) for k in path_keys if hasattr(args, k)}
    mode = MODE_CHOICES[getattr(args, "mode", "full")]
    try:
        hyper = None
        synth = None
        if args.subcommand == "train":
            hyper = Hyperparams(
                gamma=args.gamma,
                eta=args.eta,
                lam=args.lam,
                epochs=args.epochs,
                seed=args.seed,
                mode=mode,
                freeze_embeddings=args.freeze_embeddings,
                shuffle=args.shuffle,
                dims=args.dims,
            )
        elif args.subcommand == "synth":
            synth = SynthConfig(
                num_event_types=args.types,
                esds_per_scenario=args.esds,
                dropout=args.dropout,
                lexical_variants=args.variants,
                arg_determined=args.arg_determined,
                predicate_groups=args.groups,
                scenario=args.scenario,
                seed=args.seed,
            )
        return CliConfig(
            subcommand=args.subcommand,
            paths=paths,
            hyper=hyper,
            synth=synth,
            mode=mode,
            seed=getattr(args, "seed", settings.SEED),
        )
    except ValidationError as exc:
        raise ValidationException(f"invalid arguments: {exc.errors()[0]['loc']}: {exc.errors()[0]['msg']}") from exc


def _read(path: str, error: Type[FileFormatException] = CorpusFormatException) -> str:
    with open(path, "rb") as f:
        raw = f.read()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise error(f"invalid UTF-8 byte at offset {exc.start}", path, raw.count(b"\n", 0, exc.start) + 1) from None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _cmd_train(config: CliConfig) -> int:
    hyper = config.hyper
    corpus_path = config.paths["corpus"]
    corpus = parse_corpus(_read(corpus_path), source=corpus_path)
    pretrained = None
    if config.paths.get("embeddings"):
        pretrained = parse_embeddings(_read(config.paths["embeddings"]), source=config.paths["embeddings"])

    sequences = corpus.sequences()
    init = init_params(hyper.dims, hyper.seed, pretrained, corpus_vocabulary(sequences))
    params, history = train(sequences, hyper, init)
    _write(config.paths["out"], write_model(params))

    summary = history.get_summary()
    print(f"epochs={summary['epochs']} violations={summary['final_violations']} loss={summary['final_loss']}")
    return 0


def _cmd_eval(config: CliConfig) -> int:
    params = read_model(_read(config.paths["model"], ModelFormatException), source=config.paths["model"])
    pairs = parse_pairs(_read(config.paths["pairs"]), source=config.paths["pairs"])
    print(evaluate(pairs, params, config.mode).render())
    return 0


def _cmd_order(config: CliConfig) -> int:
    params = read_model(_read(config.paths["model"], ModelFormatException), source=config.paths["model"])
    entries = parse_event_list(_read(config.paths["events"]), source=config.paths["events"])
    scores = score_events([event for _, event in entries], params, config.mode)
    # highest first, ties keep input order; each line echoed as written
    for i in sorted(range(len(entries)), key=lambda i: -scores[i]):
        print(f"{scores[i]:.6f}\t{entries[i][0]}")
    return 0


def _cmd_baseline(config: CliConfig) -> int:
    corpus = parse_corpus(_read(config.paths["corpus"]), source=config.paths["corpus"])
    pairs = parse_pairs(_read(config.paths["pairs"]), source=config.paths["pairs"])
    bl = train_bl(corpus, seed=config.seed)
    print(evaluate_bl(pairs, bl).render())
    return 0


def _cmd_synth(config: CliConfig) -> int:
    corpus, pairs = generate_synthetic(config.synth)
    _write(config.paths["out_corpus"], serialize_corpus(corpus))
    _write(config.paths["out_pairs"], serialize_pairs(pairs))
    return 0


def _cmd_report(config: CliConfig) -> int:
    corpus = parse_corpus(_read(config.paths["corpus"]), source=config.paths["corpus"])
    pairs = parse_pairs(_read(config.paths["pairs"]), source=config.paths["pairs"])
    systems = {"BL": evaluate_bl_by_scenario(pairs, train_bl(corpus, seed=config.seed))}
    if config.paths.get("verb_model"):
        verb_params = read_model(_read(config.paths["verb_model"], ModelFormatException), source=config.paths["verb_model"])
        systems["EE_verb"] = evaluate_by_scenario(pairs, verb_params, VERB_ONLY)
    params = read_model(_read(config.paths["model"], ModelFormatException), source=config.paths["model"])
    systems["EE"] = evaluate_by_scenario(pairs, params, FULL)

    table = build_report(systems)
    print(render_report(table))
    if config.paths.get("xlsx"):
        write_report_xlsx(table, config.paths["xlsx"])
    return 0


HANDLERS: Dict[str, Callable[[CliConfig], int]] = {
    "train": _cmd_train,
    "eval": _cmd_eval,
    "order": _cmd_order,
    "baseline": _cmd_baseline,
    "synth": _cmd_synth,
    "report": _cmd_report,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        config = _resolve_config(args)
        print(f"config: {config.model_dump_json()}", file=sys.stderr)
        code = HANDLERS[config.subcommand](config)
        logger.info(f"{config.subcommand} finished")
        return code
    except (ScriptModelException, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
