"""Command-line entry point: ``loopy-wl <command> ...``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from loopy_wl.application.services import (
    COUNT_MODES,
    BenchmarkService,
    ComparisonService,
    CountingService,
    DecompositionService,
    SweepService,
    load_config,
)
from loopy_wl.domain.generators import FamilyId, default_generator_factory, gen_random_sparse
from loopy_wl.domain.graphs import Graph
from loopy_wl.domain.refinement import MethodId, MethodSpec, default_factory
from loopy_wl.infrastructure.io import load_graphs, resolve_graph_argument, write_graph6
from loopy_wl.infrastructure.reports import FORMATS, FileReportRepository
from loopy_wl.shared.config import AppConfig, ConfigurationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_DISTINGUISHED = 1
EXIT_ERROR = 2


def configure_logging(level: str = "INFO") -> None:
    """Log to stderr; ``LOG_TO_FILE`` adds a file handler, ``DEBUG`` forces debug level."""

    log_level = logging.DEBUG if os.getenv("DEBUG") else getattr(logging, level.upper(), logging.INFO)
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if os.getenv("LOG_TO_FILE"):
        handlers.append(logging.FileHandler(os.getenv("LOG_TO_FILE"), mode="w"))
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopy-wl",
        description="r-loopy Weisfeiler-Leman refinement, exact counting oracles and cactus decompositions.",
    )
    parser.add_argument("--env-file", help="dotenv file read before the environment")
    parser.add_argument("--out", help="write the report to this file instead of stdout")
    parser.add_argument("--format", choices=FORMATS, help="report format (default from LOOPY_WL_OUTPUT_FORMAT)")
    parser.add_argument("--threads", type=int, help="worker processes for sweeps and benchmarks")
    parser.add_argument("--seed", type=int, help="seed for randomized commands")
    parser.add_argument("--budget", type=int, help="maximum stored paths per graph")
    parser.add_argument("--r-max", type=int, help="largest r accepted by loopy refinement")
    parser.add_argument("--log-level", help="logging level (DEBUG, INFO, WARNING)")
    commands = parser.add_subparsers(dest="command", required=True)

    compare = commands.add_parser("compare", help="compare two graphs under one method")
    compare.add_argument("first", help=".g6 / edge-list file or inline graph6 record")
    compare.add_argument("second", nargs="?", help="second graph; omit to take the first two records of FIRST")
    _add_method_arguments(compare)
    compare.add_argument("--trace", action="store_true", help="include per-round colour histograms")
    compare.add_argument("--min-r", type=int, metavar="R", help="search the minimal distinguishing r up to R")

    sweep = commands.add_parser("sweep", help="bucket a dataset by refinement fingerprint")
    sweep.add_argument("dataset")
    _add_method_arguments(sweep)
    sweep.add_argument("--pairs", action="store_true", help="treat consecutive records as (G, H) pairs")
    sweep.add_argument("--pairwise", action="store_true", help="cross-check with joint pairwise comparisons")
    sweep.add_argument("--progress", action="store_true")

    count = commands.add_parser("count", help="exact hom / sub count of a pattern in a host")
    count.add_argument("pattern")
    count.add_argument("host")
    count.add_argument("--mode", choices=COUNT_MODES, default="hom")

    cycles = commands.add_parser("cycles", help="cycle counts read off path neighbourhoods")
    cycles.add_argument("host")
    cycles.add_argument("max_len", type=int, metavar="LMAX")
    cycles.add_argument("--verify", action="store_true", help="check every row against the subgraph oracle")

    gen = commands.add_parser("gen", help="print a generated family as graph6")
    gen.add_argument("family", choices=[family.value for family in FamilyId])
    gen.add_argument("params", nargs="*", help="positional values or key=value pairs")
    gen.add_argument("--base", help="base graph for cfi")
    gen.add_argument("--twisted", action="store_true", help="cfi: twist one base edge")
    gen.add_argument("--pair", action="store_true", help="cfi: print the untwisted and twisted graphs")

    decompose = commands.add_parser("decompose", help="canonical tree decomposition of a fan cactus")
    decompose.add_argument("graph")
    decompose.add_argument("--root", type=int, default=0)
    decompose.add_argument("--code", action="store_true", help="add the canonical code of the decomposition")

    bench = commands.add_parser("bench", help="time neighbourhood precomputation and refinement")
    bench.add_argument("dataset", nargs="?")
    bench.add_argument("--r", type=int, default=None, dest="bench_r")
    bench.add_argument("--generate", type=int, metavar="N", help="benchmark N seeded sparse random graphs")
    bench.add_argument("--n", type=int, default=23, dest="bench_n")
    bench.add_argument("--avg-degree", type=float, default=2.2)
    bench.add_argument("--progress", action="store_true")
    return parser


def _add_method_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", help="wl1, loopy:R or kwl:K (default loopy with LOOPY_WL_R)")
    parser.add_argument("--r", type=int, help="path length bound for loopy")
    parser.add_argument("--k", type=int, help="tuple size for kwl")
    parser.add_argument("--atp", action="store_true", default=None, help="atomic-type variant of loopy")
    parser.add_argument("--kwl-variant", choices=("oblivious", "literal"))
    parser.add_argument("--max-iters", type=int, help="round cap; 0 runs until stable")


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "runtime.output_format": args.format,
        "runtime.threads": args.threads,
        "runtime.seed": args.seed,
        "runtime.log_level": args.log_level,
        "budget.path_budget": args.budget,
        "budget.r_max": args.r_max,
        "refinement.r": getattr(args, "r", None),
        "refinement.k": getattr(args, "k", None),
        "refinement.atp": getattr(args, "atp", None),
        "refinement.kwl_variant": getattr(args, "kwl_variant", None),
        "refinement.max_iters": getattr(args, "max_iters", None),
    }


def _method(args: argparse.Namespace, config: AppConfig) -> MethodSpec:
    refinement = config.refinement
    text = args.method or f"loopy:{refinement.r}"
    overrides = {"atp": refinement.atp, "kwl_variant": refinement.kwl_variant, "max_iters": refinement.max_iters}
    if ":" not in text:
        overrides.update(r=refinement.r, k=refinement.k)
    spec = MethodSpec.parse(text, **overrides)
    if args.method and ":" in args.method:
        flag, given, parsed = (
            ("--r", getattr(args, "r", None), spec.r)
            if spec.method is MethodId.LOOPY
            else ("--k", getattr(args, "k", None), spec.k)
        )
        if given is not None and given != parsed:
            raise ValueError(f"--method {args.method} conflicts with {flag} {given}")
    return spec


def _repository(args: argparse.Namespace, config: AppConfig) -> FileReportRepository:
    return FileReportRepository(output_format=config.runtime.output_format, path=args.out)


def _single(text: str) -> Graph:
    graphs = resolve_graph_argument(text)
    if not graphs:
        raise ValueError(f"No graph found in {text!r}")
    if len(graphs) > 1:
        logger.warning(f"{text} holds {len(graphs)} graphs; using the first")
    return graphs[0]


def _cmd_compare(args: argparse.Namespace, config: AppConfig) -> int:
    if args.second is None:
        graphs = resolve_graph_argument(args.first)
        if len(graphs) != 2:
            raise ValueError(f"{args.first} must hold exactly two graphs when SECOND is omitted")
        g, h = graphs
    else:
        g, h = _single(args.first), _single(args.second)
    service = ComparisonService(
        factory=default_factory(config.budget),
        config=config,
        repository=_repository(args, config),
    )
    if args.min_r is not None:
        found = service.minimal_r(g, h, args.min_r, atp=bool(config.refinement.atp))
        return EXIT_OK if found is not None else EXIT_NOT_DISTINGUISHED
    result = service.compare(g, h, _method(args, config), trace=args.trace)
    return EXIT_OK if result.distinguished else EXIT_NOT_DISTINGUISHED


def _cmd_sweep(args: argparse.Namespace, config: AppConfig) -> int:
    started = time.perf_counter()
    graphs = load_graphs(args.dataset)
    parse_seconds = time.perf_counter() - started
    logger.info(f"Loaded {len(graphs)} graphs from {args.dataset} in {parse_seconds:.2f}s")
    service = SweepService(config=config, repository=_repository(args, config))
    service.sweep(
        graphs,
        _method(args, config),
        dataset_id=Path(args.dataset).stem,
        parse_seconds=parse_seconds,
        pairwise=args.pairwise,
        pairs=args.pairs,
        progress=args.progress,
    )
    return EXIT_OK


def _cmd_count(args: argparse.Namespace, config: AppConfig) -> int:
    service = CountingService(config=config, repository=_repository(args, config))
    service.count(_single(args.pattern), _single(args.host), args.mode)
    return EXIT_OK


def _cmd_cycles(args: argparse.Namespace, config: AppConfig) -> int:
    service = CountingService(config=config, repository=_repository(args, config))
    service.cycles(_single(args.host), args.max_len, verify=args.verify)
    return EXIT_OK


def _gen_params(args: argparse.Namespace, config: AppConfig) -> Dict[str, Any]:
    factory = default_generator_factory()
    info = factory.info(FamilyId(args.family))
    params: Dict[str, Any] = {}
    positional = [value for value in args.params if "=" not in value]
    if len(positional) > len(info.parameters):
        raise ValueError(f"{args.family} takes at most {len(info.parameters)} positional parameters")
    params.update(zip(info.parameters, positional))
    for value in args.params:
        if "=" in value:
            key, _, raw = value.partition("=")
            params[key.strip()] = raw.strip()
    if "seed" in info.parameters and "seed" not in params:
        params["seed"] = config.runtime.seed
    if args.base:
        params["base"] = _single(args.base)
    if args.twisted:
        params["twisted"] = True
    if args.pair:
        params["pair"] = True
    return params


def _cmd_gen(args: argparse.Namespace, config: AppConfig) -> int:
    graphs = default_generator_factory().generate(args.family, _gen_params(args, config))
    text = "".join(write_graph6(graph) + "\n" for graph in graphs)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(graphs)} graphs to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace, config: AppConfig) -> int:
    service = DecompositionService(config=config, repository=_repository(args, config))
    payload = service.decompose(_single(args.graph), args.root, include_code=args.code)
    return EXIT_OK if payload["report"]["valid"] else EXIT_ERROR


def _cmd_bench(args: argparse.Namespace, config: AppConfig) -> int:
    if args.generate is not None:
        seed = config.runtime.seed
        graphs = [gen_random_sparse(args.bench_n, args.avg_degree, seed + i) for i in range(args.generate)]
    elif args.dataset:
        graphs = load_graphs(args.dataset)
    else:
        raise ValueError("bench needs a dataset or --generate N")
    r = args.bench_r if args.bench_r is not None else config.refinement.r
    service = BenchmarkService(config=config, repository=_repository(args, config))
    service.bench(graphs, r, progress=args.progress)
    return EXIT_OK


COMMANDS = {
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "count": _cmd_count,
    "cycles": _cmd_cycles,
    "gen": _cmd_gen,
    "decompose": _cmd_decompose,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR

    try:
        config = load_config(args.env_file, _overrides(args))
    except ConfigurationError as exc:
        sys.stderr.write(f"loopy-wl: invalid configuration: {exc}\n")
        return EXIT_ERROR
    configure_logging(config.runtime.log_level)

    try:
        return COMMANDS[args.command](args, config)
    except (ValueError, LookupError, RuntimeError, OSError) as exc:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"loopy-wl {args.command}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
