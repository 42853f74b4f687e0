"""
Command handlers. Each one builds services from the run configuration,
delegates, and hands reports to the formatters.
"""
import sys
from argparse import Namespace
from pathlib import Path
from typing import Callable, Iterable, TextIO

from distspec.cli.formats import render, write_report
from distspec.cli.parsing import load_graph
from distspec.core.config import RunConfig
from distspec.core.exceptions import ClaimViolationError
from distspec.core.performance import metrics_collector
from distspec.models.enumeration import EnumScope
from distspec.models.report import ExtremalReport, RhoReport
from distspec.services.enumeration_service import EnumerationService
from distspec.services.extremal_service import ExtremalService
from distspec.services.metric_service import MetricService
from distspec.services.spectral_service import SpectralService
from distspec.utils.graph6 import to_edge_list_json, to_graph6
from distspec.utils.hash import digest
from distspec.utils.logger import get_logger
from distspec.utils.validators import parse_range, require

logger = get_logger("cli")


def cmd_rho(args: Namespace, config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Print rho, residual, the transmission bounds and the regularity flag for one graph."""
    g, spec = load_graph(args.source)
    metric = MetricService(config)
    d = metric.distances(g)
    result = SpectralService(config).solve(d)
    lower, upper = metric.spectral_bounds(d)
    report = RhoReport(graph6=to_graph6(g), n=g.n, m=g.m, rho=result.rho, residual=result.residual,
                       lower_bound=lower, upper_bound=upper,
                       transmission_regular=metric.is_transmission_regular(d), method=result.method)
    out.write(render(report, config.output_format, spec.label() if spec else None))
    return 0


def _verify_jobs(args: Namespace, service: ExtremalService) -> Iterable[tuple[str, Callable[[], ExtremalReport]]]:
    theorem = args.theorem
    if theorem == "max":
        for m in parse_range(args.m or "5..9"):
            yield f"max_m{m}", lambda m=m: service.verify_max_over_size(m)
    elif theorem in ("min-structure", "min-identity", "remark", "conjecture"):
        require(args.m is not None, f"verify {theorem} needs --m")
        run = {
            "min-structure": service.verify_min_structure,
            "min-identity": service.verify_min_identity,
            "remark": service.verify_min_remark,
            "conjecture": lambda m: service.conjecture_explore(m, cross_check=True),
        }[theorem]
        for m in parse_range(args.m):
            yield f"{theorem}_m{m}", lambda m=m: run(m)
    elif theorem == "forests":
        for n in parse_range(args.n or "6..10"):
            for c in parse_range(args.c or "2..4"):
                if c <= n - 2:
                    yield f"forests_n{n}_c{c}", lambda n=n, c=c: service.verify_forest_extremal(n, c)
    elif theorem == "charpoly":
        values = parse_range(args.n or "5..30")
        yield f"charpoly_n{values[0]}-{values[-1]}", lambda: service.verify_charpoly(values)
    else:
        yield f"lemmas_seed{service.config.seed}", lambda: service.verify_lemmas(
            pairs=args.pairs, corpus_size=args.corpus, max_n=args.max_n or 12)


def _run_reports(jobs: Iterable[tuple[str, Callable[[], ExtremalReport]]], config: RunConfig,
                 output_dir: str, out: TextIO) -> int:
    """Write every report, then fail with the first violated claim."""
    first_failure = None
    for stem, job in jobs:
        report = job()
        path = write_report(report, config.output_format, output_dir, stem)
        logger.info("report_written", path=str(path), passed=report.passed,
                    sha256=digest(path.read_text(encoding="utf-8")), wall_time=round(report.wall_time, 3))
        if config.output_format == "text":
            out.write(render(report, "text"))
        out.write(f"{stem}: {'PASS' if report.passed else 'FAIL'} -> {path}\n")
        if first_failure is None and not report.passed:
            first_failure = report.failures()[0]
    logger.info("run_summary", **metrics_collector.get_stats())
    if first_failure is not None:
        raise ClaimViolationError(first_failure.name, first_failure.graph6)
    return 0


def cmd_verify(args: Namespace, config: RunConfig, out: TextIO = sys.stdout) -> int:
    service = ExtremalService(config)
    return _run_reports(_verify_jobs(args, service), config, args.output_dir, out)


def cmd_tables(args: Namespace, config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Rank the structured candidates for (n, s) = (9, 1) and (10, 1)."""
    service = ExtremalService(config)
    jobs = [("table1", lambda: service.conjecture_explore(29)), ("table2", lambda: service.conjecture_explore(37))]
    for stem, job in jobs:
        report = job()
        write_report(report, config.output_format, args.output_dir, stem)
        out.write(render(report, "text"))
        out.write("\n")
        if not report.passed:
            failure = report.failures()[0]
            raise ClaimViolationError(failure.name, failure.graph6)
    return 0


def _scope(args: Namespace) -> EnumScope:
    if args.mode == "by-size":
        require(args.m is not None, "by-size needs --m")
        return EnumScope.by_size(args.m, args.max_n)
    if args.mode == "order-size":
        require(args.n is not None and args.m is not None, "order-size needs --n and --m")
        return EnumScope.by_order_size(args.n, args.m)
    if args.mode == "forests":
        require(args.n is not None and args.c is not None, "forests needs --n and --c")
        return EnumScope.forests(args.n, args.c)
    require(args.n is not None and args.s is not None, "structured needs --n and --s")
    return EnumScope.structured_min(args.n, args.s, args.all_forests)


def cmd_enumerate(args: Namespace, config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Print one graph6 string per isomorphism class (or only the count)."""
    service = EnumerationService(config)
    scope = _scope(args)
    if args.count:
        out.write(f"{service.count(scope)}\n")
        return 0
    for g in service.enumerate(scope):
        out.write(f"{to_graph6(g)}\n")
    return 0


def cmd_convert(args: Namespace, config: RunConfig, out: TextIO = sys.stdout) -> int:
    g, _ = load_graph(args.source)
    text = to_graph6(g) + "\n" if args.to == "graph6" else to_edge_list_json(g) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0

