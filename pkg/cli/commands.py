"""
Подкоманды CLI: analyze, verify, oracle, decompose, gen.
"""
import logging
from pathlib import Path
from typing import Optional, Union

from gbg.generator import generate_corpus
from graphs.io import format_graph_text, read_graph, write_graph
from invariants.bounds import bounds_report, extremal_prediction
from invariants.decomposition import decompose
from invariants.flowers import find_flower
from invariants.report import compute_invariants
from models.errors import InfeasibleParametersError
from oracle.summary import OracleSummary, oracle_summary
from schemas import AppConfig
from schemas.reports import AnalyzeReport, CorpusReport, DecompositionReport, VerificationOutcome

from .verify import verify_graph

logger = logging.getLogger(__name__)


def cmd_analyze(path: Path, settings: AppConfig) -> AnalyzeReport:
    g = read_graph(path)
    invariants = compute_invariants(g, settings.enumeration)
    report = invariants.report
    extremal = unique = decomposition = None
    if report.is_gbg:
        prediction = extremal_prediction(g)
        extremal = prediction.to_report()
        unique = prediction.unique
    if report.is_chordal:
        decomposition = decompose(g, invariants.certificate.complex).to_report(g)
    witness = find_flower(g)
    return AnalyzeReport(
        invariants=report,
        certificate=invariants.certificate.to_report(g),
        bounds=bounds_report(g, settings.enumeration),
        extremal=extremal,
        unique_extremal=unique,
        flower=None if witness is None else witness.to_report(g),
        decomposition=decomposition,
    )


def cmd_verify(path: Path, settings: AppConfig) -> VerificationOutcome:
    return verify_graph(read_graph(path), settings)


def cmd_oracle(path: Path, settings: AppConfig) -> OracleSummary:
    return oracle_summary(read_graph(path), settings.oracle)


def cmd_decompose(path: Path, settings: AppConfig) -> DecompositionReport:
    g = read_graph(path)
    result = decompose(g)
    if result.size > 1:
        logger.info("разложение на %d частей", result.size)
    return result.to_report(g)


def cmd_generate(settings: AppConfig, output_dir: Optional[Path] = None,
                 shuffle_labels: bool = False, report: bool = False) -> Union[CorpusReport, str]:
    """
    Корпус случайных GBG в текстовом формате графа.

    Без output_dir в stdout печатается единственный граф (count = 1);
    с output_dir каждый граф пишется в свой файл, в stdout - пути файлов.
    report=True возвращает CorpusReport вместо текста.
    """
    seed, count = settings.generator.seed, settings.generator.count
    if output_dir is None and count > 1 and not report:
        raise InfeasibleParametersError(f"для --count {count} нужен --output-dir или --report")
    corpus = generate_corpus(settings.generator, shuffle_labels=shuffle_labels)
    paths = []
    if output_dir is not None:
        output_dir.mkdir(parents=True, exist_ok=True)
        for item in corpus:
            path = output_dir / f"gbg_{seed}_{item.index:03d}.txt"
            write_graph(item.graph, path)
            paths.append(str(path))
        logger.info("записано %d файлов в %s", len(corpus), output_dir)
    if report:
        return CorpusReport(seed=seed, graphs=[item.to_report() for item in corpus])
    if paths:
        return "\n".join(paths)
    return format_graph_text(corpus[0].graph)
