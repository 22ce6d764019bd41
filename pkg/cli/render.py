"""
Представление отчётов: JSON (ключи заморожены) или таблица для человека.
"""
from typing import Any, List

from oracle.summary import OracleSummary
from schemas.base import ReportModel
from schemas.reports import CorpusReport, VerificationOutcome


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "да" if value else "нет"
    if value is None:
        return "-"
    if isinstance(value, dict) and set(value) == {'value', 'applicable'}:
        return str(value['value']) if value['applicable'] else "неприменимо"
    return str(value)


def _lines(data: Any, depth: int = 0) -> List[str]:
    pad = "  " * depth
    lines = []
    for key, value in data.items():
        if isinstance(value, dict) and value and set(value) != {'value', 'applicable'} \
                and not all(isinstance(k, int) for k in value):
            lines.append(f"{pad}{key}:")
            lines.extend(_lines(value, depth + 1))
        else:
            lines.append(f"{pad}{key}: {_format_value(value)}")
    return lines


def render_report(report: ReportModel) -> str:
    return "\n".join(_lines(report.model_dump()))


def render_oracle(summary: OracleSummary) -> str:
    extremal = ", ".join(f"β_{{{i},{j}}} = {v}" for (i, j), v in sorted(summary.extremal.items()))
    return "\n".join([
        summary.table.render(),
        "",
        f"reg = {summary.reg}, pd = {summary.pd}",
        f"экстремальные: {extremal}",
        f"единственное экстремальное: {_format_value(summary.unique_extremal)}",
    ])


def render_verification(outcome: VerificationOutcome) -> str:
    width = max(len(check.name) for check in outcome.checks)
    lines = []
    for check in outcome.checks:
        line = f"{check.name.ljust(width)}  {check.status}"
        if check.reason:
            line += f"  ({check.reason})"
        if check.status == "fail":
            line += f"  ожидалось {check.expected}, получено {check.actual}"
        lines.append(line)
    lines.append("итог: " + ("успех" if outcome.passed else "есть ошибки"))
    return "\n".join(lines)


def render_corpus(corpus: CorpusReport) -> str:
    lines = [f"seed: {corpus.seed}"]
    for item in corpus.graphs:
        star = ", звезда" if item.is_star else ""
        lines.append(f"граф {item.index}: n = {item.n}, рёбер {len(item.edges)}{star}")
    return "\n".join(lines)


def render(result: Any, fmt: str, indent: int) -> str:
    """Текст для stdout по результату команды и формату вывода."""
    if isinstance(result, str):
        return result.rstrip("\n")
    if isinstance(result, OracleSummary):
        return result.to_report().to_json(indent) if fmt == "json" else render_oracle(result)
    if fmt == "json":
        return result.to_json(indent)
    if isinstance(result, VerificationOutcome):
        return render_verification(result)
    if isinstance(result, CorpusReport):
        return render_corpus(result)
    return render_report(result)
