"""
Проверка утверждений о J_G на конкретном графе: комбинаторные предсказания
сравниваются с таблицей Бетти оракула.

Каждая проверка даёт pass, fail (с ожидаемым и фактическим значением)
или skipped с причиной.
"""
import logging
from typing import List, Optional

from invariants.bounds import bounds_report, extremal_prediction
from invariants.decomposition import decompose
from invariants.products import betti_polynomial_product
from invariants.report import compute_invariants, edged_components
from models.graph import Graph
from oracle.summary import OracleSummary, oracle_summary
from schemas import AppConfig
from schemas.reports import BoundsReport, CheckOutcome, VerificationOutcome

logger = logging.getLogger(__name__)

CHECK_NAMES = (
    "pd-formula",
    "extremal-position",
    "extremal-value",
    "unique-classifier",
    "bounds-sandwich",
    "betti-product",
)


def _outcome(name: str, ok: bool, expected, actual) -> CheckOutcome:
    return CheckOutcome(name=name, status="pass" if ok else "fail", expected=expected, actual=actual)


def _rows(extremal) -> List[List[int]]:
    return [[i, j, value] for (i, j), value in sorted(extremal.items())]


def _skipped(name: str, reason: str) -> CheckOutcome:
    return CheckOutcome(name=name, status="skipped", reason=reason)


def _sandwich(bounds: BoundsReport, reg: int) -> CheckOutcome:
    lower = [b.value for b in (bounds.lower_mm, bounds.lower_gbg) if b.applicable]
    upper = [
        b.value
        for b in (bounds.upper_general, bounds.upper_cl, bounds.upper_improved, bounds.upper_improved_direct)
        if b.applicable
    ]
    expected = {"lower": max(lower, default=0), "upper": min(upper)}
    ok = expected["lower"] <= reg <= expected["upper"]
    if bounds.exact_reg.applicable:
        expected["exact"] = bounds.exact_reg.value
        ok = ok and reg == bounds.exact_reg.value
    return _outcome("bounds-sandwich", ok, expected, reg)


def _betti_product(g: Graph, summary: OracleSummary, settings: AppConfig) -> CheckOutcome:
    name = "betti-product"
    decomposition = decompose(g)
    if decomposition.size < 2:
        return _skipped(name, "граф неразложим")
    tables = [oracle_summary(piece, settings.oracle).table for piece in decomposition.components]
    product = betti_polynomial_product(tables)
    table = summary.table
    expected = {"reg": product.reg, "pd": product.pd, "extremal": _rows(product.extremal())}
    actual = {"reg": table.reg, "pd": table.pd, "extremal": _rows(table.extremal()),
              "full_table_equal": product == table}
    if product != table:
        logger.info("таблица произведения отличается от таблицы in(J_G) вне экстремальных позиций")
    ok = all(expected[key] == actual[key] for key in expected)
    return _outcome(name, ok, expected, actual)


def verify_graph(g: Graph, settings: Optional[AppConfig] = None) -> VerificationOutcome:
    settings = settings or AppConfig()
    invariants = compute_invariants(g, settings.enumeration)
    report = invariants.report
    summary = oracle_summary(g, settings.oracle)
    table = summary.table
    checks: List[CheckOutcome] = []

    if report.is_gbg:
        checks.append(_outcome("pd-formula", table.pd == report.p, report.p, table.pd))

        prediction = extremal_prediction(g)
        position = prediction.position
        extremal = table.extremal()
        checks.append(_outcome(
            "extremal-position", position in extremal, list(position),
            sorted([i, j] for i, j in extremal),
        ))

        value = prediction.value if prediction.value is not None else prediction.value_from_components
        if value is None:
            checks.append(_skipped("extremal-value", "есть внутренняя вершина с cdeg = 2"))
        else:
            checks.append(_outcome("extremal-value", table[position] == value, value, table[position]))

        expected_reg = report.m + edged_components(g)
        ok = prediction.unique == table.has_unique_extremal
        if prediction.unique:
            ok = ok and table.reg == expected_reg
        checks.append(_outcome(
            "unique-classifier", ok,
            {"unique": prediction.unique, "reg": expected_reg if prediction.unique else None},
            {"unique": table.has_unique_extremal, "reg": table.reg},
        ))
    else:
        reason = f"граф не является обобщённым блочным ({invariants.certificate.verdict.value})"
        for name in CHECK_NAMES[:4]:
            checks.append(_skipped(name, reason))

    checks.append(_sandwich(bounds_report(g, settings.enumeration), table.reg))

    if report.is_chordal:
        checks.append(_betti_product(g, summary, settings))
    else:
        checks.append(_skipped("betti-product", "разложение определено для хордальных графов"))

    failed = [c.name for c in checks if c.status == "fail"]
    if failed:
        logger.warning("не пройдены проверки: %s", ", ".join(failed))
    return VerificationOutcome(n=g.n, edges=[list(e) for e in g.edges], checks=checks)
