"""
Pydantic-схемы отчётов (JSON-вывод CLI).

Ключи JSON совпадают с именами полей и заморожены, см. docs/reports.md.
Вершины во всех отчётах - исходные метки графа, массивы отсортированы.
"""
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import Field

from .base import ReportModel


class MinimalPrimeDescription(ReportModel):
    """Описание минимального простого P_T(G)."""
    t: List[int] = Field(title="Множество T")
    variables: List[str] = Field(title="Переменные x_i, y_i для i ∈ T")
    components: List[List[int]] = Field(title="Компоненты G[T̄]")
    minors: List[str] = Field(title="2×2-миноры на компонентах")


class InvariantReport(ReportModel):
    """Скалярные инварианты графа."""
    n: int
    c_g: int = Field(title="Число компонент связности")
    omega: int = Field(title="Кликовое число ω(G)")
    cl: int = Field(title="Число максимальных клик")
    a: Dict[int, int] = Field(title="a_i(G): число минимальных разрезов размера i")
    m: int = Field(title="m(G): число минимальных разрезов")
    p: Optional[int] = Field(default=None, title="p(G) по формуле (только для GBG)")
    is_chordal: bool
    is_gbg: bool
    f: int = Field(title="Число свободных вершин")
    iv: int = Field(title="Число внутренних вершин")
    pv: int = Field(title="Число висячих вершин")
    alpha_type1: int = Field(title="α(G): число вершин типа 1")
    k_pdeg: int = Field(title="k(G): число вершин с pdeg ≥ 1")
    ell: Optional[int] = Field(default=None, title="ℓ(G): длина длиннейшего индуцированного пути")
    is_star: bool
    deg: Dict[int, int]
    cdeg: Dict[int, int]
    pdeg: Dict[int, int]
    facets: List[List[int]]
    minimal_cut_sets: List[List[int]]


class CertificateReport(ReportModel):
    """Классификация графа со свидетелем."""
    verdict: Literal["GBG", "BlockGraph", "ChordalNotGBG", "NotChordal"]
    triple: Optional[List[List[int]]] = None
    cycle: Optional[List[int]] = None


class Bound(ReportModel):
    value: Optional[int] = None
    applicable: bool = False


class BoundsReport(ReportModel):
    """Оценки регулярности S/J_G."""
    lower_mm: Bound = Field(title="ℓ(G) (Мацуда-Мурай)")
    lower_gbg: Bound = Field(title="m(G) + c′ для GBG")
    upper_general: Bound = Field(title="n - 1")
    upper_cl: Bound = Field(title="cl(G) для хордальных графов")
    upper_improved: Bound = Field(title="Покомпонентная оценка cl + α - pv")
    upper_improved_direct: Bound = Field(title="cl(G) + α(G) - pv(G) для связного неразложимого GBG, не звезды")
    exact_reg: Bound = Field(title="Точная регулярность, если известна")
    exact_reg_source: Optional[str] = Field(default=None, title="Источник точного значения")
    upper_attained_caterpillar: bool = False
    upper_attained_flower: bool = False


class ExtremalPredictionReport(ReportModel):
    position: Tuple[int, int]
    value: Optional[int] = None
    unique: Optional[bool] = None


class PetalReport(ReportModel):
    kind: Literal["triangle", "star"]
    vertices: List[int]


class FlowerReport(ReportModel):
    hub: int
    h: int
    k: int
    petals: List[PetalReport]


class DecompositionReport(ReportModel):
    components: List[List[int]]
    glue_vertices: List[int]


class AnalyzeReport(ReportModel):
    """Сводный отчёт команды analyze."""
    invariants: InvariantReport
    certificate: CertificateReport
    bounds: BoundsReport
    extremal: Optional[ExtremalPredictionReport] = None
    unique_extremal: Optional[bool] = None
    flower: Optional[FlowerReport] = None
    decomposition: Optional[DecompositionReport] = None


class OracleReport(ReportModel):
    """Таблица Бетти S/in(J_G)."""
    betti: List[List[int]]
    reg: int
    pd: int
    extremal: List[List[int]]
    field_char: int = 0
    variables: int = 0


class CheckOutcome(ReportModel):
    name: str
    status: Literal["pass", "fail", "skipped"]
    reason: Optional[str] = None
    expected: Optional[Any] = None
    actual: Optional[Any] = None


class VerificationOutcome(ReportModel):
    """Результат команды verify."""
    n: int
    edges: List[List[int]]
    checks: List[CheckOutcome]

    @property
    def passed(self) -> bool:
        return all(check.status != "fail" for check in self.checks)

    def check(self, name: str) -> CheckOutcome:
        for outcome in self.checks:
            if outcome.name == name:
                return outcome
        raise KeyError(name)


class GeneratedGraphReport(ReportModel):
    index: int
    n: int
    edges: List[List[int]]
    is_star: bool


class CorpusReport(ReportModel):
    """Результат команды gen."""
    seed: int
    graphs: List[GeneratedGraphReport]
