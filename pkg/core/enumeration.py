#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
按阶数穷举连通阈值图并批量核对定理：定理套件、猜想扫描、临界图列表与极值搜索。
"""
import math
import time
import attr
from concurrent.futures.thread import ThreadPoolExecutor
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple
from common.log_handler import log, log_record
from config.basic_config import basic_config
from core.eigen_solver import Spectrum, inertia_numeric, mu_minus, mu_plus, multiplicity
from core.exceptions import GraphOrderError, UnknownCheckError
from core.spectral_analysis import (
    OMEGA_HI,
    OMEGA_LO,
    antiregular_interlacing_check,
    conjecture_margins,
    free_interval,
    inertia_formula,
    interval_margin,
    moment_residual,
    nontrivial_gap,
    optimality_coverage,
    sandwich_check,
    spectral_bounds,
    spectrum_of,
    trivial_multiplicities,
    verify_interlacing,
)
from core.threshold_graph import (
    ThresholdGraph,
    largest_antiregular_subgraph,
    parse_creation,
    smallest_antiregular_supergraph,
    to_compact,
    to_string,
)


# 逐图检查；critical 不针对单个图，而是把临界图列表附到报告上
GRAPH_CHECKS = (
    'inertia',
    'omega_free',
    'refined_interval',
    'multiplicities',
    'simple_nontrivial',
    'conjecture',
    'bounds',
    'sandwich',
    'embedding',
    'moments',
    'antiregular_interlacing',
)
KNOWN_CHECKS = GRAPH_CHECKS + ('critical',)

# 统计量名称
MIN_MU_PLUS = 'min_mu_plus'
MAX_MU_MINUS = 'max_mu_minus'
MIN_LAMBDA_MIN = 'min_lambda_min'
MAX_LAMBDA_MAX = 'max_lambda_max'
STATISTICS = (MIN_MU_PLUS, MAX_MU_MINUS, MIN_LAMBDA_MIN, MAX_LAMBDA_MAX)

# 极值并列的判定窗口，并列时保留字典序最小的创建串
_TIE_WINDOW = 1e-9


class Violation(NamedTuple):
    creation: str
    check: str
    margin: float


class Counterexample(NamedTuple):
    creation: str
    statistic: str
    margin: float


class ExtremalRecord(NamedTuple):
    creation: str
    value: float


class CriticalEntry(NamedTuple):
    creation: str
    neg_margin: Optional[float]
    pos_margin: float


@attr.s(frozen=True)
class CriticalList:
    n: int = attr.ib()
    strings: Tuple[str, ...] = attr.ib(converter=tuple)

    @strings.validator
    def _check_length(self, attribute, value):
        if len(value) != self.n - 2:
            raise GraphOrderError(f"{self.n} 阶临界图应有 {self.n - 2} 个，实际为 {len(value)}")

    @property
    def graphs(self) -> List[ThresholdGraph]:
        return [parse_creation(text) for text in self.strings]


@attr.s
class ScanReport:
    n: int = attr.ib()
    graphs_scanned: int = attr.ib(default=0)
    checks_run: Tuple[str, ...] = attr.ib(default=(), converter=tuple)
    violations: List[Violation] = attr.ib(factory=list)
    counterexamples: List[Counterexample] = attr.ib(factory=list)
    extremal: Dict[str, ExtremalRecord] = attr.ib(factory=dict)
    critical: Optional[CriticalList] = attr.ib(default=None)
    critical_margins: List[CriticalEntry] = attr.ib(factory=list)
    wall_time: float = attr.ib(default=0.0)

    @property
    def passed(self) -> bool:
        return not self.violations


class _GraphOutcome(NamedTuple):
    creation: str
    violations: List[Violation]
    counterexamples: List[Counterexample]
    statistics: Dict[str, Optional[float]]


def _check_order(n: int, cap: Optional[int], minimum: int = 2) -> None:
    cap = basic_config.scan_cap if cap is None else cap
    if n < minimum:
        raise GraphOrderError(f"阶数至少为 {minimum}，实际为 {n}")
    if n > cap:
        raise GraphOrderError(f"阶数 {n} 超过扫描上限 {cap}")


def enumerate_connected(n: int, cap: Optional[int] = None,
                        start: int = 0, stop: Optional[int] = None) -> Iterator[ThresholdGraph]:
    """
    按展开串的字典序生成全部 2^{n-2} 个连通阈值图：b_1 = 0，b_n = 1，中间位任取。
    start/stop 截取中间位编码的区间，供并行分片使用。
    """
    _check_order(n, cap)
    total = 2 ** (n - 2)
    stop = total if stop is None else min(stop, total)
    for code in range(start, stop):
        middle = format(code, f'0{n - 2}b') if n > 2 else ''
        yield parse_creation('0' + middle + '1')


@log_record
def critical_graphs(n: int) -> CriticalList:
    """
    交错法不能覆盖的 n - 2 个临界图，按块位置顺序排列。
    偶数 n = 2k+2：s_1 = 2 且 t_1, s_2, t_2, ..., t_k 中恰有一个为 2，或 s_1 = 3 其余为 1；
    奇数 n = 2k+1：s_1 = 1 且 t_1, s_2, ..., t_k 中恰有一个为 2。
    """
    if n < 4:
        raise GraphOrderError(f"临界图要求阶数至少为 4，实际为 {n}")
    k = (n - 2) // 2 if n % 2 == 0 else (n - 1) // 2
    first = 2 if n % 2 == 0 else 1
    base = [first, 1] + [1, 1] * (k - 1)
    variants = []
    # base[0] 是 s_1，其余位置依次为 t_1, s_2, t_2, ..., t_k
    for position in range(1, len(base)):
        entries = list(base)
        entries[position] = 2
        variants.append(entries)
    if n % 2 == 0:
        variants.append([3] + base[1:])
    strings = []
    for entries in variants:
        graph = ThresholdGraph(blocks=list(zip(entries[0::2], entries[1::2])))
        strings.append(to_compact(graph))
    return CriticalList(n=n, strings=strings)


def _violation(creation: str, check: str, margin: float) -> Violation:
    log.warning(f"{creation} 未通过检查 {check}，余量 {margin}")
    return Violation(creation, check, margin)


def _inspect(graph: ThresholdGraph, checks: Sequence[str], tol: float) -> _GraphOutcome:
    creation = to_string(graph)
    spectrum: Spectrum = spectrum_of(graph)
    violations: List[Violation] = []
    counterexamples: List[Counterexample] = []

    if 'inertia' in checks:
        formula, numeric = inertia_formula(graph), inertia_numeric(spectrum)
        if formula != numeric:
            mismatch = sum(abs(a - b) for a, b in zip(formula.as_tuple(), numeric.as_tuple()))
            violations.append(_violation(creation, 'inertia', -float(mismatch)))
    if 'multiplicities' in checks:
        expected = trivial_multiplicities(graph)
        observed = (multiplicity(spectrum, -1.0), multiplicity(spectrum, 0.0))
        if tuple(expected) != observed:
            mismatch = abs(expected.minus_one - observed[0]) + abs(expected.zero - observed[1])
            violations.append(_violation(creation, 'multiplicities', -float(mismatch)))
    if 'omega_free' in checks:
        margin = interval_margin(spectrum, OMEGA_LO, OMEGA_HI)
        if margin < -tol:
            violations.append(_violation(creation, 'omega_free', margin))
    if 'refined_interval' in checks:
        interval = free_interval(graph)
        margin = interval_margin(spectrum, interval.lo, interval.hi)
        if margin < -tol:
            violations.append(_violation(creation, 'refined_interval', margin))
    if 'simple_nontrivial' in checks:
        gap = nontrivial_gap(spectrum)
        if gap <= tol:
            violations.append(_violation(creation, 'simple_nontrivial', gap))
    if 'bounds' in checks:
        bounds = spectral_bounds(graph)
        margin = min(spectrum.lambda_max - bounds.lower_bound_lambda_max,
                     bounds.upper_bound_lambda_min - spectrum.lambda_min)
        if margin < -tol:
            violations.append(_violation(creation, 'bounds', margin))
    if 'sandwich' in checks:
        result = sandwich_check(graph, tol)
        if not result.passed:
            violations.append(_violation(creation, 'sandwich', result.worst_margin))
    if 'embedding' in checks:
        margin = _embedding_margin(graph, tol)
        if margin < -tol:
            violations.append(_violation(creation, 'embedding', margin))
    if 'moments' in checks:
        residual = moment_residual(graph, spectrum)
        if residual > tol:
            violations.append(_violation(creation, 'moments', -residual))
    if 'antiregular_interlacing' in checks:
        result = antiregular_interlacing_check(graph, tol)
        if not result.passed:
            violations.append(_violation(creation, 'antiregular_interlacing', result.worst_margin))
    if 'conjecture' in checks:
        margins = conjecture_margins(graph)
        if margins.pos_margin < -tol:
            counterexamples.append(Counterexample(creation, MIN_MU_PLUS, margins.pos_margin))
        if margins.neg_margin is not None and margins.neg_margin < -tol:
            counterexamples.append(Counterexample(creation, MAX_MU_MINUS, margins.neg_margin))
        for record in counterexamples:
            log.warning(f"猜想反例候选 {record}")

    statistics = {
        MIN_MU_PLUS: mu_plus(spectrum),
        MAX_MU_MINUS: mu_minus(spectrum),
        MIN_LAMBDA_MIN: spectrum.lambda_min,
        MAX_LAMBDA_MAX: spectrum.lambda_max,
    }
    return _GraphOutcome(creation, violations, counterexamples, statistics)


def _embedding_margin(graph: ThresholdGraph, tol: float) -> float:
    """
    两个反正则嵌入的阶数公式、合法性（构造时已校验）与交错余量，返回最小余量；
    阶数不符时返回 -inf。
    """
    n, k = graph.n, graph.k
    m, inner = largest_antiregular_subgraph(graph)
    order, outer = smallest_antiregular_supergraph(graph)
    expected_m = 2 * k if graph.s1 == 1 else 2 * k + 1
    expected_order = 2 * (n - k) if graph.s1 == 1 else 2 * (n - k) - 1
    if m != expected_m or order != expected_order or order > 2 * n - 2:
        return -math.inf
    return min(
        verify_interlacing(graph, inner.guest, inner, tol).worst_margin,
        verify_interlacing(outer.host, graph, outer, tol).worst_margin,
    )


def _better(statistic: str, candidate: float, best: float) -> bool:
    if statistic in (MIN_MU_PLUS, MIN_LAMBDA_MIN):
        return candidate < best - _TIE_WINDOW
    return candidate > best + _TIE_WINDOW


def _merge_extremal(outcomes: Sequence[_GraphOutcome]) -> Dict[str, ExtremalRecord]:
    extremal: Dict[str, ExtremalRecord] = {}
    for outcome in outcomes:
        for statistic in STATISTICS:
            value = outcome.statistics[statistic]
            if value is None:
                continue
            current = extremal.get(statistic)
            if current is None or _better(statistic, value, current.value):
                extremal[statistic] = ExtremalRecord(outcome.creation, value)
    return extremal


def _resolve_checks(checks: Optional[Sequence[str]]) -> Tuple[str, ...]:
    if checks is None:
        return GRAPH_CHECKS
    resolved = []
    for name in checks:
        name = name.strip()
        if not name:
            continue
        if name not in KNOWN_CHECKS:
            raise UnknownCheckError(f"未知的检查名称: {name}，可选: {', '.join(KNOWN_CHECKS)}")
        if name not in resolved:
            resolved.append(name)
    return tuple(resolved)


def scan(n: int, checks: Optional[Sequence[str]] = None, jobs: Optional[int] = None,
         cap: Optional[int] = None, tol: Optional[float] = None) -> ScanReport:
    """
    对 n 阶全部连通阈值图运行选定的检查，汇总违例与极值统计。
    串空间按连续区间分给各线程，结果按创建串字典序合并，与线程数无关。

    :param n: 阶数
    :param checks: 检查名称列表，None 表示全部逐图检查
    :param jobs: 线程数
    :param cap: 覆盖配置中的扫描上限
    :param tol: 覆盖配置中的容差
    :return: 扫描报告
    """
    _check_order(n, cap)
    selected = _resolve_checks(checks)
    if 'critical' in selected and n < 4:
        raise GraphOrderError(f"临界图检查要求阶数至少为 4，实际为 {n}")
    tol = basic_config.tol if tol is None else tol
    jobs = max(1, jobs or basic_config.jobs)
    graph_checks = tuple(name for name in selected if name in GRAPH_CHECKS)
    total = 2 ** (n - 2)
    log.info(f"开始扫描 n={n}，检查 {selected}，共 {total} 个图，线程数 {jobs}")
    started = time.perf_counter()

    def run_chunk(bounds):
        start, stop = bounds
        return [_inspect(graph, graph_checks, tol) for graph in enumerate_connected(n, cap, start, stop)]

    size = math.ceil(total / jobs)
    chunks = [(start, min(start + size, total)) for start in range(0, total, size)]
    if jobs == 1:
        results = [run_chunk(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(run_chunk, chunks))
    outcomes = sorted((outcome for chunk in results for outcome in chunk), key=lambda o: o.creation)

    report = ScanReport(n=n, graphs_scanned=len(outcomes), checks_run=selected)
    for outcome in outcomes:
        report.violations.extend(outcome.violations)
        report.counterexamples.extend(outcome.counterexamples)
    report.extremal = _merge_extremal(outcomes)
    if 'critical' in selected:
        report.critical = critical_graphs(n)
        for graph in report.critical.graphs:
            margins = conjecture_margins(graph)
            report.critical_margins.append(CriticalEntry(to_compact(graph), margins.neg_margin, margins.pos_margin))
    report.wall_time = time.perf_counter() - started
    log.info(
        f"扫描 n={n} 结束：{report.graphs_scanned} 个图，{len(report.violations)} 个违例，"
        f"{len(report.counterexamples)} 个猜想反例候选，用时 {report.wall_time:.3f}s"
    )
    return report


@log_record
def extremal_min_eigenvalue(n: int, cap: Optional[int] = None) -> Tuple[ThresholdGraph, float]:
    """全部 n 阶连通阈值图中 λ_min 最小者，并列时取字典序最小的创建串。"""
    _check_order(n, cap, minimum=3)
    best_graph, best_value = None, math.inf
    for graph in enumerate_connected(n, cap):
        value = spectrum_of(graph).lambda_min
        if best_graph is None or value < best_value - _TIE_WINDOW:
            best_graph, best_value = graph, value
    return best_graph, best_value


def predicted_min_eigenvalue_graph(n: int) -> ThresholdGraph:
    """0^{n-t} 1^t，t = ⌊n/3⌋。"""
    t = n // 3
    return ThresholdGraph(blocks=[(n - t, t)])


def is_critical(graph: ThresholdGraph) -> bool:
    return optimality_coverage(graph).critical
