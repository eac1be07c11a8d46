#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
把阈值图的谱定理落实为可计算的公式与可数值核对的谓词：
惯性、平凡特征值重数、无特征值区间、奇偶序列、交错检验、夹逼图与闭式界。
"""
import math
import attr
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
from common.log_handler import log, log_record
from config.basic_config import basic_config
from core.eigen_solver import (
    InertiaTriple,
    Spectrum,
    eigenvalues,
    mu_minus,
    mu_plus,
    spectral_moments,
)
from core.exceptions import GraphOrderError, InvalidEmbeddingError, ThresholdSpectraError
from core.threshold_graph import (
    Embedding,
    ThresholdGraph,
    adjacency,
    antiregular,
    block_ranges,
    edge_count,
    largest_antiregular_subgraph,
    triangle_count,
)


# Ω = [(-1-√2)/2, (-1+√2)/2]，关于 -1/2 对称，右端点取 -1 - lo 保证 lo + hi = -1
OMEGA_LO = (-1.0 - math.sqrt(2.0)) / 2.0
OMEGA_HI = -1.0 - OMEGA_LO
# μ^+ 间隙收缩的比较起点：A_10 所在的行
_GAP_REFERENCE_K = 5


@attr.s(frozen=True)
class FreeInterval:
    lo: float = attr.ib()
    hi: float = attr.ib()
    # 生成该区间的反正则图 A_m 的阶数
    source: int = attr.ib()

    @hi.validator
    def _check_bracket(self, attribute, value):
        if not (self.lo < -1.0 < 0.0 < value):
            raise ThresholdSpectraError(f"区间 [{self.lo}, {value}] 不满足 lo < -1 < 0 < hi")
        if self.lo > OMEGA_LO or value < OMEGA_HI:
            raise ThresholdSpectraError(f"区间 [{self.lo}, {value}] 未包含 Ω")

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi


@attr.s(frozen=True)
class BlockBound:
    sigma: int = attr.ib()
    tau: int = attr.ib()
    lo: float = attr.ib()
    hi: float = attr.ib()


@attr.s(frozen=True)
class BoundsReport:
    per_block: Tuple[BlockBound, ...] = attr.ib(converter=tuple)
    lower_bound_lambda_max: float = attr.ib()
    upper_bound_lambda_min: float = attr.ib()


class TrivialMultiplicities(NamedTuple):
    minus_one: int
    zero: int


class NontrivialCounts(NamedTuple):
    negatives: int
    positives: int


class MuIndices(NamedTuple):
    # 1 起始的位置；不存在时为 None
    mu_minus: Optional[int]
    mu_plus: int


class CheckResult(NamedTuple):
    passed: bool
    worst_margin: float


class SandwichPair(NamedTuple):
    lower: ThresholdGraph
    upper: ThresholdGraph


class AntiregularExtremes(NamedTuple):
    mu_minus: Optional[float]
    mu_plus: float


class ParityRow(NamedTuple):
    k: int
    mu_minus_even: float
    mu_plus_even: float
    mu_minus_odd: float
    mu_plus_odd: float


class OddEvenRow(NamedTuple):
    n: int
    neg_margin: float
    pos_margin: float


class ConjectureMargins(NamedTuple):
    neg_margin: Optional[float]
    pos_margin: float


class OptimalityCoverage(NamedTuple):
    mu_plus_proved: bool
    mu_minus_proved: bool
    critical: bool


@lru_cache(maxsize=8192)
def spectrum_of(graph: ThresholdGraph) -> Spectrum:
    return eigenvalues(adjacency(graph))


def omega() -> Tuple[float, float]:
    return OMEGA_LO, OMEGA_HI


def inertia_formula(graph: ThresholdGraph) -> InertiaTriple:
    """i(G) = (t, s - k, k)。"""
    return InertiaTriple(negatives=graph.t, zeros=graph.s - graph.k, positives=graph.k)


def trivial_multiplicities(graph: ThresholdGraph) -> TrivialMultiplicities:
    if graph.s1 >= 2:
        return TrivialMultiplicities(minus_one=graph.t - graph.k, zero=graph.s - graph.k)
    return TrivialMultiplicities(minus_one=graph.t - graph.k + 1, zero=graph.s - graph.k)


def nontrivial_counts(graph: ThresholdGraph) -> NontrivialCounts:
    if graph.s1 >= 2:
        return NontrivialCounts(negatives=graph.k, positives=graph.k)
    return NontrivialCounts(negatives=graph.k - 1, positives=graph.k)


def mu_indices(graph: ThresholdGraph) -> MuIndices:
    n, k = graph.n, graph.k
    if graph.s1 >= 2:
        return MuIndices(mu_minus=k, mu_plus=n - k + 1)
    return MuIndices(mu_minus=k - 1 if k > 1 else None, mu_plus=n - k + 1)


@lru_cache(maxsize=None)
def antiregular_extremes(n: int) -> AntiregularExtremes:
    spectrum = spectrum_of(antiregular(n))
    return AntiregularExtremes(mu_minus=mu_minus(spectrum), mu_plus=mu_plus(spectrum))


def free_interval(graph: ThresholdGraph) -> FreeInterval:
    """
    由最大反正则子图 A_m 给出的无非平凡特征值区间 [μ^-(A_m), μ^+(A_m)]。
    m = 2 时 A_2 没有 μ^-，左端点退化为 Ω 的左端点。
    """
    m, _ = largest_antiregular_subgraph(graph)
    extremes = antiregular_extremes(m)
    if m < 3:
        return FreeInterval(lo=OMEGA_LO, hi=extremes.mu_plus, source=m)
    return FreeInterval(lo=extremes.mu_minus, hi=extremes.mu_plus, source=m)


def nontrivial_values(spectrum: Spectrum) -> List[float]:
    """与 -1 和 0 的距离都超过 tol 的特征值。"""
    tol = spectrum.tol
    return [v for v in spectrum.values if abs(v + 1.0) > tol and abs(v) > tol]


def interval_margin(spectrum: Spectrum, lo: float, hi: float) -> float:
    """
    非平凡特征值到区间 [lo, hi] 的最小带符号距离，落在区间内时为负。
    """
    margin = math.inf
    for value in nontrivial_values(spectrum):
        if value < lo:
            distance = lo - value
        elif value > hi:
            distance = value - hi
        else:
            distance = -min(value - lo, hi - value)
        margin = min(margin, distance)
    return margin


def nontrivial_gap(spectrum: Spectrum) -> float:
    """非平凡特征值与相邻特征值的最小间距。"""
    values = spectrum.values
    tol = spectrum.tol
    gap = math.inf
    for i, value in enumerate(values):
        if abs(value + 1.0) <= tol or abs(value) <= tol:
            continue
        if i > 0:
            gap = min(gap, value - values[i - 1])
        if i < len(values) - 1:
            gap = min(gap, values[i + 1] - value)
    return gap


def moment_residual(graph: ThresholdGraph, spectrum: Optional[Spectrum] = None) -> float:
    """Σλ、Σλ² - 2|E|、Σλ³ - 6·三角形数 三者绝对值的最大者。"""
    spectrum = spectrum or spectrum_of(graph)
    residuals = (
        spectral_moments(spectrum, 1),
        spectral_moments(spectrum, 2) - 2 * edge_count(graph),
        spectral_moments(spectrum, 3) - 6 * triangle_count(graph),
    )
    return max(abs(r) for r in residuals)


def _interlacing_margins(host: Sequence[float], guest: Sequence[float]) -> List[float]:
    n, m = len(host), len(guest)
    margins = []
    for i in range(m):
        margins.append(guest[i] - host[i])
        margins.append(host[n - m + i] - guest[i])
    return margins


def verify_interlacing(host: ThresholdGraph, guest: ThresholdGraph, embedding: Embedding,
                       tol: Optional[float] = None) -> CheckResult:
    """
    λ_i(G) <= λ_i(H) <= λ_{n-m+i}(G)，i = 1..m，允许 -tol 的松弛。

    :return: (是否通过, 最小松弛量)
    """
    if embedding.host != host or embedding.guest != guest:
        raise InvalidEmbeddingError("嵌入的宿主或客体与给定的图不一致")
    tol = basic_config.tol if tol is None else tol
    margins = _interlacing_margins(spectrum_of(host).values, spectrum_of(guest).values)
    worst = min(margins)
    return CheckResult(worst >= -tol, worst)


def antiregular_interlacing_check(graph: ThresholdGraph, tol: Optional[float] = None) -> CheckResult:
    """
    反正则交错定理：s_1 >= 2 时 λ_i(G) <= λ_i(A_{2k+1}) < -1 (i <= k)，
    0 < λ_{k+1+i}(A_{2k+1}) <= λ_{n-k+i}(G) (i <= k)；s_1 = 1 时对 A_{2k} 类似，负侧只到 k-1。
    """
    tol = basic_config.tol if tol is None else tol
    m, _ = largest_antiregular_subgraph(graph)
    n, k = graph.n, graph.k
    g_values = spectrum_of(graph).values
    a_values = spectrum_of(antiregular(m)).values
    negative_range = range(1, k + 1) if graph.s1 >= 2 else range(1, k)
    shift = k + 1 if graph.s1 >= 2 else k
    margins, strict = [], []
    for i in negative_range:
        margins.append(a_values[i - 1] - g_values[i - 1])
        strict.append(-1.0 - a_values[i - 1])
    for i in range(1, k + 1):
        margins.append(g_values[n - k + i - 1] - a_values[shift + i - 1])
        strict.append(a_values[shift + i - 1])
    worst = min(margins)
    return CheckResult(worst >= -tol and all(value > tol for value in strict), worst)


@log_record
def parity_sequences(k_max: int, jobs: Optional[int] = None) -> List[ParityRow]:
    """
    k = 2..k_max 时 A_{2k} 与 A_{2k+1} 的 μ^-、μ^+。各行独立计算，按 k 升序组装。
    """
    if k_max < 2:
        raise GraphOrderError(f"k_max 至少为 2，实际为 {k_max}")

    def row(k):
        even, odd = antiregular_extremes(2 * k), antiregular_extremes(2 * k + 1)
        return ParityRow(k, even.mu_minus, even.mu_plus, odd.mu_minus, odd.mu_plus)

    with ThreadPoolExecutor(max_workers=jobs or basic_config.jobs) as executor:
        return list(executor.map(row, range(2, k_max + 1)))


def odd_even_margins(n_max: int) -> List[OddEvenRow]:
    """
    奇数 n：μ^-(A_{n+1}) <= μ^-(A_n)，μ^+(A_{n+1}) <= μ^+(A_n)；偶数 n 方向相反。
    n = 3..n_max-1，余量非负即成立。
    """
    rows = []
    for n in range(3, n_max):
        current, following = antiregular_extremes(n), antiregular_extremes(n + 1)
        if n % 2 == 1:
            rows.append(OddEvenRow(n, current.mu_minus - following.mu_minus,
                                   current.mu_plus - following.mu_plus))
        else:
            rows.append(OddEvenRow(n, following.mu_minus - current.mu_minus,
                                   following.mu_plus - current.mu_plus))
    return rows


def _strictly(values: Sequence[float], increasing: bool) -> bool:
    pairs = zip(values, values[1:])
    return all(b > a for a, b in pairs) if increasing else all(b < a for a, b in pairs)


def parity_verdicts(rows: Sequence[ParityRow], tol: Optional[float] = None) -> Dict[str, bool]:
    """
    反正则图 μ^-、μ^+ 奇偶序列的各项判定。相邻项的差在 k 较大时小于 tol，单调性按严格比较判定。
    """
    tol = basic_config.tol if tol is None else tol
    minus_even = [row.mu_minus_even for row in rows]
    minus_odd = [row.mu_minus_odd for row in rows]
    plus_even = [row.mu_plus_even for row in rows]
    plus_odd = [row.mu_plus_odd for row in rows]
    n_max = 2 * rows[-1].k + 1 if rows else 3
    odd_even = odd_even_margins(n_max)
    reference = next((row for row in rows if row.k == _GAP_REFERENCE_K), rows[0]) if rows else None
    gap_shrinks = (
        reference is None
        or rows[-1].k <= reference.k
        or abs(rows[-1].mu_plus_even - OMEGA_HI) < abs(reference.mu_plus_even - OMEGA_HI)
    )
    return {
        'mu_minus_even_increasing': _strictly(minus_even, increasing=True),
        'mu_minus_odd_increasing': _strictly(minus_odd, increasing=True),
        'mu_plus_even_decreasing': _strictly(plus_even, increasing=False),
        'mu_plus_odd_decreasing': _strictly(plus_odd, increasing=False),
        'mu_minus_below_limit': all(v < OMEGA_LO for v in minus_even + minus_odd),
        'mu_plus_above_limit': all(v > OMEGA_HI for v in plus_even + plus_odd),
        'odd_orders_dominate': all(r.neg_margin >= -tol and r.pos_margin >= -tol for r in odd_even),
        'mu_plus_gap_shrinks': gap_shrinks,
    }


def sandwich(graph: ThresholdGraph) -> SandwichPair:
    """G' = (0^s 1^t)^k 取各块最小值，G'' = (0^σ 1^τ)^k 取各块最大值。"""
    s = min(b[0] for b in graph.blocks)
    t = min(b[1] for b in graph.blocks)
    sigma = max(b[0] for b in graph.blocks)
    tau = max(b[1] for b in graph.blocks)
    return SandwichPair(
        lower=ThresholdGraph(blocks=[(s, t)] * graph.k),
        upper=ThresholdGraph(blocks=[(sigma, tau)] * graph.k),
    )


def sandwich_embeddings(graph: ThresholdGraph) -> Tuple[Embedding, Embedding]:
    """G' 到 G、G 到 G'' 的嵌入，每个块内取最靠前的顶点。"""
    lower, upper = sandwich(graph)
    s, t = lower.blocks[0]
    inner = []
    for independent, clique in block_ranges(graph):
        inner.extend(independent[:s] + clique[:t])
    outer = []
    for (s_i, t_i), (independent, clique) in zip(graph.blocks, block_ranges(upper)):
        outer.extend(independent[:s_i] + clique[:t_i])
    return (
        Embedding(host=graph, guest=lower, indices=inner),
        Embedding(host=upper, guest=graph, indices=outer),
    )


def sandwich_check(graph: ThresholdGraph, tol: Optional[float] = None) -> CheckResult:
    """
    λ_i(G'') <= λ_i(G) <= λ_i(G')，i = 1..k；
    λ_{n'-j}(G') <= λ_{n-j}(G) <= λ_{n''-j}(G'')，j = 0..k-1。
    """
    tol = basic_config.tol if tol is None else tol
    lower, upper = sandwich(graph)
    g = spectrum_of(graph)
    lo_spec, up_spec = spectrum_of(lower), spectrum_of(upper)
    n, n_lower, n_upper = graph.n, lower.n, upper.n
    margins = []
    for i in range(1, graph.k + 1):
        margins.append(g.at(i) - up_spec.at(i))
        margins.append(lo_spec.at(i) - g.at(i))
    for j in range(graph.k):
        margins.append(g.at(n - j) - lo_spec.at(n_lower - j))
        margins.append(up_spec.at(n_upper - j) - g.at(n - j))
    worst = min(margins)
    return CheckResult(worst >= -tol, worst)


def closed_form_extremes(sigma: int, tau: int) -> Tuple[float, float]:
    """
    0^σ 1^τ 的两个非平凡特征值 ((τ-1) ± √((τ-1)² + 4τσ)) / 2。
    σ = 1 时图是完全图，lo 恰为 -1。
    """
    if sigma < 1 or tau < 1:
        raise ThresholdSpectraError(f"σ 与 τ 必须为正整数，实际为 ({sigma}, {tau})")
    root = math.sqrt((tau - 1) ** 2 + 4 * tau * sigma)
    return ((tau - 1) - root) / 2.0, ((tau - 1) + root) / 2.0


def closed_form_spectrum(sigma: int, tau: int) -> List[float]:
    lo, hi = closed_form_extremes(sigma, tau)
    return sorted([lo] + [-1.0] * (tau - 1) + [0.0] * (sigma - 1) + [hi])


def spectral_bounds(graph: ThresholdGraph) -> BoundsReport:
    """
    G_i = 0^{σ_i} 1^{τ_i} 是 G 的导出子图，σ_i 为前 i 块 s 之和，τ_i 为第 i 块起 t 之和。
    max hi_i <= λ_max(G)，λ_min(G) <= min lo_i。
    """
    rows = []
    sigma = 0
    for i, (s_i, _) in enumerate(graph.blocks):
        sigma += s_i
        tau = sum(t for _, t in graph.blocks[i:])
        lo, hi = closed_form_extremes(sigma, tau)
        rows.append(BlockBound(sigma=sigma, tau=tau, lo=lo, hi=hi))
    return BoundsReport(
        per_block=rows,
        lower_bound_lambda_max=max(row.hi for row in rows),
        upper_bound_lambda_min=min(row.lo for row in rows),
    )


def conjecture_margins(graph: ThresholdGraph) -> ConjectureMargins:
    """
    neg_margin = μ^-(A_n) - μ^-(G)，pos_margin = μ^+(G) - μ^+(A_n)；猜想预言两者非负。
    """
    spectrum = spectrum_of(graph)
    reference = antiregular_extremes(graph.n)
    graph_minus = mu_minus(spectrum)
    if graph_minus is None or reference.mu_minus is None:
        neg_margin = None
    else:
        neg_margin = reference.mu_minus - graph_minus
    return ConjectureMargins(neg_margin=neg_margin, pos_margin=mu_plus(spectrum) - reference.mu_plus)


def optimality_coverage(graph: ThresholdGraph) -> OptimalityCoverage:
    """
    交错法能证明的最优性部分。偶数 n：μ^+ 恒成立，μ^- 在 s_1 = 1 或 2k+2 < n 时成立；
    奇数 n：μ^- 恒成立，μ^+ 在 s_1 >= 2 或 2k+1 < n 时成立。其余为临界图。
    """
    n, k = graph.n, graph.k
    if n % 2 == 0:
        plus_proved = True
        minus_proved = graph.s1 == 1 or 2 * k + 2 < n
    else:
        minus_proved = True
        plus_proved = graph.s1 >= 2 or 2 * k + 1 < n
    coverage = OptimalityCoverage(plus_proved, minus_proved, not (plus_proved and minus_proved))
    if coverage.critical:
        log.debug(f"临界图 {graph.blocks}: {coverage}")
    return coverage
