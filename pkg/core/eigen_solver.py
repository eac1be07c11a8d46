#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
稠密对称矩阵的确定性特征值求解与谱分类。

求解分两步：Householder 相似变换化为三对角形，再用隐式位移 QL 迭代求三对角矩阵的特征值。
另外提供基于 Sturm 计数的二分法，作为独立的校验手段。
"""
import math
import attr
import numpy as np
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union
from config.basic_config import basic_config
from core.exceptions import GraphOrderError, NoPositiveEigenvalueError, NonSymmetricMatrixError
from core.threshold_graph import SymmetricMatrix


_EPS = np.finfo(float).eps
# QL 迭代中单个特征值允许的最大扫描次数
_MAX_SWEEPS = 60
# 二分法的迭代次数，足以把区间缩到机器精度
_BISECTION_STEPS = 100


def _sorted_values(value):
    return tuple(sorted(float(v) for v in value))


@attr.s(frozen=True)
class Spectrum:
    # 升序排列的特征值
    values: Tuple[float, ...] = attr.ib(converter=_sorted_values)
    # 分类容差（绝对值）
    tol: float = attr.ib(default=basic_config.tol)

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def lambda_min(self) -> float:
        return self.values[0]

    @property
    def lambda_max(self) -> float:
        return self.values[-1]

    def at(self, index: int) -> float:
        """按 1 起始的位置取 λ_index。"""
        return self.values[index - 1]


@attr.s(frozen=True)
class InertiaTriple:
    negatives: int = attr.ib()
    zeros: int = attr.ib()
    positives: int = attr.ib()

    @property
    def order(self) -> int:
        return self.negatives + self.zeros + self.positives

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.negatives, self.zeros, self.positives


class Tridiagonal(NamedTuple):
    diagonal: np.ndarray
    offdiagonal: np.ndarray


MatrixLike = Union[SymmetricMatrix, np.ndarray, list]


def as_symmetric_matrix(matrix: MatrixLike) -> SymmetricMatrix:
    if isinstance(matrix, SymmetricMatrix):
        return matrix
    return SymmetricMatrix.from_array(matrix)


def _checked(matrix: MatrixLike) -> SymmetricMatrix:
    matrix = as_symmetric_matrix(matrix)
    if matrix.order < 1:
        raise NonSymmetricMatrixError("矩阵阶数至少为 1")
    if matrix.order > basic_config.max_order:
        raise GraphOrderError(f"矩阵阶数 {matrix.order} 超过上限 {basic_config.max_order}")
    return matrix


def tridiagonalize(matrix: MatrixLike) -> Tridiagonal:
    """
    Householder 相似变换 T = P^T A P，只保留三对角部分，不累积变换矩阵。

    :param matrix: 对称矩阵
    :return: (对角线, 次对角线)
    """
    matrix = _checked(matrix)
    a = np.array(matrix.entries, dtype=float)
    n = matrix.order
    diagonal = np.zeros(n)
    offdiagonal = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1:, k]
        norm_x = math.sqrt(float(np.dot(x, x)))
        diagonal[k] = a[k, k]
        if norm_x == 0.0:
            continue
        alpha = -norm_x if x[0] >= 0.0 else norm_x
        u = x.copy()
        u[0] -= alpha
        h = float(np.dot(u, u)) / 2.0
        trailing = a[k + 1:, k + 1:]
        p = trailing @ u / h
        g = float(np.dot(u, p)) / (2.0 * h)
        q = p - g * u
        trailing -= np.outer(q, u) + np.outer(u, q)
        offdiagonal[k] = alpha
    if n >= 2:
        diagonal[n - 2] = a[n - 2, n - 2]
        offdiagonal[n - 2] = a[n - 1, n - 2]
    diagonal[n - 1] = a[n - 1, n - 1]
    return Tridiagonal(diagonal, offdiagonal)


def _implicit_ql(diagonal: np.ndarray, offdiagonal: np.ndarray) -> List[float]:
    d = [float(v) for v in diagonal]
    n = len(d)
    # e[i] 连接 d[i] 与 d[i+1]，末尾补 0
    e = [float(v) for v in offdiagonal] + [0.0]
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                scale = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * scale:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_SWEEPS:
                raise ArithmeticError(f"QL 迭代在第 {l} 个特征值处不收敛")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def eigenvalues(matrix: MatrixLike, tol: Optional[float] = None) -> Spectrum:
    """
    对称矩阵的全部特征值，升序。相同输入得到逐位相同的输出。

    :param matrix: 对称矩阵（SymmetricMatrix 或可转换为方阵的数组）
    :param tol: 分类容差，默认取配置中的 tol
    :return: 谱
    """
    tridiagonal = tridiagonalize(matrix)
    values = _implicit_ql(tridiagonal.diagonal, tridiagonal.offdiagonal)
    return Spectrum(values=values, tol=basic_config.tol if tol is None else tol)


def sturm_count(diagonal: Sequence[float], offdiagonal: Sequence[float], x: float) -> int:
    """三对角矩阵小于 x 的特征值个数（LDL^T 主元中负数的个数）。"""
    count = 0
    pivot = 1.0
    for i in range(len(diagonal)):
        coupling = float(offdiagonal[i - 1]) ** 2 if i > 0 else 0.0
        pivot = float(diagonal[i]) - x - (coupling / pivot if i > 0 else 0.0)
        if pivot == 0.0:
            pivot = -_EPS * (abs(x) + 1.0)
        if pivot < 0.0:
            count += 1
    return count


def bisection_eigenvalues(matrix: MatrixLike, tol: Optional[float] = None) -> Spectrum:
    """
    用 Sturm 计数二分求每个特征值，与 QL 迭代互不依赖，用作校验。
    第 j 个特征值是使计数超过 j 的最小 x。
    """
    diagonal, offdiagonal = tridiagonalize(matrix)
    n = len(diagonal)
    radius = np.zeros(n)
    radius[:-1] += np.abs(offdiagonal)
    radius[1:] += np.abs(offdiagonal)
    lower = float(np.min(diagonal - radius)) - 1.0
    upper = float(np.max(diagonal + radius)) + 1.0
    diagonal, offdiagonal = diagonal.tolist(), offdiagonal.tolist()
    values = []
    for j in range(n):
        lo, hi = lower, upper
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if sturm_count(diagonal, offdiagonal, mid) > j:
                hi = mid
            else:
                lo = mid
        values.append(0.5 * (lo + hi))
    return Spectrum(values=values, tol=basic_config.tol if tol is None else tol)


def inertia_numeric(spectrum: Spectrum) -> InertiaTriple:
    tol = spectrum.tol
    return InertiaTriple(
        negatives=sum(1 for v in spectrum.values if v < -tol),
        zeros=sum(1 for v in spectrum.values if abs(v) <= tol),
        positives=sum(1 for v in spectrum.values if v > tol),
    )


def mu_minus(spectrum: Spectrum) -> Optional[float]:
    """小于 -1 的最大特征值，不存在时返回 None。"""
    below = [v for v in spectrum.values if v < -1.0 - spectrum.tol]
    return below[-1] if below else None


def mu_plus(spectrum: Spectrum) -> float:
    """最小的正特征值。"""
    for v in spectrum.values:
        if v > spectrum.tol:
            return v
    raise NoPositiveEigenvalueError("谱中没有正特征值")


def multiplicity(spectrum: Spectrum, target: float) -> int:
    return sum(1 for v in spectrum.values if abs(v - target) <= spectrum.tol)


def spectral_moments(spectrum: Spectrum, power: int) -> float:
    return math.fsum(v ** power for v in spectrum.values)
