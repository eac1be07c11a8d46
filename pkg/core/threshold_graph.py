#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
阈值图的构造、编码与子图关系。

顶点编号在所有接口中都从 1 开始，与创建串 b_1 b_2 ... b_n 的规范标号一致。
"""
import re
import attr
import numpy as np
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple
from config.basic_config import basic_config
from core.exceptions import (
    CreationStringError,
    DisconnectedGraphError,
    GraphOrderError,
    InvalidEmbeddingError,
    NonSymmetricMatrixError,
)


# 紧凑记法的单个片段，例如 '0^3'、'1^12'，以及省略指数的 '0'
_COMPACT_TOKEN = re.compile(r'^([01])\^(\d+)$')
# 展开的二进制片段，例如 '0101'
_BINARY_TOKEN = re.compile(r'^[01]+$')


def _freeze_blocks(blocks):
    return tuple((int(s), int(t)) for s, t in blocks)


def _check_blocks(instance, attribute, value):
    if not value:
        raise CreationStringError("块列表不能为空")
    for s, t in value:
        if s < 1 or t < 1:
            raise CreationStringError(f"块 ({s}, {t}) 中的计数必须为正整数")


@attr.s(frozen=True)
class ThresholdGraph:
    # 创建串 0^{s_1}1^{t_1}...0^{s_k}1^{t_k} 的游程形式
    blocks: Tuple[Tuple[int, int], ...] = attr.ib(converter=_freeze_blocks, validator=_check_blocks)

    @property
    def n(self) -> int:
        return sum(s + t for s, t in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def s(self) -> int:
        return sum(s for s, _ in self.blocks)

    @property
    def t(self) -> int:
        return sum(t for _, t in self.blocks)

    @property
    def s1(self) -> int:
        return self.blocks[0][0]

    def __str__(self):
        return to_string(self)


@attr.s(frozen=True)
class SymmetricMatrix:
    order: int = attr.ib()
    entries: np.ndarray = attr.ib(eq=False, repr=False)

    @entries.validator
    def _check_entries(self, attribute, value):
        if value.shape != (self.order, self.order):
            raise NonSymmetricMatrixError(f"矩阵形状 {value.shape} 与阶数 {self.order} 不符")
        scale = max(1.0, float(np.max(np.abs(value)))) if value.size else 1.0
        if value.size and np.max(np.abs(value - value.T)) > np.finfo(float).eps * scale:
            raise NonSymmetricMatrixError("矩阵不对称")

    @classmethod
    def from_array(cls, data) -> 'SymmetricMatrix':
        array = np.array(data, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise NonSymmetricMatrixError(f"需要方阵，实际形状为 {array.shape}")
        array.setflags(write=False)
        return cls(order=array.shape[0], entries=array)

    def submatrix(self, indices: Sequence[int]) -> 'SymmetricMatrix':
        """按 1 起始的下标取主子矩阵。"""
        positions = [i - 1 for i in indices]
        return SymmetricMatrix.from_array(self.entries[np.ix_(positions, positions)])


@attr.s(frozen=True)
class Embedding:
    host: ThresholdGraph = attr.ib()
    guest: ThresholdGraph = attr.ib()
    indices: Tuple[int, ...] = attr.ib(converter=tuple)

    @indices.validator
    def _check_indices(self, attribute, value):
        if len(value) != self.guest.n:
            raise InvalidEmbeddingError(f"下标个数 {len(value)} 与客体阶数 {self.guest.n} 不符")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise InvalidEmbeddingError(f"下标必须严格递增: {value}")
        if value[0] < 1 or value[-1] > self.host.n:
            raise InvalidEmbeddingError(f"下标超出范围 1..{self.host.n}: {value}")
        # 后加入的顶点决定它与之前所有顶点的邻接关系，因此除第一个外逐字符比较即可
        host_string, guest_string = to_string(self.host), to_string(self.guest)
        for j in range(1, len(value)):
            if host_string[value[j] - 1] != guest_string[j]:
                raise InvalidEmbeddingError(
                    f"宿主第 {value[j]} 个字符与客体第 {j + 1} 个字符不一致"
                )


@attr.s(frozen=True)
class PartitionCell:
    label: str = attr.ib()
    vertices: Tuple[int, ...] = attr.ib(converter=tuple)


@attr.s(frozen=True)
class DegreePartition:
    graph: ThresholdGraph = attr.ib()
    cells: Tuple[PartitionCell, ...] = attr.ib(converter=tuple)

    def is_consistent(self) -> bool:
        """
        用邻接矩阵核对度划分：各 U_i 独立，全部 V_i 的并是团，
        U_i 恰好与 V_i ∪ ... ∪ V_k 相邻，且所有单元恰好划分 {1..n}。
        """
        n = self.graph.n
        covered = sorted(v for cell in self.cells for v in cell.vertices)
        if covered != list(range(1, n + 1)):
            return False
        matrix = adjacency(self.graph).entries
        ranges = block_ranges(self.graph)
        clique = [v - 1 for _, group in ranges for v in group]
        expected_clique = np.ones((len(clique), len(clique))) - np.eye(len(clique))
        if not np.array_equal(matrix[np.ix_(clique, clique)], expected_clique):
            return False
        for i, (independent, _) in enumerate(ranges):
            rows = [v - 1 for v in independent]
            if np.any(matrix[np.ix_(rows, rows)]):
                return False
            expected = np.zeros(n)
            for _, group in ranges[i:]:
                expected[[v - 1 for v in group]] = 1.0
            if not all(np.array_equal(matrix[row], expected) for row in rows):
                return False
        return True


class AntiregularEmbedding(NamedTuple):
    order: int
    embedding: Embedding


class MultiplicityBounds(NamedTuple):
    minus_one: int
    zero: int


def _merge_runs(pieces: Sequence[Tuple[str, int]]) -> List[Tuple[str, int]]:
    runs: List[Tuple[str, int]] = []
    for char, count in pieces:
        if runs and runs[-1][0] == char:
            runs[-1] = (char, runs[-1][1] + count)
        else:
            runs.append((char, count))
    return runs


def _graph_from_runs(runs: Sequence[Tuple[str, int]]) -> ThresholdGraph:
    if not runs:
        raise CreationStringError("创建串为空")
    if runs[0][0] == '1':
        raise CreationStringError("创建串必须以 0 开头（b_1 = 0）")
    if runs[-1][0] == '0':
        raise DisconnectedGraphError("创建串以 0 结尾，图不连通")
    return ThresholdGraph(blocks=[(runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2)])


def _runs_of(expanded: str) -> List[Tuple[str, int]]:
    return _merge_runs([(char, 1) for char in expanded])


def parse_creation(text: str) -> ThresholdGraph:
    """
    解析创建串，支持展开的二进制串（'0101'）和紧凑记法（'0^3 1^2 0^4 1^6'）。
    两种片段可以混用，片段之间以空白分隔。

    :param text: 创建串文本
    :return: 块形式的阈值图
    """
    if not isinstance(text, str):
        raise CreationStringError(f"创建串必须是字符串，实际为 {type(text).__name__}")
    tokens = text.split()
    if not tokens:
        raise CreationStringError("创建串为空")
    pieces = []
    for token in tokens:
        compact = _COMPACT_TOKEN.match(token)
        if compact is not None:
            count = int(compact.group(2))
            if count == 0:
                raise CreationStringError(f"片段 {token!r} 的指数必须为正")
            pieces.append((compact.group(1), count))
        elif _BINARY_TOKEN.match(token):
            pieces.extend((char, 1) for char in token)
        else:
            raise CreationStringError(f"无法识别的片段: {token!r}")
    n = sum(count for _, count in pieces)
    if n > basic_config.max_order:
        raise GraphOrderError(f"阶数 {n} 超过上限 {basic_config.max_order}")
    return _graph_from_runs(_merge_runs(pieces))


@lru_cache(maxsize=4096)
def to_string(graph: ThresholdGraph) -> str:
    return ''.join('0' * s + '1' * t for s, t in graph.blocks)


def to_compact(graph: ThresholdGraph) -> str:
    """紧凑记法，计数为 1 时省略指数，例如 '0^2 1^2 0 1 0 1'。"""
    tokens = []
    for s, t in graph.blocks:
        tokens.append('0' if s == 1 else f'0^{s}')
        tokens.append('1' if t == 1 else f'1^{t}')
    return ' '.join(tokens)


def block_ranges(graph: ThresholdGraph) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """每个块的 (U_i, V_i) 顶点编号。"""
    ranges = []
    start = 1
    for s, t in graph.blocks:
        independent = tuple(range(start, start + s))
        clique = tuple(range(start + s, start + s + t))
        ranges.append((independent, clique))
        start += s + t
    return ranges


@lru_cache(maxsize=1024)
def adjacency(graph: ThresholdGraph) -> SymmetricMatrix:
    """对 i < j，当且仅当 b_j = 1 时 v_i 与 v_j 相邻。"""
    n = graph.n
    if n > basic_config.max_order:
        raise GraphOrderError(f"阶数 {n} 超过稠密矩阵上限 {basic_config.max_order}")
    dominating = np.fromiter((char == '1' for char in to_string(graph)), dtype=float, count=n)
    upper = np.triu(np.tile(dominating, (n, 1)), k=1)
    return SymmetricMatrix.from_array(upper + upper.T)


def edge_count(graph: ThresholdGraph) -> int:
    return sum(j for j, char in enumerate(to_string(graph)) if char == '1')


def triangle_count(graph: ThresholdGraph) -> int:
    # 支配顶点 v_j 与之前的每条边构成一个三角形
    triangles = edges = 0
    for j, char in enumerate(to_string(graph)):
        if char == '1':
            triangles += edges
            edges += j
    return triangles


def degree_partition(graph: ThresholdGraph) -> DegreePartition:
    cells = []
    for i, (independent, clique) in enumerate(block_ranges(graph), start=1):
        if i == 1 and graph.s1 == 1:
            cells.append(PartitionCell('U1+V1', independent + clique))
        else:
            cells.append(PartitionCell(f'U{i}', independent))
            cells.append(PartitionCell(f'V{i}', clique))
    return DegreePartition(graph=graph, cells=cells)


def antiregular(n: int) -> ThresholdGraph:
    """A_n：偶数阶为 0101...01，奇数阶为 00101...01。"""
    if n < 2:
        raise GraphOrderError(f"反正则图的阶数至少为 2，实际为 {n}")
    if n % 2 == 0:
        return ThresholdGraph(blocks=[(1, 1)] * (n // 2))
    return ThresholdGraph(blocks=[(2, 1)] + [(1, 1)] * ((n - 3) // 2))


def _leftmost_match(host: str, pattern: str) -> Optional[List[int]]:
    """贪心地取最靠左的子序列位置，得到字典序最小的下标集。"""
    indices = []
    position = 0
    for char in pattern:
        position = host.find(char, position)
        if position < 0:
            return None
        indices.append(position + 1)
        position += 1
    return indices


def largest_antiregular_subgraph(graph: ThresholdGraph) -> AntiregularEmbedding:
    """
    G 中最大的反正则导出子图 A_m：s_1 = 1 时 m = 2k，s_1 >= 2 时 m = 2k + 1。

    :param graph: 连通阈值图
    :return: (m, A_m 到 G 的嵌入)
    """
    m = 2 * graph.k if graph.s1 == 1 else 2 * graph.k + 1
    guest = antiregular(m)
    indices = _leftmost_match(to_string(graph), to_string(guest))
    if indices is None:
        raise InvalidEmbeddingError(f"{to_string(graph)} 中找不到 A_{m} 的子串")
    return AntiregularEmbedding(m, Embedding(host=graph, guest=guest, indices=indices))


def smallest_antiregular_supergraph(graph: ThresholdGraph) -> AntiregularEmbedding:
    """
    包含 G 的最小反正则图 A_N：s_1 = 1 时 N = 2(n-k)，s_1 >= 2 时 N = 2(n-k) - 1。
    在交替串中贪心匹配，相当于在连续的 1 之间插入 0、在连续的 0 之间插入 1。

    :param graph: 连通阈值图
    :return: (N, G 到 A_N 的嵌入)
    """
    n, k = graph.n, graph.k
    order = 2 * (n - k) if graph.s1 == 1 else 2 * (n - k) - 1
    host = antiregular(order)
    indices = _leftmost_match(to_string(host), to_string(graph))
    if indices is None:
        raise InvalidEmbeddingError(f"A_{order} 中找不到子串 {to_string(graph)}")
    return AntiregularEmbedding(order, Embedding(host=host, guest=graph, indices=indices))


def submatrix_matches(embedding: Embedding) -> bool:
    """宿主在下标上的主子矩阵是否逐项等于客体的邻接矩阵。"""
    host = adjacency(embedding.host)
    guest = adjacency(embedding.guest)
    return bool(np.array_equal(host.submatrix(embedding.indices).entries, guest.entries))


def induced_subgraph(graph: ThresholdGraph, indices: Sequence[int]) -> ThresholdGraph:
    """
    顶点集 indices 导出的子图。子串首字符一律视为 0：
    在空图上加入的支配顶点与孤立顶点没有区别。
    """
    indices = list(indices)
    if not indices:
        raise InvalidEmbeddingError("顶点集不能为空")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise InvalidEmbeddingError(f"顶点集必须严格递增: {indices}")
    if indices[0] < 1 or indices[-1] > graph.n:
        raise InvalidEmbeddingError(f"顶点超出范围 1..{graph.n}: {indices}")
    expanded = to_string(graph)
    substring = '0' + ''.join(expanded[i - 1] for i in indices[1:])
    return _graph_from_runs(_runs_of(substring))


def duplicate_classes(graph: ThresholdGraph) -> List[Tuple[int, ...]]:
    """重复顶点类：各 U_i；s_1 = 1 时 U_1 并入 V_1，不单独成类。"""
    classes = []
    for i, (independent, _) in enumerate(block_ranges(graph)):
        if i == 0 and graph.s1 == 1:
            continue
        classes.append(independent)
    return classes


def coduplicate_classes(graph: ThresholdGraph) -> List[Tuple[int, ...]]:
    """余重复顶点类：各 V_i；s_1 = 1 时 V_1 吸收 U_1。"""
    classes = []
    for i, (independent, clique) in enumerate(block_ranges(graph)):
        if i == 0 and graph.s1 == 1:
            classes.append(independent + clique)
        else:
            classes.append(clique)
    return classes


def trivial_multiplicity_lower_bounds(graph: ThresholdGraph) -> MultiplicityBounds:
    """一个 X 类贡献 |X| - 1 重的平凡特征值（余重复对应 -1，重复对应 0）。"""
    return MultiplicityBounds(
        minus_one=sum(len(cls) - 1 for cls in coduplicate_classes(graph)),
        zero=sum(len(cls) - 1 for cls in duplicate_classes(graph)),
    )
