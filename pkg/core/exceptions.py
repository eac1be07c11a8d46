#!/usr/bin/env python3
# -*- coding: utf-8 -*-


class ThresholdSpectraError(ValueError):
    """所有领域异常的基类。"""


class CreationStringError(ThresholdSpectraError):
    """创建串无法解析：空串、非法字符、以 1 开头或指数为 0。"""


class DisconnectedGraphError(CreationStringError):
    """创建串以 0 结尾，对应的图不连通。"""


class GraphOrderError(ThresholdSpectraError):
    """图的阶数超出支持范围。"""


class InvalidEmbeddingError(ThresholdSpectraError):
    """嵌入的下标列表不合法，或宿主子矩阵与客体邻接矩阵不一致。"""


class NonSymmetricMatrixError(ThresholdSpectraError):
    """输入矩阵不对称。"""


class NoPositiveEigenvalueError(ThresholdSpectraError):
    """谱中不存在正特征值。"""


class UnknownCheckError(ThresholdSpectraError):
    """扫描收到未知的检查名称。"""
