#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from core.threshold_graph import (
    Embedding,
    ThresholdGraph,
    adjacency,
    antiregular,
    parse_creation,
    to_compact,
    to_string,
)
from core.eigen_solver import Spectrum, eigenvalues
from core.spectral_analysis import spectrum_of


def spectrum(text):
    """解析创建串并返回其邻接矩阵的谱。"""
    return spectrum_of(parse_creation(text))
