#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import unittest
import numpy as np
from common.log_handler import log
from core.threshold_graph import Embedding, adjacency


class Unit(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    @classmethod
    def setUpClass(cls) -> None:
        pass

    @classmethod
    def tearDownClass(cls) -> None:
        pass

    def setUp(self) -> None:
        log.info(f'Running test case: {self._testMethodName}.')

    def tearDown(self) -> None:
        log.info('Test case ended.')

    def assertSpectrumClose(self, actual, expected, delta=1e-8, msg=None):
        """两个谱逐项比较，接受 Spectrum 或数值序列。"""
        actual = list(getattr(actual, 'values', actual))
        expected = list(getattr(expected, 'values', expected))
        self.assertEqual(len(actual), len(expected), msg)
        for a, e in zip(actual, expected):
            self.assertAlmostEqual(a, e, delta=delta, msg=msg)

    def assertEmbeddingValid(self, embedding: Embedding, msg=None):
        """宿主在下标上的主子矩阵逐项等于客体的邻接矩阵。"""
        host = adjacency(embedding.host)
        guest = adjacency(embedding.guest)
        sub = host.submatrix(embedding.indices)
        self.assertTrue(np.array_equal(sub.entries, guest.entries), msg)

    def assertMarginAtLeast(self, margin, floor, msg=None):
        self.assertIsNotNone(margin, msg)
        self.assertGreaterEqual(margin, floor, msg)
