#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import unittest
from testcase.testcase.test_threshold_graph import TestThresholdGraph
from testcase.testcase.test_eigen_solver import TestEigenSolver
from testcase.testcase.test_spectral_analysis import TestSpectralAnalysis
from testcase.testcase.test_enumeration import TestEnumeration
from testcase.testcase.test_report_handler import TestReportHandler
from testcase.testcase.test_commands import TestCommands
from testcase.testcase.test_log_handler import TestLogHandler


class TestRunner:
    def __init__(self):
        self.loader = unittest.TestLoader()

    def run_tests(self, testcase_classes, verbosity=2):
        """
        :param testcase_classes: 引入的类名列表
        :param verbosity: 输出详细程度
        """
        suite = unittest.TestSuite()
        for testcase_class in testcase_classes:
            tests = self.loader.loadTestsFromTestCase(testcase_class)
            suite.addTests(tests)

        runner = unittest.TextTestRunner(verbosity=verbosity)
        return runner.run(suite)


if __name__ == '__main__':
    run_class = TestRunner()
    run_class.run_tests([
        TestThresholdGraph,
        TestEigenSolver,
        TestSpectralAnalysis,
        TestEnumeration,
        TestReportHandler,
        TestCommands,
        TestLogHandler,
    ])
