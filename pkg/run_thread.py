#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import sys
import unittest
from concurrent.futures.thread import ThreadPoolExecutor
from common.log_handler import log
from common.path_handler import TEST_CASES


# CliRunner 会替换进程级的 sys.stdout，这些模块只能串行运行
SERIAL_MODULES = ('test_commands',)


def module_of(suite):
    """套件中第一个用例所在的模块名。"""
    for test in suite:
        if isinstance(test, unittest.TestSuite):
            name = module_of(test)
            if name:
                return name
        else:
            return type(test).__module__
    return None


def run_suite(suite):
    test_result = unittest.TestResult()
    suite.run(result=test_result)
    return test_result


class TestRunner:
    def __init__(self, thread_num=4):
        self.thread_num = thread_num
        self.test_case_path = TEST_CASES
        self.test_rule = 'test_*.py'

    def run_tests(self):
        """按测试模块并行运行，汇总为一个 TestResult。"""
        test_suite = unittest.defaultTestLoader.discover(self.test_case_path, self.test_rule)
        parallel, serial = [], []
        for suite in test_suite:
            name = module_of(suite) or ''
            (serial if name.rsplit('.', 1)[-1] in SERIAL_MODULES else parallel).append(suite)

        with ThreadPoolExecutor(max_workers=self.thread_num) as executor:
            results = list(executor.map(run_suite, parallel))
        results.extend(run_suite(suite) for suite in serial)

        final_result = unittest.TestResult()
        for test_result in results:
            final_result.testsRun += test_result.testsRun
            final_result.failures.extend(test_result.failures)
            final_result.errors.extend(test_result.errors)
            final_result.skipped.extend(test_result.skipped)
            final_result.expectedFailures.extend(test_result.expectedFailures)
            final_result.unexpectedSuccesses.extend(test_result.unexpectedSuccesses)
        log.info(f'共运行 {final_result.testsRun} 个用例，失败 {len(final_result.failures)}，错误 {len(final_result.errors)}')
        return final_result


if __name__ == '__main__':
    runner = TestRunner()
    result = runner.run_tests()
    print(result)
    sys.exit(0 if result.wasSuccessful() else 1)
