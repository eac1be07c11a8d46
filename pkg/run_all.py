#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
import sys
import unittest
from XTestRunner import HTMLTestRunner
from common.log_handler import log
from config.basic_config import basic_config
from common.path_handler import TEST_CASES, HTML_REPORT_DIR


class TestRunner:
    def __init__(self, test_rule='test_*.py'):
        self.test_case_path = TEST_CASES
        self.test_rule = test_rule

    def generate_html_report(self, filename=f"{basic_config.result_filename}_{basic_config.current_time}.html"):
        """
        生成 HTML 测试报告。
        """
        os.makedirs(HTML_REPORT_DIR, exist_ok=True)
        report_file = os.path.join(HTML_REPORT_DIR, filename)
        try:
            fp = open(report_file, 'wb')
            runner = HTMLTestRunner(
                stream=fp,
                title=basic_config.result_title,
                verbosity=2,
                tester=basic_config.tester_name,
                description=basic_config.result_description,
                language='zh-CN'
            )
            return runner, fp, report_file
        except Exception as e:
            log.error(f'创建 HTML 报告文件失败: {e}')
            raise e

    def run_tests(self):
        """
        发现 testcase/testcase 下的全部用例，用 HTMLTestRunner 生成测试报告。
        """
        test_suite = unittest.defaultTestLoader.discover(self.test_case_path, self.test_rule)
        runner, fp, report_file = self.generate_html_report()
        try:
            result = runner.run(test_suite)
        except Exception as e:
            log.error('运行异常：{}'.format(e))
            raise
        finally:
            fp.close()
        log.info(f'测试报告已生成: {report_file}')
        return result


if __name__ == '__main__':
    test_runner = TestRunner(sys.argv[1] if len(sys.argv) > 1 else 'test_*.py')
    outcome = test_runner.run_tests()
    sys.exit(0 if outcome.wasSuccessful() else 1)
