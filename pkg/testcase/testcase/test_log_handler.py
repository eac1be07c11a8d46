#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from common.log_handler import brief, log, log_record
from core.basic_unit import Unit
from core.exceptions import GraphOrderError


@log_record
def _double(values):
    return [2 * v for v in values]


@log_record
def _reject(n):
    raise GraphOrderError(f"阶数 {n} 太小")


class TestLogHandler(Unit):
    def test_brief_truncates_long_values(self):
        text = brief(list(range(100)))
        self.assertTrue(text.startswith('[0, 1, 2'))
        self.assertIn('...', text)
        self.assertLess(len(text), 60)

    def test_log_record_keeps_result_and_name(self):
        self.assertEqual(_double(range(3)), [0, 2, 4])
        self.assertEqual(_double.__name__, '_double')

    def test_log_record_logs_and_reraises(self):
        messages = []
        sink = log.add(messages.append, level='ERROR')
        try:
            with self.assertRaises(GraphOrderError):
                _reject(1)
        finally:
            log.remove(sink)
        self.assertTrue(any('_reject' in str(message) for message in messages))
