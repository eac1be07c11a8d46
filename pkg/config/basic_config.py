#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
import sys
import attr
import json
from datetime import datetime
from functools import lru_cache


CONFIG_FILE = os.path.join(os.path.dirname(__file__), 'basic_config.json')


@attr.s
class Config:
    # 测试用例所在目录名称，默认值为'testcase'
    project: str = attr.ib(default='testcase')
    # 测试人员名称，默认值为'CodeRex'
    tester_name: str = attr.ib(default='CodeRex')
    # 结果文件名，默认值为'report'
    result_filename: str = attr.ib(default='report')
    # 结果标题，默认值为'threshold spectra report'
    result_title: str = attr.ib(default='threshold spectra report')
    # 结果描述，默认值为'threshold graph spectral checks'
    result_description: str = attr.ib(default='threshold graph spectral checks')

    # 特征值分类容差（绝对值），默认值为 1e-6
    tol: float = attr.ib(default=1e-6)
    # 稠密矩阵允许的最大阶数，默认值为 4096
    max_order: int = attr.ib(default=4096)
    # 穷举扫描允许的最大阶数，默认值为 14（4096 个图）
    scan_cap: int = attr.ib(default=14)
    # 数值输出的小数位数，默认值为 6
    precision: int = attr.ib(default=6)
    # 数值输出允许的最大小数位数，默认值为 12
    max_precision: int = attr.ib(default=12)
    # 扫描与奇偶序列计算的默认线程数，默认值为 1
    jobs: int = attr.ib(default=1)
    # 报告结构版本号，默认值为'1.0'
    schema_version: str = attr.ib(default='1.0')

    # 日志文件级别，默认值为'INFO'
    log_level: str = attr.ib(default='INFO')
    # 控制台日志级别，默认值为'WARNING'
    console_log_level: str = attr.ib(default='WARNING')
    # 当前时间，格式为'年-月-日-时分秒微秒'，默认值为当前时间
    current_time: str = attr.ib(default=str(datetime.now().strftime('%Y-%m-%d-%H%M%S%f')))


@lru_cache
def _load_config():
    try:
        with open(CONFIG_FILE, mode='r', encoding='utf-8') as f:
            config_data = f.read()
            return Config(**json.loads(config_data))
    except Exception as e:
        print(f"读取配置时出现错误：{e}, 使用默认配置", file=sys.stderr)
        return Config()

basic_config = _load_config()
