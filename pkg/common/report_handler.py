#!/usr/bin/env python
# _*_ coding:utf-8 _*_
import io
import os
import csv
import json
import math
from jinja2 import Environment, FileSystemLoader, StrictUndefined
from common.log_handler import log
from common.path_handler import REPORT_TEMPLATE_DIR
from config.basic_config import basic_config


FORMATS = ('text', 'json', 'csv')


class ReportHandler:
    def __init__(self, fmt='text', precision=None):
        if fmt not in FORMATS:
            raise ValueError(f"不支持的报告格式: {fmt}")
        precision = basic_config.precision if precision is None else precision
        if not 1 <= precision <= basic_config.max_precision:
            raise ValueError(f"精度必须在 1..{basic_config.max_precision} 之间，实际为 {precision}")
        self.fmt = fmt
        self.precision = precision
        self.environment = Environment(
            loader=FileSystemLoader(REPORT_TEMPLATE_DIR),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.environment.filters['num'] = self.format_number

    def normalize(self, value):
        """
        递归地把报告数据转换为 JSON 友好的结构，浮点数按精度舍入，-0.0 归为 0.0，非有限值记为 None。

        :param value: 报告中的任意值
        :return: 规范化后的值
        """
        if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                return None
            rounded = round(value, self.precision)
            return 0.0 if rounded == 0 else rounded
        if isinstance(value, dict):
            return {str(k): self.normalize(v) for k, v in value.items()}
        if hasattr(value, '_asdict'):
            return {k: self.normalize(v) for k, v in value._asdict().items()}
        if isinstance(value, (list, tuple)):
            return [self.normalize(v) for v in value]
        if hasattr(value, 'item'):
            # numpy 标量
            return self.normalize(value.item())
        return str(value)

    def format_number(self, value):
        if value is None:
            return 'NA'
        if isinstance(value, bool):
            return 'pass' if value else 'fail'
        if isinstance(value, float):
            return f"{value:.{self.precision}f}"
        if isinstance(value, (list, tuple)):
            return ' '.join(self.format_number(v) for v in value)
        return str(value)

    def render(self, report):
        """
        按格式渲染报告。

        :param report: 含 schema_version、command 与 table 的报告字典
        :return: 渲染后的文本
        """
        data = self.normalize(report)
        if self.fmt == 'json':
            # table 只是其它字段的行视图，JSON 中不重复输出
            data.pop('table', None)
            return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
        if self.fmt == 'csv':
            return self.render_csv(data['table'])
        try:
            template = self.environment.get_template(f"{data['command']}.txt")
            return template.render(report=data).rstrip('\n')
        except Exception as e:
            log.error(f'渲染文本报告失败: {e}')
            raise e

    def render_csv(self, table):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(table['columns'])
        for row in table['rows']:
            writer.writerow([self.format_number(cell) for cell in row])
        return buffer.getvalue().rstrip('\n')

    def write(self, content, out_path):
        """把渲染结果写入文件。"""
        directory = os.path.dirname(os.path.abspath(out_path))
        os.makedirs(directory, exist_ok=True)
        try:
            with open(out_path, 'w', encoding='utf-8', newline='') as f:
                f.write(content + '\n')
        except OSError as e:
            log.error(f'写入报告 {out_path} 失败: {e}')
            raise
        log.info(f'报告已写入 {out_path}')
        return out_path
