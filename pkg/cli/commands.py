#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行入口：单图分析（spectrum、bounds、embed）与批量核对（scan、parity、critical、extremal）。

退出码：0 成功；1 扫描发现定理违例；2 输入或用法错误。
"""
import sys
from functools import wraps
import click
from cli import __version__
from cli.reports import (
    bounds_report,
    critical_report,
    embed_report,
    extremal_report,
    parity_report,
    scan_report,
    spectrum_report,
)
from common.log_handler import log
from common.report_handler import FORMATS, ReportHandler
from config.basic_config import basic_config
from core.enumeration import KNOWN_CHECKS, scan
from core.exceptions import ThresholdSpectraError
from core.threshold_graph import parse_creation


EXIT_VIOLATION = 1
EXIT_USAGE = 2


def report_options(func):
    """--format、--precision、--out 三个输出选项。"""
    func = click.option('--out', type=click.Path(dir_okay=False), default=None,
                        help='Write the report to this file instead of stdout')(func)
    func = click.option('--precision', type=click.IntRange(1, basic_config.max_precision),
                        default=basic_config.precision, show_default=True,
                        help='Decimal places for numeric fields')(func)
    func = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text', show_default=True,
                        help='Output format')(func)
    return func


def domain_errors(func):
    """领域异常与报告文件写入失败统一按用法错误处理，退出码 2。"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ThresholdSpectraError, OSError) as e:
            log.error(f'{func.__name__} 失败: {e}')
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def emit(report, fmt, precision, out):
    handler = ReportHandler(fmt, precision)
    content = handler.render(report)
    if out:
        handler.write(content, out)
        click.echo(f"Report written to {out}", err=True)
    else:
        click.echo(content)


@click.group()
@click.version_option(version=__version__, prog_name='threshold-spectra')
def cli():
    """Spectral analysis of connected threshold graphs.

    Graphs are given by creation strings, either expanded ("0101") or in
    compact caret notation ("0^3 1^2 0^4 1^6").
    """


@cli.command('spectrum')
@click.argument('graph')
@report_options
@domain_errors
def cmd_spectrum(graph, fmt, precision, out):
    """Eigenvalues, inertia, mu-/mu+ and trivial multiplicities of GRAPH."""
    emit(spectrum_report(parse_creation(graph)), fmt, precision, out)


@cli.command('bounds')
@click.argument('graph')
@report_options
@domain_errors
def cmd_bounds(graph, fmt, precision, out):
    """Per-block closed-form bounds on the extreme eigenvalues of GRAPH."""
    emit(bounds_report(parse_creation(graph)), fmt, precision, out)


@cli.command('embed')
@click.argument('graph')
@report_options
@domain_errors
def cmd_embed(graph, fmt, precision, out):
    """Largest anti-regular subgraph and smallest anti-regular supergraph of GRAPH."""
    emit(embed_report(parse_creation(graph)), fmt, precision, out)


@cli.command('scan')
@click.argument('n', type=int)
@click.option('--checks', default=None,
              help=f"Comma separated checks, default all per-graph checks. Known: {','.join(KNOWN_CHECKS)}")
@click.option('--jobs', type=click.IntRange(min=1), default=basic_config.jobs, show_default=True,
              help='Worker threads')
@click.option('--cap', type=click.IntRange(min=2), default=basic_config.scan_cap, show_default=True,
              help='Largest order allowed')
@click.option('--timing', is_flag=True, help='Include wall time in the report')
@report_options
@domain_errors
def cmd_scan(n, checks, jobs, cap, timing, fmt, precision, out):
    """Run theorem checks on every connected threshold graph of order N."""
    selected = checks.split(',') if checks is not None else None
    report = scan(n, selected, jobs=jobs, cap=cap)
    emit(scan_report(report, timing), fmt, precision, out)
    if report.counterexamples:
        click.echo(f"Conjecture counterexample candidates: {len(report.counterexamples)}", err=True)
    if not report.passed:
        sys.exit(EXIT_VIOLATION)


@cli.command('parity')
@click.argument('k_max', type=int)
@click.option('--jobs', type=click.IntRange(min=1), default=basic_config.jobs, show_default=True,
              help='Worker threads')
@report_options
@domain_errors
def cmd_parity(k_max, jobs, fmt, precision, out):
    """mu-/mu+ of A_2k and A_2k+1 for k = 2..K_MAX with monotonicity verdicts."""
    emit(parity_report(k_max, jobs), fmt, precision, out)


@cli.command('critical')
@click.argument('n', type=int)
@report_options
@domain_errors
def cmd_critical(n, fmt, precision, out):
    """The n-2 critical graphs of order N with their conjecture margins."""
    emit(critical_report(n), fmt, precision, out)


@cli.command('extremal')
@click.argument('n', type=int)
@click.option('--cap', type=click.IntRange(min=3), default=basic_config.scan_cap, show_default=True,
              help='Largest order allowed')
@report_options
@domain_errors
def cmd_extremal(n, cap, fmt, precision, out):
    """Graph of order N minimizing the least eigenvalue, against the 0^(n-t) 1^t prediction."""
    emit(extremal_report(n, cap), fmt, precision, out)


def main():
    cli(prog_name='threshold-spectra')
