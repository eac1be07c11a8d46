#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
各子命令的报告数据。每个报告都是普通字典，带 schema_version 与 command，
table 字段给出 CSV 与文本表格共用的行。
"""
from typing import Any, Dict, Optional
from config.basic_config import basic_config
from core.eigen_solver import inertia_numeric, mu_minus, mu_plus, multiplicity
from core.enumeration import ScanReport, critical_graphs, extremal_min_eigenvalue, predicted_min_eigenvalue_graph
from core.spectral_analysis import (
    conjecture_margins,
    free_interval,
    inertia_formula,
    mu_indices,
    nontrivial_counts,
    optimality_coverage,
    parity_sequences,
    parity_verdicts,
    sandwich,
    sandwich_check,
    spectral_bounds,
    spectrum_of,
    trivial_multiplicities,
    verify_interlacing,
)
from core.threshold_graph import (
    ThresholdGraph,
    largest_antiregular_subgraph,
    smallest_antiregular_supergraph,
    submatrix_matches,
    to_compact,
    to_string,
)


def _verdict(flag: bool) -> str:
    return 'pass' if flag else 'fail'


def _base(command: str, **fields) -> Dict[str, Any]:
    report = {'schema_version': basic_config.schema_version, 'command': command}
    report.update(fields)
    return report


def _graph_input(graph: ThresholdGraph) -> Dict[str, Any]:
    return {'creation': to_string(graph), 'compact': to_compact(graph), 'n': graph.n, 'k': graph.k}


def _eigenvalue_kind(value: float, tol: float) -> str:
    if abs(value + 1.0) <= tol:
        return 'trivial(-1)'
    if abs(value) <= tol:
        return 'trivial(0)'
    return 'nontrivial'


def spectrum_report(graph: ThresholdGraph) -> Dict[str, Any]:
    spectrum = spectrum_of(graph)
    indices = mu_indices(graph)
    interval = free_interval(graph)
    expected = trivial_multiplicities(graph)
    counts = nontrivial_counts(graph)
    rows = [[i, value, _eigenvalue_kind(value, spectrum.tol)] for i, value in enumerate(spectrum.values, start=1)]
    return _base(
        'spectrum',
        input=_graph_input(graph),
        eigenvalues=list(spectrum.values),
        inertia={
            'numeric': list(inertia_numeric(spectrum).as_tuple()),
            'formula': list(inertia_formula(graph).as_tuple()),
        },
        mu_minus={'value': mu_minus(spectrum), 'index': indices.mu_minus},
        mu_plus={'value': mu_plus(spectrum), 'index': indices.mu_plus},
        trivial_multiplicities={
            'minus_one': expected.minus_one,
            'zero': expected.zero,
            'observed_minus_one': multiplicity(spectrum, -1.0),
            'observed_zero': multiplicity(spectrum, 0.0),
        },
        nontrivial_counts={'negatives': counts.negatives, 'positives': counts.positives},
        free_interval={'lo': interval.lo, 'hi': interval.hi, 'source': interval.source},
        table={'columns': ['index', 'eigenvalue', 'kind'], 'rows': rows},
    )


def bounds_report(graph: ThresholdGraph) -> Dict[str, Any]:
    bounds = spectral_bounds(graph)
    spectrum = spectrum_of(graph)
    tol = basic_config.tol
    rows = [[i, row.sigma, row.tau, row.lo, row.hi] for i, row in enumerate(bounds.per_block, start=1)]
    return _base(
        'bounds',
        input=_graph_input(graph),
        per_block=[
            {'block': i, 'sigma': row.sigma, 'tau': row.tau, 'lo': row.lo, 'hi': row.hi}
            for i, row in enumerate(bounds.per_block, start=1)
        ],
        lower_bound_lambda_max=bounds.lower_bound_lambda_max,
        upper_bound_lambda_min=bounds.upper_bound_lambda_min,
        lambda_min=spectrum.lambda_min,
        lambda_max=spectrum.lambda_max,
        bounds_hold=_verdict(
            bounds.lower_bound_lambda_max <= spectrum.lambda_max + tol
            and spectrum.lambda_min - tol <= bounds.upper_bound_lambda_min
        ),
        table={'columns': ['block', 'sigma', 'tau', 'lo', 'hi'], 'rows': rows},
    )


def embed_report(graph: ThresholdGraph) -> Dict[str, Any]:
    m, inner = largest_antiregular_subgraph(graph)
    order, outer = smallest_antiregular_supergraph(graph)
    inner_check = verify_interlacing(graph, inner.guest, inner)
    outer_check = verify_interlacing(outer.host, graph, outer)
    lower, upper = sandwich(graph)
    sandwich_result = sandwich_check(graph)
    subgraph = {
        'order': m,
        'graph': to_compact(inner.guest),
        'indices': list(inner.indices),
        'valid': _verdict(submatrix_matches(inner)),
        'interlacing': _verdict(inner_check.passed),
        'worst_margin': inner_check.worst_margin,
    }
    supergraph = {
        'order': order,
        'graph': to_compact(outer.host),
        'indices': list(outer.indices),
        'valid': _verdict(submatrix_matches(outer)),
        'interlacing': _verdict(outer_check.passed),
        'worst_margin': outer_check.worst_margin,
    }
    columns = ['relation', 'order', 'graph', 'indices', 'valid', 'interlacing', 'worst_margin']
    rows = [['subgraph'] + [subgraph[c] for c in columns[1:]], ['supergraph'] + [supergraph[c] for c in columns[1:]]]
    return _base(
        'embed',
        input=_graph_input(graph),
        m=m,
        N=order,
        subgraph=subgraph,
        supergraph=supergraph,
        sandwich={
            'lower': to_compact(lower),
            'upper': to_compact(upper),
            'check': _verdict(sandwich_result.passed),
            'worst_margin': sandwich_result.worst_margin,
        },
        table={'columns': columns, 'rows': rows},
    )


def scan_report(report: ScanReport, timing: bool = False) -> Dict[str, Any]:
    rows = []
    for v in report.violations:
        rows.append(['violation', v.creation, v.check, v.margin])
    for c in report.counterexamples:
        rows.append(['counterexample', c.creation, c.statistic, c.margin])
    for statistic in sorted(report.extremal):
        record = report.extremal[statistic]
        rows.append(['extremal', record.creation, statistic, record.value])
    for entry in report.critical_margins:
        rows.append(['critical', entry.creation, 'neg_margin', entry.neg_margin])
        rows.append(['critical', entry.creation, 'pos_margin', entry.pos_margin])
    data = _base(
        'scan',
        n=report.n,
        graphs_scanned=report.graphs_scanned,
        checks_run=list(report.checks_run),
        passed=report.passed,
        violations=[v._asdict() for v in report.violations],
        counterexamples=[c._asdict() for c in report.counterexamples],
        extremal={name: record._asdict() for name, record in report.extremal.items()},
        critical=[entry._asdict() for entry in report.critical_margins],
        table={'columns': ['record', 'creation', 'name', 'value'], 'rows': rows},
    )
    if timing:
        data['wall_time'] = report.wall_time
    return data


def parity_report(k_max: int, jobs: Optional[int] = None) -> Dict[str, Any]:
    rows = parity_sequences(k_max, jobs)
    verdicts = parity_verdicts(rows)
    return _base(
        'parity',
        k_max=k_max,
        rows=[row._asdict() for row in rows],
        verdicts={name: _verdict(flag) for name, flag in verdicts.items()},
        table={
            'columns': ['k', 'mu_minus_even', 'mu_plus_even', 'mu_minus_odd', 'mu_plus_odd'],
            'rows': [list(row) for row in rows],
        },
    )


def critical_report(n: int) -> Dict[str, Any]:
    entries = []
    for graph in critical_graphs(n).graphs:
        margins = conjecture_margins(graph)
        coverage = optimality_coverage(graph)
        entries.append({
            'creation': to_compact(graph),
            'antiregular_order': largest_antiregular_subgraph(graph).order,
            'neg_margin': margins.neg_margin,
            'pos_margin': margins.pos_margin,
            'mu_plus_proved': coverage.mu_plus_proved,
            'mu_minus_proved': coverage.mu_minus_proved,
        })
    columns = ['creation', 'antiregular_order', 'neg_margin', 'pos_margin']
    return _base(
        'critical',
        n=n,
        graphs=entries,
        table={'columns': columns, 'rows': [[entry[c] for c in columns] for entry in entries]},
    )


def extremal_report(n: int, cap: Optional[int] = None) -> Dict[str, Any]:
    graph, value = extremal_min_eigenvalue(n, cap)
    predicted = predicted_min_eigenvalue_graph(n)
    predicted_value = spectrum_of(predicted).lambda_min
    return _base(
        'extremal',
        n=n,
        minimizer={'creation': to_compact(graph), 'lambda_min': value},
        predicted={'creation': to_compact(predicted), 'lambda_min': predicted_value},
        prediction_attains=_verdict(abs(predicted_value - value) <= basic_config.tol),
        table={
            'columns': ['graph', 'creation', 'lambda_min'],
            'rows': [['minimizer', to_compact(graph), value], ['predicted', to_compact(predicted), predicted_value]],
        },
    )
