#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import csv
import io
import json
from click.testing import CliRunner
from cli.commands import cli
from core.basic_unit import Unit
from core.data_processor import case_data, load_golden_data


GOLDEN = load_golden_data()['TestCommands']


class TestCommands(Unit):
    def setUp(self) -> None:
        super().setUp()
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args))

    def invoke_json(self, *args):
        result = self.invoke(*args, '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        return json.loads(result.stdout)

    @case_data(GOLDEN)
    def test_spectrum_star(self, case):
        result = self.invoke(*case['input'])
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.stdout)
        self.assertEqual(data['eigenvalues'], case['expect']['eigenvalues'])
        self.assertEqual(data['inertia']['numeric'], case['expect']['inertia'])
        self.assertEqual(data['inertia']['formula'], case['expect']['inertia'])
        self.assertEqual(data['schema_version'], '1.0')
        self.assertEqual(data['command'], 'spectrum')

    def test_spectrum_text(self):
        result = self.invoke('spectrum', '0001')
        self.assertEqual(result.exit_code, 0, result.output)
        for text in ('-1.732051', '1.732051', '0.000000', 'numeric (1, 2, 1)', 'formula (1, 2, 1)'):
            self.assertIn(text, result.stdout)

    def test_spectrum_complete_graph(self):
        data = self.invoke_json('spectrum', '01')
        self.assertEqual(data['eigenvalues'], [-1.0, 1.0])
        self.assertIsNone(data['mu_minus']['value'])
        self.assertIsNone(data['mu_minus']['index'])
        self.assertEqual(data['mu_plus'], {'index': 2, 'value': 1.0})

    @case_data(GOLDEN)
    def test_spectrum_example_extremes(self, case):
        result = self.invoke(*case['input'])
        self.assertEqual(result.exit_code, 0, result.output)
        values = json.loads(result.stdout)['eigenvalues']
        self.assertAlmostEqual(values[0], case['expect']['lambda_min'], delta=1e-5)
        self.assertAlmostEqual(values[-1], case['expect']['lambda_max'], delta=1e-5)

    def test_spectrum_rejects_bad_strings(self):
        for text in ('10', '0110', '01x', ''):
            with self.subTest(text=text):
                self.assertEqual(self.invoke('spectrum', text).exit_code, 2)

    def test_bounds_single_block(self):
        data = self.invoke_json('bounds', '01')
        self.assertEqual(data['per_block'], [{'block': 1, 'sigma': 1, 'tau': 1, 'lo': -1.0, 'hi': 1.0}])
        self.assertEqual(data['bounds_hold'], 'pass')

    @case_data(GOLDEN)
    def test_bounds_two_by_two(self, case):
        result = self.invoke(*case['input'])
        row = json.loads(result.stdout)['per_block'][0]
        for key, value in case['expect'].items():
            self.assertEqual(row[key], value)

    def test_bounds_text_table(self):
        result = self.invoke('bounds', '0^2 1^6 0^2 1^9 0^3 1 0^6 1^2 0^3 1^4', '--precision', '5')
        self.assertEqual(result.exit_code, 0, result.output)
        for text in ('-1.91974', '22.91974', '-6.67878', '11.67878', '-6.63941', '9.63941'):
            self.assertIn(text, result.stdout)

    def test_embed_fixed_point(self):
        data = self.invoke_json('embed', '00101')
        self.assertEqual((data['m'], data['N']), (5, 5))
        self.assertEqual(data['subgraph']['indices'], [1, 2, 3, 4, 5])

    def test_embed_three_vertices(self):
        data = self.invoke_json('embed', '011')
        self.assertEqual((data['m'], data['N']), (2, 4))
        self.assertEqual(data['supergraph']['indices'], [1, 2, 4])
        self.assertEqual(data['supergraph']['graph'], '0 1 0 1')

    @case_data(GOLDEN)
    def test_embed_example_graph(self, case):
        result = self.invoke(*case['input'])
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.stdout)
        self.assertEqual((data['m'], data['N']), (case['expect']['m'], case['expect']['N']))
        for relation in ('subgraph', 'supergraph'):
            self.assertEqual(data[relation]['valid'], 'pass')
            self.assertEqual(data[relation]['interlacing'], 'pass')
        self.assertEqual(data['sandwich']['check'], 'pass')

    def test_scan_passes(self):
        result = self.invoke('scan', '10', '--checks', 'inertia,omega_free', '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.stdout)
        self.assertEqual(data['graphs_scanned'], 256)
        self.assertEqual(data['checks_run'], ['inertia', 'omega_free'])
        self.assertTrue(data['passed'])
        self.assertNotIn('wall_time', data)

    def test_scan_critical(self):
        data = self.invoke_json('scan', '8', '--checks', 'critical')
        expected = load_golden_data()['TestEnumeration']['test_critical_graphs_eight']['expect']
        self.assertEqual([entry['creation'] for entry in data['critical']], expected)

    def test_scan_usage_errors(self):
        self.assertEqual(self.invoke('scan', '1').exit_code, 2)
        self.assertEqual(self.invoke('scan', '15').exit_code, 2)
        self.assertEqual(self.invoke('scan', '4', '--checks', 'inertia,unknown').exit_code, 2)
        self.assertEqual(self.invoke('scan', '4', '--jobs', '0').exit_code, 2)

    def test_orders_above_cap_are_usage_errors(self):
        for command in ('embed', 'spectrum', 'bounds'):
            with self.subTest(command=command):
                result = self.invoke(command, '0^5000000000 1')
                self.assertEqual(result.exit_code, 2, result.output)
                self.assertIn('Error:', result.output)
        self.assertEqual(self.invoke('scan', '3', '--checks', 'critical').exit_code, 2)

    def test_unwritable_out_is_usage_error(self):
        with self.runner.isolated_filesystem():
            with open('blocker', 'w', encoding='utf-8') as f:
                f.write('')
            result = self.invoke('spectrum', '0001', '--out', 'blocker/report.txt')
            self.assertEqual(result.exit_code, 2, result.output)
            self.assertIn('Error:', result.output)

    def test_scan_cap_override(self):
        self.assertEqual(self.invoke('scan', '6', '--cap', '5').exit_code, 2)
        self.assertEqual(self.invoke('scan', '5', '--cap', '5', '--checks', 'inertia').exit_code, 0)

    def test_scan_timing(self):
        data = self.invoke_json('scan', '5', '--checks', 'inertia', '--timing')
        self.assertGreaterEqual(data['wall_time'], 0.0)

    def test_scan_output_is_byte_identical(self):
        first = self.invoke('scan', '7', '--format', 'json', '--jobs', '1')
        second = self.invoke('scan', '7', '--format', 'json', '--jobs', '4')
        self.assertEqual(first.exit_code, 0, first.output)
        self.assertEqual(first.stdout, second.stdout)

    @case_data(GOLDEN)
    def test_parity_first_row(self, case):
        result = self.invoke(*case['input'])
        self.assertEqual(result.exit_code, 0, result.output)
        row = json.loads(result.stdout)['rows'][0]
        self.assertAlmostEqual(row['mu_minus_even'], case['expect']['mu_minus_even'], delta=1e-6)
        self.assertAlmostEqual(row['mu_plus_even'], case['expect']['mu_plus_even'], delta=1e-6)

    def test_parity_verdicts(self):
        data = self.invoke_json('parity', '30', '--jobs', '4')
        self.assertEqual(len(data['rows']), 29)
        self.assertEqual(set(data['verdicts'].values()), {'pass'})

    def test_parity_rejects_small_k(self):
        self.assertEqual(self.invoke('parity', '1').exit_code, 2)

    def test_critical_command(self):
        data = self.invoke_json('critical', '5')
        self.assertEqual(len(data['graphs']), 3)
        self.assertTrue(all(entry['antiregular_order'] == 4 for entry in data['graphs']))
        self.assertEqual(self.invoke('critical', '3').exit_code, 2)

    def test_extremal_command(self):
        data = self.invoke_json('extremal', '6')
        self.assertEqual(data['minimizer'], {'creation': '0^4 1^2', 'lambda_min': -2.372281})
        self.assertEqual(data['prediction_attains'], 'pass')

    def test_precision_option(self):
        data = self.invoke_json('spectrum', '0001', '--precision', '3')
        self.assertEqual(data['eigenvalues'][0], -1.732)
        self.assertEqual(self.invoke('spectrum', '0001', '--precision', '13').exit_code, 2)

    def test_formats_agree(self):
        data = self.invoke_json('spectrum', '0101')
        rows = list(csv.reader(io.StringIO(self.invoke('spectrum', '0101', '--format', 'csv').stdout)))
        self.assertEqual(rows[0], ['index', 'eigenvalue', 'kind'])
        self.assertEqual([float(row[1]) for row in rows[1:]], data['eigenvalues'])
        text = self.invoke('spectrum', '0101').stdout
        for value in data['eigenvalues']:
            self.assertIn(f'{value:.6f}', text)

    def test_out_option(self):
        with self.runner.isolated_filesystem():
            printed = self.invoke('bounds', '0011', '--format', 'csv')
            written = self.invoke('bounds', '0011', '--format', 'csv', '--out', 'reports/bounds.csv')
            self.assertEqual(written.exit_code, 0, written.output)
            with open('reports/bounds.csv', encoding='utf-8') as f:
                self.assertEqual(f.read(), printed.stdout)

    def test_version(self):
        result = self.invoke('--version')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('threshold-spectra', result.output)
