import unittest
import io
import os
import tempfile
from contextlib import redirect_stdout
from graphrepeater.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main, parse_grid, parse_pairs #type:ignore
from graphrepeater.utilities.io import atomic_writer, read_csv, write_text #type:ignore

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..')
CONFIGS = os.path.join(ROOT, 'configs')
GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, 'out.csv')
        self.short_line = os.path.join(self.tmp.name, 'short.net')
        with open(self.short_line, 'w') as f:
            f.write('node A\nnode B\nedge A B length_km=2 w=4\n')

    def tearDown(self):
        self.tmp.cleanup()

    def test_parse_grid(self):
        self.assertEqual(parse_grid('100,200'), [100.0, 200.0])
        self.assertEqual(parse_grid('100:300:100'), [100.0, 200.0, 300.0])
        for bad in ('', '0', '100:200', 'far'):
            with self.assertRaises(ValueError):
                parse_grid(bad)

    def test_parse_pairs(self):
        self.assertEqual(parse_pairs('A-B, C-D'), [('A', 'B'), ('C', 'D')])
        self.assertEqual(parse_pairs(None), [])
        with self.assertRaises(ValueError):
            parse_pairs('AB')

    def test_optimize_line(self):
        code = main(['optimize-line', '--L', '100', '--code', 'steane:7', '--w-max', '200', '--out', self.out])
        self.assertEqual(code, EXIT_OK)
        metadata, fields, rows = read_csv(self.out)
        self.assertEqual(fields[:3], ['L_km', 'code', 'w'])
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0][1], 'steane:7')
        self.assertEqual(metadata['command'], 'optimize-line')
        self.assertEqual(metadata['params.f_G_u'], '0.0001')

    def test_optimize_line_all_points(self):
        code = main(['optimize-line', '--L', '50,100', '--code', 'golay', '--w-max', '20', '--all-w', '--out', self.out])
        self.assertEqual(code, EXIT_OK)
        _, _, rows = read_csv(self.out)
        self.assertEqual(len(rows), 2 * 11)

    def test_optimize_line_infeasible(self):
        params = os.path.join(self.tmp.name, 'dark.ini')
        with open(params, 'w') as f:
            f.write('f_C = 1\n')
        code = main(['optimize-line', '--L', '100', '--params', params, '--w-max', '10', '--out', self.out])
        self.assertEqual(code, EXIT_NEGATIVE)
        _, _, rows = read_csv(self.out)
        self.assertEqual(rows[0][2], '')

    def test_missing_params_file(self):
        code = main(['optimize-line', '--L', '100', '--params', os.path.join(self.tmp.name, 'nope.ini'), '--out', self.out])
        self.assertEqual(code, EXIT_USAGE)
        self.assertFalse(os.path.exists(self.out))

    def test_bad_code_selector(self):
        self.assertEqual(main(['optimize-line', '--L', '100', '--code', 'surface', '--out', self.out]), EXIT_USAGE)

    def test_analyze_network(self):
        code = main(['analyze-network', '--network', os.path.join(CONFIGS, 'triangle.net'),
                     '--code', 'steane:7', '--pairs', 'A-B', '--out', self.out])
        self.assertEqual(code, EXIT_OK)
        metadata, fields, rows = read_csv(self.out)
        self.assertEqual(fields, ['node', 'degree', 'e_v'])
        self.assertEqual([r[0] for r in rows], ['A', 'B', 'C', 'fidelity_lower', 'fidelity_upper', 'r_inf:A-B', 'R:A-B'])
        self.assertEqual(metadata['summary.circuit_rank'], '1')

    def test_analyze_network_bad_file(self):
        bad = os.path.join(self.tmp.name, 'bad.net')
        with open(bad, 'w') as f:
            f.write('node A\nedge A B length_km=1\n')
        self.assertEqual(main(['analyze-network', '--network', bad, '--out', self.out]), EXIT_USAGE)

    def test_lc_check(self):
        star = os.path.join(CONFIGS, 'star4.net')
        path = os.path.join(self.tmp.name, 'path.net')
        with open(path, 'w') as f:
            f.write('node 0\nnode 1\nnode 2\nnode 3\nedge 0 1 length_km=40\nedge 1 2 length_km=40\nedge 2 3 length_km=40\n')
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            self.assertEqual(main(['lc-check', star, os.path.join(CONFIGS, 'complete4.net')]), EXIT_OK)
            self.assertEqual(main(['lc-check', os.path.join(CONFIGS, 'cycle4.net'), os.path.join(CONFIGS, 'path4.net')]), EXIT_OK)
            self.assertEqual(main(['lc-check', star, path]), EXIT_NEGATIVE)
        lines = buffer.getvalue().splitlines()
        self.assertEqual(lines[0], 'status: equivalent')
        self.assertEqual(lines[1], 'sequence: 0')
        self.assertEqual(lines[-2], 'status: not equivalent')

    def test_simulate_is_reproducible(self):
        first = os.path.join(self.tmp.name, 'first.csv')
        trace = os.path.join(self.tmp.name, 'trace.txt')
        args = ['simulate', '--network', self.short_line, '--trials', '20000', '--seed', '4', '--block-size', '5000']
        self.assertIn(main(args + ['--out', first, '--trace', trace]), (EXIT_OK, EXIT_NEGATIVE))
        self.assertIn(main(args + ['--out', self.out]), (EXIT_OK, EXIT_NEGATIVE))
        self.assertEqual(read_csv(first)[2], read_csv(self.out)[2])
        self.assertEqual(len(read_csv(first)[2]), 2)
        with open(trace) as f:
            text = f.read()
        self.assertEqual(text.count('byproduct '), 2)
        self.assert_golden('short_line_seed4.trace', text)

    def assert_golden(self, name, text):
        """Compare with a recorded golden file; a missing one is recorded by the first verified run"""
        path = os.path.join(GOLDEN, name)
        if not os.path.exists(path):
            write_text(path, text)
            self.skipTest(f'recorded {name}')
        with open(path) as f:
            self.assertEqual(f.read(), text)

    def test_sweep_matches_recorded_values(self):
        cwd = os.getcwd()
        os.chdir(ROOT)
        self.addCleanup(os.chdir, cwd)
        code = main(['optimize-line', '@' + os.path.join('configs', 'sweep_fg1e-4.args'), '--out', self.out])
        self.assertEqual(code, EXIT_NEGATIVE)
        metadata, fields, rows = read_csv(self.out)
        golden_meta, _, golden_rows = read_csv(os.path.join(GOLDEN, 'optimize_line_fg1e-4.csv'))
        self.assertEqual(metadata['crossover_km.golay'], golden_meta['crossover_km.golay'])
        self.assertEqual(metadata['crossover_km.steane:7'], golden_meta['crossover_km.steane:7'])

        by_key = {(float(r[0]), r[1]): r for r in rows}
        self.assertEqual(len(by_key), 2 * 40)
        for L, code_name, w, L0 in golden_rows:
            row = by_key[(float(L), code_name)]
            self.assertEqual(row[2], w)
            if L0:
                self.assertAlmostEqual(float(row[3]), float(L0), places=5)
            else:
                self.assertEqual(row[3], '')

        steane_100 = by_key[(100.0, 'steane:7')]
        self.assertGreater(int(steane_100[2]), 0)
        self.assertEqual(int(steane_100[2]) % 2, 0)
        body = io.StringIO()
        body.write(','.join(fields) + '\n')
        for r in rows:
            body.write(','.join(r) + '\n')
        self.assert_golden('optimize_line_fg1e-4_curves.csv', body.getvalue())

    def test_atomic_writes(self):
        target = os.path.join(self.tmp.name, 'kept.txt')
        write_text(target, 'first\n')
        with self.assertRaises(RuntimeError):
            with atomic_writer(target) as f:
                f.write('partial')
                raise RuntimeError('interrupted')
        with open(target) as f:
            self.assertEqual(f.read(), 'first\n')
        self.assertEqual([n for n in os.listdir(self.tmp.name) if n.startswith('.graphrepeater-')], [])
        with self.assertRaises(FileNotFoundError):
            write_text(os.path.join(self.tmp.name, 'missing', 'trace.txt'), 'x')


if __name__ == '__main__':
    unittest.main()
