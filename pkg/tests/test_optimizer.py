import unittest
import math
from graphrepeater.codes import GolayCode, SteaneCode, Unencoded #type:ignore
from graphrepeater.graph import NetworkGraph #type:ignore
from graphrepeater.noise import HardwareParams #type:ignore
from graphrepeater.optimizer import ( #type:ignore
    ComparisonRow,
    evaluate_link,
    optimize_link,
    compare_codes,
    best_code_per_distance,
    crossover_distance,
    assign_repeaters,
    evaluate_network,
    compare_topologies
)
from graphrepeater.utilities.constraints import LCStatus, QualityFactor, RepeaterPolicy #type:ignore
from graphrepeater.utilities.exceptions import InfeasibleLinkError, OddRepeaterCountError #type:ignore


class LinkTestCase(unittest.TestCase):

    def setUp(self):
        self.params = HardwareParams.uniform(1e-4)
        self.w_range = list(range(0, 202, 2))

    def test_noiseless_optimum_is_two_stations(self):
        opt = optimize_link(100.0, Unencoded(), HardwareParams(L_att_km=math.inf), self.w_range)
        self.assertEqual(opt.w, 2)
        self.assertAlmostEqual(opt.C, 0.02)
        self.assertAlmostEqual(opt.L0_km, 100.0 / 3)

    def test_optimum_is_argmin(self):
        opt = optimize_link(100.0, SteaneCode(), self.params, self.w_range, keep_curve=True)
        self.assertEqual(len(opt.curve), len(self.w_range))
        for point in opt.curve:
            if point.w > 0:
                self.assertGreaterEqual(point.C, opt.C)
        self.assertEqual(opt.curve[0].w, 0)

    def test_evaluate_link_chain(self):
        point = evaluate_link(10.0, 8, SteaneCode(), self.params)
        self.assertAlmostEqual(point.L0_km, 10.0 / 9)
        self.assertGreater(point.R, 0.0)
        self.assertAlmostEqual(point.R, point.P_succ * point.r_inf)
        self.assertAlmostEqual(point.C, 7 * 8 / (10.0 * point.R))
        self.assertEqual(len(point.row()), 13)

    def test_fidelity_quality(self):
        point = evaluate_link(10.0, 8, SteaneCode(), self.params, quality=QualityFactor.FIDELITY)
        self.assertAlmostEqual(point.R, point.P_succ * (1 - point.e_A - point.e_B))

    def test_odd_count_rejected(self):
        with self.assertRaises(OddRepeaterCountError):
            evaluate_link(100.0, 3, SteaneCode(), self.params)

    def test_invalid_inputs(self):
        with self.assertRaises(ValueError):
            optimize_link(0.0, SteaneCode(), self.params)
        with self.assertRaises(ValueError):
            optimize_link(100.0, SteaneCode(), self.params, [0, 3])

    def test_infeasible_link(self):
        with self.assertRaises(InfeasibleLinkError):
            optimize_link(100.0, Unencoded(), HardwareParams(f_C=1.0), self.w_range)

    def test_compare_codes(self):
        self.assertEqual(compare_codes([], [SteaneCode()], self.params), [])
        rows = compare_codes([100.0, 200.0], [SteaneCode(), GolayCode()], self.params, self.w_range)
        self.assertEqual([(r.L_km, r.code) for r in rows],
                         [(100.0, 'steane:7'), (100.0, 'golay'), (200.0, 'steane:7'), (200.0, 'golay')])

    def test_golay_wins_at_long_distance(self):
        rows = compare_codes([1000.0], [SteaneCode(), GolayCode()], self.params, list(range(0, 4002, 2)))
        steane, golay = rows
        self.assertIsNotNone(golay.C)
        self.assertTrue(steane.C is None or golay.C < steane.C)
        self.assertEqual(best_code_per_distance(rows)[0].code, 'golay')

    def test_optimal_spacing_shrinks_with_distance(self):
        optima = [optimize_link(L, GolayCode(), self.params) for L in (200.0, 400.0, 800.0, 1600.0)]
        spacing = [opt.L0_km for opt in optima]
        self.assertEqual(spacing, sorted(spacing, reverse=True))
        self.assertEqual([opt.w for opt in optima], [120, 278, 644, 1496])

    def test_crossover_distance(self):
        rows = [ComparisonRow(100.0, 'steane:7', 10, 9.0, 1.0), ComparisonRow(100.0, 'golay', 4, 20.0, 2.0),
                ComparisonRow(200.0, 'steane:7', 20, 9.5, 3.0), ComparisonRow(200.0, 'golay', 8, 22.0, 2.0),
                ComparisonRow(300.0, 'steane:7', None, None, None), ComparisonRow(300.0, 'golay', 12, 23.0, 2.5)]
        self.assertEqual([r.code for r in best_code_per_distance(rows)], ['steane:7', 'golay', 'golay'])
        self.assertEqual(crossover_distance(rows, 'golay'), 200.0)
        self.assertIsNone(crossover_distance(rows, 'none'))


class NetworkTestCase(unittest.TestCase):

    def setUp(self):
        self.params = HardwareParams.uniform(1e-4)
        self.w_range = list(range(0, 202, 2))
        self.star = NetworkGraph.from_edges([(0, 1), (0, 2), (0, 3)], length_km=40.0, w=2)
        self.k4 = NetworkGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)], length_km=40.0, w=2)
        self.path = NetworkGraph.from_edges([(0, 1), (1, 2), (2, 3)], length_km=40.0, w=2)

    def test_single_edge_matches_link_optimum(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=100.0, w=2)
        report = evaluate_network(net, SteaneCode(), self.params, RepeaterPolicy.OPTIMAL, w_range=self.w_range)
        opt = optimize_link(100.0, SteaneCode(), self.params, self.w_range)
        self.assertEqual(report.assignment[('A', 'B')], opt.w)
        self.assertAlmostEqual(report.e('A'), opt.evaluation.e_A)
        self.assertAlmostEqual(report.e('B'), opt.evaluation.e_B)
        self.assertAlmostEqual(report.P_succ, opt.evaluation.P_succ)

    def test_report_rows_and_summary(self):
        report = evaluate_network(self.star, SteaneCode(), self.params, pairs=[(1, 2)])
        rows = report.rows()
        self.assertEqual([r[0] for r in rows[:4]], [0, 1, 2, 3])
        self.assertEqual([r[0] for r in rows[4:]], ['fidelity_lower', 'fidelity_upper', 'r_inf:1-2', 'R:1-2'])
        self.assertLessEqual(report.fidelity_lower, report.fidelity_upper)
        self.assertEqual(report.summary['total_qubits'], 7 * 6)
        self.assertEqual(report.summary['circuit_rank'], 0)
        self.assertEqual(report.max_e_v, report.e(0))

    def test_unknown_pair(self):
        with self.assertRaises(KeyError):
            evaluate_network(self.star, SteaneCode(), self.params, pairs=[(1, 9)])

    def test_odd_fixed_count_rounded_up(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=3)
        with self.assertLogs('graphrepeater.utilities.constraints', level='WARNING'):
            assigned = assign_repeaters(net, SteaneCode(), self.params)
        self.assertEqual(assigned.link('A', 'B').w, 4)

    def test_zero_length_link_keeps_count(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=0.0, w=2)
        assigned = assign_repeaters(net, SteaneCode(), self.params, RepeaterPolicy.OPTIMAL, w_range=self.w_range)
        self.assertEqual(assigned.link('A', 'B').w, 2)

    def test_star_beats_complete_graph(self):
        comparison = compare_topologies(self.star, self.k4, SteaneCode(), self.params)
        self.assertEqual(comparison.lc.status, LCStatus.EQUIVALENT)
        self.assertLess(comparison.report_a.max_e_v, comparison.report_b.max_e_v)
        self.assertLess(comparison.report_a.summary['total_repeaters'], comparison.report_b.summary['total_repeaters'])
        self.assertEqual(comparison.rows()[-1], ('lc_status', 'equivalent', 'equivalent'))

    def test_star_and_path_are_different_states(self):
        comparison = compare_topologies(self.star, self.path, SteaneCode(), self.params)
        self.assertEqual(comparison.lc.status, LCStatus.NOT_EQUIVALENT)
        self.assertEqual(comparison.report_a.summary['max_degree'], 3)
        self.assertEqual(comparison.report_b.summary['max_degree'], 2)


if __name__ == '__main__':
    unittest.main()
