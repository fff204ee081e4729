import unittest
from unittest import mock
import os
import tempfile
import time
import torch
import networkx as nx
from graphrepeater.codes import SteaneCode #type:ignore
from graphrepeater.graph import NetworkGraph, RepeaterStation, expand_to_repeater_graph #type:ignore
from graphrepeater.noise import HardwareParams, p_odd, p_odd_tilde #type:ignore
from graphrepeater.oracle import ( #type:ignore
    StabilizerTableau,
    build_graph_state,
    measure_x,
    PauliError,
    propagate_through_cz,
    propagate_errors,
    run_protocol,
    single_error_locations,
    monte_carlo_node_error,
    fault_locations,
    influence_matrix,
    check_lu_equivalence,
    apply_lc_sequence,
    random_lc_walk
)
from graphrepeater.utilities.constraints import GateOrder, LCStatus, PauliKind #type:ignore
from graphrepeater.utilities.exceptions import OddRepeaterCountError, OracleScaleError #type:ignore


def _edges(g):
    return {frozenset(e) for e in g.edges}


class TableauTestCase(unittest.TestCase):

    def setUp(self):
        self.triangle = NetworkGraph.from_edges([('A', 'B'), ('B', 'C'), ('C', 'A')])

    def test_graph_state_generators(self):
        t = build_graph_state(self.triangle)
        for v in self.triangle.vertices:
            x, z = t.graph_generator(v, self.triangle.neighbors(v))
            self.assertTrue(t.stabilizes(x, z))
        x, z = t.graph_generator('A', [])
        self.assertIsNone(t.stabilizer_sign(x, z))

    def test_cz_builds_graph_state(self):
        t = StabilizerTableau.plus_state(3, ['A', 'B', 'C'])
        for a, b in (('A', 'B'), ('B', 'C'), ('C', 'A')):
            t.cz(a, b)
        self.assertTrue(t.equivalent_to(build_graph_state(self.triangle)))
        t.cz('A', 'B')
        self.assertFalse(t.equivalent_to(build_graph_state(self.triangle)))

    def test_pauli_flips_signs(self):
        t = build_graph_state(self.triangle)
        t.apply_pauli('A', PauliKind.Z)
        x, z = t.graph_generator('A', ['B', 'C'])
        self.assertEqual(t.stabilizer_sign(x, z), -1)
        x, z = t.graph_generator('B', ['A', 'C'])
        self.assertEqual(t.stabilizer_sign(x, z), 1)

    def test_measure_x_on_plus_is_deterministic(self):
        outcome, _ = measure_x(StabilizerTableau.plus_state(2), 0, seed=5)
        self.assertEqual(outcome, 1)

    def test_measure_x_collapses(self):
        t = StabilizerTableau.graph_state(2, [(0, 1)])
        outcome, after = measure_x(t, 0, seed=3)
        self.assertIn(outcome, (1, -1))
        x = torch.tensor([True, False])
        z = torch.tensor([False, False])
        self.assertEqual(after.stabilizer_sign(x, z), outcome)

    def test_too_many_qubits(self):
        with self.assertRaises(OracleScaleError):
            StabilizerTableau.plus_state(65)


class ProtocolTestCase(unittest.TestCase):

    def setUp(self):
        self.line6 = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=6)
        self.star = NetworkGraph.from_edges([(0, 1), (0, 2), (0, 3)], length_km=40.0, w=2)
        self.triangle = NetworkGraph.from_edges([('A', 'B'), ('B', 'C'), ('C', 'A')], length_km=50.0, w=2)
        self.cycle = NetworkGraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)], length_km=40.0, w=2)

    def test_lines_reach_target(self):
        for w in (2, 4, 6, 8):
            net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=w)
            for seed in range(3):
                trace = run_protocol(net, seed=seed)
                self.assertTrue(trace.matches_target(net))
                self.assertFalse(trace.aborted)

    def test_networks_reach_target(self):
        for net in (self.star, self.triangle, self.cycle):
            for seed in range(2):
                self.assertTrue(run_protocol(net, seed=seed).matches_target(net))

    def test_batch_order_reaches_target(self):
        for net in (self.line6, self.triangle):
            trace = run_protocol(net, seed=4, order=GateOrder.BATCH)
            self.assertTrue(trace.matches_target(net))

    def test_no_stations(self):
        net = NetworkGraph.from_edges([('A', 'B'), ('B', 'C')], length_km=1.0, w=0)
        trace = run_protocol(net, seed=0)
        self.assertEqual(trace.outcomes, {})
        self.assertTrue(trace.matches_target(net))

    def test_odd_and_oversized_input(self):
        with self.assertRaises(OddRepeaterCountError):
            run_protocol(NetworkGraph.from_edges([('A', 'B')], length_km=1.0, w=3))
        with self.assertRaises(OracleScaleError):
            run_protocol(NetworkGraph.from_edges([('A', 'B')], length_km=1.0, w=70))

    def test_single_errors_match_propagation(self):
        rg = expand_to_repeater_graph(self.line6)
        qubits = rg.vertices
        for error in single_error_locations(rg, qubits):
            trace = run_protocol(self.line6, seed=1, errors=[error])
            predicted = propagate_errors(rg, [error]).predicted_wrong_signs(rg)
            self.assertEqual(trace.wrong_sign_nodes(self.line6), predicted, msg=str(error))

    def test_single_errors_match_propagation_on_triangle(self):
        rg = expand_to_repeater_graph(self.triangle)
        for error in single_error_locations(rg):
            if error.kind != PauliKind.Y:
                continue
            trace = run_protocol(self.triangle, seed=2, errors=[error])
            predicted = propagate_errors(rg, [error]).predicted_wrong_signs(rg)
            self.assertEqual(trace.wrong_sign_nodes(self.triangle), predicted, msg=str(error))

    def test_errors_stay_local(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=8)
        rg = expand_to_repeater_graph(net)
        for error in single_error_locations(rg):
            for station in propagate_errors(rg, [error]).flipped:
                self.assertLessEqual(abs(station.index - error.qubit.index), 1)

    def test_node_errors_at_the_end(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=4)
        z_trace = run_protocol(net, seed=0, errors=[PauliError('A', PauliKind.Z)])
        self.assertEqual(z_trace.wrong_sign_nodes(net), {'A'})
        x_trace = run_protocol(net, seed=0, errors=[PauliError('A', PauliKind.X)])
        self.assertEqual(x_trace.wrong_sign_nodes(net), {'B'})

    def test_station_z_error_flips_one_outcome(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=4)
        rg = expand_to_repeater_graph(net)
        r2 = RepeaterStation('A', 'B', 2)
        result = propagate_errors(rg, [PauliError(r2, PauliKind.Z, moment=1)])
        self.assertEqual(result.flipped, {r2})
        self.assertEqual(result.predicted_wrong_signs(rg), {'A'})

    def test_propagate_through_cz(self):
        out = propagate_through_cz(PauliError('a', PauliKind.Y), 'b')
        self.assertEqual([(e.qubit, e.kind) for e in out], [('a', PauliKind.Y), ('b', PauliKind.Z)])
        self.assertEqual(len(propagate_through_cz(PauliError('a', PauliKind.Z), 'b')), 1)

    def test_bad_moment(self):
        rg_net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=2)
        with self.assertRaises(ValueError):
            run_protocol(rg_net, errors=[PauliError(RepeaterStation('A', 'B', 1), PauliKind.X, moment=3)])

    def test_noticed_error_marks_outcomes(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=2)
        r1 = RepeaterStation('A', 'B', 1)
        r2 = RepeaterStation('A', 'B', 2)
        trace = run_protocol(net, seed=0, errors=[PauliError(r1, PauliKind.X, noticed=True)])
        self.assertEqual(trace.outcomes[r1], '?')
        self.assertEqual(trace.outcomes[r2], '?')
        self.assertEqual(trace.undetermined, frozenset({'A', 'B'}))

        trace = run_protocol(net, seed=0, errors=[PauliError('A', PauliKind.Z, noticed=True)])
        self.assertEqual(trace.outcomes[r1], '?')
        self.assertNotEqual(trace.outcomes[r2], '?')
        self.assertEqual(trace.undetermined, frozenset({'B'}))

    def test_trace_dump(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=4)
        trace = run_protocol(net, seed=9)
        lines = trace.dump().splitlines()
        self.assertEqual(sum(l.startswith('station ') for l in lines), 4)
        self.assertEqual(sum(l.startswith('byproduct ') for l in lines), 2)
        self.assertTrue(lines[0].startswith('station A>B#1 outcome '))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'trace.txt')
            trace.write_trace(path)
            with open(path) as f:
                self.assertEqual(f.read(), trace.dump())

    def test_erased_trace_matches_golden(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=10.0, w=2)
        trace = run_protocol(net, seed=0, errors=[PauliError(RepeaterStation('A', 'B', 1), PauliKind.Z, noticed=True)])
        with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden', 'line_w2_erased.trace')) as f:
            self.assertEqual(trace.dump(), f.read())

    def test_same_seed_same_outcomes(self):
        self.assertEqual(run_protocol(self.star, seed=8).outcomes, run_protocol(self.star, seed=8).outcomes)


class MonteCarloTestCase(unittest.TestCase):

    def setUp(self):
        self.line = NetworkGraph.from_edges([('A', 'B')], length_km=0.0, w=4)
        self.params = HardwareParams(f_M_u=0.02)

    def test_zero_noise(self):
        result = monte_carlo_node_error(self.line, HardwareParams(), 10_000, seed=1)
        self.assertEqual(result.e_hat, {'A': 0.0, 'B': 0.0})
        self.assertEqual(result.n_kept, 10_000)
        self.assertTrue(all(result.within(3.0).values()))

    def test_measurement_errors_match_analytic(self):
        result = monte_carlo_node_error(self.line, self.params, 200_000, seed=7)
        expected = p_odd_tilde([p_odd(0.01, 2), 0.01, 0.01])
        self.assertAlmostEqual(result.analytic['A'], expected)
        self.assertAlmostEqual(result.analytic['B'], expected)
        self.assertTrue(all(result.within(4.0).values()))
        self.assertEqual(result.p_succ_hat, 1.0)

    def test_parameter_sets_match_analytic(self):
        param_sets = [
            HardwareParams(f_M_u=0.02),
            HardwareParams(f_P_u=0.01, f_G_u=0.01),
            HardwareParams(f_T_u=0.01, f_P_n=0.005, f_G_u=0.002, f_M_u=0.004),
        ]
        for seed, params in enumerate(param_sets):
            result = monte_carlo_node_error(self.line, params, 1_000_000, seed=seed)
            self.assertTrue(all(result.within(3.0).values()), msg=str(params))

    def test_fault_locations_of_a_line(self):
        rg = expand_to_repeater_graph(self.line)
        locations, heralded = fault_locations(rg, HardwareParams.uniform(0.01))
        # 7 per station, 5 Z and 5 X at each end node
        self.assertEqual(len(locations), 4 * 7 + 2 * 10)
        self.assertEqual(heralded, [])
        self.assertTrue(all(loc.p == 0.005 for loc in locations))

        _, heralded = fault_locations(expand_to_repeater_graph(NetworkGraph.from_edges([('A', 'B')], length_km=4.0, w=2)),
                                      HardwareParams())
        self.assertEqual(len(heralded), 2 * 2 + 1 + 2)

    def test_influence_rows_follow_the_pauli_frame(self):
        rg = expand_to_repeater_graph(self.line)
        r1 = RepeaterStation('A', 'B', 1)
        r2 = RepeaterStation('A', 'B', 2)
        locations, _ = fault_locations(rg, HardwareParams(f_M_u=0.02))
        M = influence_matrix(rg, locations)
        rows = {(loc.error.qubit, loc.error.kind): tuple(M[i].tolist()) for i, loc in enumerate(locations)}
        self.assertEqual(rows[(r1, PauliKind.Z)], (0.0, 1.0))
        self.assertEqual(rows[(r2, PauliKind.Z)], (1.0, 0.0))
        self.assertEqual(rows[('A', PauliKind.Z)], (1.0, 0.0))
        self.assertEqual(rows[('A', PauliKind.X)], (0.0, 1.0))

    def test_sampling_does_not_use_the_node_vector(self):
        params = HardwareParams(f_G_u=0.01)
        reference = monte_carlo_node_error(self.line, params, 200_000, seed=9)
        self.assertTrue(all(reference.within(4.0).values()))

        def miscounted(params, deg, deg_in, deg_out):
            return [0.0, 0.0, p_odd(params.f_G_u / 2, 10 * (1 + deg)), 0.0, 0.0]

        with mock.patch('graphrepeater.noise.error_model.node_error_vector', miscounted):
            result = monte_carlo_node_error(self.line, params, 200_000, seed=9)
        self.assertEqual(result.e_hat, reference.e_hat)
        self.assertFalse(any(result.within(4.0).values()))

    def test_encoded_blocks_match_analytic(self):
        result = monte_carlo_node_error(self.line, HardwareParams.uniform(0.01), 100_000, seed=3, code=SteaneCode())
        self.assertEqual(result.code, 'steane:7')
        self.assertTrue(all(result.within(4.0).values()))

    def test_erasures_are_discarded(self):
        net = NetworkGraph.from_edges([('A', 'B')], length_km=4.0, w=2)
        result = monte_carlo_node_error(net, HardwareParams(), 20_000, seed=2)
        self.assertLess(result.n_kept, 20_000)
        self.assertAlmostEqual(result.p_succ_hat, result.p_succ, delta=0.03)
        self.assertEqual(result.e_hat, {'A': 0.0, 'B': 0.0})

    def test_deterministic_given_seed(self):
        a = monte_carlo_node_error(self.line, self.params, 20_000, seed=5, block_size=5_000)
        b = monte_carlo_node_error(self.line, self.params, 20_000, seed=5, block_size=5_000)
        self.assertEqual(a.e_hat, b.e_hat)

    def test_rows(self):
        result = monte_carlo_node_error(self.line, self.params, 10_000, seed=1)
        rows = result.rows()
        self.assertEqual([r[0] for r in rows], ['A', 'B'])
        self.assertIn(rows[0][-1], ('ok', 'fail'))

    def test_too_few_trials(self):
        with self.assertRaises(ValueError):
            monte_carlo_node_error(self.line, self.params, 100)


class LCTestCase(unittest.TestCase):

    def setUp(self):
        self.star = NetworkGraph.from_edges([(0, 1), (0, 2), (0, 3)])
        self.k4 = NetworkGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
        self.cycle = nx.cycle_graph([1, 2, 3, 4])
        self.path = nx.Graph([(1, 3), (3, 2), (2, 4)])

    def test_star_and_complete_graph(self):
        start = time.perf_counter()
        result = check_lu_equivalence(self.star, self.k4)
        self.assertLess(time.perf_counter() - start, 1.0)
        self.assertEqual(result.status, LCStatus.EQUIVALENT)
        self.assertEqual(result.sequence, [0])
        self.assertTrue(result)

    def test_path_and_triangle(self):
        start = time.perf_counter()
        result = check_lu_equivalence(nx.path_graph(3), nx.complete_graph(3))
        self.assertLess(time.perf_counter() - start, 1.0)
        self.assertEqual(result.status, LCStatus.EQUIVALENT)
        self.assertEqual(result.sequence, [1])

    def test_cycle_and_path(self):
        result = check_lu_equivalence(self.cycle, self.path)
        self.assertEqual(result.status, LCStatus.EQUIVALENT)
        self.assertEqual(_edges(apply_lc_sequence(self.cycle, result.sequence)), _edges(self.path))

    def test_identical_graphs(self):
        result = check_lu_equivalence(self.cycle, self.cycle)
        self.assertEqual(result.status, LCStatus.EQUIVALENT)
        self.assertEqual(result.sequence, [])

    def test_not_equivalent(self):
        path4 = NetworkGraph.from_edges([(0, 1), (1, 2), (2, 3)])
        result = check_lu_equivalence(self.star, path4)
        self.assertEqual(result.status, LCStatus.NOT_EQUIVALENT)
        self.assertFalse(result)
        split = nx.Graph([(0, 1)])
        split.add_node(2)
        self.assertEqual(check_lu_equivalence(nx.path_graph(3), split).status, LCStatus.NOT_EQUIVALENT)

    def test_bound_exceeded(self):
        self.assertEqual(check_lu_equivalence(self.cycle, self.path, max_depth=0).status, LCStatus.BOUND_EXCEEDED)
        self.assertEqual(check_lu_equivalence(self.cycle, self.path, max_states=1).status, LCStatus.BOUND_EXCEEDED)

    def test_input_checks(self):
        with self.assertRaises(ValueError):
            check_lu_equivalence(nx.path_graph(3), nx.path_graph(4))
        with self.assertRaises(OracleScaleError):
            check_lu_equivalence(nx.path_graph(13), nx.path_graph(13))

    def test_random_walk_stays_in_orbit(self):
        g = nx.cycle_graph(5)
        walked, sequence = random_lc_walk(g, 6, seed=3)
        self.assertEqual(len(sequence), 6)
        self.assertEqual(check_lu_equivalence(g, walked).status, LCStatus.EQUIVALENT)
        again, _ = random_lc_walk(g, 6, seed=3)
        self.assertEqual(_edges(walked), _edges(again))


if __name__ == '__main__':
    unittest.main()
