"""Acceptance criteria, one test per criterion, with a pass/fail line each.

Every expected number here is either a hand-checked closed form, an exact
rational computed independently below, or an exhaustively derived value;
tolerances are pinned in the assertions.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from kannanlab import (
    AxiomKind,
    Outcome,
    Scenario,
    ViolationKind,
    brute_force_points,
    check_axiom,
    check_condition,
    classical_kannan,
    diagnose,
    find_violations,
    gallery,
    identity_map,
    kannan_supremum,
    koparde_waghmode,
    random_condition_pair,
    random_space,
    reproduce,
    run_picard_pair,
    run_theorem,
    s_dominated,
    sigma_s_kannan,
    solve,
)
from kannanlab.builtins import (
    five_point_pair,
    harmonic_pair,
    thirds_grid,
    three_point_cycle,
)
from kannanlab.theorems import builtin_scenario


@contextmanager
def criterion(number, description, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"[criterion {number}] FAIL ({elapsed:.2f}s) {description}")
        raise
    elapsed = time.perf_counter() - start
    print(f"[criterion {number}] PASS ({elapsed:.2f}s) {description}")
    assert elapsed < budget_seconds, f"criterion {number} exceeded {budget_seconds}s"


def test_criterion_1_gallery_classification_matrix():
    with criterion(1, "gallery classification matrix", 5.0):
        result = reproduce("classify-gallery")
        assert result.match, result.mismatches
        members = result.computed["members"]

        gamma = members["gamma"]
        assert gamma["sigma_c_1"] == "certified-holds"
        assert gamma["sigma_c_2"] == "certified-holds"
        assert gamma["simulation"] == "falsified"
        witness = gamma["simulation_witness"]
        assert witness["a"]["value"] == 1.0 and witness["b"]["value"] == 1.0
        assert abs(gamma["simulation_witness_value"]) <= 1e-12

        beta = members["beta"]
        assert beta["simulation"] == "certified-holds"
        assert beta["sigma_c_1"] == "falsified"
        assert beta["sigma_c_1_failing"] == "sigma1"
        assert beta["sigma_c_1_witness"] == {"family": "harmonic", "limit": 1.0}

        step_g = members["step-g"]
        assert step_g["sigma_c_2"] == "certified-holds"
        assert step_g["r_function"] == "falsified"
        assert step_g["r_function_failing"] == "rho1"
        assert step_g["r_function_witness"] == {"family": "linear", "scale": 1.0}

        chi = members["chi-0.4"]
        assert chi["sigma_c_1"] == "certified-holds"

        tau = members["tau"]
        assert tau["sigma_c_1"] == "falsified"
        assert tau["sigma_c_1_witness"] == {"family": "constant", "value": 1.0}
        assert abs(gallery("tau").eval(1.0, 2.0) - 1.0 / 3.0) <= 1e-12


def test_criterion_2_five_point_example():
    with criterion(2, "five-point coincidence example", 1.0):
        space, t_map, s_map = five_point_pair()

        sup = kannan_supremum(space, t_map)
        assert abs(sup.value - 0.5) <= 1e-12
        assert sup.pair == ("3", "4")
        for k in range(1, 10):
            report = check_condition(space, t_map, None, classical_kannan(0.05 * k))
            assert not report.holds
        near = check_condition(space, t_map, None, classical_kannan(0.49))
        assert not near.holds
        assert {near.witness.x, near.witness.y} == {"3", "4"}

        sigma = gallery("linear", slope=3.0 / 7.0)
        sweep = check_condition(space, t_map, s_map, sigma_s_kannan(sigma))
        assert sweep.holds

        oracle = brute_force_points(space, t_map, s_map)
        assert set(oracle.coincidence_points) == {"1", "2", "3", "5"}
        result = solve(space, t_map, s_map)
        assert result.point in oracle.coincidence_points

        theorem = run_theorem(builtin_scenario("ex-3.24"))
        assert theorem.all_hold
        assert theorem.conclusion.match


def test_criterion_3_three_point_counterexample():
    with criterion(3, "three-point counterexample", 1.0):
        space, t_map, s_map = three_point_cycle()
        tau = gallery("tau")

        expected_rows = {
            ("1", "2"): (Fraction(0), Fraction(2)),
            ("1", "3"): (Fraction(1), Fraction(2)),
            ("2", "3"): (Fraction(1), Fraction(4, 3)),
        }
        for (x, y), (want_t, want_bound) in expected_rows.items():
            i, j = space.index_of(x), space.index_of(y)
            t = space.d(t_map.assignment[i], t_map.assignment[j])
            s = space.d(t_map.assignment[i], i) + space.d(t_map.assignment[j], j)
            assert abs(t - float(want_t)) <= 1e-12
            assert abs(2.0 * s / 3.0 - float(want_bound)) <= 1e-12

        assert brute_force_points(space, t_map).fixed_points == ()

        trace = run_picard_pair(space, t_map, s_map, "1")
        assert trace.cycle is not None
        assert trace.cycle.period == 2
        assert all(abs(v - 1.0) <= 1e-12 for v in trace.step_distances[-10:])

        verdict = check_axiom(tau, AxiomKind.SIGMA1)
        assert verdict.outcome is Outcome.FALSIFIED

        result = reproduce("ex-3.26")
        assert result.match, result.mismatches


def test_criterion_4_truncated_harmonic_example():
    with criterion(4, "truncated harmonic example", 1.0):
        space, t_map, s_map = harmonic_pair(50)

        sweep = check_condition(
            space, t_map, s_map, s_dominated(gallery("chi", alpha=1.0 / 3.0), 1)
        )
        assert sweep.holds

        i4, i5 = space.index_of("1/4"), space.index_of("1/5")
        s_of, t_of = s_map.assignment, t_map.assignment
        spot_t = space.d(s_of[t_of[i4]], s_of[t_of[i5]])
        spot_s = space.d(s_of[i4], s_of[t_of[i4]]) + space.d(s_of[i5], s_of[t_of[i5]])
        want_t = float(Fraction(1, 3125) - Fraction(1, 46656))
        want_s = float(Fraction(1, 256) - Fraction(1, 46656))
        assert abs(spot_t - want_t) <= 1e-12
        assert abs(spot_s / 3.0 - want_s / 3.0) <= 1e-12
        assert gallery("chi", alpha=1.0 / 3.0).eval(spot_t, spot_s) > 0

        classical = check_condition(space, t_map, None, classical_kannan(0.49))
        assert not classical.holds
        assert {classical.witness.x, classical.witness.y} == {"0", "1/4"}
        assert abs(classical.witness.required_alpha - 4.0) <= 1e-12

        ident = identity_map(space)
        trace = run_picard_pair(space, t_map, ident, "1/4")
        for n in range(47):
            want = float(Fraction(1, (n + 4) * (n + 5)))
            assert abs(trace.step_distances[n] - want) <= 1e-12
        assert trace.coincidence_index is not None
        assert diagnose(trace, space, t_map, ident).asymptotically_regular


def test_criterion_5_linear_decay_property():
    with criterion(5, "linear-family decay property", 5.0):
        rng = random.Random(20240)
        sequences = 0
        violations = 0
        alphas = [0.1, 0.3, 0.45]
        while sequences < 1000:
            alpha = alphas[sequences % 3]
            chi = gallery("chi", alpha=alpha)
            bound = alpha / (1.0 - alpha)
            prev = rng.uniform(0.01, 10.0)
            accepted = 0
            attempts = 0
            while accepted < 20 and attempts < 400:
                attempts += 1
                candidate = rng.uniform(0.0, 1.5 * bound * prev)
                if candidate <= 0.0:
                    continue
                if chi.eval(candidate, prev + candidate) > 0.0:
                    if not candidate < prev * bound:
                        violations += 1
                    prev = candidate
                    accepted += 1
            sequences += 1
        assert sequences == 1000
        assert violations == 0


def test_criterion_6_randomized_soundness():
    with criterion(6, "randomized soundness of the pair theorem", 30.0):
        rng = random.Random(987)
        hits = 0
        for _ in range(100):
            space, t_map, s_map = random_condition_pair(rng)
            result = solve(space, t_map, s_map)
            oracle = brute_force_points(space, t_map, s_map)
            assert result.point is not None
            assert result.point in oracle.coincidence_points
            # The full harness agrees: hypotheses hold and the conclusion
            # matches on every generated instance.
            scenario = Scenario(
                space=space,
                t_map=t_map,
                s_map=s_map,
                sigma=gallery("chi", alpha=0.4),
                theorem="T3.18",
            )
            report = run_theorem(scenario)
            assert report.all_hold
            assert report.conclusion.match
            assert not report.conclusion.contradicted
            hits += 1
        assert hits == 100

        singletons = 0
        for _ in range(100):
            space, t_map, s_map = random_condition_pair(rng, s_identity=True)
            fixed = brute_force_points(space, t_map).fixed_points
            assert len(fixed) == 1
            result = solve(space, t_map, s_map)
            assert result.point == fixed[0]
            singletons += 1
        assert singletons == 100


def test_criterion_7_grid_squared_demo():
    with criterion(7, "squared-condition grid demo", 1.0):
        space, t_map, _ = thirds_grid()

        report = check_condition(space, t_map, None, koparde_waghmode(0.3))
        assert report.holds

        # Independent oracle on the unrounded values: (x - y)^2 < 4a(x^2 + y^2)
        # exhaustively over distinct grid points, in exact rationals.
        alpha = Fraction(3, 10)
        for i in range(101):
            for j in range(101):
                if i == j:
                    continue
                x, y = Fraction(i, 100), Fraction(j, 100)
                assert (x - y) ** 2 < 4 * alpha * (x * x + y * y)

        oracle = brute_force_points(space, t_map)
        assert oracle.fixed_points == ("0.00",)
        result = solve(space, t_map, identity_map(space), x0="1.00", tol=1e-9)
        assert result.point == "0.00"
        assert result.iterations <= 15


def test_criterion_8_metric_validator_suite():
    with criterion(8, "metric validator property suite", 5.0):
        rng = random.Random(55)
        for _ in range(500):
            space = random_space(rng.randint(5, 12), rng)
            assert find_violations(space.dist) == []

        kinds = [
            ViolationKind.NON_ZERO_DIAGONAL,
            ViolationKind.ASYMMETRY,
            ViolationKind.INDISCERNIBLE_PAIR,
            ViolationKind.TRIANGLE_FAILURE,
        ]
        for trial in range(500):
            space = random_space(rng.randint(5, 12), rng)
            table = [list(row) for row in space.dist]
            kind = kinds[trial % 4]
            n = space.n
            i, j = rng.sample(range(n), 2)
            if kind is ViolationKind.NON_ZERO_DIAGONAL:
                table[i][i] = rng.uniform(0.1, 1.0)
            elif kind is ViolationKind.ASYMMETRY:
                table[i][j] += rng.uniform(0.1, 1.0)
            elif kind is ViolationKind.INDISCERNIBLE_PAIR:
                table[i][j] = table[j][i] = 0.0
            else:
                bump = 10.0 * space.diameter()
                table[i][j] = table[j][i] = bump
            found = find_violations(table)
            assert found, f"planted {kind} not found"
            assert found[0].kind is kind, (kind, found[0])
