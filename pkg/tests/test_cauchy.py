import math

import numpy as np
import pytest

from fuzzsemi import cauchy, core, spaces
from fuzzsemi.cauchy import (
    CauchyProblem,
    Trajectory,
    fuzziness_residual,
    integrate_fuzzy,
    naive_problem5_formula,
    problem4_closed_form,
    problem5_closed_form,
    problem6_closed_form,
    residual_check,
    solve_first_order,
    solve_second_order,
    solve_wave,
)
from fuzzsemi.errors import (
    HDifferenceError,
    MissingDerivativeBound,
    NoApplicableForm,
    QuadratureStall,
    UnsupportedVelocity,
)
from fuzzsemi.operators import builtin, identity, lift_matrix, scale_operator, zero_operator
from fuzzsemi.semigroup import generator_pair_closed_form
from fuzzsemi.spaces import FuzzyFunction, pair

import helpers


U0 = core.make_triangular(0, 1, 2)
V0 = core.make_triangular(1, 2, 3)
C = core.make_triangular(0, 1, 2)


# ---------------------------------------------------------------------------
# quadrature


def test_integrate_constant_is_identity():
    u = core.make_triangular(-1, 0, 4)
    got = integrate_fuzzy(lambda s: u, 1.0, 16)
    assert core.distance(got, u) <= 1e-14


def test_integrate_affine_exact_any_panel_count():
    u = core.make_triangular(-1, 0.5, 3)
    for panels in (1, 2, 5, 64):
        got = integrate_fuzzy(lambda s: core.scalar_mul(s, u), 1.0, panels)
        assert core.distance(got, core.scalar_mul(0.5, u)) <= 1e-14


def test_integrate_crisp_square():
    got = integrate_fuzzy(lambda s: core.crisp(s * s, 8), 1.0, 1024)
    assert got.lower[0] == pytest.approx(1.0 / 3.0, abs=1e-6)


def test_integrate_validates():
    with pytest.raises(ValueError):
        integrate_fuzzy(lambda s: U0, 1.0, 0)
    with pytest.raises(ValueError):
        integrate_fuzzy(lambda s: U0, 0.0, 4)


def test_quadrature_stall(monkeypatch):
    monkeypatch.setattr(cauchy, "_QUAD_MAX_DOUBLINGS", 1)
    problem = CauchyProblem(
        zero_operator(), core.crisp(0.0), forcing=lambda s: core.crisp(math.sin(20 * s)),
        horizon=1.0, tol=1e-14,
    )
    with pytest.raises(QuadratureStall):
        solve_first_order(problem, np.array([0.0, 1.0]))


# ---------------------------------------------------------------------------
# first-order solving


def test_homogeneous_solution_is_the_flow():
    problem = CauchyProblem(builtin("RemarkA", C), U0, horizon=1.0, tol=1e-9)
    traj = solve_first_order(problem, np.array([0.0, 0.5, 1.0]))
    assert traj.states[0] is U0
    for t, st in zip(traj.times, traj.states):
        want = generator_pair_closed_form(C, U0, float(t), "A")
        assert core.distance(st, want) <= 1e-8


def test_crisp_scalar_growth():
    problem = CauchyProblem(scale_operator(1.0), core.crisp(1.0), horizon=1.0, tol=1e-9)
    traj = solve_first_order(problem, np.array([0.0, 1.0]))
    assert traj.states[-1].lower[0] == pytest.approx(math.e, abs=1e-9)


def test_forced_crisp_problem_variation_of_parameters():
    # u' = u + 1, u(0) = 0  ->  u(t) = e^t - 1
    problem = CauchyProblem(
        scale_operator(1.0), core.crisp(0.0), forcing=lambda s: core.crisp(1.0),
        horizon=1.0, tol=1e-7,
    )
    traj = solve_first_order(problem, np.array([0.0, 0.5, 1.0]))
    for t, st in zip(traj.times, traj.states):
        assert st.lower[0] == pytest.approx(math.expm1(float(t)), abs=1e-6)


def test_zero_forcing_zero_initial_stays_zero():
    problem = CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), pair(core.zero(), core.zero()))
    traj = solve_first_order(problem, np.array([0.0, 0.5, 1.0]))
    for st in traj.states:
        assert spaces.elem_norm(st) == 0.0


def test_problem5_frozen_endpoint_values():
    traj = solve_first_order(
        CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), pair(U0, V0), horizon=1.0, tol=1e-9),
        np.array([0.0, 1.0]),
    )
    u1 = traj.states[-1][0]
    h1 = 0.25 * (math.e**2 - 3.0)  # independent scalar value of the series sum
    assert u1.lower[0] == pytest.approx(1.0 - 4.0 * h1, abs=1e-8)
    assert u1.lower[-1] == pytest.approx(4.0, abs=1e-8)
    assert u1.upper[0] == pytest.approx(7.0 + 4.0 * h1, abs=1e-8)


def test_problem5_series_matches_closed_form():
    times = np.linspace(0.0, 1.0, 9)
    traj = solve_first_order(
        CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), pair(U0, V0), horizon=1.0, tol=1e-9),
        times,
    )
    for t, st in zip(traj.times, traj.states):
        want = problem5_closed_form(U0, V0, float(t))
        assert spaces.box_distance(st, want) <= 1e-8
        # and h(t) agrees with its direct summation
        assert cauchy._h_exp(float(t)) == pytest.approx(helpers.h_exp(float(t)), abs=1e-12)


def test_problem4_series_matches_closed_form():
    times = np.linspace(0.0, 2.0, 9)
    traj = solve_first_order(
        CauchyProblem(lift_matrix(cauchy.SWAP_MATRIX), pair(U0, V0), horizon=2.0, tol=1e-9),
        times,
    )
    for t, st in zip(traj.times, traj.states):
        assert spaces.box_distance(st, problem4_closed_form(U0, V0, float(t))) <= 1e-8


def test_crisp_collapse_against_rk4():
    a0, b0 = 1.25, -0.75
    w0 = pair(core.crisp(a0), core.crisp(b0))
    for matrix in (cauchy.SWAP_MATRIX, cauchy.COUPLED_MATRIX):
        traj = solve_first_order(
            CauchyProblem(lift_matrix(matrix), w0, horizon=1.0, tol=1e-9),
            np.array([0.0, 1.0]),
        )
        mat = np.asarray(matrix)
        ref = helpers.rk4(lambda t, y: mat @ y, [a0, b0], 1.0)
        got = np.array([traj.states[-1][0].lower[0], traj.states[-1][1].lower[0]])
        assert np.abs(got - ref).max() <= 1e-6


def test_first_order_rejects_velocity():
    with pytest.raises(ValueError):
        solve_first_order(CauchyProblem(identity(), U0, initial_velocity=core.zero()))


# ---------------------------------------------------------------------------
# second-order solving


def test_second_order_initial_state():
    w0 = pair(U0, V0)
    traj = solve_second_order(
        CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), w0,
                      initial_velocity=spaces.elem_zero(w0), horizon=1.0, tol=1e-9),
        np.array([0.0, 1.0]),
    )
    assert traj.states[0] is w0


def test_problem6_series_matches_closed_form():
    w0 = pair(U0, V0)
    times = np.linspace(0.0, 1.0, 9)
    traj = solve_second_order(
        CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), w0,
                      initial_velocity=spaces.elem_zero(w0), horizon=1.0, tol=1e-9),
        times,
    )
    for t, st in zip(traj.times, traj.states):
        want = problem6_closed_form(U0, V0, float(t))
        assert spaces.box_distance(st, want) <= 1e-8
        assert cauchy._h_cosh(float(t)) == pytest.approx(helpers.h_cosh(float(t)), abs=1e-12)


def test_problem6_crisp_formula():
    a0, b0 = 2.0, 1.0
    w0 = pair(core.crisp(a0), core.crisp(b0))
    traj = solve_second_order(
        CauchyProblem(lift_matrix(cauchy.COUPLED_MATRIX), w0,
                      initial_velocity=spaces.elem_zero(w0), horizon=1.0, tol=1e-9),
        np.array([0.0, 1.0]),
    )
    t = 1.0
    assert traj.states[-1][0].lower[0] == pytest.approx(a0 + t * t / 2 * (a0 + b0), abs=1e-8)
    assert traj.states[-1][1].lower[0] == pytest.approx(b0 - t * t / 2 * (a0 + b0), abs=1e-8)


def test_second_order_requires_velocity_field():
    with pytest.raises(ValueError):
        solve_second_order(CauchyProblem(identity(), U0))


def test_second_order_rejects_nonzero_velocity():
    with pytest.raises(UnsupportedVelocity):
        solve_second_order(
            CauchyProblem(identity(), U0, initial_velocity=core.crisp(1.0), horizon=1.0)
        )


# ---------------------------------------------------------------------------
# wave formula


def test_wave_at_zero_returns_profile():
    xs = np.linspace(0.0, 1.0, 5)
    got = solve_wave(lambda x, order: core.scalar_mul(math.exp(x), C), None, 0.0, xs, bound=2 * math.e)
    want = FuzzyFunction(xs, tuple(core.scalar_mul(math.exp(float(x)), C) for x in xs))
    assert spaces.sup_distance(got, want) == 0.0


def test_wave_exponential_profile_collapses_to_cosh():
    xs = np.linspace(0.0, 1.0, 9)
    for t in (0.5, 1.0):
        got = solve_wave(
            lambda x, order: core.scalar_mul(math.exp(x), C), None, t, xs,
            bound=2 * math.e, tol=1e-9,
        )
        want = FuzzyFunction(
            xs, tuple(core.scalar_mul(math.cosh(t) * math.exp(float(x)), C) for x in xs)
        )
        assert spaces.sup_distance(got, want) <= 1e-8


def test_wave_zero_profile_moves_with_velocity():
    xs = np.linspace(0.0, 1.0, 5)
    u2 = FuzzyFunction(xs, tuple(core.make_triangular(0, 1, 2) for _ in xs))
    got = solve_wave(lambda x, order: core.zero(), u2, 0.75, xs, bound=1.0)
    want = FuzzyFunction(xs, tuple(core.scalar_mul(0.75, core.make_triangular(0, 1, 2)) for _ in xs))
    assert spaces.sup_distance(got, want) <= 1e-12


def test_wave_requires_bound():
    xs = np.linspace(0.0, 1.0, 3)
    with pytest.raises(MissingDerivativeBound):
        solve_wave(lambda x, order: C, None, 1.0, xs)
    with pytest.raises(MissingDerivativeBound):
        solve_wave(lambda x, order: C, None, 1.0, xs, bound=-1.0)


# ---------------------------------------------------------------------------
# residual checking


def test_residual_zero_for_constant_solution():
    times = np.array([0.0, 0.5, 1.0])
    traj = Trajectory(times, (U0, U0, U0), lambda t: U0)
    assert residual_check(traj, zero_operator(), h=1e-3) == 0.0


def test_residual_crisp_exponential_is_first_order_in_h():
    problem = CauchyProblem(scale_operator(1.0), core.crisp(1.0), horizon=1.0, tol=1e-12)
    traj = solve_first_order(problem, np.linspace(0.0, 1.0, 5))
    h = 1e-3
    res = residual_check(traj, scale_operator(1.0), h=h)
    # one-sided quotient of e^t misses by about e^t * h / 2 on [0, 1]
    assert res <= math.e * h / 2 * 1.2
    assert res >= 1e-5


def test_residual_decreases_with_h_on_closed_form():
    traj = Trajectory(
        np.array([0.0, 0.5, 1.0]),
        tuple(generator_pair_closed_form(C, U0, t, "A") for t in (0.0, 0.5, 1.0)),
        lambda t: generator_pair_closed_form(C, U0, float(t), "A"),
    )
    op = builtin("RemarkA", C)
    r1 = residual_check(traj, op, h=1e-2)
    r2 = residual_check(traj, op, h=5e-3)
    r3 = residual_check(traj, op, h=1e-3)
    r4 = residual_check(traj, op, h=5e-4)
    assert r2 < r1 and r4 < r3


def test_residual_distinguishes_naive_formula():
    nu0 = core.make_triangular(0.5, 1.0, 1.5)
    nv0 = core.make_triangular(1.5, 2.0, 2.5)
    e_norm = core.norm(fuzziness_residual(nu0, nv0))
    assert e_norm == pytest.approx(2.0, abs=1e-12)
    times = np.array([0.0, 0.5, 1.0])
    op = lift_matrix(cauchy.COUPLED_MATRIX)
    naive = Trajectory(
        times, tuple(naive_problem5_formula(nu0, nv0, float(t)) for t in times),
        lambda t: naive_problem5_formula(nu0, nv0, float(t)),
    )
    true = Trajectory(
        times, tuple(problem5_closed_form(nu0, nv0, float(t)) for t in times),
        lambda t: problem5_closed_form(nu0, nv0, float(t)),
    )
    for h in (1e-2, 1e-3, 1e-4):
        assert residual_check(naive, op, h=h, times=[1.0]) >= 0.5 * e_norm
    assert residual_check(true, op, h=1e-3, times=[1.0]) < 1e-2


def test_residual_negative_time_uses_reversed_forms():
    # supports widen backwards in time, so only the reversed one-sided
    # quotients exist there; the checker must still find them and the
    # defect must shrink linearly with the step
    from fuzzsemi.semigroup import SemigroupEvaluator

    ev = SemigroupEvaluator(identity(), "exp", 1e-12)
    traj = Trajectory(
        np.array([0.0, 1.0]), (U0, ev.at(1.0, U0)), lambda t: ev.at(float(t), U0)
    )
    with pytest.raises(HDifferenceError):
        core.hukuhara_diff(ev.at(-0.5 + 1e-3, U0), ev.at(-0.5, U0))
    r_coarse = residual_check(traj, identity(), h=1e-2, times=[-0.5])
    r_fine = residual_check(traj, identity(), h=1e-3, times=[-0.5])
    assert r_coarse <= 3e-2
    assert r_fine <= 3e-3
    assert r_fine < r_coarse / 5


def test_residual_with_forcing_term():
    # u' = u + 1, u(0) = 0: the checker must add the forcing to the target
    one = core.crisp(1.0)
    problem = CauchyProblem(
        scale_operator(1.0), core.crisp(0.0), forcing=lambda s: one, horizon=1.0, tol=1e-8
    )
    traj = solve_first_order(problem, np.array([0.0, 0.5, 1.0]))
    res = residual_check(traj, scale_operator(1.0), forcing=lambda t: one, h=1e-2, times=[0.5])
    # one-sided quotient of e^t - 1 misses by about e^t h / 2
    assert res <= math.exp(0.5) * 1e-2
    assert res >= 1e-4
    # omitting the forcing must leave a defect of about 1 (the forcing size)
    res_wrong = residual_check(traj, scale_operator(1.0), h=1e-2, times=[0.5])
    assert res_wrong > 0.9


def test_residual_requires_evaluator():
    traj = Trajectory(np.array([0.0, 0.5, 1.0]), (U0, U0, U0))
    with pytest.raises(ValueError):
        residual_check(traj, zero_operator(), h=1e-3)


def test_residual_no_applicable_form():
    # lower slope grows with t while upper slope shrinks: every orientation
    # of the one-sided difference breaks monotonicity on one endpoint side
    def twisted(t):
        t = float(t)
        r = core.level_grid(8)
        return core.FuzzyNumber(r, (1.0 + t) * r, 4.0 - (1.0 - t / 2.0) * r)

    times = np.array([0.0, 0.6, 1.2])
    traj = Trajectory(times, tuple(twisted(t) for t in times), twisted)
    with pytest.raises(NoApplicableForm):
        residual_check(traj, zero_operator(), h=0.3, times=[0.6])


# ---------------------------------------------------------------------------
# fuzziness residual and trajectory plumbing


def test_fuzziness_residual_crisp_is_exact_zero():
    e = fuzziness_residual(core.crisp(1.5), core.crisp(-0.5))
    assert core.norm(e) == 0.0


def test_fuzziness_residual_fuzzy_nonzero():
    e = fuzziness_residual(U0, V0)
    helpers.assert_matches(e, helpers.levelwise(core.make_triangular(-4, 0, 4)))
    assert core.distance(core.scalar_mul(-1.0, e), e) == 0.0


def test_trajectory_validation():
    with pytest.raises(ValueError):
        Trajectory(np.array([0.5, 1.0]), (U0, U0))
    with pytest.raises(ValueError):
        Trajectory(np.array([0.0, 0.0]), (U0, U0))
    with pytest.raises(ValueError):
        Trajectory(np.array([0.0, 1.0]), (U0,))


def test_problem_validation():
    with pytest.raises(ValueError):
        CauchyProblem(identity(), U0, horizon=0.0)
    with pytest.raises(ValueError):
        CauchyProblem(identity(), U0, tol=0.0)
