"""Command-line front end.

Three subcommands:

* ``example`` -- run one of the worked systems through the series engine,
  evaluate its closed form, and report the pointwise distances.
* ``solve``   -- solve a user problem described by a JSON config.
* ``verify``  -- run the seeded property suites and emit a report.

Exit codes: 0 success, 1 usage / schema / I-O error, 2 tolerance or
verification failure.  Outputs carry a ``"schema": "fuzzsemi/1"`` field
and contain no timestamps, so identical invocations produce byte-identical
files.  ``--threads`` is accepted for interface stability; evaluation is
sequential either way, so the flag never changes numeric output.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys

import numpy as np

from . import cauchy, checks, core, semigroup, spaces
from .errors import FuzzsemiError, SchemaError
from .operators import builtin, lift_matrix, scale_operator
from .spaces import FuzzyFunction, ProductElement, pair

log = logging.getLogger("fuzzsemi")

SCHEMA = "fuzzsemi/1"
EXAMPLE_NAMES = ("problem4", "problem5", "problem6", "wave", "remarkA")
DEFAULT_BANDS = (0.0, 0.5, 1.0)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is exit 1
    def error(self, message):
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# serialization


def state_to_json(state):
    if isinstance(state, ProductElement):
        return {"product": [state_to_json(c) for c in state.components]}
    if isinstance(state, FuzzyFunction):
        return spaces.function_to_json(state)
    return core.fuzzy_to_json(state)


def _band(u: core.FuzzyNumber, r: float):
    return (
        float(np.interp(r, u.levels, u.lower)),
        float(np.interp(r, u.levels, u.upper)),
    )


def _write_band_csv(path, times, states, bands):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "component", "x", "r", "lower", "upper"])
        for t, state in zip(times, states):
            for comp, x, value in _iter_fuzzy(state):
                for r in bands:
                    lo, up = _band(value, r)
                    writer.writerow([repr(float(t)), comp, x, repr(float(r)), repr(lo), repr(up)])


def _iter_fuzzy(state):
    if isinstance(state, ProductElement):
        for i, c in enumerate(state.components):
            for comp, x, v in _iter_fuzzy(c):
                yield (str(i) if comp == "" else f"{i}.{comp}"), x, v
    elif isinstance(state, FuzzyFunction):
        for x, v in zip(state.nodes, state.values):
            yield "", repr(float(x)), v
    else:
        yield "", "", state


def _emit(payload: dict, out_path: str | None):
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
        log.info("wrote %s", out_path)
    else:
        print(text)


# ---------------------------------------------------------------------------
# example command


def _example_payload(name, times, series_states, closed_states, tol):
    distances = [
        spaces.elem_dist(a, b) for a, b in zip(series_states, closed_states)
    ]
    return {
        "schema": SCHEMA,
        "command": "example",
        "example": name,
        "tol": tol,
        "times": [float(t) for t in times],
        "series": [state_to_json(s) for s in series_states],
        "closed_form": [state_to_json(s) for s in closed_states],
        "distances": distances,
        "max_distance": max(distances),
    }


def cmd_example(args) -> int:
    if args.name not in EXAMPLE_NAMES:
        print(
            f"error: unknown example {args.name!r}; valid names: {', '.join(EXAMPLE_NAMES)}",
            file=sys.stderr,
        )
        return 1
    if args.t_max < 0 or args.t_points < 1 or args.tol <= 0 or args.levels < 1:
        print("error: --t-max/--t-points/--tol/--levels out of range", file=sys.stderr)
        return 1
    m = args.levels
    tol = args.tol
    engine_tol = tol / 10.0  # keep truncation strictly inside the reported budget
    if args.t_max > 0 and args.t_points > 1:
        times = np.linspace(0.0, args.t_max, args.t_points)
    else:
        times = np.array([0.0])

    u0 = core.make_triangular(0.0, 1.0, 2.0, m)
    v0 = core.make_triangular(1.0, 2.0, 3.0, m)

    if args.name == "problem4":
        op = lift_matrix(cauchy.SWAP_MATRIX)
        traj = cauchy.solve_first_order(
            cauchy.CauchyProblem(op, pair(u0, v0), horizon=max(args.t_max, 1.0), tol=engine_tol),
            times,
        )
        closed = [cauchy.problem4_closed_form(u0, v0, float(t)) for t in times]
    elif args.name == "problem5":
        op = lift_matrix(cauchy.COUPLED_MATRIX)
        traj = cauchy.solve_first_order(
            cauchy.CauchyProblem(op, pair(u0, v0), horizon=max(args.t_max, 1.0), tol=engine_tol),
            times,
        )
        closed = [cauchy.problem5_closed_form(u0, v0, float(t)) for t in times]
    elif args.name == "problem6":
        op = lift_matrix(cauchy.COUPLED_MATRIX)
        w0 = pair(u0, v0)
        traj = cauchy.solve_second_order(
            cauchy.CauchyProblem(
                op, w0, initial_velocity=spaces.elem_zero(w0),
                horizon=max(args.t_max, 1.0), tol=engine_tol,
            ),
            times,
        )
        closed = [cauchy.problem6_closed_form(u0, v0, float(t)) for t in times]
    elif args.name == "remarkA":
        c = core.make_triangular(0.0, 1.0, 2.0, m)
        x = core.make_triangular(0.0, 1.0, 2.0, m)
        ev = semigroup.SemigroupEvaluator(builtin("RemarkA", c), "exp", engine_tol)
        states = tuple(ev.at(float(t), x) for t in times)
        traj = cauchy.Trajectory(times, states, lambda t: ev.at(float(t), x))
        closed = [semigroup.generator_pair_closed_form(c, x, float(t), "A") for t in times]
    else:  # wave
        c = core.make_triangular(0.0, 1.0, 2.0, m)
        xs = np.linspace(0.0, 1.0, args.nodes)
        states = tuple(
            cauchy.solve_wave(
                lambda x_, order: core.scalar_mul(math.exp(x_), c), None, float(t), xs,
                bound=2.0 * math.e, tol=engine_tol,
            )
            for t in times
        )
        traj = cauchy.Trajectory(times, states)
        closed = [
            FuzzyFunction(
                xs,
                tuple(core.scalar_mul(math.cosh(float(t)) * math.exp(float(x)), c) for x in xs),
            )
            for t in times
        ]

    payload = _example_payload(args.name, times, traj.states, closed, tol)
    _emit(payload, args.out)
    if args.csv:
        _write_band_csv(args.csv, times, traj.states, args.bands)
    return 0 if payload["max_distance"] <= tol else 2


# ---------------------------------------------------------------------------
# solve command


def _require(cond, path, message):
    if not cond:
        raise SchemaError(f"{path}: {message}")


def _parse_operator(obj, path, m_levels):
    _require(isinstance(obj, dict), path, "must be an object")
    kind = obj.get("kind")
    _require(kind is not None, path + ".kind", "missing")
    if kind == "builtin":
        name = obj.get("name")
        _require(isinstance(name, str), path + ".name", "missing builtin name")
        c = None
        if "c" in obj:
            try:
                c = core.fuzzy_from_json(obj["c"], m_levels)
            except (ValueError, FuzzsemiError) as exc:
                raise SchemaError(f"{path}.c: {exc}") from exc
        try:
            return builtin(name, c)
        except (ValueError, FuzzsemiError) as exc:
            raise SchemaError(f"{path}: {exc}") from exc
    if kind == "matrix":
        entries = obj.get("entries")
        _require(isinstance(entries, list) and entries, path + ".entries", "missing matrix entries")
        try:
            return lift_matrix(entries)
        except ValueError as exc:
            raise SchemaError(f"{path}.entries: {exc}") from exc
    if kind == "identity":
        return scale_operator(1.0)
    if kind == "scale":
        factor = obj.get("factor")
        _require(isinstance(factor, (int, float)), path + ".factor", "missing numeric factor")
        return scale_operator(float(factor))
    raise SchemaError(f"{path}.kind: unknown kind {kind!r}")


def _parse_fuzzy(obj, path, m_levels):
    try:
        return core.fuzzy_from_json(obj, m_levels)
    except (ValueError, FuzzsemiError) as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def parse_problem(config, m_levels=core.DEFAULT_LEVELS):
    """Build a CauchyProblem from the documented config schema."""
    _require(isinstance(config, dict), "config", "must be an object")
    order = config.get("order", 1)
    _require(order in (1, 2), "config.order", "must be 1 or 2")
    _require("operator" in config, "config.operator", "missing")
    op = _parse_operator(config["operator"], "config.operator", m_levels)
    _require("u0" in config, "config.u0", "missing")
    u0 = _parse_fuzzy(config["u0"], "config.u0", m_levels)
    initial = u0
    if "v0" in config:
        v0 = _parse_fuzzy(config["v0"], "config.v0", m_levels)
        initial = pair(u0, v0)
    forcing = None
    g = config.get("g", "zero")
    if g != "zero":
        _require(isinstance(g, dict), "config.g", 'must be "zero" or an object')
        _require(g.get("kind") == "const", "config.g.kind", 'only "const" forcing is supported')
        _require("value" in g, "config.g.value", "missing")
        g_val = _parse_fuzzy(g["value"], "config.g.value", m_levels)
        if isinstance(initial, ProductElement):
            _require(False, "config.g", "constant forcing for product problems is not supported")
        forcing = lambda s, g_val=g_val: g_val
    horizon = config.get("T", 1.0)
    _require(isinstance(horizon, (int, float)) and horizon > 0, "config.T", "must be > 0")
    tol = config.get("tol", 1e-9)
    _require(isinstance(tol, (int, float)) and tol > 0, "config.tol", "must be > 0")
    velocity = spaces.elem_zero(initial) if order == 2 else None
    return cauchy.CauchyProblem(
        op, initial, forcing=forcing, initial_velocity=velocity,
        horizon=float(horizon), tol=float(tol),
    )


def cmd_solve(args) -> int:
    try:
        with open(args.config) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 1
    try:
        problem = parse_problem(config, args.levels)
        grid = cauchy.uniform_times(problem.horizon, args.nodes)
        solver = cauchy.solve_second_order if problem.initial_velocity is not None else cauchy.solve_first_order
        traj = solver(problem, grid)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FuzzsemiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {
        "schema": SCHEMA,
        "command": "solve",
        "times": [float(t) for t in traj.times],
        "states": [state_to_json(s) for s in traj.states],
    }
    _emit(payload, args.out)
    if args.csv:
        _write_band_csv(args.csv, traj.times, traj.states, args.bands)
    return 0


# ---------------------------------------------------------------------------
# verify command


def cmd_verify(args) -> int:
    names = checks.SUITE_NAMES if args.suite == "all" else (args.suite,)
    report = checks.run_suites(names, args.seed)
    # human-readable progress on stderr; the report itself stays machine-readable
    for rec in report["results"]:
        tag = "PASS" if rec["passed"] else "FAIL"
        print(
            f"{tag} {rec['suite']}.{rec['property']} "
            f"cases={rec['cases']} max_violation={rec['max_violation']:.3e}",
            file=sys.stderr,
        )
    _emit(report, args.out)
    return 0 if report["passed"] else 2


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzsemi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--levels", type=int, default=core.DEFAULT_LEVELS,
                        help="membership-grid panels (default %(default)s)")
    common.add_argument("--threads", type=int, default=1,
                        help="reserved; never changes numeric output")
    common.add_argument("--out", help="write the JSON payload to this path")
    common.add_argument("--csv", help="write level-band CSV to this path")
    common.add_argument("--bands", type=_band_list, default=DEFAULT_BANDS,
                        help="comma-separated membership levels for the CSV bands")

    ex = sub.add_parser("example", parents=[common],
                        help="run a worked system against its closed form")
    ex.add_argument("name", help=f"one of: {', '.join(EXAMPLE_NAMES)}")
    ex.add_argument("--tol", type=float, default=1e-8)
    ex.add_argument("--t-max", type=float, default=None)
    ex.add_argument("--t-points", type=int, default=9)
    ex.add_argument("--nodes", type=int, default=65,
                    help="space-grid points for the wave example")
    ex.set_defaults(func=cmd_example)

    so = sub.add_parser("solve", parents=[common], help="solve a problem from a JSON config")
    so.add_argument("config", help="path to the problem JSON")
    so.add_argument("--nodes", type=int, default=cauchy.DEFAULT_TIME_NODES,
                    help="time nodes (default %(default)s)")
    so.set_defaults(func=cmd_solve)

    ve = sub.add_parser("verify", parents=[common], help="run the seeded property suites")
    ve.add_argument("suite", choices=checks.SUITE_NAMES + ("all",))
    ve.add_argument("--seed", type=int, default=0)
    ve.set_defaults(func=cmd_verify)
    return parser


def _band_list(text):
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad band list {text!r}") from exc
    if not values or any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError("bands must lie in [0, 1]")
    return values


_EXAMPLE_T_MAX = {"problem4": 2.0, "problem5": 1.0, "problem6": 1.0, "wave": 1.0, "remarkA": 2.0}


def main(argv=None) -> int:
    level = os.environ.get("FUZZSEMI_LOG", "WARNING").upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        level = "WARNING"
    logging.basicConfig(level=level)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 1
    if getattr(args, "t_max", None) is None and args.command == "example":
        args.t_max = _EXAMPLE_T_MAX.get(args.name, 1.0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint():  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
