"""Command-line interface.

Five subcommands cover the package's surface:

* ``solve``           — ground state of one geometry,
* ``scan``            — separation scan at fixed wedge angle,
* ``psi-grid``        — angular wavefunction samples on a sphere,
* ``hydrogen-check``  — isolated-atom self-test against the quadrature oracle,
* ``validate``        — cross-route validation suite and reference-table check.

Angles accept pi fractions ("pi/6", "3pi/8", "3*pi/8") or plain radians.
Data commands emit CSV (default) or JSON (``--format json``) to stdout
or ``--output PATH``; a relative output or plot path is resolved against
``$SEPION_OUTPUT_DIR`` when that variable is set.  Exit codes: 0 on
success, 2 for bad input, 3 when no bound state exists, 4 when a
validation-style check fails.
"""

import argparse
import csv
import io
import json
import math
import os
import random
import re
import sys

import numpy as np

from . import __version__
from .hydrogen import BracketingError, a_matrix, find_hydrogen_roots
from .molecule import (
    Geometry,
    NoBoundStateError,
    f_overlap,
    ground_state_root,
    i0,
    lambda_vector,
)
from .oracle import oracle_a_entry, oracle_i_integral
from .pes import nuclear_repulsion, scan_r
from .reference import REFERENCE_ALPHAS, load_reference_roots, reference_keys
from .wavefunction import normalize, psi_grid

__all__ = ["main", "main_entry", "parse_angle"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_BOUND_STATE = 3
EXIT_VALIDATION = 4

_CSV_PLACES = 7
_JSON_DIGITS = 9

_SCAN_COLUMNS = ("R", "x", "epsilon", "E_electronic", "V_nn", "E_total")

# The bundled reference tables share one separation grid.
_REFERENCE_GRID = [round(0.1 * i, 1) for i in range(9)] + [
    round(1.0 + 0.2 * i, 1) for i in range(11)
]

_PI_FORM = re.compile(
    r"^\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$", re.IGNORECASE
)


def parse_angle(text: str) -> float:
    """Angle in radians from a pi fraction ("pi/6", "3pi/8") or a number."""
    match = _PI_FORM.match(text)
    if match:
        numerator = float(match.group(1)) if match.group(1) else 1.0
        denominator = float(match.group(2)) if match.group(2) else 1.0
        if denominator == 0.0:
            raise ValueError(f"zero denominator in angle {text!r}")
        return math.pi * numerator / denominator
    try:
        return float(text)
    except ValueError:
        raise ValueError(
            f"cannot parse angle {text!r}; use radians or a pi fraction like pi/6"
        ) from None


def _resolve_path(path: str | None) -> str | None:
    if path is None:
        return None
    base = os.environ.get("SEPION_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, output: str | None) -> None:
    path = _resolve_path(output)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as handle:
        handle.write(text)
    print(f"wrote {path}", file=sys.stderr)


def _csv_cell(value: float | None, places: int) -> str:
    return "" if value is None else f"{value:.{places}f}"


def _json_number(value: float | None, digits: int) -> float | None:
    return None if value is None else float(f"{value:.{digits}g}")


def _csv_text(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _places(args) -> int:
    return args.precision if args.precision is not None else _CSV_PLACES


def _digits(args) -> int:
    return args.precision if args.precision is not None else _JSON_DIGITS


def _cmd_solve(args) -> int:
    geom = Geometry(r=args.r, alpha=args.alpha)
    root = ground_state_root(geom, tol=args.tol)
    weights = lambda_vector(geom, root)
    electronic_only = args.electronic_only or geom.r == 0.0
    v_nn = None if electronic_only else nuclear_repulsion(geom)
    e_total = None if v_nn is None else root.e_electronic + v_nn
    record = {
        "R": geom.r,
        "alpha": geom.alpha,
        "x": root.x,
        "epsilon": root.epsilon,
        "E_electronic": root.e_electronic,
        "V_nn": v_nn,
        "E_total": e_total,
        "mixing": weights.lplus,
    }
    if args.format == "json":
        payload = {"schema_version": 1, "kind": "solve"}
        payload.update(
            {key: _json_number(value, _digits(args)) for key, value in record.items()}
        )
        text = _json_text(payload)
    else:
        places = _places(args)
        text = _csv_text(
            record.keys(), [[_csv_cell(value, places) for value in record.values()]]
        )
    _emit(text, args.output)
    return EXIT_OK


def _scan_grid_values(args) -> list[float]:
    range_given = any(v is not None for v in (args.r_min, args.r_max, args.steps))
    forms = sum((args.paper_grid, args.r_values is not None, range_given))
    if forms != 1:
        raise ValueError(
            "choose exactly one grid form: --paper-grid, --r-values, "
            "or --r-min/--r-max/--steps"
        )
    if args.paper_grid:
        return list(_REFERENCE_GRID)
    if args.r_values is not None:
        try:
            return [float(part) for part in args.r_values.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"cannot parse --r-values {args.r_values!r}") from None
    if args.r_min is None or args.r_max is None or args.steps is None:
        raise ValueError("the range form needs all of --r-min, --r-max and --steps")
    if args.steps < 2:
        raise ValueError(f"--steps must be at least 2, got {args.steps}")
    return [float(v) for v in np.linspace(args.r_min, args.r_max, args.steps)]


def _scan_csv(table, places: int) -> str:
    rows = []
    for row in table.rows:
        cells = (row.r, row.x, row.epsilon, row.e_electronic, row.v_nn, row.e_total)
        rows.append([_csv_cell(value, places) for value in cells])
    return _csv_text(_SCAN_COLUMNS, rows)


def _scan_json(table, digits: int) -> str:
    rows = []
    for row in table.rows:
        rows.append(
            {
                "R": _json_number(row.r, digits),
                "x": _json_number(row.x, digits),
                "epsilon": _json_number(row.epsilon, digits),
                "E_electronic": _json_number(row.e_electronic, digits),
                "V_nn": _json_number(row.v_nn, digits),
                "E_total": _json_number(row.e_total, digits),
                "status": row.status,
            }
        )
    payload = {
        "schema_version": 1,
        "kind": "scan",
        "alpha": _json_number(table.alpha, digits),
        "rows": rows,
    }
    return _json_text(payload)


def _cmd_scan(args) -> int:
    values = _scan_grid_values(args)
    table = scan_r(args.alpha, values, tol=args.tol)
    if args.format == "json":
        text = _scan_json(table, _digits(args))
    else:
        text = _scan_csv(table, _places(args))
    if args.plot is not None:
        from .plots import render_pes_figure

        plot_path = _resolve_path(args.plot)
        render_pes_figure(table, plot_path, kind=args.plot_kind)
        print(f"wrote {plot_path}", file=sys.stderr)
    _emit(text, args.output)
    return EXIT_OK


def _cmd_psi_grid(args) -> int:
    geom = Geometry(r=args.r, alpha=args.alpha)
    root = ground_state_root(geom, tol=args.tol)
    params = normalize(geom, root) if args.normalize else None
    grid = psi_grid(
        args.r_fixed,
        geom,
        root,
        theta_count=args.theta_count,
        phi_count=args.phi_count,
        params=params,
    )
    if args.format == "json":
        digits = _digits(args)
        payload = {
            "schema_version": 1,
            "kind": "psi-grid",
            "r_fixed": _json_number(grid.r_fixed, digits),
            "R": _json_number(geom.r, digits),
            "alpha": _json_number(geom.alpha, digits),
            "x": _json_number(root.x, digits),
            "normalized": bool(args.normalize),
            "norm": _json_number(params.norm if params is not None else 1.0, digits),
            "theta": [_json_number(v, digits) for v in grid.thetas],
            "phi": [_json_number(v, digits) for v in grid.phis],
            "values": [
                [_json_number(v, digits) for v in row] for row in grid.values
            ],
        }
        text = _json_text(payload)
    else:
        places = _places(args)
        rows = []
        for i, theta in enumerate(grid.thetas):
            for j, phi in enumerate(grid.phis):
                rows.append(
                    [
                        _csv_cell(theta, places),
                        _csv_cell(phi, places),
                        _csv_cell(grid.values[i, j], places),
                    ]
                )
        text = _csv_text(("theta", "phi", "psi"), rows)
    if args.plot is not None:
        from .plots import render_grid_figure

        plot_path = _resolve_path(args.plot)
        render_grid_figure(grid, plot_path)
        print(f"wrote {plot_path}", file=sys.stderr)
    _emit(text, args.output)
    return EXIT_OK


_HYDROGEN_PROBES = (0.35, 0.8, 1.7, 2.6)


def _cmd_hydrogen_check(args) -> int:
    print(f"scanning secular determinant on (0, {args.x_max:g}], step 1e-3")
    failed = False
    try:
        roots = find_hydrogen_roots(x_max=args.x_max, tol=args.tol)
    except BracketingError as exc:
        print(f"FAIL: {exc}")
        print("hydrogen-check: FAIL")
        return EXIT_VALIDATION
    print(f"ok: isolated exactly {len(roots)} roots")
    for root, expected in zip(roots, (0.5, 1.0)):
        deviation = abs(root.x - expected)
        good = deviation <= args.tol
        failed |= not good
        tag = "ok" if good else "FAIL"
        extra = ", pure 1s channel" if root.pure_state else ""
        print(
            f"{tag}: root x = {root.x:.12f} vs {expected} "
            f"(|dev| = {deviation:.2e}, tol {args.tol:g}{extra})"
        )
    worst = 0.0
    for x in _HYDROGEN_PROBES:
        closed = a_matrix(x).as_rows()
        for q in (0, 1):
            for m in (0, 1):
                reference = closed[q][m]
                probe = oracle_a_entry(q, m, x).value
                worst = max(
                    worst, abs(probe - reference) / max(abs(reference), 1e-12)
                )
    good = worst <= 1e-9
    failed |= not good
    print(
        f"{'ok' if good else 'FAIL'}: response-matrix entries vs quadrature at "
        f"x in {_HYDROGEN_PROBES}: max rel dev {worst:.2e} (bound 1e-9)"
    )
    print(f"hydrogen-check: {'FAIL' if failed else 'PASS'}")
    return EXIT_VALIDATION if failed else EXIT_OK


def _cmd_validate(args) -> int:
    rng = random.Random(args.seed)
    checks: list[tuple[str, float, float]] = []

    worst = 0.0
    for _ in range(100):
        d = rng.uniform(0.1, 6.0)
        x = rng.uniform(0.3, 3.0)
        closed = f_overlap(d, x)
        probe = oracle_i_integral(d, x).value
        worst = max(worst, abs(probe - closed) / max(abs(closed), 1e-12))
    checks.append(("overlap closed form vs quadrature, 100 samples", worst, 1e-8))

    worst = 0.0
    for _ in range(25):
        x = rng.uniform(0.3, 3.0)
        closed = a_matrix(x).as_rows()
        for q in (0, 1):
            for m in (0, 1):
                probe = oracle_a_entry(q, m, x).value
                worst = max(
                    worst, abs(probe - closed[q][m]) / max(abs(closed[q][m]), 1e-12)
                )
    checks.append(("response-matrix entries vs quadrature, 25 samples", worst, 1e-8))

    worst = 0.0
    for key in reference_keys():
        alpha = REFERENCE_ALPHAS[key]
        for r, x_reference in load_reference_roots(key):
            root = ground_state_root(Geometry(r=r, alpha=alpha), tol=args.tol)
            worst = max(worst, abs(root.x - x_reference))
    checks.append(("reference root tables, 80 rows, |dx|", worst, 1e-6))

    x_united = ground_state_root(Geometry(r=0.0, alpha=math.pi / 3.0), tol=args.tol).x
    deviation = abs(3.0 * i0(x_united) - 1.0)
    checks.append(("coincident-centers identity |3 i0(x) - 1|", deviation, 1e-6))

    failed = False
    for name, value, bound in checks:
        good = value <= bound
        failed |= not good
        print(f"{'ok' if good else 'FAIL'}: {name}: {value:.3e} (bound {bound:g})")
    print(f"validate: {'FAIL' if failed else 'PASS'}")
    return EXIT_VALIDATION if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepion",
        description="Separable-potential bound states of a three-proton ion.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    common.add_argument(
        "--output", metavar="PATH", help="write output to PATH instead of stdout"
    )
    common.add_argument(
        "--precision",
        type=int,
        metavar="N",
        help="decimal places (CSV) / significant digits (JSON); defaults 7 / 9",
    )
    common.add_argument(
        "--tol",
        type=float,
        default=1e-10,
        metavar="T",
        help="root bracketing tolerance (default 1e-10)",
    )

    solve = subparsers.add_parser(
        "solve", parents=[common], help="ground state at one geometry"
    )
    solve.add_argument("--r", type=float, required=True, help="separation in Bohr")
    solve.add_argument(
        "--alpha",
        type=parse_angle,
        required=True,
        help="wedge half-angle (radians or pi fraction, e.g. pi/6)",
    )
    solve.add_argument(
        "--electronic-only",
        action="store_true",
        help="suppress nuclear repulsion and total energy (implied at r = 0)",
    )
    solve.set_defaults(func=_cmd_solve)

    scan = subparsers.add_parser(
        "scan", parents=[common], help="separation scan at fixed angle"
    )
    scan.add_argument("--alpha", type=parse_angle, required=True)
    scan.add_argument(
        "--paper-grid",
        action="store_true",
        help="use the published reference grid (r = 0 ... 3.0, 20 points)",
    )
    scan.add_argument("--r-min", type=float)
    scan.add_argument("--r-max", type=float)
    scan.add_argument("--steps", type=int)
    scan.add_argument(
        "--r-values", metavar="R1,R2,...", help="explicit comma-separated separations"
    )
    scan.add_argument(
        "--plot", metavar="FIG", help="also render the scan to an image file"
    )
    scan.add_argument(
        "--plot-kind",
        choices=("total", "root"),
        default="total",
        help="plot total energy or the binding parameter",
    )
    scan.set_defaults(func=_cmd_scan)

    grid = subparsers.add_parser(
        "psi-grid", parents=[common], help="wavefunction samples on a sphere"
    )
    grid.add_argument(
        "--r-fixed", type=float, default=1.6, help="sphere radius (default 1.6)"
    )
    grid.add_argument(
        "--r", type=float, default=1.6, help="proton separation (default 1.6)"
    )
    grid.add_argument(
        "--alpha", type=parse_angle, default=math.pi / 6.0,
        help="wedge half-angle (default pi/6)",
    )
    grid.add_argument(
        "--theta-count", "--nt", type=int, default=90, help="polar nodes (default 90)"
    )
    grid.add_argument(
        "--phi-count", "--nphi", type=int, default=180,
        help="azimuthal nodes (default 180)",
    )
    grid.add_argument(
        "--normalize",
        action="store_true",
        help="sample the unit-norm state (runs the normalization quadrature)",
    )
    grid.add_argument(
        "--plot", metavar="FIG", help="also render the grid heatmap to an image file"
    )
    grid.set_defaults(func=_cmd_psi_grid)

    hydrogen = subparsers.add_parser(
        "hydrogen-check",
        parents=[common],
        help="isolated-atom self-test against the quadrature oracle",
    )
    hydrogen.add_argument(
        "--x-max", type=float, default=3.0, help="scan window upper end (default 3)"
    )
    hydrogen.set_defaults(func=_cmd_hydrogen_check)

    validate = subparsers.add_parser(
        "validate",
        parents=[common],
        help="cross-route validation suite and reference-table check",
    )
    validate.add_argument(
        "--seed", type=int, default=1234, help="sampling seed (default 1234)"
    )
    validate.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    """Run the CLI; returns the process exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoBoundStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND_STATE


def main_entry() -> None:
    sys.exit(main(sys.argv[1:]))
