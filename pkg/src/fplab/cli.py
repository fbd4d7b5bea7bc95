"""Command-line front end.

Subcommands mirror the library: bound, table, groebner, interpolate,
encode, zeros, selftest.  Exit codes: 0 success, 2 input error,
3 invariant violation (oracle mismatch, golden mismatch, internal bug).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    NO_INFORMATION,
    comparison_table,
    footprint_bound,
    lm_footprint_bound,
    sz_rhs,
)
from .field import PrimeField
from .grid import Grid
from .groebner import Ideal, buchberger, grid_ideal_basis, grid_products, ideal_equal
from .hermite import build_code, code_distance, export_generator_matrix, hermite_interpolate_unique
from .limits import EnumerationLimitError, max_enum
from .multiindex import DecreasingSet, coordinate_box, weighted_ball
from .ordering import MonomialOrdering
from .oracle import multiplicity_sum, zeros_with_multiplicity
from .polynomial import Polynomial, format_poly, parse_poly


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated integer list, got {text!r}")


def _parse_grid(args) -> Grid:
    if args.modulus is None:
        raise ValueError("a prime modulus is required (-p/--modulus)")
    if not getattr(args, "grid", None):
        raise ValueError("a grid is required (--grid 'a,b;c,d')")
    field = PrimeField(args.modulus)
    coords = [_parse_ints(part, "--grid") for part in args.grid.split(";")]
    return Grid(field, coords)


def _parse_J(args, num_vars: int) -> DecreasingSet:
    selectors = []
    if args.weights is not None or args.r is not None:
        if args.weights is None or args.r is None:
            raise ValueError("--weights and --r must be given together")
        selectors.append("weights")
    if args.box is not None:
        selectors.append("box")
    if args.J_explicit is not None:
        selectors.append("explicit")
    if len(selectors) != 1:
        raise ValueError(
            "exactly one of --weights/--r, --box, --J-explicit must select J"
        )
    if selectors[0] == "weights":
        w = _parse_ints(args.weights, "--weights")
        if len(w) != num_vars:
            raise ValueError(f"--weights needs {num_vars} entries")
        return weighted_ball(w, args.r)
    if selectors[0] == "box":
        box = _parse_ints(args.box, "--box")
        if len(box) != num_vars:
            raise ValueError(f"--box needs {num_vars} entries")
        return coordinate_box(box)
    tuples = re.findall(r"\(([^()]*)\)", args.J_explicit)
    if not tuples:
        raise ValueError("--J-explicit expects tuples like '(0,0);(1,0)'")
    elements = [tuple(_parse_ints(t, "--J-explicit")) for t in tuples]
    return DecreasingSet(elements)


def _parse_ordering(args, num_vars: int) -> MonomialOrdering:
    priority = None
    if args.priority is not None:
        one_based = _parse_ints(args.priority, "--priority")
        priority = tuple(v - 1 for v in one_based)
    return MonomialOrdering(args.order, num_vars, priority)


def _parse_polys(args, grid: Grid) -> list[Polynomial]:
    if not args.poly:
        raise ValueError("at least one --poly is required")
    return [parse_poly(text, grid.field, grid.num_vars) for text in args.poly]


def _parse_monomials(text: str, field: PrimeField, num_vars: int):
    out = []
    for tok in text.split(","):
        f = parse_poly(tok, field, num_vars)
        if len(f.terms) != 1 or set(f.terms.values()) != {1}:
            raise ValueError(f"--monomials entries must be monic monomials, got {tok!r}")
        out.append(next(iter(f.terms)))
    if not out:
        raise ValueError("--monomials must list at least one monomial")
    return out


def _load_targets(path: str):
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read targets file {path}: {exc}")
    if not isinstance(raw, list):
        raise ValueError("targets file must be a JSON array")
    targets = {}
    for entry in raw:
        try:
            point = tuple(int(c) for c in entry["point"])
            deriv = tuple(int(c) for c in entry["derivative"])
            value = int(entry["value"])
        except (KeyError, TypeError, ValueError):
            raise ValueError(
                'each target needs "point", "derivative", "value"; got '
                f"{entry!r}"
            )
        targets[(point, deriv)] = value
    return targets


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def _emit_kv(pairs, fmt: str):
    if fmt == "json":
        print(json.dumps({k: _jsonable(v) for k, v in pairs}, sort_keys=True))
    elif fmt == "csv":
        for k, v in pairs:
            print(f"{k},{_text_value(v)}")
    else:
        for k, v in pairs:
            print(f"{k}: {_text_value(v)}")


def _text_value(value) -> str:
    return "-" if value is NO_INFORMATION else str(value)


# ----------------------------------------------------------------------
# subcommands


def cmd_bound(args) -> int:
    grid = _parse_grid(args)
    J = _parse_J(args, grid.num_vars)
    ordering = _parse_ordering(args, grid.num_vars)
    if args.poly and args.monomials:
        raise ValueError("--poly and --monomials are mutually exclusive here")
    if args.monomials:
        lms = _parse_monomials(args.monomials, grid.field, grid.num_vars)
        report = lm_footprint_bound(lms, J, grid)
        size_key, size_val = "staircase estimate", report.witness_data["staircase_estimate"]
        ideal = None
    else:
        polys = _parse_polys(args, grid)
        ideal = Ideal(polys)
        report = footprint_bound(ideal, J, grid, ordering)
        size_key, size_val = "footprint size", report.witness_data["footprint_size"]
    raw = report.witness_data["raw_bound"]
    pairs = [
        ("method", report.method),
        ("#J", len(J)),
        ("#J_S", report.witness_data["js_size"]),
        (size_key, size_val),
        ("raw bound", raw),
        ("bound", report.bound_value),
    ]
    violation = False
    if args.oracle:
        if ideal is None:
            raise ValueError("--oracle needs --poly generators to enumerate zeros")
        actual = len(zeros_with_multiplicity(ideal, J, grid))
        verdict = "OK" if actual <= raw else "VIOLATION"
        violation = actual > raw
        pairs.append(("actual", actual))
        pairs.append(("oracle", verdict))
    _emit_kv(pairs, args.format)
    return 3 if violation else 0


_TABLE_FILES = {"footprint": "footprint", "schwartz-zippel": "schwartz_zippel"}


def cmd_table(args) -> int:
    if not args.sizes:
        raise ValueError("--sizes is required (table layout is field-independent)")
    sizes = _parse_ints(args.sizes, "--sizes")
    if args.weights is None or args.r is None:
        raise ValueError("--weights and --r are required")
    w = _parse_ints(args.weights, "--weights")
    table = comparison_table(w, args.r, sizes)
    if args.format == "json":
        rows: dict[str, list] = {}
        for kind in table.KINDS:
            picked = table._pick(kind)
            by_row = {}
            for (i1, i2), v in picked.items():
                by_row.setdefault(i1, {})[i2] = v
            rows[_TABLE_FILES[kind]] = [
                [by_row[i1][i2] for i2 in sorted(by_row[i1])] for i1 in sorted(by_row)
            ]
        print(
            json.dumps(
                {"sizes": sizes, "weights": w, "r": args.r, **rows}, sort_keys=True
            )
        )
        return 0
    render = table.to_csv if args.format == "csv" else table.to_text
    mismatches = []
    for kind in table.KINDS:
        body = render(kind)
        if args.golden:
            ext = "csv" if args.format == "csv" else "txt"
            path = Path(args.golden) / f"{_TABLE_FILES[kind]}.{ext}"
            try:
                expected = path.read_text()
            except OSError as exc:
                raise ValueError(f"cannot read golden file {path}: {exc}")
            if body != expected:
                mismatches.append(kind)
        print(f"# {kind}")
        print(body, end="")
        print()
    if args.golden:
        if mismatches:
            print(f"golden: MISMATCH ({', '.join(mismatches)})")
            return 3
        print("golden: OK")
    return 0


def cmd_groebner(args) -> int:
    grid = _parse_grid(args)
    ordering = _parse_ordering(args, grid.num_vars)
    if args.poly:
        basis = buchberger(_parse_polys(args, grid), ordering)
        if args.format == "json":
            print(json.dumps({"basis": [format_poly(g) for g in basis.elements]}))
        else:
            for g in basis.elements:
                print(format_poly(g))
        return 0
    J = _parse_J(args, grid.num_vars)
    closed = grid_ideal_basis(grid, J, ordering)
    recomputed = buchberger(grid_products(grid, J), ordering)
    verified = ideal_equal(closed, recomputed) and set(closed.elements) == set(
        recomputed.elements
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "basis": [format_poly(g) for g in closed.elements],
                    "reduced": verified,
                }
            )
        )
    else:
        for g in closed.elements:
            print(format_poly(g))
        print(f"reduced groebner basis: {'verified' if verified else 'VIOLATION'}")
    return 0 if verified else 3


def cmd_interpolate(args) -> int:
    grid = _parse_grid(args)
    J = _parse_J(args, grid.num_vars)
    ordering = _parse_ordering(args, grid.num_vars)
    targets = _load_targets(args.targets) if args.targets else {}
    f = hermite_interpolate_unique(grid, J, targets, ordering)
    if args.format == "json":
        print(json.dumps({"polynomial": format_poly(f)}))
    else:
        print(format_poly(f))
    return 0


def cmd_encode(args) -> int:
    grid = _parse_grid(args)
    J = _parse_J(args, grid.num_vars)
    if not args.monomials:
        raise ValueError("--monomials is required")
    mons = _parse_monomials(args.monomials, grid.field, grid.num_vars)
    code = build_code(grid, mons, J)
    p = grid.field.modulus
    brute_ok = p**code.dimension <= max_enum()
    mode = "brute-force" if brute_ok else "lower-bound"
    d = code_distance(code, mode)
    matrix_csv = export_generator_matrix(code)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "length": code.length,
                    "dimension": code.dimension,
                    "block_size": code.block_size,
                    "distance": d,
                    "distance_mode": mode,
                    "generator_matrix": [
                        [int(v) for v in row] for row in code.matrix.matrix
                    ],
                }
            )
        )
        return 0
    if args.format == "csv":
        print(matrix_csv, end="")
        return 0
    print(f"length: {code.length}")
    print(f"dimension: {code.dimension}")
    print(f"block size: {code.block_size}")
    print(f"distance ({mode}): {d}")
    print("generator matrix:")
    print(matrix_csv, end="")
    return 0


def cmd_zeros(args) -> int:
    grid = _parse_grid(args)
    J = _parse_J(args, grid.num_vars)
    polys = _parse_polys(args, grid)
    weights = None
    if args.weights is not None and len(polys) == 1:
        weights = tuple(_parse_ints(args.weights, "--weights"))
    zs = zeros_with_multiplicity(Ideal(polys), J, grid, weights)
    if args.format == "json":
        out = {"count": len(zs), "points": [list(a) for a in zs]}
        if zs.multiplicity_map is not None:
            out["multiplicities"] = {
                ",".join(map(str, a)): (None if m == float("inf") else m)
                for a, m in zs.multiplicity_map.items()
            }
        print(json.dumps(out, sort_keys=True))
        return 0
    print(f"count: {len(zs)}")
    for a in zs:
        line = "(" + ", ".join(map(str, a)) + ")"
        if zs.multiplicity_map is not None:
            line += f"  m_w={zs.multiplicity_map[a]}"
        print(line)
    return 0


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    violations = 0
    for trial in range(args.count):
        p = rng.choice([5, 7])
        field = PrimeField(p)
        m = 2
        sizes = [rng.randint(1, 3) for _ in range(m)]
        coords = [rng.sample(range(p), s) for s in sizes]
        grid = Grid(field, coords)
        if rng.random() < 0.5:
            w = tuple(rng.randint(1, 3) for _ in range(m))
            r = rng.randint(1, 4)
            J = weighted_ball(w, r)
        else:
            J = coordinate_box([rng.randint(1, 2) for _ in range(m)])
        f = Polynomial.zero(field, m)
        while f.is_zero():
            terms = {}
            for _ in range(rng.randint(1, 5)):
                expo = (rng.randint(0, 4), rng.randint(0, 4))
                terms[expo] = rng.randint(0, p - 1)
            f = Polynomial(field, m, terms)
        ideal = Ideal([f])
        report = footprint_bound(ideal, J, grid)
        actual = len(zeros_with_multiplicity(ideal, J, grid))
        if actual > report.witness_data["raw_bound"]:
            violations += 1
            print(f"VIOLATION (footprint) trial {trial}: {format_poly(f)}")
        w = tuple(rng.randint(1, 3) for _ in range(m))
        lhs = multiplicity_sum(f, w, grid)
        rhs = sz_rhs(f.leading_monomial(MonomialOrdering("lex", m)), w, grid.sizes)
        if lhs > rhs:
            violations += 1
            print(f"VIOLATION (schwartz-zippel) trial {trial}: {format_poly(f)}")
    print(f"selftest: {args.count} instances, {violations} violations")
    return 3 if violations else 0


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--modulus", type=int, default=None, help="prime modulus")
    common.add_argument("--grid", help="coordinate lists, e.g. '0,1,2;0,1,2'")
    common.add_argument("--weights", help="positive weights, e.g. '3,2'")
    common.add_argument("--r", type=int, default=None, help="multiplicity threshold")
    common.add_argument("--box", help="per-coordinate caps, e.g. '2,2'")
    common.add_argument("--J-explicit", dest="J_explicit", help="tuples '(0,0);(1,0)'")
    common.add_argument("--order", choices=("lex", "grlex", "grevlex"), default="grevlex")
    common.add_argument("--priority", help="1-based variable priority, e.g. '2,1'")
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="fplab",
        description="Bounds, Groebner bases, interpolation and codes for "
        "polynomials with derivative conditions over finite grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", parents=[common], help="footprint bound on #V_J")
    p_bound.add_argument("--poly", action="append", help="generator (repeatable)")
    p_bound.add_argument("--monomials", help="leading monomials for the estimate path")
    p_bound.add_argument("--oracle", action="store_true", help="brute-force cross-check")
    p_bound.set_defaults(func=cmd_bound)

    p_table = sub.add_parser("table", parents=[common], help="comparison tables")
    p_table.add_argument("--sizes", help="grid side lengths, e.g. '4,4'")
    p_table.add_argument("--golden", help="directory with expected tables")
    p_table.set_defaults(func=cmd_table)

    p_gb = sub.add_parser("groebner", parents=[common], help="reduced Groebner bases")
    p_gb.add_argument("--poly", action="append", help="generator (repeatable)")
    p_gb.set_defaults(func=cmd_groebner)

    p_interp = sub.add_parser("interpolate", parents=[common], help="Hermite interpolation")
    p_interp.add_argument("--targets", help="JSON file of point/derivative/value triples")
    p_interp.set_defaults(func=cmd_interpolate)

    p_encode = sub.add_parser("encode", parents=[common], help="evaluation codes")
    p_encode.add_argument("--monomials", help="comma-separated monomials")
    p_encode.set_defaults(func=cmd_encode)

    p_zeros = sub.add_parser("zeros", parents=[common], help="brute-force V_J")
    p_zeros.add_argument("--poly", action="append", help="generator (repeatable)")
    p_zeros.set_defaults(func=cmd_zeros)

    p_self = sub.add_parser("selftest", parents=[common], help="randomized soundness sweep")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--count", type=int, default=100)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EnumerationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
