"""Command-line front end.

Subcommands: graph, spectra, bounds, sweep, reproduce, verify.
Exit codes: 0 success, 2 usage, 3 bound-verification failure,
4 I/O failure, 5 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds, graphs, groups, spectra
from .errors import DomainError, StructureError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_IO = 4
EXIT_REPRODUCE = 5

FAMILIES = ("cyclic", "dihedral", "dicyclic", "semiprime")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return format(x, ".10g")
    return str(x)


def _group_from_args(args) -> groups.GroupSpec:
    if args.family == "semiprime":
        if args.p is None or args.q is None:
            raise DomainError("--family semiprime requires --p and --q")
        return groups.semiprime(args.p, args.q)
    if args.n is None:
        raise DomainError(f"--family {args.family} requires --n")
    return groups.GroupSpec(groups.Family(args.family), n=args.n)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_graph(args) -> int:
    g = _group_from_args(args)
    m = graphs.build_structural(g)
    if args.distance:
        m = graphs.distance_matrix(m)
    _write(args.out, graphs.to_text(m))
    return EXIT_OK


def cmd_spectra(args) -> int:
    if args.matrix is None:
        text = sys.stdin.read()
    else:
        with open(args.matrix) as fh:
            text = fh.read()
    m = graphs.from_text(text)
    result = spectra.symmetric_eigenvalues(m)
    _write(args.out, result.to_json() + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.family == "semiprime":
        if args.p is None or args.q is None:
            raise DomainError("--family semiprime requires --p and --q")
        report = bounds.bound_report("semiprime", 0, args.kind, args.p, args.q)
    else:
        if args.n is None:
            raise DomainError(f"--family {args.family} requires --n")
        graphs_order = _group_from_args(args).order  # validates parameters
        del graphs_order
        report = bounds.bound_report(args.family, args.n, args.kind)
    _write(args.out, report.to_json() + "\n")
    if not report.sandwich_holds():
        print(f"bound verification failed: {report.family} n={report.n} "
              f"kind={report.kind}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


SWEEP_COLUMNS = ("family", "n", "radius", "lower", "upper", "prior_lower",
                 "prior_upper", "lower_gap", "upper_gap", "lower_tight",
                 "upper_tight")


def _semiprime_pairs(max_pq: int) -> list[tuple[int, int]]:
    pairs = []
    for p in range(2, max_pq):
        if not groups.is_prime(p):
            continue
        for q in range(p + 1, max_pq):
            if groups.is_prime(q) and p * q <= max_pq:
                pairs.append((p, q))
    pairs.sort(key=lambda pq: (pq[0] * pq[1], pq[0]))
    return pairs


def _sweep_reports(args) -> list[bounds.BoundReport]:
    if args.family == "semiprime":
        if args.max_pq is None:
            raise DomainError("--family semiprime requires --max-pq")
        pairs = _semiprime_pairs(args.max_pq)
        if not pairs:
            raise DomainError("empty semiprime range")
        return [bounds.semiprime_report(p, q, args.kind) for p, q in pairs]
    if args.n_min is None or args.n_max is None or args.n_min > args.n_max:
        raise DomainError("sweep needs a non-empty --n-min..--n-max range")
    reports = []
    for n in range(args.n_min, args.n_max + 1):
        reports.append(bounds.bound_report(args.family, n, args.kind))
    return reports


def _sweep_row(r: bounds.BoundReport) -> dict:
    lower_gap = r.computed_radius - r.lower
    upper_gap = None if r.upper is None else r.upper - r.computed_radius
    return {
        "family": r.family,
        "n": r.n,
        "radius": r.computed_radius,
        "lower": r.lower,
        "upper": r.upper,
        "prior_lower": r.prior_lower,
        "prior_upper": r.prior_upper,
        "lower_gap": lower_gap,
        "upper_gap": upper_gap,
        "lower_tight": r.lower_tight,
        "upper_tight": r.upper_tight,
    }


def cmd_sweep(args) -> int:
    reports = _sweep_reports(args)
    rows = [_sweep_row(r) for r in reports]
    if args.format == "csv":
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(_fmt(row[c]) for c in SWEEP_COLUMNS) for row in rows]
        _write(args.out, "\n".join(lines) + "\n")
    else:
        _write(args.out, json.dumps(rows) + "\n")
    bad = [r for r in reports if not r.sandwich_holds()]
    if bad:
        for r in bad:
            print(f"bound verification failed: {r.family} n={r.n} "
                  f"kind={r.kind}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _reproduction_checks() -> list[tuple[str, float, float]]:
    """(label, expected, computed) triples for the paper's worked examples."""
    checks = []
    z6_adj = bounds.semiprime_report(2, 3, "adjacency")
    checks.append(("Z6 adjacency radius", 4.42788, z6_adj.computed_radius))
    checks.append(("Z6 cubic largest root", 4.42788, z6_adj.lower))
    c6 = graphs.build_structural_cyclic(6)
    d_avg = graphs.subset_degree_stats(c6, range(6)).average
    checks.append(("P(C6) average degree (13/3)", 13 / 3, float(d_avg)))
    d12 = bounds.adjacency_bounds_dihedral(6)
    checks.append(("D12 new lower", 4.55297, d12.lower))
    checks.append(("D12 new upper", 6.0, d12.upper))
    checks.append(("D12 prior lower", 4.42788, d12.prior_lower))
    checks.append(("D12 prior upper", 6.87737, d12.prior_upper))
    q12 = bounds.adjacency_bounds_dicyclic(3)
    checks.append(("Q12 new lower", 5.27008, q12.lower))
    checks.append(("Q12 new upper", 7.0, q12.upper))
    checks.append(("Q12 prior lower", 4.42788, q12.prior_lower))
    checks.append(("Q12 prior upper", 7.89198, q12.prior_upper))
    # prime-power closed forms: dihedral with n = 9, dicyclic with n = 2^2
    d18 = bounds.adjacency_bounds_dihedral(9)
    checks.append(("D18 lower (closed form)",
                   0.5 * (8 + math.sqrt(8 * 8 + 4)), d18.lower))
    checks.append(("D18 upper (closed form)", 9.0, d18.upper))
    checks.append(("D18 prior upper (closed form)", 8 + math.sqrt(9),
                   d18.prior_upper))
    q16 = bounds.adjacency_bounds_dicyclic(4)
    checks.append(("Q16 lower (closed form)", 4 + math.sqrt(13), q16.lower))
    checks.append(("Q16 upper (closed form)", 9.0, q16.upper))
    checks.append(("Q16 prior upper (closed form)", 7 + 2 * math.sqrt(4),
                   q16.prior_upper))
    return checks


def cmd_reproduce(args) -> int:
    failures = 0
    for label, expected, computed in _reproduction_checks():
        ok = abs(expected - computed) <= 1e-4
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {label}: expected {_fmt(expected)}, "
              f"computed {_fmt(computed)}")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} reproduction check(s) failed", file=sys.stderr)
        return EXIT_REPRODUCE
    return EXIT_OK


def _verify_checks():
    """Condensed invariant suite; yields (label, ok) pairs."""
    import numpy as np

    specs = []
    specs += [groups.cyclic(n) for n in range(2, 41)]
    specs += [groups.dihedral(n) for n in range(3, 21)]
    specs += [groups.dicyclic(n) for n in range(2, 11)]
    specs += [groups.semiprime(p, q)
              for p, q in _semiprime_pairs(96)]

    ok = all(
        np.array_equal(graphs.build_structural(g), graphs.build_definitional(g))
        for g in specs if g.order <= 96
    )
    yield "structural builders equal definitional builders (order <= 96)", ok

    ok = True
    for g in specs:
        adj = graphs.build_structural(g)
        dist = graphs.distance_matrix(adj)
        deg = adj.sum(axis=1)
        tr = dist.sum(axis=1)
        if not np.array_equal(tr, 2 * (g.order - 1) - deg):
            ok = False
    yield "transmission identity Tr(v) = 2(order-1) - deg(v)", ok

    ok = True
    for n in range(3, 61):
        for rep in (bounds.adjacency_lower_cyclic(n),
                    bounds.distance_bounds_cyclic(n)):
            ok = ok and rep.sandwich_holds()
    for n in range(3, 31):
        ok = ok and bounds.adjacency_bounds_dihedral(n).sandwich_holds()
        ok = ok and bounds.distance_bounds_dihedral(n).sandwich_holds()
    for n in range(2, 16):
        ok = ok and bounds.adjacency_bounds_dicyclic(n).sandwich_holds()
        ok = ok and bounds.distance_bounds_dicyclic(n).sandwich_holds()
    yield "bound sandwiches hold (cyclic<=60, dihedral<=30, dicyclic<=15)", ok

    ok = True
    for p, q in _semiprime_pairs(100):
        for kind in ("adjacency", "distance"):
            rep = bounds.semiprime_report(p, q, kind)
            ok = ok and abs(rep.lower - rep.computed_radius) <= 1e-7
    yield "semiprime cubic roots match Jacobi radii (pq <= 100)", ok

    ok = True
    for g in specs:
        if g.order > 64:
            continue
        adj = graphs.build_structural(g)
        full = spectra.symmetric_eigenvalues(adj)
        power = spectra.spectral_radius_power_iteration(adj)
        ok = ok and abs(full.radius - power.radius) <= 10 * spectra.TOL_POWER
        blocks = graphs.partition_blocks(g)
        quot = spectra.quotient_eigenvalues(adj, blocks)
        ok = ok and spectra.interlacing_holds(full.eigenvalues, quot)
    yield "power iteration matches Jacobi; quotients interlace (order <= 64)", ok

    ok = True
    for p, q in _semiprime_pairs(100):
        g = groups.semiprime(p, q)
        adj = graphs.build_structural(g)
        blocks = graphs.partition_blocks(g)
        ok = ok and spectra.is_equitable(adj, blocks)
        ok = ok and spectra.equitable_radius_equality(adj, blocks)
    yield "semiprime partitions equitable with radius equality (pq <= 100)", ok


def cmd_verify(args) -> int:
    failures = 0
    for label, ok in _verify_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} verification check(s) failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="power-spectra",
        description="Power graphs of finite groups: spectra and radius bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_flags(p, with_kind=False):
        p.add_argument("--family", choices=FAMILIES, required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        if with_kind:
            p.add_argument("--kind", choices=("adjacency", "distance"),
                           default="adjacency")
        p.add_argument("--out")

    p = sub.add_parser("graph", help="write a power-graph matrix")
    add_group_flags(p)
    p.add_argument("--distance", action="store_true",
                   help="emit the distance matrix instead of adjacency")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("spectra", help="eigenvalues of a matrix file")
    p.add_argument("matrix", nargs="?", help="matrix text file (default stdin)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("bounds", help="evaluate and verify radius bounds")
    add_group_flags(p, with_kind=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="bound reports over a parameter range")
    add_group_flags(p, with_kind=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--max-pq", type=int,
                   help="semiprime sweep: include all pq up to this value")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="recompute the published example values")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
