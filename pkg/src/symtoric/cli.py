"""Command-line interface.

Exit codes: 0 success, 2 usage or domain error, 3 internal identity violation.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys

from . import euler, mutation, semigroup
from .errors import DomainError, InternalError, SymtoricError
from .newton import FunctionSupport, validate_support
from .verify import run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _parse_d(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"--d must be a comma-separated list of integers, got {text!r}") from None


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B") from None


def _degrees_from_args(args) -> tuple[int, tuple[int, ...]]:
    """Resolve (n, d) from --d or --support, cross-checking --n."""
    if args.support:
        with open(args.support) as fh:
            fs = FunctionSupport.from_json(json.load(fh))
        result = validate_support(fs)
        if not result.ok:
            raise DomainError(f"no pure monomial on rays {result.missing_rays}")
        if result.outside:
            print(
                f"warning: monomials {result.outside} lie outside the Newton polyhedron "
                "of sum z_i^d_i; the closed formula's hypothesis fails",
                file=sys.stderr,
            )
        n, d = fs.n, result.degrees.d
    elif args.d:
        d = _parse_d(args.d)
        n = len(d)
    else:
        raise UsageError("give either --d or --support")
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match {n} degrees")
    return n, d


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_generators(args) -> int:
    gs = semigroup.build_generators(args.n)
    rows = [{"pos": k + 1, "ij": list(lab), "vector": list(v)} for k, (lab, v) in enumerate(zip(gs.labels, gs))]
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            i, j = r["ij"]
            print(f"m{r['pos']:<3d} (i,j)=({i},{j})  {tuple(r['vector'])}")
    return EXIT_OK


def cmd_chi(args) -> int:
    n, d = _degrees_from_args(args)
    report = euler.compute_report(
        n, d, nondegenerate=not args.no_nondegenerate, isolated_critical=not args.no_isolated
    )
    text = "\n".join(
        [
            f"n={n} d={','.join(map(str, d))}",
            f"chi face_sum={report.chi_face_sum} closed={report.chi_closed} product={report.chi_product}",
            f"chi={report.chi_face_sum} agreement={str(report.chi_agree).lower()}",
        ]
    )
    _emit(report.to_json(), args.json, text)
    return EXIT_OK if report.chi_agree and report.bmps_ok else EXIT_INTERNAL


def cmd_eu(args) -> int:
    if args.d or args.support:
        n, d = _degrees_from_args(args)
    elif args.n is None:
        raise UsageError("eu needs --n")
    else:
        n, d = args.n, None
    eu = euler.euler_obstruction(n)
    out = {"schema": euler.SCHEMA_VERSION, "n": n, "eu": {"variety": eu}}
    lines = [f"n={n} Eu={eu}"]
    if d is not None:
        chi = euler.chi_face_sum(n, d)
        out["d"] = list(d)
        out["eu"]["function"] = eu - chi
        out["chi"] = chi
        lines.append(f"Eu_f={eu - chi} (chi={chi})")
    _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_milnor(args) -> int:
    n, d = _degrees_from_args(args)
    if d[0] < 2:
        raise DomainError("milnor needs d_1 >= 2")
    chi_aff = euler.chi_affine_space(n, d)
    ok = True
    try:
        mu = euler.milnor_number_brieskorn(n, d)
        eu_f = euler.euler_obstruction_f_via_milnor(n, d)
    except InternalError as exc:
        print(f"identity violated: {exc}", file=sys.stderr)
        mu = (-1) ** (n - 1) * (chi_aff - 1)
        eu_f = None
        ok = False
    out = {
        "schema": euler.SCHEMA_VERSION,
        "n": n,
        "d": list(d),
        "milnor": {"mu": mu, "chi_affine": chi_aff, "identity_ok": ok},
        "eu": {"function": eu_f},
    }
    text = f"n={n} d={','.join(map(str, d))}\nmu={mu} chi_affine={chi_aff} Eu_f={eu_f} identity={'OK' if ok else 'FAIL'}"
    _emit(out, args.json, text)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_verify(args) -> int:
    results = run_suite(args.n_max, bound=args.bound, samples=args.samples, seed=args.seed)
    ok = all(r.ok for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": euler.SCHEMA_VERSION,
                    "n_max": args.n_max,
                    "mutation": mutation.active(),
                    "ok": ok,
                    "checks": [r.to_json() for r in results],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            print(f"{status}  {r.name:<16s} checked={r.checked:<7d} {r.seconds:7.2f}s")
            for f in r.failures:
                print(f"      {f}")
        print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_INTERNAL


def _table_rows(args) -> tuple[list[str], list[list]]:
    if args.kind == "parity":
        ns = _parse_range(args.n)
        if not ns or ns.start < 2:
            raise DomainError("parity table needs n >= 2")
        return ["n", "eu", "chi_linear"], [[n, euler.euler_obstruction(n), euler.chi_linear(n)] for n in ns]
    ns = _parse_range(args.n)
    rows = []
    for n in ns:
        if n < 2:
            raise DomainError("chi-grid needs n >= 2")
        for d in itertools.product(range(1, args.d_max + 1), repeat=n):
            fs = euler.chi_face_sum(n, d)
            cf = euler.chi_closed_form(n, d)
            pf = euler.chi_product_form(n, d)
            rows.append([n, ",".join(map(str, d)), fs, cf, pf, euler.euler_obstruction(n) - fs])
    return ["n", "d", "chi_face_sum", "chi_closed", "chi_product", "eu_f"], rows


def cmd_table(args) -> int:
    header, rows = _table_rows(args)
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif args.json:
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=2))
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))
    if args.kind == "chi-grid" and any(not (r[2] == r[3] == r[4]) for r in rows):
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="symtoric",
        description="Toric combinatorics and Milnor-fiber invariants of rank <= 1 symmetric matrices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generators", help="list the semigroup generators")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generators)

    def add_degree_args(sp, need_n=False):
        sp.add_argument("--n", type=int, required=need_n)
        sp.add_argument("--d", help="comma-separated degrees, e.g. 2,2,2")
        sp.add_argument("--support", help="JSON file {n, monomials: [[index, exponent], ...]}")
        sp.add_argument("--json", action="store_true")

    c = sub.add_parser("chi", help="Euler characteristic of the Milnor fiber, all paths")
    add_degree_args(c)
    c.add_argument("--no-nondegenerate", action="store_true", help="record that non-degeneracy is NOT attested")
    c.add_argument("--no-isolated", action="store_true", help="record that an isolated critical point is NOT attested")
    c.set_defaults(func=cmd_chi)

    e = sub.add_parser("eu", help="local Euler obstruction of S^2_n (and of f with --d)")
    add_degree_args(e)
    e.set_defaults(func=cmd_eu)

    m = sub.add_parser("milnor", help="mu(g), chi(G_0) and the Eu_f identity")
    add_degree_args(m)
    m.set_defaults(func=cmd_milnor)

    v = sub.add_parser("verify", help="run the self-verification suite")
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--bound", type=int, default=2, help="saturation box bound")
    v.add_argument("--samples", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="batch tables (parity of Eu, chi grid)")
    t.add_argument("kind", choices=["parity", "chi-grid"])
    t.add_argument("--n", default="2..15", help="n or range A..B")
    t.add_argument("--d-max", type=int, default=3)
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal identity violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SymtoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
