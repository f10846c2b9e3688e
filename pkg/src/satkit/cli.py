"""Command-line front end.

Subcommands: geom, qanalog, convolve, satake, oracle, certify, verlinde.
All payload output is deterministic JSON on stdout (schema-versioned, no
timestamps); human summaries go to stderr.  Exit codes: 0 success,
1 certification mismatch, 2 usage/parse error, 3 resource budget exceeded.
The SATKIT_BUDGET environment variable caps enumeration sizes.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import hecke_satake as hs
from . import lattice_oracle as lo
from . import schubert
from . import verlinde as vl
from . import weyl_rep as wr
from .errors import (DomainError, IntegralityFailure, InternalInconsistency,
                     NonPolynomialCount, SatkitError, ShapeError, TooLarge,
                     UnsupportedType)
from .root_datum import RootDatum, Vec, dominant_coweights_in_box, make_root_datum

SCHEMA = "satkit/1"


def _parse_coweight(text: str) -> Vec:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise DomainError(f"cannot parse coweight {text!r}: "
                          "expected comma-separated integers")


def _parse_qlist(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise DomainError(f"cannot parse q list {text!r}")


def _datum(args) -> RootDatum:
    label = args.type.upper()
    if label == "GL":
        return make_root_datum(f"GL({args.rank})")
    return make_root_datum(f"{label}{args.rank}")


def _emit(payload: dict, summary: str = "") -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if summary:
        print(summary, file=sys.stderr)


def _qpoly_json(p) -> list[int]:
    return list(p.coeffs)


def cmd_geom(args) -> int:
    datum = _datum(args)
    mu = _parse_coweight(args.mu)
    payload = {
        "schema": SCHEMA,
        "datum": datum.label,
        "mu": list(mu),
        "dim": schubert.schubert_dim(datum, mu),
        "parity": schubert.parity(datum, mu),
        "minuscule": schubert.is_minuscule(datum, mu),
        "quasi_minuscule": schubert.is_quasi_minuscule(datum, mu),
        "opposite_codim": schubert.opposite_codim(datum, mu),
        "closure_cells": [list(l) for l in schubert.closure_cells(datum, mu)],
        "mv_table": schubert.mv_basis_table_json(datum, mu),
    }
    _emit(payload, f"{datum.label}: cell of {list(mu)} has dimension "
                   f"{payload['dim']} with {len(payload['closure_cells'])} strata")
    return 0


def cmd_qanalog(args) -> int:
    datum = _datum(args)
    mu = _parse_coweight(args.mu)
    lam = _parse_coweight(args.lam)
    m = wr.lusztig_q_analog(datum, mu, lam)
    payload = {"schema": SCHEMA, "datum": datum.label,
               "mu": list(mu), "lambda": list(lam),
               "m_poly": _qpoly_json(m)}
    if m.is_zero and datum.coroot_coordinates(
            tuple(a - b for a, b in zip(mu, lam))) is None:
        payload["a_poly"] = []
        payload["note"] = "component mismatch"
    elif datum.leq(lam, mu):
        payload["a_poly"] = _qpoly_json(wr.ic_stalk_polynomial(datum, mu, lam))
    else:
        payload["a_poly"] = None
        payload["note"] = "lambda not below mu"
    if args.bk_oracle:
        bk = wr.bk_oracle(datum, mu, lam)
        payload["bk_poly"] = _qpoly_json(bk)
        payload["agree"] = bk == m
    _emit(payload, f"m = {m}")
    return 0


def cmd_convolve(args) -> int:
    datum = _datum(args)
    lam = _parse_coweight(args.lam)
    mu = _parse_coweight(args.mu)
    product = hs.convolve_basis(datum, lam, mu)
    payload = {"schema": SCHEMA, "datum": datum.label,
               "lambda": list(lam), "mu": list(mu),
               "terms": product.to_json()}
    _emit(payload, f"c_{list(lam)} * c_{list(mu)}: "
                   f"{len(payload['terms'])} terms")
    return 0


def cmd_satake(args) -> int:
    datum = _datum(args)
    mu = _parse_coweight(args.mu)
    chi = hs.satake_transform(datum, hs.c_basis(datum, mu))
    payload = {"schema": SCHEMA, "datum": datum.label, "mu": list(mu),
               "transform_of": "c_basis", "terms": chi.to_json()}
    _emit(payload, f"S(c_{list(mu)}): {len(payload['terms'])} terms")
    return 0


def _auto_workers(requested: Optional[int], candidates: int) -> int:
    if requested:
        return requested
    # default to available parallelism, but only when the enumeration is
    # large enough to amortize process startup
    if candidates >= 50_000:
        return os.cpu_count() or 1
    return 1


def _random_unimodular(ring, n: int, rng: random.Random):
    rows = [[ring.one if i == j else () for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        coeff = ring.normalize([rng.randrange(ring.field.q)
                                for _ in range(rng.randrange(1, 3))])
        rows[b] = [ring.add(x, ring.mul(coeff, y))
                   for x, y in zip(rows[b], rows[a])]
    return rows


def _oracle_selftest(n: int, q: int, N: int, rng: random.Random) -> dict:
    """Randomized invariance checks, reproducible through --seed."""
    from .finite_field import GF, PolyRing
    ring = PolyRing(GF(q))
    checks = {"divisor_invariance": True, "duality": True}
    for _ in range(5):
        exps = sorted((rng.randrange(0, 2 * N + 1) for _ in range(n)),
                      reverse=True)
        M = [[ring.t_power(exps[i]) if i == j else () for j in range(n)]
             for i in range(n)]
        base = lo.elementary_divisors(M, q)
        g = _random_unimodular(ring, n, rng)
        h = _random_unimodular(ring, n, rng)
        gm = [[ring.normalize(())] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = ()
                for k in range(n):
                    acc = ring.add(acc, ring.mul(g[i][k], M[k][j]))
                gm[i][j] = acc
        gmh = [[()] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = ()
                for k in range(n):
                    acc = ring.add(acc, ring.mul(gm[i][k], h[k][j]))
                gmh[i][j] = acc
        if lo.elementary_divisors(gmh, q) != base:
            checks["divisor_invariance"] = False
    lats = list(lo.enumerate_lattices(n, q, N))
    for _ in range(10):
        l1, l2 = rng.choice(lats), rng.choice(lats)
        fwd = lo.relative_position(l1, l2)
        bwd = lo.relative_position(l2, l1)
        if bwd != tuple(sorted((-x for x in fwd), reverse=True)):
            checks["duality"] = False
    return checks


def cmd_oracle(args) -> int:
    n, q, N = args.n, args.q, args.window
    workers = _auto_workers(args.workers, lo.candidate_count(n, q, N))
    report = lo.oracle_report(n, q, N, conv_bound=args.conv_bound,
                              workers=workers)
    payload = {"schema": SCHEMA, **report}
    if args.selftest:
        rng = random.Random(args.seed)
        payload["selftest"] = _oracle_selftest(n, q, N, rng)
    if args.csv:
        paths = lo.report_to_csv(report, args.csv)
        print("wrote " + ", ".join(paths), file=sys.stderr)
    _emit(payload, f"GL({n}) over F_{q}, window {N}: "
                   f"{sum(r['count'] for r in report['cells'])} lattices in "
                   f"{len(report['cells'])} cells")
    if args.selftest and not all(payload["selftest"].values()):
        return 1
    return 0


def run_certification(n: int, q_list: Sequence[int], coord_min: int,
                      coord_max: int, budget: Optional[int] = None) -> dict:
    """Compare symbolic convolution against brute lattice counts for every
    dominant pair in the coordinate box and every admissible nu."""
    datum = make_root_datum(f"GL({n})")
    doms = list(dominant_coweights_in_box(datum, coord_min, coord_max))
    rows = []
    all_match = True
    for lam, mu in itertools.product(doms, repeat=2):
        product = hs.convolve_basis(datum, lam, mu)
        total = tuple(a + b for a, b in zip(lam, mu))
        admissible = datum.dominant_below(total)
        for q in q_list:
            values = hs.evaluate_at(datum, product, q)
            for nu in admissible:
                sym = values.get(nu, 0)
                brute = lo.brute_convolution(lam, mu, nu, q, budget=budget)
                match = sym == brute
                all_match = all_match and match
                rows.append({"lambda": list(lam), "mu": list(mu),
                             "nu": list(nu), "q": q,
                             "symbolic": sym, "brute": brute, "match": match})
    return {"schema": SCHEMA, "n": n, "q_list": list(q_list),
            "coord_min": coord_min, "coord_max": coord_max,
            "rows": rows, "all_match": all_match}


def cmd_certify(args) -> int:
    q_list = _parse_qlist(args.q_list)
    coord_min = args.coord_min if args.coord_min is not None else -args.bound
    coord_max = args.coord_max if args.coord_max is not None else args.bound
    report = run_certification(args.n, q_list, coord_min, coord_max)
    _emit(report, f"{len(report['rows'])} rows, "
                  f"{'all match' if report['all_match'] else 'MISMATCHES'}")
    return 0 if report["all_match"] else 1


def cmd_verlinde(args) -> int:
    if args.batch:
        lines = []
        with open(args.batch) as fh:
            for raw in fh:
                raw = raw.strip()
                if not raw:
                    continue
                spec = json.loads(raw)
                query = vl.VerlindeQuery(spec["n"], spec["g"], spec["m"])
                out = vl.verlinde_sl_report(query)
                out["schema"] = SCHEMA
                lines.append(out)
        for out in lines:
            json.dump(out, sys.stdout)
            sys.stdout.write("\n")
        print(f"{len(lines)} queries", file=sys.stderr)
        return 0
    if args.ade:
        if args.g is None:
            raise DomainError("--ade requires --g")
        dim = vl.level_one_ade(args.ade, args.g)
        _emit({"schema": SCHEMA, "type": args.ade, "g": args.g,
               "dimension": dim},
              f"level-one {args.ade}, genus {args.g}: {dim}")
        return 0
    if args.n is None or args.g is None or args.m is None:
        raise DomainError("need --n, --g and --m (or --ade/--batch)")
    report = vl.verlinde_sl_report(vl.VerlindeQuery(args.n, args.g, args.m))
    report["schema"] = SCHEMA
    _emit(report, f"dim = {report['dimension']} "
                  f"(residual {report['residual']:.2e})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satkit",
        description="Exact affine-Grassmannian combinatorics with a "
                    "finite-field lattice oracle.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized self-checks (reproducible)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_datum(p):
        p.add_argument("--type", required=True,
                       help="group series: GL, A, B, C, D, or G")
        p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("geom", help="Schubert-cell geometry of one coweight")
    add_datum(p)
    p.add_argument("--mu", required=True, help="coweight, e.g. 2,0")
    p.set_defaults(func=cmd_geom)

    p = sub.add_parser("qanalog", help="Lusztig q-analog and stalk polynomial")
    add_datum(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--lam", "--lambda", dest="lam", required=True)
    p.add_argument("--bk-oracle", action="store_true",
                   help="also run the explicit filtration oracle (type A)")
    p.set_defaults(func=cmd_qanalog)

    p = sub.add_parser("convolve", help="product c_lambda * c_mu")
    add_datum(p)
    p.add_argument("--lam", "--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("satake", help="Satake transform of c_mu")
    add_datum(p)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_satake)

    p = sub.add_parser("oracle", help="brute-force lattice census over F_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--window", "-N", type=int, required=True)
    p.add_argument("--conv-bound", type=int, default=None,
                   help="also tabulate convolutions on this coordinate box")
    p.add_argument("--csv", default=None, help="CSV path prefix")
    p.add_argument("--workers", type=int, default=None,
                   help="enumeration processes (default: auto)")
    p.add_argument("--selftest", action="store_true",
                   help="run seeded randomized invariance checks")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("certify",
                       help="symbolic vs brute convolution certification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", dest="q_list", required=True,
                   help="comma-separated prime powers, e.g. 2,3")
    p.add_argument("--bound", type=int, default=1,
                   help="coordinates range over [-bound, bound]")
    p.add_argument("--coord-min", type=int, default=None)
    p.add_argument("--coord-max", type=int, default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verlinde", help="certified Verlinde dimensions")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--ade", default=None, help="ADE label for level one")
    p.add_argument("--batch", default=None,
                   help="JSON-lines file of {n, g, m} queries")
    p.set_defaults(func=cmd_verlinde)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"satkit: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (DomainError, UnsupportedType, ShapeError) as exc:
        print(f"satkit: {exc}", file=sys.stderr)
        return 2
    except (IntegralityFailure, NonPolynomialCount,
            InternalInconsistency) as exc:
        print(f"satkit: check failed: {exc}", file=sys.stderr)
        return 1
    except SatkitError as exc:
        print(f"satkit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
