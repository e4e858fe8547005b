"""Command-line front end.

Exit codes: 0 ok, 1 I/O failure, 2 domain/validation error (including a
census that disagrees with theory), 3 estimation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .boxcover import CBB, DEFAULT_TRIALS, OBCA, box_dimension, similarity_dimension
from .complex import PureComplex
from .errors import DomainError, EstimationError, SizeError
from .gdd import (
    empirical_gdd,
    fit_power_law,
    gamma_closed_form,
    ratio_C_l,
    theory_distribution,
    y_table,
)
from .generator import DEFAULT_FACET_CAP, GeneratorParams, compute_S, generate, predicted_facets

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_ESTIMATION = 0, 1, 2, 3


class CensusMismatch(DomainError):
    pass


def _info_stream(out: str | None):
    # keep stdout clean when it carries the data product
    return sys.stderr if out in (None, "-") else sys.stdout


def _load(path: str) -> PureComplex:
    try:
        return io.read_complex(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise OSError(f"cannot read complex from {path}: {exc}") from exc


def _params_for(args) -> GeneratorParams:
    return GeneratorParams(args.k, args.m, args.t, args.seed or 0)


def _complex_for(args) -> PureComplex:
    if getattr(args, "input", None):
        return _load(args.input)
    if args.k is None or args.m is None or args.t is None:
        raise DomainError("give --in FILE or all of --k --m --t")
    return generate(_params_for(args), args.facet_cap)


def cmd_generate(args) -> int:
    p = _params_for(args)
    c = generate(p, args.facet_cap)
    with io.open_output(args.out) as fh:
        fh.write(io.dumps_complex(c))
    print(
        f"nodes={c.n} edges={c.skeleton.n_edges} facets={len(c.facets)} "
        f"d_s={io.fmt(similarity_dimension(p))}",
        file=_info_stream(args.out),
    )
    return EXIT_OK


def cmd_skeleton(args) -> int:
    c = _complex_for(args)
    with io.open_output(args.out) as fh:
        fh.write(io.edges_tsv(c.skeleton))
    return EXIT_OK


def cmd_boxdim(args) -> int:
    c = _load(args.input)
    seed = args.seed if args.seed is not None else (c.params.seed if c.params else 0)
    result, est = box_dimension(c.skeleton, args.method, args.trials, seed, args.threads)
    with io.open_output(args.out) as fh:
        fh.write(io.box_csv(result))
    info = _info_stream(args.out)
    if c.params is not None:
        ds = similarity_dimension(c.params)
        ds_s, err_s = io.fmt(ds), io.fmt(abs(est.d_B - ds) / ds)
    else:
        ds_s = err_s = "nan"
    print("method,d_B,r2,d_s,rel_err", file=info)
    print(f"{args.method},{io.fmt(est.d_B)},{io.fmt(est.r_squared)},{ds_s},{err_s}", file=info)
    return EXIT_OK


def cmd_gdd(args) -> int:
    c = _load(args.input)
    d = empirical_gdd(c, args.l)
    with io.open_output(args.out) as fh:
        fh.write(io.gdd_csv(d))
    return EXIT_OK


def theory_report(K: int, m: int, t: int | None) -> dict:
    """Everything ``theory`` prints, as plain data (big ints kept exact)."""
    S = compute_S(K, m)
    report: dict = {"K": K, "m": m, "t": t, "S": S, "d_s": similarity_dimension(GeneratorParams(K, m, 0))}
    if K >= 3:
        report["C"] = {str(l): ratio_C_l(K, m, l) for l in range(1, K)}
        if m >= 1:
            report["gamma"] = {str(l): gamma_closed_form(K, m, l).gamma for l in range(1, K)}
        if t is not None:
            table = y_table(K, m, t)
            report["Y"] = {str(l): [table.Y(l, r) for r in range(K - l + 1)] for l in range(1, K + 1)}
    return report


def cmd_theory(args) -> int:
    K, m, t = args.k, args.m, args.t
    if K < 3 and t is not None:
        raise DomainError(f"Y tables need K >= 3 (got K={K}); drop --t for S and d_s only")
    rep = theory_report(K, m, t)
    print(f"S={rep['S']}")
    print(f"d_s={io.fmt(rep['d_s'])}")
    if K < 3:
        print("Y, C_l and gamma omitted: the degree recurrences need K >= 3")
    else:
        if "Y" in rep:
            for l, row in rep["Y"].items():
                print(f"Y(l={l},t={t})=" + ",".join(str(y) for y in row))
        else:
            print("Y omitted: pass --t to tabulate counts")
        for l, v in rep["C"].items():
            print(f"C_{l}={io.fmt(v)}")
        for l, v in rep.get("gamma", {}).items():
            print(f"gamma_{l}={io.fmt(v)}")
    if args.json:
        with io.open_output(args.json) as fh:
            json.dump(rep, fh, indent=1)
            fh.write("\n")
    return EXIT_OK


def compare_rows(K: int, m: int, t: int, c: PureComplex | None) -> list[dict]:
    """Per-``l`` comparison of census (if a complex is given) and exponents."""
    table = y_table(K, m, t)
    rows = []
    for l in range(1, K):
        row: dict = {"l": l, "exact_match": None, "gamma_fit": None, "gamma_closed": None, "rel_err": None}
        theory = theory_distribution(K, m, t, l)
        dist = theory
        if c is not None:
            dist = empirical_gdd(c, l)
            row["exact_match"] = dist.counts == table.degree_counts(l)
        if m >= 1:
            row["gamma_closed"] = gamma_closed_form(K, m, l).gamma
        if len(dist.counts) >= 2:
            row["gamma_fit"] = fit_power_law(dist).gamma
        if row["gamma_fit"] is not None and row["gamma_closed"] is not None:
            row["rel_err"] = abs(row["gamma_fit"] - row["gamma_closed"]) / row["gamma_closed"]
        rows.append(row)
    return rows


def cmd_compare(args) -> int:
    if args.input:
        c = _load(args.input)
        if c.params is None:
            raise DomainError("complex file lacks m/t")
        K, m, t = c.K, c.params.m, c.params.t
    else:
        K, m, t = args.k, args.m, args.t
        if None in (K, m, t):
            raise DomainError("give --in FILE or all of --k --m --t")
        p = GeneratorParams(K, m, t, args.seed or 0)
        too_big = args.facet_cap is not None and predicted_facets(p) > args.facet_cap
        c = None if (args.table_only or too_big) else generate(p, args.facet_cap)
    if K < 3:
        raise DomainError("compare needs K >= 3")
    rows = compare_rows(K, m, t, c)
    print("mode=" + ("table" if c is None else "network"))
    print("l,exact_match,gamma_fit,gamma_closed,rel_err")

    def cell(v):
        if v is None:
            return "na"
        if isinstance(v, bool):
            return str(v).lower()
        return io.fmt(v)

    for r in rows:
        print(",".join([str(r["l"])] + [cell(r[k]) for k in ("exact_match", "gamma_fit", "gamma_closed", "rel_err")]))
    if any(r["exact_match"] is False for r in rows):
        raise CensusMismatch("empirical census disagrees with the theory table")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hofnet", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def params(p, required=True):
        p.add_argument("--k", type=int, required=required, help="complex dimension K")
        p.add_argument("--m", type=int, required=required, help="multiplier m")
        p.add_argument("--t", type=int, required=required, help="iterations t")

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--facet-cap", type=int, default=DEFAULT_FACET_CAP)

    g = sub.add_parser("generate", help="build K_t(K, m) and write it as JSON")
    params(g)
    common(g)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("skeleton", help="write the 1-skeleton as a TSV edge list")
    params(s, required=False)
    common(s)
    s.add_argument("--in", dest="input")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_skeleton)

    b = sub.add_parser("boxdim", help="box-counting dimension of a complex file")
    b.add_argument("--in", dest="input", required=True)
    b.add_argument("--method", choices=(CBB, OBCA), default=CBB)
    b.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    b.add_argument("--seed", type=int, default=None)
    b.add_argument("--threads", type=int, default=None, help="default: all CPUs")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_boxdim)

    d = sub.add_parser("gdd", help="empirical generalized-degree distribution")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--out", default="-")
    d.set_defaults(func=cmd_gdd)

    th = sub.add_parser("theory", help="S, d_s, Y table, C_l and gamma")
    th.add_argument("--k", type=int, required=True)
    th.add_argument("--m", type=int, required=True)
    th.add_argument("--t", type=int, default=None)
    th.add_argument("--json", default=None, help="also dump the report to this path")
    th.set_defaults(func=cmd_theory)

    c = sub.add_parser("compare", help="census vs theory and fitted vs closed-form gamma")
    params(c, required=False)
    common(c)
    c.add_argument("--in", dest="input")
    c.add_argument("--table-only", action="store_true")
    c.set_defaults(func=cmd_compare)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except EstimationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
