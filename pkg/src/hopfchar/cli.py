"""Command-line front end.

Every subcommand emits one JSON report (stdout or --out).  Exit status is 0
when all checks in the run pass, 1 when a check fails (the report carries a
witness), and 2 for configuration errors.  Reports depend only on the
configuration and seed, never on wall-clock or filesystem state, so reruns
are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import reports
from .characters import (RATIONAL, TruncatedCharacter, TruncatedInfChar,
                         convolve, counterexample_demo, exp_infchar, inverse,
                         linf_norm, log_character)
from .control import (antipode_ratio, coproduct_ratio, rlb_check,
                      right_handed_check)
from .evolution import evolve
from .growth import BUILTIN_FAMILIES, builtin, check_all_axioms
from .hopf import check_hopf_axioms
from .instances import INSTANCE_NAMES, instance_by_name
from .series import (bseries_order_terms, exact_flow_character,
                     pseries_order_terms, wordseries_order_terms)

SAFETY_LIMITS = {"tree": 12, "fdb": 14, "word": 10, "poly": 64}

MAX_DEGREE_ENV = "HOPFCHAR_MAX_DEGREE"


class ConfigError(Exception):
    pass


def _instance_kind(name: str) -> str:
    if name in ("ck", "ck2"):
        return "tree"
    if name.startswith("fdb"):
        return "fdb"
    if name.startswith("shuffle"):
        return "word"
    return "poly"


def degree_limit(kind: str) -> int:
    override = os.environ.get(MAX_DEGREE_ENV)
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise ConfigError(f"{MAX_DEGREE_ENV} must be an integer, got {override!r}")
    return SAFETY_LIMITS[kind]


def _load_instance(name: str, max_degree: int):
    try:
        H = instance_by_name(name)
    except (ValueError, KeyError) as exc:
        raise ConfigError(str(exc))
    limit = degree_limit(_instance_kind(H.name))
    if max_degree > limit:
        raise ConfigError(
            f"max degree {max_degree} exceeds the safety limit {limit} for "
            f"{H.name} (override with {MAX_DEGREE_ENV})")
    if max_degree < 0:
        raise ConfigError("max degree must be nonnegative")
    return H


def _load_family(name: str):
    try:
        return builtin(name)
    except (ValueError, KeyError) as exc:
        raise ConfigError(str(exc))


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a rational number: {text!r}")


def _parse_point(text: str) -> tuple:
    return tuple(_parse_rational(p) for p in text.split(","))


# ---------------------------------------------------------------- workflows


def run_enumerate(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    rows = []
    for n in range(1, args.max_degree + 1):
        rows.append({"degree": n,
                     "generators": len(H.generators(n)),
                     "basis": len(H.basis(n))})
    return True, {"instance": H.name, "max_degree": args.max_degree, "table": rows}


def run_axioms(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    rep = check_hopf_axioms(H, args.max_degree, fail_fast=args.fail_fast)
    payload = rep.to_dict()
    payload.pop("elapsed_seconds", None)  # keep reruns byte-identical
    return rep.ok, payload


def run_control_check(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    fam = _load_family(args.family)
    if args.k2 < args.k1:
        raise ConfigError("k2 must be at least k1")
    op = coproduct_ratio if args.map == "coproduct" else antipode_ratio
    rep = op(H, fam, args.k1, args.k2, args.max_degree)
    if args.csv:
        rows = [[r.degree, r.element, repr(float(r.norm)), repr(float(r.weight)),
                 repr(float(r.ratio))] for r in rep.rows]
        data = reports.render_csv(["degree", "element", "norm", "weight", "ratio"], rows)
        with open(args.csv, "wb") as fh:
            fh.write(data)
    return rep.verdict == "bounded", rep.to_dict()


def run_rlb_check(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    if args.max_degree < 2:
        raise ConfigError("rlb-check needs max degree >= 2")
    rep = rlb_check(H, args.max_degree)
    return True, rep.to_dict()


def run_right_handed(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    rep = right_handed_check(H, args.max_degree)
    return True, rep.to_dict()


def run_evolve(args) -> tuple[bool, dict]:
    H = _load_instance(args.hopf, args.max_degree)
    doc = _read_json(args.eta)
    try:
        eta = reports.curve_from_json(doc, H)
    except ValueError as exc:
        raise ConfigError(str(exc))
    if args.max_degree > eta.N:
        raise ConfigError(f"max degree {args.max_degree} exceeds the eta file's N={eta.N}")
    gamma = evolve(H, eta, args.max_degree)
    gamma_doc = reports.curve_to_json(gamma)
    if args.emit:
        with open(args.emit, "wb") as fh:
            fh.write(reports.render_report(gamma_doc))
    payload = {"instance": H.name, "max_degree": args.max_degree, "gamma": gamma_doc}
    if args.at is not None:
        t = _parse_rational(args.at)
        payload["at"] = {"t": str(t),
                         "character": reports.character_to_json(gamma.at(t))}
    return True, payload


def _load_character(path: str):
    doc = _read_json(path)
    try:
        return reports.character_from_json(doc)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"bad character file {path}: {exc}")


def run_char(args) -> tuple[bool, dict]:
    phi = _load_character(args.a)
    payload: dict = {"op": args.op, "instance": phi.hopf.name, "N": phi.N}
    result = None
    try:
        if args.op == "conv":
            if not args.b:
                raise ConfigError("conv needs --b")
            psi = _load_character(args.b)
            if not isinstance(phi, TruncatedCharacter) or not isinstance(psi, TruncatedCharacter):
                raise ConfigError("conv expects two multiplicative characters")
            result = convolve(phi, psi)
        elif args.op == "inv":
            if not isinstance(phi, TruncatedCharacter):
                raise ConfigError("inv expects a multiplicative character")
            result = inverse(phi)
        elif args.op == "exp":
            if not isinstance(phi, TruncatedInfChar):
                raise ConfigError("exp expects an infinitesimal character file (kind inf)")
            result = exp_infchar(phi)
        elif args.op == "log":
            if not isinstance(phi, TruncatedCharacter):
                raise ConfigError("log expects a multiplicative character")
            result = log_character(phi)
        else:  # norm
            fam = _load_family(args.family)
            val = linf_norm(phi, fam, args.k, over=args.over)
            enc = reports.encode_rational(val) if isinstance(val, (int, Fraction)) else float(val)
            payload.update({"family": fam.name, "k": args.k, "over": args.over,
                            "value": enc})
    except ValueError as exc:
        raise ConfigError(str(exc))
    if result is not None:
        out_doc = reports.character_to_json(result)
        payload["character"] = out_doc
        if args.emit:
            with open(args.emit, "wb") as fh:
                fh.write(reports.render_report(out_doc))
    return True, payload


def _series_rows(terms, start, h):
    rows = []
    partial = list(start)
    hp = 1
    for n, term in enumerate(terms, start=1):
        hp = hp * h
        inc_vec = [hp * v for v in term]
        partial = [u + v for u, v in zip(partial, inc_vec)]
        inc = max((abs(v) for v in inc_vec), default=0)
        rows.append({"order": n, "increment": float(inc),
                     "partial": [float(v) for v in partial]})
    return rows, partial


def _emit_series(args, payload, rows):
    if args.csv:
        data = reports.series_csv([r["order"] for r in rows],
                                  [r["increment"] for r in rows],
                                  [r["partial"] for r in rows])
        with open(args.csv, "wb") as fh:
            fh.write(data)
    return True, payload


def _tree_coefficients(path: str, expected_instance: str) -> dict:
    phi = _load_character(path)
    if phi.hopf.name != expected_instance:
        raise ConfigError(f"coefficient file must be a {expected_instance} character")
    out = {}
    for g, v in phi.values.items():
        out[phi.hopf.tree_of(g.factors[0])] = v
    return out


def run_bseries(args) -> tuple[bool, dict]:
    if args.max_order > degree_limit("tree"):
        raise ConfigError(f"max order {args.max_order} exceeds the tree safety limit")
    f = _field_or_error(reports.field_from_json, args.field)
    y0 = _parse_point(args.y)
    if len(y0) != f.dim:
        raise ConfigError(f"initial point has {len(y0)} components, field has {f.dim}")
    h = _parse_rational(args.h)
    if args.coeffs == "exact-flow":
        a = exact_flow_character(args.max_order)
    else:
        a = _tree_coefficients(args.coeffs, "ck")
    terms = bseries_order_terms(a, f, y0, args.max_order)
    rows, final = _series_rows(terms, y0, h)
    payload = {"series": "bseries", "dim": f.dim, "h": str(h),
               "max_order": args.max_order, "coefficients": args.coeffs,
               "rows": rows, "final": [float(v) for v in final]}
    return _emit_series(args, payload, rows)


def run_pseries(args) -> tuple[bool, dict]:
    if args.max_order > degree_limit("tree"):
        raise ConfigError(f"max order {args.max_order} exceeds the tree safety limit")
    system = _field_or_error(reports.coloured_system_from_json, args.system)
    p0 = _parse_point(args.p)
    q0 = _parse_point(args.q)
    if len(p0) != system.dim or len(q0) != system.dim:
        raise ConfigError("p and q must each have dim components")
    h = _parse_rational(args.h)
    if args.coeffs == "exact-flow":
        a = exact_flow_character(args.max_order, colours=2)
    else:
        a = _tree_coefficients(args.coeffs, "ck2")
    pairs = pseries_order_terms(a, system, p0, q0, args.max_order)
    terms = [tp + tq for tp, tq in pairs]
    rows, final = _series_rows(terms, tuple(p0) + tuple(q0), h)
    payload = {"series": "pseries", "dim": system.dim, "h": str(h),
               "max_order": args.max_order, "coefficients": args.coeffs,
               "rows": rows, "final_p": [float(v) for v in final[:system.dim]],
               "final_q": [float(v) for v in final[system.dim:]]}
    return _emit_series(args, payload, rows)


def run_wordseries(args) -> tuple[bool, dict]:
    if args.max_length > degree_limit("word"):
        raise ConfigError(f"max length {args.max_length} exceeds the word safety limit")
    system = _field_or_error(reports.word_system_from_json, args.system)
    x0 = _parse_point(args.x)
    if len(x0) != system.dim:
        raise ConfigError(f"point has {len(x0)} components, fields have {system.dim}")
    if args.coeffs == "exp-single":
        if len(system.alphabet) != 1:
            raise ConfigError("exp-single coefficients need a one-letter alphabet")
        from math import factorial

        def delta(w):
            return Fraction(1, factorial(len(w)))
    else:
        phi = _load_character(args.coeffs)
        expected = f"shuffle:{system.alphabet}"
        if phi.hopf.name != expected:
            raise ConfigError(f"coefficient file must be a {expected} character")

        def delta(w, _phi=phi):
            return _phi.evaluate(_phi.hopf.monomial_from_text("".join(w)))

    terms = wordseries_order_terms(delta, system, x0, args.max_length)
    start = [delta(()) * v for v in x0]
    rows, final = _series_rows(terms, start, 1)
    payload = {"series": "wordseries", "dim": system.dim,
               "max_length": args.max_length, "coefficients": args.coeffs,
               "rows": rows, "final": [float(v) for v in final]}
    return _emit_series(args, payload, rows)


def _field_or_error(loader, path):
    doc = _read_json(path)
    try:
        return loader(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad input file {path}: {exc}")


def run_counterexample(args) -> tuple[bool, dict]:
    payload = counterexample_demo()
    return payload["status"] == "pass", payload


def run_growth_check(args) -> tuple[bool, dict]:
    fam = _load_family(args.family)
    checks = check_all_axioms(fam, args.k_max, args.n_max, args.k2_max)
    ok = all(c.ok for c in checks)
    return ok, {"family": fam.name, "k_max": args.k_max, "n_max": args.n_max,
                "axioms": [c.to_dict() for c in checks]}


WORKFLOWS = {
    "enumerate": run_enumerate,
    "axioms": run_axioms,
    "control-check": run_control_check,
    "rlb-check": run_rlb_check,
    "right-handed": run_right_handed,
    "evolve": run_evolve,
    "char": run_char,
    "bseries": run_bseries,
    "pseries": run_pseries,
    "wordseries": run_wordseries,
    "counterexample": run_counterexample,
    "growth-check": run_growth_check,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hopfchar",
        description="Verification and series-evaluation workflows for graded "
                    "Hopf algebra character groups.")
    sub = top.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--seed", type=int, default=0,
                       help="seed recorded in the report for reproducibility")

    def hopf_args(p, default_degree):
        p.add_argument("--hopf", required=True,
                       help="instance: " + "|".join(INSTANCE_NAMES))
        p.add_argument("--max-degree", type=int, default=default_degree)

    p = sub.add_parser("enumerate", help="generator and basis counts per degree")
    hopf_args(p, 6)
    common(p)

    p = sub.add_parser("axioms", help="exact Hopf axiom verification")
    hopf_args(p, 6)
    p.add_argument("--fail-fast", action="store_true")
    common(p)

    p = sub.add_parser("control-check", help="weighted l1 ratio table for a map")
    hopf_args(p, 8)
    p.add_argument("--family", required=True,
                   help="growth family: " + "|".join(sorted(BUILTIN_FAMILIES)))
    p.add_argument("--k1", type=int, required=True, help="norm index")
    p.add_argument("--k2", type=int, required=True, help="weight index")
    p.add_argument("--map", choices=["coproduct", "antipode"], default="coproduct")
    p.add_argument("--csv", help="per-degree table as CSV")
    common(p)

    p = sub.add_parser("rlb-check", help="elementary-coproduct linear-bound fit")
    hopf_args(p, 8)
    common(p)

    p = sub.add_parser("right-handed", help="which reduced-coproduct slot stays in the generator span")
    hopf_args(p, 6)
    common(p)

    p = sub.add_parser("evolve", help="solve gamma' = gamma * eta degree by degree")
    hopf_args(p, 6)
    p.add_argument("--eta", required=True, help="eta curve JSON (per-generator t-polynomials)")
    p.add_argument("--emit", help="write the solution curve JSON here")
    p.add_argument("--at", help="also evaluate the solution at this rational time")
    common(p)

    p = sub.add_parser("char", help="character-group operations on files")
    p.add_argument("op", choices=["conv", "inv", "exp", "log", "norm"])
    p.add_argument("--a", required=True, help="first character file")
    p.add_argument("--b", help="second character file (conv)")
    p.add_argument("--family", default="pow", help="growth family (norm)")
    p.add_argument("--k", type=int, default=1, help="weight index (norm)")
    p.add_argument("--over", choices=["generators", "monomials"],
                   default="generators", help="norm domain")
    p.add_argument("--emit", help="write the resulting character file here")
    common(p)

    p = sub.add_parser("bseries", help="tree-indexed series for y' = f(y)")
    p.add_argument("--field", required=True, help="vector field JSON")
    p.add_argument("--coeffs", default="exact-flow",
                   help="'exact-flow' or a ck character file")
    p.add_argument("--y", required=True, help="initial point, comma-separated rationals")
    p.add_argument("--h", default="1/2", help="step size (rational)")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--csv", help="order/increment/partial table as CSV")
    common(p)

    p = sub.add_parser("pseries", help="bicoloured series for p' = f(p,q), q' = g(p,q)")
    p.add_argument("--system", required=True, help="partitioned system JSON")
    p.add_argument("--coeffs", default="exact-flow",
                   help="'exact-flow' or a ck2 character file")
    p.add_argument("--p", required=True, help="initial p, comma-separated rationals")
    p.add_argument("--q", required=True, help="initial q, comma-separated rationals")
    p.add_argument("--h", default="1/2", help="step size (rational)")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--csv", help="order/increment/partial table as CSV")
    common(p)

    p = sub.add_parser("wordseries", help="word-indexed series for letter fields")
    p.add_argument("--system", required=True, help="word system JSON")
    p.add_argument("--coeffs", default="exp-single",
                   help="'exp-single' or a shuffle character file")
    p.add_argument("--x", required=True, help="initial point, comma-separated rationals")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--csv", help="length/increment/partial table as CSV")
    common(p)

    p = sub.add_parser("counterexample",
                       help="controlled character whose square escapes every weight")
    common(p)

    p = sub.add_parser("growth-check", help="weight-family axiom verification")
    p.add_argument("--family", required=True,
                   help="family: " + "|".join(sorted(BUILTIN_FAMILIES)))
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--k2-max", type=int, default=64)
    common(p)

    return top


def _config_dict(args) -> dict:
    skip = {"subcommand", "out", "seed"}
    return {k: v for k, v in sorted(vars(args).items())
            if k not in skip and v is not None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    workflow = WORKFLOWS[args.subcommand]
    try:
        ok, payload = workflow(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "tool": "hopfchar",
        "subcommand": args.subcommand,
        "seed": args.seed,
        "config": _config_dict(args),
        "status": "pass" if ok else "fail",
        "report": payload,
    }
    data = reports.render_report(doc)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
