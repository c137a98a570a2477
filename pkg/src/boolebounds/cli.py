"""Command-line front end.

Every subcommand prints one JSON report on stdout (rationals as ``"p/q"``
strings, fixed key order). Exit status: 0 on success, 1 when the
mathematics rejects the input (infeasible, out of range, a failed
cross-check), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import classic, hailperin, instance, mining, polytopes, reductions
from .errors import DomainError, FormatError, InfeasibleInstance
from .numerics.rational import rat_parse, rat_str

WHICH = {
    "tau": polytopes.TAU, "τ": polytopes.TAU,
    "rho": polytopes.RHO, "ρ": polytopes.RHO,
    "sigma": polytopes.SIGMA, "σ": polytopes.SIGMA,
}


class CheckFailed(DomainError):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")


def _interval(iv) -> dict:
    return {"lo": rat_str(iv.lo), "hi": rat_str(iv.hi)}


def _certificate(inst, cert) -> dict:
    labels = ["sum"] + ["b_" + instance.set_label(s) for s in inst.family]
    return {"rows": labels, "multipliers": [rat_str(y) for y in cert]}


def _bounds_report(inst, check: bool) -> dict:
    result = hailperin.union_bounds(inst)
    report = {
        "interval": _interval(result.interval),
        "min_witness": instance.atoms_to_doc(result.min_witness),
        "max_witness": instance.atoms_to_doc(result.max_witness),
    }
    if check:
        if not hailperin.check_bounds(inst, result):
            raise CheckFailed("witness re-verification failed")
        report["checked"] = True
    return report


def cmd_bounds(args) -> int:
    inst = instance.parse_instance(_read(args.instance))
    try:
        body = _bounds_report(inst, args.check)
    except InfeasibleInstance as exc:
        _emit({"command": "bounds", "feasible": False, "certificate": _certificate(inst, exc.certificate)})
        raise
    _emit({"command": "bounds", "feasible": True, **body})
    return 0


def cmd_feasible(args) -> int:
    inst = instance.parse_instance(_read(args.instance))
    res = hailperin.is_feasible(inst)
    report = {
        "command": "feasible",
        "feasible": res.feasible,
        "monotone_violations": [
            [instance.elements_of(s), instance.elements_of(t)] for s, t in instance.check_monotone(inst)
        ],
    }
    if res.feasible:
        report["realization"] = instance.atoms_to_doc(res.realization)
        ok = instance.realizes(res.realization, inst)
    else:
        report["certificate"] = _certificate(inst, res.certificate)
        ok = hailperin.check_certificate(inst, res.certificate)
    if args.check:
        if not ok:
            raise CheckFailed("certificate re-verification failed")
        report["checked"] = True
    _emit(report)
    return 0 if res.feasible else 1


def cmd_classic(args) -> int:
    inst = instance.parse_instance(_read(args.instance))
    fam = inst.family
    report: dict = {"command": "classic"}
    report["boole_frechet"] = _interval(classic.boole_frechet(inst)) if fam.has_all_singletons() else None
    if args.k is not None:
        terms = [classic.BonferroniTerm(args.k, classic.bonferroni(inst, args.k), "upper" if args.k % 2 else "lower")]
    else:
        terms = classic.bonferroni_report(inst)
    report["bonferroni"] = [{"k": t.k, "value": rat_str(t.value), "direction": t.direction} for t in terms]
    report["inclusion_exclusion"] = rat_str(classic.inclusion_exclusion(inst)) if fam.is_complete() else None
    _emit(report)
    return 0


def _expected_dim(fam, which) -> int:
    if which == polytopes.TAU:
        return (1 << fam.n) - 1
    if which == polytopes.RHO:
        return len(fam)
    return len(fam) + (0 if fam.is_complete() else 1)


def cmd_vertices(args) -> int:
    fam = instance.parse_family(_read(args.family))
    which = WHICH[args.which]
    poly = polytopes.polytope(fam, which)
    if args.table:
        sys.stdout.write(poly.dump())
        return 0
    rho, sigma = polytopes.vertex_count_formula(fam)
    formula = {polytopes.TAU: 1 << fam.n, polytopes.RHO: rho, polytopes.SIGMA: sigma}[which]
    dim = polytopes.affine_dim(poly)
    report = {
        "command": "vertices",
        "which": which,
        "labels": list(poly.coord_labels),
        "vertices": [" ".join(str(v) for v in vert) for vert in poly.vertices],
        "count": len(poly.vertices),
        "count_formula": formula,
        "count_matches": formula == len(poly.vertices),
        "dimension": dim,
        "dimension_formula": _expected_dim(fam, which),
        "dimension_matches": dim == _expected_dim(fam, which),
    }
    _emit(report)
    return 0 if report["count_matches"] and report["dimension_matches"] else 1


def cmd_member(args) -> int:
    fam = instance.parse_family(_read(args.family))
    which = WHICH[args.which]
    if which == polytopes.TAU:
        raise FormatError("membership is offered for rho and sigma only")
    point = [rat_parse(p) for p in args.point.split(",")]
    poly = polytopes.polytope(fam, which)
    member = polytopes.hull_membership(poly, point)
    _emit({
        "command": "member",
        "which": which,
        "labels": list(poly.coord_labels),
        "point": [rat_str(p) for p in point],
        "member": member,
    })
    return 0


def cmd_reduce_color(args) -> int:
    g = reductions.parse_graph(_read(args.graph))
    inst = reductions.color_gadget(g)
    body = _bounds_report(inst, args.check)
    chi = reductions.fractional_chromatic(g)
    lo = Fraction(body["interval"]["lo"])
    equal = lo == chi / g.n
    _emit({
        "command": "reduce-color",
        "instance": instance.instance_to_doc(inst),
        "min_union": rat_str(lo),
        "fractional_chromatic": rat_str(chi),
        "chi_f_over_n": rat_str(chi / g.n),
        "verdict": "EQUAL" if equal else "DIFFERENT",
        **body,
    })
    return 0 if equal else 1


def cmd_verify_dual(args) -> int:
    gw = reductions.parse_weighted_graph(_read(args.wgraph))
    inst = reductions.dual_query_instance(gw)
    body = _bounds_report(inst, args.check)
    max_union = Fraction(body["interval"]["hi"])
    clp = reductions.clique_lp(gw)
    equal = max_union == 1 - clp
    _emit({
        "command": "verify-dual",
        "instance": instance.instance_to_doc(inst),
        "max_union": rat_str(max_union),
        "clique_lp": rat_str(clp),
        "one_minus_clique_lp": rat_str(1 - clp),
        "verdict": "EQUAL" if equal else "DIFFERENT",
        "max_witness": body["max_witness"],
        **({"checked": True} if args.check else {}),
    })
    return 0 if equal else 1


def max_clique_size(g) -> int:
    return max(bin(t).count("1") for t in reductions.cliques(g))


def cmd_clique(args) -> int:
    g = reductions.parse_graph(_read(args.graph))
    k = args.k
    decision = reductions.has_k_clique(g, k)
    omega = max_clique_size(g)
    brute = omega >= k
    _emit({
        "command": "clique",
        "k": k,
        "kappa": rat_str(Fraction(2, k - 1)),
        "has_k_clique": decision,
        "max_clique_size": omega,
        "brute_force": brute,
        "verdict": "AGREE" if decision == brute else "DISAGREE",
    })
    return 0 if decision == brute else 1


def cmd_mine(args) -> int:
    data = mining.load_matrix(_read(args.matrix), header=args.header)
    eps = rat_parse(args.eps)
    fam = mining.apriori(data, eps, args.max_size)
    report: dict = {
        "command": "mine",
        "rows": data.rows,
        "cols": data.cols,
        "eps": rat_str(eps),
        "family": instance.family_to_doc(fam),
    }
    if len(fam) == 0:
        report["instance"] = None
        _emit(report)
        if args.bounds:
            raise DomainError("no frequent sets: the bounds problem needs a nonempty family")
        return 0
    inst = mining.empirical_b(data, fam)
    report["instance"] = instance.instance_to_doc(inst)
    if args.bounds:
        report.update(_bounds_report(inst, args.check))
    _emit(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boolebounds", description="Exact bounds for the probability of a union of events.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("bounds", cmd_bounds, "tight union-probability interval with witnesses")
    sp.add_argument("instance")
    sp.add_argument("--check", action="store_true", help="re-verify witnesses before exit")

    sp = add("feasible", cmd_feasible, "feasibility with a realization or Farkas certificate")
    sp.add_argument("instance")
    sp.add_argument("--check", action="store_true")

    sp = add("classic", cmd_classic, "Boole-Fréchet, Bonferroni and inclusion-exclusion")
    sp.add_argument("instance")
    sp.add_argument("--k", type=int)

    sp = add("vertices", cmd_vertices, "vertex dump of a Venn, correlation or union polytope")
    sp.add_argument("family")
    sp.add_argument("--which", choices=sorted(WHICH), required=True)
    sp.add_argument("--table", action="store_true", help="print only the vertex table")

    sp = add("member", cmd_member, "hull membership in a correlation or union polytope")
    sp.add_argument("family")
    sp.add_argument("--which", choices=sorted(WHICH), default="rho")
    sp.add_argument("--point", required=True, help="comma-separated rationals in coordinate order")

    sp = add("reduce-color", cmd_reduce_color, "coloring gadget vs fractional chromatic number")
    sp.add_argument("graph")
    sp.add_argument("--check", action="store_true")

    sp = add("verify-dual", cmd_verify_dual, "maximum union probability vs 1 - clique LP")
    sp.add_argument("wgraph")
    sp.add_argument("--check", action="store_true")

    sp = add("clique", cmd_clique, "k-clique decision by the constant-vector test")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)

    sp = add("mine", cmd_mine, "Apriori family and empirical instance from 0/1 data")
    sp.add_argument("matrix")
    sp.add_argument("--eps", required=True)
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--bounds", action="store_true")
    sp.add_argument("--header", action="store_true", help="skip the first line")
    sp.add_argument("--check", action="store_true")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
