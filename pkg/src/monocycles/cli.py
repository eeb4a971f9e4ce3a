"""Command line front end.

Every subcommand is a handler taking a JSON-able input dict and returning
(result dict, holds, text lines). ``--json`` prints
``{"command", "input", "result", "holds"}``; feeding such a report to
:func:`verify_report` recomputes it. Exit codes: 0 when the property holds,
1 when it fails, 2 on usage errors, malformed input or size caps.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources
from pathlib import Path

from .boundary_ideal import boundary_ideal, in_boundary_ideal
from .errors import HypothesisFailure, MonocyclesError, NotACycle
from .exactalg import FieldSpec
from .golod import golod4, homology_product_pairing, monomial_products_vanish
from .koszul import (
    KoszulChain,
    format_chain,
    is_boundary_oracle,
    is_monomial_cycle,
    monomial_span_deficit,
    multigraded_betti,
    strand_homology_dim,
    total_betti,
)
from .linquot import (
    basis_hypotheses,
    check_resolution,
    find_linear_quotients_order,
    is_regular,
    mapping_cone_betti,
    monomial_basis,
    nice_lift_indices,
    recognize,
    resolution_differential,
)
from .monomials import MonomialIdeal, format_monomial, parse_monomial
from .simplicial_matroid import SignMatrixSpec, circuits_through, format_circuit
from .symmetric import (
    SymmetricIdealSpec,
    is_symmetric_shifted,
    normalize,
    parse_lambdas,
    principal_golod,
    symmetric_monprod_vanish,
    vp_check,
)


# --- ideal files -------------------------------------------------------------

def parse_ideal_text(text: str) -> MonomialIdeal:
    """``n=<int>`` header, one monomial per line, ``#`` comments."""
    n = None
    mons = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            key, _, val = line.partition("=")
            if key.strip() != "n" or not val.strip().isdigit():
                raise ValueError(f"line {lineno}: expected header n=<int>, got {raw!r}")
            n = int(val)
            continue
        mons.append(parse_monomial(line, n))
    if n is None:
        raise ValueError("missing header n=<int>")
    return MonomialIdeal(n, mons)


def format_ideal_file(I: MonomialIdeal) -> str:
    return f"n={I.n}\n" + "".join(format_monomial(g) + "\n" for g in I.gens)


def read_ideal(path: str) -> MonomialIdeal:
    return parse_ideal_text(Path(path).read_text())


def fixture_names() -> list[str]:
    root = resources.files("monocycles") / "fixtures"
    return sorted(p.name[:-6] for p in root.iterdir() if p.name.endswith(".ideal"))


def load_fixture(name: str) -> MonomialIdeal:
    return parse_ideal_text((resources.files("monocycles") / "fixtures" / f"{name}.ideal").read_text())


# --- plumbing ----------------------------------------------------------------

def _ideal(inp) -> MonomialIdeal:
    d = inp["ideal"]
    return MonomialIdeal(d["n"], [tuple(g) for g in d["gens"]])


def _ideal_json(I: MonomialIdeal) -> dict:
    return {"n": I.n, "gens": [list(g) for g in I.gens]}


def _field(inp) -> FieldSpec:
    return FieldSpec(int(inp.get("char", 0)))


def _mons(ms) -> list[str]:
    return [format_monomial(m) for m in ms]


def _subset(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def _failure_json(f) -> dict:
    return {"p": f.p, "A": list(f.A), "B": list(f.B), "witness": format_monomial(f.witness)}


def _failure_text(f) -> str:
    return f"p={f.p} A={_subset(f.A)} B={_subset(f.B)} witness {format_monomial(f.witness)}"


# --- handlers ----------------------------------------------------------------

def cmd_boundary_ideal(inp):
    I = _ideal(inp)
    res = boundary_ideal(I, inp["sigma"], _field(inp), inp.get("method", "auto"))
    out = {"generators": _mons(res.ideal.gens), "closed_form": res.closed_form,
           "circuits": [format_circuit(c, I.n) for c in res.circuits_used]}
    return out, True, [str(res.ideal)]


def cmd_is_boundary(inp):
    I, field = _ideal(inp), _field(inp)
    u, sigma = tuple(inp["monomial"]), tuple(sorted(inp["sigma"]))
    if not is_monomial_cycle(I, u, sigma):
        raise NotACycle(f"{format_monomial(u)} e{''.join(map(str, sigma))} is not a cycle")
    verdict = in_boundary_ideal(I, u, sigma, field)
    out = {"boundary": verdict}
    lines = ["boundary" if verdict else "not a boundary"]
    if inp.get("witness"):
        z = KoszulChain.monomial(u, sigma, field)
        oracle = is_boundary_oracle(I, z, field, witness=True)
        out["oracle"] = oracle.is_boundary
        out["witness"] = format_chain(oracle.witness) if oracle.witness is not None else None
        if oracle.is_boundary != verdict:
            lines.append("warning: the boundary ideal and the strand oracle disagree")
        if oracle.witness is not None:
            lines.append(f"preimage: {out['witness']}")
    return out, verdict, lines


def cmd_homology(inp):
    I, field, p = _ideal(inp), _field(inp), inp["p"]
    if inp.get("degree") is not None:
        a = tuple(inp["degree"])
        d = strand_homology_dim(I, p, a, field)
        return {"dims": {",".join(map(str, a)): d}}, True, [f"H_{p} at {a}: {d}"]
    dims = multigraded_betti(I, p, field)
    deficit = monomial_span_deficit(I, p, field)
    lines = [f"H_{p} at {a}: {d}" for a, d in dims.items()] or [f"H_{p} = 0"]
    lines += [f"not spanned by monomial cycles at {a}: {d}" for a, d in deficit]
    out = {"dims": {",".join(map(str, a)): d for a, d in dims.items()},
           "deficit": {",".join(map(str, a)): d for a, d in deficit}}
    return out, True, lines


def cmd_betti(inp):
    b = total_betti(_ideal(inp), _field(inp))
    return {"betti": list(b)}, True, [" ".join(map(str, b))]


def cmd_golod4(inp):
    rep = golod4(_ideal(inp), _field(inp))
    lines = ["Golod" if rep.holds else "not Golod"]
    if inp.get("witness"):
        lines += [_failure_text(f) for f in rep.failures]
    return {"golod": rep.holds, "failures": [_failure_json(f) for f in rep.failures]}, rep.holds, lines


def cmd_monprod(inp):
    rep = monomial_products_vanish(_ideal(inp), _field(inp), jobs=inp.get("jobs", 1))
    lines = ["monomial cycle products vanish" if rep.holds else "some monomial cycle product survives"]
    if inp.get("witness") or not rep.holds:
        lines += [_failure_text(f) for f in rep.failures[: None if inp.get("witness") else 1]]
    out = {"vanish": rep.holds, "checked": rep.checked, "failures": [_failure_json(f) for f in rep.failures]}
    return out, rep.holds, lines


def cmd_pairing(inp):
    I, field = _ideal(inp), _field(inp)
    p, q = inp["p"], inp["q"]
    table = homology_product_pairing(I, p, q, field)
    total = sum(table.values())
    nz = {f"{','.join(map(str, a))}|{','.join(map(str, b))}": r for (a, b), r in table.items() if r}
    lines = [f"rank of H_{p} x H_{q} -> H_{p + q}: {total}"]
    lines += [f"  {k}: {r}" for k, r in nz.items()]
    return {"rank": total, "nonzero": nz}, total == 0, lines


def cmd_symmetric_vp(inp):
    n = inp["n"]
    spec = SymmetricIdealSpec(n, tuple(tuple(l) for l in inp["lambdas"]))
    per = [vp_check(spec.lambdas, n, p) for p in range(2, n + 1)]
    sv = symmetric_monprod_vanish(spec)
    lines = [f"V_{r.p}: {'holds via ' + r.via if r.holds else 'fails'}" for r in per]
    lines.append("V_p profile: " + (",".join(str(r.p) for r in per if r.holds) or "none"))
    for p, w in sv.witnesses:
        lines.append(f"p={p}: witness {format_monomial(w)}")
    out = {"profile": [r.p for r in per if r.holds], "checks": [{"p": r.p, "holds": r.holds, "via": r.via} for r in per],
           "witnesses": [{"p": p, "monomial": format_monomial(w)} for p, w in sv.witnesses]}
    return out, sv.holds, lines


def cmd_symmetric_principal(inp):
    n = inp["n"]
    lam = normalize(inp["lambda"], n)
    ok = principal_golod(lam, n)
    return {"golod": ok}, ok, ["Golod" if ok else "not Golod"]


def cmd_symmetric_shifted(inp):
    spec = SymmetricIdealSpec(inp["n"], tuple(tuple(l) for l in inp["lambdas"]))
    ok = is_symmetric_shifted(spec)
    return {"shifted": ok}, ok, ["symmetric shifted" if ok else "not symmetric shifted"]


def cmd_linquot_basis(inp):
    I, field = _ideal(inp), _field(inp)
    try:
        cycles = monomial_basis(I, field)
    except HypothesisFailure as e:
        return {"reason": e.reason}, False, [f"hypothesis failed: {e.reason}", str(e)]
    lq, _ = basis_hypotheses(I)
    betti = total_betti(I, field)
    lines = [str(c) for c in cycles]
    lines.append(f"verified: {len(cycles)} cycles, counts {' '.join(map(str, mapping_cone_betti(lq)))}"
                 f" match strand Betti numbers {' '.join(map(str, betti))}; classes independent in every strand")
    out = {"cycles": [str(c) for c in cycles], "betti": list(betti), "cone_betti": list(mapping_cone_betti(lq))}
    return out, True, lines


def cmd_linquot_check(inp):
    I = _ideal(inp)
    rec = recognize(I)
    lq = find_linear_quotients_order(I)
    out = {"recognized": asdict(rec)}
    lines = ["classes: " + (", ".join(k for k, v in out["recognized"].items() if v) or "none")]
    if lq is None:
        out.update(order=None, regular=None, nice_lifts=None)
        return out, False, lines + ["linear quotients: no degree-increasing order"]
    try:
        lq, lifts = basis_hypotheses(I)
    except HypothesisFailure:
        lifts = nice_lift_indices(I, lq)
    reg = is_regular(I, lq)
    out["order"] = _mons(lq.order)
    out["sets"] = [list(s) for s in lq.sets]
    out["regular"] = reg
    out["nice_lifts"] = None if lifts is None else {format_monomial(u): l for u, l in lifts.items()}
    lines.append("order: " + ", ".join(f"{format_monomial(u)} {_subset(s)}" for u, s in zip(lq.order, lq.sets)))
    lines.append(f"regular: {'yes' if reg else 'no'}")
    lines.append("nice Koszul lifts: " + ("no" if lifts is None else
                 ", ".join(f"{format_monomial(u)} -> x{l}" for u, l in lifts.items())))
    return out, reg and lifts is not None, lines


def cmd_linquot_betti(inp):
    I, field = _ideal(inp), _field(inp)
    lq = find_linear_quotients_order(I)
    strand = list(total_betti(I, field))
    if lq is None:
        return {"cone_betti": None, "betti": strand}, False, ["no linear quotients", " ".join(map(str, strand))]
    cone = list(mapping_cone_betti(lq))
    padded = cone + [0] * (len(strand) - len(cone))
    lines = [f"mapping cone: {' '.join(map(str, cone))}", f"strand oracle: {' '.join(map(str, strand))}"]
    out = {"cone_betti": cone, "betti": strand}
    if is_regular(I, lq):
        res = resolution_differential(I, lq)
        out["resolution_checked"] = check_resolution(I, res, field)
        lines.append("explicit differential: " + ("exact, delta^2 = 0" if out["resolution_checked"] else "FAILED"))
    return out, padded == strand, lines


def cmd_matroid_circuits(inp):
    n, p = inp["n"], inp["p"]
    spec = SignMatrixSpec(n, p, _field(inp))
    cs = circuits_through(spec, tuple(inp["sigma"]), inp.get("method", "auto"))
    lines = [format_circuit(c, n) for c in cs]
    return {"circuits": lines}, True, lines


def cmd_selftest(inp):
    from .selftest import run_selftest
    results = run_selftest()
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    passed = sum(ok for _, ok in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return {"checks": {name: ok for name, ok in results}}, passed == len(results), lines


HANDLERS = {
    "boundary-ideal": cmd_boundary_ideal,
    "is-boundary": cmd_is_boundary,
    "homology": cmd_homology,
    "betti": cmd_betti,
    "golod4": cmd_golod4,
    "monprod": cmd_monprod,
    "pairing": cmd_pairing,
    "symmetric vp": cmd_symmetric_vp,
    "symmetric principal": cmd_symmetric_principal,
    "symmetric shifted": cmd_symmetric_shifted,
    "linquot basis": cmd_linquot_basis,
    "linquot check": cmd_linquot_check,
    "linquot betti": cmd_linquot_betti,
    "matroid circuits": cmd_matroid_circuits,
    "selftest": cmd_selftest,
}

# inputs that only affect presentation or scheduling, not the result
_VOLATILE = ("jobs",)


def run(command: str, inp: dict) -> dict:
    result, holds, lines = HANDLERS[command](inp)
    return {"command": command, "input": inp, "result": result, "holds": holds, "text": lines}


def verify_report(report: dict) -> bool:
    """Recompute a JSON report and compare result and verdict."""
    inp = {k: v for k, v in report["input"].items() if k not in _VOLATILE}
    again = run(report["command"], inp)
    return again["result"] == report["result"] and again["holds"] == report["holds"]


# --- argument parsing --------------------------------------------------------

def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def _common(p: argparse.ArgumentParser, ideal=True):
    if ideal:
        p.add_argument("--ideal", required=True, help="ideal file (n=<int> header, one monomial per line)")
    p.add_argument("--char", type=int, default=0, help="0 for QQ, else a prime")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--witness", action="store_true", help="print witnesses / preimages")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent checks")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monocycles", description="Monomial cycles in Koszul homology")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundary-ideal", help="minimal generators of the boundary ideal B^sigma")
    _common(p)
    p.add_argument("--sigma", type=_ints, required=True)
    p.add_argument("--method", choices=["auto", "circuits", "brute"], default="auto")

    p = sub.add_parser("is-boundary", help="is the monomial cycle u e_sigma a boundary")
    _common(p)
    p.add_argument("--monomial", required=True)
    p.add_argument("--sigma", type=_ints, required=True)

    p = sub.add_parser("homology", help="multigraded Koszul homology in one homological degree")
    _common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--degree", type=_ints, default=None, help="a single multidegree, comma separated")

    for name, hlp in [("betti", "total Betti numbers"), ("golod4", "four-variable Golod test"),
                      ("monprod", "vanishing of all products of monomial cycles")]:
        _common(sub.add_parser(name, help=hlp))

    p = sub.add_parser("pairing", help="rank of the product H_p x H_q -> H_(p+q)")
    _common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    sym = sub.add_parser("symmetric", help="symmetric ideals given by partitions").add_subparsers(
        dest="sub", required=True)
    for name in ("vp", "shifted"):
        p = sym.add_parser(name)
        _common(p, ideal=False)
        p.add_argument("--lambdas", required=True, help='e.g. "3,1,0,0;2,2,0,0"')
        p.add_argument("--n", type=int, default=None)
    p = sym.add_parser("principal")
    _common(p, ideal=False)
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1,0,0")
    p.add_argument("--n", type=int, default=None)

    lq = sub.add_parser("linquot", help="linear quotients and monomial bases").add_subparsers(
        dest="sub", required=True)
    for name in ("basis", "check", "betti"):
        _common(lq.add_parser(name))

    mat = sub.add_parser("matroid", help="circuits of M(n, p)").add_subparsers(dest="sub", required=True)
    p = mat.add_parser("circuits")
    _common(p, ideal=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--sigma", type=_ints, required=True)
    p.add_argument("--method", choices=["auto", "brute", "brute-direct"], default="auto")

    p = sub.add_parser("selftest", help="run every documented example")
    _common(p, ideal=False)
    return ap


def _input_from_args(args) -> tuple[str, dict]:
    command = args.command + (f" {args.sub}" if getattr(args, "sub", None) else "")
    inp: dict = {"char": args.char}
    if getattr(args, "ideal", None):
        I = read_ideal(args.ideal)
        inp["ideal"] = _ideal_json(I)
    if args.witness:
        inp["witness"] = True
    if args.jobs != 1:
        inp["jobs"] = args.jobs
    for key in ("sigma", "p", "q", "degree", "method"):
        if getattr(args, key, None) is not None:
            inp[key] = getattr(args, key)
    if command == "is-boundary":
        inp["monomial"] = list(parse_monomial(args.monomial, inp["ideal"]["n"]))
    if command in ("symmetric vp", "symmetric shifted"):
        lams = parse_lambdas(args.lambdas, args.n)
        inp["n"] = args.n or len(lams[0])
        inp["lambdas"] = [list(normalize(l, inp["n"])) for l in lams]
    if command == "symmetric principal":
        lam = _ints(args.lam)
        inp["n"] = args.n or len(lam)
        inp["lambda"] = list(normalize(lam, inp["n"]))
    if command == "matroid circuits":
        inp["n"] = args.n
    return command, inp


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        command, inp = _input_from_args(args)
        report = run(command, inp)
    except (MonocyclesError, ValueError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({k: v for k, v in report.items() if k != "text"}, indent=2, sort_keys=True))
    else:
        print("\n".join(report["text"]))
    return 0 if report["holds"] else 1


if __name__ == "__main__":
    sys.exit(main())
