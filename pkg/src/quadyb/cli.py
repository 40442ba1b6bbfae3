"""Command-line entry point: one JSON report per invocation on stdout.

Exit status is 0 when the verdict is true (or the command just succeeded),
1 when it is false and 2 on any error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from .algebra import to_rat
from .catalog import FamilyId, YBMap, catalog, classify_subclass, companion, make_family, positive_coefficients
from .conics import PencilType, SceneConfig, classify_intersection, geometric_concordance, pencil_normal_form, render_svg
from .construct import build_map, cube_consistency_check
from .engine import (
    Certificate, SymFamily, _compare, _identity_check_numeric, conjugate, equivalence_transform, involution_check,
    involution_check_numeric, map_equal, reversibility_check, reversibility_check_numeric, twist,
    yb_check_numeric, yb_check_symbolic,
)
from .errors import QuadYBError
from .parser import MapSource, parse_expr, parse_map
from .projective import KleinPerm, Quadruple
from .singular import (
    _companion_inverse, lambda_pi_membership, quadrirationality_check,
    singularity_analysis, verify_singular_set,
)
from .tropical import equal_parameter_form, trop_involution_check, trop_yb_check, ultradiscretize

CHECKS = ("yb", "reversible", "involution", "quadrirational")


@dataclasses.dataclass
class Report:
    command: str
    inputs: dict
    verdict: bool | None = None
    certificates: list = dataclasses.field(default_factory=list)
    result: dict = dataclasses.field(default_factory=dict)
    seed: int | None = None
    timing: dict = dataclasses.field(default_factory=dict)
    error: dict | None = None

    def add(self, cert: Certificate) -> Certificate:
        self.certificates.append(cert.to_dict())
        return cert

    def to_dict(self) -> dict:
        first = self.certificates[0] if self.certificates else None
        witness = next((c["witness"] for c in self.certificates if c.get("witness")), None)
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "certificate": first,
            "certificates": self.certificates,
            "witness": witness,
            "seed": self.seed,
            "result": self.result,
            "timing": self.timing,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str, ensure_ascii=False)


def strip_timing(text: str) -> dict:
    d = json.loads(text)
    d.pop("timing", None)
    return d


# -- input helpers ------------------------------------------------------------

def load_map(src: str) -> YBMap:
    """A family id, a map file, or an inline ``u = ...; v = ...`` text."""
    try:
        return make_family(FamilyId.parse(src))
    except ValueError:
        pass
    p = Path(src)
    if p.is_file():
        m = parse_map(MapSource.from_file(p))
    elif "=" in src:
        m = parse_map(src)
    else:
        raise QuadYBError(f"{src!r} is neither a family id, a map file nor a map text")
    if positive_coefficients(m):
        m = dataclasses.replace(m, subtraction_free=True)
    return m


def _values(text: str | None) -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    return tuple(to_rat(Fraction(t.strip())) for t in text.split(",") if t.strip())


def _seed_params(seed: int, n: int) -> tuple[Fraction, ...]:
    """n distinct parameter values away from 0 and 1, drawn from the seed."""
    rng = random.Random(f"params:{seed}")
    out: list[Fraction] = []
    while len(out) < n:
        v = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        if v not in (0, 1) and v not in out:
            out.append(v)
    return tuple(out)


# -- subcommands ----------------------------------------------------------------

def cmd_catalog(args, rep: Report):
    fams = []
    for name, m in catalog().items():
        fams.append({
            "name": name,
            "params": list(m.params),
            "map": m.to_text(),
            "subclass": classify_subclass(m),
            "subtraction_free": m.positive is not None or m.subtraction_free,
        })
    rep.result = {"families": fams}
    rep.verdict = True


def _verify_quadrirational_numeric(m: YBMap, params, samples, seed) -> Certificate:
    if m.inverse is not None:
        f, g = m.numeric(params), m.inverse.numeric(params)
        inv = _numeric_pair("inverse", m, lambda P, Q: g(*f(P, Q)), params, samples, seed)
    else:
        inv = involution_check_numeric(m, params, samples, seed)
    if not inv.verdict:
        return dataclasses.replace(inv, check="quadrirational")
    c, b = companion(m).numeric(params), _companion_inverse(m).numeric(params)
    comp = _numeric_pair("quadrirational", m, lambda P, Q: b(*c(P, Q)), params, samples, seed)
    comp.notes.append("map and companion both invert at every sample")
    return comp


def _numeric_pair(check, m, step, params, samples, seed) -> Certificate:
    return _identity_check_numeric(check, m, step, samples, seed, params, 10 ** 6, 20)


def cmd_verify(args, rep: Report):
    m = load_map(args.map)
    rep.result["map"] = m.to_text()
    if args.method == "symbolic":
        if args.check == "yb":
            cert = yb_check_symbolic(m)
        elif args.check == "reversible":
            cert = reversibility_check(m)
        elif args.check == "involution":
            cert = involution_check(m)
        else:
            ok = quadrirationality_check(m)
            cert = Certificate("quadrirational", m.name, ok, "symbolic",
                               notes=["map and companion composed with their inverses reduce to the identity"])
        rep.verdict = rep.add(cert).verdict
        return
    rep.seed = args.seed
    n = 3 if args.check == "yb" else 2
    if not m.params:
        n = 0
    params = _values(args.params) or _seed_params(args.seed, n)
    if len(params) != n:
        raise QuadYBError(f"--params needs {n} values for this check")
    rep.result["params"] = [str(p) for p in params]
    if args.check == "yb":
        if m.params:
            cert = yb_check_numeric(m, samples=args.samples, seed=args.seed, params=params)
        else:
            cert = yb_check_numeric((m, m, m), samples=args.samples, seed=args.seed)
    elif args.check == "reversible":
        cert = reversibility_check_numeric(m, params, args.samples, args.seed)
    elif args.check == "involution":
        cert = involution_check_numeric(m, params, args.samples, args.seed)
    else:
        cert = _verify_quadrirational_numeric(m, params, args.samples, args.seed)
    rep.verdict = rep.add(cert).verdict


def cmd_singular(args, rep: Report):
    m = load_map(args.map)
    params = _values(args.params)
    data = singularity_analysis(m, params)
    pi = data.klein
    rep.result = {
        "map": m.to_text(),
        "params": None if params is None else [str(p) for p in params],
        "singular_set": data.sigma.to_text(),
        "inverse_singular_set": None if data.sigma_inv is None else data.sigma_inv.to_text(),
        "images": None if data.images is None else list(data.images),
        "permutation": None if pi is None else pi.name,
    }
    rep.verdict = pi is not None


def cmd_build(args, rep: Report):
    X, U, Y, V = (Quadruple.parse(t) for t in (args.X, args.U, args.Y, args.V))
    m = build_map((X, U), (Y, V))
    data = singularity_analysis(m)
    rep.result = {
        "map": m.to_text(),
        "inverse": m.inverse.to_text(),
        "singular_set": data.sigma.to_text(),
        "inverse_singular_set": None if data.sigma_inv is None else data.sigma_inv.to_text(),
        "permutation": None if data.klein is None else data.klein.name,
        "lambda_pi": _name(lambda_pi_membership((X, U))),
        "mu_pi": _name(lambda_pi_membership((Y, V))),
    }
    rep.verdict = True
    if args.check:
        sing = verify_singular_set(m, list(zip(X, Y))) and verify_singular_set(m.inverse, list(zip(U, V)))
        rep.add(Certificate("singular_data", m.name, sing, "symbolic",
                            notes=["the map vanishes at (X_i, Y_i) and its inverse at (U_i, V_i)"]))
        quad = quadrirationality_check(m)
        rep.add(Certificate("quadrirational", m.name, quad, "symbolic"))
        rep.verdict = sing and quad


def _name(p: KleinPerm | None):
    return None if p is None else p.name


def cmd_cube(args, rep: Report):
    rep.seed = args.seed
    Xs = [Quadruple.parse(t) for t in (args.X, args.Y, args.Z)]
    r = cube_consistency_check(*Xs, args.pi1, args.pi2, args.pi3, seed=args.seed, samples=args.samples)
    rep.result = r.to_dict()
    cert = Certificate("yb", "cube", r.yb, "numeric", witness=r.witness, seed=args.seed, samples=args.samples,
                       notes=[f"faces consistent: {r.consistent}", f"parameters identified: {r.identified}"])
    rep.verdict = rep.add(cert).verdict


def cmd_conics(args, rep: Report):
    t = PencilType.parse(args.type)
    a, b = to_rat(Fraction(args.alpha)), to_rat(Fraction(args.beta))
    Q1, Q2 = pencil_normal_form(t, a, b)
    got = classify_intersection(Q1, Q2)
    rep.result = {
        "conics": [[str(c) for c in Q.affine_coeffs()] for Q in (Q1, Q2)],
        "coefficient_order": ["w1^2", "w2^2", "w1*w2", "w1", "w2", "1"],
        "intersection_type": got.value,
    }
    rep.add(Certificate("classification", f"type {t.value} pencil", got is t, "symbolic"))
    ok = got is t
    if t is PencilType.I:
        rep.seed = args.seed
        for name, rho in (("F_I", None), ("H_I", "rho3")):
            c = rep.add(geometric_concordance(make_family(name), a, b, rho, samples=args.samples, seed=args.seed))
            ok = ok and c.verdict
    if args.svg:
        cfg = SceneConfig(pencil=t.value, alpha=a, beta=b, involutions=args.involutions,
                          chords=[tuple(Fraction(v) for v in c.split(",")) for c in args.chord or []],
                          title=f"type {t.value}, alpha={a}, beta={b}")
        Path(args.svg).write_text(render_svg(cfg))
        rep.result["svg"] = str(args.svg)
    rep.verdict = ok


def cmd_tropical(args, rep: Report):
    m = load_map(args.map)
    t = ultradiscretize(m)
    rep.seed = args.seed
    ue, ve = equal_parameter_form(t)
    rep.result = {"map": t.to_text(), "equal_parameters": {"U": ue.to_text(), "V": ve.to_text()}}
    yb = rep.add(trop_yb_check(t, samples=args.samples, seed=args.seed, rng_range=args.range))
    inv = rep.add(trop_involution_check(t, samples=min(args.samples, 1000), seed=args.seed, rng_range=args.range))
    rep.verdict = yb.verdict and inv.verdict


def cmd_equiv(args, rep: Report):
    a, b = load_map(args.map_a), load_map(args.map_b)
    s = SymFamily(parse_expr(args.phi, params=("alpha",)), name=args.phi)
    r = parse_expr(args.reparam, params=("alpha",), variables=()) if args.reparam else None
    if args.mode == "equiv":
        out = equivalence_transform(a, s, r)
    elif args.mode == "conjugate":
        out = conjugate(a, s, r)
    else:
        out = twist(a, s)
    ok = map_equal(out, b)
    diffs = [(out.u, b.u), (out.v, b.v)]
    cert = _compare(args.mode, f"{args.mode}({a.name}, {args.phi}) vs {b.name}", diffs)
    rep.result = {"transformed": out.to_text(), "target": b.to_text()}
    rep.add(cert)
    rep.verdict = ok and cert.verdict


COMMANDS = {
    "catalog": cmd_catalog,
    "verify": cmd_verify,
    "singular": cmd_singular,
    "build": cmd_build,
    "cube": cmd_cube,
    "conics": cmd_conics,
    "tropical": cmd_tropical,
    "equiv": cmd_equiv,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadyb", description="Exact checks on quadrirational Yang-Baxter maps.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", help="list the families and their formulas")

    p = sub.add_parser("verify", help="YB, reversibility, involutivity or quadrirationality")
    p.add_argument("--map", required=True, help="family id, map file, or 'u = ...; v = ...'")
    p.add_argument("--check", choices=CHECKS, default="yb")
    p.add_argument("--method", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--params", help="parameter values for --method numeric, e.g. 2,3,5")

    p = sub.add_parser("singular", help="singular sets and the singularity permutation")
    p.add_argument("--map", required=True)
    p.add_argument("--params", help="numeric parameter values, e.g. 2,3")

    p = sub.add_parser("build", help="the map attached to quadruples (X, U), (Y, V)")
    for k in ("X", "U", "Y", "V"):
        p.add_argument(f"--{k}", required=True, help="four comma-separated points, e.g. inf,1,0,2")
    p.add_argument("--check", action="store_true", help="verify singular data and quadrirationality")

    p = sub.add_parser("cube", help="3D consistency and YB for three quadruples and permutations")
    for k in ("X", "Y", "Z"):
        p.add_argument(f"--{k}", required=True)
    for k in ("pi1", "pi2", "pi3"):
        p.add_argument(f"--{k}", default="Id", help="Id, rho1, rho2 or rho3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("conics", help="pencil normal forms, classification and the chord map")
    p.add_argument("--type", default="I", choices=("I", "III"))
    p.add_argument("--alpha", default="2")
    p.add_argument("--beta", default="3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--svg", help="write an SVG scene here")
    p.add_argument("--chord", action="append", help="parameter pair x,y of a chord to draw (repeatable)")
    p.add_argument("--involutions", action="store_true", help="overlay the involution axes")

    p = sub.add_parser("tropical", help="max-plus limit of a subtraction-free map")
    p.add_argument("--map", required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, default=1000)

    p = sub.add_parser("equiv", help="compare a transformed map with a target")
    p.add_argument("--map-a", required=True)
    p.add_argument("--map-b", required=True)
    p.add_argument("--phi", required=True, help="Moebius family in x and alpha, e.g. '(x+1)/x'")
    p.add_argument("--reparam", help="parameter change in alpha, e.g. '(alpha-1)/alpha'")
    p.add_argument("--mode", choices=("equiv", "conjugate", "twist"), default="equiv",
                   help="phi^-1 R phi (equiv), phi R phi^-1 (conjugate) or the twist by phi")
    return ap


def run(argv=None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k != "command"}
    rep = Report(args.command, inputs)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command](args, rep)
        code = 0 if rep.verdict in (True, None) else 1
    except (QuadYBError, ValueError, ArithmeticError, OSError) as e:
        rep.verdict = None
        rep.error = {"type": type(e).__name__, "message": str(e)}
        code = 2
    rep.timing = {"seconds": round(time.perf_counter() - t0, 6)}
    return rep.to_dict(), code


def main(argv=None) -> int:
    report, code = run(argv)
    sys.stdout.write(dumps(report) + "\n")
    if code == 2:
        sys.stderr.write(f"error: {report['error']['type']}: {report['error']['message']}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
