"""Command-line entry point: ``theta-adhm <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import suite as suite_mod
from .gauge import commutation_exponent_landstad, verify_theorem_final
from .monad import (
    MonadData,
    MonadJSONError,
    check_nondegeneracy,
    check_self_conjugacy,
    monad_violations,
)
from .numrep import check_rep
from .phase import Degree
from .twistor import relations_summary

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _pair(text: str) -> Degree:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from None
    return Degree(a, b)


def _moduli(text: str) -> tuple:
    from fractions import Fraction

    try:
        vals = tuple(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad moduli {text!r}") from None
    if len(vals) != 4 or any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("need four positive rationals")
    return vals


def _emit(report: dict, args, text: str | None = None) -> None:
    payload = json.dumps(report, indent=2, sort_keys=True)
    if args.json == "-":
        print(payload)
        return
    if args.json:
        Path(args.json).write_text(payload + "\n")
    print(text if text is not None else payload)


def _status(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_FAIL


def cmd_relations(args) -> int:
    print(json.dumps(relations_summary(args.algebra), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify_sphere(args) -> int:
    res = suite_mod.sphere(args.seed)
    _emit(res.to_json(), args)
    return _status(res.ok)


def cmd_verify_penrose(args) -> int:
    proj = suite_mod.projection(args.seed)
    from .twistor import make_context, verify_j

    j = verify_j(make_context(), pairs=args.samples, seed=args.seed)
    ok = proj.ok and all(j.values())
    _emit({"seed": args.seed, "ok": ok, "projection": proj.ok, "j": j}, args)
    return _status(ok)


def _load_monad(path: str) -> MonadData:
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    try:
        return MonadData.from_json(obj)
    except MonadJSONError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_verify_monad(args) -> int:
    d = _load_monad(args.file)
    bad = monad_violations(d, deformed=args.deformed)
    report = {
        "k": d.k,
        "n": d.n,
        "mode": "deformed" if args.deformed else "classical",
        "monad_condition": not bad,
        "violations": [list(v) for v in bad],
        "self_conjugate": check_self_conjugacy(d),
        "seed": args.seed,
    }
    ok = not bad
    if args.nondegeneracy_samples:
        if not d.is_lambda_free():
            raise UsageError(f"{args.file}: nondegeneracy needs lambda-free entries")
        nd = check_nondegeneracy(d, args.nondegeneracy_samples, args.seed)
        report["nondegenerate"] = nd.ok
        if not nd.ok:
            report["failing_point"] = [z.to_json() for z in nd.failing_point]
            report["ranks"] = list(nd.ranks)
        ok = ok and nd.ok
    report["ok"] = ok
    lines = [f"{'PASS' if ok else 'FAIL'} monad ({report['mode']})"]
    lines += [f"  violated (j,l,c,d) = {tuple(v)}" for v in bad]
    if "failing_point" in report:
        lines.append(f"  degenerate at z = {report['failing_point']} with ranks {report['ranks']}")
    _emit(report, args, "\n".join(lines))
    return _status(ok)


def cmd_verify_family(args) -> int:
    res = suite_mod.family_reduction(args.seed, gauges=args.samples)
    _emit(res.to_json(), args)
    return _status(res.ok)


def cmd_verify_theorem(args) -> int:
    rep = verify_theorem_final(args.m, args.radius)
    text = f"m = {rep.m}: {'commutative' if rep.ok else 'not commutative'} on the radius-{args.radius} box"
    if not rep.ok:
        z, x = rep.witness
        text += f"\n  witness zeta = {z}, xi = {x}, exponent {rep.exponent}"
    _emit(rep.to_json(), args, text)
    return _status(rep.ok)


def cmd_gauge_phase(args) -> int:
    t = commutation_exponent_landstad(args.m, args.zeta, args.xi, "both")
    if args.json:
        _emit({"m": list(args.m), "zeta": list(args.zeta), "xi": list(args.xi), "exponent": t}, args, str(t))
    else:
        print(t)
    return EXIT_OK


def cmd_oracle_fuzz(args) -> int:
    res = suite_mod.oracle_words(args.seed, args.samples)
    _emit(res.to_json(), args)
    return _status(res.ok)


def cmd_rep_check(args) -> int:
    if args.q < 2:
        raise UsageError("--q must be at least 2")
    rep = check_rep(args.q, args.moduli, pairs=args.samples, seed=args.seed)
    rep["seed"] = args.seed
    worst = max(rep["residuals"].items(), key=lambda kv: kv[1])
    text = f"{'PASS' if rep['ok'] else 'FAIL'} q={args.q}: max residual {worst[1]:.3e} ({worst[0]})"
    _emit(rep, args, text)
    return _status(rep["ok"])


def cmd_suite(args) -> int:
    report = suite_mod.run_suite(args.seed, args.only)
    if args.json:
        if args.json == "-":
            print(report.dumps())
            return _status(report.ok)
        Path(args.json).write_text(report.dumps() + "\n")
    print(report.text())
    return _status(report.ok)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")

    p = argparse.ArgumentParser(prog="theta-adhm", description="Checks for theta-deformed ADHM data.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("relations", help="generator degrees and commutation exponents")
    r.add_argument("--algebra", choices=("c4", "cp3", "s4"), default="c4")
    r.set_defaults(func=cmd_relations)

    v = sub.add_parser("verify", help="verify one family of identities")
    vs = v.add_subparsers(dest="target", required=True)
    s = vs.add_parser("sphere", parents=[common])
    s.set_defaults(func=cmd_verify_sphere)
    s = vs.add_parser("penrose", parents=[common], help="projection relations and the J suite")
    s.add_argument("--samples", type=int, default=500)
    s.set_defaults(func=cmd_verify_penrose)
    s = vs.add_parser("monad", parents=[common])
    s.add_argument("--file", required=True)
    s.add_argument("--deformed", action="store_true")
    s.add_argument("--nondegeneracy-samples", type=int, default=0)
    s.set_defaults(func=cmd_verify_monad)
    s = vs.add_parser("family", parents=[common], help="deformed family relations and gauge invariance")
    s.add_argument("--samples", type=int, default=10, help="number of random gauge parameters")
    s.set_defaults(func=cmd_verify_family)
    s = vs.add_parser("theorem-final", parents=[common], help="commutativity of a winding-number algebra")
    s.add_argument("--m", type=_pair, required=True)
    s.add_argument("--radius", type=int, default=4)
    s.set_defaults(func=cmd_verify_theorem)

    g = sub.add_parser("gauge", help="gauge-theoretic phases")
    gs = g.add_subparsers(dest="target", required=True)
    s = gs.add_parser("phase", parents=[common], help="print the commutation exponent")
    s.add_argument("--m", type=_pair, required=True)
    s.add_argument("--zeta", type=_pair, required=True)
    s.add_argument("--xi", type=_pair, required=True)
    s.set_defaults(func=cmd_gauge_phase)

    o = sub.add_parser("oracle", help="independent oracles")
    os_ = o.add_subparsers(dest="target", required=True)
    s = os_.add_parser("fuzz", parents=[common], help="folded products against the untwisting oracle")
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(func=cmd_oracle_fuzz)

    rp = sub.add_parser("rep", help="matrix representation oracle")
    rs = rp.add_subparsers(dest="target", required=True)
    s = rs.add_parser("check", parents=[common])
    s.add_argument("--q", type=int, default=5)
    s.add_argument("--moduli", type=_moduli, default=(1, 1, 1, 1))
    s.add_argument("--samples", type=int, default=200)
    s.set_defaults(func=cmd_rep_check)

    s = sub.add_parser("suite", parents=[common], help="run every check")
    s.add_argument("--only", nargs="+", choices=sorted(suite_mod.CHECKS), help="restrict to these checks")
    s.set_defaults(func=cmd_suite)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    for name in ("radius", "samples", "nondegeneracy_samples"):
        val = getattr(args, name, None)
        if val is not None and val < (0 if name == "nondegeneracy_samples" else 1):
            print(f"theta-adhm: error: --{name.replace('_', '-')} out of range", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"theta-adhm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
