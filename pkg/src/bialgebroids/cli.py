"""Command-line driver: fixture validation and the theorem pipelines.

Exit codes: 0 on pass, 1 on axiom or identity failure, 2 on input or shape
errors, 3 when a construction's hypotheses are unmet (explicit refusals).
Reports are deterministic; ``--machine`` emits canonical JSON (the wall-time
field is always null there so that repeated runs are byte-identical).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import files
from .bialgebroid import (LeftBialgebroid, RightBialgebroid,
                          check_left_bialgebroid, check_right_bialgebroid)
from .duals import NoDualBasis, dual_hopf_structure, left_dual, right_dual
from .hopf import NotHopf, translation_map, verify_hopf_identities
from .quantum import (DivisibilityViolation, HypothesesUnmet,
                      TruncatedFormalBialgebroid, check_ker_eps_action,
                      drinfeld_vee, verify_vee_smash)
from .reports import Report
from .scalars import ScalarError
from .smash import (smash_left, smash_left_translation, smash_right,
                    smash_right_translation, trivial_coefficients, weyl_tilde,
                    weyl_tilde_dual)
from .tensor import ShapeError
from .theorems import canonical_recognition_data, recognize_action, verify_eta
from .yd import check_braided_commutative, transport_braided_monoid

PASS, FAIL, USAGE, UNMET = 0, 1, 2, 3


def _load(path):
    try:
        return files.load(path), files.digest(path)
    except (OSError, json.JSONDecodeError, ScalarError, ShapeError, KeyError,
            ValueError) as e:
        print(f"error: cannot load fixture {path}: {e}", file=sys.stderr)
        raise SystemExit(USAGE)


def _emit(report: Report, args, command, digest, started, extra=None):
    code = PASS if report.passed else FAIL
    if args.machine:
        doc = {
            "command": command,
            "fixture_digest": digest,
            "report": report.as_dict(),
            "wall_time": None,
        }
        if extra:
            doc.update(extra)
        print(json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": ")))
    else:
        for line in report.lines():
            print(line)
        print(f"(wall time {time.monotonic() - started:.3f}s)", file=sys.stderr)
    return code


def _coefficients(B, name):
    """Resolve a coefficient choice: 'weyl', 'trivial', or a fixture block."""
    if name == "weyl":
        return weyl_tilde(B)
    if name == "trivial":
        return trivial_coefficients(B)
    blocks = getattr(B, "yd_blocks", None) or {}
    if name in blocks:
        return blocks[name]
    print(f"error: no coefficient block named {name!r}", file=sys.stderr)
    raise SystemExit(USAGE)


def cmd_check(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    if args.right and isinstance(B, LeftBialgebroid):
        print("error: fixture is left-handed but --right was given",
              file=sys.stderr)
        return USAGE
    if args.left and isinstance(B, RightBialgebroid):
        print("error: fixture is right-handed but --left was given",
              file=sys.stderr)
        return USAGE
    if isinstance(B, LeftBialgebroid):
        rep = check_left_bialgebroid(B)
    else:
        rep = check_right_bialgebroid(B)
    return _emit(rep, args, "check", dg, started)


def cmd_dual(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    if not isinstance(B, LeftBialgebroid):
        print("error: duals are implemented for left-handed fixtures",
              file=sys.stderr)
        return USAGE
    try:
        data = right_dual(B) if args.right else left_dual(B)
    except NoDualBasis as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET
    rep = check_right_bialgebroid(data.V)
    if args.output:
        files.save(data.V, args.output)
    return _emit(rep, args, "dual", dg, started)


def cmd_hopf(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    if not isinstance(B, LeftBialgebroid):
        print("error: the identity suites start from a left-handed fixture",
              file=sys.stderr)
        return USAGE
    suites = ([args.suite] if args.suite != "all"
              else ["Sch", "Tch", "mixed", "Uch"])
    rep = Report("translation identity suites")
    try:
        for suite in suites:
            if suite == "Uch":
                data = left_dual(B)
                formula = dual_hopf_structure(data)
                direct = translation_map(data.V, "beta_l")
                rep.add("Uch: formula matches direct inversion",
                        formula.cols == direct.cols)
                rep.extend(verify_hopf_identities(data.V, "Uch"))
            else:
                rep.extend(verify_hopf_identities(B, suite))
    except NotHopf as e:
        rep.add(f"translation map exists ({e.which})", False,
                [f"kernel certificate {e.certificate}"])
    except NoDualBasis as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET
    return _emit(rep, args, "hopf", dg, started)


def cmd_weyl(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        W = weyl_tilde(B)
    except (NotHopf, ShapeError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET
    rep = check_braided_commutative(W)
    if args.output:
        blocks = dict(getattr(B, "yd_blocks", None) or {})
        blocks["weyl"] = W
        B.yd_blocks = blocks
        files.save(B, args.output)
    return _emit(rep, args, "weyl", dg, started)


def cmd_smash(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        R = _coefficients(B, args.coefficients)
        rep = Report("action bialgebroid")
        pre = check_braided_commutative(R)
        rep.add("coefficients are braided commutative", pre.passed,
                pre.failure_names())
        if not pre.passed:
            return _emit(rep, args, "smash", dg, started)
        if args.right:
            data = left_dual(B)
            S = transport_braided_monoid(data, R)
            sm = smash_right(data.V, S)
            rep.extend(check_right_bialgebroid(sm.blgd))
            formula = smash_right_translation(sm)
            direct = translation_map(sm.blgd, "beta_l")
            rep.add("translation formula matches direct inversion",
                    formula.cols == direct.cols)
            rep.extend(verify_hopf_identities(sm.blgd, "Uch"))
        else:
            sm = smash_left(B, R)
            rep.extend(check_left_bialgebroid(sm.blgd))
            try:
                formula = smash_left_translation(sm)
                direct = translation_map(sm.blgd, "alpha_r")
                rep.add("translation formula matches direct inversion",
                        formula.cols == direct.cols)
                rep.extend(verify_hopf_identities(sm.blgd, "Tch"))
            except NotHopf:
                pass
        if args.output:
            files.save(sm.blgd, args.output)
        return _emit(rep, args, "smash", dg, started)
    except (NotHopf, NoDualBasis) as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET


def cmd_eta(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        R = _coefficients(B, args.coefficients)
        witness = verify_eta(B, R)
    except (NotHopf, NoDualBasis) as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET
    return _emit(witness.report, args, "eta", dg, started)


def cmd_recognize(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        R = _coefficients(B, args.coefficients)
        sm = smash_left(B, R)
        mor, rho = canonical_recognition_data(sm)
        result = recognize_action(sm.blgd, B, mor, rho)
        rep = result.report
        if result.ok:
            same = result.coefficients.algebra.mul == sm.blgd.base.mul
            rep.add("recovered coefficient constants equal the input", same)
    except (NotHopf, NoDualBasis) as e:
        print(f"refused: {e}", file=sys.stderr)
        return UNMET
    return _emit(rep, args, "recognize", dg, started)


def _formal(B, args):
    q = getattr(B, "quantum", None)
    degrees = q[1] if q else None
    trunc = args.trunc if args.trunc else (q[0] if q else None)
    if degrees is None or trunc is None:
        print("error: fixture carries no degree assignment", file=sys.stderr)
        raise SystemExit(USAGE)
    return TruncatedFormalBialgebroid(B, degrees, trunc)


def cmd_vee(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        F = _formal(B, args)
        rep = Report("degree rescaling")
        rep.extend(F.grading_report())
        result = drinfeld_vee(F)
        rep.add("divisibility certificates", True,
                [f"{c}" for c in result.certificates])
        classical = check_left_bialgebroid(result.formal.residue_bialgebroid())
        rep.add("rescaled bialgebroid is classical mod h", classical.passed,
                classical.failure_names())
        if args.output:
            out = result.blgd
            out.quantum = (F.trunc, [0] * out.total.dim)
            files.save(out, args.output)
    except DivisibilityViolation as e:
        rep = Report("degree rescaling")
        rep.add("divisibility", False, [str(e.witness)])
        return _emit(rep, args, "vee", dg, started)
    return _emit(rep, args, "vee", dg, started)


def cmd_vee_smash(args):
    started = time.monotonic()
    B, dg = _load(args.fixture)
    try:
        F = _formal(B, args)
        R = _coefficients(B, args.coefficients)
        rep = verify_vee_smash(F, R)
    except (HypothesesUnmet, DivisibilityViolation) as e:
        print(f"refused: {e}"
              + (f" [{e.witness}]" if getattr(e, "witness", None) else ""),
              file=sys.stderr)
        return UNMET
    return _emit(rep, args, "vee-smash", dg, started)


def build_parser():
    p = argparse.ArgumentParser(
        prog="bialgebroids",
        description="exact verification of finite-rank bialgebroid structures")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, coefficients=False, output=True, trunc=False):
        sp.add_argument("fixture", help="path to a fixture file")
        sp.add_argument("--machine", action="store_true",
                        help="emit a canonical JSON report")
        if coefficients:
            sp.add_argument("--r", dest="coefficients", default="trivial",
                            help="coefficients: weyl, trivial, or a fixture block")
        if output:
            sp.add_argument("-o", "--output", help="write the constructed "
                            "object as a new fixture")
        if trunc:
            sp.add_argument("--trunc", type=int, default=None,
                            help="truncation order override")

    sp = sub.add_parser("check", help="run the bialgebroid axiom suite")
    side = sp.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    common(sp, output=False)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dual", help="construct and verify a linear dual")
    side = sp.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true", default=True)
    side.add_argument("--right", action="store_true", default=False)
    common(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("hopf", help="verify translation identity suites")
    sp.add_argument("--suite", choices=["Sch", "Tch", "Uch", "mixed", "all"],
                    default="all")
    common(sp, output=False)
    sp.set_defaults(func=cmd_hopf)

    sp = sub.add_parser("smash", help="build and verify an action bialgebroid")
    sp.add_argument("--right", action="store_true",
                    help="build the dual-side right-handed smash")
    common(sp, coefficients=True)
    sp.set_defaults(func=cmd_smash)

    sp = sub.add_parser("weyl", help="extract the commutant coefficients")
    common(sp)
    sp.set_defaults(func=cmd_weyl)

    sp = sub.add_parser("eta", help="verify duality of the action bialgebroid")
    common(sp, coefficients=True, output=False)
    sp.set_defaults(func=cmd_eta)

    sp = sub.add_parser("recognize",
                        help="round-trip the recognition of action bialgebroids")
    common(sp, coefficients=True, output=False)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("vee", help="rescale a formal fixture along its degrees")
    common(sp, trunc=True)
    sp.set_defaults(func=cmd_vee)

    sp = sub.add_parser("vee-smash",
                        help="verify that rescaling commutes with the smash")
    common(sp, coefficients=True, output=False, trunc=True)
    sp.set_defaults(func=cmd_vee_smash)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except SystemExit:
        raise
    except (ShapeError, ScalarError) as e:
        print(f"error: {e}", file=sys.stderr)
        code = USAGE
    raise SystemExit(code)


if __name__ == "__main__":
    main()
