"""Command-line front end: batch computation plus a verification battery."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import expand as expand_mod
from . import groth_a, hecke, kn, rings, tableaux, weyl
from .rings import BETA, ONE, TruncPoly, poly_str, yrational_str
from .tableaux import ShiftedSkewShape
from .weyl import parse_oneline


def _shape_arg(text: str) -> tuple[int, ...]:
    s = text.strip().strip("[]")
    return tuple(int(tok) for tok in s.split(",") if tok.strip())


def _load_cache() -> str | None:
    cache_dir = os.environ.get("KTRANS_CACHE_DIR")
    if not cache_dir:
        return None
    path = expand_mod.cache_dir_file(cache_dir)
    if os.path.exists(path):
        try:
            expand_mod.load_cache(path)
        except (OSError, ValueError) as exc:
            print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
    return path


def _save_cache(path: str | None) -> None:
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    expand_mod.save_cache(path)


def cmd_length(args) -> int:
    w = parse_oneline(args.w)
    print(weyl.length(args.type, w))
    return 0


def _emit_poly(args, poly, **fields) -> int:
    if getattr(args, "json", False):
        print(json.dumps({**fields, "N": args.N, "D": args.D, "poly": poly_str(poly)}))
    else:
        print(poly_str(poly))
    return 0


def cmd_fstanley(args) -> int:
    w = parse_oneline(args.w)
    f = hecke.fstanley(args.type, w, args.N, args.D, args.method)
    return _emit_poly(args, f, type=args.type, w=list(w.window))


def _cmd_gpgq(args, fn) -> int:
    sh = ShiftedSkewShape(args.shape, args.inner or ())
    return _emit_poly(
        args, fn(sh, args.N, args.D), outer=list(sh.outer), inner=list(sh.inner)
    )


def cmd_expand(args) -> int:
    path = _load_cache()
    w = parse_oneline(args.w)
    result = expand_mod.expand_grassmannian(args.type, w)
    _save_cache(path)
    if args.json:
        print(json.dumps(result.to_json_dict()))
    else:
        for lam, coeff in sorted(result.terms.items()):
            print(
                f"lambda={list(lam)} coeff={coeff} beta_power={result.beta_power(lam)}"
            )
    return 0


def cmd_skew(args) -> int:
    path = _load_cache()
    result = expand_mod.skew_expansion(args.basis, args.outer, args.inner or ())
    _save_cache(path)
    if args.json:
        print(json.dumps(result.to_json_dict()))
    else:
        for lam, coeff in sorted(result.terms.items()):
            print(
                f"lambda={list(lam)} coeff={coeff} beta_power={result.beta_power(lam)}"
            )
    return 0


def cmd_groth_a(args) -> int:
    w = parse_oneline(args.w)
    if not args.transition:
        print(poly_str(groth_a.groth_poly(w)))
        return 0
    v, a, c, combo = groth_a.transition_a(w)
    print(f"w = {w}")
    print(f"a = {a}  v = {v}  c = {c}")
    print(f"G[{w}] = ((1+b*y{c})*(1+b*x{a})*R - G[{v}]) / b  where R is:")
    for u, coeff in sorted(combo, key=lambda p: (weyl.length("A", p[0]), p[0].window)):
        print(f"  G[{u}] * ({yrational_str(coeff)})")
    ok = groth_a.transition_identity_holds(w)
    print(f"identity: {'verified' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_kn_eval(args) -> int:
    w = parse_oneline(args.w)
    f = kn.kn_eval(args.type, w, args.N, args.D)
    return _emit_poly(args, f, type=args.type, w=list(w.window))


def cmd_kn_transition(args) -> int:
    w = parse_oneline(args.w)
    v, a, c, combo = kn.transition_bcd(args.type, w)
    terms = [
        {"w": list(u.window), "coeff": yrational_str(coeff)}
        for u, coeff in sorted(
            combo, key=lambda p: (weyl.length(args.type, p[0]), p[0].window)
        )
    ]
    residual = kn.transition_residual(args.type, w, args.N, args.D)
    if args.json:
        print(
            json.dumps(
                {
                    "type": args.type,
                    "w": list(w.window),
                    "a": a,
                    "v": list(v.window),
                    "c": c,
                    "terms": terms,
                    "N": args.N,
                    "D": args.D,
                    "residual": yrational_str(residual),
                }
            )
        )
    else:
        print(f"w = {w}")
        print(f"a = {a}  v = {v}  c = {c}")
        print(f"KN[{w}] = ((1+b*y_c)*(1+b*x{a})*R - KN[{v}]) / b  where R is:")
        for term in terms:
            print(f"  KN[{','.join(map(str, term['w'])) or '1'}] * ({term['coeff']})")
        print(f"residual at N={args.N} D={args.D}: {yrational_str(residual)}")
    return 0 if residual.is_zero() else 1


# -- the verification battery -------------------------------------------------


def _check_golden_expansion_b():
    w = parse_oneline("-3,4,-1,5,2")
    expected = {
        (4, 2, 1): 4, (4, 3): 2, (5, 2): 2,
        (4, 3, 1): 5, (5, 2, 1): 5, (5, 3): 3, (5, 3, 1): 6,
    }
    got = expand_mod.expand_grassmannian("B", w).terms
    return got == expected, f"got {sorted(got.items())}"


def _check_golden_expansion_c():
    w = parse_oneline("-3,4,-1,5,2")
    expected = {
        (4, 2, 1): 2, (4, 3): 2, (5, 2): 2,
        (4, 3, 1): 3, (5, 2, 1): 3, (5, 3): 3, (5, 3, 1): 4,
    }
    got = expand_mod.expand_grassmannian("C", w).terms
    return got == expected, f"got {sorted(got.items())}"


def _check_transition_step():
    w = parse_oneline("-3,4,-1,5,2")
    stepB = expand_mod.transition_step("B", w)
    stepC = expand_mod.transition_step("C", w)
    expected = {
        parse_oneline("-3,4,2,-1"): TruncPoly.const(1),
        parse_oneline("-3,4,-2,1"): TruncPoly.const(1),
        parse_oneline("-3,4,-2,-1"): TruncPoly.beta(1),
        parse_oneline("-3,4,1,-2"): TruncPoly.beta(1),
        parse_oneline("-3,4,-1,-2"): TruncPoly.beta(2),
    }
    return stepB == expected and stepC == expected, f"B gave {len(stepB)} terms"


def _check_skew(num_vars=3, bound=6):
    sh = ShiftedSkewShape((5, 3, 1), (2,))
    eB = expand_mod.expand_grassmannian("B", tableaux.w_shape("B", sh))
    eD = expand_mod.expand_grassmannian("D", tableaux.w_shape("D", sh))
    if eB.terms != eD.terms:
        return False, "B and D routes disagree"
    lhs = expand_mod.expansion_poly(eB, num_vars, bound)
    rhs = tableaux.gp(sh, num_vars, bound)
    return lhs == rhs, "numeric mismatch"


def _check_gq_gp(num_vars=3, bound=6):
    for n in (1, 2, 3):
        lhs = tableaux.gq(ShiftedSkewShape((n,)), num_vars, bound)
        rhs = (
            2 * tableaux.gp(ShiftedSkewShape((n,)), num_vars, bound)
            + BETA * tableaux.gp(ShiftedSkewShape((n + 1,)), num_vars, bound)
        ).with_bound(bound)
        if lhs != rhs:
            return False, f"GQ relation fails at n={n}"
    one = tableaux.gp(ShiftedSkewShape((1,)), num_vars, bound)
    two = tableaux.gp(ShiftedSkewShape((2,)), num_vars, bound)
    return two == one * one, "GP_(2) != GP_(1)^2"


def _check_method_agreement(num_vars=3, bound=5):
    for t in ("B", "C", "D"):
        for w in weyl.group_elements(t, 3):
            if weyl.length(t, w) <= 3:
                a = hecke.fstanley(t, w, num_vars, bound, "compat")
                b = hecke.fstanley(t, w, num_vars, bound, "unimodal")
                if a != b:
                    return False, f"methods disagree at ({t}, {w})"
    return True, ""


def _check_grassmannian_law(num_vars=3, bound=6):
    for t in ("B", "C", "D"):
        for w in weyl.group_elements(t, 3):
            if w.is_grassmannian():
                lam = weyl.shape(t, w)
                fn = tableaux.gp if t in ("B", "D") else tableaux.gq
                if hecke.fstanley(t, w, num_vars, bound) != fn(
                    ShiftedSkewShape(lam), num_vars, bound
                ):
                    return False, f"law fails at ({t}, {w})"
    return True, ""


def _check_type_a():
    for w in weyl.group_elements("A", 4):
        if w.descents() and not groth_a.transition_identity_holds(w):
            return False, f"transition fails at {w}"
    for u in weyl.group_elements("A", 3):
        for k in (1, 2, 3):
            if not groth_a.monk_identity_holds(u, k):
                return False, f"Monk identity fails at ({u}, k={k})"
    return True, ""


def _check_kn_oracle(num_vars=2, bound=4):
    w = parse_oneline("-2,1")
    y1 = rings.yvar(1).with_bound(bound)
    for t, fn in (("B", tableaux.gp), ("C", tableaux.gq)):
        got = kn.kn_eval(t, w, num_vars, bound)
        want = (
            y1 * fn(ShiftedSkewShape((1,)), num_vars, bound)
            + ((ONE + BETA * rings.yvar(1)).with_bound(bound))
            * fn(ShiftedSkewShape((2,)), num_vars, bound)
        ).with_bound(bound)
        if got != want:
            return False, f"oracle fails in type {t}"
    return True, ""


def _check_bcd_transitions(num_vars=2, bound=4):
    for t in ("B", "C", "D"):
        for w in weyl.group_elements(t, 2):
            if w.descents() and not kn.transition_identity_holds(t, w, num_vars, bound):
                return False, f"transition fails at ({t}, {w})"
            for k in (1, 2):
                if not kn.monk_identity_holds(t, w, k, num_vars, bound):
                    return False, f"Monk fails at ({t}, {w}, k={k})"
    return True, ""


def _check_length_rule():
    for t in ("A", "B", "C", "D"):
        for w in weyl.group_elements(t, 3):
            lw = weyl.length(t, w)
            for j in range(1, 5):
                for i in range(-4, j):
                    if not weyl.is_valid_reflection(t, i, j):
                        continue
                    wt = w * weyl.reflection(i, j)
                    if not wt.in_group(t):
                        continue
                    direct = weyl.length(t, wt) == lw + 1
                    if direct != weyl.length_increment_ok(t, w, i, j):
                        return False, f"length rule disagrees at ({t}, {w}, t_({i},{j}))"
    return True, ""


def _check_supersym(num_vars=3, bound=6):
    for t in ("B", "C", "D"):
        for w in weyl.group_elements(t, 2):
            if not rings.supersym_check(hecke.fstanley(t, w, num_vars, bound), num_vars, bound):
                return False, f"F^{t}_{w} not supersymmetric"
    lams = [lam for lam in _strict_partitions(4)]
    for lam in lams:
        for fn in (tableaux.gp, tableaux.gq):
            if not rings.supersym_check(fn(ShiftedSkewShape(lam), num_vars, bound), num_vars, bound):
                return False, f"{fn.__name__} {lam} not supersymmetric"
    return True, ""


def _strict_partitions(max_size: int):
    out = [()]
    def rec(prefix, remaining, max_part):
        for p in range(min(remaining, max_part), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), remaining - p, p - 1)
    rec((), max_size, max_size)
    return out


def _check_quasisym(num_vars=3, bound=5):
    for w in weyl.group_elements("C", 2):
        lw = weyl.length("C", w)
        total = TruncPoly.zero(bound)
        for a in hecke.hecke_words("C", w, bound):
            if hecke.mperm(a) == a:
                total = total + TruncPoly.beta(len(a) - lw, bound) * hecke.quasi(
                    a, "K", num_vars, bound
                )
        if total != hecke.fstanley("C", w, num_vars, bound):
            return False, f"K-expansion fails at {w}"
    return True, ""


def _check_positivity_sweep():
    # transition_step itself asserts nonnegativity and the LD descent;
    # expand_grassmannian asserts the support bound as it runs
    for w in weyl.group_elements("B", 3):
        expand_mod.expand_grassmannian("B", w)
    return True, ""


def _check_pi_braid(seed=0):
    rng = random.Random(seed)
    xs = [rings.xvar(i) for i in range(1, 5)]
    for _ in range(5):
        f = TruncPoly.const(rng.randint(-3, 3))
        for _ in range(4):
            term = TruncPoly.const(rng.randint(-2, 2))
            for x in xs:
                term = term * (x ** rng.randint(0, 2)) if rng.random() < 0.6 else term
            f = f + term
        for i in (1, 2):
            lhs = rings.pi_operator(i, rings.pi_operator(i + 1, rings.pi_operator(i, f)))
            rhs = rings.pi_operator(i + 1, rings.pi_operator(i, rings.pi_operator(i + 1, f)))
            if lhs != rhs:
                return False, f"braid relation fails (i={i})"
        if rings.pi_operator(1, rings.pi_operator(3, f)) != rings.pi_operator(
            3, rings.pi_operator(1, f)
        ):
            return False, "commuting relation fails"
    return True, ""


CHECKS = [
    ("golden-expansion-B", _check_golden_expansion_b),
    ("golden-expansion-C", _check_golden_expansion_c),
    ("transition-step", _check_transition_step),
    ("skew-consistency", _check_skew),
    ("gq-gp-relations", _check_gq_gp),
    ("method-agreement", _check_method_agreement),
    ("grassmannian-law", _check_grassmannian_law),
    ("type-A-transitions", _check_type_a),
    ("kn-oracle", _check_kn_oracle),
    ("bcd-transitions", _check_bcd_transitions),
    ("length-rule-equivalence", _check_length_rule),
    ("supersymmetry", _check_supersym),
    ("quasisym-identity", _check_quasisym),
    ("positivity-sweep", _check_positivity_sweep),
    ("pi-braid-relations", _check_pi_braid),
]


def _run_check(index: int) -> tuple[str, bool, str]:
    name, fn = CHECKS[index]
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        return name, False, f"raised {exc!r}"
    return name, bool(ok), detail


def cmd_verify_suite(args) -> int:
    if args.seed is not None:
        CHECKS[-1] = ("pi-braid-relations", lambda: _check_pi_braid(args.seed))
    indices = list(range(len(CHECKS)))
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_run_check, indices)
    else:
        results = [_run_check(i) for i in indices]
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if not ok and detail else ""))
        failed += 0 if ok else 1
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktrans",
        description="Transition calculus for K-Stanley symmetric functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def positive_int(text):
        value = int(text)
        if value < 1:
            raise argparse.ArgumentTypeError("must be at least 1")
        return value

    def nonneg_int(text):
        value = int(text)
        if value < 0:
            raise argparse.ArgumentTypeError("must be nonnegative")
        return value

    def add_common(p, group_types="ABCD", need_w=True):
        if need_w:
            p.add_argument("--w", required=True, help="one-line window, e.g. -3,4,-1,5,2")
        p.add_argument("--type", choices=list(group_types), default="B")
        p.add_argument("--N", type=positive_int, default=3, help="number of z variables")
        p.add_argument("--D", type=nonneg_int, default=6, help="total degree bound")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("length", help="Coxeter length of a signed permutation")
    p.add_argument("--w", required=True)
    p.add_argument("--type", choices=list("ABCD"), default="B")
    p.set_defaults(fn=cmd_length)

    p = sub.add_parser("fstanley", help="K-Stanley symmetric function, truncated")
    add_common(p, "BCD")
    p.add_argument("--method", choices=["compat", "unimodal"], default="compat")
    p.set_defaults(fn=cmd_fstanley)

    for name, fn in (("gp", tableaux.gp), ("gq", tableaux.gq)):
        p = sub.add_parser(name, help=f"K-theoretic Schur {name[-1].upper()}-function")
        p.add_argument("--shape", type=_shape_arg, required=True)
        p.add_argument("--inner", type=_shape_arg, default=())
        p.add_argument("--N", type=int, default=3)
        p.add_argument("--D", type=int, default=6)
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=lambda a, f=fn: _cmd_gpgq(a, f))

    p = sub.add_parser("expand", help="expand F_w into Grassmannian terms")
    p.add_argument("--w", required=True)
    p.add_argument("--type", choices=list("BCD"), default="B")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("skew", help="expand a skew GP/GQ function")
    p.add_argument("--basis", choices=["GP", "GQ"], required=True)
    p.add_argument("--outer", type=_shape_arg, required=True)
    p.add_argument("--inner", type=_shape_arg, default=())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_skew)

    p = sub.add_parser("groth-a", help="type A double Grothendieck polynomial")
    p.add_argument("--w", required=True)
    p.add_argument("--transition", action="store_true")
    p.set_defaults(fn=cmd_groth_a)

    p = sub.add_parser("kn-eval", help="classical-type double Grothendieck series at truncation")
    add_common(p, "BCD")
    p.set_defaults(fn=cmd_kn_eval)

    p = sub.add_parser("kn-transition", help="transition certificate with residual")
    add_common(p, "BCD")
    p.set_defaults(fn=cmd_kn_transition)

    p = sub.add_parser("verify-suite", help="run the identity battery")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_verify_suite)

    return parser


_VALUE_FLAGS = {"--w", "--shape", "--inner", "--outer"}


def _merge_value_flags(argv: list[str]) -> list[str]:
    # windows like "-2,1" start with a dash; glue them to their flag so
    # argparse does not mistake them for options
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_value_flags(list(argv)))
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
