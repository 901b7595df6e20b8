"""Command line interface.

Exit codes: 0 success (for verify: words match), 1 verify mismatch,
2 malformed input or arguments, 3 domain errors (wrong determinant,
unsupported dimension, bad indices), 4 exhausted state budgets.
Logarithms in reported bounds and ratios are natural.
"""

import argparse
import json
import math
import sys
from dataclasses import asdict

from .abwords import eij_ab_word, rewrite_word_ab
from .bfs import DEFAULT_BUDGET, bfs_ball_sl2z, bfs_diameter
from .compression import compress_power, compress_power_modp
from .core import (
    AB,
    ELEMENTARY,
    MatFp,
    MatZ,
    eval_word_fp,
    eval_word_z,
    sup_norm,
)
from .errors import BudgetExceededError, CayleyNavError, ParseError
from .euclid import DEFAULT_K, accelerated_reduce, step_bound, subtractive_gcd
from .fibonacci import zeckendorf, zeckendorf_length_bound
from .formats import (
    format_word_text,
    parse_matrix_text,
    parse_word_text,
    word_to_json,
)
from .modp import DEFAULT_C, diameter_upper_bound_report, word_for_modp
from .normalform import normal_form_result


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_compress(args) -> int:
    if args.modp is not None:
        w = compress_power_modp(args.n, args.i, args.j, args.m, args.modp, args.aux)
    else:
        w = compress_power(args.n, args.i, args.j, args.m, args.aux)
    bound = zeckendorf_length_bound(abs(args.m)) if args.m else 0.0
    payload = {"length": len(w), "bound": bound, "word": word_to_json(w)}
    _emit(args, payload, format_word_text(w))
    return 0


def cmd_zeckendorf(args) -> int:
    z = zeckendorf(args.m)
    payload = {"m": args.m, "indices": list(z.indices), "summands": list(z.summands())}
    text = f"{args.m} = " + " + ".join(f"F_{k}" for k in z.indices)
    text += "  (" + " + ".join(str(v) for v in z.summands()) + ")"
    _emit(args, payload, text)
    return 0


def cmd_gcd(args) -> int:
    entries = tuple(args.entries)
    trace = subtractive_gcd(entries)
    padded = entries if len(entries) >= 3 else entries + (0,)
    res = accelerated_reduce(padded, args.active)
    k_eff = args.active if args.active is not None else len(padded)
    max_abs = max(abs(x) for x in padded)
    bound = step_bound(k_eff, max_abs, args.euclid_k)
    payload = {
        "entries": list(entries),
        "subtractive": {"steps": trace.step_count, "final": list(trace.final)},
        "accelerated": {
            "length": len(res.word),
            "final": list(res.final),
            "quotient_steps": [[st.target, st.source, st.multiple] for st in res.quotient_steps],
            "bound": bound,
            "euclid_k": args.euclid_k,
        },
    }
    lines = [
        f"subtractive: steps={trace.step_count} final={trace.final}",
        f"accelerated: length={len(res.word)} bound={bound:.1f} final={res.final}",
    ]
    if args.trace:
        lines.append("subtractive trace:")
        lines.extend(f"  {t}" for t in trace.tuples())
        lines.append("quotient steps:")
        lines.extend(
            f"  row {st.target} += {st.multiple} * row {st.source}" for st in res.quotient_steps
        )
        payload["subtractive"]["trace"] = [list(t) for t in trace.tuples()]
    _emit(args, payload, "\n".join(lines))
    return 0


def _require_integer_matrix(m) -> MatZ:
    if isinstance(m, MatFp):
        raise ParseError("expected an integer matrix: header must be just the dimension")
    return m


def _require_modp_matrix(m) -> MatFp:
    if not isinstance(m, MatFp):
        raise ParseError("expected a mod-p matrix: header must be 'n p'")
    return m


def cmd_normal_form(args) -> int:
    text = _read_text(args.path)
    if not args.stats:
        m = _require_integer_matrix(parse_matrix_text(text))
        res = normal_form_result(m)
        payload = {
            "length": len(res.word),
            "phase_lengths": list(res.phase_lengths),
            "column_norms": list(res.column_norms),
            "word": word_to_json(res.word),
        }
        _emit(args, payload, format_word_text(res.word))
        return 0
    blocks = [b for b in text.split("\n\n") if b.strip()]
    rows = []
    lines = []
    for block in blocks:
        m = _require_integer_matrix(parse_matrix_text(block))
        res = normal_form_result(m)
        norm = sup_norm(m)
        ratio = len(res.word) / math.log(norm) if norm >= 2 else None
        rows.append(
            {
                "n": m.n,
                "norm": norm,
                "peak_norm": max(res.column_norms),
                "length": len(res.word),
                "phase_lengths": list(res.phase_lengths),
                "ratio": ratio,
            }
        )
        a, b, c = res.phase_lengths
        shown = f"{ratio:.1f}" if ratio is not None else "-"
        lines.append(
            f"n={m.n} norm={norm} peak={max(res.column_norms)} "
            f"length={len(res.word)} phases={a}/{b}/{c} ratio={shown}"
        )
    _emit(args, {"matrices": rows}, "\n".join(lines))
    return 0


def cmd_reduce_modp(args) -> int:
    m = _require_modp_matrix(parse_matrix_text(_read_text(args.path)))
    w = word_for_modp(m)
    payload = {"length": len(w), "p": m.p, "word": word_to_json(w)}
    _emit(args, payload, format_word_text(w))
    return 0


def cmd_fp_report(args) -> int:
    report = diameter_upper_bound_report(
        args.n,
        args.p,
        exhaustive=args.exhaustive,
        samples=args.samples,
        seed=args.seed,
        c_const=args.modp_c,
        budget=args.budget,
    )
    if args.json:
        print(json.dumps(asdict(report), indent=2, sort_keys=True))
        return 0
    print("n,p,order,mode,count,max_length,mean_length,normalized_max,bound,c_const,seed")
    seed = "" if report.seed is None else report.seed
    print(
        f"{report.n},{report.p},{report.order},{report.mode},{report.count},"
        f"{report.max_length},{report.mean_length:.3f},{report.normalized_max:.3f},"
        f"{report.bound:.3f},{report.c_const},{seed}"
    )
    return 0


def cmd_rewrite_ab(args) -> int:
    text = " ".join(args.tokens) if args.tokens else _read_text("-")
    w = parse_word_text(text, args.n)
    out = rewrite_word_ab(w)
    payload = {"input_length": len(w), "length": len(out), "word": word_to_json(out)}
    _emit(args, payload, format_word_text(out))
    return 0


def cmd_ab_table(args) -> int:
    rows = []
    lines = []
    for i in range(1, args.n + 1):
        for j in range(1, args.n + 1):
            if i == j:
                continue
            w = eij_ab_word(i, j, args.n)
            rows.append({"i": i, "j": j, "length": len(w), "word": format_word_text(w)})
            lines.append(f"e({i},{j})  len={len(w):3d}  {format_word_text(w)}")
    _emit(args, {"n": args.n, "entries": rows}, "\n".join(lines))
    return 0


def cmd_bfs_diameter(args) -> int:
    alphabet = ELEMENTARY if args.alphabet == "elementary" else AB
    rep = bfs_diameter(args.n, args.p, alphabet, args.budget)
    payload = asdict(rep)
    hist = " ".join(f"{d}:{c}" for d, c in sorted(rep.histogram.items()))
    text = (
        f"SL_{rep.n}(F_{rep.p}) over {args.alphabet}: order={rep.order} "
        f"diameter={rep.diameter}\nhistogram: {hist}"
    )
    _emit(args, payload, text)
    return 0


def cmd_sl2_lowerbound(args) -> int:
    ball = bfs_ball_sl2z(args.radius)
    dists = {}
    lines = [f"ball size at radius {args.radius}: {len(ball)}"]
    for k in range(1, args.radius + 1):
        d = ball.get((1, 0, k, 1))
        dists[k] = d
        lines.append(f"d(e(2,1)^{k}) = {d}")
    lines.append("distance grows linearly in the exponent: no compression in SL_2")
    _emit(args, {"radius": args.radius, "ball_size": len(ball), "distances": dists}, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    m = parse_matrix_text(_read_text(args.matrix))
    if args.word is not None:
        text = _read_text(args.word)
    elif args.tokens:
        text = " ".join(args.tokens)
    else:
        text = _read_text("-")
    w = parse_word_text(text, m.n)
    if isinstance(m, MatFp):
        got = eval_word_fp(w, m.p)
    else:
        got = eval_word_z(w)
    if got == m:
        print(f"MATCH length={len(w)}")
        return 0
    print("MISMATCH")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-nav",
        description="Constructive short words over elementary generators of SL_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compress", help="word of logarithmic length for e(i,j)^m")
    s.add_argument("n", type=int)
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.add_argument("m", type=int)
    s.add_argument("--aux", type=int, default=None, help="auxiliary index (default: smallest free)")
    s.add_argument("--modp", type=int, default=None, metavar="P", help="reduce the exponent mod the prime P")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_compress)

    s = sub.add_parser("zeckendorf", help="Fibonacci decomposition of a positive integer")
    s.add_argument("m", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_zeckendorf)

    s = sub.add_parser("gcd", help="reduce an integer tuple by row operations")
    s.add_argument("entries", type=int, nargs="+")
    s.add_argument("--active", type=int, default=None, help="reduce only the trailing k entries")
    s.add_argument("--euclid-k", type=float, default=DEFAULT_K, help="constant in the letter budget (natural log)")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gcd)

    s = sub.add_parser("normal-form", help="word for an integer matrix with determinant 1")
    s.add_argument("path", nargs="?", default="-", help="matrix file, '-' for stdin")
    s.add_argument("--stats", action="store_true", help="summarize blank-line-separated matrices")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_normal_form)

    s = sub.add_parser("reduce-modp", help="word for a matrix over F_p with determinant 1")
    s.add_argument("path", nargs="?", default="-", help="matrix file with 'n p' header, '-' for stdin")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_reduce_modp)

    s = sub.add_parser("fp-report", help="word length statistics over SL_n(F_p), CSV by default")
    s.add_argument("n", type=int)
    s.add_argument("p", type=int)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--modp-c", type=float, default=DEFAULT_C, help="constant in the n^2 ln p budget")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_fp_report)

    s = sub.add_parser("rewrite-ab", help="rewrite an elementary word over A and B")
    s.add_argument("n", type=int)
    s.add_argument("tokens", nargs="*", help="word tokens; stdin when omitted")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rewrite_ab)

    s = sub.add_parser("ab-table", help="A,B words for every elementary generator")
    s.add_argument("n", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_ab_table)

    s = sub.add_parser("bfs-diameter", help="exact Cayley diameter of SL_n(F_p) by search")
    s.add_argument("n", type=int)
    s.add_argument("p", type=int)
    s.add_argument("--alphabet", choices=["elementary", "ab"], default="elementary")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bfs_diameter)

    s = sub.add_parser("sl2-lowerbound", help="exact SL_2(Z) distances of e(2,1)^k")
    s.add_argument("radius", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sl2_lowerbound)

    s = sub.add_parser("verify", help="check that a word evaluates to a matrix")
    s.add_argument("--matrix", required=True, help="matrix file, '-' for stdin")
    s.add_argument("--word", default=None, help="word file, '-' for stdin")
    s.add_argument("tokens", nargs="*", help="word tokens when no --word is given")
    s.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CayleyNavError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
