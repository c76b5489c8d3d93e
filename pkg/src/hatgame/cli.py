"""Command-line interface.

Every capability of the library is reachable as a subcommand with
reproducible output: identical flags produce byte-identical output (no
randomness anywhere, worker hints do not affect ordering).  Probabilities
are printed both as decimals (12 significant digits) and exact rationals.

Exit codes: 0 success, 2 bad arguments, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import analysis
from .adequate import (
    NoAdequateSetError,
    adequate_sets_cached,
    count_whites,
    min_cover_size,
    set_probability,
    signature,
    size_sweep,
)
from .core import (
    DecisionMatrix,
    GameParams,
    ResourceLimitError,
    evaluate_matrix,
)
from .polys import Sqrt2Num, decimal_str
from .strategy import (
    brute_force_optimal,
    all_matrices_for_set,
    dedupe_player_permutation,
    matrix_from_set,
)

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_RESOURCE = 3


def parse_probability(text: str) -> Fraction:
    """Exact probability parsing: 'a/b' rationals or decimal literals
    ('0.9' becomes exactly 9/10, never a float)."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "%r is not a rational number (use a/b or a decimal literal)" % text
        )
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("probability must be strictly between 0 and 1")
    return value


def parse_size_range(text: str) -> tuple[int, int]:
    """Inclusive size range 'LO..HI' (or 'LO-HI', or a single size)."""
    for sep in ("..", "-", ":"):
        if sep in text:
            lo_s, hi_s = text.split(sep, 1)
            break
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError("bad size range %r (use LO..HI)" % text)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError("bad size range %r" % text)
    return lo, hi


def rational_str(value: Fraction) -> str:
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def _csv_out(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    n, size = args.n, args.das
    params = GameParams(n, args.p)
    sets = adequate_sets_cached(n, size)
    records = []
    for aset in sets:
        value = set_probability(aset, params)
        zeros = [count_whites(e, n) for e in aset.elements]
        records.append((aset.elements, value, zeros))
    if args.sort == "sum":
        records.sort(key=lambda r: (r[1], r[0]))
    print("count=%d" % len(records), file=sys.stderr)
    if args.format == "json":
        payload = [
            {
                "elements": list(elems),
                "sum": rational_str(value),
                "sum_decimal": decimal_str(value),
                "zeros": zeros,
            }
            for elems, value, zeros in records
        ]
        print(json.dumps({"n": n, "das": size, "count": len(records), "sets": payload}))
        return EXIT_OK
    header = (
        ["i%d" % (k + 1) for k in range(size)]
        + ["sum", "sum_exact"]
        + ["z%d" % (k + 1) for k in range(size)]
    )
    rows = [
        list(elems) + [decimal_str(value), rational_str(value)] + zeros
        for elems, value, zeros in records
    ]
    sys.stdout.write(_csv_out(rows, header))
    return EXIT_OK


def cmd_solve(args) -> int:
    n = args.n
    if n > 5:
        raise ResourceLimitError("guaranteed-optimal solving is supported for n <= 5")
    params = GameParams(n, args.p)
    size = min_cover_size(n)
    from .adequate import optimal_sets

    sets, min_sum = optimal_sets(n, params, size)
    psi = 1 - min_sum
    matrices = [matrix_from_set(aset) for aset in sets]
    if args.format == "json":
        payload = {
            "n": n,
            "p": rational_str(params.p_white),
            "psi": rational_str(psi),
            "psi_decimal": decimal_str(psi),
            "das": size,
            "nasopt": len(sets),
            "sets": [
                {
                    "elements": list(aset.elements),
                    "sum": rational_str(min_sum),
                    "signature": signature(aset).compact(),
                    "matrix": matrix_from_set(aset).to_json_rows(),
                }
                for aset in sets
            ],
        }
        if args.all_matrices:
            payload["all_matrices"] = [
                [m.to_json_rows() for m in all_matrices_for_set(aset)]
                for aset in sets
            ]
        print(json.dumps(payload))
        return EXIT_OK
    print("n = %d" % n)
    print("p = %s = %s" % (decimal_str(params.p_white), rational_str(params.p_white)))
    print("psi = %s = %s" % (decimal_str(psi), rational_str(psi)))
    print("das = %d" % size)
    print("nasopt = %d" % len(sets))
    for aset, matrix in zip(sets, matrices):
        print()
        print(
            "set: %s   sum = %s = %s   signature = %s"
            % (
                " ".join(str(e) for e in aset.elements),
                decimal_str(min_sum),
                rational_str(min_sum),
                signature(aset).compact(),
            )
        )
        print("matrix:")
        print(matrix.to_text())
        if args.all_matrices:
            if n > 3:
                raise ResourceLimitError(
                    "--all-matrices enumerates a constrained strategy space; "
                    "supported for n <= 3"
                )
            everything = all_matrices_for_set(aset)
            print("all %d matrices losing exactly on this set:" % len(everything))
            for m in everything:
                print(m.to_text())
                print()
    return EXIT_OK


def cmd_evaluate(args) -> int:
    text = args.matrix.read_text() if hasattr(args.matrix, "read_text") else open(args.matrix).read()
    matrix = DecisionMatrix.from_text(text)
    n = matrix.n_players
    if args.n is not None and args.n != n:
        raise ValueError(
            "matrix file has %d rows but --n %d was given" % (n, args.n)
        )
    params = GameParams(n, args.p)
    value = evaluate_matrix(matrix, params)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "p": rational_str(params.p_white),
                    "win_probability": rational_str(value),
                    "win_probability_decimal": decimal_str(value),
                }
            )
        )
    else:
        print("win_probability = %s = %s" % (decimal_str(value), rational_str(value)))
    return EXIT_OK


def cmd_brute(args) -> int:
    n = args.n
    params = GameParams(n, args.p)
    best, matrices = brute_force_optimal(n, params)
    reps = dedupe_player_permutation(matrices, n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "p": rational_str(params.p_white),
                    "max": rational_str(best),
                    "max_decimal": decimal_str(best),
                    "optimal_matrices": len(matrices),
                    "non_isomorphic": len(reps),
                    "matrices": [m.to_json_rows() for m in matrices],
                }
            )
        )
        return EXIT_OK
    print("max = %s = %s" % (decimal_str(best), rational_str(best)))
    print("optimal matrices = %d" % len(matrices))
    print("non-isomorphic = %d" % len(reps))
    for m in matrices:
        print()
        print(m.to_text())
    return EXIT_OK


def cmd_psi(args) -> int:
    n = args.n
    rows = analysis.psi_curve(n, args.pmin, args.pmax, args.steps)
    if args.format == "json":
        payload = [
            {
                "p": decimal_str(r.p),
                "p_exact": rational_str(r.p.as_fraction())
                if isinstance(r.p, Sqrt2Num) and r.p.is_rational
                else (rational_str(r.p) if not isinstance(r.p, Sqrt2Num) else str(r.p)),
                "psi": decimal_str(r.psi),
                "psi_exact": rational_str(r.psi.as_fraction())
                if isinstance(r.psi, Sqrt2Num) and r.psi.is_rational
                else (rational_str(r.psi) if not isinstance(r.psi, Sqrt2Num) else str(r.psi)),
                "piece": r.piece,
            }
            for r in rows
        ]
        print(json.dumps({"n": n, "points": payload}))
        return EXIT_OK
    out = [[decimal_str(r.p), decimal_str(r.psi), r.piece] for r in rows]
    sys.stdout.write(_csv_out(out, ["p", "psi", "piece"]))
    return EXIT_OK


def cmd_dominance(args) -> int:
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ValueError("--a and --b must be given together")
        from .adequate import Signature

        result = analysis.dominance(
            Signature.from_compact(args.a), Signature.from_compact(args.b)
        )
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "a": args.a,
                        "b": args.b,
                        "relation": result.relation,
                        "roots": [
                            [rational_str(lo), rational_str(hi)]
                            for lo, hi in result.roots
                        ],
                    }
                )
            )
        else:
            print("%s vs %s: %s" % (args.a, args.b, result.relation))
            for lo, hi in result.roots:
                print(
                    "  root in [%s, %s] ~ %s"
                    % (rational_str(lo), rational_str(hi), decimal_str((lo + hi) / 2))
                )
        return EXIT_OK
    graph = analysis.dominance_graph(args.n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "nodes": list(graph.node_labels()),
                    "edges": [
                        [graph.nodes[i].compact(), graph.nodes[j].compact()]
                        for i, j in graph.edges
                    ],
                    "undominated": [
                        graph.nodes[k].compact() for k in graph.undominated()
                    ],
                    "flagged_crossings": [
                        {
                            "pair": [
                                graph.nodes[i].compact(),
                                graph.nodes[j].compact(),
                            ],
                            "roots": [
                                [rational_str(lo), rational_str(hi)]
                                for lo, hi in roots
                            ],
                        }
                        for i, j, roots in graph.flagged_crossings()
                    ],
                    "total_crossings": len(graph.crossings),
                }
            )
        )
    else:
        print(graph.to_dot())
    return EXIT_OK


def cmd_complexity(args) -> int:
    rows = analysis.complexity_table()
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "n": r.n_players,
                        "das": r.min_size,
                        "full_strategies": str(r.full_strategies),
                        "full_sci": r.full_sci,
                        "reduced_strategies": str(r.reduced_strategies),
                        "reduced_sci": r.reduced_sci,
                        "candidate_sets": str(r.candidate_sets),
                        "candidate_sci": r.candidate_sci,
                    }
                    for r in rows
                ]
            )
        )
        return EXIT_OK
    out = [
        [
            r.n_players,
            r.min_size,
            r.full_strategies,
            r.full_sci,
            r.reduced_strategies,
            r.reduced_sci,
            r.candidate_sets,
            r.candidate_sci,
        ]
        for r in rows
    ]
    sys.stdout.write(
        _csv_out(
            out,
            [
                "n",
                "das",
                "full",
                "full_sci",
                "reduced",
                "reduced_sci",
                "subsets",
                "subsets_sci",
            ],
        )
    )
    return EXIT_OK


def cmd_covering(args) -> int:
    ns = [args.n] if args.n is not None else list(range(2, 10))
    reports = [analysis.covering_check(n) for n in ns]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "n": r.n_players,
                        "computed_min_das": r.computed_min_size,
                        "covering_code_size": r.covering_code_size,
                        "agrees": r.agrees,
                        "symmetric_max_prob": rational_str(
                            r.symmetric_win_probability
                        ),
                        "symmetric_max_prob_decimal": decimal_str(
                            r.symmetric_win_probability
                        ),
                    }
                    for r in reports
                ]
            )
        )
        return EXIT_OK
    out = [
        [
            r.n_players,
            "" if r.computed_min_size is None else r.computed_min_size,
            r.covering_code_size,
            "" if r.agrees is None else str(r.agrees).lower(),
            decimal_str(r.symmetric_win_probability),
            rational_str(r.symmetric_win_probability),
        ]
        for r in reports
    ]
    sys.stdout.write(
        _csv_out(
            out,
            ["n", "computed_min_das", "K", "agrees", "max_prob", "max_prob_exact"],
        )
    )
    return EXIT_OK


def cmd_sweep(args) -> int:
    n = args.n
    params = GameParams(n, args.p)
    if args.das_range is not None:
        lo, hi = args.das_range
    else:
        lo = min_cover_size(n)
        hi = (1 << n) if n <= 4 else min(lo + 2, 1 << n)
    rows = size_sweep(n, range(lo, hi + 1), params)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "das": r.size,
                        "signature": None if r.signature is None else r.signature.compact(),
                        "sum": None if r.min_sum is None else rational_str(r.min_sum),
                        "sum_decimal": None if r.min_sum is None else decimal_str(r.min_sum),
                        "witness": None if r.witness is None else list(r.witness.elements),
                    }
                    for r in rows
                ]
            )
        )
        return EXIT_OK
    out = [
        [
            r.size,
            "" if r.signature is None else r.signature.compact(),
            "" if r.min_sum is None else decimal_str(r.min_sum),
            "" if r.min_sum is None else rational_str(r.min_sum),
        ]
        for r in rows
    ]
    sys.stdout.write(_csv_out(out, ["das", "signature", "sum", "sum_exact"]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hatgame",
        description="Exact solver and analysis toolkit for the N-player "
        "two-color hat guessing game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("csv", "json"), default="csv"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument(
            "--jobs",
            type=int,
            default=1,
            help="worker-count hint; output is identical for any value",
        )

    p = sub.add_parser("enumerate", help="list all adequate sets of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--das", type=int, required=True, help="set size to enumerate")
    p.add_argument("--p", type=parse_probability, default=Fraction(1, 2))
    p.add_argument("--sort", choices=["lex", "sum"], default="lex")
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("solve", help="optimal win probability, sets and matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=parse_probability, required=True)
    p.add_argument("--all-matrices", action="store_true")
    add_common(p, formats=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("evaluate", help="evaluate a decision-matrix file")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=parse_probability, required=True)
    p.add_argument("--matrix", required=True, help="matrix text file")
    add_common(p, formats=("text", "json"), default="text")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("brute", help="brute-force all optimal matrices (n <= 3)")
    p.add_argument("--n", type=int, required=True, choices=(2, 3))
    p.add_argument("--p", type=parse_probability, required=True)
    add_common(p, formats=("text", "json"), default="text")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("psi", help="maximum win probability curve")
    p.add_argument("--n", type=int, required=True, choices=(2, 3, 4, 5))
    p.add_argument("--pmin", type=parse_probability, required=True)
    p.add_argument("--pmax", type=parse_probability, required=True)
    p.add_argument("--steps", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("dominance", help="dominance graph of loss classes")
    p.add_argument("--n", type=int, default=5, choices=(2, 3, 4, 5))
    p.add_argument("--a", default=None, help="compare one signature (e.g. 022210)")
    p.add_argument("--b", default=None, help="against another")
    add_common(p, formats=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_dominance)

    p = sub.add_parser("complexity", help="strategy-space size comparison")
    add_common(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("covering", help="covering-code cross-check")
    p.add_argument("--n", type=int, default=None, choices=range(2, 10))
    add_common(p)
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("sweep", help="minimum loss by set size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=parse_probability, required=True)
    p.add_argument("--das-range", type=parse_size_range, default=None,
                   help="inclusive size range LO..HI")
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, NoAdequateSetError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    raise SystemExit(main())
