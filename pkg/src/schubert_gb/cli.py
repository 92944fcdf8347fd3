"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 enumeration guard exceeded, 4 missing fixture.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decoding import BSC, DECODED, FixedWeight, gb_decode, simulate
from .estimators import _as_mask
from .fixtures import FixtureMissingError
from .formats import format_basis, format_matrix, format_points, parse_basis, parse_matrix
from .groebner import buchberger, capability, coset_engine, ideal_generators
from .linalg import LinearCode
from .schubert import (
    SchubertSpec,
    enumerate_schubert_points,
    generator_matrix,
    index_tuples,
    schubert_params,
)
from .validation import EnumerationLimitError
from .verify import SECTIONS, run_checks
from .words import monomial_to_string, word_to_string

OK, MISMATCH, USAGE, GUARD, MISSING_FIXTURE = 0, 1, 2, 3, 4


def _spec_from_args(args) -> SchubertSpec:
    alpha = tuple(int(x) for x in args.alpha.split(","))
    return SchubertSpec(l=args.l, m=args.m, q=args.q, alpha=alpha)


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--l", type=int, required=True, help="subspace dimension")
    parser.add_argument("--m", type=int, required=True, help="ambient dimension")
    parser.add_argument("--q", type=int, required=True, help="prime field size")
    parser.add_argument(
        "--alpha", required=True, help="comma-separated strictly increasing tuple, e.g. 1,4"
    )


def cmd_params(args) -> int:
    p = schubert_params(_spec_from_args(args))
    t = (p.d - 1) // 2
    mds = "yes" if p.k + p.d == p.n + 1 else "no"
    print(f"n={p.n} k={p.k} d={p.d} t={t} mds={mds}")
    return OK


def cmd_build(args) -> int:
    spec = _spec_from_args(args)
    G = generator_matrix(spec)
    Path(args.output).write_text(format_matrix(G, spec.q))
    if args.emit_points:
        points = enumerate_schubert_points(spec)
        tuples = list(index_tuples(spec.l, spec.m))
        Path(args.emit_points).write_text(format_points(points, tuples))
    return OK


def cmd_gb(args) -> int:
    G, p = parse_matrix(Path(args.matrix).read_text())
    if p != 2:
        raise ValueError("binary only")
    code = LinearCode.from_generator(G, p=2)
    if args.engine == "buchberger":
        basis = buchberger(ideal_generators(code))
    else:
        basis = coset_engine(code)
    if args.output:
        Path(args.output).write_text(format_basis(basis))
    print(f"elements={len(basis.elements)} t={capability(basis)}")
    return OK


def cmd_decode(args) -> int:
    basis = parse_basis(Path(args.basis).read_text())
    word = _as_mask(args.word, basis.n)
    outcome = gb_decode(word, basis, mode=args.mode)
    if outcome.status == DECODED:
        print(
            f"status={outcome.status} "
            f"canonical={monomial_to_string(outcome.canonical)} "
            f"error={word_to_string(outcome.error, basis.n)} "
            f"codeword={monomial_to_string(outcome.codeword)} "
            f"codeword_bits={word_to_string(outcome.codeword, basis.n)} "
            f"nf_weight={outcome.nf_weight}"
        )
    else:
        print(
            f"status={outcome.status} "
            f"canonical={monomial_to_string(outcome.canonical)} "
            f"nf_weight={outcome.nf_weight}"
        )
    return OK


def _parse_model(text: str):
    kind, _, value = text.partition(":")
    if kind == "fixed_weight":
        return FixedWeight(int(value))
    if kind == "bsc":
        return BSC(float(value))
    raise ValueError(f"unknown model {text!r}; use fixed_weight:<w> or bsc:<p>")


def cmd_simulate(args) -> int:
    G, p = parse_matrix(Path(args.matrix).read_text())
    if p != 2:
        raise ValueError("binary only")
    code = LinearCode.from_generator(G, p=2)
    basis = coset_engine(code)
    report = simulate(code, basis, _parse_model(args.model), args.trials, args.seed)
    print(report.record())
    return OK


def cmd_verify_paper(args) -> int:
    only = [args.only] if args.only else None
    results = run_checks(only=only, echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return MISMATCH if failed else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgb",
        description="Schubert codes, binomial-ideal Groebner bases, and decoding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print code parameters for a variety spec")
    _add_spec_flags(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("build", help="construct a generator matrix")
    _add_spec_flags(p)
    p.add_argument("-o", "--output", required=True, help="matrix output file")
    p.add_argument("--emit-points", help="also write the point coordinates here")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("gb", help="compute the reduced Groebner basis of a code")
    p.add_argument("--matrix", required=True, help="generator matrix file")
    p.add_argument("--engine", choices=("coset", "buchberger"), default="coset")
    p.add_argument("-o", "--output", help="basis output file")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("decode", help="decode a received word against a basis file")
    p.add_argument("--basis", required=True, help="basis file from 'sgb gb'")
    p.add_argument("--word", required=True, help="binary string or monomial like x1*x2")
    p.add_argument("--mode", choices=("bounded", "complete"), default="bounded")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run the seeded channel simulator")
    p.add_argument("--matrix", required=True, help="generator matrix file")
    p.add_argument("--model", required=True, help="fixed_weight:<w> or bsc:<p>")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify-paper", help="replay all bundled reference fixtures")
    p.add_argument("--only", choices=SECTIONS, help="restrict to one check section")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return GUARD
    except FixtureMissingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MISSING_FIXTURE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
