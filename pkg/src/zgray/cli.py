"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass

from .additive import AdditiveCode, decomposition_view, schur_chain_levels, schur_closed_chain
from .binary import DEFAULT_BUDGET, BudgetExceeded
from .cyclic import CyclicContext, poly_coeffs, poly_str, stabilization_level
from .families import FAMILIES, build_family, verify_family_theorems
from .gray import TrivialCodeError, gray_image, min_hamming_distance, min_lee_distance
from .linearity import (brute_force_linear, linear_by_decomposition, linear_by_schur_sum,
                        replay_witness)
from .nested import ChainNotClosed, nested_code, rm_chain
from .tables import reproduce_table1, reproduce_table2

EXIT_LINEAR, EXIT_NONLINEAR, EXIT_ERROR = 0, 1, 2


class ParseError(ValueError):
    pass


def parse_code_text(text: str, source: str = "<input>") -> tuple[int, list[tuple[int, ...]]]:
    """Header ``L n k`` then k rows of n integers; '#' starts a comment."""
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line))
    if not lines:
        raise ParseError(f"{source}: empty input")
    no, header = lines[0]
    try:
        L, n, k = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(f"{source}:{no}: header must be 'L n k'") from None
    if L < 1 or n < 1 or k < 1:
        raise ParseError(f"{source}:{no}: need L >= 1, n >= 1, k >= 1")
    rows = lines[1:]
    if len(rows) != k:
        raise ParseError(f"{source}: header announces {k} rows, found {len(rows)}")
    q = 1 << L
    gens = []
    for no, line in rows:
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"{source}:{no}: non-integer entry") from None
        if len(row) != n:
            raise ParseError(f"{source}:{no}: expected {n} entries, got {len(row)}")
        if any(not 0 <= x < q for x in row):
            raise ParseError(f"{source}:{no}: entries must lie in [0, {q - 1}]")
        gens.append(row)
    return L, gens


def load_code(path: str, budget: int) -> AdditiveCode:
    with open(path, encoding="utf-8") as fh:
        L, gens = parse_code_text(fh.read(), path)
    return AdditiveCode(L, gens, budget=budget)


def _parse_params(s: str | None) -> list[int]:
    if not s:
        return []
    return [int(x) for x in s.replace(",", " ").split()]


@dataclass
class ReportRecord:
    source: str
    level: int
    length: int
    size: int
    d_lee: int | None
    d_h: int | None
    chain: list[bool]
    r_in_b: bool
    linear: bool
    witness: dict | None = None
    chain_witness: dict | None = None
    seconds: float = 0.0
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        return cls(**json.loads(text))

    def text(self) -> str:
        def mark(b):
            return "yes" if b else "no"
        lines = [
            f"code      {self.source}",
            f"level     L={self.level}  n={self.length}  |C|={self.size}",
            f"d_Lee     {self.d_lee if self.d_lee is not None else '-'}",
            f"d_H       {self.d_h if self.d_h is not None else '-'}",
            "chain     " + (" ".join(f"C{i + 1}oC{i + 1}<=C{i + 2}:{mark(b)}" for i, b in enumerate(self.chain)) or "-"),
            f"R in B    {mark(self.r_in_b)}",
            f"verdict   {'linear' if self.linear else 'nonlinear'}",
        ]
        if self.error:
            lines.append(f"error     {self.error}")
        return "\n".join(lines)


def analyze(code: AdditiveCode, source: str) -> ReportRecord:
    t0 = time.perf_counter()
    view = decomposition_view(code)
    chain = schur_chain_levels(view)
    _, cw = schur_closed_chain(view)
    by_sum = linear_by_schur_sum(code, view)
    by_dec = linear_by_decomposition(code)
    if by_sum.linear != by_dec.linear:
        raise AssertionError("linearity criteria disagree")
    witness = None
    if by_dec.witness is not None:
        c, d = by_dec.witness
        if not replay_witness(code, c.entries, d.entries):
            raise AssertionError("witness does not replay")
        witness = {"c": list(c.entries), "d": list(d.entries)}
    chain_witness = None
    if cw is not None:
        chain_witness = {"level": cw[0], "u": list(cw[1].bits()), "v": list(cw[2].bits())}
    error = None
    try:
        d_lee, d_h = min_lee_distance(code), min_hamming_distance(code)
    except TrivialCodeError:
        d_lee = d_h = None
        error = "trivial code: minimum distances are undefined"
    return ReportRecord(source, code.level, code.length, len(code), d_lee, d_h, chain,
                        by_sum.linear, by_dec.linear, witness, chain_witness,
                        round(time.perf_counter() - t0, 6), error)


def _emit(rec: ReportRecord, args) -> int:
    if args.json:
        print(rec.to_json())
    else:
        print(rec.text())
        if args.witness and rec.witness:
            print(f"witness   c={tuple(rec.witness['c'])} d={tuple(rec.witness['d'])}")
        if args.witness and rec.chain_witness:
            w = rec.chain_witness
            print(f"chain     level {w['level']}: u={''.join(map(str, w['u']))} v={''.join(map(str, w['v']))}")
    if rec.error:
        return EXIT_ERROR
    return EXIT_LINEAR if rec.linear else EXIT_NONLINEAR


def _code_from_args(args) -> tuple[AdditiveCode, str]:
    if args.file:
        code = load_code(args.file, args.budget)
        if args.level is not None and args.level != code.level:
            raise ParseError(f"--level {args.level} disagrees with the file header (L={code.level})")
        return code, args.file
    if args.family:
        params = _parse_params(args.params)
        return build_family(args.family, params, args.budget), f"{args.family}({','.join(map(str, params))})"
    raise ParseError("give --file or --family")


def cmd_analyze(args) -> int:
    code, source = _code_from_args(args)
    return _emit(analyze(code, source), args)


def cmd_gray(args) -> int:
    code, source = _code_from_args(args)
    image = gray_image(code)
    words = ["".join(map(str, w.bits())) for w in image.sorted_words()]
    if args.json:
        print(json.dumps({"source": source, "length": image.length, "words": words}))
    else:
        print(f"# gray image of {source}: {len(words)} words of length {image.length}")
        print("\n".join(words))
    return 0


def cmd_nested(args) -> int:
    kind = args.family or "low-order"
    params = _parse_params(args.params) or [3]
    spec = rm_chain(kind, params[0])
    code = nested_code(spec, budget=args.budget)
    rec = analyze(code, f"nested {kind} {params[0]}")
    if rec.linear != brute_force_linear(gray_image(code)):
        raise AssertionError("nested code verdict disagrees with the brute-force oracle")
    return _emit(rec, args)


def cmd_cyclic(args) -> int:
    n = args.n
    L = args.level or 3
    ctx = CyclicContext(n, large=args.large)
    I_1 = ctx.structure.union(ctx.structure.reps_in(_parse_params(args.I)))
    if set(I_1) != set(x % n for x in _parse_params(args.I)):
        raise ParseError("I is not a union of cyclotomic cosets")
    specs = ctx.chain(I_1, L)
    t = stabilization_level(I_1, n)
    rows = [{"level": k + 1, "I": sorted(s.I), "g": poly_str(s.generator),
             "coeffs": poly_coeffs(s.generator), "dimension": s.dimension}
            for k, s in enumerate(specs)]
    if args.json:
        print(json.dumps({"n": n, "L": L, "chain": rows, "stabilization_level": t}))
    else:
        for r in rows:
            print(f"C{r['level']}: g = {r['g']}  [{r['coeffs']}]  k = {r['dimension']}")
        print(f"stabilizes at level {t}")
    return 0


def cmd_family(args) -> int:
    if args.family:
        return cmd_analyze(args)
    bad = 0
    for r in verify_family_theorems(budget=args.budget):
        status = "ok" if r.ok else "MISMATCH"
        bad += not r.ok
        verdict = {True: "linear", False: "nonlinear", None: "undecided"}[r.linear]
        print(f"{r.family:16s} {str(r.params):14s} {verdict:10s} via {r.method:14s} {status}")
    return EXIT_ERROR if bad else 0


def _print_table(results, json_out: bool) -> int:
    bad = 0
    for r in results:
        bad += not r.ok
        if json_out:
            print(json.dumps({"row": r.name, "observed": r.observed, "expected": r.expected,
                              "mismatches": r.mismatches, "notes": r.notes}))
        else:
            cells = "  ".join(f"{k}={v}" for k, v in r.observed.items())
            tail = "ok" if r.ok else "MISMATCH " + ", ".join(
                f"{k}: expected {r.expected[k]} got {r.observed[k]}" for k in r.mismatches)
            if r.notes:
                tail += " (" + "; ".join(r.notes) + ")"
            print(f"{r.name:12s} {cells}  {tail}")
    return 1 if bad else 0


def cmd_table1(args) -> int:
    return _print_table(reproduce_table1(), args.json)


def cmd_table2(args) -> int:
    return _print_table(reproduce_table2(CyclicContext(125, large=True)), args.json)


def random_code(rng: random.Random, L: int | None = None, max_n: int = 5, max_gens: int = 2) -> AdditiveCode:
    L = L or rng.choice((2, 3, 4))
    n = rng.randint(1, max_n)
    k = rng.randint(1, max_gens)
    q = 1 << L
    return AdditiveCode(L, [tuple(rng.randrange(q) for _ in range(n)) for _ in range(k)])


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    count = (_parse_params(args.params) or [200])[0]
    bad = 0
    for _ in range(count):
        code = random_code(rng)
        a = linear_by_decomposition(code).linear
        b = linear_by_schur_sum(code).linear
        c = brute_force_linear(gray_image(code))
        if not a == b == c:
            bad += 1
            print(f"disagreement on L={code.level} generators={code.generators}")
    print(f"selftest: {count} random codes, seed {args.seed}, {bad} disagreements")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zgray", description="Linearity of Gray images of Z_{2^L}-additive codes")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", type=int, help="alphabet level L (Z_{2^L})")
    common.add_argument("--file", help="code file: header 'L n k' then k generator rows")
    common.add_argument("--family", help=f"family name ({', '.join(FAMILIES)}) or RM chain kind for 'nested'")
    common.add_argument("--params", help="comma separated integer parameters")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--witness", action="store_true", help="print nonlinearity witnesses")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="linearity report for a code").set_defaults(func=cmd_analyze)
    sub.add_parser("gray", parents=[common], help="dump the Gray image").set_defaults(func=cmd_gray)
    sub.add_parser("nested", parents=[common], help="Reed-Muller nested construction").set_defaults(func=cmd_nested)
    c = sub.add_parser("cyclic", parents=[common], help="squaring chain of a cyclic code")
    c.add_argument("n", type=int)
    c.add_argument("I", help="defining complement I, e.g. 1,2,4")
    c.add_argument("--large", action="store_true", help="allow extension fields above GF(2^32)")
    c.set_defaults(func=cmd_cyclic)
    sub.add_parser("family", parents=[common], help="family code or theorem grid").set_defaults(func=cmd_family)
    sub.add_parser("table1", parents=[common], help="reproduce the additive-code table").set_defaults(func=cmd_table1)
    sub.add_parser("table2", parents=[common], help="reproduce the n=125 cyclic table").set_defaults(func=cmd_table2)
    sub.add_parser("selftest", parents=[common], help="random oracle agreement").set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
    except ChainNotClosed as e:
        print(f"chain not closed under Schur product: {e}", file=sys.stderr)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
