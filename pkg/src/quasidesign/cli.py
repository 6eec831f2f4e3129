"""Command line interface.

Every subcommand prints a one-line summary starting with ``OK``, ``FAIL``,
``NONE`` or ``CAP``. Commands that produce a table, design or word list
write it to ``--output`` when given (summary on stdout), otherwise the data
goes to stdout and the summary to stderr so the output can be piped.

Exit codes: 0 success/true, 1 property false or nonexistence, 2 usage, I/O
or resource-cap problems, 3 internal check failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra, bounds, codes, constructions, designs, formats, search
from .algebra import Groupoid
from .data import DataIntegrityError
from .designs import InternalCheckError, MendelsohnDesign

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _Out:
    def __init__(self, args):
        self.path = getattr(args, "output", None)

    def emit(self, summary: str, data: str | None = None) -> None:
        if data is None:
            print(summary)
        elif self.path:
            Path(self.path).write_text(data, encoding="utf-8")
            print(summary)
        else:
            print(summary, file=sys.stderr)
            sys.stdout.write(data)


def _table(path: str) -> Groupoid:
    return Groupoid.from_text(formats.read_text(path))


def _design(path: str) -> MendelsohnDesign:
    return MendelsohnDesign.from_text(formats.read_text(path))


def cmd_classify(args, out: _Out) -> int:
    G = _table(args.table)
    r = algebra.classify(G)
    detail = f"order={G.order} left={r.is_left} right={r.is_right} idempotent={r.is_idempotent}"
    if r.is_quasigroup:
        out.emit(f"OK quasigroup {detail}")
        return EXIT_OK
    out.emit(f"FAIL not a quasigroup {detail}")
    return EXIT_FALSE


def cmd_derive(args, out: _Out) -> int:
    G = _table(args.table)
    D = algebra.recursive_derivative(G, args.n)
    r = algebra.classify(D)
    out.emit(f"OK derivative n={args.n} order={G.order} quasigroup={r.is_quasigroup}", D.to_text())
    return EXIT_OK


def cmd_degree(args, out: _Out) -> int:
    G = _table(args.table)
    deg = algebra.differentiability_degree(G, args.cap)
    if deg.cap_reached:
        out.emit(f"OK degree=cap-reached cap={deg.cap}")
    elif deg.value < 0:
        out.emit("FAIL degree=-1 (not a quasigroup)")
        return EXIT_FALSE
    else:
        out.emit(f"OK degree={deg.value}")
    return EXIT_OK


def cmd_check_design(args, out: _Out) -> int:
    D = _design(args.design)
    check = designs.verify_design(D)
    perf = designs.perfectness(D)
    head = f"v={D.v} k={D.k} lambda={D.lam} blocks={check.block_count} max_perfect_l={perf.max_perfect_l}"
    lines = []
    ok = bool(check)
    if not check:
        if check.expected_block_count != check.block_count:
            lines.append(f"block count {check.block_count}, expected {check.expected_block_count}")
        lines += [f"pair {a},{b} consecutive {c} times" for (a, b), c in check.violations]
    if args.perfect is not None and perf.max_perfect_l < args.perfect:
        ok = False
        for t in range(perf.max_perfect_l + 1, args.perfect + 1):
            lines += [f"pair {a},{b} {t}-apart {c} times" for (a, b), c in perf.per_t_violations.get(t, [])]
    out.emit(("OK " if ok else "FAIL ") + head)
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_construct(args, out: _Out) -> int:
    G = designs.directed_standard_construction(_design(args.design))
    out.emit(f"OK standard construction order={G.order}", G.to_text())
    return EXIT_OK


def cmd_decompose(args, out: _Out) -> int:
    G = _table(args.table)
    cycles = designs.cyclic_decomposition(G)
    big = sorted(designs.nontrivial_cycles(cycles))
    lengths = sorted({len(c) for c in big})
    summary = f"OK cycles={len(cycles)} trivial={len(cycles) - len(big)} lengths={','.join(map(str, lengths))}"
    if len(lengths) == 1 and all(len(set(c.elements)) == len(c) for c in big):
        data = formats.format_design(G.order, lengths[0], 1, (c.elements for c in big))
    else:
        data = "# cycles of length > 1\n" + "".join(
            " ".join(formats.symbol(x, G.order) for x in c.elements) + "\n" for c in big
        )
    out.emit(summary, data)
    return EXIT_OK


def cmd_characterize(args, out: _Out) -> int:
    G = _table(args.table)
    if designs.check_characterization(G, args.n):
        out.emit(f"OK arises from a ({G.order},{args.n + 3},1)-PMD")
        return EXIT_OK
    out.emit(f"FAIL does not arise from a ({G.order},{args.n + 3},1)-PMD")
    return EXIT_FALSE


def cmd_gen_code(args, out: _Out) -> int:
    G = _table(args.table)
    words = codes.generate_recursive_code(G, args.n)
    out.emit(
        f"OK words={len(words)} q={G.order} n={args.n}",
        formats.format_words(G.order, args.n, words.tolist()),
    )
    return EXIT_OK


def cmd_check_mds(args, out: _Out) -> int:
    q, n, words = formats.parse_words(formats.read_text(args.words))
    s = codes.summarize(words, q)
    detail = f"{s} size={s.size} defect={s.singleton_defect:g}"
    if s.is_mds:
        out.emit(f"OK MDS {detail}")
        return EXIT_OK
    out.emit(f"FAIL not MDS {detail}")
    return EXIT_FALSE


def cmd_theorem1(args, out: _Out) -> int:
    check = codes.theorem1_crosscheck(_table(args.table), args.n)
    out.emit(("OK consistent " if check else "FAIL inconsistent ") + check.evidence())
    return EXIT_OK if check else EXIT_FALSE


def cmd_construct26(args, out: _Out) -> int:
    if args.design:
        D = constructions.construct_26_pmd()
        out.emit(f"OK (26,5,1)-PMD blocks={len(D.blocks)}", D.to_text())
        return EXIT_OK
    G = constructions.construct_26_quasigroup(args.derivative)
    out.emit(f"OK order=26 derivative={args.derivative}", G.to_text())
    return EXIT_OK


def cmd_bound(args, out: _Out) -> int:
    b = bounds.degree_lower_bound(args.q)
    out.emit(f"OK {b}")
    return EXIT_OK


def _cell(x) -> str:
    if x is None:
        return "-"
    return "inf" if x == float("inf") else str(int(x))


def cmd_bounds_report(args, out: _Out) -> int:
    entries = bounds.bounds_report(args.max)
    improved = [e for e in entries if e.improved]
    reproduced = [e for e in improved if e.reproduced]
    ok = len(reproduced) == len(improved)
    lines = ["q\tcomputed\ttable\told\timproved\treproduced\texceeds_previous\tjustification"]
    for e in entries:
        ref = e.reference
        lines.append("\t".join([
            str(e.q), str(e.computed),
            _cell(ref.value if ref else None), _cell(ref.old if ref else None),
            str(e.improved).lower(), "-" if e.reproduced is None else str(e.reproduced).lower(),
            str(e.exceeds_previous).lower(), e.justification,
        ]))
    status = "OK" if ok else "FAIL"
    out.emit(f"{status} {len(reproduced)}/{len(improved)} improved cells reproduced", "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_search_pmd(args, out: _Out) -> int:
    res = search.search_pmd(
        args.v, args.k, args.perfect, args.limit,
        node_cap=args.node_cap, max_pairs=args.max_pairs, threads=args.threads,
    )
    kind = "PMD" if args.perfect else "MD"
    if res.designs:
        data = "".join(
            f"# design {i + 1}\n" + D.to_text() for i, D in enumerate(res.designs)
        )
        out.emit(f"OK found {len(res.designs)} ({args.v},{args.k},1)-{kind} nodes={res.nodes}", data)
        return EXIT_OK
    if res.complete:
        out.emit(f"NONE (complete) ({args.v},{args.k},1)-{kind} nodes={res.nodes}")
        return EXIT_FALSE
    out.emit(f"CAP (incomplete: node cap {args.node_cap} reached) ({args.v},{args.k},1)-{kind}")
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasidesign", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=func)
        return sp

    def with_output(sp):
        sp.add_argument("-o", "--output", help="write data here instead of stdout")
        return sp

    sp = add("classify", cmd_classify, "left/right quasigroup and idempotence checks")
    sp.add_argument("table")
    sp = with_output(add("derive", cmd_derive, "n-th recursive derivative"))
    sp.add_argument("table")
    sp.add_argument("--n", type=int, required=True)
    sp = add("degree", cmd_degree, "degree of recursive differentiability")
    sp.add_argument("table")
    sp.add_argument("--cap", type=int, default=None)
    sp = add("check-design", cmd_check_design, "verify a Mendelsohn design")
    sp.add_argument("design")
    sp.add_argument("--perfect", type=int, default=None, metavar="L", help="also require L-perfect")
    sp = with_output(add("construct", cmd_construct, "directed standard construction"))
    sp.add_argument("design")
    sp = with_output(add("decompose", cmd_decompose, "cyclic decomposition of a right quasigroup"))
    sp.add_argument("table")
    sp = add("characterize", cmd_characterize, "test whether a quasigroup comes from a PMD")
    sp.add_argument("table")
    sp.add_argument("--n", type=int, required=True)
    sp = with_output(add("gen-code", cmd_gen_code, "complete 2-recursive code"))
    sp.add_argument("table")
    sp.add_argument("--n", type=int, required=True)
    sp = add("check-mds", cmd_check_mds, "distance and Singleton defect of a word list")
    sp.add_argument("words")
    sp = add("theorem1", cmd_theorem1, "MDS code <-> differentiable quasigroup cross-check")
    sp.add_argument("table")
    sp.add_argument("--n", type=int, required=True)
    sp = with_output(add("construct26", cmd_construct26, "the order-26 quasigroup"))
    sp.add_argument("--derivative", type=int, default=0)
    sp.add_argument("--design", action="store_true", help="emit the (26,5,1)-PMD instead")
    sp = add("bound", cmd_bound, "degree lower bound from PMD existence")
    sp.add_argument("q", type=int)
    sp = with_output(add("bounds-report", cmd_bounds_report, "bounds for q <= MAX against the reference table"))
    sp.add_argument("--max", type=int, default=100)
    sp = with_output(add("search-pmd", cmd_search_pmd, "exhaustive search for small designs"))
    sp.add_argument("v", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--perfect", action="store_true")
    sp.add_argument("--limit", type=int, default=1)
    sp.add_argument("--node-cap", type=int, default=search.DEFAULT_NODE_CAP)
    sp.add_argument("--max-pairs", type=int, default=search.DEFAULT_MAX_PAIRS)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, _Out(args))
    except (InternalCheckError, DataIntegrityError, AssertionError) as exc:
        print(f"FAIL internal check: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OSError, ValueError) as exc:
        print(f"FAIL {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
