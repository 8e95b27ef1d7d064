"""Command-line front end.

Exit codes: 0 = computed (whatever the verdict), 1 = usage error, 2 =
input/parse/admissibility error, 3 = internal invariant violation.  All
errors go to stderr with an ``error:`` prefix.  Output is deterministic
plain text (the BINGCHECK_NO_COLOR convention is honored trivially: no
styling is ever emitted), so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import BingcheckError, InternalInvariantError
from .seifert import SeifertMatrix, alexander, arf, fox_milnor, signature_function
from .cover import branched_cover_homology_order, covering_seifert_matrix
from .witt import (
    bing_double_verdict,
    from_seifert,
    jpq_presentation,
    obstruction_battery,
    phi,
    presentation_battery,
)
from .catalog import (
    builtin_catalog,
    catalog_lookup,
    format_report,
    parse_seifert,
    print_seifert,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(1)


def _add_knot_arguments(sp):
    sp.add_argument("knot", nargs="?", metavar="KNOT",
                    help="catalog name (try `bingcheck catalog list`)")
    sp.add_argument("--file", metavar="PATH",
                    help="read the Seifert matrix from a file instead")


def _load_seifert(args) -> SeifertMatrix:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            s = parse_seifert(fh.read())
        if not s.name:
            name = os.path.basename(args.file)
            s = SeifertMatrix(s.entries, name=name,
                              integral=True if s.integral else False)
        return s
    if args.knot:
        return catalog_lookup(args.knot).seifert
    raise ValueError("a catalog knot name or --file is required")


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _sigfn_text(sig) -> str:
    lines = ["arcs:", "u_lo,u_hi,signature"]
    for u_lo, u_hi, s in sig.arc_rows():
        lines.append("%s,%s,%s" % (u_lo, u_hi, s))
    lines.append("jumps:")
    lines.append("u_lo,u_hi,nullity")
    for u_lo, u_hi, n in sig.jump_rows():
        lines.append("%s,%s,%s" % (u_lo, u_hi, n))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bingcheck",
        description="Exact slice obstructions for knots and their Bing doubles.",
        epilog="The tool only ever reports obstructions ('not slice') or "
               "'no obstruction found'; it never claims a knot is slice.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser(
        "invariants",
        help="full obstruction battery",
        description="Run every implemented necessary condition for algebraic "
                    "sliceness: Fox-Milnor factorization of the Alexander "
                    "polynomial, vanishing of the signature step function, "
                    "the Arf invariant, and squareness of the determinant. "
                    "The first failing test is the verdict's certificate.",
    )
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "alexander",
        help="Alexander polynomial",
        description="Alexander polynomial det(A - t A^T), normalized to "
                    "lowest exponent 0 with a positive constant term.",
    )
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "sigfn",
        help="signature step function",
        description="Exact step function of the signature of "
                    "(1-t)A + (1-1/t)A^T on the unit circle, reported as arcs "
                    "in u = 2cos(2 pi theta) with the jump locations and "
                    "their nullities. A nonzero arc obstructs algebraic "
                    "sliceness.",
    )
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "arf",
        help="Arf invariant",
        description="Arf invariant of an integral Seifert matrix: 0 exactly "
                    "when Delta(-1) is congruent to +-1 mod 8. Arf 1 "
                    "obstructs sliceness, and a knot with Arf 1 has a "
                    "non-slice Bing double.",
    )
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "foxmilnor",
        help="Fox-Milnor factorization test",
        description="An algebraically slice knot's Alexander polynomial "
                    "factors as f(t) f(1/t) up to units; this checks the "
                    "factorization over Q and prints a witness f when it "
                    "exists.",
    )
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "cable",
        help="battery for the n-cable presentation",
        description="Substitute t -> t^n in the knot's Hermitian presentation "
                    "(the n-cable's pairing) and run the presentation "
                    "battery; the cable's signature at angle theta equals "
                    "the companion's at n theta.",
    )
    sp.add_argument("-n", type=int, required=True, metavar="N",
                    help="cabling parameter, n >= 1")
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "cover",
        help="covering Seifert matrix and its battery",
        description="Rational Seifert matrix of the knot's preimage in the "
                    "p-fold cyclic branched cover, built from "
                    "G = (A - A^T)^(-1) A, followed by its obstruction "
                    "battery (rational coefficients, so Arf and determinant "
                    "do not apply).",
    )
    sp.add_argument("-p", type=int, required=True, metavar="P",
                    help="covering degree, p >= 2")
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "foxorder",
        help="branched-cover homology order",
        description="Order of the first homology of the p-fold cyclic "
                    "branched cover: the absolute product of Delta over the "
                    "nontrivial p-th roots of unity. INFINITE when Delta "
                    "vanishes at one of them.",
    )
    sp.add_argument("-p", type=int, required=True, metavar="P",
                    help="covering degree, p >= 2")
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "jpq",
        help="battery for the J(p,q) presentation",
        description="The J(p,q) construction on companion K has Witt class "
                    "phi_p + phi_(p+q) + phi_q of K's class; this builds that "
                    "presentation by block sum and runs the battery on it. "
                    "If K's Bing double is slice, every such battery must "
                    "come back clean.",
    )
    sp.add_argument("-p", type=int, required=True, metavar="P")
    sp.add_argument("-q", type=int, required=True, metavar="Q")
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "bing",
        help="Bing-double verdict",
        description="A knot whose Bing double is slice is algebraically "
                    "slice; any failing battery test therefore certifies "
                    "that B(K) is not slice (Arf 1 gives an independent "
                    "certificate). Also verifies the machinery: J(p,q) "
                    "signature additivity and, where the J(p,q) battery is "
                    "wholly zero, the telescoping identity between "
                    "phi_(q-1) and phi_(q+1).",
    )
    sp.add_argument("--range", type=int, default=3, dest="check_range",
                    metavar="R", help="cross-check bound for p, q (default 3)")
    _add_knot_arguments(sp)

    sp = sub.add_parser(
        "catalog",
        help="list or show built-in knots",
        description="Built-in catalog of small knots and the twist family.",
    )
    sp.add_argument("action", choices=["list", "show"], metavar="list|show")
    sp.add_argument("name", nargs="?", metavar="NAME")

    sp = sub.add_parser(
        "batch",
        help="battery for each matrix file",
        description="Parse each file as a Seifert matrix and print one "
                    "obstruction report per input, in input order.",
    )
    sp.add_argument("files", nargs="+", metavar="FILE")

    return parser


def _run_catalog(args) -> None:
    if args.action == "list":
        lines = []
        for e in builtin_catalog():
            lines.append("%s  (%dx%d)  %s"
                         % (e.name, e.seifert.size, e.seifert.size, e.notes))
        _emit("\n".join(lines) + "\n")
        return
    if not args.name:
        raise ValueError("catalog show needs an entry name")
    entry = catalog_lookup(args.name)
    _emit(print_seifert(entry.seifert))
    _emit("# notes: %s\n" % entry.notes)


def _dispatch(args) -> None:
    cmd = args.command
    if cmd == "catalog":
        _run_catalog(args)
        return
    if cmd == "batch":
        reports = []
        for path in args.files:
            with open(path, encoding="utf-8") as fh:
                s = parse_seifert(fh.read())
            if not s.name:
                s = SeifertMatrix(s.entries, name=os.path.basename(path),
                                  integral=True if s.integral else False)
            reports.append(format_report(obstruction_battery(s)))
        _emit("\n".join(reports))
        return

    s = _load_seifert(args)
    if cmd == "invariants":
        _emit(format_report(obstruction_battery(s)))
    elif cmd == "alexander":
        _emit("alexander = %s\n" % alexander(s))
    elif cmd == "sigfn":
        _emit(_sigfn_text(signature_function(s)))
    elif cmd == "arf":
        _emit("arf = %d\n" % arf(s))
    elif cmd == "foxmilnor":
        result = fox_milnor(alexander(s))
        _emit("fox_milnor = %s\n" % ("pass" if result.passes else "fail"))
        if result.passes:
            _emit("fox_milnor_witness = %s\n" % result.witness)
    elif cmd == "cable":
        if args.n < 1:
            raise ValueError("cable needs n >= 1")
        pres = phi(from_seifert(s), args.n)
        name = "%s cable %d" % (s.name or "(unnamed)", args.n)
        _emit(format_report(presentation_battery(pres, name=name)))
    elif cmd == "cover":
        cover = covering_seifert_matrix(s, args.p)
        named = SeifertMatrix(cover.entries,
                              name="%s cover %d" % (s.name or "(unnamed)", args.p),
                              integral=False)
        _emit(print_seifert(named))
        _emit("\n")
        _emit(format_report(obstruction_battery(named)))
    elif cmd == "foxorder":
        _emit("order = %s\n" % branched_cover_homology_order(alexander(s), args.p))
    elif cmd == "jpq":
        pres = jpq_presentation(s, args.p, args.q)
        name = "J(%d,%d) of %s" % (args.p, args.q, s.name or "(unnamed)")
        _emit(format_report(presentation_battery(pres, name=name)))
    elif cmd == "bing":
        _emit(format_report(bing_double_verdict(s, args.check_range)))
    else:  # pragma: no cover - argparse restricts the choices
        raise InternalInvariantError("unhandled subcommand %r" % cmd)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _dispatch(args)
    except InternalInvariantError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (BingcheckError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
