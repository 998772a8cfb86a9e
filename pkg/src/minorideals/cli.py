"""Command-line front end.

Every subcommand prints deterministic text to stdout.  Exit status: 0 on
success, 1 when a verification sweep finds a failure, 2 on usage errors
(bad flags, malformed input, violated preconditions).
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from typing import Callable, Sequence

from . import ideals, ktheory, rees
from .krs import diag, extract_witness, krs, krs_array, krs_insert
from .errors import MinorIdealsError
from .polyring import Monomial, Polynomial, expand_bitableau
from .report import Report
from .tableaux import Bitableau, Shape, parse_bitableau

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ------------------------------------------------------------ flag parsing

def _shape(text: str) -> Shape:
    try:
        return Shape.parse(text)
    except MinorIdealsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _bitableau(text: str) -> Bitableau:
    try:
        return parse_bitableau(text)
    except MinorIdealsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _monomial(text: str) -> Monomial:
    try:
        return Monomial.parse(text)
    except MinorIdealsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so ``run`` stays in-process."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


# ------------------------------------------------------------ helpers

def _emit_report(rep: Report, args) -> int:
    print(rep.render(machine=args.machine))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _bound(args, extra: int = 2) -> int:
    return args.max_degree if args.max_degree is not None else args.shape.total + extra


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise _UsageError(f"--{name.replace('_', '-')} is required for this subcommand")


def _target_ideal(args) -> tuple[ideals.MonomialIdeal, str]:
    """Either the ideal generated by the --monomial flags, or ini(J_S).

    ini(J_S) is generated in degree |S|, so the graded pieces are computed up
    to that degree.
    """
    if args.monomial:
        return ideals.MonomialIdeal(args.monomial, args.m, args.n), "ideal"
    args.shape.check_ambient(args.m, args.n)
    ideal = ideals.initial_ideal_JS(args.m, args.n, args.shape, args.shape.total, args.cap_enum)
    return ideal, f"ini(J_{args.shape})"


# ------------------------------------------------------------ subcommands

def cmd_krs(args) -> int:
    _require(args, "tableau")
    arr = krs_array(args.tableau, args.shape)
    mono = arr.monomial()
    if args.machine:
        print("ell=" + ",".join(map(str, arr.ell)))
        print("r=" + ",".join(map(str, arr.r)))
        print("rho=" + ",".join(map(str, arr.rho)))
        print(f"monomial={mono}")
    else:
        print(arr)
        print(f"monomial: {mono}")
    return EXIT_OK


def cmd_krs_inverse(args) -> int:
    if not args.monomial or len(args.monomial) != 1:
        raise _UsageError("--monomial must be given exactly once for krs-inverse")
    sigma = krs_insert(args.monomial[0])
    print(f"bitableau={sigma}" if args.machine else sigma)
    return EXIT_OK


def cmd_witness(args) -> int:
    _require(args, "tableau")
    sigma = args.tableau
    w = extract_witness(sigma, args.shape)
    d = diag(w)
    ok = d.divides(krs(sigma))
    if args.machine:
        print(f"witness={w}".replace(" ", ""))
        print(f"diag={d}")
        print(f"divides={'yes' if ok else 'no'}")
    else:
        print(f"witness: {w}")
        print(f"diag: {d}")
        print(f"divides krs: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_straighten(args) -> int:
    _require(args, "tableau")
    d = args.tableau
    # widen the ambient matrix to fit the indices actually used
    m = max([args.m, *(i for f in d for i in f.rows)])
    n = max([args.n, *(j for f in d for j in f.cols)])
    result = ideals.straighten(d, m, n)
    total = Polynomial()
    for t, c in result.items():
        total = total + expand_bitableau(t) * c
    ok = total == expand_bitableau(d)
    for t, c in sorted(result.items(), key=lambda kv: kv[0].factors):
        if args.machine:
            print(f"coefficient={c} bitableau={t}".replace(" | ", "|"))
        else:
            print(f"{'+' if c > 0 else '-'}{abs(c)} {t}")
    if not ok:
        print("# expansion mismatch")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_grobner(args) -> int:
    return _emit_report(ideals.check_grobner_JS(args.m, args.n, args.shape, _bound(args), args.cap_enum), args)


def cmd_standard_basis(args) -> int:
    return _emit_report(ideals.check_standard_basis(args.m, args.n, args.shape, _bound(args), args.cap_enum), args)


def cmd_primary(args) -> int:
    return _emit_report(ideals.check_primary(args.m, args.n, args.shape, _bound(args), args.cap_enum), args)


def cmd_betti(args) -> int:
    ideal, _ = _target_ideal(args)
    return _emit_report(ideals.betti_linear_check(ideal, _bound(args, 4)), args)


def cmd_hibi(args) -> int:
    hibi = rees.hibi_relations(args.m, args.n)
    deg1 = rees.degree_one_relations(args.m, args.n)
    if args.machine:
        for g in hibi + deg1:
            print(f"binomial={g}".replace(" ", ""))
        print(f"count={len(hibi) + len(deg1)}")
        return EXIT_OK
    print(f"# Hibi relations ({len(hibi)})")
    for g in hibi:
        print(g)
    print(f"# degree-one relations ({len(deg1)})")
    for g in deg1:
        print(g)
    print(f"{len(hibi) + len(deg1)} BINOMIALS")
    return EXIT_OK


def cmd_kernel(args) -> int:
    x_bound = args.max_degree if args.max_degree is not None else 3
    rep = rees.check_kernel(args.m, args.n, x_bound, args.p_degree, args.cap_enum)
    return _emit_report(rep, args)


def cmd_lift(args) -> int:
    if args.tableau is None:
        return _emit_report(rees.check_all_lifts(args.m, args.n), args)
    factors = args.tableau.factors
    if len(factors) != 2 or any(f.rows != tuple(range(1, len(f.rows) + 1)) for f in factors):
        raise _UsageError("--tableau for lift-check must be a product of two row-initial minors")
    a, b = (rees.LatticeElement(f.cols) for f in factors)
    return _emit_report(rees.check_lift(a, b), args)


def cmd_kpoly(args) -> int:
    ideal, name = _target_ideal(args)
    k_quot = ktheory.k_polynomial(ideal, args.cap_gens)
    k_ideal = ktheory.LaurentPolynomial.one(ideal.m, ideal.n) - k_quot
    lcm = Monomial.from_dense(ktheory.generator_lcm(ideal), ideal.n)
    if args.machine:
        print(f"generators={len(ideal.generators)}")
        print(f"lcm={lcm}")
        print(f"K_ideal={k_ideal}".replace(" ", ""))
        print(f"K_quotient={k_quot}".replace(" ", ""))
    else:
        print(f"generators of {name}: {len(ideal.generators)}")
        print(f"lcm: {lcm}")
        print(f"K({name}) = {k_ideal}")
        print(f"K(R/{name}) = {k_quot}")
    return EXIT_OK


def cmd_schur_expand(args) -> int:
    ideal, name = _target_ideal(args)
    k_ideal = ktheory.k_polynomial_of_ideal(ideal, args.cap_gens)
    exp = ktheory.schur_expand(k_ideal)
    ok = exp.reassemble() == k_ideal
    notes = []
    if not args.monomial:
        limit = args.shape.transpose().part(1)
        too_long = [s for s in exp.shapes() if len(s) > limit]
        if too_long:
            ok = False
            notes.append(f"shapes longer than {limit}: {', '.join(map(str, too_long))}")
    if args.machine:
        for s in exp.shapes():
            print(f"shape={s} coefficient={exp.coefficients[s]}".replace(" - ", "-").replace(" + ", "+"))
        print(f"roundtrip={'ok' if ok else 'fail'}")
    else:
        print(f"# Schur expansion of K({name})")
        print(exp)
        for note in notes:
            print(f"# {note}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hilbert(args) -> int:
    ideal, _ = _target_ideal(args)
    return _emit_report(ktheory.check_hilbert(ideal, _bound(args), args.cap_gens), args)


# ------------------------------------------------------------ parser

_KERNEL_CAP = 2_000_000
_SWEEP_NOTE = "--max-degree defaults to |S| + 2."

SUBCOMMANDS: dict[str, tuple[Callable, str]] = {
    "krs": (cmd_krs, "Run KRS deletion on a standard bitableau (--tableau) and print the three-row "
                     "array (removed left entry, removed right entry, row mark for --shape) and the monomial."),
    "krs-inverse": (cmd_krs_inverse, "KRS insertion: the standard bitableau whose KRS monomial is --monomial."),
    "witness": (cmd_witness, "For a standard bitableau containing a superstandard tableau of shape --shape, "
                             "extract from the row-marked KRS array a row-initial bitableau of that shape whose "
                             "diagonal divides the KRS monomial."),
    "straighten": (cmd_straighten, "Write a product of minors (--tableau) as an integer combination of "
                                   "standard bitableaux."),
    "grobner-check": (cmd_grobner, "Verify ini(J_S) equals the ideal of diagonals of row-initial bitableaux, "
                                   "the product of the ini(J_{s_i}) and both intersection formulas, "
                                   "bidegree by bidegree. " + _SWEEP_NOTE),
    "standard-basis-check": (cmd_standard_basis, "Verify the standard bitableaux in J_S are exactly those "
                                                 "containing a superstandard tableau of shape S. " + _SWEEP_NOTE),
    "primary-check": (cmd_primary, "Verify J_S equals the intersection of the powers J_t^e over its "
                                   "components and search for irredundancy witnesses. " + _SWEEP_NOTE),
    "betti-check": (cmd_betti, "Multigraded Betti numbers of ini(J_S) (or of the --monomial ideal) from the "
                               "lcm lattice; fails on any Betti number off the linear strand. "
                               "--max-degree bounds |b| and defaults to |S| + 4."),
    "hibi": (cmd_hibi, "Print the binomial generators of the toric presentation of the multi-Rees algebra: "
                       "Hibi relations of the lattice of row-initial minors and the relations of degree one in p."),
    "kernel-check": (cmd_kernel, "Verify the binomials lie in the kernel and form a Groebner basis, by counting "
                                 "standard monomials against semigroup elements per multidegree. "
                                 "--max-degree bounds the x-degree (default 3)."),
    "lift-check": (cmd_lift, "Straighten [a][b] for incomparable row-initial minors and certify the meet-join "
                             "term appears while all other terms have smaller leading monomial. "
                             "Without --tableau every incomparable pair is checked."),
    "kpoly": (cmd_kpoly, "K-polynomial of ini(J_S) (or of the --monomial ideal) and of its quotient via the "
                         "Taylor resolution, with the lcm of the generators. Requires m >= n."),
    "schur-expand": (cmd_schur_expand, "Expand the K-polynomial of the ideal in Schur polynomials "
                                       "(strict rows, weak columns) with Laurent coefficients in u."),
    "hilbert-check": (cmd_hilbert, "Compare K(R/I) / prod(1 - u_i v_j) with direct counts of standard "
                                   "monomials in every bidegree. " + _SWEEP_NOTE),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minorideals",
                     description="Exact computations with products of row-initial minor ideals.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (func, text) in SUBCOMMANDS.items():
        p = sub.add_parser(name, help=text.split(". ")[0], description=text,
                           formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.set_defaults(func=func)
        p.add_argument("--m", type=_positive, default=3, help="number of rows of X")
        p.add_argument("--n", type=_positive, default=3, help="number of columns of X")
        p.add_argument("--shape", type=_shape, default=Shape(()),
                       help="shape S as comma-separated parts, e.g. 3,2")
        p.add_argument("--max-degree", type=_nonneg, default=None,
                       help="degree bound of the sweep (see description for the default)")
        p.add_argument("--tableau", type=_bitableau, default=None,
                       help='product of minors, e.g. "[1 2|1 3]*[1|2]"')
        p.add_argument("--monomial", type=_monomial, action="append", default=None,
                       help='monomial such as "x[1,1]^2*x[2,3]"; repeat to list ideal generators')
        cap = _KERNEL_CAP if name == "kernel-check" else ideals.DEFAULT_DIM_CAP
        p.add_argument("--cap-enum", type=_positive, default=cap,
                       help="cap on enumerated monomials per graded piece or sweep")
        p.add_argument("--cap-gens", type=_positive, default=ktheory.DEFAULT_GEN_CAP,
                       help="cap on generators for Taylor sums")
        p.add_argument("--machine", action="store_true", help="emit key=value lines")
        if name == "kernel-check":
            p.add_argument("--p-degree", type=_nonneg, default=2, help="bound on the p-degree")
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns (exit code, captured stdout)."""
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = _dispatch(list(argv))
    return code, out.getvalue()


def _dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinorIdealsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
