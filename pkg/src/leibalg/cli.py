"""Command-line interface: file-based checks, constructions, the example
registry, and the self-test suite.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input or
usage error.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from importlib import resources

from .linalg import Matrix, TwoTensor, Singular, ShapeMismatch
from .algebra import (AlgebraError, NotLeibniz, TaggedLinearMap,
                      check_leibniz, check_isomorphism, hemisemidirect_product)
from . import yang_baxter as yb
from . import bialgebra as bi
from . import rota_baxter as rbx
from . import fixtures
from .fileio import (ParseError, load_algebra, load_tensor2, load_matrix,
                     parse_rational, parse_vector, format_rational)


def data_dir():
    return resources.files("leibalg") / "data"


def _fmt_vec(v):
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


class Reporter:
    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.payload = {}

    def line(self, text):
        self.lines.append(text)

    def emit(self, command, ok):
        if self.fmt == "json":
            out = {"command": command, "ok": ok, "report": self.lines}
            out.update(self.payload)
            print(json.dumps(out, indent=2, default=str))
        else:
            for ln in self.lines:
                print(ln)
        return 0 if ok else 1


def _defect_witness(defect):
    for i, plane in enumerate(defect.coeff):
        for j, row in enumerate(plane):
            for k, c in enumerate(row):
                if c != 0:
                    return (i + 1, j + 1, k + 1), c
    return None, None


def _cmd_check(args, rep):
    alg = load_algebra(args.algebra, check=False)
    if args.what == "leibniz":
        report = check_leibniz(alg)
        rep.line(f"leibniz: {'pass' if report.ok else 'FAIL'}")
        for v in report.violations[:10]:
            rep.line("  " + v.describe())
        return rep.emit("check leibniz", report.ok)
    alg = load_algebra(args.algebra)  # validated from here on
    t = load_tensor2(args.tensor, alg.dim)
    if args.what == "clybe":
        defect = yb.clybe_defect(alg, t)
        ok = defect.is_zero()
        rep.line(f"clybe: {'pass' if ok else 'FAIL'}")
        if not ok:
            idx, c = _defect_witness(defect)
            rep.line(f"  defect nonzero at basis indices {idx}: "
                     f"lhs={format_rational(c)} rhs=0")
        return rep.emit("check clybe", ok)
    # invariance
    ok = True
    for i in range(alg.dim):
        img = yb.f_apply(alg, alg.basis_vector(i), t)
        if not img.is_zero():
            ok = False
            for a, row in enumerate(img.coeff):
                for b, c in enumerate(row):
                    if c != 0:
                        rep.line(f"invariance: FAIL")
                        rep.line(f"  F(e{i+1}) t nonzero at ({a+1},{b+1}): "
                                 f"lhs={format_rational(c)} rhs=0")
                        return rep.emit("check invariance", False)
    rep.line("invariance: pass")
    return rep.emit("check invariance", True)


def _cmd_bialgebra(args, rep):
    alg = load_algebra(args.algebra)
    t = load_tensor2(args.tensor, alg.dim)
    if args.what == "classify":
        cls = bi.classify(alg, t)
        rep.line(cls.describe())
        rep.payload["classification"] = {
            "is_bialgebra": cls.is_bialgebra,
            "quasi_triangular": cls.quasi_triangular,
            "triangular": cls.triangular,
            "factorizable": cls.factorizable,
        }
        return rep.emit("bialgebra classify", True)
    if args.what == "build":
        delta = bi.delta_from_r(alg, t)
        report = bi.check_bialgebra(alg, delta)
        rep.line(f"bialgebra: {'valid' if report.valid else 'INVALID'}")
        rep.line(f"  coalgebra: {'pass' if report.coalgebra_ok else 'FAIL'}")
        rep.line(f"  compatibility 1: {'pass' if report.bialg1_ok else 'FAIL'}")
        rep.line(f"  compatibility 2: {'pass' if report.bialg2_ok else 'FAIL'}")
        if not report.valid and report.witness:
            rep.line(f"  first failure: {report.witness}")
        for i in range(alg.dim):
            rep.line(f"  Delta({alg.basis_names[i]}) = "
                     + _tensor_str(delta.of_basis(i), alg.basis_names))
        return rep.emit("bialgebra build", report.valid)
    if args.what == "dual":
        dual = bi.dual_bracket(alg, t)
        ok = dual.is_valid()
        rep.line(f"dual bracket Leibniz: {'pass' if ok else 'FAIL'}")
        for i in range(dual.dim):
            for j in range(dual.dim):
                if any(c != 0 for c in dual.sc[i][j]):
                    val = " + ".join(
                        f"{format_rational(c)}*{dual.basis_names[k]}"
                        for k, c in enumerate(dual.sc[i][j]) if c != 0)
                    rep.line(f"  [{dual.basis_names[i]},{dual.basis_names[j]}] = {val}")
        return rep.emit("bialgebra dual", ok)
    # to-rb
    lam = _weight(args)
    data = rbx.quadratic_rb_from_factorizable(alg, t, lam)
    report = data.report()
    rep.line(f"quadratic rota-baxter data at weight {format_rational(lam)}: "
             f"{'valid' if report.valid else 'INVALID'}")
    rep.line("  omega = " + _matrix_str(data.omega))
    rep.line("  beta = " + _matrix_str(data.beta))
    return rep.emit("bialgebra to-rb", report.valid)


def _tensor_str(t, names):
    parts = [f"{format_rational(c)}*{names[i]}(x){names[j]}"
             for i, row in enumerate(t.coeff) for j, c in enumerate(row) if c != 0]
    return " + ".join(parts) if parts else "0"


def _matrix_str(m):
    return "[" + "; ".join(" ".join(format_rational(c) for c in row)
                           for row in m.entries) + "]"


def _cmd_double(args, rep):
    alg = load_algebra(args.algebra)
    t = load_tensor2(args.tensor, alg.dim)
    bialg = bi.LeibnizBialgebra.from_r(alg, t)
    dbl = bi.double_algebra(bialg)
    rep.line(f"double algebra: dim {dbl.dim}, leibniz "
             f"{'pass' if dbl.is_valid() else 'FAIL'}")
    rd = bi.double_canonical_r(bialg)
    cls = bi.classify(dbl, rd)
    rep.line("canonical tensor on the double: " + cls.describe())
    return rep.emit("double build", dbl.is_valid() and cls.factorizable)


def _cmd_factorize(args, rep):
    alg = load_algebra(args.algebra)
    t = load_tensor2(args.tensor, alg.dim)
    x = parse_vector(args.vector, alg.dim)
    x1, x2 = bi.factorize(alg, t, x)
    rep.line(f"x  = {_fmt_vec(x)}")
    rep.line(f"x1 = {_fmt_vec(x1)}")
    rep.line(f"x2 = {_fmt_vec(x2)}")
    rep.line("x1 - x2 = x: pass")
    return rep.emit("factorize", True)


def _weight(args):
    if getattr(args, "weight", None) is not None:
        return parse_rational(args.weight)
    if getattr(args, "weight_flag", None) is not None:
        return parse_rational(args.weight_flag)
    raise ParseError("missing weight: pass it positionally or via --lambda")


def _rb_witness(alg, beta, lam):
    for i in range(alg.dim):
        x = alg.basis_vector(i)
        bx = beta.apply(x)
        for j in range(alg.dim):
            y = alg.basis_vector(j)
            by = beta.apply(y)
            inner = tuple(a + b + lam * c for a, b, c in zip(
                alg.bracket(x, by), alg.bracket(bx, y), alg.bracket(x, y)))
            lhs = alg.bracket(bx, by)
            rhs = beta.apply(inner)
            if lhs != rhs:
                return (i + 1, j + 1), lhs, rhs
    return None


def _cmd_rb(args, rep):
    alg = load_algebra(args.algebra)
    beta = load_matrix(args.matrix, alg.dim)
    lam = _weight(args)
    if args.what == "check":
        ok = rbx.check_rb(alg, beta, lam)
        rep.line(f"rota-baxter weight {format_rational(lam)}: "
                 f"{'pass' if ok else 'FAIL'}")
        if not ok:
            idx, lhs, rhs = _rb_witness(alg, beta, lam)
            rep.line(f"  fails at basis indices {idx}: "
                     f"lhs={_fmt_vec(lhs)} rhs={_fmt_vec(rhs)}")
        return rep.emit("rb check", ok)
    if args.what == "phase-space":
        data = rbx.phase_space_quadratic_rb(alg, beta, lam)
        report = data.report()
        rep.line(f"phase-space quadratic rota-baxter structure on dim "
                 f"{data.algebra.dim}: {'valid' if report.valid else 'INVALID'}")
        rep.line("  omega = " + _matrix_str(data.omega))
        rep.line("  operator = " + _matrix_str(data.beta))
        return rep.emit("rb phase-space", report.valid)
    # to-factorizable
    bialg = rbx.rb_to_double_factorizable(alg, beta, lam)
    cls = bi.classify(bialg.algebra, bialg.r)
    rep.line("r = " + _tensor_str(bialg.r, bialg.algebra.basis_names))
    rep.line(cls.describe())
    return rep.emit("rb to-factorizable", cls.factorizable)


def _cmd_verify(args, rep):
    alg = load_algebra(args.algebra)
    t = load_tensor2(args.tensor, alg.dim)
    lam = _weight(args)
    ok = rbx.check_mirror_diagram(alg, t, lam)
    rep.line(f"mirror square at weight {format_rational(lam)}: "
             f"{'pass' if ok else 'FAIL'}")
    return rep.emit("verify mirror", ok)


def _cmd_examples(args, rep):
    reg = fixtures.registry()
    if args.what == "list":
        for name, entry in sorted(reg.items()):
            rep.line(f"{name}: [{entry.kind}] {entry.note}")
        return rep.emit("examples list", True)
    if args.name not in reg:
        raise ParseError(f"unknown example {args.name!r}; see `examples list`")
    entry = reg[args.name]
    rep.line(f"{entry.name} ({entry.kind}): {entry.note}")
    if entry.kind == "algebra":
        alg = entry.obj
        rep.line(f"dim {alg.dim}, basis {', '.join(alg.basis_names)}")
        for i in range(alg.dim):
            for j in range(alg.dim):
                if any(c != 0 for c in alg.sc[i][j]):
                    val = " + ".join(f"{format_rational(c)}*{alg.basis_names[k]}"
                                     for k, c in enumerate(alg.sc[i][j]) if c != 0)
                    rep.line(f"  [{alg.basis_names[i]},{alg.basis_names[j]}] = {val}")
    else:
        names = fixtures.registry()[entry.algebra].obj.basis_names
        rep.line("  " + _tensor_str(entry.obj, names))
    return rep.emit("examples show", True)


def _selftest(rep, registry_dir=None, seed=0):
    """Full invariant suite over the fixture catalog.  With a registry
    directory, the shipped files are re-read and must match the built-in
    tables bit-exactly before any further checks run."""
    base = registry_dir if registry_dir is not None else str(data_dir())
    failures = []

    def step(name, ok, detail=""):
        rep.line(f"{name}: {'pass' if ok else 'FAIL'}"
                 + (f" ({detail})" if detail and not ok else ""))
        if not ok:
            failures.append(name)

    reg = fixtures.registry()
    # fixture files parse, validate and match the canonical tables
    for name in ("e4", "g2", "h4", "abelian2", "nilpotent3", "heisenberg6"):
        try:
            alg = load_algebra(f"{base}/{name}.alg")
            step(f"fixture {name}", alg.sc == reg[name].obj.sc
                 and alg.basis_names == reg[name].obj.basis_names,
                 "file disagrees with built-in table")
        except (ParseError, AlgebraError) as exc:
            step(f"fixture {name}", False, str(exc))
    try:
        r4_file = load_tensor2(f"{base}/r4.t2", 4)
        step("fixture r4", r4_file == fixtures.r4(),
             "file disagrees with built-in tensor")
    except (ParseError, AlgebraError) as exc:
        step("fixture r4", False, str(exc))
        r4_file = fixtures.r4()

    if failures:
        rep.line("selftest: FAIL (fixture integrity)")
        return rep.emit("selftest", False)

    e4, r4 = reg["e4"].obj, r4_file
    step("catalog leibniz", all(entry.obj.is_valid() for entry in reg.values()
                                if entry.kind == "algebra"))
    step("e4/r4 yang-baxter solution", yb.clybe_defect(e4, r4).is_zero())
    step("e4/r4 invariant skew part", yb.skew_part_invariant(e4, r4))
    cls = bi.classify(e4, r4)
    step("e4/r4 classification",
         cls.quasi_triangular and cls.factorizable and not cls.triangular)
    ts = yb.t_of(e4, r4 - r4.swap()).matrix
    golden = Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1],
                               [-1, 0, 0, 0], [0, -1, 0, 0]])
    step("skew operator images", ts == golden)
    step("h4 is the hemisemidirect product",
         reg["h4"].obj.sc == hemisemidirect_product(fixtures.g2_lie()).sc)
    step("h4 isomorphic to e4", check_isomorphism(
        reg["h4"].obj, e4, TaggedLinearMap(Matrix.identity(4), "D", "A")))
    bialg = bi.LeibnizBialgebra.from_r(e4, r4)
    dbl = bi.double_algebra(bialg)
    step("double leibniz", dbl.is_valid())
    step("double canonical tensor factorizable",
         bi.classify(dbl, bi.double_canonical_r(bialg)).factorizable)
    step("double splits as a direct sum", bi.theta_isomorphism(e4, r4)[1])
    ok = True
    for lam in (Fraction(-1), Fraction(1), Fraction(-2)):
        data = rbx.quadratic_rb_from_factorizable(e4, r4, lam)
        ok = ok and rbx.factorizable_from_quadratic_rb(data).r == r4
        ok = ok and rbx.check_mirror_diagram(e4, r4, lam)
    step("round trips and mirror squares", ok)
    g2 = reg["g2"].obj
    cor = rbx.rb_to_double_factorizable(g2, Matrix.identity(2), -1)
    expect = TwoTensor.basis(4, 2, 0) + TwoTensor.basis(4, 3, 1)
    step("identity operator induces the canonical tensor", cor.r == expect)
    rng = random.Random(seed)
    rand_ok = True
    try:
        for name, alg in fixtures.catalog():
            for _ in range(3):
                t = TwoTensor.from_grid([[rng.randint(-3, 3)
                                          for _ in range(alg.dim)]
                                         for _ in range(alg.dim)])
                rand_ok = rand_ok and yb.check_sigma_equivariance(alg, t)
                bi.check_r_conditions(alg, t)
                yb.check_invariance_forms(alg, t)
    except AlgebraError as exc:
        rand_ok = False
        rep.line(f"  randomized suite error: {exc}")
    step(f"randomized equivalences (seed {seed})", rand_ok)

    rep.line(f"selftest: {'pass' if not failures else 'FAIL'}")
    return rep.emit("selftest", not failures)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="leibalg",
        description="Exact checks and constructions for Leibniz algebras, "
                    "Yang-Baxter tensors and Rota-Baxter operators.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--lambda", dest="weight_flag", metavar="P/Q",
                   help="weight for commands that take one")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify an identity from input files")
    c.add_argument("what", choices=("leibniz", "clybe", "invariance"))
    c.add_argument("algebra")
    c.add_argument("tensor", nargs="?")

    b = sub.add_parser("bialgebra", help="build/classify bialgebra data from a tensor")
    b.add_argument("what", choices=("build", "classify", "dual", "to-rb"))
    b.add_argument("algebra")
    b.add_argument("tensor")
    b.add_argument("weight", nargs="?", metavar="LAMBDA")

    d = sub.add_parser("double", help="double algebra of the bialgebra from a tensor")
    d.add_argument("what", choices=("build",))
    d.add_argument("algebra")
    d.add_argument("tensor")

    f = sub.add_parser("factorize", help="decompose a vector through a factorizable tensor")
    f.add_argument("algebra")
    f.add_argument("tensor")
    f.add_argument("vector", help="comma-separated rationals")

    r = sub.add_parser("rb", help="Rota-Baxter operator checks and constructions")
    r.add_argument("what", choices=("check", "phase-space", "to-factorizable"))
    r.add_argument("algebra")
    r.add_argument("matrix")
    r.add_argument("weight", nargs="?", metavar="LAMBDA")

    v = sub.add_parser("verify", help="verify derived commutation properties")
    v.add_argument("what", choices=("mirror",))
    v.add_argument("algebra")
    v.add_argument("tensor")
    v.add_argument("weight", nargs="?", metavar="LAMBDA")

    e = sub.add_parser("examples", help="list or show built-in fixtures")
    e.add_argument("what", choices=("list", "show"))
    e.add_argument("name", nargs="?")

    s = sub.add_parser("selftest", help="run the full invariant suite")
    s.add_argument("--registry", metavar="DIR",
                   help="directory with fixture files (defaults to the shipped set)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    rep = Reporter(args.format)
    try:
        if args.command == "check":
            if args.what in ("clybe", "invariance") and args.tensor is None:
                raise ParseError(f"check {args.what} needs a tensor file")
            return _cmd_check(args, rep)
        if args.command == "bialgebra":
            return _cmd_bialgebra(args, rep)
        if args.command == "double":
            return _cmd_double(args, rep)
        if args.command == "factorize":
            return _cmd_factorize(args, rep)
        if args.command == "rb":
            return _cmd_rb(args, rep)
        if args.command == "verify":
            return _cmd_verify(args, rep)
        if args.command == "examples":
            if args.what == "show" and not args.name:
                raise ParseError("examples show needs a fixture name")
            return _cmd_examples(args, rep)
        if args.command == "selftest":
            return _selftest(rep, args.registry, args.seed)
        raise ParseError(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotLeibniz, bi.NotFactorizable, bi.InvalidBialgebra,
            rbx.NotRotaBaxter, rbx.WrongWeight, rbx.InvalidQuadraticRB,
            rbx.NotSkew, rbx.NotInvariant, rbx.SkewPartNotInvariant,
            Singular) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        rep.line(f"FAIL: {exc}")
        rep.emit(args.command, False)
        return 1
    except (AlgebraError, ShapeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
