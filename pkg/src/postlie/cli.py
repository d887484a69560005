"""Command-line interface.

    postlie check <kind> <files...>        exit 0 pass / 1 violations / 2 usage
    postlie derive <construction> <files...> [-o OUT]
    postlie corpus verify|list|write|show

Set POSTLIE_VERBOSE to control how many witnesses a failing check prints
(0 silences them; default 5).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import algebra as alg_mod
from . import bialgebra as bi
from . import construct as con
from . import forms
from .algebra import Algebra, CheckReport, PreconditionError, UnknownOperationError
from .corpus import CORPUS_NAMES, corpus_text, write_corpus
from .documents import Document, DocumentError, dumps, load
from .linalg import LinAlgError
from .scalars import ONE, Scalar, ScalarParseError
from .verify import run_acceptance

CHECK_KINDS = (
    "lie", "pre-lie", "post-lie", "pp", "pre-pp", "l-dendriform",
    "rep", "pp-rep", "rb", "o-op", "dual-p-o", "strong",
    "invariant-form", "left-invariant", "gph",
    "lie-coalg", "pp-coalg", "lie-bialg", "pp-bialg",
    "matched-pair", "manin-triple", "cybe", "quasi", "op-form",
)

DERIVE_KINDS = (
    "sub-adjacent", "horizontal", "vertical", "transpose", "opposite",
    "induced", "semidirect", "semidirect-pp", "bowtie", "double", "manin",
    "pp-from-gph", "bullet-from-gph", "pre-pp-from-o", "invertible-o-pre-pp",
    "embed-r", "cobrackets-from-r", "dualize",
)


class UsageError(Exception):
    pass


def _verbosity() -> int:
    raw = os.environ.get("POSTLIE_VERBOSE", "5")
    try:
        return max(0, int(raw))
    except ValueError:
        return 5


def _load(path) -> Document:
    try:
        return load(path)
    except FileNotFoundError:
        raise UsageError("no such file: %s" % path)
    except DocumentError as exc:
        raise UsageError("%s: %s" % (path, exc))


def _algebra(path) -> Algebra:
    doc = _load(path)
    try:
        return doc.to_algebra()
    except DocumentError as exc:
        raise UsageError(str(exc))


def _matrix(path, kinds=("form", "map", "tensor2")):
    doc = _load(path)
    if doc.kind not in kinds:
        raise UsageError("%s: expected one of %s, found %s" % (path, "/".join(kinds), doc.kind))
    return doc.to_matrix()


def _coalgebra(path):
    doc = _load(path)
    try:
        return doc.to_coalgebra()
    except DocumentError as exc:
        raise UsageError(str(exc))


def _pp_rep(alg: Algebra, which: str):
    if which == "adjoint":
        return alg, forms.pp_adjoint_rep(alg)
    if which == "coadjoint":
        return alg, forms.pp_coadjoint_rep(alg)
    if which == "quarter":
        sub = alg_mod.sub_adjacent_pp(alg, checked=False)
        return sub, con.quarter_split_rep(alg)
    raise UsageError("unknown pp representation %r" % which)


def _post_lie_rep(alg: Algebra, which: str):
    if which == "adjoint":
        return alg, forms.adjoint_rep(alg)
    if which == "split-dual":
        horiz = alg_mod.horizontal_post_lie(alg, checked=False)
        return horiz, forms.pp_split_dual_rep(alg)
    raise UsageError("unknown post-Lie representation %r" % which)


def _report_exit(report: CheckReport) -> int:
    limit = _verbosity()
    print(report.render(limit if limit else 0))
    return 0 if report.passed else 1


def cmd_check(args) -> int:
    kind = args.kind
    files = args.files
    rep_name = args.rep

    def want(n):
        if len(files) != n:
            raise UsageError("check %s expects %d file(s), got %d" % (kind, n, len(files)))

    if kind == "lie":
        want(1)
        return _report_exit(alg_mod.check_lie(_algebra(files[0])))
    if kind == "pre-lie":
        want(1)
        a = _algebra(files[0])
        op = "dot" if a.has("dot") and not a.has("circ") else "circ"
        return _report_exit(alg_mod.check_pre_lie(a, op))
    if kind == "post-lie":
        want(1)
        return _report_exit(alg_mod.check_post_lie(_algebra(files[0])))
    if kind == "pp":
        want(1)
        return _report_exit(alg_mod.check_pp_post_lie(_algebra(files[0])))
    if kind == "pre-pp":
        want(1)
        return _report_exit(alg_mod.check_pre_pp_post_lie(_algebra(files[0])))
    if kind == "l-dendriform":
        want(1)
        return _report_exit(alg_mod.check_l_dendriform(_algebra(files[0])))
    if kind == "rep":
        want(1)
        base, rep = _post_lie_rep(_algebra(files[0]), rep_name or "adjoint")
        return _report_exit(forms.check_post_lie_rep(base, rep))
    if kind == "pp-rep":
        want(1)
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "adjoint")
        return _report_exit(forms.check_pp_rep(base, rep))
    if kind == "rb":
        want(2)
        weight = Scalar.parse(args.weight) if args.weight else ONE
        return _report_exit(forms.check_rota_baxter_lie(_algebra(files[0]),
                                                        _matrix(files[1]), weight))
    if kind == "o-op":
        want(2)
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "adjoint")
        return _report_exit(forms.check_o_operator_pp(base, rep, _matrix(files[1])))
    if kind == "dual-p-o":
        want(2)
        base, rep = _post_lie_rep(_algebra(files[0]), rep_name or "adjoint")
        return _report_exit(forms.check_dual_p_o_operator(base, rep, _matrix(files[1])))
    if kind == "strong":
        want(2)
        base, rep = _post_lie_rep(_algebra(files[0]), rep_name or "adjoint")
        return _report_exit(forms.check_strong(base, rep, _matrix(files[1])))
    if kind == "invariant-form":
        want(2)
        return _report_exit(forms.check_invariant_form(_algebra(files[0]), _matrix(files[1])))
    if kind == "left-invariant":
        want(2)
        return _report_exit(forms.check_left_invariant(_algebra(files[0]), _matrix(files[1])))
    if kind == "gph":
        want(2)
        return _report_exit(forms.check_gph(_algebra(files[0]), _matrix(files[1])))
    if kind == "lie-coalg":
        want(1)
        return _report_exit(bi.check_lie_coalgebra(_coalgebra(files[0])))
    if kind == "pp-coalg":
        want(1)
        co = _coalgebra(files[0])
        mode = args.mode or "dual"
        if mode == "both":
            dual = bi.check_pp_coalgebra(co, "dual")
            direct = bi.check_pp_coalgebra(co, "direct")
            print(dual.render(_verbosity()))
            print(direct.render(_verbosity()))
            if dual.passed != direct.passed:
                print("mode disagreement: dual=%s direct=%s" % (dual.passed, direct.passed))
                return 1
            return 0 if dual.passed else 1
        return _report_exit(bi.check_pp_coalgebra(co, mode))
    if kind == "lie-bialg":
        want(2)
        return _report_exit(bi.check_lie_bialgebra(_algebra(files[0]), _coalgebra(files[1])))
    if kind == "pp-bialg":
        want(2)
        return _report_exit(bi.check_pp_bialgebra(_algebra(files[0]), _coalgebra(files[1])))
    if kind == "matched-pair":
        want(2)
        a_pp = _algebra(files[0])
        b_pp = _algebra(files[1])
        maps = con.coadjoint_matched_pair_maps(a_pp, b_pp)
        ha = alg_mod.horizontal_post_lie(a_pp, checked=False)
        hb = alg_mod.horizontal_post_lie(b_pp, checked=False)
        return _report_exit(con.check_matched_pair(ha, hb, maps))
    if kind == "manin-triple":
        want(2)
        _, _, report = con.manin_triple_build(_algebra(files[0]), _algebra(files[1]))
        return _report_exit(report)
    if kind == "cybe":
        want(2)
        return _report_exit(bi.check_pppcybe(_algebra(files[0]), _matrix(files[1])))
    if kind == "quasi":
        want(2)
        return _report_exit(bi.check_quasitriangular_conditions(_algebra(files[0]),
                                                                _matrix(files[1])))
    if kind == "op-form":
        want(2)
        return _report_exit(bi.operator_form_check(_algebra(files[0]), _matrix(files[1])))
    raise UsageError("unknown check kind %r" % kind)


def _emit(doc: Document, out_path) -> int:
    text = dumps(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _emit_checked(out: Algebra, checker, out_path) -> int:
    """Re-validate a derived algebra before saving it."""
    report = checker(out)
    if not report.passed:
        print(report.render(_verbosity()))
        return 1
    return _emit(Document.from_algebra(out), out_path)


def cmd_derive(args) -> int:
    kind = args.kind
    files = args.files
    rep_name = args.rep

    def want(n):
        if len(files) != n:
            raise UsageError("derive %s expects %d file(s), got %d" % (kind, n, len(files)))

    if kind == "sub-adjacent":
        want(1)
        a = _algebra(files[0])
        if a.has("dot"):
            return _emit_checked(alg_mod.sub_adjacent_pp(a),
                                 alg_mod.check_pp_post_lie, args.output)
        return _emit_checked(alg_mod.sub_adjacent_lie(a), alg_mod.check_lie, args.output)
    if kind in ("horizontal", "vertical", "transpose"):
        want(1)
        fn, checker = {
            "horizontal": (alg_mod.horizontal_post_lie, alg_mod.check_post_lie),
            "vertical": (alg_mod.vertical_post_lie, alg_mod.check_post_lie),
            "transpose": (alg_mod.transpose_pp, alg_mod.check_pp_post_lie),
        }[kind]
        return _emit_checked(fn(_algebra(files[0])), checker, args.output)
    if kind == "opposite":
        want(1)
        return _emit_checked(alg_mod.opposite_post_lie(_algebra(files[0])),
                             alg_mod.check_post_lie, args.output)
    if kind == "induced":
        want(2)
        out = forms.induced_post_lie(_algebra(files[0]), _matrix(files[1]))
        return _emit_checked(out, alg_mod.check_post_lie, args.output)
    if kind == "semidirect":
        want(1)
        base, rep = _post_lie_rep(_algebra(files[0]), rep_name or "adjoint")
        return _emit_checked(con.semidirect_post_lie(base, rep),
                             alg_mod.check_post_lie, args.output)
    if kind == "semidirect-pp":
        want(1)
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "adjoint")
        return _emit_checked(con.semidirect_pp(base, rep),
                             alg_mod.check_pp_post_lie, args.output)
    if kind == "bowtie":
        want(2)
        a_pp, b_pp = _algebra(files[0]), _algebra(files[1])
        maps = con.coadjoint_matched_pair_maps(a_pp, b_pp)
        ha = alg_mod.horizontal_post_lie(a_pp, checked=False)
        hb = alg_mod.horizontal_post_lie(b_pp, checked=False)
        return _emit_checked(con.bowtie(ha, hb, maps),
                             alg_mod.check_post_lie, args.output)
    if kind == "double":
        want(1)
        double, form = con.double_construction(_algebra(files[0]))
        report = forms.check_gph(double, form, checked=False)
        if not report.passed:
            print(report.render(_verbosity()))
            return 1
        doc = Document.bundle({
            "double": Document.from_algebra(double),
            "pairing": Document.from_matrix("form", form, basis=double.basis),
        })
        return _emit(doc, args.output)
    if kind == "manin":
        want(2)
        double, form, report = con.manin_triple_build(_algebra(files[0]), _algebra(files[1]))
        if not report.passed:
            print(report.render(_verbosity()))
            return 1
        doc = Document.bundle({
            "double": Document.from_algebra(double),
            "pairing": Document.from_matrix("form", form, basis=double.basis),
        })
        return _emit(doc, args.output)
    if kind == "pp-from-gph":
        want(2)
        out = con.compatible_pp_from_gph(_algebra(files[0]), _matrix(files[1]))
        return _emit_checked(out, alg_mod.check_pp_post_lie, args.output)
    if kind == "bullet-from-gph":
        want(2)
        out = con.bullet_from_gph(_algebra(files[0]), _matrix(files[1]))
        return _emit_checked(out, alg_mod.check_post_lie, args.output)
    if kind == "pre-pp-from-o":
        want(2)
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "adjoint")
        out = con.pre_pp_from_o_operator(base, rep, _matrix(files[1]))
        return _emit_checked(out, alg_mod.check_pre_pp_post_lie, args.output)
    if kind == "invertible-o-pre-pp":
        want(2)
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "adjoint")
        out = con.invertible_o_to_compatible_pre_pp(base, rep, _matrix(files[1]))
        return _emit_checked(out, alg_mod.check_pre_pp_post_lie, args.output)
    if kind == "embed-r":
        if len(files) not in (1, 2):
            raise UsageError("derive embed-r expects 1 or 2 files")
        base, rep = _pp_rep(_algebra(files[0]), rep_name or "quarter")
        t = _matrix(files[1]) if len(files) == 2 else None
        if t is None:
            from .linalg import Matrix
            t = Matrix.identity(rep.dim)
        ahat, r = con.hom_embed_r(base, rep, t)
        report = alg_mod.check_pp_post_lie(ahat)
        if not report.passed:
            print(report.render(_verbosity()))
            return 1
        doc = Document.bundle({
            "double": Document.from_algebra(ahat),
            "r": Document.from_matrix("tensor2", r, basis=ahat.basis),
        })
        return _emit(doc, args.output)
    if kind == "cobrackets-from-r":
        want(2)
        a = _algebra(files[0])
        co = bi.cobrackets_from_r(a, _matrix(files[1]))
        report = bi.check_pp_coalgebra(co)
        if not report.passed:
            print(report.render(_verbosity()))
            return 1
        return _emit(Document.from_coalgebra(co), args.output)
    if kind == "dualize":
        want(1)
        doc = _load(files[0])
        if doc.kind == "algebra":
            a = doc.to_algebra()
            ops = tuple(op for op in ("rtri", "ltri", "bracket") if a.has(op))
            return _emit(Document.from_coalgebra(bi.dualize_alg(a, ops)), args.output)
        if doc.kind == "coalgebra":
            return _emit(Document.from_algebra(bi.dualize(doc.to_coalgebra())), args.output)
        raise UsageError("dualize expects an algebra or a coalgebra")
    raise UsageError("unknown construction %r" % kind)


def cmd_corpus(args) -> int:
    if args.action == "list":
        for name in CORPUS_NAMES:
            print(name)
        return 0
    if args.action == "show":
        if not args.name:
            raise UsageError("corpus show needs a fixture name")
        sys.stdout.write(corpus_text(args.name))
        return 0
    if args.action == "write":
        if not args.name:
            raise UsageError("corpus write needs a directory")
        for path in write_corpus(args.name):
            print(path)
        return 0
    if args.action == "verify":
        results = run_acceptance(corpus_dir=args.dir)
        failed = [r for r in results if not r.passed]
        for r in results:
            print(r.line())
        if failed:
            print("first failing criterion: %s" % failed[0].name)
            return 1
        return 0
    raise UsageError("unknown corpus action %r" % args.action)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="postlie",
        description="Exact checks and constructions for post-Lie algebras, "
                    "their splittings, doubles and bialgebras.")
    subs = parser.add_subparsers(dest="command")

    p_check = subs.add_parser("check", help="run an axiom or compatibility checker")
    p_check.add_argument("kind", choices=CHECK_KINDS)
    p_check.add_argument("files", nargs="*")
    p_check.add_argument("--rep", help="representation to build from the algebra "
                                       "(adjoint, coadjoint, split-dual, quarter)")
    p_check.add_argument("--weight", help="Rota-Baxter weight (default 1)")
    p_check.add_argument("--mode", help="pp-coalg mode: dual, direct or both")
    p_check.set_defaults(fn=cmd_check)

    p_derive = subs.add_parser("derive", help="run a construction and emit a document")
    p_derive.add_argument("kind", choices=DERIVE_KINDS)
    p_derive.add_argument("files", nargs="*")
    p_derive.add_argument("-o", "--output", help="write the document here instead of stdout")
    p_derive.add_argument("--rep", help="representation to build from the algebra")
    p_derive.set_defaults(fn=cmd_derive)

    p_corpus = subs.add_parser("corpus", help="work with the bundled fixtures")
    p_corpus.add_argument("action", choices=("verify", "list", "write", "show"))
    p_corpus.add_argument("name", nargs="?", help="fixture name or output directory")
    p_corpus.add_argument("--dir", help="verify fixtures from this directory instead")
    p_corpus.set_defaults(fn=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "fn", None):
        parser.print_help()
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (DocumentError, ScalarParseError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        if exc.report is not None:
            print(exc.report.render(_verbosity()), file=sys.stderr)
        return 1
    except (UnknownOperationError, LinAlgError, KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
