"""The bundled-corpus acceptance pipeline.

Each criterion (A1 .. A7) re-derives part of the corpus from first
principles and compares bit-exactly, or checks an axiom system or an
equivalence of checkers.  Everything is exact; a criterion either passes
or carries a precise witness message.

Criterion A3 contains one assertion that is recorded as failing by
design: the splitting derived from the Killing form is provably not the
bundled sl2_pp table.  They differ in four entries, both tables satisfy
all the splitting axioms, and every invariant bilinear form on this
simple algebra is a scalar multiple of the Killing form while the
construction is scale-invariant, so no choice of form reproduces the
bundled table.  The comparison is still performed and reported honestly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import (
    Algebra,
    check_lie,
    check_post_lie,
    check_pp_post_lie,
    check_pre_pp_post_lie,
    horizontal_post_lie,
    sub_adjacent_lie,
    sub_adjacent_pp,
    transpose_pp,
    vertical_post_lie,
)
from .bialgebra import (
    check_pp_bialgebra,
    check_pppcybe,
    cobrackets_from_r,
    cybe_C,
    cybe_D,
    dualize,
    dualize_alg,
    operator_form_check,
    t3_is_zero,
)
from .construct import (
    check_matched_pair,
    coadjoint_matched_pair_maps,
    compatible_pp_from_gph,
    double_construction,
    hom_embed_r,
    manin_triple_build,
    quarter_split_rep,
    semidirect_pp,
)
from .corpus import corpus_dir_doc, corpus_doc
from .forms import (
    check_gph,
    check_left_invariant,
    check_o_operator_pp,
    check_pp_rep,
    check_rota_baxter_lie,
    dual_pp_rep,
    induced_post_lie,
    pp_adjoint_rep,
)
from .linalg import Matrix
from .scalars import ONE, Scalar, sc

__all__ = ["CriterionResult", "run_acceptance", "CRITERIA"]


@dataclass
class CriterionResult:
    name: str
    passed: bool
    details: list = field(default_factory=list)

    def line(self) -> str:
        head = "%s: %s" % (self.name, "PASS" if self.passed else "FAIL")
        if self.details:
            return head + "\n" + "\n".join("    " + d for d in self.details)
        return head


class _Fixtures:
    def __init__(self, directory=None):
        self.directory = directory
        self._cache = {}

    def doc(self, name):
        if name not in self._cache:
            if self.directory is None:
                self._cache[name] = corpus_doc(name)
            else:
                self._cache[name] = corpus_dir_doc(self.directory, name)
        return self._cache[name]

    def algebra(self, name) -> Algebra:
        return self.doc(name).to_algebra()

    def matrix(self, name) -> Matrix:
        return self.doc(name).to_matrix()

    def coalgebra(self, name):
        return self.doc(name).to_coalgebra()


def _crit(name):
    def wrap(fn):
        fn.criterion = name
        return fn
    return wrap


@_crit("A1")
def _a1(fx: _Fixtures) -> CriterionResult:
    details = []
    lie = fx.algebra("sl2_lie")
    P = fx.matrix("sl2_P")
    rb = check_rota_baxter_lie(lie, P, ONE)
    if not rb.passed:
        details.append("weight-one Rota-Baxter identity fails: " + rb.render(3))
    induced = induced_post_lie(lie, P) if rb.passed else None
    if induced is not None:
        expected = fx.algebra("sl2_postlie")
        if induced.table("circ") != expected.table("circ"):
            details.append("induced circ table differs from sl2_postlie")
        if induced.table("bracket") != expected.table("bracket"):
            details.append("bracket not preserved")
    return CriterionResult("A1", not details, details)


@_crit("A2")
def _a2(fx) -> CriterionResult:
    details = []
    alg = fx.algebra("sl2_postlie")
    kappa = fx.matrix("kappa")
    gph = check_gph(alg, kappa)
    if not gph.passed:
        details.append("Killing form fails the invariance conditions: " + gph.render(3))
    li = check_left_invariant(alg, kappa, checked=False)
    if not li.passed:
        details.append("Killing form fails left-invariance: " + li.render(3))
    return CriterionResult("A2", not details, details)


@_crit("A3")
def _a3(fx) -> CriterionResult:
    details = []
    alg = fx.algebra("sl2_postlie")
    kappa = fx.matrix("kappa")
    derived = compatible_pp_from_gph(alg, kappa, checked=False)
    expected = fx.algebra("sl2_pp")
    same_rt = derived.table("rtri") == expected.table("rtri")
    same_lt = derived.table("ltri") == expected.table("ltri")
    if not (same_rt and same_lt):
        diffs = _table_diff_count(derived, expected, ("rtri", "ltri"))
        details.append(
            "derived splitting differs from sl2_pp in %d entries; both tables "
            "satisfy the splitting axioms with the same horizontal and vertical "
            "products, and the form-derived one is unique up to scaling of the "
            "form, so the bundled table cannot arise from this construction" % diffs
        )
    pp = check_pp_post_lie(derived)
    if not pp.passed:
        details.append("derived splitting fails the pp axioms: " + pp.render(3))
    horiz = horizontal_post_lie(derived, checked=False)
    vert = vertical_post_lie(derived, checked=False)
    if horiz.table("circ") != alg.table("circ"):
        details.append("horizontal product of the derived splitting is not circ")
    if vert.table("circ") != alg.table("circ"):
        details.append("vertical product of the derived splitting is not circ")
    return CriterionResult("A3", not details, details)


def _table_diff_count(a: Algebra, b: Algebra, ops) -> int:
    n = a.dim
    count = 0
    for op in ops:
        ta, tb = a.table(op), b.table(op)
        for i in range(n):
            for j in range(n):
                if ta[i][j] != tb[i][j]:
                    count += 1
    return count


@_crit("A4")
def _a4(fx) -> CriterionResult:
    details = []
    pp = fx.algebra("sl2_pp")
    double, form = double_construction(pp, checked=False)
    if double.dim != 2 * pp.dim:
        details.append("double has wrong dimension")
    rep = check_gph(double, form)
    if not rep.passed:
        details.append("double fails the invariant-form conditions: " + rep.render(3))
    return CriterionResult("A4", not details, details)


@_crit("A5")
def _a5(fx) -> CriterionResult:
    details = []
    prepp = fx.algebra("final_prepp")
    rep = check_pre_pp_post_lie(prepp)
    if not rep.passed:
        details.append("final_prepp fails the quarter-split axioms: " + rep.render(3))
        return CriterionResult("A5", False, details)
    sub = sub_adjacent_pp(prepp, checked=False)
    ahat_expected = fx.algebra("ahat_pp")
    for op in ("rtri", "ltri", "bracket"):
        block = _upper_block(ahat_expected.table(op), prepp.dim)
        if sub.table(op) != block:
            details.append("sub-adjacent %s table differs from the bundled double" % op)
    qrep = quarter_split_rep(prepp)
    ahat = semidirect_pp(sub, dual_pp_rep(sub, qrep, checked=False), checked=False)
    for op in ("rtri", "ltri", "bracket"):
        if ahat.table(op) != ahat_expected.table(op):
            details.append("constructed double differs from ahat_pp in %s" % op)
    r = fx.matrix("r6")
    if not r.is_antisymmetric():
        details.append("bundled tensor is not antisymmetric")
    if not t3_is_zero(cybe_C(ahat_expected, r)):
        details.append("C(r) != 0")
    if not t3_is_zero(cybe_D(ahat_expected, r)):
        details.append("D(r) != 0")
    co = cobrackets_from_r(ahat_expected, r)
    co_expected = fx.coalgebra("final_cobrackets")
    for name in ("delta_rtri", "delta_ltri", "Delta"):
        if co.table(name) != co_expected.table(name):
            details.append("computed %s differs from final_cobrackets" % name)
    bial = check_pp_bialgebra(ahat_expected, co)
    if not bial.passed:
        details.append("bialgebra compatibility fails: " + bial.render(3))
    return CriterionResult("A5", not details, details)


def _upper_block(table, n):
    return [[[table[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]


def _random_scalar(rng) -> Scalar:
    num = rng.randint(-2, 2)
    den = rng.choice((1, 2))
    imn = rng.randint(-1, 1)
    return sc(num, 0) / sc(den) + sc(0, imn)


def _random_antisymmetric(rng, n) -> Matrix:
    m = Matrix.zero(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            v = _random_scalar(rng)
            m[i, j] = v
            m[j, i] = -v
    return m


@_crit("A6")
def _a6(fx) -> CriterionResult:
    details = []
    rng = random.Random(20250808)
    pp3 = fx.algebra("sl2_pp")
    ahat = fx.algebra("ahat_pp")
    r6 = fx.matrix("r6")

    # (i) tensor form vs operator form, bundled tensor plus random ones
    cases = [(ahat, r6), (ahat, Matrix.zero(6, 6))]
    for _ in range(35):
        cases.append((pp3, _random_antisymmetric(rng, 3)))
    for _ in range(15):
        cases.append((ahat, _random_antisymmetric(rng, 6)))
    mismatches = 0
    passes = 0
    for alg, r in cases:
        tensor = check_pppcybe(alg, r).passed
        operator = operator_form_check(alg, r).passed
        if tensor != operator:
            mismatches += 1
        if tensor:
            passes += 1
    if mismatches:
        details.append("tensor/operator verdicts disagree on %d of %d tensors"
                       % (mismatches, len(cases)))
    if passes == 0:
        details.append("no solution among the tested tensors (expected the bundled one)")

    # (ii) Manin triple / matched pair / bialgebra agreement on the corpus double
    co = fx.coalgebra("final_cobrackets")
    dual_pp = dualize(co)
    verdicts = _triple_verdicts(ahat, dual_pp, co)
    if len(set(verdicts)) != 1 or not verdicts[0]:
        details.append("corpus instance: manin/matched-pair/bialgebra = %s" % (verdicts,))
    broken_co = _flip_comap_sign(fx.coalgebra("final_cobrackets"), "Delta")
    verdicts = _triple_verdicts(ahat, dualize(broken_co), broken_co)
    if len(set(verdicts)) != 1 or verdicts[0]:
        details.append("perturbed instance: manin/matched-pair/bialgebra = %s" % (verdicts,))

    # (iii) embedded-tensor verdict vs operator verdict, valid and mutated maps
    prepp = fx.algebra("final_prepp")
    sub = sub_adjacent_pp(prepp, checked=False)
    qrep = quarter_split_rep(prepp)
    maps = [Matrix.identity(3), fx.matrix("final_P")]
    for _ in range(10):
        t = Matrix.identity(3)
        t[rng.randrange(3), rng.randrange(3)] = _random_scalar(rng) + sc(3)
        maps.append(t)
    agree = True
    any_fail = False
    for t in maps:
        ok_op = check_o_operator_pp(sub, qrep, t, checked=False).passed
        ahat_t, r_t = hom_embed_r(sub, qrep, t, checked=False)
        ok_tensor = check_pppcybe(ahat_t, r_t).passed
        if ok_op != ok_tensor:
            agree = False
        if not ok_op:
            any_fail = True
    if not agree:
        details.append("embedded-tensor and operator verdicts disagree")
    if not any_fail:
        details.append("mutation set produced no failing operator (test too weak)")
    return CriterionResult("A6", not details, details)


def _triple_verdicts(a_pp: Algebra, astar_pp: Algebra, co):
    _, _, manin = manin_triple_build(a_pp, astar_pp, checked=False)
    ok_manin = manin.passed
    ha = horizontal_post_lie(a_pp, checked=False)
    hb = horizontal_post_lie(astar_pp, checked=False)
    maps = coadjoint_matched_pair_maps(a_pp, astar_pp)
    try:
        ok_matched = check_matched_pair(ha, hb, maps, checked=True).passed
    except Exception:
        ok_matched = False
    ok_bialg = check_pp_bialgebra(a_pp, co).passed
    return (ok_manin, ok_matched, ok_bialg)


def _flip_comap_sign(co, name):
    table = co.table(name)
    flipped = [[[-e for e in row] for row in plane] for plane in table]
    comaps = dict(co.comaps)
    comaps[name] = flipped
    return type(co)(co.dim, co.field, co.basis, comaps)


@_crit("A7")
def _a7(fx) -> CriterionResult:
    details = []
    postlies = {
        "sl2_postlie": fx.algebra("sl2_postlie"),
        "horizontal(sl2_pp)": horizontal_post_lie(fx.algebra("sl2_pp"), checked=False),
        "double(sl2_pp)": double_construction(fx.algebra("sl2_pp"), checked=False)[0],
    }
    for name, alg in postlies.items():
        sub = sub_adjacent_lie(alg)
        if not check_lie(sub).passed:
            details.append("sub-adjacent bracket of %s fails the Jacobi identity" % name)
    pps = {
        "sl2_pp": fx.algebra("sl2_pp"),
        "ahat_pp": fx.algebra("ahat_pp"),
        "sub_adjacent_pp(final_prepp)": sub_adjacent_pp(fx.algebra("final_prepp"),
                                                        checked=False),
    }
    for name, alg in pps.items():
        horiz = horizontal_post_lie(alg, checked=False)
        vert = vertical_post_lie(alg, checked=False)
        if not check_post_lie(horiz).passed:
            details.append("horizontal of %s is not post-Lie" % name)
        if not check_post_lie(vert).passed:
            details.append("vertical of %s is not post-Lie" % name)
        tw = transpose_pp(alg, checked=False)
        if transpose_pp(tw, checked=False).ops != alg.ops:
            details.append("transpose of %s is not an involution" % name)
        if horizontal_post_lie(tw, checked=False).table("circ") != vert.table("circ"):
            details.append("transpose of %s does not swap horizontal and vertical" % name)
        if vertical_post_lie(tw, checked=False).table("circ") != horiz.table("circ"):
            details.append("transpose of %s does not swap vertical and horizontal" % name)
        co = dualize_alg(alg)
        if dualize(co).ops != alg.ops:
            details.append("dualize roundtrip fails on %s" % name)
        rep = dual_pp_rep(alg, pp_adjoint_rep(alg), checked=False)
        if not check_pp_rep(alg, rep, checked=False).passed:
            details.append("dual of the adjoint representation of %s fails" % name)
    # mutation fixtures must fail with witnesses
    broken = fx.algebra("sl2_pp_broken")
    rep = check_pp_post_lie(broken)
    if rep.passed or not rep.violations:
        details.append("sl2_pp_broken unexpectedly passes (no witness)")
    mutated_prepp = fx.algebra("final_prepp").with_op(
        "se", _bump_entry(fx.algebra("final_prepp").table("se")))
    rep = check_pre_pp_post_lie(mutated_prepp)
    if rep.passed or not rep.violations:
        details.append("mutated quarter-split unexpectedly passes (no witness)")
    r_bad = fx.matrix("r6")
    r_bad[0, 3] = r_bad[0, 3] + ONE
    rep = check_pppcybe(fx.algebra("ahat_pp"), r_bad)
    if rep.passed or not rep.violations:
        details.append("perturbed tensor unexpectedly solves the equation")
    return CriterionResult("A7", not details, details)


def _bump_entry(table):
    out = [[list(row) for row in plane] for plane in table]
    out[0][1][1] = out[0][1][1] + ONE
    return out


CRITERIA = (_a1, _a2, _a3, _a4, _a5, _a6, _a7)


def run_acceptance(corpus_dir=None, names=None):
    """Run the acceptance criteria; returns a list of CriterionResult."""
    fx = _Fixtures(corpus_dir)
    results = []
    for fn in CRITERIA:
        if names and fn.criterion not in names:
            continue
        try:
            results.append(fn(fx))
        except Exception as exc:  # surfaced as a failing criterion, never a crash
            results.append(CriterionResult(fn.criterion, False,
                                           ["raised %s: %s" % (type(exc).__name__, exc)]))
    return results
