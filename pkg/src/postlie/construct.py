"""Product and double constructions.

Doubled spaces always order the basis as e_1..e_n of A followed by the
dual basis e_1*..e_n* of A*, so the canonical pairing form is the
antidiagonal block matrix [[0, I], [I, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    CheckReport,
    MAX_VIOLATIONS,
    PreconditionError,
    Violation,
    check_lie,
    check_post_lie,
    check_pp_post_lie,
    horizontal_post_lie,
    t3_zero,
)
from .forms import (
    PPRepSpec,
    RepSpec,
    check_gph,
    check_o_operator_pp,
    check_post_lie_rep,
    check_pp_rep,
    dual_pp_rep,
    form_value,
    pp_split_dual_rep,
)
from .linalg import Matrix, SingularMatrixError, basis_vec, vadd, vneg, vsub
from .scalars import ONE

__all__ = [
    "semidirect_post_lie",
    "semidirect_pp",
    "MatchedPairMaps",
    "coadjoint_matched_pair_maps",
    "check_matched_pair",
    "bowtie",
    "pairing_form",
    "double_construction",
    "manin_triple_build",
    "compatible_pp_from_gph",
    "bullet_from_gph",
    "pre_pp_from_o_operator",
    "invertible_o_to_compatible_pre_pp",
    "quarter_split_rep",
    "hom_embed_r",
]


def _split(vec, n):
    return vec[:n], vec[n:]


def _join(a, v):
    return tuple(a) + tuple(v)


def semidirect_post_lie(alg: Algebra, rep: RepSpec, checked=True) -> Algebra:
    """Post-Lie structure on A + V with V an abelian ideal acted on by (l, r, rho)."""
    if checked:
        base = check_post_lie_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a post-Lie representation", base)
    n, m = alg.dim, rep.dim
    out = Algebra(n + m, alg.field,
                  tuple(alg.basis) + tuple("v%d" % (i + 1) for i in range(m)))

    def circ(xs, ys):
        x, u = _split(xs, n)
        y, v = _split(ys, n)
        return _join(alg.mul("circ", x, y),
                     vadd(rep.act("l", x).apply(v), rep.act("r", y).apply(u)))

    def bracket(xs, ys):
        x, u = _split(xs, n)
        y, v = _split(ys, n)
        return _join(alg.mul("bracket", x, y),
                     vsub(rep.act("rho", x).apply(v), rep.act("rho", y).apply(u)))

    out = out.op_table_from("circ", circ)
    return out.op_table_from("bracket", bracket)


def semidirect_pp(alg: Algebra, rep: PPRepSpec, checked=True) -> Algebra:
    """pp-post-Lie structure on A + V from a pp representation."""
    if checked:
        base = check_pp_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a pp representation", base)
    n, m = alg.dim, rep.dim
    out = Algebra(n + m, alg.field,
                  tuple(alg.basis) + tuple("v%d" % (i + 1) for i in range(m)))

    def make(op, l_name, r_name):
        def mul(xs, ys):
            x, u = _split(xs, n)
            y, v = _split(ys, n)
            return _join(alg.mul(op, x, y),
                         vadd(rep.act(l_name, x).apply(v), rep.act(r_name, y).apply(u)))
        return mul

    out = out.op_table_from("rtri", make("rtri", "l_rt", "r_rt"))
    out = out.op_table_from("ltri", make("ltri", "l_lt", "r_lt"))

    def bracket(xs, ys):
        x, u = _split(xs, n)
        y, v = _split(ys, n)
        return _join(alg.mul("bracket", x, y),
                     vsub(rep.act("rho", x).apply(v), rep.act("rho", y).apply(u)))

    return out.op_table_from("bracket", bracket)


# ---------------------------------------------------------------------------
# matched pairs
# ---------------------------------------------------------------------------

@dataclass
class MatchedPairMaps:
    """Mutual actions: *_a maps live on B's carrier indexed by A's basis, and
    vice versa."""

    l_a: list
    r_a: list
    rho_a: list
    l_b: list
    r_b: list
    rho_b: list

    def rep_on_b(self, dim_b: int) -> RepSpec:
        return RepSpec(dim_b, self.l_a, self.r_a, self.rho_a)

    def rep_on_a(self, dim_a: int) -> RepSpec:
        return RepSpec(dim_a, self.l_b, self.r_b, self.rho_b)


def _act(mats, x, v):
    out = None
    for i, xi in enumerate(x):
        term = mats[i].apply(v)
        term = tuple(xi * t for t in term)
        out = term if out is None else vadd(out, term)
    if out is None:
        return tuple()
    return out


def coadjoint_matched_pair_maps(a_pp: Algebra, b_pp: Algebra) -> MatchedPairMaps:
    """The canonical dual-space actions (L_rt* - R_lt*, -R_lt*, ad*) on both
    sides, for B carrying the structure dual to A*'s pp algebra."""
    def side(alg):
        n = alg.dim
        e = [basis_vec(n, i) for i in range(n)]
        l, r, rho = [], [], []
        for x in e:
            lrt = alg.left_mult("rtri", x).dual()
            rlt = alg.right_mult("ltri", x).dual()
            l.append(lrt - rlt)
            r.append(-rlt)
            rho.append(alg.left_mult("bracket", x).dual())
        return l, r, rho

    l_a, r_a, rho_a = side(a_pp)
    l_b, r_b, rho_b = side(b_pp)
    return MatchedPairMaps(l_a, r_a, rho_a, l_b, r_b, rho_b)


def check_matched_pair(a: Algebra, b: Algebra, maps: MatchedPairMaps,
                       checked=True) -> CheckReport:
    """Representation conditions plus the ten mixed compatibility equations."""
    if checked:
        for alg in (a, b):
            base = check_post_lie(alg)
            if not base.passed:
                raise PreconditionError("not a post-Lie algebra", base)
    na, nb = a.dim, b.dim
    ea = [basis_vec(na, i) for i in range(na)]
    eb = [basis_vec(nb, i) for i in range(nb)]
    violations = []
    count = 0

    rep_b = maps.rep_on_b(nb)
    rep_a = maps.rep_on_a(na)
    for tag, alg, rep in (("mp.rep-a", a, rep_b), ("mp.rep-b", b, rep_a)):
        sub = check_post_lie_rep(alg, rep, checked=False)
        count += sub.checked
        for v in sub.violations:
            violations.append(Violation("%s.%s" % (tag, v.identity), v.indices, v.lhs, v.rhs))

    la = lambda x, v: rep_b.act("l", x).apply(v)
    ra = lambda x, v: rep_b.act("r", x).apply(v)
    pa = lambda x, v: rep_b.act("rho", x).apply(v)
    lb = lambda u, v: rep_a.act("l", u).apply(v)
    rb = lambda u, v: rep_a.act("r", u).apply(v)
    pb = lambda u, v: rep_a.act("rho", u).apply(v)
    bra = lambda x, y: a.mul("bracket", x, y)
    brb = lambda u, v: b.mul("bracket", u, v)
    ca = lambda x, y: a.mul("circ", x, y)
    cb = lambda u, v: b.mul("circ", u, v)
    curly_a = lambda x, y: vadd(ca(x, y), vneg(ca(y, x)), bra(x, y))
    curly_b = lambda u, v: vadd(cb(u, v), vneg(cb(v, u)), brb(u, v))

    def record(ident, idx, lhs, rhs):
        nonlocal count
        count += 1
        if lhs != rhs:
            violations.append(Violation(ident, idx, lhs, rhs))

    # one A slot, two B slots
    for i in range(na):
        x = ea[i]
        for j in range(nb):
            for k in range(nb):
                u, v = eb[j], eb[k]
                record("mp.01", (i, j, k), pa(x, brb(u, v)),
                       vadd(brb(pa(x, u), v), brb(u, pa(x, v)),
                            pa(pb(v, x), u), vneg(pa(pb(u, x), v))))
                record("mp.02", (i, j, k), pa(x, cb(u, v)),
                       vadd(cb(u, pa(x, v)), brb(v, ra(x, u)),
                            vneg(pa(lb(u, x), v)), vneg(ra(pb(v, x), u))))
                record("mp.05", (i, j, k), la(x, brb(u, v)),
                       vadd(brb(la(x, u), v), brb(u, la(x, v)),
                            pa(rb(u, x), v), vneg(pa(rb(v, x), u))))
                record("mp.06", (i, j, k), la(x, cb(u, v)),
                       vadd(cb(la(x, u), v), cb(u, la(x, v)),
                            vneg(cb(ra(x, u), v)), cb(pa(x, u), v),
                            ra(rb(v, x), u), vneg(la(lb(u, x), v)),
                            la(rb(u, x), v), vneg(la(pb(u, x), v))))
                record("mp.09", (i, j, k), ra(x, curly_b(u, v)),
                       vadd(cb(u, ra(x, v)), vneg(cb(v, ra(x, u))),
                            ra(lb(v, x), u), vneg(ra(lb(u, x), v))))

    # one B slot, two A slots
    for i in range(nb):
        u = eb[i]
        for j in range(na):
            for k in range(na):
                x, y = ea[j], ea[k]
                record("mp.03", (i, j, k), pb(u, bra(x, y)),
                       vadd(bra(pb(u, x), y), bra(x, pb(u, y)),
                            pb(pa(y, u), x), vneg(pb(pa(x, u), y))))
                record("mp.04", (i, j, k), pb(u, ca(x, y)),
                       vadd(ca(x, pb(u, y)), bra(y, rb(u, x)),
                            vneg(pb(la(x, u), y)), vneg(rb(pa(y, u), x))))
                record("mp.07", (i, j, k), lb(u, bra(x, y)),
                       vadd(bra(lb(u, x), y), bra(x, lb(u, y)),
                            pb(ra(x, u), y), vneg(pb(ra(y, u), x))))
                record("mp.08", (i, j, k), lb(u, ca(x, y)),
                       vadd(ca(lb(u, x), y), ca(x, lb(u, y)),
                            vneg(ca(rb(u, x), y)), ca(pb(u, x), y),
                            rb(ra(y, u), x), vneg(lb(la(x, u), y)),
                            lb(ra(x, u), y), vneg(lb(pa(x, u), y))))
                record("mp.10", (i, j, k), rb(u, curly_a(x, y)),
                       vadd(ca(x, rb(u, y)), vneg(ca(y, rb(u, x))),
                            rb(la(y, u), x), vneg(rb(la(x, u), y))))

    violations.sort(key=lambda v: (v.identity, v.indices))
    return CheckReport(not violations, violations[:MAX_VIOLATIONS], count, "matched-pair")


def bowtie(a: Algebra, b: Algebra, maps: MatchedPairMaps, checked=True) -> Algebra:
    """Post-Lie structure on A + B defined by the mutual actions."""
    if checked:
        base = check_matched_pair(a, b, maps)
        if not base.passed:
            raise PreconditionError("not a matched pair", base)
    na, nb = a.dim, b.dim
    rep_b = maps.rep_on_b(nb)
    rep_a = maps.rep_on_a(na)
    out = Algebra(na + nb, a.field, tuple(a.basis) + tuple(b.basis))

    def circ(xs, ys):
        x, u = _split(xs, na)
        y, v = _split(ys, na)
        apart = vadd(a.mul("circ", x, y), rep_a.act("l", u).apply(y), rep_a.act("r", v).apply(x))
        bpart = vadd(b.mul("circ", u, v), rep_b.act("l", x).apply(v), rep_b.act("r", y).apply(u))
        return _join(apart, bpart)

    def bracket(xs, ys):
        x, u = _split(xs, na)
        y, v = _split(ys, na)
        apart = vadd(a.mul("bracket", x, y),
                     rep_a.act("rho", u).apply(y), vneg(rep_a.act("rho", v).apply(x)))
        bpart = vadd(b.mul("bracket", u, v),
                     rep_b.act("rho", x).apply(v), vneg(rep_b.act("rho", y).apply(u)))
        return _join(apart, bpart)

    out = out.op_table_from("circ", circ)
    return out.op_table_from("bracket", bracket)


# ---------------------------------------------------------------------------
# doubles and Manin triples
# ---------------------------------------------------------------------------

def pairing_form(n: int) -> Matrix:
    """B_d(x + a*, y + b*) = <x, b*> + <y, a*> on A + A*."""
    out = Matrix.zero(2 * n, 2 * n)
    for i in range(n):
        out[i, n + i] = ONE
        out[n + i, i] = ONE
    return out


def double_construction(alg: Algebra, checked=True):
    """Semidirect double A + A* along the dual-split representation.

    Returns the 2n-dimensional post-Lie algebra and the canonical pairing
    form, which together form a generalized pseudo-Hessian post-Lie algebra.
    """
    if checked:
        base = check_pp_post_lie(alg)
        if not base.passed:
            raise PreconditionError("not a pp-post-Lie algebra", base)
    horiz = horizontal_post_lie(alg, checked=False)
    rep = pp_split_dual_rep(alg)
    double = semidirect_post_lie(horiz, rep, checked=False)
    double.basis = tuple(alg.basis) + tuple(name + "*" for name in alg.basis)
    return double, pairing_form(alg.dim)


def manin_triple_build(a_pp: Algebra, astar_pp: Algebra, checked=True):
    """Candidate standard Manin triple on A + A* from pp structures on both parts.

    Returns (double, pairing, report); the report validates rather than
    assumes that the double is post-Lie, the pairing is invariant, and the
    two halves embed as subalgebras.
    """
    if a_pp.dim != astar_pp.dim:
        raise ValueError("dimension mismatch between the two halves")
    if checked:
        for alg in (a_pp, astar_pp):
            base = check_pp_post_lie(alg)
            if not base.passed:
                raise PreconditionError("not a pp-post-Lie algebra", base)
    n = a_pp.dim
    ha = horizontal_post_lie(a_pp, checked=False)
    hb = horizontal_post_lie(astar_pp, checked=False)
    maps = coadjoint_matched_pair_maps(a_pp, astar_pp)
    rep_b = maps.rep_on_b(n)   # A acting on A*
    rep_a = maps.rep_on_a(n)   # A* acting on A
    out = Algebra(2 * n, a_pp.field,
                  tuple(a_pp.basis) + tuple(name + "*" for name in a_pp.basis))

    def circ(xs, ys):
        x, u = _split(xs, n)
        y, v = _split(ys, n)
        apart = vadd(ha.mul("circ", x, y), rep_a.act("l", u).apply(y), rep_a.act("r", v).apply(x))
        bpart = vadd(hb.mul("circ", u, v), rep_b.act("l", x).apply(v), rep_b.act("r", y).apply(u))
        return _join(apart, bpart)

    def bracket(xs, ys):
        x, u = _split(xs, n)
        y, v = _split(ys, n)
        apart = vadd(ha.mul("bracket", x, y),
                     rep_a.act("rho", u).apply(y), vneg(rep_a.act("rho", v).apply(x)))
        bpart = vadd(hb.mul("bracket", u, v),
                     rep_b.act("rho", x).apply(v), vneg(rep_b.act("rho", y).apply(u)))
        return _join(apart, bpart)

    out = out.op_table_from("circ", circ)
    out = out.op_table_from("bracket", bracket)
    form = pairing_form(n)

    violations = []
    count = 0
    lie = check_lie(out)
    sub = check_post_lie(out) if lie.passed else lie
    count += sub.checked
    for v in sub.violations:
        violations.append(Violation("manin.post-lie.%s" % v.identity, v.indices, v.lhs, v.rhs))
    if not violations:
        gph = check_gph(out, form, checked=False)
        count += gph.checked
        for v in gph.violations:
            violations.append(Violation("manin.gph.%s" % v.identity, v.indices, v.lhs, v.rhs))
    # closure of the two halves (true by construction; validated anyway)
    for i in range(n):
        for j in range(n):
            for op in ("circ", "bracket"):
                count += 2
                prod = out.mul(op, basis_vec(2 * n, i), basis_vec(2 * n, j))
                if any(prod[n:]):
                    violations.append(Violation("manin.closure-a", (i, j), prod, ()))
                prod = out.mul(op, basis_vec(2 * n, n + i), basis_vec(2 * n, n + j))
                if any(prod[:n]):
                    violations.append(Violation("manin.closure-b", (i, j), prod, ()))
    violations.sort(key=lambda v: (v.identity, v.indices))
    report = CheckReport(not violations, violations[:MAX_VIOLATIONS], count, "manin-triple")
    return out, form, report


# ---------------------------------------------------------------------------
# compatible splittings from an invariant form
# ---------------------------------------------------------------------------

def compatible_pp_from_gph(alg: Algebra, B: Matrix, checked=True) -> Algebra:
    """Split circ into rtri/ltri using a nondegenerate symmetric invariant form.

    rtri and ltri are the unique solutions of
        B(x |> y, z) = -B(y, x o z - z o x),
        B(x <| y, z) =  B(x, z o y),
    solved column-by-column against B.
    """
    if checked:
        base = check_gph(alg, B)
        if not base.passed:
            raise PreconditionError("form is not generalized pseudo-Hessian", base)
    n = alg.dim
    Bt = B.transpose()
    e = [basis_vec(n, i) for i in range(n)]
    rt = t3_zero(n)
    lt = t3_zero(n)
    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            rhs_rt, rhs_lt = [], []
            for k in range(n):
                z = e[k]
                comm = vsub(alg.mul("circ", x, z), alg.mul("circ", z, x))
                rhs_rt.append(-form_value(B, y, comm))
                rhs_lt.append(form_value(B, x, alg.mul("circ", z, y)))
            try:
                sol_rt = Bt.solve_vec(tuple(rhs_rt))
                sol_lt = Bt.solve_vec(tuple(rhs_lt))
            except SingularMatrixError:
                raise PreconditionError("form is degenerate")
            for k in range(n):
                rt[i][j][k] = sol_rt[k]
                lt[i][j][k] = sol_lt[k]
    return Algebra(alg.dim, alg.field, alg.basis,
                   {"bracket": alg.table("bracket"), "rtri": rt, "ltri": lt})


def bullet_from_gph(alg: Algebra, B: Matrix, checked=True) -> Algebra:
    """The second post-Lie product: B(x . y, z) = -B(y, x o z)."""
    if checked:
        base = check_gph(alg, B)
        if not base.passed:
            raise PreconditionError("form is not generalized pseudo-Hessian", base)
    n = alg.dim
    Bt = B.transpose()
    e = [basis_vec(n, i) for i in range(n)]
    c = t3_zero(n)
    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            rhs = []
            for k in range(n):
                rhs.append(-form_value(B, y, alg.mul("circ", x, e[k])))
            try:
                sol = Bt.solve_vec(tuple(rhs))
            except SingularMatrixError:
                raise PreconditionError("form is degenerate")
            for k in range(n):
                c[i][j][k] = sol[k]
    return Algebra(alg.dim, alg.field, alg.basis,
                   {"bracket": alg.table("bracket"), "circ": c})


# ---------------------------------------------------------------------------
# quarter splittings from O-operators
# ---------------------------------------------------------------------------

def pre_pp_from_o_operator(alg: Algebra, rep: PPRepSpec, T: Matrix, checked=True) -> Algebra:
    """Quarter-split structure on V induced by an O-operator T: V -> A."""
    if checked:
        base = check_o_operator_pp(alg, rep, T)
        if not base.passed:
            raise PreconditionError("T is not an O-operator", base)
    m = rep.dim
    out = Algebra(m, alg.field)
    out = out.op_table_from("se", lambda u, v: rep.act("l_rt", T.apply(u)).apply(v))
    out = out.op_table_from("ne", lambda u, v: rep.act("r_rt", T.apply(v)).apply(u))
    out = out.op_table_from("sw", lambda u, v: rep.act("l_lt", T.apply(u)).apply(v))
    out = out.op_table_from("nw", lambda u, v: rep.act("r_lt", T.apply(v)).apply(u))
    return out.op_table_from("dot", lambda u, v: rep.act("rho", T.apply(u)).apply(v))


def invertible_o_to_compatible_pre_pp(alg: Algebra, rep: PPRepSpec, T: Matrix,
                                      checked=True) -> Algebra:
    """Compatible quarter-splitting of the pp algebra itself from an invertible O-operator."""
    if checked:
        base = check_o_operator_pp(alg, rep, T)
        if not base.passed:
            raise PreconditionError("T is not an O-operator", base)
    if T.rows != T.cols:
        raise PreconditionError("operator is not invertible (not square)")
    try:
        Tinv = T.inverse()
    except SingularMatrixError:
        raise PreconditionError("operator is singular")
    out = Algebra(alg.dim, alg.field, alg.basis)
    out = out.op_table_from("se", lambda x, y: T.apply(rep.act("l_rt", x).apply(Tinv.apply(y))))
    out = out.op_table_from("ne", lambda x, y: T.apply(rep.act("r_rt", y).apply(Tinv.apply(x))))
    out = out.op_table_from("sw", lambda x, y: T.apply(rep.act("l_lt", x).apply(Tinv.apply(y))))
    out = out.op_table_from("nw", lambda x, y: T.apply(rep.act("r_lt", y).apply(Tinv.apply(x))))
    return out.op_table_from("dot", lambda x, y: T.apply(rep.act("rho", x).apply(Tinv.apply(y))))


def quarter_split_rep(alg: Algebra) -> PPRepSpec:
    """(A; L_se, R_ne, L_sw, R_nw, L_dot): the representation of the underlying
    pp algebra carried by a quarter-split structure."""
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    return PPRepSpec(
        n,
        [alg.left_mult("se", x) for x in e],
        [alg.right_mult("ne", x) for x in e],
        [alg.left_mult("sw", x) for x in e],
        [alg.right_mult("nw", x) for x in e],
        [alg.left_mult("dot", x) for x in e],
    )


def hom_embed_r(alg: Algebra, rep: PPRepSpec, T: Matrix, checked=True):
    """Embed T: V -> A as an antisymmetric tensor in the double A + V*.

    Returns (Ahat, r) with Ahat = A semidirect V* along the dual
    representation, and r = T - tau(T) placed block-wise as
    r[n+j, i] = T[i, j], r[i, n+j] = -T[i, j].
    """
    if checked:
        base = check_pp_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a pp representation", base)
    n, m = alg.dim, rep.dim
    if T.rows != n or T.cols != m:
        raise ValueError("operator shape mismatch")
    ahat = semidirect_pp(alg, dual_pp_rep(alg, rep, checked=False), checked=False)
    ahat.basis = tuple(alg.basis) + tuple("v%d*" % (i + 1) for i in range(m))
    r = Matrix.zero(n + m, n + m)
    for i in range(n):
        for j in range(m):
            r[n + j, i] = T[i, j]
            r[i, n + j] = -T[i, j]
    return ahat, r
