"""Bilinear forms, Rota-Baxter operators, representations and O-type operators.

Conventions.  A bilinear form is an n x n Matrix with B[i,j] = B(e_i, e_j).
A linear map acts on coordinate columns.  Representations are stored
extensionally: one carrier matrix per algebra basis element, extended
linearly in the algebra slot.  Dual spaces always use the dual basis, so
the pairing matrix is the identity and every dualized operator is the
negated transpose.
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
    sub_adjacent_lie,
)
from .linalg import Matrix, basis_vec, vadd, vneg, vsub
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "form_value",
    "check_invariant_form",
    "check_gph",
    "check_left_invariant",
    "omega_cocycle",
    "check_rota_baxter_lie",
    "induced_post_lie",
    "RepSpec",
    "PPRepSpec",
    "dual_map",
    "adjoint_rep",
    "check_post_lie_rep",
    "pp_split_dual_rep",
    "pp_adjoint_rep",
    "pp_coadjoint_rep",
    "check_pp_rep",
    "dual_pp_rep",
    "check_o_operator_pp",
    "check_dual_p_o_operator",
    "check_strong",
    "pp_from_dual_p_o",
]


def form_value(B: Matrix, x, y) -> Scalar:
    """B(x, y) for coordinate vectors x, y."""
    acc = ZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj and B[i, j]:
                acc = acc + xi * B[i, j] * yj
    return acc


def _report(name, violations, checked) -> CheckReport:
    violations.sort(key=lambda v: (v.identity, v.indices))
    return CheckReport(not violations, violations[:MAX_VIOLATIONS], checked, name)


def _scalar_violation(ident, idx, lhs, rhs):
    return Violation(ident, idx, (lhs,), (rhs,))


# ---------------------------------------------------------------------------
# invariance of bilinear forms
# ---------------------------------------------------------------------------

def check_invariant_form(alg: Algebra, B: Matrix, checked=True) -> CheckReport:
    """Bracket associativity of B plus the circ two-sided cocycle identity."""
    if B.rows != alg.dim or B.cols != alg.dim:
        raise ValueError("form dimension mismatch")
    if checked:
        rep = check_post_lie(alg)
        if not rep.passed:
            raise PreconditionError("not a post-Lie algebra", rep)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    checked_count = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = e[i], e[j], e[k]
                checked_count += 2
                lhs = form_value(B, alg.mul("bracket", x, y), z)
                rhs = form_value(B, x, alg.mul("bracket", y, z))
                if lhs != rhs:
                    violations.append(_scalar_violation("inv.lie", (i, j, k), lhs, rhs))
                lhs = form_value(B, alg.mul("circ", x, y), z) - form_value(B, x, alg.mul("circ", y, z))
                rhs = form_value(B, alg.mul("circ", y, x), z) - form_value(B, y, alg.mul("circ", x, z))
                if lhs != rhs:
                    violations.append(_scalar_violation("inv.cocycle", (i, j, k), lhs, rhs))
    return _report("invariant-form", violations, checked_count)


def check_gph(alg: Algebra, B: Matrix, checked=True) -> CheckReport:
    """Nondegenerate symmetric invariant form on a post-Lie algebra."""
    violations = []
    checked_count = 2
    if not B.is_symmetric():
        violations.append(Violation("form.sym", (), tuple(B.entries), tuple(B.transpose().entries)))
    if alg.dim > 0 and not B.det():
        violations.append(Violation("form.nondeg", (), (B.det(),), (ONE,)))
    inner = check_invariant_form(alg, B, checked=checked)
    violations.extend(inner.violations)
    return _report("gph", violations, checked_count + inner.checked)


def check_left_invariant(alg: Algebra, B: Matrix, checked=True) -> CheckReport:
    """Bracket-invariant B with B(x o y, z) = -B(y, x o z)."""
    if checked:
        rep = check_post_lie(alg)
        if not rep.passed:
            raise PreconditionError("not a post-Lie algebra", rep)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    count = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = e[i], e[j], e[k]
                count += 2
                lhs = form_value(B, alg.mul("bracket", x, y), z)
                rhs = form_value(B, x, alg.mul("bracket", y, z))
                if lhs != rhs:
                    violations.append(_scalar_violation("leftinv.lie", (i, j, k), lhs, rhs))
                lhs = form_value(B, alg.mul("circ", x, y), z)
                rhs = -form_value(B, y, alg.mul("circ", x, z))
                if lhs != rhs:
                    violations.append(_scalar_violation("leftinv.circ", (i, j, k), lhs, rhs))
    return _report("left-invariant", violations, count)


def omega_cocycle(alg: Algebra, B: Matrix):
    """Antisymmetrisation of an invariant form, verified as a sub-adjacent 2-cocycle.

    Returns (omega, report): omega(x,y) = B(x,y) - B(y,x) and the report of
    the cyclic cocycle identity of omega on the sub-adjacent Lie algebra.
    """
    inv = check_invariant_form(alg, B)
    if not inv.passed:
        raise PreconditionError("form is not invariant", inv)
    omega = B - B.transpose()
    sub = sub_adjacent_lie(alg)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    count = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = e[i], e[j], e[k]
                count += 1
                acc = (
                    form_value(omega, sub.mul("bracket", x, y), z)
                    + form_value(omega, sub.mul("bracket", y, z), x)
                    + form_value(omega, sub.mul("bracket", z, x), y)
                )
                if acc != ZERO:
                    violations.append(_scalar_violation("omega.cocycle", (i, j, k), acc, ZERO))
    return omega, _report("omega-cocycle", violations, count)


# ---------------------------------------------------------------------------
# Rota-Baxter operators and the induced post-Lie product
# ---------------------------------------------------------------------------

def check_rota_baxter_lie(alg: Algebra, P: Matrix, weight: Scalar) -> CheckReport:
    """[P(x),P(y)] = P([P(x),y] + [x,P(y)] + weight [x,y]) on basis pairs."""
    rep = check_lie(alg)
    if not rep.passed:
        raise PreconditionError("not a Lie algebra", rep)
    if not isinstance(weight, Scalar):
        weight = Scalar(weight)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    count = 0
    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            count += 1
            px, py = P.apply(x), P.apply(y)
            lhs = alg.mul("bracket", px, py)
            inner = vadd(
                alg.mul("bracket", px, y),
                alg.mul("bracket", x, py),
                tuple(weight * c for c in alg.mul("bracket", x, y)),
            )
            rhs = P.apply(inner)
            if lhs != rhs:
                violations.append(Violation("rb", (i, j), lhs, rhs))
    return _report("rota-baxter", violations, count)


def induced_post_lie(alg: Algebra, P: Matrix) -> Algebra:
    """x o y = [P(x), y] for a weight-one Rota-Baxter operator P."""
    rep = check_rota_baxter_lie(alg, P, ONE)
    if not rep.passed:
        raise PreconditionError("P is not a weight-one Rota-Baxter operator", rep)
    out = Algebra(alg.dim, alg.field, alg.basis, {"bracket": alg.table("bracket")})
    return out.op_table_from("circ", lambda x, y: alg.mul("bracket", P.apply(x), y))


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

@dataclass
class RepSpec:
    """Post-Lie representation (V; l, r, rho), one carrier matrix per basis element."""

    dim: int
    l: list
    r: list
    rho: list

    def __post_init__(self):
        for mats in (self.l, self.r, self.rho):
            for m in mats:
                if m.rows != self.dim or m.cols != self.dim:
                    raise ValueError("carrier matrix has wrong shape")

    @property
    def source_dim(self):
        return len(self.l)

    def act(self, which: str, x) -> Matrix:
        return _combine(getattr(self, which), x, self.dim)


@dataclass
class PPRepSpec:
    """pp-post-Lie representation (V; l_rt, r_rt, l_lt, r_lt, rho)."""

    dim: int
    l_rt: list
    r_rt: list
    l_lt: list
    r_lt: list
    rho: list

    def __post_init__(self):
        for mats in (self.l_rt, self.r_rt, self.l_lt, self.r_lt, self.rho):
            for m in mats:
                if m.rows != self.dim or m.cols != self.dim:
                    raise ValueError("carrier matrix has wrong shape")

    def act(self, which: str, x) -> Matrix:
        return _combine(getattr(self, which), x, self.dim)


def _combine(mats, x, dim) -> Matrix:
    """Linear combination of carrier matrices; shared result for basis x."""
    live = [(i, xi) for i, xi in enumerate(x) if xi]
    if len(live) == 1:
        xi = live[0][1]
        if xi.a == 1 and xi.b == 0 and xi.d == 1:
            return mats[live[0][0]]
    out = Matrix.zero(dim, dim)
    for i, xi in live:
        out = out + mats[i].scale(xi)
    return out


def dual_map(mats) -> list:
    """Dual action on V* under the standard pairing: each matrix to -M^T."""
    return [m.dual() for m in mats]


def adjoint_rep(alg: Algebra) -> RepSpec:
    """(A; L_circ, R_circ, ad) on the algebra itself."""
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    return RepSpec(
        n,
        [alg.left_mult("circ", x) for x in e],
        [alg.right_mult("circ", x) for x in e],
        [alg.left_mult("bracket", x) for x in e],
    )


def pp_split_dual_rep(alg: Algebra) -> RepSpec:
    """(A*; L_rt* - R_lt*, -R_lt*, ad*): the dual-space representation that
    characterises a pp splitting of the horizontal post-Lie product."""
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    lmats, rmats, rhomats = [], [], []
    for x in e:
        lrt = alg.left_mult("rtri", x)
        rlt = alg.right_mult("ltri", x)
        lmats.append(lrt.dual() - rlt.dual())
        rmats.append(-rlt.dual())
        rhomats.append(alg.left_mult("bracket", x).dual())
    return RepSpec(n, lmats, rmats, rhomats)


def check_post_lie_rep(alg: Algebra, rep: RepSpec, checked=True) -> CheckReport:
    if checked:
        base = check_post_lie(alg)
        if not base.passed:
            raise PreconditionError("not a post-Lie algebra", base)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    violations = []
    count = 0

    def vmat(ident, i, j, lhs, rhs):
        if lhs != rhs:
            violations.append(Violation(ident, (i, j), tuple(lhs.entries), tuple(rhs.entries)))

    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            lx, ly = rep.act("l", x), rep.act("l", y)
            rx, ry = rep.act("r", x), rep.act("r", y)
            px, py = rep.act("rho", x), rep.act("rho", y)
            br = alg.mul("bracket", x, y)
            xy = alg.mul("circ", x, y)
            curly = vadd(xy, vneg(alg.mul("circ", y, x)), br)
            count += 5
            vmat("rep.lie", i, j, rep.act("rho", br), px * py - py * px)
            vmat("rep.1", i, j, rep.act("rho", xy), lx * py - py * lx)
            vmat("rep.2", i, j, rep.act("r", br), px * ry - py * rx)
            vmat("rep.3", i, j, rep.act("r", xy), lx * ry - ry * (lx - rx + px))
            vmat("rep.4", i, j, rep.act("l", curly), lx * ly - ly * lx)
    return _report("post-lie-rep", violations, count)


def pp_adjoint_rep(alg: Algebra) -> PPRepSpec:
    """(A; L_rt, R_rt, L_lt, R_lt, ad) on the pp algebra itself."""
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    return PPRepSpec(
        n,
        [alg.left_mult("rtri", x) for x in e],
        [alg.right_mult("rtri", x) for x in e],
        [alg.left_mult("ltri", x) for x in e],
        [alg.right_mult("ltri", x) for x in e],
        [alg.left_mult("bracket", x) for x in e],
    )


def dual_pp_rep(alg: Algebra, rep: PPRepSpec, checked=True) -> PPRepSpec:
    """Dual-space representation of a pp representation.

    (V*; l_rt* - r_rt* + l_lt* - r_lt*, r_rt*, r_rt* - l_lt*, -(r_rt* + r_lt*), rho*).
    """
    if checked:
        base = check_pp_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a pp representation", base)
    n = len(rep.l_rt)
    l_rt, r_rt, l_lt, r_lt, rho = [], [], [], [], []
    for i in range(n):
        a = rep.l_rt[i].dual()
        b = rep.r_rt[i].dual()
        c = rep.l_lt[i].dual()
        d = rep.r_lt[i].dual()
        l_rt.append(a - b + c - d)
        r_rt.append(b)
        l_lt.append(b - c)
        r_lt.append(-(b + d))
        rho.append(rep.rho[i].dual())
    return PPRepSpec(rep.dim, l_rt, r_rt, l_lt, r_lt, rho)


def pp_coadjoint_rep(alg: Algebra) -> PPRepSpec:
    """(A*; L_diamond*, R_rt*, R_bullet*, -R_circ*, ad*)."""
    return dual_pp_rep(alg, pp_adjoint_rep(alg), checked=False)


def check_pp_rep(alg: Algebra, rep: PPRepSpec, checked=True) -> CheckReport:
    if checked:
        base = check_pp_post_lie(alg)
        if not base.passed:
            raise PreconditionError("not a pp-post-Lie algebra", base)
    n = alg.dim
    e = [basis_vec(n, i) for i in range(n)]
    m = rep.dim
    zero = Matrix.zero(m, m)
    violations = []
    count = 0

    def vmat(ident, i, j, lhs, rhs):
        if lhs != rhs:
            violations.append(Violation(ident, (i, j), tuple(lhs.entries), tuple(rhs.entries)))

    for i in range(n):
        for j in range(n):
            x, y = e[i], e[j]
            br = alg.mul("bracket", x, y)
            xy_lt = alg.mul("ltri", x, y)
            yx_lt = alg.mul("ltri", y, x)
            circ = vadd(alg.mul("rtri", x, y), xy_lt)
            bullet = vsub(alg.mul("rtri", x, y), yx_lt)
            curly = vadd(circ, vneg(vadd(alg.mul("rtri", y, x), yx_lt)), br)
            lrx, lry = rep.act("l_rt", x), rep.act("l_rt", y)
            rrx, rry = rep.act("r_rt", x), rep.act("r_rt", y)
            llx, lly = rep.act("l_lt", x), rep.act("l_lt", y)
            rlx, rly = rep.act("r_lt", x), rep.act("r_lt", y)
            px, py = rep.act("rho", x), rep.act("rho", y)
            count += 14
            vmat("pprep.lie", i, j, rep.act("rho", br), px * py - py * px)
            vmat("pprep.01", i, j, rep.act("r_lt", br), rlx * py - rly * px)
            vmat("pprep.02", i, j, llx * py, rep.act("l_lt", br) - rly * px)
            # chained vanishing conditions, each member on its own
            vmat("pprep.03a", i, j, px * (lly + rly), zero)
            vmat("pprep.03b", i, j, rep.act("l_lt", br) + rep.act("r_lt", br), zero)
            vmat("pprep.03c", i, j, (llx + rlx) * py, zero)
            vmat("pprep.03d", i, j, rep.act("rho", vadd(xy_lt, yx_lt)), zero)
            vmat("pprep.04", i, j, (lrx - rlx) * py, rep.act("rho", circ) + py * (lrx - rlx))
            vmat("pprep.05", i, j, rep.act("r_rt", br) - rep.act("l_lt", br),
                 px * (rry - lly) - py * (rrx - llx))
            vmat("pprep.06", i, j, (lrx + px) * lly,
                 rep.act("l_lt", bullet) + lly * (lrx + llx))
            vmat("pprep.07", i, j, (lrx + px) * rly,
                 rep.act("r_lt", circ) + rly * (lrx - rlx))
            vmat("pprep.08", i, j, rep.act("r_rt", xy_lt),
                 rly * (rrx - llx) + llx * (rry + rly) + rep.act("rho", xy_lt))
            vmat("pprep.09", i, j, rep.act("r_rt", alg.mul("rtri", x, y)),
                 lrx * rry - rry * (lrx + llx - rrx - rlx + px)
                 - px * rly - rly * px - rep.act("rho", xy_lt))
            vmat("pprep.10", i, j, rep.act("l_rt", curly),
                 lrx * lry - lry * lrx + py * llx - px * lly - rep.act("l_lt", br))
    return _report("pp-rep", violations, count)


# ---------------------------------------------------------------------------
# O-operators and their dual analogues
# ---------------------------------------------------------------------------

def check_o_operator_pp(alg: Algebra, rep: PPRepSpec, T: Matrix, checked=True) -> CheckReport:
    """T: V -> A intertwining the pp products with the representation."""
    if checked:
        base = check_pp_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a pp representation", base)
    if T.rows != alg.dim or T.cols != rep.dim:
        raise ValueError("operator shape mismatch")
    m = rep.dim
    e = [basis_vec(m, i) for i in range(m)]
    violations = []
    count = 0
    for i in range(m):
        for j in range(m):
            u, v = e[i], e[j]
            tu, tv = T.apply(u), T.apply(v)
            count += 3
            pairs = [
                ("oop.1", alg.mul("rtri", tu, tv),
                 T.apply(vadd(rep.act("l_rt", tu).apply(v), rep.act("r_rt", tv).apply(u)))),
                ("oop.2", alg.mul("ltri", tu, tv),
                 T.apply(vadd(rep.act("l_lt", tu).apply(v), rep.act("r_lt", tv).apply(u)))),
                ("oop.3", alg.mul("bracket", tu, tv),
                 T.apply(vsub(rep.act("rho", tu).apply(v), rep.act("rho", tv).apply(u)))),
            ]
            for ident, lhs, rhs in pairs:
                if lhs != rhs:
                    violations.append(Violation(ident, (i, j), lhs, rhs))
    return _report("o-operator", violations, count)


def _dual_act(rep: RepSpec, which: str, a) -> Matrix:
    """Matrix of the dualized action of a in A on V* (dual basis)."""
    return rep.act(which, a).dual()


def check_dual_p_o_operator(alg: Algebra, rep: RepSpec, T: Matrix, checked=True) -> CheckReport:
    """T: V* -> A compatible with circ via (l* - r*) and with the bracket via rho*."""
    if checked:
        base = check_post_lie_rep(alg, rep)
        if not base.passed:
            raise PreconditionError("not a post-Lie representation", base)
    m = rep.dim
    if T.rows != alg.dim or T.cols != m:
        raise ValueError("operator shape mismatch")
    e = [basis_vec(m, i) for i in range(m)]
    violations = []
    count = 0
    for i in range(m):
        for j in range(m):
            u, v = e[i], e[j]
            tu, tv = T.apply(u), T.apply(v)
            count += 3
            lhs = alg.mul("circ", tu, tv)
            rhs = T.apply(vsub(
                (_dual_act(rep, "l", tu) - _dual_act(rep, "r", tu)).apply(v),
                _dual_act(rep, "r", tv).apply(u),
            ))
            if lhs != rhs:
                violations.append(Violation("dpo.1", (i, j), lhs, rhs))
            br = alg.mul("bracket", tu, tv)
            rhs_a = T.apply(_dual_act(rep, "rho", tu).apply(v))
            rhs_b = vneg(T.apply(_dual_act(rep, "rho", tv).apply(u)))
            if br != rhs_a:
                violations.append(Violation("dpo.2a", (i, j), br, rhs_a))
            if br != rhs_b:
                violations.append(Violation("dpo.2b", (i, j), br, rhs_b))
    return _report("dual-p-o-operator", violations, count)


def check_strong(alg: Algebra, rep: RepSpec, T: Matrix, checked=True) -> CheckReport:
    """Strength conditions making the induced dual-space products pp-post-Lie."""
    if checked:
        base = check_dual_p_o_operator(alg, rep, T, checked=checked)
        if not base.passed:
            raise PreconditionError("not a dual p-O-operator", base)
    m = rep.dim
    e = [basis_vec(m, i) for i in range(m)]
    zero = (ZERO,) * m
    violations = []
    count = 0
    for i in range(m):
        for j in range(m):
            u, v = e[i], e[j]
            tu, tv = T.apply(u), T.apply(v)
            count += 1
            lhs = _dual_act(rep, "rho", tu).apply(v)
            rhs = vneg(_dual_act(rep, "rho", tv).apply(u))
            if lhs != rhs:
                violations.append(Violation("strong.1", (i, j), lhs, rhs))
            for k in range(m):
                w = basis_vec(m, k)
                tw = T.apply(w)
                count += 3
                a = _dual_act(rep, "rho", tu).apply(vadd(
                    _dual_act(rep, "r", tv).apply(w), _dual_act(rep, "r", tw).apply(v)))
                if a != zero:
                    violations.append(Violation("strong.2a", (i, j, k), a, zero))
                b = vadd(
                    _dual_act(rep, "r", alg.mul("bracket", tu, tw)).apply(v),
                    _dual_act(rep, "r", tv).apply(_dual_act(rep, "rho", tu).apply(w)),
                )
                if b != zero:
                    violations.append(Violation("strong.2b", (i, j, k), b, zero))
                c = vadd(
                    _dual_act(rep, "rho", alg.mul("bracket", tu, tv)).apply(w),
                    _dual_act(rep, "rho", alg.mul("bracket", tv, tw)).apply(u),
                    _dual_act(rep, "rho", alg.mul("bracket", tw, tu)).apply(v),
                )
                if c != zero:
                    violations.append(Violation("strong.3", (i, j, k), c, zero))
    return _report("strong", violations, count)


def pp_from_dual_p_o(alg: Algebra, rep: RepSpec, T: Matrix, checked=True) -> Algebra:
    """pp-post-Lie structure on V* induced by a strong dual p-O-operator."""
    if checked:
        base = check_strong(alg, rep, T)
        if not base.passed:
            raise PreconditionError("dual p-O-operator is not strong", base)
    m = rep.dim
    out = Algebra(m, alg.field)
    out = out.op_table_from(
        "rtri",
        lambda u, v: (_dual_act(rep, "l", T.apply(u)) - _dual_act(rep, "r", T.apply(u))).apply(v),
    )
    out = out.op_table_from(
        "ltri",
        lambda u, v: vneg(_dual_act(rep, "r", T.apply(v)).apply(u)),
    )
    return out.op_table_from(
        "bracket",
        lambda u, v: _dual_act(rep, "rho", T.apply(u)).apply(v),
    )
