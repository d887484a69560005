"""Bit-exact text documents for algebras, forms, maps, tensors and coalgebras.

The format is line oriented.  Every document starts with

    kind <algebra|form|map|tensor2|coalgebra|bundle>
    field <Q|Q(i)>
    dim <n>
    basis <name> ... <name>

followed by kind-specific tables.  Basis indices are 1-based in files and
0-based in memory.  Scalars use the canonical text grammar of
:mod:`postlie.scalars`, so load(save(x)) == x bit-exactly.

algebra:   blocks  ``op <name>`` ... ``end`` with lines  ``i j : s1 .. sn``
           meaning e_i * e_j = sum_k s_k e_k (omitted pairs are zero).
form/map/tensor2:  a ``matrix`` ... ``end`` block of ``rows`` lines
           (maps may declare a separate ``rows`` header for non-square shapes).
coalgebra: blocks ``comap <name>`` ... ``end`` with lines ``k i j : s``
           meaning delta(e_k) contains s * e_i (x) e_j.
bundle:    named ``section <name>`` ... ``endsection`` wrappers, each holding
           a complete document.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, OPERATION_NAMES, t3_zero
from .bialgebra import COMAP_NAMES, CoalgebraSpec
from .linalg import Matrix
from .scalars import Scalar, ScalarParseError

__all__ = ["Document", "DocumentError", "load", "save", "loads", "dumps"]

KINDS = ("algebra", "form", "map", "tensor2", "coalgebra", "bundle")


class DocumentError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


@dataclass
class Document:
    kind: str
    field: str = "Q(i)"
    dim: int = 0
    basis: tuple = ()
    rows: int | None = None
    ops: dict = dc_field(default_factory=dict)
    matrix: Matrix | None = None
    comaps: dict = dc_field(default_factory=dict)
    sections: dict = dc_field(default_factory=dict)

    # -- conversions -----------------------------------------------------

    def to_algebra(self) -> Algebra:
        if self.kind != "algebra":
            raise DocumentError("document is %r, not an algebra" % self.kind)
        return Algebra(self.dim, self.field, self.basis, self.ops)

    def to_matrix(self) -> Matrix:
        if self.kind not in ("form", "map", "tensor2"):
            raise DocumentError("document is %r, not matrix-like" % self.kind)
        return self.matrix

    def to_coalgebra(self) -> CoalgebraSpec:
        if self.kind != "coalgebra":
            raise DocumentError("document is %r, not a coalgebra" % self.kind)
        return CoalgebraSpec(self.dim, self.field, self.basis, self.comaps)

    @staticmethod
    def from_algebra(alg: Algebra) -> "Document":
        return Document("algebra", alg.field, alg.dim, tuple(alg.basis), ops=dict(alg.ops))

    @staticmethod
    def from_matrix(kind: str, m: Matrix, field="Q(i)", basis=()) -> "Document":
        if kind not in ("form", "map", "tensor2"):
            raise DocumentError("matrix documents must be form, map or tensor2")
        dim = m.cols
        rows = m.rows if m.rows != m.cols else None
        if kind in ("form", "tensor2") and m.rows != m.cols:
            raise DocumentError("%s must be square" % kind)
        return Document(kind, field, dim, tuple(basis), rows=rows, matrix=m)

    @staticmethod
    def from_coalgebra(co: CoalgebraSpec) -> "Document":
        return Document("coalgebra", co.field, co.dim, tuple(co.basis), comaps=dict(co.comaps))

    @staticmethod
    def bundle(sections: dict, field="Q(i)") -> "Document":
        return Document("bundle", field, 0, (), sections=dict(sections))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _scal(tok, lineno, fieldname):
    try:
        s = Scalar.parse(tok)
    except ScalarParseError as exc:
        raise DocumentError(str(exc), lineno) from None
    if fieldname == "Q" and s.im != 0:
        raise DocumentError("imaginary scalar %r in a Q document" % tok, lineno)
    return s


class _Lines:
    def __init__(self, text):
        self.raw = text.splitlines()
        self.pos = 0

    def next(self):
        while self.pos < len(self.raw):
            self.pos += 1
            stripped = self.raw[self.pos - 1].strip()
            if stripped and not stripped.startswith("#"):
                return self.pos, stripped
        return None, None


def loads(text: str) -> Document:
    lines = _Lines(text)
    return _parse_document(lines)


def _expect(lines, keyword):
    lineno, line = lines.next()
    if line is None:
        raise DocumentError("unexpected end of document, expected %r" % keyword)
    parts = line.split(None, 1)
    if parts[0] != keyword:
        raise DocumentError("expected %r, found %r" % (keyword, parts[0]), lineno)
    return lineno, parts[1].strip() if len(parts) > 1 else ""


def _parse_document(lines) -> Document:
    lineno, kind = _expect(lines, "kind")
    if kind not in KINDS:
        raise DocumentError("unknown kind %r" % kind, lineno)
    if kind == "bundle":
        lineno, fieldname = _expect(lines, "field")
        doc = Document("bundle", fieldname)
        while True:
            lineno, line = lines.next()
            if line is None:
                break
            parts = line.split()
            if parts[0] != "section" or len(parts) != 2:
                raise DocumentError("expected 'section <name>'", lineno)
            name = parts[1]
            doc.sections[name] = _parse_document(lines)
            lineno, line = lines.next()
            if line != "endsection":
                raise DocumentError("expected 'endsection'", lineno)
        return doc

    lineno, fieldname = _expect(lines, "field")
    if fieldname not in ("Q", "Q(i)"):
        raise DocumentError("unknown field %r" % fieldname, lineno)
    lineno, dimtxt = _expect(lines, "dim")
    try:
        dim = int(dimtxt)
    except ValueError:
        raise DocumentError("bad dimension %r" % dimtxt, lineno) from None
    if dim < 0:
        raise DocumentError("negative dimension", lineno)
    lineno, basistxt = _expect(lines, "basis")
    basis = tuple(basistxt.split())
    if len(basis) != dim:
        raise DocumentError("basis has %d names, dim is %d" % (len(basis), dim), lineno)
    doc = Document(kind, fieldname, dim, basis)

    if kind == "algebra":
        _parse_algebra_body(lines, doc)
    elif kind == "coalgebra":
        _parse_coalgebra_body(lines, doc)
    else:
        _parse_matrix_body(lines, doc)
    return doc


def _parse_algebra_body(lines, doc):
    while True:
        lineno, line = lines.next()
        if line is None:
            return
        if line == "endsection":
            lines.pos -= 1
            return
        parts = line.split()
        if parts[0] != "op" or len(parts) != 2:
            raise DocumentError("expected 'op <name>'", lineno)
        name = parts[1]
        if name not in OPERATION_NAMES:
            raise DocumentError("unknown operation %r" % name, lineno)
        table = t3_zero(doc.dim)
        while True:
            lineno, line = lines.next()
            if line is None:
                raise DocumentError("unterminated op block")
            if line == "end":
                break
            head, _, tail = line.partition(":")
            idx = head.split()
            vals = tail.split()
            if len(idx) != 2 or len(vals) != doc.dim:
                raise DocumentError("expected 'i j : %d scalars'" % doc.dim, lineno)
            try:
                i, j = int(idx[0]) - 1, int(idx[1]) - 1
            except ValueError:
                raise DocumentError("bad basis index", lineno) from None
            if not (0 <= i < doc.dim and 0 <= j < doc.dim):
                raise DocumentError("basis index out of range", lineno)
            for k, tok in enumerate(vals):
                table[i][j][k] = _scal(tok, lineno, doc.field)
        doc.ops[name] = table


def _parse_coalgebra_body(lines, doc):
    while True:
        lineno, line = lines.next()
        if line is None:
            return
        if line == "endsection":
            lines.pos -= 1
            return
        parts = line.split()
        if parts[0] != "comap" or len(parts) != 2:
            raise DocumentError("expected 'comap <name>'", lineno)
        name = parts[1]
        if name not in COMAP_NAMES:
            raise DocumentError("unknown comap %r" % name, lineno)
        table = t3_zero(doc.dim)
        while True:
            lineno, line = lines.next()
            if line is None:
                raise DocumentError("unterminated comap block")
            if line == "end":
                break
            head, _, tail = line.partition(":")
            idx = head.split()
            vals = tail.split()
            if len(idx) != 3 or len(vals) != 1:
                raise DocumentError("expected 'k i j : scalar'", lineno)
            try:
                k, i, j = (int(t) - 1 for t in idx)
            except ValueError:
                raise DocumentError("bad basis index", lineno) from None
            if not all(0 <= t < doc.dim for t in (k, i, j)):
                raise DocumentError("basis index out of range", lineno)
            table[k][i][j] = _scal(vals[0], lineno, doc.field)
        doc.comaps[name] = table


def _parse_matrix_body(lines, doc):
    lineno, line = lines.next()
    rows = doc.dim
    if line is not None and line.split()[0] == "rows":
        parts = line.split()
        if len(parts) != 2:
            raise DocumentError("expected 'rows <n>'", lineno)
        rows = int(parts[1])
        if doc.kind != "map":
            raise DocumentError("'rows' is only valid for maps", lineno)
        doc.rows = rows
        lineno, line = lines.next()
    if line != "matrix":
        raise DocumentError("expected 'matrix'", lineno)
    entries = []
    for _ in range(rows):
        lineno, line = lines.next()
        if line is None:
            raise DocumentError("unterminated matrix block")
        toks = line.split()
        if len(toks) != doc.dim:
            raise DocumentError("expected %d entries per row" % doc.dim, lineno)
        entries.extend(_scal(t, lineno, doc.field) for t in toks)
    lineno, line = lines.next()
    if line != "end":
        raise DocumentError("expected 'end' after matrix", lineno)
    doc.matrix = Matrix(rows, doc.dim, entries)


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def dumps(doc: Document) -> str:
    out = []
    _dump_into(doc, out)
    return "\n".join(out) + "\n"


def _dump_into(doc: Document, out):
    out.append("kind %s" % doc.kind)
    out.append("field %s" % doc.field)
    if doc.kind == "bundle":
        for name in doc.sections:
            out.append("section %s" % name)
            _dump_into(doc.sections[name], out)
            out.append("endsection")
        return
    out.append("dim %d" % doc.dim)
    out.append(("basis " + " ".join(doc.basis)).rstrip())
    if doc.kind == "algebra":
        for name in OPERATION_NAMES:
            if name not in doc.ops:
                continue
            out.append("op %s" % name)
            table = doc.ops[name]
            for i in range(doc.dim):
                for j in range(doc.dim):
                    row = table[i][j]
                    if any(row):
                        out.append("%d %d : %s" % (i + 1, j + 1, " ".join(str(s) for s in row)))
            out.append("end")
    elif doc.kind == "coalgebra":
        for name in COMAP_NAMES:
            if name not in doc.comaps:
                continue
            out.append("comap %s" % name)
            table = doc.comaps[name]
            for k in range(doc.dim):
                for i in range(doc.dim):
                    for j in range(doc.dim):
                        if table[k][i][j]:
                            out.append("%d %d %d : %s" % (k + 1, i + 1, j + 1, table[k][i][j]))
            out.append("end")
    else:
        m = doc.matrix
        if doc.kind == "map" and m.rows != m.cols:
            out.append("rows %d" % m.rows)
        out.append("matrix")
        for i in range(m.rows):
            out.append(" ".join(str(m[i, j]) for j in range(m.cols)))
        out.append("end")


def load(path) -> Document:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save(doc: Document, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
