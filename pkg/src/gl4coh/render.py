"""Text, JSON and TeX renderings, including symbolic-n displays.

A symbolic display is produced by computing at two concrete values of n
and reading every entry as a*n + b; any entry that is not consistent
between the two runs aborts the rendering.
"""

from __future__ import annotations

import json

from .arithcoh import GradedCohomology, Label, parabolic_cohomology, parabolic_name
from .boundary import gl4_weight
from .kostant import kostant_decompose
from .weights import Weight
from .weyl import Composition, Permutation

SYMBOLIC_PAIR = (12, 24)


class PatternMismatch(RuntimeError):
    pass


def affine_text(x1: int, x2: int, n1: int, n2: int, symbol: str = "n") -> str:
    a, rem = divmod(x2 - x1, n2 - n1)
    if rem:
        raise PatternMismatch(f"{x1}, {x2} is not affine in {symbol}")
    b = x1 - a * n1
    if a == 0:
        return str(b)
    head = symbol if a == 1 else ("-" + symbol if a == -1 else f"{a}{symbol}")
    if b == 0:
        return head
    return f"{head}{'+' if b > 0 else '-'}{abs(b)}"


def symbolic_weight(w1: Weight, w2: Weight, n1: int, n2: int) -> str:
    if w1.rank != w2.rank:
        raise PatternMismatch("rank differs")
    return "[" + ",".join(affine_text(a, b, n1, n2) for a, b in zip(w1, w2)) + "]"


def symbolic_label(l1: Label, l2: Label, n1: int, n2: int, fmt: str = "table", overlines: bool = True) -> str:
    if l1.shape() != l2.shape():
        raise PatternMismatch(f"{l1} and {l2} have different shapes")
    f1, f2 = l1.flat(), l2.flat()
    blocks = l1.blocks if overlines else tuple(type(b)(b.entries) for b in l1.blocks)
    return Label(blocks).render(fmt, lambda i, _: affine_text(f1[i], f2[i], n1, n2))


def join(terms, fmt: str = "table") -> str:
    if not terms:
        return "0"
    return (" \\oplus " if fmt == "tex" else " ⊕ ").join(terms)


# --- Kostant tables ------------------------------------------------------------

def weyl_table_rows(n: int | None = None, pair=SYMBOLIC_PAIR) -> list[str]:
    """w : l(w) : w.lambda over all of S_4, lambda = [n-3,1,1,1]."""
    borel = Composition((1, 1, 1, 1))
    if n is not None:
        dec = kostant_decompose(borel, gl4_weight(n))
        rows = sorted(dec.summands, key=lambda s: s.shuffle.images)
        return [s.row() for s in rows]
    n1, n2 = pair
    d1 = sorted(kostant_decompose(borel, gl4_weight(n1)).summands, key=lambda s: s.shuffle.images)
    d2 = sorted(kostant_decompose(borel, gl4_weight(n2)).summands, key=lambda s: s.shuffle.images)
    out = []
    for a, b in zip(d1, d2):
        if a.shuffle != b.shuffle:
            raise PatternMismatch("shuffle order differs")
        out.append(f"{a.shuffle} : {a.degree} : {symbolic_weight(a.levi_weight, b.levi_weight, n1, n2)}")
    return out


def nilradical_name(c: Composition) -> str:
    name = parabolic_name(c)
    return "N" if name == "B" else "N" + name[1:]


def nilradical_display(c: Composition, pair=SYMBOLIC_PAIR) -> str:
    """H^i(N_P, V) as a list of Levi highest weights per degree."""
    n1, n2 = pair
    d1 = kostant_decompose(c, gl4_weight(n1)).by_degree()
    d2 = kostant_decompose(c, gl4_weight(n2)).by_degree()
    lines = [nilradical_name(c)]
    for i in sorted(d1):
        terms = [symbolic_weight(a.levi_weight, b.levi_weight, n1, n2) for a, b in zip(d1[i], d2[i])]
        lines.append(f"{i}: " + join(terms))
    return "\n".join(lines) + "\n"


def kostant_rows(c: Composition, lam: Weight) -> list[str]:
    return kostant_decompose(c, lam).rows()


# --- cohomology displays ---------------------------------------------------------

def parabolic_display(c: Composition, pair=SYMBOLIC_PAIR, overlines: bool = False, fmt: str = "table") -> str:
    n1, n2 = pair
    h1 = parabolic_cohomology(c, gl4_weight(n1))
    h2 = parabolic_cohomology(c, gl4_weight(n2))
    lines = [parabolic_name(c)]
    for i in sorted(set(h1.by_degree) | set(h2.by_degree)):
        s1, s2 = h1.by_degree.get(i, []), h2.by_degree.get(i, [])
        if len(s1) != len(s2):
            raise PatternMismatch(f"degree {i}: summand count differs between n={n1} and n={n2}")
        terms = [symbolic_label(a.label, b.label, n1, n2, fmt, overlines) for a, b in zip(s1, s2)]
        lines.append(f"{i}: " + join(terms, fmt))
    return "\n".join(lines) + "\n"


def render_cohomology(h: GradedCohomology, fmt: str = "table") -> str:
    if fmt == "json":
        return dumps(h.to_json())
    dims = h.dims()
    if not dims and fmt != "tex":
        return "0\n"
    lines = []
    if fmt == "tex":
        lines.append("\\begin{tabular}{lll}")
        for i, ss in sorted(h.by_degree.items()):
            terms = [s.label.render("tex") for s in ss if s.dim]
            if terms:
                lines.append(f"$i={i}$ & ${join(terms, 'tex')}$ & {dims.get(i, 0)} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    for i, ss in sorted(h.by_degree.items()):
        terms = [f"{s.label} [{s.dim}]" for s in ss if s.dim]
        if terms:
            lines.append(f"H^{i} = {dims[i]}: " + join(terms))
    return "\n".join(lines) + "\n"


def render_gl4(h: GradedCohomology, fmt: str = "table") -> str:
    if fmt == "json":
        return dumps({"n": h.n, "dims": {str(i): d for i, d in h.dims().items()}, "h3": h.dim(3),
                      "summands": [s.to_json() for s in h.by_degree.get(3, [])]})
    line = sum(s.dim for s in h.by_degree.get(3, []) if s.kind == "line")
    cusp = h.dim(3) - line
    if fmt == "tex":
        terms = [s.label.render("tex") for s in h.by_degree.get(3, [])]
        return f"$H^3 = {join(terms, 'tex')}$ & {h.dim(3)} \\\\\n"
    return f"H^3 = {h.dim(3)} (line {line} + cusp {cusp})\n"


def render_boundary(result, fmt: str = "table") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    lines = []
    if fmt == "tex":
        lines.append("\\begin{tabular}{lll}")
        for i, ss in sorted(result.cohomology.by_degree.items()):
            terms = [s.label.render("tex") for s in ss if s.dim]
            if terms:
                lines.append(f"$i={i}$ & ${join(terms, 'tex')}$ & {sum(s.dim for s in ss)} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    lines.append(f"n = {result.n}")
    for (p, q), d in result.page.nonzero().items():
        lines.append(f"E2^{{{p},{q}}} = {d}")
    for i, ss in sorted(result.cohomology.by_degree.items()):
        terms = []
        for s in ss:
            if s.dim:
                tag = " ghost" if s in result.ghosts else ""
                terms.append(f"{s.label} [{s.dim}; {'+'.join(s.sources)}{tag}]")
        if terms:
            lines.append(f"H^{i}_boundary = {sum(s.dim for s in ss)}: " + join(terms))
    lines.append(f"ghost = {result.ghost_dim}")
    return "\n".join(lines) + "\n"


def render_theorem_table(rows, fmt: str = "table") -> str:
    if fmt == "json":
        return dumps([r.to_json() for r in rows])
    if fmt == "tex":
        body = [f"{r.exponent} & {r.n} & {r.residue} & {r.dim} \\\\" for r in rows]
        return "\n".join(["\\begin{tabular}{rrrr}", "$e$ & $n$ & $n \\bmod 12$ & $\\dim H^3$ \\\\", *body,
                          "\\end{tabular}"]) + "\n"
    body = [f"{r.exponent:>5} {r.n:>5} {r.residue:>4} {r.dim:>4}" for r in rows]
    return "\n".join([f"{'e':>5} {'n':>5} {'mod':>4} {'dim':>4}", *body]) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def tabular(rows, fmt: str = "table") -> str:
    if fmt == "tex":
        return "\\begin{tabular}{l}\n" + "".join(f"{r} \\\\\n" for r in rows) + "\\end{tabular}\n"
    if fmt == "json":
        return dumps(rows)
    return "".join(r + "\n" for r in rows)


GL4_COMPOSITIONS = {name: Composition(b) for name, b in [
    ("B", (1, 1, 1, 1)), ("P12", (2, 1, 1)), ("P23", (1, 2, 1)), ("P34", (1, 1, 2)),
    ("P13", (3, 1)), ("P12,34", (2, 2)), ("P24", (1, 3)),
]}
