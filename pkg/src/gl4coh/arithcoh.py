"""Labeled cohomology of Levi quotients, parabolic subgroups and GL_3(Z).

Every class is tracked down to *atoms*: a refined shuffle v (the Kostant
shuffle composed with any inner GL_3 shuffle), a list of parts saying which
positions carry a line, a GL_2 Eisenstein class or a GL_2 cuspidal block, and
a dimension for the concrete n. Restriction maps in the boundary spectral
sequence act atom by atom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from .gl2coh import gl2_cohomology
from .kostant import kostant_decompose
from .weights import Weight, dot_action, minus_identity_sign
from .weyl import Composition, Permutation, embed

LINE, EIS, CUSP = "line", "eis", "cusp"
GL3_VCD = 3


class AxiomViolation(RuntimeError):
    """A structural fact used by the GL_3 solver failed to hold numerically."""


@dataclass(frozen=True, order=True)
class Part:
    start: int  # 0-based position
    size: int
    kind: str

    def shifted(self, offset: int) -> Part:
        return Part(self.start + offset, self.size, self.kind)


@dataclass(frozen=True)
class Atom:
    shuffle: Permutation
    parts: tuple[Part, ...]
    dim: int

    @property
    def kind(self) -> str:
        kinds = {p.kind for p in self.parts}
        if CUSP in kinds:
            return CUSP
        return EIS if EIS in kinds else LINE

    @property
    def key(self):
        return (self.shuffle, self.parts)


@dataclass(frozen=True)
class LabelBlock:
    entries: tuple[int, ...]
    overline: bool = False


@dataclass(frozen=True)
class Label:
    blocks: tuple[LabelBlock, ...]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b.entries)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(b.entries) for b in self.blocks)

    def marked(self, atom) -> Label:
        """Overline exactly the GL_2 blocks that carry a cusp part of the atom."""
        cusp = {p.start for p in atom.parts if p.size == 2 and p.kind == CUSP}
        out, start = [], 0
        for b in self.blocks:
            out.append(LabelBlock(b.entries, b.overline or (len(b.entries) == 2 and start in cusp)))
            start += len(b.entries)
        return Label(tuple(out))

    def render(self, fmt: str = "table", entry_text=None) -> str:
        entry_text = entry_text or (lambda i, x: str(x))
        out, i = [], 0
        for b in self.blocks:
            texts = []
            for x in b.entries:
                texts.append(entry_text(i, x))
                i += 1
            body = ",".join(texts)
            if b.overline:
                body = f"\\overline{{{body}}}" if fmt == "tex" else body + "‾"
            out.append(body)
        return "(" + "|".join(out) + ")"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class FactorClass:
    """One cohomology class (family) of a single Levi factor GL_k(Z)."""

    degree: int
    shuffle: Permutation  # inner shuffle, identity unless the class is born on a smaller parabolic
    label: tuple[LabelBlock, ...]
    variants: tuple[tuple[tuple[Part, ...], int], ...]  # (parts relative to the block, dim)
    home: str = ""  # inner parabolic the class lives on, for GL_3 classes

    @property
    def dim(self) -> int:
        return sum(d for _, d in self.variants)


@dataclass(frozen=True)
class LabeledSummand:
    total_degree: int
    kostant_degree: int
    levi_degrees: tuple[int, ...]
    parabolic: Composition
    shuffle: Permutation
    factors: tuple[Weight, ...]
    label: Label
    atoms: tuple[Atom, ...]
    inner: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.atoms)

    def atom_dims(self) -> dict[str, int]:
        out = {LINE: 0, EIS: 0, CUSP: 0}
        for a in self.atoms:
            out[a.kind] += a.dim
        return out

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "degree": self.total_degree,
            "kostant_degree": self.kostant_degree,
            "levi_degrees": list(self.levi_degrees),
            "shuffle": str(self.shuffle),
            "parabolic": parabolic_name(self.parabolic),
            "dim": self.dim,
            "atoms": self.atom_dims(),
        }


@dataclass
class GradedCohomology:
    group: str
    coefficient: Weight | None
    n: int | None
    by_degree: dict[int, list] = field(default_factory=dict)

    def dims(self) -> dict[int, int]:
        return {i: sum(s.dim for s in ss) for i, ss in sorted(self.by_degree.items()) if ss}

    def dim(self, i: int) -> int:
        return sum(s.dim for s in self.by_degree.get(i, []))

    def euler(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims().items())

    def degrees(self) -> list[int]:
        return [i for i, ss in sorted(self.by_degree.items()) if ss]

    def add(self, degree: int, summand) -> None:
        self.by_degree.setdefault(degree, []).append(summand)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "coefficient": self.coefficient.to_json() if self.coefficient else None,
            "n": self.n,
            "degrees": {str(i): [s.to_json() for s in ss] for i, ss in sorted(self.by_degree.items()) if ss},
            "dims": {str(i): d for i, d in self.dims().items()},
        }


def parabolic_name(c: Composition) -> str:
    if all(b == 1 for b in c.blocks):
        return "B"
    if len(c.blocks) == 1:
        return f"GL{c.rank}"
    spans = []
    for r, b in zip(c.ranges(), c.blocks):
        if b > 1:
            spans.append(f"{r[0]}{r[-1]}")
    return "P" + ",".join(spans)


def composition_from_name(name: str, rank: int) -> Composition:
    for c in all_compositions(rank):
        if parabolic_name(c) == name:
            return c
    raise ValueError(f"unknown parabolic {name} for rank {rank}")


def all_compositions(rank: int) -> list[Composition]:
    out = []
    for k in range(rank):
        for cuts in itertools.combinations(range(1, rank), k):
            out.append(Composition.from_cuts(rank, cuts))
    return out


# --- factor cohomology -------------------------------------------------------

def _lines(entries) -> tuple[LabelBlock, ...]:
    return tuple(LabelBlock((x,)) for x in entries)


def _line_parts(size: int) -> tuple[Part, ...]:
    return tuple(Part(i, 1, LINE) for i in range(size))


def gl1_classes(a: int) -> list[FactorClass]:
    if a % 2:
        return []
    return [FactorClass(0, Permutation.identity(1), _lines([a]), ((_line_parts(1), 1),))]


def gl2_classes(a: int, b: int) -> list[FactorClass]:
    h = gl2_cohomology(a, b)
    out = []
    if h.h0:
        out.append(FactorClass(0, Permutation.identity(2), _lines([a, b]), ((_line_parts(2), 1),)))
    if h.h1_eis or h.h1_cusp:
        variants = []
        if a % 2:
            variants.append(((Part(0, 2, EIS),), h.h1_eis))
        variants.append(((Part(0, 2, CUSP),), h.h1_cusp))
        out.append(FactorClass(1, Permutation.identity(2), (LabelBlock((a, b)),), tuple(variants)))
    elif (a + b) % 2 == 0 and a > b:
        # structurally present, zero-dimensional cusp space
        out.append(FactorClass(1, Permutation.identity(2), (LabelBlock((a, b)),), (((Part(0, 2, CUSP),), 0),)))
    return out


def factor_classes(w: Weight) -> list[FactorClass]:
    if w.rank == 1:
        return gl1_classes(w[0])
    if w.rank == 2:
        return gl2_classes(w[0], w[1])
    if w.rank == 3:
        return list(gl3_factor_classes(w.entries))
    raise ValueError("Levi factors have rank <= 3")


# --- GL_3 -------------------------------------------------------------------

GL3_FAMILIES = ("L[0,0,0]", "L[n-3,1,0]", "L[n-2,2,2]", "L[n-2,1,1]")

P12_GL3 = Composition((2, 1))
P23_GL3 = Composition((1, 2))


def central_character_eval(parabolic, w: Weight) -> int:
    """Character of the central torus of a maximal parabolic of gl_3 on the weight w."""
    if w.rank != 3:
        raise ValueError("central characters are defined for gl_3 weights")
    name = parabolic if isinstance(parabolic, str) else parabolic_name(parabolic)
    a1, a2, a3 = w
    if name == "P12":
        return a1 + a2 - 2 * a3  # diag(t, t, t^-2)
    if name == "P23":
        return 2 * a1 - a2 - a3  # diag(t^2, t^-1, t^-1)
    raise ValueError(f"no central torus for {name}")


def gl3_family_weight(family: str, n: int) -> Weight:
    table = {
        "L[0,0,0]": [0, 0, 0],
        "L[n-3,1,0]": [n - 3, 1, 0],
        "L[n-2,2,2]": [n - 2, 2, 2],
        "L[n-2,1,1]": [n - 2, 1, 1],
    }
    if family not in table:
        raise ValueError(f"unsupported GL_3 family {family}")
    return Weight(table[family])


def classify_gl3_weight(lam: Weight) -> tuple[str, int]:
    """(family, n) of a GL_3 weight after removing det^2 twists, which are trivial on GL_3(Z)."""
    a, b, c = lam
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if (a + b + c) % 2:
        raise ValueError(f"{lam}: -I acts by -1")
    t = c - c % 2
    a, b, c = a - t, b - t, c - t
    if (a, b, c) == (0, 0, 0):
        return "L[0,0,0]", 4
    if (b, c) == (0, 0):
        return "L[n-2,2,2]", a + 4
    if (b, c) == (1, 0):
        return "L[n-3,1,0]", a + 3
    if (b, c) == (1, 1):
        return "L[n-2,1,1]", a + 2
    raise ValueError(f"unsupported GL_3 coefficient {lam}")


def _inner_class(degree: int, u: str, lam: Weight, comp: Composition, h1_kind: str | None = None) -> FactorClass:
    """A GL_3 class born on the inner parabolic comp via inner shuffle u."""
    u = Permutation(u)
    mu = dot_action(u, lam)
    blocks, parts = [], []
    for start, size in zip(comp.starts(), comp.blocks):
        entries = mu.entries[start:start + size]
        if size == 1:
            blocks.append(LabelBlock(entries))
            parts.append(Part(start, 1, LINE))
        else:
            blocks.append(LabelBlock(entries, overline=(h1_kind == CUSP)))
            parts.append(Part(start, 2, h1_kind))
    if h1_kind == CUSP:
        (gl2_block,) = [b for b in blocks if len(b.entries) == 2]
        dim = gl2_cohomology(*gl2_block.entries).h1_cusp
    else:
        dim = 1
    return FactorClass(degree, u, tuple(blocks), ((tuple(parts), dim),), home=parabolic_name(comp))


# the candidate H^2 summands on each side, as (inner shuffle, inner parabolic, kind)
_SIDES = {
    "L[n-3,1,0]": {"P12": [("132", P12_GL3, CUSP)], "P23": [("213", P23_GL3, CUSP)]},
    "L[n-2,1,1]": {"P12": [("132", P12_GL3, CUSP), ("231", Composition((1, 1, 1)), LINE)],
                   "P23": [("213", P23_GL3, CUSP)]},
}
# the summand whose weight is evaluated on the central torus
_LEADING = {"P12": "132", "P23": "213"}


def _select_side(family: str, lam: Weight) -> str:
    chars = {side: central_character_eval(side, dot_action(Permutation(_LEADING[side]), lam)) for side in ("P12", "P23")}
    # the summand entering Eisenstein cohomology has the higher central character
    return "P12" if chars["P12"] > chars["P23"] else "P23"


@lru_cache(maxsize=None)
def gl3_factor_classes(entries: tuple[int, ...]) -> tuple[FactorClass, ...]:
    lam = Weight(entries)
    if minus_identity_sign(lam) == -1:
        return ()
    family, n = classify_gl3_weight(lam)
    if family == "L[0,0,0]":
        return (FactorClass(0, Permutation.identity(3), _lines(lam.entries), ((_line_parts(3), 1),), home="GL3"),)
    if family == "L[n-2,2,2]":
        return (_inner_class(3, "312", lam, P23_GL3, CUSP),)
    side = _select_side(family, lam)
    out = [_inner_class(2, u, lam, comp, kind) for u, comp, kind in _SIDES[family][side]]
    if family == "L[n-3,1,0]":
        out.append(_inner_class(3, "312", lam, P23_GL3, CUSP))
    return tuple(out)


def gl3_cohomology(family, n: int | None = None, check: bool = True) -> GradedCohomology:
    """H^*(GL_3(Z), L) for the four supported families (or any weight equivalent to one)."""
    if isinstance(family, Weight):
        lam = family
        n = n if n is not None else classify_gl3_weight(lam)[1]
    else:
        if n is None or n % 2 or n < 4:
            raise ValueError("n must be even and >= 4")
        lam = gl3_family_weight(family, n)
    out = GradedCohomology("GL3", lam, n)
    ident = Composition((3,))
    for fc in gl3_factor_classes(lam.entries):
        out.add(fc.degree, _assemble(ident, Permutation.identity(3), 0, (lam,), (fc,)))
    if check and minus_identity_sign(lam) == 1:
        check_gl3_axioms(lam, out)
    return out


def check_gl3_axioms(lam: Weight, result: GradedCohomology) -> None:
    """Cross-check a GL_3 answer against the boundary cohomology and Euler characteristic."""
    from .euler import chi_gl3, gl3_descriptor
    from .spectral import boundary_from_sheet, build_sheet

    family, n = classify_gl3_weight(lam)
    bdry = boundary_from_sheet(build_sheet(lam)).dims()
    dims = result.dims()
    if dims.get(1, 0):
        raise AxiomViolation("H^1(GL_3(Z), V) must vanish")
    for i, d in dims.items():
        if i > GL3_VCD or d > bdry.get(i, 0):
            raise AxiomViolation(f"degree {i}: {d} classes but boundary has {bdry.get(i, 0)}")
    if family in _SIDES and n > 5:
        # the Eisenstein part is half of the competing boundary degree
        if 2 * dims.get(2, 0) != bdry.get(2, 0):
            raise AxiomViolation(f"half-dimension rule fails for {lam}: {dims} vs boundary {bdry}")
    if n >= 6 or family == "L[0,0,0]":
        chi = chi_gl3(gl3_descriptor(lam))
        if result.euler() != chi:
            raise AxiomViolation(f"Euler characteristic {result.euler()} != trace formula {chi} for {lam}")


# --- assembly ----------------------------------------------------------------

def _assemble(comp: Composition, w: Permutation, kdeg: int, weights, classes) -> LabeledSummand:
    m = comp.rank
    offsets = comp.starts()
    u_total = Permutation.identity(m)
    for off, fc in zip(offsets, classes):
        u_total = u_total * embed(fc.shuffle, m, off)
    v = w * u_total
    atoms = []
    for combo in itertools.product(*(fc.variants for fc in classes)):
        parts = tuple(sorted(p.shifted(off) for off, (ps, _) in zip(offsets, combo) for p in ps))
        atoms.append(Atom(v, parts, prod(d for _, d in combo)))
    label = Label(tuple(b for fc in classes for b in fc.label))
    levi_degrees = tuple(fc.degree for fc in classes)
    return LabeledSummand(kdeg + sum(levi_degrees), kdeg, levi_degrees, comp, w, tuple(weights),
                          label, tuple(atoms), tuple(fc.home for fc in classes))


def levi_classes(levi: Composition, block_weights) -> list[tuple[FactorClass, ...]]:
    block_weights = [w if isinstance(w, Weight) else Weight(w) for w in block_weights]
    if [w.rank for w in block_weights] != list(levi.blocks):
        raise ValueError("block weights do not match the Levi blocks")
    # -I of any factor acting by -1 kills the whole Kunneth product
    if any(minus_identity_sign(w) == -1 for w in block_weights):
        return []
    per_factor = [factor_classes(w) for w in block_weights]
    return list(itertools.product(*per_factor))


def levi_cohomology(levi: Composition, block_weights, n: int | None = None) -> GradedCohomology:
    block_weights = [w if isinstance(w, Weight) else Weight(w) for w in block_weights]
    flat = Weight([x for w in block_weights for x in w])
    out = GradedCohomology(f"M_{parabolic_name(levi)}", flat, n)
    ident = Permutation.identity(levi.rank)
    for classes in levi_classes(levi, block_weights):
        s = _assemble(levi, ident, 0, block_weights, classes)
        out.add(s.total_degree, s)
    return out


class DegenerationError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _parabolic_cohomology(blocks: tuple[int, ...], entries: tuple[int, ...], n) -> GradedCohomology:
    parabolic, lam = Composition(blocks), Weight(entries)
    out = GradedCohomology(parabolic_name(parabolic), lam, n)
    occupied = {}
    for ks in kostant_decompose(parabolic, lam).summands:
        bw = ks.block_weights()
        for classes in levi_classes(parabolic, bw):
            s = _assemble(parabolic, ks.shuffle, ks.degree, bw, classes)
            assert dot_action(s.atoms[0].shuffle, lam).entries == s.label.flat(), s
            out.add(s.total_degree, s)
            if s.dim:
                occupied[(sum(s.levi_degrees), ks.degree)] = True
    for (p, q) in occupied:
        if (p + 2, q - 1) in occupied:
            raise DegenerationError(f"{parabolic_name(parabolic)}: possible d_2 from E_2^{{{p},{q}}}")
    return out


def parabolic_cohomology(parabolic: Composition, lam: Weight, n: int | None = None) -> GradedCohomology:
    """Hochschild-Serre assembly H^p(M_P, H^q(N_P, V)), which degenerates at E_2 here."""
    if lam.rank != parabolic.rank:
        raise ValueError("rank mismatch")
    return _parabolic_cohomology(parabolic.blocks, lam.entries, n)
