"""Cech (Mayer-Vietoris) spectral sequence of the Borel-Serre boundary.

E_1^{p,q} is the sum of H^q(P) over the standard parabolics P with p+1 cuts.
d_1 is the alternating sum of restriction maps, computed atom by atom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .arithcoh import (CUSP, EIS, LINE, Atom, GradedCohomology, Part, parabolic_cohomology,
                       parabolic_name)
from .weights import Weight
from .weyl import Composition, Permutation, embed, factor_shuffle


class InvariantFailure(RuntimeError):
    """d o d != 0, or an inconsistency inside the spectral sequence."""


@dataclass(frozen=True)
class ZeroEdge:
    """Force the restriction of the line atom with shuffle v in row q along source -> target to vanish."""

    q: int
    shuffle: Permutation
    source: str
    target: str

    def __str__(self):
        return f"q={self.q} v={self.shuffle} {self.source}->{self.target}"


@dataclass(frozen=True)
class Cell:
    """One atom of E_1, with the parabolic and summand it came from."""

    parabolic: Composition
    summand: object
    atom: Atom

    @property
    def name(self) -> str:
        return parabolic_name(self.parabolic)

    @property
    def dim(self) -> int:
        return self.atom.dim


def cut_sets(rank: int, size: int) -> list[frozenset]:
    sets = [frozenset(c) for c in itertools.combinations(range(1, rank), size)]
    return sorted(sets, key=lambda s: tuple(sorted(s, reverse=True)), reverse=True)


def cech_sign(source_cuts, target_cuts) -> int:
    (j,) = set(target_cuts) - set(source_cuts)
    return -1 if sorted(target_cuts).index(j) % 2 else 1


def restrict_atom(atom: Atom, target: Composition):
    """Key of the image of an atom on a finer parabolic, or None if the image is zero."""
    m = target.rank
    cuts = target.cuts()
    v = atom.shuffle
    parts: list[Part] = []
    for part in atom.parts:
        if part.size == 1 or (part.start + 1) not in cuts:
            parts.append(part)
        elif part.kind == EIS:
            v = v * embed(Permutation("21"), m, part.start)
            parts += [Part(part.start, 1, LINE), Part(part.start + 1, 1, LINE)]
        else:
            return None
    return v, tuple(sorted(parts))


@dataclass
class CechSheet:
    lam: Weight
    columns: list[list[Composition]]
    cohomology: dict[str, GradedCohomology]
    zero_edges: frozenset = frozenset()
    cells: dict = field(default_factory=dict)  # (p, q) -> list[Cell]

    @property
    def rank(self) -> int:
        return self.lam.rank

    def column_of(self, c: Composition) -> int:
        return len(c.cuts()) - 1

    def degrees(self) -> list[int]:
        return sorted({q for (_, q) in self.cells})

    def e1_dim(self, p: int, q: int) -> int:
        return sum(c.dim for c in self.cells.get((p, q), []))

    def e1_dims(self) -> dict[tuple[int, int], int]:
        return {k: self.e1_dim(*k) for k in sorted(self.cells)}

    def differential(self, p: int, q: int, zero_edges=None) -> list[list[int]]:
        """Matrix of d_1 : E_1^{p,q} -> E_1^{p+1,q} on atoms (rows: targets)."""
        zero = self.zero_edges if zero_edges is None else zero_edges
        src = self.cells.get((p, q), [])
        tgt = self.cells.get((p + 1, q), [])
        index = {(c.name, c.atom.key): i for i, c in enumerate(tgt)}
        mat = [[0] * len(src) for _ in tgt]
        for j, cell in enumerate(src):
            for target in self.columns[p + 1] if p + 1 < len(self.columns) else []:
                if not target.refines(cell.parabolic):
                    continue
                tname = parabolic_name(target)
                if cell.atom.kind == LINE and ZeroEdge(q, cell.atom.shuffle, cell.name, tname) in zero:
                    continue
                key = restrict_atom(cell.atom, target)
                if key is None or (tname, key) not in index:
                    continue
                i = index[(tname, key)]
                if factor_shuffle(cell.summand.shuffle, tgt[i].summand.shuffle, cell.parabolic, target) is None:
                    continue
                if tgt[i].dim != cell.dim:
                    raise InvariantFailure(f"restriction changes dimension: {cell} -> {tgt[i]}")
                mat[i][j] = cech_sign(cell.parabolic.cuts(), target.cuts())
        return mat

    def check_d_squared(self, zero_edges=None, rows=None) -> None:
        for (p, q) in list(self.cells):
            if (rows is not None and q not in rows) or (p + 2, q) not in self.cells:
                continue
            d0 = self.differential(p, q, zero_edges)
            d1 = self.differential(p + 1, q, zero_edges)
            if d0 and d1 and not linalg.is_zero(linalg.matmul(d1, d0)):
                raise InvariantFailure(f"d o d != 0 in row q={q} from column {p}")


def build_sheet(lam: Weight, zero_edges=frozenset()) -> CechSheet:
    m = lam.rank
    columns = [[Composition.from_cuts(m, s) for s in cut_sets(m, k)] for k in range(1, m)]
    cohom = {}
    cells: dict = {}
    for p, col in enumerate(columns):
        for comp in col:
            h = parabolic_cohomology(comp, lam)
            cohom[parabolic_name(comp)] = h
            for q, summands in sorted(h.by_degree.items()):
                for s in summands:
                    for a in s.atoms:
                        cells.setdefault((p, q), []).append(Cell(comp, s, a))
    return CechSheet(lam, columns, cohom, frozenset(zero_edges), cells)


# --- E_2 ---------------------------------------------------------------------

def _dim_groups(cells) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(cells):
        if c.dim:
            groups.setdefault(c.dim, []).append(i)
    return groups


def _check_dim_blocks(mat, src, tgt) -> None:
    for i, row in enumerate(mat):
        for j, x in enumerate(row):
            if x and src[j].dim != tgt[i].dim:
                raise InvariantFailure("differential mixes atoms of different dimension")


def grouped_rank(mat, src, tgt) -> int:
    """Rank of the expanded differential, using that it is block scalar per atom dimension."""
    _check_dim_blocks(mat, src, tgt)
    total = 0
    for d in {c.dim for c in src if c.dim}:
        cols = [j for j, c in enumerate(src) if c.dim == d]
        rows = [i for i, c in enumerate(tgt) if c.dim == d]
        sub = [[mat[i][j] for j in cols] for i in rows]
        total += d * linalg.rank(sub, len(cols))
    return total


def expanded_rank(mat, src, tgt) -> int:
    """Rank of d_1 written out with a d x d identity block per atom entry."""
    rdims = [c.dim for c in tgt]
    cdims = [c.dim for c in src]
    big = []
    for i, row in enumerate(mat):
        for r in range(rdims[i]):
            line = []
            for j, x in enumerate(row):
                line += [x if (x and r == k) else 0 for k in range(cdims[j])]
            big.append(line)
    return linalg.rank(big, sum(cdims))


@dataclass(frozen=True)
class Survivor:
    """A basis class of E_2^{p,q}; one vector per atom-dimension block."""

    p: int
    q: int
    dim: int
    vector: tuple  # ((cell, coefficient), ...)

    @property
    def pivot(self) -> Cell:
        return self.vector[0][0]

    @property
    def label(self):
        return self.pivot.summand.label.marked(self.pivot.atom)

    @property
    def kind(self) -> str:
        return self.pivot.atom.kind

    @property
    def sources(self) -> tuple[str, ...]:
        seen = []
        for cell, _ in self.vector:
            if cell.name not in seen:
                seen.append(cell.name)
        return tuple(seen)

    @property
    def total_degree(self) -> int:
        return self.p + self.q

    def to_json(self) -> dict:
        return {"label": str(self.label), "p": self.p, "q": self.q, "dim": self.dim,
                "kind": self.kind, "sources": list(self.sources)}


@dataclass
class E2Page:
    sheet: CechSheet
    dims: dict  # (p, q) -> int
    survivors: dict  # (p, q) -> list[Survivor]
    ranks: dict  # (p, q) -> rank of d_1 out of (p, q)

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.dims.items()) if v}

    def d2_candidates(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        nz = self.nonzero()
        return [((p, q), (p + 2, q - 1)) for (p, q) in nz if (p + 2, q - 1) in nz]

    def total(self, k: int) -> int:
        return sum(d for (p, q), d in self.dims.items() if p + q == k)


def compute_e2(sheet: CechSheet, check: bool = True) -> E2Page:
    if check:
        sheet.check_d_squared()
    dims, survivors, ranks = {}, {}, {}
    for (p, q), cells in sorted(sheet.cells.items()):
        tgt = sheet.cells.get((p + 1, q), [])
        prev = sheet.cells.get((p - 1, q), [])
        d_out = sheet.differential(p, q) if tgt else []
        d_in = sheet.differential(p - 1, q) if prev else []
        r_out = grouped_rank(d_out, cells, tgt) if tgt else 0
        r_in = grouped_rank(d_in, prev, cells) if prev else 0
        ranks[(p, q)] = r_out
        dim = sum(c.dim for c in cells) - r_out - r_in
        if dim < 0:
            raise InvariantFailure(f"negative E_2 dimension at {(p, q)}")
        dims[(p, q)] = dim
        survivors[(p, q)] = _survivors(p, q, cells, d_out, d_in)
        if sum(s.dim for s in survivors[(p, q)]) != dim:
            raise InvariantFailure(f"survivor basis does not match E_2 dimension at {(p, q)}")
    return E2Page(sheet, dims, survivors, ranks)


def _survivors(p, q, cells, d_out, d_in) -> list[Survivor]:
    out = []
    for d, idx in sorted(_dim_groups(cells).items()):
        n = len(idx)
        rows_out = [[row[j] for j in idx] for row in d_out if any(row[j] for j in idx)]
        ker = linalg.kernel(rows_out, n)
        image = []
        if d_in:
            pos = {j: k for k, j in enumerate(idx)}
            for col in zip(*d_in):
                vec = [Fraction(0)] * n
                for j, x in enumerate(col):
                    if x and j in pos:
                        vec[pos[j]] = Fraction(x)
                if any(vec):
                    image.append(vec)
        basis = list(image)
        r = linalg.rank(basis, n)
        for v in ker:
            if linalg.rank(basis + [v], n) > r:
                basis.append(v)
                r += 1
                vector = tuple((cells[idx[k]], x) for k, x in enumerate(v) if x)
                out.append(Survivor(p, q, d, vector))
    return out


def boundary_from_page(page: E2Page) -> GradedCohomology:
    out = GradedCohomology("boundary", page.sheet.lam, None)
    for (p, q), svs in sorted(page.survivors.items()):
        for s in svs:
            out.add(p + q, s)
    return out


def boundary_from_sheet(sheet: CechSheet) -> GradedCohomology:
    return boundary_from_page(compute_e2(sheet))
