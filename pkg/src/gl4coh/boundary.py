"""Boundary cohomology of GL_4(Z) and the final H^*(GL_4(Z), S^{n-4}V_4 (x) det)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from . import linalg
from .arithcoh import LINE, GradedCohomology
from .euler import chi_gl4
from .gl2coh import cusp_dim
from .spectral import (CechSheet, E2Page, InvariantFailure, ZeroEdge, boundary_from_page, build_sheet,
                       compute_e2)
from .weights import SymStd, Weight, module_to_weight
from .weyl import Permutation

GL4_VCD = 6
LABEL_SHUFFLE = Permutation("2341")  # w.lambda = (0|0|0|n)

# Row q=3, label (0|0|0|n): restrictions forced to vanish (see check_vanishing_config).
VANISHING_CONFIG = frozenset({
    ZeroEdge(3, LABEL_SHUFFLE, "P13", "P12"),
    ZeroEdge(3, LABEL_SHUFFLE, "P23", "B"),
})
# P13 -> P12 is imposed, P12 -> B must survive; the rest is decided by the check.
IMPOSED_EDGE = ZeroEdge(3, LABEL_SHUFFLE, "P13", "P12")
KEPT_EDGE = ZeroEdge(3, LABEL_SHUFFLE, "P12", "B")
FREE_EDGES = (
    ZeroEdge(3, LABEL_SHUFFLE, "P13", "P23"),
    ZeroEdge(3, LABEL_SHUFFLE, "P24", "P23"),
    ZeroEdge(3, LABEL_SHUFFLE, "P23", "B"),
)
SURVIVOR_HOME = "P24"


class ValidationMismatch(RuntimeError):
    """The spectral route and the Euler characteristic route disagree."""


def gl4_weight(n: int) -> Weight:
    return module_to_weight(SymStd(4, n - 4, 1))


def _check_n(n: int) -> None:
    if n < 4:
        raise ValueError("n must be >= 4")
    if n % 2:
        raise ValueError("n must be even")


def _config_is_valid(sheet: CechSheet, zero) -> bool:
    try:
        sheet.check_d_squared(zero, rows=(3,))
    except InvariantFailure:
        return False
    cells = sheet.cells.get((0, 3), [])
    label = [j for j, c in enumerate(cells) if c.atom.kind == LINE and c.atom.shuffle == LABEL_SHUFFLE]
    if not label:
        return True
    d = sheet.differential(0, 3, zero)
    rows = [[row[j] for j in label] for row in d]
    home = [k for k, j in enumerate(label) if cells[j].name == SURVIVOR_HOME]
    ker = linalg.kernel([r for r in rows if any(r)], len(label))
    if not ker or not home:
        return False
    # no nonzero kernel vector may avoid the P24 copy
    pinned = rows + [[Fraction(int(k == h)) for k in range(len(label))] for h in home]
    return not linalg.kernel([r for r in pinned if any(r)], len(label))


def valid_vanishing_configs(sheet: CechSheet) -> list[frozenset]:
    out = []
    for k in range(len(FREE_EDGES) + 1):
        for extra in itertools.combinations(FREE_EDGES, k):
            zero = frozenset({IMPOSED_EDGE, *extra})
            if _config_is_valid(sheet, zero):
                out.append(zero)
    return out


def minimal_vanishing_configs(sheet: CechSheet) -> list[frozenset]:
    valid = valid_vanishing_configs(sheet)
    return [z for z in valid if not any(o < z for o in valid)]


def check_vanishing_config(sheet: CechSheet) -> None:
    minimal = minimal_vanishing_configs(sheet)
    if minimal != [VANISHING_CONFIG]:
        raise InvariantFailure(f"vanishing configuration is not forced: minimal choices {[sorted(map(str, z)) for z in minimal]}")
    if KEPT_EDGE in VANISHING_CONFIG:
        raise InvariantFailure("P12 -> B must stay an isomorphism on the label")


def build_e1_sheet(n: int, check: bool = True) -> CechSheet:
    _check_n(n)
    sheet = build_sheet(gl4_weight(n), VANISHING_CONFIG)
    if check:
        check_vanishing_config(sheet)
    return sheet


@dataclass
class BoundaryResult:
    n: int
    page: E2Page
    cohomology: GradedCohomology
    ghosts: list

    @property
    def d2_candidates(self) -> list:
        """Pairs of nonzero E_2 cells joined by a d_2 arrow; the collapse at E_2 is assumed."""
        return self.page.d2_candidates()

    @property
    def ghost_dim(self) -> int:
        return sum(s.dim for s in self.ghosts)

    def dims(self) -> dict[int, int]:
        return self.cohomology.dims()

    def to_json(self) -> dict:
        deg = {str(i): [s.to_json() for s in ss if s.dim] for i, ss in sorted(self.cohomology.by_degree.items())}
        return {"n": self.n, "h3": self.cohomology.dim(3), "ghost": self.ghost_dim,
                "boundary": {k: v for k, v in deg.items() if v}}


@lru_cache(maxsize=1024)
def boundary_cohomology(n: int) -> BoundaryResult:
    page = compute_e2(build_e1_sheet(n))
    coh = boundary_from_page(page)
    coh.n = n
    ghosts = [s for s in coh.by_degree.get(3, []) if s.p >= 1]
    return BoundaryResult(n, page, coh, ghosts)


def gl4_cohomology(n: int) -> GradedCohomology:
    """H^*(GL_4(Z), S^{n-4}V_4 (x) det): the non-ghost part of H^3 of the boundary."""
    if n < 4:
        raise ValueError("n must be >= 4")
    out = GradedCohomology("GL4", gl4_weight(n), n)
    if n % 2:
        return out
    b = boundary_cohomology(n)
    for s in b.cohomology.by_degree.get(3, []):
        if s.p == 0 and s.dim:
            out.add(3, s)
    # every other degree up to the vcd is pinned by the Euler relation
    chi = chi_gl4(n)
    if out.euler() != chi:
        raise ValidationMismatch(f"n={n}: spectral H^3 = {out.dim(3)} but -chi = {-chi}")
    return out


def theorem_dim(exponent: int) -> int:
    """Closed form for dim H^3(GL_4(Z), S^e V_4 (x) det)."""
    if exponent % 2:
        return 0
    n_t, k = divmod(exponent + 4, 12)
    return n_t if k == 2 else n_t + 1


@dataclass(frozen=True)
class TheoremRow:
    exponent: int
    n: int
    residue: int
    dim: int

    def to_json(self) -> dict:
        return {"exponent": self.exponent, "n": self.n, "residue": self.residue, "dim": self.dim}


def theorem_table(n_max: int, compute: bool = True) -> list[TheoremRow]:
    """Rows for n = exponent + 4 <= n_max; the computed dims must match the closed form."""
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    rows = []
    for n in range(4, n_max + 1):
        e = n - 4
        dim = gl4_cohomology(n).dim(3) if compute else theorem_dim(e)
        if dim != theorem_dim(e):
            raise ValidationMismatch(f"exponent {e}: computed {dim}, closed form {theorem_dim(e)}")
        rows.append(TheoremRow(e, n, n % 12, dim))
    return rows


def expected_boundary_dim(n: int) -> int:
    return 1 + cusp_dim(n) + cusp_dim(n - 2)


def diagram(sheet: CechSheet, page: E2Page | None = None) -> str:
    """The cover's hexagon as a DOT graph, nodes annotated with per-degree dims."""
    lines = ["digraph boundary {", "  rankdir=LR;"]
    for p, col in enumerate(sheet.columns):
        for comp in col:
            name = sheet_name(comp)
            dims = sheet.cohomology[name].dims()
            text = " ".join(f"H{q}={d}" for q, d in dims.items() if d) or "0"
            lines.append(f'  "{name}" [label="{name}\\n{text}", rank={p}];')
    for p in range(len(sheet.columns) - 1):
        for src in sheet.columns[p]:
            for tgt in sheet.columns[p + 1]:
                if tgt.refines(src):
                    lines.append(f'  "{sheet_name(src)}" -> "{sheet_name(tgt)}";')
    if page is not None:
        for (p, q), d in page.nonzero().items():
            lines.append(f'  // E2^{{{p},{q}}} = {d}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sheet_name(comp) -> str:
    from .arithcoh import parabolic_name
    return parabolic_name(comp)
