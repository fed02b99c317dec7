import pytest

from gl4coh import boundary as bmod
from gl4coh.arithcoh import CUSP
from gl4coh.boundary import (FREE_EDGES, IMPOSED_EDGE, VANISHING_CONFIG, ValidationMismatch, boundary_cohomology,
                             build_e1_sheet, gl4_cohomology, minimal_vanishing_configs, theorem_dim, theorem_table,
                             valid_vanishing_configs)
from gl4coh.spectral import compute_e2
from oracles import boundary_h3, cusp_dim_basis, gl4_h3


def test_e1_degree3_columns_n12():
    sheet = build_e1_sheet(12)
    assert [sheet.e1_dim(p, 3) for p in range(3)] == [8, 8, 2]
    assert sheet.e1_dim(2, 2) == 1


def test_nonzero_rows():
    for n in (6, 12, 14, 28, 100):
        assert {q for (p, q), d in build_e1_sheet(n).e1_dims().items() if d} <= {2, 3, 4, 6}


def test_n4_degree3_has_no_cusp_classes():
    sheet = build_e1_sheet(4)
    assert all(c.atom.kind != CUSP for c in sheet.cells[(0, 3)] if c.dim)


def test_e2_rows():
    page = compute_e2(build_e1_sheet(12))
    assert page.dim(1, 2) == cusp_dim_basis(10) == 0
    assert [page.dim(p, 3) for p in range(3)] == [2, 0, 0]
    page28 = compute_e2(build_e1_sheet(28))
    assert page28.sheet.e1_dim(0, 4) == page28.sheet.e1_dim(1, 4) == 1
    assert page28.dim(0, 4) == page28.dim(1, 4) == 0


def test_survivor_attribution():
    (line,) = [s for s in compute_e2(build_e1_sheet(12)).survivors[(0, 3)] if s.kind == "line"]
    assert str(line.label) == "(0|0|0|12)"
    assert "P24" in line.sources


def test_ghost_label():
    b = boundary_cohomology(14)
    (ghost,) = b.ghosts
    assert str(ghost.label) == "(11,1‾|0|2)" and ghost.sources == ("P12",) and (ghost.p, ghost.q) == (1, 2)


@pytest.mark.parametrize("n, dim, ghost", [(12, 2, 0), (28, 4, 1)])
def test_boundary_examples(n, dim, ghost):
    b = boundary_cohomology(n)
    assert b.dims() == {3: dim} and b.ghost_dim == ghost


def test_n4_boundary():
    # degree 3 matches; H^*(GL_2(Z), det) = 0 leaves two further Borel classes alive
    b = boundary_cohomology(4)
    assert b.dims() == {3: 1, 4: 1, 8: 1}
    assert b.d2_candidates == [((0, 3), (2, 2))]
    assert [str(s.label) for s in b.cohomology.by_degree[3]] == ["(0|0|0|4)"]


def test_boundary_sweep():
    for n in range(6, 201, 2):
        b = boundary_cohomology(n)
        assert b.dims() == {3: boundary_h3(n)}, n
        assert b.ghost_dim == cusp_dim_basis(n - 2)
        sheet = b.page.sheet
        for q in sheet.degrees():
            assert sum((-1) ** p * (sheet.e1_dim(p, q) - b.page.dim(p, q)) for p in range(3)) == 0


def test_gl4_sweep():
    for n in range(4, 405):
        assert gl4_cohomology(n).dim(3) == gl4_h3(n) == theorem_dim(n - 4), n


@pytest.mark.parametrize("n, dim", [(12, 2), (14, 1), (4, 1), (13, 0)])
def test_gl4_examples(n, dim):
    assert gl4_cohomology(n).dim(3) == dim


def test_gl4_validation(monkeypatch):
    monkeypatch.setattr(bmod, "chi_gl4", lambda n: 0)
    with pytest.raises(ValidationMismatch):
        gl4_cohomology(12)


def test_theorem_table():
    rows = {r.exponent: r.dim for r in theorem_table(40)}
    assert rows[8] == 2 and rows[0] == 1 and rows[7] == 0
    with pytest.raises(ValueError):
        theorem_table(2)


@pytest.mark.parametrize("n", [4, 12, 28])
def test_vanishing_configuration_is_forced(n):
    sheet = build_e1_sheet(n, check=False)
    assert minimal_vanishing_configs(sheet) == [VANISHING_CONFIG]
    # without the imposed edge the label kernel is trivial: nothing survives in column 0
    assert frozenset({IMPOSED_EDGE}) not in valid_vanishing_configs(sheet)
    assert all(IMPOSED_EDGE in z for z in valid_vanishing_configs(sheet))
    assert len(FREE_EDGES) == 3


def test_json_schema():
    data = boundary_cohomology(12).to_json()
    assert list(data) == ["n", "h3", "ghost", "boundary"]
    assert data["n"] == 12 and data["h3"] == 2 and data["ghost"] == 0
    assert {r["label"] for r in data["boundary"]["3"]} == {"(0|0|0|12)", "(9,-1‾|2|2)"}


def test_odd_n_rejected():
    with pytest.raises(ValueError):
        build_e1_sheet(13)
