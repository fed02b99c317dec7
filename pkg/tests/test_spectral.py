import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gl4coh import linalg
from gl4coh.arithcoh import CUSP, EIS, LINE, Atom, Part
from gl4coh.boundary import build_e1_sheet
from gl4coh.spectral import cech_sign, cut_sets, expanded_rank, grouped_rank, restrict_atom
from gl4coh.weyl import Composition, Permutation

matrices = st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                                                        min_size=1, max_size=5))


@given(matrices)
def test_rank_nullity(m):
    ncols = len(m[0])
    ker = linalg.kernel(m, ncols)
    assert linalg.rank(m, ncols) + len(ker) == ncols
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


def test_cover_ordering():
    assert [sorted(s) for s in cut_sets(4, 1)] == [[3], [2], [1]]
    assert [sorted(s) for s in cut_sets(4, 2)] == [[2, 3], [1, 3], [1, 2]]


def test_squares_anticommute():
    for s in map(frozenset, [set(), {1}, {2}, {3}]):
        for i, j in itertools.combinations(sorted({1, 2, 3} - s), 2):
            a, b, ab = s | {i}, s | {j}, s | {i, j}
            if s:
                assert cech_sign(s, a) * cech_sign(a, ab) + cech_sign(s, b) * cech_sign(b, ab) == 0


def test_restriction_rules():
    v = Permutation("1234")
    borel = Composition((1, 1, 1, 1))
    eis = Atom(v, (Part(0, 2, EIS), Part(2, 1, LINE), Part(3, 1, LINE)), 1)
    assert restrict_atom(eis, borel) == (Permutation("2134"), tuple(Part(i, 1, LINE) for i in range(4)))
    cusp = Atom(v, (Part(0, 2, CUSP), Part(2, 1, LINE), Part(3, 1, LINE)), 3)
    assert restrict_atom(cusp, borel) is None
    assert restrict_atom(cusp, Composition((2, 1, 1))) == (v, cusp.parts)


@pytest.mark.parametrize("n", [4, 12, 28, 40])
def test_grouped_rank_equals_expanded_rank(n):
    sheet = build_e1_sheet(n)
    for (p, q), cells in sheet.cells.items():
        tgt = sheet.cells.get((p + 1, q))
        if tgt:
            d = sheet.differential(p, q)
            assert grouped_rank(d, cells, tgt) == expanded_rank(d, cells, tgt)


@pytest.mark.parametrize("n", [6, 12, 28])
def test_gl3_boundary_trivial_coefficients_is_self_dual(n):
    # the boundary is a closed 4-dimensional orbifold: H^0 and H^4 pair
    from gl4coh.arithcoh import gl3_family_weight
    from gl4coh.spectral import boundary_from_sheet, build_sheet
    sheet = build_sheet(gl3_family_weight("L[0,0,0]", n))
    assert boundary_from_sheet(sheet).dims() == {0: 1, 4: 1}
