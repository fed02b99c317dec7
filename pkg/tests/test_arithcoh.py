import pytest
from hypothesis import given, settings, strategies as st

from gl4coh.arithcoh import (CUSP, EIS, GL3_FAMILIES, LINE, AxiomViolation, GradedCohomology, central_character_eval,
                             classify_gl3_weight, gl3_cohomology, gl3_family_weight, levi_cohomology,
                             parabolic_cohomology, parabolic_name)
from gl4coh.boundary import gl4_weight
from gl4coh.euler import chi_gl3, gl3_descriptor
from gl4coh.invariants import check_parabolic_euler
from gl4coh.render import GL4_COMPOSITIONS, join
from gl4coh.weights import Weight
from gl4coh.weyl import Composition
from oracles import cusp_dim_basis


def test_levi_all_even_line():
    h = levi_cohomology(Composition((1, 1, 1, 1)), [[0], [10], [0], [2]], 12)
    assert h.dims() == {0: 1}
    (s,) = h.by_degree[0]
    assert {a.kind for a in s.atoms} == {LINE}


def test_levi_gl2_block():
    h = levi_cohomology(Composition((2, 1, 1)), [[9, 1], [0], [2]], 12)
    (s,) = h.by_degree[1]
    assert s.atom_dims() == {LINE: 0, EIS: 1, CUSP: cusp_dim_basis(10)}


def test_levi_odd_line_kills():
    assert levi_cohomology(Composition((1, 2, 1)), [[9], [1, 0], [2]], 12).dims() == {}


@pytest.mark.parametrize("name, dims", [
    ("B", {2: 1, 3: 2, 6: 1}),
    ("P13", {3: 1 + cusp_dim_basis(12), 4: cusp_dim_basis(10)}),
    ("P12,34", {3: 4}),
    ("P24", {3: 1 + cusp_dim_basis(12), 6: cusp_dim_basis(10)}),
])
def test_parabolic_dims_n12(name, dims):
    assert parabolic_cohomology(GL4_COMPOSITIONS[name], gl4_weight(12)).dims() == dims


def test_p13_labels():
    h = parabolic_cohomology(GL4_COMPOSITIONS["P13"], gl4_weight(12))
    assert join([str(s.label) for s in reversed(h.by_degree[3])]) == "(0|0|0|12) ⊕ (9,-1‾|2|2)"


@pytest.mark.parametrize("n", [4, 12, 28])
def test_summand_invariants(n):
    for c in GL4_COMPOSITIONS.values():
        for i, ss in parabolic_cohomology(c, gl4_weight(n)).by_degree.items():
            for s in ss:
                assert s.total_degree == i == s.kostant_degree + sum(s.levi_degrees)
                assert s.dim == sum(a.dim for a in s.atoms)
                assert all(a.dim <= 1 for a in s.atoms if a.kind != CUSP)
                assert 0 <= i <= 6


def test_parabolic_euler_multiplicativity():
    assert check_parabolic_euler(6, 100).ok


@pytest.mark.parametrize("fam, n, dims", [
    ("L[n-3,1,0]", 12, {2: 1, 3: 0}),
    ("L[0,0,0]", 12, {0: 1}),
    ("L[n-2,1,1]", 12, {2: 2}),
    ("L[n-2,2,2]", 14, {3: 1}),
])
def test_gl3_examples(fam, n, dims):
    assert gl3_cohomology(fam, n).dims() == dims


def test_gl3_small_weight():
    h = gl3_cohomology("L[n-3,1,0]", 4)
    assert sum(h.dims().values()) == 0


@pytest.mark.parametrize("fam", GL3_FAMILIES)
def test_gl3_against_cusp_oracle(fam):
    for n in range(6, 201, 2):
        h = gl3_cohomology(fam, n)
        s, s2 = cusp_dim_basis(n), cusp_dim_basis(n - 2)
        expected = {
            "L[0,0,0]": {0: 1},
            "L[n-3,1,0]": {2: s, 3: s2},
            "L[n-2,2,2]": {3: s2},
            "L[n-2,1,1]": {2: 1 + s},
        }[fam]
        assert {i: d for i, d in h.dims().items() if d} == {i: d for i, d in expected.items() if d}
        assert h.euler() == chi_gl3(gl3_descriptor(gl3_family_weight(fam, n)))


def test_gl3_weight_normalization():
    assert classify_gl3_weight(Weight([12, 3, 3])) == ("L[n-2,1,1]", 12)
    assert classify_gl3_weight(Weight([2, 2, 2])) == ("L[0,0,0]", 4)
    assert gl3_cohomology(Weight([11, 3, 2])).dims() == gl3_cohomology("L[n-3,1,0]", 12).dims()
    with pytest.raises(ValueError):
        classify_gl3_weight(Weight([9, 4, 1]))
    with pytest.raises(ValueError):
        classify_gl3_weight(Weight([11, 3, 3]))
    with pytest.raises(ValueError):
        gl3_cohomology("L[n-3,1,0]", 13)


def test_central_characters():
    n = 20
    assert central_character_eval("P12", Weight([n - 3, -1, 2])) == n - 8
    assert central_character_eval("P23", Weight([0, n - 2, 0])) == -n + 2
    assert central_character_eval("P12", Weight([n - 2, 0, 2])) == n - 6
    with pytest.raises(ValueError):
        central_character_eval("B", Weight([1, 0, 0]))


def test_parabolic_names():
    assert [parabolic_name(c) for c in GL4_COMPOSITIONS.values()] == list(GL4_COMPOSITIONS)


def test_empty_cohomology_euler():
    assert GradedCohomology("x", None, None).euler() == 0
