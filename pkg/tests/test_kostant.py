from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from gl4coh.arithcoh import all_compositions
from gl4coh.kostant import kostant_decompose, nilradical_dim
from gl4coh.weights import Weight, weyl_dimension
from gl4coh.weyl import Composition
from oracles import dot_rational, inversions, shuffles_brute

PROPER = [c for m in (2, 3, 4) for c in all_compositions(m) if len(c.blocks) > 1]


def test_p13_rows():
    rows = kostant_decompose(Composition((3, 1)), Weight([9, 1, 1, 1])).rows()
    assert rows == ["1234 : 0 : [9,1,1,1]", "1243 : 1 : [9,1,0,2]", "1342 : 2 : [9,0,0,3]", "2341 : 3 : [0,0,0,12]"]


@pytest.mark.parametrize("c", PROPER, ids=str)
def test_decomposition_matches_oracle(c):
    lam = Weight([7, 3, 0, -2][: c.rank])
    got = {(s.shuffle.images, s.degree, s.levi_weight.entries) for s in kostant_decompose(c, lam).summands}
    want = {(w, inversions(w), dot_rational(w, lam.entries)) for w in shuffles_brute(c.blocks)}
    assert got == want


@settings(max_examples=100)
@given(st.sampled_from(PROPER), st.lists(st.integers(-10, 10), min_size=4, max_size=4))
def test_koszul_alternating_sum_vanishes(c, xs):
    lam = Weight(sorted(xs[: c.rank], reverse=True))
    dec = kostant_decompose(c, lam)
    assert sum((-1) ** s.degree * prod(weyl_dimension(b) for b in s.block_weights()) for s in dec.summands) == 0
    assert max(s.degree for s in dec.summands) == nilradical_dim(c)


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        kostant_decompose(Composition((2, 2)), Weight([0, 1, 0, 0]))
