from math import comb

import pytest
from hypothesis import given, strategies as st

from gl4coh.weights import Rho, SymStd, Weight, dot_action, module_to_weight, weight_to_module, weyl_dimension
from gl4coh.weyl import Permutation
from oracles import dot_rational, weyl_dim


def dominant(max_rank=4):
    return st.integers(1, max_rank).flatmap(
        lambda m: st.lists(st.integers(-15, 15), min_size=m, max_size=m).map(lambda xs: Weight(sorted(xs, reverse=True))))


def test_doubled_rho():
    assert Rho(4).doubled_entries == (3, 1, -1, -3)
    assert Rho(3).doubled_entries == (2, 0, -2)


@pytest.mark.parametrize("w, lam, expected", [
    ("2341", [9, 1, 1, 1], [0, 0, 0, 12]),
    ("4321", [9, 1, 1, 1], [-2, 0, 2, 12]),
    ("1432", [9, 1, 1, 1], [9, -1, 1, 3]),
    ("21", [5, 3], [2, 6]),
])
def test_dot_action_rows(w, lam, expected):
    assert dot_action(Permutation(w), Weight(lam)) == Weight(expected)


@given(dominant(), st.randoms())
def test_dot_action_matches_rational_oracle(lam, rnd):
    w = rnd.sample(range(1, lam.rank + 1), lam.rank)
    assert dot_action(w, lam).entries == dot_rational(w, lam.entries)


@given(dominant(), st.randoms())
def test_dot_action_composition(lam, rnd):
    m = lam.rank
    w = Permutation(rnd.sample(range(1, m + 1), m))
    v = Permutation(rnd.sample(range(1, m + 1), m))
    assert dot_action(w, dot_action(v, lam)) == dot_action(v * w, lam)


@given(dominant())
def test_weyl_dimension_matches_oracle(lam):
    assert weyl_dimension(lam) == weyl_dim(lam.entries)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_symmetric_power_dimension(m):
    for k in range(31):
        assert weyl_dimension(Weight([k + 2] + [2] * (m - 1))) == comb(k + m - 1, m - 1)


def test_module_weight_round_trip():
    mod = SymStd(4, 8, 1)
    assert module_to_weight(mod) == Weight([9, 1, 1, 1])
    assert weight_to_module(Weight([9, 1, 1, 1])) == mod
    assert SymStd.from_json(mod.to_json()) == mod
    with pytest.raises(ValueError):
        weight_to_module(Weight([9, 1, 0]))


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        weyl_dimension(Weight([0, 1]))
