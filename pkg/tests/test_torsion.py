import pytest
from hypothesis import given, settings, strategies as st

from gl4coh.torsion import (IntPolynomial, KernelFamily, TorsionClass, resultant, resultant_factor,
                            sym_power_traces, trace_module, trace_sym_power)
from gl4coh.weights import SymStd
from oracles import T, kernel_trace, monomial_trace

CLASSES = ["[I2,-1]", "[T3,1]", "[T6,1]", "[T4,1]", "[T3,T4]", "[T6,-1,1]", "[-I2]", "[T4,1,-1]"]


def _blocks(name):
    return [b for b in name.strip("[]").split(",")]


@pytest.mark.parametrize("name", CLASSES)
def test_sym_power_trace_matches_monomial_oracle(name):
    a = TorsionClass(name)
    mat = T(["-1", "-1"]) if name == "[-I2]" else T(_blocks(name))
    for k in range(9):
        assert trace_sym_power(a, k) == monomial_trace(mat, k), (name, k)


@pytest.mark.parametrize("name", ["[I2,-1]", "[T3,1]", "[T6,1]", "[T4,1]"])
def test_kernel_family_trace_matches_oracle(name):
    mat = T(_blocks(name))
    for k in range(8):
        assert trace_module(TorsionClass(name), KernelFamily(k)) == kernel_trace(mat, k)


def test_det_twist():
    a = TorsionClass("[I2,-1]")
    assert trace_module(a, SymStd(3, 4, 1)) == -trace_module(a, SymStd(3, 4))
    assert trace_module(a, SymStd(3, 4, 2)) == trace_module(a, SymStd(3, 4))


def test_resultant_factors():
    assert resultant_factor(TorsionClass("[T6,1]")) == 1
    assert resultant_factor(TorsionClass("[I2,-1]")) == 4
    assert resultant_factor(TorsionClass("[T3,1]")) == 3
    assert resultant_factor(TorsionClass("[T4,1]")) == 2
    with pytest.raises(ValueError):
        resultant_factor(TorsionClass("[1,1]"))


monic = st.lists(st.integers(-6, 6), min_size=1, max_size=4).map(lambda c: IntPolynomial(c + [1]))


@settings(max_examples=200)
@given(monic, monic)
def test_resultant_antisymmetry(f, g):
    assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)


@given(monic, st.integers(-5, 5))
def test_resultant_with_linear_is_evaluation(f, r):
    # R(f, x - r) = (-1)^deg f * f(r)
    assert resultant(f, IntPolynomial([-r, 1])) == (-1) ** f.degree * f(r)


def test_class_parsing_and_negation():
    a = TorsionClass("[T6,1]")
    assert str(a) == "[T6,1]" and a.rank == 3 and a.det() == 1
    assert str(-a) == "[-T6,-1]"
    with pytest.raises(ValueError):
        TorsionClass("[T6,T4,T3]")


@pytest.mark.parametrize("name, period", [("[T3,1]", 3), ("[T6,1]", 6), ("[T4,1]", 4), ("[T3,T4]", 12)])
def test_periodicity(name, period):
    h = sym_power_traces(TorsionClass(name), 200)
    assert all(h[k] == h[k % period] for k in range(201))
