"""Oracle cross-checks: unfiltered search and the three-variable realization."""
import pytest

from cherednik import closedform as cf
from cherednik.ffield import make_field
from cherednik.oracle import (CostGuardError, _divdiff, build_v_module, dictionary_check,
                              exhaustive_singular_search, monomials3)
from cherednik.rep3 import labels_for
from cherednik.verma import build_irreducible, hilbert, make_params


def c_values(p):
    if p == 2:
        F4 = make_field(2, 2)
        return [F4.elem(0), F4.elem(1), F4.elem((0, 1)), F4.elem((1, 1))]
    return list(range(p)) + ["generic"]


def points(primes):
    for p in primes:
        for t in (0, 1):
            for c in c_values(p):
                for tau in labels_for(p):
                    yield p, t, c, tau


@pytest.mark.parametrize("p,t,c,tau", list(points([2, 3, 5])), ids=str)
def test_filtered_equals_exhaustive(p, t, c, tau):
    P = make_params(p, t, c, tau)
    a = build_irreducible(P)
    b = exhaustive_singular_search(P)
    assert a.terminated and b.terminated
    assert a.qdims == b.qdims
    assert a.J_dims() == b.J_dims()
    assert cf.generator_profile(a) == cf.generator_profile(b)


def test_exhaustive_examples():
    assert hilbert(exhaustive_singular_search(make_params(2, 0, 1, "triv"))) == [1, 2, 2, 1]
    for c in range(3):
        assert hilbert(exhaustive_singular_search(make_params(3, 0, c, "sign"))) == [1]
    gen = exhaustive_singular_search(make_params(5, 1, "generic", "stand"))
    want = cf.expected_results(5, 1, "generic", "stand").hilbert
    assert hilbert(gen) == want and sum(want) == 2 * 3 * 25


def test_cost_guard():
    P = make_params(11, 1, 2, "triv")
    with pytest.raises(CostGuardError):
        exhaustive_singular_search(P)
    assert exhaustive_singular_search(P, bound=3, override=True).computed == 3


def test_monomials3_and_divdiff():
    assert len(monomials3(4)) == 15
    assert len(set(monomials3(6))) == 28
    # (x1^2 - x2^2) / (x1 - x2) = x1 + x2
    assert _divdiff((2, 0, 0), (0, 1)) == {(0, 1, 0): 1, (1, 0, 0): 1}
    assert _divdiff((0, 2, 0), (0, 1)) == {(0, 1, 0): -1, (1, 0, 0): -1}
    assert _divdiff((1, 1, 3), (0, 1)) == {}


DICT_POINTS = [(p, t, c, tau) for p in (2, 5) for t in (0, 1)
               for c in ([0, 1, "generic"] + ([2] if p == 5 else [])) for tau in labels_for(p)]


@pytest.mark.parametrize("p,t,c,tau", DICT_POINTS, ids=str)
def test_dictionary(p, t, c, tau):
    ok, hh, hv = dictionary_check(make_params(p, t, c, tau))
    assert ok, (hh, hv)


def test_dictionary_examples():
    ok, hh, hv = dictionary_check(make_params(2, 1, 1, "triv"))
    assert ok and hh == [1] and hv == [1, 1]
    ok, hh, hv = dictionary_check(make_params(5, 0, 1, "stand"))
    assert ok and hh == hv == [2, 2, 2]


def test_dictionary_rejects_p3():
    with pytest.raises(ValueError):
        dictionary_check(make_params(3, 1, 1, "triv"))
    with pytest.raises(ValueError):
        build_v_module(make_params(3, 0, 1, "triv"), 4)
