import pytest
from sympy import Poly, symbols

from cherednik import closedform as cf
from cherednik.closedform import CRange
from cherednik.polyring import S1, GradedPoly, invariant_generators
from cherednik.rep3 import SIGN, STAND, TRIV, labels_for
from cherednik.verma import (NotSingularError, Operators, VermaElement, act, build_irreducible,
                             dunkl, extend_submodule, hilbert, make_params, submodule_state)

X = symbols("c")


def sym(p, expr):
    return Poly(expr, X, modulus=p)


def test_classify():
    assert cf.classify(7, 1, 0) == CRange.ZERO
    assert cf.classify(7, 1, "generic") == CRange.GENERIC
    assert cf.classify(7, 0, 3) == CRange.NONZERO
    assert cf.classify(3, 1, 1) == CRange.SPECIAL
    assert [cf.classify(13, 1, c) for c in (4, 5, 7, 9)] == [CRange.I1, CRange.I2, CRange.I3, CRange.I4]
    for p in (5, 7, 11, 13):
        rows = [cf.classify(p, 1, c) for c in range(1, p)]
        assert CRange.ZERO not in rows and len(rows) == p - 1


def test_recursion_examples():
    r = cf.generic_stand_recursion(5, cf.symbolic_c(5))
    assert r.gamma == sym(5, 1) and r.delta == [sym(5, 2 * X)] and r.beta == [sym(5, 1 - X ** 2)]
    r = cf.generic_stand_recursion(7, cf.symbolic_c(7))
    assert r.beta == [sym(7, 6 * X ** 2 - 2), sym(7, 2)] and r.delta == [sym(7, 3 * X)]
    r = cf.generic_stand_recursion(11, cf.symbolic_c(11))
    assert r.gamma == sym(11, 3) and r.delta == [sym(11, X * (6 * X ** 2 + 1)), sym(11, 3 * X)]
    assert r.beta == [sym(11, X ** 4 + 5 * X ** 2 + 4), sym(11, 4 * X ** 2 + 9)]
    r = cf.generic_stand_recursion(13, cf.symbolic_c(13))
    assert r.beta == [sym(13, X ** 4 + 6 * X ** 2 + 3), sym(13, 9 + 4 * X ** 2), sym(13, 3)]
    assert r.delta == [sym(13, X * (7 * X ** 2 - 2)), sym(13, X)]
    with pytest.raises(ValueError):
        cf.generic_stand_recursion(3, 1)


def _parity(poly, even):
    return all((m[0] % 2 == 0) == even for m in poly.monoms() if poly.coeff_monomial(m))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_recursion_parity_and_degrees(p):
    r = cf.generic_stand_recursion(p, cf.symbolic_c(p))
    shift = 0 if p % 3 == 1 else 2
    k = (p - 1) // 6 if p % 3 == 1 else (p - 5) // 6
    for j, b in enumerate(r.beta):
        assert _parity(b, True) and b.degree() == 2 * k - 2 * j + shift
    for j, d in enumerate(r.delta):
        assert _parity(d, False) and d.degree() == 2 * k - 2 * j - 1 + shift
    assert len(r.beta) == k + 1


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_v_pm_singular_and_s1_eigen(p):
    P = make_params(p, 1, "generic", STAND)
    ops = Operators(P)
    vp, vm = cf.assemble_v_pm(P, ops=ops)
    assert vp.degree == vm.degree == p
    assert cf.is_singular(vp, ops) and cf.is_singular(vm, ops)
    assert act(S1, vp, ops) == vp and act(S1, vm, ops) == -vm
    with pytest.raises(ValueError):
        cf.assemble_v_pm(make_params(p, 1, "generic", TRIV))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_determinant_identity(p):
    for c in list(range(p)) + ["generic"]:
        P = make_params(p, 1, c, STAND)
        assert cf.det_direct(P) == cf.det_formula(p, P.c)
    f = cf.det_f(p, cf.symbolic_c(p))
    assert f.eval(0) != 0
    b0 = cf.generic_stand_recursion(p, cf.symbolic_c(p)).beta[0]
    assert (f.eval(0) - 12 * b0.eval(0) ** 2) % p == 0
    assert cf.f_degree(p) == ((p - 1) // 3 if p % 3 == 1 else (p + 1) // 3)
    assert _parity(f, True)


def test_det_p5_closed_form():
    f = cf.det_f(5, cf.symbolic_c(5))
    b0 = 1 - X ** 2
    assert f == sym(5, 4 * pow(3, -1, 5) * (3 * b0 - 2 * X) * (3 * b0 + 2 * X))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_aux_sum_nonzero(p):
    # 1/(2j+1) needs 2m + 1 < p; the v_p exponents m = c - (p+1)/2 stay far below
    assert all(cf.aux_sum(m, p) for m in range(1, (p - 1) // 2))
    for m in range((p - 1) // 2, p):
        with pytest.raises(ZeroDivisionError):
            cf.aux_sum(m, p)
    used = [c - (p + 1) // 2 for c in range(p) if cf.classify(p, 1, c) == CRange.I3]
    assert all(2 * m + 1 < p for m in used)


def test_triv_special_p5():
    P = make_params(5, 1, 3, TRIV)
    ops = Operators(P)
    v1, v2 = cf.triv_special_generators(P)
    q = invariant_generators(P.F)[2]
    assert v1 == VermaElement.from_polys(P, [q]) and v1.degree == 3
    assert cf.is_singular(v1, ops)
    assert not cf.is_singular(v2, ops)                    # not singular in M
    st = submodule_state(P, [v1], v2.degree, ops)
    assert cf.is_singular(v2, ops, modulo=st)             # singular modulo <v1>
    full = extend_submodule(st, [v2], ops)
    assert hilbert(full) == cf.expected_results(5, 1, 3, TRIV).hilbert[:6]
    with pytest.raises(NotSingularError):
        submodule_state(P, [v1, v2], 12, ops)              # both at once: v2 checked against J = 0
    assert hilbert(cf.closed_form_state(P)) == cf.expected_results(5, 1, 3, TRIV).hilbert
    with pytest.raises(ValueError):
        cf.triv_special_generators(make_params(5, 1, 1, TRIV))


@pytest.mark.parametrize("p", [7, 11, 13])
def test_triv_special_quotient(p):
    for c in range(p):
        if cf.classify(p, 1, c) != CRange.I3:
            continue
        P = make_params(p, 1, c, TRIV)
        v1, v2 = cf.triv_special_generators(P)
        assert v1.degree == 6 * c - 3 * p and v2.degree == p
        st = cf.closed_form_state(P)
        h = hilbert(st)
        assert h == cf.expected_results(p, 1, c, TRIV).hilbert


def test_regular_sequence_witness():
    for p, c in [(5, 3), (7, 4), (11, 6), (13, 7)]:
        P = make_params(p, 1, c, TRIV)
        rows = cf.regular_sequence_witness(P)
        assert rows and all(a == b for _, a, b in rows)


def test_stand_special_examples():
    P = make_params(7, 1, 1, STAND)
    d = cf.stand_special_generators(P)
    assert d["p-3c"].degree == 4
    assert d["p+3c"].degree == 10
    P = make_params(7, 1, 2, STAND)
    d = cf.stand_special_generators(P)
    assert d["p+3c"].degree == 13 and d["p-3c"].degree == 1
    st = build_irreducible(P)
    prof = cf.generator_profile(st)
    assert (13, SIGN, 1) in prof and (1, TRIV, 1) in prof
    with pytest.raises(ValueError):
        cf.stand_special_generators(make_params(7, 1, 3, STAND))


@pytest.mark.parametrize("p", [7, 13, 19])
def test_T2_shape_is_not_singular(p):
    """The p = 1 mod 3 degree p+3c vector needs the Sign-type shape S2."""
    c = 1
    P = make_params(p, 1, c, STAND)
    sh = cf.Shapes(P.F)
    N = (p - 1) // 3 + c
    good = cf._build_p3c(P, N, 1, (sh.S1, sh.S2), sh)
    bad = cf._build_p3c(P, N, 1, (sh.S1, sh.T2), sh)
    assert cf.is_singular(good) and not cf.is_singular(bad)


def test_small_char_examples():
    P = make_params(2, 1, 1, STAND)
    F = P.F
    x1, x2 = GradedPoly.var(F, 1), GradedPoly.var(F, 2)
    gens = cf.small_char_generators(P)
    assert gens[0] == VermaElement.from_polys(P, [x2, x1])
    P = make_params(2, 1, "generic", STAND)
    s2 = invariant_generators(P.F)[0]
    v1 = cf.small_char_generators(P)[0]
    want = VermaElement.from_polys(P, [s2 * P.c + x1 * x1 + x2 * x2, x1 * x1])
    assert v1 == VermaElement.from_polys(P, [p.copy() if False else q for p, q in zip(want.polys(), want.polys())])
    assert v1.polys()[0] == (s2 * P.c + GradedPoly.var(P.F, 1) ** 2 + GradedPoly.var(P.F, 2) ** 2)
    P = make_params(3, 0, 2, TRIV)
    gens = cf.small_char_generators(P)
    assert all(dunkl((1, -1, 0), g).is_zero() and dunkl((0, 1, -1), g).is_zero() for g in gens)
    with pytest.raises(ValueError):
        cf.small_char_generators(make_params(5, 1, 2, TRIV))


def test_invariant_power_generators():
    assert len(cf.invariant_power_generators(make_params(5, 0, 1, TRIV))) == 2
    P = make_params(5, 1, 2, SIGN)
    gens = cf.invariant_power_generators(P)
    assert [g.degree for g in gens] == [10, 15]
    assert all(cf.is_singular(g) for g in gens)
    assert len(cf.invariant_power_generators(make_params(3, 1, 1, TRIV))) == 4


def test_assumption_examples():
    r = cf.assumption_check(7, 2)
    assert (r.branch, r.value, r.holds) == (2, 1, True)
    # c = 1 = (p + 1)/6 for p = 5 is the third case (1 > 5/6)
    r = cf.assumption_check(5, 1)
    assert (r.branch, r.holds) == (3, True)
    assert cf.assumption_check(7, 1).branch == 1
    r = cf.assumption_check(11, 3)
    assert r.branch == 4 and r.holds and 0 < r.value < 11
    with pytest.raises(ValueError):
        cf.assumption_check(7, 3)


def test_expected_examples():
    e = cf.expected_results(5, 1, 1, TRIV)
    one = [1] * 8
    import numpy as np
    assert e.hilbert == [int(x) for x in np.convolve(one, one)]
    e = cf.expected_results(2, 1, 1, STAND)
    assert e.hilbert == [2, 3, 4, 4, 4, 3, 2] and len(e.hilbert) == 7
    e = cf.expected_results(7, 1, "generic", STAND)
    assert sum(e.hilbert) == 6 * 49 and e.hilbert[:3] == [2, 4, 6]
    assert cf.expected_results(13, 1, 5, STAND).conjectural
    assert not cf.expected_results(13, 1, 2, STAND).conjectural


@pytest.mark.parametrize("p", [5, 7])
def test_closed_form_matches_search(p):
    for t in (0, 1):
        for c in list(range(p)) + ["generic"]:
            for tau in labels_for(p):
                P = make_params(p, t, c, tau)
                ops = Operators(P)
                st = build_irreducible(P, ops=ops)
                try:
                    res = cf.compare_with_search(P, st, ops)
                except NotImplementedError:
                    continue
                assert res["in_searched_J"] and res["same_J"], (t, c, tau)


def test_conjecture_rows_p7():
    for c in (3, 4):
        st = build_irreducible(make_params(7, 1, c, STAND))
        assert cf.conjecture_check(st)


def test_sign_twist_moves_singular_vectors():
    P = make_params(7, 1, 6, STAND)
    tw = cf.twisted_params(P)
    assert tw.c == P.F.elem(1)
    d = cf.stand_special_generators(tw)
    for v in d.values():
        w = cf.sign_twist(v, P)
        assert cf.is_singular(w)


def test_closed_form_generators_singular_in_order():
    P = make_params(11, 1, 2, STAND)
    gens = cf.closed_form_generators(P)
    assert [g.degree for g in gens] == sorted(g.degree for g in gens)
    with pytest.raises(NotImplementedError):
        cf.closed_form_generators(make_params(11, 1, 1, TRIV))
    assert all(cf.is_singular(g) for g in gens)             # all four are singular in M
    assert hilbert(cf.closed_form_state(P)) == cf.expected_results(11, 1, 2, STAND).hilbert
