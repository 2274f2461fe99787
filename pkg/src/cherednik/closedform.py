"""Closed-form singular vectors, coefficient recursions, the determinant
identity, the Assumption sums and the expected character tables.

Everything here is cross-checked against the kernel search in `verma`;
generators are built in the canonical x1, x2 coordinates using
b+ = 3(x1 + x2), b- = x1 - x2 and the Vandermonde q.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial

import numpy as np
from sympy import Poly, symbols

from . import rep3
from .ffield import FieldElement
from .polyring import GradedPoly, S1, S2, invariant_generators, young_generators
from .rep3 import TRIV, SIGN, STAND, CharacterSeries
from .polyring import Y12, Y23
from .verma import AlgebraParams, NotSingularError, Operators, VermaElement, act, dunkl


class CRange(Enum):
    ZERO = "zero"
    GENERIC = "generic"
    NONZERO = "nonzero"          # t = 0, c != 0
    SPECIAL = "special"          # p in {2, 3}, t = 1, c in F_p \ {0}
    I1 = "0<c<p/3"
    I2 = "p/3<c<p/2"
    I3 = "p/2<c<2p/3"
    I4 = "2p/3<c<p"


def classify(p, t, c):
    """c: FieldElement, int, or 'generic'."""
    if isinstance(c, FieldElement):
        if not c.in_prime_field():
            return CRange.GENERIC if int(t) == 1 else CRange.NONZERO
        c = c.rep()
    if c == "generic":
        return CRange.GENERIC if int(t) == 1 else CRange.NONZERO
    c = int(c) % p
    if c == 0:
        return CRange.ZERO
    if int(t) == 0:
        return CRange.NONZERO
    if p <= 3:
        return CRange.SPECIAL
    if 3 * c < p:
        return CRange.I1
    if 2 * c < p:
        return CRange.I2
    if 3 * c < 2 * p:
        return CRange.I3
    return CRange.I4


CONJECTURAL = {(STAND, CRange.I2), (STAND, CRange.I3)}


# -- helpers -------------------------------------------------------------------

def fr(p, a, b=1):
    """a / b in F_p as an int."""
    if b % p == 0:
        raise ZeroDivisionError(f"{b} vanishes mod {p}")
    return a * pow(b, -1, p) % p


def falling(x, m, p):
    out = 1
    for i in range(m):
        out = out * (x - i) % p
    return out


def prod_mod(vals, p):
    out = 1
    for v in vals:
        out = out * v % p
    return out


class Shapes:
    """The low-degree building blocks, as (component at b+, component at b-)
    pairs of polynomials, for the Stand-valued vectors."""

    def __init__(self, F):
        self.F = F
        self.s2, self.s3, self.q = invariant_generators(F)
        bp, bm = young_generators(F)
        self.bp, self.bm = bp, bm
        r = -(bp * bp) + bm * bm * 3       # -b+^2 + 3b-^2
        w = bp * bm * 2                     # 2 b+ b-
        self.r, self.w = r, w
        zero = GradedPoly(F)
        self.A = (-bp, bm * 3)              # -b+ (x) b+ + 3 b- (x) b-
        self.T1 = (bp, bm * 3)              # b+ (x) b+ + 3 b- (x) b-
        self.B = (-r, w * 3)                # -(r) (x) b+ + 3 w (x) b-
        self.T2 = (r, w * 3)                # r (x) b+ + 3 w (x) b-
        self.S1 = (-bm, bp)                 # b+ (x) b- - b- (x) b+
        self.S2 = (-w, r)                   # r (x) b- - w (x) b+
        self.Q = (zero, self.q)             # q (x) b-


def stand_vector(params, pairs):
    """sum f * (P (x) b+ + M (x) b-) -> VermaElement; pairs: list of (f, (P, M))."""
    F = params.F
    P = GradedPoly(F)
    M = GradedPoly(F)
    for f, (a, b) in pairs:
        P = P + f * a
        M = M + f * b
    # tau-vectors b+ = 3 x1 + 3 x2, b- = x1 - x2 in the slot basis
    return VermaElement.from_polys(params, [P * 3 + M, P * 3 - M])


def young_slots(v):
    """Inverse of stand_vector: (component at b+, component at b-)."""
    F = v.params.F
    a, b = v.polys()
    return (a + b) * F.elem(6).inv(), (a - b) * F.elem(2).inv()


def is_singular(v, ops=None, modulo=None):
    """All Dunkl images vanish (modulo the state's J if given)."""
    ops = ops or Operators(v.params)
    for y in (Y12, Y23):
        w = dunkl(y, v, ops)
        if modulo is None:
            if not w.is_zero():
                return False
        elif not modulo.contains(w):
            return False
    return True


def sign_twist_matrix(F):
    """T on Stand with T s = -s T for s1, s2 (an isomorphism Stand (x) Sign -> Stand)."""
    from .ffield import nullspace
    from .rep3 import slot_matrix
    rows = []
    for g in (S1, S2):
        S = slot_matrix(F, STAND, g)
        # T S + S T = 0, unknowns T flattened row-major
        for i in range(2):
            for j in range(2):
                coeffs = F.zeros(4)
                for k in range(2):
                    coeffs[:, i * 2 + k] = F.add(coeffs[:, i * 2 + k], S[:, k, j])
                    coeffs[:, k * 2 + j] = F.add(coeffs[:, k * 2 + j], S[:, i, k])
                rows.append(coeffs)
    K = nullspace(F, np.stack(rows, axis=1))
    return K[:, 0, :].reshape(F.e, 2, 2)


def sign_twist(v, target):
    """Move a vector of M_{t,c}(tau) to M_{t,-c}(Sign (x) tau).  Singular
    vectors go to singular vectors."""
    P = v.params
    if P.tau in (TRIV, SIGN):
        return VermaElement(target, v.degree, v.vec)
    F = P.F
    T = sign_twist_matrix(F)
    a, b = v.polys()
    c0 = a * FieldElement(F, tuple(int(x) for x in T[:, 0, 0])) + b * FieldElement(F, tuple(int(x) for x in T[:, 0, 1]))
    c1 = a * FieldElement(F, tuple(int(x) for x in T[:, 1, 0])) + b * FieldElement(F, tuple(int(x) for x in T[:, 1, 1]))
    return VermaElement.from_polys(target, [c0, c1], v.degree)


def twisted_params(params):
    tau = {TRIV: SIGN, SIGN: TRIV, STAND: STAND}[params.tau]
    if params.p == 2 and tau == SIGN:
        tau = TRIV
    return AlgebraParams(params.F, params.t, -params.c, tau)


# -- invariants ------------------------------------------------------------------

def invariant_power_generators(params, include_extra=True):
    """sigma_i (x) e (t = 0) or sigma_i^p (x) e (t = 1) for each basis e of tau;
    for p = 3, t = 1 and one-dimensional tau also x1^3, x2^3."""
    F = params.F
    s2, s3, _ = invariant_generators(F)
    n = params.dim_tau
    e = 1 if params.t == 0 else params.p
    out = []
    for f in (s2 ** e, s3 ** e):
        for s in range(n):
            comps = [GradedPoly(F)] * n
            comps[s] = f
            out.append(VermaElement.from_polys(params, comps, f.degree()))
    if include_extra and params.p == 3 and params.t == 1 and n == 1:
        for i in (1, 2):
            out.append(VermaElement.from_polys(params, [GradedPoly.var(F, i) ** 3]))
    return out


def restricted_generators(params):
    """x_i^p (x) e: the generators of J for t = 1, c = 0."""
    F = params.F
    n = params.dim_tau
    out = []
    for i in (1, 2):
        for s in range(n):
            comps = [GradedPoly(F)] * n
            comps[s] = GradedPoly.var(F, i) ** params.p
            out.append(VermaElement.from_polys(params, comps, params.p))
    return out


def linear_generators(params):
    """x_i (x) e in degree 1 (the quotient is tau itself)."""
    F = params.F
    n = params.dim_tau
    out = []
    for i in (1, 2):
        for s in range(n):
            comps = [GradedPoly(F)] * n
            comps[s] = GradedPoly.var(F, i)
            out.append(VermaElement.from_polys(params, comps, 1))
    return out


# -- generic c, Stand, p > 3 ------------------------------------------------------

@dataclass
class CoeffVector:
    p: int
    beta: list
    delta: list
    gamma: object = None          # only for p = 2 mod 3


SEEDS = {5: 1, 7: 2, 11: 3, 13: 3}


def symbolic_c(p):
    x = symbols("c")
    return Poly(x, x, modulus=p)


def generic_stand_recursion(p, c, seed=None):
    """Solve the degree-p equations for v+ by descent from the top
    coefficient.  c may be a FieldElement or a sympy Poly (symbolic mode)."""
    if p <= 3:
        raise ValueError("the recursion needs p > 3")
    seed = SEEDS.get(p, 1) if seed is None else seed
    f = lambda a, b=1: fr(p, a, b)
    one = c * 0 + 1

    def beta_from(j):      # (I) solved for beta_j
        return (beta[j + 1] * f(-4 * (j + 1) * (2 * j + 1), 3 * (6 * j + 5)) + c * delta[j]) * f(2, 6 * j + 1)

    def delta_from(j):     # (II) solved for delta_j
        return (c * beta[j + 1] * f(12 * (j + 1), 6 * j + 5) + delta[j + 1] * f(2 * (j + 1), 3)) * f(-4, 3 * (6 * j + 3))

    gamma = None
    if p % 3 == 1:
        k = (p - 1) // 6
        beta, delta = [None] * (k + 1), [None] * k
        beta[k] = one * seed
        delta[k - 1] = c * beta[k] * f(1, 3)
        for j in range(k - 1, -1, -1):
            beta[j] = beta_from(j)
            if j >= 1:
                delta[j - 1] = delta_from(j - 1)
    else:
        k = (p - 5) // 6
        beta, delta = [None] * (k + 1), [None] * (k + 1)
        gamma = one * seed
        delta[k] = c * gamma * 12
        beta[k] = gamma * f(-2, 3) - c * delta[k] * f(1, 2)
        for j in range(k - 1, -1, -1):
            delta[j] = delta_from(j)
            beta[j] = beta_from(j)
    return CoeffVector(p, beta, delta, gamma)


def assemble_v_pm(params, coeffs=None, ops=None):
    """(v+, v-) in degree p of M_{1,c}(Stand)."""
    P = params
    p = P.p
    if P.tau != STAND or p <= 3:
        raise ValueError("v+- live in M_{1,c}(Stand) for p > 3")
    coeffs = coeffs or generic_stand_recursion(p, P.c)
    sh = Shapes(P.F)
    s2, s3 = sh.s2, sh.s3
    pairs = []
    for j, b in enumerate(coeffs.beta):
        pairs.append((s2 ** ((p - 1) // 2 - 3 * j) * s3 ** (2 * j) * b, sh.A))
    for j in range((p - 7) // 6 + 1):
        g = coeffs.beta[j + 1] * fr(p, 2 * (j + 1), 3 * (6 * j + 5))
        pairs.append((s2 ** ((p - 5) // 2 - 3 * j) * s3 ** (2 * j + 1) * g, sh.B))
    if p % 3 == 2:
        pairs.append((s3 ** ((p - 2) // 3) * coeffs.gamma, sh.B))
    for j, d in enumerate(coeffs.delta):
        pairs.append((s2 ** ((p - 3) // 2 - 3 * j) * s3 ** (2 * j) * d, sh.Q))
    vp = stand_vector(P, pairs)
    ops = ops or Operators(P)
    # v- = (2/3)(s2 + 1/2).v+
    vm = (act(S2, vp, ops) + vp.scale(P.F.elem(2).inv())).scale(P.F.elem(2) / 3)
    return vp, vm


def det_direct(params, coeffs=None, ops=None):
    """(a++ a-- - a+- a-+) / sigma2^p, from the assembled v+-."""
    vp, vm = assemble_v_pm(params, coeffs, ops)
    app, apm = young_slots(vp)
    amp, amm = young_slots(vm)
    det = app * amm - apm * amp
    p = params.p
    s2p = invariant_generators(params.F)[0] ** p
    # sigma2^p has x2^(2p) coefficient (-1)^p
    ratio = det.coeff(0, 2 * p) / s2p.coeff(0, 2 * p)
    if not det == s2p * ratio:
        raise ArithmeticError("determinant is not a multiple of sigma2^p")
    return ratio


def det_formula(p, c, coeffs=None):
    """(4/3)(3 beta0 - delta0)(3 beta0 + delta0)."""
    coeffs = coeffs or generic_stand_recursion(p, c)
    b0, d0 = coeffs.beta[0], coeffs.delta[0]
    return (b0 * 3 - d0) * (b0 * 3 + d0) * fr(p, 4, 3)


def det_f(p, c):
    """f(c); c may be a FieldElement or symbolic_c(p)."""
    return det_formula(p, c)


def f_degree(p):
    """Degree of f as a polynomial in c^2 (f is even): (p-1)/3 or (p+1)/3.
    Its degree in c is twice this."""
    return det_f(p, symbolic_c(p)).degree() // 2


# -- special c, Triv, p/2 < c < 2p/3 ---------------------------------------------

def _check_interval(params, rng):
    got = classify(params.p, params.t, params.c)
    if got != rng:
        raise ValueError(f"{params.describe()} is in {got.value}, expected {rng.value}")


def triv_special_generators(params):
    """(v_{6c-3p}, v_p) for M_{1,c}(Triv), p/2 < c < 2p/3."""
    _check_interval(params, CRange.I3)
    p, F = params.p, params.F
    c = params.c.rep()
    m = c - (p + 1) // 2
    s2, s3, q = invariant_generators(F)
    disc = s2 ** 3 * (-4) - s3 ** 2 * 27
    v1 = VermaElement.from_polys(params, [disc ** m * q])
    tot = GradedPoly(F)
    for j in range(m + 1):
        coef = F.elem(comb(m, j)) / (2 * j + 1)
        tot = tot + (s2 ** 3 * (-4)) ** (m - j) * (s3 ** 2 * (-27)) ** j * coef
    v2 = VermaElement.from_polys(params, [s2 ** (2 * p - 3 * c) * s3 * tot])
    return v1, v2


def aux_sum(m, p):
    """sum_j binom(m, j) (-1)^j / (2j + 1) in F_p.  Only defined while
    2m + 1 < p; ZeroDivisionError beyond that."""
    return sum(fr(p, comb(m, j) * (-1) ** j, 2 * j + 1) for j in range(m + 1)) % p


# -- special c, Stand, 0 < c < p/3 ------------------------------------------------

def _p3c_terms(p, N, branch):
    """Coefficient lists (lambda, mu) and exponent patterns for the degree
    p -+ 3c vectors.  Returns [(coef, a, b, shape_index)]."""
    out = []
    if branch == 1:
        for i in range(N // 2 + 1):
            lam = fr(p, (-1) ** i * falling(N, 2 * i, p), pow(9, i) * factorial(i) * prod_mod((3 * j - 2 for j in range(1, i + 1)), p))
            out.append((lam, 3 * i, N - 2 * i, 0))
        for i in range((N - 1) // 2 + 1 if N >= 1 else 0):
            mu = fr(p, (-1) ** (i + 1) * falling(N, 2 * i + 1, p),
                    6 * pow(9, i) * factorial(i) * prod_mod((3 * j - 2 for j in range(1, i + 2)), p))
            out.append((mu, 3 * i + 1, N - 2 * i - 1, 1))
    else:
        for i in range((N - 1) // 2 + 1 if N >= 1 else 0):
            lam = fr(p, (-1) ** i * 2 * falling(N, 2 * i + 1, p),
                     pow(9, i) * factorial(i) * prod_mod((3 * j - 1 for j in range(1, i + 2)), p))
            out.append((lam, 3 * i + 2, N - 2 * i - 1, 0))
        for i in range(N // 2 + 1):
            mu = fr(p, (-1) ** i * falling(N, 2 * i, p), pow(9, i) * factorial(i) * prod_mod((3 * j - 1 for j in range(1, i + 1)), p))
            out.append((mu, 3 * i, N - 2 * i, 1))
    return out


def _build_p3c(params, N, branch, shapes, sh):
    F = params.F
    pairs = []
    for coef, a, b, si in _p3c_terms(params.p, N, branch):
        pairs.append((sh.s2 ** a * sh.s3 ** b * coef, shapes[si]))
    return stand_vector(params, pairs)


def stand_special_generators(params, ops=None):
    """{'p-3c', 'v+', 'v-', 'p+3c'} for M_{1,c}(Stand), 0 < c < p/3.

    The degree p+3c vector always uses the Sign-type second shape
    r (x) b- - w (x) b+; for p = 1 mod 3 the naive form pairs S1 with the
    Triv shape T2, which is not singular."""
    _check_interval(params, CRange.I1)
    ops = ops or Operators(params)
    p, c = params.p, params.c.rep()
    sh = Shapes(params.F)
    branch = 1 if p % 3 == 1 else 2
    base = (p - 1) // 3             # = (p - 2)/3 when p = 2 mod 3
    out = {"p-3c": _build_p3c(params, base - c, branch, (sh.T1, sh.T2), sh)}
    out["v+"], out["v-"] = assemble_v_pm(params, ops=ops)
    out["p+3c"] = _build_p3c(params, base + c, branch, (sh.S1, sh.S2), sh)
    for key in ("p-3c", "p+3c"):
        if not is_singular(out[key], ops):
            raise NotSingularError(f"degree {out[key].degree} vector is not singular")
    return out


# -- Assumption sums --------------------------------------------------------------

@dataclass
class AssumptionRecord:
    p: int
    c: int
    branch: int
    value: int
    holds: bool
    note: str = ""


def assumption_check(p, c):
    if p <= 3 or not (0 < 3 * c < p):
        raise ValueError("need p > 3 and 0 < c < p/3")
    if 6 * c < p:
        return AssumptionRecord(p, c, 1, 1, True)
    if p % 3 == 2 and 6 * c == p + 1:
        return AssumptionRecord(p, c, 3, 1, True)
    tot = 0
    try:
        if p % 3 == 1:
            N = (p - 1) // 3 - c
            for k in range(N // 2 + 1):
                num = prod_mod((3 * j - 1 for j in range(1, k + 1)), p) * falling(N, 2 * k, p)
                tot += fr(p, num, pow(3, k) * factorial(k) * falling(c - 2, 2 * k, p))
            branch = 2
        else:
            N = (p - 2) // 3 - c
            for k in range(N // 2 + 1):
                num = prod_mod((3 * j - 2 for j in range(1, k + 2)), p) * falling(N, 2 * k, p) * 3
                tot += fr(p, num, pow(3, k) * factorial(k) * falling(c - 1, 2 * k + 2, p))
            branch = 4
    except ZeroDivisionError:
        return AssumptionRecord(p, c, 2 if p % 3 == 1 else 4, 0, False, "denominator vanishes")
    tot %= p
    return AssumptionRecord(p, c, branch, tot, tot != 0)


# -- small characteristic -------------------------------------------------------

def _stand_poly_pairs(params, terms):
    """terms: list of (poly, slot) with slot 0 = x1, 1 = x2."""
    F = params.F
    comps = [GradedPoly(F), GradedPoly(F)]
    for f, s in terms:
        comps[s] = comps[s] + f
    return VermaElement.from_polys(params, comps)


def small_char_generators(params):
    """Explicit generators for the points treated by hand in characteristic
    2 and 3 (and the t = 0 Stand vectors, valid for p != 3)."""
    p, F, t, tau = params.p, params.F, int(params.t.rep()), params.tau
    x1, x2 = GradedPoly.var(F, 1), GradedPoly.var(F, 2)
    s2, s3, _ = invariant_generators(F)
    rng = classify(p, t, params.c)
    if rng == CRange.ZERO:
        return linear_generators(params) if t == 0 else restricted_generators(params)
    if t == 0 and tau == STAND and p != 3:
        v1 = _stand_poly_pairs(params, [(-x1, 0), (x1, 1), (x2, 0), (x2 * 2, 1)])
        v2 = _stand_poly_pairs(params, [(x1 * 2, 0), (x1, 1), (x2, 0), (-x2, 1)])
        w = [_stand_poly_pairs(params, [(s3, i)]) for i in (0, 1)]
        return [v1, v2] + w
    if p == 2:
        if t == 0 and tau == TRIV:
            return invariant_power_generators(params)
        if t == 1 and tau == TRIV:
            if rng == CRange.GENERIC:
                return invariant_power_generators(params)
            return linear_generators(params)        # t = 3c
        if t == 1 and tau == STAND and rng == CRange.GENERIC:
            c = params.c
            v1 = _stand_poly_pairs(params, [(s2 * c, 0), (x1 * x1, 0), (x1 * x1, 1), (x2 * x2, 0)])
            v2 = _stand_poly_pairs(params, [(s2 * c, 1), (x2 * x2, 1), (x1 * x1, 1), (x2 * x2, 0)])
            w1 = _stand_poly_pairs(params, [(s3 * s3, 0)])
            w2 = _stand_poly_pairs(params, [(s3 * s3, 1)])
            return [v1, v2, w1, w2]
        if t == 1 and tau == STAND:
            v1 = _stand_poly_pairs(params, [(x1, 1), (x2, 0)])
            v3 = _stand_poly_pairs(params, [(s2 * x1, 0), (s2 * x2, 0), (s2 * x2, 1)])
            v5 = _stand_poly_pairs(params, [(s3 * x1 * x1, 1), (s3 * x2 * x2, 0)])
            v7 = _stand_poly_pairs(params, [(s2 * s3 * x1 * x1, 0), (s2 * s3 * x2 * x2, 0), (s2 * s3 * x2 * x2, 1)])
            return [v1, v3, v5, v7]
    if p == 3:
        if t == 0:
            return linear_generators(params)
        return [VermaElement.from_polys(params, [x ** 3]) for x in (x1, x2)]
    raise ValueError(f"no hand-made generators for {params.describe()}")


# -- generators for any table point -----------------------------------------------

def cited_degree(p, c):
    rng = classify(p, 1, c)
    return {CRange.I1: 3 * c + p, CRange.I2: 3 * c - p, CRange.I4: 3 * c - 2 * p}[rng]


def closed_form_generators(params, ops=None):
    """Generators of J from the closed forms, sorted by degree.  Points
    without explicit vectors (the cited rows, which are quoted rather than
    constructed, and the conjectural Stand rows) raise NotImplementedError."""
    p, t, tau = params.p, int(params.t.rep()), params.tau
    rng = classify(p, t, params.c)
    ops = ops or Operators(params)
    if p <= 3 or rng == CRange.ZERO or (t == 0 and tau == STAND):
        gens = small_char_generators(params)
    elif t == 0:
        gens = invariant_power_generators(params)
    elif rng == CRange.GENERIC:
        gens = invariant_power_generators(params)
        if tau == STAND:
            vp, vm = assemble_v_pm(params, ops=ops)
            gens = [vp, vm] + [g for g in gens if g.degree == 3 * p]
    elif tau == TRIV and rng == CRange.I3:
        gens = list(triv_special_generators(params))
    elif tau == SIGN and rng == CRange.I2:
        tw = twisted_params(params)
        gens = [sign_twist(v, params) for v in triv_special_generators(tw)]
    elif tau == STAND and rng == CRange.I1:
        d = stand_special_generators(params, ops)
        gens = [d["p-3c"], d["v+"], d["v-"], d["p+3c"]]
    elif tau == STAND and rng == CRange.I4:
        tw = twisted_params(params)
        d = stand_special_generators(tw)
        gens = [sign_twist(d[k], params) for k in ("p-3c", "v+", "v-", "p+3c")]
    else:
        raise NotImplementedError(f"no closed-form generators for {params.describe()}")
    return sorted(gens, key=lambda v: v.degree)


def closed_form_state(params, bound=None, ops=None):
    """Quotient of M by the closed-form generators, added degree by degree
    so that vectors singular only modulo earlier ones are accepted."""
    from .verma import default_bound, extend_submodule, ModuleState
    ops = ops or Operators(params)
    bound = default_bound(params.p) if bound is None else bound
    gens = closed_form_generators(params, ops)
    state = ModuleState(params, bound, filtered=False)
    state.qdims = [ops.dim(k) for k in range(bound + 1)]
    state.ops = ops
    for d in sorted({g.degree for g in gens}):
        if d > state.computed:
            break
        state = extend_submodule(state, [g for g in gens if g.degree == d], ops)
    return state


# -- expected tables -----------------------------------------------------------

def _cs(p, d):
    return CharacterSeries.from_dict(p, d)


def _z(p, k, lab=TRIV, n=1):
    arr = [0] * (k + 1)
    arr[k] = n
    return _cs(p, {lab: arr})


def chi_sh_numerator(p):
    if p == 2:
        return _cs(p, {TRIV: [1, 0, 0, 1], STAND: [0, 1, 1]})
    if p == 3:
        # Stand is Triv + Sign in K0
        return _cs(p, {TRIV: [1, 1, 1], SIGN: [0, 1, 1, 1]})
    return _cs(p, {TRIV: [1], STAND: [0, 1, 1], SIGN: [0, 0, 0, 1]})


DEN = [1, 0, -1, -1, 0, 1]          # (1 - z^2)(1 - z^3)


def from_sh(p, factor):
    """chi_{Sh*} * factor, with exact division."""
    return (chi_sh_numerator(p) * factor).div_by_poly(DEN)


def cls(p, lab):
    return rep3.irrep_class(p, lab)


@dataclass
class Expected:
    character: CharacterSeries
    hilbert: list
    conjectural: bool = False
    source: str = ""
    generator_degrees: list = field(default_factory=list)


def _pm_poly(terms):
    return rep3.poly_from_terms(terms)


def expected_results(p, t, c, tau):
    """Closed-form character and Hilbert polynomial of L_{t,c}(tau)."""
    tau = rep3.check_label(tau, p)
    t = int(t)
    rng = classify(p, t, c)
    ci = c.rep() if isinstance(c, FieldElement) and c.in_prime_field() else c
    ci = ci % p if isinstance(ci, int) else ci
    tauc = rep3.CharacterSeries.monomial(p, cls(p, tau))
    one = _z(p, 0)
    conj = False
    if p == 2:
        chi = _p2_table(t, rng, tau)
    elif p == 3:
        s3 = _cs(3, {TRIV: [1, 1, 2, 1, 1], SIGN: [0, 1, 1, 1]})
        chi = tauc if t == 0 else s3 * tauc
    elif rng == CRange.ZERO:
        if t == 0:
            chi = tauc
        else:
            chi = from_sh(p, (one - _z(p, p, STAND) + _z(p, 2 * p, SIGN)) * tauc)
    elif t == 0 and tau == STAND:
        chi = _cs(p, {STAND: [1, 0, 1], TRIV: [0, 1], SIGN: [0, 1]})
    elif t == 0:
        chi = chi_sh_numerator(p) * tauc
    elif rng == CRange.GENERIC:
        if tau == STAND:
            chi = from_sh(p, tauc.mul_by_poly(_pm_poly({0: 1, p: -1, 3 * p: -1, 4 * p: 1})))
        else:
            chi = from_sh(p, tauc.mul_by_poly(_pm_poly({0: 1, 2 * p: -1, 3 * p: -1, 5 * p: 1})))
    else:
        chi, conj = _special_row(p, ci, rng, tau)
    degs = expected_generator_degrees(p, t, ci, tau) or []
    return Expected(chi, chi.hilbert_list(), conj, f"p={p} t={t} {rng.value} {tau}", degs)


def _special_row(p, c, rng, tau):
    z = lambda k, lab=TRIV, n=1: _z(p, k, lab, n)
    one = z(0)
    if tau == TRIV:
        if rng == CRange.I3:
            return from_sh(p, (one - z(6 * c - 3 * p, SIGN)).mul_by_poly(_pm_poly({0: 1, p: -1}))), False
        a = cited_degree(p, c)
        return from_sh(p, one - z(a, STAND) + z(2 * a, SIGN)), False
    if tau == SIGN:
        if rng == CRange.I2:
            return from_sh(p, (z(0, SIGN) - z(3 * p - 6 * c)).mul_by_poly(_pm_poly({0: 1, p: -1}))), False
        b = {CRange.I1: p - 3 * c, CRange.I3: 2 * p - 3 * c, CRange.I4: 4 * p - 3 * c}[rng]
        return from_sh(p, z(0, SIGN) - z(b, STAND) + z(2 * b)), False
    if rng == CRange.I1:
        f = z(0, STAND) - z(p - 3 * c) - z(p, STAND) - z(3 * c + p, SIGN) + z(2 * p, STAND)
        return from_sh(p, f), False
    if rng == CRange.I4:
        f = z(0, STAND) - z(3 * c - 2 * p, SIGN) - z(p, STAND) - z(4 * p - 3 * c) + z(2 * p, STAND)
        return from_sh(p, f), False
    if rng == CRange.I2:
        f = (z(0, STAND) - z(3 * c - p, SIGN) - z(3 * p - 3 * c) - z(p + 3 * c, SIGN)
             - z(5 * p - 3 * c) + z(4 * p, STAND))
        return from_sh(p, f), True
    f = (z(0, STAND) - z(2 * p - 3 * c) - z(3 * c, SIGN) - z(4 * p - 3 * c)
         - z(2 * p + 3 * c, SIGN) + z(4 * p, STAND))
    return from_sh(p, f), True


def _p2_table(t, rng, tau):
    p = 2
    z = lambda k, lab=TRIV, n=1: _z(p, k, lab, n)
    s2 = _cs(2, {TRIV: [1, 0, 1], STAND: [0, 1]})
    if tau == TRIV:
        if t == 0:
            return z(0) if rng == CRange.ZERO else _cs(2, {TRIV: [1, 0, 0, 1], STAND: [0, 1, 1]})
        if rng == CRange.GENERIC:
            return s2 * _cs(2, {TRIV: [1, 0, 0, 0, 0, 0, 1], STAND: [0, 0, 1, 0, 1]})
        return s2 if rng == CRange.ZERO else z(0)
    if t == 0:
        return z(0, STAND) if rng == CRange.ZERO else _cs(2, {STAND: [1, 0, 1], TRIV: [0, 2]})
    if rng == CRange.GENERIC:
        return s2 * _cs(2, {STAND: [1, 0, 0, 0, 1], TRIV: [0, 0, 2]})
    if rng == CRange.ZERO:
        return _cs(2, {STAND: [1, 1, 1], TRIV: [0, 2]})
    return _cs(2, {STAND: [1, 1, 1, 2, 1, 1, 1], TRIV: [0, 1, 2, 0, 2, 1]})


def expected_generator_degrees(p, t, c, tau):
    """(degree, label) of the generators predicted for a point, where the
    tables give them (cited rows, special rows, conjecture)."""
    rng = classify(p, t, c)
    tau = rep3.check_label(tau, p)
    if p <= 3 or int(t) == 0:
        return None
    if rng == CRange.GENERIC:
        return [(p, STAND)] if tau == STAND else [(2 * p, TRIV), (3 * p, TRIV)]
    if rng == CRange.ZERO:
        return None
    if tau == TRIV:
        if rng == CRange.I3:
            return [(6 * c - 3 * p, SIGN), (p, TRIV)]
        return [(cited_degree(p, c), STAND)]
    if tau == SIGN:
        if rng == CRange.I2:
            return [(3 * p - 6 * c, TRIV), (p, SIGN)]
        b = {CRange.I1: p - 3 * c, CRange.I3: 2 * p - 3 * c, CRange.I4: 4 * p - 3 * c}[rng]
        return [(b, STAND)]
    if rng == CRange.I1:
        return [(p - 3 * c, TRIV), (p, STAND), (p + 3 * c, SIGN)]
    if rng == CRange.I4:
        return [(3 * c - 2 * p, SIGN), (p, STAND), (4 * p - 3 * c, TRIV)]
    if rng == CRange.I2:
        return [(3 * c - p, SIGN), (3 * p - 3 * c, TRIV), (p + 3 * c, SIGN), (5 * p - 3 * c, TRIV)]
    return [(2 * p - 3 * c, TRIV), (3 * c, SIGN), (4 * p - 3 * c, TRIV), (2 * p + 3 * c, SIGN)]


# -- comparisons with the kernel search ------------------------------------------

def generator_profile(state):
    """[(degree, label, multiplicity)] of the generators a state recorded,
    one entry per composition factor."""
    out = []
    for g in state.generators:
        for lab, n in sorted(g.isotype.counts.items()):
            if n:
                out.append((g.degree, lab, int(n)))
    return sorted(out)


def conjecture_check(state):
    """Does a searched Stand state for p/3 < c < 2p/3 have exactly the
    predicted one-dimensional generators?"""
    P = state.params
    c = P.c.rep()
    want = sorted((d, lab, 1) for d, lab in expected_generator_degrees(P.p, 1, c, STAND))
    return generator_profile(state) == want


def compare_with_search(params, searched, ops=None):
    """Closed-form generators against a kernel-search state.

    Each generator must be singular modulo the part of J generated by the
    lower-degree closed-form vectors and lie in the searched J; the two
    submodules must agree in every computed degree."""
    ops = ops or getattr(searched, "ops", None) or Operators(params)
    mine = closed_form_state(params, searched.computed, ops)
    gens = closed_form_generators(params, ops)
    in_J = all(searched.contains(g) for g in gens if g.degree <= searched.computed)
    n = min(mine.computed, searched.computed)
    same = mine.J_dims()[:n + 1] == searched.J_dims()[:n + 1]
    return {"generators": len(gens), "in_searched_J": in_J, "same_J": same}


def regular_sequence_witness(params, bound=None):
    """For p/2 < c < 2p/3 (Triv): per degree, dim((f) cap (g)) and dim((fg))
    for the ideals generated by f = v_{6c-3p} and g = v_p."""
    from .ffield import rank
    f, g = triv_special_generators(params)
    F = params.F
    bound = bound or f.degree + g.degree + 3
    fp, gp = f.polys()[0], g.polys()[0]

    def ideal(h, k):
        d = h.degree()
        if k < d:
            return F.zeros(0, k + 1)
        rows = []
        for a in range(k - d + 1):
            m = GradedPoly(F, {(a, k - d - a): 1}) * h
            rows.append(m.to_vector(k))
        return np.stack(rows, axis=1)

    out = []
    for k in range(bound + 1):
        A, B, C = ideal(fp, k), ideal(gp, k), ideal(fp * gp, k)
        both = np.concatenate([A, B], axis=1)
        cap = rank(F, A) + rank(F, B) - rank(F, both)
        out.append((k, cap, rank(F, C)))
    return out
