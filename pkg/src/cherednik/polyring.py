"""The polynomial ring S h* = k[x1, x2] with x3 = -x1 - x2.

Two layers live here.  GradedPoly is a sparse dict polynomial used to write
down explicit vectors.  The *_matrix helpers give the same operators as
dense matrices on one graded piece S^k, indexed by the exponent of x1
(monomial x1^a x2^(k-a) sits at index a); the Verma engine uses those.
"""
from functools import lru_cache
from itertools import permutations

import numpy as np

from .ffield import FieldSpec, FieldError

# -- the group -------------------------------------------------------------

# a permutation g is the tuple (g(1), g(2), g(3))
S3 = tuple(sorted(permutations((1, 2, 3))))
IDENTITY = (1, 2, 3)
S1 = (2, 1, 3)  # (12)
S2 = (1, 3, 2)  # (23)
TRANSPOSITIONS = {(1, 2): (2, 1, 3), (1, 3): (3, 2, 1), (2, 3): (1, 3, 2)}


def compose(g, h):
    """(gh)(i) = g(h(i))"""
    return tuple(g[h[i] - 1] for i in range(3))


def inverse(g):
    out = [0, 0, 0]
    for i, gi in enumerate(g):
        out[gi - 1] = i + 1
    return tuple(out)


def sign(g):
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if g[i] > g[j])
    return -1 if inversions % 2 else 1


def cycle_type(g):
    fixed = sum(1 for i in range(3) if g[i] == i + 1)
    return {3: "e", 1: "transposition", 0: "3-cycle"}[fixed]


def covector(a1, a2, a3):
    """y = a1 y1 + a2 y2 + a3 y3 in h; the coordinates must sum to zero
    in the field.  Note that for p = 3 this admits y1 + y2 + y3."""
    return (a1, a2, a3)


Y12 = (1, -1, 0)
Y23 = (0, 1, -1)


def check_covector(F, y):
    if sum(y) % F.p:
        raise FieldError(f"covector {y} does not lie in h")


def act_covector(g, y):
    """g.y_i = y_{g(i)}, so the coefficient of y_{g(i)} in g.y is a_i."""
    out = [0, 0, 0]
    for i in range(3):
        out[g[i] - 1] = y[i]
    return tuple(out)


# linear forms x-bar_i in the basis (x1, x2), as (coef of x1, coef of x2)
XBAR = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}


# -- sparse polynomials -----------------------------------------------------

class GradedPoly:
    """Polynomial in x1, x2 over a FieldSpec.  terms maps (a, b) to the
    nonzero coefficient of x1^a x2^b."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None):
        self.spec = spec
        self.terms = {}
        for k, v in (terms or {}).items():
            v = spec.elem(v)
            if v:
                self.terms[k] = v

    @classmethod
    def const(cls, spec, x):
        return cls(spec, {(0, 0): x})

    @classmethod
    def var(cls, spec, i):
        """x-bar_i for i in 1, 2, 3."""
        a, b = XBAR[i]
        return cls(spec, {(1, 0): a, (0, 1): b})

    @classmethod
    def linear(cls, spec, a, b):
        return cls(spec, {(1, 0): a, (0, 1): b})

    def copy(self):
        out = GradedPoly(self.spec)
        out.terms = dict(self.terms)
        return out

    def _check(self, other):
        if other.spec.p != self.spec.p:
            raise FieldError("field mismatch")

    def _coerce(self, other):
        if isinstance(other, GradedPoly):
            self._check(other)
            return other
        return GradedPoly.const(self.spec, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = self.copy()
        for k, v in other.terms.items():
            s = out.terms.get(k, 0) + v if k in out.terms else v
            if s:
                out.terms[k] = s
            else:
                out.terms.pop(k, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = GradedPoly(self.spec)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            x = self.spec.elem(other) if not hasattr(other, "coords") else other
            if not x:
                return GradedPoly(self.spec)
            out = GradedPoly(self.spec)
            out.terms = {k: v * x for k, v in self.terms.items()}
            return out
        self._check(other)
        acc = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc[k] + v1 * v2 if k in acc else v1 * v2
        return GradedPoly(self.spec, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = GradedPoly.const(self.spec, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            other = GradedPoly.const(self.spec, other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted((k, v) for k, v in self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({a + b for a, b in self.terms})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("polynomial is not homogeneous")
        return ds[0] if ds else None

    def homogeneous_part(self, k):
        return GradedPoly(self.spec, {ab: v for ab, v in self.terms.items() if sum(ab) == k})

    def coeff(self, a, b):
        return self.terms.get((a, b), self.spec.zero())

    def to_vector(self, k):
        """Coefficient vector of the degree-k part, shape (e, k+1)."""
        out = self.spec.zeros(k + 1)
        for (a, b), v in self.terms.items():
            if a + b == k:
                out[:, a] = v.coords
        return out

    @classmethod
    def from_vector(cls, spec, vec, k):
        out = cls(spec)
        for a in range(k + 1):
            c = tuple(int(x) for x in vec[:, a])
            if any(c):
                out.terms[(a, k - a)] = spec.elem(c)
        return out

    def substitute(self, l1, l2):
        """Replace x1 by l1 and x2 by l2 (any GradedPolys)."""
        out = GradedPoly(self.spec)
        pw1, pw2 = {0: GradedPoly.const(self.spec, 1)}, {0: GradedPoly.const(self.spec, 1)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        for (a, b), v in sorted(self.terms.items()):
            out = out + power(pw1, l1, a) * power(pw2, l2, b) * v
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), v in sorted(self.terms.items(), reverse=True):
            mon = "*".join(s for s in (f"x1^{a}" if a > 1 else "x1" if a else "",
                                       f"x2^{b}" if b > 1 else "x2" if b else "") if s)
            parts.append(f"{v}*{mon}" if mon else f"{v}")
        return " + ".join(parts)


def poly_mul(f, g):
    return f * g


def group_action(g, f):
    """Substitution x-bar_i -> x-bar_{g(i)}."""
    F = f.spec
    return f.substitute(GradedPoly.var(F, g[0]), GradedPoly.var(F, g[1]))


def _divide_linear(F, N, alpha, beta):
    """Exact division of a homogeneous coefficient vector N (index = x1
    exponent) by alpha*x1 + beta*x2.  Works on the trailing axis of N, so a
    whole matrix of columns (shape (e, d+1, m)) is divided at once."""
    d = N.shape[1] - 1
    if d < 0:
        return N[:, :0]
    Q = F.zeros(d, *N.shape[2:])
    al = F.scalar_array(alpha).reshape((F.e,) + (1,) * (N.ndim - 2))
    be = F.scalar_array(beta).reshape((F.e,) + (1,) * (N.ndim - 2))
    shape = (F.e,) + N.shape[2:]
    al = np.broadcast_to(al, shape)
    be = np.broadcast_to(be, shape)
    if F.elem(beta):
        binv = np.broadcast_to(
            np.array(F.inv_coords(F.elem(beta).coords)).reshape((F.e,) + (1,) * (N.ndim - 2)), shape)
        prev = F.zeros(*N.shape[2:])
        for a in range(d):
            Q[:, a] = F.mul(F.sub(N[:, a], F.mul(al, prev)), binv)
            prev = Q[:, a]
        rem = F.sub(N[:, d], F.mul(al, prev))
    else:
        ainv = np.broadcast_to(
            np.array(F.inv_coords(F.elem(alpha).coords)).reshape((F.e,) + (1,) * (N.ndim - 2)), shape)
        for a in range(d):
            Q[:, a] = F.mul(N[:, a + 1], ainv)
        rem = N[:, 0]
    if np.any(rem % F.p):
        raise ArithmeticError("divided difference left a nonzero remainder")
    return Q


def divided_difference(s, f):
    """(f - s.f) / (x-bar_i - x-bar_j) for the transposition s = (i, j)."""
    i, j = s
    F = f.spec
    g = TRANSPOSITIONS[(i, j)]
    num = f - group_action(g, f)
    alpha = XBAR[i][0] - XBAR[j][0]
    beta = XBAR[i][1] - XBAR[j][1]
    out = GradedPoly(F)
    for k in num.degrees():
        if k == 0:
            raise ArithmeticError("divided difference left a nonzero remainder")
        Q = _divide_linear(F, num.to_vector(k), alpha, beta)
        out = out + GradedPoly.from_vector(F, Q, k - 1)
    return out


def partial_derivative(y, f):
    """Derivation with d(x-bar_i) = a_i; on x1, x2 coordinates this is
    a1 d/dx1 + a2 d/dx2."""
    F = f.spec
    check_covector(F, y)
    a1, a2 = F.elem(y[0]), F.elem(y[1])
    acc = {}
    for (a, b), v in f.terms.items():
        if a:
            k = (a - 1, b)
            acc[k] = acc.get(k, F.zero()) + v * a * a1
        if b:
            k = (a, b - 1)
            acc[k] = acc.get(k, F.zero()) + v * b * a2
    return GradedPoly(F, acc)


def invariant_generators(F):
    x1, x2, x3 = (GradedPoly.var(F, i) for i in (1, 2, 3))
    s2 = -(x1 * x1 + x1 * x2 + x2 * x2)
    s3 = -(x1 * x1 * x2 + x1 * x2 * x2)
    q = (x1 - x2) * (x2 - x3) * (x1 - x3)
    return s2, s3, q


def young_basis_maps(F):
    """(to_young, from_young) for p > 3.  In a Young-coordinate polynomial
    the exponent pair (a, b) means b+^a b-^b, with b+ = 3(x1 + x2) = -3 x3 and
    b- = x1 - x2."""
    if F.p <= 3:
        raise FieldError("the Young basis needs 2 and 3 invertible (p > 3)")
    six = F.elem(6).inv()
    to_x1 = GradedPoly.linear(F, six, F.elem(3) * six)       # (b+ + 3b-)/6
    to_x2 = GradedPoly.linear(F, six, -F.elem(3) * six)      # (b+ - 3b-)/6
    bp = GradedPoly.linear(F, 3, 3)
    bm = GradedPoly.linear(F, 1, -1)

    def to_young(f):
        return f.substitute(to_x1, to_x2)

    def from_young(g):
        return g.substitute(bp, bm)

    return to_young, from_young


def young_generators(F):
    """b+, b- as polynomials in x1, x2."""
    return GradedPoly.linear(F, 3, 3), GradedPoly.linear(F, 1, -1)


def enumerate_degree_pairs(k):
    """All (a, b) with 2a + 3b = k, ordered by increasing b."""
    return [((k - 3 * b) // 2, b) for b in range(k // 3 + 1) if (k - 3 * b) % 2 == 0]


def count_degree_pairs(k):
    return k // 6 + 1 if k % 2 == 0 else (k - 3) // 6 + 1 if k >= 3 else 0


# -- dense operators on a single graded piece --------------------------------

def _times_linear(F, V, alpha, beta):
    """Multiply coefficient vectors (axis 1 indexed by x1 exponent) by
    alpha*x1 + beta*x2."""
    d = V.shape[1]
    out = F.zeros(d + 1, *V.shape[2:])
    out[:, :d] = F.add(out[:, :d], F.smul(beta, V))
    out[:, 1:] = F.add(out[:, 1:], F.smul(alpha, V))
    return out


@lru_cache(maxsize=4096)
def action_matrix(F, g, k):
    """Matrix of g on S^k (columns are images of monomials)."""
    if k == 0:
        return F.eye(1)
    prev = action_matrix(F, g, k - 1)
    l1, l2 = XBAR[g[0]], XBAR[g[1]]
    out = F.zeros(k + 1, k + 1)
    # x2^k = x2 * x2^(k-1); x1^a x2^b = x1 * x1^(a-1) x2^b for a > 0
    out[:, :, 0] = _times_linear(F, prev[:, :, 0], *l2)
    out[:, :, 1:] = _times_linear(F, prev, *l1)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=4096)
def divdiff_matrix(F, s, k):
    """Matrix S^k -> S^(k-1) of the divided difference for s = (i, j)."""
    i, j = s
    if k == 0:
        return F.zeros(0, 1)
    num = F.sub(F.eye(k + 1), action_matrix(F, TRANSPOSITIONS[s], k))
    out = _divide_linear(F, num, XBAR[i][0] - XBAR[j][0], XBAR[i][1] - XBAR[j][1])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=4096)
def deriv_matrix(F, y, k):
    """Matrix S^k -> S^(k-1) of the partial derivative along y."""
    out = F.zeros(k, k + 1)
    a1, a2 = F.elem(y[0]), F.elem(y[1])
    for a in range(k + 1):
        b = k - a
        if a:
            out[:, a - 1, a] = F.add(out[:, a - 1, a], F.scalar_array(a1 * a))
        if b:
            out[:, a, a] = F.add(out[:, a, a], F.scalar_array(a2 * b))
    out.setflags(write=False)
    return out


@lru_cache(maxsize=4096)
def mulx_matrix(F, i, k):
    """Matrix S^(k-1) -> S^k of multiplication by x-bar_i."""
    alpha, beta = XBAR[i]
    out = _times_linear(F, F.eye(k), alpha, beta)
    out.setflags(write=False)
    return out
