"""Verma modules M_{t,c}(tau) = S h* (x) tau, Dunkl operators and the
construction of the irreducible quotient L_{t,c}(tau).

A degree-k vector is stored as a flat coefficient array of length
dim(tau) * (k + 1), slot-major: entry s*(k+1) + a is the coefficient of
x1^a x2^(k-a) (x) e_s.  For Stand the slot basis is x1, x2 (Stand = h*).

The quotient L = M / J is built degree by degree.  For k >= 1,
    J^k = { v in M^k : D_y v in J^(k-1) for all y in h },
which is the maximal proper graded submodule once the lower degrees are
right.  New generators at degree k are J^k modulo x1 J^(k-1) + x2 J^(k-1).
"""
from dataclasses import dataclass, field
import os

import numpy as np

from . import rep3
from .ffield import FieldSpec, FieldElement, make_field, generic_c, nullspace, rref, reduce_rows
from .polyring import (GradedPoly, S3, S1, S2, IDENTITY, TRANSPOSITIONS, Y12, Y23, act_covector,
                       action_matrix, check_covector, deriv_matrix, divdiff_matrix, mulx_matrix)
from .rep3 import TRIV, SIGN, STAND, DIMS, slot_matrix

DEFAULT_BOUND_ENV = "CHEREDNIK_BOUND"


class UnterminatedError(RuntimeError):
    pass


class NotSingularError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraParams:
    F: FieldSpec
    t: FieldElement
    c: FieldElement
    tau: str

    def __post_init__(self):
        if not (self.t == 0 or self.t == 1):
            raise ValueError("t must be 0 or 1 (other values rescale to these)")
        rep3.check_label(self.tau, self.F.p)

    @property
    def p(self):
        return self.F.p

    @property
    def dim_tau(self):
        return DIMS[self.tau]

    def c_is_generic(self):
        return not self.c.in_prime_field()

    def describe(self):
        return f"p={self.p} t={self.t} c={self.c} tau={self.tau}"


def make_params(p, t, c, tau):
    """c may be an int, 'generic', or a FieldElement.  Characteristic 2 is
    always realised over F4 so that (123) can be diagonalised."""
    tau = rep3.check_label(tau, p)
    if isinstance(c, FieldElement):
        F = c.spec if c.spec.e == 2 or p != 2 else make_field(p, 2)
        if p == 2 and c.spec.e == 1:
            c = F.elem(c)
    elif c == "generic":
        F = make_field(p, 2)
        c = generic_c(F)
    else:
        F = make_field(p, 2 if p == 2 else 1)
        c = F.elem(int(c))
    return AlgebraParams(F, F.elem(int(t)), c, tau)


def default_bound(p):
    env = os.environ.get(DEFAULT_BOUND_ENV)
    if env:
        return int(env)
    return 6 * p + 6


# -- operators on a graded piece ------------------------------------------------

def fkron(F, S, A):
    """Kronecker product of (e, m, n) and (e, r, s) arrays over F."""
    e, m, n = S.shape
    _, r, s = A.shape
    out = F.mul(np.broadcast_to(S[:, :, None, :, None], (e, m, r, n, s)),
                np.broadcast_to(A[:, None, :, None, :], (e, m, r, n, s)))
    return out.reshape(e, m * r, n * s)


class Operators:
    """Cached matrices of Dunkl operators, the group action and
    x-multiplication on the graded pieces of one Verma module."""

    def __init__(self, params):
        self.params = params
        self.F = params.F
        self._cache = {}

    def dim(self, k):
        return self.params.dim_tau * (k + 1) if k >= 0 else 0

    def _get(self, key, build):
        if key not in self._cache:
            m = build()
            m.setflags(write=False)
            self._cache[key] = m
        return self._cache[key]

    def group(self, g, k):
        F, tau = self.F, self.params.tau
        return self._get(("g", g, k), lambda: fkron(F, slot_matrix(F, tau, g), action_matrix(F, g, k)))

    def dunkl(self, y, k):
        """Matrix M^k -> M^(k-1) of D_y."""
        F, P = self.F, self.params
        check_covector(F, y)

        def build():
            n = P.dim_tau
            if k == 0:
                return F.zeros(0, n)
            out = F.smul(P.t, fkron(F, F.eye(n), deriv_matrix(F, tuple(y), k)))
            for (i, j), s in TRANSPOSITIONS.items():
                w = (y[i - 1] - y[j - 1]) % F.p
                if w == 0:
                    continue
                term = fkron(F, slot_matrix(F, P.tau, s), divdiff_matrix(F, (i, j), k))
                out = F.sub(out, F.smul(P.c * w, term))
            return out

        return self._get(("D", tuple(y), k), build)

    def mulx(self, i, k):
        F = self.F
        return self._get(("x", i, k), lambda: fkron(F, F.eye(self.params.dim_tau), mulx_matrix(F, i, k)))


# -- vectors ---------------------------------------------------------------------

class VermaElement:
    """Homogeneous element of M_{t,c}(tau)."""

    def __init__(self, params, degree, vec):
        self.params = params
        self.degree = degree
        vec = np.asarray(vec, dtype=np.int64) % params.F.p
        if vec.shape != (params.F.e, params.dim_tau * (degree + 1)):
            raise ValueError("vector has the wrong shape for this degree")
        self.vec = vec

    @classmethod
    def zero(cls, params, degree):
        return cls(params, degree, params.F.zeros(params.dim_tau * (degree + 1)))

    @classmethod
    def from_polys(cls, params, polys, degree=None):
        """polys: one GradedPoly per slot basis vector (homogeneous)."""
        F = params.F
        if len(polys) != params.dim_tau:
            raise ValueError("need one polynomial per basis vector of tau")
        if degree is None:
            ds = {d for f in polys for d in f.degrees()}
            if len(ds) > 1:
                raise ValueError("components are not homogeneous of one degree")
            degree = ds.pop() if ds else 0
        parts = []
        for f in polys:
            if f.spec != F:
                f = GradedPoly(F, {k: F.elem(v) for k, v in f.terms.items()})
            if any(d != degree for d in f.degrees()):
                raise ValueError("components are not homogeneous of one degree")
            parts.append(f.to_vector(degree))
        return cls(params, degree, np.concatenate(parts, axis=1))

    def polys(self):
        F, k = self.params.F, self.degree
        return [GradedPoly.from_vector(F, self.vec[:, s * (k + 1):(s + 1) * (k + 1)], k)
                for s in range(self.params.dim_tau)]

    def is_zero(self):
        return not np.any(self.vec)

    def _same(self, other):
        if other.params != self.params or other.degree != self.degree:
            raise ValueError("incompatible Verma elements")

    def __add__(self, other):
        self._same(other)
        return VermaElement(self.params, self.degree, self.params.F.add(self.vec, other.vec))

    def __sub__(self, other):
        self._same(other)
        return VermaElement(self.params, self.degree, self.params.F.sub(self.vec, other.vec))

    def __neg__(self):
        return VermaElement(self.params, self.degree, self.params.F.neg(self.vec))

    def scale(self, x):
        return VermaElement(self.params, self.degree, self.params.F.smul(x, self.vec))

    def __mul__(self, x):
        return self.scale(x)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, VermaElement) and other.params == self.params
                and other.degree == self.degree and np.array_equal(self.vec, other.vec))

    def times_poly(self, f):
        """f * v for a polynomial f (may be inhomogeneous only if zero)."""
        parts = [g * f for g in self.polys()]
        deg = self.degree + (f.degree() or 0)
        return VermaElement.from_polys(self.params, parts, deg)

    def serialize(self):
        """Terms as strings coef*x1^a*x2^b@slot, sorted."""
        out = []
        for s, f in enumerate(self.polys()):
            for (a, b), v in sorted(f.terms.items()):
                out.append(f"{v}*x1^{a}*x2^{b}@{s}")
        return out

    def __repr__(self):
        return f"VermaElement(deg={self.degree}, {' + '.join(self.serialize()) or '0'})"


def dunkl(y, v, ops=None):
    ops = ops or Operators(v.params)
    if v.degree == 0:
        return VermaElement.zero(v.params, 0)
    F = v.params.F
    w = F.matmul(ops.dunkl(tuple(y), v.degree), v.vec[:, :, None])[:, :, 0]
    return VermaElement(v.params, v.degree - 1, w)


def act(g, v, ops=None):
    ops = ops or Operators(v.params)
    F = v.params.F
    return VermaElement(v.params, v.degree, F.matmul(ops.group(g, v.degree), v.vec[:, :, None])[:, :, 0])


def mul_x(i, v, ops=None):
    ops = ops or Operators(v.params)
    F = v.params.F
    return VermaElement(v.params, v.degree + 1,
                        F.matmul(ops.mulx(i, v.degree + 1), v.vec[:, :, None])[:, :, 0])


def casimir(v, ops=None):
    """Omega = x1 D_{y1-y3} + x2 D_{y2-y3} + c * sum_{i<j} (1 - (ij)), t = 1."""
    P = v.params
    if not P.t == 1:
        raise ValueError("the Casimir element is only used for t = 1")
    ops = ops or Operators(P)
    out = VermaElement.zero(P, v.degree)
    if v.degree > 0:
        out = out + mul_x(1, dunkl((1, 0, -1), v, ops), ops) + mul_x(2, dunkl((0, 1, -1), v, ops), ops)
    for s in TRANSPOSITIONS.values():
        out = out + (v - act(s, v, ops)).scale(P.c)
    return out


def omega_scalar(params, label):
    c = params.c
    return {TRIV: c * 0, SIGN: c * 6, STAND: c * 3}[label]


def admissible_degrees(params, bound):
    """Pairs (k, tau') with Omega|tau' - Omega|tau = k in the field,
    1 <= k <= bound.  Only meaningful for t = 1."""
    if not params.t == 1:
        raise ValueError("degree filter is only defined for t = 1")
    F = params.F
    base = omega_scalar(params, params.tau)
    out = []
    for k in range(1, bound + 1):
        for lab in rep3.labels_for(params.p):
            if omega_scalar(params, lab) - base == F.elem(k):
                out.append((k, lab))
    return out


def verma_dim(tau, k):
    return DIMS[rep3.normalize_label(tau)] * (k + 1)


def verma_basis(tau, k):
    """Monomial basis labels (a, b, slot) of M^k."""
    n = DIMS[rep3.normalize_label(tau)]
    return [(a, k - a, s) for s in range(n) for a in range(k + 1)]


# -- module states ----------------------------------------------------------------

@dataclass
class Generator:
    degree: int
    isotype: rep3.GrothClass
    vectors: list


@dataclass
class ModuleState:
    params: AlgebraParams
    bound: int
    J: dict = field(default_factory=dict)        # k -> (R, pivots) RREF rows of J^k
    qdims: list = field(default_factory=list)    # dim (M/J)^k for k = 0..computed
    generators: list = field(default_factory=list)
    terminated: bool = False
    filtered: bool = True
    searched: list = field(default_factory=list)  # degrees where the kernel was computed

    @property
    def computed(self):
        return len(self.qdims) - 1

    def status(self):
        return "terminated" if self.terminated else "unterminated"

    def J_rows(self, k):
        F = self.params.F
        if k in self.J:
            return self.J[k]
        return F.zeros(0, verma_dim(self.params.tau, k)), []

    def contains(self, v):
        """Is v in J?"""
        R, piv = self.J_rows(v.degree)
        if v.degree > self.computed:
            raise ValueError("degree beyond the computed range")
        red = reduce_rows(self.params.F, v.vec[:, None, :], R, piv)
        return not np.any(red)

    def J_dims(self):
        return [len(self.J_rows(k)[1]) for k in range(self.computed + 1)]


def _x_span(ops, state, k):
    """RREF of x1 J^(k-1) + x2 J^(k-1) inside M^k."""
    F = ops.F
    R, piv = state.J_rows(k - 1)
    n = ops.dim(k)
    if not piv:
        return F.zeros(0, n), []
    imgs = [F.matmul(R, np.transpose(ops.mulx(i, k), (0, 2, 1))) for i in (1, 2)]
    return rref(F, np.concatenate(imgs, axis=1))


def _kernel(ops, state, k):
    """RREF of {v in M^k : D_y v in J^(k-1) for y = y1-y2, y2-y3}."""
    F = ops.F
    R, piv = state.J_rows(k - 1)
    proj = rep3.quotient_projector(F, ops.dim(k - 1), R, piv)
    A = np.concatenate([F.matmul(proj, ops.dunkl(Y12, k)), F.matmul(proj, ops.dunkl(Y23, k))], axis=1)
    K = nullspace(F, A)
    if K.shape[1] == 0:
        return K, []
    return rref(F, K)


def isotype_of_quotient(ops, k, W, U):
    """Composition factors of the S3-module W/U, both RREF row spaces in M^k
    with U inside W."""
    F = ops.F
    RW, PW = W
    if len(PW) == len(U[1]):
        return rep3.GrothClass(F.p)
    mats = []
    for g in (S1, S2):
        img = F.matmul(RW, np.transpose(ops.group(g, k), (0, 2, 1)))  # rows g.w
        mats.append(np.transpose(img[:, :, PW], (0, 2, 1)))         # W-coordinates, columns
    RU, PU = U
    Uc = RU[:, :, PW] if PU else F.zeros(0, len(PW))
    Ured = rref(F, Uc) if PU else (Uc, [])
    acts = [rep3.quotient_action(F, m, Ured) for m in mats]
    return rep3.composition_factors(F, acts[0], acts[1])


def _record(state, ops, k, K, X):
    """Append the generators found at degree k (K modulo X)."""
    F = ops.F
    RK, PK = K
    if len(PK) == len(X[1]):
        return
    red = reduce_rows(F, RK, *X) if X[1] else RK
    new, _ = rref(F, red)
    cls = isotype_of_quotient(ops, k, K, X)
    vecs = [VermaElement(state.params, k, new[:, i]) for i in range(new.shape[1])]
    state.generators.append(Generator(k, cls, vecs))


def build_irreducible(params, bound=None, use_filter=True, strict=False, ops=None):
    """Construct L_{t,c}(tau) = M / J up to degree `bound`.

    With use_filter (t = 1 only) the kernel search is skipped at degrees
    where the Casimir element forbids singular vectors; there J^k is just
    x1 J^(k-1) + x2 J^(k-1).  If the quotient has not vanished by `bound`
    the state is flagged unterminated (or UnterminatedError with strict).
    """
    bound = default_bound(params.p) if bound is None else bound
    ops = ops or Operators(params)
    F = params.F
    state = ModuleState(params, bound, filtered=use_filter and params.t == 1)
    state.qdims.append(ops.dim(0))
    admissible = None
    if state.filtered:
        admissible = {k for k, _ in admissible_degrees(params, bound)}
    for k in range(1, bound + 1):
        X = _x_span(ops, state, k)
        if admissible is not None and k not in admissible:
            J = X
        else:
            J = _kernel(ops, state, k)
            state.searched.append(k)
            _record(state, ops, k, J, X)
        if J[1]:
            state.J[k] = J
        q = ops.dim(k) - len(J[1])
        state.qdims.append(q)
        if q == 0:
            state.terminated = True
            break
    if not state.terminated and strict:
        raise UnterminatedError(f"{params.describe()}: quotient still nonzero at degree {bound}")
    state.ops = ops
    return state


def extend_submodule(state, new_generators, ops=None):
    """Enlarge J by the H-submodule generated by the given homogeneous
    vectors, which must be singular modulo the current J."""
    if not new_generators:
        return state
    params = state.params
    ops = ops or getattr(state, "ops", None) or Operators(params)
    F = params.F
    for v in new_generators:
        if v.params != params:
            raise ValueError("generator belongs to a different module")
        if v.degree == 0:
            raise NotSingularError("degree-0 vectors generate the whole module")
        for y in (Y12, Y23):
            w = dunkl(y, v, ops)
            if not state.contains(w):
                raise NotSingularError(f"generator in degree {v.degree} is not singular modulo J")
    by_deg = {}
    for v in new_generators:
        by_deg.setdefault(v.degree, []).append(v)
    new = ModuleState(params, state.bound, filtered=state.filtered)
    new.generators = list(state.generators)
    new.qdims = [ops.dim(0)]
    for k in range(1, state.computed + 1):
        X = _x_span(ops, new, k)
        rows = [X[0]]
        if k in state.J:
            rows.append(state.J[k][0])
        for v in by_deg.get(k, []):
            orbit = np.stack([F.matmul(ops.group(g, k), v.vec[:, :, None])[:, :, 0] for g in S3], axis=1)
            rows.append(orbit)
        J = rref(F, np.concatenate(rows, axis=1))
        if k in by_deg:
            new.generators.append(Generator(k, isotype_of_quotient(ops, k, J, X), by_deg[k]))
        if J[1]:
            new.J[k] = J
        q = ops.dim(k) - len(J[1])
        new.qdims.append(q)
        if q == 0:
            new.terminated = True
            break
    new.ops = ops
    return new


def submodule_state(params, generators, bound, ops=None):
    """State whose J is the submodule generated by `generators` alone (no
    search), computed up to `bound`."""
    ops = ops or Operators(params)
    empty = ModuleState(params, bound, filtered=False)
    empty.qdims = [ops.dim(k) for k in range(bound + 1)]
    empty.ops = ops
    return extend_submodule(empty, generators, ops)


def singular_space(state, k, ops=None):
    """Basis of vectors in M^k singular modulo J^(k-1) and not already in
    x J^(k-1) (lifted representatives).  Includes J^k's new part only."""
    ops = ops or getattr(state, "ops", None) or Operators(state.params)
    if k < 1 or k > state.computed + 1:
        raise ValueError("degree out of computed range")
    F = ops.F
    K = _kernel(ops, state, k)
    X = _x_span(ops, state, k)
    if len(K[1]) == len(X[1]):
        return []
    red = reduce_rows(F, K[0], *X) if X[1] else K[0]
    R, piv = rref(F, red)
    return [VermaElement(state.params, k, R[:, i]) for i in range(R.shape[1])]


def hilbert(state):
    """Hilbert polynomial as a list of ints (low degree first)."""
    q = list(state.qdims)
    while q and q[-1] == 0:
        q.pop()
    return [int(x) for x in q]


def character(state, ops=None):
    ops = ops or getattr(state, "ops", None) or Operators(state.params)
    F, p = ops.F, state.params.p
    labs = rep3.labels_for(p)
    top = len(hilbert(state))
    arr = np.zeros((len(labs), top), dtype=np.int64)
    for k in range(top):
        R, piv = state.J_rows(k)
        acts = [rep3.quotient_action(F, ops.group(g, k), (R, piv)) for g in (S1, S2)]
        cls = rep3.composition_factors(F, acts[0], acts[1])
        for i, lab in enumerate(labs):
            arr[i, k] = cls.counts[lab]
    return rep3.CharacterSeries(p, arr)


def baby_verma(params, bound=None, ops=None):
    """Quotient by sigma_i (x) tau (t = 0) or sigma_i^p (x) tau (t = 1)."""
    from .closedform import invariant_power_generators
    ops = ops or Operators(params)
    gens = invariant_power_generators(params, include_extra=False)
    top = 5 if params.t == 0 else 5 * params.p
    bound = top + 2 if bound is None else bound
    return submodule_state(params, gens, bound, ops)


def casimir_violations(state):
    """Generators (t = 1) whose (degree, isotype) is not allowed by the
    Casimir scalars; returns a list of (degree, label)."""
    P = state.params
    if not P.t == 1:
        return []
    ok = set(admissible_degrees(P, max([g.degree for g in state.generators], default=0)))
    bad = []
    for g in state.generators:
        for lab, n in g.isotype.counts.items():
            if n and (g.degree, lab) not in ok:
                bad.append((g.degree, lab))
    return bad
