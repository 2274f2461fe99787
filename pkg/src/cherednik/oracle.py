"""Independent cross-checks.

`exhaustive_singular_search` is the quotient construction with every
degree filter switched off.  `dictionary_check` rebuilds L on the
permutation representation V (three variables, no relation among them) with
its own Dunkl matrices and compares with the reflection-representation
build: h_V = h_h for t = 0 and h_V = h_h (1 + z + ... + z^(p-1)) for t = 1.
"""
from itertools import combinations

import numpy as np

from . import rep3
from .ffield import nullspace, rref
from .verma import Operators, build_irreducible, default_bound, hilbert

MAX_COST = 7          # largest p searched without an explicit override


class CostGuardError(RuntimeError):
    pass


def exhaustive_singular_search(params, bound=None, override=False):
    if params.p > MAX_COST and not override:
        raise CostGuardError(f"p={params.p} exceeds the exhaustive-search guard (p <= {MAX_COST})")
    return build_irreducible(params, bound, use_filter=False)


# -- three-variable realization ---------------------------------------------------

def monomials3(k):
    """Exponent triples of total degree k, in a fixed order."""
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


SWAPS = {(0, 1): (1, 0, 2), (0, 2): (2, 1, 0), (1, 2): (0, 2, 1)}
# the same transpositions as permutations of {1, 2, 3}, for the tau model
PERMS = {(0, 1): (2, 1, 3), (0, 2): (3, 2, 1), (1, 2): (1, 3, 2)}


def _swap(m, ij):
    i, j = ij
    m = list(m)
    m[i], m[j] = m[j], m[i]
    return tuple(m)


def _divdiff(m, ij):
    """(m - s m) / (x_i - x_j) as {monomial: int}."""
    i, j = ij
    a, b = m[i], m[j]
    if a == b:
        return {}
    sgn = 1
    if a < b:
        a, b, sgn = b, a, -1
        i, j = j, i
    out = {}
    for r in range(a - b):
        e = list(m)
        e[i] = b + r
        e[j] = b + (a - b - 1 - r)
        out[tuple(e)] = out.get(tuple(e), 0) + sgn
    return out


class VOperators:
    """Dunkl operators on S V* (x) tau, y in V given by three coordinates."""

    def __init__(self, params):
        self.params = params
        self.F = params.F
        self.n = params.dim_tau
        self._cache = {}
        self._index = {}

    def basis(self, k):
        if k not in self._index:
            ms = monomials3(k)
            self._index[k] = {m: i for i, m in enumerate(ms)}
        return self._index[k]

    def dim(self, k):
        return self.n * len(self.basis(k)) if k >= 0 else 0

    def _tau(self, ij):
        return rep3.slot_matrix(self.F, self.params.tau, PERMS[ij])

    def dunkl(self, y, k):
        key = (y, k)
        if key in self._cache:
            return self._cache[key]
        F, P, n = self.F, self.params, self.n
        src, dst = self.basis(k), self.basis(k - 1)
        m_src, m_dst = len(src), len(dst)
        D = F.zeros(n * m_dst, n * m_src)
        t = F.scalar_array(P.t)
        for m, col in src.items():
            # t * d_y
            for v in range(3):
                if m[v] and y[v] % F.p:
                    e = list(m)
                    e[v] -= 1
                    row = dst[tuple(e)]
                    coef = F.scalar_array(F.elem(m[v] * y[v]) * P.t)
                    for s in range(n):
                        D[:, s * m_dst + row, s * m_src + col] = F.add(D[:, s * m_dst + row, s * m_src + col], coef)
            for ij in combinations(range(3), 2):
                w = (y[ij[0]] - y[ij[1]]) % F.p
                if not w:
                    continue
                S = self._tau(ij)
                cw = P.c * w
                for e, cnt in _divdiff(m, ij).items():
                    row = dst[e]
                    for s in range(n):
                        for r in range(n):
                            sv = S[:, r, s]
                            if not np.any(sv):
                                continue
                            coef = F.scalar_array(cw * cnt * F.elem(tuple(int(x) for x in sv)))
                            D[:, r * m_dst + row, s * m_src + col] = F.sub(D[:, r * m_dst + row, s * m_src + col], coef)
        D.setflags(write=False)
        self._cache[key] = D
        return D


def build_v_module(params, bound):
    """Graded dims of the irreducible quotient of the V-side Verma module."""
    if params.p == 3:
        raise ValueError("the V-realization comparison needs p != 3")
    ops = VOperators(params)
    F = params.F
    ys = [(1, -1, 0), (0, 1, -1), (1, 1, 1)]
    dims = [ops.dim(0)]
    J = (F.zeros(0, ops.dim(0)), [])
    for k in range(1, bound + 1):
        R, piv = J
        proj = rep3.quotient_projector(F, ops.dim(k - 1), R, piv)
        A = np.concatenate([F.matmul(proj, ops.dunkl(y, k)) for y in ys], axis=1)
        K = nullspace(F, A)
        J = rref(F, K) if K.shape[1] else (K, [])
        q = ops.dim(k) - len(J[1])
        dims.append(q)
        if q == 0:
            break
    while dims and dims[-1] == 0:
        dims.pop()
    return dims


def dictionary_check(params, bound=None):
    """Compare Hilbert polynomials of the two realizations; returns
    (ok, h_h, h_V)."""
    p = params.p
    if p == 3:
        raise ValueError("p = 3 divides n = 3; the dictionary does not apply")
    bound = default_bound(p) if bound is None else bound
    hh = hilbert(build_irreducible(params, bound))
    t = int(params.t.rep())
    hv = build_v_module(params, bound + (p - 1) * t + 1)
    want = list(hh)
    if t == 1:
        want = [sum(hh[k - j] for j in range(p) if 0 <= k - j < len(hh)) for k in range(len(hh) + p - 1)]
    return want == hv, hh, hv
