"""Representations of S3 per characteristic, K0 bookkeeping and characters.

Characters are Laurent polynomials (here: polynomials) in z whose
coefficients live in the Grothendieck group.  Labels valid per p:
p = 2: Triv, Stand;  p = 3: Triv, Sign;  p > 3: Triv, Sign, Stand.
"""
from dataclasses import dataclass

import numpy as np

from .ffield import make_field, nullspace, rank
from .polyring import S1, S2, action_matrix, compose, sign

TRIV, SIGN, STAND = "Triv", "Sign", "Stand"
DIMS = {TRIV: 1, SIGN: 1, STAND: 2}


def labels_for(p):
    if p == 2:
        return (TRIV, STAND)
    if p == 3:
        return (TRIV, SIGN)
    return (TRIV, SIGN, STAND)


def check_label(tau, p):
    tau = normalize_label(tau)
    if tau not in labels_for(p):
        raise ValueError(f"{tau} is not an irreducible representation of S3 in characteristic {p}")
    return tau


def normalize_label(tau):
    t = str(tau).strip().lower()
    for lab in (TRIV, SIGN, STAND):
        if t == lab.lower():
            return lab
    raise ValueError(f"unknown representation {tau!r}")


@dataclass(frozen=True)
class IrrepModel:
    label: str
    dim: int
    s1: np.ndarray
    s2: np.ndarray


def slot_matrix(F, tau, g):
    """Matrix of g on the model of tau used by the Verma engine.  Stand is
    h* itself with basis x1, x2 in every characteristic."""
    if tau == TRIV:
        return F.eye(1)
    if tau == SIGN:
        return F.const(sign(g), 1, 1)
    # degree-1 monomials are indexed by the x1 exponent (x2, x1); reverse
    # to the slot order (x1, x2)
    return action_matrix(F, g, 1)[:, ::-1, ::-1].copy()


def young_stand_model(F):
    """Stand on the basis (b+, b-), p > 3.  Columns are images."""
    half = F.elem(2).inv()
    s1 = F.zeros(2, 2)
    s1[:, 0, 0] = F.elem(1).coords
    s1[:, 1, 1] = F.elem(-1).coords
    s2 = F.zeros(2, 2)
    # (23).b+ = (-b+ + 3b-)/2, (23).b- = (b+ + b-)/2
    for (i, j), v in {(0, 0): -half, (1, 0): 3 * half, (0, 1): half, (1, 1): half}.items():
        s2[:, i, j] = v.coords
    return IrrepModel(STAND, 2, s1, s2)


def irreps_for(p, F=None):
    F = F or make_field(p)
    out = []
    for lab in labels_for(p):
        if lab == STAND and p > 3:
            out.append(young_stand_model(F))
        else:
            out.append(IrrepModel(lab, DIMS[lab], slot_matrix(F, lab, S1), slot_matrix(F, lab, S2)))
    return out


# -- Grothendieck group ------------------------------------------------------

class GrothClass:
    """Integer combination of irreducible labels valid for p."""

    def __init__(self, p, counts=None):
        self.p = p
        self.counts = {lab: 0 for lab in labels_for(p)}
        for lab, n in (counts or {}).items():
            lab = normalize_label(lab)
            if lab not in self.counts:
                # Sign = Triv in characteristic 2
                if p == 2 and lab == SIGN:
                    lab = TRIV
                else:
                    raise ValueError(f"{lab} is not valid for p={p}")
            self.counts[lab] += int(n)

    def __add__(self, other):
        return GrothClass(self.p, {k: self.counts[k] + other.counts[k] for k in self.counts})

    def __sub__(self, other):
        return GrothClass(self.p, {k: self.counts[k] - other.counts[k] for k in self.counts})

    def __mul__(self, other):
        if isinstance(other, GrothClass):
            return tensor_class(self, other)
        return GrothClass(self.p, {k: v * other for k, v in self.counts.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GrothClass) and self.p == other.p and self.counts == other.counts

    def __getitem__(self, lab):
        return self.counts[normalize_label(lab)]

    def dim(self):
        return sum(DIMS[k] * v for k, v in self.counts.items())

    def is_zero(self):
        return not any(self.counts.values())

    def __repr__(self):
        parts = [f"{v}[{k}]" if v != 1 else f"[{k}]" for k, v in self.counts.items() if v]
        return " + ".join(parts) if parts else "0"


def irrep_class(p, lab):
    return GrothClass(p, {lab: 1})


def _tensor_irreps(p, a, b):
    if a == TRIV:
        return {b: 1}
    if b == TRIV:
        return {a: 1}
    if a == SIGN and b == SIGN:
        return {TRIV: 1}
    if {a, b} == {SIGN, STAND}:
        return {STAND: 1}
    # Stand x Stand
    if p == 2:
        return {TRIV: 2, STAND: 1}
    return {TRIV: 1, SIGN: 1, STAND: 1}


def tensor_class(x, y):
    if x.p != y.p:
        raise ValueError("characteristic mismatch")
    out = GrothClass(x.p)
    for a, m in x.counts.items():
        if not m:
            continue
        for b, n in y.counts.items():
            if n:
                out = out + GrothClass(x.p, _tensor_irreps(x.p, a, b)) * (m * n)
    return out


# -- composition factors ------------------------------------------------------

def _group_words(F, s1, s2):
    g12 = F.matmul(s1, s2)
    g21 = F.matmul(s2, s1)
    s121 = F.matmul(g12, s1)
    n = s1.shape[1]
    return {"e": F.eye(n), "s1": s1, "s2": s2, "s1s2": g12, "s2s1": g21, "s1s2s1": s121}


def check_relations(F, s1, s2):
    n = s1.shape[1]
    I = F.eye(n)
    g = F.matmul(s1, s2)
    g3 = F.matmul(g, F.matmul(g, g))
    ok = (np.array_equal(F.matmul(s1, s1), I) and np.array_equal(F.matmul(s2, s2), I)
          and np.array_equal(g3, I))
    if not ok:
        raise ValueError("matrices do not define an action of S3")


def composition_factors(F, s1, s2, check=True):
    """Composition factors of the S3-module given by the matrices of
    s1 = (12) and s2 = (23), as true multiplicities (ranks and eigenspace
    dimensions, never reduced traces)."""
    p = F.p
    n = s1.shape[1]
    if n == 0:
        return GrothClass(p)
    if check:
        check_relations(F, s1, s2)
    if p == 2:
        if F.e != 2:
            raise ValueError("characteristic 2 factor counting needs F4")
        g = F.matmul(s1, s2)
        omega = F.elem((0, 1))  # root of u^2 + u + 1, a primitive cube root of 1
        triv = n - rank(F, F.sub(g, F.eye(n)))
        stand = n - rank(F, F.sub(g, F.smul(omega, F.eye(n))))
        return GrothClass(p, {TRIV: triv, STAND: stand})
    if p == 3:
        triv = n - rank(F, F.sub(s1, F.eye(n)))
        sgn = n - rank(F, F.add(s1, F.eye(n)))
        return GrothClass(p, {TRIV: triv, SIGN: sgn})
    w = _group_words(F, s1, s2)
    transp = F.add(F.add(w["s1"], w["s2"]), w["s1s2s1"])
    cyc = F.add(w["s1s2"], w["s2s1"])
    # the scalars 1/6 and 2/6 do not change ranks
    triv = rank(F, F.add(F.add(w["e"], transp), cyc))
    sgn = rank(F, F.add(F.sub(w["e"], transp), cyc))
    stand = rank(F, F.sub(F.smul(2, w["e"]), cyc)) // 2
    return GrothClass(p, {TRIV: triv, SIGN: sgn, STAND: stand})


def quotient_action(F, g_mat, U):
    """Action of g on ambient/U where U is given in RREF (R, pivots) form;
    returns the matrix on the standard complement basis (non-pivot
    coordinates)."""
    R, piv = U
    n = g_mat.shape[1]
    free = [j for j in range(n) if j not in set(piv)]
    proj = quotient_projector(F, n, R, piv)
    lift = F.zeros(n, len(free))
    for k, j in enumerate(free):
        lift[0, j, k] = 1
    return F.matmul(proj, F.matmul(g_mat, lift))


def quotient_projector(F, n, R, piv):
    """Matrix of F^n -> F^n/rowspace(R) in non-pivot coordinates:
    w -> w[N] - R[:, N]^T w[P]."""
    free = [j for j in range(n) if j not in set(piv)]
    P = F.zeros(len(free), n)
    for k, j in enumerate(free):
        P[0, k, j] = 1
    for i, pc in enumerate(piv):
        P[:, :, pc] = F.sub(P[:, :, pc], R[:, i, free])
    return P


# -- character series ---------------------------------------------------------

class CharacterSeries:
    """Finitely supported polynomial in z with K0 coefficients, stored as an
    integer array of shape (number of labels, length)."""

    def __init__(self, p, arr=None):
        self.p = p
        self.labels = labels_for(p)
        arr = np.zeros((len(self.labels), 0), dtype=np.int64) if arr is None else np.asarray(arr, dtype=np.int64)
        self.arr = _trim(arr)

    @classmethod
    def from_dict(cls, p, d):
        """d maps label -> list of coefficients (low degree first)."""
        labs = labels_for(p)
        n = max((len(v) for v in d.values()), default=0)
        arr = np.zeros((len(labs), n), dtype=np.int64)
        for lab, coeffs in d.items():
            lab = normalize_label(lab)
            if p == 2 and lab == SIGN:
                lab = TRIV
            arr[labs.index(lab), :len(coeffs)] += np.asarray(coeffs, dtype=np.int64)
        return cls(p, arr)

    @classmethod
    def monomial(cls, p, cls_, k=0):
        labs = labels_for(p)
        arr = np.zeros((len(labs), k + 1), dtype=np.int64)
        for lab, n in cls_.counts.items():
            arr[labs.index(lab), k] = n
        return cls(p, arr)

    @classmethod
    def scalar_poly(cls, p, coeffs):
        """Polynomial with [Triv] coefficients."""
        return cls.from_dict(p, {TRIV: list(coeffs)})

    def __len__(self):
        return self.arr.shape[1]

    def coeff(self, k):
        if k >= len(self) or k < 0:
            return GrothClass(self.p)
        return GrothClass(self.p, dict(zip(self.labels, self.arr[:, k])))

    def _padded(self, other):
        n = max(len(self), len(other))
        a = np.zeros((len(self.labels), n), dtype=np.int64)
        b = a.copy()
        a[:, :len(self)] = self.arr
        b[:, :len(other)] = other.arr
        return a, b

    def __add__(self, other):
        a, b = self._padded(other)
        return CharacterSeries(self.p, a + b)

    def __sub__(self, other):
        a, b = self._padded(other)
        return CharacterSeries(self.p, a - b)

    def __neg__(self):
        return CharacterSeries(self.p, -self.arr)

    def scale(self, n):
        return CharacterSeries(self.p, self.arr * n)

    def shift(self, k):
        arr = np.zeros((len(self.labels), len(self) + k), dtype=np.int64)
        arr[:, k:] = self.arr
        return CharacterSeries(self.p, arr)

    def mul_by_class(self, c):
        out = CharacterSeries(self.p)
        for k in range(len(self)):
            out = out + CharacterSeries.monomial(self.p, self.coeff(k) * c, k)
        return out

    def mul_by_poly(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if len(self) == 0 or coeffs.size == 0:
            return CharacterSeries(self.p)
        arr = np.stack([np.convolve(row, coeffs) for row in self.arr])
        return CharacterSeries(self.p, arr)

    def __mul__(self, other):
        if isinstance(other, GrothClass):
            return self.mul_by_class(other)
        if not isinstance(other, CharacterSeries):
            return self.scale(other)
        out = CharacterSeries(self.p)
        for k in range(len(other)):
            c = other.coeff(k)
            if not c.is_zero():
                out = out + self.mul_by_class(c).shift(k)
        return out

    def div_by_poly(self, coeffs):
        """Exact division of every component by an integer polynomial with
        constant term +-1; raises if the division leaves a remainder."""
        d = np.asarray(coeffs, dtype=np.int64)
        d = _trim(d[None])[0]
        if d[0] not in (1, -1):
            raise ValueError("divisor must have unit constant term")
        rows = []
        for row in self.arr:
            num = row.astype(np.int64).copy()
            n = len(num)
            qlen = max(n - len(d) + 1, 0)
            quo = np.zeros(qlen, dtype=np.int64)
            for i in range(qlen):
                quo[i] = num[i] * d[0]
                num[i:i + len(d)] -= quo[i] * d
            if np.any(num):
                raise ArithmeticError("series division is not exact")
            rows.append(quo)
        n = max((len(r) for r in rows), default=0)
        arr = np.zeros((len(self.labels), n), dtype=np.int64)
        for i, r in enumerate(rows):
            arr[i, :len(r)] = r
        return CharacterSeries(self.p, arr)

    def hilbert(self):
        dims = np.array([DIMS[lab] for lab in self.labels], dtype=np.int64)
        return _trim((dims @ self.arr)[None])[0] if len(self) else np.zeros(0, dtype=np.int64)

    def hilbert_list(self):
        return [int(v) for v in self.hilbert()]

    def to_dict(self):
        return {lab: [int(v) for v in self.arr[i]] for i, lab in enumerate(self.labels)}

    def __eq__(self, other):
        if not isinstance(other, CharacterSeries) or other.p != self.p:
            return False
        a, b = self._padded(other)
        return np.array_equal(a, b)

    def truncate(self, n):
        return CharacterSeries(self.p, self.arr[:, :n])

    def __repr__(self):
        terms = []
        for k in range(len(self)):
            c = self.coeff(k)
            if not c.is_zero():
                terms.append(f"({c})z^{k}")
        return " + ".join(terms) if terms else "0"


def hilbert_of(chi):
    return chi.hilbert()


def _trim(arr):
    if arr.shape[1] == 0:
        return arr
    nz = np.flatnonzero(np.any(arr != 0, axis=0))
    return arr[:, :nz[-1] + 1] if nz.size else arr[:, :0]


def poly_from_terms(terms):
    """{exponent: coefficient} -> dense coefficient list."""
    if not terms:
        return [0]
    out = [0] * (max(terms) + 1)
    for k, v in terms.items():
        out[k] += v
    return out
