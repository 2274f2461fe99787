"""Finite fields F_p and F_{p^2}.

Elements of F_{p^2} = F_p[u]/(u^2 + a u + b) are stored as coordinate pairs
(x0, x1) meaning x0 + x1*u.  Arrays of field elements carry the coordinate
as a leading axis of length ext_degree, so a matrix over F_{p^2} is an int64
array of shape (2, m, n).  All the bulk arithmetic in the package goes
through the vectorised helpers on FieldSpec.
"""
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import isprime


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    p: int
    ext_degree: int = 1
    modulus: tuple = ()

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.ext_degree not in (1, 2):
            raise FieldError("only degree 1 and 2 extensions are supported")
        if self.ext_degree == 2:
            a, b = self.modulus
            if any((r * r + a * r + b) % self.p == 0 for r in range(self.p)):
                raise FieldError(f"u^2+{a}u+{b} has a root mod {self.p}")

    @property
    def e(self):
        return self.ext_degree

    @property
    def q(self):
        return self.p ** self.ext_degree

    def __repr__(self):
        if self.e == 1:
            return f"F{self.p}"
        a, b = self.modulus
        return f"F{self.p}^2[u^2+{a}u+{b}]"

    # -- scalars -------------------------------------------------------
    def __call__(self, x):
        return self.elem(x)

    def elem(self, x):
        if isinstance(x, FieldElement):
            if x.spec != self:
                # lift a prime-field element into the extension
                if x.spec.p == self.p and x.spec.e <= self.e:
                    return FieldElement(self, x.coords + (0,) * (self.e - x.spec.e))
                raise FieldError("field mismatch")
            return x
        if isinstance(x, tuple):
            return FieldElement(self, tuple(int(v) % self.p for v in x))
        return FieldElement(self, (int(x) % self.p,) + (0,) * (self.e - 1))

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def elements(self):
        """All q elements, prime subfield first."""
        if self.e == 1:
            return [self.elem(i) for i in range(self.p)]
        return [self.elem((i, j)) for j in range(self.p) for i in range(self.p)]

    # -- arrays --------------------------------------------------------
    def zeros(self, *shape):
        return np.zeros((self.e,) + shape, dtype=np.int64)

    def const(self, x, *shape):
        x = self.elem(x)
        out = self.zeros(*shape)
        for i, v in enumerate(x.coords):
            out[i] = v
        return out

    def scalar_array(self, x):
        """A field element as an array of shape (e,), broadcastable against
        element arrays once reshaped by the caller."""
        return np.array(self.elem(x).coords, dtype=np.int64)

    def add(self, X, Y):
        return (X + Y) % self.p

    def sub(self, X, Y):
        return (X - Y) % self.p

    def neg(self, X):
        return (-X) % self.p

    def mul(self, X, Y):
        p = self.p
        if self.e == 1:
            return (X * Y) % p
        a, b = self.modulus
        t = X[1] * Y[1] % p
        c0 = (X[0] * Y[0] - b * t) % p
        c1 = (X[0] * Y[1] + X[1] * Y[0] - a * t) % p
        return np.stack([c0, c1])

    def smul(self, x, X):
        """Scalar x times array X."""
        s = self.scalar_array(x).reshape((self.e,) + (1,) * (X.ndim - 1))
        return self.mul(np.broadcast_to(s, X.shape), X)

    def matmul(self, A, B):
        p = self.p
        if self.e == 1:
            return (A[0] @ B[0] % p)[None]
        a, b = self.modulus
        t = A[1] @ B[1] % p
        c0 = (A[0] @ B[0] - b * t) % p
        c1 = (A[0] @ B[1] + A[1] @ B[0] - a * t) % p
        return np.stack([c0, c1])

    def nonzero_mask(self, X):
        return np.any(X != 0, axis=0)

    def inv_coords(self, c):
        p = self.p
        if self.e == 1:
            if c[0] % p == 0:
                raise ZeroDivisionError("inverse of zero")
            return (pow(int(c[0]), -1, p),)
        a, b = self.modulus
        x0, x1 = int(c[0]) % p, int(c[1]) % p
        # (x0 + x1 u)(x0 + x1 u') = norm, with u' = -a - u the conjugate root
        norm = (x0 * x0 - a * x0 * x1 + b * x1 * x1) % p
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        ni = pow(norm, -1, p)
        return ((x0 - a * x1) * ni % p, (-x1) * ni % p)

    def eye(self, n):
        out = self.zeros(n, n)
        out[0] = np.eye(n, dtype=np.int64)
        return out

    def to_elements(self, X):
        """Flat array of shape (e, n) -> list of FieldElement."""
        return [FieldElement(self, tuple(int(v) for v in X[:, i])) for i in range(X.shape[1])]

    def from_elements(self, xs):
        out = self.zeros(len(xs))
        for i, x in enumerate(xs):
            out[:, i] = self.elem(x).coords
        return out


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coords: tuple = field(default=(0,))

    def _other(self, y):
        return self.spec.elem(y)

    def _lift(self, y):
        # allow mixing prime-field and extension elements of the same p
        if isinstance(y, FieldElement) and y.spec != self.spec and y.spec.e > self.spec.e:
            return y.spec.elem(self), y
        return self, self.spec.elem(y)

    def __add__(self, y):
        x, y = self._lift(y)
        return FieldElement(x.spec, tuple((u + v) % x.spec.p for u, v in zip(x.coords, y.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, tuple((-u) % self.spec.p for u in self.coords))

    def __sub__(self, y):
        x, y = self._lift(y)
        return x + (-y)

    def __rsub__(self, y):
        return (-self) + y

    def __mul__(self, y):
        x, y = self._lift(y)
        F = x.spec
        p = F.p
        if F.e == 1:
            return FieldElement(F, ((x.coords[0] * y.coords[0]) % p,))
        a, b = F.modulus
        x0, x1 = x.coords
        y0, y1 = y.coords
        t = x1 * y1
        return FieldElement(F, ((x0 * y0 - b * t) % p, (x0 * y1 + x1 * y0 - a * t) % p))

    __rmul__ = __mul__

    def inv(self):
        return FieldElement(self.spec, self.spec.inv_coords(self.coords))

    def __truediv__(self, y):
        x, y = self._lift(y)
        return x * y.inv()

    def __rtruediv__(self, y):
        return self.spec.elem(y) * self.inv()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inv() ** (-n)
        result, base = self.spec.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, y):
        if isinstance(y, (int, np.integer)):
            y = self.spec.elem(y)
        if not isinstance(y, FieldElement):
            return NotImplemented
        if y.spec.p != self.spec.p:
            return False
        a = self.coords + (0,) * (2 - len(self.coords))
        b = y.coords + (0,) * (2 - len(y.coords))
        return a == b

    def __hash__(self):
        return hash((self.spec.p, self.coords + (0,) * (2 - len(self.coords))))

    def __bool__(self):
        return any(self.coords)

    def in_prime_field(self):
        return all(v == 0 for v in self.coords[1:])

    def rep(self):
        """Canonical integer representative in [0, p) of a prime-field element."""
        if not self.in_prime_field():
            raise FieldError(f"{self} is not in the prime field")
        return self.coords[0]

    def __int__(self):
        return self.rep()

    def __repr__(self):
        if self.spec.e == 1 or self.coords[1] == 0:
            return str(self.coords[0])
        x0, x1 = self.coords
        if x0 == 0:
            return "u" if x1 == 1 else f"{x1}u"
        return f"{x0}+{x1}u" if x1 != 1 else f"{x0}+u"


@lru_cache(maxsize=None)
def smallest_irreducible_quadratic(p):
    for a in range(p):
        for b in range(p):
            if all((r * r + a * r + b) % p for r in range(p)):
                return (a, b)
    raise FieldError(f"no irreducible quadratic mod {p}")  # impossible


def make_field(p, ext_degree=1):
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if ext_degree == 1:
        return FieldSpec(p, 1, ())
    if ext_degree == 2:
        return FieldSpec(p, 2, smallest_irreducible_quadratic(p))
    raise FieldError("ext_degree must be 1 or 2")


def generic_c(spec):
    """The adjoined root u, which lies outside F_p."""
    if spec.e != 2:
        raise FieldError("generic parameters need the quadratic extension")
    return spec.elem((0, 1))


# -- exact linear algebra -----------------------------------------------

def rref(F, M):
    """Row-reduce an (e, m, n) array.  Returns (R, pivots) where R holds only
    the nonzero rows.  Pivots are chosen at the first nonzero row in column
    order, so the result is deterministic."""
    R = M.copy() % F.p
    m, n = R.shape[1], R.shape[2]
    pivots = []
    r = 0
    for col in range(n):
        if r >= m:
            break
        nz = np.flatnonzero(F.nonzero_mask(R[:, r:, col]))
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[:, [r, i]] = R[:, [i, r]]
        inv = F.inv_coords(tuple(R[:, r, col]))
        R[:, r] = F.smul(inv, R[:, r])
        f = R[:, :, col].copy()
        f[:, r] = 0
        rows = np.flatnonzero(F.nonzero_mask(f))
        if rows.size:
            upd = F.mul(f[:, rows, None], np.broadcast_to(R[:, r:r + 1, :], (F.e, rows.size, n)))
            R[:, rows] = F.sub(R[:, rows], upd)
        pivots.append(col)
        r += 1
    return R[:, :r], pivots


def rank(F, M):
    if M.shape[1] == 0 or M.shape[2] == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F, M):
    """Basis (as rows, shape (e, d, n)) of {v : M v = 0}."""
    n = M.shape[2]
    if M.shape[1] == 0:
        return F.eye(n)
    R, piv = rref(F, M)
    free = [j for j in range(n) if j not in set(piv)]
    out = F.zeros(len(free), n)
    for k, j in enumerate(free):
        out[0, k, j] = 1
        for i, pc in enumerate(piv):
            out[:, k, pc] = (-R[:, i, j]) % F.p
    return out


def reduce_rows(F, V, R, pivots):
    """Reduce the rows of V modulo the row space of the RREF matrix R."""
    V = V.copy()
    for i, pc in enumerate(pivots):
        f = V[:, :, pc].copy()
        rows = np.flatnonzero(F.nonzero_mask(f))
        if rows.size:
            upd = F.mul(f[:, rows, None], np.broadcast_to(R[:, i:i + 1, :], (F.e, rows.size, V.shape[2])))
            V[:, rows] = F.sub(V[:, rows], upd)
    return V
