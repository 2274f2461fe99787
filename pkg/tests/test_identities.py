"""Young-basis identities in S h*, p > 3: products, divided differences,
derivatives along y1 and the product rearrangements used for D_{y1}."""
import pytest

from cherednik.ffield import make_field
from cherednik.polyring import GradedPoly, divided_difference, invariant_generators, partial_derivative

PRIMES = [5, 7, 11, 13]


class Env:
    def __init__(self, p):
        F = self.F = make_field(p)
        self.bp = GradedPoly.linear(F, 3, 3)
        self.bm = GradedPoly.linear(F, 1, -1)
        self.s2, self.s3, self.q = invariant_generators(F)
        self.A = -(self.bp * self.bp) + self.bm * self.bm * 3     # -b+^2 + 3b-^2
        self.B = self.bp * self.bm * 2                            # 2 b+ b-
        inv3 = F.elem(3).inv()
        self.y1 = tuple(int(x.rep()) for x in (inv3 * 2, -inv3, -inv3))   # y1 projected to h

    def r(self, n, d=1):
        return self.F.elem(n) * self.F.elem(d).inv()

    def dd12(self, f):
        return divided_difference((1, 2), f)

    def dd13(self, f):
        return divided_difference((1, 3), f)

    def d1(self, f):
        return partial_derivative(self.y1, f)


def products(e):
    P, M, s2, s3, q, A, B, r = e.bp, e.bm, e.s2, e.s3, e.q, e.A, e.B, e.r
    return [
        (P * P, s2 * -6 - A * r(1, 2)),
        (M * M, s2 * -2 + A * r(1, 6)),
        (P * B, q * 6 - s2 * M * 6),
        (P * A, s3 * 54 + s2 * P * 6),
        (M * B, s3 * 18 - s2 * P * 2),
        (M * A, q * -6 - s2 * M * 6),
        (A * A, s2 * s2 * 72 - s3 * P * 108 - s2 * A * 6),
        (A * B, s3 * M * 108 + s2 * B * 6),
        (B * B, s2 * s2 * 24 + s3 * P * 36 + s2 * A * 2),
        (q * P, s3 * M * -9 - s2 * B),
        (q * M, s3 * P * 3 + s2 * A * r(1, 3)),
        (A * q, s2 * s2 * M * -12 + s3 * B * 9),
        (B * q, s2 * s2 * P * 4 - s3 * A * 3),
        (q * q, s3 * s3 * -27 - s2 * s2 * s2 * 4),
    ]


def divided(e):
    P, M, s2, q, A, B, r = e.bp, e.bm, e.s2, e.q, e.A, e.B, e.r
    one = GradedPoly.const(e.F, 1)
    zero = GradedPoly(e.F)
    return [
        (e.dd12(P), zero), (e.dd13(P), one * 3),
        (e.dd12(M), one * 2), (e.dd13(M), one),
        (e.dd12(A), zero), (e.dd13(A), (-P + M * 3) * 3),
        (e.dd12(B), P * 4), (e.dd13(B), -P + M * 3),
        (e.dd12(q), s2 * -2 - A * r(1, 3)),
        (e.dd13(q), s2 * 2 - A * r(1, 6) + B * r(1, 2)),
    ]


def derivatives(e):
    P, M, s2, s3, q, A, B, r = e.bp, e.bm, e.s2, e.s3, e.q, e.A, e.B, e.r
    one = GradedPoly.const(e.F, 1)
    return [
        (e.d1(P), one), (e.d1(M), one),
        (e.d1(A), P * -2 + M * 6), (e.d1(B), P * 2 + M * 2),
        (e.d1(s2), P * r(-1, 6) + M * r(-1, 2)),
        (e.d1(s3), A * r(1, 36) + B * r(1, 12)),
        (e.d1(q), A * r(-1, 4) + B * r(1, 4)),
    ]


def rearrangements(e):
    P, M, s2, s3, q, A, B, r = e.bp, e.bm, e.s2, e.s3, e.q, e.A, e.B, e.r
    d2, d3 = e.d1(s2), e.d1(s3)
    return [
        (d2 * P, s2 + A * r(1, 12) + B * r(-1, 4)),
        (d3 * P, s3 * r(3, 2) + s2 * P * r(1, 6) - s2 * M * r(1, 2) + q * r(1, 2)),
        (d2 * M, s2 + A * r(-1, 12) + B * r(-1, 12)),
        (d3 * M, s3 * r(3, 2) + s2 * P * r(-1, 6) + s2 * M * r(-1, 6) + q * r(-1, 6)),
        (d2 * A, s3 * -9 - s2 * P + s2 * M * 3 + q * 3),
        (d3 * A, s2 * s2 * 2 - s3 * P * 3 + s3 * M * 9 - s2 * A * r(1, 6) + s2 * B * r(1, 2)),
        (d2 * B, s3 * -9 + s2 * P + s2 * M - q),
        (d3 * B, s2 * s2 * 2 + s3 * P * 3 + s3 * M * 3 + s2 * A * r(1, 6) + s2 * B * r(1, 6)),
        (d2 * q, s3 * P * r(-3, 2) + s3 * M * r(3, 2) + s2 * A * r(-1, 6) + s2 * B * r(1, 6)),
        (d3 * q, s2 * s2 * P * r(1, 3) + s2 * s2 * M * r(-1, 3) + s3 * A * r(-1, 4) + s3 * B * r(1, 4)),
    ]


LISTS = {"products": (products, 14), "divided": (divided, 10),
         "derivatives": (derivatives, 7), "rearrangements": (rearrangements, 10)}


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("name", sorted(LISTS))
def test_identity_list(p, name):
    build, n = LISTS[name]
    pairs = build(Env(p))
    assert len(pairs) == n
    bad = [i for i, (lhs, rhs) in enumerate(pairs) if lhs != rhs]
    assert not bad, f"{name} identities {bad} fail at p={p}"
