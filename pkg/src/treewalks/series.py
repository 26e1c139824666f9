"""Exact truncated power series and the closed-walk generating function.

The generating function for closed-walk counts on an infinite
delta-regular tree is

    f(t) = 2(delta - 1) / (delta - 2 + delta * sqrt(1 - 4(delta - 1) t^2))

whose t^(2n) coefficient is W(2n, delta).  Everything here is exact
rational arithmetic (fractions.Fraction); no floats anywhere, since the
acceptance check is exact integer equality with the combinatorial
formulas.

delta = 2 is fine (the denominator's constant term is 2); delta = 1 is
rejected because the formula degenerates to 0/0.
"""

from __future__ import annotations

from fractions import Fraction


class PowerSeries:
    """Truncated formal power series with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a truncated series stores at least the constant term")
        self.coeffs = cs

    @property
    def order(self) -> int:
        """Maximum retained degree."""
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        D = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[d] + other.coeffs[d] for d in range(D + 1)]
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        D = min(self.order, other.order)
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if a == 0:
                continue
            for j in range(D + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out)

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries([c * a for a in self.coeffs])

    def add_constant(self, c) -> "PowerSeries":
        out = list(self.coeffs)
        out[0] += Fraction(c)
        return PowerSeries(out)

    @classmethod
    def constant(cls, c, D: int) -> "PowerSeries":
        return cls([Fraction(c)], order=D)


def sqrt_series(c, D: int) -> "PowerSeries":
    """Series g with g^2 = 1 - c*t^2 (truncated to degree D), g(0) = 1.

    Binomial expansion: [t^(2m)] g = binom(1/2, m) * (-c)^m, computed by
    the iterative ratio so every coefficient stays an exact Fraction.
    """
    if D < 0:
        raise ValueError(f"D must be >= 0, got {D}")
    c = Fraction(c)
    out = [Fraction(0)] * (D + 1)
    out[0] = Fraction(1)
    term = Fraction(1)  # binom(1/2, m) * (-c)^m
    m = 0
    while 2 * (m + 1) <= D:
        m += 1
        # binom(1/2, m) / binom(1/2, m-1) = (1/2 - (m-1)) / m = (3 - 2m) / (2m)
        term *= Fraction(3 - 2 * m, 2 * m) * (-c)
        out[2 * m] = term
    return PowerSeries(out)


def reciprocal_series(s: PowerSeries) -> PowerSeries:
    """Series r with s*r = 1 up to s's truncation order."""
    a0 = s.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    D = s.order
    out = [Fraction(0)] * (D + 1)
    out[0] = 1 / a0
    for d in range(1, D + 1):
        # degree-by-degree solve: sum_{i=0}^{d} s[i] r[d-i] = 0
        acc = sum(s.coeffs[i] * out[d - i] for i in range(1, d + 1))
        out[d] = -acc / a0
    return PowerSeries(out)


def gf_series(delta: int, N: int) -> PowerSeries:
    """The walk generating function truncated to degree 2N + 1.

    The extra odd degree is deliberate so the odd-coefficients-vanish
    check in ``gf_walk_counts`` is meaningful at the top order.
    """
    if delta < 2:
        raise ValueError(f"delta must be >= 2 (formula degenerates below), got {delta}")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    D = 2 * N + 1
    root = sqrt_series(4 * (delta - 1), D)
    denom = root.scale(delta).add_constant(delta - 2)
    return reciprocal_series(denom).scale(2 * (delta - 1))


def gf_walk_counts(delta: int, N: int) -> list[int]:
    """[t^(2n)] of the generating function for n = 0..N, as exact integers."""
    f = gf_series(delta, N)
    for d in range(1, f.order + 1, 2):
        assert f[d] == 0, f"odd-degree coefficient t^{d} is {f[d]}, expected 0"
    counts = []
    for n_ in range(N + 1):
        coeff = f[2 * n_]
        assert coeff.denominator == 1, (
            f"coefficient of t^{2 * n_} is non-integral: {coeff}"
        )
        assert coeff >= 0
        counts.append(int(coeff))
    assert counts[0] == 1
    return counts
