"""Truncated formal power series in t, over Fractions or Poly2 coefficients.

A series of order N stores plain coefficients a_0..a_N and stands for
sum a_n t^n + O(t^(N+1)).  The q-exponential normalization used by the
number sequences (c_n = a_n * [n]_q!, i.e. sum c_n t^n / [n]_q!) is
applied only at extraction boundaries via :meth:`TSeries.number_coeff`;
the ring arithmetic itself stays factorial-free.

Arithmetic truncates pessimistically: results carry the minimum of the
operand orders, so precision loss is always explicit.  Division supports
a common power of t in numerator and denominator (needed when the
determining series vanishes at t = 0, e.g. the Genocchi 2t/(e_q(t)+1)),
but never divides by a series whose reduced constant term is zero.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .polyring import Poly2
from .qcore import QContext

_ZERO = Fraction(0)


class TSeries:
    """Truncated series; coefficients are all Fractions or all Poly2."""

    __slots__ = ("order", "coeffs", "scalar")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        self.scalar = not any(isinstance(c, Poly2) for c in coeffs)
        if self.scalar:
            coeffs = [Fraction(c) for c in coeffs]
            pad: object = _ZERO
        else:
            coeffs = [c if isinstance(c, Poly2) else Poly2.constant(c) for c in coeffs]
            pad = Poly2.zero()
        if len(coeffs) < order + 1:
            coeffs += [pad] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs[: order + 1]

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "TSeries":
        return cls([c], order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([Fraction(1)], order)

    def __repr__(self):
        return f"TSeries(order={self.order}, coeffs={self.coeffs!r})"

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def _check_ring(self, other: "TSeries") -> None:
        if self.scalar != other.scalar:
            raise ValueError("coefficient rings do not match")

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TSeries([coef * c for coef in self.coeffs], self.order)
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        if self.scalar:
            return TSeries(kernels.series_mul_scalar(self.coeffs, other.coeffs, n), n)
        raw = kernels.series_mul_poly(
            [c.terms for c in self.coeffs], [c.terms for c in other.coeffs], n
        )
        return TSeries([Poly2._raw(d) for d in raw], n)

    __rmul__ = __mul__

    def reciprocal(self) -> "TSeries":
        """Multiplicative inverse up to truncation; needs a nonzero constant term."""
        if not self.scalar:
            raise ValueError("reciprocal is only defined over scalar coefficients")
        return TSeries(kernels.series_recip_scalar(self.coeffs, self.order), self.order)

    # -- operators from the generating-function manipulations ----------------

    def q_derivative_t(self, ctx: QContext) -> "TSeries":
        """a_n t^n -> [n]_q a_n t^(n-1); result order drops by one."""
        if self.order == 0:
            zero = _ZERO if self.scalar else Poly2.zero()
            return TSeries([zero], 0)
        return TSeries(
            [ctx.q_int(n) * self.coeffs[n] for n in range(1, self.order + 1)],
            self.order - 1,
        )

    def dilate_t(self, a) -> "TSeries":
        """Substitute t -> a*t: a_n -> a_n * a^n."""
        a = Fraction(a)
        pw = Fraction(1)
        out = []
        for n in range(self.order + 1):
            out.append(self.coeffs[n] * pw)
            pw *= a
        return TSeries(out, self.order)

    def mul_t(self) -> "TSeries":
        """Multiply by t; exact, so the order grows by one."""
        zero = _ZERO if self.scalar else Poly2.zero()
        return TSeries([zero] + self.coeffs, self.order + 1)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def shift_down(self, v: int) -> "TSeries":
        """Divide by t^v; the first v coefficients must vanish."""
        if v == 0:
            return self
        if any(self.coeffs[i] for i in range(v)):
            raise ValueError(f"series is not divisible by t^{v}")
        return TSeries(self.coeffs[v:], self.order - v)

    def number_coeff(self, n: int, ctx: QContext) -> Fraction:
        """Coefficient in q-exponential normalization: a_n * [n]_q!."""
        return self.coeffs[n] * ctx.q_factorial(n)

    def to_poly_ring(self) -> "TSeries":
        """Lift scalar coefficients to constant polynomials."""
        if not self.scalar:
            return self
        return TSeries([Poly2.constant(c) for c in self.coeffs], self.order)


def divide(num: TSeries, den: TSeries) -> "TSeries":
    """Exact truncated quotient num/den, cancelling a shared power of t.

    den must be a nonzero scalar series; num's valuation must reach den's.
    The result order is min(orders) - valuation(den): each cancelled power
    of t costs one order of truncation, which callers must budget for.
    """
    if not num.scalar or not den.scalar:
        raise ValueError("divide is only defined over scalar coefficients")
    v = den.valuation()
    if v is None:
        raise ZeroDivisionError("division by the zero series")
    if v:
        num = num.shift_down(v)
        den = den.shift_down(v)
    n = min(num.order, den.order)
    num = TSeries(num.coeffs[: n + 1], n)
    den = TSeries(den.coeffs[: n + 1], n)
    return num * den.reciprocal()


def q_exp_small(arg: Poly2, order: int, ctx: QContext) -> TSeries:
    """e_q(t*arg) = sum arg^n t^n / [n]_q! truncated at ``order``."""
    out = []
    p = Poly2.constant(1)
    for n in range(order + 1):
        out.append(p * (1 / ctx.q_factorial(n)))
        if n < order:
            p = p * arg
    return TSeries(out, order)


def q_exp_big(arg: Poly2, order: int, ctx: QContext) -> TSeries:
    """E_q(t*arg) = sum q^(n(n-1)/2) arg^n t^n / [n]_q! truncated at ``order``."""
    out = []
    p = Poly2.constant(1)
    for n in range(order + 1):
        out.append(p * (ctx.q_gauss_power(n) / ctx.q_factorial(n)))
        if n < order:
            p = p * arg
    return TSeries(out, order)


def q_exp_scalar(c, order: int, ctx: QContext) -> TSeries:
    """e_q(c*t) with plain Fraction coefficients c^n / [n]_q!."""
    c = Fraction(c)
    out = []
    pw = Fraction(1)
    for n in range(order + 1):
        out.append(pw / ctx.q_factorial(n))
        pw *= c
    return TSeries(out, order)
