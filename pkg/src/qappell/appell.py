"""2D q-Appell families: polynomial tables, number sequences, alpha/beta data.

A family is determined by an invertible series a(t) (the "determining
series"): the polynomial table is

    A_n(x, y) = [n]_q! * (coefficient of t^n in  a(t) e_q(tx) E_q(ty)),

its numbers are c_n = A_n(0,0), and the two auxiliary sequences come from
the ratio series used by the recurrence machinery:

    sum alpha_n t^n/[n]_q!    =  t * D_{q,t} a(t) / a(qt)
    sum beta_n  t^n/[n]_q!    =  a(t) / a(qt)            ("no_t" convention)

The second sequence is also carried with an extra factor t
("with_t" convention, beta^wt_n = [n]_q * beta_{n-1}); the identity
checks adjudicate between the two conventions empirically, so neither is
declared canonical here.

Named families:

    bernoulli   a(t) = t / (e_q(t) - 1)
    euler       a(t) = 2 / (e_q(t) + 1)
    genocchi    a(t) = 2t / (e_q(t) + 1)

The Genocchi series vanishes at t = 0 (valuation 1): the common factor t
is cancelled exactly in the ratio series, its alpha_0 is 1/q rather than
0, and its polynomial table starts with A_0 = 0.  Everything downstream
is written to tolerate this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import Poly2
from .pseries import TSeries, divide, q_exp_big, q_exp_scalar, q_exp_small
from .qcore import QContext, parse_rational

NAMED_KINDS = ("bernoulli", "euler", "genocchi")
FAMILY_KINDS = NAMED_KINDS + ("custom",)


@dataclass(frozen=True)
class AppellFamily:
    """An immutable, fully materialized family of order N.

    polys[n] is A_n(x,y); numbers[n] = A_n(0,0); alpha/beta sequences are
    in q-exponential normalization (already multiplied by [n]_q!).
    """

    name: str
    ctx: QContext
    order: int
    aq: TSeries
    polys: tuple
    numbers: tuple
    alpha: tuple
    beta_no_t: tuple
    beta_with_t: tuple

    @property
    def q(self) -> Fraction:
        return self.ctx.q

    def with_tampered(self, n: int) -> "AppellFamily":
        """Copy with polys[n] += x; negative control for the checkers."""
        if not 0 <= n <= self.order:
            raise ValueError(f"tamper index {n} outside 0..{self.order}")
        polys = list(self.polys)
        polys[n] = polys[n] + Poly2.x()
        return AppellFamily(
            name=self.name,
            ctx=self.ctx,
            order=self.order,
            aq=self.aq,
            polys=tuple(polys),
            numbers=self.numbers,
            alpha=self.alpha,
            beta_no_t=self.beta_no_t,
            beta_with_t=self.beta_with_t,
        )


def family_series(kind: str, ctx: QContext, order: int) -> TSeries:
    """Determining series of a named family, truncated at ``order``.

    The Bernoulli quotient t/(e_q(t)-1) is computed as the reciprocal of
    (e_q(t)-1)/t, whose constant term is 1, so no division by a series
    vanishing at t = 0 ever happens.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if kind == "bernoulli":
        # (e_q(t)-1)/t has coefficients 1/[m+1]_q!
        f = TSeries([1 / ctx.q_factorial(m + 1) for m in range(order + 1)], order)
        return f.reciprocal()
    if kind == "euler":
        e = q_exp_scalar(1, order, ctx)
        return (e + TSeries.one(order)).reciprocal() * 2
    if kind == "genocchi":
        if order == 0:
            return TSeries([Fraction(0)], 0)
        return family_series("euler", ctx, order - 1).mul_t()
    raise ValueError(f"unknown family kind: {kind!r}")


def build_family(aq: TSeries, ctx: QContext, order: int, name: str = "custom") -> AppellFamily:
    """Materialize the table and sequences from a determining series.

    aq must be a nonzero scalar series.  If it has valuation v > 0 the
    ratio series lose v orders to the cancelled t^v, so aq.order must be
    at least order + v (named-family builders arrange this).
    """
    if not aq.scalar:
        raise ValueError("determining series must have scalar coefficients")
    v = aq.valuation()
    if v is None:
        raise ValueError("determining series must not be the zero series")
    if aq.order < order + v:
        raise ValueError(
            f"determining series of valuation {v} needs order >= {order + v}, "
            f"got {aq.order}"
        )

    gen = aq.to_poly_ring() * q_exp_small(Poly2.x(), order, ctx) * q_exp_big(
        Poly2.y(), order, ctx
    )
    polys = tuple(gen.coeffs[n] * ctx.q_factorial(n) for n in range(order + 1))
    numbers = tuple(aq.number_coeff(n, ctx) for n in range(order + 1))

    den = aq.dilate_t(ctx.q)
    alpha_series = divide(aq.q_derivative_t(ctx).mul_t(), den)
    beta_series = divide(aq, den)
    alpha = tuple(alpha_series.number_coeff(n, ctx) for n in range(order + 1))
    beta_no_t = tuple(beta_series.number_coeff(n, ctx) for n in range(order + 1))
    beta_with_t = tuple(
        Fraction(0) if n == 0 else ctx.q_int(n) * beta_no_t[n - 1]
        for n in range(order + 1)
    )

    return AppellFamily(
        name=name,
        ctx=ctx,
        order=order,
        aq=aq,
        polys=polys,
        numbers=numbers,
        alpha=alpha,
        beta_no_t=beta_no_t,
        beta_with_t=beta_with_t,
    )


def parse_custom_coeffs(values) -> list:
    """Validate a custom determining sequence c_0..c_N (q-exponential form).

    Accepts rationals or p/q strings; c_0 must be nonzero (custom input
    contract; named families are allowed to start at 0 but user-supplied
    tables are not).
    """
    coeffs = []
    for v in values:
        coeffs.append(parse_rational(v) if isinstance(v, str) else Fraction(v))
    if not coeffs:
        raise ValueError("custom coefficient list is empty")
    if coeffs[0] == 0:
        raise ValueError("custom determining series needs c_0 != 0")
    return coeffs


def make_family(
    kind: str,
    ctx: QContext,
    order: int,
    custom_coeffs=None,
    name: str | None = None,
) -> AppellFamily:
    """Build a named or custom family at the given order.

    For the Genocchi kind the determining series is requested one order
    higher to pay for its valuation (see :func:`build_family`).
    """
    if kind == "custom":
        if custom_coeffs is None:
            raise ValueError("custom family needs a coefficient list")
        coeffs = parse_custom_coeffs(custom_coeffs)
        if len(coeffs) < order + 1:
            raise ValueError(
                f"custom family of degree {order} needs {order + 1} coefficients, "
                f"got {len(coeffs)}"
            )
        aq = TSeries(
            [coeffs[n] / ctx.q_factorial(n) for n in range(order + 1)], order
        )
        return build_family(aq, ctx, order, name=name or "custom")
    if kind not in NAMED_KINDS:
        raise ValueError(f"unknown family kind: {kind!r}")
    extra = 1 if kind == "genocchi" else 0
    aq = family_series(kind, ctx, order + extra)
    return build_family(aq, ctx, order, name=name or kind)


def one_variable_polys(aq: TSeries, ctx: QContext, order: int) -> tuple:
    """Table of the 1D family from a(t) e_q(tx) alone; used as the y = 0 oracle."""
    gen = aq.to_poly_ring() * q_exp_small(Poly2.x(), order, ctx)
    return tuple(gen.coeffs[n] * ctx.q_factorial(n) for n in range(order + 1))
