"""Exact residual checks for every identity the families satisfy.

All comparisons are exact polynomial equality over rationals; there are
no tolerances anywhere.  Ground truth is always the polynomial table
built from the generating product a(t) e_q(tx) E_q(ty); printed formula
renderings are treated as candidate readings ("variants") to be
adjudicated against that table, never as ground truth themselves.

Check families
--------------
* construction-guaranteed checks (lowering, k-fold lowering, number
  consistency, classical limit, exponential inverse, 1D slice): these
  must pass; a failure is an implementation bug.
* the recurrence variant search: evaluates every reading in a finite
  variant space and reports the set with zero residual at every n.
* q-difference-equation pairing: substituting the k-fold identities into
  a recurrence reading must reproduce its residual exactly (scaled by
  [n]_q), so a reading's q-difference equation holds iff its recurrence
  does.
* closed-form matrices: per-n comparison of the computed alpha/beta
  sequences against the candidate closed forms attached to each named
  family; mismatches are findings, not failures.

k-fold note: on the y axis the usable exact identity is

    ([n-k]_q!/[n]_q!) * D_{q,y}^k A_n  =  q^(k(k-1)/2) * A_{n-k}(x, q^k y),

the q^(k(k-1)/2) factor coming from D_{q,y}[p(qy)] = q (D_{q,y} p)(qy).
The factor-free rendering of that identity is false for k >= 2, q != 1;
check_kfold verifies the corrected form exactly and records the
factor-free form's failure as a finding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .appell import AppellFamily, NAMED_KINDS, make_family, one_variable_polys
from .polyring import Poly2
from .pseries import TSeries, q_exp_big, q_exp_small
from .qcore import QContext, format_rational

VERSION = "0.1.0"

BETA_CONVENTIONS = ("no_t", "with_t")
BETA_INDEX_SHIFTS = ("k", "k-1")
BETA_SCALES = ("1", "1/[k]_q")
QPOWER_EXPONENTS = ("n-k", "k-1", "k-2")
X_TERM_FORMS = ("x*q^n", "x*[n]_q*q^n")


@dataclass(frozen=True)
class VariantSpec:
    """One reading of the recurrence's ambiguous factors.

    The template, for n >= 1 (with E and the beta term chosen by the
    fields below; the k = 0 term carries alpha_0, which vanishes for
    every valuation-0 determining series):

        A_n(qx, y) = (1/[n]_q) * sum_{k=0..n} [n k]_q q^E(n,k) A_{n-k}(x,y)
                       * (alpha_k + B(k) y)        [B only for k >= 1]
                     + X(n) * x * A_{n-1}(x,y)
    """

    beta_convention: str = "no_t"
    beta_index_shift: str = "k-1"
    beta_scale: str = "1/[k]_q"
    qpower_exponent: str = "n-k"
    x_term_form: str = "x*q^n"

    def label(self) -> str:
        return "|".join(
            (
                self.beta_convention,
                self.beta_index_shift,
                self.beta_scale,
                self.qpower_exponent,
                self.x_term_form,
            )
        )

    def to_json(self) -> dict:
        return {
            "beta_convention": self.beta_convention,
            "beta_index_shift": self.beta_index_shift,
            "beta_scale": self.beta_scale,
            "qpower_exponent": self.qpower_exponent,
            "x_term_form": self.x_term_form,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VariantSpec":
        return cls(**data)


#: every variant, in deterministic order
VARIANT_SPACE = tuple(
    VariantSpec(*combo)
    for combo in itertools.product(
        BETA_CONVENTIONS, BETA_INDEX_SHIFTS, BETA_SCALES, QPOWER_EXPONENTS, X_TERM_FORMS
    )
)

#: the literal printed reading of the recurrence
PRINTED_VARIANT = VariantSpec("no_t", "k-1", "1/[k]_q", "n-k", "x*q^n")

#: the derivation-faithful reading (the one the search finds)
DERIVED_VARIANT = VariantSpec("with_t", "k", "1", "n-k", "x*q^n")


@dataclass(frozen=True)
class FailureWitness:
    """First failing index of a check, with the exact nonzero residual."""

    n: int
    k: int | None = None
    residual: tuple = ()  # graded-lex [i, j, "p/q"] triples

    def to_json(self) -> dict:
        out = {"n": self.n, "residual": [list(t) for t in self.residual]}
        if self.k is not None:
            out["k"] = self.k
        return out


@dataclass
class CheckResult:
    name: str
    family: str
    q: Fraction | None
    max_n: int
    passed: bool
    variant: VariantSpec | None = None
    first_failure: FailureWitness | None = None
    matrix: dict | None = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "family": self.family,
            "q": format_rational(self.q) if self.q is not None else "*",
            "max_n": self.max_n,
            "passed": self.passed,
        }
        if self.variant is not None:
            out["variant"] = self.variant.to_json()
        if self.matrix is not None:
            out["matrix"] = self.matrix
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure.to_json()
        return out


def _witness(n: int, residual: Poly2, k: int | None = None) -> FailureWitness:
    return FailureWitness(
        n=n, k=k, residual=tuple(tuple(t) for t in residual.to_json_terms())
    )


# ---------------------------------------------------------------------------
# construction-guaranteed checks
# ---------------------------------------------------------------------------


def check_lowering(fam: AppellFamily) -> CheckResult:
    """D_{q,x} A_n = [n]_q A_{n-1}(x,y)  and  D_{q,y} A_n = [n]_q A_{n-1}(x,qy)."""
    ctx = fam.ctx
    for n in range(1, fam.order + 1):
        rx = fam.polys[n].q_derivative_x(ctx) - ctx.q_int(n) * fam.polys[n - 1]
        if rx:
            return CheckResult(
                "lowering", fam.name, fam.q, fam.order, False, first_failure=_witness(n, rx)
            )
        ry = fam.polys[n].q_derivative_y(ctx) - ctx.q_int(n) * fam.polys[n - 1].dilate(
            1, ctx.q
        )
        if ry:
            return CheckResult(
                "lowering", fam.name, fam.q, fam.order, False, first_failure=_witness(n, ry)
            )
    return CheckResult("lowering", fam.name, fam.q, fam.order, True)


def check_kfold(fam: AppellFamily, kmax: int | None = None) -> CheckResult:
    """k-fold lowering on both axes, exact.

    x axis:  ([n-k]!/[n]!) D_{q,x}^k A_n = A_{n-k}(x,y)
    y axis:  ([n-k]!/[n]!) D_{q,y}^k A_n = q^(k(k-1)/2) A_{n-k}(x, q^k y)

    The matrix records the y-axis factor adjudication: the factor-free
    form fails for k >= 2 at q != 1 (first counterexample kept).
    """
    ctx = fam.ctx
    factor_free_fails: list = []
    max_n = fam.order
    for n in range(1, max_n + 1):
        dx = fam.polys[n]
        dy = fam.polys[n]
        kcap = min(n, kmax) if kmax is not None else n
        for k in range(1, kcap + 1):
            dx = dx.q_derivative_x(ctx)
            dy = dy.q_derivative_y(ctx)
            scale = ctx.q_factorial(n - k) / ctx.q_factorial(n)
            rx = scale * dx - fam.polys[n - k]
            if rx:
                return CheckResult(
                    "kfold", fam.name, fam.q, max_n, False, first_failure=_witness(n, rx, k)
                )
            target = fam.polys[n - k].dilate(1, ctx.q_pow(k))
            ry = scale * dy - ctx.q_gauss_power(k) * target
            if ry:
                return CheckResult(
                    "kfold", fam.name, fam.q, max_n, False, first_failure=_witness(n, ry, k)
                )
            if len(factor_free_fails) < 1 and (scale * dy - target):
                factor_free_fails.append(
                    {"n": n, "k": k, "residual": (scale * dy - target).to_json_terms()}
                )
    matrix = {
        "y_axis_factor": "q^(k(k-1)/2)",
        "factor_free_form_fails": factor_free_fails,
    }
    return CheckResult("kfold", fam.name, fam.q, max_n, True, matrix=matrix)


def check_numbers(fam: AppellFamily) -> CheckResult:
    """numbers[n] == A_n(0, 0) exactly."""
    for n in range(fam.order + 1):
        got = fam.polys[n].evaluate(0, 0)
        if got != fam.numbers[n]:
            res = Poly2.constant(got - fam.numbers[n])
            return CheckResult(
                "numbers", fam.name, fam.q, fam.order, False, first_failure=_witness(n, res)
            )
    return CheckResult("numbers", fam.name, fam.q, fam.order, True)


def check_slice_1d(fam: AppellFamily) -> CheckResult:
    """A_n(x, 0) equals the 1D table built from a(t) e_q(tx) alone."""
    oned = one_variable_polys(fam.aq, fam.ctx, fam.order)
    for n in range(fam.order + 1):
        sliced = Poly2(
            {(i, 0): c for (i, j), c in fam.polys[n].terms.items() if j == 0}
        )
        r = sliced - oned[n]
        if r:
            return CheckResult(
                "slice_1d", fam.name, fam.q, fam.order, False, first_failure=_witness(n, r)
            )
    return CheckResult("slice_1d", fam.name, fam.q, fam.order, True)


def check_exp_inverse(ctx: QContext, order: int = 16) -> CheckResult:
    """e_q(tx) * E_q(-tx) = 1 up to the truncation order, exactly."""
    x = Poly2.x()
    prod = q_exp_small(x, order, ctx) * q_exp_big(-x, order, ctx)
    for n in range(order + 1):
        want = Poly2.constant(1) if n == 0 else Poly2.zero()
        r = prod.coeffs[n] - want
        if r:
            return CheckResult(
                "exp_inverse", "*", ctx.q, order, False, first_failure=_witness(n, r)
            )
    return CheckResult("exp_inverse", "*", ctx.q, order, True)


def _binomial_expand(coeffs) -> Poly2:
    """sum coeffs[i] * (x+y)^i; classical-limit oracle helper."""
    xy = Poly2.x() + Poly2.y()
    acc = Poly2.zero()
    p = Poly2.constant(1)
    for i, c in enumerate(coeffs):
        acc = acc + p * c
        p = p * xy
    return acc


def check_classical_limit(kind: str, order: int) -> CheckResult:
    """At q = 1 the table must collapse to classical polynomials of x + y.

    Oracle: build the q = 1 family, take the 1-variable slice P_n(x) =
    A_n(x, 0), and require A_n(x, y) = P_n(x + y) after re-expansion.
    """
    ctx = QContext(1)
    fam = make_family(kind, ctx, order)
    for n in range(order + 1):
        expanded = _binomial_expand(fam.polys[n].slice_y0())
        r = fam.polys[n] - expanded
        if r:
            return CheckResult(
                "classical_limit", kind, Fraction(1), order, False,
                first_failure=_witness(n, r),
            )
    return CheckResult("classical_limit", kind, Fraction(1), order, True)


# ---------------------------------------------------------------------------
# recurrence variants and q-difference equations
# ---------------------------------------------------------------------------


def _qpower(ctx: QContext, form: str, n: int, k: int) -> Fraction:
    e = {"n-k": n - k, "k-1": k - 1, "k-2": k - 2}[form]
    return ctx.q**e


def _beta_term(fam: AppellFamily, v: VariantSpec, k: int) -> Fraction:
    seq = fam.beta_no_t if v.beta_convention == "no_t" else fam.beta_with_t
    idx = k if v.beta_index_shift == "k" else k - 1
    val = seq[idx]
    if v.beta_scale == "1/[k]_q":
        val = val / fam.ctx.q_int(k)
    return val


def _x_weight(fam: AppellFamily, v: VariantSpec, n: int) -> Fraction:
    w = fam.ctx.q_pow(n)
    if v.x_term_form == "x*[n]_q*q^n":
        w = w * fam.ctx.q_int(n)
    return w


#: fixed evaluation point for fast nonzero certificates (never trusted for zero)
_EVAL_POINT = (Fraction(2, 3), Fraction(5, 7))


class ResidualEngine:
    """Shared variant-independent building blocks for the residual checks.

    For each template kind the RHS is a linear combination
    sum_k w(v,n,k) * (alpha_k * P[n][k]  +  B(v,k) * (y * P[n][k])) + x-term,
    where P[n][k] is A_{n-k} itself ("rec") or its exact k-fold substitute
    ("qde_x"/"qde_y"); only the scalar weights depend on the variant, so
    the polynomial products are precomputed once per family, along with
    their values at a fixed rational point.

    The point values give a cheap *nonzero* certificate for a residual
    (a polynomial that is nonzero at a point is nonzero); a zero value is
    never trusted, the full polynomial is computed instead, so reported
    statuses stay exact.

    The k-fold substitutes:

        qde_x: A_{n-k} = ([n-k]!/[n]!) D_{q,x}^k A_n
        qde_y: A_{n-k} = q^(-k(k-1)/2) ([n-k]!/[n]!) (D_{q,y}^k A_n)(x, y/q^k)

    are exact polynomial identities of the constructed table, so each
    (1/[n]_q-normalized) qde residual coincides with the rec residual,
    term by term.
    """

    def __init__(self, fam: AppellFamily, max_n: int | None = None):
        self.fam = fam
        self.max_n = fam.order if max_n is None else min(max_n, fam.order)
        ctx = fam.ctx
        y = Poly2.y()
        qinv = 1 / ctx.q
        x0, y0 = _EVAL_POINT
        self._memo: dict = {}
        self._lhs = [Poly2.zero()]
        self._lhs_val = [Fraction(0)]
        self._sub: dict = {}
        self._alpha_p: dict = {}
        self._y_p: dict = {}
        self._x_sub: dict = {}
        self._alpha_val: dict = {}
        self._y_val: dict = {}
        self._x_val: dict = {}
        for n in range(1, self.max_n + 1):
            lhs = fam.polys[n].dilate(ctx.q, 1)
            self._lhs.append(lhs)
            self._lhs_val.append(lhs.evaluate(x0, y0))
            dx = fam.polys[n]
            dy = fam.polys[n]
            for k in range(0, n + 1):
                if k:
                    dx = dx.q_derivative_x(ctx)
                    dy = dy.q_derivative_y(ctx)
                scale = ctx.q_factorial(n - k) / ctx.q_factorial(n)
                subs = {
                    "rec": fam.polys[n - k],
                    "qde_x": scale * dx,
                    "qde_y": (scale / ctx.q_gauss_power(k)) * dy.dilate(1, qinv**k),
                }
                for kind, p in subs.items():
                    self._sub[(kind, n, k)] = p
                    ap = fam.alpha[k] * p
                    self._alpha_p[(kind, n, k)] = ap
                    self._alpha_val[(kind, n, k)] = ap.evaluate(x0, y0)
                    if k >= 1:
                        yp = y * p
                        self._y_p[(kind, n, k)] = yp
                        self._y_val[(kind, n, k)] = yp.evaluate(x0, y0)
            inv_n = 1 / ctx.q_int(n)
            xsubs = {
                "rec": Poly2.x() * fam.polys[n - 1],
                "qde_x": Poly2.x() * fam.polys[n].q_derivative_x(ctx) * inv_n,
                "qde_y": Poly2.x()
                * fam.polys[n].q_derivative_y(ctx).dilate(1, qinv)
                * inv_n,
            }
            for kind, p in xsubs.items():
                self._x_sub[(kind, n)] = p
                self._x_val[(kind, n)] = p.evaluate(x0, y0)

    def _weights(self, v: VariantSpec, n: int):
        ctx = self.fam.ctx
        inv_n = 1 / ctx.q_int(n)
        # same weight for all kinds: the substitutes already carry
        # [n-k]!/[n]!, and [n k]_q/[n]_q * [n-k]!/[n]! = (1/[k]_q!)/[n]_q,
        # the 1/[n]_q-normalized printed q-difference weight
        return [
            ctx.q_binomial(n, k) * inv_n * _qpower(ctx, v.qpower_exponent, n, k)
            for k in range(n + 1)
        ]

    def residual(self, kind: str, v: VariantSpec, n: int) -> Poly2:
        """LHS - RHS at index n; ``kind`` is "rec", "qde_x" or "qde_y"."""
        key = (kind, v, n)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        fam = self.fam
        rhs = Poly2.zero()
        weights = self._weights(v, n)
        for k in range(0, n + 1):
            w = weights[k]
            rhs = rhs + w * self._alpha_p[(kind, n, k)]
            if k >= 1:
                rhs = rhs + (w * _beta_term(fam, v, k)) * self._y_p[(kind, n, k)]
        rhs = rhs + _x_weight(fam, v, n) * self._x_sub[(kind, n)]
        out = self._lhs[n] - rhs
        self._memo[key] = out
        return out

    def residual_value(self, kind: str, v: VariantSpec, n: int) -> Fraction:
        """The residual evaluated at the fixed point (scalar arithmetic only)."""
        fam = self.fam
        acc = self._lhs_val[n]
        weights = self._weights(v, n)
        for k in range(0, n + 1):
            w = weights[k]
            acc -= w * self._alpha_val[(kind, n, k)]
            if k >= 1:
                acc -= (w * _beta_term(fam, v, k)) * self._y_val[(kind, n, k)]
        return acc - _x_weight(fam, v, n) * self._x_val[(kind, n)]

    def residual_is_zero(self, kind: str, v: VariantSpec, n: int) -> bool:
        """Exact zero test: point value certifies nonzero, zero is confirmed fully."""
        if self.residual_value(kind, v, n):
            return False
        return not self.residual(kind, v, n)

    def substitution_exact(self, kind: str) -> tuple:
        """Whether the k-fold substitutes equal A_{n-k} as polynomials.

        Returns (True, None) or (False, (n, k, residual)).  Equality here
        makes every variant's qde residual equal its rec residual
        identically, which is how the pairing check certifies all
        variants at once.  The k = 0 entries only matter through the
        alpha_0 product, so those are compared instead of the raw P.
        """
        for n in range(1, self.max_n + 1):
            for k in range(0, n + 1):
                if k == 0:
                    d = self._alpha_p[(kind, n, 0)] - self._alpha_p[("rec", n, 0)]
                else:
                    d = self._sub[(kind, n, k)] - self._sub[("rec", n, k)]
                if d:
                    return False, (n, k, d)
            dx = self._x_sub[(kind, n)] - self._x_sub[("rec", n)]
            if dx:
                return False, (n, None, dx)
        return True, None


def recurrence_residual(fam: AppellFamily, v: VariantSpec, n: int) -> Poly2:
    """LHS - RHS of the variant recurrence at index n (exact polynomial)."""
    return ResidualEngine(fam, n).residual("rec", v, n)


def qde_residual(fam: AppellFamily, axis: str, v: VariantSpec, n: int) -> Poly2:
    """Residual of the variant's q-difference equation at index n.

    Normalized by 1/[n]_q (see :class:`ResidualEngine`), so it equals the
    recurrence residual whenever the k-fold substitution holds.
    """
    if axis not in ("x", "y"):
        raise ValueError("axis must be 'x' or 'y'")
    return ResidualEngine(fam, n).residual(f"qde_{axis}", v, n)


def check_recurrence(
    fam: AppellFamily,
    v: VariantSpec,
    max_n: int | None = None,
    engine: ResidualEngine | None = None,
) -> CheckResult:
    """Zero-residual test of one variant for 1 <= n <= max_n."""
    engine = engine or ResidualEngine(fam, max_n)
    zero_by_n = []
    witness = None
    for n in range(1, engine.max_n + 1):
        zero = engine.residual_is_zero("rec", v, n)
        zero_by_n.append(zero)
        if not zero and witness is None:
            witness = _witness(n, engine.residual("rec", v, n))
    return CheckResult(
        "recurrence_variant",
        fam.name,
        fam.q,
        engine.max_n,
        all(zero_by_n),
        variant=v,
        first_failure=witness,
        matrix={"zero_residual_by_n": zero_by_n},
    )


def search_recurrence_variants(
    fam: AppellFamily,
    max_n: int | None = None,
    engine: ResidualEngine | None = None,
):
    """Evaluate every variant; returns the full (variant, result) table."""
    engine = engine or ResidualEngine(fam, max_n)
    return [(v, check_recurrence(fam, v, engine=engine)) for v in VARIANT_SPACE]


def check_qde(
    fam: AppellFamily,
    axis: str,
    v: VariantSpec,
    max_n: int | None = None,
    engine: ResidualEngine | None = None,
) -> CheckResult:
    """Zero-residual test of one variant's q-difference equation on one axis."""
    if axis not in ("x", "y"):
        raise ValueError("axis must be 'x' or 'y'")
    engine = engine or ResidualEngine(fam, max_n)
    zero_by_n = []
    witness = None
    for n in range(1, engine.max_n + 1):
        zero = engine.residual_is_zero(f"qde_{axis}", v, n)
        zero_by_n.append(zero)
        if not zero and witness is None:
            witness = _witness(n, engine.residual(f"qde_{axis}", v, n))
    return CheckResult(
        f"qde_{axis}",
        fam.name,
        fam.q,
        engine.max_n,
        all(zero_by_n),
        variant=v,
        first_failure=witness,
        matrix={"zero_residual_by_n": zero_by_n},
    )


def check_qde_pairing(
    fam: AppellFamily,
    axis: str,
    max_n: int | None = None,
    engine: ResidualEngine | None = None,
) -> CheckResult:
    """For every variant: the q-difference equation holds iff the recurrence does.

    Checked in the strong form  qde residual == recurrence residual
    (both 1/[n]_q-normalized), which implies the iff.  When the k-fold
    substitution is exact as polynomials the equality holds for every
    variant at once; only if it is not does the per-variant comparison
    run to locate a witness.
    """
    engine = engine or ResidualEngine(fam, max_n)
    exact, defect = engine.substitution_exact(f"qde_{axis}")
    if exact:
        return CheckResult(f"qde_pairing_{axis}", fam.name, fam.q, engine.max_n, True)
    for v in VARIANT_SPACE:
        for n in range(1, engine.max_n + 1):
            diff = engine.residual(f"qde_{axis}", v, n) - engine.residual("rec", v, n)
            if diff:
                return CheckResult(
                    f"qde_pairing_{axis}",
                    fam.name,
                    fam.q,
                    engine.max_n,
                    False,
                    variant=v,
                    first_failure=_witness(n, diff, defect[1]),
                )
    # substitution differed somewhere invisible to every variant (e.g. a
    # k = 0 slot with alpha_0 = 0); the pairing property itself holds
    return CheckResult(f"qde_pairing_{axis}", fam.name, fam.q, engine.max_n, True)


# ---------------------------------------------------------------------------
# closed-form matrices for the named families
# ---------------------------------------------------------------------------


def _closed_form_candidates(fam: AppellFamily):
    """Candidate closed forms (alpha_candidate, beta_candidate) per index.

    Returns two lists indexed by n; entries are Fractions or None where no
    candidate is stated for that index.
    """
    ctx = fam.ctx
    q = ctx.q
    c = fam.numbers
    N = fam.order
    kind = fam.name

    def conv(n):
        return sum(ctx.q_binomial(n, k) * c[k] for k in range(n + 1))

    if kind == "bernoulli":
        alpha_cand = [-c[n] / q for n in range(N + 1)]
        beta_cand = [Fraction(1)] + [(q - 1) / q * conv(n) for n in range(1, N + 1)]
    elif kind == "euler":
        alpha_cand = [None] + [c[n - 1] / 2 for n in range(1, N + 1)]
        beta_cand = [(q + 1) / 2] + [(q - 1) / 2 * conv(n) for n in range(1, N + 1)]
    elif kind == "genocchi":
        alpha_cand = [1 / q, -1 / q] + [c[n] / (2 * q) for n in range(2, N + 1)]
        alpha_cand = alpha_cand[: N + 1]
        beta_cand = [1 / q] + [(q - 1) / (2 * q) * conv(n) for n in range(1, N + 1)]
    else:
        raise ValueError(f"no closed-form candidates for family {kind!r}")
    return alpha_cand, beta_cand


#: anchor values stated alongside the general closed forms
ALPHA_ANCHORS = {
    "bernoulli": lambda ctx: -1 / ctx.q_int(2),
    "euler": lambda ctx: Fraction(-1, 2),
    "genocchi": lambda ctx: -1 / ctx.q,
}


def check_closed_forms(fam: AppellFamily) -> CheckResult:
    """Match matrix: computed alpha/beta (both conventions) vs candidates.

    Mismatches are findings about the candidate formulas, so the result
    passes as long as the matrix is fully populated; rows are exact p/q
    strings for auditability.
    """
    if fam.name not in NAMED_KINDS:
        raise ValueError("closed-form matrix is defined for named families only")
    alpha_cand, beta_cand = _closed_form_candidates(fam)
    rows = []
    for n in range(fam.order + 1):
        ac = alpha_cand[n]
        bc = beta_cand[n]
        rows.append(
            {
                "n": n,
                "alpha_computed": format_rational(fam.alpha[n]),
                "alpha_candidate": None if ac is None else format_rational(ac),
                "alpha_match": None if ac is None else fam.alpha[n] == ac,
                "beta_no_t_computed": format_rational(fam.beta_no_t[n]),
                "beta_with_t_computed": format_rational(fam.beta_with_t[n]),
                "beta_candidate": format_rational(bc),
                "beta_match_no_t": fam.beta_no_t[n] == bc,
                "beta_match_with_t": fam.beta_with_t[n] == bc,
            }
        )
    anchor = ALPHA_ANCHORS[fam.name](fam.ctx)
    matrix = {
        "rows": rows,
        "alpha_1_anchor": {
            "candidate": format_rational(anchor),
            "computed": format_rational(fam.alpha[1]),
            "match": fam.alpha[1] == anchor,
        },
    }
    # passing means fully populated; match values themselves are findings
    populated = len(rows) == fam.order + 1
    return CheckResult(
        "closed_forms", fam.name, fam.q, fam.order, populated, matrix=matrix
    )


def match_pattern(result: CheckResult) -> tuple:
    """Boolean shape of a closed-form matrix, for cross-q stability checks."""
    rows = result.matrix["rows"]
    return tuple(
        (r["alpha_match"], r["beta_match_no_t"], r["beta_match_with_t"]) for r in rows
    ) + ((result.matrix["alpha_1_anchor"]["match"],),)


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

CORE_SUITE = "core"
THEOREMS_SUITE = "theorems"
SUITES = (CORE_SUITE, THEOREMS_SUITE)

#: rows that gate the exit code; everything else is informational
HARD_CHECKS = frozenset(
    {
        "lowering",
        "kfold",
        "numbers",
        "slice_1d",
        "exp_inverse",
        "classical_limit",
        "qde_pairing_x",
        "qde_pairing_y",
        "variant_stability",
    }
)


@dataclass(frozen=True)
class SuiteConfig:
    qs: tuple
    degree: int
    families: tuple
    suites: tuple
    variants: bool = True
    kfold_max_n: int = 10
    tamper: int | None = None

    def validate(self) -> None:
        if self.degree < 2:
            raise ValueError("verification needs degree >= 2")
        for q in self.qs:
            if q <= 0:
                raise ValueError(f"q must be positive, got {q}")
        for fam in self.families:
            if fam not in NAMED_KINDS:
                raise ValueError(f"unknown family: {fam!r}")
        for s in self.suites:
            if s not in SUITES:
                raise ValueError(f"unknown suite: {s!r}")

    def to_json(self) -> dict:
        return {
            "qs": [format_rational(q) for q in self.qs],
            "degree": self.degree,
            "families": list(self.families),
            "suites": list(self.suites),
            "variants": "on" if self.variants else "off",
        }


@dataclass
class Report:
    version: str
    config: SuiteConfig
    results: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "config": self.config.to_json(),
            "results": [r.to_json() for r in self.results],
        }

    def hard_failures(self) -> list:
        return [r for r in self.results if r.name in HARD_CHECKS and not r.passed]

    def all_hard_passed(self) -> bool:
        return not self.hard_failures()


def _passing_labels(table) -> tuple:
    return tuple(v.label() for v, res in table if res.passed)


def run_suite(config: SuiteConfig) -> Report:
    """Run the selected suites over the (family, q) grid, deterministically.

    Row order is fixed by the configuration: per-q exponential-inverse
    rows, then per-family classical-limit rows, then per (family, q) the
    core rows followed by the theorem rows, then the suite-level
    stability rows.  Execution is sequential, so the report is a pure
    function of the configuration.
    """
    config.validate()
    report = Report(version=VERSION, config=config)
    out = report.results
    run_core = CORE_SUITE in config.suites
    run_theorems = THEOREMS_SUITE in config.suites

    families = {}
    for kind in config.families:
        for q in config.qs:
            fam = make_family(kind, QContext(q), config.degree)
            if config.tamper is not None:
                fam = fam.with_tampered(config.tamper)
            families[(kind, q)] = fam

    if run_core:
        for q in config.qs:
            out.append(check_exp_inverse(QContext(q)))
        for kind in config.families:
            out.append(check_classical_limit(kind, config.degree))

    search_tables = {}
    stability_matrices = {}
    for kind in config.families:
        for q in config.qs:
            fam = families[(kind, q)]
            if run_core:
                out.append(check_lowering(fam))
                out.append(check_kfold(fam, kmax=None))
                out.append(check_numbers(fam))
                out.append(check_slice_1d(fam))
            if run_theorems:
                max_n = min(config.kfold_max_n, config.degree)
                engine = ResidualEngine(fam, max_n)
                if config.variants:
                    table = search_recurrence_variants(fam, engine=engine)
                    search_tables[(kind, q)] = table
                    out.extend(res for _, res in table)
                    out.append(
                        CheckResult(
                            "variant_search",
                            kind,
                            q,
                            max_n,
                            True,
                            matrix={
                                "space_size": len(VARIANT_SPACE),
                                "passing": list(_passing_labels(table)),
                            },
                        )
                    )
                out.append(check_qde_pairing(fam, "x", engine=engine))
                out.append(check_qde_pairing(fam, "y", engine=engine))
                cf = check_closed_forms(fam)
                stability_matrices[(kind, q)] = match_pattern(cf)
                out.append(cf)

    if run_theorems and config.variants:
        # passing sets must agree across families and across q != 1
        sets = {
            key: _passing_labels(table)
            for key, table in search_tables.items()
            if key[1] != 1
        }
        if len(sets) >= 2:
            distinct = sorted(set(sets.values()))
            out.append(
                CheckResult(
                    "variant_stability",
                    "*",
                    None,
                    config.degree,
                    len(distinct) == 1,
                    matrix={
                        "distinct_passing_sets": [list(s) for s in distinct],
                        "grid_size": len(sets),
                    },
                )
            )
    if run_theorems:
        for kind in config.families:
            patterns = {
                q: stability_matrices[(kind, q)]
                for q in config.qs
                if q != 1 and (kind, q) in stability_matrices
            }
            if len(patterns) >= 2:
                stable = len(set(patterns.values())) == 1
                out.append(
                    CheckResult(
                        "closed_form_stability",
                        kind,
                        None,
                        config.degree,
                        stable,
                        matrix={"qs": [format_rational(q) for q in patterns]},
                    )
                )
    return report
