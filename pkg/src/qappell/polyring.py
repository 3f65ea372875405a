"""Sparse bivariate polynomials over exact rationals.

A :class:`Poly2` maps exponent pairs ``(i, j)`` (powers of x and y) to
nonzero Fraction coefficients; the zero polynomial is the empty map.
The two partial q-derivatives act coefficientwise
(``x^i y^j -> [i]_q x^(i-1) y^j`` and symmetrically in y), which is total
on polynomials and valid at q = 1; the difference-quotient form
``(p(qx,y) - p(x,y)) / ((q-1)x)`` is kept only as a test oracle.

Term order everywhere (printing, serialization, witnesses) is graded
lexicographic, descending: higher total degree first, then higher
x-power.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .qcore import QContext, format_rational, parse_rational

_ZERO = Fraction(0)


def _grlex_key(term):
    (i, j), _ = term
    return (-(i + j), -i)


class Poly2:
    """Immutable sparse polynomial in x and y with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for key, val in terms.items():
                val = Fraction(val)
                if val:
                    clean[(int(key[0]), int(key[1]))] = val
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def constant(cls, c) -> "Poly2":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Poly2":
        return cls({(i, j): Fraction(c)})

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "Poly2":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def _raw(cls, terms: dict) -> "Poly2":
        # internal: terms already canonical (no zeros, int-pair keys)
        p = cls.__new__(cls)
        p.terms = terms
        return p

    # -- ring arithmetic ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly2):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly2.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly2._raw(kernels.poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Poly2._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly2):
            return Poly2._raw(kernels.poly_mul(self.terms, other.terms))
        if isinstance(other, (int, Fraction)):
            return Poly2._raw(kernels.poly_scale(self.terms, Fraction(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly2):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly2.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), _ZERO)

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=_grlex_key)

    # -- the operators used by the identity checks ----------------------

    def _max_exp(self, axis: int) -> int:
        return max((key[axis] for key in self.terms), default=0)

    def q_derivative_x(self, ctx: QContext) -> "Poly2":
        """x^i y^j -> [i]_q x^(i-1) y^j; linear, kills x-free terms."""
        qints = ctx.q_int_list(self._max_exp(0))
        return Poly2._raw(kernels.poly_deriv_x(self.terms, qints))

    def q_derivative_y(self, ctx: QContext) -> "Poly2":
        """x^i y^j -> [j]_q x^i y^(j-1); linear, kills y-free terms."""
        qints = ctx.q_int_list(self._max_exp(1))
        return Poly2._raw(kernels.poly_deriv_y(self.terms, qints))

    def dilate(self, a, b) -> "Poly2":
        """Substitute x -> a*x, y -> b*y for rational a, b."""
        return Poly2._raw(kernels.poly_dilate(self.terms, Fraction(a), Fraction(b)))

    def evaluate(self, x0, y0) -> Fraction:
        return kernels.poly_eval(self.terms, Fraction(x0), Fraction(y0))

    def slice_y0(self) -> list:
        """Coefficients c_0..c_d of p(x, 0) as a dense list in x."""
        if not self.terms:
            return []
        d = max((i for (i, j) in self.terms if j == 0), default=0)
        out = [_ZERO] * (d + 1)
        for (i, j), val in self.terms.items():
            if j == 0:
                out[i] = val
        return out

    # -- rendering and serialization ------------------------------------

    def __repr__(self):
        return f"Poly2({self})"

    def __str__(self):
        return self.render_text()

    def _monomial_str(self, i: int, j: int, latex: bool) -> str:
        parts = []
        for sym, e in (("x", i), ("y", j)):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{{{e}}}" if latex else f"{sym}^{e}")
        return " ".join(parts)

    def _render(self, latex: bool) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (i, j), val in self.sorted_terms():
            mono = self._monomial_str(i, j, latex)
            mag = format_rational(abs(val))
            if mono and abs(val) == 1:
                body = mono
            elif mono:
                body = f"{mag} {mono}"
            else:
                body = mag
            if not chunks:
                chunks.append(body if val > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if val > 0 else f"- {body}")
        return " ".join(chunks)

    def render_text(self) -> str:
        return self._render(latex=False)

    def render_latex(self) -> str:
        return self._render(latex=True)

    def to_json_terms(self) -> list:
        """JSON form: [i, j, "p/q"] triples in graded-lex order."""
        return [[i, j, format_rational(v)] for (i, j), v in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, triples) -> "Poly2":
        terms = {}
        for i, j, coef in triples:
            terms[(int(i), int(j))] = parse_rational(coef)
        return cls(terms)
