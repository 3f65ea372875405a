"""Exact rational scalars and memoized q-combinatorics.

Every scalar in the package is an arbitrary-precision rational
(``fractions.Fraction``), so all results are exact and equality is
value equality on canonical forms.  A :class:`QContext` fixes the base
q > 0 and caches the q-integers, q-factorials and q-binomials derived
from it.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the external text form: ``p/q`` with optional sign on p, or a bare integer.

    Stricter than ``Fraction(str)``: decimals, exponents and whitespace are
    rejected, as is a zero denominator.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` or bare ``p``; the inverse of :func:`parse_rational`."""
    return str(value)


class QContext:
    """A rational base q > 0 together with memoized q-combinatorics.

    q = 1 is allowed (classical limit); q <= 0 is rejected because it can
    make q-integers vanish (q = -1 gives [2]_q = 0), which would poison
    every factorial division downstream.

    Instances are intended to be confined to one thread of control; the
    memo tables grow on demand and have no other observable effect.
    """

    def __init__(self, q: Fraction | int | str):
        if isinstance(q, str):
            q = parse_rational(q)
        q = Fraction(q)
        if q <= 0:
            raise ValueError(f"q must be a positive rational, got {q}")
        self.q = q
        self._ints = [Fraction(0)]
        self._facts = [Fraction(1)]
        self._qpows = [Fraction(1)]

    def __repr__(self) -> str:
        return f"QContext(q={self.q})"

    def _grow(self, n: int) -> None:
        q = self.q
        while len(self._ints) <= n:
            m = len(self._ints)
            self._qpows.append(self._qpows[-1] * q)
            # [m]_q = [m-1]_q + q^(m-1)
            self._ints.append(self._ints[-1] + self._qpows[m - 1])
            self._facts.append(self._facts[-1] * self._ints[-1])

    def q_pow(self, n: int) -> Fraction:
        """q**n for n >= 0, memoized."""
        if n < 0:
            raise ValueError("negative exponent")
        self._grow(n)
        return self._qpows[n]

    def q_int(self, n: int) -> Fraction:
        """[n]_q = 1 + q + ... + q^(n-1); equals n at q = 1 and 0 at n = 0."""
        if n < 0:
            raise ValueError("q_int needs n >= 0")
        self._grow(n)
        return self._ints[n]

    def q_int_list(self, n: int) -> list:
        """The live memo list [0]_q..[n]_q (at least); callers must not mutate it.

        Exists so the kernel loops can index q-integers without method
        dispatch per term.
        """
        self._grow(n)
        return self._ints

    def q_factorial(self, n: int) -> Fraction:
        """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
        if n < 0:
            raise ValueError("q_factorial needs n >= 0")
        self._grow(n)
        return self._facts[n]

    def q_binomial(self, n: int, k: int) -> Fraction:
        """Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!)."""
        if not 0 <= k <= n:
            raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
        self._grow(n)
        return self._facts[n] / (self._facts[k] * self._facts[n - k])

    def q_gauss_power(self, n: int) -> Fraction:
        """q^(n(n-1)/2), the coefficient weight of the big q-exponential."""
        if n < 0:
            raise ValueError("q_gauss_power needs n >= 0")
        return self.q_pow(n * (n - 1) // 2)
