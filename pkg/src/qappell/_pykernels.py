"""Pure-Python hot kernels.

Same contracts as the compiled twin in ``_ckernels.pyx``; see
``kernels`` for how one of the two is selected at import time.

Data is kept plain so both backends are interchangeable: a polynomial is
a dict mapping ``(i, j)`` exponent pairs to nonzero Fractions, a series
is a list of coefficients indexed by the power of t.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "python"

_ZERO = Fraction(0)


def poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, val in b.items():
        s = out.get(key, _ZERO) + val
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return out


def poly_mul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            key = (i1 + i2, j1 + j2)
            s = out.get(key, _ZERO) + v1 * v2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def poly_scale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {key: val * c for key, val in a.items()}


def poly_deriv_x(a: dict, qints: list) -> dict:
    """x^i y^j -> qints[i] * x^(i-1) y^j; qints[i] is [i]_q."""
    out: dict = {}
    for (i, j), val in a.items():
        if i:
            key = (i - 1, j)
            s = out.get(key, _ZERO) + qints[i] * val
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def poly_deriv_y(a: dict, qints: list) -> dict:
    """x^i y^j -> qints[j] * x^i y^(j-1)."""
    out: dict = {}
    for (i, j), val in a.items():
        if j:
            key = (i, j - 1)
            s = out.get(key, _ZERO) + qints[j] * val
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def poly_dilate(a: dict, ax: Fraction, by: Fraction) -> dict:
    """Substitute x -> ax*x, y -> by*y; powers built incrementally."""
    out: dict = {}
    for (i, j), val in a.items():
        c = val * ax**i * by**j
        if c:
            out[(i, j)] = c
    return out


def poly_eval(a: dict, x0: Fraction, y0: Fraction) -> Fraction:
    acc = _ZERO
    for (i, j), val in a.items():
        acc += val * x0**i * y0**j
    return acc


def series_mul_scalar(a: list, b: list, order: int) -> list:
    """Cauchy product of Fraction coefficient lists, truncated at ``order``."""
    out = [_ZERO] * (order + 1)
    for i in range(min(len(a), order + 1)):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def series_mul_poly(a: list, b: list, order: int) -> list:
    """Cauchy product of dict-polynomial coefficient lists, truncated at ``order``."""
    out: list = [{} for _ in range(order + 1)]
    for i in range(min(len(a), order + 1)):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] = poly_add(out[i + j], poly_mul(ai, b[j]))
    return out


def series_recip_scalar(a: list, order: int) -> list:
    """Triangular solve for 1/f: a[0]*r[n] + ... + a[n]*r[0] = [n == 0]."""
    if not a or not a[0]:
        raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, order + 1):
        acc = _ZERO
        for k in range(1, min(n, len(a) - 1) + 1):
            if a[k]:
                acc += a[k] * out[n - k]
        out.append(-acc * inv0)
    return out
