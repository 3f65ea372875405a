# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; contract-identical to ``_pykernels``.

Coefficients are Python Fractions in and out (exactness is the whole
point).  Inside the loops, arithmetic runs on the Fraction slots
directly with Knuth-reduced gcd steps, constructing results without the
normalizing constructor; inputs are canonical, the reductions keep
results canonical, so the outputs are indistinguishable from ordinary
Fraction arithmetic.
"""

from fractions import Fraction
from math import gcd

BACKEND = "c"

_ZERO = Fraction(0)
_ONE_INT = 1


cdef object _fr_new(num, den):
    # num/den already coprime with den > 0
    f = Fraction.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


cdef object fr_mul(a, b):
    na = a._numerator
    da = a._denominator
    nb = b._numerator
    db = b._denominator
    g1 = gcd(na, db)
    if g1 > _ONE_INT:
        na = na // g1
        db = db // g1
    g2 = gcd(nb, da)
    if g2 > _ONE_INT:
        nb = nb // g2
        da = da // g2
    return _fr_new(na * nb, da * db)


cdef object fr_add(a, b):
    na = a._numerator
    da = a._denominator
    nb = b._numerator
    db = b._denominator
    g = gcd(da, db)
    if g == _ONE_INT:
        t = na * db + da * nb
        if not t:
            return _ZERO  # keep zeros canonical (0/1)
        return _fr_new(t, da * db)
    s = da // g
    t = na * (db // g) + nb * s
    if not t:
        return _ZERO
    g2 = gcd(t, g)
    if g2 == _ONE_INT:
        return _fr_new(t, s * db)
    return _fr_new(t // g2, s * (db // g2))


def poly_add(dict a, dict b):
    cdef dict out = dict(a)
    for key, val in b.items():
        prev = out.get(key)
        s = val if prev is None else fr_add(prev, val)
        if s._numerator:
            out[key] = s
        elif key in out:
            del out[key]
    return out


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef Py_ssize_t i1, j1
    if len(a) > len(b):
        a, b = b, a
    for ka, v1 in a.items():
        i1 = ka[0]
        j1 = ka[1]
        for kb, v2 in b.items():
            key = (i1 + (<Py_ssize_t> kb[0]), j1 + (<Py_ssize_t> kb[1]))
            s = fr_mul(v1, v2)
            prev = out.get(key)
            if prev is not None:
                s = fr_add(prev, s)
            if s._numerator:
                out[key] = s
            elif prev is not None:
                del out[key]
    return out


def poly_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for key, val in a.items():
        out[key] = fr_mul(val, c)
    return out


def poly_deriv_x(dict a, list qints):
    cdef dict out = {}
    cdef Py_ssize_t i, j
    for ka, val in a.items():
        i = ka[0]
        if i:
            j = ka[1]
            key = (i - 1, j)
            s = fr_mul(qints[i], val)
            prev = out.get(key)
            if prev is not None:
                s = fr_add(prev, s)
            if s._numerator:
                out[key] = s
            elif prev is not None:
                del out[key]
    return out


def poly_deriv_y(dict a, list qints):
    cdef dict out = {}
    cdef Py_ssize_t i, j
    for ka, val in a.items():
        j = ka[1]
        if j:
            i = ka[0]
            key = (i, j - 1)
            s = fr_mul(qints[j], val)
            prev = out.get(key)
            if prev is not None:
                s = fr_add(prev, s)
            if s._numerator:
                out[key] = s
            elif prev is not None:
                del out[key]
    return out


def poly_dilate(dict a, ax, by):
    cdef dict out = {}
    for key, val in a.items():
        c = fr_mul(val, ax ** (<object> key[0]) * by ** (<object> key[1]))
        if c._numerator:
            out[key] = c
    return out


def poly_eval(dict a, x0, y0):
    acc = _ZERO
    for key, val in a.items():
        acc = fr_add(acc, fr_mul(val, x0 ** (<object> key[0]) * y0 ** (<object> key[1])))
    return acc


def series_mul_scalar(list a, list b, Py_ssize_t order):
    cdef list out = [_ZERO] * (order + 1)
    cdef Py_ssize_t i, j, na, nb
    na = len(a)
    nb = len(b)
    if na > order + 1:
        na = order + 1
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        nb = len(b)
        if nb > order + 1 - i:
            nb = order + 1 - i
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = fr_add(out[i + j], fr_mul(ai, bj))
    return out


def series_mul_poly(list a, list b, Py_ssize_t order):
    cdef list out = [dict() for _ in range(order + 1)]
    cdef Py_ssize_t i, j, na, nb
    na = len(a)
    if na > order + 1:
        na = order + 1
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        nb = len(b)
        if nb > order + 1 - i:
            nb = order + 1 - i
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = poly_add(out[i + j], poly_mul(ai, bj))
    return out


def series_recip_scalar(list a, Py_ssize_t order):
    if not a or not a[0]:
        raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
    inv0 = 1 / a[0]
    cdef list out = [inv0]
    cdef Py_ssize_t n, k, kmax
    for n in range(1, order + 1):
        acc = _ZERO
        kmax = n
        if kmax > len(a) - 1:
            kmax = len(a) - 1
        for k in range(1, kmax + 1):
            ak = a[k]
            if ak:
                acc = acc + ak * out[n - k]
        out.append(-acc * inv0)
    return out
