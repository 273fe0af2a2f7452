# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernel; twin of tancone._kernel_py.

Same data model: monomials are exponent tuples (position 0 = largest
variable), polynomials are dicts monomial -> coefficient (Fraction for
characteristic 0, small int mod p otherwise).  Tuple arithmetic and the
division loop are the hot spots; coefficients stay Python objects so the
rational path remains exact.
"""

from fractions import Fraction

KERNEL_NAME = "cython"


cpdef tuple mono_key(tuple m):
    cdef Py_ssize_t i, n = len(m)
    cdef long s = 0
    for i in range(n):
        s += <long> m[i]
    return (s, m)


cpdef int mono_cmp(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0
    for i in range(n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return -1 if da < db else 1
    for i in range(n):
        if a[i] != b[i]:
            return -1 if <long> a[i] < <long> b[i] else 1
    return 0


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef tuple out = tuple([0]) * 0
    result = [0] * n
    for i in range(n):
        result[i] = <long> a[i] + <long> b[i]
    return tuple(result)


cpdef bint mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cpdef mono_div(tuple b, tuple a):
    cdef Py_ssize_t i, n = len(b)
    cdef long x
    result = [0] * n
    for i in range(n):
        x = <long> b[i] - <long> a[i]
        if x < 0:
            return None
        result[i] = x
    return tuple(result)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    result = [0] * n
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        result[i] = x if x > y else y
    return tuple(result)


cpdef tuple leading_monomial(dict terms):
    if not terms:
        raise ValueError("zero polynomial has no leading monomial")
    cdef tuple best = None
    cdef tuple m
    for m in terms:
        if best is None or mono_cmp(m, best) > 0:
            best = m
    return best


cpdef dict poly_scale(dict terms, c, long p):
    cdef dict out = {}
    if p:
        c = c % p
        if c == 0:
            return out
        for m, v in terms.items():
            out[m] = (v * c) % p
        return out
    if c == 0:
        return out
    for m, v in terms.items():
        out[m] = v * c
    return out


cpdef dict poly_add(dict f, dict g, long p):
    cdef dict out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


cpdef dict poly_sub(dict f, dict g, long p):
    cdef dict out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) - c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


cpdef dict poly_mul(dict f, dict g, long p):
    cdef dict out = {}
    cdef tuple m
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono_mul(<tuple> m1, <tuple> m2)
            v = out.get(m, 0) + c1 * c2
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


cdef _inv(c, long p):
    if p:
        return pow(c, p - 2, p)
    if isinstance(c, Fraction):
        return Fraction((<object> c).denominator, (<object> c).numerator)
    return Fraction(1, c)


cpdef dict make_monic(dict terms, long p):
    if not terms:
        return terms
    lc = terms[leading_monomial(terms)]
    if lc == 1:
        return dict(terms)
    return poly_scale(terms, _inv(lc, p), p)


cpdef dict normal_form(dict f, list basis, long p):
    """Deterministic remainder; see the pure twin for the contract."""
    cdef dict work = dict(f)
    cdef dict remainder = {}
    cdef dict g
    cdef tuple m, lm, q, gm, mm
    cdef bint reduced
    while work:
        m = leading_monomial(work)
        c = work.pop(m)
        reduced = False
        for lm_g in basis:
            lm = <tuple> lm_g[0]
            q = mono_div(m, lm)
            if q is None:
                continue
            g = <dict> lm_g[1]
            factor = c * _inv(g[lm], p)
            if p:
                factor %= p
            for gm, gc in g.items():
                if gm == lm:
                    continue
                mm = mono_mul(gm, q)
                v = work.get(mm, 0) - factor * gc
                if p:
                    v %= p
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
            reduced = True
            break
        if not reduced:
            remainder[m] = c
    return remainder


cpdef dict spoly(dict f, dict g, long p):
    cdef tuple lmf = leading_monomial(f)
    cdef tuple lmg = leading_monomial(g)
    cdef tuple lcm = mono_lcm(lmf, lmg)
    cdef tuple uf = mono_div(lcm, lmf)
    cdef tuple ug = mono_div(lcm, lmg)
    cf = _inv(f[lmf], p)
    cg = _inv(g[lmg], p)
    cdef dict sf = {}
    cdef dict sg = {}
    for m, c in f.items():
        v = c * cf
        if p:
            v %= p
        sf[mono_mul(<tuple> m, uf)] = v
    for m, c in g.items():
        v = c * cg
        if p:
            v %= p
        sg[mono_mul(<tuple> m, ug)] = v
    return poly_sub(sf, sg, p)
