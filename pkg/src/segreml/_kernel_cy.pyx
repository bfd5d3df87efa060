# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py: identical interface, typed inner loops.

Monomials stay Python tuples and coefficients arbitrary-precision Python
ints (exactness is non-negotiable); the win comes from C-level grevlex
comparison, divisibility tests and the merge loop, which dominate
Buchberger reduction time.
"""

try:
    from gmpy2 import gcd
except ImportError:
    from math import gcd


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


cdef int _cmp(tuple a, tuple b) except? -2:
    """-1, 0, 1 comparison in grevlex order."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    cdef long da = 0, db = 0, x, y
    for i in range(n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return -1 if da < db else 1
    for i in range(n - 1, -1, -1):
        x = <long> a[i]
        y = <long> b[i]
        if x != y:
            return 1 if x < y else -1
    return 0


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long> a[i] + <long> b[i] for i in range(n)])


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([<long> a[i] - <long> b[i] for i in range(n)])


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out.append(x if x > y else y)
    return tuple(out)


def mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] != 0 and <long> b[i] != 0:
            return False
    return True


def sort_terms(terms):
    out = [(m, c) for m, c in terms if c]
    out.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
    return out


def make_primitive(list terms):
    if not terms:
        return []
    g = 0
    for _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if terms[0][1] < 0:
        g = -g
    if g != 1:
        terms = [(m, c // g) for m, c in terms]
    return terms


def combine(list f, cf, sf, list g, cg, sg):
    """cf * x^sf * f + cg * x^sg * g, merged into descending order.

    A shift of None means no shift.
    """
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef int cmp
    cdef bint scale_f = cf != 1
    cdef bint shift_f = sf is not None
    cdef bint shift_g = sg is not None
    cdef list out = []
    cdef tuple mf, mg
    while i < nf and j < ng:
        mf = <tuple> (<tuple> f[i])[0]
        if shift_f:
            mf = mono_mul(mf, <tuple> sf)
        mg = <tuple> (<tuple> g[j])[0]
        if shift_g:
            mg = mono_mul(mg, <tuple> sg)
        cmp = _cmp(mf, mg)
        if cmp > 0:
            out.append((mf, cf * (<tuple> f[i])[1] if scale_f else (<tuple> f[i])[1]))
            i += 1
        elif cmp < 0:
            out.append((mg, cg * (<tuple> g[j])[1]))
            j += 1
        else:
            c = (cf * (<tuple> f[i])[1] if scale_f else (<tuple> f[i])[1]) + cg * (<tuple> g[j])[1]
            if c:
                out.append((mf, c))
            i += 1
            j += 1
    while i < nf:
        mf = <tuple> (<tuple> f[i])[0]
        if shift_f:
            mf = mono_mul(mf, <tuple> sf)
        out.append((mf, cf * (<tuple> f[i])[1] if scale_f else (<tuple> f[i])[1]))
        i += 1
    while j < ng:
        mg = <tuple> (<tuple> g[j])[0]
        if shift_g:
            mg = mono_mul(mg, <tuple> sg)
        out.append((mg, cg * (<tuple> g[j])[1]))
        j += 1
    return out


def spair(list f, list g):
    lmf, lcf = f[0]
    lmg, lcg = g[0]
    lcm = mono_lcm(<tuple> lmf, <tuple> lmg)
    d = gcd(lcf, lcg)
    return make_primitive(
        combine(f, lcg // d, mono_div(lcm, <tuple> lmf), g, -(lcf // d), mono_div(lcm, <tuple> lmg))
    )


def normal_form(list p, list basis):
    cdef list work = list(p)
    cdef list out = []
    cdef Py_ssize_t nb = len(basis), bi
    cdef Py_ssize_t pos = 0
    cdef tuple lm, glm
    while pos < len(work):
        lm = <tuple> (<tuple> work[pos])[0]
        lc = (<tuple> work[pos])[1]
        reducer = None
        for bi in range(nb):
            g = <list> basis[bi]
            if mono_divides(<tuple> (<tuple> g[0])[0], lm):
                reducer = g
                break
        if reducer is None:
            out.append(work[pos])
            pos += 1
            continue
        glm = <tuple> (<tuple> (<list> reducer)[0])[0]
        glc = (<tuple> (<list> reducer)[0])[1]
        d = gcd(lc, glc)
        a = glc // d
        b = lc // d
        if a < 0:
            a, b = -a, -b
        work = combine(work[pos:], a, None, <list> reducer, -b, mono_div(lm, glm))
        pos = 0
        if a != 1 and out:
            out = [(m, c * a) for m, c in out]
    return make_primitive(out)
