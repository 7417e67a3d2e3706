# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular polynomial kernels.

Mirrors drinfeld._core.pure; see that module for the API contract.
Coefficients must fit in a C long long after one multiply-accumulate
pass, which holds for the primes this library targets (p < 2**20).
"""

from libc.stdlib cimport malloc, free

BACKEND = "compiled"


cdef long long* _to_c(object a, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef long long* buf = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i]
    n_out[0] = n
    return buf


cdef object _to_list(long long* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


def poly_add(a, b, long long p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    cdef Py_ssize_t n = len(out)
    while n > 0 and out[n - 1] == 0:
        n -= 1
    del out[n:]
    return out


def poly_sub(a, b, long long p):
    cdef Py_ssize_t n = max(len(a), len(b))
    out = [0] * n
    cdef Py_ssize_t i
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (out[i] - b[i]) % p
    while n > 0 and out[n - 1] == 0:
        n -= 1
    del out[n:]
    return out


def poly_mul(a, b, long long p):
    cdef Py_ssize_t na, nb, i, j
    cdef long long* ca = _to_c(a, &na)
    cdef long long* cb = NULL
    cdef long long* co = NULL
    cdef long long x
    try:
        cb = _to_c(b, &nb)
        while na > 0 and ca[na - 1] == 0:
            na -= 1
        while nb > 0 and cb[nb - 1] == 0:
            nb -= 1
        if na == 0 or nb == 0:
            return []
        co = <long long*> malloc((na + nb - 1) * sizeof(long long))
        if co == NULL:
            raise MemoryError()
        for i in range(na + nb - 1):
            co[i] = 0
        for i in range(na):
            x = ca[i]
            if x != 0:
                for j in range(nb):
                    co[i + j] = (co[i + j] + x * cb[j]) % p
        return _to_list(co, na + nb - 1)
    finally:
        free(ca)
        if cb != NULL:
            free(cb)
        if co != NULL:
            free(co)


cdef void _rem_inplace(long long* ca, Py_ssize_t na, long long* cm, Py_ssize_t dm,
                       long long p, long long* cq):
    # reduce ca (length na) modulo monic cm of degree dm; optionally record
    # the quotient in cq (length na - dm), which may be NULL
    cdef Py_ssize_t da = na - 1
    cdef Py_ssize_t j
    cdef long long c
    while da >= dm:
        c = ca[da] % p
        if c < 0:
            c += p
        if cq != NULL:
            cq[da - dm] = c
        if c != 0:
            for j in range(dm):
                ca[da - dm + j] = (ca[da - dm + j] - c * cm[j]) % p
        ca[da] = 0
        da -= 1


def poly_rem(a, m, long long p):
    cdef Py_ssize_t na, nm, i
    cdef long long* ca = _to_c(a, &na)
    cdef long long* cm = NULL
    try:
        cm = _to_c(m, &nm)
        while nm > 0 and cm[nm - 1] == 0:
            nm -= 1
        if nm == 0:
            raise ZeroDivisionError("zero modulus")
        _rem_inplace(ca, na, cm, nm - 1, p, NULL)
        for i in range(min(na, nm - 1)):
            ca[i] = ca[i] % p
            if ca[i] < 0:
                ca[i] += p
        return _to_list(ca, min(na, nm - 1))
    finally:
        free(ca)
        if cm != NULL:
            free(cm)


def poly_divmod(a, m, long long p):
    cdef Py_ssize_t na, nm, i
    cdef long long* ca = _to_c(a, &na)
    cdef long long* cm = NULL
    cdef long long* cq = NULL
    try:
        cm = _to_c(m, &nm)
        while na > 0 and ca[na - 1] == 0:
            na -= 1
        while nm > 0 and cm[nm - 1] == 0:
            nm -= 1
        if nm == 0:
            raise ZeroDivisionError("zero modulus")
        if na < nm:
            return [], _to_list(ca, na)
        cq = <long long*> malloc((na - nm + 1) * sizeof(long long))
        if cq == NULL:
            raise MemoryError()
        for i in range(na - nm + 1):
            cq[i] = 0
        _rem_inplace(ca, na, cm, nm - 1, p, cq)
        for i in range(nm - 1):
            ca[i] = ca[i] % p
            if ca[i] < 0:
                ca[i] += p
        return _to_list(cq, na - nm + 1), _to_list(ca, nm - 1)
    finally:
        free(ca)
        if cm != NULL:
            free(cm)
        if cq != NULL:
            free(cq)


def mul_mod(a, b, m, long long p):
    return poly_rem(poly_mul(a, b, p), m, p)


def pow_mod(a, e, m, long long p):
    result = [1]
    base = poly_rem(a, m, p)
    while e > 0:
        if e & 1:
            result = mul_mod(result, base, m, p)
        base = mul_mod(base, base, m, p)
        e >>= 1
    return result


def mat_vec(rows, vec, long long p):
    cdef Py_ssize_t nv, i, j
    cdef long long* cv = _to_c(vec, &nv)
    cdef long long acc
    try:
        out = []
        for row in rows:
            acc = 0
            for j in range(min(<Py_ssize_t>len(row), nv)):
                acc = (acc + <long long>row[j] * cv[j]) % p
            out.append(acc)
        return out
    finally:
        free(cv)
