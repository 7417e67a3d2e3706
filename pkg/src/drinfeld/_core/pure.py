"""Pure-Python modular polynomial kernels.

Same API as the compiled extension (_corelib).  Polynomials are lists of
ints in [0, p), ascending degree, trailing zeros allowed on input.  Every
function returns a new normalized list (no trailing zeros).
"""

BACKEND = "pure"


def _trim(c):
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return c[:n]


def poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def poly_mul(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def poly_rem(a, m, p):
    """Remainder of a modulo monic m."""
    a = list(a)
    dm = len(_trim(m)) - 1
    if dm < 0:
        raise ZeroDivisionError("zero modulus")
    da = len(_trim(a)) - 1
    while da >= dm:
        c = a[da] % p
        if c:
            for j in range(dm):
                a[da - dm + j] = (a[da - dm + j] - c * m[j]) % p
        a[da] = 0
        da -= 1
    return _trim([c % p for c in a[:dm]])


def poly_divmod(a, m, p):
    """Quotient and remainder of a by monic m."""
    a = _trim(list(a))
    m = _trim(list(m))
    dm = len(m) - 1
    if dm < 0:
        raise ZeroDivisionError("zero modulus")
    da = len(a) - 1
    if da < dm:
        return [], a
    q = [0] * (da - dm + 1)
    while da >= dm:
        c = a[da] % p
        q[da - dm] = c
        if c:
            for j in range(dm + 1):
                a[da - dm + j] = (a[da - dm + j] - c * m[j]) % p
        da -= 1
        while da >= 0 and a[da] % p == 0:
            da -= 1
    return _trim(q), _trim([c % p for c in a[:dm]])


def mul_mod(a, b, m, p):
    return poly_rem(poly_mul(a, b, p), m, p)


def pow_mod(a, e, m, p):
    """a**e modulo monic m; e is an arbitrary nonnegative Python int."""
    result = [1]
    base = poly_rem(a, m, p)
    while e > 0:
        if e & 1:
            result = mul_mod(result, base, m, p)
        base = mul_mod(base, base, m, p)
        e >>= 1
    return result


def mat_vec(rows, vec, p):
    """Apply an integer matrix (list of rows) to vec over F_p."""
    out = []
    for row in rows:
        acc = 0
        for c, x in zip(row, vec):
            acc += c * x
        out.append(acc % p)
    return out
