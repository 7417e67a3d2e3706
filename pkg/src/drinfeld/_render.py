"""Shared polynomial rendering in the classical display style.

Terms are printed in descending powers joined by " + " (coefficients are
canonical representatives, so no minus signs appear), coefficients equal to
one are omitted before a variable power, and composite coefficients are
parenthesized: "z*t^3 + t^2 + z", "X^3 + (T + 1)*X^2 + (2*T + 3)*X + ...".
"""


def atomic(obj) -> bool:
    """Whether obj can multiply a variable power without parentheses."""
    meth = getattr(obj, "_atomic", None)
    if meth is not None:
        return meth()
    s = str(obj)
    return " + " not in s and "/" not in s


def render_poly(coeffs, var: str) -> str:
    """Render ascending coefficients as a polynomial string in var.

    Coefficients must provide is_zero()/is_one() and str(); anything not
    atomic (see above) is parenthesized when it multiplies a power of var.
    """
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c.is_zero():
            continue
        if e == 0:
            terms.append(str(c))
            continue
        power = var if e == 1 else f"{var}^{e}"
        if c.is_one():
            terms.append(power)
        elif atomic(c):
            terms.append(f"{c}*{power}")
        else:
            terms.append(f"({c})*{power}")
    return " + ".join(terms) if terms else "0"


def render_int_poly(coeffs, var: str, p: int) -> str:
    """Render ascending integer coefficients (mod p) as a polynomial in var."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e] % p
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        power = var if e == 1 else f"{var}^{e}"
        terms.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(terms) if terms else "0"
