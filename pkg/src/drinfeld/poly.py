"""Dense univariate polynomials, rational functions, and a division-free
matrix characteristic polynomial.

DensePolynomial is generic in its coefficient ring: coefficients may be
field elements, rational functions, or other polynomials (nested variables),
as long as they implement +, -, *, unary -, ==, is_zero(), is_one(), one(),
and — where division is needed — inv().
"""

from __future__ import annotations

from .errors import DivisionByZeroPoly, DivisionByZeroRational
from ._render import render_poly


class DensePolynomial:
    """Univariate polynomial, ascending coefficients, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    ``zero`` is a sample zero of the coefficient ring (needed so the zero
    polynomial still knows its ring); ``var`` is display-only and ignored
    by equality.
    """

    __slots__ = ("coeffs", "zero", "var")

    def __init__(self, coeffs, zero, var: str = "T"):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.zero = zero
        self.var = var

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c, var: str = "T") -> "DensePolynomial":
        return cls([c], c - c, var)

    @classmethod
    def variable(cls, one, var: str = "T") -> "DensePolynomial":
        """The monomial var, given the coefficient ring's one."""
        return cls([one - one, one], one - one, var)

    def _make(self, coeffs) -> "DensePolynomial":
        return DensePolynomial(coeffs, self.zero, self.var)

    # -- basic structure ----------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def one(self) -> "DensePolynomial":
        return self._make([self._coeff_one()])

    def _coeff_one(self):
        if self.coeffs:
            return self.coeffs[0].one()
        return self.zero.one()

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def leading(self):
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return self._make([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return self._make([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return self._make([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self._make([])
        out = [self.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._make(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, DensePolynomial):
            return other
        if hasattr(other, "is_zero"):  # a bare coefficient
            return self._make([other])
        return NotImplemented

    def __pow__(self, e: int) -> "DensePolynomial":
        if e < 0:
            raise DivisionByZeroPoly("negative polynomial power")
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, DensePolynomial):
            if hasattr(other, "is_zero"):
                return self.coeffs == self._make([other]).coeffs
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("DensePolynomial", self.coeffs))

    # -- euclidean structure (field coefficients) ----------------------
    def divmod(self, other: "DensePolynomial"):
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        if self.degree < other.degree:
            return self._make([]), self
        rem = list(self.coeffs)
        lead_inv = other.leading().inv()
        dq = len(rem) - len(other.coeffs)
        quot = [self.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c.is_zero():
                continue
            f = c * lead_inv
            quot[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * b
        return self._make(quot), self._make(rem[: other.degree])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "DensePolynomial":
        if self.is_zero():
            return self
        inv = self.leading().inv()
        return self._make([c * inv for c in self.coeffs])

    def gcd(self, other: "DensePolynomial") -> "DensePolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # -- calculus and evaluation ---------------------------------------
    def derivative(self) -> "DensePolynomial":
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            acc = c - c
            for _ in range(i):
                acc = acc + c
            out.append(acc)
        return self._make(out)

    def __call__(self, x):
        """Evaluate by Horner; x may live in any ring acting on coeffs."""
        if not self.coeffs:
            return x - x
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def substitute_power(self, m: int) -> "DensePolynomial":
        """The polynomial f(T^m)."""
        if m < 1:
            raise ValueError("power must be >= 1")
        if self.is_zero():
            return self
        out = [self.zero] * (self.degree * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return self._make(out)

    def rename(self, var: str) -> "DensePolynomial":
        return DensePolynomial(self.coeffs, self.zero, var)

    # -- display --------------------------------------------------------
    def _atomic(self) -> bool:
        s = str(self)
        return " + " not in s and "/" not in s

    def __str__(self):
        return render_poly(self.coeffs, self.var)

    def __repr__(self):
        return str(self)


class RationalFunction:
    """Element of the fraction field of F_q[T], in lowest terms.

    Invariants: den is monic and nonzero, gcd(num, den) = 1; zero is (0, 1).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: DensePolynomial, den: DensePolynomial | None = None):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise DivisionByZeroRational("zero denominator")
        if num.is_zero():
            den = den.one()
        else:
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            lead_inv = den.leading().inv()
            if not den.leading().is_one():
                num = num * DensePolynomial.constant(lead_inv, num.var)
                den = den.monic()
        self.num = num
        self.den = den

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def one(self) -> "RationalFunction":
        return RationalFunction(self.num.one())

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # -- field operations -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, DensePolynomial):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZeroRational("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.inv() ** (-e)
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frob_power(self, k: int, q: int) -> "RationalFunction":
        """x^(q^k); since coefficients lie in F_q this is T |-> T^(q^k)."""
        if k == 0:
            return self
        m = q ** k
        return RationalFunction(
            self.num.substitute_power(m), self.den.substitute_power(m)
        )

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RationalFunction", self.num, self.den))

    # -- display -----------------------------------------------------------
    def _atomic(self) -> bool:
        return self.den.is_one() and self.num._atomic()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        if " + " in ns:
            ns = f"({ns})"
        ds = str(self.den)
        if " + " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return str(self)


class PolyMatrix:
    """Square matrix of DensePolynomial entries over a common ring."""

    __slots__ = ("r", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        r = len(entries)
        if any(len(row) != r for row in entries):
            raise ValueError("matrix must be square")
        self.r = r
        self.entries = entries

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __str__(self):
        return "[" + ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        ) + "]"


def berkowitz_charpoly(M, var: str = "X") -> DensePolynomial:
    """det(X·I - M) by the Berkowitz method (division-free).

    M is a PolyMatrix or a list of rows; the result is monic of degree r in
    var, with coefficients in the entry ring.  No entry inverses are ever
    taken, so the entry ring need only be commutative.
    """
    rows = M.entries if isinstance(M, PolyMatrix) else [list(r) for r in M]
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    sample = rows[0][0]
    one = sample.one()
    zero = sample - sample
    # vec holds the charpoly of the leading principal submatrix, descending.
    vec = [one, -rows[0][0]]
    for i in range(1, n):
        # Toeplitz column: t_0 = 1, t_1 = -A[i][i], t_k = -(R · M^(k-2) · C)
        # with R = A[i][:i], C = A[:i][i], M the leading i x i block.
        t = [one, -rows[i][i]]
        w = [rows[k][i] for k in range(i)]
        for k in range(2, i + 2):
            s = zero
            for j in range(i):
                s = s + rows[i][j] * w[j]
            t.append(-s)
            if k < i + 1:
                w = [
                    _dot(rows[a][:i], w, zero)
                    for a in range(i)
                ]
        new = []
        for a in range(i + 2):
            s = zero
            for b in range(len(vec)):
                d = a - b
                if 0 <= d < len(t):
                    s = s + t[d] * vec[b]
            new.append(s)
        vec = new
    return DensePolynomial(list(reversed(vec)), zero, var)


def _dot(row, w, zero):
    s = zero
    for a, b in zip(row, w):
        s = s + a * b
    return s


def hessenberg_charpoly(rows, var: str = "X") -> DensePolynomial:
    """det(X·I - M) for a matrix over a field, via Hessenberg reduction.

    Entries must support inv(); unlike Berkowitz this divides, but it is
    O(n^3) in field operations.  Returns a monic DensePolynomial in var
    with field coefficients.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    H = [list(r) for r in rows]
    one = H[0][0].one()
    zero = H[0][0] - H[0][0]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if not H[i][j].is_zero()),
                   None)
        if piv is None:
            continue
        if piv != j + 1:
            H[j + 1], H[piv] = H[piv], H[j + 1]
            for row in H:
                row[j + 1], row[piv] = row[piv], row[j + 1]
        inv = H[j + 1][j].inv()
        for i in range(j + 2, n):
            if H[i][j].is_zero():
                continue
            m = H[i][j] * inv
            for k in range(j, n):
                H[i][k] = H[i][k] - m * H[j + 1][k]
            # similarity: compensate the row operation on columns
            for k in range(n):
                H[k][j + 1] = H[k][j + 1] + m * H[k][i]
    # p_m = (X - H[m-1][m-1])·p_{m-1} - Σ_i H[i-1][m-1]·(Π subdiag)·p_{i-1}
    polys = [[one]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [zero] * (m + 1)
        hmm = H[m - 1][m - 1]
        for k in range(m):
            cur[k + 1] = cur[k + 1] + prev[k]
            cur[k] = cur[k] - hmm * prev[k]
        prod = one
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1]
            term = H[i - 1][m - 1] * prod
            if term.is_zero():
                continue
            pi = polys[i - 1]
            for k in range(len(pi)):
                cur[k] = cur[k] - term * pi[k]
        polys.append(cur)
    return DensePolynomial(polys[n], zero, var)


def interpolate(points, values, zero, var: str = "T") -> DensePolynomial:
    """The unique polynomial of degree < len(points) through the given
    (point, value) pairs over a field (Newton's divided differences)."""
    n = len(points)
    if n == 0 or n != len(values):
        raise ValueError("need equally many points and values")
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * \
                (points[i] - points[i - j]).inv()
    poly = DensePolynomial([coef[-1]], zero, var)
    one = zero.one()
    for k in range(n - 2, -1, -1):
        lin = DensePolynomial([-points[k], one], zero, var)
        poly = poly * lin + DensePolynomial([coef[k]], zero, var)
    return poly
