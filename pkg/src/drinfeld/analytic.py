"""Drinfeld modules over F_q(T) with γ(T) = T: lazy exponential and
logarithm series.

Both series are F_q-linear: e(z) = z + Σ_{i≥1} α_i z^(q^i), and every
coefficient is computed on demand from the functional equation
e(Tz) = φ_T(e(z)) (resp. T·log(z) = log(φ_T(z))), then memoized.  The
Carlitz closed forms ([i] = T^(q^i) − T, D_i, L_i) are provided as
independent oracles.
"""

from __future__ import annotations

import threading

from .errors import InvalidParameter, RankZero, ZeroLeadingCoefficient
from .ff import FieldTower
from .poly import DensePolynomial, RationalFunction


def _fq_polynomial(tower: FieldTower, coeffs) -> DensePolynomial:
    """Polynomial over F_q from ints / coefficient vectors / FieldElements."""
    out = []
    for c in coeffs:
        if isinstance(c, int) or isinstance(c, (list, tuple)):
            out.append(tower.element("q", c))
        else:
            out.append(c)
    return DensePolynomial(out, tower.zero("q"), "T")


def _as_rational(tower: FieldTower, x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, DensePolynomial):
        return RationalFunction(x)
    if isinstance(x, int):
        return RationalFunction(_fq_polynomial(tower, [x]))
    return RationalFunction(_fq_polynomial(tower, x))


def _T(tower: FieldTower) -> RationalFunction:
    return RationalFunction(_fq_polynomial(tower, [0, 1]))


class AnalyticDrinfeldModule:
    """Drinfeld module over F_q(T) with g_0 = T exactly."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs):
        coeffs = [_as_rational(tower, c) for c in coeffs]
        if len(coeffs) < 2:
            raise RankZero("φ_T needs positive degree in τ")
        if not coeffs[0] == _T(tower):
            raise InvalidParameter("the constant coefficient must be T")
        if coeffs[-1].is_zero():
            raise ZeroLeadingCoefficient("leading coefficient is zero")
        self.tower = tower
        self.coeffs = tuple(coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs) - 1

    @property
    def q(self) -> int:
        return self.tower.q


class LazyAdditiveSeries:
    """Normalized F_q-linear series z + Σ_{i≥1} α_i z^(q^i).

    Coefficients are produced by a rule from all lower ones, memoized, and
    never recomputed; the memo is guarded by a lock so concurrent queries
    are safe.  Indexing by plain exponent (series[q^i]) returns α_i and 0
    at non-q-power exponents.
    """

    __slots__ = ("q", "_rule", "_memo", "_lock")

    def __init__(self, q: int, one: RationalFunction, rule):
        self.q = q
        self._rule = rule
        self._memo = [one]
        self._lock = threading.RLock()

    def coeff(self, i: int) -> RationalFunction:
        """α_i — the coefficient of z^(q^i)."""
        if i < 0:
            raise IndexError("negative series index")
        with self._lock:
            while len(self._memo) <= i:
                k = len(self._memo)
                self._memo.append(self._rule(k, self._memo))
            return self._memo[i]

    def computed_upto(self) -> int:
        """Number of memoized q-power coefficients (laziness witness)."""
        return len(self._memo)

    def __getitem__(self, exponent: int) -> RationalFunction:
        """Coefficient of z^exponent; zero unless exponent is a q-power."""
        if exponent < 1:
            raise IndexError("exponents start at 1")
        i = 0
        e = 1
        while e < exponent:
            e *= self.q
            i += 1
        if e != exponent:
            return self.coeff(0) - self.coeff(0)
        return self.coeff(i)

    def slice(self, lo: int, hi: int) -> list[RationalFunction]:
        """Plain-exponent coefficients over [lo, hi) (index 0 is zero)."""
        zero = self.coeff(0) - self.coeff(0)
        return [zero if e < 1 else self[e] for e in range(lo, hi)]


def exponential(phi: AnalyticDrinfeldModule) -> LazyAdditiveSeries:
    """e_φ with e_φ(Tz) = φ_T(e_φ(z)): α_0 = 1 and
    α_i = (Σ_{m=1}^{min(r,i)} g_m · α_{i−m}^(q^m)) / (T^(q^i) − T)."""
    tower, q, r = phi.tower, phi.q, phi.rank
    T = _T(tower)
    one = T.one()
    g = phi.coeffs

    def rule(i: int, memo) -> RationalFunction:
        num = one - one
        for m in range(1, min(r, i) + 1):
            num = num + g[m] * memo[i - m].frob_power(m, q)
        den = T.frob_power(i, q) - T
        return num / den

    return LazyAdditiveSeries(q, one, rule)


def logarithm(phi: AnalyticDrinfeldModule) -> LazyAdditiveSeries:
    """log_φ with T·log_φ(z) = log_φ(φ_T(z)): β_0 = 1 and
    β_i = (Σ_{n=max(0,i−r)}^{i−1} β_n · g_{i−n}^(q^n)) / (T − T^(q^i))."""
    tower, q, r = phi.tower, phi.q, phi.rank
    T = _T(tower)
    one = T.one()
    g = phi.coeffs

    def rule(i: int, memo) -> RationalFunction:
        num = one - one
        for n in range(max(0, i - r), i):
            num = num + memo[n] * g[i - n].frob_power(n, q)
        den = T - T.frob_power(i, q)
        return num / den

    return LazyAdditiveSeries(q, one, rule)


def identity_series(tower: FieldTower) -> LazyAdditiveSeries:
    one = _T(tower).one()
    return LazyAdditiveSeries(tower.q, one, lambda i, memo: one - one)


def series_coeff(s: LazyAdditiveSeries, i: int) -> RationalFunction:
    return s.coeff(i)


def series_slice(s: LazyAdditiveSeries, lo: int, hi: int):
    return s.slice(lo, hi)


def series_compose(f: LazyAdditiveSeries, g: LazyAdditiveSeries,
                   upto: int) -> list[RationalFunction]:
    """q-power coefficients of f∘g: (f∘g)_k = Σ_{i+j=k} f_i · (g_j)^(q^i)."""
    if f.q != g.q:
        raise InvalidParameter("series over different F_q")
    q = f.q
    out = []
    for k in range(upto):
        acc = f.coeff(0) - f.coeff(0)
        for i in range(k + 1):
            acc = acc + f.coeff(i) * g.coeff(k - i).frob_power(i, q)
        out.append(acc)
    return out


def carlitz_oracles(tower: FieldTower, i: int):
    """Exact ([i], D_i, L_i) over F_q: [i] = T^(q^i) − T,
    D_i = [i]·D_{i−1}^q, L_i = [i]·L_{i−1} (D_0 = L_0 = 1)."""
    if i < 0:
        raise InvalidParameter("index must be >= 0")
    q = tower.q
    T = _fq_polynomial(tower, [0, 1])
    one = T.one()
    if i == 0:
        # [0] = T^1 − T = 0 by the formula; only D_0 = L_0 = 1 are used
        return T - T, one, one
    brackets = [None]
    for k in range(1, i + 1):
        brackets.append(T.substitute_power(q ** k) - T)
    D = one
    L = one
    for k in range(1, i + 1):
        D = brackets[k] * D.substitute_power(q)
        L = brackets[k] * L
    return brackets[i], D, L


def carlitz_module(tower: FieldTower) -> AnalyticDrinfeldModule:
    """The Carlitz module T ↦ T + τ."""
    return AnalyticDrinfeldModule(tower, [[0, 1], 1])
