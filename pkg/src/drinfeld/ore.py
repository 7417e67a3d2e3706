"""The twisted polynomial ring K{τ} with τ·a = a^q·τ.

Coefficients are FieldElements of K, ascending in τ, no trailing zeros.
Multiplication twists through the q-power Frobenius: the coefficient of
τ^(i+j) in f·g picks up a_i · (b_j)^(q^i).  Only right Euclidean division
(divisor on the right) is provided; it is the single division needed for
morphism codomain inference.
"""

from __future__ import annotations

from ._render import render_poly
from .errors import DivisionByZeroOre, TowerMismatch, ZeroPolynomial
from .ff import FieldElement, FieldTower


class OrePolynomial:
    """Element of K{τ}; immutable."""

    __slots__ = ("tower", "coeffs", "var")

    def __init__(self, tower: FieldTower, coeffs, var: str = "t"):
        norm = []
        for c in coeffs:
            if isinstance(c, int):
                c = tower.element("K", c)
            elif isinstance(c, FieldElement):
                if c.tower.key != tower.key:
                    raise TowerMismatch("coefficient from a different tower")
                c = c.lift("K")
            else:
                raise TypeError(f"bad Ore coefficient {c!r}")
            norm.append(c)
        while norm and norm[-1].is_zero():
            norm.pop()
        self.tower = tower
        self.coeffs = tuple(norm)
        self.var = var

    # -- constructors -----------------------------------------------------
    @classmethod
    def tau(cls, tower: FieldTower, power: int = 1, var: str = "t"):
        return cls(tower, [0] * power + [1], var)

    @classmethod
    def constant(cls, c: FieldElement, var: str = "t"):
        return cls(c.tower, [c], var)

    def _make(self, coeffs) -> "OrePolynomial":
        return OrePolynomial(self.tower, coeffs, self.var)

    # -- structure ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def one(self) -> "OrePolynomial":
        return self._make([self.tower.one("K")])

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.tower.zero("K")

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero Ore polynomial has no leading coefficient")
        return self.coeffs[-1]

    def tau_valuation(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("τ-valuation of zero is undefined")
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        raise AssertionError("unreachable: coefficients are normalized")

    # -- ring operations -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, OrePolynomial):
            if other.tower.key != self.tower.key:
                raise TowerMismatch("Ore polynomials over different towers")
            return other
        if isinstance(other, (int, FieldElement)):
            return self._make([other])
        return NotImplemented

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
        zero = self.tower.zero("K")
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b.frobenius(i)
        return self._make(out)

    def __rmul__(self, other):
        # other is a scalar (ints and FieldElements only reach here)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, e: int) -> "OrePolynomial":
        if e < 0:
            raise DivisionByZeroOre("negative Ore power")
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def right_divmod(self, g: "OrePolynomial"):
        """(quot, rem) with self = quot·g + rem and deg rem < deg g."""
        g = self._coerce(g)
        if g is NotImplemented:
            raise TypeError("cannot divide by this object")
        if g.is_zero():
            raise DivisionByZeroOre("right division by zero")
        rem = list(self.coeffs)
        dg = g.degree
        if len(rem) - 1 < dg:
            return self._make([]), self
        zero = self.tower.zero("K")
        quot = [zero] * (len(rem) - 1 - dg + 1)
        lg_inv = g.leading().inv()
        while len(rem) - 1 >= dg:
            e = len(rem) - 1 - dg
            c = rem[-1] * lg_inv.frobenius(e)
            quot[e] = c
            for j, b in enumerate(g.coeffs):
                rem[e + j] = rem[e + j] - c * b.frobenius(e)
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem:
                break
        return self._make(quot), self._make(rem)

    # -- comparison, display -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self._make([other])
        if not isinstance(other, OrePolynomial):
            return NotImplemented
        return self.tower.key == other.tower.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("OrePolynomial", self.tower.key, self.coeffs))

    def __str__(self):
        return render_poly(self.coeffs, self.var)

    def __repr__(self):
        return str(self)


def ore_mul(f: OrePolynomial, g: OrePolynomial) -> OrePolynomial:
    return f * g


def ore_right_divmod(f: OrePolynomial, g: OrePolynomial):
    return f.right_divmod(g)


def tau_valuation(f: OrePolynomial) -> int:
    return f.tau_valuation()
