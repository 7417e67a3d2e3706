"""Drinfeld modules over a finite field K.

A Drinfeld module φ: F_q[T] → K{τ} is determined by the image
φ_T = g_0 + g_1 τ + ... + g_r τ^r with g_r ≠ 0 and r ≥ 1; g_0 = γ(T)
determines the base morphism γ.  This module provides construction and
validation, evaluation φ_a, the basic invariants (rank, characteristic,
height), the full j-invariant machinery, and isomorphism tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CategoryMismatch,
    InvalidParameter,
    RankNotTwo,
    RankTooSmall,
    RankZero,
    ZeroLeadingCoefficient,
)
from .ff import (
    FieldElement,
    FieldTower,
    minimal_polynomial,
    solve_power_system,
)
from .ore import OrePolynomial
from .poly import DensePolynomial


class DrinfeldModule:
    """Immutable Drinfeld module given by the coefficients of φ_T."""

    __slots__ = ("tower", "coeffs", "var")

    def __init__(self, tower: FieldTower, coeffs, var: str = "t"):
        norm = []
        for c in coeffs:
            if isinstance(c, int):
                c = tower.element("K", c)
            else:
                c = c.lift("K")
            norm.append(c)
        if len(norm) < 2:
            raise RankZero("φ_T needs positive degree in τ (>= 2 coefficients)")
        if norm[-1].is_zero():
            raise ZeroLeadingCoefficient("leading coefficient of φ_T is zero")
        self.tower = tower
        self.coeffs = tuple(norm)
        self.var = var

    # -- basic structure ------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.coeffs) - 1

    @property
    def g0(self) -> FieldElement:
        return self.coeffs[0]

    def phi_T(self) -> OrePolynomial:
        return OrePolynomial(self.tower, self.coeffs, self.var)

    def __eq__(self, other):
        return (isinstance(other, DrinfeldModule)
                and self.tower.key == other.tower.key
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(("DrinfeldModule", self.tower.key, self.coeffs))

    def __str__(self):
        return f"Drinfeld module defined by T |--> {self.phi_T()}"

    def __repr__(self):
        return str(self)

    # -- evaluation --------------------------------------------------------------
    def __call__(self, a) -> OrePolynomial:
        return self.evaluate(a)

    def evaluate(self, a) -> OrePolynomial:
        """φ_a for a ∈ F_q[T]: the image Σ c_j (φ_T)^j, by Horner.

        a may be a DensePolynomial over F_q, a list of ascending int
        coefficients, or an int constant.
        """
        if isinstance(a, DensePolynomial):
            cs = list(a.coeffs)
        elif isinstance(a, int):
            cs = [self.tower.element("q", a)]
        else:
            cs = [c if isinstance(c, FieldElement) else self.tower.element("q", c)
                  for c in a]
        phi_T = self.phi_T()
        acc = OrePolynomial(self.tower, [], self.var)
        for c in reversed(cs):
            acc = acc * phi_T + c.lift("K")
        return acc

    # -- invariants -----------------------------------------------------------------
    def characteristic(self, var: str = "T") -> DensePolynomial:
        """Monic generator of ker γ = minimal polynomial of g_0 over F_q."""
        return minimal_polynomial(self.g0, var)

    def height(self) -> int:
        """τ-valuation of φ_𝔭 divided by deg 𝔭, where 𝔭 = characteristic."""
        char = self.characteristic()
        v = self.evaluate(char).tau_valuation()
        assert v % char.degree == 0, "height divisibility must hold"
        h = v // char.degree
        assert 1 <= h <= self.rank
        return h

    # -- isomorphism twists ------------------------------------------------------------
    def twist(self, c: FieldElement) -> "DrinfeldModule":
        """The isomorphic module c·φ·c^{-1}, with coefficients g_i c^(1-q^i)."""
        c = c.lift("K")
        if c.is_zero():
            raise ZeroLeadingCoefficient("twist by zero")
        q = self.tower.q
        return DrinfeldModule(
            self.tower,
            [g * c ** (1 - q ** i) for i, g in enumerate(self.coeffs)],
            self.var,
        )

    # -- j-invariants --------------------------------------------------------------------
    def j_invariant(self, param=None) -> FieldElement:
        """j-invariant of φ.

        Call forms: no argument (rank 2 only, g_1^(q+1)/g_2), an integer k
        in [1, r-1] (the j_k-invariant), or an explicit parameter
        ((k_1, ..., k_m), (d_1, ..., d_m, d)) / JInvariantParameter
        satisfying the weight-0 condition.
        """
        r = self.rank
        q = self.tower.q
        if param is None:
            if r != 2:
                raise RankNotTwo("the no-argument form needs rank 2")
            param = JInvariantParameter((1,), (q + 1,), 1)
        elif isinstance(param, int):
            k = param
            if not 1 <= k <= r - 1:
                raise InvalidParameter(f"k must be in [1, {r - 1}]")
            g = math.gcd(k, r)
            param = JInvariantParameter(
                (k,), ((q ** r - 1) // (q ** g - 1),),
                (q ** k - 1) // (q ** g - 1))
        else:
            param = _as_parameter(param)
            _validate_parameter(param, r, q)
        num = self.tower.one("K")
        for k, d in zip(param.ks, param.ds):
            num = num * self.coeffs[k] ** d
        return num / self.coeffs[r] ** param.d

    def basic_j_invariants(self, nonzero: bool = False):
        """Map from every basic parameter to its j-invariant value.

        With nonzero set, slots are restricted to {i : g_i ≠ 0, 1 ≤ i < r}.
        """
        slots = None
        if nonzero:
            slots = {i for i in range(1, self.rank)
                     if not self.coeffs[i].is_zero()}
        params = basic_j_invariant_parameters(self.rank, self.tower.q, slots)
        return {p: self.j_invariant(p) for p in params}


@dataclass(frozen=True, order=True)
class JInvariantParameter:
    """Datum ((k_1, ..., k_m), (d_1, ..., d_m, d)) of a j-invariant.

    Weight-0 condition: Σ d_i (q^{k_i} − 1) = d (q^r − 1); the parameter is
    basic when gcd(d_1, ..., d_m, d) = 1.
    """

    ks: tuple[int, ...]
    ds: tuple[int, ...]
    d: int

    def as_pair(self):
        """The display form ((k_1, ..., k_m), (d_1, ..., d_m, d))."""
        return (self.ks, self.ds + (self.d,))

    def __str__(self):
        return str(self.as_pair())


def _as_parameter(param) -> JInvariantParameter:
    if isinstance(param, JInvariantParameter):
        return param
    ks, dd = param
    ks = tuple(int(k) for k in ks)
    dd = tuple(int(d) for d in dd)
    if len(dd) != len(ks) + 1:
        raise InvalidParameter(
            "parameter needs exponents (d_1, ..., d_m, d) for m slots")
    return JInvariantParameter(ks, dd[:-1], dd[-1])


def _validate_parameter(param: JInvariantParameter, r: int, q: int):
    ks, ds, d = param.ks, param.ds, param.d
    if len(ks) != len(ds) or not ks:
        raise InvalidParameter("mismatched parameter lengths")
    if any(not 1 <= k <= r - 1 for k in ks) or list(ks) != sorted(set(ks)):
        raise InvalidParameter("indices must be strictly increasing in [1, r-1]")
    if any(di < 1 for di in ds) or d < 1:
        raise InvalidParameter("exponents must be positive")
    if sum(di * (q ** k - 1) for k, di in zip(ks, ds)) != d * (q ** r - 1):
        raise InvalidParameter("weight-0 condition violated")


def basic_j_invariant_parameters(r: int, q: int, nonzero_slots=None):
    """All basic j-invariant parameters for rank r over F_q.

    The index tuple is exactly (k_1 < ... < k_m) = the slot set — all of
    {1, ..., r-1} by default, or nonzero_slots when given — with every d_i
    strictly positive.  Enumerates every exponent tuple in the bounds
    1 ≤ d_i ≤ (q^r−1)/(q^gcd(k_i, r)−1) whose weighted sum Σ d_i (q^{k_i}−1)
    is a multiple d·(q^r−1) with gcd(d_1, ..., d_m, d) = 1.  Output sorted
    lexicographically by (ks, ds, d).
    """
    if r < 1:
        raise RankTooSmall("rank must be >= 1")
    if r == 1:
        return []
    slots = tuple(range(1, r)) if nonzero_slots is None \
        else tuple(sorted(set(nonzero_slots) & set(range(1, r))))
    if not slots:
        return []
    out = _exact_slot_parameters(r, q, slots)
    out.sort(key=lambda p: (p.ks, p.ds, p.d))
    return out


def _exact_slot_parameters(r: int, q: int, ks: tuple[int, ...]):
    qr1 = q ** r - 1
    weights = [q ** k - 1 for k in ks]
    bounds = [qr1 // (q ** math.gcd(k, r) - 1) for k in ks]
    out: list[JInvariantParameter] = []
    ds = [1] * len(ks)
    _enumerate_exponents(ks, weights, bounds, qr1, 0, 0, ds, out)
    return out


def _all_basic_parameters(r: int, q: int, slots):
    """Basic parameters over every nonempty sub-tuple of slots (the full
    family needed for the absolute-isomorphism criterion)."""
    out: list[JInvariantParameter] = []
    slots = tuple(sorted(slots))
    for size in range(1, len(slots) + 1):
        for ks in combinations(slots, size):
            out.extend(_exact_slot_parameters(r, q, ks))
    return out


def _enumerate_exponents(ks, weights, bounds, qr1, idx, partial, ds, out):
    if idx == len(ks):
        if partial % qr1 == 0:
            d = partial // qr1
            if d >= 1 and math.gcd(math.gcd(*ds, d), d) == 1:
                out.append(JInvariantParameter(tuple(ks), tuple(ds), d))
        return
    w = weights[idx]
    for di in range(1, bounds[idx] + 1):
        ds[idx] = di
        _enumerate_exponents(ks, weights, bounds, qr1, idx + 1,
                             partial + di * w, ds, out)


def is_isomorphic(phi: DrinfeldModule, psi: DrinfeldModule,
                  absolutely: bool = False) -> bool:
    """Whether φ ≅ ψ over K, or over the algebraic closure (absolutely).

    Over K: supports of the coefficient vectors must agree and the system
    c^(q^i − 1) = g_i/h_i must be solvable in K*.  Absolutely: supports
    must agree (twisting never changes them) and all basic j-invariants on
    sub-tuples of the support must coincide; rank 1 modules are all
    absolutely isomorphic in a fixed category.
    """
    if phi.tower.key != psi.tower.key:
        raise CategoryMismatch("modules over different towers")
    if not phi.g0 == psi.g0:
        raise CategoryMismatch("modules with different base morphisms γ")
    if phi.rank != psi.rank:
        return False
    r = phi.rank
    q = phi.tower.q
    support_g = {i for i in range(1, r + 1) if not phi.coeffs[i].is_zero()}
    support_h = {i for i in range(1, r + 1) if not psi.coeffs[i].is_zero()}
    if support_g != support_h:
        return False
    if absolutely:
        if r == 1:
            return True
        params = _all_basic_parameters(r, q, support_g - {r})
        return all(phi.j_invariant(p) == psi.j_invariant(p) for p in params)
    pairs = [(q ** i - 1, phi.coeffs[i] / psi.coeffs[i]) for i in support_g]
    return solve_power_system(pairs, tower=phi.tower) is not None
