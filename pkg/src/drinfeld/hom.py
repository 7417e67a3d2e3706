"""Morphisms between Drinfeld modules.

A morphism φ → ψ is an Ore polynomial u with u·φ_T = ψ_T·u (equivalently
u·φ_a = ψ_a·u for every a).  Isogenies are the nonzero morphisms,
isomorphisms those defined by nonzero constants.  Hom spaces are
F_q-vector spaces and left F_q[T]-modules; bases in bounded degree come
from a kernel computation over F_q.
"""

from __future__ import annotations

import os

from . import _linalg
from .dmodule import DrinfeldModule
from .errors import (
    CategoryMismatch,
    ComposabilityMismatch,
    HomSetMismatch,
    NotAMorphism,
    NotAnEndomorphism,
    NotAnIsomorphism,
    SearchCapExceeded,
    ZeroOrePolynomial,
)
from .ff import FieldElement
from .ore import OrePolynomial
from .poly import DensePolynomial


class DrinfeldMorphism:
    """Morphism of Drinfeld modules, validated at construction."""

    __slots__ = ("domain", "codomain", "ore")

    def __init__(self, domain: DrinfeldModule, codomain: DrinfeldModule,
                 u: OrePolynomial, check: bool = True):
        if domain.tower.key != codomain.tower.key or not domain.g0 == codomain.g0:
            raise CategoryMismatch("domain and codomain in different categories")
        if check and not (u * domain.phi_T() == codomain.phi_T() * u):
            raise NotAMorphism("u·φ_T ≠ ψ_T·u")
        self.domain = domain
        self.codomain = codomain
        self.ore = u

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.ore.is_zero()

    def is_isogeny(self) -> bool:
        return not self.ore.is_zero()

    def is_isomorphism(self) -> bool:
        return self.ore.degree == 0

    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def inverse(self) -> "DrinfeldMorphism":
        if not self.is_isomorphism():
            raise NotAnIsomorphism("defining polynomial is not a nonzero constant")
        c = self.ore.coeffs[0].inv()
        return DrinfeldMorphism(
            self.codomain, self.domain,
            OrePolynomial(self.ore.tower, [c], self.ore.var))

    # -- algebra ------------------------------------------------------------
    def __mul__(self, other: "DrinfeldMorphism") -> "DrinfeldMorphism":
        """Composition self ∘ other (multiplication of Ore polynomials)."""
        if not isinstance(other, DrinfeldMorphism):
            return NotImplemented
        if other.codomain != self.domain:
            raise ComposabilityMismatch("codomain of right factor != domain of left")
        return DrinfeldMorphism(other.domain, self.codomain,
                                self.ore * other.ore, check=False)

    def __add__(self, other: "DrinfeldMorphism") -> "DrinfeldMorphism":
        if not isinstance(other, DrinfeldMorphism):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            raise HomSetMismatch("morphisms from different Hom sets")
        return DrinfeldMorphism(self.domain, self.codomain,
                                self.ore + other.ore, check=False)

    def __neg__(self):
        return DrinfeldMorphism(self.domain, self.codomain, -self.ore,
                                check=False)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, e: int) -> "DrinfeldMorphism":
        if self.domain != self.codomain:
            raise NotAnEndomorphism("powers need an endomorphism")
        if e < 0:
            raise NotAnIsomorphism("negative powers not supported")
        result = identity(self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scalar(self, a) -> "DrinfeldMorphism":
        """The left F_q[T]-action a·f = ψ_a ∘ f."""
        return hom(self.codomain, a) * self

    def __eq__(self, other):
        return (isinstance(other, DrinfeldMorphism)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.ore == other.ore)

    def __hash__(self):
        return hash(("DrinfeldMorphism", self.domain, self.codomain, self.ore))

    def __str__(self):
        return f"Drinfeld module morphism defined by {self.ore}"

    def __repr__(self):
        return str(self)


def identity(phi: DrinfeldModule) -> DrinfeldMorphism:
    return DrinfeldMorphism(
        phi, phi, OrePolynomial(phi.tower, [1], phi.var), check=False)


def hom(phi: DrinfeldModule, u) -> DrinfeldMorphism:
    """Morphism with domain φ defined by u, codomain inferred.

    u may be an Ore polynomial, a polynomial a ∈ F_q[T] (endomorphism φ_a),
    or a constant c ∈ K.  The codomain is the quotient of u·φ_T by u on the
    right; a nonzero remainder means u defines no morphism, and a constant
    coefficient differing from g_0 would change the category.
    """
    if isinstance(u, DensePolynomial):
        return DrinfeldMorphism(phi, phi, phi.evaluate(u), check=False)
    if isinstance(u, (int, FieldElement)):
        u = OrePolynomial(phi.tower, [u], phi.var)
    if not isinstance(u, OrePolynomial):
        raise TypeError(f"cannot build a morphism from {u!r}")
    if u.is_zero():
        raise ZeroOrePolynomial("a morphism witness must be nonzero")
    quot, rem = (u * phi.phi_T()).right_divmod(u)
    if not rem.is_zero():
        raise NotAMorphism("u does not right-divide u·φ_T")
    if not quot.coeff(0) == phi.g0:
        raise CategoryMismatch("inferred codomain has a different γ")
    codomain = DrinfeldModule(phi.tower, [quot.coeff(i)
                                          for i in range(quot.degree + 1)],
                              phi.var)
    return DrinfeldMorphism(phi, codomain, u, check=False)


def compose(f: DrinfeldMorphism, g: DrinfeldMorphism) -> DrinfeldMorphism:
    return f * g


def add(f: DrinfeldMorphism, g: DrinfeldMorphism) -> DrinfeldMorphism:
    return f + g


def scalar_action(a, f: DrinfeldMorphism) -> DrinfeldMorphism:
    return f.scalar(a)


def frobenius_endomorphism(phi: DrinfeldModule) -> DrinfeldMorphism:
    """The endomorphism τ^n with n = [K : F_q]."""
    return DrinfeldMorphism(
        phi, phi, OrePolynomial.tau(phi.tower, phi.tower.n, phi.var),
        check=False)


def _check_category(phi: DrinfeldModule, psi: DrinfeldModule):
    if phi.tower.key != psi.tower.key or not phi.g0 == psi.g0:
        raise CategoryMismatch("modules in different categories")


def hom_basis(phi: DrinfeldModule, psi: DrinfeldModule,
              degree: int) -> list[DrinfeldMorphism]:
    """F_q-basis of {u : u·φ_T = ψ_T·u, deg_τ u ≤ degree}.

    The unknown u = Σ u_i τ^i is expanded over an F_q-basis of K, turning
    u ↦ u·φ_T − ψ_T·u into an F_q-linear system whose kernel basis (in
    reduced-echelon order) is reassembled into morphisms.
    """
    _check_category(phi, psi)
    if degree < 0:
        return []
    tw = phi.tower
    n = tw.n
    phi_T, psi_T = phi.phi_T(), psi.phi_T()
    rmax = max(phi.rank, psi.rank)
    nrows_tau = degree + rmax + 1
    basis_K = [tw.element("K", [0] * m + [1]) for m in range(n)]
    columns = []
    for i in range(degree + 1):
        for b in basis_K:
            u = OrePolynomial(tw, [0] * i + [b], phi.var)
            image = u * phi_T - psi_T * u
            col = []
            for k in range(nrows_tau):
                col.extend(image.coeff(k).q_vector())
            columns.append(col)
    nrows = nrows_tau * n
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    kernel = _linalg.kernel_basis(rows, len(columns), tw.one("q"))
    out = []
    for vec in kernel:
        coeffs = []
        for i in range(degree + 1):
            acc = tw.zero("K")
            for m in range(n):
                acc = acc + vec[i * n + m].lift("K") * basis_K[m]
            coeffs.append(acc)
        out.append(DrinfeldMorphism(
            phi, psi, OrePolynomial(tw, coeffs, phi.var), check=True))
    return out


def hom_is_zero(phi: DrinfeldModule, psi: DrinfeldModule) -> bool:
    """Whether Hom(φ, ψ) = 0: ranks or Frobenius charpolys differ."""
    _check_category(phi, psi)
    if phi.rank != psi.rank:
        return True
    from .motive import frobenius_charpoly
    return frobenius_charpoly(phi) != frobenius_charpoly(psi)


def _isogeny_cap(phi: DrinfeldModule) -> int:
    env = os.environ.get("DRINFELD_ISOGENY_CAP")
    if env:
        return int(env)
    return phi.tower.n * phi.rank


def an_isogeny(phi: DrinfeldModule, psi: DrinfeldModule):
    """Some isogeny φ → ψ, or None when Hom(φ, ψ) = 0.

    Searches degrees 0, 1, 2, ... for the first nonzero morphism; the cap
    (n·r by default, DRINFELD_ISOGENY_CAP overrides) exists only to turn a
    configuration bug into an error instead of a hang.
    """
    if hom_is_zero(phi, psi):
        return None
    cap = _isogeny_cap(phi)
    for d in range(cap + 1):
        basis = hom_basis(phi, psi, d)
        for f in basis:
            if not f.is_zero():
                return f
    raise SearchCapExceeded(
        f"no isogeny of degree <= {cap} despite Hom(φ, ψ) ≠ 0")
