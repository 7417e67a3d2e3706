"""Anderson-motive computations.

The motive M(φ) is K{τ} viewed as a free K[T]-module with basis
(1, τ, ..., τ^(r-1)): K acts by left multiplication and T by right
multiplication by φ_T.  Morphisms of Drinfeld modules become K[T]-linear
maps of motives; their determinants and characteristic polynomials descend
to F_q[T] and give the norm and charpoly, including the Frobenius case
that pins down the isogeny class.
"""

from __future__ import annotations

from . import _linalg
from .dmodule import DrinfeldModule
from .errors import (
    AmbiguousSolution,
    CategoryMismatch,
    DescentFailure,
    ElementFormRequiresEndomorphism,
    NotAnEndomorphism,
    RankMismatch,
    TowerMismatch,
    ZeroMorphism,
)
from .ff import FieldElement
from .hom import DrinfeldMorphism, frobenius_endomorphism
from .ore import OrePolynomial
from .poly import (
    DensePolynomial,
    PolyMatrix,
    berkowitz_charpoly,
    hessenberg_charpoly,
    interpolate,
)


class MotiveVector:
    """Coordinates of an element of K{τ} in the basis (1, τ, ..., τ^(r-1))."""

    __slots__ = ("module", "coords")

    def __init__(self, module: DrinfeldModule, coords):
        coords = list(coords)
        if len(coords) != module.rank:
            raise RankMismatch("coordinate vector has wrong length")
        self.module = module
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, MotiveVector)
                and self.module == other.module
                and self.coords == other.coords)

    def expand(self) -> OrePolynomial:
        """Re-expand Σ c_i(T)·τ^i with T acting by right-mult by φ_T."""
        phi = self.module
        tw = phi.tower
        phi_T = phi.phi_T()
        total = OrePolynomial(tw, [], phi.var)
        for i, c in enumerate(self.coords):
            tau_i = OrePolynomial.tau(tw, i, phi.var)
            power = tau_i  # τ^i · φ_T^k, built incrementally
            for k in range(len(c.coeffs)):
                total = total + c.coeffs[k] * power
                power = power * phi_T
        return total

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _poly_T(tower, coeffs=None) -> DensePolynomial:
    zero = tower.zero("K")
    if coeffs is None:
        coeffs = []
    return DensePolynomial(coeffs, zero, "T")


def motive_reduce(phi: DrinfeldModule, w: OrePolynomial) -> MotiveVector:
    """Express w ∈ K{τ} in the motive basis of φ.

    The top index d ≥ r is rewritten with
    g_r^(q^(d-r))·τ^d = T·τ^(d-r) − Σ_{j<r} g_j^(q^(d-r))·τ^(d-r+j),
    which strictly lowers d, until only indices < r remain.
    """
    if w.tower.key != phi.tower.key:
        raise TowerMismatch("Ore polynomial from a different tower")
    tw = phi.tower
    r = phi.rank
    zero_poly = _poly_T(tw)
    size = max(len(w.coeffs), r)
    coords = [_poly_T(tw, [w.coeff(d)]) for d in range(size)]
    T_mono = DensePolynomial([tw.zero("K"), tw.one("K")], tw.zero("K"), "T")
    for d in range(size - 1, r - 1, -1):
        f = coords[d]
        if f.is_zero():
            continue
        e = d - r
        inv = phi.coeffs[r].frobenius(e).inv()
        fi = f * inv
        coords[e] = coords[e] + fi * T_mono
        for j in range(r):
            gje = phi.coeffs[j].frobenius(e)
            if not gje.is_zero():
                coords[e + j] = coords[e + j] - fi * gje
        coords[d] = zero_poly
    return MotiveVector(phi, coords[:r])


def morphism_matrix(f: DrinfeldMorphism) -> PolyMatrix:
    """Matrix over K[T] of M(ψ) → M(φ), m ↦ m·u, in the τ-power bases."""
    phi, psi = f.domain, f.codomain
    if phi.rank != psi.rank:
        raise RankMismatch("motive matrices need equal ranks")
    r = phi.rank
    tw = phi.tower
    cols = []
    for i in range(r):
        w = OrePolynomial.tau(tw, i, phi.var) * f.ore
        cols.append(motive_reduce(phi, w).coords)
    return PolyMatrix([[cols[j][i] for j in range(r)] for i in range(r)])


def _descend_to_fq(poly_K: DensePolynomial, tower, var: str = "T"):
    """Reinterpret a K[T] polynomial in F_q[T]; DescentFailure otherwise."""
    out = []
    for c in poly_K.coeffs:
        vec = c.k_coeffs()
        if tower.flat:
            if any(vec[1:]):
                raise DescentFailure(f"coefficient {c} lies outside F_q")
            out.append(FieldElement(tower, "q", vec[0]))
        else:
            if any(any(inner) for inner in vec[1:]):
                raise DescentFailure(f"coefficient {c} lies outside F_q")
            out.append(FieldElement(tower, "q", vec[0]))
    return DensePolynomial(out, tower.zero("q"), var)


def _matrix_charpoly(mat: PolyMatrix, tower, var: str = "X"):
    """Characteristic polynomial of a square matrix over K[T].

    When K has enough elements the matrix is evaluated at distinct points
    of K, each specialization's charpoly is computed over the field K
    (Hessenberg), and the K[T] coefficients are recovered by interpolation;
    this is far faster than the division-free route on large inputs.
    Small K falls back to Berkowitz.  Both routes agree (tested).
    """
    rows = mat.entries
    r = len(rows)
    # every charpoly coefficient is a sum of minors, so its T-degree is at
    # most the sum over rows of the largest entry degree in that row
    bound = sum(max(max(e.degree, 0) for e in row) for row in rows)
    if tower.order_K <= bound:
        return berkowitz_charpoly(mat, var)
    points = [tower._element_from_index(j) for j in range(bound + 1)]
    per_point = []
    for c in points:
        evaluated = [[e(c) for e in row] for row in rows]
        per_point.append(hessenberg_charpoly(evaluated, var).coeffs)
    zero_K = tower.zero("K")
    coeffs = []
    for i in range(r + 1):
        values = [cp[i] if i < len(cp) else zero_K for cp in per_point]
        coeffs.append(interpolate(points, values, zero_K, "T"))
    zero_T = DensePolynomial([], zero_K, "T")
    return DensePolynomial(coeffs, zero_T, var)


def charpoly(f: DrinfeldMorphism, var: str = "X") -> DensePolynomial:
    """Characteristic polynomial of an endomorphism: monic of degree r in
    var, coefficients in F_q[T] (Berkowitz on the motive matrix, then
    descent — asserted, never coerced)."""
    if f.domain != f.codomain:
        raise NotAnEndomorphism("charpoly needs an endomorphism")
    tw = f.domain.tower
    cp = _matrix_charpoly(morphism_matrix(f), tw, var)
    coeffs = [_descend_to_fq(c, tw) for c in cp.coeffs]
    zero = DensePolynomial([], tw.zero("q"), "T")
    return DensePolynomial(coeffs, zero, var)


def norm(f: DrinfeldMorphism, as_ideal: bool = True):
    """Norm of a nonzero morphism.

    Ideal form: the monic generator of the norm ideal — the monic
    normalization of det(morphism_matrix(f)), which descends to F_q[T].
    Element form (endomorphisms only): (−1)^r · P(0) with P = charpoly(f).
    """
    if f.is_zero():
        raise ZeroMorphism("the zero morphism has no norm")
    tw = f.domain.tower
    r = f.domain.rank
    if not as_ideal:
        if f.domain != f.codomain:
            raise ElementFormRequiresEndomorphism(
                "element-form norm needs an endomorphism")
        p0 = charpoly(f).coeff(0)
        return p0 if r % 2 == 0 else -p0
    cp = _matrix_charpoly(morphism_matrix(f), tw)
    det = cp.coeff(0) if r % 2 == 0 else -cp.coeff(0)  # det M = (−1)^r·P(0)
    return _descend_to_fq(det.monic(), tw)


def frobenius_charpoly(phi: DrinfeldModule,
                       algorithm: str = "motive") -> DensePolynomial:
    """Characteristic polynomial of the Frobenius endomorphism τ^n.

    "motive" computes the charpoly on the Anderson motive.  "gekeler"
    solves the F_q-linear system expressing that the charpoly annihilates
    the Frobenius, with deg a_i ≤ ⌊n(r−i)/r⌋; it raises AmbiguousSolution
    when that system does not pin the coefficients down uniquely.
    """
    if algorithm == "motive":
        return charpoly(frobenius_endomorphism(phi))
    if algorithm != "gekeler":
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return _gekeler_charpoly(phi)


def _gekeler_charpoly(phi: DrinfeldModule) -> DensePolynomial:
    tw = phi.tower
    n, r = tw.n, phi.rank
    phi_T = phi.phi_T()
    # unknowns: coefficients a_{i,k} of a_i = Σ_k a_{i,k} T^k, k ≤ n(r−i)/r
    unknown_cols = []
    phi_Tk = OrePolynomial(tw, [1], phi.var)  # φ_(T^k), starting at k = 0
    powers = []
    max_deg = n
    for _ in range(max_deg + 1):
        powers.append(phi_Tk)
        phi_Tk = phi_Tk * phi_T
    nrows_tau = n * r + 1
    columns = []
    index = []
    for i in range(r):
        bound = (n * (r - i)) // r
        tau_ni = OrePolynomial.tau(tw, n * i, phi.var)
        for k in range(bound + 1):
            w = powers[k] * tau_ni
            col = []
            for m in range(nrows_tau):
                col.extend(w.coeff(m).q_vector())
            columns.append(col)
            index.append((i, k))
    rhs_ore = -OrePolynomial.tau(tw, n * r, phi.var)
    rhs = []
    for m in range(nrows_tau):
        rhs.extend(rhs_ore.coeff(m).q_vector())
    nrows = nrows_tau * tw.n
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    if _linalg.kernel_basis(rows, len(columns), tw.one("q")):
        raise AmbiguousSolution(
            "the coefficient system has a nontrivial kernel")
    sol = _linalg.solve(rows, rhs)
    if sol is None:
        raise AmbiguousSolution("the coefficient system is inconsistent")
    zero_q = tw.zero("q")
    acc = [[zero_q] * ((n * (r - i)) // r + 1) for i in range(r)]
    for val, (i, k) in zip(sol, index):
        acc[i][k] = val
    coeffs = [DensePolynomial(acc[i], zero_q, "T") for i in range(r)]
    one_T = DensePolynomial([tw.one("q")], zero_q, "T")
    zero_T = DensePolynomial([], zero_q, "T")
    return DensePolynomial(coeffs + [one_T], zero_T, "X")


def is_isogenous(phi: DrinfeldModule, psi: DrinfeldModule) -> bool:
    """Whether φ and ψ are isogenous: equal ranks and equal Frobenius
    characteristic polynomials."""
    if phi.tower.key != psi.tower.key or not phi.g0 == psi.g0:
        raise CategoryMismatch("modules in different categories")
    if phi.rank != psi.rank:
        return False
    return frobenius_charpoly(phi) == frobenius_charpoly(psi)
