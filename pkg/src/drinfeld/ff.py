"""Two-level finite field towers F_p ⊂ F_q ⊂ K.

q = p^s and |K| = q^n; both extensions are given by fixed monic irreducible
moduli.  When moduli are omitted, the built-in Conway-polynomial table is
consulted, and failing that the lexicographically smallest monic irreducible
polynomial (coefficients compared low-degree-first) is used.

Elements live at one of three levels ("prime", "q", "K") and are immutable;
mixed-level arithmetic promotes to the higher level via the canonical
embeddings (an F_q element sits in the degree-0 coefficient slot of K).

For s = 1 the tower is "flat": F_q = F_p, K elements are plain coefficient
vectors over F_p, and all arithmetic runs through the compiled kernels.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from . import _core as kernel
from ._conway_table import CONWAY
from ._render import render_int_poly, render_poly
from .errors import NotPrime, ReducibleModulus, TowerMismatch, WrongDegree

_LEVEL_RANK = {"prime": 0, "q": 1, "K": 2}


# ---------------------------------------------------------------------------
# integer utilities
# ---------------------------------------------------------------------------

def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2^64."""
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % sp == 0:
            return m == sp
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division with a Pollard-rho fallback."""
    out: dict[int, int] = {}
    for d in (2, 3, 5):
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
    d = 7
    while d * d <= m and d < 100_000:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 2
    if m == 1:
        return out
    stack = [m]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        stack.extend(_pollard_split(v))
    return out


def _pollard_split(m: int) -> tuple[int, int]:
    if m % 2 == 0:
        return 2, m // 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % m
            y = (y * y + c) % m
            y = (y * y + c) % m
            d = math.gcd(abs(x - y), m)
        if d != m:
            return d, m // d
        c += 1


def _merge_congruence(c1: int, m1: int, c2: int, m2: int):
    """Combine x ≡ c1 (mod m1) and x ≡ c2 (mod m2); None if incompatible."""
    g = math.gcd(m1, m2)
    if (c2 - c1) % g:
        return None
    lcm = m1 // g * m2
    t = ((c2 - c1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (c1 + m1 * t) % lcm, lcm


# ---------------------------------------------------------------------------
# the tower
# ---------------------------------------------------------------------------

class FieldTower:
    """F_p ⊂ F_q ⊂ K with fixed moduli.  Immutable after construction."""

    def __init__(self, p, s, n, modulus_q=None, modulus_K=None,
                 name_q="w", name_K="z"):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if s < 1 or n < 1:
            raise WrongDegree("extension degrees must be >= 1")
        self.p = p
        self.s = s
        self.n = n
        self.q = p ** s
        self.order_K = self.q ** n
        self.flat = (s == 1)
        self.name_q = name_q
        self.name_K = name_K

        self.modulus_q = self._setup_modulus_q(modulus_q)
        self._modq_list = list(self.modulus_q)
        self.modulus_K = self._setup_modulus_K(modulus_K)
        if self.flat:
            self._modK_list = list(self.modulus_K)
        self.key = (p, s, n, self.modulus_q, self.modulus_K)
        self._sigma_cache = None
        self._gen_cache = None
        self._order_factors = None

    # -- modulus selection ---------------------------------------------
    def _setup_modulus_q(self, given) -> tuple[int, ...]:
        p, s = self.p, self.s
        if given is not None:
            m = [int(c) % p for c in given]
            if len(m) != s + 1 or m[-1] != 1:
                raise WrongDegree(
                    f"modulus_q must be monic of degree {s} over F_{p}")
            if not _fp_irreducible(m, p):
                raise ReducibleModulus("modulus_q is not irreducible")
            return tuple(m)
        if (p, s) in CONWAY:
            return CONWAY[(p, s)]
        return tuple(_fp_smallest_irreducible(s, p))

    def _setup_modulus_K(self, given):
        p, s, n, q = self.p, self.s, self.n, self.q
        if self.flat:
            if given is not None:
                m = [int(c) % p for c in given]
                if len(m) != n + 1 or m[-1] != 1:
                    raise WrongDegree(
                        f"modulus_K must be monic of degree {n} over F_{p}")
                if not _fp_irreducible(m, p):
                    raise ReducibleModulus("modulus_K is not irreducible")
                return tuple(m)
            if (p, n) in CONWAY:
                return CONWAY[(p, n)]
            return tuple(_fp_smallest_irreducible(n, p))
        # nested: modulus over F_q, coefficients are F_q vectors over F_p
        if given is not None:
            m = [self._as_fq(c) for c in given]
            if len(m) != n + 1 or m[-1] != self._fq_one():
                raise WrongDegree(
                    f"modulus_K must be monic of degree {n} over F_{q}")
            if not self._fq_irreducible(m):
                raise ReducibleModulus("modulus_K is not irreducible")
            return tuple(m)
        return tuple(self._fq_smallest_irreducible(n))

    def _as_fq(self, c) -> tuple[int, ...]:
        """Normalize an F_q coefficient given as int or coefficient list."""
        if isinstance(c, int):
            return _pad([c % self.p], self.s)
        return _pad([int(v) % self.p for v in c], self.s)

    # -- F_q raw arithmetic (nested towers; tuples of length s) ----------
    def _fq_zero(self):
        return (0,) * self.s

    def _fq_one(self):
        return _pad([1], self.s)

    def _fq_add(self, a, b):
        return _pad(kernel.poly_add(list(a), list(b), self.p), self.s)

    def _fq_sub(self, a, b):
        return _pad(kernel.poly_sub(list(a), list(b), self.p), self.s)

    def _fq_mul(self, a, b):
        return _pad(kernel.mul_mod(list(a), list(b), self._modq_list, self.p),
                    self.s)

    def _fq_neg(self, a):
        return _pad(kernel.poly_sub([], list(a), self.p), self.s)

    def _fq_inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in F_q")
        return _pad(kernel.pow_mod(list(a), self.q - 2, self._modq_list,
                                   self.p), self.s)

    def _fq_pow(self, a, e: int):
        if e < 0:
            return self._fq_pow(self._fq_inv(a), -e)
        return _pad(kernel.pow_mod(list(a), e, self._modq_list, self.p),
                    self.s)

    # -- F_q[x] raw arithmetic (lists of F_q tuples, for nested towers) --
    def _fqp_trim(self, f):
        while f and not any(f[-1]):
            f.pop()
        return f

    def _fqp_mul(self, f, g):
        if not f or not g:
            return []
        out = [self._fq_zero()] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if not any(a):
                continue
            for j, b in enumerate(g):
                out[i + j] = self._fq_add(out[i + j], self._fq_mul(a, b))
        return self._fqp_trim(out)

    def _fqp_rem(self, f, m):
        """f mod m for monic m over F_q."""
        f = list(f)
        dm = len(m) - 1
        while len(f) - 1 >= dm:
            c = f[-1]
            if any(c):
                off = len(f) - 1 - dm
                for j in range(dm):
                    f[off + j] = self._fq_sub(f[off + j],
                                              self._fq_mul(c, m[j]))
            f.pop()
            self._fqp_trim(f)
        return f

    def _fqp_powmod(self, f, e: int, m):
        result = [self._fq_one()]
        base = self._fqp_rem(list(f), m)
        while e > 0:
            if e & 1:
                result = self._fqp_rem(self._fqp_mul(result, base), m)
            base = self._fqp_rem(self._fqp_mul(base, base), m)
            e >>= 1
        return result

    def _fqp_gcd(self, f, g):
        f, g = self._fqp_trim(list(f)), self._fqp_trim(list(g))
        while g:
            inv = self._fq_inv(g[-1])
            gm = [self._fq_mul(c, inv) for c in g]
            f, g = g, self._fqp_rem(f, gm)
        return f

    def _fq_irreducible(self, m) -> bool:
        d = len(m) - 1
        x = [self._fq_zero(), self._fq_one()]
        if self._fqp_powmod(x, self.q ** d, m) != self._fqp_rem(list(x), m):
            return False
        for ell in factorize(d):
            xq = self._fqp_powmod(x, self.q ** (d // ell), m)
            diff = self._fqp_trim(
                [self._fq_sub(a, b) for a, b in
                 itertools.zip_longest(xq, x, fillvalue=self._fq_zero())])
            if len(self._fqp_gcd(diff, m)) - 1 > 0:
                return False
        return True

    def _fq_smallest_irreducible(self, d: int):
        """Lexicographically smallest monic irreducible of degree d over F_q,
        lower coefficients compared first (each F_q coefficient by its
        coefficient tuple over F_p, constant slot first)."""
        singles = list(itertools.product(range(self.p), repeat=self.s))
        if d == 1:
            return [singles[0], self._fq_one()]
        # constant term 0 (divisible by x) is skipped up front for d >= 2
        for c0 in singles[1:]:
            for upper in itertools.product(singles, repeat=d - 1):
                m = [c0, *upper, self._fq_one()]
                if self._fq_irreducible(m):
                    return m
        raise AssertionError("unreachable: irreducibles of every degree exist")

    # -- K raw arithmetic ------------------------------------------------
    def _K_zero(self):
        if self.flat:
            return (0,) * self.n
        return ((0,) * self.s,) * self.n

    def _K_one(self):
        if self.flat:
            return _pad([1], self.n)
        return tuple([self._fq_one()] + [self._fq_zero()] * (self.n - 1))

    def _K_gen(self):
        """The residue class of x in K = F_q[x]/(modulus_K)."""
        if self.n == 1:
            # degree-1 modulus x + c: the class of x is -c
            if self.flat:
                return ((-self.modulus_K[0]) % self.p,)
            return (self._fq_neg(self.modulus_K[0]),)
        if self.flat:
            return _pad([0, 1], self.n)
        return _padq([self._fq_zero(), self._fq_one()], self.n, self)

    def _K_add(self, a, b):
        if self.flat:
            return _pad(kernel.poly_add(list(a), list(b), self.p), self.n)
        return tuple(self._fq_add(x, y) for x, y in zip(a, b))

    def _K_sub(self, a, b):
        if self.flat:
            return _pad(kernel.poly_sub(list(a), list(b), self.p), self.n)
        return tuple(self._fq_sub(x, y) for x, y in zip(a, b))

    def _K_neg(self, a):
        if self.flat:
            return _pad(kernel.poly_sub([], list(a), self.p), self.n)
        return tuple(self._fq_neg(x) for x in a)

    def _K_mul(self, a, b):
        if self.flat:
            return _pad(kernel.mul_mod(list(a), list(b), self._modK_list,
                                       self.p), self.n)
        prod = self._fqp_mul(list(a), list(b))
        return _padq(self._fqp_rem(prod, list(self.modulus_K)), self.n, self)

    def _K_pow(self, a, e: int):
        if e < 0:
            return self._K_pow(self._K_inv(a), -e)
        if self.flat:
            return _pad(kernel.pow_mod(list(a), e, self._modK_list, self.p),
                        self.n)
        return _padq(self._fqp_powmod(list(a), e, list(self.modulus_K)),
                     self.n, self)

    def _K_inv(self, a):
        if not self._K_nonzero(a):
            raise ZeroDivisionError("inverse of zero in K")
        return self._K_pow(a, self.order_K - 2)

    def _K_nonzero(self, a) -> bool:
        if self.flat:
            return any(a)
        return any(any(c) for c in a)

    # -- Frobenius x -> x^(q^i) as cached linear maps ---------------------
    def _sigma_matrices(self):
        if self._sigma_cache is not None:
            return self._sigma_cache
        n = self.n
        if self.flat:
            sigma = [[0] * n for _ in range(n)]
            for j in range(n):
                col = kernel.pow_mod([0] * j + [1], self.q, self._modK_list,
                                     self.p)
                for i, c in enumerate(col):
                    sigma[i][j] = c
            mats = [[[1 if i == j else 0 for j in range(n)] for i in range(n)]]
            for _ in range(1, n):
                prev = mats[-1]
                mats.append([
                    [sum(sigma[i][k] * prev[k][j] for k in range(n)) % self.p
                     for j in range(n)] for i in range(n)])
        else:
            sigma = [[self._fq_zero()] * n for _ in range(n)]
            for j in range(n):
                ej = tuple(self._fq_one() if i == j else self._fq_zero()
                           for i in range(n))
                col = self._K_pow(ej, self.q)
                for i in range(n):
                    sigma[i][j] = col[i]
            ident = [[self._fq_one() if i == j else self._fq_zero()
                      for j in range(n)] for i in range(n)]
            mats = [ident]
            for _ in range(1, n):
                prev = mats[-1]
                nxt = [[self._fq_zero()] * n for _ in range(n)]
                for i in range(n):
                    for j in range(n):
                        acc = self._fq_zero()
                        for k in range(n):
                            acc = self._fq_add(
                                acc, self._fq_mul(sigma[i][k], prev[k][j]))
                        nxt[i][j] = acc
                mats.append(nxt)
        self._sigma_cache = mats
        return mats

    def _frob_raw(self, a, i: int):
        """a^(q^i) via the cached matrix of sigma^i."""
        i %= self.n
        if i == 0:
            return a
        mat = self._sigma_matrices()[i]
        if self.flat:
            return tuple(kernel.mat_vec(mat, list(a), self.p))
        out = []
        for row in mat:
            acc = self._fq_zero()
            for c, v in zip(row, a):
                acc = self._fq_add(acc, self._fq_mul(c, v))
            out.append(acc)
        return tuple(out)

    # -- element constructors ---------------------------------------------
    def zero(self, level: str = "K") -> "FieldElement":
        return self.element(level, 0)

    def one(self, level: str = "K") -> "FieldElement":
        if level == "prime":
            return FieldElement(self, "prime", 1)
        if level == "q":
            return FieldElement(self, "q", 1 if self.flat else self._fq_one())
        return FieldElement(self, "K", self._K_one())

    def element(self, level: str, value) -> "FieldElement":
        """Build an element: int scalar, or coefficient vector at the level."""
        if level == "prime":
            return FieldElement(self, "prime", int(value) % self.p)
        if level == "q":
            if isinstance(value, int):
                data = value % self.p if self.flat \
                    else _pad([value % self.p], self.s)
            elif self.flat:
                seq = list(value)
                if len(seq) > 1 and any(seq[1:]):
                    raise WrongDegree("F_q coefficient vector too long")
                data = int(seq[0]) % self.p if seq else 0
            else:
                seq = [int(v) % self.p for v in value]
                if len(seq) > self.s:
                    raise WrongDegree("F_q coefficient vector too long")
                data = _pad(seq, self.s)
            return FieldElement(self, "q", data)
        if level != "K":
            raise ValueError(f"unknown level {level!r}")
        if isinstance(value, int):
            c = value % self.p
            if self.flat:
                return FieldElement(self, "K", _pad([c], self.n))
            return FieldElement(self, "K",
                                _padq([_pad([c], self.s)], self.n, self))
        seq = list(value)
        if len(seq) > self.n:
            raise WrongDegree("K coefficient vector too long")
        if self.flat:
            return FieldElement(self, "K",
                                _pad([int(v) % self.p for v in seq], self.n))
        return FieldElement(self, "K",
                            _padq([self._as_fq(v) for v in seq], self.n, self))

    def K(self, value) -> "FieldElement":
        return self.element("K", value)

    def gen_K(self) -> "FieldElement":
        return FieldElement(self, "K", self._K_gen())

    def gen_q(self) -> "FieldElement":
        """The residue class of x in F_q = F_p[x]/(modulus_q)."""
        if self.flat:
            return FieldElement(self, "q", (-self.modulus_q[0]) % self.p)
        return FieldElement(self, "q", _pad([0, 1], self.s))

    def all_units(self):
        """Iterate over K* in a fixed order (small fields only)."""
        for enc in range(1, self.order_K):
            yield self._element_from_index(enc)

    def _element_from_index(self, enc: int) -> "FieldElement":
        digits_q = []
        for _ in range(self.n):
            digits_q.append(enc % self.q)
            enc //= self.q
        if self.flat:
            return FieldElement(self, "K", tuple(digits_q))
        coeffs = []
        for dq in digits_q:
            inner = []
            for _ in range(self.s):
                inner.append(dq % self.p)
                dq //= self.p
            coeffs.append(tuple(inner))
        return FieldElement(self, "K", tuple(coeffs))

    # -- discrete logarithms ------------------------------------------------
    def _factored_order(self):
        if self._order_factors is None:
            self._order_factors = factorize(self.order_K - 1)
        return self._order_factors

    def generator(self) -> "FieldElement":
        """A fixed generator of the cyclic group K*."""
        if self._gen_cache is not None:
            return self._gen_cache
        order = self.order_K - 1
        fact = self._factored_order()
        for g in self.all_units():
            if g.is_zero():
                continue
            if all(not (g ** (order // ell)).is_one() for ell in fact):
                self._gen_cache = g
                return g
        raise AssertionError("unreachable: K* is cyclic")

    def dlog(self, x: "FieldElement") -> int:
        """log_g(x) for the fixed generator g, by Pohlig-Hellman + BSGS."""
        if x.is_zero():
            raise ZeroDivisionError("discrete log of zero")
        g = self.generator()
        order = self.order_K - 1
        residue, modulus = 0, 1
        for ell, e in self._factored_order().items():
            pe = ell ** e
            g_sub = g ** (order // pe)
            h = x ** (order // pe)
            gamma = g_sub ** (ell ** (e - 1))  # order ell
            d = 0
            for k in range(e):
                target = (h * (g_sub ** d).inv()) ** (ell ** (e - 1 - k))
                d += _bsgs(gamma, target, ell) * ell ** k
            merged = _merge_congruence(residue, modulus, d, pe)
            assert merged is not None
            residue, modulus = merged
        return residue

    # -- identity ------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.flat:
            return (f"FieldTower(p={self.p}, n={self.n}, "
                    f"modulus_K={render_int_poly(self.modulus_K, 'x', self.p)})")
        return f"FieldTower(p={self.p}, s={self.s}, n={self.n})"


def _pad(lst, length: int) -> tuple[int, ...]:
    return tuple(list(lst) + [0] * (length - len(lst)))


def _padq(lst, length: int, tower) -> tuple:
    return tuple(list(lst) + [tower._fq_zero()] * (length - len(lst)))


def _bsgs(gamma: "FieldElement", target: "FieldElement", ell: int) -> int:
    """Solve gamma^d = target for d in [0, ell), gamma of prime order ell."""
    m = math.isqrt(ell) + 1
    table = {}
    cur = gamma.tower.one()
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * gamma
    jump = (gamma ** m).inv()
    cur = target
    for i in range(m):
        j = table.get(cur)
        if j is not None:
            return (i * m + j) % ell
        cur = cur * jump
    raise ArithmeticError("discrete log not found (element not in subgroup)")


# ---------------------------------------------------------------------------
# F_p[x] utilities for modulus validation
# ---------------------------------------------------------------------------

def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [c * inv % p for c in b]
        a, b = b, kernel.poly_rem(a, bm, p)
    return a


def _fp_irreducible(m, p: int) -> bool:
    d = len(m) - 1
    if d < 1:
        return False
    x = [0, 1]
    if kernel.pow_mod(x, p ** d, m, p) != kernel.poly_rem(x, m, p):
        return False
    for ell in factorize(d):
        xq = kernel.pow_mod(x, p ** (d // ell), m, p)
        if len(_fp_gcd(kernel.poly_sub(xq, x, p), m, p)) - 1 > 0:
            return False
    return True


def _fp_smallest_irreducible(d: int, p: int):
    """Smallest monic irreducible of degree d, coefficients compared
    low-degree-first.  Constant term 0 (divisible by x) is skipped up
    front for d >= 2 — it never yields an irreducible."""
    if d == 1:
        return [0, 1]
    for c0 in range(1, p):
        for upper in itertools.product(range(p), repeat=d - 1):
            m = [c0, *upper, 1]
            if _fp_irreducible(m, p):
                return m
    raise AssertionError("unreachable: irreducibles of every degree exist")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElement:
    """Immutable element of a FieldTower at a given level."""

    __slots__ = ("tower", "level", "data", "_hash")

    def __init__(self, tower: FieldTower, level: str, data):
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- level coercion -----------------------------------------------------
    def lift(self, level: str) -> "FieldElement":
        cur, tgt = _LEVEL_RANK[self.level], _LEVEL_RANK[level]
        if cur > tgt:
            raise TowerMismatch("cannot demote element level")
        if cur == tgt:
            return self
        tw = self.tower
        e = self
        if e.level == "prime" and tgt >= 1:
            data = e.data if tw.flat else _pad([e.data], tw.s)
            e = FieldElement(tw, "q", data)
        if e.level == "q" and tgt == 2:
            if tw.flat:
                data = _pad([e.data], tw.n)
            else:
                data = _padq([e.data], tw.n, tw)
            e = FieldElement(tw, "K", data)
        return e

    def _pair(self, other):
        if isinstance(other, int):
            other = FieldElement(self.tower, "prime", other % self.tower.p)
        if not isinstance(other, FieldElement):
            return None, None
        if self.tower.key != other.tower.key:
            raise TowerMismatch("elements of different towers")
        lvl = self.level if _LEVEL_RANK[self.level] >= _LEVEL_RANK[other.level] \
            else other.level
        return self.lift(lvl), other.lift(lvl)

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        if self.level == "prime":
            return self.data == 0
        if self.level == "q":
            return self.data == 0 if self.tower.flat else not any(self.data)
        return not self.tower._K_nonzero(self.data)

    def is_one(self) -> bool:
        return self == 1

    def __bool__(self):
        return not self.is_zero()

    def one(self) -> "FieldElement":
        return self.tower.one(self.level)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        tw = a.tower
        if a.level == "K":
            return FieldElement(tw, "K", tw._K_add(a.data, b.data))
        if a.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_add(a.data, b.data))
        return FieldElement(tw, a.level, (a.data + b.data) % tw.p)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        tw = a.tower
        if a.level == "K":
            return FieldElement(tw, "K", tw._K_sub(a.data, b.data))
        if a.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_sub(a.data, b.data))
        return FieldElement(tw, a.level, (a.data - b.data) % tw.p)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b - a

    def __neg__(self):
        tw = self.tower
        if self.level == "K":
            return FieldElement(tw, "K", tw._K_neg(self.data))
        if self.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_neg(self.data))
        return FieldElement(tw, self.level, (-self.data) % tw.p)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        tw = a.tower
        if a.level == "K":
            return FieldElement(tw, "K", tw._K_mul(a.data, b.data))
        if a.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_mul(a.data, b.data))
        return FieldElement(tw, a.level, (a.data * b.data) % tw.p)

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        tw = self.tower
        if self.level == "K":
            return FieldElement(tw, "K", tw._K_inv(self.data))
        if self.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_inv(self.data))
        if self.data == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(tw, self.level, pow(self.data, tw.p - 2, tw.p))

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b * a.inv()

    def __pow__(self, e: int) -> "FieldElement":
        tw = self.tower
        if self.level == "K":
            return FieldElement(tw, "K", tw._K_pow(self.data, e))
        if self.level == "q" and not tw.flat:
            return FieldElement(tw, "q", tw._fq_pow(self.data, e))
        if e < 0:
            return self.inv() ** (-e)
        m = tw.p
        return FieldElement(tw, self.level, pow(self.data, e, m))

    def frobenius(self, i: int = 1) -> "FieldElement":
        """x^(q^i) via the tower's cached sigma-power matrices."""
        x = self.lift("K")
        return FieldElement(self.tower, "K",
                            self.tower._frob_raw(x.data, i))

    # -- comparison, hashing -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldElement(self.tower, "prime", other % self.tower.p)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.tower.key != other.tower.key:
            return False
        return self.lift("K").data == other.lift("K").data

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash",
                hash((self.tower.key, self.lift("K").data)))
        return self._hash

    # -- coefficient access ---------------------------------------------------
    def k_coeffs(self):
        """Coefficient vector over F_q of the K-lift (ints when s = 1)."""
        return self.lift("K").data

    def q_vector(self) -> list["FieldElement"]:
        """The K-lift as a list of n level-q FieldElements."""
        x = self.lift("K")
        tw = self.tower
        return [FieldElement(tw, "q", c) for c in x.data]

    # -- display ------------------------------------------------------------------
    def _atomic(self) -> bool:
        return " + " not in str(self)

    def __str__(self):
        tw = self.tower
        if self.level == "prime":
            return str(self.data)
        if self.level == "q":
            if tw.flat:
                return str(self.data)
            return render_int_poly(self.data, tw.name_q, tw.p)
        if tw.flat:
            return render_int_poly(self.data, tw.name_K, tw.p)
        if tw.n == 1:
            return render_int_poly(self.data[0], tw.name_q, tw.p)
        inner = [FieldElement(tw, "q", c) for c in self.data]
        return render_poly(inner, tw.name_K)

    def __repr__(self):
        return str(self)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def make_tower(p: int, s: int, n: int, modulus_q=None, modulus_K=None,
               name_q: str = "w", name_K: str = "z") -> FieldTower:
    """Build the tower F_p ⊂ F_q ⊂ K (q = p^s, [K:F_q] = n).

    Omitted moduli come from the built-in Conway table when available and
    otherwise from the lexicographically-smallest-irreducible fallback.
    """
    return FieldTower(p, s, n, modulus_q, modulus_K, name_q, name_K)


@lru_cache(maxsize=None)
def cached_tower(p: int, s: int, n: int) -> FieldTower:
    """make_tower with default moduli, cached by parameters."""
    return FieldTower(p, s, n)


def frobenius_q(x: FieldElement) -> FieldElement:
    """The q-power Frobenius x ↦ x^q on K."""
    return x.frobenius(1)


def minimal_polynomial(x: FieldElement, var: str = "T"):
    """Monic minimal polynomial of x ∈ K over F_q, as a DensePolynomial
    with level-q coefficients (first F_q-linear dependency among 1, x, ...)."""
    from . import _linalg
    from .poly import DensePolynomial

    tw = x.tower
    x = x.lift("K")
    powers = [tw.one("K")]
    for d in range(1, tw.n + 1):
        powers.append(powers[-1] * x)
        # columns: 1, x, ..., x^(d-1); rhs: x^d  (over F_q, dimension n)
        cols = [v.q_vector() for v in powers[:d]]
        rhs = powers[d].q_vector()
        rows = [[cols[j][i] for j in range(d)] for i in range(tw.n)]
        sol = _linalg.solve(rows, rhs)
        if sol is not None:
            coeffs = [-c for c in sol] + [tw.one("q")]
            return DensePolynomial(coeffs, tw.zero("q"), var)
    raise AssertionError("unreachable: x^n is always a dependency")


def solve_power_system(pairs, tower: FieldTower | None = None):
    """Some c ∈ K* with c^(m_i) = r_i for every (m_i, r_i), or None.

    Solved via discrete logarithms: with g a fixed generator of K* and
    a_i = log_g(r_i), each equation becomes m_i·x ≡ a_i (mod q^n − 1) and
    the congruences are merged; c = g^x.
    """
    pairs = list(pairs)
    if not pairs:
        if tower is None:
            raise ValueError("empty system needs an explicit tower")
        return tower.one("K")
    tw = tower if tower is not None else pairs[0][1].tower
    order = tw.order_K - 1
    residue, modulus = 0, 1
    for m, r in pairs:
        r = r.lift("K")
        if r.is_zero():
            raise ValueError("right-hand sides must be nonzero")
        a = tw.dlog(r)
        m_red = m % order
        g = math.gcd(m_red, order) if m_red else order
        if a % g:
            return None
        if m_red == 0:
            continue  # equation is c^0 = r; needs r = 1, i.e. a ≡ 0 handled above
        step = order // g
        x0 = (a // g * pow(m_red // g, -1, step)) % step
        merged = _merge_congruence(residue, modulus, x0, step)
        if merged is None:
            return None
        residue, modulus = merged
    c = tw.generator() ** residue
    for m, r in pairs:
        if not (c ** m == r.lift("K")):
            return None
    return c
