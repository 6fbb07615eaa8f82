"""Exact arithmetic for non-crystallographic coefficient rings.

Root coordinates and character values for the types H3, H4 and I2(m) live
in Z[g] with g = 2*cos(pi/m).  Elements are coefficient vectors in the
power basis (1, g, ..., g^(d-1)) reduced modulo the minimal polynomial of
g; nothing in this module ever touches floating point.
"""

from __future__ import annotations

from functools import lru_cache


def _polydiv_exact(num: list, den: list) -> list:
    """Divide integer polynomials (ascending coefficients), asserting no remainder."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def dickson_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of p_k with p_k(2*cos t) = 2*cos(k*t).

    p_0 = 2, p_1 = x, p_k = x*p_{k-1} - p_{k-2}.
    """
    a, b = [2], [0, 1]
    if k == 0:
        return tuple(a)
    for _ in range(k - 1):
        nxt = [0] + b
        for i, c in enumerate(a):
            nxt[i] -= c
        a, b = b, nxt
    return tuple(b)


@lru_cache(maxsize=None)
def real_cyclotomic_minpoly(m: int) -> tuple[int, ...]:
    """Minimal polynomial (ascending, monic) of 2*cos(pi/m) over the rationals.

    >>> real_cyclotomic_minpoly(3)
    (-1, 1)
    >>> real_cyclotomic_minpoly(5)
    (-1, -1, 1)
    >>> real_cyclotomic_minpoly(4)
    (-2, 0, 1)
    """
    # 2*cos(pi/m) = z + 1/z for z a primitive 2m-th root of unity.  Write the
    # (palindromic) cyclotomic polynomial Phi_{2m}(z) = z^(d/2) * Psi(z + 1/z)
    # and read off Psi in the p_k basis.
    phi = cyclotomic_polynomial(2 * m)
    d = len(phi) - 1
    assert d % 2 == 0 and phi == phi[::-1]
    half = d // 2
    out = [0] * (half + 1)
    out[0] = phi[half]
    for k in range(1, half + 1):
        a = phi[half + k]
        if a:
            for i, c in enumerate(dickson_polynomial(k)):
                out[i] += a * c
    assert out[-1] == 1
    return tuple(out)


class RealCyclotomicRing:
    """The ring Z[g], g = 2*cos(pi/m), as a quotient of Z[x]."""

    def __init__(self, m: int):
        self.m = m
        self.minpoly = real_cyclotomic_minpoly(m)
        self.degree = len(self.minpoly) - 1

    def __repr__(self):
        return f"RealCyclotomicRing(m={self.m})"

    def __eq__(self, other):
        return isinstance(other, RealCyclotomicRing) and other.m == self.m

    def __hash__(self):
        return hash(("RealCyclotomicRing", self.m))

    # -- element constructors ------------------------------------------------

    def el(self, *coeffs) -> "RingEl":
        return RingEl(self, self._reduce(list(coeffs)))

    def from_int(self, n) -> "RingEl":
        return RingEl(self, (n,) + (0,) * (self.degree - 1))

    @property
    def zero(self) -> "RingEl":
        return self.from_int(0)

    @property
    def one(self) -> "RingEl":
        return self.from_int(1)

    @property
    def gamma(self) -> "RingEl":
        return self.el(0, 1)

    def two_cos(self, k: int) -> "RingEl":
        """The element 2*cos(k*pi/m) = p_k(g), reduced."""
        k = abs(k) % (2 * self.m)
        if k > self.m:
            k = 2 * self.m - k
        a, b = self.from_int(2), self.gamma
        if k == 0:
            return a
        g = self.gamma
        for _ in range(k - 1):
            a, b = b, g * b - a
        return b

    # -- raw coefficient arithmetic -------------------------------------------

    def _reduce(self, c: list) -> tuple:
        d = self.degree
        mp = self.minpoly
        for i in range(len(c) - 1, d - 1, -1):
            t = c[i]
            if t:
                for j in range(d):
                    c[i - d + j] -= t * mp[j]
            c[i] = 0
        c = c[:d]
        c.extend([0] * (d - len(c)))
        return tuple(c)


class RingEl:
    """An element of a :class:`RealCyclotomicRing`.

    Coefficients may be ints or Fractions; arithmetic mixes freely with ints.
    """

    __slots__ = ("ring", "c")

    def __init__(self, ring: RealCyclotomicRing, coeffs: tuple):
        self.ring = ring
        self.c = coeffs

    def _coerce(self, other):
        if isinstance(other, RingEl):
            assert other.ring == self.ring
            return other
        return RingEl(self.ring, (other,) + (0,) * (self.ring.degree - 1))

    def __add__(self, other):
        o = self._coerce(other)
        return RingEl(self.ring, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RingEl(self.ring, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return RingEl(self.ring, tuple(-a for a in self.c))

    def __mul__(self, other):
        if not isinstance(other, RingEl):
            return RingEl(self.ring, tuple(a * other for a in self.c))
        assert other.ring == self.ring
        a, b = self.c, other.c
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return RingEl(self.ring, self.ring._reduce(prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RingEl):
            return self.ring == other.ring and self.c == other.c
        return self.c[0] == other and all(a == 0 for a in self.c[1:])

    def __hash__(self):
        return hash((self.ring.m, self.c))

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.c[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.c[0]

    def divide_exact(self, n: int) -> "RingEl":
        out = []
        for a in self.c:
            q, r = divmod(a, n)
            assert r == 0
            out.append(q)
        return RingEl(self.ring, tuple(out))

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            if i == 0:
                terms.append(f"{a}")
            elif i == 1:
                terms.append(f"{a}*g")
            else:
                terms.append(f"{a}*g^{i}")
        return " + ".join(terms) if terms else "0"
