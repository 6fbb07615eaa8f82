"""Sparse exact Laurent polynomials in one variable v."""

from __future__ import annotations


class LaurentPoly:
    """An integer Laurent polynomial, stored as {exponent: nonzero coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = a
        self._c = c

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def v_power(e: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: coeff})

    @staticmethod
    def from_q_coeffs(coeffs) -> "LaurentPoly":
        """Build from coefficients in q = v^2, ascending from q^0."""
        return LaurentPoly({2 * i: a for i, a in enumerate(coeffs)})

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            else:
                c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) - a
            if b:
                c[e] = b
            else:
                c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        out._c = {e: -a for e, a in self._c.items()}
        return out

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            out = LaurentPoly()
            if other:
                out._c = {e: a * other for e, a in self._c.items()}
            return out
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                b = c.get(e, 0) + a1 * a2
                if b:
                    c[e] = b
                else:
                    c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    __rmul__ = __mul__

    def shifted(self, e: int) -> "LaurentPoly":
        """Multiply by v^e."""
        out = LaurentPoly()
        out._c = {k + e: a for k, a in self._c.items()}
        return out

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        out = LaurentPoly()
        out._c = {-k: a for k, a in self._c.items()}
        return out

    # -- inspection -----------------------------------------------------------

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def degree(self) -> int:
        """Largest exponent; raises on the zero polynomial."""
        return max(self._c)

    @property
    def valuation(self) -> int:
        """Smallest exponent; raises on the zero polynomial."""
        return min(self._c)

    def items(self):
        return sorted(self._c.items())

    def at_one(self) -> int:
        return sum(self._c.values())

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items()):
            if e == 0:
                parts.append(f"{a}")
            elif e == 1:
                parts.append(f"{a}*v" if a != 1 else "v")
            else:
                parts.append(f"{a}*v^{e}" if a != 1 else f"v^{e}")
        return " + ".join(parts)
