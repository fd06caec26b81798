"""Arithmetic in GF(2^t).

Elements are plain ints in ``[0, 2**t)`` whose bits are the polynomial
coefficients (bit i is the coefficient of x^i). A :class:`Field` owns the
log/antilog tables and does all arithmetic through them.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotIrreducibleError, ParameterError

MAX_DEGREE = 16


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m, both polynomials over GF(2)."""
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    """Carry-less product of a and b reduced modulo m."""
    dm = poly_degree(m)
    top = 1 << dm
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return out


def poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(poly_degree(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def find_factor(p: int) -> int | None:
    """Smallest nontrivial factor of p over GF(2), or None if p is irreducible.

    Trial division by every polynomial of degree 1..deg(p)//2.
    """
    d = poly_degree(p)
    for cand in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, cand) == 0:
            return cand
    return None


def _is_primitive(m: int) -> bool:
    t = poly_degree(m)
    order = (1 << t) - 1
    x = poly_mod(2, m)
    y = x
    for i in range(1, order + 1):
        if y == 1:
            return i == order
        y = poly_mulmod(y, x, m)
    return False


@lru_cache(maxsize=None)
def default_modulus(t: int) -> int:
    """Numerically smallest primitive polynomial of degree t (0x13 for t=4)."""
    if not 1 <= t <= MAX_DEGREE:
        raise ParameterError(f"extension degree must be in 1..{MAX_DEGREE}, got {t}")
    for m in range((1 << t) | 1, 1 << (t + 1), 2):
        if find_factor(m) is None and _is_primitive(m):
            return m
    raise AssertionError("unreachable: primitive polynomials exist for every degree")


class Field:
    """The finite field GF(2^t) defined by an irreducible ``modulus``.

    Immutable after construction.
    """

    __slots__ = ("t", "modulus", "order", "generator", "_exp", "_log")

    def __init__(self, t: int, modulus: int | None = None):
        if not 1 <= t <= MAX_DEGREE:
            raise ParameterError(f"extension degree must be in 1..{MAX_DEGREE}, got {t}")
        if modulus is None:
            modulus = default_modulus(t)
        if poly_degree(modulus) != t:
            raise ParameterError(
                f"modulus {poly_str(modulus)} has degree {poly_degree(modulus)}, expected {t}"
            )
        factor = find_factor(modulus)
        if factor is not None:
            raise NotIrreducibleError(
                f"modulus {poly_str(modulus)} is not irreducible: divisible by {poly_str(factor)}"
            )
        self.t = t
        self.modulus = modulus
        self.order = 1 << t
        self.generator, self._exp, self._log = self._tables()

    @classmethod
    def of_order(cls, q: int, modulus: int | None = None) -> "Field":
        if q < 2 or q & (q - 1):
            raise ParameterError(f"order {q} is not a power of 2")
        return cls(q.bit_length() - 1, modulus)

    def _tables(self) -> tuple[int, list[int], list[int]]:
        # the modulus need only be irreducible, so search for a generator
        n = self.order - 1
        for g in range(1, self.order):
            exp = [0] * (2 * n)
            x = 1
            for i in range(n):
                exp[i] = x
                x = poly_mulmod(x, g, self.modulus)
                if x == 1 and i < n - 1:
                    break
            else:
                for i in range(n, 2 * n):
                    exp[i] = exp[i - n]
                log = [0] * self.order
                for i in range(n):
                    log[exp[i]] = i
                return g, exp, log
        raise AssertionError("unreachable: the multiplicative group is cyclic")

    def __repr__(self) -> str:
        return f"Field(t={self.t}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.t, self.modulus) == (other.t, other.modulus)

    def __hash__(self) -> int:
        return hash((self.t, self.modulus))

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    def elements(self) -> range:
        return range(self.order)

    def _check(self, *xs: int) -> None:
        for a in xs:
            if not 0 <= a < self.order:
                raise ParameterError(f"{a} is not an element of GF({self.order})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def sqrt(self, a: int) -> int:
        # Frobenius is bijective in characteristic 2
        return self.pow(a, self.order // 2)

    def dot(self, u: tuple[int, ...], w: tuple[int, ...]) -> int:
        acc = 0
        for a, b in zip(u, w):
            if a and b:
                acc ^= self._exp[self._log[a] + self._log[b]]
        return acc
