"""Finite fields GF(p^d) with deterministic modulus and generator choice.

Elements are coefficient tuples of length d, constant term first.  The
modulus is the lexicographically least monic irreducible polynomial of
degree d, the tuple holding its non-leading coefficients in the same
constant-first order.
"""

from __future__ import annotations

from itertools import product

from .numtheory import is_prime

FieldElement = tuple


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial mod (full coefficients)."""
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(d):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    out = a[:d] if len(a) >= d else a + [0] * (d - len(a))
    return tuple(x % p for x in out)


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division of the monic polynomial x^d + ... by all monic divisors."""
    d = len(coeffs)
    if coeffs[0] == 0:
        return False
    full = coeffs + (1,)
    for e in range(1, d // 2 + 1):
        for low in product(range(p), repeat=e):
            divisor = low + (1,)
            if _poly_mod(full, divisor, p) == (0,) * e:
                return False
    return True


def least_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Non-leading coefficients of the least monic irreducible of degree d."""
    if d == 1:
        return (0,)
    for coeffs in product(range(p), repeat=d):
        if _is_irreducible(coeffs, p):
            return coeffs
    raise RuntimeError(f"no irreducible of degree {d} over GF({p})")


def all_irreducibles(p: int, d: int) -> list[tuple[int, ...]]:
    """All monic irreducibles of degree d, in lexicographic order."""
    if d == 1:
        return [(c,) for c in range(p)]
    return [c for c in product(range(p), repeat=d) if _is_irreducible(c, p)]


class FiniteField:
    """GF(p^d) with tuple-coded elements and a stored primitive element."""

    def __init__(self, p: int, d: int, modulus: tuple[int, ...] | None = None,
                 size_cap: int = 1 << 20):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError(f"degree must be >= 1, got {d}")
        if p**d > size_cap:
            raise ValueError(f"field size {p}^{d} exceeds cap {size_cap}")
        self.p = p
        self.d = d
        self.q = p**d
        if modulus is None:
            modulus = least_irreducible(p, d)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != d:
                raise ValueError(f"modulus needs {d} coefficients, got {len(modulus)}")
            if d > 1 and not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        self.alpha = self._find_generator()

    def element(self, k: int) -> FieldElement:
        """Element with index k in 0..q-1, base-p digits constant term first."""
        if not 0 <= k < self.q:
            raise ValueError(f"index {k} outside 0..{self.q - 1}")
        digits = []
        for _ in range(self.d):
            digits.append(k % self.p)
            k //= self.p
        return tuple(digits)

    def index(self, a: FieldElement) -> int:
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        return tuple((-x) % self.p for x in a)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.d == 1:
            return ((a[0] * b[0]) % self.p,)
        return _poly_mod(_poly_mul(a, b, self.p), self.modulus + (1,), self.p)

    def power(self, a: FieldElement, n: int) -> FieldElement:
        if n < 0:
            return self.power(self.inverse(a), -n)
        result = self.one
        sq = a
        while n:
            if n & 1:
                result = self.mul(result, sq)
            sq = self.mul(sq, sq)
            n >>= 1
        return result

    def inverse(self, a: FieldElement) -> FieldElement:
        if a == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        return self.power(a, self.q - 2)

    def elem_order(self, a: FieldElement) -> int:
        """Multiplicative order of a nonzero element."""
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        order = 1
        x = a
        while x != self.one:
            x = self.mul(x, a)
            order += 1
        return order

    def _find_generator(self) -> FieldElement:
        for k in range(1, self.q):
            a = self.element(k)
            if self.elem_order(a) == self.q - 1:
                return a
        raise RuntimeError("multiplicative group has no generator (impossible)")

    def elements(self) -> list[FieldElement]:
        return [self.element(k) for k in range(self.q)]

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, d={self.d}, modulus={self.modulus})"
