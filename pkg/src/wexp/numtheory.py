"""Small number-theoretic helpers used across the package."""

from __future__ import annotations

import math


def factorize(n: int) -> dict[int, int]:
    """Return the prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the orders used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_split(n: int) -> tuple[int, int] | None:
    """Return (p, d) with n == p**d if n is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    (p, d), = fac.items()
    return p, d


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) == 1."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = 1
    x = a % n
    while x != 1:
        x = (x * a) % n
        order += 1
    return order


def least_primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    target = p - 1
    prime_divs = list(factorize(target))
    for g in range(2, p):
        if all(pow(g, target // q, p) != 1 for q in prime_divs):
            return g
    raise RuntimeError(f"no primitive root found modulo {p}")


def primes_below(n: int) -> list[int]:
    """All primes strictly below n, by sieve."""
    if n <= 2:
        return []
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return [i for i in range(n) if sieve[i]]


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out
