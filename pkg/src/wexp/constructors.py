"""Constructors for the built-in group families.

Every constructor asserts the closed-form order of the family it builds, so
a wrong generator set fails loudly instead of silently classifying the
wrong group.
"""

from __future__ import annotations

import math
from itertools import product

from .caps import DEFAULT_CAPS, Caps
from .fields import FieldElement, FiniteField, all_irreducibles
from .numtheory import is_prime, least_primitive_root, prime_power_split
from .perm import Permutation, PermGroup


def _checked(group: PermGroup, expected_order: int, what: str) -> PermGroup:
    if group.order() != expected_order:
        raise RuntimeError(
            f"{what}: computed order {group.order()} != expected {expected_order}"
        )
    return group


def make_symmetric(n: int) -> PermGroup:
    """S_n on n points."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return PermGroup(1, [])
    if n == 2:
        gens = [Permutation.parse("(1 2)", 2)]
    else:
        gens = [
            Permutation.parse("(1 2)", n),
            Permutation.from_cycles([list(range(1, n + 1))], n),
        ]
    return _checked(PermGroup(n, gens), math.factorial(n), f"S_{n}")


def make_alternating(n: int) -> PermGroup:
    """A_n on n points, generated by consecutive 3-cycles."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= 2:
        return PermGroup(max(n, 1), [])
    gens = [
        Permutation.from_cycles([[i, i + 1, i + 2]], n)
        for i in range(1, n - 1)
    ]
    return _checked(PermGroup(n, gens), math.factorial(n) // 2, f"A_{n}")


def make_cyclic(n: int) -> PermGroup:
    """C_n as the single n-cycle."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return PermGroup(1, [])
    gens = [Permutation.from_cycles([list(range(1, n + 1))], n)]
    return _checked(PermGroup(n, gens), n, f"C_{n}")


def make_dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n on n points; n in {1, 2} falls back to
    the cyclic group of order 2n, which has the right order on few points."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= 2:
        return make_cyclic(2 * n)
    rotation = Permutation.from_cycles([list(range(1, n + 1))], n)
    reflection = Permutation.from_images(
        [1] + [n + 2 - i for i in range(2, n + 1)]
    )
    return _checked(PermGroup(n, [rotation, reflection]), 2 * n, f"D_{n}")


def make_direct_product(a: PermGroup, b: PermGroup,
                        caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """A x B acting on the disjoint union of the two point sets."""
    degree = a.degree + b.degree
    if degree > caps.degree_cap:
        raise ValueError(f"combined degree {degree} exceeds cap {caps.degree_cap}")
    gens = []
    for g in a.generators:
        gens.append(Permutation(g._img + tuple(range(a.degree, degree))))
    for g in b.generators:
        gens.append(Permutation(tuple(range(a.degree)) + tuple(x + a.degree for x in g._img)))
    return _checked(PermGroup(degree, gens), a.order() * b.order(), "direct product")


def _agl_order(n: int, p: int) -> int:
    q = p**n
    gl = math.prod(q - p**i for i in range(n))
    return q * gl


def _primitive_polynomial(p: int, n: int) -> tuple[int, ...]:
    """Least monic irreducible of degree n >= 2 over GF(p) whose root
    generates the multiplicative group."""
    if n < 2:
        raise ValueError("degree must be >= 2")
    for coeffs in all_irreducibles(p, n):
        field = FiniteField(p, n, modulus=coeffs)
        x = (0, 1) + (0,) * (n - 2)
        if field.elem_order(x) == p**n - 1:
            return coeffs
    raise RuntimeError(f"no primitive polynomial of degree {n} over GF({p})")


def make_agl(n: int, p: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """AGL(n, p) acting on the p^n vectors of GF(p)^n.

    Generated by the basis translations plus GL(n,p): for n = 1 the least
    primitive root, for n >= 2 the transvection adding coordinate 1 into
    coordinate 2 together with the companion matrix of the least primitive
    polynomial (acting on row vectors).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = p**n
    if q > caps.degree_cap:
        raise ValueError(f"degree {q} exceeds cap {caps.degree_cap}")

    vectors = list(product(range(p), repeat=n))
    point_of = {v: i + 1 for i, v in enumerate(vectors)}

    def vec_perm(fn) -> Permutation:
        return Permutation.from_images([point_of[fn(v)] for v in vectors])

    gens = []
    for i in range(n):
        gens.append(vec_perm(
            lambda v, i=i: tuple((c + (1 if j == i else 0)) % p for j, c in enumerate(v))
        ))
    if n == 1:
        g = least_primitive_root(p) if p > 2 else 1
        if g != 1:
            gens.append(vec_perm(lambda v: ((v[0] * g) % p,)))
    else:
        def apply_matrix(v, m):
            return tuple(
                sum(v[i] * m[i][j] for i in range(n)) % p for j in range(n)
            )

        transvection = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        transvection[0][1] = 1
        gens.append(vec_perm(lambda v: apply_matrix(v, transvection)))

        poly = _primitive_polynomial(p, n)
        companion = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            companion[i][i + 1] = 1
        for j in range(n):
            companion[n - 1][j] = (-poly[j]) % p
        gens.append(vec_perm(lambda v: apply_matrix(v, companion)))

    return _checked(PermGroup(q, gens), _agl_order(n, p), f"AGL({n},{p})")


def make_psl2(q: int, modulus: tuple[int, ...] | None = None,
              caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """PSL(2, q) acting on the q + 1 points of the projective line.

    Points are ordered [infinity, 0, 1, alpha, alpha^2, ...] by discrete
    logarithm.  Generators are the images of the matrices [[1,1],[0,1]],
    [[1,0],[1,1]] and diag(alpha, alpha^-1) acting on row vectors; the
    order q(q^2-1)/gcd(2, q-1) is asserted.
    """
    split = prime_power_split(q)
    if split is None:
        raise ValueError(f"{q} is not a prime power")
    p, d = split
    field = FiniteField(p, d, modulus=modulus, size_cap=caps.field_cap)
    if q + 1 > caps.degree_cap:
        raise ValueError(f"degree {q + 1} exceeds cap {caps.degree_cap}")

    # 1-based points: 1 = infinity, 2 = zero, 3 + k = alpha^k.
    dlog: dict[FieldElement, int] = {}
    x = field.one
    for k in range(q - 1):
        dlog[x] = k
        x = field.mul(x, field.alpha)

    def point_of(vec: tuple[FieldElement, FieldElement]) -> int:
        xx, yy = vec
        if yy == field.zero:
            return 1
        ratio = field.mul(xx, field.inverse(yy))
        if ratio == field.zero:
            return 2
        return 3 + dlog[ratio]

    def rep_of(point: int) -> tuple[FieldElement, FieldElement]:
        if point == 1:
            return (field.one, field.zero)
        if point == 2:
            return (field.zero, field.one)
        return (field.power(field.alpha, point - 3), field.one)

    def matrix_perm(m: tuple[FieldElement, FieldElement, FieldElement, FieldElement]) -> Permutation:
        a, b, c, dd = m
        images = []
        for point in range(1, q + 2):
            vx, vy = rep_of(point)
            wx = field.add(field.mul(vx, a), field.mul(vy, c))
            wy = field.add(field.mul(vx, b), field.mul(vy, dd))
            images.append(point_of((wx, wy)))
        return Permutation.from_images(images)

    one, zero, alpha = field.one, field.zero, field.alpha
    gens = [
        matrix_perm((one, one, zero, one)),
        matrix_perm((one, zero, one, one)),
        matrix_perm((alpha, zero, zero, field.inverse(alpha))),
    ]
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    return _checked(PermGroup(q + 1, gens), expected, f"PSL(2,{q})")
