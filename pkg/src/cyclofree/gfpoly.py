"""Dense univariate polynomial arithmetic and factorization over F_p.

A polynomial is a tuple of ints in [0, p), constant coefficient first,
with no trailing zeros.  Factorization runs squarefree decomposition,
then distinct-degree splitting, then equal-degree splitting.  The
equal-degree stage draws random polynomials from a seeded generator, so
a fixed seed makes the whole factorization reproducible.
"""

from __future__ import annotations

import random
from functools import lru_cache

Poly = tuple[int, ...]

X: Poly = (0, 1)
ONE: Poly = (1,)


def gf_trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def gf_from_int_poly(coeffs, p: int) -> Poly:
    return gf_trim(c % p for c in coeffs)


def gf_degree(f: Poly) -> int:
    return len(f) - 1


def gf_add(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return gf_trim(out)


def gf_sub(f: Poly, g: Poly, p: int) -> Poly:
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return gf_trim(out)


def gf_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return gf_trim(c % p for c in out)


def gf_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    rem = list(f)
    dg = len(g) - 1
    if len(rem) <= dg:
        return (), gf_trim(rem)
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] % p
        if c:
            q = c * inv % p
            quot[i - dg] = q
            for j, b in enumerate(g):
                rem[i - dg + j] = (rem[i - dg + j] - q * b) % p
    return gf_trim(quot), gf_trim(rem)


def gf_mod(f: Poly, g: Poly, p: int) -> Poly:
    return gf_divmod(f, g, p)[1]


def gf_monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    lc = f[-1] % p
    if lc == 1:
        return f
    inv = pow(lc, -1, p)
    return gf_trim(c * inv % p for c in f)


def gf_gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, gf_mod(f, g, p)
    return gf_monic(f, p)


def gf_pow_mod(f: Poly, e: int, mod: Poly, p: int) -> Poly:
    result: Poly = ONE
    f = gf_mod(f, mod, p)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, f, p), mod, p)
        f = gf_mod(gf_mul(f, f, p), mod, p)
        e >>= 1
    return result


def gf_derivative(f: Poly, p: int) -> Poly:
    return gf_trim((i * f[i]) % p for i in range(1, len(f)))


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic squarefree parts with multiplicities; f must be monic."""
    out: list[tuple[Poly, int]] = []
    c = gf_gcd(f, gf_derivative(f, p), p)
    w, _ = gf_divmod(f, c, p)
    i = 1
    while gf_degree(w) > 0:
        y = gf_gcd(w, c, p)
        z, _ = gf_divmod(w, y, p)
        if gf_degree(z) > 0:
            out.append((z, i))
        w = y
        c, _ = gf_divmod(c, y, p)
        i += 1
    if gf_degree(c) > 0:
        # c = h(x^p); over the prime field the p-th root keeps coefficients
        root = gf_trim(c[j] for j in range(0, len(c), p))
        for g, m in squarefree_decomposition(root, p):
            out.append((g, m * p))
    return out


def distinct_degree_split(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """(product of irreducible factors of degree d, d) for monic squarefree f."""
    out: list[tuple[Poly, int]] = []
    v = f
    h: Poly = X
    d = 0
    while gf_degree(v) >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, v, p)
        g = gf_gcd(gf_sub(h, X, p), v, p)
        if gf_degree(g) > 0:
            out.append((g, d))
            v, _ = gf_divmod(v, g, p)
            h = gf_mod(h, v, p)
    if gf_degree(v) > 0:
        out.append((v, gf_degree(v)))
    return out


def _random_poly(degree_below: int, p: int, rng: random.Random) -> Poly:
    return gf_trim(rng.randrange(p) for _ in range(degree_below))


def equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """All monic irreducible factors of f, given that each has degree d."""
    n = gf_degree(f)
    if n == d:
        return [gf_monic(f, p)]
    while True:
        a = _random_poly(n, p, rng)
        if gf_degree(a) < 1:
            continue
        g = gf_gcd(a, f, p)
        if 0 < gf_degree(g) < n:
            break
        if p == 2:
            # trace map: a + a^2 + a^4 + ... splits f in characteristic 2
            t: Poly = ()
            b = gf_mod(a, f, p)
            for _ in range(d):
                t = gf_add(t, b, p)
                b = gf_mod(gf_mul(b, b, p), f, p)
            g = gf_gcd(t, f, p)
        else:
            b = gf_pow_mod(a, (p**d - 1) // 2, f, p)
            g = gf_gcd(gf_sub(b, ONE, p), f, p)
        if 0 < gf_degree(g) < n:
            break
    other, _ = gf_divmod(f, g, p)
    return equal_degree_split(g, d, p, rng) + equal_degree_split(other, d, p, rng)


def factor_mod_p(coeffs, p: int, seed: int = 0) -> list[tuple[Poly, int]]:
    """Complete factorization of a nonzero polynomial over F_p.

    Returns monic irreducible factors with multiplicities, sorted by
    (degree, coefficient tuple); the leading coefficient of the input is
    dropped after monicization.  Deterministic for a fixed seed.
    """
    f = gf_from_int_poly(coeffs, p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    f = gf_monic(f, p)
    if gf_degree(f) == 0:
        return []
    rng = random.Random(seed)
    factors: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(f, p):
        for prod, d in distinct_degree_split(part, p):
            for irr in equal_degree_split(prod, d, p, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda fm: (gf_degree(fm[0]), fm[0]))
    return factors


@lru_cache(maxsize=None)
def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test on a monic polynomial."""
    f = gf_monic(f, p)
    n = gf_degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    h = gf_pow_mod(X, p**n, f, p)
    if gf_sub(h, X, p):
        return False
    from .arith import factor_integer

    for q in factor_integer(n):
        h = gf_pow_mod(X, p ** (n // q), f, p)
        if gf_degree(gf_gcd(gf_sub(h, X, p), f, p)) != 0:
            return False
    return True
