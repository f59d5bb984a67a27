"""Rational integer utilities: primes, factoring, orders, integer roots.

Everything here is deterministic.  Factoring is trial division backed by
Brent's cycle-finding rho with a fixed parameter schedule, so repeated runs
produce identical factorizations.  Inputs at or beyond FACTOR_LIMIT are
rejected instead of being allowed to run for an unbounded time.
"""

from __future__ import annotations

import math
from functools import lru_cache

FACTOR_LIMIT = 1 << 128

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by a plain Eratosthenes byte sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(m: int) -> bool:
    """Miller-Rabin with the fixed base set (2..37).

    Deterministic and proven correct below 3.3e24; above that the fixed
    bases make the answer reproducible with error probability < 4^-12,
    which is adequate for the < 2^128 inputs this library accepts.
    """
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _SMALL_PRIMES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _brent_rho(m: int) -> int:
    """A nontrivial factor of the odd composite m (Brent's variant).

    The polynomial increment c walks 1, 2, 3, ... so the search is
    deterministic; it cannot fail forever because some c always works
    for composite m.
    """
    if m % 2 == 0:
        return 2
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g, x, ys = 1, y, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = math.gcd(q, m)
                k += 128
            r <<= 1
        if g == m:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = math.gcd(abs(x - ys), m)
        if g != m:
            return g
    raise ArithmeticError(f"rho failed to split {m}")  # pragma: no cover


def factor_integer(m: int) -> dict[int, int]:
    """Factor |m| into primes, as an exponent map sorted by prime.

    Raises ValueError for |m| >= FACTOR_LIMIT (runtime guard) and for m = 0.
    """
    m = abs(m)
    if m == 0:
        raise ValueError("cannot factor 0")
    if m >= FACTOR_LIMIT:
        raise ValueError(f"refusing to factor {m} >= 2^128; out of supported range")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= m and p < 100_000:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += wheel[i]
        i = (i + 1) % 8
    if m > 1:
        stack = [m]
        while stack:
            v = stack.pop()
            if is_prime(v):
                factors[v] = factors.get(v, 0) + 1
            else:
                g = _brent_rho(v)
                stack.append(g)
                stack.append(v // g)
    return dict(sorted(factors.items()))


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a in (Z/modulus)^x; requires gcd(a, modulus) = 1."""
    if modulus <= 1 or math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not a unit modulo {modulus}")
    order = _group_exponent_multiple(modulus)
    for p, e in factor_integer(order).items():
        for _ in range(e):
            if pow(a, order // p, modulus) == 1:
                order //= p
            else:
                break
    return order


@lru_cache(maxsize=None)
def _group_exponent_multiple(modulus: int) -> int:
    """Carmichael lambda of modulus (any multiple of the exponent works)."""
    lam = 1
    for p, e in factor_integer(modulus).items():
        if p == 2 and e >= 3:
            piece = 1 << (e - 2)
        else:
            piece = (p - 1) * p ** (e - 1)
        lam = lam * piece // math.gcd(lam, piece)
    return lam


def integer_kth_root(m: int, k: int) -> int:
    """floor(m ** (1/k)) for m >= 0, k >= 1, exactly."""
    if m < 0 or k < 1:
        raise ValueError("integer_kth_root needs m >= 0 and k >= 1")
    if m < 2 or k == 1:
        return m
    if k == 2:
        return math.isqrt(m)
    r = int(round(m ** (1.0 / k)))
    while r > 0 and r**k > m:
        r -= 1
    while (r + 1) ** k <= m:
        r += 1
    return r


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) = x*a + y*b."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
