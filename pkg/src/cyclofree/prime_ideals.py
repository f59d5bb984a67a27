"""Prime ideal splitting in Z[zeta_n], valuations, and k-free predicates.

Because Z[zeta_n] is the full ring of integers, the splitting of a
rational prime ell can be read off the factorization of the n-th
cyclotomic polynomial modulo ell: each distinct monic irreducible factor
g gives the prime ideal (ell, g(zeta_n)), with residue degree deg(g) and
ramification equal to the multiplicity of g.

Valuations are computed geometrically: v_P(x) is the largest m for which
the embedded point lies in the lattice of P^m.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import gfpoly
from .arith import factor_integer, integer_kth_root, is_prime, multiplicative_order, primes_up_to
from .cyclotomic import CycInt, IntPolynomial, cyclotomic_polynomial, ring_degree, validate_conductor
from .lattices import ideal_lattice


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal (ell, g(zeta_n)) with its residue data."""

    ell: int
    n: int
    e: int
    f: int
    g_poly: tuple[int, ...]  # monic factor of Phi_n mod ell, lifted to [0, ell)

    @property
    def norm(self) -> int:
        return self.ell**self.f

    @property
    def ramified(self) -> bool:
        return self.e > 1

    def generators(self) -> list[CycInt]:
        return [
            CycInt.from_int(self.n, self.ell),
            CycInt.from_polynomial(self.n, IntPolynomial(self.g_poly)),
        ]

    def sort_key(self):
        return (self.norm, self.ell, self.g_poly)

    def to_json(self) -> str:
        return json.dumps(
            {"ell": self.ell, "n": self.n, "e": self.e, "f": self.f, "g_poly": list(self.g_poly)}
        )

    @staticmethod
    def from_json(text: str) -> "PrimeIdeal":
        data = json.loads(text)
        return PrimeIdeal(
            int(data["ell"]), int(data["n"]), int(data["e"]), int(data["f"]),
            tuple(int(c) for c in data["g_poly"]),
        )


def factor_poly_mod_p(poly: IntPolynomial, ell: int, seed: int = 0):
    """Factor an integer polynomial over F_ell into monic irreducibles.

    Thin wrapper over the finite-field kernel; returns (coeff tuple,
    multiplicity) pairs in the canonical (degree, lex) order.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    return gfpoly.factor_mod_p(poly.coeffs, ell, seed=seed)


@lru_cache(maxsize=None)
def splitting_type(ell: int, n: int) -> tuple[int, int, int]:
    """(e, f, g) for the rational prime ell in conductor n, no factorization."""
    validate_conductor(n)
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    d = ring_degree(n)
    if n % ell == 0:
        a = 0
        m = n
        while m % ell == 0:
            a += 1
            m //= ell
        e = ell**a - ell ** (a - 1)
        f = multiplicative_order(ell, m) if m > 1 else 1
    else:
        e = 1
        f = multiplicative_order(ell, n)
    g = d // (e * f)
    assert e * f * g == d
    return e, f, g


@lru_cache(maxsize=None)
def split_prime(ell: int, n: int) -> tuple[PrimeIdeal, ...]:
    """All prime ideals above ell, in canonical order."""
    e, f, g = splitting_type(ell, n)
    factors = factor_poly_mod_p(cyclotomic_polynomial(n), ell)
    ideals = []
    for coeffs, mult in factors:
        assert mult == e and len(coeffs) - 1 == f
        ideals.append(PrimeIdeal(ell=ell, n=n, e=e, f=f, g_poly=coeffs))
    assert len(ideals) == g
    return tuple(sorted(ideals, key=PrimeIdeal.sort_key))


def enumerate_prime_ideals(n: int, norm_bound: int) -> Iterator[PrimeIdeal]:
    """Every prime ideal of norm <= norm_bound, once, sorted by
    (norm, ell, coefficients of the defining factor)."""
    validate_conductor(n)
    found: list[PrimeIdeal] = []
    for ell in primes_up_to(norm_bound):
        _, f, _ = splitting_type(ell, n)
        if ell**f <= norm_bound:
            found.extend(split_prime(ell, n))
    found.sort(key=PrimeIdeal.sort_key)
    yield from found


def valuation(x: CycInt, ideal: PrimeIdeal) -> int:
    """v_P(x): the largest m with x in P^m.  Infinite (an error) for x = 0."""
    if not x:
        raise ValueError("the valuation of 0 is infinite")
    if x.n != ideal.n:
        raise ValueError("conductor mismatch")
    point = x.embed()
    if not ideal_lattice(ideal, 1).member(point):
        return 0
    m = 1
    while ideal_lattice(ideal, m + 1).member(point):
        m += 1
    return m


def _candidate_ideals(x: CycInt, k: int) -> tuple[int, list[PrimeIdeal]]:
    """|N(x)| and the prime ideals that could carry a valuation >= k."""
    norm = abs(x.norm())
    candidates: list[PrimeIdeal] = []
    if norm > 1:
        for ell in factor_integer(norm):
            for ideal in split_prime(ell, x.n):
                if ideal.norm**k <= norm:
                    candidates.append(ideal)
    return norm, candidates


def is_kfree(x: CycInt, k: int = 2) -> bool:
    """True when no prime ideal divides (x) to the k-th power.

    x = 0 is divisible by every power and reports False.  Only ideals P
    with N(P)^k <= |N(x)| are consulted; larger ones cannot reach
    valuation k because N(P)^v divides |N(x)|.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not x:
        return False
    norm, candidates = _candidate_ideals(x, k)
    if norm == 1:
        return True
    return all(valuation(x, ideal) < k for ideal in candidates)


def is_in_Wk(x: CycInt, k: int = 2) -> bool:
    """True when x is k-free and only ramified primes (those above the
    divisors of n) divide the ideal (x)."""
    if not x:
        return False
    if not is_kfree(x, k):
        return False
    norm = abs(x.norm())
    if norm == 1:
        return True
    return all(x.n % ell == 0 for ell in factor_integer(norm))


def ramified_primes(n: int) -> list[int]:
    """The rational primes that ramify: exactly the divisors of n."""
    validate_conductor(n)
    return sorted(factor_integer(n))


def norm_valuation_profile(x: CycInt) -> dict[int, int]:
    """Exponent of each rational prime in |N(x)|, from ideal valuations.

    The exponent of ell is the sum of f_P * v_P(x) over the ideals P
    above ell; this must reproduce the factorization of |N(x)|.
    """
    if not x:
        raise ValueError("x must be nonzero")
    norm = abs(x.norm())
    profile: dict[int, int] = {}
    if norm == 1:
        return profile
    for ell in factor_integer(norm):
        total = sum(ideal.f * valuation(x, ideal) for ideal in split_prime(ell, x.n))
        profile[ell] = total
    return profile


def kth_norm_root_bound(norm: int, k: int) -> int:
    """Largest admissible prime-ideal norm for a k-th power divisor."""
    return integer_kth_root(norm, k)


def is_kfree_bruteforce(x: CycInt, k: int) -> bool:
    """Independent oracle: test every prime ideal of norm <= |N(x)|."""
    if not x:
        return False
    norm = abs(x.norm())
    if norm == 1:
        return True
    for ideal in enumerate_prime_ideals(x.n, norm):
        if valuation(x, ideal) >= k:
            return False
    return True
