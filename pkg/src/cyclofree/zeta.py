"""Validated enclosures of Dedekind zeta values at integer arguments.

The reciprocal Euler product  prod_P (1 - N(P)^-k)  is accumulated over
all prime ideals above the rational primes ell <= prime_bound: exactly in
rational arithmetic for small ell, then in 192-bit fixed point with
floor/ceil rounding.  The omitted tail satisfies

    0 <= log(tail of zeta) <= phi(n) * sum_{m > B} 2 m^-k
                           <= 2 phi(n) B^(1-k) / (k-1),

because at most phi(n) ideals sit above each rational prime, each of
norm >= ell, and -log(1-x) <= 2x for x <= 1/2.  The enclosure of
zeta_K(k) is therefore rigorous, and shrinks as the bound grows.

Logarithms of the rational endpoints are taken in interval arithmetic
(mpmath.iv), so the logarithmic bounds are rigorous as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .arith import primes_up_to
from .cyclotomic import ring_degree, validate_conductor
from .prime_ideals import splitting_type

PRECISION_BITS = 192
EXACT_HEAD_BOUND = 10_000
ROUNDING_NOTE = "outward fixed-point (floor/ceil) at 192 bits; exact rationals below 10^4"


@dataclass(frozen=True)
class Interval:
    """A closed interval with exact rational endpoints."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper

    def contains_interval(self, other: "Interval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    def strictly_below(self, other: "Interval") -> bool:
        return self.upper < other.lower

    def reciprocal(self) -> "Interval":
        if self.lower <= 0:
            raise ValueError("reciprocal needs a positive interval")
        return Interval(1 / self.upper, 1 / self.lower)

    def __mul__(self, other: "Interval") -> "Interval":
        if self.lower < 0 or other.lower < 0:
            raise ValueError("only positive intervals are multiplied here")
        return Interval(self.lower * other.lower, self.upper * other.upper)


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    man = int(man)
    if man == 0:
        return Fraction(0)
    value = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -value if sign else value


def _fraction_to_iv(x: Fraction):
    return mpmath.iv.mpf(x.numerator) / mpmath.iv.mpf(x.denominator)


def log_interval(interval: Interval, precision: int = 256) -> Interval:
    """Rigorous enclosure of [log lower, log upper]."""
    old = mpmath.iv.prec
    try:
        mpmath.iv.prec = precision
        lo = mpmath.iv.log(_fraction_to_iv(interval.lower))
        hi = mpmath.iv.log(_fraction_to_iv(interval.upper))
        return Interval(_raw_mpf_to_fraction(lo._mpi_[0]), _raw_mpf_to_fraction(hi._mpi_[1]))
    finally:
        mpmath.iv.prec = old


@lru_cache(maxsize=1)
def log2_interval() -> Interval:
    return log_interval(Interval(Fraction(2), Fraction(2)))


def _decimal_string(x: Fraction, digits: int, round_up: bool) -> str:
    scale = 10**digits
    scaled = x * scale
    value = -((-scaled.numerator) // scaled.denominator) if round_up else scaled.numerator // scaled.denominator
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole, frac = divmod(value, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class ZetaValue:
    """A rigorous enclosure of zeta_K(k) for K of conductor n."""

    n: int
    k: int
    prime_bound: int
    lower: Fraction
    upper: Fraction
    log_lower: Fraction
    log_upper: Fraction
    precision_bits: int = PRECISION_BITS

    @property
    def interval(self) -> Interval:
        return Interval(self.lower, self.upper)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def to_json(self, digits: int = 40) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "prime_bound": self.prime_bound,
                "lower": _decimal_string(self.lower, digits, round_up=False),
                "upper": _decimal_string(self.upper, digits, round_up=True),
                "log_lower": _decimal_string(self.log_lower, digits, round_up=False),
                "log_upper": _decimal_string(self.log_upper, digits, round_up=True),
                "precision_bits": self.precision_bits,
                "rounding": ROUNDING_NOTE,
            },
            sort_keys=True,
        )


@lru_cache(maxsize=None)
def _local_factor(ell: int, n: int, k: int) -> Fraction:
    """prod over the ideals above ell of (1 - N(P)^-k), exactly."""
    _, f, g = splitting_type(ell, n)
    q = ell ** (f * k)
    return Fraction(q - 1, q) ** g


@lru_cache(maxsize=None)
def dedekind_zeta(n: int, k: int, prime_bound: int) -> ZetaValue:
    """Enclose zeta_K(k) using all primes ell <= prime_bound.

    Requires k >= 2 and a bound large enough that the tail estimate is
    below 1/2 (B^(k-1) > 4 phi(n) / (k-1)); smaller bounds cannot give a
    meaningful rigorous enclosure and raise ValueError.
    """
    validate_conductor(n)
    if k < 2:
        raise ValueError("k must be >= 2; the Euler product diverges at 1")
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    d = ring_degree(n)
    tail = Fraction(2 * d, (k - 1) * prime_bound ** (k - 1))
    if tail >= Fraction(1, 2):
        raise ValueError(
            f"prime_bound {prime_bound} is too small for a rigorous enclosure "
            f"at n={n}, k={k}; the tail bound is {float(tail):.3g}"
        )
    one = 1 << PRECISION_BITS
    lo = hi = one
    head = Fraction(1)
    for ell in primes_up_to(prime_bound):
        if ell <= EXACT_HEAD_BOUND:
            head *= _local_factor(ell, n, k)
        else:
            fr = _local_factor(ell, n, k)
            p, q = fr.numerator, fr.denominator
            lo = (lo * p) // q
            hi = -((-hi * p) // q)
    lo = (lo * head.numerator) // head.denominator
    hi = -((-hi * head.numerator) // head.denominator)
    partial = Interval(Fraction(lo, one), Fraction(hi, one))
    # zeta = 1/partial * tail_inverse with tail_inverse in [1, 1/(1-tail)]
    zeta_lower = 1 / partial.upper
    zeta_upper = (1 / partial.lower) * (1 / (1 - tail))
    logs = log_interval(Interval(zeta_lower, zeta_upper))
    return ZetaValue(
        n=n,
        k=k,
        prime_bound=prime_bound,
        lower=zeta_lower,
        upper=zeta_upper,
        log_lower=logs.lower,
        log_upper=logs.upper,
    )


def density_constant(n: int, k: int, prime_bound: int) -> Interval:
    """Enclosure of 1/zeta_K(k), the density of the k-free points."""
    return dedekind_zeta(n, k, prime_bound).interval.reciprocal()


def entropy_constant(n: int, k: int, prime_bound: int) -> Interval:
    """Enclosure of log(2)/zeta_K(k), the topological entropy."""
    return log2_interval() * density_constant(n, k, prime_bound)


def interval_to_json(interval: Interval, digits: int = 40, **extra) -> str:
    payload = {
        "lower": _decimal_string(interval.lower, digits, round_up=False),
        "upper": _decimal_string(interval.upper, digits, round_up=True),
    }
    payload.update(extra)
    return json.dumps(payload, sort_keys=True)
