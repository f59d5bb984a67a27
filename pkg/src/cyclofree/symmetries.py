"""Stabiliser symmetries of the k-free points and their verification.

A stabiliser element is multiplication by a unit composed with a Galois
automorphism; on the embedded lattice Z^d it acts as an integer matrix of
determinant +-1.  The composition law is semi-direct:

    (eps, r) * (eps', r') = (eps * sigma_r(eps'), r r' mod n).

The module also houses the splitting prime sets S_m, the search for
integers a_q with the three order/divisibility properties (H1) (H2) (H3)
used to certify the symmetry classification, the factor checks on
zeta_m^j - a_q^(n/m), and the exhaustive search for vanishing four-term
sums of roots of unity.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .arith import factor_integer, is_prime, primes_up_to
from .cyclotomic import CycInt, ring_degree, validate_conductor
from .lattices import box_points, determinant
from .prime_ideals import is_in_Wk, is_kfree, split_prime, valuation
from . import kfree as kfree_mod

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Galois group


@dataclass(frozen=True)
class GaloisGroup:
    n: int
    elements: tuple[int, ...]
    crt_factors: tuple[tuple[int, int, int], ...]  # (p, a, phi(p^a))

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, r: int, s: int) -> int:
        return (r * s) % self.n

    def table(self) -> dict[tuple[int, int], int]:
        return {(r, s): self.multiply(r, s) for r in self.elements for s in self.elements}

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(v in members for v in self.table().values())


def galois_group(n: int) -> GaloisGroup:
    """The group (Z/nZ)^x acting by zeta -> zeta^r, with its CRT shape."""
    validate_conductor(n)
    elements = tuple(r for r in range(1, n) if math.gcd(r, n) == 1)
    crt = tuple(
        (p, a, (p - 1) * p ** (a - 1)) for p, a in sorted(factor_integer(n).items())
    )
    return GaloisGroup(n=n, elements=elements, crt_factors=crt)


# ---------------------------------------------------------------------------
# units


def unit_generators(n: int) -> list[CycInt]:
    """Verified units generating a finite-index subgroup of the unit group.

    Always -1 and zeta; for n with two or more prime factors also 1 - zeta;
    for prime powers the cyclotomic units (1 - zeta^a)/(1 - zeta) with a
    coprime to n, keeping one representative per pair {a, n-a} and dropping
    any that are roots of unity.  Each element is checked to have norm of
    absolute value 1.  The full unit group may be larger by finite index;
    nothing here claims otherwise.
    """
    validate_conductor(n)
    gens = [CycInt.from_int(n, -1), CycInt.root(n)]
    if len(factor_integer(n)) >= 2:
        gens.append(CycInt.one(n) - CycInt.root(n))
    else:
        roots = {CycInt.root(n, t) for t in range(n)} | {-CycInt.root(n, t) for t in range(n)}
        for a in range(2, n // 2 + 1):
            if math.gcd(a, n) != 1:
                continue
            u = CycInt.from_polynomial(n, _geometric_sum(a))
            if u not in roots:
                gens.append(u)
    for u in gens:
        if abs(u.norm()) != 1:
            raise ArithmeticError(f"generator {u} is not a unit")
    return gens


def _geometric_sum(a: int):
    from .cyclotomic import IntPolynomial

    return IntPolynomial((1,) * a)


# ---------------------------------------------------------------------------
# symmetry elements


@dataclass(frozen=True)
class SymmetryElement:
    """A unit-times-Galois map with its integer matrix on Z^d."""

    n: int
    unit: CycInt
    r: int
    matrix: Matrix

    @property
    def d(self) -> int:
        return len(self.matrix)

    def apply(self, point: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            sum(self.matrix[i][j] * point[j] for j in range(self.d)) for i in range(self.d)
        )

    def apply_element(self, x: CycInt) -> CycInt:
        return self.unit * x.galois(self.r)

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        if other.n != self.n:
            raise ValueError("conductor mismatch")
        return symmetry_element(self.unit * other.unit.galois(self.r), (self.r * other.r) % self.n)

    def inverse(self) -> "SymmetryElement":
        r_inv = pow(self.r, -1, self.n)
        return symmetry_element(self.unit.inverse_unit().galois(r_inv), r_inv)

    def describe(self) -> dict:
        return {"unit_coeffs": list(self.unit.coeffs), "r": self.r}


def symmetry_element(unit: CycInt, r: int) -> SymmetryElement:
    """Build the matrix of x -> unit * sigma_r(x); unit must have |norm| 1."""
    n = unit.n
    if math.gcd(r, n) != 1:
        raise ValueError(f"{r} is not invertible modulo {n}")
    if abs(unit.norm()) != 1:
        raise ValueError("multiplier must be a unit")
    d = ring_degree(n)
    cols = [(unit * CycInt.root(n, (i * r) % n)).embed() for i in range(d)]
    matrix = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    det = determinant(matrix)
    if abs(det) != 1:
        raise ArithmeticError(f"symmetry matrix has determinant {det}")
    return SymmetryElement(n=n, unit=unit, r=r, matrix=matrix)


def identity_element(n: int) -> SymmetryElement:
    return symmetry_element(CycInt.one(n), 1)


def generator_elements(n: int) -> list[SymmetryElement]:
    """One element per unit generator plus one per nontrivial Galois index."""
    out = [symmetry_element(u, 1) for u in unit_generators(n)]
    out.extend(symmetry_element(CycInt.one(n), r) for r in galois_group(n).elements if r != 1)
    return out


# ---------------------------------------------------------------------------
# action verification


@dataclass
class ActionReport:
    n: int
    k: int
    element: dict
    checked: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "element": self.element,
                "n": self.n,
                "k": self.k,
                "checked": self.checked,
                "failures": [list(p) for p in self.failures],
            },
            sort_keys=True,
        )


def verify_stabiliser_action(
    element: SymmetryElement,
    k: int,
    r_box: int,
    sample_size: int = 1000,
    seed: int = 0,
    include_inverse: bool = True,
    threads: int = 1,
) -> ActionReport:
    """Check that the element and its inverse map sampled k-free points to
    k-free points; the expected failure count is zero."""
    box = kfree_mod.sieve_box(element.n, k, r_box, threads=threads)
    pts = box.sorted_points()
    rng = random.Random(seed)
    sample = pts if len(pts) <= sample_size else rng.sample(pts, sample_size)
    maps = [element, element.inverse()] if include_inverse else [element]
    failures = []
    checked = 0
    for mapping in maps:
        for p in sample:
            image = mapping.apply(p)
            checked += 1
            if not is_kfree(CycInt.unembed(element.n, image), k):
                failures.append(p)
    return ActionReport(
        n=element.n, k=k, element=element.describe(), checked=checked, failures=failures
    )


def scan_for_violation(
    matrix: Matrix, n: int, k: int, radius_cap: int = 100
) -> Optional[tuple[int, ...]]:
    """First k-free point (by growing sup norm) whose image under the raw
    integer matrix is not k-free; None if none exists up to the cap.

    A matrix outside the unit-Galois family is expected to produce one,
    though this scan cannot certify where.
    """
    d = ring_degree(n)
    for radius in range(1, radius_cap + 1):
        for p in box_points(radius, d):
            if max(abs(v) for v in p) != radius:
                continue
            x = CycInt.unembed(n, p)
            if not is_kfree(x, k):
                continue
            image = tuple(sum(matrix[i][j] * p[j] for j in range(d)) for i in range(d))
            if not is_kfree(CycInt.unembed(n, image), k):
                return p
    return None


def verify_Wk_preservation(
    element: SymmetryElement,
    k: int,
    norm_bound: int,
    search_radius: int = 5,
) -> ActionReport:
    """Image and preimage stay in W_k for every W_k element found in the
    search box with |norm| <= norm_bound.

    W_k contains infinitely many elements (all roots of unity, for one),
    so the enumeration is box-bounded by construction.
    """
    n = element.n
    d = ring_degree(n)
    inverse = element.inverse()
    failures = []
    checked = 0
    for p in box_points(search_radius, d):
        x = CycInt.unembed(n, p)
        if not x:
            continue
        if abs(x.norm()) > norm_bound or not is_in_Wk(x, k):
            continue
        checked += 1
        if not is_in_Wk(element.apply_element(x), k):
            failures.append(p)
        elif not is_in_Wk(inverse.apply_element(x), k):
            failures.append(p)
    return ActionReport(
        n=n, k=k, element=element.describe(), checked=checked, failures=failures
    )


def verify_coprimality_transport(
    element: SymmetryElement,
    k: int,
    prime_bound: int = 50,
    r_box: int = 10,
    sample_size: int = 20,
    seed: int = 0,
) -> ActionReport:
    """Ideal-coprimality with unramified primes survives the action: if no
    prime ideal above p divides x, none divides the image either."""
    n = element.n
    box = kfree_mod.sieve_box(n, k, r_box)
    rng = random.Random(seed)
    pts = box.sorted_points()
    sample = pts if len(pts) <= sample_size else rng.sample(pts, sample_size)
    unramified = [p for p in primes_up_to(prime_bound) if n % p != 0]
    failures = []
    checked = 0
    for p in sample:
        x = CycInt.unembed(n, p)
        y = element.apply_element(x)
        for ell in unramified:
            ideals = split_prime(ell, n)
            x_coprime = all(valuation(x, P) == 0 for P in ideals)
            if not x_coprime:
                continue
            checked += 1
            if not all(valuation(y, P) == 0 for P in ideals):
                failures.append((p, ell))
    return ActionReport(
        n=n, k=k, element=element.describe(), checked=checked, failures=failures
    )


# ---------------------------------------------------------------------------
# splitting primes and the a_q search


@dataclass(frozen=True)
class SplittingPrimeSet:
    m: int
    bound: int
    primes: tuple[int, ...]


def splitting_primes(m: int, bound: int) -> SplittingPrimeSet:
    """Primes ell <= bound with ell = 1 mod m (complete splitting)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    primes = tuple(ell for ell in primes_up_to(bound) if m == 1 or ell % m == 1)
    return SplittingPrimeSet(m=m, bound=bound, primes=primes)


class AqNotFound(RuntimeError):
    pass


def _h3_moduli(n: int, ell_bound: int, q: int) -> list[int]:
    """The splitting primes consulted by (H3): ell in S_m for some divisor
    m > 1 of n with m != 2 mod 4, up to the bound, excluding q itself
    (whose condition already follows from (H1))."""
    divisors = [m for m in range(3, n + 1) if n % m == 0 and m % 4 != 2]
    out = []
    for ell in primes_up_to(ell_bound):
        if ell == q:
            continue
        if any(ell % m == 1 for m in divisors):
            out.append(ell)
    return out


def _check_h1(a: int, n: int, q: int) -> bool:
    q2 = q * q
    if math.gcd(a, q) != 1:
        return False
    target = n * q
    if pow(a, target, q2) != 1:
        return False
    return all(pow(a, target // p, q2) != 1 for p in factor_integer(target))


@dataclass(frozen=True)
class AqCandidate:
    """An integer a with (H1) order nq mod q^2, (H2) divisible by every
    prime factor of n, and (H3) a^n != 1 mod ell^2 verified for the
    splitting primes up to ell_bound."""

    n: int
    q: int
    a: int
    ell_bound: int

    def validate(self, ell_bound: Optional[int] = None) -> bool:
        bound = ell_bound if ell_bound is not None else self.ell_bound
        if not _check_h1(self.a, self.n, self.q):
            return False
        if any(self.a % p != 0 for p in factor_integer(self.n)):
            return False
        return all(
            pow(self.a, self.n, ell * ell) != 1
            for ell in _h3_moduli(self.n, bound, self.q)
        )

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "q": self.q, "a": self.a, "ell_bound": self.ell_bound},
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "AqCandidate":
        data = json.loads(text)
        cand = AqCandidate(
            n=int(data["n"]), q=int(data["q"]), a=int(data["a"]), ell_bound=int(data["ell_bound"])
        )
        if not cand.validate():
            raise ValueError("stored candidate fails its hypotheses")
        return cand


def aq_search(n: int, q: int, ell_bound: int, a_bound: int) -> AqCandidate:
    """Least a <= a_bound satisfying (H1), (H2), and bounded (H3).

    The scan walks multiples of the radical of n in increasing order, so
    the result is the global minimum; raises AqNotFound with the scanned
    range when no candidate exists below the bound.
    """
    validate_conductor(n)
    if not is_prime(q) or q % n != 1:
        raise ValueError(f"q must be a prime splitting completely, q = 1 mod {n}")
    if ell_bound < q:
        raise ValueError("ell_bound must be at least q")
    radical = math.prod(factor_integer(n))
    moduli = _h3_moduli(n, ell_bound, q)
    for a in range(radical, a_bound + 1, radical):
        if not _check_h1(a, n, q):
            continue
        if all(pow(a, n, ell * ell) != 1 for ell in moduli):
            return AqCandidate(n=n, q=q, a=a, ell_bound=ell_bound)
    raise AqNotFound(f"no candidate for n={n}, q={q} in [1, {a_bound}]")


# ---------------------------------------------------------------------------
# factor checks on zeta_m^j - a^(n/m)


@dataclass
class LemmaFactorsReport:
    n: int
    m: int
    j: int
    a: int
    element_json: str
    norm: int
    prime_factors: tuple[int, ...]
    two_free: bool
    outside_W2: bool
    factors_split: bool
    factors_coprime_to_m: bool
    complete: bool

    @property
    def passed(self) -> bool:
        return (
            self.complete
            and self.two_free
            and self.outside_W2
            and self.factors_split
            and self.factors_coprime_to_m
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "m": self.m,
                "j": self.j,
                "a": self.a,
                "element": json.loads(self.element_json),
                "norm": str(self.norm),
                "prime_factors": [str(p) for p in self.prime_factors],
                "two_free": self.two_free,
                "outside_W2": self.outside_W2,
                "factors_split": self.factors_split,
                "factors_coprime_to_m": self.factors_coprime_to_m,
                "complete": self.complete,
                "passed": self.passed,
            },
            sort_keys=True,
        )


def verify_lemma_factors(candidate: AqCandidate, m: int, j: int) -> LemmaFactorsReport:
    """Exact checks on y = zeta_m^j - a^(n/m) in the ring of conductor m:
    y is 2-free, lies outside W_2, and every rational prime below a
    divisor of y splits completely mod m (in particular none divides m).

    If the norm resists factoring within the configured capacity the
    report is returned partial instead of wrong.
    """
    n, a = candidate.n, candidate.a
    if n % m != 0 or m < 3 or m % 4 == 2:
        raise ValueError("m must be a divisor of n, at least 3, and not 2 mod 4")
    if math.gcd(j, m) != 1:
        raise ValueError("j must be a unit modulo m")
    y = CycInt.root(m, j) - a ** (n // m)
    norm = abs(y.norm())
    try:
        factors = tuple(sorted(factor_integer(norm))) if norm != 1 else ()
        complete = True
    except ValueError:
        factors = ()
        complete = False
    two_free = is_kfree(y, 2) if complete else False
    outside = (not is_in_Wk(y, 2)) if complete else False
    split_ok = all(ell % m == 1 for ell in factors) if complete else False
    coprime_ok = all(m % ell != 0 for ell in factors) if complete else False
    return LemmaFactorsReport(
        n=n,
        m=m,
        j=j,
        a=a,
        element_json=y.to_json(),
        norm=norm,
        prime_factors=factors,
        two_free=two_free,
        outside_W2=outside,
        factors_split=split_ok,
        factors_coprime_to_m=coprime_ok,
        complete=complete,
    )


# ---------------------------------------------------------------------------
# vanishing four-term sums of roots of unity


@dataclass(frozen=True)
class FourSumSolution:
    signs: tuple[int, int, int, int]
    exponents: tuple[int, int, int, int]  # first is always 0
    reduced_order: int  # n / gcd(n, exponents)

    @property
    def divides_six(self) -> bool:
        return 6 % self.reduced_order == 0


@dataclass
class FourSumsReport:
    n: int
    solutions: list[FourSumSolution]
    all_divide_six: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "solutions": [
                    {
                        "signs": list(s.signs),
                        "exponents": list(s.exponents),
                        "reduced_order": s.reduced_order,
                    }
                    for s in self.solutions
                ],
                "all_divide_six": self.all_divide_six,
            },
            sort_keys=True,
        )


@lru_cache(maxsize=None)
def _roots_of_order(order: int) -> tuple[CycInt, ...]:
    """zeta_order^t for t = 0..order-1, realized in a valid host conductor."""
    if order <= 2:
        one = CycInt.one(4)
        return (one,) if order == 1 else (one, -one)
    if order % 4 == 2:
        m = order // 2
        half = pow(2, -1, m)
        return tuple(
            CycInt.root(m, (t * half) % m) * (1 if t % 2 == 0 else -1)
            for t in range(order)
        )
    return tuple(CycInt.root(order, t) for t in range(order))


def vanishing_four_sums(n: int, cap: int = 120) -> FourSumsReport:
    """Exhaustive enumeration of +-1 four-term vanishing sums of n-th roots
    of unity with no vanishing proper subsum, normalized to first exponent
    0 and first sign +1.

    Every survivor's reduced order n/gcd must divide 6; the report records
    the survivors and whether that held.  Coefficients are restricted to
    +-1 (the general statement allows rationals).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the configured cap {cap}")
    roots = _roots_of_order(n)
    table = np.array([r.coeffs for r in roots], dtype=np.int64)
    d = table.shape[1]
    solutions: list[FourSumSolution] = []
    seen: set[tuple] = set()
    sign_choices = [(s1, s2, s3) for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)]
    base = table[0]
    jk_j = np.repeat(np.arange(n), n)
    jk_k = np.tile(np.arange(n), n)
    jk_mask = jk_j <= jk_k
    for s1, s2, s3 in sign_choices:
        plane = (s2 * table[jk_j] + s3 * table[jk_k]).reshape(n * n, d)
        for i in range(n):
            total = base + s1 * table[i] + plane
            zero = np.flatnonzero(np.all(total == 0, axis=1) & jk_mask & (jk_j >= i))
            for flat in zero.tolist():
                exps = (0, i, int(jk_j[flat]), int(jk_k[flat]))
                signs = (1, s1, s2, s3)
                key = tuple(sorted(zip(signs, exps)))
                if key in seen:
                    continue
                if _has_vanishing_subsum(signs, exps, roots):
                    continue
                seen.add(key)
                g = math.gcd(n, math.gcd(math.gcd(exps[1], exps[2]), exps[3]))
                solutions.append(
                    FourSumSolution(signs=signs, exponents=exps, reduced_order=n // g)
                )
    solutions.sort(key=lambda s: (s.exponents, s.signs))
    return FourSumsReport(
        n=n,
        solutions=solutions,
        all_divide_six=all(s.divides_six for s in solutions),
    )


def _has_vanishing_subsum(signs, exps, roots) -> bool:
    zero = roots[0] - roots[0]
    for mask in range(1, 15):  # proper nonempty subsets of 4 terms
        acc = zero
        for b in range(4):
            if (mask >> b) & 1:
                acc = acc + signs[b] * roots[exps[b]]
        if not acc:
            return True
    return False
