"""Prime splitting tables and the lattices of ideal powers.

Each rational prime factors in Z[zeta_n] according to the factorization
of the n-th cyclotomic polynomial modulo that prime; the embedded ideal
lattices make valuations and sieving geometric.
"""

from cyclofree import (
    CycInt,
    enumerate_prime_ideals,
    ideal_lattice,
    is_kfree,
    split_prime,
    valuation,
)

N = 12

print(f"splitting of small primes in conductor {N} (degree 4)")
print("  ell  e  f  ideals  norms")
for ell in (2, 3, 5, 7, 11, 13):
    ideals = split_prime(ell, N)
    e, f = ideals[0].e, ideals[0].f
    print(f"  {ell:3d}  {e}  {f}  {len(ideals):6d}  {[P.norm for P in ideals]}")
print()

print("prime ideals of norm <= 30, in canonical order")
for ideal in enumerate_prime_ideals(N, 30):
    print(f"  norm {ideal.norm:3d}  above {ideal.ell:3d}  factor coeffs {ideal.g_poly}")
print()

print("the geometry of a ramified prime in the Gaussian integers")
(P,) = split_prime(2, 4)
for m in (1, 2, 3):
    lattice = ideal_lattice(P, m)
    print(f"  power {m}: index {lattice.index}, basis {lattice.basis}")
print()

x = CycInt(4, (2, 2))  # 2 + 2i
print(f"valuation of 2+2i at the ramified prime: {valuation(x, P)}")
print(f"2+2i squarefree? {is_kfree(x, 2)};  5-free? {is_kfree(x, 5)}")
