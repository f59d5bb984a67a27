"""The a_q pipeline: order and divisibility certificates behind the
symmetry classification.

For a completely splitting prime q, an integer a_q is sought with
(H1) full order n*q modulo q^2, (H2) divisibility by every prime factor
of n, (H3) a^n != 1 modulo ell^2 for the relevant splitting primes.
The elements zeta_m^j - a_q^(n/m) built from such an a_q are 2-free,
lie outside the ramified-only set W_2, and factor through completely
splitting primes only; the reports below verify all of that exactly.
"""

from cyclofree import aq_search, verify_lemma_factors

N, Q = 12, 13

candidate = aq_search(N, Q, ell_bound=10_000, a_bound=1_000_000)
print(f"least candidate for n={N}, q={Q}: a = {candidate.a}")
print(f"  (H3) verified for splitting primes up to {candidate.ell_bound}")
print(f"  revalidation on load: {candidate.validate()}")
print()

for m, j in ((3, 1), (4, 1), (12, 5)):
    report = verify_lemma_factors(candidate, m, j)
    print(f"element zeta_{m}^{j} - {candidate.a}^{N // m} in conductor {m}:")
    print(f"  norm {report.norm} = product of {report.prime_factors}")
    print(f"  2-free: {report.two_free}; outside W_2: {report.outside_W2}")
    print(
        f"  all factors split completely mod {m}: {report.factors_split};"
        f" none divides {m}: {report.factors_coprime_to_m}"
    )
    print()
