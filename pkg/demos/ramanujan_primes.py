"""Ramanujan primes and the finite range check used by the bipartite bound."""
from mincoprime.constructions import complete_bipartite_labeling
from mincoprime.numtheory import prime_count, ramanujan_prime, verify_lemma11_range

print("R_k, the least x after which the interval (x/2, x] always holds k primes:")
for k in range(1, 11):
    r = ramanujan_prime(k)
    print(f"  R_{k} = {r:>3}   primes in ({r // 2}, {r}]: {prime_count(r) - prime_count(r // 2)}")

print("\nfinite check up to 1331, failures:", verify_lemma11_range(1331))

val = complete_bipartite_labeling(4, 12)
print(f"\nK_(4,12) has a coprime labeling with max {val.value} ({val.note})")
print("  small side:", val.witness.labels[:4])
