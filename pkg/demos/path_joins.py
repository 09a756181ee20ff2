"""Joining two paths: the staged list behind pr(P_m + P_n).

The short path carries 1 and large primes, which are coprime to everything
else below twice their size.  The long path then walks through the
remaining numbers in an order where neighbours are coprime.
"""
from mincoprime import graphs
from mincoprime.constructions import path_join_labeling, path_join_value, run_pipeline, threshold
from mincoprime.labeling import verify_coprime_labeling

m, n = 30, 6
val = path_join_labeling(m, n)
long_side, short_side = val.witness.labels[:m], val.witness.labels[m:]
print(f"P_{m} + P_{n}: pr = {val.value} (formula {path_join_value(m, n)})")
print("  short path:", short_side)
print("  long path: ", long_side)
print("  verified:", verify_coprime_labeling(graphs.join(graphs.path(m), graphs.path(n)), val.witness).ok)

print("\nwhere the staged construction starts working, per n:")
for k in range(3, 9):
    print(f"  n={k}: m >= {threshold(k)}")

seq, side, state = run_pipeline(41, 7)
print("\nstaged list for (41, 7), top label", state.L)
print("  primes for the short path:", side)
print("  numbers removed, stage by stage:", list(zip(state.cases, state.deleted)))
print("  long path:", seq)
