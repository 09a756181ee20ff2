"""When is the corona of a clique by m isolated vertices a prime graph?

Each clique vertex needs its own label coprime to all the others, so the
clique alone forces labels up to the (n-1)-th prime.  Once the pendant
vertices outnumber that, the graph is prime and pr equals the vertex count.
"""
from mincoprime.constructions import corona_labeling, corona_value
from mincoprime.experiments import conjecture1_table

print("pr of the corona, rows n = 1..12, columns m = 1..4")
for n in range(1, 13):
    cells = [corona_value(n, m) for m in range(1, 5)]
    marks = ["*" if v == n * (m + 1) else " " for m, v in zip(range(1, 5), cells)]
    print(f"n={n:>2} " + " ".join(f"{v:>4}{s}" for v, s in zip(cells, marks)))
print("(* = prime graph)\n")

lab = corona_labeling(6, 2)
print("a witness for n = 6, m = 2:", lab.witness.labels, "max", lab.value, "\n")

print("largest n with a prime corona, per m (sweep bound 200):")
for row in conjecture1_table(8).rows:
    tag = " (at the sweep bound)" if row.extra["capped"] else ""
    gap = "" if row.extra["contiguous"] else "  note: some smaller n fail"
    print(f"  m={row.m}: n={row.n}{tag}{gap}")
