"""Below the covered range the simple formula can be wrong.

Exact search finds three joins of paths whose minimum coprime number is
larger than the independence bound suggests.  Each run proves that no
labeling exists one below the reported value.
"""
import time

from mincoprime import graphs
from mincoprime.constructions import path_join_value
from mincoprime.solver import min_coprime_number_exact

for m, n in [(8, 6), (10, 6), (11, 6), (8, 7), (9, 7), (10, 7)]:
    g = graphs.join(graphs.path(m), graphs.path(n))
    t = time.perf_counter()
    res = min_coprime_number_exact(g)
    naive = path_join_value(m, n)
    verdict = "as expected" if res.value.value == naive else f"exceeds {naive}"
    print(f"P_{m} + P_{n}: pr = {res.value.value:>2} {verdict:<12} "
          f"({res.nodes} search nodes, {time.perf_counter() - t:.2f}s)")
    print("    ", res.value.witness.labels)
