"""Upper bound for complete bipartite graphs K_{m,n} via Ramanujan primes."""
from __future__ import annotations

from .. import graphs
from ..labeling import PrValue
from ..numtheory import primes_up_to, ramanujan_prime
from ._common import ConstructionError, PreconditionError, verified


def complete_bipartite_labeling(m: int, n: int) -> PrValue:
    """pr(K_{m,n}) <= R_{m-1} for m <= n <= R_{m-1} - m.

    The m-side gets 1 and the m - 1 largest primes up to R = R_{m-1}; those
    primes exceed R/2, so the n-side may use any other labels up to R.  The
    n-side takes the largest remaining labels so that R itself is used.
    Vertex order follows ``graphs.complete_bipartite(m, n)``.
    """
    if m < 2:
        raise PreconditionError(f"needs m >= 2, got {m}")
    top = ramanujan_prime(m - 1)
    if not m <= n <= top - m:
        raise PreconditionError(f"needs {m} <= n <= R_{m - 1} - m = {top - m}, got n = {n}")
    primes = [p for p in primes_up_to(top)][-(m - 1):]
    if any(2 * p <= top for p in primes):
        raise ConstructionError(f"a chosen prime is not above R_{m - 1}/2: {primes}")
    small = [1] + primes
    taken = set(small)
    rest = [x for x in range(top, 1, -1) if x not in taken][:n]
    lab = verified(graphs.complete_bipartite(m, n), small + sorted(rest))
    return PrValue("upper-bound", lab.max_label, "construction", lab, note=f"R_{m - 1} = {top}")
