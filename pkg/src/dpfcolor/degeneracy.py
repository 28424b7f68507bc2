"""Strictly degenerate orders of pair graphs.

An order is valid when every element has strictly fewer neighbors earlier
in the sequence than its budget.  Orders are found by reverse elimination:
repeatedly remove any element whose current degree is below its budget and
place removals from the back of the order forward.  Degrees only drop as
elements are removed, so a removable element stays removable; any greedy
tie-break therefore succeeds exactly when some valid order exists.
"""

from __future__ import annotations

import random
from typing import Iterable

from .covers import Order, Pair, PairGraph


def strictly_degenerate_order(pg: PairGraph, seed: int | None = None) -> Order | None:
    """A strictly degenerate order of all pairs, or None if none exists.

    With the default tie-break the lowest (vertex, color) pair is removed
    first; a seed randomizes the choice among removable elements without
    affecting success or failure.
    """
    rng = random.Random(seed) if seed is not None else None
    alive = set(range(pg.n))
    deg = [len(a) for a in pg.adj]
    removed: list[int] = []
    while alive:
        candidates = sorted(i for i in alive if deg[i] < pg.budgets[i])
        if not candidates:
            return None
        i = candidates[0] if rng is None else rng.choice(candidates)
        alive.discard(i)
        for j in pg.adj[i]:
            if j in alive:
                deg[j] -= 1
        removed.append(i)
    return tuple(pg.pairs[i] for i in reversed(removed))


def order_is_valid(pg: PairGraph, order: Iterable[Pair]) -> bool:
    """Direct definition check: earlier-neighbor count < budget, all pairs used once."""
    seq = tuple(order)
    if sorted(seq) != list(pg.pairs):
        return False
    placed: set[int] = set()
    for p in seq:
        i = pg.index[p]
        if len(pg.adj[i] & placed) >= pg.budgets[i]:
            return False
        placed.add(i)
    return True


def eliminate_with_prefix(pg: PairGraph, prefix: Iterable[Pair]) -> Order | None:
    """A valid order whose first elements are exactly `prefix`, or None.

    Constrained reverse elimination: while non-prefix elements remain only
    they may be removed, then the prefix block is eliminated.  Since
    removability is monotone under deletions this finds an order whenever
    a prefix-first order exists.
    """
    prefix_set = {pg.index[p] for p in prefix}
    alive = set(range(pg.n))
    deg = [len(a) for a in pg.adj]
    removed: list[int] = []
    while alive:
        pool = alive - prefix_set if len(alive) > len(prefix_set) else alive
        candidates = sorted(i for i in pool if deg[i] < pg.budgets[i])
        if not candidates:
            return None
        i = candidates[0]
        alive.discard(i)
        for j in pg.adj[i]:
            if j in alive:
                deg[j] -= 1
        removed.append(i)
    return tuple(pg.pairs[i] for i in reversed(removed))
