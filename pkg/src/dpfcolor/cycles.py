"""Bounded-length simple cycle enumeration and cycle-family predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadSpec, LimitExceeded
from .graphs import SimpleGraph

MAX_CYCLE_LEN = 10

CycleSet = dict[int, list[tuple[int, ...]]]


def enumerate_cycles(g: SimpleGraph, max_len: int) -> CycleSet:
    """All simple cycles of length <= max_len, canonicalized and grouped by length.

    The canonical form starts at the cycle's smallest vertex and takes the
    lexicographically smaller direction, so each cycle appears exactly once.
    """
    if max_len > MAX_CYCLE_LEN:
        raise LimitExceeded(f"cycle enumeration capped at length {MAX_CYCLE_LEN}")
    out: CycleSet = {}
    if max_len < 3:
        return out
    for start in g.vertices:
        stack: list[tuple[tuple[int, ...], set[int]]] = [((start,), {start})]
        while stack:
            path, used = stack.pop()
            last = path[-1]
            for nxt in sorted(g.adj[last]):
                if nxt <= start:
                    if nxt == start and len(path) >= 3 and path[1] < path[-1]:
                        out.setdefault(len(path), []).append(path)
                    continue
                if nxt in used or len(path) == max_len:
                    continue
                stack.append((path + (nxt,), used | {nxt}))
    for length in out:
        out[length].sort()
    return out


def cycle_edges(cycle: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    out = set()
    for t in range(len(cycle)):
        u, v = cycle[t], cycle[(t + 1) % len(cycle)]
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class NoAdj34:
    """No 3-cycle shares an edge with a 4-cycle."""


@dataclass(frozen=True)
class FamilyA:
    """No 3-, 4- and 5-cycle pairwise share edges."""


@dataclass(frozen=True)
class NoCycleLengths:
    """No cycle of a forbidden length; lengths must be {4, a, b, 9} with
    distinct a, b from {6, 7, 8}."""

    lengths: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "lengths", frozenset(self.lengths))
        rest = self.lengths - {4, 9}
        if not ({4, 9} <= self.lengths and len(self.lengths) == 4
                and len(rest) == 2 and rest <= {6, 7, 8}):
            raise BadSpec(f"lengths must be {{4,a,b,9}} with distinct a,b in {{6,7,8}}, "
                          f"got {sorted(self.lengths)}")


FamilySpec = NoAdj34 | FamilyA | NoCycleLengths


def check_family(g: SimpleGraph, spec: FamilySpec) -> bool:
    """Whether the graph lies in the given cycle family."""
    if isinstance(spec, NoAdj34):
        cs = enumerate_cycles(g, 4)
        threes = [cycle_edges(c) for c in cs.get(3, [])]
        fours = [cycle_edges(c) for c in cs.get(4, [])]
        return not any(t & q for t in threes for q in fours)
    if isinstance(spec, FamilyA):
        cs = enumerate_cycles(g, 5)
        threes = [cycle_edges(c) for c in cs.get(3, [])]
        fours = [cycle_edges(c) for c in cs.get(4, [])]
        fives = [cycle_edges(c) for c in cs.get(5, [])]
        for t in threes:
            for q in fours:
                if not t & q:
                    continue
                for p in fives:
                    if t & p and q & p:
                        return False
        return True
    if isinstance(spec, NoCycleLengths):
        cs = enumerate_cycles(g, max(spec.lengths))
        return not any(cs.get(length) for length in spec.lengths)
    raise BadSpec(f"unknown family spec {spec!r}")
