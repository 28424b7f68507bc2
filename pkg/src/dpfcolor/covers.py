"""Covers, budgets and pair graphs for correspondence coloring.

A cover assigns each vertex a color list and each graph edge a partial
matching between the two fibers {u} x L(u) and {v} x L(v).  Fiber cliques
are never materialized: a representative set picks exactly one pair per
fiber, so clique edges can never appear in an induced pair graph.

Colorings are plain dicts vertex -> color; witness orders are tuples of
(vertex, color) pairs.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Pair = tuple[int, int]
Order = tuple[Pair, ...]
Coloring = Mapping[int, int]


class Budget:
    """Sparse per-(vertex, color) degeneracy allowances.

    Colors are indexed 1..s; missing entries are 0 and every stored value
    is at most `cap`.
    """

    __slots__ = ("s", "cap", "_values", "_by_vertex")

    def __init__(self, s: int, cap: int,
                 values: Mapping[Pair, int] | Iterable[tuple[Pair, int]] = ()):
        if s < 1:
            raise ValueError("need at least one color")
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        items = values.items() if isinstance(values, Mapping) else values
        vals: dict[Pair, int] = {}
        by_vertex: dict[int, dict[int, int]] = {}
        for (v, i), val in items:
            if not 1 <= i <= s:
                raise ValueError(f"color {i} outside 1..{s}")
            if val < 0 or val > cap:
                raise ValueError(f"value {val} for ({v},{i}) outside 0..{cap}")
            if (v, i) in vals:
                raise ValueError(f"duplicate entry for ({v},{i})")
            if val > 0:
                vals[(v, i)] = val
                by_vertex.setdefault(v, {})[i] = val
        self.s = s
        self.cap = cap
        self._values = vals
        self._by_vertex = by_vertex

    def get(self, v: int, i: int) -> int:
        return self._values.get((v, i), 0)

    def total(self, v: int) -> int:
        """|f(v)|: the sum of the vertex's values over all colors."""
        return sum(self._by_vertex.get(v, {}).values())

    def support(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._by_vertex.get(v, {})))

    def items(self) -> list[tuple[Pair, int]]:
        return sorted(self._values.items())

    def assign(self, updates: Mapping[Pair, int]) -> "Budget":
        """New budget with the given entries replaced (0 deletes)."""
        vals = dict(self._values)
        for key, val in updates.items():
            if val == 0:
                vals.pop(key, None)
            else:
                vals[key] = val
        return Budget(self.s, self.cap, vals)

    def relabel(self, perms: Mapping[int, Mapping[int, int]]) -> "Budget":
        """Rename colors per vertex: new index perms[v][i] gets f_i(v)."""
        vals = {}
        for (v, i), val in self._values.items():
            j = perms[v][i] if v in perms else i
            vals[(v, j)] = val
        return Budget(self.s, self.cap, vals)

    def __eq__(self, other):
        if not isinstance(other, Budget):
            return NotImplemented
        return (self.s, self.cap, self._values) == (other.s, other.cap, other._values)

    def __repr__(self):
        return f"Budget(s={self.s}, cap={self.cap}, entries={len(self._values)})"


class Cover:
    """Color lists plus per-edge partial matchings between fibers."""

    __slots__ = ("s", "lists", "_matchings")

    def __init__(self, s: int, lists: Mapping[int, Iterable[int]],
                 matchings: Mapping[tuple[int, int], Iterable[Pair]] = ()):
        if s < 1:
            raise ValueError("need at least one color")
        clean_lists: dict[int, frozenset[int]] = {}
        for v, colors in lists.items():
            cs = frozenset(colors)
            if any(not 1 <= c <= s for c in cs):
                raise ValueError(f"list of {v} has colors outside 1..{s}")
            clean_lists[v] = cs
        clean: dict[tuple[int, int], frozenset[Pair]] = {}
        items = matchings.items() if isinstance(matchings, Mapping) else matchings
        for (u, v), pairs in items:
            if u == v:
                raise ValueError(f"matching on a loop at {u}")
            if u > v:
                u, v = v, u
                pairs = [(cv, cu) for (cu, cv) in pairs]
            if u not in clean_lists or v not in clean_lists:
                raise ValueError(f"matching ({u},{v}) on a vertex without a list")
            seen_u: set[int] = set()
            seen_v: set[int] = set()
            norm = set()
            for cu, cv in pairs:
                if cu not in clean_lists[u]:
                    raise ValueError(f"matched color {cu} not in list of {u}")
                if cv not in clean_lists[v]:
                    raise ValueError(f"matched color {cv} not in list of {v}")
                if cu in seen_u or cv in seen_v:
                    raise ValueError(f"matching ({u},{v}) is not a partial bijection")
                seen_u.add(cu)
                seen_v.add(cv)
                norm.add((cu, cv))
            if norm:
                clean[(u, v)] = frozenset(norm)
        self.s = s
        self.lists = clean_lists
        self._matchings = clean

    def list_of(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def matching(self, u: int, v: int) -> frozenset[Pair]:
        """Matched color pairs oriented (color of u, color of v)."""
        if u < v:
            return self._matchings.get((u, v), frozenset())
        return frozenset((cu, cv) for (cv, cu) in self._matchings.get((v, u), frozenset()))

    def matched(self, u: int, cu: int, v: int, cv: int) -> bool:
        return (cu, cv) in self.matching(u, v)

    def matching_items(self) -> list[tuple[tuple[int, int], frozenset[Pair]]]:
        return sorted(self._matchings.items())

    def relabel(self, perms: Mapping[int, Mapping[int, int]]) -> "Cover":
        """Rename colors inside the fibers of the vertices in `perms`.

        Each perms[v] must be a bijection of 1..s; vertices absent from
        `perms` keep their labels.  Relabeling is an isomorphism of the
        cover, so colorability is preserved exactly.
        """
        def rl(v, c):
            return perms[v][c] if v in perms else c

        lists = {v: frozenset(rl(v, c) for c in cs) for v, cs in self.lists.items()}
        matchings = {
            (u, v): [(rl(u, cu), rl(v, cv)) for (cu, cv) in pairs]
            for (u, v), pairs in self._matchings.items()
        }
        return Cover(self.s, lists, matchings)

    def __eq__(self, other):
        if not isinstance(other, Cover):
            return NotImplemented
        return (self.s, self.lists, self._matchings) == (other.s, other.lists, other._matchings)

    def __repr__(self):
        return f"Cover(s={self.s}, vertices={len(self.lists)}, matched_edges={len(self._matchings)})"


class PairGraph:
    """Graph on (vertex, color) pairs with a budget per pair."""

    __slots__ = ("pairs", "index", "adj", "budgets")

    def __init__(self, pairs: Iterable[Pair], edges: Iterable[tuple[Pair, Pair]],
                 budgets: Mapping[Pair, int]):
        ps = tuple(sorted(set(pairs)))
        index = {p: k for k, p in enumerate(ps)}
        adj = [set() for _ in ps]
        for p, q in edges:
            if p == q:
                raise ValueError(f"self-loop at pair {p}")
            i, j = index[p], index[q]
            adj[i].add(j)
            adj[j].add(i)
        self.pairs = ps
        self.index = index
        self.adj = tuple(frozenset(a) for a in adj)
        self.budgets = tuple(budgets.get(p, 0) for p in ps)

    @property
    def n(self) -> int:
        return len(self.pairs)

    def budget_of(self, p: Pair) -> int:
        return self.budgets[self.index[p]]

    def __repr__(self):
        m = sum(len(a) for a in self.adj) // 2
        return f"PairGraph(n={self.n}, m={m})"


def complete_permutation(partial: Mapping[int, int], s: int) -> dict[int, int]:
    """Extend an injective partial map on 1..s to a full bijection.

    Unmapped sources are sent to the unused targets in ascending order,
    which keeps the completion deterministic.
    """
    for c, d in partial.items():
        if not (1 <= c <= s and 1 <= d <= s):
            raise ValueError(f"entry {c}->{d} outside 1..{s}")
    targets = set(partial.values())
    if len(targets) != len(partial):
        raise ValueError("partial map is not injective")
    free_src = sorted(set(range(1, s + 1)) - set(partial.keys()))
    free_tgt = sorted(set(range(1, s + 1)) - targets)
    full = dict(partial)
    full.update(zip(free_src, free_tgt))
    return full


def invert_permutations(perms: Mapping[int, Mapping[int, int]]) -> dict[int, dict[int, int]]:
    return {v: {d: c for c, d in p.items()} for v, p in perms.items()}


def relabel_coloring(coloring: Coloring,
                     perms: Mapping[int, Mapping[int, int]]) -> dict[int, int]:
    return {v: (perms[v][c] if v in perms else c) for v, c in coloring.items()}


def relabel_order(order: Order, perms: Mapping[int, Mapping[int, int]]) -> Order:
    return tuple((v, perms[v][c] if v in perms else c) for v, c in order)
