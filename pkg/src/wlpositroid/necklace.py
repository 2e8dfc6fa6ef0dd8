"""Grassmann necklaces of Wilson loop diagrams.

The greedy walk: starting at vertex i, visit i, i+1, ... and at each
vertex hand it to the most clockwise propagator still waiting that is
supported there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .diagram import (
    Propagator,
    WilsonLoopDiagram,
    cyc,
    is_admissible,
    is_weakly_admissible,
    order_key,
    vertex_support,
)


def clockwise_key(W: WilsonLoopDiagram, j: int, p: Propagator) -> tuple:
    """Sort key at vertex j; smaller means more clockwise.

    Ends on edge j-1 come before ends on edge j.  Within one edge e the
    other end is located by walking edges e-1, e-2, ...; the first one
    reached wins.
    """
    n = W.n
    prev = cyc(j - 1, n)
    on_prev = prev in p.ends
    on_here = j in p.ends
    if on_prev and on_here:
        raise ValueError(f"{p} joins edges {prev} and {j}, which is excluded")
    if not (on_prev or on_here):
        raise ValueError(f"{p} is not supported on vertex {j}")
    e = prev if on_prev else j
    other = p.other(e)
    return (0 if on_prev else 1, (e - 1 - other) % n)


def clockwise_order_at_vertex(W: WilsonLoopDiagram, j: int, candidates: Iterable) -> list:
    cands = [Propagator.of(c) for c in candidates]
    return sorted(cands, key=lambda p: clockwise_key(W, j, p))


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    k: int
    terms: tuple  # terms[i-1] is I_i, a frozenset
    assignments: tuple = ()  # assignments[i-1]: {Propagator: vertex}

    def term(self, i: int) -> frozenset:
        return self.terms[cyc(i, self.n) - 1]

    def assignment(self, i: int) -> dict:
        return self.assignments[cyc(i, self.n) - 1]

    def display_term(self, i: int) -> list:
        """I_i listed in the order <_i."""
        return sorted(self.term(i), key=lambda v: order_key(v, i, self.n))

    def compact(self) -> tuple:
        """Terms as strings like '5671' (only readable when n < 10)."""
        return tuple("".join(map(str, self.display_term(i))) for i in range(1, self.n + 1))

    def to_json(self) -> dict:
        out = {"k": self.k, "n": self.n}
        out["terms"] = [self.display_term(i) for i in range(1, self.n + 1)]
        out["assignments"] = []
        for i in range(1, self.n + 1):
            a = self.assignment(i) if self.assignments else {}
            rows = sorted(a.items(), key=lambda pv: order_key(pv[1], i, self.n))
            out["assignments"].append(
                [{"prop": [p.i, p.j], "vertex": v} for p, v in rows]
            )
        return out


def _vertex_orders(W: WilsonLoopDiagram) -> list:
    idx = {p: t for t, p in enumerate(W.propagators)}
    orders = []
    for j in range(1, W.n + 1):
        here = [p for p in W.propagators if j in vertex_support(W, p)]
        here.sort(key=lambda p: clockwise_key(W, j, p))
        orders.append([idx[p] for p in here])
    return orders


def grassmann_necklace(W: WilsonLoopDiagram, strict: bool = True) -> GrassmannNecklace:
    """Run the greedy walk from every vertex.

    With ``strict`` the diagram must be admissible; otherwise weak
    admissibility is enough (the walk still errors if it cannot finish
    within one lap).
    """
    if strict:
        rep = is_admissible(W)
        if not rep.ok:
            raise ValueError(f"diagram is not admissible: {rep.violations[0].kind}")
    elif not is_weakly_admissible(W):
        raise ValueError("diagram is not weakly admissible")
    n, k = W.n, W.k
    orders = _vertex_orders(W)
    props = W.propagators
    terms, assigns = [], []
    for i in range(1, n + 1):
        got = kernels.necklace_walk(n, k, orders, i)
        a = {props[t]: got[t] for t in range(k)}
        assigns.append(a)
        terms.append(frozenset(got))
    return GrassmannNecklace(n, k, tuple(terms), tuple(assigns))


def _as_sets(terms) -> list:
    out = []
    for t in terms:
        if isinstance(t, str):
            t = [int(ch) for ch in t]
        out.append(frozenset(t))
    return out


def necklace_from_terms(terms: Sequence, n: Optional[int] = None) -> GrassmannNecklace:
    """Wrap plain terms (no assignment data).  Strings like '1235' are allowed."""
    sets = _as_sets(terms)
    n = len(sets) if n is None else n
    sizes = {len(s) for s in sets}
    if len(sizes) > 1:
        raise ValueError("necklace terms have different sizes")
    return GrassmannNecklace(n, sizes.pop() if sizes else 0, tuple(sets), ())


def is_grassmann_necklace(terms: Sequence) -> bool:
    sets = _as_sets(terms.terms if isinstance(terms, GrassmannNecklace) else terms)
    n = len(sets)
    if len({len(s) for s in sets}) > 1:
        raise ValueError("necklace terms have different sizes")
    for s in sets:
        if any(not 1 <= v <= n for v in s):
            raise ValueError(f"term {sorted(s)} leaves 1..{n}")
    for idx in range(n):
        i = idx + 1
        cur, nxt = sets[idx], sets[(idx + 1) % n]
        if i in cur:
            rest = cur - {i}
            if not rest <= nxt or len(nxt - rest) != 1:
                return False
        elif nxt != cur:
            return False
    return True


@dataclass(frozen=True)
class CyclicInterval:
    lo: int
    hi: int
    n: int

    def __iter__(self):
        v = self.lo
        while True:
            yield v
            if v == self.hi:
                return
            v = cyc(v + 1, self.n)

    def __len__(self):
        return (self.hi - self.lo) % self.n + 1

    def __contains__(self, v):
        return order_key(v, self.lo, self.n) <= order_key(self.hi, self.lo, self.n)

    def __repr__(self):
        return f"[{self.lo},{self.hi}]"

    @classmethod
    def from_set(cls, s, n: int) -> "CyclicInterval":
        s = set(s)
        if not s:
            raise ValueError("empty set is not an interval")
        if len(s) == n:
            return cls(1, n, n)
        starts = [v for v in s if cyc(v - 1, n) not in s]
        if len(starts) != 1:
            raise ValueError(f"{sorted(s)} is not a cyclic interval of [{n}]")
        lo = starts[0]
        return cls(lo, cyc(lo + len(s) - 1, n), n)


def contribution_sets(W: WilsonLoopDiagram, p, neck: Optional[GrassmannNecklace] = None) -> dict:
    """v -> {m : I_m(p) = v} for every v in V(p); may contain empty sets."""
    p = Propagator.of(p)
    neck = neck or grassmann_necklace(W)
    out = {v: set() for v in vertex_support(W, p)}
    for m in range(1, W.n + 1):
        out.setdefault(neck.assignment(m)[p], set()).add(m)
    return out


def contribution_intervals(W: WilsonLoopDiagram, p, neck: Optional[GrassmannNecklace] = None) -> dict:
    sets = contribution_sets(W, p, neck)
    return {v: CyclicInterval.from_set(s, W.n) for v, s in sets.items()}


def loops(neck: GrassmannNecklace) -> frozenset:
    seen = frozenset().union(*neck.terms) if neck.terms else frozenset()
    return frozenset(v for v in range(1, neck.n + 1) if v not in seen)


def coloops(neck: GrassmannNecklace) -> frozenset:
    if not neck.terms:
        return frozenset()
    return frozenset.intersection(*neck.terms)


def decorated_permutation(neck: GrassmannNecklace) -> dict:
    n = neck.n
    pi = {}
    for i in range(1, n + 1):
        cur, nxt = neck.term(i), neck.term(i + 1)
        if i in cur:
            new = nxt - (cur - {i})
            if len(new) != 1 or not (cur - {i}) <= nxt:
                raise ValueError(f"necklace condition fails between I_{i} and I_{i + 1}")
            pi[i] = next(iter(new))
        else:
            if nxt != cur:
                raise ValueError(f"necklace condition fails between I_{i} and I_{i + 1}")
            pi[i] = i
    return pi
