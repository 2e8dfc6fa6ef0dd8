"""Brute-force model of the transversal matroid M(W).

A vertex set J is independent when its vertices can be matched to
distinct propagators supported on them.  Nothing here uses the necklace
walk, so it serves as an independent check on it.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from . import kernels
from .diagram import WilsonLoopDiagram, order_key, props_on, vertex_support
from .necklace import GrassmannNecklace


def _vertex_adj(W: WilsonLoopDiagram) -> list:
    adj = [0] * W.n
    for t, p in enumerate(W.propagators):
        for v in vertex_support(W, p):
            adj[v - 1] |= 1 << t
    return adj


def _mask(J: Iterable[int], n: int) -> int:
    m = 0
    for v in J:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} outside 1..{n}")
        m |= 1 << (v - 1)
    return m


def _unmask(m: int) -> frozenset:
    out, v = [], 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def is_independent(W: WilsonLoopDiagram, J: Iterable[int]) -> bool:
    """Matching test."""
    J = list(J)
    if len(set(J)) > W.k:
        return False
    return kernels.independent(_vertex_adj(W), _mask(J, W.n), W.k)


def is_independent_hall(W: WilsonLoopDiagram, J: Iterable[int]) -> bool:
    """Counting test: no U inside J with |Prop(U)| < |U|."""
    J = sorted(set(J))
    for size in range(1, len(J) + 1):
        for U in itertools.combinations(J, size):
            if len(props_on(W, U)) < size:
                return False
    return True


def bases(W: WilsonLoopDiagram) -> set:
    masks = kernels.bases_masks(_vertex_adj(W), W.n, W.k)
    return {_unmask(m) for m in masks}


def sorted_bases(W: WilsonLoopDiagram) -> list:
    return sorted((sorted(b) for b in bases(W)))


def lexmin_basis(W: WilsonLoopDiagram, i: int) -> frozenset:
    """Greedy scan of vertices in the order <_i."""
    adj = _vertex_adj(W)
    kept = 0
    count = 0
    for t in range(W.n):
        if count == W.k:
            break
        v = (i - 1 + t) % W.n + 1
        trial = kept | (1 << (v - 1))
        if kernels.independent(adj, trial, W.k):
            kept = trial
            count += 1
    return _unmask(kept)


def lexmin_basis_bruteforce(W: WilsonLoopDiagram, i: int) -> frozenset:
    """Sort every basis <_i-lexicographically and take the first.  Slow."""
    n = W.n

    def key(B):
        return sorted(order_key(v, i, n) for v in B)

    return min(bases(W), key=key)


def gale_leq(A: Iterable[int], B: Iterable[int], j: int, n: int) -> bool:
    """A <= B in the Gale order for <_j: after sorting, a_r <=_j b_r for all r."""
    a = sorted(order_key(v, j, n) for v in A)
    b = sorted(order_key(v, j, n) for v in B)
    if len(a) != len(b):
        raise ValueError("Gale comparison needs sets of equal size")
    return all(x <= y for x, y in zip(a, b))


def bases_from_necklace(neck: GrassmannNecklace) -> set:
    n, k = neck.n, neck.k
    out = set()
    for J in itertools.combinations(range(1, n + 1), k):
        if all(gale_leq(neck.term(i), J, i, n) for i in range(1, n + 1)):
            out.add(frozenset(J))
    return out
