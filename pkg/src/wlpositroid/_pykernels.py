"""Pure-Python versions of the hot loops.

These mirror ``_ckernels.pyx`` call for call; ``kernels`` picks one at
import time.  Everything here works on small integers and bitmasks so
the two implementations can be compared directly.
"""

from __future__ import annotations


def necklace_walk(n: int, k: int, vertex_orders, start: int) -> list:
    """Run one greedy walk starting at vertex ``start`` (1-based).

    ``vertex_orders[j-1]`` lists propagator indices supported on vertex j,
    most clockwise first.  Returns ``out`` with ``out[p]`` the vertex that
    propagator p was assigned to.  Raises ValueError if the walk does not
    place every propagator within one lap.
    """
    out = [0] * k
    left = k
    j = start
    for _ in range(n):
        if not left:
            break
        for p in vertex_orders[j - 1]:
            if out[p] == 0:
                out[p] = j
                left -= 1
                break
        j = j + 1 if j < n else 1
    if left:
        raise ValueError(f"walk from {start} left {left} propagator(s) unassigned")
    return out


def _augment(v, adj, match_p, seen):
    # classic Kuhn step: try to find an augmenting path from vertex slot v
    m = adj[v] & ~seen[0]
    while m:
        low = m & -m
        p = low.bit_length() - 1
        m ^= low
        seen[0] |= low
        if match_p[p] < 0 or _augment(match_p[p], adj, match_p, seen):
            match_p[p] = v
            return True
    return False


def independent(vertex_adj, jmask: int, k: int) -> bool:
    """True when every vertex in ``jmask`` can be matched to its own propagator.

    ``vertex_adj[v]`` is the bitmask of propagators supported on vertex
    index v (0-based).
    """
    match_p = [-1] * k
    v = 0
    m = jmask
    while m:
        if m & 1:
            if not _augment(v, vertex_adj, match_p, [0]):
                return False
        m >>= 1
        v += 1
    return True


def bases_masks(vertex_adj, n: int, k: int) -> list:
    """All k-subsets of range(n), as bitmasks, that are independent.

    Subsets are visited in increasing integer order (Gosper's hack).
    """
    if k == 0:
        return [0]
    if k > n:
        return []
    out = []
    x = (1 << k) - 1
    top = 1 << n
    while x < top:
        if independent(vertex_adj, x, k):
            out.append(x)
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return out


def perfect_matchings(allowed) -> list:
    """Enumerate bijections rows -> column positions.

    ``allowed[r]`` is a bitmask of column positions usable by row r.
    Returns a list of tuples ``perm`` with ``perm[r]`` the column used,
    in lexicographic order.
    """
    m = len(allowed)
    out = []
    perm = [0] * m

    def rec(r, used):
        if r == m:
            out.append(tuple(perm))
            return
        free = allowed[r] & ~used
        while free:
            low = free & -free
            perm[r] = low.bit_length() - 1
            rec(r + 1, used | low)
            free ^= low

    rec(0, 0)
    return out
