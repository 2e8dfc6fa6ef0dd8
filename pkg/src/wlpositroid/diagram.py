"""Wilson loop diagrams: data model, support combinatorics, admissibility.

Vertices and edges are 1-based.  Edge ``e`` joins vertices ``e`` and
``e+1`` (edge ``n`` joins ``n`` and ``1``).  A propagator is an unordered
pair of distinct edges, stored as ``(a, b)`` with ``a < b``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union


def cyc(x: int, n: int) -> int:
    """Reduce ``x`` into 1..n."""
    return (x - 1) % n + 1


def order_key(v: int, i: int, n: int) -> int:
    """Position of ``v`` in the cyclic order starting at ``i`` (0 for v == i)."""
    return (v - i) % n


def interval(a: int, b: int, n: int) -> list:
    """The cyclic interval a, a+1, ..., b (inclusive)."""
    return [cyc(a + t, n) for t in range((b - a) % n + 1)]


@dataclass(frozen=True, order=True)
class Propagator:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError(f"propagator needs two distinct edges, got ({self.i},{self.j})")
        if self.i > self.j:
            # keep canonical orientation even if constructed directly
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    @classmethod
    def of(cls, a, b=None) -> "Propagator":
        if isinstance(a, Propagator):
            return a
        if b is None:
            a, b = a
        return cls(int(a), int(b))

    @property
    def ends(self) -> tuple:
        return (self.i, self.j)

    def other(self, e: int) -> int:
        """The end that is not ``e``."""
        if e == self.i:
            return self.j
        if e == self.j:
            return self.i
        raise ValueError(f"{e} is not an end of {self}")

    def __repr__(self):
        return f"({self.i},{self.j})"

    __str__ = __repr__


@dataclass(frozen=True)
class DirectedPropagator:
    propagator: Propagator
    start: int

    def __post_init__(self):
        if self.start not in self.propagator.ends:
            raise ValueError(f"start {self.start} is not an end of {self.propagator}")

    @property
    def end(self) -> int:
        return self.propagator.other(self.start)


PropLike = Union[Propagator, tuple, list]


class WilsonLoopDiagram:
    """An immutable diagram ``(P, [n])``.

    Propagators keep their input order (it is the default row order of the
    symbolic matrix) but equality and hashing ignore it.
    """

    __slots__ = ("n", "propagators", "_set", "_supports")

    def __init__(self, n: int, propagators: Iterable[PropLike] = ()):
        n = int(n)
        if n < 1:
            raise ValueError("n must be positive")
        props = tuple(Propagator.of(p) for p in propagators)
        for p in props:
            if not (1 <= p.i <= n and 1 <= p.j <= n):
                raise ValueError(f"propagator {p} has an edge outside 1..{n}")
        if len(set(props)) != len(props):
            raise ValueError("duplicate propagator")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "propagators", props)
        object.__setattr__(self, "_set", frozenset(props))
        object.__setattr__(
            self,
            "_supports",
            {p: frozenset((p.i, cyc(p.i + 1, n), p.j, cyc(p.j + 1, n))) for p in props},
        )

    def __setattr__(self, name, value):
        raise AttributeError("WilsonLoopDiagram is immutable")

    @property
    def k(self) -> int:
        return len(self.propagators)

    def __eq__(self, other):
        if not isinstance(other, WilsonLoopDiagram):
            return NotImplemented
        return self.n == other.n and self._set == other._set

    def __hash__(self):
        return hash((self.n, self._set))

    def __contains__(self, p):
        return Propagator.of(p) in self._set

    def __repr__(self):
        ps = ",".join(str(p) for p in self.propagators)
        return f"W({{{ps}}},[{self.n}])"

    def sorted(self) -> "WilsonLoopDiagram":
        return WilsonLoopDiagram(self.n, sorted(self.propagators))

    def to_json(self) -> dict:
        return {"n": self.n, "propagators": [[p.i, p.j] for p in self.propagators]}

    @classmethod
    def from_json(cls, data) -> "WilsonLoopDiagram":
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError('diagram JSON needs an object with "n" and "propagators"')
        n = data["n"]
        props = data.get("propagators", [])
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError('"n" must be an integer')
        if not isinstance(props, list) or any(
            not isinstance(p, list) or len(p) != 2 or not all(isinstance(x, int) for x in p)
            for p in props
        ):
            raise ValueError('"propagators" must be a list of [a, b] integer pairs')
        return cls(n, props)


def _need(W: WilsonLoopDiagram, p: PropLike) -> Propagator:
    p = Propagator.of(p)
    if p not in W._set:
        raise KeyError(f"{p} is not a propagator of {W}")
    return p


def vertex_support(W: WilsonLoopDiagram, p: PropLike) -> frozenset:
    return W._supports[_need(W, p)]


def support_of_set(W: WilsonLoopDiagram, P: Iterable[PropLike]) -> frozenset:
    out = set()
    for p in P:
        out |= vertex_support(W, p)
    return frozenset(out)


def props_on(W: WilsonLoopDiagram, U: Iterable[int]) -> frozenset:
    U = set(U)
    return frozenset(p for p in W.propagators if W._supports[p] & U)


def is_supporting(W: WilsonLoopDiagram, v: int) -> bool:
    return any(v in s for s in W._supports.values())


def nonsupporting_vertices(W: WilsonLoopDiagram) -> frozenset:
    used = support_of_set(W, W.propagators)
    return frozenset(v for v in range(1, W.n + 1) if v not in used)


def crosses(p: Propagator, q: Propagator) -> bool:
    a, b = sorted((p, q))
    return a.i < b.i < a.j < b.j


@dataclass(frozen=True)
class Violation:
    kind: str  # TooManyProps | DenseSubset | Crossing
    witness: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": [[p.i, p.j] for p in self.witness]}


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    violations: tuple = ()

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _dense_witness(W: WilsonLoopDiagram) -> Optional[tuple]:
    props = sorted(W.propagators)
    for size in range(1, len(props) + 1):
        for Q in itertools.combinations(props, size):
            if len(support_of_set(W, Q)) < size + 3:
                return Q
    return None


def _crossing_pairs(W: WilsonLoopDiagram) -> list:
    props = sorted(W.propagators)
    return [(p, q) for p, q in itertools.combinations(props, 2) if crosses(p, q)]


def is_admissible(W: WilsonLoopDiagram) -> AdmissibilityReport:
    found = []
    if W.n < W.k + 4:
        found.append(Violation("TooManyProps", tuple(sorted(W.propagators))))
    Q = _dense_witness(W)
    if Q is not None:
        found.append(Violation("DenseSubset", Q))
    for pair in _crossing_pairs(W):
        found.append(Violation("Crossing", pair))
    return AdmissibilityReport(not found, tuple(found))


def is_weakly_admissible(W: WilsonLoopDiagram) -> bool:
    return not _crossing_pairs(W) and _dense_witness(W) is None


def props_inside(W: WilsonLoopDiagram, dp: DirectedPropagator) -> frozenset:
    """Propagators with both ends in the edge interval from dp.start to dp.end."""
    p = _need(W, dp.propagator)
    i, j, n = dp.start, p.other(dp.start), W.n
    lim = order_key(j, i, n)
    return frozenset(
        q for q in W.propagators
        if order_key(q.i, i, n) <= lim and order_key(q.j, i, n) <= lim
    )


def props_outside(W: WilsonLoopDiagram, dp: DirectedPropagator) -> frozenset:
    return frozenset(W.propagators) - props_inside(W, dp)


def side_size(W: WilsonLoopDiagram, dp: DirectedPropagator) -> int:
    """Number of vertices strictly inside the directed propagator, |[i+1, j]|."""
    i, j = dp.start, dp.end
    return (j - (i + 1)) % W.n + 1


def propagator_length(W: WilsonLoopDiagram, p: PropLike) -> int:
    p = _need(W, p)
    return min(side_size(W, DirectedPropagator(p, p.i)), side_size(W, DirectedPropagator(p, p.j)))


# --- small configurations ---------------------------------------------------

@dataclass(frozen=True)
class Config1:
    long: Propagator
    short: Propagator


@dataclass(frozen=True)
class Config2:
    first: Propagator
    second: Propagator


def is_config1(W: WilsonLoopDiagram, long: Propagator, short: Propagator) -> bool:
    """``short`` has length 2 and is the only other propagator on some side
    of ``long``; that side spans at most 6 vertices."""
    if long == short or long not in W or short not in W:
        return False
    if propagator_length(W, short) != 2:
        return False
    for s in long.ends:
        dp = DirectedPropagator(long, s)
        if side_size(W, dp) <= 6 and props_inside(W, dp) == {long, short}:
            return True
    return False


def _short_start(W: WilsonLoopDiagram, p: Propagator) -> Optional[int]:
    # edge i with p == (i, i+2) read cyclically
    n = W.n
    for s in p.ends:
        if cyc(s + 2, n) == p.other(s):
            return s
    return None


def is_config2(W: WilsonLoopDiagram, first: Propagator, second: Propagator) -> bool:
    """first = (i, i+2), second = (j, j+2) with j - i in {2, 3, 4} and no
    other propagator ending on the edges i+2 .. j."""
    if first == second or first not in W or second not in W:
        return False
    if propagator_length(W, first) != 2 or propagator_length(W, second) != 2:
        return False
    n = W.n
    i, j = _short_start(W, first), _short_start(W, second)
    if i is None or j is None or (j - i) % n not in (2, 3, 4):
        return False
    banned = set(interval(i + 2, j, n))
    for q in W.propagators:
        if q in (first, second):
            continue
        if q.i in banned or q.j in banned:
            return False
    return True


def find_small_config(W: WilsonLoopDiagram):
    """Search for one of the two small configurations.

    Returns None when the hypotheses (weakly admissible, at least 5
    vertices, no non-supporting vertex) fail or nothing is found.
    """
    if W.n < 5 or not W.k or nonsupporting_vertices(W) or not is_weakly_admissible(W):
        return None
    props = sorted(W.propagators)
    # the pair form is checked first; it is the more specific of the two
    for a in props:
        for b in props:
            if is_config2(W, a, b):
                return Config2(a, b)
    for a in props:
        for b in props:
            if is_config1(W, a, b):
                return Config1(a, b)
    return None


# --- dihedral action and vertex removal -------------------------------------

def rotate(W: WilsonLoopDiagram, s: int) -> WilsonLoopDiagram:
    n = W.n
    return WilsonLoopDiagram(n, [(cyc(p.i + s, n), cyc(p.j + s, n)) for p in W.propagators])


def reflect(W: WilsonLoopDiagram, c: int) -> WilsonLoopDiagram:
    """Vertex v goes to c - v; edge e (joining e, e+1) goes to c - e - 1."""
    n = W.n
    return WilsonLoopDiagram(
        n, [(cyc(c - p.i - 1, n), cyc(c - p.j - 1, n)) for p in W.propagators]
    )


def dihedral_orbit(W: WilsonLoopDiagram) -> list:
    """All 2n images of W (with repetition) under rotations and reflections."""
    return [rotate(W, s) for s in range(W.n)] + [reflect(W, c) for c in range(W.n)]


def remove_nonsupporting_vertex(W: WilsonLoopDiagram, v: int) -> WilsonLoopDiagram:
    n = W.n
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} outside 1..{n}")
    if is_supporting(W, v):
        raise ValueError(f"vertex {v} supports a propagator")
    if n == 1:
        raise ValueError("cannot remove the only vertex")
    # edges v-1 and v merge and carry no propagator ends; edge e > v shifts down
    shift = lambda e: e - 1 if e > v else e  # noqa: E731
    return WilsonLoopDiagram(n - 1, [(shift(p.i), shift(p.j)) for p in W.propagators])


# --- enumeration ------------------------------------------------------------

def candidate_pairs(n: int) -> list:
    """Edge pairs that are not adjacent (adjacent ones always fail density)."""
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if b - a == 1 or (a == 1 and b == n):
                continue
            out.append(Propagator(a, b))
    return out


def _noncrossing_subsets(n: int, k: int) -> Iterator[tuple]:
    cands = candidate_pairs(n)

    def rec(start, chosen):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for t in range(start, len(cands) - (k - len(chosen)) + 1):
            c = cands[t]
            if any(crosses(c, q) for q in chosen):
                continue
            chosen.append(c)
            yield from rec(t + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def enumerate_weakly_admissible(k: int, n: int) -> Iterator[WilsonLoopDiagram]:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    for combo in _noncrossing_subsets(n, k):
        W = WilsonLoopDiagram(n, combo)
        if _dense_witness(W) is None:
            yield W


def enumerate_admissible(k: int, n: int) -> Iterator[WilsonLoopDiagram]:
    """Every admissible diagram with k propagators on [n], lexicographically."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < k + 4:
        raise ValueError(f"no admissible diagrams unless n >= k+4 (k={k}, n={n})")
    yield from enumerate_weakly_admissible(k, n)


def all_admissible(max_n: int, min_n: int = 4) -> Iterator[WilsonLoopDiagram]:
    for n in range(min_n, max_n + 1):
        for k in range(0, n - 3):
            yield from enumerate_admissible(k, n)


def random_admissible(n: int, k: int, rng: random.Random, tries: int = 200) -> WilsonLoopDiagram:
    """Grow a random admissible diagram one non-crossing propagator at a time."""
    if n < k + 4:
        raise ValueError("need n >= k+4")
    cands = candidate_pairs(n)
    for _ in range(tries):
        rng.shuffle(cands)
        chosen: list = []
        for c in cands:
            if len(chosen) == k:
                break
            if any(crosses(c, q) for q in chosen):
                continue
            trial = WilsonLoopDiagram(n, chosen + [c])
            # only subsets containing the new propagator can newly fail
            rest = chosen
            bad = False
            for size in range(0, len(rest) + 1):
                for Q in itertools.combinations(rest, size):
                    if len(support_of_set(trial, Q + (c,))) < size + 4:
                        bad = True
                        break
                if bad:
                    break
            if not bad:
                chosen.append(c)
        if len(chosen) == k:
            return WilsonLoopDiagram(n, sorted(chosen))
    raise RuntimeError(f"could not build a random admissible diagram with k={k}, n={n}")


def random_corpus(count: int, seed: int = 0, n_range=(9, 12)) -> list:
    """Seeded list of random admissible diagrams with n drawn from n_range."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        k = rng.randint(1, n - 4)
        out.append(random_admissible(n, k, rng))
    return out
