"""Invariant checks shared by ``wlpositroid selftest`` and the test suite.

Every ``check_*`` function takes one diagram (plus its necklace where
useful) and returns a list of failure messages; an empty list is a pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .denominator import (
    denominator_definition,
    denominator_via_necklace,
    letter_namer,
    r_factor,
    s_set,
    verify_radical,
)
from .diagram import (
    DirectedPropagator,
    Propagator,
    WilsonLoopDiagram,
    all_admissible,
    cyc,
    dihedral_orbit,
    enumerate_weakly_admissible,
    find_small_config,
    is_config1,
    is_config2,
    Config1,
    nonsupporting_vertices,
    order_key,
    props_inside,
    random_corpus,
    remove_nonsupporting_vertex,
    vertex_support,
)
from .le import le_from_necklace, plus_count, validate_le
from .matroid import bases, bases_from_necklace, lexmin_basis
from .necklace import (
    GrassmannNecklace,
    coloops,
    contribution_sets,
    grassmann_necklace,
    is_grassmann_necklace,
    loops,
)
from .sympoly import ONE, FactoredPolynomial, c_matrix, structural_factors

# the two worked examples
EIGHT = WilsonLoopDiagram(8, [(1, 4), (2, 4), (5, 7), (5, 8)])
EIGHT_TERMS = ("1235", "2356", "3456", "4567", "5671", "6712", "7812", "8123")
# labels used for the 8-vertex example: q=(1,4), p=(2,4), r=(5,8), s=(5,7)
EIGHT_I1 = {(5, 8): 1, (1, 4): 2, (2, 4): 3, (5, 7): 5}
SEVEN = WilsonLoopDiagram(7, [(1, 6), (1, 5), (1, 4)])  # p, q, s
SEVEN_TERMS = ("124", "245", "456", "456", "567", "671", "712")


# --- per-diagram checks ----------------------------------------------------

def check_necklace(W, neck) -> list:
    out = []
    if not is_grassmann_necklace(neck.terms):
        out.append("output is not a Grassmann necklace")
    for i in range(1, W.n + 1):
        a = neck.assignment(i)
        if len(set(a.values())) != W.k or set(a.values()) != neck.term(i):
            out.append(f"assignment {i} is not a bijection onto I_{i}")
        for p, v in a.items():
            if v not in vertex_support(W, p):
                out.append(f"I_{i}({p}) = {v} is not in V(p)")
    return out


def check_no_fourth_vertex(W, neck) -> list:
    out = []
    n = W.n
    for i in range(1, n + 1):
        if W.k and cyc(i - 1, n) in neck.term(i):
            out.append(f"{cyc(i - 1, n)} lies in I_{i}")
        for p, v in neck.assignment(i).items():
            top = max(vertex_support(W, p), key=lambda u: order_key(u, i, n))
            if v == top:
                out.append(f"I_{i}({p}) is the last support vertex in order <_{i}")
    return out


def check_intervals(W, neck) -> list:
    out = []
    n = W.n
    for p in W.propagators:
        sets = contribution_sets(W, p, neck)
        seq = [p.i, cyc(p.i + 1, n), p.j, cyc(p.j + 1, n)]
        if any(not sets.get(v) for v in seq):
            out.append(f"{p}: some support vertex never receives a contribution")
            continue
        if sum(len(s) for s in sets.values()) != n:
            out.append(f"{p}: contribution sets do not partition [n]")
            continue
        # the four sets must be consecutive arcs in the order i, i+1, j, j+1
        start = min(sets[seq[0]], key=lambda m: (cyc(m - 1, n) in sets[seq[0]], m))
        walk = [cyc(start + t, n) for t in range(n)]
        labels = []
        for m in walk:
            v = next(v for v in seq if m in sets[v])
            if not labels or labels[-1] != v:
                labels.append(v)
        if labels != seq:
            out.append(f"{p}: contribution arcs run {labels}, expected {seq}")
    return out


def check_loops(W, neck) -> list:
    out = []
    if loops(neck) != nonsupporting_vertices(W):
        out.append(f"loops {sorted(loops(neck))} != non-supporting {sorted(nonsupporting_vertices(W))}")
    if W.k and coloops(neck):
        out.append(f"coloops {sorted(coloops(neck))}")
    return out


def _directed(p: Propagator, m: int, n: int) -> DirectedPropagator:
    start = min(p.ends, key=lambda e: order_key(e, m, n))
    return DirectedPropagator(p, start)


def check_clockwise_nesting(W, neck) -> list:
    """If p takes a during walk i and q (also on a) is placed later, then q
    sits inside p directed from a-1."""
    out = []
    n = W.n
    for i in range(1, n + 1):
        a_map = neck.assignment(i)
        for p, a in a_map.items():
            dp = _directed(p, cyc(a - 1, n), n)
            inside = props_inside(W, dp)
            for q, b in a_map.items():
                if q == p or a not in vertex_support(W, q):
                    continue
                if order_key(b, i, n) > order_key(a, i, n) and q not in inside:
                    out.append(f"walk {i}: {q} after {p} at {a} but not inside it")
    return out


def check_oracle(W, neck) -> list:
    out = []
    for i in range(1, W.n + 1):
        lm = lexmin_basis(W, i)
        if lm != neck.term(i):
            out.append(f"I_{i} = {sorted(neck.term(i))} but lexmin basis is {sorted(lm)}")
    if bases_from_necklace(neck) != bases(W):
        out.append("bases from the Gale condition differ from matching bases")
    return out


def check_le(W, neck) -> list:
    d = le_from_necklace(neck)
    out = []
    if not validate_le(d):
        out.append("Le condition fails")
    if plus_count(d) != 3 * W.k:
        out.append(f"plus count {plus_count(d)} != 3k = {3 * W.k}")
    return out


def check_zero_column(W, neck) -> list:
    out = []
    big = le_from_necklace(neck)
    for v in sorted(nonsupporting_vertices(W)):
        V = remove_nonsupporting_vertex(W, v)
        small = le_from_necklace(grassmann_necklace(V, strict=False))
        up = lambda x: x if x < v else x + 1  # noqa: E731
        rows = tuple(up(x) for x in small.row_labels)
        cols = tuple(sorted([up(x) for x in small.column_labels] + [v], reverse=True))
        plus = frozenset((up(a), up(b)) for a, b in small.plus_cells)
        if big.row_labels != rows or big.column_labels != cols or big.plus_cells != plus:
            out.append(f"removing vertex {v} does not just delete a zero column")
        if any(c == v for _, c in big.plus_cells):
            out.append(f"column {v} has a plus")
    return out


def check_dihedral(W) -> list:
    counts = {plus_count(le_from_necklace(grassmann_necklace(U))) for U in dihedral_orbit(W)}
    if counts != {3 * W.k}:
        return [f"plus counts on the dihedral orbit: {sorted(counts)}"]
    return []


def check_delta_blocks(W, neck) -> list:
    """Delta_{I_i} splits into blocks of size <= 2, and the 2x2 blocks are
    exactly the pairs sharing an edge a with contributions a and a+1."""
    out = []
    M = c_matrix(W)
    n = W.n
    for i in range(1, n + 1):
        a_map = neck.assignment(i)
        cols = sorted(neck.term(i))
        fp = structural_factors(M, list(M.order), cols)
        got = set()
        for f, _ in fp.factors:
            if f.degree() > 2:
                out.append(f"Delta_{i} has a block of size {f.degree()}")
            elif f.degree() == 2:
                got.add(frozenset(M.order[v[0] - 1] for v in f.variables()))
        want = set()
        for p in W.propagators:
            for q in W.propagators:
                for a in set(p.ends) & set(q.ends):
                    if p != q and a_map[p] == a and a_map[q] == cyc(a + 1, n):
                        want.add(frozenset((p, q)))
        if got != want:
            out.append(f"Delta_{i}: quadratic blocks {got} but shared-edge pairs {want}")
    return out


def check_radical(W) -> list:
    rep = verify_radical(W)
    out = list(rep.failures)
    if not rep.checks["radical_ok"] and not out:
        out.append("radical check failed")
    if not rep.checks["degree_4k"]:
        out.append(f"deg R = {rep.R_definition.degree()} != 4k")
    return out


def check_small_config(W) -> list:
    c = find_small_config(W)
    if c is None:
        return ["no small configuration found"]
    ok = is_config1(W, c.long, c.short) if isinstance(c, Config1) else is_config2(W, c.first, c.second)
    return [] if ok else [f"returned {c} does not re-validate"]


# --- corpus runner -------------------------------------------------------------

@dataclass
class CaseResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name:<28} {self.checked:>6} checked  {len(self.failures):>4} failed  {self.seconds:7.2f}s"


def run_case(name: str, items: Iterable, fn: Callable, keep: int = 20) -> CaseResult:
    res = CaseResult(name)
    t0 = time.perf_counter()
    for item in items:
        res.checked += 1
        for msg in fn(item):
            if len(res.failures) < keep:
                res.failures.append(f"{item!r}: {msg}")
            else:
                res.failures.append("...")
                break
    res.seconds = time.perf_counter() - t0
    return res


def _with_neck(*fns):
    def run(W):
        neck = grassmann_necklace(W)
        out = []
        for f in fns:
            out.extend(f(W, neck))
        return out
    return run


def golden_necklace(_=None) -> list:
    out = []
    ms = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        neck = grassmann_necklace(EIGHT)
        ms = min(ms, (time.perf_counter() - t0) * 1e3)
    if neck.compact() != EIGHT_TERMS:
        out.append(f"terms {neck.compact()}")
    got = {(p.i, p.j): v for p, v in neck.assignment(1).items()}
    if got != EIGHT_I1:
        out.append(f"I_1 assignments {got}")
    if ms >= 1.0:
        out.append(f"took {ms:.3f} ms")
    return out


def golden_denominator_8(_=None) -> list:
    from .sympoly import SparsePolynomial as P
    x = P.var
    want = [
        x(1, 1), x(1, 2), x(2, 2), x(2, 3),
        x(2, 5), x(2, 4) * x(1, 5) - x(2, 5) * x(1, 4), x(1, 4),
        x(4, 6), x(4, 5) * x(3, 6) - x(3, 5) * x(4, 6), x(3, 5),
        x(3, 7), x(3, 8), x(4, 8), x(4, 1),
    ]
    got = denominator_definition(EIGHT).flat()
    return [] if got == want else [f"got {got}"]


def golden_denominator_7(_=None) -> list:
    out = []
    W = SEVEN
    neck = grassmann_necklace(W)
    if neck.compact() != SEVEN_TERMS:
        out.append(f"terms {neck.compact()}")
    M = c_matrix(W)
    name = letter_namer(M)
    p, q, s = W.propagators
    want_S = {1: {p, q, s}, 2: {p, q}, 3: {p}, 4: set(), 5: {p, q, s}, 6: {s}, 7: {q, s}}
    for i, S in want_S.items():
        if s_set(W, neck, i) != S:
            out.append(f"S_{i} = {sorted(s_set(W, neck, i))}")
    # r_i in the letter names a..l, as printed
    want_r = {1: ["af-be", "k"], 2: ["g", "b"], 3: ["c"], 4: [], 5: ["l", "h", "d"],
              6: ["i"], 7: ["ej-fi"]}
    for i, fs in want_r.items():
        r = r_factor(W, neck, i)
        rows = [t for t in M.order if t in want_S[i]]
        if not rows:
            if r != ONE:
                out.append(f"r_{i} = {r}, expected 1")
            continue
        fp = structural_factors(M, rows, [neck.assignment(i)[t] for t in rows])
        names = sorted(_txt(f, name) for f in fp.flat())
        if fp.sign != 1 or names != sorted(fs) or fp.expand() != r:
            out.append(f"r_{i} = {fp.text(name)}")
    R = denominator_via_necklace(W)
    names = sorted(_txt(f, name) for f in R.flat())
    if R.sign != 1 or names != sorted(["af-be", "k", "g", "b", "c", "l", "h", "d", "i", "ej-fi"]):
        out.append(f"R = {R.text(name)}")
    if R.expand() != denominator_definition(W).expand():
        out.append("R differs from the edge-by-edge product")
    return out


def _txt(f, name):
    return FactoredPolynomial(1, ((f, 1),)).text(name).strip("()")


def weak_full_support(max_n: int) -> list:
    out = []
    for n in range(5, max_n + 1):
        for k in range(1, n - 2):
            for W in enumerate_weakly_admissible(k, n):
                if not nonsupporting_vertices(W):
                    out.append(W)
    return out


def run_all(max_n: int = 8, random_count: int = 500, seed: int = 0) -> list:
    """Run every acceptance case; returns a list of CaseResult."""
    small = list(all_admissible(max_n))
    rand = random_corpus(random_count, seed) if random_count else []
    corpus = small + rand
    return [
        run_case("golden-necklace", [EIGHT], golden_necklace),
        run_case("golden-denominator-8", [EIGHT], golden_denominator_8),
        run_case("golden-denominator-7", [SEVEN], golden_denominator_7),
        run_case("radical", corpus, check_radical),
        run_case("dimension", corpus, _with_neck(check_le)),
        run_case("oracle", small, _with_neck(check_oracle)),
        run_case("lemmas", small, _with_neck(
            check_necklace, check_no_fourth_vertex, check_intervals, check_loops,
            check_zero_column)),
        run_case("dihedral", small, check_dihedral),
        run_case("small-config", weak_full_support(max_n), check_small_config),
        run_case("extra-nesting-blocks", small, _with_neck(check_clockwise_nesting, check_delta_blocks)),
    ]
