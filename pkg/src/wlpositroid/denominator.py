"""The denominator R(W), built edge by edge and from the necklace.

Sign convention for the necklace route: r_i is the minor with rows S_i
(in the global row order) and, for each row p, the column I_i(p) in the
same position.  The term matching the assignment then always has
coefficient +1, and r_i does not depend on the row order at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .diagram import Propagator, WilsonLoopDiagram, cyc, is_admissible
from .necklace import GrassmannNecklace, grassmann_necklace
from .sympoly import (
    ONE,
    DoesNotDivide,
    FactoredPolynomial,
    SparsePolynomial,
    SymbolicMatrix,
    c_matrix,
    exact_divide,
    minor_det,
    structural_factors,
)


def edge_propagator_order(W: WilsonLoopDiagram, e: int) -> list:
    """Propagators ending on edge e, nearest vertex e first.

    p comes before q when p's other end is reached first walking the
    edges e-1, e-2, ...
    """
    n = W.n
    here = [p for p in W.propagators if e in p.ends]
    return sorted(here, key=lambda p: (e - 1 - p.other(e)) % n)


@dataclass(frozen=True)
class EdgeFactorization:
    edge: int
    ordered_props: tuple
    factors: tuple  # SparsePolynomials, in display order


def edge_factorization(W: WilsonLoopDiagram, e: int, M: SymbolicMatrix) -> EdgeFactorization:
    ps = edge_propagator_order(W, e)
    e1 = cyc(e + 1, W.n)
    x = lambda p, v: SparsePolynomial.var(M.row(p), v)  # noqa: E731
    if not ps:
        fs = (ONE,)
    elif len(ps) == 1:
        fs = (x(ps[0], e), x(ps[0], e1))
    else:
        fs = [x(ps[0], e1)]
        for a, b in zip(ps, ps[1:]):
            fs.append(x(a, e) * x(b, e1) - x(b, e) * x(a, e1))
        fs.append(x(ps[-1], e))
        fs = tuple(fs)
    return EdgeFactorization(e, tuple(ps), fs)


def _check_admissible(W):
    rep = is_admissible(W)
    if not rep.ok:
        raise ValueError(f"diagram is not admissible: {rep.violations[0].kind}")


def denominator_definition(W: WilsonLoopDiagram, propagator_order: Sequence = None) -> FactoredPolynomial:
    _check_admissible(W)
    M = c_matrix(W, propagator_order)
    fs = []
    for e in range(1, W.n + 1):
        fs.extend(f for f in edge_factorization(W, e, M).factors if f != ONE)
    return FactoredPolynomial.build(1, fs)


def s_set(W: WilsonLoopDiagram, neck: GrassmannNecklace, i: int) -> frozenset:
    prev, cur = neck.assignment(i - 1), neck.assignment(i)
    return frozenset(p for p in W.propagators if prev[p] != cur[p])


def _r_minor(W, neck, i, M):
    S = s_set(W, neck, i)
    rows = [p for p in M.order if p in S]
    cols = [neck.assignment(i)[p] for p in rows]
    return rows, cols


def r_factor(W: WilsonLoopDiagram, neck: GrassmannNecklace, i: int, propagator_order: Sequence = None) -> SparsePolynomial:
    M = c_matrix(W, propagator_order)
    rows, cols = _r_minor(W, neck, i, M)
    return minor_det(M, rows, cols) if rows else ONE


def delta(M: SymbolicMatrix, neck: GrassmannNecklace, i: int) -> SparsePolynomial:
    """The full k x k minor on the columns I_i (ascending)."""
    return minor_det(M, list(M.order), sorted(neck.term(i)))


def denominator_via_necklace(W: WilsonLoopDiagram, propagator_order: Sequence = None,
                             neck: Optional[GrassmannNecklace] = None) -> FactoredPolynomial:
    _check_admissible(W)
    neck = neck or grassmann_necklace(W)
    M = c_matrix(W, propagator_order)
    out = FactoredPolynomial.one()
    for i in range(1, W.n + 1):
        rows, cols = _r_minor(W, neck, i, M)
        if rows:
            out = out * structural_factors(M, rows, cols)
    return out


def _reduce_by(poly: SparsePolynomial, pool: list) -> SparsePolynomial:
    """Divide out factors from ``pool`` (each used at most once) while possible."""
    left = list(pool)
    progress = True
    while progress and poly.degree() > 0:
        progress = False
        for t, f in enumerate(left):
            try:
                poly = exact_divide(poly, f)
            except DoesNotDivide:
                continue
            del left[t]
            progress = True
            break
    return poly


@dataclass
class DenominatorReport:
    R_definition: FactoredPolynomial
    R_necklace: FactoredPolynomial
    S_sets: list
    r_factors: list
    deltas: list
    checks: dict
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.checks["radical_ok"])

    def to_json(self) -> dict:
        return {
            "R_definition": self.R_definition.text(),
            "R_necklace": self.R_necklace.text(),
            "degree": self.R_definition.degree(),
            "S_sets": [[[p.i, p.j] for p in sorted(S)] for S in self.S_sets],
            "r_factors": [str(r) for r in self.r_factors],
            "deltas": [str(d) for d in self.deltas],
            "checks": dict(self.checks),
            "failures": list(self.failures),
        }


def verify_radical(W: WilsonLoopDiagram, propagator_order: Sequence = None) -> DenominatorReport:
    _check_admissible(W)
    neck = grassmann_necklace(W)
    M = c_matrix(W, propagator_order)
    n = W.n
    fails = []

    S_sets, rs, deltas, divides = [], [], [], []
    for i in range(1, n + 1):
        S = s_set(W, neck, i)
        rows, cols = _r_minor(W, neck, i, M)
        r = minor_det(M, rows, cols) if rows else ONE
        D = delta(M, neck, i)
        S_sets.append(S)
        rs.append(r)
        deltas.append(D)
        try:
            exact_divide(D, r)
            divides.append(True)
        except DoesNotDivide:
            divides.append(False)
            fails.append(f"r_{i} = {r} does not divide Delta_{i} = {D}")

    R_def = denominator_definition(W, propagator_order)
    R_nk = denominator_via_necklace(W, propagator_order, neck)
    e_def, e_nk = R_def.expand(), R_nk.expand()
    equal = e_def == e_nk
    up_to_sign = equal or e_def == -e_nk
    if not equal:
        fails.append(f"products differ: definition {R_def.text()} vs necklace {R_nk.text()}")

    square_free = R_def.is_square_free()
    if not square_free:
        fails.append(f"R has a repeated factor: {R_def.text()}")

    pool = R_def.flat()
    reduce_ok = True
    for i, D in enumerate(deltas, start=1):
        rest = _reduce_by(D, pool)
        if rest not in (ONE, -ONE):
            reduce_ok = False
            fails.append(f"Delta_{i} leaves {rest} after dividing by factors of R")

    checks = {
        "r_divides_delta": divides,
        "products_equal": equal,
        "products_equal_up_to_sign": up_to_sign,
        "square_free": square_free,
        "delta_reduces": reduce_ok,
        "degree_4k": R_def.degree() == 4 * W.k,
    }
    checks["radical_ok"] = all(divides) and equal and square_free and reduce_ok
    return DenominatorReport(R_def, R_nk, S_sets, rs, deltas, checks, fails)


def letter_namer(M: SymbolicMatrix):
    """Name the nonzero entries a, b, c, ... reading C(W) row by row."""
    names = {}
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    t = 0
    for r in range(1, M.k + 1):
        for v in sorted(M.support[r - 1]):
            names[(r, v)] = alphabet[t] if t < 26 else f"z{t}"
            t += 1
    return lambda var: names[var]
