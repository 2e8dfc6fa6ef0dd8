"""Sparse integer polynomials in the variables x_{P,V}, and minors of C(W).

A variable is a pair ``(P, V)``: P is the 1-based row (position of the
propagator in a chosen order) and V the vertex.  A monomial is a sorted
tuple of ``(variable, exponent)`` pairs.  Polynomials are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .diagram import Propagator, WilsonLoopDiagram, vertex_support


class DoesNotDivide(ArithmeticError):
    """Raised by exact_divide when the quotient is not a polynomial."""


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: tuple, b: tuple) -> Optional[tuple]:
    d = dict(a)
    for v, e in b:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def _lex_key(m: tuple) -> tuple:
    # lex order with x_{1,1} > x_{1,2} > ... ; a larger key is a larger monomial
    return tuple((-(v[0] * 100003 + v[1]), e) for v, e in m)


class SparsePolynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    # constructors
    @classmethod
    def const(cls, c: int) -> "SparsePolynomial":
        return cls({(): c})

    @classmethod
    def var(cls, row: int, vertex: int) -> "SparsePolynomial":
        return cls({(((row, vertex), 1),): 1})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in m) for m in self.terms}) <= 1

    def variables(self) -> frozenset:
        return frozenset(v for m in self.terms for v, _ in m)

    def as_variable(self):
        """The variable (P, V) if this polynomial is exactly one variable."""
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if c == 1 and len(m) == 1 and m[0][1] == 1:
                return m[0][0]
        return None

    def leading(self):
        m = max(self.terms, key=_lex_key)
        return m, self.terms[m]

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            d[m] = d.get(m, 0) + c
        return SparsePolynomial(d)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return SparsePolynomial(d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = SparsePolynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.const(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def normalized(self) -> "SparsePolynomial":
        """Same polynomial up to sign, with a positive leading coefficient."""
        if not self.terms:
            return self
        return -self if self.leading()[1] < 0 else self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_lex_key, reverse=True):
            c = self.terms[m]
            body = "*".join(
                f"x_{{{v[0]},{v[1]}}}" + (f"^{e}" if e > 1 else "") for v, e in m
            )
            mag = abs(c)
            if not body:
                txt = str(mag)
            elif mag == 1:
                txt = body
            else:
                txt = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", txt))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, t in parts[1:]:
            out += f" {s} {t}"
        return out

    def __repr__(self):
        return f"SparsePolynomial({self})"


def _coerce(x) -> SparsePolynomial:
    if isinstance(x, SparsePolynomial):
        return x
    if isinstance(x, int):
        return SparsePolynomial.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


ONE = SparsePolynomial.const(1)
ZERO = SparsePolynomial()

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:x_\{\d+,\d+\}(?:\^\d+)?\s*\*?\s*)*)")
_VAR = re.compile(r"x_\{(\d+),(\d+)\}(?:\^(\d+))?")


def parse_poly(text: str) -> SparsePolynomial:
    """Parse the printed form, e.g. 'x_{2,4}*x_{1,5} - x_{2,5}*x_{1,4}'."""
    text = text.strip()
    if text == "0":
        return ZERO
    out = ZERO
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        term = SparsePolynomial.const(sign * coef)
        for v in _VAR.finditer(m.group(3) or ""):
            term = term * SparsePolynomial.var(int(v.group(1)), int(v.group(2))) ** int(v.group(3) or 1)
        if not m.group(2) and not m.group(3):
            raise ValueError(f"empty term in {text!r}")
        out = out + term
        pos = m.end()
    return out


def exact_divide(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Quotient q with f == g*q, or raise DoesNotDivide."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_g, lc_g = g.leading()
    rem = f
    q = {}
    while not rem.is_zero():
        lm, lc = rem.leading()
        mq = _mono_div(lm, lm_g)
        if mq is None or lc % lc_g:
            raise DoesNotDivide(f"{g} does not divide {f}")
        cq = lc // lc_g
        q[mq] = q.get(mq, 0) + cq
        rem = rem - g * SparsePolynomial({mq: cq})
    return SparsePolynomial(q)


def divides(g: SparsePolynomial, f: SparsePolynomial) -> bool:
    try:
        exact_divide(f, g)
    except DoesNotDivide:
        return False
    return True


# --- the symbolic matrix ----------------------------------------------------

class SymbolicMatrix:
    """C(W): row P (1-based, in the chosen propagator order) has the variable
    x_{P,V} in column V whenever V supports that propagator."""

    def __init__(self, W: WilsonLoopDiagram, order: Sequence = None):
        order = tuple(Propagator.of(p) for p in (W.propagators if order is None else order))
        if sorted(order) != sorted(W.propagators):
            raise ValueError("propagator order must be a permutation of the diagram's propagators")
        self.W = W
        self.n = W.n
        self.k = W.k
        self.order = order
        self.index = {p: t + 1 for t, p in enumerate(order)}
        self.support = tuple(vertex_support(W, p) for p in order)

    @classmethod
    def from_pattern(cls, supports, n: int) -> "SymbolicMatrix":
        """A matrix with any zero pattern; rows are not tied to propagators."""
        M = cls.__new__(cls)
        M.W, M.n, M.k = None, n, len(supports)
        M.order, M.index = (), {}
        M.support = tuple(frozenset(s) for s in supports)
        return M

    def row(self, p) -> int:
        """1-based row number of a propagator (or pass an int through)."""
        if isinstance(p, int):
            if not 1 <= p <= self.k:
                raise IndexError(f"row {p} out of range")
            return p
        return self.index[Propagator.of(p)]

    def entry(self, p, v: int) -> SparsePolynomial:
        r = self.row(p)
        if not 1 <= v <= self.n:
            raise IndexError(f"column {v} out of range")
        return SparsePolynomial.var(r, v) if v in self.support[r - 1] else ZERO

    def is_nonzero(self, r: int, v: int) -> bool:
        return v in self.support[r - 1]

    def rows_text(self) -> list:
        return [
            [f"x_{{{r},{v}}}" if v in self.support[r - 1] else "0" for v in range(1, self.n + 1)]
            for r in range(1, self.k + 1)
        ]

    def render(self) -> str:
        rows = self.rows_text()
        w = max([1] + [len(s) for row in rows for s in row])
        return "\n".join(" ".join(s.rjust(w) for s in row) for row in rows)


def c_matrix(W: WilsonLoopDiagram, propagator_order: Sequence = None) -> SymbolicMatrix:
    return SymbolicMatrix(W, propagator_order)


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        length, t = 0, s
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def saturating_bijections(M: SymbolicMatrix, rows: Sequence, cols: Sequence[int]) -> list:
    """Permutations perm with M[rows[r], cols[perm[r]]] nonzero for all r."""
    rows = [M.row(p) for p in rows]
    cols = list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    for c in cols:
        if not 1 <= c <= M.n:
            raise IndexError(f"column {c} out of range")
    allowed = []
    for r in rows:
        m = 0
        for t, c in enumerate(cols):
            if M.is_nonzero(r, c):
                m |= 1 << t
        allowed.append(m)
    return kernels.perfect_matchings(allowed)


def minor_det(M: SymbolicMatrix, rows: Sequence, cols: Sequence[int]) -> SparsePolynomial:
    """Determinant of the submatrix with rows and columns in the given order."""
    rows = [M.row(p) for p in rows]
    cols = list(cols)
    d = {}
    for perm in saturating_bijections(M, rows, cols):
        mono = tuple(sorted(((r, cols[perm[t]]), 1) for t, r in enumerate(rows)))
        # a repeated variable means a repeated row and column; merge exponents
        if len({v for v, _ in mono}) != len(mono):
            acc = {}
            for v, e in mono:
                acc[v] = acc.get(v, 0) + e
            mono = tuple(sorted(acc.items()))
        d[mono] = d.get(mono, 0) + _perm_sign(perm)
    return SparsePolynomial(d)


# --- factored form ------------------------------------------------------------

@dataclass(frozen=True)
class FactoredPolynomial:
    sign: int
    factors: tuple  # ((SparsePolynomial, multiplicity), ...)

    @classmethod
    def one(cls) -> "FactoredPolynomial":
        return cls(1, ())

    @classmethod
    def build(cls, sign: int, factors: Iterable[SparsePolynomial]) -> "FactoredPolynomial":
        """Collect equal factors (keeping first-seen order)."""
        counts: dict = {}
        for f in factors:
            counts[f] = counts.get(f, 0) + 1
        return cls(sign, tuple(counts.items()))

    def flat(self) -> list:
        return [f for f, m in self.factors for _ in range(m)]

    def expand(self) -> SparsePolynomial:
        out = SparsePolynomial.const(self.sign)
        for f in self.flat():
            out = out * f
        return out

    def degree(self) -> int:
        return sum(f.degree() * m for f, m in self.factors)

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        return FactoredPolynomial.build(self.sign * other.sign, self.flat() + other.flat())

    def is_square_free(self) -> bool:
        """No factor repeats, even up to sign."""
        seen = set()
        for f in self.flat():
            g = f.normalized()
            if g in seen:
                return False
            seen.add(g)
        return True

    def text(self, namer=None) -> str:
        """Factors joined with '*'; sums get parentheses.

        ``namer`` maps a variable (P, V) to a display name; the default is
        x_{P,V}.
        """
        parts = []
        for f in self.flat():
            s = _poly_text(f, namer)
            parts.append(f"({s})" if len(f) > 1 else s)
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body

    def __str__(self):
        return self.text()


def _poly_text(f: SparsePolynomial, namer) -> str:
    if namer is None:
        return str(f)
    # compact form, e.g. af-be
    out = []
    for m in sorted(f.terms, key=_lex_key, reverse=True):
        c = f.terms[m]
        body = "".join(namer(v) * e for v, e in m) or "1"
        if abs(c) != 1:
            body = f"{abs(c)}{body}"
        out.append(("-" if c < 0 else "+") + body)
    txt = "".join(out)
    return txt[1:] if txt.startswith("+") else txt


def structural_factors(M: SymbolicMatrix, rows: Sequence, cols: Sequence[int]) -> FactoredPolynomial:
    """Factor a nonzero minor into the determinants of its blocks.

    Entries that occur in some nonzero term link their row and column; the
    connected pieces of that bipartite graph are the blocks.  Each block is
    evaluated with its columns lined up against one perfect matching, so
    every block factor has a positive diagonal term; the overall sign is
    whatever makes the product match the minor.
    """
    rows = [M.row(p) for p in rows]
    cols = list(cols)
    det = minor_det(M, rows, cols)
    if det.is_zero():
        raise ValueError("cannot factor a zero minor")
    perms = saturating_bijections(M, rows, cols)
    edges = {(t, perm[t]) for perm in perms for t in range(len(rows))}
    # union-find over row slots 0..m-1 and column slots m..2m-1
    m = len(rows)
    parent = list(range(2 * m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, c in edges:
        parent[find(r)] = find(m + c)
    match = perms[0]
    blocks: dict = {}
    for t in range(m):
        blocks.setdefault(find(t), []).append(t)
    factors = []
    for slots in sorted(blocks.values()):
        brow = [rows[t] for t in slots]
        bcol = [cols[match[t]] for t in slots]
        factors.append(minor_det(M, brow, bcol))
    prod = ONE
    for f in factors:
        prod = prod * f
    if prod == det:
        sign = 1
    elif prod == -det:
        sign = -1
    else:  # pragma: no cover - would mean the block split is wrong
        raise AssertionError("block factors do not multiply back to the minor")
    return FactoredPolynomial.build(sign, factors)
