"""Chord-diagram algebra over the rationals.

Weight systems are rational-valued functions on order-``n`` chord diagrams
subject to the one-term relation (zero on any diagram with an isolated chord)
and the four-term relations.  All linear algebra here is exact rational
Gaussian elimination; no floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import _tables
from .diagrams import ChordDiagram, enumerate_chord_diagrams


class WeightSystem:
    """Exact-rational valuation on canonical chord diagrams of one order.

    Diagrams absent from ``values`` are implicitly 0.
    """

    __slots__ = ("order", "values", "name")

    def __init__(self, order, values, name=""):
        vals = {}
        for d, v in values.items():
            if not isinstance(d, ChordDiagram):
                d = ChordDiagram(d)
            if d.order != order:
                raise ValueError("diagram of order %d in order-%d weight system"
                                 % (d.order, order))
            v = Fraction(v)
            if v:
                vals[d] = v
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("WeightSystem is immutable")

    def __call__(self, d: ChordDiagram) -> Fraction:
        return eval_weight(self, d)

    def __eq__(self, other):
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return self.order == other.order and self.values == other.values

    def __hash__(self):
        return hash((self.order, frozenset(self.values.items())))

    def __repr__(self):
        return "WeightSystem(order=%d, name=%r, %d nonzero values)" % (
            self.order, self.name, len(self.values))


def eval_weight(w: WeightSystem, d: ChordDiagram) -> Fraction:
    """Stored value of ``w`` on ``d``; 0 if absent."""
    if d.order != w.order:
        raise ValueError("order mismatch: weight system has order %d, diagram %d"
                         % (w.order, d.order))
    return w.values.get(d, Fraction(0))


class FourTermRelation:
    """Alternating four-diagram identity; ``sum(coeff * W(d)) == 0``.

    ``terms`` is the 4-tuple of ``(diagram, coeff)`` with coefficients
    ``(+1, -1, +1, -1)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        terms = tuple((d, int(c)) for d, c in terms)
        if len(terms) != 4 or tuple(c for _, c in terms) != (1, -1, 1, -1):
            raise ValueError("a four-term relation has coefficients (+1,-1,+1,-1)")
        orders = {d.order for d, _ in terms}
        if len(orders) != 1:
            raise ValueError("all four diagrams must have the same order")
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("FourTermRelation is immutable")

    @property
    def order(self):
        return self.terms[0][0].order

    def key(self):
        # The two halves may be listed in either order; normalize for dedup.
        t = tuple((d.word, c) for d, c in self.terms)
        return min(t, t[2:] + t[:2])

    def evaluate(self, w: WeightSystem) -> Fraction:
        return sum((c * eval_weight(w, d) for d, c in self.terms), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, FourTermRelation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FourTermRelation(%s)" % (self.terms,)


def one_term_diagrams(n: int):
    """Canonical order-``n`` diagrams containing at least one isolated chord."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return {d for d in enumerate_chord_diagrams(n) if d.has_isolated_chord()}


def _reinsert(word, p, anchor, after):
    """Remove point ``p`` and re-insert its chord end next to ``anchor``."""
    order = []
    for x in range(len(word)):
        if x == p:
            continue
        if x == anchor and not after:
            order.append(-1)
        order.append(x)
        if x == anchor and after:
            order.append(-1)
    idx = {x: i for i, x in enumerate(order)}
    partner = word[p]
    out = [0] * len(order)
    for i, x in enumerate(order):
        if x == -1:
            out[i] = idx[partner]
        elif word[x] == p:
            out[i] = idx[-1]
        else:
            out[i] = idx[word[x]]
    return ChordDiagram(out)


def four_term_relations(n: int):
    """All four-term relations of order ``n`` (deduplicated).

    Each relation is generated from a diagram with a chord end sitting
    immediately clockwise of an end of another chord; the moving end then
    takes the four positions adjacent to the fixed chord's two ends, with
    alternating signs.
    """
    if n < 2:
        raise ValueError("order must be >= 2")
    rels = {}
    for d in sorted(enumerate_chord_diagrams(n)):
        w = d.word
        m = 2 * n
        for p in range(m):
            q = (p + 1) % m
            if w[p] == q:
                continue  # both ends belong to one chord
            terms = []
            sign = 1
            for anchor in (q, w[q]):
                for after in (False, True):
                    terms.append((_reinsert(w, p, anchor, after), sign))
                    sign = -sign
            rel = FourTermRelation(terms)
            rels[rel.key()] = rel
    return set(rels.values())


# -- exact linear algebra ----------------------------------------------------

def _rref(rows):
    """In-place reduced row echelon form; returns pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _constraint_matrix(n):
    cols = sorted(enumerate_chord_diagrams(n))
    index = {d: i for i, d in enumerate(cols)}
    rows = []
    if n >= 1:
        for d in sorted(one_term_diagrams(n)):
            row = [Fraction(0)] * len(cols)
            row[index[d]] = Fraction(1)
            rows.append(row)
    if n >= 2:
        for rel in sorted(four_term_relations(n), key=lambda r: r.key()):
            row = [Fraction(0)] * len(cols)
            for d, c in rel.terms:
                row[index[d]] += c
            if any(row):
                rows.append(row)
    return cols, rows


def weight_space_dimension(n: int) -> int:
    """Dimension over Q of the space of order-``n`` weight systems."""
    if n < 0:
        raise ValueError("order must be >= 0")
    cols, rows = _constraint_matrix(n)
    if not rows:
        return len(cols)
    pivots = _rref(rows)
    return len(cols) - len(pivots)


def _primitive(vec):
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    from math import gcd
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def weight_space_basis(n: int):
    """A basis of the order-``n`` weight-system space."""
    cols, rows = _constraint_matrix(n)
    if not rows:
        pivots = []
    else:
        pivots = _rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(len(cols)) if c not in pivot_set]
    basis = []
    for k, fc in enumerate(free):
        vec = [Fraction(0)] * len(cols)
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        vec = _primitive(vec)
        values = {cols[i]: v for i, v in enumerate(vec) if v}
        basis.append(WeightSystem(n, values, name="w%d_basis%d" % (n, k)))
    return basis


class Violation:
    """One failed relation in a weight-system check."""

    __slots__ = ("kind", "detail", "value")

    def __init__(self, kind, detail, value):
        self.kind = kind
        self.detail = detail
        self.value = value

    def __repr__(self):
        return "Violation(%s, %r, value=%s)" % (self.kind, self.detail, self.value)


def check_weight_system(w: WeightSystem):
    """Empty list iff ``w`` satisfies every 1-term and 4-term relation."""
    report = []
    if w.order >= 1:
        for d in sorted(one_term_diagrams(w.order)):
            v = eval_weight(w, d)
            if v:
                report.append(Violation("one-term", d, v))
    if w.order >= 2:
        for rel in sorted(four_term_relations(w.order), key=lambda r: r.key()):
            v = rel.evaluate(w)
            if v:
                report.append(Violation("four-term", rel, v))
    return report


def in_span(systems, target) -> bool:
    """Exact test that ``target`` is a rational combination of ``systems``."""
    diagrams = sorted(set(itertools.chain(target.values,
                                          *(s.values for s in systems))))
    if not diagrams:
        return True
    rows = [[eval_weight(s, d) for d in diagrams] for s in systems]
    trow = [eval_weight(target, d) for d in diagrams]
    base_rank = len(_rref([list(r) for r in rows])) if rows else 0
    ext_rank = len(_rref([list(r) for r in rows] + [list(trow)]))
    return ext_rank == base_rank


def stacked_rank(systems) -> int:
    """Rank of the value matrix of several same-order weight systems."""
    diagrams = sorted(set(itertools.chain(*(s.values for s in systems))))
    if not diagrams:
        return 0
    rows = [[eval_weight(s, d) for d in diagrams] for s in systems]
    return len(_rref(rows))


# -- built-in weight systems -------------------------------------------------

def builtin_w2() -> WeightSystem:
    """Order-2: 1 on the crossed diagram, 0 on the parallel one."""
    return WeightSystem(2, dict(_tables.W2_VALUES), name="w2")


def builtin_w3() -> WeightSystem:
    """Order-3: 2 on the triangle diagram, 1 on the path diagram, else 0."""
    return WeightSystem(3, dict(_tables.W3_VALUES), name="w3")


def builtin_w4(i: int) -> WeightSystem:
    """The ``i``-th built-in order-4 weight system, i in {1, 2, 3}."""
    name = "w4_%d" % i
    if name not in _tables.W4_ROWS:
        raise ValueError("no built-in order-4 weight system %r" % name)
    row = _tables.W4_ROWS[name]
    values = {ChordDiagram(col): Fraction(v)
              for col, v in zip(_tables.W4_COLUMNS, row)}
    return WeightSystem(4, values, name=name)


def all_builtin_weight_systems():
    return (builtin_w2(), builtin_w3(), builtin_w4(1), builtin_w4(2), builtin_w4(3))


# -- serialization -----------------------------------------------------------

def weight_system_to_lines(w: WeightSystem):
    """Serialize as lines ``<involution word> = p/q`` (zero entries omitted)."""
    lines = []
    for d in sorted(w.values):
        v = w.values[d]
        val = str(v.numerator) if v.denominator == 1 else "%d/%d" % (
            v.numerator, v.denominator)
        lines.append("%s = %s" % (d.serialize(), val))
    return lines


def weight_system_from_lines(lines, name="") -> WeightSystem:
    """Parse the serialization produced by :func:`weight_system_to_lines`."""
    values = {}
    order = None
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("bad weight-system line: %r" % raw)
        left, right = line.split("=", 1)
        word = tuple(int(t) for t in left.split())
        d = ChordDiagram(word)
        if order is None:
            order = d.order
        elif d.order != order:
            raise ValueError("mixed orders in weight-system file")
        values[d] = values.get(d, Fraction(0)) + Fraction(right.strip())
    if order is None:
        raise ValueError("empty weight-system file")
    return WeightSystem(order, values, name=name)
