"""Invariant evaluators: subdiagram pairings, local-data sums, derivatives.

Three independent formula families are implemented on abstract Gauss
diagrams:

* Gauss-sum (pairing) formulas for orders 2, 3 and 4: signed counts of
  subdiagrams matching fixed arrow patterns.
* Local-data sums for orders 2 and 3: sums over crossing pairs/triplets of
  terms built from first-passage data and writhe signs.
* A parameterized order-4 formula taking any order-4 weight system that
  vanishes on the all-crossing diagram.

Also here: the skein resolution of singular diagrams, derivative evaluation,
and symbols (restriction of an evaluator to fully singular diagrams, as a
function on chord diagrams).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, NamedTuple

from . import _tables
from .diagrams import (OVER, UNDER, SINGULAR, ChordDiagram, GaussDiagram,
                       SingularGaussDiagram)
from .patterns import HEAD, TAIL, ArrowPattern, PatternCombination, based_placements
from .weights import WeightSystem, builtin_w2, builtin_w3, check_weight_system, eval_weight

Evaluator = Callable[[GaussDiagram], Fraction]

_ZERO = Fraction(0)


# -- the pairing -------------------------------------------------------------

def _crossing_table(g: GaussDiagram):
    """Per crossing (ordered by first passage): positions, first-end bit, sign."""
    table = []
    for c in g.crossings:
        p1, p2 = g.positions(c)
        first = TAIL if g.first_role(c) == OVER else HEAD
        table.append((p1, p2, first, g.signs[c]))
    return table


def _order_sum(table, m, lookup):
    """Sum of ``coeff * sign product`` over m-subsets matching ``lookup``."""
    total = _ZERO
    if m == 0:
        return lookup.get((), _ZERO)
    n = len(table)
    if m > n:
        return total
    for combo in itertools.combinations(range(n), m):
        pairs = []
        for rank, ci in enumerate(combo):
            p1, p2, first, _ = table[ci]
            tok = 2 * rank + first
            pairs.append((p1, tok))
            pairs.append((p2, tok ^ 1))
        pairs.sort()
        coeff = lookup.get(tuple(tok for _, tok in pairs))
        if coeff:
            sign = 1
            for ci in combo:
                sign *= table[ci][3]
            total += coeff * sign
    return total


def pairing(comb: PatternCombination, g: GaussDiagram) -> Fraction:
    """Signed count of based subdiagrams of ``g`` matching the combination.

    A size-``m`` subset of crossings matches a based pattern iff its endpoint
    word (positions read from the basepoint, arrows directed over-to-under)
    equals the pattern word; it contributes the product of its writhe signs.
    """
    table = _crossing_table(g)
    return sum((_order_sum(table, m, lookup)
                for m, lookup in comb.by_order().items()), _ZERO)


# -- the built-in pattern combinations ---------------------------------------

_V2_COMB = PatternCombination([(Fraction(1), ArrowPattern.from_text(_tables.V2_PATTERN))])
_V3_COMB = PatternCombination.from_unbased(_tables.V3_GROUPS)
_V4_COMB = PatternCombination.from_unbased(_tables.V4_TERMS)

_V4W_CONSTRAINT = ChordDiagram(_tables.V4W_CONSTRAINT)
_V4W_GROUPS = tuple(
    (coeff, ChordDiagram(word), tuple(itertools.chain.from_iterable(
        based_placements(p) for p in pats)))
    for coeff, word, pats in _tables.V4W_GROUPS)


def v2_polyak_viro(g: GaussDiagram) -> Fraction:
    """Order-2 Gauss-sum invariant (single based two-arrow pattern)."""
    return pairing(_V2_COMB, g)


def v3_polyak_viro(g: GaussDiagram) -> Fraction:
    """Order-3 Gauss-sum invariant (triangle plus half path pattern)."""
    return pairing(_V3_COMB, g)


def v4_polyak_viro(g: GaussDiagram) -> Fraction:
    """Order-4 Gauss-sum invariant (sixteen-pattern combination)."""
    return pairing(_V4_COMB, g)


class WeightConstraintError(ValueError):
    """The supplied order-4 weight system is not admissible."""


def v4_new(g: GaussDiagram, w4: WeightSystem) -> Fraction:
    """Order-4 invariant parameterized by an admissible weight system.

    ``w4`` must have order 4, satisfy the one- and four-term relations, and
    vanish on the all-crossing diagram.  The defining property (checked by
    the symbol tests) is that the symbol of the resulting invariant is
    exactly ``w4``.
    """
    check_v4_weight(w4)
    terms = []
    for coeff, cdiag, pats in _V4W_GROUPS:
        factor = coeff * eval_weight(w4, cdiag)
        if factor:
            terms.extend((factor, p) for p in pats)
    return pairing(PatternCombination(terms), g)


def check_v4_weight(w4: WeightSystem):
    """Raise :class:`WeightConstraintError` unless ``w4`` is admissible."""
    if w4.order != 4:
        raise WeightConstraintError("weight system must have order 4")
    if check_weight_system(w4):
        raise WeightConstraintError(
            "weight system violates one- or four-term relations")
    if eval_weight(w4, _V4W_CONSTRAINT):
        raise WeightConstraintError(
            "weight system must vanish on the all-crossing diagram")


def admissible_builtin_w4():
    """The built-in order-4 systems accepted by :func:`v4_new`."""
    from .weights import builtin_w4
    out = []
    for i in (1, 2, 3):
        w = builtin_w4(i)
        try:
            check_v4_weight(w)
        except WeightConstraintError:
            continue
        out.append(w)
    return tuple(out)


# -- local crossing data and the pair/triplet sums ---------------------------

class CrossingLocalData(NamedTuple):
    delta: int          # 0 if the first passage is on the over-branch, else 1
    epsilon: int        # local writhe sign
    first_role: str     # OVER or UNDER


def local_data(g: GaussDiagram):
    """Per-crossing first-passage data, read from the basepoint."""
    out = {}
    for c in g.crossings:
        role = g.first_role(c)
        out[c] = CrossingLocalData(0 if role == OVER else 1, g.signs[c], role)
    return out


def _subset_involution(g, ids):
    """Involution word of the chord diagram spanned by the given crossings."""
    positions = sorted(p for c in ids for p in g.positions(c))
    index = {p: i for i, p in enumerate(positions)}
    word = [0] * len(positions)
    for c in ids:
        p, q = g.positions(c)
        word[index[p]], word[index[q]] = index[q], index[p]
    return tuple(word)


def _weight_memo(builtin):
    memo = {}

    def value(word):
        v = memo.get(word)
        if v is None:
            v = eval_weight(builtin, ChordDiagram(word))
            memo[word] = v
        return v

    return value


_w2_of = _weight_memo(builtin_w2())
_w3_of = _weight_memo(builtin_w3())


def v2_lannes(g: GaussDiagram) -> Fraction:
    """Order-2 local-data sum over unordered crossing pairs.

    Each pair contributes ``(-1)^(dx+dy) * W2(pair) * ex*ey *
    [dx(1-dy) + dy(1-dx)]`` and the total is halved.  W2 is the built-in
    order-2 weight system on the pair's chord diagram.
    """
    data = local_data(g)
    ids = g.crossings
    total = _ZERO
    for x, y in itertools.combinations(ids, 2):
        dx, ex = data[x].delta, data[x].epsilon
        dy, ey = data[y].delta, data[y].epsilon
        bracket = dx * (1 - dy) + dy * (1 - dx)
        if not bracket:
            continue
        w = _w2_of(_subset_involution(g, (x, y)))
        if w:
            total += (-1) ** (dx + dy) * w * ex * ey * bracket
    return total / 2


def v3_lannes(g: GaussDiagram) -> Fraction:
    """Order-3 local-data sum over crossing triplets.

    Triplets are taken in first-passage order ``x, y, z`` (the bracket is not
    symmetric); each contributes ``(-1)^(dx+dy+dz) * W3(triplet) *
    ex*ey*ez * [dy(1-dx)(1-dz) - dx*dz(1-dy)]`` and the total is halved.
    """
    data = local_data(g)
    ids = g.crossings  # already in first-passage order
    total = _ZERO
    for x, y, z in itertools.combinations(ids, 3):
        dx, dy, dz = data[x].delta, data[y].delta, data[z].delta
        bracket = dy * (1 - dx) * (1 - dz) - dx * dz * (1 - dy)
        if not bracket:
            continue
        w = _w3_of(_subset_involution(g, (x, y, z)))
        if w:
            eps = data[x].epsilon * data[y].epsilon * data[z].epsilon
            total += (-1) ** (dx + dy + dz) * w * eps * bracket
    return total / 2


# -- skein resolution, derivatives, symbols ----------------------------------

def resolve(sd: SingularGaussDiagram):
    """The ``2^k`` signed resolutions of a singular diagram.

    A positive resolution of a singular chord makes its first-traversed
    branch the over-branch and the crossing positive; the negative resolution
    swaps the roles and the sign.  The term sign is the product of the
    per-chord resolution signs.
    """
    sing = sd.singular_ids
    out = []
    for bits in itertools.product((0, 1), repeat=len(sing)):
        roles = {}
        signs = dict(sd.signs)
        term = 1
        for c, bit in zip(sing, bits):
            first, second = sd.singular_positions(c)
            if bit == 0:
                roles[first], roles[second] = OVER, UNDER
                signs[c] = 1
            else:
                roles[first], roles[second] = UNDER, OVER
                signs[c] = -1
                term = -term
        endpoints = tuple((c, roles.get(i, r))
                          for i, (c, r) in enumerate(sd.endpoints))
        out.append((term, GaussDiagram(endpoints, signs)))
    return out


def derivative_eval(f: Evaluator, sd: SingularGaussDiagram) -> Fraction:
    """Alternating sum of ``f`` over all resolutions of ``sd``."""
    return sum((sign * f(g) for sign, g in resolve(sd)), _ZERO)


def realize_chord_diagram(d: ChordDiagram) -> SingularGaussDiagram:
    """A singular diagram with exactly the chords of ``d``, no regular crossings."""
    word = d.word
    chord_id = {}
    endpoints = []
    for i in range(len(word)):
        key = min(i, word[i])
        if key not in chord_id:
            chord_id[key] = len(chord_id) + 1
        endpoints.append((chord_id[key], SINGULAR))
    return SingularGaussDiagram(endpoints, {})


def symbol_eval(f: Evaluator, n: int, d: ChordDiagram) -> Fraction:
    """Value of the ``n``-th symbol of ``f`` on an order-``n`` chord diagram.

    For an evaluator of order at most ``n`` this depends only on ``d``, not
    on the chosen singular realization.
    """
    if d.order != n:
        raise ValueError("diagram has order %d, expected %d" % (d.order, n))
    return derivative_eval(f, realize_chord_diagram(d))
