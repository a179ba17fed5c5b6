"""Arrow patterns: the left-hand arguments of the subdiagram pairing.

A based arrow pattern is the linear sequence of arrow endpoints read from its
basepoint; tokens are ``(arrow, end)`` with arrows numbered by first
appearance and ends being tail (over-passage) or head (under-passage).  Two
based diagrams are isomorphic iff these words are equal, so matching is a
tuple comparison.

Patterns drawn without a basepoint are cyclic words; they stand for the sum
of their distinct based readings, i.e. a subdiagram matches iff it is
cyclically isomorphic to the pattern.
"""

from __future__ import annotations

from fractions import Fraction

TAIL = 0
HEAD = 1


def _parse_word(text):
    tokens = []
    for t in text.split():
        end = {"t": TAIL, "h": HEAD}.get(t[0])
        if end is None:
            raise ValueError("pattern token must start with 't' or 'h': %r" % t)
        tokens.append(2 * int(t[1:]) + end)
    return tuple(tokens)


def _renumber(tokens):
    """Relabel arrows by first appearance, keeping tail/head bits."""
    rank = {}
    out = []
    for tok in tokens:
        arrow, end = tok >> 1, tok & 1
        if arrow not in rank:
            rank[arrow] = len(rank)
        out.append(2 * rank[arrow] + end)
    return tuple(out)


def _validate(word):
    ends = {}
    for tok in word:
        ends.setdefault(tok >> 1, []).append(tok & 1)
    for arrow, es in ends.items():
        if sorted(es) != [TAIL, HEAD]:
            raise ValueError("arrow %d needs exactly one tail and one head" % arrow)
    if word != _renumber(word):
        raise ValueError("arrows must be numbered by first appearance")


class ArrowPattern:
    """Based arrow diagram encoded as its endpoint word."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        _validate(word)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("ArrowPattern is immutable")

    @classmethod
    def from_text(cls, text):
        return cls(_parse_word(text))

    @property
    def order(self):
        return len(self.word) // 2

    def __eq__(self, other):
        if not isinstance(other, ArrowPattern):
            return NotImplemented
        return self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        toks = " ".join("%s%d" % ("th"[tok & 1], tok >> 1) for tok in self.word)
        return "ArrowPattern(%r)" % toks


def based_placements(text_or_word):
    """Distinct based readings of an unbased (cyclic) pattern."""
    cyc = _parse_word(text_or_word) if isinstance(text_or_word, str) else tuple(text_or_word)
    m = len(cyc)
    seen = []
    for r in range(m):
        word = _renumber(cyc[r:] + cyc[:r])
        if word not in (p.word for p in seen):
            seen.append(ArrowPattern(word))
    return tuple(seen)


class PatternCombination:
    """Rational combination of based arrow patterns (orders may mix)."""

    __slots__ = ("terms", "_tables")

    def __init__(self, terms):
        clean = []
        for coeff, pat in terms:
            coeff = Fraction(coeff)
            if not isinstance(pat, ArrowPattern):
                pat = ArrowPattern.from_text(pat) if isinstance(pat, str) else ArrowPattern(pat)
            if coeff:
                clean.append((coeff, pat))
        object.__setattr__(self, "terms", tuple(clean))
        object.__setattr__(self, "_tables", None)

    def __setattr__(self, name, value):
        raise AttributeError("PatternCombination is immutable")

    @classmethod
    def from_unbased(cls, groups):
        """Build from ``(coeff, cyclic word)`` pairs, expanding placements."""
        terms = []
        for coeff, cyc in groups:
            for pat in based_placements(cyc):
                terms.append((coeff, pat))
        return cls(terms)

    def by_order(self):
        """Per-order lookup tables ``{order: {word: coefficient}}``.

        Coefficients of coinciding based words add up.
        """
        if self._tables is None:
            tables = {}
            for coeff, pat in self.terms:
                table = tables.setdefault(pat.order, {})
                table[pat.word] = table.get(pat.word, Fraction(0)) + coeff
            tables = {m: {w: c for w, c in t.items() if c} for m, t in tables.items()}
            object.__setattr__(self, "_tables", {m: t for m, t in tables.items() if t})
        return self._tables

    def scaled(self, factor):
        factor = Fraction(factor)
        return PatternCombination((factor * c, p) for c, p in self.terms)

    def __add__(self, other):
        return PatternCombination(self.terms + other.terms)

    def __repr__(self):
        return "PatternCombination(%d terms)" % len(self.terms)
