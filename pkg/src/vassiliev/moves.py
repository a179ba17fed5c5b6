"""Equivalent-diagram generation for invariance testing.

Braid words are rewritten with closure-preserving rules: far-apart generator
commutation, the braid relation in all sign variants that rewrite a length-3
window, free reduction of adjacent inverse pairs, and Markov
stabilization/destabilization.  Closures of all words reachable from a given
word present the same knot, so every invariant evaluator must be constant on
them.

Kink (R1) and finger (R2) insertions act directly on Gauss diagrams.
"""

from __future__ import annotations

import random

from .diagrams import (OVER, UNDER, GaussCodeError, GaussDiagram,
                       braid_closure_components, braid_closure_to_gauss)

RULES = ("commute", "yang-baxter", "free-reduce", "stabilize", "destabilize")


class BraidWord:
    """A braid word on a fixed number of strands."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters):
        strands = int(strands)
        letters = tuple(int(x) for x in letters)
        if strands < 1:
            raise GaussCodeError("strands must be >= 1")
        for letter in letters:
            if letter == 0 or abs(letter) >= strands:
                raise GaussCodeError("braid letter %d out of range for %d strands"
                                     % (letter, strands))
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    def closure_components(self) -> int:
        return braid_closure_components(self.letters, self.strands)

    def is_knot(self) -> bool:
        return self.closure_components() == 1

    def closure_gauss(self) -> GaussDiagram:
        return braid_closure_to_gauss(self.letters, self.strands)

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.letters == other.letters

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __repr__(self):
        return "BraidWord(%d, %s)" % (self.strands, list(self.letters))


def _yb_image(x, y, z):
    """Image of a braid-relation window, or None if the window is not one."""
    if abs(abs(x) - abs(y)) != 1:
        return None
    if x == z and (x > 0) == (y > 0):
        return (y, x, y)
    if x == -z:
        if (x > 0) == (y > 0):
            return (-y, x, y)
        return (y, -x, -y)
    return None


def applicable_sites(w: BraidWord, rule: str):
    """Sites where ``rule`` applies; the site vocabulary depends on the rule."""
    ls = w.letters
    if rule == "commute":
        return tuple(i for i in range(len(ls) - 1)
                     if abs(abs(ls[i]) - abs(ls[i + 1])) >= 2)
    if rule == "yang-baxter":
        return tuple(i for i in range(len(ls) - 2)
                     if _yb_image(ls[i], ls[i + 1], ls[i + 2]) is not None)
    if rule == "free-reduce":
        return tuple(i for i in range(len(ls) - 1) if ls[i] == -ls[i + 1])
    if rule == "stabilize":
        return (0, 1)  # append the new top generator, positive or negative
    if rule == "destabilize":
        top = w.strands - 1
        if (top >= 1 and ls and abs(ls[-1]) == top
                and sum(1 for x in ls if abs(x) == top) == 1):
            return (0,)
        return ()
    raise ValueError("unknown rule %r" % rule)


def braid_rewrite(w: BraidWord, rule: str, site: int) -> BraidWord:
    """Apply one closure-preserving rewrite at ``site`` (checked)."""
    if site not in applicable_sites(w, rule):
        raise GaussCodeError("rule %r not applicable at site %r" % (rule, site))
    ls = w.letters
    if rule == "commute":
        out = ls[:site] + (ls[site + 1], ls[site]) + ls[site + 2:]
        return BraidWord(w.strands, out)
    if rule == "yang-baxter":
        image = _yb_image(ls[site], ls[site + 1], ls[site + 2])
        return BraidWord(w.strands, ls[:site] + image + ls[site + 3:])
    if rule == "free-reduce":
        return BraidWord(w.strands, ls[:site] + ls[site + 2:])
    if rule == "stabilize":
        new = w.strands if site == 0 else -w.strands
        return BraidWord(w.strands + 1, ls + (new,))
    # destabilize
    return BraidWord(w.strands - 1, ls[:-1])


def random_equivalents(w: BraidWord, count: int, steps: int, seed: int):
    """Seeded list of Gauss diagrams of the same knot as the closure of ``w``.

    Each diagram is the closure of ``w`` after ``steps`` uniformly random
    applicable rewrites.  Identical seeds give identical output.
    """
    if not w.is_knot():
        raise GaussCodeError("closure of the braid word is not a knot")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        cur = w
        for _ in range(steps):
            options = [(rule, site) for rule in RULES
                       for site in applicable_sites(cur, rule)]
            rule, site = options[rng.randrange(len(options))]
            cur = braid_rewrite(cur, rule, site)
        out.append(cur.closure_gauss())
    return out


# -- moves on Gauss diagrams -------------------------------------------------

def _fresh_ids(g, count):
    base = max(g.signs, default=0)
    return tuple(base + i + 1 for i in range(count))


def r1_insert(g: GaussDiagram, position: int, sign: int,
              over_first: bool = True) -> GaussDiagram:
    """Insert a kink: an isolated chord at the given arc.

    ``position`` counts endpoint gaps from the basepoint (0..2n).
    """
    m = len(g.endpoints)
    if not 0 <= position <= m:
        raise GaussCodeError("position %d out of range" % position)
    (c,) = _fresh_ids(g, 1)
    block = ((c, OVER), (c, UNDER)) if over_first else ((c, UNDER), (c, OVER))
    endpoints = g.endpoints[:position] + block + g.endpoints[position:]
    signs = dict(g.signs)
    signs[c] = sign
    return GaussDiagram(endpoints, signs)


def r1_delete(g: GaussDiagram, crossing: int) -> GaussDiagram:
    """Remove an isolated chord (endpoints cyclically adjacent)."""
    p1, p2 = g.positions(crossing)
    m = len(g.endpoints)
    if not (p2 - p1 == 1 or (p1 == 0 and p2 == m - 1)):
        raise GaussCodeError("crossing %d is not an isolated kink" % crossing)
    endpoints = tuple(e for e in g.endpoints if e[0] != crossing)
    signs = {c: s for c, s in g.signs.items() if c != crossing}
    return GaussDiagram(endpoints, signs)


PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"


def r2_insert(g: GaussDiagram, arc1: int, arc2: int, variant: str) -> GaussDiagram:
    """Insert a cancelling pair of crossings across two arcs.

    One strand passes over the other twice; the two new crossings have
    opposite signs.  In the ``parallel`` variant the second arc reads the
    pair in the same order, in the ``antiparallel`` variant in reversed
    order.
    """
    m = len(g.endpoints)
    if not (0 <= arc1 <= m and 0 <= arc2 <= m):
        raise GaussCodeError("arc index out of range")
    if arc1 == arc2:
        raise GaussCodeError("the two arcs must be distinct")
    if variant not in (PARALLEL, ANTIPARALLEL):
        raise GaussCodeError("unknown R2 variant %r" % variant)
    x, y = _fresh_ids(g, 2)
    over_block = ((x, OVER), (y, OVER))
    if variant == PARALLEL:
        under_block = ((x, UNDER), (y, UNDER))
    else:
        under_block = ((y, UNDER), (x, UNDER))
    first_arc, first_block = (arc1, over_block) if arc1 < arc2 else (arc2, under_block)
    second_arc, second_block = (arc2, under_block) if arc1 < arc2 else (arc1, over_block)
    endpoints = (g.endpoints[:first_arc] + first_block
                 + g.endpoints[first_arc:second_arc] + second_block
                 + g.endpoints[second_arc:])
    signs = dict(g.signs)
    signs[x], signs[y] = 1, -1
    return GaussDiagram(endpoints, signs)


def r2_delete(g: GaussDiagram, x: int, y: int) -> GaussDiagram:
    """Remove a pair previously inserted by :func:`r2_insert` (checked)."""
    px = g.positions(x)
    py = g.positions(y)
    if g.signs[x] * g.signs[y] != -1:
        raise GaussCodeError("chords %d, %d do not have opposite signs" % (x, y))
    blocks = sorted([px[0], px[1], py[0], py[1]])
    pairs = {tuple(sorted((px[0], py[0]))), tuple(sorted((px[1], py[1])))}
    adjacent = all(b - a == 1 for a, b in pairs)
    if not adjacent:
        raise GaussCodeError("chords %d, %d are not an adjacent pair" % (x, y))
    same_role = (g.role_at(px[0]) == g.role_at(py[0])
                 and g.role_at(px[1]) == g.role_at(py[1]))
    if not same_role:
        raise GaussCodeError("chords %d, %d are not a cancelling pair" % (x, y))
    endpoints = tuple(e for e in g.endpoints if e[0] not in (x, y))
    signs = {c: s for c, s in g.signs.items() if c not in (x, y)}
    return GaussDiagram(endpoints, signs)
