"""Combinatorial knot diagrams: Gauss codes, arrow diagrams and chord diagrams.

A knot diagram is stored purely combinatorially as a *based signed Gauss
diagram*: the cyclic word of crossing passages read along the knot from a
marked basepoint, where every crossing occurs twice (once on the over-branch,
once on the under-branch) and carries a local writhe sign.  Nothing here
knows about planar embeddings; all downstream formulas are defined on these
abstract diagrams.

Text format: whitespace-separated tokens ``O<id><sign>`` / ``U<id><sign>``,
e.g. ``"O1+ U2+ O3+ U1+ O2+ U3+"`` is a right trefoil.  The basepoint sits
immediately before the first token.

Chord diagrams (unsigned, undirected, no basepoint) are stored as
fixed-point-free involutions of ``{0, ..., 2n-1}`` in a canonical rotation,
so equality is exactly rotation-equivalence.  Reflections are *not*
identified.
"""

from __future__ import annotations

import itertools
import re

OVER = "O"
UNDER = "U"
SINGULAR = "X"


class GaussCodeError(ValueError):
    """Malformed Gauss code, braid word, or diagram data."""


_TOKEN_RE = re.compile(r"([OU])([1-9][0-9]*)([+-])\Z")


class GaussDiagram:
    """Based arrow diagram of a knot.

    ``endpoints`` is the tuple of ``(crossing id, role)`` pairs read from
    the basepoint along the orientation; ``signs`` maps each crossing id to
    its local writhe ``+1``/``-1``.  Instances are immutable value objects.
    """

    __slots__ = ("endpoints", "signs", "_pos", "_hash")

    def __init__(self, endpoints, signs):
        endpoints = tuple((int(c), r) for c, r in endpoints)
        signs = {int(c): int(s) for c, s in signs.items()}
        pos = {}
        roles = {}
        for i, (c, r) in enumerate(endpoints):
            if r not in (OVER, UNDER):
                raise GaussCodeError("bad role %r at endpoint %d" % (r, i))
            pos.setdefault(c, []).append(i)
            roles.setdefault(c, []).append(r)
        for c, rs in roles.items():
            if sorted(rs) != [OVER, UNDER]:
                raise GaussCodeError(
                    "crossing %d must appear once as over and once as under" % c)
        if set(signs) != set(pos):
            raise GaussCodeError("signs must cover exactly the crossing ids")
        for c, s in signs.items():
            if s not in (1, -1):
                raise GaussCodeError("sign of crossing %d must be +1 or -1" % c)
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "_pos", {c: tuple(ps) for c, ps in pos.items()})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GaussDiagram is immutable")

    @property
    def n(self):
        """Number of crossings."""
        return len(self._pos)

    @property
    def crossings(self):
        """Crossing ids ordered by first passage from the basepoint."""
        return tuple(sorted(self._pos, key=lambda c: self._pos[c][0]))

    def positions(self, c):
        """The two endpoint positions of crossing ``c`` (increasing)."""
        return self._pos[c]

    def role_at(self, i):
        return self.endpoints[i][1]

    def first_role(self, c):
        """Role (over/under) of the first passage through crossing ``c``."""
        return self.endpoints[self._pos[c][0]][1]

    def serialize(self) -> str:
        return " ".join("%s%d%s" % (r, c, "+" if self.signs[c] > 0 else "-")
                        for c, r in self.endpoints)

    def mirror(self) -> "GaussDiagram":
        """Diagram of the mirror-image knot: roles swapped, signs negated."""
        flipped = tuple((c, UNDER if r == OVER else OVER) for c, r in self.endpoints)
        return GaussDiagram(flipped, {c: -s for c, s in self.signs.items()})

    def shift_basepoint(self, offset: int) -> "GaussDiagram":
        """Move the basepoint past ``offset`` endpoints along the orientation."""
        m = len(self.endpoints)
        if m == 0:
            return self
        offset %= m
        return GaussDiagram(self.endpoints[offset:] + self.endpoints[:offset],
                            self.signs)

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.endpoints == other.endpoints and self.signs == other.signs

    def __hash__(self):
        if self._hash is None:
            h = hash((self.endpoints, tuple(sorted(self.signs.items()))))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return "GaussDiagram(%r)" % self.serialize()


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a signed Gauss code; the empty string is the unknot.

    Raises :class:`GaussCodeError` (mentioning the offending token position)
    on malformed tokens, duplicate roles, or sign mismatches.
    """
    tokens = text.split()
    endpoints = []
    signs = {}
    seen_roles = {}
    for i, tok in enumerate(tokens):
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise GaussCodeError("malformed token %r at position %d" % (tok, i))
        role, ident, sign = m.group(1), int(m.group(2)), (1 if m.group(3) == "+" else -1)
        if role in seen_roles.get(ident, ()):
            raise GaussCodeError(
                "duplicate role %s for crossing %d at token %d" % (role, ident, i))
        seen_roles.setdefault(ident, []).append(role)
        if ident in signs and signs[ident] != sign:
            raise GaussCodeError(
                "sign mismatch for crossing %d at token %d" % (ident, i))
        signs[ident] = sign
        endpoints.append((ident, role))
    if len(endpoints) % 2 != 0:
        raise GaussCodeError("odd number of tokens (%d)" % len(endpoints))
    for ident, roles in seen_roles.items():
        if len(roles) != 2:
            raise GaussCodeError("crossing %d appears only once" % ident)
    return GaussDiagram(endpoints, signs)


def parse_braid_text(text: str):
    """Parse ``"braid <strands>: i1 i2 ... ik"`` into ``(strands, letters)``."""
    m = re.match(r"\s*braid\s+([0-9]+)\s*:(.*)\Z", text, re.DOTALL)
    if m is None:
        raise GaussCodeError("braid text must look like 'braid <strands>: i1 i2 ...'")
    strands = int(m.group(1))
    try:
        letters = tuple(int(t) for t in m.group(2).split())
    except ValueError as exc:
        raise GaussCodeError("bad braid letter: %s" % exc) from None
    return strands, letters


def braid_permutation(word, strands):
    """Permutation of strand positions induced by the braid word."""
    perm = list(range(strands))
    for letter in word:
        i = abs(letter) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def braid_closure_components(word, strands) -> int:
    """Number of components of the standard closure."""
    perm = braid_permutation(word, strands)
    seen = [False] * strands
    cycles = 0
    for s in range(strands):
        if not seen[s]:
            cycles += 1
            t = s
            while not seen[t]:
                seen[t] = True
                t = perm[t]
    return cycles


def braid_closure_to_gauss(word, strands: int) -> GaussDiagram:
    """Gauss diagram of the closure of a braid word.

    Generator ``i`` (positive) crosses strand position ``i`` over position
    ``i+1``; negative letters are the inverse crossings.  The basepoint sits
    on strand 1 just below the braid.  The closure must be a knot.
    """
    word = tuple(int(x) for x in word)
    if strands < 1:
        raise GaussCodeError("strands must be >= 1")
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise GaussCodeError("braid letter %d out of range for %d strands"
                                 % (letter, strands))
    if braid_closure_components(word, strands) != 1:
        raise GaussCodeError("closure has more than one component")

    endpoints = []
    signs = {}
    pos = 1  # current strand position, 1-based
    for _ in range(strands):  # the closure passes through the braid once per strand
        for idx, letter in enumerate(word):
            i = abs(letter)
            if pos == i or pos == i + 1:
                cid = idx + 1
                if letter > 0:
                    role = OVER if pos == i else UNDER
                else:
                    role = OVER if pos == i + 1 else UNDER
                endpoints.append((cid, role))
                signs[cid] = 1 if letter > 0 else -1
                pos = i + 1 if pos == i else i
        # top of the braid closes around to the bottom at the same position
    return GaussDiagram(endpoints, signs)


def mirror(g: GaussDiagram) -> GaussDiagram:
    return g.mirror()


def shift_basepoint(g: GaussDiagram, offset: int) -> GaussDiagram:
    return g.shift_basepoint(offset)


def _canonical_involution(word):
    m = len(word)
    if m == 0:
        return ()
    best = None
    for r in range(m):
        cand = tuple((word[(i + r) % m] - r) % m for i in range(m))
        if best is None or cand < best:
            best = cand
    return best


class ChordDiagram:
    """``n`` chords on an oriented circle, up to rotation.

    Stored as the involution word ``w`` with ``w[i]`` the partner of
    position ``i``, in the lexicographically minimal rotation.  Two
    diagrams compare equal iff they are rotation-equivalent.
    """

    __slots__ = ("word",)

    def __init__(self, pairing):
        word = tuple(int(x) for x in pairing)
        m = len(word)
        if m % 2 != 0:
            raise ValueError("involution word must have even length")
        for i, j in enumerate(word):
            if not 0 <= j < m or j == i or word[j] != i:
                raise ValueError("not a fixed-point-free involution: %r" % (word,))
        object.__setattr__(self, "word", _canonical_involution(word))

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    @property
    def order(self):
        return len(self.word) // 2

    def chords(self):
        """Chords as ``(i, j)`` pairs with ``i < j``."""
        return tuple((i, j) for i, j in enumerate(self.word) if i < j)

    def crossing_pairs(self):
        """Pairs of chords whose endpoints interleave on the circle."""
        ch = self.chords()
        out = []
        for (a, b), (c, d) in itertools.combinations(ch, 2):
            if (a < c < b) != (a < d < b):
                out.append(((a, b), (c, d)))
        return tuple(out)

    def has_isolated_chord(self):
        """True if some chord's endpoints are cyclically adjacent."""
        m = len(self.word)
        return any((i + 1) % m == self.word[i] for i in range(m))

    def rotated(self, r):
        """The same diagram re-read starting ``r`` positions later."""
        m = len(self.word)
        return ChordDiagram(tuple((self.word[(i + r) % m] - r) % m
                                  for i in range(m)))

    def serialize(self) -> str:
        return " ".join(str(x) for x in self.word)

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other):
        return (self.order, self.word) < (other.order, other.word)

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return "ChordDiagram(%s)" % list(self.word)


def canonicalize(cd: ChordDiagram) -> ChordDiagram:
    """Canonical representative; idempotent (the constructor canonicalizes)."""
    return ChordDiagram(cd.word)


def fixed_point_free_involutions(m):
    """Yield all involution words on ``m`` points (``m`` even)."""
    if m == 0:
        yield ()
        return

    def rec(remaining, word):
        if not remaining:
            yield tuple(word)
            return
        i = remaining[0]
        for j in remaining[1:]:
            word[i], word[j] = j, i
            rest = [x for x in remaining[1:] if x != j]
            yield from rec(rest, word)
        word[i] = -1

    yield from rec(list(range(m)), [-1] * m)


def enumerate_chord_diagrams(n: int):
    """All canonical chord diagrams of order ``n``, as a set."""
    if n < 0:
        raise ValueError("order must be >= 0")
    return {ChordDiagram(w) for w in fixed_point_free_involutions(2 * n)}


class SingularGaussDiagram:
    """Gauss diagram with some chords marked singular (double points).

    Singular chords appear twice with role :data:`SINGULAR` and carry no
    sign; removing them must leave a valid :class:`GaussDiagram`.
    """

    __slots__ = ("endpoints", "signs", "_spos")

    def __init__(self, endpoints, signs):
        endpoints = tuple((int(c), r) for c, r in endpoints)
        signs = {int(c): int(s) for c, s in signs.items()}
        spos = {}
        regular = []
        for i, (c, r) in enumerate(endpoints):
            if r == SINGULAR:
                spos.setdefault(c, []).append(i)
            else:
                regular.append((c, r))
        for c, ps in spos.items():
            if len(ps) != 2:
                raise GaussCodeError("singular chord %d must appear exactly twice" % c)
            if c in signs:
                raise GaussCodeError("singular chord %d must not carry a sign" % c)
        GaussDiagram(regular, signs)  # validates the regular part
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "_spos", {c: tuple(ps) for c, ps in spos.items()})

    def __setattr__(self, name, value):
        raise AttributeError("SingularGaussDiagram is immutable")

    @property
    def k(self):
        """Number of singular chords (double points)."""
        return len(self._spos)

    @property
    def singular_ids(self):
        """Singular chord ids ordered by first occurrence."""
        return tuple(sorted(self._spos, key=lambda c: self._spos[c][0]))

    def singular_positions(self, c):
        return self._spos[c]

    def regular_part(self) -> GaussDiagram:
        return GaussDiagram(
            tuple((c, r) for c, r in self.endpoints if r != SINGULAR), self.signs)

    def __eq__(self, other):
        if not isinstance(other, SingularGaussDiagram):
            return NotImplemented
        return self.endpoints == other.endpoints and self.signs == other.signs

    def __hash__(self):
        return hash((self.endpoints, tuple(sorted(self.signs.items()))))

    def __repr__(self):
        toks = []
        for c, r in self.endpoints:
            if r == SINGULAR:
                toks.append("%s%d" % (SINGULAR, c))
            else:
                toks.append("%s%d%s" % (r, c, "+" if self.signs[c] > 0 else "-"))
        return "SingularGaussDiagram(%r)" % " ".join(toks)


def chord_diagram_of(sd: SingularGaussDiagram) -> ChordDiagram:
    """Chord diagram spanned by the singular chords only.

    Basepoint, regular crossings, and all signs are forgotten; positions are
    induced by the circular order of the double-point pre-images.
    """
    positions = [i for i, (c, r) in enumerate(sd.endpoints) if r == SINGULAR]
    index = {p: i for i, p in enumerate(positions)}
    word = [0] * len(positions)
    for c in sd.singular_ids:
        p, q = sd.singular_positions(c)
        word[index[p]] = index[q]
        word[index[q]] = index[p]
    return ChordDiagram(word)
