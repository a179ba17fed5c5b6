"""Hand-transcribed diagram tables: built-in weight systems and arrow patterns.

Everything in this module was read off small circle pictures and is recorded
here once, away from any algorithm, so a transcription slip has exactly one
place to be fixed.  Conventions:

* A chord diagram is an involution word: position ``i`` pairs with ``word[i]``,
  positions increasing counterclockwise.
* An arrow pattern is a token string like ``"h0 t1 t0 h1"``: the endpoint
  sequence around the circle, ``t``/``h`` marking an arrow's tail (the
  over-passage) and head (the under-passage), arrows numbered by first
  appearance.  Based patterns read from the basepoint; unbased patterns are
  cyclic words whose starting point is irrelevant.

The value tables below are cross-checked by tests: every built-in weight
system must satisfy all one-term and four-term relations, and the order-4
formulas must reproduce their weight systems as symbols.
"""

from fractions import Fraction

# ---------------------------------------------------------------------------
# Order-2 and order-3 chord diagrams used by built-in weight systems.

CD2_CROSSED = (2, 3, 0, 1)     # the two chords interleave
CD2_PARALLEL = (1, 0, 3, 2)    # the two chords are disjoint

CD3_TRIANGLE = (3, 4, 5, 0, 1, 2)  # three pairwise-crossing chords
CD3_PATH = (2, 4, 0, 5, 1, 3)      # middle chord crosses the two others

# Built-in order-2 weight system: 1 on the crossed diagram, 0 elsewhere.
W2_VALUES = {CD2_CROSSED: Fraction(1)}

# Built-in order-3 weight system: 2 on the triangle, 1 on the path, 0 elsewhere.
W3_VALUES = {CD3_TRIANGLE: Fraction(2), CD3_PATH: Fraction(1)}

# ---------------------------------------------------------------------------
# The seven order-4 chord diagrams heading the built-in value table.  They are
# exactly the order-4 diagrams without an isolated chord, identified by their
# chord-crossing structure.

CD4_TWO_CROSSED_PAIRS = (6, 7, 4, 5, 2, 3, 0, 1)   # two crossing pairs, side by side
CD4_STAR = (4, 7, 6, 5, 0, 3, 2, 1)                # one chord crossing three parallel ones
CD4_CYCLE = (3, 6, 5, 0, 7, 2, 1, 4)               # crossing graph is a 4-cycle
CD4_PATH = (2, 4, 0, 6, 1, 7, 3, 5)                # crossing graph is a path
CD4_TRIANGLE_PLUS = (4, 7, 5, 6, 0, 2, 3, 1)       # crossing triangle plus a pendant
CD4_ALMOST_FULL = (4, 6, 5, 7, 0, 2, 1, 3)         # all pairs cross except one
CD4_FULL = (4, 5, 6, 7, 0, 1, 2, 3)                # all four chords pairwise crossing

# The three built-in order-4 weight systems (unlisted diagrams are 0).
W4_COLUMNS = (CD4_TWO_CROSSED_PAIRS, CD4_STAR, CD4_CYCLE, CD4_PATH,
              CD4_TRIANGLE_PLUS, CD4_ALMOST_FULL, CD4_FULL)
W4_ROWS = {
    "w4_1": (0, 0, 1, 0, 0, 1, 1),
    "w4_2": (1, -1, 2, 0, -1, 1, 0),
    "w4_3": (0, 1, -3, 1, 2, -2, 0),
}

# ---------------------------------------------------------------------------
# Gauss-sum patterns for the order-2, order-3 and order-4 invariant formulas.
#
# The order-2 pattern is based (drawn with a basepoint dot): two crossing
# arrows whose heads flank the basepoint.
V2_PATTERN = "h0 t1 t0 h1"

# Order-3 formula: one triangle pattern plus half of a path pattern, both
# unbased (matched as cyclic subdiagram types).
V3_GROUPS = (
    (Fraction(1), "h0 t1 h2 t0 h1 t2"),    # three pairwise-crossing arrows
    (Fraction(1, 2), "h0 h1 t0 h2 t1 t2"),  # middle arrow crossing two others
)

# Order-4 formula: sixteen unbased patterns with integer coefficients.
# Patterns 8 and 9 have only three arrows; the rest have four.
V4_TERMS = (
    (Fraction(1), "h0 h1 t2 t0 h3 h2 t1 t3"),    # 4-cycle
    (Fraction(2), "t0 h1 t2 h0 t3 h2 t1 h3"),    # 4-cycle
    (Fraction(6), "h0 t1 h2 t0 h3 t2 h1 t3"),    # 4-cycle
    (Fraction(2), "t0 t1 h2 h3 h0 t3 t2 h1"),    # star
    (Fraction(-1), "h0 h1 t2 h3 t0 t3 h2 t1"),   # star
    (Fraction(1), "h0 t1 t0 h2 h1 h3 t2 t3"),    # path
    (Fraction(1), "h0 h1 t0 h2 t1 h3 t2 t3"),    # path
    (Fraction(1), "h0 h1 t0 h2 t1 t2"),          # order-3 path
    (Fraction(1), "h0 t1 h2 t0 h1 t2"),          # order-3 triangle
    (Fraction(2), "h0 t1 t2 h3 t0 h1 h2 t3"),    # all pairs crossing
    (Fraction(1), "h0 t1 t2 h3 t0 h2 t3 h1"),    # triangle plus pendant
    (Fraction(1), "t0 t1 h2 t3 h0 t2 h3 h1"),    # triangle plus pendant
    (Fraction(2), "t0 t1 h2 h3 h0 t2 t3 h1"),    # triangle plus pendant
    (Fraction(2), "h0 h1 h2 h3 t0 t2 t1 t3"),    # all-but-one pairs crossing
    (Fraction(3), "h0 t1 h2 h3 t0 t2 h1 t3"),    # all-but-one pairs crossing
    (Fraction(1), "h0 h1 t2 h3 t0 h2 t1 t3"),    # all-but-one pairs crossing
)

# Alternative order-4 formula, parameterized by an order-4 weight system W
# that vanishes on the all-crossing diagram.  Each group contributes
# coefficient * W(diagram) * (signed count of the listed unbased patterns);
# the patterns in a group all have the group's diagram as underlying chords.
V4W_CONSTRAINT = CD4_FULL
V4W_GROUPS = (
    (Fraction(1, 2), CD4_TWO_CROSSED_PAIRS, (
        "h0 t1 h2 t3 t2 h3 t0 h1",
    )),
    (Fraction(1, 4), CD4_STAR, (
        "h0 t1 h2 t3 t0 h3 t2 h1",
        "h0 h1 t2 h3 t0 t3 h2 t1",
    )),
    (Fraction(1, 2), CD4_CYCLE, (
        "t0 h1 t2 h0 t3 h2 t1 h3",
        "h0 t1 h2 t0 h3 t2 h1 t3",
    )),
    (Fraction(1, 4), CD4_PATH, (
        "h0 t1 t0 h2 h1 h3 t2 t3",
        "h0 h1 t0 t2 t1 h3 h2 t3",
        "t0 h1 h0 t2 t1 t3 h2 h3",
        "t0 t1 h0 h2 h1 t3 t2 h3",
    )),
    (Fraction(1, 4), CD4_TRIANGLE_PLUS, (
        "h0 h1 t2 h3 t0 h2 t3 t1",
        "h0 t1 t2 h3 t0 h2 t3 h1",
        "t0 t1 h2 t3 h0 t2 h3 h1",
        "t0 h1 h2 t3 h0 t2 h3 t1",
    )),
    (Fraction(1, 4), CD4_ALMOST_FULL, (
        "h0 t1 h2 h3 t0 t2 h1 t3",
        "h0 h1 t2 h3 t0 h2 t1 t3",
    )),
)
