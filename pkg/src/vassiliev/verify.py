"""Verification suites: the checks behind ``verify`` and the acceptance tests.

Each suite returns a :class:`SuiteReport`; a failed check carries a minimal
reproducer (serialized input plus formula name).  All comparisons are exact
rational equalities.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .diagrams import (SINGULAR, ChordDiagram, GaussDiagram, OVER, UNDER,
                       SingularGaussDiagram, enumerate_chord_diagrams)
from .invariants import (admissible_builtin_w4, derivative_eval, local_data,
                         realize_chord_diagram, symbol_eval, v2_lannes,
                         v2_polyak_viro, v3_lannes, v3_polyak_viro, v4_new,
                         v4_polyak_viro)
from .moves import BraidWord, random_equivalents
from .weights import (all_builtin_weight_systems, builtin_w2, builtin_w3,
                      builtin_w4, check_weight_system, eval_weight,
                      stacked_rank, weight_space_basis, weight_space_dimension)

# Test corpus: knots given as braid words whose closures are well-known small
# knots.  The braid words were chosen so that several rewrite rules apply.
CORPUS = (
    ("unknot", 2, (1,)),
    ("trefoil_right", 2, (1, 1, 1)),
    ("trefoil_left", 2, (-1, -1, -1)),
    ("figure_eight", 3, (1, -2, 1, -2)),
    ("cinquefoil", 2, (1, 1, 1, 1, 1)),
    ("three_twist", 3, (1, 1, 1, 2, -1, 2)),
)


def corpus_braids():
    return tuple((name, BraidWord(strands, letters))
                 for name, strands, letters in CORPUS)


def corpus_diagrams():
    return tuple((name, braid.closure_gauss()) for name, braid in corpus_braids())


def default_w4():
    """The order-4 weight system used by the one-argument ``v4new`` evaluator."""
    return builtin_w4(2)


def evaluators():
    """The six named invariant evaluators."""
    w4 = default_w4()
    return (
        ("v2pv", v2_polyak_viro),
        ("v2l", v2_lannes),
        ("v3pv", v3_polyak_viro),
        ("v3l", v3_lannes),
        ("v4pv", v4_polyak_viro),
        ("v4new", lambda g: v4_new(g, w4)),
    )


class SuiteReport:
    """Outcome of one verification suite."""

    def __init__(self, name):
        self.name = name
        self.lines = []
        self.failures = []

    @property
    def ok(self):
        return not self.failures

    def note(self, text):
        self.lines.append(text)

    def check(self, condition, text, reproducer=""):
        if condition:
            self.lines.append("ok   %s" % text)
        else:
            self.failures.append((text, reproducer))
            self.lines.append("FAIL %s%s" % (text, " [%s]" % reproducer if reproducer else ""))
        return condition

    def render(self):
        head = "suite %s: %s" % (self.name, "pass" if self.ok else
                                 "FAIL (%d)" % len(self.failures))
        return [head] + ["  " + line for line in self.lines]


def verify_weights() -> SuiteReport:
    """Built-in weight systems, dimension tables, and basis spans."""
    rep = SuiteReport("weights")
    for w in all_builtin_weight_systems():
        bad = check_weight_system(w)
        rep.check(not bad, "builtin %s satisfies all relations" % w.name,
                  "violations=%r" % bad[:3])
    dims_w = [weight_space_dimension(n) for n in range(5)]
    rep.check(dims_w == [1, 0, 1, 1, 3],
              "weight space dimensions n=0..4 are %s" % dims_w)
    dims_v = []
    total = 0
    for n in range(5):
        total += dims_w[n]
        dims_v.append(total)
    rep.check(dims_v == [1, 1, 2, 3, 6],
              "cumulative invariant dimensions n=0..4 are %s" % dims_v)
    counts = [len(enumerate_chord_diagrams(n)) for n in range(5)]
    rep.check(counts == [1, 1, 2, 5, 18],
              "chord diagram counts n=0..4 are %s" % counts)
    rep.check(stacked_rank([builtin_w4(1), builtin_w4(2), builtin_w4(3)]) == 3,
              "the three order-4 builtins have rank 3")
    basis4 = weight_space_basis(4)
    rep.check(len(basis4) == 3, "order-4 basis has 3 elements")
    stack = basis4 + [builtin_w4(1), builtin_w4(2), builtin_w4(3)]
    rep.check(stacked_rank(stack) == 3,
              "builtins lie in the span of the order-4 basis (stacked rank 3)")
    return rep


def verify_invariance(seed: int = 7, trials: int = 50, steps: int = 20) -> SuiteReport:
    """Every evaluator is constant on rewrite-equivalent diagrams."""
    rep = SuiteReport("invariance")
    evs = evaluators()
    for name, braid in corpus_braids():
        diagrams = random_equivalents(braid, trials, steps, seed)
        base = braid.closure_gauss()
        for ev_name, ev in evs:
            want = ev(base)
            bad = None
            for g in diagrams:
                got = ev(g)
                if got != want:
                    bad = (g, got)
                    break
            rep.check(bad is None,
                      "%s constant on %d equivalents of %s (= %s)"
                      % (ev_name, len(diagrams), name, want),
                      "" if bad is None else
                      "%s: %s -> %s expected %s" % (ev_name, bad[0].serialize(),
                                                    bad[1], want))
    return rep


def verify_basepoint() -> SuiteReport:
    """Every evaluator is constant under all basepoint shifts."""
    rep = SuiteReport("basepoint")
    evs = evaluators()
    for name, g in corpus_diagrams():
        for ev_name, ev in evs:
            want = ev(g)
            bad = None
            for off in range(2 * g.n):
                shifted = g.shift_basepoint(off)
                got = ev(shifted)
                if got != want:
                    bad = (off, got)
                    break
            rep.check(bad is None,
                      "%s constant under %d basepoint shifts of %s"
                      % (ev_name, 2 * g.n, name),
                      "" if bad is None else
                      "%s: shift %d of %s -> %s expected %s"
                      % (ev_name, bad[0], g.serialize(), bad[1], want))
    return rep


def random_singular_diagram(k: int, extra: int, rng) -> SingularGaussDiagram:
    """Random abstract diagram with ``k`` singular chords, ``extra`` regular ones."""
    ids = list(range(1, k + extra + 1))
    slots = [(c, True) for c in ids[:k]] * 2 + [(c, False) for c in ids[k:]] * 2
    rng.shuffle(slots)
    seen = set()
    endpoints = []
    signs = {}
    for c, singular in slots:
        if singular:
            endpoints.append((c, SINGULAR))
        else:
            if c in seen:
                first = next(r for cc, r in endpoints if cc == c and r != SINGULAR)
                endpoints.append((c, UNDER if first == OVER else OVER))
            else:
                endpoints.append((c, rng.choice((OVER, UNDER))))
                signs[c] = rng.choice((1, -1))
            seen.add(c)
    return SingularGaussDiagram(endpoints, signs)


def verify_derivatives(seed: int = 7, trials: int = 20) -> SuiteReport:
    """Alternating sums over resolutions vanish one order up."""
    rep = SuiteReport("derivatives")
    rng = random.Random(seed)
    groups = (
        ("order-2", 3, (("v2pv", v2_polyak_viro), ("v2l", v2_lannes))),
        ("order-3", 4, (("v3pv", v3_polyak_viro), ("v3l", v3_lannes))),
        ("order-4", 5, (("v4pv", v4_polyak_viro),
                        ("v4new", lambda g: v4_new(g, default_w4())))),
    )
    for label, k, evs in groups:
        for t in range(trials):
            sd = random_singular_diagram(k, rng.randrange(4), rng)
            for ev_name, ev in evs:
                val = derivative_eval(ev, sd)
                if not rep.check(val == 0,
                                 "%s trial %d: %d-singular derivative of %s is 0"
                                 % (label, t, k, ev_name),
                                 "" if val == 0 else "%r -> %s" % (sd, val)):
                    return rep
    rep.note("all %d-term alternating sums vanished" % (2 ** 5))
    return rep


def verify_symbols(seed: int = 7, realizations: int = 10) -> SuiteReport:
    """Symbols reproduce the built-in weight systems, independent of realization."""
    rep = SuiteReport("symbols")
    rng = random.Random(seed)
    w2 = builtin_w2()
    order2 = sorted(enumerate_chord_diagrams(2))
    sym2 = {d: symbol_eval(v2_polyak_viro, 2, d) for d in order2}
    rep.check(all(sym2[d] == eval_weight(w2, d) for d in order2),
              "order-2 symbol equals the built-in order-2 system: %s"
              % {d.serialize(): str(v) for d, v in sym2.items()})

    w3 = builtin_w3()
    order3 = sorted(enumerate_chord_diagrams(3))
    sym3 = {d: symbol_eval(v3_polyak_viro, 3, d) for d in order3}
    ratios = {d: (sym3[d], eval_weight(w3, d)) for d in order3}
    nonzero = [(s, w) for s, w in ratios.values() if w]
    const = {Fraction(s, 1) / w for s, w in nonzero}
    ok3 = (len(const) == 1 and next(iter(const)) != 0
           and all(s == 0 for s, w in ratios.values() if not w))
    rep.check(ok3, "order-3 symbol is a nonzero multiple of the built-in system"
              + (" (factor %s)" % next(iter(const)) if len(const) == 1 else ""))

    order4 = sorted(enumerate_chord_diagrams(4))
    for w4 in admissible_builtin_w4():
        bad = None
        for d in order4:
            got = symbol_eval(lambda g: v4_new(g, w4), 4, d)
            if got != eval_weight(w4, d):
                bad = (d, got)
                break
        rep.check(bad is None, "order-4 symbol of the parameterized formula equals %s"
                  % w4.name,
                  "" if bad is None else "%s -> %s expected %s"
                  % (bad[0].serialize(), bad[1], eval_weight(w4, bad[0])))

    # realization independence, exercised with rotated words and noise chords
    w4s = admissible_builtin_w4()
    cases = ([(2, v2_polyak_viro, "v2pv", None)]
             + [(3, v3_polyak_viro, "v3pv", None)]
             + [(4, None, "v4new[%s]" % w.name, w) for w in w4s])
    for n, ev, ev_name, w4 in cases:
        ev = ev if ev is not None else (lambda g, _w=w4: v4_new(g, _w))
        bad = None
        for d in sorted(enumerate_chord_diagrams(n)):
            want = symbol_eval(ev, n, d)
            for _ in range(realizations):
                sd = _randomized_realization(d, rng)
                got = derivative_eval(ev, sd)
                if got != want:
                    bad = (d, sd, got, want)
                    break
            if bad:
                break
        rep.check(bad is None,
                  "symbol of %s independent of realization (order %d)" % (ev_name, n),
                  "" if bad is None else "%s via %r -> %s expected %s"
                  % (bad[0].serialize(), bad[1], bad[2], bad[3]))
    return rep


def _randomized_realization(d: ChordDiagram, rng) -> SingularGaussDiagram:
    """A random singular realization of ``d`` with extra regular crossings."""
    rotated = d.rotated(rng.randrange(len(d.word))) if d.order else d
    sd = realize_chord_diagram(rotated)
    endpoints = list(sd.endpoints)
    signs = {}
    next_id = d.order
    for _ in range(rng.randrange(4)):
        next_id += 1
        first = rng.choice((OVER, UNDER))
        second = UNDER if first == OVER else OVER
        endpoints.insert(rng.randrange(len(endpoints) + 1), (next_id, first))
        endpoints.insert(rng.randrange(len(endpoints) + 1), (next_id, second))
        signs[next_id] = rng.choice((1, -1))
    merged = dict(sd.signs)
    merged.update(signs)
    return SingularGaussDiagram(endpoints, merged)


def verify_mirror() -> SuiteReport:
    """Order-2 evaluators are mirror-invariant; order-3 evaluators negate."""
    rep = SuiteReport("mirror")
    for name, g in corpus_diagrams():
        gm = g.mirror()
        for ev_name, ev in (("v2pv", v2_polyak_viro), ("v2l", v2_lannes)):
            rep.check(ev(gm) == ev(g), "%s mirror-invariant on %s" % (ev_name, name),
                      "%s vs %s" % (ev(g), ev(gm)))
        for ev_name, ev in (("v3pv", v3_polyak_viro), ("v3l", v3_lannes)):
            rep.check(ev(gm) == -ev(g), "%s negates under mirror on %s" % (ev_name, name),
                      "%s vs %s" % (ev(g), ev(gm)))
    return rep


def fit_cross_formula() -> SuiteReport:
    """Exact affine relations between the two formula families."""
    rep = SuiteReport("cross-formula")
    values = {name: (v2_polyak_viro(g), v2_lannes(g), v3_polyak_viro(g), v3_lannes(g))
              for name, g in corpus_diagrams()}

    # v2l = alpha * v2pv + beta, fitted on two knots
    (a2, l2), (b2, m2) = [(values[k][0], values[k][1])
                          for k in ("unknot", "trefoil_right")]
    det = a2 - b2
    rep.check(det != 0, "v2 fit system is nondegenerate")
    alpha = (l2 - m2) / det
    beta = l2 - alpha * a2
    rep.note("fitted v2l = %s * v2pv + %s" % (alpha, beta))
    for name, (pv2, l_2, _, _) in values.items():
        rep.check(l_2 == alpha * pv2 + beta, "v2 relation holds on %s" % name,
                  "%s vs %s" % (l_2, alpha * pv2 + beta))

    # v3l = a + b * v2pv + c * v3pv, fitted on three knots
    fit_knots = ("unknot", "trefoil_right", "trefoil_left")
    rows = [[Fraction(1), values[k][0], values[k][2], values[k][3]]
            for k in fit_knots]
    coeffs = _solve3(rows)
    rep.check(coeffs is not None, "v3 fit system is nondegenerate")
    if coeffs is not None:
        a, b, c = coeffs
        rep.note("fitted v3l = %s + %s * v2pv + %s * v3pv" % (a, b, c))
        for name, (pv2, _, pv3, l3) in values.items():
            rep.check(l3 == a + b * pv2 + c * pv3, "v3 relation holds on %s" % name,
                      "%s vs %s" % (l3, a + b * pv2 + c * pv3))
    return rep


def _solve3(rows):
    """Solve a 3x3 rational system given as rows [a, b, c, rhs]."""
    m = [list(map(Fraction, r)) for r in rows]
    n = 3
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        m[col] = [x / m[col][col] for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


SUITES = {
    "weights": verify_weights,
    "invariance": verify_invariance,
    "basepoint": verify_basepoint,
    "derivatives": verify_derivatives,
    "symbols": verify_symbols,
    "mirror": verify_mirror,
    "cross-formula": fit_cross_formula,
}


def run_suite(name, seed=7, trials=None):
    fn = SUITES[name]
    if name == "invariance":
        return fn(seed=seed, trials=trials if trials is not None else 50)
    if name == "derivatives":
        return fn(seed=seed, trials=trials if trials is not None else 20)
    if name == "symbols":
        return fn(seed=seed, realizations=trials if trials is not None else 10)
    return fn()
