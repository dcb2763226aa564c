"""Corpus-wide checks behind ``vlk verify``.

Every suite is deterministic given (seed, iterations) and returns a
``SuiteResult``; a failure line carries the serialized offending code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .alexander import alexander_polynomial, check_classical_alexander_skein
from .conway import skein_residual, skein_triple, z_normalized, z_polynomial
from .diagram import (
    DiagramCode,
    carter_genus,
    disjoint_union,
    random_code,
    reorder_crossings,
    serialize_vld,
    switch_crossing,
)
from .fixtures import CLASSICAL, all_fixtures, fixture
from .laurent import eval_x_1, eval_y_minus_1, eval_y_minus_x, unit_normalize
from .moves import MoveSite, apply_move, walk
from .rng import Lcg64

SUITES = ("skein", "moves", "theorem7", "union", "theorem6")
DEFAULT_SEED = 1
DEFAULT_ITERATIONS = {"skein": 200, "moves": 100, "theorem7": 200, "union": 50, "theorem6": 0}
MAX_RANDOM_CROSSINGS = 6
WALK_STEPS = 50


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str, code: DiagramCode | None = None, detail: str = "") -> None:
        self.checks += 1
        if ok:
            return
        line = what
        if detail:
            line += f": {detail}"
        if code is not None:
            line += " | code: " + serialize_vld(code).replace("\n", " / ")
        self.failures.append(line)

    def lines(self) -> list[str]:
        out = [f"{self.suite}: {'pass' if self.ok else 'FAIL'} ({self.checks} checks, {len(self.failures)} failures)"]
        out.extend(f"  note: {n}" for n in self.notes)
        out.extend(f"  fail: {f}" for f in self.failures[:20])
        if len(self.failures) > 20:
            out.append(f"  ... {len(self.failures) - 20} more failures")
        return out


def random_corpus(seed: int, count: int, max_n: int = MAX_RANDOM_CROSSINGS) -> list[DiagramCode]:
    """``count`` random codes; sizes 1..max_n and per-code seeds both come from Lcg64(seed)."""
    rng = Lcg64(seed)
    out = []
    for _ in range(count):
        n = 1 + rng.below(max_n)
        out.append(random_code(n, rng.next32()))
    return out


def derived_classical_corpus(base: DiagramCode, count: int, seed: int, max_crossings: int = 8) -> list[DiagramCode]:
    """Planar codes grown from ``base`` by R1 and R2 insertions.

    Insertions are drawn from Lcg64(seed) and kept only if the Carter genus
    stays 0, so every code is classical as drawn.  Each new code extends the
    previous one, restarting from ``base`` once ``max_crossings`` is reached.
    """
    rng = Lcg64(seed)
    out: list[DiagramCode] = []
    code = base
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * max(count, 1):
            raise RuntimeError("could not grow enough planar codes")
        labels = code.labels()
        if rng.below(2) == 0 or len(labels) < 2:
            site = MoveSite("R1_add", (rng.choice(labels), rng.choice(("pos_over", "pos_under", "neg_over", "neg_under"))))
            grow = 1
        else:
            o = rng.choice(labels)
            u = rng.choice([lab for lab in labels if lab != o])
            site = MoveSite("R2_add", (o, u, rng.choice(("parallel", "antiparallel")), rng.choice((1, -1))))
            grow = 2
        if len(code.crossings) + grow > max_crossings:
            code = base
            continue
        candidate = apply_move(code, site)
        if carter_genus(candidate) != 0:
            continue
        code = candidate
        out.append(code)
    return out


def _pairs(seed: int, count: int) -> list[tuple[DiagramCode, DiagramCode]]:
    pool = list(all_fixtures().values()) + random_corpus(seed, 40, 4)
    rng = Lcg64(seed ^ 0x5EED)
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]


def suite_skein(seed: int, iterations: int) -> SuiteResult:
    """Conway skein relation at every crossing, as stated and with the sign fixed by (-1)^w."""
    res = SuiteResult("skein")
    corrected = 0
    corpus = list(all_fixtures().values()) + random_corpus(seed, iterations)
    for code in corpus:
        for i in range(len(code.crossings)):
            triple = skein_triple(code, i)
            r = skein_residual(triple)
            res.check(r.is_zero(), f"stated skein residual nonzero at crossing {i}", code, r.to_canonical_string())
            corrected += skein_residual(triple, sign=-1).is_zero()
    sites = sum(len(c.crossings) for c in corpus)
    res.notes.append(f"with the smoothing term sign-flipped the residual vanishes at {corrected}/{sites} sites")
    return res


def suite_moves(seed: int, iterations: int) -> SuiteResult:
    """Z-tilde and Delta unchanged along random walks and under crossing reordering."""
    res = SuiteResult("moves")
    starts = list(all_fixtures().values())
    rng = Lcg64(seed)
    for k in range(iterations):
        start = starts[k % len(starts)]
        z0 = z_normalized(start)
        d0 = unit_normalize(alexander_polynomial(start))
        end, log = walk(start, WALK_STEPS, rng.next32())
        res.check(z_normalized(end) == z0, f"walk {k}: z_normalized changed after {len(log)} moves", end)
        res.check(unit_normalize(alexander_polynomial(end)) == d0, f"walk {k}: Alexander polynomial changed", end)
        n = len(end.crossings)
        if n > 1:
            perm = Lcg64(seed + k).permutation(n)
            res.check(z_polynomial(reorder_crossings(end, perm)) == z_polynomial(end), f"walk {k}: reorder changed Z", end)
    return res


def suite_theorem7(seed: int, iterations: int) -> SuiteResult:
    """Z(x, -x) = 0, Z(x, -1) = 0, and Z(1, y) independent of crossing switches."""
    res = SuiteResult("theorem7")
    fixtures = list(all_fixtures().values())
    corpus = fixtures + random_corpus(seed, iterations)
    corpus += derived_classical_corpus(fixture("tref"), 20, seed)
    for code in corpus:
        z = z_polynomial(code)
        res.check(eval_y_minus_x(z).is_zero(), "Z(x, -x) nonzero", code)
        res.check(eval_y_minus_1(z).is_zero(), "Z(x, -1) nonzero", code)
    for code in fixtures + random_corpus(seed, 20, 4):
        n = len(code.crossings)
        if n > 4:
            continue
        base = eval_x_1(z_polynomial(code))
        for pattern in product((False, True), repeat=n):
            switched = code
            for i, flip in enumerate(pattern):
                if flip:
                    switched = switch_crossing(switched, i)
            res.check(eval_x_1(z_polynomial(switched)) == base, f"Z(1, y) changed under switch pattern {pattern}", code)
    return res


def suite_union(seed: int, iterations: int) -> SuiteResult:
    """Z of a disjoint union is the product."""
    res = SuiteResult("union")
    for a, b in _pairs(seed, iterations):
        u = disjoint_union(a, b)
        res.check(z_polynomial(u) == z_polynomial(a) * z_polynomial(b), "Z(union) != Z(a) Z(b)", u)
        res.check(z_normalized(u) == z_normalized(a) * z_normalized(b), "normalized Z not multiplicative", u)
    return res


def suite_theorem6(seed: int, iterations: int) -> SuiteResult:
    """Classical Alexander skein holds on classical triples and fails on the virtual Hopf link."""
    res = SuiteResult("theorem6")
    for name in CLASSICAL:
        code = fixture(name)
        for i in range(len(code.crossings)):
            res.check(check_classical_alexander_skein(skein_triple(code, i)),
                      f"{name} crossing {i}: no normalization satisfies the Alexander skein", code)
    vh = fixture("vh")
    consistent = check_classical_alexander_skein(skein_triple(vh, 0))
    res.check(not consistent, "vh: Alexander skein unexpectedly consistent", vh)
    res.notes.append("vh triple inconsistent with the classical Alexander skein" if not consistent else "vh triple consistent")
    return res


RUNNERS = {
    "skein": suite_skein,
    "moves": suite_moves,
    "theorem7": suite_theorem7,
    "union": suite_union,
    "theorem6": suite_theorem6,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, iterations: int | None = None) -> SuiteResult:
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}")
    if iterations is None:
        iterations = DEFAULT_ITERATIONS[name]
    return RUNNERS[name](seed, iterations)
