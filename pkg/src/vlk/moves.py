"""Classical Reidemeister moves on diagram codes.

Virtual and detour moves do not change a code (virtual crossings are not
stored), so only moves I, II and III act here.  A move is described by a
``MoveSite``; ``enumerate_sites`` lists every applicable removal/R3 site and
``apply_move`` performs one move.

Parameters per kind:

* ``R1_add``: (label, variant), variant one of ``R1_VARIANTS``.  The label is
  an edge or a free loop; a kink is inserted on it.
* ``R1_remove``: (crossing,) where one pass of the crossing feeds the other.
* ``R2_add``: (over label, under label, "parallel" | "antiparallel", first sign).
* ``R2_remove``: (first, second) crossings met in that order by the over strand.
* ``R3``: (top-middle, top-bottom, middle-bottom) crossings of a braid-like
  triangle of equal signs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, DiagramCode, DiagramError, splice
from .laurent import LPoly2
from .rng import Lcg64

KINDS = ("R1_add", "R1_remove", "R2_add", "R2_remove", "R3")

# (sign, which pass the strand takes first)
R1_VARIANTS = ("pos_over", "pos_under", "neg_over", "neg_under")

# det(M - P) of the diagram with the kink, divided by det(M - P) without it.
R1_DET_FACTORS = {
    "pos_over": LPoly2.constant(-1),
    "pos_under": LPoly2.monomial((1, 0), -1),
    "neg_over": LPoly2.constant(-1),
    "neg_under": LPoly2.monomial((-1, 0), -1),
}

DEFAULT_MAX_EXTRA = 16


class MoveError(DiagramError):
    """The requested move does not apply to the code."""


@dataclass(frozen=True)
class MoveSite:
    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(self.params))

    def to_line(self) -> str:
        return " ".join(["MOVE", self.kind, *(str(p) for p in self.params)])

    @classmethod
    def from_line(cls, line: str) -> "MoveSite":
        parts = line.split()
        if len(parts) < 2 or parts[0] != "MOVE":
            raise ValueError(f"not a move line: {line!r}")
        kind, raw = parts[1], parts[2:]
        if kind in ("R1_remove", "R2_remove", "R3"):
            params = tuple(int(p) for p in raw)
        elif kind == "R2_add":
            params = (raw[0], raw[1], raw[2], int(raw[3]))
        else:
            params = tuple(raw)
        return cls(kind, params)


def _fresh(code: DiagramCode, count: int, taken: set[str] | None = None) -> list[str]:
    used = set(code.labels()) | (taken or set())
    out = []
    k = 0
    while len(out) < count:
        lab = f"m{k}"
        if lab not in used:
            out.append(lab)
            used.add(lab)
        k += 1
    return out


def _split(code: DiagramCode, label: str, pieces: int, taken: set[str]):
    """Cut ``label`` into a chain of ``pieces`` edges.

    Returns the crossings with the old head slot re-pointed, the remaining free
    loops, and the chain labels [first, ..., last] in order of travel.
    """
    if label in code.free_loops:
        inner = _fresh(code, pieces - 1, taken)
        taken.update(inner)
        chain = [label] + inner
        # a cut loop closes on itself: the last piece runs back into the first
        return list(code.crossings), code.free_loops - {label}, chain + [label]
    if label not in code.edges():
        raise MoveError(f"unknown edge {label!r}")
    new = _fresh(code, pieces, taken)
    taken.update(new)
    last = new[-1]
    crossings = []
    for c in code.crossings:
        crossings.append(
            Crossing(
                c.sign,
                last if c.over_in == label else c.over_in,
                c.over_out,
                last if c.under_in == label else c.under_in,
                c.under_out,
            )
        )
    return crossings, code.free_loops, [label] + new


def _r1_add(code: DiagramCode, label: str, variant: str) -> DiagramCode:
    if variant not in R1_VARIANTS:
        raise MoveError(f"unknown R1 variant {variant!r}")
    sign = 1 if variant.startswith("pos") else -1
    taken: set[str] = set()
    crossings, free, chain = _split(code, label, 2, taken)
    # chain: enter -> loop -> leave
    enter, loop, leave = chain[0], chain[1], chain[2]
    if variant.endswith("over"):
        new = Crossing(sign, enter, loop, loop, leave)
    else:
        new = Crossing(sign, loop, leave, enter, loop)
    return DiagramCode(tuple(crossings) + (new,), free)


def _r1_kind(c: Crossing) -> str | None:
    if c.over_out == c.under_in:
        return "over"
    if c.under_out == c.over_in:
        return "under"
    return None


def r1_variant(code: DiagramCode, i: int) -> str:
    """Variant tag of an R1-removable crossing."""
    c = code.crossings[i]
    first = _r1_kind(c)
    if first is None:
        raise MoveError(f"crossing {i} is not a kink")
    return ("pos_" if c.sign > 0 else "neg_") + first


def _r1_remove(code: DiagramCode, i: int) -> DiagramCode:
    if not 0 <= i < len(code.crossings) or _r1_kind(code.crossings[i]) is None:
        raise MoveError(f"no R1 kink at crossing {i}")
    c = code.crossings[i]
    return splice(code, [i], [(c.over_in, c.over_out), (c.under_in, c.under_out)])


def _r2_add(code: DiagramCode, over: str, under: str, orientation: str, sign: int) -> DiagramCode:
    if over == under:
        raise MoveError("R2 needs two distinct edges")
    if orientation not in ("parallel", "antiparallel"):
        raise MoveError(f"unknown R2 orientation {orientation!r}")
    if sign not in (1, -1):
        raise MoveError(f"bad sign {sign!r}")
    taken: set[str] = set()
    crossings, free, ochain = _split(code, over, 2, taken)
    crossings, free, uchain = _split(DiagramCode(tuple(crossings), free), under, 2, taken)
    o_in, o_mid, o_out = ochain[0], ochain[1], ochain[2]
    u_in, u_mid, u_out = uchain[0], uchain[1], uchain[2]
    if orientation == "parallel":
        first = Crossing(sign, o_in, o_mid, u_in, u_mid)
        second = Crossing(-sign, o_mid, o_out, u_mid, u_out)
    else:
        first = Crossing(sign, o_in, o_mid, u_mid, u_out)
        second = Crossing(-sign, o_mid, o_out, u_in, u_mid)
    return DiagramCode(tuple(crossings) + (first, second), frozenset(free))


def _r2_match(code: DiagramCode, i: int, j: int) -> bool:
    n = len(code.crossings)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        return False
    a, b = code.crossings[i], code.crossings[j]
    if a.sign != -b.sign or a.over_out != b.over_in:
        return False
    return a.under_out == b.under_in or b.under_out == a.under_in


def _r2_remove(code: DiagramCode, i: int, j: int) -> DiagramCode:
    if not _r2_match(code, i, j):
        raise MoveError(f"crossings {i}, {j} do not form an R2 clasp")
    a, b = code.crossings[i], code.crossings[j]
    joins = [(c.over_in, c.over_out) for c in (a, b)] + [(c.under_in, c.under_out) for c in (a, b)]
    return splice(code, [i, j], joins)


def _r3_orders(code: DiagramCode, tm: int, tb: int, mb: int):
    """Strand orders of a braid-like triangle, or None.

    Returns [(first, role, second, role)] for the top, middle and bottom
    strands.  Pattern one meets (tm, tb) on top, (tm, mb) in the middle and
    (tb, mb) on the bottom; pattern two is its reversal.
    """
    n = len(code.crossings)
    if len({tm, tb, mb}) != 3 or not all(0 <= k < n for k in (tm, tb, mb)):
        return None
    a, b, c = code.crossings[tm], code.crossings[tb], code.crossings[mb]
    if not a.sign == b.sign == c.sign:
        return None
    if a.over_out == b.over_in and a.under_out == c.over_in and b.under_out == c.under_in:
        return [(tm, "over", tb, "over"), (tm, "under", mb, "over"), (tb, "under", mb, "under")]
    if b.over_out == a.over_in and c.over_out == a.under_in and c.under_out == b.under_in:
        return [(tb, "over", tm, "over"), (mb, "over", tm, "under"), (mb, "under", tb, "under")]
    return None


def _r3(code: DiagramCode, tm: int, tb: int, mb: int) -> DiagramCode:
    orders = _r3_orders(code, tm, tb, mb)
    if orders is None:
        raise MoveError(f"crossings {tm}, {tb}, {mb} do not form an R3 triangle")
    slots = {i: dict(zip(("over_in", "over_out", "under_in", "under_out"), code.crossings[i].labels()))
             for i in (tm, tb, mb)}
    new = {i: dict(s) for i, s in slots.items()}
    for first, frole, second, srole in orders:
        enter = slots[first][frole + "_in"]
        mid = slots[first][frole + "_out"]
        leave = slots[second][srole + "_out"]
        new[second][srole + "_in"] = enter
        new[second][srole + "_out"] = mid
        new[first][frole + "_in"] = mid
        new[first][frole + "_out"] = leave
    crossings = list(code.crossings)
    for i, s in new.items():
        crossings[i] = Crossing(code.crossings[i].sign, s["over_in"], s["over_out"], s["under_in"], s["under_out"])
    return DiagramCode(tuple(crossings), code.free_loops)


def apply_move(code: DiagramCode, site: MoveSite) -> DiagramCode:
    p = site.params
    try:
        if site.kind == "R1_add":
            return _r1_add(code, *p)
        if site.kind == "R1_remove":
            return _r1_remove(code, *p)
        if site.kind == "R2_add":
            return _r2_add(code, *p)
        if site.kind == "R2_remove":
            return _r2_remove(code, *p)
        return _r3(code, *p)
    except TypeError as exc:
        raise MoveError(f"bad parameters for {site.kind}: {p!r}") from exc


def enumerate_sites(code: DiagramCode, kind: str) -> list[MoveSite]:
    """All applicable sites of one kind, in a deterministic order.

    Add moves are enumerated over every label (edges and free loops, sorted)
    and every variant.
    """
    n = len(code.crossings)
    if kind == "R1_remove":
        return [MoveSite(kind, (i,)) for i in range(n) if _r1_kind(code.crossings[i]) is not None]
    if kind == "R2_remove":
        return [MoveSite(kind, (i, j)) for i in range(n) for j in range(n) if _r2_match(code, i, j)]
    if kind == "R3":
        return [
            MoveSite(kind, (a, b, c))
            for a in range(n)
            for b in range(n)
            for c in range(n)
            if _r3_orders(code, a, b, c) is not None
        ]
    labels = code.labels()
    if kind == "R1_add":
        return [MoveSite(kind, (lab, v)) for lab in labels for v in R1_VARIANTS]
    if kind == "R2_add":
        return [
            MoveSite(kind, (o, u, orient, s))
            for o in labels
            for u in labels
            if o != u
            for orient in ("parallel", "antiparallel")
            for s in (1, -1)
        ]
    raise ValueError(f"unknown move kind {kind!r}")


def walk(code: DiagramCode, steps: int, seed: int, max_extra: int = DEFAULT_MAX_EXTRA,
         retries: int = 32) -> tuple[DiagramCode, list[MoveSite]]:
    """Seeded random sequence of moves; returns the final code and the move log.

    Each step draws a kind uniformly.  Add moves pick a label and variant
    uniformly (and are redrawn if they would exceed the crossing bound);
    removals and R3 pick uniformly among enumerated sites.  A step with no
    success after ``retries`` draws is skipped.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = Lcg64(seed)
    bound = len(code.crossings) + max_extra
    log: list[MoveSite] = []
    for _ in range(steps):
        for _attempt in range(retries):
            kind = KINDS[rng.below(len(KINDS))]
            n = len(code.crossings)
            if kind == "R1_add":
                if n + 1 > bound:
                    continue
                labels = code.labels()
                if not labels:
                    continue
                site = MoveSite(kind, (rng.choice(labels), rng.choice(R1_VARIANTS)))
            elif kind == "R2_add":
                labels = code.labels()
                if n + 2 > bound or len(labels) < 2:
                    continue
                o = rng.choice(labels)
                u = rng.choice([lab for lab in labels if lab != o])
                site = MoveSite(kind, (o, u, rng.choice(("parallel", "antiparallel")), rng.choice((1, -1))))
            else:
                sites = enumerate_sites(code, kind)
                if not sites:
                    continue
                site = rng.choice(sites)
            code = apply_move(code, site)
            log.append(site)
            break
    return code, log


def random_walk(code: DiagramCode, steps: int, seed: int, max_extra: int = DEFAULT_MAX_EXTRA) -> DiagramCode:
    return walk(code, steps, seed, max_extra)[0]
