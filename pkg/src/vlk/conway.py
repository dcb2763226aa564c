"""The two-variable Conway polynomial Z_D(x, y) of a virtual link diagram.

Z_D = (-1)^w det(M - P), where M is block diagonal with one 2x2 block per
classical crossing and P is the permutation matrix recording which outgoing
half-edge slot feeds which incoming slot.  Rows and columns are enumerated
(1,l), (1,r), ..., (n,l), (n,r).

Slot convention (the "A" convention): the strand entering at the left leaves
at the right and vice versa.  At a positive crossing the over strand enters
left; at a negative crossing the under strand enters left.  This is the
convention under which the virtual trefoil code reproduces the reference
4x4 matrix and all classical diagrams give Z = 0.  Convention "B" (sides
swapped at positive crossings) is kept only for calibration tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import (
    Crossing,
    DiagramCode,
    DiagramError,
    component_count,
    smooth_crossing,
    switch_crossing,
    validate,
    writhe,
)
from .laurent import (
    LPoly1,
    LPoly2,
    eval_x_1,
    eval_y_minus_1,
    eval_y_minus_x,
    lowest_x_exponent,
    substitute_x_t2,
)
from .matrix import RingMatrix, determinant

X = LPoly2.gen("x")
Y = LPoly2.gen("y")
ONE = LPoly2.one()
ZERO = LPoly2.zero()
TY = ("t", "y")


class SlotIndex(NamedTuple):
    crossing: int
    side: str  # "l" or "r"
    direction: str  # "in" or "out"

    @property
    def position(self) -> int:
        return 2 * self.crossing + (0 if self.side == "l" else 1)


def local_matrix(sign: int) -> list[list[LPoly2]]:
    """M+ or M- with rows/columns ordered (l, r)."""
    xi = LPoly2.monomial((-1, 0))
    yi = LPoly2.monomial((0, -1))
    if sign > 0:
        return [[ONE - X, -Y], [-(X * yi), ZERO]]
    if sign < 0:
        return [[ZERO, -(xi * Y)], [-yi, ONE - xi]]
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def assign_lr(crossing: Crossing, convention: str = "A") -> dict[str, str]:
    """Side ("l"/"r") of each strand-pass slot of a crossing."""
    over_left = crossing.sign > 0
    if convention == "B":
        over_left = False
    elif convention != "A":
        raise ValueError(f"unknown convention {convention!r}")
    if over_left:
        return {"over_in": "l", "over_out": "r", "under_in": "r", "under_out": "l"}
    return {"over_in": "r", "over_out": "l", "under_in": "l", "under_out": "r"}


def build_mp(code: DiagramCode, convention: str = "A") -> tuple[RingMatrix, RingMatrix]:
    """The block matrix M and permutation matrix P (row = out slot, column = in slot)."""
    problems = validate(code)
    if problems:
        raise DiagramError("; ".join(problems))
    n = len(code.crossings)
    if n == 0:
        raise DiagramError("build_mp needs at least one classical crossing")
    size = 2 * n
    m = [[ZERO] * size for _ in range(size)]
    p = [[ZERO] * size for _ in range(size)]
    enters: dict[str, int] = {}
    leaves: dict[str, int] = {}
    for i, c in enumerate(code.crossings):
        block = local_matrix(c.sign)
        for a in range(2):
            for b in range(2):
                m[2 * i + a][2 * i + b] = block[a][b]
        sides = assign_lr(c, convention)
        for slot, lab in zip(("over_in", "over_out", "under_in", "under_out"), c.labels()):
            incoming = slot.endswith("_in")
            pos = SlotIndex(i, sides[slot], "in" if incoming else "out").position
            if incoming:
                enters[lab] = pos
            else:
                leaves[lab] = pos
    for lab, row in leaves.items():
        p[row][enters[lab]] = ONE
    return RingMatrix(m), RingMatrix(p)


def z_polynomial(code: DiagramCode, convention: str = "A") -> LPoly2:
    """Z_D(x, y); zero for crossing-free diagrams and for any diagram with a free loop."""
    if not code.crossings or code.free_loops:
        return ZERO
    m, p = build_mp(code, convention)
    det = determinant(m - p)
    return -det if writhe(code) % 2 else det


def z_normalized(code: DiagramCode) -> LPoly2:
    """Z shifted so that its lowest power of x is x^0."""
    z = z_polynomial(code)
    if z.is_zero():
        return z
    return z.shift((-lowest_x_exponent(z), 0))


def z_prime(code: DiagramCode) -> LPoly2:
    """t^(-w) Z(t^2, y), as a polynomial in (t, y)."""
    z = z_polynomial(code)
    if z.is_zero():
        return LPoly2.zero(TY)
    return substitute_x_t2(z).shift((-writhe(code), 0))


@dataclass(frozen=True)
class SkeinTriple:
    d_plus: DiagramCode
    d_minus: DiagramCode
    d_zero: DiagramCode
    site: int


def skein_triple(code: DiagramCode, i: int) -> SkeinTriple:
    if not 0 <= i < len(code.crossings):
        raise IndexError(f"crossing index {i} out of range for {len(code.crossings)} crossings")
    if code.crossings[i].sign > 0:
        plus, minus = code, switch_crossing(code, i)
    else:
        plus, minus = switch_crossing(code, i), code
    return SkeinTriple(plus, minus, smooth_crossing(plus, i), i)


def skein_residual(triple: SkeinTriple, sign: int = 1) -> LPoly2:
    """Z'(D+) - Z'(D-) - sign * (t^-1 - t) Z'(D0) in Z[t^±1, y^±1].

    ``sign=1`` is the relation as usually quoted for this polynomial.  With
    Z = (-1)^w det(M - P) the determinants themselves satisfy the relation
    with ``sign=-1``: the writhe of D0 differs by one from that of D+ and D-,
    so the (-1)^w factor flips the smoothing term.
    """
    t_inv = LPoly2.monomial((-1, 0), 1, TY)
    t = LPoly2.monomial((1, 0), 1, TY)
    return z_prime(triple.d_plus) - z_prime(triple.d_minus) - (t_inv - t) * z_prime(triple.d_zero).scale(sign)


def crossing_switch_invariant(code: DiagramCode) -> LPoly1:
    """Z(1, y), unchanged by any crossing switch."""
    return eval_x_1(z_polynomial(code))


def conway_record(code: DiagramCode) -> dict:
    """JSON-ready summary of the Conway invariants of one diagram."""
    z = z_polynomial(code)
    return {
        "writhe": writhe(code),
        "components": component_count(code),
        "conway": z.to_json(),
        "conway_normalized": (z.shift((-lowest_x_exponent(z), 0)) if z else z).to_json(),
        "conway_tform": (substitute_x_t2(z).shift((-writhe(code), 0)) if z else LPoly2.zero(TY)).to_json(),
        "eval_x1": eval_x_1(z).to_json(),
        "flags": {
            "vanishes_y_eq_minus_x": eval_y_minus_x(z).is_zero(),
            "vanishes_y_eq_minus_1": eval_y_minus_1(z).is_zero(),
        },
    }
