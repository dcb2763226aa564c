"""Named diagram codes used by the tests, the CLI verify suites and the docs."""

from __future__ import annotations

from .diagram import DiagramCode, parse_gauss, parse_vld

VLD_TEXT = {
    "vt": "X + e4 e1 e2 e3\nX + e1 e2 e3 e4",
    "vh": "X + a a b b",
    "kink": "X + e2 e1 e1 e2",
    "hopf": "X + e2 e1 f2 f1\nX + f1 f2 e1 e2",
    "r2pair": "X + a2 a1 b2 b1\nX - a1 a2 b1 b2",
}

GAUSS_TEXT = {
    "tref": "O1+U2+O3+U1+O2+U3+",
    # Shipped under this name for compatibility; the word is not planar
    # (genus-one Carter surface), so it is a virtual knot with Z = 0 and
    # Alexander polynomial 1.
    "fig8": "O1+U2+O3-U4-U1+O2+U3-O4-",
    # A planar Gauss word of the classical figure-eight knot.
    "fig8_planar": "O1-U2-O3+U4+O2-U1-O4+U3+",
}

# Fixtures without any virtual crossing in a planar drawing.
CLASSICAL = ("kink", "hopf", "r2pair", "tref", "fig8_planar")


def fixture(name: str) -> DiagramCode:
    if name in VLD_TEXT:
        return parse_vld(VLD_TEXT[name])
    if name in GAUSS_TEXT:
        return parse_gauss(GAUSS_TEXT[name])
    raise KeyError(f"unknown fixture {name!r}")


def all_fixtures() -> dict[str, DiagramCode]:
    return {name: fixture(name) for name in (*VLD_TEXT, *GAUSS_TEXT)}


VT = fixture("vt")
VH = fixture("vh")
KINK = fixture("kink")
HOPF = fixture("hopf")
R2PAIR = fixture("r2pair")
TREF = fixture("tref")
FIG8 = fixture("fig8")
FIG8_PLANAR = fixture("fig8_planar")
