"""Alexander invariants from the Wirtinger presentation of the virtual link group.

One generator per arc (arcs break only where a strand passes under a
classical crossing) and one relator per classical crossing.  Fox derivatives
abelianized by sending every generator to t give the Alexander matrix; its
(n-1)-minors generate the first elementary ideal and their gcd is the
Alexander polynomial, normalized up to +-t^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .conway import SkeinTriple
from .diagram import DiagramCode, components
from .laurent import LPoly1, gcd_1var, gcd_mod_p, unit_normalize
from .matrix import RingMatrix, determinant

ONE = LPoly1.one()
ZERO = LPoly1.zero()
T = LPoly1.gen("t")

Word = tuple[tuple[int, int], ...]

# Exponent of the over-arc generator b in the relator c b^e a^-1 b^-e, by
# crossing sign.  Fixed by the classical calibration values (Hopf link t-1,
# kink 1, two-crossing unlink 0) together with move invariance.
RELATOR_CHIRALITY = {1: 1, -1: -1}


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def signed_relators(self) -> list[list[int]]:
        """Relators as sequences of +-(generator index + 1)."""
        return [[(g + 1) * e for g, e in word] for word in self.relators]


@dataclass(frozen=True)
class AlexMatrix:
    rows: tuple[tuple[LPoly1, ...], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_strings(self) -> list[list[str]]:
        return [[e.to_canonical_string() for e in row] for row in self.rows]


def arcs(code: DiagramCode) -> list[tuple[str, ...]]:
    """Partition of the edges (and free loops) into arcs.

    Each arc is listed in travel order, starting right after an under-pass
    (or at its smallest label when the component never passes under).  Arcs
    are ordered by their smallest label.
    """
    heads = code.head_map()
    nxt = code.next_edge()
    tails = code.tail_map()
    result = []
    for comp in components(code):
        if comp[0] not in heads:
            result.append(comp)
            continue
        starts = [i for i, e in enumerate(comp) if tails[e].role == "under"]
        if not starts:
            result.append(comp)
            continue
        k = len(comp)
        for s in starts:
            arc = [comp[s]]
            i = s
            while heads[comp[i]].role == "over":
                i = (i + 1) % k
                arc.append(comp[i])
            result.append(tuple(arc))
        assert all(nxt[comp[i]] == comp[(i + 1) % k] for i in range(k))
    result.sort(key=min)
    return result


def arc_index(code: DiagramCode) -> tuple[list[tuple[str, ...]], dict[str, int]]:
    arc_list = arcs(code)
    where = {e: i for i, arc in enumerate(arc_list) for e in arc}
    return arc_list, where


def wirtinger(code: DiagramCode) -> Presentation:
    """Wirtinger presentation: at each crossing, relator c b^e a^-1 b^-e.

    a is the arc entering under, c the arc leaving under, b the over arc and
    e = RELATOR_CHIRALITY[sign].
    """
    arc_list, where = arc_index(code)
    relators = []
    for c in code.crossings:
        a = where[c.under_in]
        out = where[c.under_out]
        b = where[c.over_in]
        e = RELATOR_CHIRALITY[c.sign]
        relators.append(((out, 1), (b, e), (a, -1), (b, -e)))
    return Presentation(tuple(min(arc) for arc in arc_list), tuple(relators))


def fox_derivative(word: Word, g: int) -> LPoly1:
    """d(word)/dg abelianized at every generator -> t."""
    total = ZERO
    prefix = 0  # exponent of t for the image of the prefix
    for gen, exp in word:
        if gen == g:
            if exp == 1:
                total = total + LPoly1.monomial((prefix,))
            else:
                total = total - LPoly1.monomial((prefix - 1,))
        prefix += exp
    return total


def alexander_matrix(code: DiagramCode) -> AlexMatrix:
    pres = wirtinger(code)
    n = len(pres.generators)
    rows = tuple(tuple(fox_derivative(r, j) for j in range(n)) for r in pres.relators)
    return AlexMatrix(rows, n)


def _minor(rows, row_set, keep_cols) -> LPoly1:
    if not keep_cols:
        return ONE
    sub = [[rows[i][j] for j in keep_cols] for i in row_set]
    return determinant(RingMatrix(sub, LPoly1))


def ideal_generators(code: DiagramCode) -> list[LPoly1]:
    """All (n-1)x(n-1) minors of the Alexander matrix (n = number of generators).

    Order: row subsets in lexicographic order, and for each of them the
    deleted column 0, 1, ..., n-1.  The columns of a Wirtinger Alexander
    matrix sum to zero (every row is a difference of conjugates), so deleting
    column j gives (-1)^j times the minor with column 0 deleted; that minor is
    computed once per row subset.
    """
    mat = alexander_matrix(code)
    n, m = mat.ncols, mat.nrows
    if n == 0:
        return [ONE]
    size = n - 1
    if m < size:
        return []
    out = []
    for row_set in combinations(range(m), size):
        base = _minor(mat.rows, row_set, list(range(1, n)))
        for j in range(n):
            out.append(-base if j % 2 else base)
    return out


def ideal_generators_direct(code: DiagramCode) -> list[LPoly1]:
    """Same list as ``ideal_generators`` but with every minor computed from scratch."""
    mat = alexander_matrix(code)
    n, m = mat.ncols, mat.nrows
    if n == 0:
        return [ONE]
    if m < n - 1:
        return []
    return [
        _minor(mat.rows, row_set, [k for k in range(n) if k != j])
        for row_set in combinations(range(m), n - 1)
        for j in range(n)
    ]


def alexander_polynomial(code: DiagramCode) -> LPoly1:
    """gcd of the first elementary ideal, with nonzero constant term and positive leading coefficient."""
    return gcd_1var(ideal_generators(code))


def alexander_polynomial_mod_p(code: DiagramCode, prime: int) -> LPoly1:
    """Monic gcd over F_p of the ideal generators."""
    return gcd_mod_p(ideal_generators(code), prime)


def _unit_multiples(p: LPoly1, k_range: int) -> list[LPoly1]:
    if p.is_zero():
        return [p]
    out = []
    for k in range(-k_range, k_range + 1):
        q = p.shift((k,))
        out.extend((q, -q))
    return out


def check_classical_alexander_skein(triple: SkeinTriple, k_range: int = 4) -> bool:
    """Whether some normalizations +-t^k Delta satisfy A+ - A- = (t - 1) A0.

    Searches every sign and every shift |k| <= k_range for each of the three
    polynomials.
    """
    plus = unit_normalize(alexander_polynomial(triple.d_plus))
    minus = unit_normalize(alexander_polynomial(triple.d_minus))
    zero = unit_normalize(alexander_polynomial(triple.d_zero))
    t_minus_1 = T - ONE
    rhs_options = {(t_minus_1 * a0) for a0 in _unit_multiples(zero, k_range)}
    for ap in _unit_multiples(plus, k_range):
        for am in _unit_multiples(minus, k_range):
            if ap - am in rhs_options:
                return True
    return False


def alexander_record(code: DiagramCode, primes=(2, 3, 5)) -> dict:
    pres = wirtinger(code)
    mat = alexander_matrix(code)
    gens = ideal_generators(code)
    delta = gcd_1var(gens)
    return {
        "generators": list(pres.generators),
        "relators": pres.signed_relators(),
        "matrix": mat.to_strings(),
        "ideal_generators": [g.to_canonical_string() for g in gens],
        "alexander": delta.to_canonical_string(),
        "alex_mod_p": {str(p): gcd_mod_p(gens, p).to_canonical_string() for p in primes},
    }
