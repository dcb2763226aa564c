"""Combinatorial codes for virtual link diagrams.

A diagram is stored as its classical crossings only.  Each crossing records a
sign and the four edges incident to it as strand passes: the over strand runs
``over_in -> over_out`` and the under strand ``under_in -> under_out``.
Virtual crossings carry no data for the invariants computed here, so they are
never stored; components without classical crossings are kept as free loops.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .rng import Lcg64

LABEL_RE = re.compile(r"^[A-Za-z0-9_-]+$")
SLOTS = ("over_in", "over_out", "under_in", "under_out")


class DiagramError(ValueError):
    """Invalid diagram code or malformed input text."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Crossing:
    sign: int
    over_in: str
    over_out: str
    under_in: str
    under_out: str

    def labels(self) -> tuple[str, str, str, str]:
        return (self.over_in, self.over_out, self.under_in, self.under_out)

    def switched(self) -> "Crossing":
        return Crossing(-self.sign, self.under_in, self.under_out, self.over_in, self.over_out)

    def reversed(self) -> "Crossing":
        return Crossing(self.sign, self.over_out, self.over_in, self.under_out, self.under_in)

    def relabel(self, mapping) -> "Crossing":
        get = mapping.get
        return Crossing(
            self.sign,
            get(self.over_in, self.over_in),
            get(self.over_out, self.over_out),
            get(self.under_in, self.under_in),
            get(self.under_out, self.under_out),
        )


class StrandPass(NamedTuple):
    crossing: int
    role: str  # "over" or "under"


@dataclass(frozen=True)
class DiagramCode:
    crossings: tuple[Crossing, ...] = ()
    free_loops: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "free_loops", frozenset(self.free_loops))

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def n(self) -> int:
        return len(self.crossings)

    def edges(self) -> list[str]:
        """Edge labels used by crossings, sorted."""
        return sorted({lab for c in self.crossings for lab in c.labels()})

    def labels(self) -> list[str]:
        return sorted(set(self.edges()) | self.free_loops)

    def head_map(self) -> dict[str, StrandPass]:
        """Edge -> the pass it enters."""
        heads = {}
        for i, c in enumerate(self.crossings):
            heads[c.over_in] = StrandPass(i, "over")
            heads[c.under_in] = StrandPass(i, "under")
        return heads

    def tail_map(self) -> dict[str, StrandPass]:
        """Edge -> the pass it leaves."""
        tails = {}
        for i, c in enumerate(self.crossings):
            tails[c.over_out] = StrandPass(i, "over")
            tails[c.under_out] = StrandPass(i, "under")
        return tails

    def next_edge(self) -> dict[str, str]:
        nxt = {}
        for c in self.crossings:
            nxt[c.over_in] = c.over_out
            nxt[c.under_in] = c.under_out
        return nxt

    def check(self) -> "DiagramCode":
        problems = validate(self)
        if problems:
            raise DiagramError("; ".join(problems))
        return self


# -- text formats -------------------------------------------------------------


def parse_vld(text: str) -> DiagramCode:
    """Parse the line-oriented VLD format.

    ``X <sign> <over_in> <over_out> <under_in> <under_out>`` declares a
    classical crossing, ``O <label>`` a crossing-free loop, ``#`` starts a
    comment.
    """
    crossings: list[Crossing] = []
    free: list[str] = []
    lines_of: dict[str, list[int]] = {}
    heads: dict[str, int] = {}
    tails: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        kind, col = tokens[0]
        if kind == "X":
            if len(tokens) != 6:
                raise DiagramError(f"arity: crossing line needs 5 fields, got {len(tokens) - 1}", lineno, col)
            sign_tok, scol = tokens[1]
            if sign_tok not in ("+", "-"):
                raise DiagramError(f"unknown sign token {sign_tok!r}", lineno, scol)
            labels = []
            for tok, tcol in tokens[2:]:
                if not LABEL_RE.match(tok):
                    raise DiagramError(f"invalid edge label {tok!r}", lineno, tcol)
                labels.append(tok)
            for lab, slot, (_, tcol) in zip(labels, SLOTS, tokens[2:]):
                book = heads if slot.endswith("_in") else tails
                if lab in book:
                    what = "head" if book is heads else "tail"
                    raise DiagramError(
                        f"duplicate-{what} {lab!r} (first on line {book[lab]})", lineno, tcol
                    )
                book[lab] = lineno
            crossings.append(Crossing(1 if sign_tok == "+" else -1, *labels))
        elif kind == "O":
            if len(tokens) != 2:
                raise DiagramError(f"arity: loop line needs 1 field, got {len(tokens) - 1}", lineno, col)
            tok, tcol = tokens[1]
            if not LABEL_RE.match(tok):
                raise DiagramError(f"invalid loop label {tok!r}", lineno, tcol)
            if tok in lines_of:
                raise DiagramError(f"duplicate free loop {tok!r}", lineno, tcol)
            lines_of[tok] = [lineno]
            free.append(tok)
        else:
            raise DiagramError(f"unknown token {kind!r}", lineno, col)
    if not crossings and not free:
        raise DiagramError("empty diagram")
    code = DiagramCode(tuple(crossings), frozenset(free))
    problems = validate(code)
    if problems:
        raise DiagramError("; ".join(problems))
    return code


def serialize_vld(code: DiagramCode) -> str:
    lines = [
        f"X {'+' if c.sign > 0 else '-'} {c.over_in} {c.over_out} {c.under_in} {c.under_out}"
        for c in code.crossings
    ]
    lines.extend(f"O {lab}" for lab in sorted(code.free_loops))
    return "\n".join(lines)


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> DiagramCode:
    """Convert a one-component signed Gauss code such as ``O1+U2+O2+U1+``.

    Edges are named g1..g2n in traversal order, edge g_k leaving the k-th
    token.  Crossings are ordered by crossing number.
    """
    s = "".join(text.split())
    tokens = []
    pos = 0
    while pos < len(s):
        m = _GAUSS_TOKEN.match(s, pos)
        if not m:
            raise DiagramError(f"malformed Gauss token at offset {pos}: {s[pos:pos + 6]!r}", 1, pos + 1)
        tokens.append((m.group(1), int(m.group(2)), m.group(3)))
        pos = m.end()
    if not tokens:
        raise DiagramError("empty Gauss code")
    size = len(tokens)
    seen: dict[int, dict[str, tuple[str, str, str]]] = {}
    for k, (ou, num, sign) in enumerate(tokens):
        before = f"g{(k - 1) % size + 1}"
        after = f"g{k + 1}"
        slot = seen.setdefault(num, {})
        if ou in slot:
            raise DiagramError(f"unmatched crossing {num}: {ou} appears twice")
        slot[ou] = (before, after, sign)
    crossings = []
    for num in sorted(seen):
        slot = seen[num]
        if "O" not in slot or "U" not in slot:
            raise DiagramError(f"unmatched crossing {num}")
        if slot["O"][2] != slot["U"][2]:
            raise DiagramError(f"inconsistent signs for crossing {num}")
        o, u = slot["O"], slot["U"]
        crossings.append(Crossing(1 if o[2] == "+" else -1, o[0], o[1], u[0], u[1]))
    return DiagramCode(tuple(crossings))


# -- validation and basic queries ---------------------------------------------


def validate(code: DiagramCode) -> list[str]:
    problems = []
    heads: Counter = Counter()
    tails: Counter = Counter()
    for i, c in enumerate(code.crossings):
        if c.sign not in (1, -1):
            problems.append(f"bad-sign crossing {i}: {c.sign!r}")
        for lab in c.labels():
            if not isinstance(lab, str) or not LABEL_RE.match(lab):
                problems.append(f"bad-label {lab!r}")
        heads[c.over_in] += 1
        heads[c.under_in] += 1
        tails[c.over_out] += 1
        tails[c.under_out] += 1
    for lab in sorted(heads):
        if heads[lab] > 1:
            problems.append(f'duplicate-head "{lab}"')
        if lab not in tails:
            problems.append(f'missing-tail "{lab}"')
    for lab in sorted(tails):
        if tails[lab] > 1:
            problems.append(f'duplicate-tail "{lab}"')
        if lab not in heads:
            problems.append(f'missing-head "{lab}"')
    for lab in sorted(code.free_loops):
        if not isinstance(lab, str) or not LABEL_RE.match(lab):
            problems.append(f"bad-label {lab!r}")
        if lab in heads or lab in tails:
            problems.append(f'label-collision "{lab}"')
    return problems


def writhe(code: DiagramCode) -> int:
    return sum(c.sign for c in code.crossings)


def components(code: DiagramCode) -> list[tuple[str, ...]]:
    """Components as edge sequences in traversal order.

    Each component starts at its smallest label; components are ordered by
    that label.  Free loops appear as one-element components.
    """
    nxt = code.next_edge()
    seen: set[str] = set()
    comps = []
    for start in sorted(nxt):
        if start in seen:
            continue
        walk = []
        e = start
        while e not in seen:
            seen.add(e)
            walk.append(e)
            e = nxt[e]
        comps.append(tuple(walk))
    comps.extend((lab,) for lab in code.free_loops)
    comps.sort(key=lambda comp: comp[0])
    return comps


def component_count(code: DiagramCode) -> int:
    return len(components(code))


def carter_genus(code: DiagramCode) -> int:
    """Genus of the minimal closed surface carrying the diagram.

    Faces come from the rotation system fixed by the crossing signs; each
    connected piece of the crossing graph contributes (2 - V + E - F) / 2.
    Genus 0 means the code is realizable in the plane without virtual
    crossings.
    """
    n = len(code.crossings)
    if n == 0:
        return 0
    rot = {}
    for i, c in enumerate(code.crossings):
        if c.sign > 0:
            order = ("over_in", "under_out", "over_out", "under_in")
        else:
            order = ("over_in", "under_in", "over_out", "under_out")
        for k, s in enumerate(order):
            rot[(i, s)] = (i, order[(k + 1) % 4])
    ends: dict[str, list] = {}
    for i, c in enumerate(code.crossings):
        for s, lab in zip(SLOTS, c.labels()):
            ends.setdefault(lab, []).append((i, s))
    other = {}
    for a, b in ends.values():
        other[a], other[b] = b, a
    seen = set()
    faces = 0
    for dart in rot:
        if dart in seen:
            continue
        faces += 1
        d = dart
        while d not in seen:
            seen.add(d)
            d = rot[other[d]]
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in ends.values():
        parent[find(a[0])] = find(b[0])
    pieces = len({find(i) for i in range(n)})
    chi = n - 2 * n + faces
    return (2 * pieces - chi) // 2


def passes(code: DiagramCode) -> list[list[tuple[str, StrandPass]]]:
    """For each crossing-bearing component, its (edge, pass entered) sequence."""
    heads = code.head_map()
    return [[(e, heads[e]) for e in comp] for comp in components(code) if comp[0] in heads]


# -- global transformations ---------------------------------------------------


def mirror(code: DiagramCode) -> DiagramCode:
    return DiagramCode(tuple(c.switched() for c in code.crossings), code.free_loops)


def inverse(code: DiagramCode) -> DiagramCode:
    return DiagramCode(tuple(c.reversed() for c in code.crossings), code.free_loops)


def reverse_components(code: DiagramCode, labels: Iterable[str]) -> DiagramCode:
    """Reverse the orientation of every component containing one of ``labels``.

    A crossing between a reversed and a kept strand changes sign.
    """
    wanted = set(labels)
    flipped: set[str] = set()
    for comp in components(code):
        if wanted & set(comp):
            flipped.update(comp)
    out = []
    for c in code.crossings:
        o_rev = c.over_in in flipped
        u_rev = c.under_in in flipped
        oi, oo = (c.over_out, c.over_in) if o_rev else (c.over_in, c.over_out)
        ui, uo = (c.under_out, c.under_in) if u_rev else (c.under_in, c.under_out)
        sign = -c.sign if o_rev != u_rev else c.sign
        out.append(Crossing(sign, oi, oo, ui, uo))
    return DiagramCode(tuple(out), code.free_loops)


def _check_index(code: DiagramCode, i: int) -> None:
    if not 0 <= i < len(code.crossings):
        raise IndexError(f"crossing index {i} out of range for {len(code.crossings)} crossings")


def switch_crossing(code: DiagramCode, i: int) -> DiagramCode:
    _check_index(code, i)
    cs = list(code.crossings)
    cs[i] = cs[i].switched()
    return DiagramCode(tuple(cs), code.free_loops)


def splice(code: DiagramCode, drop: Iterable[int], joins: Iterable[tuple[str, str]]) -> DiagramCode:
    """Delete crossings and glue edges.

    Each pair in ``joins`` identifies two edges that become one.  A merged edge
    keeps the lexicographically smallest label of its class; a class no longer
    touching any crossing becomes a free loop.
    """
    parent: dict[str, str] = {}

    def find(a: str) -> str:
        root = a
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(a, a) != root:
            parent[a], a = root, parent[a]
        return root

    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = (ra, rb) if ra < rb else (rb, ra)
            parent[hi] = lo
    drop = set(drop)
    mapping = {lab: find(lab) for lab in parent}
    kept = [c.relabel(mapping) for i, c in enumerate(code.crossings) if i not in drop]
    used = {lab for c in kept for lab in c.labels()}
    touched = set(parent) | {find(lab) for lab in parent}
    for i in drop:
        touched.update(find(lab) for lab in code.crossings[i].labels())
    free = set(code.free_loops)
    free.update(find(lab) for lab in touched if find(lab) not in used)
    return DiagramCode(tuple(kept), frozenset(free))


def smooth_crossing(code: DiagramCode, i: int) -> DiagramCode:
    """Oriented smoothing: over_in continues as under_out, under_in as over_out."""
    _check_index(code, i)
    c = code.crossings[i]
    return splice(code, [i], [(c.over_in, c.under_out), (c.under_in, c.over_out)])


def virtualize_crossing(code: DiagramCode, i: int) -> DiagramCode:
    """Replace crossing i by a virtual one: both strands pass straight through."""
    _check_index(code, i)
    c = code.crossings[i]
    return splice(code, [i], [(c.over_in, c.over_out), (c.under_in, c.under_out)])


def _fresh_label(base: str, taken: set[str]) -> str:
    k = 2
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def _rename_apart(c1: DiagramCode, c2: DiagramCode) -> tuple[DiagramCode, dict[str, str]]:
    """Rename labels of c2 that clash with c1 by suffixing ``_k``."""
    taken = set(c1.labels()) | set(c2.labels())
    clash = set(c1.labels()) & set(c2.labels())
    mapping = {}
    for lab in sorted(clash):
        new = _fresh_label(lab, taken)
        taken.add(new)
        mapping[lab] = new
    renamed = DiagramCode(
        tuple(c.relabel(mapping) for c in c2.crossings),
        frozenset(mapping.get(lab, lab) for lab in c2.free_loops),
    )
    return renamed, mapping


def disjoint_union(c1: DiagramCode, c2: DiagramCode) -> DiagramCode:
    c2r, _ = _rename_apart(c1, c2)
    return DiagramCode(c1.crossings + c2r.crossings, c1.free_loops | c2r.free_loops)


def connected_sum(c1: DiagramCode, e1: str, c2: DiagramCode, e2: str) -> DiagramCode:
    """Cut edge e1 of c1 and edge e2 of c2 and reconnect tail(e1)->head(e2), tail(e2)->head(e1)."""
    if e1 not in c1.labels():
        raise DiagramError(f"unknown edge {e1!r} in first diagram")
    if e2 not in c2.labels():
        raise DiagramError(f"unknown edge {e2!r} in second diagram")
    c2r, mapping = _rename_apart(c1, c2)
    e2 = mapping.get(e2, e2)
    if e2 in c2r.free_loops:
        return DiagramCode(c1.crossings + c2r.crossings, c1.free_loops | (c2r.free_loops - {e2}))
    if e1 in c1.free_loops:
        return DiagramCode(c1.crossings + c2r.crossings, (c1.free_loops - {e1}) | c2r.free_loops)
    swap = {e1: e2, e2: e1}
    out = []
    for c in c1.crossings + c2r.crossings:
        out.append(
            Crossing(c.sign, swap.get(c.over_in, c.over_in), c.over_out, swap.get(c.under_in, c.under_in), c.under_out)
        )
    return DiagramCode(tuple(out), c1.free_loops | c2r.free_loops)


def reorder_crossings(code: DiagramCode, permutation: Sequence[int]) -> DiagramCode:
    """New crossing k is old crossing ``permutation[k]``."""
    n = len(code.crossings)
    if sorted(permutation) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {list(permutation)!r}")
    return DiagramCode(tuple(code.crossings[p] for p in permutation), code.free_loops)


def relabel(code: DiagramCode, mapping: dict[str, str]) -> DiagramCode:
    return DiagramCode(
        tuple(c.relabel(mapping) for c in code.crossings),
        frozenset(mapping.get(lab, lab) for lab in code.free_loops),
    )


def canonical(code: DiagramCode) -> DiagramCode:
    """Relabel edges by first appearance (c0, c1, ...) and loops f0, f1, ...

    Two codes with the same crossing order are equal up to relabeling iff
    their canonical forms are equal.
    """
    mapping: dict[str, str] = {}
    for c in code.crossings:
        for lab in c.labels():
            if lab not in mapping:
                mapping[lab] = f"c{len(mapping)}"
    loops = frozenset(f"f{k}" for k in range(len(code.free_loops)))
    return DiagramCode(tuple(c.relabel(mapping) for c in code.crossings), loops)


def same_up_to_relabeling(a: DiagramCode, b: DiagramCode) -> bool:
    return canonical(a) == canonical(b)


def random_code(n: int, seed: int) -> DiagramCode:
    """Random wiring of n crossings.

    Signs are drawn first (``below(2) == 0`` means positive), then a
    Fisher-Yates permutation of the 2n in-slots.  Out-slot k, in the order
    (0 over, 0 under, 1 over, ...), is joined by edge ``e<k>`` to in-slot
    ``perm[k]``.
    """
    if n < 1:
        raise ValueError("random_code needs n >= 1")
    rng = Lcg64(seed)
    signs = [1 if rng.below(2) == 0 else -1 for _ in range(n)]
    perm = rng.permutation(2 * n)
    slots = [[s, None, None, None, None] for s in signs]
    for k in range(2 * n):
        label = f"e{k}"
        i, role = divmod(k, 2)
        slots[i][2 if role == 0 else 4] = label
        j, role_in = divmod(perm[k], 2)
        slots[j][1 if role_in == 0 else 3] = label
    return DiagramCode(tuple(Crossing(*s) for s in slots))
