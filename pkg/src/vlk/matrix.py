"""Dense square matrices over Laurent polynomial rings and their determinants."""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, LPoly2


class RingMatrix:
    """Immutable square matrix whose entries are LaurentPoly values of one ring."""

    __slots__ = ("size", "rows", "cls", "variables")

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]], cls=LPoly2, variables=None):
        self.cls = cls
        self.variables = tuple(variables) if variables is not None else cls.default_vars
        converted = []
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in {n}x{n}")
            converted.append(tuple(self._entry(v) for v in row))
        self.size = n
        self.rows = tuple(converted)

    def _entry(self, v):
        if isinstance(v, LaurentPoly):
            return v
        return self.cls.constant(int(v), self.variables)

    @classmethod
    def identity(cls, n: int, ring=LPoly2, variables=None):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ring, variables)

    @classmethod
    def zeros(cls, n: int, ring=LPoly2, variables=None):
        return cls([[0] * n for _ in range(n)], ring, variables)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        return RingMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.cls,
            self.variables,
        )

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        return RingMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.cls,
            self.variables,
        )

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "RingMatrix":
        return RingMatrix([list(col) for col in zip(*self.rows)], self.cls, self.variables)

    def swap_rows(self, i: int, j: int) -> "RingMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return RingMatrix(rows, self.cls, self.variables)

    def to_strings(self) -> list[list[str]]:
        return [[e.to_canonical_string() for e in row] for row in self.rows]

    def __repr__(self):
        return f"RingMatrix({self.to_strings()})"


def determinant(m: RingMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by the monomial that clears its negative
    exponents, so elimination runs in the polynomial ring where every Bareiss
    division is exact.  The product of those monomials is divided out at the
    end.  Pivots are chosen by complete pivoting on the entry with the fewest
    terms, which keeps the monomial pivots supplied by permutation matrices in
    front and the intermediate entries small.
    """
    n = m.size
    one = m.cls.one(m.variables)
    if n == 0:
        return one
    nvars = len(m.variables)
    cleared = [0] * nvars
    a: list[list[LaurentPoly]] = []
    for row in m.rows:
        shift = [0] * nvars
        for e in row:
            if e:
                for k, lo in enumerate(e.min_exponents()):
                    if -lo > shift[k]:
                        shift[k] = -lo
        a.append([e.shift(shift) if e else e for e in row])
        for k in range(nvars):
            cleared[k] += shift[k]

    sign = 1
    prev = one
    for k in range(n):
        best = None
        for i in range(k, n):
            row = a[i]
            for j in range(k, n):
                e = row[j]
                if e:
                    key = (len(e), sum(e.max_exponents()), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            return m.cls.zero(m.variables)
        _, _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pivot = a[k][k]
        pivot_row = a[k]
        for i in range(k + 1, n):
            row = a[i]
            lead = row[k]
            for j in range(k + 1, n):
                upper = pivot_row[j]
                cur = row[j]
                if lead and upper:
                    v = pivot * cur - lead * upper if cur else -(lead * upper)
                elif cur:
                    v = pivot * cur
                else:
                    continue
                row[j] = v.exact_div(prev) if v else v
            row[k] = m.cls.zero(m.variables)
        prev = pivot
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift([-c for c in cleared])


ORACLE_MAX_SIZE = 16


def determinant_oracle(m: RingMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion memoized over sets of used columns.

    Uses only ring addition and multiplication (no division), so it shares no
    code path with :func:`determinant`.
    """
    n = m.size
    if n > ORACLE_MAX_SIZE:
        raise ValueError(f"oracle limited to {ORACLE_MAX_SIZE}x{ORACLE_MAX_SIZE}, got {n}")
    zero = m.cls.zero(m.variables)
    layer = {0: m.cls.one(m.variables)}
    for r in range(n):
        row = m.rows[r]
        nxt: dict[int, LaurentPoly] = {}
        for mask, val in layer.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit or not row[j]:
                    continue
                term = val * row[j]
                if bin(mask >> (j + 1)).count("1") & 1:
                    term = -term
                nmask = mask | bit
                nxt[nmask] = nxt.get(nmask, zero) + term
        layer = nxt
    return layer.get((1 << n) - 1, zero)
