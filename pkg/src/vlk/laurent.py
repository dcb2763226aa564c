"""Exact Laurent polynomials over the integers.

``LPoly2`` lives in Z[x^±1, y^±1] (the variable names can be changed, e.g. to
``("t", "y")`` after substituting x = t^2) and ``LPoly1`` in Z[t^±1].  Both
store a dict from exponent tuples to nonzero Python ints, so coefficients never
overflow.

This module also holds the univariate gcd machinery used for Alexander
polynomials: integer gcd via a primitive remainder sequence, and gcd over F_p.
"""

from __future__ import annotations

import heapq
from math import gcd as _igcd
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_vars", "_hash")

    default_vars: tuple[str, ...] = ()

    def __init__(
        self,
        terms: Mapping[Exponent, int] | None = None,
        variables: tuple[str, ...] | None = None,
    ):
        variables = tuple(variables) if variables is not None else self.default_vars
        clean: dict[Exponent, int] = {}
        if terms:
            nvars = len(variables)
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not match variables {variables}")
                if c:
                    clean[exp] = int(c)
        self._terms = clean
        self._vars = variables
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], variables: tuple[str, ...]):
        # trusted constructor: terms already normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._vars = variables
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, variables=None):
        return cls({}, variables)

    @classmethod
    def one(cls, variables=None):
        return cls.constant(1, variables)

    @classmethod
    def constant(cls, c: int, variables=None):
        variables = tuple(variables) if variables is not None else cls.default_vars
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, exps: Exponent, coeff: int = 1, variables=None):
        return cls({tuple(exps): coeff}, variables)

    @classmethod
    def gen(cls, name: str, variables=None):
        variables = tuple(variables) if variables is not None else cls.default_vars
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls({exps: 1}, variables)

    # basic accessors

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exps: Exponent) -> int:
        return self._terms.get(tuple(exps), 0)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(max(col) for col in zip(*self._terms))

    # ring structure

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other._vars != self._vars:
                raise ValueError(f"variable mismatch: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, int):
            return type(self).constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return type(self)._raw(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return type(self)._raw(out, self._vars)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        if len(b) == 1:
            ((eb, cb),) = b.items()
            for ea, ca in a.items():
                out[tuple(p + q for p, q in zip(ea, eb))] = ca * cb
            return type(self)._raw(out, self._vars)
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(p + q for p, q in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return type(self)._raw(out, self._vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return type(self).monomial(tuple(p * k for p in e), c ** (-k), self._vars)
        result = type(self).one(self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Iterable[int]):
        """Multiply by the monomial with the given exponents."""
        exps = tuple(exps)
        return type(self)._raw(
            {tuple(p + q for p, q in zip(e, exps)): c for e, c in self._terms.items()},
            self._vars,
        )

    def scale(self, k: int):
        if not k:
            return type(self).zero(self._vars)
        return type(self)._raw({e: c * k for e, c in self._terms.items()}, self._vars)

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other, self._vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def exact_div(self, other: "LaurentPoly"):
        """Exact quotient ``self / other``; raises ArithmeticError if it does not exist."""
        other = self._coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._terms:
            return self
        if len(other._terms) == 1:
            ((eb, cb),) = other._terms.items()
            out = {}
            for e, c in self._terms.items():
                q, r = divmod(c, cb)
                if r:
                    raise ArithmeticError("inexact division by monomial")
                out[tuple(p - s for p, s in zip(e, eb))] = q
            return type(self)._raw(out, self._vars)
        # move both into the polynomial ring with no variable dividing the divisor
        da = self.min_exponents()
        db = other.min_exponents()
        a = {tuple(p - s for p, s in zip(e, da)): c for e, c in self._terms.items()}
        b = {tuple(p - s for p, s in zip(e, db)): c for e, c in other._terms.items()}
        q = _poly_exact_div(a, b)
        off = tuple(p - s for p, s in zip(da, db))
        return type(self)._raw({tuple(p + s for p, s in zip(e, off)): c for e, c in q.items()}, self._vars)

    def map_exponents(self, fn, variables: tuple[str, ...], cls=None, sign_fn=None):
        """Apply an exponent map (possibly merging terms) into another ring."""
        cls = cls or type(self)
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            ne = tuple(fn(e))
            if sign_fn is not None:
                c = c * sign_fn(e)
            out[ne] = out.get(ne, 0) + c
        return cls(out, variables)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = _igcd(g, c)
        return g

    # formatting

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items())

    def to_canonical_string(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, k in zip(self._vars, exps):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def to_json(self) -> list[list]:
        return [[*exps, str(c)] for exps, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, variables=None):
        return cls({tuple(int(v) for v in row[:-1]): int(row[-1]) for row in data}, variables)

    def __str__(self):
        return self.to_canonical_string()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_canonical_string()!r}, vars={self._vars})"


class LPoly2(LaurentPoly):
    """Element of Z[x^±1, y^±1] (first variable may be renamed, e.g. to t)."""

    __slots__ = ()
    default_vars = ("x", "y")


class LPoly1(LaurentPoly):
    """Element of Z[t^±1]."""

    __slots__ = ()
    default_vars = ("t",)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0, variables=None):
        """Build ``sum c_i t^(low+i)``."""
        return cls({(low + i,): c for i, c in enumerate(coeffs)}, variables)

    def degree_span(self) -> int:
        if not self._terms:
            return 0
        return self.max_exponents()[0] - self.min_exponents()[0]

    def evaluate(self, value: int) -> int:
        total = 0
        for (k,), c in self._terms.items():
            if k < 0 and value not in (1, -1):
                raise ValueError("negative powers only evaluable at units")
            total += c * (value ** k if k >= 0 else value ** (-k))
        return total


def _poly_exact_div(a: dict, b: dict) -> dict:
    """Exact division in Z[x1..xk] using lex order; raises if b does not divide a."""
    lead_b = max(b)
    cb = b[lead_b]
    rem = dict(a)
    heap = [tuple(-p for p in e) for e in rem]
    heapq.heapify(heap)
    q: dict = {}
    while rem:
        key = heapq.heappop(heap)
        e = tuple(-p for p in key)
        c = rem.get(e)
        if c is None:
            continue
        qe = tuple(p - s for p, s in zip(e, lead_b))
        if min(qe) < 0:
            raise ArithmeticError("inexact polynomial division")
        qc, r = divmod(c, cb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[qe] = qc
        for eb, c2 in b.items():
            t = tuple(p + s for p, s in zip(qe, eb))
            s = rem.get(t, 0) - qc * c2
            if s:
                if t not in rem:
                    heapq.heappush(heap, tuple(-p for p in t))
                rem[t] = s
            else:
                rem.pop(t, None)
    return q


# -- substitutions and evaluations ------------------------------------------


def substitute_x_t2(p: LPoly2) -> LPoly2:
    """x -> t^2; the result lives in Z[t^±1, y^±1]."""
    return p.map_exponents(lambda e: (2 * e[0], e[1]), ("t", p.variables[1]), LPoly2)


def eval_y_minus_x(p: LPoly2) -> LPoly1:
    """Z(x, -x) as a polynomial in x."""
    return p.map_exponents(
        lambda e: (e[0] + e[1],), (p.variables[0],), LPoly1, sign_fn=lambda e: -1 if e[1] % 2 else 1
    )


def eval_y_minus_1(p: LPoly2) -> LPoly1:
    """Z(x, -1) as a polynomial in x."""
    return p.map_exponents(
        lambda e: (e[0],), (p.variables[0],), LPoly1, sign_fn=lambda e: -1 if e[1] % 2 else 1
    )


def eval_x_1(p: LPoly2) -> LPoly1:
    """Z(1, y) as a polynomial in y."""
    return p.map_exponents(lambda e: (e[1],), (p.variables[1],), LPoly1)


def lowest_x_exponent(p: LPoly2) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial has no lowest exponent")
    return p.min_exponents()[0]


def to_canonical_string(p: LaurentPoly) -> str:
    return p.to_canonical_string()


# -- univariate gcd over Z ----------------------------------------------------


def _dense(p: LPoly1) -> list[int]:
    """Coefficient list (constant first) after shifting p to have nonzero constant term."""
    lo = p.min_exponents()[0]
    hi = p.max_exponents()[0]
    out = [0] * (hi - lo + 1)
    for (k,), c in p.items():
        out[k - lo] = c
    return out


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = _igcd(g, c)
    return g


def _primitive(a: list[int]) -> list[int]:
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (dense, constant first)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lc for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        _strip(r)
    return r


def _primitive_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return a


def _unit_normalize(coeffs: list[int], cls=LPoly1, variables=None) -> LPoly1:
    coeffs = _strip(list(coeffs))
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    coeffs = coeffs[lo:]
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return cls.from_coeffs(coeffs, 0, variables)


def unit_normalize(p: LPoly1) -> LPoly1:
    """Representative of p up to +-t^k: nonzero constant term, positive leading coefficient."""
    if p.is_zero():
        return p
    return _unit_normalize(_dense(p), variables=p.variables)


def gcd_1var(ps: Iterable[LPoly1]) -> LPoly1:
    """gcd in Z[t^±1], unit-normalized; gcd of nothing (or only zeros) is 0."""
    ps = list(ps)
    variables = ps[0].variables if ps else LPoly1.default_vars
    g: list[int] = []
    for p in ps:
        if p.is_zero():
            continue
        d = _dense(p)
        if not g:
            g = d
            continue
        cont = _igcd(_content(g), _content(d))
        prim = _primitive_gcd(g, d)
        g = [c * cont for c in prim]
    if not g:
        return LPoly1.zero(variables)
    return _unit_normalize(g, variables=variables)


def divides(d: LPoly1, p: LPoly1) -> bool:
    if d.is_zero():
        return p.is_zero()
    try:
        p.exact_div(d)
    except ArithmeticError:
        return False
    return True


# -- arithmetic over F_p ------------------------------------------------------


def _check_prime(prime: int) -> None:
    if not isinstance(prime, int) or prime < 2 or prime >= 1 << 16:
        raise ValueError(f"modulus must be a prime below 2^16, got {prime!r}")
    k = 2
    while k * k <= prime:
        if prime % k == 0:
            raise ValueError(f"modulus {prime} is not prime")
        k += 1


def reduce_mod_p(p: LPoly1, prime: int) -> LPoly1:
    """Coefficientwise reduction into {0..p-1}; exponents are kept."""
    _check_prime(prime)
    return LPoly1({e: c % prime for e, c in p.items()}, p.variables)


def _fp_strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            f = r[-1] * inv % p
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] = (r[i + shift] - f * c) % p
            _fp_strip(r)
            if not r:
                break
        a, b = b, r
    return a


def gcd_mod_p(ps: Iterable[LPoly1], prime: int) -> LPoly1:
    """Monic gcd in F_p[t] of the reductions (each shifted to a nonzero constant term)."""
    _check_prime(prime)
    ps = list(ps)
    variables = ps[0].variables if ps else LPoly1.default_vars
    g: list[int] = []
    for poly in ps:
        red = reduce_mod_p(poly, prime)
        if red.is_zero():
            continue
        d = [c % prime for c in _dense(red)]
        g = _fp_gcd(g, d, prime) if g else d
    if not g:
        return LPoly1.zero(variables)
    lo = 0
    while g[lo] == 0:
        lo += 1
    g = g[lo:]
    inv = pow(g[-1], -1, prime)
    return LPoly1.from_coeffs([c * inv % prime for c in g], 0, variables)
