"""Bihomogeneous polynomials on P^1 x P^2, coordinate frames and charts.

The central object is :class:`BiPoly`: a polynomial that is homogeneous of
degree d1 in (x0, x1) and degree d2 in (y0, y1, y2), stored as a canonical
monomial-to-coefficient map over an exact scalar field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .scalars import (
    NumberFieldElement,
    as_fraction,
    format_scalar,
    is_zero_scalar,
    promote_pair,
    scalar_inv,
)

X_VARS = ("x0", "x1")
Y_VARS = ("y0", "y1", "y2")
ALL_VARS = X_VARS + Y_VARS

BiMonomial = Tuple[Tuple[int, int], Tuple[int, int, int]]


def _add_into(terms: dict, key, value):
    if key in terms:
        s = terms[key] + value
        if is_zero_scalar(s):
            del terms[key]
        else:
            terms[key] = s
    elif not is_zero_scalar(value):
        terms[key] = value


class AffinePoly:
    """Sparse polynomial in a fixed tuple of named variables.

    Used for chart expansions, conic restrictions and the local-ring linear
    algebra; coefficients are Fraction or NumberFieldElement.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Tuple[int, ...], object] = ()):
        self.vars = tuple(variables)
        cleaned: dict = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.vars):
                raise ValueError("exponent arity mismatch")
            if not isinstance(c, NumberFieldElement):
                c = as_fraction(c)
            _add_into(cleaned, exps, c)
        self.terms = cleaned

    @classmethod
    def constant(cls, variables, c) -> "AffinePoly":
        return cls(variables, {tuple([0] * len(variables)): c})

    @classmethod
    def variable(cls, variables, name) -> "AffinePoly":
        exps = [0] * len(variables)
        exps[tuple(variables).index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AffinePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable tuples differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            other = AffinePoly.constant(self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            _add_into(terms, exps, c)
        out = AffinePoly(self.vars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = AffinePoly(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            other = AffinePoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            if is_zero_scalar(other):
                return AffinePoly(self.vars)
            out = AffinePoly(self.vars)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                _add_into(terms, key, c1 * c2)
        out = AffinePoly(self.vars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = AffinePoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_part(self, d: int) -> "AffinePoly":
        """Sum of the total-degree-d terms."""
        if d < 0:
            raise ValueError("negative degree")
        out = AffinePoly(self.vars)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return out

    def partial(self, name: str) -> "AffinePoly":
        i = self.vars.index(name)
        terms: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            key = e[:i] + (e[i] - 1,) + e[i + 1 :]
            _add_into(terms, key, c * e[i])
        out = AffinePoly(self.vars)
        out.terms = terms
        return out

    def substitute(self, assignment: Mapping[str, "AffinePoly | int | Fraction | NumberFieldElement"]) -> "AffinePoly":
        """Substitute polynomials (or scalars) for some variables."""
        polys = {}
        for name, val in assignment.items():
            if not isinstance(val, AffinePoly):
                val = AffinePoly.constant(self.vars, val)
            polys[self.vars.index(name)] = val
        result = AffinePoly(self.vars)
        for e, c in self.terms.items():
            term = AffinePoly.constant(self.vars, c)
            for i, power in enumerate(e):
                if power == 0:
                    continue
                if i in polys:
                    term = term * (polys[i] ** power)
                else:
                    mono = [0] * len(self.vars)
                    mono[i] = power
                    term = term * AffinePoly(self.vars, {tuple(mono): 1})
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object]):
        acc = None
        for e, c in self.terms.items():
            v = c
            for i, power in enumerate(e):
                if power:
                    v = v * (point[self.vars[i]] ** power)
            acc = v if acc is None else acc + v
        if acc is None:
            return Fraction(0)
        return acc

    def coefficient(self, exps: Tuple[int, ...]):
        return self.terms.get(tuple(exps), Fraction(0))

    def restrict_vars(self, variables: Sequence[str]) -> "AffinePoly":
        """Reindex onto a subset of variables the polynomial actually uses."""
        variables = tuple(variables)
        idx = [self.vars.index(v) for v in variables]
        keep = set(idx)
        out_terms = {}
        for e, c in self.terms.items():
            if any(e[i] and i not in keep for i in range(len(e))):
                raise ValueError("polynomial uses a dropped variable")
            out_terms[tuple(e[i] for i in idx)] = c
        return AffinePoly(variables, out_terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{p}" if p > 1 else v for v, p in zip(self.vars, e) if p
            )
            cs = format_scalar(c)
            if mono:
                parts.append(f"({cs})*{mono}" if ("/" in cs or " " in cs) else (mono if cs == "1" else f"{cs}*{mono}"))
            else:
                parts.append(cs)
        return " + ".join(parts)


class BiPoly:
    """Bihomogeneous polynomial of a fixed bidegree (d1, d2)."""

    __slots__ = ("bidegree", "terms")

    def __init__(self, bidegree: Tuple[int, int], terms: Mapping[BiMonomial, object] = ()):
        d1, d2 = bidegree
        self.bidegree = (int(d1), int(d2))
        cleaned: dict = {}
        for (alpha, beta), c in dict(terms).items():
            alpha = (int(alpha[0]), int(alpha[1]))
            beta = (int(beta[0]), int(beta[1]), int(beta[2]))
            if sum(alpha) != d1 or sum(beta) != d2 or min(alpha + beta) < 0:
                raise ValueError(f"monomial {(alpha, beta)} does not match bidegree {bidegree}")
            if not isinstance(c, NumberFieldElement):
                c = as_fraction(c)
            _add_into(cleaned, (alpha, beta), c)
        self.terms = cleaned

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.bidegree == other.bidegree and self.terms == other.terms

    def __hash__(self):
        return hash((self.bidegree, frozenset(self.terms.items())))

    def support(self):
        return set(self.terms)

    def coefficient(self, monomial: BiMonomial):
        return self.terms.get(monomial, Fraction(0))

    def __add__(self, other):
        if self.bidegree != other.bidegree:
            raise ValueError("bidegree mismatch")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(terms, m, c)
        out = BiPoly(self.bidegree)
        out.terms = terms
        return out

    def __neg__(self):
        out = BiPoly(self.bidegree)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            if is_zero_scalar(other):
                return BiPoly(self.bidegree)
            out = BiPoly(self.bidegree)
            out.terms = {m: c * other for m, c in self.terms.items()}
            return out
        d1 = self.bidegree[0] + other.bidegree[0]
        d2 = self.bidegree[1] + other.bidegree[1]
        terms: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (
                    (a1[0] + a2[0], a1[1] + a2[1]),
                    (b1[0] + b2[0], b1[1] + b2[1], b1[2] + b2[2]),
                )
                _add_into(terms, key, c1 * c2)
        out = BiPoly((d1, d2))
        out.terms = terms
        return out

    __rmul__ = __mul__

    def scale_to_primitive(self) -> "BiPoly":
        """Clear rational denominators and content (rational coefficients only)."""
        if self.is_zero() or any(isinstance(c, NumberFieldElement) for c in self.terms.values()):
            return self
        from math import gcd

        denom = 1
        for c in self.terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * denom // c.denominator))
        factor = Fraction(denom, num)
        return self * factor

    def to_affine(self) -> AffinePoly:
        """The same polynomial as a sparse polynomial in all five variables."""
        terms = {}
        for (alpha, beta), c in self.terms.items():
            terms[alpha + beta] = c
        return AffinePoly(ALL_VARS, terms)

    @classmethod
    def from_affine(cls, p: AffinePoly) -> "BiPoly":
        """Rebuild from a 5-variable polynomial; must be bihomogeneous."""
        if tuple(p.vars) != ALL_VARS:
            p = p.restrict_vars(ALL_VARS)
        if p.is_zero():
            raise ValueError("cannot infer the bidegree of the zero polynomial")
        degs = {(e[0] + e[1], e[2] + e[3] + e[4]) for e in p.terms}
        if len(degs) != 1:
            raise ValueError(f"polynomial is not bihomogeneous: bidegrees {sorted(degs)}")
        (d1, d2) = degs.pop()
        return cls((d1, d2), {((e[0], e[1]), (e[2], e[3], e[4])): c for e, c in p.terms.items()})

    def partial(self, var: str) -> "BiPoly":
        """Formal partial derivative with respect to one of the five variables."""
        if var not in ALL_VARS:
            raise ValueError(f"unknown variable {var!r}")
        d1, d2 = self.bidegree
        if var in X_VARS:
            new_deg = (d1 - 1, d2)
            i = X_VARS.index(var)
        else:
            new_deg = (d1, d2 - 1)
            i = Y_VARS.index(var)
        terms: dict = {}
        for (alpha, beta), c in self.terms.items():
            if var in X_VARS:
                if alpha[i] == 0:
                    continue
                na = list(alpha)
                mult = na[i]
                na[i] -= 1
                key = (tuple(na), beta)
            else:
                if beta[i] == 0:
                    continue
                nb = list(beta)
                mult = nb[i]
                nb[i] -= 1
                key = (alpha, tuple(nb))
            _add_into(terms, key, c * mult)
        out = BiPoly(new_deg)
        out.terms = terms
        return out

    def dehomogenize(self, chart: Tuple[int, int]) -> AffinePoly:
        """Chart expansion: substitute x_i = 1 and y_j = 1.

        Returns a polynomial in the remaining three variables, in the order
        (other x, first remaining y, second remaining y).
        """
        xi, yj = chart
        if xi not in (0, 1) or yj not in (0, 1, 2):
            raise ValueError("invalid chart indices")
        x_other = 1 - xi
        y_rest = [j for j in range(3) if j != yj]
        variables = (X_VARS[x_other],) + tuple(Y_VARS[j] for j in y_rest)
        terms: dict = {}
        for (alpha, beta), c in self.terms.items():
            key = (alpha[x_other], beta[y_rest[0]], beta[y_rest[1]])
            _add_into(terms, key, c)
        return AffinePoly(variables, terms)

    def evaluate(self, x_point, y_point):
        """Evaluate at projective-coordinate tuples (exact scalars)."""
        acc = None
        for (alpha, beta), c in self.terms.items():
            v = c
            for i in range(2):
                if alpha[i]:
                    v = v * (x_point[i] ** alpha[i])
            for j in range(3):
                if beta[j]:
                    v = v * (y_point[j] ** beta[j])
            acc = v if acc is None else acc + v
        return Fraction(0) if acc is None else acc

    def sorted_terms(self):
        """Terms in the canonical order: lexicographic on (a0, b0, b1), descending."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0][0], kv[0][1][0], kv[0][1][1]),
            reverse=True,
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (alpha, beta), c in self.sorted_terms():
            mono = []
            for v, p in zip(ALL_VARS, alpha + beta):
                if p == 1:
                    mono.append(v)
                elif p > 1:
                    mono.append(f"{v}^{p}")
            m = "*".join(mono) if mono else "1"
            cs = format_scalar(c)
            if cs == "1" and mono:
                parts.append(m)
            elif cs == "-1" and mono:
                parts.append(f"-{m}")
            elif "mod" in cs:
                parts.append(f"({cs})*{m}")
            else:
                parts.append(f"{cs}*{m}")
        return " + ".join(parts).replace("+ -", "- ")


def all_monomials(bidegree: Tuple[int, int] = (2, 2)):
    """The monomial basis of the given bidegree (18 monomials for (2,2))."""
    d1, d2 = bidegree
    out = []
    for a0 in range(d1, -1, -1):
        alpha = (a0, d1 - a0)
        for b0 in range(d2, -1, -1):
            for b1 in range(d2 - b0, -1, -1):
                out.append((alpha, (b0, b1, d2 - b0 - b1)))
    return out


# ---------------------------------------------------------------------------
# Parsing


class ParseError(ValueError):
    pass


class _Parser:
    """Recursive-descent parser for the input grammar.

    Grammar: sums/differences of products of powers of the five variables,
    rational literals p/q, and parenthesized subexpressions.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch):
        if self._peek() != ch:
            raise ParseError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def parse(self) -> AffinePoly:
        p = self.parse_sum()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"trailing input at position {self.pos} in {self.text!r}")
        return p

    def parse_sum(self) -> AffinePoly:
        sign = 1
        ch = self._peek()
        if ch in "+-":
            self.pos += 1
            sign = -1 if ch == "-" else 1
        acc = self.parse_product() * sign
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.parse_product()
            elif ch == "-":
                self.pos += 1
                acc = acc - self.parse_product()
            else:
                return acc

    def parse_product(self) -> AffinePoly:
        acc = self.parse_power()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.parse_power()
            elif ch == "(" or ch.isalpha():
                # implicit multiplication, e.g. "2x0" or "x0(y1+y2)"
                acc = acc * self.parse_power()
            else:
                return acc

    def parse_power(self) -> AffinePoly:
        base = self.parse_atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise ParseError(f"expected exponent at position {self.pos}")
            return base ** int(self.text[start : self.pos])
        return base

    def parse_atom(self) -> AffinePoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            p = self.parse_sum()
            self._expect(")")
            return p
        if ch.isalpha():
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            name = self.text[start : self.pos]
            if name not in ALL_VARS:
                raise ParseError(f"unknown variable {name!r}")
            return AffinePoly.variable(ALL_VARS, name)
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            num = int(self.text[start : self.pos])
            if self._peek() == "/":
                self.pos += 1
                self._skip_ws()
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if start == self.pos:
                    raise ParseError(f"expected denominator at position {self.pos}")
                return AffinePoly.constant(ALL_VARS, Fraction(num, int(self.text[start : self.pos])))
            return AffinePoly.constant(ALL_VARS, Fraction(num))
        raise ParseError(f"unexpected character {ch!r} at position {self.pos} in {self.text!r}")


def parse(text: str) -> BiPoly:
    """Parse the text grammar into a canonical BiPoly.

    Raises ParseError for malformed syntax and ValueError for inputs that are
    not bihomogeneous.
    """
    p = _Parser(text).parse()
    if p.is_zero():
        raise ValueError("the zero polynomial has no bidegree")
    return BiPoly.from_affine(p)


# ---------------------------------------------------------------------------
# Frames


class FrameChange:
    """A coordinate change: invertible 2x2 and 3x3 matrices acting by substitution.

    Determinant-one normalization is deliberately not required; verdicts are
    invariant under the extra scalar factors because weights downstream are
    recentered to trace zero.
    """

    __slots__ = ("g2", "g3")

    def __init__(self, g2, g3):
        self.g2 = tuple(tuple(self._coerce(c) for c in row) for row in g2)
        self.g3 = tuple(tuple(self._coerce(c) for c in row) for row in g3)
        if len(self.g2) != 2 or any(len(r) != 2 for r in self.g2):
            raise ValueError("g2 must be 2x2")
        if len(self.g3) != 3 or any(len(r) != 3 for r in self.g3):
            raise ValueError("g3 must be 3x3")
        if is_zero_scalar(det2(self.g2)) or is_zero_scalar(det3(self.g3)):
            raise ValueError("singular frame matrix")

    @staticmethod
    def _coerce(c):
        if isinstance(c, NumberFieldElement):
            return c
        return as_fraction(c)

    @classmethod
    def identity(cls) -> "FrameChange":
        return cls(((1, 0), (0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def inverse(self) -> "FrameChange":
        return FrameChange(inv2(self.g2), inv3(self.g3))

    def compose(self, other: "FrameChange") -> "FrameChange":
        """The frame whose action equals acting by `other` then by `self`."""
        return FrameChange(matmul(self.g2, other.g2), matmul(self.g3, other.g3))

    def __eq__(self, other):
        if not isinstance(other, FrameChange):
            return NotImplemented
        return self.g2 == other.g2 and self.g3 == other.g3

    def __repr__(self):
        return f"FrameChange(g2={self.g2}, g3={self.g3})"


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def inv2(m):
    d = det2(m)
    di = scalar_inv(d)
    return ((m[1][1] * di, -m[0][1] * di), (-m[1][0] * di, m[0][0] * di))


def adjugate3(m):
    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
        return minor if (i + j) % 2 == 0 else -minor

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def inv3(m):
    d = det3(m)
    di = scalar_inv(d)
    adj = adjugate3(m)
    return tuple(tuple(c * di for c in row) for row in adj)


def act(g: FrameChange, f: BiPoly) -> BiPoly:
    """The substitution action (g.f)(x, y) = f(x * g2, y * g3)."""
    lx = [
        AffinePoly(ALL_VARS, {(1, 0, 0, 0, 0): g.g2[0][k], (0, 1, 0, 0, 0): g.g2[1][k]})
        for k in range(2)
    ]
    ly = [
        AffinePoly(
            ALL_VARS,
            {
                (0, 0, 1, 0, 0): g.g3[0][k],
                (0, 0, 0, 1, 0): g.g3[1][k],
                (0, 0, 0, 0, 1): g.g3[2][k],
            },
        )
        for k in range(3)
    ]
    acc = AffinePoly(ALL_VARS)
    for (alpha, beta), c in f.terms.items():
        term = AffinePoly.constant(ALL_VARS, c)
        for i in range(2):
            if alpha[i]:
                term = term * (lx[i] ** alpha[i])
        for j in range(3):
            if beta[j]:
                term = term * (ly[j] ** beta[j])
        acc = acc + term
    if acc.is_zero():
        return BiPoly(f.bidegree)
    return BiPoly.from_affine(acc)


def degree_part(p: AffinePoly, d: int) -> AffinePoly:
    """Sum of the total-degree-d terms of an affine polynomial."""
    return p.degree_part(d)


def rehomogenize(p: AffinePoly, chart: Tuple[int, int], bidegree: Tuple[int, int] = (2, 2)) -> BiPoly:
    """Inverse of BiPoly.dehomogenize on polynomials that fit the bidegree."""
    xi, yj = chart
    x_other = 1 - xi
    y_rest = [j for j in range(3) if j != yj]
    d1, d2 = bidegree
    terms: dict = {}
    for e, c in p.terms.items():
        xdeg, b_first, b_second = e
        alpha = [0, 0]
        alpha[x_other] = xdeg
        alpha[xi] = d1 - xdeg
        beta = [0, 0, 0]
        beta[y_rest[0]] = b_first
        beta[y_rest[1]] = b_second
        beta[yj] = d2 - b_first - b_second
        if min(alpha) < 0 or min(beta) < 0:
            raise ValueError("affine polynomial exceeds the target bidegree")
        _add_into(terms, (tuple(alpha), tuple(beta)), c)
    return BiPoly(bidegree, terms)
