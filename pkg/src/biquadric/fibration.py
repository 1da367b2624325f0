"""Conic-bundle geometry of the first projection of a (2,2)-surface.

A bidegree-(2,2) polynomial is a quadratic form in (y0, y1, y2) whose Gram
matrix entries are binary quadratic forms in (x0, x1): each fibre of the first
projection is a conic.  This module computes the fibre Gram pencil, its
determinant (a binary sextic locating singular fibres), the rank
classification of individual fibres, the points of P^2 whose section is
contracted, the tangent-direction map at such a point, and ramification tests
for fibre lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .bipoly import AffinePoly, BiPoly, FrameChange, Y_VARS, act, det3, inv3
from .scalars import (
    NumberFieldElement,
    UniPoly,
    as_fraction,
    is_zero_scalar,
    promote_pair,
    scalar_inv,
    uv_factorize,
    uv_gcd,
)

# ---------------------------------------------------------------------------
# Binary forms in (x0, x1)


class BinForm:
    """Homogeneous binary form; coeffs[i] multiplies x0^(d-i) x1^i.

    The zero form of degree d keeps its formal degree for bookkeeping.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Sequence = ()):
        self.d = int(d)
        cs = list(coeffs) + [0] * (self.d + 1 - len(coeffs))
        if len(cs) != self.d + 1:
            raise ValueError("too many coefficients")
        self.coeffs = tuple(
            c if isinstance(c, NumberFieldElement) else as_fraction(c) for c in cs
        )

    def is_zero(self) -> bool:
        return all(is_zero_scalar(c) for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __add__(self, other):
        if self.d != other.d:
            raise ValueError("degree mismatch")
        return BinForm(self.d, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinForm(self.d, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinForm):
            out = [Fraction(0)] * (self.d + other.d + 1)
            for i, a in enumerate(self.coeffs):
                if is_zero_scalar(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinForm(self.d + other.d, out)
        return BinForm(self.d, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def evaluate(self, p):
        """Value at a P^1 point given by a coordinate pair of scalars."""
        p0, p1 = p
        acc = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if is_zero_scalar(c):
                continue
            acc = acc + c * (p0 ** (self.d - i)) * (p1 ** i)
        return acc

    def dehomogenized(self) -> UniPoly:
        """The univariate polynomial form(1, t)."""
        return UniPoly([as_fraction(c) if not isinstance(c, NumberFieldElement) else c for c in self.coeffs])

    def is_rational(self) -> bool:
        return all(not isinstance(c, NumberFieldElement) for c in self.coeffs)

    def roots(self) -> List[Tuple[Tuple[object, object], int]]:
        """Roots in P^1 over the algebraic closure, with multiplicities.

        Rational roots appear with Fraction coordinates; an irreducible factor
        of degree >= 2 contributes one representative point whose coordinate
        lies in the corresponding number field.  The point at infinity [0, 1]
        accounts for any drop in the dehomogenized degree.
        """
        if self.is_zero():
            raise ValueError("the zero form has no root list")
        if not self.is_rational():
            raise NotImplementedError("root finding needs rational coefficients")
        u = self.dehomogenized()
        out: List[Tuple[Tuple[object, object], int]] = []
        inf_mult = self.d - u.degree
        if inf_mult > 0:
            out.append(((Fraction(0), Fraction(1)), inf_mult))
        if u.degree >= 1:
            for fac, mult in uv_factorize(u):
                if fac.degree == 1:
                    root = -fac.coeffs[0]
                    out.append(((Fraction(1), root), mult))
                else:
                    alpha = NumberFieldElement.generator(fac)
                    one = NumberFieldElement.from_rational(fac.monic().coeffs, 1)
                    out.append(((one, alpha), mult))
        return out

    def __repr__(self):
        return f"BinForm({self.d}, {list(self.coeffs)})"


def binform_gcd(a: BinForm, b: BinForm) -> BinForm:
    """Monic-normalized gcd of two rational binary forms (zero if both zero)."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    ua, ub = a.dehomogenized(), b.dehomogenized()
    g = uv_gcd(ua, ub)
    inf = min(a.d - ua.degree, b.d - ub.degree)
    # Re-homogenize the affine gcd, then restore the shared root at infinity.
    coeffs = list(g.coeffs) + [0] * inf
    return BinForm(g.degree + inf, coeffs)


# ---------------------------------------------------------------------------
# Fibre pencil


@dataclass(frozen=True)
class ConicPencil:
    """Doubled Gram matrix of f as a quadratic form in y: y^T M(x) y = 2 f."""

    entries: Tuple[Tuple[BinForm, BinForm, BinForm], ...]

    def evaluate(self, p1) -> Tuple[Tuple[object, ...], ...]:
        return tuple(tuple(e.evaluate(p1) for e in row) for row in self.entries)


def fibre_matrix(f: BiPoly) -> ConicPencil:
    if f.bidegree != (2, 2):
        raise ValueError("fibre matrix requires bidegree (2, 2)")
    acc = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    for (alpha, beta), c in f.terms.items():
        ys = [j for j in range(3) for _ in range(beta[j])]
        i, j = ys  # exactly two y-indices since the y-degree is 2
        x_index = alpha[1]  # coefficient slot of x0^(2-k) x1^k
        if i == j:
            acc[i][i][x_index] = acc[i][i][x_index] + 2 * c
        else:
            acc[i][j][x_index] = acc[i][j][x_index] + c
            acc[j][i][x_index] = acc[j][i][x_index] + c
    ent = tuple(tuple(BinForm(2, acc[i][j]) for j in range(3)) for i in range(3))
    return ConicPencil(ent)


def _det3_forms(m) -> BinForm:
    def mul3(a, b, c):
        return a * b * c

    return (
        mul3(m[0][0], m[1][1], m[2][2])
        + mul3(m[0][1], m[1][2], m[2][0])
        + mul3(m[0][2], m[1][0], m[2][1])
        - mul3(m[0][2], m[1][1], m[2][0])
        - mul3(m[0][0], m[1][2], m[2][1])
        - mul3(m[0][1], m[1][0], m[2][2])
    )


def discriminant(pencil: ConicPencil) -> BinForm:
    """det M(x): a binary sextic vanishing exactly at the singular fibres."""
    return _det3_forms(pencil.entries)


def pencil_adjugate(pencil: ConicPencil) -> Tuple[Tuple[BinForm, ...], ...]:
    """Adjugate matrix of M(x); entries are binary quartics."""
    m = pencil.entries

    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
        return minor if (i + j) % 2 == 0 else -minor

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


# ---------------------------------------------------------------------------
# Scalar matrix utilities (symmetric 3x3 over an exact field)


def matrix_rank3(m) -> int:
    rows = [list(r) for r in m]
    rank = 0
    col = 0
    while col < 3 and rank < 3:
        pivot = None
        for r in range(rank, 3):
            if not is_zero_scalar(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = scalar_inv(rows[rank][col])
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(3):
            if r != rank and not is_zero_scalar(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def matrix_kernel3(m) -> List[Tuple[object, object, object]]:
    """Basis of the right kernel of a 3x3 matrix over an exact field."""
    rows = [list(r) for r in m]
    pivots = []
    rank = 0
    for col in range(3):
        pivot = None
        for r in range(rank, 3):
            if not is_zero_scalar(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = scalar_inv(rows[rank][col])
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(3):
            if r != rank and not is_zero_scalar(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(3) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * 3
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def normalize_projective(coords):
    """Scale so the first nonzero coordinate is 1."""
    for c in coords:
        if not is_zero_scalar(c):
            inv = scalar_inv(c)
            return tuple(v * inv for v in coords)
    raise ValueError("zero coordinate vector")


# ---------------------------------------------------------------------------
# Fibre classification


class FibreLabel(Enum):
    SMOOTH = "Smooth"
    TWO_DISTINCT_LINES = "TwoDistinctLines"
    DOUBLE_LINE = "DoubleLine"


_RANK_TO_LABEL = {3: FibreLabel.SMOOTH, 2: FibreLabel.TWO_DISTINCT_LINES, 1: FibreLabel.DOUBLE_LINE}


@dataclass(frozen=True)
class FibreClass:
    rank: int
    label: FibreLabel


def classify_fibre(f: BiPoly, p1) -> FibreClass:
    m = fibre_matrix(f).evaluate(p1)
    rank = matrix_rank3(m)
    if rank == 0:
        raise ValueError("the fibre over this point is the whole plane")
    return FibreClass(rank, _RANK_TO_LABEL[rank])


# ---------------------------------------------------------------------------
# Conic helpers (quadratic forms in y over an exact field)


def conic_coefficients(f: BiPoly) -> Tuple[AffinePoly, AffinePoly, AffinePoly]:
    """The three conics A, B, C with f = A x0^2 + B x0 x1 + C x1^2."""
    if f.bidegree != (2, 2):
        raise ValueError("requires bidegree (2, 2)")
    conics = [dict(), dict(), dict()]
    for (alpha, beta), c in f.terms.items():
        conics[alpha[1]][beta] = c
    return tuple(AffinePoly(Y_VARS, terms) for terms in conics)


def conic_gram(q: AffinePoly):
    """Symmetric Gram matrix (halved mixed terms) of a quadratic form in y."""
    g = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in q.terms.items():
        ys = [j for j in range(3) for _ in range(e[j])]
        i, j = ys
        if i == j:
            g[i][i] = g[i][i] + c
        else:
            half = c * Fraction(1, 2)
            g[i][j] = g[i][j] + half
            g[j][i] = g[j][i] + half
    return tuple(tuple(row) for row in g)


def eval_quadric(gram, v):
    acc = Fraction(0)
    for i in range(3):
        for j in range(3):
            if not is_zero_scalar(gram[i][j]):
                acc = acc + gram[i][j] * v[i] * v[j]
    return acc


def split_conic(q: AffinePoly) -> Optional[List[Tuple[object, object, object]]]:
    """Factor a nonzero conic into two lines, or None if it is irreducible.

    Lines are coefficient triples; a rank-2 conic may need one quadratic
    scalar extension.  A rank-1 conic returns the same line twice.
    """
    g = conic_gram(q)
    rank = matrix_rank3(g)
    if rank == 3:
        return None
    if rank == 0:
        raise ValueError("zero conic")
    if rank == 1:
        for i in range(3):
            if not is_zero_scalar(g[i][i]):
                line = normalize_projective(g[i])
                return [line, line]
        raise AssertionError("rank-1 symmetric matrix with zero diagonal")
    # rank 2: quotient by the kernel direction and factor a binary quadratic
    kernel = matrix_kernel3(g)[0]
    e_a = e_b = None
    for i in range(3):
        for j in range(i + 1, 3):
            cand_a = tuple(Fraction(int(k == i)) for k in range(3))
            cand_b = tuple(Fraction(int(k == j)) for k in range(3))
            if not is_zero_scalar(det3((cand_a, cand_b, kernel))):
                e_a, e_b = cand_a, cand_b
                break
        if e_a is not None:
            break
    alpha = eval_quadric(g, e_a)
    gamma = eval_quadric(g, e_b)
    beta = 2 * _bilinear(g, e_a, e_b)
    # q = alpha u^2 + beta u w + gamma w^2 in the dual coordinates (u, w)
    tmat = (e_a, e_b, kernel)
    tinv = inv3(tmat)
    u_form = tuple(tinv[i][0] for i in range(3))
    w_form = tuple(tinv[i][1] for i in range(3))

    def combo(cu, cw):
        return normalize_projective(tuple(cu * u_form[i] + cw * w_form[i] for i in range(3)))

    if is_zero_scalar(alpha):
        return [combo(0, 1), combo(beta, gamma)]
    # roots of alpha t^2 + beta t + gamma; lines u - t_i w
    b = beta * scalar_inv(alpha)
    c = gamma * scalar_inv(alpha)
    roots = _quadratic_roots(b, c)
    return [combo(1, -t) for t in roots]


def _quadratic_roots(b, c):
    """Both roots of t^2 + b t + c over the base field or a quadratic extension."""
    disc_b, disc_c = promote_pair(b, c)
    b, c = disc_b, disc_c
    if isinstance(b, NumberFieldElement) or isinstance(c, NumberFieldElement):
        # try to split over the existing field by searching a root via the
        # factorization of the norm form; genuine towers are out of scope
        root = _nf_quadratic_root(b, c)
        if root is not None:
            return [root, -b - root]
        raise NotImplementedError(
            "quadratic extension of a number field (tower) is not supported"
        )
    poly = UniPoly([as_fraction(c), as_fraction(b), Fraction(1)])
    factors = uv_factorize(poly)
    if all(f.degree == 1 for f, _ in factors):
        roots = []
        for f, mult in factors:
            roots.extend([-f.coeffs[0]] * mult)
        return roots
    gen = NumberFieldElement.generator(poly.monic())
    return [gen, -b - gen]


def _nf_quadratic_root(b, c):
    """A root of t^2 + bt + c inside the field of b, c, if one exists."""
    if not isinstance(b, NumberFieldElement):
        b = NumberFieldElement.from_rational(c.modulus, b)
    if not isinstance(c, NumberFieldElement):
        c = NumberFieldElement.from_rational(b.modulus, c)
    disc = b * b - 4 * c
    if disc.is_zero():
        return b * Fraction(-1, 2)
    sqrt = _nf_sqrt(disc)
    if sqrt is None:
        return None
    return (sqrt - b) * Fraction(1, 2)


def _nf_sqrt(a: NumberFieldElement):
    """A square root of a within its own number field, or None.

    Decided by factoring X^2 - a over the field: a linear factor exhibits the
    root, and its absence proves there is none.
    """
    import sympy

    t = sympy.Symbol("t")
    mod_expr = sum(
        sympy.Rational(c.numerator, c.denominator) * t ** i
        for i, c in enumerate(a.modulus)
    )
    alpha = sympy.CRootOf(sympy.Poly(mod_expr, t), 0)
    val = sum(
        sympy.Rational(c.numerator, c.denominator) * alpha ** i
        for i, c in enumerate(a.residue)
    )
    X = sympy.Symbol("X")
    try:
        poly = sympy.Poly(X * X - val, X, extension=alpha)
        _, factors = poly.factor_list()
    except (NotImplementedError, sympy.polys.polyerrors.PolynomialError):
        return None
    for fac, _m in factors:
        if fac.degree() == 1:
            coeffs = fac.all_coeffs()  # [lead, const] over QQ(alpha)
            root_expr = sympy.simplify(-coeffs[1] / coeffs[0])
            # express the root in the power basis of alpha
            rep = sympy.Poly(sympy.expand(root_expr), alpha).all_coeffs()[::-1]
            residue = [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in rep]
            cand = NumberFieldElement(a.modulus, residue)
            if cand * cand == a:
                return cand
    return None


def _bilinear(g, u, v):
    acc = Fraction(0)
    for i in range(3):
        for j in range(3):
            if not is_zero_scalar(g[i][j]):
                acc = acc + g[i][j] * u[i] * v[j]
    return acc


def line_divides_conic(line, q: AffinePoly) -> bool:
    """True iff the conic vanishes identically on the line Z(line)."""
    g = conic_gram(q)
    v1, v2 = _line_span(line)
    checks = [v1, v2, tuple(a + b for a, b in zip(v1, v2))]
    return all(is_zero_scalar(eval_quadric(g, v)) for v in checks)


def _line_span(line):
    """Two points spanning the line with coefficient triple `line`."""
    kernel = matrix_kernel3((line, (0, 0, 0), (0, 0, 0)))
    if len(kernel) != 2:
        raise ValueError("degenerate line")
    return kernel[0], kernel[1]


# ---------------------------------------------------------------------------
# Contracted sections


@dataclass(frozen=True)
class CurveOfSections:
    """A whole curve of contracted sections: its defining form in y (degree 1
    or 2); certifies that f is reducible."""

    defining_form: AffinePoly


@dataclass(frozen=True)
class FiniteSections:
    points: Tuple[Tuple[object, object, object], ...]


def contracted_sections(f: BiPoly) -> Union[FiniteSections, CurveOfSections]:
    """All P2 in P^2 with f(., ., P2) identically zero.

    These are the common zeros of the conics A, B, C; a shared component is
    reported as a curve.
    """
    A, B, C = conic_coefficients(f)
    conics = [q for q in (A, B, C) if not q.is_zero()]
    if not conics:
        raise ValueError("zero polynomial")
    if len(conics) == 1:
        return CurveOfSections(conics[0])
    if all(_proportional_conics(conics[0], q) for q in conics[1:]):
        return CurveOfSections(conics[0])
    lines = split_conic(conics[0])
    if lines is not None:
        for line in lines:
            if all(line_divides_conic(line, q) for q in conics[1:]):
                return CurveOfSections(
                    AffinePoly(Y_VARS, {tuple(int(i == j) for j in range(3)): line[i] for i in range(3)})
                )
    return FiniteSections(tuple(_common_conic_points(conics)))


def _proportional_conics(p: AffinePoly, q: AffinePoly) -> bool:
    if set(p.terms) != set(q.terms):
        return False
    ratio = None
    for e, c in p.terms.items():
        r = q.terms[e] * scalar_inv(c)
        if ratio is None:
            ratio = r
        elif ratio != r:
            return False
    return True


def _y2_profile(q: AffinePoly):
    """Write a conic as a polynomial in y2: coefficients by y2-degree."""
    by_deg = {0: {}, 1: {}, 2: {}}
    for e, c in q.terms.items():
        by_deg[e[2]][(e[0], e[1])] = c
    c2 = by_deg[2].get((0, 0), Fraction(0))
    c1 = BinForm(1, [by_deg[1].get((1, 0), 0), by_deg[1].get((0, 1), 0)])
    c0 = BinForm(2, [by_deg[0].get((2, 0), 0), by_deg[0].get((1, 1), 0), by_deg[0].get((0, 2), 0)])
    return c2, c1, c0


def _resultant_y2(q1: AffinePoly, q2: AffinePoly) -> BinForm:
    """Resultant of two conics with respect to y2, with exact degree handling;
    the output is a binary form in (y0, y1) of the appropriate degree."""
    a2, a1, a0 = _y2_profile(q1)
    b2, b1, b0 = _y2_profile(q2)
    deg1 = 2 if not is_zero_scalar(a2) else (1 if not a1.is_zero() else 0)
    deg2 = 2 if not is_zero_scalar(b2) else (1 if not b1.is_zero() else 0)
    if deg1 == 0:
        return a0
    if deg2 == 0:
        return b0
    if deg1 == 2 and deg2 == 2:
        # Res = (a2 b0 - b2 a0)^2 - (a2 b1 - b2 a1)(a1 b0 - b1 a0)
        r = b0 * a2 - a0 * b2
        s = b1 * a2 - a1 * b2
        return r * r - s * (a1 * b0 - b1 * a0)
    if deg1 == 1 and deg2 == 1:
        return a1 * b0 - b1 * a0
    # one linear, one quadratic
    if deg1 == 1:
        lin1, lin0, quad2, quad1, quad0 = a1, a0, b2, b1, b0
    else:
        lin1, lin0, quad2, quad1, quad0 = b1, b0, a2, a1, a0
    # Res(l1 y2 + l0, q2 y2^2 + q1 y2 + q0) = q2 l0^2 - q1 l0 l1 + q0 l1^2
    return (lin0 * lin0) * quad2 - quad1 * (lin0 * lin1) + quad0 * (lin1 * lin1)


def _common_conic_points(conics):
    candidates: List[BinForm] = []
    for q in conics:
        c2, c1, c0 = _y2_profile(q)
        if is_zero_scalar(c2) and c1.is_zero():
            candidates.append(c0)
    for i in range(len(conics)):
        for j in range(i + 1, len(conics)):
            candidates.append(_resultant_y2(conics[i], conics[j]))
    candidates = [c for c in candidates if not c.is_zero()]
    if not candidates:
        raise RuntimeError("resultant system degenerated; common component expected")
    g = candidates[0]
    for c in candidates[1:]:
        g = binform_gcd(g, c)
    points = []
    if g.d >= 1:
        for (u0, u1), _mult in g.roots():
            points.extend(_solve_y2(conics, u0, u1))
    # the point [0,0,1] projects nowhere under (y0, y1); test it directly
    origin_like = (Fraction(0), Fraction(0), Fraction(1))
    if all(is_zero_scalar(q.evaluate({"y0": 0, "y1": 0, "y2": 1})) for q in conics):
        points.append(origin_like)
    unique = []
    for p in points:
        p = normalize_projective(p)
        if p not in unique:
            unique.append(p)
    return unique


def _solve_y2(conics, u0, u1):
    """Common y2 values over the base point [u0 : u1] of all the conics."""
    polys = []
    for q in conics:
        c2, c1, c0 = _y2_profile(q)
        coeffs = [c0.evaluate((u0, u1)), c1.evaluate((u0, u1)), c2 * 1]
        coeffs = [promote_to(u0, c) for c in coeffs]
        p = UniPoly(coeffs)
        if not p.is_zero():
            polys.append(p)
    if not polys:
        return [(u0, u1, Fraction(0)), (u0, u1, Fraction(1))]  # whole line: unexpected
    h = polys[0]
    for p in polys[1:]:
        h = uv_gcd(h, p)
    if h.degree <= 0:
        return []
    out = []
    if h.degree == 1:
        root = -h.coeffs[0] * scalar_inv(h.coeffs[1])
        out.append((u0, u1, root))
    elif h.is_rational():
        for fac, _m in uv_factorize(h):
            if fac.degree == 1:
                out.append((u0, u1, -fac.coeffs[0]))
            else:
                gen = NumberFieldElement.generator(fac)
                one = NumberFieldElement.from_rational(fac.monic().coeffs, 1)
                out.append((u0 * one, u1 * one, gen))
    else:
        roots = [r for r in _nf_poly_roots(h)]
        if not roots:
            raise NotImplementedError(
                "common point needs a tower of number fields; unsupported"
            )
        for r in roots:
            out.append((u0, u1, r))
    return out


def _nf_poly_roots(h: UniPoly):
    """Roots of a low-degree polynomial with number-field coefficients that lie
    in the same field (degree-2 case via the in-field square root)."""
    if h.degree == 2:
        lead_inv = scalar_inv(h.leading())
        b = h.coeffs[1] * lead_inv
        c = h.coeffs[0] * lead_inv
        root = _nf_quadratic_root(b, c)
        if root is None:
            return []
        other = -b - root
        return [root] if root == other else [root, other]
    return []


def promote_to(sample, value):
    """Lift a scalar into the number field of `sample` when needed."""
    a, b = promote_pair(sample, value)
    return b


# ---------------------------------------------------------------------------
# The tangent-direction map at a contracted-section point


class PhiSigmaKind(Enum):
    CONSTANT = "Constant"
    NON_CONSTANT = "NonConstant"
    UNDEFINED = "Undefined"


@dataclass(frozen=True)
class PhiSigma:
    kind: PhiSigmaKind
    line: Optional[Tuple[object, object, object]] = None  # original y-coordinates


def frame_moving_p2(p2) -> FrameChange:
    """Identity on x; moves the P^2 point p2 to [1, 0, 0]."""
    p2 = normalize_projective(p2)
    pivot = next(i for i in range(3) if not is_zero_scalar(p2[i]))
    others = [i for i in range(3) if i != pivot]
    rows = [tuple(p2)]
    for i in others:
        rows.append(tuple(Fraction(1) if j == i else Fraction(0) for j in range(3)))
    return FrameChange(((1, 0), (0, 1)), tuple(rows))


def phi_sigma_constant(f: BiPoly, p2) -> PhiSigma:
    """Constancy of the fibre tangent-line map along the contracted section
    P^1 x {p2}."""
    g = frame_moving_p2(p2)
    fg = act(g, f)
    A, B, C = conic_coefficients(fg)
    rows = []
    for q in (A, B, C):
        if not is_zero_scalar(q.coefficient((2, 0, 0))):
            raise ValueError("p2 is not a contracted-section point")
        rows.append((q.coefficient((1, 1, 0)), q.coefficient((1, 0, 1))))
    rank = _rank_3x2(rows)
    if rank == 0:
        return PhiSigma(PhiSigmaKind.UNDEFINED)
    if rank >= 2:
        return PhiSigma(PhiSigmaKind.NON_CONSTANT)
    u, v = next(r for r in rows if not all(is_zero_scalar(c) for c in r))
    # line u*y1 + v*y2 = 0 in the moved frame; pull back to input coordinates
    new_line = (Fraction(0), u, v)
    g3inv = inv3(g.g3)
    line = tuple(
        sum((g3inv[i][j] * new_line[j] for j in range(3)), Fraction(0)) for i in range(3)
    )
    return PhiSigma(PhiSigmaKind.CONSTANT, normalize_projective(line))


def _rank_3x2(rows) -> int:
    m = [list(r) + [0] for r in rows]
    return matrix_rank3(m)


# ---------------------------------------------------------------------------
# Ramification of a fibre line


def frame_moving_p1(p1) -> FrameChange:
    """Identity on y; moves the P^1 point p1 to [1, 0]."""
    p1 = normalize_projective(p1)
    if not is_zero_scalar(p1[0]):
        rows = ((tuple(p1)), (0, 1))
    else:
        rows = ((tuple(p1)), (1, 0))
    return FrameChange(rows, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def ramified_along(f: BiPoly, p1, line) -> bool:
    """True iff the transverse x-derivative of f at the fibre over p1 vanishes
    identically on the fibre line Z(line)."""
    g = frame_moving_p1(p1)
    fg = act(g, f)
    A, B, C = conic_coefficients(fg)
    # fibre over [1, 0] is Z(A); the line must lie on it
    gramA = conic_gram(A)
    v1, v2 = _line_span(line)
    for v in (v1, v2, tuple(a + b for a, b in zip(v1, v2))):
        if not is_zero_scalar(eval_quadric(gramA, v)):
            raise ValueError("the line is not contained in the fibre over p1")
    # d f / d x1 at x = [1, 0] equals B (the coefficient of x0 x1)
    return line_divides_conic(line, B) if not B.is_zero() else True
