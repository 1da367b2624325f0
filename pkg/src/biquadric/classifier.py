"""Stability verdicts for (2,2)-forms under SL(2) x SL(3), with checkable
one-parameter-subgroup certificates.

The decision procedure is exact and finite: the singular locus, the fibre
geometry over its points, and the contracted-section tangent map together
determine the verdict.  Every non-stable verdict carries a certificate (a
coordinate frame plus a normalized weight) whose claimed sign of the
Hilbert-Mumford value is re-verified by direct computation before the verdict
is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bipoly import (
    BiPoly,
    FrameChange,
    Y_VARS,
    act,
    det2,
    det3,
)
from .factorizer import Factor, bihomogeneous_factor
from .fibration import (
    BinForm,
    CurveOfSections,
    FibreLabel,
    FiniteSections,
    PhiSigmaKind,
    binform_gcd,
    classify_fibre,
    conic_coefficients,
    conic_gram,
    contracted_sections,
    line_divides_conic,
    matrix_kernel3,
    matrix_rank3,
    normalize_projective,
    phi_sigma_constant,
    ramified_along,
    split_conic,
)
from .oneps import LimitKind, Weight, limit, mu
from .scalars import format_scalar, is_zero_scalar
from .singularity import (
    FibreLine,
    HorizontalSection,
    Point,
    SingularLocus,
    SingularPointRecord,
    point_frame,
    restrict_x,
    singular_locus,
    tangent_cone,
)
from .weightlp import find_destabilizing_weight

# Witness weights attached to each violated condition.  Each one is the
# normalized weight that annihilates (or freezes) the corresponding normal
# form, so certificates built from them verify by construction.
W_CONE_PULLBACK = Weight((-4, 4), (-10, 5, 5))
W_RAMIFIED_DOUBLE_FIBRE = Weight((-3, 3), (-2, -2, 4))
W_RAMIFIED_COMPONENT = Weight((-2, 2), (-5, -1, 6))
W_SINGULAR_SECTION = Weight((-1, 1), (-4, 2, 2))
W_CONSTANT_TANGENT = Weight((0, 0), (-1, 0, 1))
W_NON_A1_ON_SECTION = Weight((-1, 1), (-2, 0, 2))
W_NON_A1_DOUBLE_FIBRE = Weight((-1, 1), (-1, 0, 1))
W_PLANE_FACTOR = Weight((-1, 1), (-3, -1, 4))
W_SPLIT_SURFACE = Weight((-2, 2), (-1, 0, 1))


class MuSign(Enum):
    POSITIVE = "Positive"
    ZERO = "Zero"


@dataclass(frozen=True)
class Certificate:
    """A frame and weight whose Hilbert-Mumford value has a claimed sign.

    Positive sign demonstrates instability; Zero sign (with the nonzero
    limit that it implies) demonstrates non-stability.
    """

    frame: FrameChange
    weight: Weight
    claimed_mu_sign: MuSign

    def verify(self, f: BiPoly) -> bool:
        value = mu(act(self.frame, f), self.weight)
        if self.claimed_mu_sign is MuSign.POSITIVE:
            return value > 0
        return value == 0


class StabilityClass(Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class ConditionRecord:
    subject: str
    clause: str
    violated: bool
    weight: Optional[Weight] = None


@dataclass(frozen=True)
class Verdict:
    stability: StabilityClass
    certificate: Optional[Certificate]
    condition_report: Tuple[ConditionRecord, ...]


# ---------------------------------------------------------------------------
# Frame construction


@dataclass(frozen=True)
class PointOnly:
    pass


@dataclass(frozen=True)
class TangentLine:
    line: Tuple[object, object, object]


@dataclass(frozen=True)
class FibreComponents:
    main: Tuple[object, object, object]
    other: Tuple[object, object, object]


IDENTITY2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
IDENTITY3 = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)
_E3 = IDENTITY3


def _proportional(u: Sequence, v: Sequence) -> bool:
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if not is_zero_scalar(u[i] * v[j] - u[j] * v[i]):
                return False
    return True


def _line_value(line, p) -> object:
    return sum((line[i] * p[i] for i in range(1, len(p))), line[0] * p[0])


def _point_on_line(line, avoid=None):
    """A point of the projective line Z(line), not proportional to `avoid`."""
    kernel = matrix_kernel3((tuple(line), (0, 0, 0), (0, 0, 0)))
    if len(kernel) != 2:
        raise ValueError("degenerate line")
    for v in kernel:
        if avoid is None or not _proportional(v, avoid):
            return v
    raise ValueError("no point on the line away from the excluded one")


def _complete_basis3(row0, row1):
    for e in _E3:
        if not is_zero_scalar(det3((row0, row1, e))):
            return (tuple(row0), tuple(row1), e)
    raise ValueError("rows do not span a plane")


def _complete_basis2(row0):
    row1 = (Fraction(0), Fraction(1)) if not is_zero_scalar(row0[0]) else (Fraction(1), Fraction(0))
    if is_zero_scalar(det2((tuple(row0), row1))):
        raise ValueError("zero row")
    return (tuple(row0), row1)


def _x_frame_rows(p1):
    """Rows of a 2x2 frame moving the P^1 point p1 to [1, 0]."""
    p1 = normalize_projective(p1)
    return _complete_basis2(p1)


def _binary_root(coeffs):
    """A projective root [u0, u1] of c0*u0^2 + c1*u0*u1 + c2*u1^2."""
    form = BinForm(2, list(coeffs))
    if form.is_zero():
        raise ValueError("zero binary form has no distinguished root")
    roots = form.roots()
    return roots[0][0]


def normalize_frame(f: BiPoly, P: Point, alignment=PointOnly()) -> FrameChange:
    """A frame moving P to [1,0] x [1,0,0] and the alignment lines to
    coordinate lines: a TangentLine goes to Z(y2); FibreComponents go to
    Z(y2) (main) and Z(y1) (other)."""
    p1, p2 = P
    p2n = normalize_projective(p2)
    g2 = _x_frame_rows(p1)
    if isinstance(alignment, PointOnly):
        frame = point_frame(P)
    elif isinstance(alignment, TangentLine):
        line = alignment.line
        if not is_zero_scalar(_line_value(line, p2n)):
            raise ValueError("alignment line does not pass through the point")
        row1 = _point_on_line(line, avoid=p2n)
        frame = FrameChange(g2, _complete_basis3(p2n, row1))
    elif isinstance(alignment, FibreComponents):
        for line in (alignment.main, alignment.other):
            if not is_zero_scalar(_line_value(line, p2n)):
                raise ValueError("alignment line does not pass through the point")
        row1 = _point_on_line(alignment.main, avoid=p2n)
        row2 = _point_on_line(alignment.other, avoid=p2n)
        frame = FrameChange(g2, (tuple(p2n), tuple(row1), tuple(row2)))
    else:
        raise TypeError(f"unknown alignment: {alignment!r}")
    moved = act(frame, f)
    if not is_zero_scalar(moved.evaluate((1, 0), (1, 0, 0))):
        raise ValueError("the point does not lie on the surface")
    return frame


# ---------------------------------------------------------------------------
# Helpers shared by the condition checks


def _fmt_point(P: Point) -> str:
    p1, p2 = P
    a = ",".join(format_scalar(c) for c in p1)
    b = ",".join(format_scalar(c) for c in p2)
    return f"[{a}]x[{b}]"


def _fmt_p2(p2) -> str:
    return "[" + ",".join(format_scalar(c) for c in p2) + "]"


def _double_line_of(f: BiPoly, p1):
    """The support line of a rank-1 fibre conic over p1."""
    conic = restrict_x(f, p1)
    lines = split_conic(conic)
    if not lines:
        raise ValueError("fibre over p1 is not a singular conic")
    return lines[0]


def _section_points(f: BiPoly) -> Tuple:
    cs = contracted_sections(f)
    if isinstance(cs, CurveOfSections):
        raise ValueError("a curve of contracted sections certifies reducibility")
    return cs.points


def _on_some_section(p2, section_points) -> bool:
    for q in section_points:
        try:
            if _proportional(p2, q):
                return True
        except ValueError:
            continue
    return False


def _verified(cert: Certificate, f: BiPoly) -> Certificate:
    if not cert.verify(f):
        raise RuntimeError(
            f"internal error: certificate {cert.weight} fails to verify"
        )
    return cert


# ---------------------------------------------------------------------------
# Semi-stability (irreducible surfaces)


def _cone_is_pullback(f: BiPoly, P: Point) -> bool:
    """True iff the degree-2 chart part at P involves only the plane
    variables (no transverse x-direction)."""
    cone = tangent_cone(f, P)
    return all(e[0] == 0 for e in cone.terms)


def check_semistability_conditions(
    f: BiPoly,
    locus: Optional[SingularLocus] = None,
) -> Tuple[List[ConditionRecord], Optional[Certificate]]:
    """Per-singular-point report of the three semi-stability conditions plus
    the singular-contracted-section condition; the first violation yields a
    Positive certificate."""
    if locus is None:
        locus = singular_locus(f)
    records: List[ConditionRecord] = []
    cert: Optional[Certificate] = None
    section_points = _section_points(f)

    def note(subject, clause, violated, weight=None):
        records.append(ConditionRecord(subject, clause, violated, weight))

    # Condition (i): tangent cone pulled back from the plane.
    for rec in locus.isolated_points:
        violated = _cone_is_pullback(f, rec.point)
        note(_fmt_point(rec.point), "ConePullback", violated,
             W_CONE_PULLBACK if violated else None)
        if violated and cert is None:
            frame = normalize_frame(f, rec.point, PointOnly())
            cert = _verified(Certificate(frame, W_CONE_PULLBACK, MuSign.POSITIVE), f)
    # Condition (ii): non-reduced fibre inside the ramification locus.  A
    # ramified double-line fibre is singular along the whole line, so the
    # witnesses are exactly the fibre-line components of the singular locus.
    for comp in locus.curve_components:
        if not isinstance(comp, FibreLine):
            continue
        violated = ramified_along(f, comp.p1, comp.line)
        note(f"fibre line over [{','.join(format_scalar(c) for c in comp.p1)}]",
             "RamifiedDoubleFibre", violated,
             W_RAMIFIED_DOUBLE_FIBRE if violated else None)
        if violated and cert is None:
            p2 = _point_on_line(comp.line)
            frame = normalize_frame(f, (comp.p1, p2), TangentLine(comp.line))
            cert = _verified(
                Certificate(frame, W_RAMIFIED_DOUBLE_FIBRE, MuSign.POSITIVE), f
            )
    for rec in locus.isolated_points:
        p1, p2 = rec.point
        fibre = classify_fibre(f, p1)
        if fibre.label is FibreLabel.DOUBLE_LINE:
            line = _double_line_of(f, p1)
            violated = ramified_along(f, p1, line)
            note(_fmt_point(rec.point), "RamifiedDoubleFibre", violated,
                 W_RAMIFIED_DOUBLE_FIBRE if violated else None)
            if violated and cert is None:
                frame = normalize_frame(f, rec.point, TangentLine(line))
                cert = _verified(
                    Certificate(frame, W_RAMIFIED_DOUBLE_FIBRE, MuSign.POSITIVE), f
                )
    # Condition (iii): a reduced reducible fibre with a ramified component
    # whose image line is the constant value of the tangent map along a
    # contracted section through the point.
    for rec in locus.isolated_points:
        p1, p2 = rec.point
        fibre = classify_fibre(f, p1)
        if fibre.label is not FibreLabel.TWO_DISTINCT_LINES:
            continue
        if not _on_some_section(normalize_projective(p2), section_points):
            continue
        ps = phi_sigma_constant(f, p2)
        if ps.kind is not PhiSigmaKind.CONSTANT:
            continue
        # The only candidate component is the constant tangent line itself
        # (it passes through p2 by construction), so instead of splitting the
        # fibre conic we test whether that line divides it.
        try:
            if not line_divides_conic(ps.line, restrict_x(f, p1)):
                continue
            violated = ramified_along(f, p1, ps.line)
        except ValueError:
            continue
        note(_fmt_point(rec.point), "RamifiedComponentWithContractedSection",
             violated, W_RAMIFIED_COMPONENT if violated else None)
        if violated and cert is None:
            frame = normalize_frame(f, rec.point, TangentLine(ps.line))
            cert = _verified(
                Certificate(frame, W_RAMIFIED_COMPONENT, MuSign.POSITIVE), f
            )
    # Singular contracted section (undefined tangent map).
    for comp in locus.curve_components:
        if not isinstance(comp, HorizontalSection):
            continue
        note(f"section through {_fmt_p2(comp.p2)}", "SingularSection", True,
             W_SINGULAR_SECTION)
        if cert is None:
            p2n = normalize_projective(comp.p2)
            frame = FrameChange(
                IDENTITY2, _complete_basis3(p2n, _any_independent(p2n)))
            cert = _verified(
                Certificate(frame, W_SINGULAR_SECTION, MuSign.POSITIVE), f
            )
    return records, cert


def _any_independent(p):
    p = normalize_projective(p)
    for e in _E3:
        if not _proportional(p, e):
            return e
    raise ValueError("no independent direction")


# ---------------------------------------------------------------------------
# Stability (irreducible semi-stable surfaces)


def _non_a1_section_frame(f: BiPoly, P: Point) -> FrameChange:
    """Frame for a non-A1 singular point lying on a contracted section.

    After moving P to the base point, the vanishing Hessian forces the line
    annihilating the x0x1-conic's linear part to be a component of the fibre
    conic; aligning it to Z(y2) clears both obstructing coefficients at once.
    """
    base = point_frame(P)
    fb = act(base, f)
    A, B, _C = conic_coefficients(fb)
    b01 = B.coefficient((1, 1, 0))
    b02 = B.coefficient((1, 0, 1))
    if not (is_zero_scalar(b01) and is_zero_scalar(b02)):
        direction = (b02, -b01)
    else:
        a11 = A.coefficient((0, 2, 0))
        a12 = A.coefficient((0, 1, 1))
        a22 = A.coefficient((0, 0, 2))
        direction = _binary_root((a11, a12, a22))
    row1 = (Fraction(0), direction[0], direction[1])
    g3 = _complete_basis3((Fraction(1), Fraction(0), Fraction(0)), row1)
    return FrameChange(IDENTITY2, g3).compose(base)


def check_stability_conditions(
    f: BiPoly,
    locus: Optional[SingularLocus] = None,
) -> Tuple[List[ConditionRecord], Optional[Certificate]]:
    """Stability test for an irreducible semi-stable f; a violation yields a
    Zero-sign certificate (the limit along the weight exists and is nonzero).
    """
    if locus is None:
        locus = singular_locus(f)
    section_points = _section_points(f)
    records: List[ConditionRecord] = []
    cert: Optional[Certificate] = None

    def sing_on_section(p2):
        out = []
        for rec in locus.isolated_points:
            try:
                if _proportional(normalize_projective(rec.point[1]), p2):
                    out.append(rec)
            except ValueError:
                continue
        return out

    # Constant tangent map along a section with at most A1 points on it.
    for p2 in section_points:
        p2n = normalize_projective(p2)
        ps = phi_sigma_constant(f, p2)
        if ps.kind is PhiSigmaKind.UNDEFINED:
            raise ValueError("singular contracted section: input is unstable")
        here = sing_on_section(p2n)
        all_a1 = all(rec.local_type.is_a1 for rec in here)
        violated = ps.kind is PhiSigmaKind.CONSTANT and all_a1
        records.append(ConditionRecord(
            f"section through {_fmt_p2(p2n)}", "ConstantTangentMap", violated,
            W_CONSTANT_TANGENT if violated else None))
        if violated and cert is None:
            row1 = _point_on_line(ps.line, avoid=p2n)
            frame = FrameChange(IDENTITY2, _complete_basis3(p2n, row1))
            cert = _verified(Certificate(frame, W_CONSTANT_TANGENT, MuSign.ZERO), f)
    # A non-A1 singular point on a contracted section.
    for rec in locus.isolated_points:
        if rec.local_type.is_a1:
            continue
        p2n = normalize_projective(rec.point[1])
        if not _on_some_section(p2n, section_points):
            continue
        records.append(ConditionRecord(
            _fmt_point(rec.point), "NonA1OnContractedSection", True,
            W_NON_A1_ON_SECTION))
        if cert is None:
            frame = _non_a1_section_frame(f, rec.point)
            cert = _verified(Certificate(frame, W_NON_A1_ON_SECTION, MuSign.ZERO), f)
    # A non-A1 singular point with a non-reduced fibre.
    for rec in locus.isolated_points:
        if rec.local_type.is_a1:
            continue
        fibre = classify_fibre(f, rec.point[0])
        if fibre.label is not FibreLabel.DOUBLE_LINE:
            continue
        records.append(ConditionRecord(
            _fmt_point(rec.point), "NonA1NonReducedFibre", True,
            W_NON_A1_DOUBLE_FIBRE))
        if cert is None:
            line = _double_line_of(f, rec.point[0])
            frame = normalize_frame(f, rec.point, TangentLine(line))
            cert = _verified(
                Certificate(frame, W_NON_A1_DOUBLE_FIBRE, MuSign.ZERO), f
            )
    return records, cert


# ---------------------------------------------------------------------------
# Reducible surfaces


def _line_kernel_frame(ell) -> Tuple:
    """3x3 rows sending the plane line with coefficient vector ell to Z(y2)."""
    kernel = matrix_kernel3((tuple(ell), (0, 0, 0), (0, 0, 0)))
    if len(kernel) != 2:
        raise ValueError("degenerate line factor")
    return _complete_basis3(kernel[0], kernel[1])


def _x_root_rows(line_pair):
    """2x2 rows whose first row is a root of the x-linear form (l0, l1)."""
    l0, l1 = line_pair
    return _complete_basis2((l1, -l0))


def _x_line_coeffs(factor: BiPoly):
    return (factor.coefficient(((1, 0), (0, 0, 0))),
            factor.coefficient(((0, 1), (0, 0, 0))))


def _y_line_coeffs(factor: BiPoly):
    return tuple(
        factor.coefficient(((0, 0), tuple(int(i == j) for j in range(3))))
        for i in range(3)
    )


def _bilinear_lines(factor: BiPoly):
    """The x0- and x1-coefficient plane lines of a (1,1) factor."""
    a = tuple(
        factor.coefficient(((1, 0), tuple(int(i == j) for j in range(3))))
        for i in range(3)
    )
    b = tuple(
        factor.coefficient(((0, 1), tuple(int(i == j) for j in range(3))))
        for i in range(3)
    )
    return a, b


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _conic_point_and_tangent(conic):
    """A point on a smooth conic (over at most a quadratic extension) and the
    tangent line there."""
    c00 = conic.coefficient((2, 0, 0))
    c01 = conic.coefficient((1, 1, 0))
    c11 = conic.coefficient((0, 2, 0))
    if all(is_zero_scalar(c) for c in (c00, c01, c11)):
        raise ValueError("conic is singular along Z(y2)")
    r = _binary_root((c00, c01, c11))
    p = (r[0], r[1], Fraction(0))
    gram = conic_gram(conic)
    tangent = tuple(
        sum((gram[i][j] * p[j] for j in range(1, 3)), gram[i][0] * p[0])
        for i in range(3)
    )
    return p, tangent


def _split_surface_frame(x_rows, conic) -> FrameChange:
    p, tangent = _conic_point_and_tangent(conic)
    row1 = _point_on_line(tangent, avoid=p)
    return FrameChange(x_rows, _complete_basis3(p, row1))


def classify_reducible(f: BiPoly, factors: List[Factor]) -> Verdict:
    """The case split over the bidegree multiset of the geometric factors."""
    if len(factors) < 2:
        raise ValueError("classify_reducible requires at least two factors")
    bidegrees = sorted(bd for bd, _fac in factors)
    records: List[ConditionRecord] = []

    def verdict(stability, cert, subject, clause, weight=None):
        records.append(ConditionRecord(
            subject, clause, stability is not StabilityClass.STABLE, weight))
        return Verdict(stability, cert, tuple(records))

    # A plane-line factor (0,1): always unstable.
    plane_lines = [fac for bd, fac in factors if bd == (0, 1)]
    if plane_lines:
        ell = _y_line_coeffs(plane_lines[0])
        g3 = _line_kernel_frame(ell)
        moved = act(FrameChange(IDENTITY2, g3), f)
        q0 = BinForm(2, [
            moved.coefficient(((2 - i, i), (1, 0, 1))) for i in range(3)
        ])
        g2 = IDENTITY2 if q0.is_zero() else _complete_basis2(q0.roots()[0][0])
        cert = _verified(
            Certificate(FrameChange(g2, g3), W_PLANE_FACTOR, MuSign.POSITIVE), f)
        return verdict(StabilityClass.UNSTABLE, cert,
                       "plane-line factor", "PlaneFactor", W_PLANE_FACTOR)

    # (1,0) x (1,2): semi-stable iff the intersection conic is smooth.
    quadric = [fac for bd, fac in factors if bd == (1, 2)]
    if quadric:
        line = next(fac for bd, fac in factors if bd == (1, 0))
        lp = _x_line_coeffs(line)
        p1root = (lp[1], -lp[0])
        g0 = restrict_x(quadric[0], p1root)
        x_rows = _x_root_rows(lp)
        if matrix_rank3(conic_gram(g0)) == 3:
            frame = _split_surface_frame(x_rows, g0)
            cert = _verified(
                Certificate(frame, W_SPLIT_SURFACE, MuSign.ZERO), f)
            return verdict(StabilityClass.STRICTLY_SEMISTABLE, cert,
                           "plane-fibre intersection conic",
                           "SmoothIntersectionConic", W_SPLIT_SURFACE)
        lines = split_conic(g0)
        if lines is None:
            raise RuntimeError("singular conic failed to split")
        g3 = _line_kernel_frame(lines[0])
        cert = _verified(Certificate(
            FrameChange(x_rows, g3), W_RAMIFIED_DOUBLE_FIBRE, MuSign.POSITIVE), f)
        return verdict(StabilityClass.UNSTABLE, cert,
                       "plane-fibre intersection conic",
                       "SingularIntersectionConic", W_RAMIFIED_DOUBLE_FIBRE)

    # (1,1) x (1,1): unstable iff the two ruled pieces share a fibre.
    bilinears = [fac for bd, fac in factors if bd == (1, 1)]
    if len(bilinears) == 2:
        a, b = _bilinear_lines(bilinears[0])
        c, d = _bilinear_lines(bilinears[1])
        w0, w1, w2 = _cross(a, c), \
            tuple(x + y for x, y in zip(_cross(a, d), _cross(b, c))), _cross(b, d)
        forms = [BinForm(2, [w0[i], w1[i], w2[i]]) for i in range(3)]
        g = forms[0]
        for h in forms[1:]:
            g = binform_gcd(g, h)
        if g.is_zero() or g.d >= 1:
            # a common fibre line exists
            ustar = (Fraction(1), Fraction(0)) if g.is_zero() else g.roots()[0][0]
            ell = tuple(ustar[0] * a[i] + ustar[1] * b[i] for i in range(3))
            if all(is_zero_scalar(x) for x in ell):
                ell = tuple(ustar[0] * c[i] + ustar[1] * d[i] for i in range(3))
            frame = FrameChange(_complete_basis2(ustar), _line_kernel_frame(ell))
            cert = _verified(Certificate(
                frame, W_RAMIFIED_DOUBLE_FIBRE, MuSign.POSITIVE), f)
            return verdict(StabilityClass.UNSTABLE, cert,
                           "two ruled pieces", "CommonFibre",
                           W_RAMIFIED_DOUBLE_FIBRE)
        p1pt = _cross(a, b)
        if all(is_zero_scalar(x) for x in p1pt):
            raise RuntimeError("degenerate (1,1) factor")
        cp, dp = _line_value(c, p1pt), _line_value(d, p1pt)
        if is_zero_scalar(cp) and is_zero_scalar(dp):
            raise RuntimeError(
                "shared contracted point without a shared fibre")
        ustar = (dp, -cp)
        la = tuple(ustar[0] * a[i] + ustar[1] * b[i] for i in range(3))
        row1 = _point_on_line(la, avoid=p1pt)
        frame = FrameChange(
            _complete_basis2(ustar), _complete_basis3(p1pt, row1))
        cert = _verified(
            Certificate(frame, W_NON_A1_ON_SECTION, MuSign.ZERO), f)
        return verdict(StabilityClass.STRICTLY_SEMISTABLE, cert,
                       "two ruled pieces", "DistinctFibres",
                       W_NON_A1_ON_SECTION)

    # Two fibre planes and an irreducible conic cylinder.
    if bidegrees == [(0, 2), (1, 0), (1, 0)]:
        l1, l2 = [
            _x_line_coeffs(fac) for bd, fac in factors if bd == (1, 0)
        ]
        conic_factor = next(fac for bd, fac in factors if bd == (0, 2))
        conic = _conic_of(conic_factor)
        if is_zero_scalar(l1[0] * l2[1] - l1[1] * l2[0]):
            # repeated fibre plane
            frame = FrameChange(_x_root_rows(l1), IDENTITY3)
            cert = _verified(Certificate(
                frame, W_RAMIFIED_DOUBLE_FIBRE, MuSign.POSITIVE), f)
            return verdict(StabilityClass.UNSTABLE, cert,
                           "repeated fibre plane", "NonReducedVerticalPart",
                           W_RAMIFIED_DOUBLE_FIBRE)
        x_rows = (_x_root_rows(l2)[0], _x_root_rows(l1)[0])
        if is_zero_scalar(det2(x_rows)):
            raise RuntimeError("fibre-plane roots coincide unexpectedly")
        frame = _split_surface_frame(x_rows, conic)
        cert = _verified(Certificate(frame, W_SPLIT_SURFACE, MuSign.ZERO), f)
        return verdict(StabilityClass.STRICTLY_SEMISTABLE, cert,
                       "fibre planes and conic cylinder",
                       "IrreducibleConicCylinder", W_SPLIT_SURFACE)

    raise RuntimeError(f"unhandled factor bidegrees: {bidegrees}")


def _conic_of(factor: BiPoly):
    from .bipoly import AffinePoly

    return AffinePoly(
        Y_VARS, {beta: c for ((_a, _b), beta), c in factor.terms.items()}
    )


# ---------------------------------------------------------------------------
# Top-level classification


def classify(f: BiPoly) -> Verdict:
    if f.is_zero():
        raise ValueError("cannot classify the zero polynomial")
    if f.bidegree != (2, 2):
        raise ValueError("classification is specific to bidegree (2, 2)")
    factors = bihomogeneous_factor(f)
    if len(factors) >= 2:
        return classify_reducible(f, factors)
    locus = singular_locus(f, factors=factors)
    semi_records, cert = check_semistability_conditions(f, locus)
    if cert is not None:
        return Verdict(StabilityClass.UNSTABLE, cert, tuple(semi_records))
    stab_records, cert = check_stability_conditions(f, locus)
    report = tuple(semi_records + stab_records)
    if cert is not None:
        return Verdict(StabilityClass.STRICTLY_SEMISTABLE, cert, report)
    return Verdict(StabilityClass.STABLE, None, report)


# ---------------------------------------------------------------------------
# Randomized falsification oracle


def _random_rows(rng: random.Random, n: int):
    while True:
        rows = tuple(
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
            for _ in range(n)
        )
        d = det2(rows) if n == 2 else det3(rows)
        if not is_zero_scalar(d):
            return rows


def random_destabilize_search(
    f: BiPoly, trials: int, seed: int
) -> Optional[Certificate]:
    """Sample random frames and solve the weight cone over the transformed
    support; returns the first verifying certificate (Positive preferred over
    Zero per frame) or None.  Deterministic given the seed."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    for trial in range(trials):
        if trial == 0:
            frame = FrameChange.identity()
        else:
            frame = FrameChange(_random_rows(rng, 2), _random_rows(rng, 3))
        support = set(act(frame, f).terms)
        for strict in (True, False):
            w = find_destabilizing_weight(support, strict)
            if w is None:
                continue
            value = mu(act(frame, f), w)
            sign = MuSign.POSITIVE if value > 0 else MuSign.ZERO
            cert = Certificate(frame, w, sign)
            if cert.verify(f):
                return cert
    return None
