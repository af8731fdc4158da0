"""Deligne extensions on the punctured disc and elementary exponents.

A flat bundle with quasi-unipotent monodromy T is modeled through a
*twisted frame*: a basis built from eigenvectors of the semisimple part
T_s, labelled by integer exponents k_j with a common denominator l (the
order of T_s), together with the nilpotent logarithm of the unipotent part
expressed in that frame.  Sections of the extension are vectors of
truncated polynomials in the disc coordinate q over this frame.

Pulling a section back through the degree-l base change q = t^l and
dividing by the largest possible power of t produces a nonzero value at
the origin; the power used is the section's *elementary exponent*, and the
value is a T_s-eigenvector.  :func:`adapt_basis` upgrades a basis of a
saturated subbundle to one where every member has a well-defined exponent,
by the correction loop with strictly increasing exponents.

:func:`elementary_divisor_oracle` recomputes the same exponent multiset by
a completely different route: Smith-style reduction, over truncated power
series in t, of the matrix of pulled-back generators.  It exists so the
two paths can be checked against each other.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionError,
    InsufficientPrecisionError,
    PreconditionError,
)
from .exactalg import (
    RationalMatrix,
    RotationNumber,
    chevalley_decompose,
    eigen_rotations,
    nilpotent_log,
    quasi_unipotence_order,
)

_ZERO = Fraction(0)


class BranchOfLog(enum.Enum):
    """Branch of the logarithm fixing a Deligne extension.

    LOWER maps the eigenvalue exp(-2*pi*i*a), a in [0,1), to the exponent a;
    UPPER maps exp(2*pi*i*u), u in [0,1), to u.
    """

    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class TwistedFrame:
    """Eigenvector frame of an extension: labels k_j over a common order l.

    ``labels[j]/ell`` is the rotation of the T_s eigenvalue on the j-th
    frame vector (lower convention: eigenvalue exp(-2*pi*i*k_j/ell)).  The
    optional ``nilpotent`` matrix is log(T_u) written in this frame; the
    exponent algorithms never consult it, but it completes the data of the
    monodromy and is validated here.
    """

    ell: int
    labels: tuple[int, ...]
    nilpotent: RationalMatrix | None = None

    def __post_init__(self):
        if self.ell < 1:
            raise PreconditionError("frame order must be >= 1")
        object.__setattr__(self, "labels", tuple(int(k) for k in self.labels))
        if not self.labels:
            raise PreconditionError("empty frame")
        if any(not 0 <= k < self.ell for k in self.labels):
            raise PreconditionError("frame labels must lie in [0, ell)")
        if self.nilpotent is not None:
            n = self.nilpotent
            if not n.is_square or n.rows != self.rank:
                raise DimensionError("nilpotent part has wrong shape")
            power = n
            for _ in range(self.rank):
                if power.is_zero():
                    break
                power = power * n
            if not power.is_zero():
                raise PreconditionError("frame nilpotent part is not nilpotent")

    @property
    def rank(self):
        return len(self.labels)

    def rotations(self):
        return [RotationNumber(Fraction(k, self.ell)) for k in self.labels]


@dataclass(frozen=True)
class TwistedFrameSection:
    """A section written over a twisted frame.

    ``coeffs[j]`` is the coefficient polynomial of the j-th frame vector,
    stored dense and low-degree first, truncated at degree ``truncation``
    (exclusive).
    """

    coeffs: tuple[tuple[Fraction, ...], ...]
    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise PreconditionError("truncation degree must be >= 1")
        fixed = tuple(
            tuple(Fraction(c) for c in poly)[: self.truncation]
            + (_ZERO,) * max(0, self.truncation - len(poly))
            for poly in self.coeffs
        )
        object.__setattr__(self, "coeffs", fixed)

    @property
    def rank(self):
        return len(self.coeffs)

    def constant_vector(self):
        return [poly[0] for poly in self.coeffs]

    def is_zero(self):
        return all(c == 0 for poly in self.coeffs for c in poly)

    def __sub__(self, other):
        if self.rank != other.rank or self.truncation != other.truncation:
            raise DimensionError("section shape mismatch")
        return TwistedFrameSection(
            tuple(
                tuple(a - b for a, b in zip(pa, pb))
                for pa, pb in zip(self.coeffs, other.coeffs)
            ),
            self.truncation,
        )

    def scaled(self, c):
        c = Fraction(c)
        return TwistedFrameSection(
            tuple(tuple(c * x for x in poly) for poly in self.coeffs),
            self.truncation,
        )


def section(frame, polys, truncation=None):
    """Build a section over ``frame`` from per-component coefficient lists."""
    if len(polys) != frame.rank:
        raise DimensionError("one coefficient polynomial per frame vector required")
    if truncation is None:
        truncation = max(2 * frame.ell, max((len(p) for p in polys), default=1))
    return TwistedFrameSection(tuple(tuple(p) for p in polys), truncation)


@dataclass(frozen=True)
class ExponentReport:
    """Result of :func:`adapt_basis`.

    ``exponents`` is the sorted multiset of elementary exponents;
    ``adapted_basis`` keeps the order of the input sections, and
    ``integer_exponents`` aligns with it (exponent = a_j / ell).
    """

    exponents: tuple[RotationNumber, ...]
    adapted_basis: tuple[TwistedFrameSection, ...]
    integer_exponents: tuple[int, ...]
    ell: int


def residue_rotations(t, branch=BranchOfLog.LOWER):
    """Eigenvalue rotations of the extension residue for a monodromy matrix.

    The unipotent part contributes zeros; each finite-order eigenvalue
    contributes its exponent for the chosen branch of the logarithm.
    """
    if not isinstance(t, RationalMatrix):
        t = RationalMatrix(t)
    semisimple, _ = chevalley_decompose(t)
    angles = eigen_rotations(semisimple)
    if branch is BranchOfLog.UPPER:
        return sorted(angles)
    return sorted(a.complement() for a in angles)


def _initial_data(frame, sec):
    """(a, v): minimal label among nonzero constants, and the pulled-back
    section's value at the origin (supported on label-a frame indices)."""
    const = sec.constant_vector()
    live = [j for j, c in enumerate(const) if c != 0]
    if not live:
        raise PreconditionError("section vanishes at the origin")
    a = min(frame.labels[j] for j in live)
    vec = [
        const[j] if frame.labels[j] == a else _ZERO for j in range(frame.rank)
    ]
    return a, vec


def elementary_exponent(frame, sec):
    """The elementary exponent kappa(sigma) = (min label with nonzero
    constant coefficient) / ell, for a section not vanishing at 0."""
    _check_section(frame, sec)
    a, _ = _initial_data(frame, sec)
    return RotationNumber(Fraction(a, frame.ell))


def _check_section(frame, sec):
    if sec.rank != frame.rank:
        raise DimensionError("section rank does not match frame rank")


def adapt_basis(frame, sections):
    """Adapt a basis of a saturated subbundle to the frame's eigenstructure.

    Input sections must have linearly independent values at the origin.
    Returns sections spanning the same flag where each member has a
    well-defined exponent and the pulled-back initial values are
    independent T_s eigenvectors.  The correction loop subtracts, at each
    obstruction, the matching combination of already-adapted sections
    (ascending index order); every pass strictly increases the candidate
    exponent, which is bounded by (ell-1)/ell, so the loop terminates.
    """
    sections = list(sections)
    if not sections:
        raise PreconditionError("no sections given")
    for sec in sections:
        _check_section(frame, sec)
    truncations = {sec.truncation for sec in sections}
    if len(truncations) != 1:
        raise DimensionError("sections have mixed truncation degrees")
    trunc = truncations.pop()
    if trunc < frame.ell:
        raise InsufficientPrecisionError(
            f"truncation degree {trunc} < ell = {frame.ell}: exponents below 1 "
            "are not certified"
        )
    const_matrix = RationalMatrix.from_columns(
        [sec.constant_vector() for sec in sections]
    )
    if const_matrix.rank() != len(sections):
        raise PreconditionError("section values at the origin are dependent")

    thetas = []  # (section, integer exponent, initial eigenvector)
    for sec in sections:
        current = sec
        last_exp = -1
        for _ in range(frame.ell + 1):
            if current.is_zero():
                raise PreconditionError(
                    "correction loop exhausted a section: inputs were dependent"
                )
            a, vec = _initial_data(frame, current)
            if a <= last_exp:
                raise InsufficientPrecisionError(
                    "exponent failed to increase in the correction loop"
                )
            last_exp = a
            if not thetas:
                break
            span = RationalMatrix.from_columns([w for (_, _, w) in thetas])
            mus = span.solve_in_span(vec)
            if mus is None:
                break
            # Obstruction: subtract the matching adapted sections.  Only
            # members with the same exponent can contribute (their initial
            # eigenvectors live on disjoint label classes).
            for j, mu in enumerate(mus):
                if mu != 0 and thetas[j][1] != a:
                    raise PreconditionError(
                        "initial-value relation mixes distinct eigenvalues"
                    )
            for j, mu in enumerate(mus):
                if mu != 0:
                    current = current - thetas[j][0].scaled(mu)
        else:
            raise InsufficientPrecisionError(
                "correction loop failed to terminate within ell steps"
            )
        thetas.append((current, last_exp, vec))

    integer_exps = tuple(a for (_, a, _) in thetas)
    return ExponentReport(
        exponents=tuple(
            sorted(RotationNumber(Fraction(a, frame.ell)) for a in integer_exps)
        ),
        adapted_basis=tuple(th for (th, _, _) in thetas),
        integer_exponents=integer_exps,
        ell=frame.ell,
    )


def exponents_vs_eigenvalues_check(exponents, rotations):
    """True iff {exp(-2*pi*i*alpha_j)} matches the given eigenvalue multiset.

    ``exponents`` are elementary exponents (lower convention) and
    ``rotations`` store values a meaning eigenvalue exp(-2*pi*i*a), so the
    comparison is plain multiset equality.
    """
    exponents = list(exponents)
    rotations = list(rotations)
    if len(exponents) != len(rotations):
        raise DimensionError(
            f"cardinality mismatch: {len(exponents)} exponents vs "
            f"{len(rotations)} eigenvalues"
        )
    return sorted(exponents) == sorted(rotations)


def upper_extension_exponents(t, rotations):
    """Exponents of the upper-extension comparison for given eigenvalue data.

    ``rotations`` store values a meaning eigenvalue exp(-2*pi*i*a) (the
    project-wide storage convention); the upper-branch exponent u satisfies
    exp(2*pi*i*u) = eigenvalue, i.e. u = (1 - a) mod 1.  When a monodromy
    matrix is supplied, the exponent denominators are checked against its
    quasi-unipotence order.
    """
    out = [r.complement() for r in rotations]
    if t is not None:
        if not isinstance(t, RationalMatrix):
            t = RationalMatrix(t)
        order = quasi_unipotence_order(t)
        for u in out:
            if order % u.value.denominator != 0:
                raise PreconditionError(
                    f"exponent {u} does not divide the monodromy order {order}"
                )
    return sorted(out)


def frame_from_matrix(t):
    """Bridge a raw monodromy matrix to a twisted frame.

    Only available when T_s diagonalizes over Q, i.e. all eigenvalues are
    +-1 (T_s^2 = I); otherwise the frame must be supplied directly.
    Returns (frame, basis) where the columns of ``basis`` express the frame
    vectors in the original coordinates.
    """
    if not isinstance(t, RationalMatrix):
        t = RationalMatrix(t)
    semisimple, unipotent = chevalley_decompose(t)
    ident = RationalMatrix.identity(t.rows)
    if semisimple * semisimple != ident:
        raise PreconditionError(
            "semisimple part does not square to the identity; supply the "
            "twisted frame directly"
        )
    ell = 1 if semisimple == ident else 2
    plus = (semisimple - ident).nullspace()
    minus = (semisimple + ident).nullspace() if ell == 2 else []
    columns = plus + minus
    labels = [0] * len(plus) + [ell // 2] * len(minus)
    basis = RationalMatrix.from_columns(columns)
    if basis.rank() != t.rows:
        raise PreconditionError("eigenspaces do not span; matrix not semisimple")
    log_u = nilpotent_log(unipotent)
    frame_nilpotent = basis.inverse() * log_u * basis
    return TwistedFrame(ell=ell, labels=tuple(labels), nilpotent=frame_nilpotent), basis


# ---------------------------------------------------------------------------
# Independent oracle: Smith reduction over truncated power series in t.
# ---------------------------------------------------------------------------
#
# Every entry of the generator matrix lies in t^(k_i) * Z[[t^ell]] (row i of
# the pulled-back frame), and the elimination below preserves that shape, so
# an entry is stored as the list of its t^ell-coefficients plus a per-row
# residue class.  The residue bookkeeping keeps all multiplications at the
# short length `truncation` instead of ell * truncation.


def _series_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0:
            continue
        top = n - i
        for j, y in enumerate(b[:top]):
            if y != 0:
                out[i + j] += x * y
    return out


def _series_first_nonzero(a):
    for i, x in enumerate(a):
        if x != 0:
            return i
    return None


def _shift_up(a, k, n):
    if k == 0:
        return a
    return [0] * k + a[: n - k]


@dataclass(frozen=True)
class OracleResult:
    exponents: tuple[RotationNumber, ...]
    graded_rotations: tuple[RotationNumber, ...]


def elementary_divisor_oracle(frame, sections):
    """Exponent multiset via Smith reduction over truncated t-series.

    The generators t^(k_i) f_j(t^ell) of the pulled-back submodule are laid
    out as columns over Z[[t]]/(t^(ell*truncation)) and reduced by
    division-free local-ring elimination: the pivot is an entry of minimal
    t-valuation, and other rows/columns are cleared through
    row_i <- u * row_i - (entry/t^v) * row_pivot with u the pivot's unit
    part, which is exact at fixed truncation because everything the shifted
    factors multiply has valuation at least v.  The diagonal valuations
    divided by ell are the elementary exponents.

    The row transforms are tracked at t = 0, which yields a basis of the
    fiber of the saturation; intersecting it with the label eigenspaces
    gives the T_s rotation multiset on the graded quotient, returned
    alongside for cross-checking.
    """
    sections = list(sections)
    if not sections:
        raise PreconditionError("no sections given")
    for sec in sections:
        _check_section(frame, sec)
    ell = frame.ell
    rank = frame.rank
    h = len(sections)
    trunc = min(sec.truncation for sec in sections)
    if trunc < ell:
        raise InsufficientPrecisionError("truncation degree below ell")

    # Integer matrix of t^ell-coefficient lists; clearing each generator's
    # denominators rescales it by a unit of the local ring, leaving the
    # module unchanged.  res[i] is the common residue class of row i.
    res = list(frame.labels)
    matrix = [[None] * h for _ in range(rank)]
    for j, sec in enumerate(sections):
        denom = 1
        for poly in sec.coeffs:
            for c in poly:
                denom = denom * c.denominator // math.gcd(denom, c.denominator)
        for i in range(rank):
            matrix[i][j] = [int(c * denom) for c in sec.coeffs[i][:trunc]]

    def valuation(i, j):
        e = _series_first_nonzero(matrix[i][j])
        return None if e is None else res[i] + ell * e

    # Row transforms evaluated at t = 0 (columns of the inverse transform).
    uinv0 = [[Fraction(int(i == j)) for j in range(rank)] for i in range(rank)]

    valuations = []
    for step in range(h):
        pivot = None
        for i in range(step, rank):
            for j in range(step, h):
                v = valuation(i, j)
                if v is not None and (pivot is None or v < pivot[0]):
                    pivot = (v, i, j)
        if pivot is None:
            raise PreconditionError(
                "generators are dependent over the series ring (zero column)"
            )
        v, pi, pj = pivot
        if pi != step:
            matrix[pi], matrix[step] = matrix[step], matrix[pi]
            res[pi], res[step] = res[step], res[pi]
            for row in uinv0:
                row[pi], row[step] = row[step], row[pi]
        if pj != step:
            for row in matrix:
                row[pj], row[step] = row[step], row[pj]
        e0 = (v - res[step]) // ell
        unit = matrix[step][step][e0:] + [0] * e0  # pivot / t^v: class 0
        u0 = Fraction(unit[0])

        def shifted_quotient(entry, entry_res):
            """(entry / t^v) as (class, s-series); valuation(entry) >= v."""
            c = entry_res - res[step]
            if c >= 0:
                return c, entry[e0:] + [0] * e0
            return c + ell, entry[e0 + 1 :] + [0] * (e0 + 1)

        # Clear the pivot column.
        for i in range(rank):
            if i == step:
                continue
            if _series_first_nonzero(matrix[i][step]) is None:
                continue
            w_class, w = shifted_quotient(matrix[i][step], res[i])
            for j in range(h):
                prod_u = _series_mul(unit, matrix[i][j], trunc)
                prod_w = _shift_up(
                    _series_mul(w, matrix[step][j], trunc),
                    (w_class + res[step] - res[i]) // ell,
                    trunc,
                )
                matrix[i][j] = [a - b for a, b in zip(prod_u, prod_w)]
            w0 = Fraction(w[0]) if w_class == 0 else Fraction(0)
            for row in uinv0:
                row[step] += row[i] * (w0 / u0)
                row[i] /= u0
        # Clear the pivot row (column operations; no transform tracking).
        for j in range(h):
            if j == step:
                continue
            if _series_first_nonzero(matrix[step][j]) is None:
                continue
            w_class, w = shifted_quotient(matrix[step][j], res[step])
            for i in range(rank):
                prod_u = _series_mul(unit, matrix[i][j], trunc)
                prod_w = _shift_up(
                    _series_mul(w, matrix[i][step], trunc),
                    w_class // ell,
                    trunc,
                )
                matrix[i][j] = [a - b for a, b in zip(prod_u, prod_w)]
        valuations.append(v)

    if any(v >= ell for v in valuations):
        raise InsufficientPrecisionError(
            "an elementary divisor reached t^ell: sections do not span a "
            "saturated subbundle"
        )

    exponents = tuple(
        sorted(RotationNumber(Fraction(v, ell)) for v in valuations)
    )

    # Fiber of the saturation at t = 0, in the original frame coordinates.
    fiber = RationalMatrix(
        [[uinv0[i][j] for j in range(h)] for i in range(rank)]
    )
    if fiber.rank() != h:
        raise PreconditionError("saturation fiber is degenerate")
    graded = []
    total = 0
    for label in sorted(set(frame.labels)):
        other_rows = [i for i in range(rank) if frame.labels[i] != label]
        if other_rows:
            sub = fiber.submatrix(other_rows, range(h))
            dim = h - sub.rank()
        else:
            dim = h
        total += dim
        graded.extend([RotationNumber(Fraction(label, ell))] * dim)
    if total != h:
        raise PreconditionError(
            "saturation fiber is not semisimple-stable; oracle inconsistency"
        )
    return OracleResult(exponents=exponents, graded_rotations=tuple(sorted(graded)))
