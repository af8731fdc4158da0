"""Limiting mixed Hodge structures as finite dimension tables.

A degeneration's limiting structure is recorded per cohomological degree k
as a Hodge--Deligne table d[p][w] = dim Gr_F^p Gr^W_w together with, per
Hodge level p, the multiset of rotation numbers of the finite-order part of
the monodromy acting on Gr_F^p (stored value a means eigenvalue
exp(-2*pi*i*a); the upper-branch view is obtained by complementing).

From these the two invariants driving the L2-metric asymptotics are read
off:

    alpha(p, q) = sum of the rotation values at level p in degree p+q,
    beta(p, q)  = sum_r r * d[p][(p+q) + r].

``hodge_expansion`` packages them as the coefficients of log|t|^2 and
log log|t|^(-1) in the logarithm of the L2 norm of a determinant section.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DescriptorError, MissingDataError, PreconditionError
from .exactalg import RotationNumber
from .monodromy import BranchOfLog

_ZERO = Fraction(0)


class HodgeDeligneTable:
    """Graded dimensions d[p][w] of one cohomological degree.

    Validated against Hodge symmetry d[p][w] = d[w-p][w] and the nilpotent
    symmetry d[p][k+r] = d[p-r][k-r].
    """

    __slots__ = ("degree", "dims")

    def __init__(self, degree, dims):
        if degree < 0:
            raise DescriptorError("degree must be nonnegative", path="degree")
        cleaned = {}
        for (p, w), dim in dict(dims).items():
            dim = int(dim)
            if dim < 0:
                raise DescriptorError(
                    f"negative dimension at (p={p}, w={w})", path="table"
                )
            if dim == 0:
                continue
            if not 0 <= p <= degree:
                raise DescriptorError(
                    f"Hodge level p={p} outside [0, {degree}]", path="table"
                )
            if not 0 <= w <= 2 * degree:
                raise DescriptorError(
                    f"weight w={w} outside [0, {2 * degree}]", path="table"
                )
            cleaned[(p, w)] = dim
        self.degree = degree
        self.dims = cleaned
        self._validate()

    def _validate(self):
        k = self.degree
        for (p, w), dim in self.dims.items():
            if self.dims.get((w - p, w), 0) != dim:
                raise DescriptorError(
                    f"Hodge symmetry fails at (p={p}, w={w}): "
                    f"d[{p}][{w}]={dim} but d[{w - p}][{w}]="
                    f"{self.dims.get((w - p, w), 0)}",
                    path="table",
                )
        for (p, w), dim in self.dims.items():
            r = w - k
            if r >= 1 and self.dims.get((p - r, k - r), 0) != dim:
                raise DescriptorError(
                    f"nilpotent symmetry fails: d[{p}][{w}]={dim} but "
                    f"d[{p - r}][{k - r}]={self.dims.get((p - r, k - r), 0)}",
                    path="table",
                )
        # ... and in the other direction (no unmatched low-weight entries).
        for (p, w), dim in self.dims.items():
            r = k - w
            if r >= 1 and self.dims.get((p + r, k + r), 0) != dim:
                raise DescriptorError(
                    f"nilpotent symmetry fails: d[{p}][{w}]={dim} but "
                    f"d[{p + r}][{k + r}]={self.dims.get((p + r, k + r), 0)}",
                    path="table",
                )

    def betti(self):
        return sum(self.dims.values())

    def level_dimension(self, p):
        return sum(d for (q, _), d in self.dims.items() if q == p)

    def levels(self):
        return sorted({p for (p, _) in self.dims})

    def beta(self, p):
        k = self.degree
        return sum(
            Fraction(w - k) * d for (q, w), d in self.dims.items() if q == p
        )

    def is_pure(self):
        return all(w == self.degree for (_, w) in self.dims)

    def items(self):
        return sorted(self.dims.items())


@dataclass(frozen=True)
class DegreeData:
    """Table plus per-level rotation multisets for one degree."""

    table: HodgeDeligneTable
    rotations: dict = field(default_factory=dict)

    def __post_init__(self):
        fixed = {}
        for p, rots in self.rotations.items():
            fixed[int(p)] = tuple(sorted(rots))
        object.__setattr__(self, "rotations", fixed)
        for p, rots in self.rotations.items():
            expected = self.table.level_dimension(p)
            if len(rots) != expected:
                raise DescriptorError(
                    f"degree {self.table.degree}: level {p} carries "
                    f"{len(rots)} rotations but the table has dimension "
                    f"{expected}",
                    path="rotations",
                )
        for p in self.table.levels():
            if p not in self.rotations:
                raise DescriptorError(
                    f"degree {self.table.degree}: level {p} has no rotation "
                    "data (use zeros for unipotent monodromy)",
                    path="rotations",
                )

    def level_rotations(self, p):
        return self.rotations.get(p, ())


class LimitingMHS:
    """Limiting mixed Hodge structure data for a fibration of dimension n.

    Degrees absent from ``degrees`` are treated as pure with trivial
    monodromy when ``pure_outside`` is set (they then contribute zero to
    every alpha/beta sum); otherwise querying them is an error.
    """

    def __init__(self, n, degrees, pure_outside=True):
        self.n = int(n)
        self.degrees = {}
        for k, data in dict(degrees).items():
            k = int(k)
            if not 0 <= k <= 2 * self.n:
                raise DescriptorError(f"degree {k} outside [0, {2 * self.n}]")
            if data.table.degree != k:
                raise DescriptorError(
                    f"table for degree {k} is labelled {data.table.degree}"
                )
            self.degrees[k] = data
        self.pure_outside = bool(pure_outside)

    def _degree(self, k):
        if k in self.degrees:
            return self.degrees[k]
        if self.pure_outside:
            return None
        raise MissingDataError(f"degree {k} absent from the limiting data", field=f"degrees/{k}")

    def alpha(self, p, q, branch):
        """Sum of rotation exponents at level p in degree p+q for a branch."""
        data = self._degree(p + q)
        if data is None:
            return _ZERO
        rots = data.level_rotations(p)
        if branch is BranchOfLog.LOWER:
            return sum((r.value for r in rots), _ZERO)
        return sum((r.complement().value for r in rots), _ZERO)

    def beta(self, p, q):
        data = self._degree(p + q)
        if data is None:
            return _ZERO
        return data.table.beta(p)

    def is_unipotent(self):
        return all(
            r.value == 0
            for data in self.degrees.values()
            for rots in data.rotations.values()
            for r in rots
        )

    def common_rotation_denominator(self):
        denom = 1
        for data in self.degrees.values():
            for rots in data.rotations.values():
                for r in rots:
                    d = r.value.denominator
                    denom = denom * d // math.gcd(denom, d)
        return denom

    def level_pairs(self):
        """All (p, q) with table content, across present degrees."""
        pairs = []
        for k, data in sorted(self.degrees.items()):
            for p in data.table.levels():
                pairs.append((p, k - p))
        return pairs


def alpha(mhs, p, q, branch):
    return mhs.alpha(p, q, branch)


def beta(mhs, p, q):
    return mhs.beta(p, q)


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Exact coefficients of log|t|^2 and log log|t|^(-1)."""

    log_coeff: Fraction
    loglog_coeff: Fraction

    def __iter__(self):
        return iter((self.log_coeff, self.loglog_coeff))


def hodge_expansion(mhs, p, q):
    """Expansion of log of the L2 norm of a trivializing determinant section
    of the (p, q) Hodge bundle: the norm behaves like
    |t|^(2*alpha) * (log|t|^(-1))^beta, so the coefficient of log|t|^2 is
    alpha (lower branch) and that of log log|t|^(-1) is beta."""
    return AsymptoticExpansion(
        log_coeff=mhs.alpha(p, q, BranchOfLog.LOWER),
        loglog_coeff=mhs.beta(p, q),
    )


@dataclass(frozen=True)
class BetaSymmetryReport:
    antisymmetry_failures: tuple
    duality_failures: tuple

    @property
    def antisymmetry_ok(self):
        return not self.antisymmetry_failures

    @property
    def duality_ok(self):
        return not self.duality_failures

    @property
    def ok(self):
        return self.antisymmetry_ok and self.duality_ok


def beta_symmetry_check(mhs):
    """Check beta(p,q) = -beta(q,p) within degrees, and
    beta(p,q) = beta(n-q,n-p) across degrees k and 2n-k when both are
    present.  Returns per-identity failure lists."""
    anti = []
    dual = []
    n = mhs.n
    for k, data in sorted(mhs.degrees.items()):
        for p in range(0, k + 1):
            q = k - p
            b1 = mhs.beta(p, q)
            b2 = mhs.beta(q, p)
            if b1 != -b2:
                anti.append((p, q, b1, b2))
    for k, data in sorted(mhs.degrees.items()):
        if (2 * n - k) not in mhs.degrees:
            continue
        for p in range(0, k + 1):
            q = k - p
            b1 = mhs.beta(p, q)
            b2 = mhs.beta(n - q, n - p)
            if b1 != b2:
                dual.append((p, q, b1, b2))
    return BetaSymmetryReport(tuple(anti), tuple(dual))


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------


def _pure_degree(k, level_dims, rotations=None):
    dims = {(p, k): d for p, d in level_dims.items() if d}
    table = HodgeDeligneTable(k, dims)
    rots = {}
    for p, d in level_dims.items():
        if not d:
            continue
        if rotations and p in rotations:
            rots[p] = rotations[p]
        else:
            rots[p] = tuple(RotationNumber(0) for _ in range(d))
    return DegreeData(table=table, rotations=rots)


def pure(k, level_dims, n=None):
    """A single pure degree with trivial monodromy.

    ``level_dims`` maps Hodge level p to dim Gr_F^p (must be symmetric:
    dims at p and k-p agree)."""
    n = k if n is None else n
    return LimitingMHS(n, {k: _pure_degree(k, dict(level_dims))})


def nodal_elliptic():
    """Degeneration of elliptic curves acquiring one node: degree 1 carries
    d[1][2] = d[0][0] = 1 with trivial finite-order part."""
    k1 = DegreeData(
        table=HodgeDeligneTable(1, {(1, 2): 1, (0, 0): 1}),
        rotations={1: (RotationNumber(0),), 0: (RotationNumber(0),)},
    )
    degrees = {
        0: _pure_degree(0, {0: 1}),
        1: k1,
        2: _pure_degree(2, {1: 1}),
    }
    return LimitingMHS(1, degrees)


def odp(n, count, middle_level_dims=None):
    """One-parameter degeneration with ``count`` ordinary double points.

    Only degree n deviates from a pure structure (Picard-Lefschetz):

    * n odd: the vanishing cycles add d[(n+1)/2][n+1] = d[(n-1)/2][n-1] =
      count on top of the pure part, with trivial finite-order monodromy;
    * n even: the table stays pure of weight n, and the finite-order part
      acts on level n/2 with eigenvalue -1 repeated ``count`` times.

    ``middle_level_dims`` optionally supplies the pure part of degree n
    (mapping level -> dimension); only the n-even case requires a nonzero
    middle level, which is extended automatically if absent.  Degrees other
    than n are treated as pure with trivial monodromy.
    """
    if n < 1:
        raise PreconditionError("fiber dimension must be >= 1")
    if count < 1:
        raise PreconditionError("node count must be >= 1")
    pure_part = {int(p): int(d) for p, d in (middle_level_dims or {}).items()}
    dims = {}
    rotations = {}
    half = Fraction(1, 2)
    for p, d in pure_part.items():
        if d:
            dims[(p, n)] = dims.get((p, n), 0) + d
    if n % 2 == 1:
        hi, lo = (n + 1) // 2, (n - 1) // 2
        dims[(hi, n + 1)] = dims.get((hi, n + 1), 0) + count
        dims[(lo, n - 1)] = dims.get((lo, n - 1), 0) + count
    else:
        dims[(n // 2, n)] = dims.get((n // 2, n), 0) + count
    table = HodgeDeligneTable(n, dims)
    for p in table.levels():
        size = table.level_dimension(p)
        if n % 2 == 0 and p == n // 2:
            rotated = [RotationNumber(half)] * count
            rotated += [RotationNumber(0)] * (size - count)
            rotations[p] = tuple(sorted(rotated))
        else:
            rotations[p] = tuple(RotationNumber(0) for _ in range(size))
    return LimitingMHS(n, {n: DegreeData(table=table, rotations=rotations)})


_PRESET_BUILDERS = {
    "nodal_elliptic": nodal_elliptic,
    "odp": odp,
    "pure": pure,
}


def preset(name, **kwargs):
    """Build a named preset limiting structure."""
    try:
        builder = _PRESET_BUILDERS[name]
    except KeyError:
        raise DescriptorError(f"unknown preset {name!r}", path="lmhs/preset")
    return builder(**kwargs)


# ---------------------------------------------------------------------------
# JSON (de)serialization:
# degrees as {"k": k, "table": [[p, w, dim], ...], "rotations": {p: ["a/b"]}}
# ---------------------------------------------------------------------------


def degree_to_json(k, data):
    return {
        "k": k,
        "table": [[p, w, d] for (p, w), d in data.table.items()],
        "rotations": {
            str(p): [str(r.value) for r in rots]
            for p, rots in sorted(data.rotations.items())
        },
    }


def mhs_to_json(mhs):
    return {
        "n": mhs.n,
        "pure_outside": mhs.pure_outside,
        "degrees": [degree_to_json(k, d) for k, d in sorted(mhs.degrees.items())],
    }


def degree_from_json(obj):
    try:
        k = int(obj["k"])
        dims = {(int(p), int(w)): int(d) for p, w, d in obj.get("table", [])}
        rotations = {
            int(p): tuple(RotationNumber(Fraction(v)) for v in rots)
            for p, rots in obj.get("rotations", {}).items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise DescriptorError(f"malformed degree object: {exc}", path="lmhs/degrees")
    return k, DegreeData(table=HodgeDeligneTable(k, dims), rotations=rotations)


def mhs_from_json(obj, n=None):
    n = int(obj.get("n", n))
    degrees = dict(degree_from_json(d) for d in obj.get("degrees", []))
    return LimitingMHS(n, degrees, pure_outside=bool(obj.get("pure_outside", True)))
