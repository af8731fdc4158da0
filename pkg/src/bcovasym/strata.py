"""Combinatorial model of a normal crossings special fiber.

The special fiber of a one-parameter degeneration is recorded through its
codimension-k strata D(k) (disjoint unions of k-fold intersections of
components): topological Euler characteristics, optional coherent Euler
characteristics chi(Omega^j), and the Chern numbers c_1 * c_(n-k) entering
the asymptotic formulas.  Absent strata mean empty ones (all invariants
zero), matching the disjoint-union definition of D(k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from .errors import (
    DescriptorError,
    MissingDataError,
    NotApplicableError,
    PreconditionError,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class StratumRecord:
    """Aggregated invariants of the codimension-k stratum D(k)."""

    codim: int
    chi_top: int
    chi_struct: int | None = None
    hodge_chis: tuple | None = None  # chi(Omega^j) for j = 0..dim
    chern_c1cd: Fraction | None = None  # integral of c_1(Omega) c_(n-k)(Omega)

    def __post_init__(self):
        if self.codim < 1:
            raise DescriptorError("stratum codimension must be >= 1", path="strata")
        if self.hodge_chis is not None:
            object.__setattr__(
                self, "hodge_chis", tuple(Fraction(x) for x in self.hodge_chis)
            )
        if self.chern_c1cd is not None:
            object.__setattr__(self, "chern_c1cd", Fraction(self.chern_c1cd))


@dataclass(frozen=True)
class GeneralFiberData:
    """Invariants of a general (smooth) fiber."""

    n: int
    chi_top: int | None = None
    chi_struct: int | None = None
    hodge_chis: tuple | None = None
    betti: tuple | None = None
    cy_type: str = "calabi_yau"  # calabi_yau | strict | abelian | hyperkahler

    def __post_init__(self):
        if self.n < 1:
            raise DescriptorError("fiber dimension must be >= 1", path="fiber/n")
        if self.cy_type not in ("calabi_yau", "strict", "abelian", "hyperkahler"):
            raise DescriptorError(
                f"unknown Calabi-Yau type {self.cy_type!r}", path="fiber/cy_type"
            )
        if self.hodge_chis is not None:
            object.__setattr__(
                self, "hodge_chis", tuple(Fraction(x) for x in self.hodge_chis)
            )
        if self.betti is not None:
            object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        # Strict Calabi-Yau: chi(O) = 1 + (-1)^n, validated only when given.
        if self.cy_type == "strict" and self.chi_struct is not None:
            expected = 1 + (-1) ** self.n
            if self.chi_struct != expected:
                raise DescriptorError(
                    f"strict Calabi-Yau fiber must have chi(O) = {expected}, "
                    f"got {self.chi_struct}",
                    path="fiber/chi_struct",
                )

    def require_chi_top(self):
        if self.chi_top is None:
            raise MissingDataError(
                "topological Euler characteristic of the general fiber is "
                "required",
                field="fiber/chi_top",
            )
        return self.chi_top


@dataclass(frozen=True)
class SpecialFiberModel:
    """A normal crossings special fiber: components and strata data.

    ``chi_top`` optionally overrides the strata-derived Euler
    characteristic for models that are not in normal crossings form (the
    dimension-3/4 formulas accept such fibers).
    """

    n: int
    components: tuple  # ((name, multiplicity), ...)
    strata: dict  # codim -> StratumRecord
    b_integral: Fraction | None = None  # integral of c_n(Omega_X) over B
    quadruple_count: int | None = None
    semistable: bool = False
    kulikov: bool = False
    chi_top: int | None = None

    def __post_init__(self):
        comps = tuple((str(n_), int(m)) for n_, m in self.components)
        object.__setattr__(self, "components", comps)
        strata = {int(k): rec for k, rec in dict(self.strata).items()}
        object.__setattr__(self, "strata", strata)
        if self.b_integral is not None:
            object.__setattr__(self, "b_integral", Fraction(self.b_integral))
        if self.n < 1:
            raise DescriptorError("relative dimension must be >= 1", path="n")
        if not comps:
            raise DescriptorError("at least one component required", path="components")
        for name, mult in comps:
            if mult < 1:
                raise DescriptorError(
                    f"component {name!r} has multiplicity {mult} < 1",
                    path="components",
                )
        if self.semistable and any(m != 1 for _, m in comps):
            raise DescriptorError(
                "semistable models must have reduced special fiber "
                "(all multiplicities 1)",
                path="components",
            )
        if self.kulikov and self.b_integral not in (None, 0):
            raise DescriptorError(
                "Kulikov models have B = 0, so the B-integral must vanish",
                path="b_integral",
            )
        for k, rec in strata.items():
            if rec.codim != k:
                raise DescriptorError(
                    f"stratum keyed {k} is labelled codim {rec.codim}",
                    path=f"strata/{k}",
                )
            if not 1 <= k <= self.n + 1:
                raise DescriptorError(
                    f"stratum codimension {k} outside [1, {self.n + 1}]",
                    path=f"strata/{k}",
                )
            if k == self.n + 1:
                if rec.chi_top < 0:
                    raise DescriptorError(
                        "the point stratum has chi = cardinality >= 0",
                        path=f"strata/{k}",
                    )
                if rec.chern_c1cd is not None:
                    raise DescriptorError(
                        "the point stratum carries no Chern data",
                        path=f"strata/{k}",
                    )
            dim = self.n - k + 1
            if rec.hodge_chis is not None and len(rec.hodge_chis) > dim + 1:
                raise DescriptorError(
                    f"stratum {k} has {len(rec.hodge_chis)} coherent Euler "
                    f"characteristics but dimension {dim}",
                    path=f"strata/{k}",
                )
        if (
            self.quadruple_count is not None
            and 4 in strata
            and strata[4].chi_top != self.quadruple_count
        ):
            raise DescriptorError(
                f"quadruple count {self.quadruple_count} does not match "
                f"chi(D(4)) = {strata[4].chi_top}",
                path="quadruple_count",
            )

    # -- accessors (absent strata are empty) ---------------------------

    def chi(self, k):
        rec = self.strata.get(k)
        return 0 if rec is None else rec.chi_top

    def chern(self, k):
        rec = self.strata.get(k)
        if rec is None:
            return _ZERO
        return rec.chern_c1cd

    def chi_struct_stratum(self, k):
        rec = self.strata.get(k)
        if rec is None:
            return 0
        return rec.chi_struct

    def lcm_multiplicity(self):
        out = 1
        for _, m in self.components:
            out = out * m // math.gcd(out, m)
        return out

    def effective_b_integral(self):
        if self.b_integral is not None:
            return self.b_integral
        if self.kulikov:
            return _ZERO
        raise MissingDataError(
            "B-integral required (0 only under the Kulikov flag)",
            field="special_fiber/b_integral",
        )


def chi_special_fiber(model):
    """chi(X_0) = -sum_k (-1)^k chi(D(k)) over k = 1..n+1."""
    if model.chi_top is not None:
        return model.chi_top
    return -sum((-1) ** k * model.chi(k) for k in range(1, model.n + 2))


def chi_generic_semistable(model):
    """chi(X_infinity) = sum_k (-1)^(k+1) k chi(D(k)), semistable only."""
    if not model.semistable:
        raise NotApplicableError(
            "the generic-fiber Euler characteristic formula needs a "
            "semistable (reduced) model"
        )
    return sum((-1) ** (k + 1) * k * model.chi(k) for k in range(1, model.n + 2))


def vanishing_defect(model, fiber):
    """Degree of the localized top Chern class:
    c = (-1)^n (chi(X_infinity) - chi(X_0))."""
    chi_inf = fiber.chi_top
    if chi_inf is None:
        if model.semistable:
            chi_inf = chi_generic_semistable(model)
        else:
            raise MissingDataError(
                "chi(X_infinity) required for the vanishing defect",
                field="fiber/chi_top",
            )
    chi_0 = chi_special_fiber(model)
    return Fraction((-1) ** model.n * (chi_inf - chi_0))


def derive_chern_kulikov(model):
    """Fill the Chern integrals of a semistable Kulikov model.

    Adjunction on the log-Calabi-Yau strata yields the backward recursion

        C_k = (-1)^(n-k+1) (k+1) chi(D(k+1)) + C_(k+1),   C_(n+1) = 0,

    where C_k is the integral of c_1(Omega) c_(n-k)(Omega) over D(k).
    Returns a new model with every stratum's Chern number filled in
    (creating empty-stratum records is unnecessary: absent means zero chi,
    and the recursion then simply telescopes).
    """
    if not (model.semistable and model.kulikov):
        raise NotApplicableError(
            "Chern derivation requires the semistable and Kulikov flags"
        )
    n = model.n
    chern = {}
    acc = _ZERO
    for k in range(n, 0, -1):
        acc = Fraction((-1) ** (n - k + 1) * (k + 1) * model.chi(k + 1)) + acc
        chern[k] = acc
    strata = dict(model.strata)
    for k in range(1, n + 1):
        rec = strata.get(k)
        if rec is None:
            if chern[k] != 0:
                # A nonzero Chern number on an empty stratum means the chi
                # data is not of Kulikov type; record it anyway on a fresh
                # record so downstream sums stay faithful to the recursion.
                strata[k] = StratumRecord(codim=k, chi_top=0, chern_c1cd=chern[k])
            continue
        strata[k] = replace(rec, chern_c1cd=chern[k])
    return replace(model, strata=strata)


@dataclass(frozen=True)
class LiuXiaReport:
    quadruple_points: Fraction
    double_sum: Fraction  # sum over i<j, k not in {i,j} of [D_k^2 D_ij]
    double_sum_expected: Fraction  # -4 Q
    canonical_sum: Fraction | None  # sum over i<j of c_1(K_Dij)^2 [D_ij]
    canonical_sum_expected: Fraction | None  # 8 Q (Kulikov only)

    @property
    def ok(self):
        if self.double_sum != self.double_sum_expected:
            return False
        if self.canonical_sum is not None:
            return self.canonical_sum == self.canonical_sum_expected
        return True


class IntersectionTensor:
    """Symmetric quadruple intersection numbers [D_i D_j D_k D_l] on a
    normal crossings threefold special fiber."""

    def __init__(self, components, products):
        self.r = int(components)
        if self.r < 1:
            raise DescriptorError("at least one component", path="components")
        self.products = {}
        for key, value in products.items():
            idx = tuple(sorted(int(i) for i in key))
            if len(idx) != 4:
                raise DescriptorError(
                    f"intersection index {key} is not a quadruple", path="products"
                )
            if any(not 0 <= i < self.r for i in idx):
                raise DescriptorError(
                    f"component index out of range in {key}", path="products"
                )
            value = Fraction(value)
            if value != 0:
                self.products[idx] = self.products.get(idx, _ZERO) + value

    def value(self, i, j, k, l):
        return self.products.get(tuple(sorted((i, j, k, l))), _ZERO)

    def relation_holds(self):
        """sum_i [D_i D_j D_k D_l] = 0 for every (j, k, l): the class of the
        whole special fiber is trivial."""
        triples = set()
        for idx in self.products:
            for drop in range(4):
                triples.add(tuple(sorted(idx[:drop] + idx[drop + 1 :])))
        for (j, k, l) in triples:
            total = sum(
                (self.value(i, j, k, l) for i in range(self.r)), _ZERO
            )
            if total != 0:
                return False
        return True


def liu_xia_identity_check(tensor, kulikov=True):
    """Verify the quadruple-point identities of a threefold semistable model.

    With Q the number of quadruple points (the sum of [D_ijkl] over
    4-element index sets), checks

        sum_(i<j) sum_(k not in {i,j}) [D_k^2 D_ij]          = -4 Q,
        sum_(i<j) c_1(K_Dij)^2 [D_ij]                        =  8 Q,

    the second under the Kulikov hypothesis, where adjunction gives
    K_Dij = -sum_(l not in {i,j}) [D_l] restricted to D_ij.
    """
    if not tensor.relation_holds():
        raise PreconditionError(
            "the components do not satisfy sum_i [D_i] = 0; not a special fiber"
        )
    r = tensor.r
    q = sum(
        (tensor.value(i, j, k, l) for i, j, k, l in combinations(range(r), 4)),
        _ZERO,
    )
    double_sum = _ZERO
    for i, j in combinations(range(r), 2):
        for k in range(r):
            if k not in (i, j):
                double_sum += tensor.value(k, k, i, j)
    canonical = None
    if kulikov:
        canonical = _ZERO
        for i, j in combinations(range(r), 2):
            for l in range(r):
                if l in (i, j):
                    continue
                for m in range(r):
                    if m in (i, j):
                        continue
                    canonical += tensor.value(l, m, i, j)
    return LiuXiaReport(
        quadruple_points=q,
        double_sum=double_sum,
        double_sum_expected=-4 * q,
        canonical_sum=canonical,
        canonical_sum_expected=None if canonical is None else 8 * q,
    )
