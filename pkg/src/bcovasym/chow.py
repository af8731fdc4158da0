"""Chow-ring calculator for projective space and its smooth hypersurfaces.

Classes are polynomials in the hyperplane class h, truncated at the
dimension of the ambient variety.  The total Chern class of the cotangent
bundle is (1 - h)^(n+1) on P^n and (1 - h)^(n+1) / (1 - d h) on a smooth
degree-d hypersurface (conormal sequence), and integration extracts the
top-degree coefficient (times d on the hypersurface).

This module exists as an independent oracle for the blow-up Chern numbers
appearing in the ordinary double point model; it knows nothing about those
closed forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DimensionError, PreconditionError

_ZERO = Fraction(0)


def _trim(poly, dim):
    return [Fraction(c) for c in poly[: dim + 1]] + [_ZERO] * max(
        0, dim + 1 - len(poly)
    )


def poly_mul(a, b, dim):
    out = [_ZERO] * (dim + 1)
    for i, x in enumerate(a[: dim + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: dim + 1 - i]):
            if y != 0:
                out[i + j] += x * y
    return out


def geometric_inverse(d, dim):
    """1 / (1 - d*h) truncated: sum (d*h)^m."""
    return [Fraction(d) ** m for m in range(dim + 1)]


def cotangent_chern_pn(n):
    """Total Chern class of Omega on P^n: (1 - h)^(n+1)."""
    return [Fraction((-1) ** m * comb(n + 1, m)) for m in range(n + 1)]


def cotangent_chern_hypersurface(n, d):
    """Total Chern class of Omega on a smooth degree-d hypersurface in P^n,
    truncated at its dimension n-1."""
    if n < 1:
        raise PreconditionError("hypersurface needs ambient dimension >= 1")
    dim = n - 1
    ambient = _trim(cotangent_chern_pn(n), dim)
    return poly_mul(ambient, geometric_inverse(d, dim), dim)


def integrate_pn(poly, n):
    """Degree of the h^n component of a class on P^n."""
    poly = list(poly)
    if len(poly) > n + 1 and any(c != 0 for c in poly[n + 1 :]):
        raise DimensionError("class exceeds the dimension of P^n")
    return Fraction(poly[n]) if len(poly) > n else _ZERO

def integrate_hypersurface(poly, n, d):
    """Degree of the h^(n-1) component on a degree-d hypersurface in P^n
    (the hyperplane class has self-intersection d there)."""
    poly = list(poly)
    dim = n - 1
    if len(poly) > dim + 1 and any(c != 0 for c in poly[dim + 1 :]):
        raise DimensionError("class exceeds the dimension of the hypersurface")
    top = Fraction(poly[dim]) if len(poly) > dim else _ZERO
    return d * top


def chow_pn(n, factors, hypersurface_degree=None):
    """Integrate a product of classes on P^n or on a hypersurface inside it.

    ``factors`` is a sequence of ("h", m) for the m-th power of the
    hyperplane class or ("c", i) for the i-th Chern class of the cotangent
    bundle of the variety itself.  The total degree of the product must
    equal the variety's dimension.
    """
    dim = n if hypersurface_degree is None else n - 1
    if hypersurface_degree is None:
        chern = cotangent_chern_pn(n)
    else:
        chern = cotangent_chern_hypersurface(n, hypersurface_degree)
    acc = _trim([Fraction(1)], dim)
    degree = 0
    for kind, arg in factors:
        if kind == "h":
            arg = int(arg)
            if arg < 0:
                raise PreconditionError("negative power of h")
            degree += arg
            mono = [_ZERO] * arg + [Fraction(1)]
            acc = poly_mul(acc, _trim(mono, dim), dim)
        elif kind == "c":
            arg = int(arg)
            if not 0 <= arg <= dim:
                raise DimensionError(
                    f"c_{arg} vanishes identically in dimension {dim}"
                )
            degree += arg
            mono = [_ZERO] * arg + [chern[arg]] if arg < len(chern) else [_ZERO]
            acc = poly_mul(acc, _trim(mono, dim), dim)
        else:
            raise PreconditionError(f"unknown factor kind {kind!r}")
    if degree != dim:
        raise DimensionError(
            f"integrand has degree {degree} on a variety of dimension {dim}"
        )
    if hypersurface_degree is None:
        return integrate_pn(acc, n)
    return integrate_hypersurface(acc, n, hypersurface_degree)


def chi_top_hypersurface(n, d):
    """Topological Euler characteristic of a smooth degree-d hypersurface
    in P^n, as the degree of the top Chern class of its tangent bundle."""
    dim = n - 1
    chern = cotangent_chern_hypersurface(n, d)
    return (-1) ** dim * integrate_hypersurface(
        [_ZERO] * dim + [chern[dim]], n, d
    )
