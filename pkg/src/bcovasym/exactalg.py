"""Exact rational linear algebra.

Dense matrices over Q (entries are ``fractions.Fraction``), characteristic
polynomials, cyclotomic factorization, Chevalley decomposition of
quasi-unipotent operators, nilpotent logarithms/exponentials, and the
monodromy weight filtration of a nilpotent operator.  No floating point
anywhere; every result is exact.

The nilpotent logarithm returned by :func:`nilpotent_log` is the honest
matrix log of the unipotent part.  The usual normalization by 1/(2*pi*i) is
never materialized: all downstream consumers depend only on kernels, images
and powers, which do not see the scalar, while root-of-unity data is carried
separately by :class:`RotationNumber`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionError, InvalidMonodromyError, PreconditionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class RationalMatrix:
    """A dense matrix over Q.  Immutable by convention: operations return
    new matrices and nothing mutates ``data`` after construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [[_frac(x) for x in row] for row in data]
        if not data or not data[0]:
            raise DimensionError("empty matrix")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("ragged rows")
        self.rows = len(data)
        self.cols = width
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns):
        if not columns:
            raise DimensionError("no columns")
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    # -- basics -------------------------------------------------------

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other):
        self._same_shape(other)
        return RationalMatrix(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return RationalMatrix(
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _frac(c)
        return RationalMatrix([[c * x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            bt = list(zip(*other.data))
            return RationalMatrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in bt]
                    for row in self.data
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionError("vector length mismatch")
        return [
            sum(self.data[i][j] * _frac(vector[j]) for j in range(self.cols))
            for i in range(self.rows)
        ]

    def __pow__(self, k):
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = RationalMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self):
        return RationalMatrix([list(col) for col in zip(*self.data)])

    def trace(self):
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionError("row count mismatch in hstack")
        return RationalMatrix(
            [self.data[i] + other.data[i] for i in range(self.rows)]
        )

    def submatrix(self, row_idx, col_idx):
        return RationalMatrix(
            [[self.data[i][j] for j in col_idx] for i in row_idx]
        )

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch")

    # -- elimination ---------------------------------------------------

    def _integer_rows(self):
        """Rows rescaled to integers (rescaling preserves rank and row space)."""
        out = []
        for row in self.data:
            m = 1
            for x in row:
                m = m * x.denominator // math.gcd(m, x.denominator)
            out.append([int(x * m) for x in row])
        return out

    def rank(self):
        """Rank via fraction-free (Bareiss) elimination on integerized rows."""
        m = self._integer_rows()
        rows, cols = self.rows, self.cols
        piv_r = 0
        prev = 1
        for piv_c in range(cols):
            pivot_row = None
            for i in range(piv_r, rows):
                if m[i][piv_c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[piv_r], m[pivot_row] = m[pivot_row], m[piv_r]
            for i in range(piv_r + 1, rows):
                if all(x == 0 for x in m[i]):
                    continue
                for j in range(cols):
                    if j == piv_c:
                        continue
                    m[i][j] = (m[piv_r][piv_c] * m[i][j] - m[i][piv_c] * m[piv_r][j]) // prev
                m[i][piv_c] = 0
            prev = m[piv_r][piv_c]
            piv_r += 1
            if piv_r == rows:
                break
        return piv_r

    def det(self):
        """Determinant by fraction-free Bareiss elimination."""
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        m = self._integer_rows()
        scale = Fraction(1)
        for i, (orig, scaled) in enumerate(zip(self.data, m)):
            for a, b in zip(orig, scaled):
                if b != 0:
                    scale *= Fraction(a, b)
                    break
            else:
                return _ZERO
        n = self.rows
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return _ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * scale * m[n - 1][n - 1]

    def rref(self):
        """Reduced row echelon form over Q.  Returns (matrix, pivot columns)."""
        m = [list(row) for row in self.data]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pivot = None
            for i in range(r, rows):
                if m[i][c] != 0:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return RationalMatrix(m), pivots

    def nullspace(self):
        """A basis (list of column vectors) of the right kernel."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [_ZERO] * self.cols
            v[fc] = _ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.data[r][fc]
            basis.append(v)
        return basis

    def column_space_basis(self):
        """Independent columns spanning the column space (as a matrix)."""
        _, pivots = self.rref()
        if not pivots:
            return None
        return self.submatrix(range(self.rows), pivots)

    def solve(self, rhs):
        """Solve self * x = rhs exactly; raises if inconsistent or ambiguous."""
        aug = self.hstack(RationalMatrix([[_frac(v)] for v in rhs]))
        red, pivots = aug.rref()
        if self.cols in pivots:
            raise PreconditionError("inconsistent linear system")
        if len(pivots) < self.cols:
            raise PreconditionError("underdetermined linear system")
        x = [_ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def solve_in_span(self, vector):
        """Coefficients expressing ``vector`` in the matrix's columns, or None."""
        aug = self.hstack(RationalMatrix([[_frac(v)] for v in vector]))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        coeffs = [_ZERO] * self.cols
        for r, pc in enumerate(pivots):
            coeffs[pc] = red.data[r][self.cols]
        return coeffs

    def inverse(self):
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(RationalMatrix.identity(n))
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise PreconditionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))


class RationalPoly:
    """A polynomial over Q, dense coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [_frac(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return not self.is_zero() and self.coeffs[-1] == 1

    def monic(self):
        lead = self.leading()
        return RationalPoly([c / lead for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return RationalPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        q = [_ZERO] * max(0, len(rem) - len(den) + 1)
        inv = 1 / den[-1]
        for i in range(len(rem) - len(den), -1, -1):
            f = rem[i + len(den) - 1] * inv
            if f == 0:
                continue
            q[i] = f
            for j, d in enumerate(den):
                rem[i + j] -= f * d
        return RationalPoly(q), RationalPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        return (other % self).is_zero()

    def derivative(self):
        return RationalPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self):
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return (self // g).monic()

    def __call__(self, x):
        if isinstance(x, RationalMatrix):
            return self.eval_matrix(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m):
        if not m.is_square:
            raise DimensionError("polynomial of a non-square matrix")
        acc = RationalMatrix.zeros(m.rows, m.rows)
        for c in reversed(self.coeffs):
            acc = acc * m + RationalMatrix.identity(m.rows).scale(c)
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")

    def __repr__(self):
        return f"RationalPoly({self})"


def euler_phi(d):
    result = d
    p = 2
    n = d
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic(d):
    """The d-th cyclotomic polynomial, exact integer coefficients."""
    num = RationalPoly([-1] + [0] * (d - 1) + [1])  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = num // cyclotomic(e)
    return num


def cyclotomic_candidates(degree):
    """All d with euler_phi(d) <= degree, in increasing order.

    Uses phi(d) >= sqrt(d/2), so d <= 2*degree^2 suffices.
    """
    bound = 2 * degree * degree + 6
    return [d for d in range(1, bound + 1) if euler_phi(d) <= degree]


def cyclotomic_factorization(poly):
    """Factor the cyclotomic part out of ``poly``.

    Returns (factors, remainder) where factors maps d -> multiplicity of the
    d-th cyclotomic polynomial and remainder is the monic cofactor with no
    cyclotomic divisors.
    """
    if poly.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    rem = poly.monic()
    factors = {}
    for d in cyclotomic_candidates(poly.degree):
        phi_d = cyclotomic(d)
        if phi_d.degree > rem.degree:
            continue
        while phi_d.degree <= rem.degree and phi_d.divides(rem):
            factors[d] = factors.get(d, 0) + 1
            rem = rem // phi_d
    return factors, rem


class RotationNumber:
    """A rational a in [0, 1) standing for the root of unity exp(2*pi*i*a).

    Lower-extension exponent data is stored with the opposite sign
    convention (value a means eigenvalue exp(-2*pi*i*a)); the two views are
    exchanged by :meth:`complement`.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        value = _frac(value)
        if not 0 <= value < 1:
            raise PreconditionError(f"rotation number {value} outside [0, 1)")
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):
        raise AttributeError("RotationNumber is immutable")

    @classmethod
    def of(cls, x):
        """Normalize any rational into [0, 1) modulo 1."""
        return cls(_frac(x) % 1)

    def complement(self):
        """The rotation of the complex-conjugate root of unity."""
        return RotationNumber.of(1 - self.value)

    def __eq__(self, other):
        return isinstance(other, RotationNumber) and self.value == other.value

    def __lt__(self, other):
        return self.value < other.value

    def __le__(self, other):
        return self.value <= other.value

    def __hash__(self):
        return hash(("rot", self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"RotationNumber({self.value})"


def char_poly(m):
    """Monic characteristic polynomial det(x*I - M), by Faddeev-LeVerrier."""
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    if not m.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = m.rows
    ident = RationalMatrix.identity(n)
    coeffs = [_ONE]  # highest degree first
    acc = RationalMatrix.zeros(n, n)
    for k in range(1, n + 1):
        acc = m * (acc + ident.scale(coeffs[-1])) if k > 1 else m
        ck = -acc.trace() / k
        coeffs.append(ck)
    return RationalPoly(list(reversed(coeffs)))


def quasi_unipotence_order(m):
    """Least l >= 1 with M^l unipotent; rejects non-quasi-unipotent input.

    Determined from the characteristic polynomial: M is quasi-unipotent
    exactly when char_poly(M) is a product of cyclotomic polynomials, and
    then l is the lcm of the orders that occur.
    """
    p = char_poly(m)
    if p.coeffs[0] == 0:
        raise InvalidMonodromyError("singular matrix is not a monodromy operator")
    factors, rem = cyclotomic_factorization(p)
    if rem.degree > 0:
        raise InvalidMonodromyError(
            f"non-cyclotomic factor {rem} in the characteristic polynomial",
            factor=rem,
        )
    order = 1
    for d in factors:
        order = order * d // math.gcd(order, d)
    return order


def chevalley_decompose(m):
    """Chevalley (Jordan) decomposition M = S*U of a quasi-unipotent matrix.

    S is semisimple of finite order, U is unipotent, both commute and both
    are polynomials in M.  Computed by Newton iteration modulo the
    squarefree part of the characteristic polynomial; each step stays in
    Q[M], so the result is exact.
    """
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix(m)
    order = quasi_unipotence_order(m)  # validates the input
    p = char_poly(m)
    radical = p.squarefree_part()
    deriv = radical.derivative()
    n = m.rows
    ident = RationalMatrix.identity(n)

    s = m
    max_iter = max(3, n.bit_length() + 2)
    for _ in range(max_iter):
        err = radical.eval_matrix(s)
        if err.is_zero():
            break
        s = s - deriv.eval_matrix(s).inverse() * err
    else:
        raise InvalidMonodromyError("Chevalley Newton iteration did not converge")

    u = s.inverse() * m
    if s * u != u * s or s * u != m:
        raise InvalidMonodromyError("Chevalley decomposition postcondition failed")
    if s ** order != ident:
        raise InvalidMonodromyError("semisimple part does not have the expected order")
    return s, u


def nilpotent_log(u):
    """log(U) = sum (-1)^(m+1) (U-I)^m / m for unipotent U (finite sum)."""
    if not isinstance(u, RationalMatrix):
        u = RationalMatrix(u)
    if not u.is_square:
        raise DimensionError("logarithm of a non-square matrix")
    n = u.rows
    nil = u - RationalMatrix.identity(n)
    log = RationalMatrix.zeros(n, n)
    power = nil
    for m_idx in range(1, n + 1):
        if power.is_zero():
            return log
        log = log + power.scale(Fraction((-1) ** (m_idx + 1), m_idx))
        power = power * nil
    if not power.is_zero():
        raise InvalidMonodromyError("matrix is not unipotent")
    return log


def exp_nilpotent(l):
    """exp(L) = sum L^m / m! for nilpotent L (finite sum)."""
    if not isinstance(l, RationalMatrix):
        l = RationalMatrix(l)
    if not l.is_square:
        raise DimensionError("exponential of a non-square matrix")
    n = l.rows
    acc = RationalMatrix.identity(n)
    power = l
    fact = 1
    for m_idx in range(1, n + 1):
        if power.is_zero():
            return acc
        fact *= m_idx
        acc = acc + power.scale(Fraction(1, fact))
        power = power * l
    if not power.is_zero():
        raise PreconditionError("matrix is not nilpotent")
    return acc


def _subspace_basis(columns):
    """Reduce a list of column vectors to an independent spanning set."""
    if not columns:
        return []
    mat = RationalMatrix.from_columns(columns)
    basis = mat.column_space_basis()
    return basis.columns() if basis is not None else []


def _intersect(cols_a, cols_b, dim):
    """Basis of the intersection of two column-spanned subspaces."""
    if not cols_a or not cols_b:
        return []
    stacked = RationalMatrix.from_columns(cols_a + [[-x for x in col] for col in cols_b])
    out = []
    for ker in stacked.nullspace():
        vec = [_ZERO] * dim
        for idx, col in enumerate(cols_a):
            if ker[idx] != 0:
                for i in range(dim):
                    vec[i] += ker[idx] * col[i]
        if any(x != 0 for x in vec):
            out.append(vec)
    return _subspace_basis(out)


class WeightFiltration:
    """The monodromy weight filtration of a nilpotent operator, centered at k.

    ``graded`` maps a weight w to dim Gr^W_w (only nonzero entries);
    ``bases`` maps w to a matrix whose columns span W_w.
    """

    def __init__(self, center, graded, bases):
        self.center = center
        self.graded = graded
        self.bases = bases

    def dim_w(self, w):
        basis = self.bases.get(w)
        return 0 if basis is None else basis.cols

    def items(self):
        return sorted(self.graded.items())


def weight_filtration(l, center):
    """Weight filtration of nilpotent L, centered at ``center``.

    The unique increasing filtration with L W_w <= W_(w-2) and
    L^r : Gr_(k+r) ~ Gr_(k-r).  Subspaces are produced by the classical
    formula  W_(k+j) = sum_i ( ker L^(j+i+1)  intersect  im L^i ).
    """
    if not isinstance(l, RationalMatrix):
        l = RationalMatrix(l)
    if not l.is_square:
        raise DimensionError("weight filtration of a non-square matrix")
    n = l.rows
    powers = [RationalMatrix.identity(n)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] * l)
        if len(powers) > n + 1:
            raise PreconditionError("operator is not nilpotent")
    index = len(powers) - 1  # smallest m with L^m = 0

    kernels = []  # kernels[j] = basis of ker L^j
    images = []  # images[j] = basis of im L^j
    full = [col for col in RationalMatrix.identity(n).columns()]
    for j in range(index + 1):
        if j == 0:
            kernels.append([])
            images.append(full)
        else:
            kernels.append(powers[j].nullspace() if j < index else full)
            basis = powers[j].column_space_basis()
            images.append(basis.columns() if basis is not None else [])

    bases = {}
    prev_dim = 0
    graded = {}
    lo, hi = center - index, center + index - 1
    for w in range(lo, hi + 1):
        j = w - center
        acc = []
        for i in range(max(0, -j), index + 1):
            depth = j + i + 1
            if depth <= 0:
                continue
            ker = kernels[min(depth, index)]
            im = images[i]
            if depth >= index:
                acc.extend(im)
            else:
                acc.extend(_intersect(ker, im, n))
        basis_cols = _subspace_basis(acc)
        dim = len(basis_cols)
        if dim > prev_dim:
            graded[w] = dim - prev_dim
        if basis_cols:
            bases[w] = RationalMatrix.from_columns(basis_cols)
        prev_dim = dim
    return WeightFiltration(center, graded, bases)


def eigen_rotations(s):
    """Eigenvalue angles of a finite-order semisimple matrix.

    Each cyclotomic factor Phi_d of the characteristic polynomial, with
    multiplicity m, contributes every a/d with gcd(a, d) = 1, m times.  The
    returned value a encodes the eigenvalue exp(2*pi*i*a).
    """
    if not isinstance(s, RationalMatrix):
        s = RationalMatrix(s)
    p = char_poly(s)
    factors, rem = cyclotomic_factorization(p)
    if rem.degree > 0:
        raise InvalidMonodromyError(
            "matrix has infinite order (non-cyclotomic eigenvalues)", factor=rem
        )
    radical = p.squarefree_part()
    if not radical.eval_matrix(s).is_zero():
        raise InvalidMonodromyError("matrix is not semisimple")
    rotations = []
    for d, mult in sorted(factors.items()):
        for a in range(d):
            if math.gcd(a, d) == 1 or (d == 1 and a == 0):
                rotations.extend([RotationNumber(Fraction(a, d))] * mult)
    return sorted(rotations)
