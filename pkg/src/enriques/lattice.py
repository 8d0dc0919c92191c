"""Exact integral lattice arithmetic.

Lattices are free Z-modules with an integer Gram matrix and an optional
rational scale, so forms like L(2) or L(1/2) are represented exactly.
All arithmetic is over Python ints / Fractions; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(int(x) for x in row) for row in data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(row) != self.cols for row in data):
            raise ValueError("ragged matrix")
        self.data = data

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.data))})"

    def transpose(self):
        return IntMatrix(list(zip(*self.data))) if self.rows else IntMatrix([])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.data))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self.data])

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def det(self):
        """Exact determinant via fraction-free Bareiss elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of non-square matrix")
        if n == 0:
            return 1
        a = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _addmul_row(a, dst, src, c):
    row = a[dst]
    other = a[src]
    for k in range(len(row)):
        row[k] += c * other[k]


def smith_normal_form(m: IntMatrix):
    """Smith normal form with transforms: returns (U, D, V) with U*m*V = D.

    D is diagonal with nonnegative entries and d1 | d2 | ...; U and V are
    unimodular.  The pivoting rule (smallest absolute value, then smallest
    position) makes the output deterministic.
    """
    R, C = m.rows, m.cols
    a = [list(row) for row in m.data]
    u = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    v = [[1 if i == j else 0 for j in range(C)] for i in range(C)]
    t = 0
    while t < min(R, C):
        pivot = None
        for i in range(t, R):
            for j in range(t, C):
                x = a[i][j]
                if x != 0 and (pivot is None or abs(x) < pivot[0]):
                    pivot = (abs(x), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            _swap_rows(a, pi, t)
            _swap_rows(u, pi, t)
        if pj != t:
            for row in a:
                row[pj], row[t] = row[t], row[pj]
            _swap_rows(v, pj, t)  # v tracked as rows of V^T
        p = a[t][t]
        dirty = False
        for i in range(t + 1, R):
            if a[i][t] != 0:
                q = a[i][t] // p
                if q != 0:
                    _addmul_row(a, i, t, -q)
                    _addmul_row(u, i, t, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, C):
            if a[t][j] != 0:
                q = a[t][j] // p
                if q != 0:
                    for row in a:
                        row[j] -= q * row[t]
                    _addmul_row(v, j, t, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, R):
            if any(x % p for x in a[i][t + 1 :]):
                _addmul_row(a, t, i, 1)
                _addmul_row(u, t, i, 1)
                fixed = False
                break
        if fixed:
            t += 1
    for i in range(min(R, C)):
        if a[i][i] < 0:
            for k in range(C):
                a[i][k] = -a[i][k]
            for k in range(R):
                u[i][k] = -u[i][k]
    vmat = IntMatrix(v).transpose()
    return IntMatrix(u), IntMatrix(a), vmat


def snf_diagonal(m: IntMatrix):
    """Invariant factors d1 | d2 | ... (nonnegative), padded with zeros."""
    _, d, _ = smith_normal_form(m)
    return tuple(d[i, i] for i in range(min(m.rows, m.cols)))


def left_kernel(m: IntMatrix) -> IntMatrix:
    """Basis (rows) of {x in Z^rows : x*m = 0}; saturated by construction."""
    u, d, _ = smith_normal_form(m)
    rank = sum(1 for i in range(min(m.rows, m.cols)) if d[i, i] != 0)
    return IntMatrix(u.data[rank:]) if rank < m.rows else IntMatrix.zero(0, m.rows)


def row_basis(rows, ncols):
    """Canonical (Hermite-style) basis of the integer span of the given rows."""
    work = [list(r) for r in rows if any(r)]
    basis = []  # list of (pivot_col, row)
    for r in work:
        while True:
            lead = next((j for j, x in enumerate(r) if x), None)
            if lead is None:
                break
            hit = next((b for b in basis if b[0] == lead), None)
            if hit is None:
                if r[lead] < 0:
                    r = [-x for x in r]
                basis.append((lead, r))
                basis.sort()
                break
            p = hit[1]
            if r[lead] % p[lead] == 0:
                q = r[lead] // p[lead]
                r = [x - q * y for x, y in zip(r, p)]
            else:
                # replace pivot row by gcd combination
                g_, s, t_ = _xgcd(p[lead], r[lead])
                new = [s * x + t_ * y for x, y in zip(p, r)]
                rem = [
                    x * (r[lead] // g_) - y * (p[lead] // g_)
                    for x, y in zip(p, r)
                ]
                if new[lead] < 0:
                    new = [-x for x in new]
                basis.remove(hit)
                basis.append((lead, new))
                basis.sort()
                r = rem
    # reduce entries above each pivot for canonicity
    basis.sort()
    for idx in range(len(basis)):
        lead, row = basis[idx]
        for jdx in range(idx):
            _, upper = basis[jdx]
            if row[lead] != 0:
                q = upper[lead] // row[lead]
                if q:
                    basis[jdx] = (basis[jdx][0], [x - q * y for x, y in zip(upper, row)])
    rows_out = [tuple(r) for _, r in sorted(basis)]
    return IntMatrix(rows_out) if rows_out else IntMatrix.zero(0, ncols)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def member_of_row_span(vec, basis: IntMatrix):
    """Whether an integer vector lies in the integer row span of basis."""
    v = list(vec)
    for row in basis.data:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        if v[lead] % row[lead] == 0:
            q = v[lead] // row[lead]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


@dataclass(frozen=True)
class Lattice:
    """Free Z-module with symmetric integer Gram matrix and rational scale.

    The bilinear form is scale * (x G y^T); norms are always reported in
    this scaled form.
    """

    gram: IntMatrix
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.rank > 0 and self.gram.det() == 0:
            raise ValueError("degenerate lattice")
        object.__setattr__(self, "scale", Fraction(self.scale))

    @property
    def rank(self):
        return self.gram.rows

    def inner(self, x, y) -> Fraction:
        g = self.gram.data
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = g[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return self.scale * total

    def norm(self, x) -> Fraction:
        return self.inner(x, x)

    def scaled_gram(self):
        """Gram matrix of the scaled form, as Fractions."""
        return [[self.scale * x for x in row] for row in self.gram.data]

    def is_even(self):
        return all(
            (self.scale * self.gram[i, i]).denominator == 1
            and (self.scale * self.gram[i, i]) % 2 == 0
            for i in range(self.rank)
        )

    def det(self) -> Fraction:
        return self.scale**self.rank * self.gram.det()


@dataclass(frozen=True)
class Sublattice:
    """Sublattice given by basis rows in ambient coordinates."""

    ambient: Lattice
    basis: IntMatrix

    def __post_init__(self):
        if self.basis.cols != self.ambient.rank and self.basis.rows > 0:
            raise ValueError("basis has wrong ambient dimension")
        if self.rank != self.basis.rows:
            raise ValueError("basis rows must be linearly independent")

    @property
    def rank(self):
        if self.basis.rows == 0:
            return 0
        d = snf_diagonal(self.basis)
        return sum(1 for x in d if x != 0)

    def restricted_gram(self) -> IntMatrix:
        b = self.basis
        return b * self.ambient.gram * b.transpose()

    def restricted_lattice(self) -> Lattice:
        return Lattice(self.restricted_gram(), self.ambient.scale)

    def to_ambient(self, coeffs):
        return tuple(
            sum(c * self.basis[i, j] for i, c in enumerate(coeffs))
            for j in range(self.basis.cols)
        )

    def contains(self, vec):
        return member_of_row_span(vec, row_basis(self.basis.data, self.basis.cols))


def span(ambient: Lattice, vectors) -> Sublattice:
    """Sublattice generated by the given ambient vectors (canonical basis)."""
    return Sublattice(ambient, row_basis(vectors, ambient.rank))


def saturate(s: Sublattice) -> Sublattice:
    """Primitive closure: ambient lattice intersected with the rational span."""
    if s.basis.rows == 0:
        return s
    # rational row span = orthogonal (in the standard form) of the integer
    # kernel of basis^T; intersecting back with Z^n saturates.
    perp = left_kernel(s.basis.transpose())
    if perp.rows == 0:
        return Sublattice(s.ambient, row_basis(IntMatrix.identity(s.ambient.rank).data, s.ambient.rank))
    sat = left_kernel(perp.transpose())
    return Sublattice(s.ambient, row_basis(sat.data, s.ambient.rank))


def orthogonal_complement(s: Sublattice) -> Sublattice:
    """All ambient vectors pairing to zero with the sublattice; saturated."""
    if s.basis.rows == 0:
        return Sublattice(s.ambient, IntMatrix.identity(s.ambient.rank))
    pairing = s.ambient.gram * s.basis.transpose()
    ker = left_kernel(pairing)
    return Sublattice(s.ambient, row_basis(ker.data, s.ambient.rank))


@dataclass(frozen=True)
class DiscriminantGroup:
    """Invariant-factor data for L^vee / L."""

    generators: tuple  # rational vectors in lattice coordinates
    orders: tuple
    qvalues: tuple  # norms of the generators mod 2, as Fractions

    @property
    def order(self):
        total = 1
        for d in self.orders:
            total *= d
        return total


def discriminant_group(l: Lattice) -> DiscriminantGroup:
    """Compute L^vee/L for a nondegenerate lattice with integral scaled form."""
    n = l.rank
    sg = l.scaled_gram()
    if any(x.denominator != 1 for row in sg for x in row):
        raise ValueError("discriminant group requires an integral lattice")
    g = IntMatrix([[int(x) for x in row] for row in sg])
    if n > 0 and g.det() == 0:
        raise ValueError("degenerate lattice")
    u, d, _ = smith_normal_form(g)
    gens = []
    orders = []
    qvals = []
    for i in range(n):
        di = d[i, i]
        if di > 1:
            gen = tuple(Fraction(x, di) for x in u.row(i))
            gens.append(gen)
            orders.append(di)
            val = Fraction(0)
            for a, ga in enumerate(gen):
                if ga:
                    val += ga * sum(Fraction(g[a, b]) * gb for b, gb in enumerate(gen) if gb)
            qvals.append(val % 2)
    return DiscriminantGroup(tuple(gens), tuple(orders), tuple(qvals))


# --- short vector enumeration (Fincke-Pohst with exact arithmetic) ---


def _floor_sqrt_frac(b: Fraction):
    if b < 0:
        raise ValueError("sqrt of negative")
    return isqrt(b.numerator * b.denominator) // b.denominator


def _floor_a_plus_sqrt(a: Fraction, b: Fraction):
    """Largest integer m with m <= a + sqrt(b), exactly."""
    m = (a.numerator // a.denominator) + _floor_sqrt_frac(b) + 1
    while True:
        diff = m - a
        if diff <= 0 or diff * diff <= b:
            return m
        m -= 1


def _cholesky_exact(a):
    """Rational Cholesky data for a positive definite matrix.

    Returns (c, mu) with Q(x) = sum_i c[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2.
    Raises if the form is not positive definite.
    """
    n = len(a)
    q = [[Fraction(x) for x in row] for row in a]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("enumeration requires definite lattice")
        for j in range(i + 1, n):
            q[j][i] = q[i][j] / q[i][i]
            for k in range(j, n):
                q[j][k] -= q[j][i] * q[i][k]
        for j in range(i + 1, n):
            q[i][j] = q[i][j] / q[i][i]
    c = [q[i][i] for i in range(n)]
    mu = [[q[i][j] for j in range(n)] for i in range(n)]
    return c, mu


def enumerate_norm_vectors(l: Lattice, n: int):
    """All lattice vectors of the given (scaled) norm, in lexicographic order.

    The lattice must be negative definite and n < 0.  The result is closed
    under negation.
    """
    if n >= 0:
        raise ValueError("norm must be negative")
    dim = l.rank
    if dim == 0:
        return ()
    neg = [[-x for x in row] for row in l.scaled_gram()]
    c, mu = _cholesky_exact(neg)  # raises on indefinite input
    target = Fraction(-n)
    out = []
    x = [0] * dim

    def descend(i, budget):
        if i < 0:
            if budget == 0:
                out.append(tuple(x))
            return
        inner = sum(mu[i][j] * x[j] for j in range(i + 1, dim))
        bound = budget / c[i]
        hi = _floor_a_plus_sqrt(-inner, bound)
        lo = -_floor_a_plus_sqrt(inner, bound)
        for xi in range(lo, hi + 1):
            x[i] = xi
            used = c[i] * (xi + inner) ** 2
            if used <= budget:
                descend(i - 1, budget - used)
        x[i] = 0

    descend(dim - 1, target)
    out = [v for v in out if any(v)]
    out.sort()
    return tuple(out)


def sublattice_norm_vectors(s: Sublattice, n: int):
    """Vectors of the sublattice with scaled norm n, in ambient coordinates."""
    coeffs = enumerate_norm_vectors(s.restricted_lattice(), n)
    return tuple(sorted(s.to_ambient(cf) for cf in coeffs))


def overlattice_kernel_dim_mod2(sub: Sublattice, closure: Sublattice) -> int:
    """dim of ker(R/2R -> R'/2R') for R inside its overlattice R'.

    Equals the number of even invariant factors of the coordinate matrix of
    R's basis with respect to a basis of R'.
    """
    if sub.basis.rows == 0:
        return 0
    coords = _solve_integer_coords(sub.basis, closure.basis)
    d = snf_diagonal(coords)
    return sum(1 for x in d if x != 0 and x % 2 == 0)


def _solve_integer_coords(rows: IntMatrix, basis: IntMatrix) -> IntMatrix:
    """Express each row of `rows` as an integer combination of `basis` rows."""
    out = []
    bt = basis.data
    for r in rows.data:
        sol = _solve_row(r, bt)
        if sol is None:
            raise ValueError("vector not in span of basis")
        out.append(sol)
    return IntMatrix(out)


def _solve_row(vec, basis_rows):
    # exact rational solve y * B = vec, then integrality check
    m = len(basis_rows)
    if m == 0:
        return None if any(vec) else ()
    ncols = len(vec)
    aug = [[Fraction(basis_rows[i][j]) for i in range(m)] + [Fraction(vec[j])] for j in range(ncols)]
    piv = []
    r = 0
    for col in range(m):
        sel = next((i for i in range(r, ncols) if aug[i][col] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        pivval = aug[r][col]
        aug[r] = [x / pivval for x in aug[r]]
        for i in range(ncols):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(col)
        r += 1
    for i in range(r, ncols):
        if aug[i][m] != 0:
            return None
    sol = [Fraction(0)] * m
    for idx, col in enumerate(piv):
        sol[col] = aug[idx][m]
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def signature(l: Lattice):
    """Signature (positives, negatives) of the quadratic form, exactly."""
    n = l.rank
    a = [[Fraction(x) for x in row] for row in l.scaled_gram()]
    pos = neg = 0
    idx = list(range(n))
    step = 0
    while step < n:
        k = next((i for i in range(step, n) if a[idx[i]][idx[i]] != 0), None)
        if k is None:
            # symmetric pivoting: mix two rows to create a diagonal entry
            found = None
            for i in range(step, n):
                for j in range(i + 1, n):
                    if a[idx[i]][idx[j]] != 0:
                        found = (idx[i], idx[j])
                        break
                if found:
                    break
            if found is None:
                break
            ii, jj = found
            for t in range(n):
                a[ii][t] += a[jj][t]
            for t in range(n):
                a[t][ii] += a[t][jj]
            continue
        idx[step], idx[k] = idx[k], idx[step]
        p = idx[step]
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(step + 1, n):
            q = idx[i]
            f = a[q][p] / d
            if f:
                for t in range(n):
                    a[q][t] -= f * a[p][t]
                for t in range(n):
                    a[t][q] -= f * a[t][p]
        step += 1
    return pos, neg
