import math

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


E = [tuple(1 if j == i else 0 for j in range(10)) for i in range(10)]
E11 = (0, 0, 0, -1, -2, -3, -4, -3, -2, -2)
D1 = (0, 0, -2, -3, -4, -5, -6, -4, -2, -3)
F1 = (0, 1, 2, 3, 4, 5, 6, 4, 2, 3)

A7E7_CONFIG = (E[3], E[4], E[5], E[6], E[7], E[8], E11)
D8E8_CONFIG = (D1, E[2], E[3], E[4], E[5], E[6], E[7], E[9])
A8E8_CONFIG = (D1, E[2], E[3], E[4], E[5], E[6], E[7], E[8])
E8_CONFIG = (E[2], E[3], E[4], E[5], E[6], E[7], E[8], E[9])


def oracle_short_vectors(gram, norm):
    """Independent float-Cholesky Fincke-Pohst for a positive definite gram.

    Deliberately separate from the library implementation: floats plus a
    small epsilon, exact integer re-check at the end.
    """
    n = len(gram)
    a = [[float(x) for x in row] for row in gram]
    q = [row[:] for row in a]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j] / q[i][i]
            for k in range(j, n):
                q[j][k] -= q[j][i] * q[i][k]
        for j in range(i + 1, n):
            q[i][j] /= q[i][i]
    c = [q[i][i] for i in range(n)]
    out = []
    x = [0] * n

    def rec(i, budget):
        if i < 0:
            v = tuple(x)
            if any(v):
                val = sum(v[a_] * gram[a_][b_] * v[b_] for a_ in range(n) for b_ in range(n))
                if val == norm:
                    out.append(v)
            return
        inner = sum(q[i][j] * x[j] for j in range(i + 1, n))
        if budget < -1e-9:
            return
        lim = math.sqrt(max(budget, 0.0) / c[i]) + 1e-9
        lo = math.ceil(-inner - lim - 1e-9)
        hi = math.floor(-inner + lim + 1e-9)
        for xi in range(lo, hi + 1):
            x[i] = xi
            rec(i - 1, budget - c[i] * (xi + inner) ** 2)
        x[i] = 0

    rec(n - 1, float(norm) + 1e-9)
    return sorted(out)


def brute_isometry_count(space):
    """Count invertible q-preserving matrices by full enumeration (dim <= 4)."""
    from enriques.f2group import IsometryF2, is_isometry

    n = space.dim
    assert n <= 4
    count = 0
    for bits in range(1 << (n * n)):
        rows = tuple((bits >> (n * i)) & ((1 << n) - 1) for i in range(n))
        if is_isometry(space, IsometryF2(rows)):
            count += 1
    return count


def all_subspaces(dim):
    """Every subspace of F2^dim as a canonical echelon tuple."""
    from enriques.f2group import echelon, in_span

    seen = {()}
    frontier = [()]
    while frontier:
        new = []
        for basis in frontier:
            for v in range(1, 1 << dim):
                if not in_span(v, basis):
                    nb = echelon(list(basis) + [v])
                    if nb not in seen:
                        seen.add(nb)
                        new.append(nb)
        frontier = new
    return sorted(seen)


def direct_space(blocks):
    """Quadratic space from block labels 'U', 'V', '1', '0'."""
    from enriques.f2group import QuadSpaceF2

    dim = sum(2 if b in "UV" else 1 for b in blocks)
    rows = [0] * dim
    qd = 0
    pos = 0
    for b in blocks:
        if b in "UV":
            rows[pos] |= 1 << (pos + 1)
            rows[pos + 1] |= 1 << pos
            if b == "V":
                qd |= (1 << pos) | (1 << (pos + 1))
            pos += 2
        else:
            if b == "1":
                qd |= 1 << pos
            pos += 1
    return QuadSpaceF2(dim, tuple(rows), qd)


@pytest.fixture(scope="session")
def e10():
    from enriques.e10map import e10_lattice

    return e10_lattice()


@pytest.fixture(scope="session")
def e10f2():
    from enriques.e10map import e10_space

    return e10_space()
