from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from enriques.lattice import (
    IntMatrix,
    Lattice,
    Sublattice,
    discriminant_group,
    enumerate_norm_vectors,
    left_kernel,
    orthogonal_complement,
    saturate,
    signature,
    smith_normal_form,
    span,
    sublattice_norm_vectors,
)
from enriques.rootsys import ADEType, negated_gram

from conftest import A8E8_CONFIG, D1, D8E8_CONFIG, E, oracle_short_vectors


small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


def test_snf_identity():
    u, d, v = smith_normal_form(IntMatrix.identity(2))
    assert u == IntMatrix.identity(2)
    assert d == IntMatrix.identity(2)
    assert v == IntMatrix.identity(2)


def test_snf_diagonal_already_normal():
    m = IntMatrix([[2, 0], [0, 4]])
    _, d, _ = smith_normal_form(m)
    assert d == m


def test_snf_a2_gram():
    m = IntMatrix([[-2, 1], [1, -2]])
    u, d, v = smith_normal_form(m)
    assert d == IntMatrix([[1, 0], [0, 3]])
    assert u * m * v == d


@given(small_matrices)
def test_snf_properties(entries):
    m = IntMatrix(entries)
    u, d, v = smith_normal_form(m)
    assert u * m * v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    diag = [d[i, i] for i in range(min(d.rows, d.cols))]
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    # deterministic
    u2, d2, v2 = smith_normal_form(m)
    assert (u2, d2, v2) == (u, d, v)


@given(small_matrices)
def test_left_kernel_annihilates(entries):
    m = IntMatrix(entries)
    k = left_kernel(m)
    if k.rows:
        assert k * m == IntMatrix.zero(k.rows, m.cols)


def test_saturate_primitive_is_identity(e10):
    s = span(e10, [E[0]])
    assert saturate(s).basis == s.basis


def test_saturate_scalar_multiple(e10):
    s = span(e10, [tuple(2 * x for x in E[0])])
    assert saturate(s).basis.data == (E[0],)


def test_saturate_d8_config_index_two(e10):
    s = span(e10, D8E8_CONFIG)
    sat = saturate(s)
    det_s = s.restricted_gram().det()
    det_sat = sat.restricted_gram().det()
    assert det_s // det_sat == 4  # index 2
    # the paper's half vector: d1 + e4 + e6 + e10 is 2-divisible in E10
    total = tuple(a + b + c + d for a, b, c, d in zip(D1, E[3], E[5], E[9]))
    assert all(x % 2 == 0 for x in total)
    half = tuple(x // 2 for x in total)
    assert sat.contains(half)
    assert not s.contains(half)


@given(idx=st.lists(st.sampled_from(range(10)), min_size=1, max_size=4, unique=True))
def test_saturate_idempotent(e10, idx):
    s = span(e10, [E[i] for i in idx])
    once = saturate(s)
    twice = saturate(once)
    assert once.basis == twice.basis


def test_discriminant_groups():
    a2 = Lattice(negated_gram(ADEType("A", 2)))
    assert discriminant_group(a2).orders == (3,)
    e8 = Lattice(negated_gram(ADEType("E", 8)))
    assert discriminant_group(e8).orders == ()
    d8 = Lattice(negated_gram(ADEType("D", 8)))
    assert discriminant_group(d8).orders == (2, 2)


@pytest.mark.parametrize("t", [ADEType("A", 5), ADEType("D", 6), ADEType("E", 7)])
def test_discriminant_order_is_det(t):
    l = Lattice(negated_gram(t))
    assert discriminant_group(l).order == abs(l.gram.det())


def test_discriminant_generator_orders():
    l = Lattice(negated_gram(ADEType("A", 3)))
    disc = discriminant_group(l)
    for gen, order in zip(disc.generators, disc.orders):
        scaled = tuple(order * g for g in gen)
        assert all(x.denominator == 1 for x in scaled)


def test_orthogonal_complement_det_identity(e10):
    s = span(e10, [E[0]])
    c = orthogonal_complement(s)
    assert c.rank == 9
    det_s = s.restricted_gram().det()
    det_c = c.restricted_gram().det()
    # index of s + s_perp in the unimodular ambient, squared
    stacked = IntMatrix(list(s.basis.data) + list(c.basis.data))
    joint = (stacked * e10.gram * stacked.transpose()).det()
    assert det_s * det_c == joint
    assert abs(det_c) == 2


def test_orthogonal_complement_of_a8e8_is_u(e10):
    c = orthogonal_complement(span(e10, A8E8_CONFIG))
    g = c.restricted_gram()
    assert c.rank == 2
    assert g.det() == -1
    assert g[0, 0] % 2 == 0 and g[1, 1] % 2 == 0


def test_orthogonal_complement_full(e10):
    assert orthogonal_complement(span(e10, E)).rank == 0


def test_enumerate_a1():
    a1 = Lattice(IntMatrix([[-2]]))
    assert enumerate_norm_vectors(a1, -2) == ((-1,), (1,))


def test_enumerate_a2_against_box_oracle():
    gram = [[-2, 1], [1, -2]]
    a2 = Lattice(IntMatrix(gram))
    got = enumerate_norm_vectors(a2, -2)
    box = []
    for x in range(-2, 3):
        for y in range(-2, 3):
            v = (x, y)
            if v != (0, 0) and a2.norm(v) == -2:
                box.append(v)
    assert sorted(got) == sorted(box)
    assert len(got) == 6


def test_enumerate_e8_against_float_oracle():
    gram = negated_gram(ADEType("E", 8))
    e8 = Lattice(gram)
    got = enumerate_norm_vectors(e8, -2)
    pos_gram = [[-x for x in row] for row in gram.data]
    oracle = oracle_short_vectors(pos_gram, 2)
    assert len(got) == 240
    assert sorted(got) == oracle


def test_enumerate_negation_closure_and_norm():
    l = Lattice(negated_gram(ADEType("D", 5)))
    vs = enumerate_norm_vectors(l, -4)
    assert vs
    sv = set(vs)
    for v in vs:
        assert l.norm(v) == -4
        assert tuple(-x for x in v) in sv


def test_enumerate_requires_definite(e10):
    with pytest.raises(ValueError, match="definite"):
        enumerate_norm_vectors(e10, -2)
    a1 = Lattice(IntMatrix([[-2]]))
    with pytest.raises(ValueError):
        enumerate_norm_vectors(a1, 2)


def test_scaled_lattice_norms():
    half = Lattice(IntMatrix([[-4]]), Fraction(1, 2))
    assert half.norm((1,)) == -2
    assert enumerate_norm_vectors(half, -2) == ((-1,), (1,))
    doubled = Lattice(negated_gram(ADEType("A", 2)), Fraction(2))
    assert enumerate_norm_vectors(doubled, -4) and not enumerate_norm_vectors(
        doubled, -2
    )


def test_degenerate_rejected():
    with pytest.raises(ValueError, match="degenerate"):
        Lattice(IntMatrix([[0]]))
    with pytest.raises(ValueError, match="symmetric"):
        Lattice(IntMatrix([[0, 1], [2, 0]]))


def test_sublattice_requires_independent_rows(e10):
    with pytest.raises(ValueError):
        Sublattice(e10, IntMatrix([list(E[0]), list(E[0])]))


def test_signature_of_definite_and_hyperbolic(e10):
    assert signature(Lattice(negated_gram(ADEType("E", 6)))) == (0, 6)
    assert signature(e10) == (1, 9)


def test_sublattice_norm_vectors_in_ambient(e10):
    s = span(e10, [E[0], E[1]])
    roots = sublattice_norm_vectors(s, -2)
    assert len(roots) == 6
    for r in roots:
        assert e10.norm(r) == -2
