import random
from fractions import Fraction

import pytest

from conftest import SMALL_TYPES
from liecompact.arith import GaussianRational, I, is_negative_definite
from liecompact.chevalley import AlgebraElement, bracket, constants
from liecompact.compact_form import (
    CompactBasis,
    ad_trace,
    antilinear_involution,
    certify_compact,
    check_closure,
    chevalley_killing,
    compact_basis,
    killing_form,
    killing_gram,
)

ZERO = GaussianRational()


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(2)), ZERO) for j in range(2)] for i in range(2)]


def sl2_killing(x, y):
    """B(x, y) = 4 tr(xy) on 2x2 traceless matrices."""
    p = mat_mul(x, y)
    return (p[0][0] + p[1][1]) * 4


def test_sl2_gram_against_matrix_model():
    g = lambda rows: [[GaussianRational.coerce(v) for v in r] for r in rows]
    e, f, h = g([[0, 1], [0, 0]]), g([[0, 0], [1, 0]]), g([[1, 0], [0, -1]])
    lin = lambda *pairs: [[sum((c * m[i][j] for c, m in pairs), ZERO) for j in range(2)] for i in range(2)]
    y = lin((1, e), (-1, f))
    z = lin((I, e), (I, f))
    w = lin((I, h),)
    basis = [y, z, w]
    expected = [[sl2_killing(a, b) for b in basis] for a in basis]
    assert expected == [[-8, 0, 0], [0, -8, 0], [0, 0, -8]]

    sc = constants("A1")
    gram = killing_gram(sc, compact_basis(sc)).gram
    assert [[gram[i, j] for j in range(3)] for i in range(3)] == expected


@pytest.mark.parametrize("name, size", [("A1", 3), ("A2", 8), ("G2", 14), ("E8", 248)])
def test_basis_size(name, size):
    sc = constants(name)
    cb = compact_basis(sc)
    assert len(cb) == size == sc.dim


@pytest.mark.parametrize("name", ["A2", "B3", "G2", "D4"])
def test_basis_definition_and_independence(name):
    sc = constants(name)
    cb = compact_basis(sc)
    rs, r = sc.rs, sc.rank
    P = rs.n_pos
    for k in range(P):
        xa, xm = AlgebraElement.X(sc, rs.roots[k]), AlgebraElement.X(sc, rs.roots[k + P])
        assert cb.elements[k] == xa - xm
        assert cb.elements[P + k] == (xa + xm) * I
    for i in range(r):
        assert cb.elements[2 * P + i] == AlgebraElement.H(sc, i) * I
    # coordinates of each basis vector are the unit vector: independence over Q(i)
    for k, u in enumerate(cb.elements):
        coords = cb.coordinates(u)
        assert coords == [GaussianRational(int(j == k)) for j in range(len(cb))]


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_gram_matches_literal_ad_traces(name):
    sc = constants(name)
    cb = compact_basis(sc)
    gram = killing_gram(sc, cb).gram
    for i, u in enumerate(cb.elements):
        for j, v in enumerate(cb.elements):
            assert ad_trace(sc, u.terms, v.terms) == gram[i, j]


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_chevalley_killing_weight_zero_pattern(name):
    sc = constants(name)
    table = chevalley_killing(sc)
    for a in range(sc.dim):
        for b in range(a, sc.dim):
            wa, wb = sc.weight(a), sc.weight(b)
            if any(x + y for x, y in zip(wa, wb)):
                assert ad_trace(sc, {a: 1}, {b: 1}) == 0
                assert (a, b) not in table


@pytest.mark.parametrize("name", ["A3", "B4", "C3", "G2", "F4", "E6"])
def test_cartan_block_formula(name):
    sc = constants(name)
    rs = sc.rs
    table = chevalley_killing(sc)
    for i in range(rs.rank):
        for j in range(rs.rank):
            expected = sum(rs.simple_pairing(a, i) * rs.simple_pairing(a, j) for a in rs.roots)
            assert table.get((i, j), 0) == expected


@pytest.mark.parametrize("name", ["A2", "C3", "G2", "F4", "E7"])
def test_y_w_orthogonal(name):
    sc = constants(name)
    cb = compact_basis(sc)
    gram = killing_gram(sc, cb).gram
    P, r = sc.rs.n_pos, sc.rank
    for k in range(P):
        for i in range(r):
            assert gram[k, 2 * P + i] == 0


@pytest.mark.parametrize("name", ["B3", "G2", "D4"])
def test_killing_invariance(name):
    sc = constants(name)
    table = chevalley_killing(sc)
    rng = random.Random(11)
    basis = [AlgebraElement.basis(sc, k) for k in range(sc.dim)]
    for _ in range(2000):
        a, b, c = (rng.choice(basis) for _ in range(3))
        lhs = killing_form(sc, bracket(sc, a, b), c, table) + killing_form(sc, b, bracket(sc, a, c), table)
        assert lhs == 0


@pytest.mark.parametrize("name", ["A1", "G2", "B3", "A4"])
def test_certify_passes(name):
    cert = certify_compact(constants(name))
    assert cert.closure and cert.negative_definite and cert.antilinear_fixed
    assert cert.failures == []


def test_theta_fixes_z():
    sc = constants("A2")
    xa, xm = AlgebraElement.X(sc, (1, 1)), AlgebraElement.X(sc, (-1, -1))
    assert antilinear_involution(sc, xa) == -xm
    assert antilinear_involution(sc, xa * I) == xm * I
    z = (xa + xm) * I
    assert antilinear_involution(sc, z) == z


def test_split_form_is_not_negative_definite():
    # the real span of H_i, X_a + X_-a, X_a - X_-a is the split form
    sc = constants("A2")
    cb = compact_basis(sc)
    P = sc.rs.n_pos
    split = CompactBasis(
        sc,
        tuple(cb.elements[:P]) + tuple(u * (-I) for u in cb.elements[P:]),
        cb.labels,
    )
    assert not is_negative_definite(killing_gram(sc, split).gram)


def test_closure_detects_non_real_structure():
    sc = constants("A2")
    cb = compact_basis(sc)
    P = sc.rs.n_pos
    # drop the i from one Z: brackets leave the real span
    elems = list(cb.elements)
    elems[P] = elems[P] * (-I)
    assert check_closure(CompactBasis(sc, tuple(elems), cb.labels))


def test_certificate_json():
    cert = certify_compact(constants("A1"))
    assert cert.to_json() == {
        "type": "A1",
        "closure": True,
        "negative_definite": True,
        "antilinear_fixed": True,
        "gram_diagonal_sample": [-8, -8, -8],
    }
    assert all(isinstance(v, Fraction) for v in cert.gram_diagonal_sample)
