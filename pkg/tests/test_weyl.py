import pytest

from conftest import RANK8_TYPES
from liecompact.root_system import parse_type, root_system
from liecompact.weyl import (
    DiagramAutomorphism,
    inversion_count,
    longest_element,
    minus_w0,
    reflect,
    twist_automorphism,
    weyl_group_order,
)

TRIVIAL_MINUS_W0 = {"A1", "G2", "F4", "E7", "E8"}


def expect_trivial(name: str) -> bool:
    t = parse_type(name)
    if name in TRIVIAL_MINUS_W0 or t.family in "BC":
        return True
    return t.family == "D" and t.rank % 2 == 0


def test_reflect_examples():
    rs = root_system("A2")
    assert reflect(rs, 0, (1, 0)) == (-1, 0)
    assert reflect(rs, 0, (0, 1)) == (1, 1)
    b3 = root_system("B3")
    # alpha_3 is orthogonal to alpha_1
    assert b3.simple_pairing((0, 0, 1), 0) == 0
    assert reflect(b3, 0, (0, 0, 1)) == (0, 0, 1)


def test_longest_small_examples():
    a1 = longest_element(root_system("A1"))
    assert a1.word == (0,)
    assert a1.apply(root_system("A1"), (1,)) == (-1,)
    rs = root_system("A2")
    w = longest_element(rs)
    assert w.word == (0, 1, 0)
    assert w.apply(rs, (1, 0)) == (0, -1)
    assert w.apply(rs, (0, 1)) == (-1, 0)
    b2 = root_system("B2")
    w = longest_element(b2)
    assert len(w) == 4
    assert all(w.apply(b2, r) == tuple(-c for c in r) for r in b2.roots)


def test_minus_w0_examples():
    assert minus_w0(root_system("A1")).is_identity()
    assert minus_w0(root_system("A2")).perm == (1, 0)
    assert minus_w0(root_system("E7")).is_identity()


@pytest.mark.parametrize("name", RANK8_TYPES)
def test_longest_element_contract(name):
    rs = root_system(name)
    w = longest_element(rs)
    assert w.is_involution()
    assert len(w.word) == rs.n_pos == inversion_count(rs, w)
    assert all(not rs.is_positive(w.action[k]) for k in range(rs.n_pos))
    assert sorted(w.action) == list(range(len(rs.roots)))
    psi = minus_w0(rs, w)
    assert psi.preserves(rs.cartan)
    assert psi.order in (1, 2)
    assert psi.is_identity() == expect_trivial(name)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4", "F4"])
def test_longest_element_preserves_pairing(name):
    rs = root_system(name)
    w = longest_element(rs)
    for a in range(len(rs.roots)):
        for b in range(len(rs.roots)):
            wa, wb = rs.roots[w.action[a]], rs.roots[w.action[b]]
            assert rs.pairing(wb, wa) == rs.pairing(rs.roots[b], rs.roots[a])


def test_longest_word_reproduces_action():
    rs = root_system("D5")
    w = longest_element(rs)
    for beta in rs.roots:
        image = beta
        for i in reversed(w.word):
            image = reflect(rs, i, image)
        assert image == w.apply(rs, beta)


def test_longest_lengths():
    assert len(longest_element(root_system("A8")).word) == 36
    assert len(longest_element(root_system("E8")).word) == 120


@pytest.mark.parametrize("name, order", [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("D4", 192)])
def test_weyl_group_order(name, order):
    assert weyl_group_order(root_system(name)) == order


def test_twist_automorphisms_preserve_cartan():
    for name in ["A2^2", "A5^2", "D3^2", "D4^2", "D4^3", "D7^2", "E6^2"]:
        t = parse_type(name)
        psi = twist_automorphism(t)
        assert psi.preserves(root_system(t).cartan)
        assert psi.order == t.twist


def test_bad_permutation_not_preserving():
    rs = root_system("B3")
    assert not DiagramAutomorphism((2, 1, 0)).preserves(rs.cartan)
    assert not DiagramAutomorphism((0, 0, 1)).preserves(rs.cartan)


def test_inverse():
    psi = twist_automorphism(parse_type("D4^3"))
    assert psi.inverse().inverse() == psi
    assert DiagramAutomorphism(tuple(psi.perm[i] for i in psi.inverse().perm)).is_identity()
