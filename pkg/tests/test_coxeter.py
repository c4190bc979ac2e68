import pytest

from garside.coxeter import (
    CoxeterMatrix,
    classify,
    classify_with_map,
    parse_system,
)
from garside.errors import NotSphericalError, ReducibleSystemError, UnknownSystemError

from helpers import bfs_length_table


def test_parse_a3():
    s = parse_system("A3")
    assert s.rank == 3
    assert s.matrix.entry(1, 2) == s.matrix.entry(2, 3) == 3
    assert s.matrix.entry(1, 3) == 2


def test_parse_a1_trivial():
    s = parse_system("A1")
    assert s.rank == 1 and s.n_positive_roots == 1


def test_parse_dihedral_root_count():
    s = parse_system("I2(7)")
    assert s.rank == 2 and s.matrix.entry(1, 2) == 7
    assert s.n_positive_roots == 7
    # cross-check against the 14-element dihedral group
    table = bfs_length_table(s)
    assert len(table) == 14
    assert max(table.values()) == 7


@pytest.mark.parametrize(
    "spec,expected",
    [("B2", "I2(4)"), ("I2(3)", "A2"), ("D3", "A3"), ("I2(4)", "I2(4)")],
)
def test_aliases(spec, expected):
    assert parse_system(spec).name == expected


@pytest.mark.parametrize("bad", ["A0", "B1", "D2", "E5", "E9", "F5", "H2", "H5", "I2(2)", "Q3", ""])
def test_parse_rejects(bad):
    with pytest.raises(UnknownSystemError):
        parse_system(bad)


def test_classify_relabeled_a3():
    # path 3 - 1 - 2 under original labels
    mat = CoxeterMatrix((1, 2, 3), ((1, 3, 3), (3, 1, 2), (3, 2, 1)))
    assert classify(mat) == "A3"
    name, mapping = classify_with_map(mat)
    assert sorted(mapping.values()) == [1, 2, 3]


def test_classify_rejects_triangle():
    mat = CoxeterMatrix((1, 2, 3), ((1, 3, 3), (3, 1, 3), (3, 3, 1)))
    with pytest.raises(NotSphericalError):
        classify(mat)


def test_classify_rejects_reducible():
    mat = CoxeterMatrix((1, 2), ((1, 2), (2, 1)))
    with pytest.raises(ReducibleSystemError):
        classify(mat)


@pytest.mark.parametrize("spec", ["B4", "D4", "D5", "F4", "H3", "E6"])
def test_classify_round_trip(spec):
    s = parse_system(spec)
    assert classify(s.matrix) == s.name


def test_root_counts():
    expected = {"A4": 10, "B3": 9, "B4": 16, "D4": 12, "F4": 24, "H3": 15, "H4": 60, "E6": 36}
    for spec, count in expected.items():
        assert parse_system(spec).n_positive_roots == count


def test_descents_identity_and_w0():
    s = parse_system("A3")
    assert s.identity.descents("left") == frozenset()
    assert s.identity.descents("right") == frozenset()
    assert s.w0.descents("left") == frozenset(s.atoms)
    assert s.w0.descents("right") == frozenset(s.atoms)


def test_descents_of_s1s2():
    s = parse_system("A3")
    w = s.word_element([1, 2])
    assert w.descents("left") == {1}
    assert w.descents("right") == {2}


@pytest.mark.parametrize(
    "spec",
    ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3",
     "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"],
)
def test_descents_match_brute_force(spec):
    system = parse_system(spec)
    table = bfs_length_table(system)
    for w, length in table.items():
        assert w.length == length
        left = {s for s in system.atoms if table[system.reflection(s) * w] < length}
        right = {s for s in system.atoms if table[w * system.reflection(s)] < length}
        assert w.descents("left") == left
        assert w.descents("right") == right


@pytest.mark.parametrize("spec", ["A3", "B3", "H3", "I2(6)"])
def test_relation_orders(spec):
    system = parse_system(spec)
    for s in system.atoms:
        r = system.reflection(s)
        assert (r * r).is_identity
        for t in system.atoms:
            if s < t:
                st = system.reflection(s) * system.reflection(t)
                acc = system.identity
                for _ in range(system.matrix.entry(s, t)):
                    acc = acc * st
                assert acc.is_identity


def test_group_ops():
    import random

    system = parse_system("H3")
    rng = random.Random(71)
    for _ in range(50):
        u = system.word_element([rng.choice(system.atoms) for _ in range(8)])
        v = system.word_element([rng.choice(system.atoms) for _ in range(8)])
        assert (u * u.inverse).is_identity
        assert (u * v).inverse == v.inverse * u.inverse
        assert (u * v).length <= u.length + v.length


@pytest.mark.parametrize("spec", ["A2", "A3", "I2(5)"])
def test_length_subadditive_exhaustively(spec):
    system = parse_system(spec)
    elements = system.all_elements()
    for u in elements:
        for v in elements:
            total = (u * v).length
            assert total <= u.length + v.length
            assert (total - u.length - v.length) % 2 == 0


def test_longest_element_lengths():
    assert parse_system("A3").w0.length == 6
    assert parse_system("H3").w0.length == 15
