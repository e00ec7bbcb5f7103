import os
from math import gcd

import pytest

from wreathpow.exc import CatalogRangeError
from wreathpow.exc import InvalidGroup
from wreathpow.exc import InvalidGroupFile
from wreathpow.exc import InvalidGroupSpec
from wreathpow.exc import NotPrimeError
from wreathpow.groups import build_from_cayley
from wreathpow.groups import catalog_group
from wreathpow.groups import catalog_groups_up_to
from wreathpow.groups import conjugacy_classes
from wreathpow.groups import is_power_surjective
from wreathpow.groups import load_group_file
from wreathpow.groups import nonpower_classes
from wreathpow.groups import resolve_group_spec

GROUPS_DIR = os.path.join(os.path.dirname(__file__), "..", "..", "docs", "groups")

C2_TEXT = """
# {1, -1}
2
1 -1
1 -1
-1 1
"""

# every element is its own inverse, which no group of order 5 allows
LOOP_TEXT = """5
e a b c d
e a b c d
a e c d b
b d e a c
c b d e a
d c a b e
"""


def test_build_from_cayley_c2():
    group = build_from_cayley(C2_TEXT, name="c2")

    assert group.order == 2
    assert group.labels == ("1", "-1")
    assert group.multiply(1, 1) == 0
    assert group.inverse(1) == 1


def test_build_from_cayley_rejects_non_associative_table():
    with pytest.raises(InvalidGroup, match="not associative"):
        build_from_cayley(LOOP_TEXT)


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("two\n", "group order"),
        ("2\n1 -1\n1 -1\n", "non-comment lines"),
        ("2\n1 -1\n1 -1\n-1\n", "row -1 has 1 entries"),
        ("2\n1 -1\n1 -1\n-1 x\n", "unknown element 'x'"),
        ("2\n1 1\n1 1\n1 1\n", "listed twice"),
    ],
)
def test_build_from_cayley_malformed(text, message):
    with pytest.raises(InvalidGroupFile, match=message):
        build_from_cayley(text)


def test_build_from_cayley_missing_identity():
    with pytest.raises(InvalidGroup, match="identity"):
        build_from_cayley("2\na b\nb a\na b\n")


def test_catalog_orders():
    assert catalog_group("trivial").order == 1
    assert catalog_group("cyclic", 3).order == 3
    assert catalog_group("symmetric", 3).order == 6
    assert catalog_group("symmetric", 4).order == 24
    assert catalog_group("dihedral", 4).order == 8
    assert catalog_group("dihedral", 5).order == 10


@pytest.mark.parametrize("kind, m", [("symmetric", 7), ("cyclic", 0), ("trivial", 2), ("quaternion", 2)])
def test_catalog_out_of_range(kind, m):
    with pytest.raises(CatalogRangeError):
        catalog_group(kind, m)


def test_catalog_groups_up_to():
    names = [group.name for group in catalog_groups_up_to(8)]

    assert names == ["1", "C:2", "C:3", "C:4", "D:2", "C:5", "C:6", "S:3", "C:7", "C:8", "D:4"]


def test_conjugacy_classes_sizes():
    assert conjugacy_classes(catalog_group("symmetric", 3)).sizes == (1, 3, 2)
    assert conjugacy_classes(catalog_group("cyclic", 3)).sizes == (1, 1, 1)
    assert conjugacy_classes(build_from_cayley(C2_TEXT)).sizes == (1, 1)
    assert conjugacy_classes(catalog_group("dihedral", 4)).num_classes == 5
    assert conjugacy_classes(catalog_group("symmetric", 4)).sizes == (1, 6, 8, 3, 6)


def test_conjugacy_classes_are_deterministic():
    first = conjugacy_classes(catalog_group("symmetric", 4))
    second = conjugacy_classes(catalog_group("symmetric", 4))

    assert first.members == second.members
    assert sum(first.sizes) == 24
    assert first.class_of(0) == 0


def test_power_map_one_is_identity():
    for group in catalog_groups_up_to(24):
        classes = conjugacy_classes(group)
        assert classes.power_map(1) == tuple(range(classes.num_classes))


def test_power_map_is_well_defined():
    # power_map raises ConsistencyError when the image class is not constant on a class
    for group in catalog_groups_up_to(24):
        classes = conjugacy_classes(group)
        for r in (2, 3, 5, 7):
            assert len(classes.power_map(r)) == classes.num_classes


def test_nonpower_classes():
    s3 = conjugacy_classes(catalog_group("symmetric", 3))
    labeling = nonpower_classes(s3, 2)
    assert labeling.d == 1
    assert labeling.nonpower_classes == (1,)
    assert s3.sizes[1] == 3

    assert nonpower_classes(conjugacy_classes(catalog_group("cyclic", 3)), 2).d == 0

    c2 = nonpower_classes(conjugacy_classes(build_from_cayley(C2_TEXT)), 2)
    assert c2.d == 1
    assert c2.nonpower_classes == (1,)


def test_nonpower_classes_needs_prime():
    with pytest.raises(NotPrimeError):
        nonpower_classes(conjugacy_classes(catalog_group("cyclic", 3)), 4)


def test_d_is_zero_when_coprime():
    for group in catalog_groups_up_to(24):
        classes = conjugacy_classes(group)
        for r in (2, 3, 5, 7):
            labeling = nonpower_classes(classes, r)
            assert labeling.d == classes.num_classes - len(set(classes.power_map(r)))
            if gcd(r, group.order) == 1:
                assert labeling.d == 0


def test_is_power_surjective_matches_gcd():
    for group in catalog_groups_up_to(12):
        for exponent in range(1, 13):
            assert is_power_surjective(group, exponent) == (gcd(exponent, group.order) == 1), (group, exponent)


def test_is_power_surjective_examples():
    assert is_power_surjective(catalog_group("cyclic", 3), 2)
    assert not is_power_surjective(catalog_group("symmetric", 3), 2)
    assert is_power_surjective(catalog_group("cyclic", 2), 3)


def test_cayley_text_round_trip():
    for group in (catalog_group("symmetric", 3), catalog_group("dihedral", 4), catalog_group("cyclic", 5)):
        rebuilt = build_from_cayley(group.to_cayley_text())
        assert rebuilt.labels == group.labels
        assert rebuilt.table == group.table


def test_element_order():
    c6 = catalog_group("cyclic", 6)
    assert [c6.element_order(x) for x in range(6)] == [1, 6, 3, 2, 3, 6]
    assert c6.power(1, 6) == 0
    assert c6.power(2, 0) == 0


def test_quaternion_group_file():
    q8 = load_group_file(os.path.join(GROUPS_DIR, "q8.txt"))
    classes = conjugacy_classes(q8)

    assert q8.order == 8
    assert classes.sizes == (1, 1, 2, 2, 2)
    # only 1 and -1 are squares
    assert nonpower_classes(classes, 2).d == 3
    assert nonpower_classes(classes, 3).d == 0


def test_resolve_group_spec():
    assert resolve_group_spec("1").order == 1
    assert resolve_group_spec("C:3").order == 3
    assert resolve_group_spec("c:3").name == "C:3"
    assert resolve_group_spec("S:3").order == 6
    assert resolve_group_spec("D:5").order == 10
    assert resolve_group_spec(os.path.join(GROUPS_DIR, "c2.txt")).order == 2


@pytest.mark.parametrize("spec", ["C:x", "no/such/file.txt"])
def test_resolve_group_spec_errors(spec):
    with pytest.raises(InvalidGroupSpec):
        resolve_group_spec(spec)


def test_group_file_that_is_not_utf8(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"2\ne \xff\ne \xff\n\xff e\n")

    with pytest.raises(InvalidGroupFile, match="not a UTF-8 text file"):
        load_group_file(str(path))
    with pytest.raises(InvalidGroupFile):
        resolve_group_spec(str(path))


def test_group_spec_that_is_a_directory(tmp_path):
    with pytest.raises(InvalidGroupSpec, match="cannot be read"):
        resolve_group_spec(str(tmp_path))
