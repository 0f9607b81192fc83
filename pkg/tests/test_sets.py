import itertools

import pytest
from hypothesis import given, strategies as st

from zermelo.errors import CapacityError, EmptyFamily, GroundMismatch, UnknownAtom
from zermelo.sets import (
    GroundSet,
    Subset,
    SubsetFamily,
    complement,
    family_intersection,
    family_union,
    is_strict_subset,
    strict_lower_union,
)

ABC = GroundSet("abc")


def S(*labels, ground=ABC):
    return ground.subset(labels)


def F(*subsets, ground=ABC):
    return SubsetFamily(ground, subsets)


@pytest.mark.parametrize("x, expected", [
    (S(), S("a", "b", "c")),
    (S("a", "b", "c"), S()),
    (S("b"), S("a", "c")),
])
def test_complement_examples(x, expected):
    assert complement(x) == expected


@pytest.mark.parametrize("x, y, expected", [
    (S(), S("a"), True),
    (S("a"), S("a"), False),
    (S("a", "c"), S("a", "b"), False),
])
def test_is_strict_subset_examples(x, y, expected):
    assert is_strict_subset(x, y) is expected


def test_cross_ground_operations_are_errors():
    other = GroundSet("abd")
    with pytest.raises(GroundMismatch):
        is_strict_subset(S("a"), other.subset("a"))
    with pytest.raises(GroundMismatch):
        strict_lower_union(F(S()), other.empty)
    with pytest.raises(GroundMismatch):
        SubsetFamily(ABC, [S("a"), other.subset("a")])


def test_family_union_examples():
    assert family_union(F(S(), S("a"), S("a", "b"))) == S("a", "b")
    assert family_union(F()) == S()
    assert family_union(F(S("a"), S("c"))) == S("a", "c")


def test_family_intersection_examples():
    assert family_intersection(F(S("a"), S("a", "b"))) == S("a")
    assert family_intersection(F(S("a", "b", "c"))) == S("a", "b", "c")
    assert family_intersection(F(S("a"), S("b"))) == S()
    with pytest.raises(EmptyFamily):
        family_intersection(F())


def test_strict_lower_union_examples():
    chain = F(S(), S("a"), S("a", "b"), S("a", "b", "c"))
    assert strict_lower_union(chain, S("a", "b")) == S("a")
    assert strict_lower_union(F(S()), S()) == S()
    assert strict_lower_union(F(S(), S("a", "b")), S("a", "b")) == S()
    # p need not be a member
    assert strict_lower_union(chain, S("b", "c")) == S()


def test_textual_forms():
    assert str(S()) == "{}"
    assert str(S("c", "a")) == "{a,c}"
    assert str(F(S("a", "b"), S(), S("c"), S("a"))) == "{{},{a},{c},{a,b}}"


def test_ground_set_validation():
    with pytest.raises(ValueError, match="duplicate"):
        GroundSet(["a", "a"])
    with pytest.raises(ValueError):
        GroundSet(["a", ""])
    with pytest.raises(CapacityError):
        GroundSet([f"x{i}" for i in range(65)])
    assert GroundSet([f"x{i}" for i in range(64)]).full_mask == 2**64 - 1
    with pytest.raises(UnknownAtom):
        ABC.subset(["z"])
    with pytest.raises(ValueError):
        Subset(ABC, 0b1000)


def test_atom_index_is_declaration_position():
    g = GroundSet(["z", "y", "x"])
    assert [g.index(a) for a in "zyx"] == [0, 1, 2]
    assert g.subset(["x"]).mask == 0b100


def test_equal_labels_give_equal_grounds():
    assert GroundSet("ab").subset("a") == GroundSet("ab").subset("a")
    assert GroundSet("ab").subset("a") != GroundSet("ba").subset("a")


# exhaustive lattice laws for small ground sets

@pytest.mark.parametrize("n", range(5))
def test_complement_laws_exhaustive(n):
    g = GroundSet("abcd"[:n])
    for x in g.all_subsets():
        c = complement(x)
        assert complement(c) == x
        assert (x | c) == g.full
        assert (x & c) == g.empty


@pytest.mark.parametrize("n", range(5))
def test_strict_subset_is_strict_partial_order(n):
    subsets = GroundSet("abcd"[:n]).all_subsets()
    for x in subsets:
        assert not is_strict_subset(x, x)
    for x, y in itertools.product(subsets, repeat=2):
        if is_strict_subset(x, y):
            assert not is_strict_subset(y, x)
    for x, y, z in itertools.product(subsets, repeat=3):
        if is_strict_subset(x, y) and is_strict_subset(y, z):
            assert is_strict_subset(x, z)


G6 = GroundSet("abcdef")
masks = st.integers(0, G6.full_mask)
mask_lists = st.lists(masks, max_size=12)


@given(mask_lists, mask_lists)
def test_family_union_is_monotone(xs, ys):
    small = SubsetFamily.from_masks(G6, xs)
    big = SubsetFamily.from_masks(G6, xs + ys)
    assert family_union(small).issubset(family_union(big))


@given(st.lists(masks, min_size=1, max_size=12))
def test_chain_intersection_is_least_member(xs):
    # turn arbitrary masks into a chain by taking running unions
    acc, chain = 0, []
    for m in xs:
        acc |= m
        chain.append(acc)
    fam = SubsetFamily.from_masks(G6, chain)
    meet = family_intersection(fam)
    assert meet in fam
    assert all(meet.issubset(s) for s in fam)


@given(mask_lists, st.randoms())
def test_canonical_order_ignores_insertion_order(xs, rnd):
    shuffled = list(xs)
    rnd.shuffle(shuffled)
    a = SubsetFamily.from_masks(G6, xs)
    b = SubsetFamily.from_masks(G6, shuffled)
    assert a.masks == b.masks
    assert list(a.masks) == sorted(set(xs), key=lambda m: (bin(m).count("1"), m))
