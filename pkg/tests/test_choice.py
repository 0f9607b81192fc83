import pytest
from hypothesis import given, strategies as st

import naive
from zermelo.choice import (
    ChoiceFunction,
    alpha,
    choice_from_json,
    choose,
    conjugate,
    random_table,
    validate_table,
)
from zermelo.errors import (
    EmptySubset,
    FullSet,
    GroundTooLarge,
    MembershipViolation,
    MissingTableEntry,
)
from zermelo.rng import SplitMix64, splitmix64_finalizer
from zermelo.sets import GroundSet, Subset

ABC = GroundSet("abc")
XY = GroundSet("xy")


def test_splitmix_reference_stream():
    # published first outputs of SplitMix64 seeded with 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    assert splitmix64_finalizer(0) == 0xE220A8397B1DCDAF


def test_splitmix_below_and_permutation_are_reproducible():
    a, b = SplitMix64(99), SplitMix64(99)
    assert [a.below(7) for _ in range(50)] == [b.below(7) for _ in range(50)]
    perm = SplitMix64(5).permutation(10)
    assert sorted(perm) == list(range(10))
    assert perm == SplitMix64(5).permutation(10)


def test_min_rule_examples():
    phi = ChoiceFunction.min(ABC)
    assert choose(phi, ABC.subset("bc")) == ABC.index("b")
    assert alpha(phi, ABC.empty) == ABC.index("a")
    assert alpha(phi, ABC.subset("a")) == ABC.index("b")


def test_table_lookup():
    phi = ChoiceFunction.from_table(XY, {XY.subset("xy"): "y", XY.subset("x"): "x", XY.subset("y"): "y"})
    assert choose(phi, XY.subset("xy")) == XY.index("y")


@pytest.mark.parametrize("phi", [
    ChoiceFunction.min(ABC),
    ChoiceFunction.seeded(ABC, 3),
    random_table(ABC, 3),
])
def test_empty_subset_is_rejected(phi):
    with pytest.raises(EmptySubset):
        choose(phi, ABC.empty)


def test_alpha_undefined_at_full_set():
    with pytest.raises(FullSet):
        alpha(ChoiceFunction.min(ABC), ABC.full)


def test_validate_table_examples():
    full = {XY.subset("x"): "x", XY.subset("y"): "y", XY.subset("xy"): "x"}
    assert validate_table(ChoiceFunction.from_table(XY, full)).ok

    gap = ChoiceFunction.from_table(XY, {XY.subset("y"): "y", XY.subset("xy"): "x"}, validate=False)
    report = validate_table(gap)
    assert [str(s) for s in report.missing] == ["{x}"]
    assert not report.violations

    bad = dict(full)
    bad[XY.subset("x")] = "y"
    report = validate_table(ChoiceFunction.from_table(XY, bad, validate=False))
    assert [(str(s), XY.label(p)) for s, p in report.violations] == [("{x}", "y")]


def test_table_eager_and_lazy_errors():
    with pytest.raises(MissingTableEntry):
        ChoiceFunction.from_table(XY, {XY.subset("xy"): "x"})
    with pytest.raises(MembershipViolation):
        ChoiceFunction.from_table(XY, {XY.subset("x"): "y", XY.subset("y"): "y", XY.subset("xy"): "x"})
    lazy = ChoiceFunction.from_table(XY, {XY.subset("xy"): "x"}, validate=False)
    with pytest.raises(MissingTableEntry):
        choose(lazy, XY.subset("y"))
    with pytest.raises(MembershipViolation):
        choose(ChoiceFunction.from_table(XY, {XY.subset("x"): "y"}, validate=False), XY.subset("x"))


def test_validate_table_size_cap():
    big = GroundSet([f"a{i}" for i in range(17)])
    phi = ChoiceFunction.from_table(big, {}, validate=True)  # lazy above 16 atoms
    with pytest.raises(GroundTooLarge):
        validate_table(phi)


def test_seeded_rule_matches_reference_definition():
    atoms = list("abcdefgh")
    g = GroundSet(atoms)
    for seed in (0, 1, 42, 2**64 - 1):
        phi = ChoiceFunction.seeded(g, seed)
        ref = naive.seeded_rule(atoms, seed)
        for x in g.all_subsets()[1:]:
            assert g.label(choose(phi, x)) == ref(naive.to_labels(x))


def test_choice_json_round_trip():
    for phi in (ChoiceFunction.min(ABC), ChoiceFunction.seeded(ABC, 9), random_table(ABC, 4)):
        assert choice_from_json(ABC, phi.describe()) == phi


G10 = GroundSet([f"a{i}" for i in range(10)])
nonempty = st.integers(1, G10.full_mask)
kinds = st.one_of(
    st.just(ChoiceFunction.min(G10)),
    st.integers(0, 2**64 - 1).map(lambda s: ChoiceFunction.seeded(G10, s)),
    st.sampled_from([random_table(G10, s) for s in range(3)]),
)


@given(kinds, nonempty)
def test_choice_membership(phi, mask):
    x = Subset(G10, mask)
    a = choose(phi, x)
    assert a in x
    assert choose(phi, x) == a


@given(kinds, st.integers(0, G10.full_mask - 1))
def test_alpha_is_fresh(phi, mask):
    x = Subset(G10, mask)
    assert alpha(phi, x) not in x


@given(st.integers(0, 2**64 - 1), nonempty)
def test_seeded_rule_is_deterministic_across_instances(seed, mask):
    x = Subset(G10, mask)
    assert choose(ChoiceFunction.seeded(G10, seed), x) == choose(ChoiceFunction.seeded(G10, seed), x)


@given(nonempty)
def test_min_rule_commutes_with_order_preserving_relabeling(mask):
    # relabel a_i -> z_(2i); the declared order, hence each index, is unchanged
    relabeled = GroundSet([f"z{2 * i:02d}" for i in range(10)])
    phi, psi = ChoiceFunction.min(G10), ChoiceFunction.min(relabeled)
    picked = G10.label(choose(phi, Subset(G10, mask)))
    image = relabeled.label(choose(psi, Subset(relabeled, mask)))
    assert image == f"z{2 * int(picked[1:]):02d}"


def test_conjugate_definition():
    g = GroundSet("abcd")
    phi = ChoiceFunction.seeded(g, 11)
    perm = [2, 0, 3, 1]
    psi = conjugate(phi, perm)
    inv = {j: i for i, j in enumerate(perm)}
    for x in g.all_subsets()[1:]:
        pre = g.from_mask(sum(1 << inv[b] for b in x))
        assert choose(psi, x) == perm[choose(phi, pre)]
