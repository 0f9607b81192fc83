import pytest

import naive
from zermelo.choice import ChoiceFunction, random_table
from zermelo.errors import GroundTooLarge, NotRegular
from zermelo.oracle import (
    check_prefix_theorem,
    enumerate_regular_families,
    maximality_check,
    run_oracle,
    union_of_all_regular,
)
from zermelo.regular import build_chain, verify_regular
from zermelo.sets import GroundSet, SubsetFamily, family_union


def fams_as_labels(fams):
    return [[str(s) for s in f] for f in fams]


def test_enumeration_examples():
    a = GroundSet("a")
    assert fams_as_labels(enumerate_regular_families(a, ChoiceFunction.min(a))) == [["{}"], ["{}", "{a}"]]

    ab = GroundSet("ab")
    for phi in (ChoiceFunction.min(ab), ChoiceFunction.seeded(ab, 3), random_table(ab, 1)):
        fams = enumerate_regular_families(ab, phi)
        assert len(fams) == 3
        assert fams == build_chain(ab, phi).prefixes()

    empty = GroundSet([])
    run = run_oracle(empty, ChoiceFunction.min(empty))
    assert fams_as_labels(run.regular_families) == [["{}"]]
    assert run.candidate_count == 2
    assert dict(run.rejected) == {"cond3": 1}


def test_enumeration_matches_reference_brute_force():
    # the reference enumerates with itertools over frozensets; no shared code
    for n in range(4):
        atoms = list("abc"[:n])
        g = GroundSet(atoms)
        for seed in (0, 5):
            phi = ChoiceFunction.seeded(g, seed)
            ref = naive.regular_families(atoms, naive.seeded_rule(atoms, seed))
            got = [naive.family_labels(f) for f in enumerate_regular_families(g, phi)]
            assert sorted(got, key=len) == sorted(ref, key=len)


def test_union_examples():
    ab = GroundSet("ab")
    run = run_oracle(ab, ChoiceFunction.min(ab))
    assert str(union_of_all_regular(run)) == "{{},{a},{a,b}}"
    empty = GroundSet([])
    assert str(union_of_all_regular(run_oracle(empty, ChoiceFunction.min(empty)))) == "{{}}"
    abc = GroundSet("abc")
    assert union_of_all_regular(run_oracle(abc, ChoiceFunction.min(abc))) == \
        build_chain(abc, ChoiceFunction.min(abc)).family()


@pytest.mark.parametrize("n", range(5))
def test_q_cross_check_and_accounting(n):
    g = GroundSet("abcd"[:n])
    for phi in (ChoiceFunction.min(g), ChoiceFunction.seeded(g, 12), random_table(g, 12)):
        run = run_oracle(g, phi)
        q = union_of_all_regular(run)
        assert q == run.q_union == build_chain(g, phi).family()
        assert verify_regular(q, phi).overall
        assert family_union(q) == g.full
        assert len(run.regular_families) == n + 1
        assert check_prefix_theorem(run)
        assert len(run.regular_families) + run.rejected_count == run.candidate_count == 2 ** 2 ** n
        assert set(run.rejected) <= {"cond1", "cond3", "cond4"}


def test_rejection_tally_small_case():
    ab = GroundSet("ab")
    run = run_oracle(ab, ChoiceFunction.min(ab))
    # 8 of the 16 families lack {}; of the rest, {a},{b} together breaks linearity
    assert dict(run.rejected) == {"cond3": 8, "cond1": 2, "cond4": 3}


def test_oracle_size_cap():
    g = GroundSet("abcde")
    with pytest.raises(GroundTooLarge):
        run_oracle(g, ChoiceFunction.min(g))


def test_maximality_examples():
    abc = GroundSet("abc")
    phi = ChoiceFunction.min(abc)
    assert maximality_check(build_chain(abc, phi).family(), phi).maximal

    ab = GroundSet("ab")
    phi = ChoiceFunction.min(ab)
    report = maximality_check(SubsetFamily(ab, [ab.empty, ab.subset("a")]), phi)
    assert not report.maximal
    assert str(report.extension) == "{{},{a},{a,b}}"
    assert report.extension_report.overall

    empty = GroundSet([])
    assert maximality_check(SubsetFamily(empty, [empty.empty]), ChoiceFunction.min(empty)).maximal

    with pytest.raises(NotRegular):
        maximality_check(SubsetFamily(ab, [ab.empty, ab.full]), phi)


@pytest.mark.parametrize("n", range(5))
def test_maximal_iff_full_chain(n):
    g = GroundSet("abcd"[:n])
    phi = ChoiceFunction.seeded(g, 99)
    full = build_chain(g, phi).family()
    for fam in enumerate_regular_families(g, phi):
        report = maximality_check(fam, phi)
        assert report.maximal == (fam == full)
        if not report.maximal:
            assert report.extension_report.overall


def test_oracle_json():
    ab = GroundSet("ab")
    out = run_oracle(ab, ChoiceFunction.min(ab)).to_json()
    assert out["candidate_count"] == 16
    assert out["regular_count"] == 3
    assert out["rejected_by"] == {"cond3": 8, "cond1": 2, "cond4": 3, "cond2": 0}
    assert out["q"] == ["{}", "{a}", "{a,b}"]
