import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_ideals,
    brute_is_ideal,
    brute_subalgebras,
    intersection_oracle,
)
from upalg.core import ElementSet
from upalg.errors import EmptySet, NotSubset
from upalg.substruct import (
    all_ideals,
    all_subalgebras,
    generated_ideal,
    generated_subalgebra,
    ideal_criterion_in_subalgebra,
    is_ideal,
    is_subalgebra,
)


def labels(alg, sets):
    return [set(alg.names[i] for i in s) for s in sets]


def test_paper5_ideals(paper5):
    assert is_ideal(paper5, paper5.subset("0ab")) is None
    assert is_ideal(paper5, paper5.subset("0ac")) is None
    found = labels(paper5, all_ideals(paper5))
    assert {"0", "a", "b"} in found and {"0", "a", "c"} in found


def test_zero_and_carrier_are_ideals(upto4):
    for alg in upto4:
        assert is_ideal(alg, alg.zero_set()) is None
        assert is_ideal(alg, alg.carrier()) is None


def test_paper5_zero_b_not_ideal(paper5):
    s = paper5.subset("0b")
    assert not brute_is_ideal(paper5.table, {0, 2})
    v = is_ideal(paper5, s)
    assert v is not None and v.rule == "ideal-rule"
    x, y, z = v.witness
    t = paper5.table
    assert t[x][t[y][z]] in s and y in s and t[x][z] not in s


def test_missing_zero_reported(paper4):
    v = is_ideal(paper4, paper4.subset("ab"))
    assert v.rule == "contains-0"


def test_empty_set_rejected(paper4):
    with pytest.raises(EmptySet):
        is_ideal(paper4, ElementSet.empty(4))
    with pytest.raises(EmptySet):
        is_subalgebra(paper4, ElementSet.empty(4))


def test_subalgebra_examples(paper4, paper5):
    assert is_subalgebra(paper4, paper4.zero_set()) is None
    assert is_subalgebra(paper5, paper5.subset("0ab")) is None
    v = is_subalgebra(paper4, paper4.subset("ab"))
    assert v is not None
    # a.a = 0 falls outside {a, b}
    assert v.witness == (1, 1)


def test_paper4_ideals_frozen(paper4):
    # frozen from the subset-scan oracle
    assert labels(paper4, all_ideals(paper4)) == [
        {"0"}, {"0", "b"}, {"0", "c"}, {"0", "b", "c"}, {"0", "a", "b", "c"}]


def test_trivial_lists():
    from upalg.core import make_algebra
    t = make_algebra(["0"], 0, [[0]])
    assert all_ideals(t) == [t.zero_set()]
    assert all_subalgebras(t) == [t.zero_set()]


def test_paper4_subalgebras(paper4):
    subs = labels(paper4, all_subalgebras(paper4))
    assert {"0"} in subs and {"0", "a"} in subs and {"0", "a", "b", "c"} in subs


def test_lists_sorted_by_mask(upto4):
    for alg in upto4:
        for lst in (all_ideals(alg), all_subalgebras(alg)):
            masks = [s.mask for s in lst]
            assert masks == sorted(masks)


def test_lists_match_oracle(upto4):
    for alg in upto4:
        assert [set(s) for s in all_ideals(alg)] == brute_ideals(alg.table)
        assert sorted(map(sorted, all_subalgebras(alg))) == sorted(map(sorted, brute_subalgebras(alg.table)))


def test_generated_ideal_examples(paper5):
    assert generated_ideal(paper5, ElementSet.empty(5)) == paper5.zero_set()
    assert generated_ideal(paper5, paper5.zero_set()) == paper5.zero_set()
    assert generated_ideal(paper5, paper5.subset("b")) == paper5.subset("0ab")
    assert generated_ideal(paper5, paper5.subset("a")) == paper5.subset("0a")
    assert generated_ideal(paper5, paper5.carrier()) == paper5.carrier()


def test_generated_subalgebra_examples(paper4, paper5):
    assert generated_subalgebra(paper4, ElementSet.empty(4)) == paper4.zero_set()
    assert generated_subalgebra(paper4, paper4.subset("a")) == paper4.subset("0a")
    # frozen from the intersection oracle
    assert generated_subalgebra(paper5, paper5.subset("cd")) == paper5.subset("0cd")


def test_generated_match_intersection_oracle(upto4):
    for alg in upto4:
        ids, subs = brute_ideals(alg.table), brute_subalgebras(alg.table)
        for mask in range(1 << alg.n):
            seed = ElementSet(alg.n, mask)
            assert set(generated_ideal(alg, seed)) == intersection_oracle(ids, set(seed), alg.n)
            assert set(generated_subalgebra(alg, seed)) == intersection_oracle(subs, set(seed), alg.n)


def test_intersections_and_ideal_properties(upto4):
    for alg in upto4:
        ideals = all_ideals(alg)
        subs = all_subalgebras(alg)
        t = alg.table
        for b in ideals:
            assert is_subalgebra(alg, b) is None
            for x in alg.elements:
                for y in b:
                    assert t[x][y] in b  # A.B within B
                    if t[y][x] in b:
                        assert x in b
            for c in ideals:
                assert is_ideal(alg, b & c) is None
        for b in subs:
            for c in subs:
                assert is_subalgebra(alg, b & c) is None


def test_ideal_absorption_for_subsets(upto4):
    # b.X within B and b in B implies X within B, for arbitrary subsets X
    for alg in upto4:
        t = alg.table
        for b_set in all_ideals(alg):
            for b in b_set:
                for mask in range(1, 1 << alg.n):
                    X = ElementSet(alg.n, mask)
                    if all(t[b][x] in b_set for x in X):
                        assert X.issubset(b_set)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_generated_ideal_is_closure_operator(data, upto4):
    alg = data.draw(st.sampled_from(upto4))
    full = (1 << alg.n) - 1
    a = ElementSet(alg.n, data.draw(st.integers(0, full)))
    b = ElementSet(alg.n, data.draw(st.integers(0, full)) | a.mask)
    ga, gb = generated_ideal(alg, a), generated_ideal(alg, b)
    assert a.issubset(ga)
    assert ga.issubset(gb)
    assert generated_ideal(alg, ga) == ga


def test_criterion_zero_set(upto4):
    for alg in upto4:
        for b in all_subalgebras(alg):
            assert ideal_criterion_in_subalgebra(alg, b, alg.zero_set()) is None


def test_criterion_paper5(paper5):
    assert ideal_criterion_in_subalgebra(paper5, paper5.carrier(), paper5.subset("0ab")) is None


def test_criterion_witness_when_failing(upto4):
    seen_failure = False
    for alg in upto4:
        t = alg.table
        for b in all_subalgebras(alg):
            for mask in range(1, 1 << alg.n, 2):
                s = ElementSet(alg.n, mask)
                if not s.issubset(b):
                    continue
                v = ideal_criterion_in_subalgebra(alg, b, s)
                brute = all(t[t[v_][t[u][x]]][x] in s for x in b for u in s for v_ in s)
                assert (v is None) == brute
                if v is not None:
                    seen_failure = True
                    x, u, w = v.witness
                    assert t[t[w][t[u][x]]][x] not in s
    assert seen_failure


def test_criterion_not_subset(paper5):
    with pytest.raises(NotSubset):
        ideal_criterion_in_subalgebra(paper5, paper5.subset("0a"), paper5.subset("0ab"))
