import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import apply_perm, brute_homs, brute_isomorphic
from upalg.congruence import natural_projection
from upalg.core import UpAlgebra, make_algebra
from upalg.errors import HomViolation, NotBijective, NotComposable
from upalg.morphism import (
    HOM_PARTS,
    Morphism,
    canonical_form,
    check_hom,
    compose,
    constant_zero,
    enumerate_homs,
    fingerprint,
    hom_properties,
    identity,
    inverse,
    is_isomorphic,
    relabeled,
)

TRIVIAL = make_algebra(["0"], 0, [[0]])


def test_identity_and_constant(upto4):
    for a in upto4:
        i = identity(a)
        assert i.kernel == a.zero_set()
        for b in upto4[:6]:
            c = constant_zero(a, b)
            assert c.kernel == a.carrier()


def test_hom_violation_witness(paper4):
    # swap a and b: a.x = 0 for all x but b.a = a
    mapping = (0, 2, 1, 3)
    v = check_hom(paper4, paper4, mapping)
    assert v is not None
    x, y = v.witness
    t = paper4.table
    assert mapping[t[x][y]] != t[mapping[x]][mapping[y]]
    with pytest.raises(HomViolation):
        Morphism(paper4, paper4, mapping)


def test_projection_is_hom(paper5):
    pi = natural_projection(paper5, paper5.subset("0ab"))
    assert check_hom(pi.source, pi.target, pi.mapping) is None


def test_hom_properties_identity(upto4):
    for a in upto4:
        assert all(v is None for v in hom_properties(identity(a)).values())


def test_hom_properties_projection(paper5):
    pi = natural_projection(paper5, paper5.subset("0ab"))
    rep = hom_properties(pi)
    assert set(rep) == set(HOM_PARTS)
    assert all(v is None for v in rep.values())
    assert not pi.is_injective()


def test_hom_properties_sweep(census):
    algs = [a for n in range(1, 4) for a in census(n).representatives]
    algs += list(census(4).representatives[::3])
    for a in algs:
        for b in algs:
            for f in enumerate_homs(a, b):
                assert all(v is None for v in hom_properties(f).values())


def test_enumerate_homs_trivial(upto4):
    for a in upto4:
        to_t = enumerate_homs(a, TRIVIAL)
        assert [f.mapping for f in to_t] == [(0,) * a.n]
        from_t = enumerate_homs(TRIVIAL, a)
        assert [f.mapping for f in from_t] == [(0,)]


def test_enumerate_homs_paper4_endomorphisms(paper4):
    homs = enumerate_homs(paper4, paper4)
    oracle = brute_homs(paper4.table, paper4.table)
    assert [f.mapping for f in homs] == oracle
    # frozen from the unpruned oracle
    assert len(homs) == 10


def test_enumerate_homs_matches_oracle_order3(census):
    algs = [a for n in range(1, 4) for a in census(n).representatives]
    for a in algs:
        for b in algs:
            assert [f.mapping for f in enumerate_homs(a, b)] == brute_homs(a.table, b.table)


def test_isomorphic_self(upto4):
    for a in upto4:
        f = is_isomorphic(a, a)
        assert f is not None and f.is_bijective()


def test_paper4_swap_b_c(paper4):
    swapped = relabeled(paper4, (0, 1, 3, 2))
    assert swapped.table == apply_perm(paper4.table, (0, 1, 3, 2))
    f = is_isomorphic(paper4, swapped)
    assert f is not None
    # swapping b and c is an automorphism, so the witness may be any automorphism
    assert check_hom(paper4, swapped, f.mapping) is None
    assert check_hom(swapped, paper4, inverse(f).mapping) is None


def test_size_mismatch(paper4, paper5):
    assert is_isomorphic(paper4, paper5) is None


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_canonical_form_invariant_under_relabeling(data, upto5):
    a = data.draw(st.sampled_from(upto5))
    rest = data.draw(st.permutations(list(range(1, a.n))))
    perm = (0,) + tuple(rest)
    b = relabeled(a, perm)
    assert canonical_form(a).table == canonical_form(b).table
    f = is_isomorphic(a, b)
    assert f is not None
    assert f.is_bijective()


def test_canonical_form_is_minimum_over_all_relabelings(census):
    from itertools import permutations
    for a in census(4).representatives:
        best = min(
            [v for row in apply_perm(a.table, (0,) + p) for v in row]
            for p in permutations(range(1, a.n)))
        flat = [v for row in canonical_form(a).table for v in row]
        assert flat == best


def test_canonical_relabel_maps_onto_table(upto5):
    for a in upto5:
        cf = canonical_form(a)
        assert relabeled(a, cf.relabel).table == cf.table


def test_census_representatives_pairwise_distinct(census):
    for n in range(1, 5):
        reps = census(n).representatives
        forms = {canonical_form(a).table for a in reps}
        assert len(forms) == len(reps)
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert is_isomorphic(a, b) is None
                assert not brute_isomorphic(a.table, b.table)


def test_fingerprint_distinguishes_implies_not_isomorphic(upto4):
    for a in upto4:
        for b in upto4:
            if a.n == b.n and fingerprint(a) != fingerprint(b):
                assert is_isomorphic(a, b) is None


def test_isomorphism_equivalence_spot_checks(census):
    rng = random.Random(7)
    reps = census(4).representatives
    for a in reps:
        p1 = (0,) + tuple(rng.sample(range(1, 4), 3))
        p2 = (0,) + tuple(rng.sample(range(1, 4), 3))
        b, c = relabeled(a, p1), relabeled(a, p2)
        ab, bc = is_isomorphic(a, b), is_isomorphic(b, c)
        assert ab is not None and bc is not None
        assert is_isomorphic(b, a) is not None
        ac = compose(ab, bc)
        assert ac.is_bijective() and check_hom(a, c, ac.mapping) is None


def test_compose_and_inverse(paper5, upto4):
    pi = natural_projection(paper5, paper5.subset("0ab"))
    assert compose(identity(paper5), pi) == pi
    assert inverse(identity(paper5)) == identity(paper5)
    with pytest.raises(NotBijective):
        inverse(pi)
    with pytest.raises(NotComposable):
        compose(pi, pi)
    for a in upto4:
        for f in enumerate_homs(a, a):
            if f.is_bijective():
                assert compose(f, inverse(f)) == identity(a)
                assert compose(inverse(f), f) == identity(a)


def test_morphism_rejects_bad_length(paper4):
    with pytest.raises(ValueError):
        Morphism(paper4, paper4, (0, 1))


def test_cap(paper4):
    from upalg.errors import CapExceeded
    with pytest.raises(CapExceeded):
        enumerate_homs(paper4, paper4, cap=3)


def test_morphism_equality_uses_tables():
    a = UpAlgebra(("0", "a"), ((0, 1), (0, 0)))
    assert identity(a) == Morphism(a, a, (0, 1))
