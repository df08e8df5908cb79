import pytest

from curvesgp import NumSgp, ci_relations, from_generators, is_free, presentation_for_generators
from util import brute_conductor, brute_semigroup_members


def test_from_generators_conductor_18():
    assert from_generators([4, 6, 15]).conductor == 18


def test_from_generators_full_monoid():
    S = from_generators([1])
    assert S.conductor == 0
    assert S.genus == 0


def test_from_generators_gcd_handling():
    S = from_generators([4, 6])
    assert S.d == 2
    assert S.scaled_conductor == 2 * NumSgp([2, 3]).conductor
    assert S.contains(10) and not S.contains(7)
    with pytest.raises(ValueError):
        S.conductor  # noqa: B018


def test_from_generators_rejects_bad_input():
    with pytest.raises(ValueError):
        NumSgp([])
    with pytest.raises(ValueError):
        NumSgp([0, 3])


def test_contains():
    S = NumSgp([4, 6, 13, 15])
    assert not S.contains(11)
    assert S.contains(0)
    assert not NumSgp([4, 6, 15]).contains(13)


def test_conductor_examples():
    assert NumSgp([4, 6, 13, 15]).conductor == 12
    assert NumSgp([2, 3]).conductor == 2


def test_gaps_and_genus():
    assert len(NumSgp([4, 6, 13, 15]).gaps()) == 7
    assert len(NumSgp([8, 12, 26, 53]).gaps()) == 42
    assert NumSgp([1]).gaps() == []


def test_minimal_generators():
    assert NumSgp([4, 6, 13, 15, 18, 19]).minimal_generators() == [4, 6, 13, 15]
    assert NumSgp([2, 7]).minimal_generators() == [2, 7]
    assert NumSgp([1, 5]).minimal_generators() == [1]


def test_apery_set():
    assert sorted(NumSgp([2, 7]).apery_set(2)) == [0, 7]
    assert NumSgp([1]).apery_set(1) == [0]
    assert sorted(NumSgp([4, 6, 13, 15]).apery_set(4)) == [0, 6, 13, 15]
    with pytest.raises(ValueError):
        NumSgp([4, 6, 15]).apery_set(13)


def test_apery_against_brute_force():
    S = NumSgp([5, 7, 9])
    table = brute_semigroup_members([5, 7, 9], 200)
    for n in (5, 7, 9, 14):
        got = S.apery_set(n)
        for r, m in enumerate(got):
            assert m % n == r and table[m]
            assert all(not table[k] for k in range(r, m, n))
        assert max(got) - n == S.frobenius


def test_type_set():
    assert NumSgp([4, 6, 13, 15]).type_set() == [2, 9, 11]
    assert NumSgp([2, 3]).type_set() == [1]
    assert NumSgp([1]).type_set() == [-1]


def test_symmetry():
    assert NumSgp([4, 6, 13]).is_symmetric()
    assert not NumSgp([4, 6, 13, 15]).is_symmetric()
    assert NumSgp([1]).is_symmetric()


def test_sporadic_count():
    assert NumSgp([4, 6, 13, 15]).sporadic_count() == 5
    assert NumSgp([1]).sporadic_count() == 0
    assert NumSgp([2, 3]).sporadic_count() == 1


def test_factorizations():
    assert set(NumSgp([4, 6]).factorizations(12)) == {(3, 0), (0, 2)}
    assert NumSgp([5, 11]).factorizations(0) == [(0, 0)]
    assert set(NumSgp([4, 6, 15]).factorizations(30)) == {
        (6, 1, 0), (3, 3, 0), (0, 5, 0), (0, 0, 2)}


def test_minimal_presentation_examples():
    pres = NumSgp([4, 6, 15]).minimal_presentation()
    pairs = {frozenset((p.alpha, p.beta)) for p in pres.pairs}
    assert pairs == {frozenset({(3, 0, 0), (0, 2, 0)}),
                     frozenset({(0, 5, 0), (0, 0, 2)})}
    pres2 = NumSgp([2, 3]).minimal_presentation()
    assert {frozenset((p.alpha, p.beta)) for p in pres2.pairs} == {
        frozenset({(3, 0), (0, 2)})}
    assert NumSgp([1]).minimal_presentation().pairs == ()


def test_presentation_scaling_invariance():
    doubled = presentation_for_generators((8, 12, 30))
    plain = presentation_for_generators((4, 6, 15))
    assert [(p.alpha, p.beta) for p in doubled.pairs] == [
        (p.alpha, p.beta) for p in plain.pairs]
    assert [p.value for p in doubled.pairs] == [2 * p.value for p in plain.pairs]


def test_presentation_handles_nonminimal_tuples():
    pres = presentation_for_generators((4, 6, 10))
    # 10 = 4 + 6 forces a relation whose one side is the pure third variable
    assert any(set(p.alpha) == {0, 1} or set(p.beta) == {0, 1} for p in pres.pairs
               if (0, 0, 1) in (p.alpha, p.beta))


def test_is_free():
    assert is_free(NumSgp([2, 7]), [2, 7])
    assert is_free(NumSgp([4, 6, 13]), [4, 6, 13])
    assert not is_free(NumSgp([4, 6, 13]), [4, 6])  # does not generate


def test_ci_relations():
    pres = ci_relations([4, 6, 13])
    assert [(p.alpha, p.beta) for p in pres.pairs] == [
        ((0, 2, 0), (3, 0, 0)), ((0, 0, 2), (5, 1, 0))]
    pres2 = ci_relations([6, 4, 7])
    assert [(p.alpha, p.beta) for p in pres2.pairs] == [
        ((0, 3, 0), (2, 0, 0)), ((0, 0, 2), (1, 2, 0))]
    assert ci_relations([1]).pairs == ()
    # scaling invariance: <4,6> carries the complete intersection of <2,3>
    assert [(p.alpha, p.beta) for p in ci_relations([4, 6]).pairs] == [
        ((0, 2), (3, 0))]
    with pytest.raises(ValueError):
        ci_relations([9, 6, 1])  # 3*1 is not in <9,6>: not free
    with pytest.raises(ValueError):
        ci_relations([4, 5, 6])  # gcd chain stalls at 1 before the end


def test_conductor_matches_brute_force():
    for gens in ([3, 5], [4, 7, 9], [5, 6, 7], [6, 10, 15]):
        assert NumSgp(gens).conductor == brute_conductor(gens)
