import pytest

from oracles import naive_isomorphic
from rlat import enumerate_up_to_iso, find_isomorphism, validate
from rlat.fileformat import emit
from rlat.generate import boolean_algebra, build_an

GOLDEN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 2, 6: 4}


class TestCorpus:
    def test_golden_counts(self, corpus6):
        assert corpus6.counts == GOLDEN_COUNTS
        assert corpus6.max_size == 6
        assert len(corpus6.algebras) == sum(GOLDEN_COUNTS.values())

    def test_every_member_validates(self, corpus6):
        for alg in corpus6.algebras:
            assert validate(alg).ok

    def test_pairwise_non_isomorphic(self, corpus6):
        algs = corpus6.algebras
        for i in range(len(algs)):
            for j in range(i + 1, len(algs)):
                assert find_isomorphism(algs[i], algs[j]) is None

    def test_deterministic(self):
        first = enumerate_up_to_iso(4)
        second = enumerate_up_to_iso(4)
        assert [emit(g) for g in first.algebras] \
            == [emit(g) for g in second.algebras]

    def test_known_members_present(self, corpus6):
        for probe in (boolean_algebra(1), boolean_algebra(2), build_an(0)):
            hits = [g for g in corpus6.algebras
                    if g.n == probe.n and find_isomorphism(probe, g)]
            assert len(hits) == 1

    def test_trivial_member(self, corpus6):
        ones = [g for g in corpus6.algebras if g.n == 1]
        assert len(ones) == 1
        assert ones[0].one == 0 and ones[0].neg == [0]


class TestBounds:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            enumerate_up_to_iso(0)

    def test_rejects_beyond_cap(self):
        with pytest.raises(ValueError):
            enumerate_up_to_iso(9)
        with pytest.raises(ValueError):
            enumerate_up_to_iso(4, cap=3)
        assert enumerate_up_to_iso(3, cap=3).counts == {1: 1, 2: 1, 3: 1}


class TestNaiveAgreement:
    def test_counts_match(self, naive4, corpus6):
        got = {n: len(models) for n, models in naive4.items()}
        assert got == {n: GOLDEN_COUNTS[n] for n in range(1, 5)}

    def test_members_match_one_to_one(self, naive4, corpus6):
        for n, models in naive4.items():
            mine = [g for g in corpus6.algebras if g.n == n]
            for m in models:
                hits = [g for g in mine if naive_isomorphic(m, g)]
                assert len(hits) == 1
