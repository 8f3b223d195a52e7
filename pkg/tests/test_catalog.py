import itertools

import pytest

from affrep.catalog import (
    TRIGGER_BAD_Q,
    TRIGGER_SMALL_S,
    enumerate_exceptional_candidates,
    irreps_up_to_dim,
)
from affrep.rationality import TwoStepExtension, check_structural
from affrep.repclass import BAD, SemisimpleRep, classify
from affrep.schur import Weight, dual, normalize, weyl_dim


def W(n, *parts):
    return normalize(n, list(parts))


class TestIrrepsUpToDim:
    def test_sl2_tower(self):
        got = irreps_up_to_dim(2, 5)
        assert got == [W(2, k) for k in range(5)]

    def test_n3_d8(self):
        got = irreps_up_to_dim(3, 8)
        assert got == [W(3, 0), W(3, 1), W(3, 1, 1), W(3, 2), W(3, 2, 2), W(3, 2, 1)]

    def test_n3_d9_same_as_d8(self):
        assert irreps_up_to_dim(3, 9) == irreps_up_to_dim(3, 8)

    def test_sorted_by_dim_then_label(self):
        for n in (2, 3, 4):
            ws = irreps_up_to_dim(n, 30)
            keys = [(weyl_dim(w), w.parts) for w in ws]
            assert keys == sorted(keys)

    @pytest.mark.parametrize("n,bound", [(2, 50), (3, 50), (4, 50)])
    def test_complete_against_brute_force(self, n, bound):
        # every weight with first part <= bound has dimension >= first part,
        # so the brute-force sweep below is exhaustive for dims <= bound
        brute = set()
        for parts in itertools.product(range(bound + 1), repeat=n - 1):
            if any(a < b for a, b in zip(parts, parts[1:])):
                continue
            w = Weight(n, parts + (0,))
            if weyl_dim(w) <= bound:
                brute.add(w)
        assert set(irreps_up_to_dim(n, bound)) == brute


class TestEnumerate:
    def test_deterministic(self):
        from affrep.serialize import catalog_entry_to_json, dumps

        a = enumerate_exceptional_candidates(2)
        b = enumerate_exceptional_candidates(2)
        assert [dumps(catalog_entry_to_json(e)) for e in a] == [
            dumps(catalog_entry_to_json(e)) for e in b
        ]

    def test_entries_satisfy_clauses(self):
        n = 2
        entries = enumerate_exceptional_candidates(n)
        assert entries
        triv = W(n, 0)
        for e in entries:
            assert check_structural(TwoStepExtension(n, e.S, e.Q, SemisimpleRep.of(n, [])))
            assert e.Q.summands.count(triv) < n * n - 1
            if e.trigger == TRIGGER_BAD_Q:
                assert classify(e.Q) == BAD
            else:
                assert e.trigger == TRIGGER_SMALL_S
                assert e.S.dim() < n * n + 2 * n

    def test_dim_s_cap_flag(self):
        entries = enumerate_exceptional_candidates(2, max_dim_s=4)
        assert entries
        assert all(e.S.dim() <= 4 for e in entries)

    def test_cap_violations_refused(self):
        with pytest.raises(ValueError):
            enumerate_exceptional_candidates(3, max_dim_s=15)
        with pytest.raises(ValueError):
            enumerate_exceptional_candidates(3, max_trivials=8)
        with pytest.raises(ValueError):
            enumerate_exceptional_candidates(5)

    def test_affine_restriction_pattern_present(self):
        # the degree <= 1 function model restricted from rank 4 realizes the
        # pair (S, Q) = (trivial, dual standard); it must be in the catalog,
        # flagged as possibly not generically free
        entries = enumerate_exceptional_candidates(3)
        hits = [
            e
            for e in entries
            if e.Q.summands.entries == ((dual(W(3, 1)), 1),)
            and e.S.summands.entries == ((W(3, 0), 1),)
        ]
        assert len(hits) == 1
        assert hits[0].verdict.outcome == "PossiblyNotGenericallyFree"

    def test_verdicts_never_rational(self):
        # every admitted candidate fails both rationality criteria by design
        entries = enumerate_exceptional_candidates(2)
        assert all(
            e.verdict.outcome in ("Exceptional", "PossiblyNotGenericallyFree")
            for e in entries
        )
