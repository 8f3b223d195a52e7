from collections import Counter
from fractions import Fraction
from math import comb

import pytest

from affrep.filtration import (
    check_blocks_containment,
    check_duality,
    check_embedding_theorem,
    decompose_character,
    dual_multiset,
    identify_layers,
    radical_filtration,
    socle_filtration,
)
from affrep.linalg import SMat
from affrep.matmodel import (
    dual_model,
    model_sym_dual,
    sl_only_model,
    tensor_model,
    translation_matrix,
)
from affrep.schur import WeightMultiset, dual, normalize


def W(n, *parts):
    return normalize(n, list(parts))


def sym_dual_layers(n, l):
    return [WeightMultiset.of(n, [dual(W(n, i))]) for i in range(l + 1)]


class TestSocle:
    def test_canonical_model_layers(self):
        for n in (1, 2, 3):
            for l in range(5):
                f = socle_filtration(model_sym_dual(n, l))
                assert f.length == l
                assert f.layer_sizes() == [comb(n + i - 1, i) for i in range(l + 1)]
                assert f.layers == sym_dual_layers(n, l)

    def test_sl_only_single_layer(self):
        f = socle_filtration(sl_only_model(W(3, 2, 1)))
        assert f.length == 0
        assert f.layers == [WeightMultiset.of(3, [W(3, 2, 1)])]

    def test_chain_length_is_nilpotency_order(self):
        # derivative operators have maximal rank: the chain length must match
        # the kernel-of-powers chain of a generic translation
        m = model_sym_dual(3, 3)
        v = [Fraction(3), Fraction(-1), Fraction(7)]
        t = translation_matrix(m, v)
        order = 0
        power = SMat.identity(m.dim)
        while not power.is_zero():
            power = power.matmul(t)
            order += 1
        f = socle_filtration(m)
        assert f.length + 1 == order

    def test_idempotent(self):
        m = model_sym_dual(2, 3)
        f1 = socle_filtration(m)
        f2 = socle_filtration(m)
        assert f1.snapshots == f2.snapshots
        assert f1.layers == f2.layers

    def test_chain_members_invariant(self):
        m = tensor_model(sl_only_model(dual(W(3, 1))), model_sym_dual(3, 2))
        f = socle_filtration(m)
        from affrep.linalg import Echelon

        for i in range(f.length + 1):
            ech = Echelon()
            rows = f.member_basis(i)
            for r in rows:
                ech.insert(r)
            for g in m.all_gens():
                for r in rows:
                    assert ech.contains(g.apply(r))

    def test_layer_dimensions_conserve(self):
        for m in [model_sym_dual(2, 3), dual_model(model_sym_dual(2, 3))]:
            for f in (socle_filtration(m), radical_filtration(m)):
                assert sum(f.layer_sizes()) == m.dim
                assert sum(ms.dim() for ms in f.layers) == m.dim


class TestRadical:
    def test_dual_of_canonical(self):
        for n, l in [(2, 2), (2, 3), (3, 2)]:
            f = radical_filtration(dual_model(model_sym_dual(n, l)))
            want = [WeightMultiset.of(n, [W(n, l - i)]) for i in range(l + 1)]
            assert f.layers == want

    def test_sl_only_single_layer(self):
        f = radical_filtration(sl_only_model(W(3, 1)))
        assert f.length == 0

    def test_same_length_as_socle(self):
        models = [
            model_sym_dual(2, 2),
            dual_model(model_sym_dual(3, 2)),
            tensor_model(sl_only_model(dual(W(3, 1))), model_sym_dual(3, 2)),
        ]
        for m in models:
            assert socle_filtration(m).length == radical_filtration(m).length


class TestIdentifyLayers:
    def test_canonical(self):
        m = model_sym_dual(3, 2)
        f = socle_filtration(m)
        reps = identify_layers(m, f)
        assert [r.summands for r in reps] == sym_dual_layers(3, 2)

    def test_decompose_character_adjoint(self):
        char = Counter()
        from affrep.oracle import ssyt_contents
        from affrep.matmodel import grading_rep

        for c in ssyt_contents((2, 1, 0), 3):
            char[grading_rep(c)] += 1
        ms = decompose_character(3, char)
        assert ms == WeightMultiset.of(3, [W(3, 2, 1)])

    def test_rejects_bad_character(self):
        with pytest.raises(ValueError):
            decompose_character(2, Counter({(-1, 0): 1}))


class TestChecks:
    MODELS = None

    def models(self):
        if TestChecks.MODELS is None:
            TestChecks.MODELS = [
                model_sym_dual(2, 2),
                model_sym_dual(3, 2),
                dual_model(model_sym_dual(2, 2)),
                sl_only_model(W(3, 2, 1)),
                tensor_model(sl_only_model(dual(W(3, 1))), model_sym_dual(3, 2)),
            ]
        return TestChecks.MODELS

    def test_duality(self):
        for m in self.models():
            assert check_duality(m)

    def test_blocks(self):
        for m in self.models():
            assert check_blocks_containment(socle_filtration(m))
            assert check_blocks_containment(radical_filtration(m))

    def test_embedding(self):
        for m in self.models():
            assert check_embedding_theorem(m)

    def test_dual_multiset(self):
        ms = WeightMultiset.of(3, [(W(3, 2), 2), W(3, 1)])
        assert dual_multiset(dual_multiset(ms)) == ms


class TestGallery:
    def test_cubic_top_layers(self):
        from affrep.gallery import cubic_top_submodel

        v = cubic_top_submodel(3)
        assert v.dim == 22
        soc = socle_filtration(v)
        assert soc.layers == [
            WeightMultiset.of(3, [W(3, 1, 1)]),
            WeightMultiset.of(3, [W(3, 1), W(3, 2, 2)]),
            WeightMultiset.of(3, [W(3, 3, 3)]),
        ]
        rad = radical_filtration(v)
        assert rad.layers == [
            WeightMultiset.of(3, [W(3, 1, 1)]),
            WeightMultiset.of(3, [W(3, 2, 2)]),
            WeightMultiset.of(3, [W(3, 1), W(3, 3, 3)]),
        ]

    def test_cubic_top_checks(self):
        from affrep.gallery import cubic_top_submodel

        v = cubic_top_submodel(3)
        assert check_duality(v)
        assert check_blocks_containment(socle_filtration(v))
        assert check_blocks_containment(radical_filtration(v))
        assert check_embedding_theorem(v)

    def test_three_generator_layers(self):
        from affrep.gallery import three_generator_submodel

        v = three_generator_submodel(4)
        soc = socle_filtration(v)
        assert soc.layers == [
            WeightMultiset.of(4, [W(4, 1), W(4, 2, 2, 1), W(4, 3, 3, 3)]),
            WeightMultiset.of(4, [W(4, 2, 1, 1), W(4, 3, 3, 2), W(4, 4, 4, 4)]),
            WeightMultiset.of(4, [W(4, 5, 5, 5)]),
        ]
        rad = radical_filtration(v)
        assert rad.layers == [
            WeightMultiset.of(4, [W(4, 3, 3, 3)]),
            WeightMultiset.of(4, [W(4, 1), W(4, 2, 2, 1), W(4, 4, 4, 4)]),
            WeightMultiset.of(4, [W(4, 2, 1, 1), W(4, 3, 3, 2), W(4, 5, 5, 5)]),
        ]
