"""Acceptance suite: one callable per criterion, runnable from the CLI
(`affrep selftest`) and from pytest.  Each check returns (passed, detail).
"""

from __future__ import annotations

import itertools
import random
import time
from math import comb

from .catalog import (
    TRIGGER_BAD_Q,
    TRIGGER_SMALL_S,
    enumerate_exceptional_candidates,
)
from .config import DEFAULT_SEED
from .filtration import (
    check_blocks_containment,
    check_duality,
    check_embedding_theorem,
    radical_filtration,
    socle_filtration,
)
from .gallery import cubic_top_submodel, three_generator_submodel
from .matmodel import dual_model, model_sym_dual, sl_only_model, tensor_model, verify_degree_bound
from .oracle import product_as_multiset
from .rationality import (
    EXCEPTIONAL,
    POSSIBLY_NOT_GENERICALLY_FREE,
    RATIONAL_BY_A,
    RATIONAL_BY_B,
    TwoStepExtension,
    check_structural,
    decide_rationality,
)
from .repclass import BAD, SemisimpleRep, bad_list, classify, stabilizer_dimension
from .schur import (
    Weight,
    WeightMultiset,
    check_lr_gap_bound,
    dual,
    lr_decompose,
    normalize,
    weyl_dim,
)


def _small_weights(n: int, max_size: int) -> list[Weight]:
    out = set()
    for parts in itertools.product(range(max_size + 1), repeat=n - 1):
        if all(a >= b for a, b in zip(parts, parts[1:])) and sum(parts) <= max_size:
            out.add(Weight(n, parts + (0,)))
    return sorted(out)


def criterion_1_lr_oracle() -> tuple[bool, str]:
    """Tensor decompositions agree with the monomial oracle for all pairs of
    weights of size at most 4 at ranks 2, 3, 4; must finish within 2 minutes."""
    t0 = time.time()
    pairs = 0
    for n in (2, 3, 4):
        ws = _small_weights(n, 4)
        for a, b in itertools.product(ws, repeat=2):
            if lr_decompose(a, b) != product_as_multiset(a, b):
                return False, f"mismatch at n={n}, a={a}, b={b}"
            pairs += 1
    elapsed = time.time() - t0
    if elapsed > 120:
        return False, f"{pairs} pairs took {elapsed:.1f}s (> 120s)"
    return True, f"{pairs} pairs agree in {elapsed:.1f}s"


def criterion_2_canonical_filtration() -> tuple[bool, str]:
    """Socle layers of the degree <= l function models are exactly the dual
    symmetric powers, for n <= 3, l <= 4."""
    for n in (1, 2, 3):
        for l in range(5):
            f = socle_filtration(model_sym_dual(n, l))
            want_dims = [comb(n + i - 1, i) for i in range(l + 1)]
            want_layers = [WeightMultiset.of(n, [dual(normalize(n, [i]))]) for i in range(l + 1)]
            if f.layer_sizes() != want_dims or f.layers != want_layers:
                return False, f"layers differ at n={n}, l={l}"
    return True, "all socle chains reproduce the dual symmetric powers"


def criterion_3_example_models() -> tuple[bool, str]:
    """The two bundled submodels reproduce their expected layer lists."""
    W3 = lambda *p: normalize(3, list(p))
    v = cubic_top_submodel(3)
    rad = radical_filtration(v)
    want = [
        WeightMultiset.of(3, [W3(1, 1)]),
        WeightMultiset.of(3, [W3(2, 2)]),
        WeightMultiset.of(3, [W3(1), W3(3, 3)]),
    ]
    if rad.layers != want:
        return False, f"first model radical layers {[str(x) for x in rad.layers]}"
    W4 = lambda *p: normalize(4, list(p))
    w = three_generator_submodel(4)
    rad2 = radical_filtration(w)
    want2 = [
        WeightMultiset.of(4, [W4(3, 3, 3)]),
        WeightMultiset.of(4, [W4(1), W4(2, 2, 1), W4(4, 4, 4)]),
        WeightMultiset.of(4, [W4(2, 1, 1), W4(3, 3, 2), W4(5, 5, 5)]),
    ]
    soc2 = socle_filtration(w)
    want2s = [
        WeightMultiset.of(4, [W4(1), W4(2, 2, 1), W4(3, 3, 3)]),
        WeightMultiset.of(4, [W4(2, 1, 1), W4(3, 3, 2), W4(4, 4, 4)]),
        WeightMultiset.of(4, [W4(5, 5, 5)]),
    ]
    if rad2.layers != want2:
        return False, f"second model radical layers {[str(x) for x in rad2.layers]}"
    if soc2.layers != want2s:
        return False, f"second model socle layers {[str(x) for x in soc2.layers]}"
    return True, "both bundled submodels match their layer lists exactly"


def _model_sweep():
    models = []
    for n in (1, 2, 3):
        for l in range(5):
            m = model_sym_dual(n, l)
            models.append((f"functions(n={n},l={l})", m))
            models.append((f"dual functions(n={n},l={l})", dual_model(m)))
    models.append(("sl-only adjoint(3)", sl_only_model(normalize(3, [2, 1]))))
    models.append(("sl-only standard(2)", sl_only_model(normalize(2, [1]))))
    for n in (2, 3):
        t = tensor_model(sl_only_model(dual(normalize(n, [1]))), model_sym_dual(n, 2))
        models.append((f"dual-standard x functions(n={n},l=2)", t))
    models.append(("cubic-top submodel", cubic_top_submodel(3)))
    return models


def criterion_4_degree_bound() -> tuple[bool, str]:
    """Symbolic upper-triangular block degrees stay within layer distance."""
    count = 0
    for name, m in _model_sweep():
        if not verify_degree_bound(m, socle_filtration(m)):
            return False, f"degree bound fails for {name}"
        count += 1
    return True, f"degree bounds hold on {count} models"


def criterion_5_duality() -> tuple[bool, str]:
    count = 0
    for name, m in _model_sweep():
        if not check_duality(m):
            return False, f"duality fails for {name}"
        count += 1
    return True, f"duality holds on {count} models"


def criterion_6_blocks_and_embedding() -> tuple[bool, str]:
    count = 0
    for name, m in _model_sweep():
        if not check_blocks_containment(socle_filtration(m)):
            return False, f"socle blocks containment fails for {name}"
        if not check_blocks_containment(radical_filtration(m)):
            return False, f"radical blocks containment fails for {name}"
        if not check_embedding_theorem(m):
            return False, f"embedding containment fails for {name}"
        count += 1
    return True, f"blocks and embedding containments hold on {count} models"


def criterion_7_gap_inequality() -> tuple[bool, str]:
    n = 4
    checked = 0
    for parts in itertools.product(range(6), repeat=n - 1):
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        w = Weight(n, parts + (0,))
        for k in range(6):
            if not check_lr_gap_bound(w, k):
                return False, f"gap bound fails at w={w}, k={k}"
            checked += 1
    return True, f"gap inequality holds for {checked} (weight, degree) pairs at rank 4"


def criterion_8_stabilizer_regressions() -> tuple[bool, str]:
    seeds = (11, 23, 47)
    cases = []
    for n in (3, 4):
        std = normalize(n, [1])
        cases.extend(
            [
                (SemisimpleRep.of(n, [std]), n * n - 1 - n),
                (SemisimpleRep.of(n, [normalize(n, [2] + [1] * (n - 2))]), n - 1),
                (SemisimpleRep.of(n, [normalize(n, [2])]), n * (n - 1) // 2),
                (SemisimpleRep.of(n, [(std, n)]), 0),
            ]
        )
    cases.append((SemisimpleRep.of(4, [normalize(4, [1, 1])]), 10))
    for rep, want in cases:
        for seed in seeds:
            got = stabilizer_dimension(rep, seed=seed).stab_dim
            if got != want:
                return False, f"{rep} at seed {seed}: stab {got}, expected {want}"
    return True, f"{len(cases)} classical stabilizer dimensions reproduced at {len(seeds)} seeds"


def criterion_9_decision_procedure() -> tuple[bool, str]:
    n = 3
    W3 = lambda *p: normalize(3, list(p))
    # (B): quotient holds n^2 - 1 trivial summands
    ext_b = TwoStepExtension.of(3, S=[(W3(1), 8)], Q=[(W3(0), 8)], assume_generically_free=True)
    if decide_rationality(ext_b).outcome != RATIONAL_BY_B:
        return False, "criterion (B) instance failed"
    # (A): good quotient with a large submodule
    ext_a = TwoStepExtension.of(3, S=[W3(4, 3)], Q=[W3(3, 3)])
    if decide_rationality(ext_a).outcome != RATIONAL_BY_A:
        return False, "criterion (A) instance failed"
    # Exceptional: bad quotient, small submodule, freeness asserted
    ext_e = TwoStepExtension.of(
        10,
        S=[normalize(10, [1, 1, 1])],
        Q=[normalize(10, [1, 1])],
        assume_generically_free=True,
    )
    if decide_rationality(ext_e).outcome != EXCEPTIONAL:
        return False, "exceptional instance failed"
    # quotient equal to the standard representation: freeness gate fires
    ext_f = TwoStepExtension.of(3, S=[W3(2)], Q=[W3(1)])
    if decide_rationality(ext_f).outcome != POSSIBLY_NOT_GENERICALLY_FREE:
        return False, "freeness gate instance failed"

    # monotonicity: adding good summands to W preserves the (A) outcome
    pool = [w for w in _small_weights(3, 6) if w not in bad_list(3) and weyl_dim(w) <= 50]
    rng = random.Random(DEFAULT_SEED)
    for i in range(100):
        extra = [pool[rng.randrange(len(pool))] for _ in range(rng.randint(1, 3))]
        ext = TwoStepExtension.of(3, S=[W3(4, 3)], Q=[W3(3, 3)], W=extra)
        v = decide_rationality(ext)
        if v.outcome != RATIONAL_BY_A:
            return False, f"monotonicity broken at augmentation {i}: {extra} -> {v.outcome}"
    return True, "four hand instances and 100 seeded augmentations behave as required"


def criterion_10_catalog() -> tuple[bool, str]:
    from .serialize import catalog_entry_to_json, dumps

    t0 = time.time()
    first = enumerate_exceptional_candidates(3)
    second = enumerate_exceptional_candidates(3)
    elapsed = time.time() - t0
    lines1 = [dumps(catalog_entry_to_json(e)) for e in first]
    lines2 = [dumps(catalog_entry_to_json(e)) for e in second]
    if lines1 != lines2:
        return False, "two enumeration runs differ"
    if elapsed > 300:
        return False, f"two runs took {elapsed:.1f}s (> 300s)"
    n = 3
    triv = normalize(n, [])
    for e in first:
        ext = TwoStepExtension(n, e.S, e.Q, SemisimpleRep.of(n, []))
        if not check_structural(ext):
            return False, f"entry fails structural containments: Q={e.Q}, S={e.S}"
        if e.Q.summands.count(triv) >= n * n - 1:
            return False, f"entry exceeds the trivial-summand clause: Q={e.Q}"
        if e.trigger == TRIGGER_BAD_Q:
            if classify(e.Q) != BAD:
                return False, f"trigger Q-bad not verified: Q={e.Q}"
        elif e.trigger == TRIGGER_SMALL_S:
            if e.S.dim() >= n * n + 2 * n:
                return False, f"trigger dim-S-small not verified: S={e.S}"
        else:
            return False, f"unknown trigger {e.trigger}"
    return True, f"{len(first)} entries, byte-identical across runs, clauses verified ({elapsed:.1f}s)"


CRITERIA = [
    ("1 tensor decompositions match the monomial oracle", criterion_1_lr_oracle),
    ("2 canonical socle chains", criterion_2_canonical_filtration),
    ("3 bundled example models", criterion_3_example_models),
    ("4 polynomial degree bounds", criterion_4_degree_bound),
    ("5 socle/radical duality", criterion_5_duality),
    ("6 layer containment bounds", criterion_6_blocks_and_embedding),
    ("7 gap inequality sweep", criterion_7_gap_inequality),
    ("8 stabilizer regressions", criterion_8_stabilizer_regressions),
    ("9 two-step decision procedure", criterion_9_decision_procedure),
    ("10 catalog determinism and finiteness", criterion_10_catalog),
]


def run_all(write=print) -> bool:
    ok = True
    for name, fn in CRITERIA:
        passed, detail = fn()
        ok &= passed
        write(f"{'PASS' if passed else 'FAIL'} criterion {name}: {detail}")
    return ok
