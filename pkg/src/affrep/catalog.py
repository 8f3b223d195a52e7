"""Finite catalog of exceptional two-step candidates.

The finiteness clauses bound the search: either the quotient Q is a bad sum
(with fewer than n^2 - 1 trivial summands), or the submodule S is small
(dim S < n^2 + 2n).  In both regimes S runs over sub-multisets of
Q (x) C^n, and pairs must satisfy the structural containments both ways.
Enumeration order is canonical, so repeated runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_SEED, DEFAULT_TRIALS
from .repclass import BAD, SemisimpleRep, bad_list, classify
from .rationality import (
    TwoStepExtension,
    Verdict,
    check_structural,
    decide_rationality,
)
from .schur import Weight, WeightMultiset, lr_decompose, normalize, weyl_dim

TRIGGER_BAD_Q = "Q-bad"
TRIGGER_SMALL_S = "dim-S-small"


@dataclass
class CatalogEntry:
    n: int
    S: SemisimpleRep
    Q: SemisimpleRep
    trigger: str
    verdict: Verdict


def irreps_up_to_dim(n: int, max_dim: int) -> list[Weight]:
    """All normalized weights of dimension at most max_dim, sorted by
    (dimension, label).

    Complete because the highest-root string forces dim >= first part + 1,
    so first parts beyond max_dim - 1 cannot occur; the sweep below is
    exhaustive under that cap.  (The dimension is not monotone in the later
    parts, so no further pruning is sound.)
    """
    if max_dim < 1:
        raise ValueError("dimension bound must be >= 1")
    cap = max_dim - 1
    found: list[Weight] = []

    def rec(prefix: list[int]):
        if len(prefix) == n - 1:
            w = Weight(n, tuple(prefix) + (0,))
            if weyl_dim(w) <= max_dim:
                found.append(w)
            return
        hi = prefix[-1] if prefix else cap
        for v in range(hi + 1):
            rec(prefix + [v])

    if n == 1:
        return [Weight(1, (0,))]
    rec([])
    return sorted(found, key=lambda w: (weyl_dim(w), w.parts))


def _tensor_with_standard(n: int, q: WeightMultiset) -> WeightMultiset:
    std = normalize(n, [1])
    total = WeightMultiset.of(n, [])
    for w, m in q.entries:
        total = total.add(lr_decompose(w, std).scale(m))
    return total


def _submultisets_sorted(ms: WeightMultiset):
    import itertools

    ranges = [range(m + 1) for _, m in ms.entries]
    subs = []
    for counts in itertools.product(*ranges):
        entries = [(w, c) for (w, _), c in zip(ms.entries, counts) if c]
        subs.append(WeightMultiset.of(ms.n, entries))
    subs.sort(key=lambda s: (s.dim(), s.entries))
    return subs


def _bad_cores(n: int, seed: int, trials: int) -> list[WeightMultiset]:
    """Multisets over the nontrivial bad labels that the stabilizer engine
    still classifies as bad.  Monotone pruning: once a multiset is no longer
    bad, no extension of it is."""
    labels = sorted(w for w in bad_list(n) if not w.is_trivial())
    cores: list[WeightMultiset] = []
    seen: set = set()

    def rec(ms: WeightMultiset):
        if ms.entries in seen:
            return
        seen.add(ms.entries)
        if not ms.is_empty():
            if classify(SemisimpleRep(ms), seed=seed, trials=trials) != BAD:
                return
            cores.append(ms)
        for w in labels:
            rec(ms.add(WeightMultiset.of(n, [w])))

    rec(WeightMultiset.of(n, []))
    cores.sort(key=lambda s: (s.dim(), s.entries))
    return cores


def enumerate_exceptional_candidates(
    n: int,
    max_trivials: int | None = None,
    max_dim_s: int | None = None,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
) -> list[CatalogEntry]:
    """All (Q, S) candidate pairs admitted by the finiteness clauses, each
    with the rationality verdict of the W = 0 instance attached.

    Caps cannot exceed the clause thresholds (n^2 - 2 trivial summands,
    n^2 + 2n - 1 for dim S); asking for more is refused since nothing
    beyond them is finite.
    """
    if n < 2:
        raise ValueError("rank must be >= 2")
    if n > 4:
        raise ValueError(f"enumeration cap: rank must be at most 4, got {n}")
    trivial_cap = n * n - 2
    dim_s_cap = n * n + 2 * n - 1
    if max_trivials is not None:
        if max_trivials > trivial_cap:
            raise ValueError(
                f"cap violated: max_trivials {max_trivials} exceeds the clause bound {trivial_cap}"
            )
        trivial_cap = max_trivials
    if max_dim_s is not None:
        if max_dim_s > dim_s_cap:
            raise ValueError(
                f"cap violated: max_dim_s {max_dim_s} exceeds the clause bound {dim_s_cap}"
            )
        dim_s_cap_small = max_dim_s
    else:
        dim_s_cap_small = dim_s_cap

    triv = normalize(n, [])
    entries: dict[tuple, CatalogEntry] = {}

    def consider(q: WeightMultiset, s: WeightMultiset, trigger: str):
        if s.is_empty() or q.is_empty():
            return
        if q.count(triv) > trivial_cap:
            return
        if max_dim_s is not None and s.dim() > max_dim_s:
            return
        key = (q.entries, s.entries)
        if key in entries:
            return
        ext = TwoStepExtension(n, SemisimpleRep(s), SemisimpleRep(q), SemisimpleRep.of(n, []))
        if not check_structural(ext):
            return
        verdict = decide_rationality(ext, seed=seed, trials=trials)
        entries[key] = CatalogEntry(
            n, SemisimpleRep(s), SemisimpleRep(q), trigger, verdict
        )

    # clause (i): bad quotients, trivial padding below the threshold
    for core in _bad_cores(n, seed, trials):
        for t in range(trivial_cap + 1):
            q = core.add(WeightMultiset.of(n, [(triv, t)])) if t else core
            product = _tensor_with_standard(n, q)
            for s in _submultisets_sorted(product):
                consider(q, s, TRIGGER_BAD_Q)
    # pure-trivial quotients are bad as well
    for t in range(1, trivial_cap + 1):
        q = WeightMultiset.of(n, [(triv, t)])
        for s in _submultisets_sorted(_tensor_with_standard(n, q)):
            consider(q, s, TRIGGER_BAD_Q)

    # clause (ii): small submodules; Q runs over sub-multisets of
    # S (x) dual standard, S over small multisets of small irreducibles
    from .schur import dual

    dstd = dual(normalize(n, [1]))
    universe = irreps_up_to_dim(n, dim_s_cap_small)

    def s_multisets(i: int, dim_left: int, acc: list):
        if i == len(universe):
            yield WeightMultiset.of(n, list(acc))
            return
        w = universe[i]
        d = weyl_dim(w)
        for m in range(dim_left // d + 1):
            if m:
                acc.append((w, m))
            yield from s_multisets(i + 1, dim_left - m * d, acc)
            if m:
                acc.pop()

    for s in s_multisets(0, dim_s_cap_small, []):
        if s.is_empty():
            continue
        prod = WeightMultiset.of(n, [])
        for w, m in s.entries:
            prod = prod.add(lr_decompose(w, dstd).scale(m))
        for q in _submultisets_sorted(prod):
            if q.is_empty():
                continue
            trigger = (
                TRIGGER_BAD_Q
                if classify(SemisimpleRep(q), seed=seed, trials=trials) == BAD
                else TRIGGER_SMALL_S
            )
            consider(q, s, trigger)

    out = sorted(entries.values(), key=lambda e: (e.Q.summands.entries, e.S.summands.entries))
    return out
