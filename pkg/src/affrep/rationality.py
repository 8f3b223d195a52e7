"""Rationality decision procedure for two-step extensions.

A two-step extension is given by its semisimple data: the completely
reducible submodule S, the completely reducible quotient Q (tied together by
character-level containments S in Q (x) C^n and Q in S (x) dual C^n), and a
detached completely reducible complement W.  The decision evaluates, in
order: generic freeness (a sufficient criterion on Q, overridable by an
explicit assertion), the trivial-isotypic criterion (B), and the split
search (A).  Instances passing neither are reported Exceptional with a full
evidence trail.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT_MAX_SPLIT_CANDIDATES, DEFAULT_SEED, DEFAULT_TRIALS
from .repclass import (
    BAD,
    GOOD,
    GOOD_HEURISTIC,
    SemisimpleRep,
    classify,
)
from .schur import Weight, WeightMultiset, contains, dual, normalize, weyl_dim

RATIONAL_BY_A = "RationalByA"
RATIONAL_BY_B = "RationalByB"
EXCEPTIONAL = "Exceptional"
POSSIBLY_NOT_GENERICALLY_FREE = "PossiblyNotGenericallyFree"

FREE = "Free"
POSSIBLY_NOT_FREE = "PossiblyNotFree"


@dataclass(frozen=True)
class TwoStepExtension:
    """Semisimple data of a length-two extension plus a detached summand."""

    n: int
    S: SemisimpleRep
    Q: SemisimpleRep
    W: SemisimpleRep
    assume_generically_free: bool = False

    def __post_init__(self):
        for part in (self.S, self.Q, self.W):
            if part.n != self.n:
                raise ValueError("rank mismatch between extension parts")

    @classmethod
    def of(cls, n: int, S=(), Q=(), W=(), assume_generically_free: bool = False):
        return cls(
            n,
            SemisimpleRep.of(n, S),
            SemisimpleRep.of(n, Q),
            SemisimpleRep.of(n, W),
            assume_generically_free,
        )


@dataclass
class Verdict:
    outcome: str
    witness: dict | None
    evidence: list[dict]
    seed: int

    def __post_init__(self):
        if (self.outcome == RATIONAL_BY_A) != (self.witness is not None):
            raise ValueError("witness present iff the split criterion decided")
        if not self.evidence:
            raise ValueError("evidence must be nonempty")


def check_structural(ext: TwoStepExtension) -> bool:
    """Both character containments: S inside Q (x) standard and Q inside
    S (x) dual standard, with multiplicities."""
    std = normalize(ext.n, [1])
    dstd = dual(std)

    def fits(inner: WeightMultiset, outer: WeightMultiset, factor: Weight) -> bool:
        for w, m in inner.entries:
            avail = sum(mu * contains(w, u, factor) for u, mu in outer.entries)
            if avail < m:
                return False
        return True

    return fits(ext.S.summands, ext.Q.summands, std) and fits(
        ext.Q.summands, ext.S.summands, dstd
    )


def _r3_shapes(n: int, q: WeightMultiset) -> bool:
    """Is q a sum of at most n-1 copies of the trivial and dual standard?"""
    triv = normalize(n, [])
    dstd = dual(normalize(n, [1]))
    total = 0
    for w, m in q.entries:
        if w not in (triv, dstd):
            return False
        total += m
    return 1 <= total <= n - 1


def check_generic_freeness(ext: TwoStepExtension, seed: int = DEFAULT_SEED,
                           trials: int = DEFAULT_TRIALS):
    """Sufficient freeness criterion on the quotient: its completely
    reducible quotient (Q itself here) must be good, and Q must avoid the
    short list of translation-stabilized shapes.  An external assertion on
    the extension overrides the criterion.  Returns (status, detail).
    """
    if ext.assume_generically_free:
        return FREE, "asserted"
    n = ext.n
    q = ext.Q.summands
    if q == WeightMultiset.of(n, [normalize(n, [1])]):
        return POSSIBLY_NOT_FREE, "R1"
    if q == WeightMultiset.of(n, [dual(normalize(n, [1, 1]))]):
        return POSSIBLY_NOT_FREE, "R2"
    if _r3_shapes(n, q):
        return POSSIBLY_NOT_FREE, "R3"
    verdict = classify(ext.Q, seed=seed, trials=trials)
    if verdict == BAD:
        return POSSIBLY_NOT_FREE, "bad-quotient"
    return FREE, verdict


def _submultisets(ms: WeightMultiset):
    """All sub-multisets in a canonical order: increasing dimension, ties by
    the entries tuple."""
    ranges = [range(m + 1) for _, m in ms.entries]
    subs = []
    for counts in itertools.product(*ranges):
        entries = [(w, c) for (w, _), c in zip(ms.entries, counts) if c]
        sub = WeightMultiset.of(ms.n, entries)
        subs.append(sub)
    subs.sort(key=lambda s: (s.dim(), s.entries))
    return subs


def _split_candidate_count(ms: WeightMultiset) -> int:
    total = 1
    for _, m in ms.entries:
        total *= m + 1
    return total


def decide_rationality(
    ext: TwoStepExtension,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    max_split_candidates: int = DEFAULT_MAX_SPLIT_CANDIDATES,
) -> Verdict:
    """Outcome of the two-step rationality criteria with an evidence trail.

    Requires the structural containments; raises ValueError otherwise.
    Evaluation order: freeness gate, criterion (B) (the quotient carries at
    least n^2 - 1 trivial summands), then the split search (A) over
    decompositions W = W1 + W2 by increasing dim W2 (so the reported witness
    maximizes dim(S + W1)); first acceptance wins.
    """
    if not check_structural(ext):
        raise ValueError("structural containments fail; not a two-step extension")
    n = ext.n
    evidence: list[dict] = [
        {"condition": "structural-containments", "paper_clause": "shape", "result": True}
    ]

    status, detail = check_generic_freeness(ext, seed=seed, trials=trials)
    evidence.append(
        {"condition": "generic-freeness", "paper_clause": detail, "result": status}
    )
    if status != FREE:
        return Verdict(POSSIBLY_NOT_GENERICALLY_FREE, None, evidence, seed)

    trivial_count = ext.Q.summands.count(normalize(n, []))
    threshold_b = n * n - 1
    evidence.append(
        {
            "condition": "trivial-summands-in-Q",
            "paper_clause": "B",
            "result": f"{trivial_count} of {threshold_b} required",
        }
    )
    if trivial_count >= threshold_b:
        return Verdict(RATIONAL_BY_B, None, evidence, seed)

    threshold_a = n * n + 2 * n
    dim_sw = ext.S.dim() + ext.W.dim()
    count = _split_candidate_count(ext.W.summands)
    exhaustive = count <= max_split_candidates
    candidates = (
        _submultisets(ext.W.summands) if exhaustive else _greedy_candidates(ext)
    )
    if not exhaustive:
        evidence.append(
            {
                "condition": "split-search-incomplete",
                "paper_clause": "A",
                "result": f"greedy shortcut over {count} candidates",
            }
        )
    for w2 in candidates:
        q_aug = SemisimpleRep(ext.Q.summands.add(w2)) if not w2.is_empty() else ext.Q
        cls = classify(q_aug, seed=seed, trials=trials)
        dim_ok = dim_sw - w2.dim() >= threshold_a
        evidence.append(
            {
                "condition": "split",
                "paper_clause": "A",
                "w2": [[list(w.parts), m] for w, m in w2.entries],
                "classify": cls,
                "dim_S_W1": dim_sw - w2.dim(),
                "result": cls in (GOOD, GOOD_HEURISTIC) and dim_ok,
            }
        )
        if cls in (GOOD, GOOD_HEURISTIC) and dim_ok:
            w1 = _subtract(ext.W.summands, w2)
            witness = {
                "W1": [[list(w.parts), m] for w, m in w1.entries],
                "W2": [[list(w.parts), m] for w, m in w2.entries],
                "heuristic_goodness": cls == GOOD_HEURISTIC,
            }
            return Verdict(RATIONAL_BY_A, witness, evidence, seed)
    return Verdict(EXCEPTIONAL, None, evidence, seed)


def _subtract(ms: WeightMultiset, sub: WeightMultiset) -> WeightMultiset:
    entries = []
    for w, m in ms.entries:
        rem = m - sub.count(w)
        if rem < 0:
            raise ValueError("not a sub-multiset")
        if rem:
            entries.append((w, rem))
    return WeightMultiset.of(ms.n, entries)


def _greedy_candidates(ext: TwoStepExtension):
    """Fallback when W has too many sub-multisets: grow W2 by smallest
    dimension first until the augmented quotient is good."""
    n = ext.n
    singles = sorted(
        ((w, weyl_dim(w)) for w, m in ext.W.summands.entries for _ in range(m)),
        key=lambda t: (t[1], t[0].parts),
    )
    out = [WeightMultiset.of(n, [])]
    acc: list[Weight] = []
    for w, _ in singles:
        acc.append(w)
        out.append(WeightMultiset.of(n, list(acc)))
    return out


def stable_level(n: int) -> dict[str, int]:
    """Stably-rational levels granted by specialness: the group dimension,
    for the linear and the affine group."""
    if n < 2:
        raise ValueError("rank must be >= 2")
    return {"SL": n * n - 1, "SAff": n * n - 1 + n}
