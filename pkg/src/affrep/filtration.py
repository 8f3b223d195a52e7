"""Socle and radical filtrations of affine-group matrix models.

The ascending chain takes maximal completely reducible subrepresentations of
successive quotients; since the translations act trivially on any completely
reducible piece and the translation subgroup is normal, that submodule is
exactly the common kernel of the translation generators.  The descending
construction iterates sums of translation images instead.  Both are computed
by exact sparse elimination with a fixed pivot rule, so chains are
bit-reproducible, and every chain vector is a torus weight vector, which
reduces layer identification to character bookkeeping.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from functools import lru_cache

from .linalg import Echelon, Vec, nullspace
from .matmodel import AffMatrixRep, dual_model, grading_rep
from .oracle import ssyt_contents
from .repclass import SemisimpleRep
from .schur import Weight, WeightMultiset, contains, dual, normalize

SOCLE = "socle"
RADICAL = "radical"


@dataclass
class Filtration:
    """A chain of invariant subspaces with identified semisimple layers.

    snapshots[i] holds the basis rows added at step i, so the concatenation
    is a filtration-adapted basis and chain member i is spanned by
    snapshots[0..i].
    """

    rep: AffMatrixRep
    kind: str
    snapshots: list[list[Vec]]
    layers: list[WeightMultiset]

    @property
    def length(self) -> int:
        return len(self.snapshots) - 1

    def layer_sizes(self) -> list[int]:
        return [len(s) for s in self.snapshots]

    def chain_dims(self) -> list[int]:
        dims = []
        total = 0
        for s in self.snapshots:
            total += len(s)
            dims.append(total)
        return dims

    def adapted_basis(self) -> list[Vec]:
        return [row for step in self.snapshots for row in step]

    def member_basis(self, i: int) -> list[Vec]:
        return [row for step in self.snapshots[: i + 1] for row in step]


def _layer_weight_counter(rep: AffMatrixRep, rows: list[Vec]) -> Counter:
    out: Counter = Counter()
    for row in rows:
        idx = min(row)
        out[grading_rep(rep.weight_grading[idx])] += 1
    return out


@lru_cache(maxsize=None)
def _irrep_character(n: int, parts: tuple[int, ...]) -> Counter:
    """Weight multiset of the irreducible with the given normalized label,
    as canonical representatives modulo the diagonal."""
    out: Counter = Counter()
    for content in ssyt_contents(parts, n):
        out[grading_rep(content)] += 1
    return out


def decompose_character(n: int, char: Counter) -> WeightMultiset:
    """Write a character (multiset of normalized torus weights) as a sum of
    irreducible characters by peeling the lexicographically largest weight."""
    work = Counter({k: v for k, v in char.items() if v})
    found: list[tuple[Weight, int]] = []
    while work:
        lead = max(work)
        if any(a < b for a, b in zip(lead, lead[1:])) or lead[-1] != 0 or lead[0] < 0:
            raise ValueError(f"character has non-dominant leading weight {lead}")
        mult = work[lead]
        if mult < 0:
            raise ValueError(f"negative multiplicity at {lead}; grading is inconsistent")
        w = Weight(n, lead)
        for g, c in _irrep_character(n, lead).items():
            work[g] -= mult * c
            if not work[g]:
                del work[g]
        found.append((w, mult))
    return WeightMultiset.of(n, found)


def identify_layers(rep: AffMatrixRep, filtration: Filtration) -> list[SemisimpleRep]:
    """Each layer's character, decomposed into irreducible labels."""
    out = []
    for step in filtration.snapshots:
        char = _layer_weight_counter(rep, step)
        out.append(SemisimpleRep(decompose_character(rep.n, char)))
    return out


def socle_filtration(rep: AffMatrixRep) -> Filtration:
    """Ascending chain: each step adds the common kernel of the translation
    generators on the quotient by the previous member."""
    ech = Echelon()
    snapshots: list[list[Vec]] = []
    total = 0
    while total < rep.dim:
        pivots = set(ech.rows)
        coords = [c for c in range(rep.dim) if c not in pivots]
        # induced translation action on the quotient (non-pivot coordinates)
        equations: list[Vec] = []
        for t in rep.trans_gens:
            residues: dict[int, Vec] = {}
            for c in coords:
                img = t.cols.get(c)
                if not img:
                    continue
                res = ech.reduce(dict(img))
                for r, v in res.items():
                    residues.setdefault(r, {})[c] = v
            equations.extend(residues[r] for r in sorted(residues))
        kernel = nullspace(equations, coords)
        if not kernel:
            raise RuntimeError("socle of a nonzero quotient is zero; translations not nilpotent?")
        step_rows: list[Vec] = []
        for vec in kernel:
            p = ech.insert(vec)
            if p is not None:
                step_rows.append(dict(ech.rows[p]))
        snapshots.append(step_rows)
        total += len(step_rows)
    filt = Filtration(rep, SOCLE, snapshots, [])
    filt.layers = [s.summands for s in identify_layers(rep, filt)]
    return filt


def radical_filtration(rep: AffMatrixRep) -> Filtration:
    """Descending construction, recorded ascending: member j is the span of
    all products of at least (length - j) translation generators."""
    # level 0 = whole space; level k+1 = sum of translation images of level k
    levels: list[list[Vec]] = [[{i: Fraction(1)} for i in range(rep.dim)]]
    while True:
        ech = Echelon()
        rows: list[Vec] = []
        for b in levels[-1]:
            for t in rep.trans_gens:
                img = t.apply(b)
                if img:
                    p = ech.insert(img)
                    if p is not None:
                        rows.append(dict(ech.rows[p]))
        if not rows:
            break
        levels.append(rows)
    # assemble ascending nested snapshots: deepest level first
    ech = Echelon()
    snapshots = []
    for level_rows in reversed(levels):
        step: list[Vec] = []
        for vec in level_rows:
            p = ech.insert(vec)
            if p is not None:
                step.append(dict(ech.rows[p]))
        snapshots.append(step)
    filt = Filtration(rep, RADICAL, snapshots, [])
    filt.layers = [s.summands for s in identify_layers(rep, filt)]
    return filt


def dual_multiset(ms: WeightMultiset) -> WeightMultiset:
    return WeightMultiset.of(ms.n, [(dual(w), m) for w, m in ms.entries])


def check_duality(rep: AffMatrixRep) -> bool:
    """The radical layers of the dual model must be the duals of the socle
    layers of the model, in reversed order."""
    soc = socle_filtration(rep)
    rad = radical_filtration(dual_model(rep))
    if soc.length != rad.length:
        return False
    l = soc.length
    for j in range(l + 1):
        if rad.layers[l - j] != dual_multiset(soc.layers[j]):
            return False
    return True


def multiset_fits_in_product(inner: WeightMultiset, outer: WeightMultiset,
                             factor: Weight) -> bool:
    """inner contained (with multiplicities) in outer tensor (irrep factor)."""
    for w, m in inner.entries:
        avail = sum(mu * contains(w, u, factor) for u, mu in outer.entries)
        if avail < m:
            return False
    return True


def check_blocks_containment(filtration: Filtration) -> bool:
    """Layer containment bounds: ascending chains satisfy
    Q_j inside Q_i (x) Sym^(j-i) of the dual standard, descending ones
    Q_i inside Q_j (x) Sym^(j-i) of the standard, for i <= j."""
    n = filtration.rep.n
    layers = filtration.layers
    l = len(layers) - 1
    for i in range(l + 1):
        for j in range(i, l + 1):
            k = j - i
            if filtration.kind == SOCLE:
                factor = dual(normalize(n, [k]))
                if not multiset_fits_in_product(layers[j], layers[i], factor):
                    return False
            else:
                factor = normalize(n, [k])
                if not multiset_fits_in_product(layers[i], layers[j], factor):
                    return False
    return True


def check_embedding_theorem(rep: AffMatrixRep) -> bool:
    """Character-level containment of the whole model in (bottom socle layer)
    tensor (degree <= l affine functions): every socle layer i must fit in
    Q_0 tensor Sym^i of the dual standard."""
    filt = socle_filtration(rep)
    n = rep.n
    for i, layer in enumerate(filt.layers):
        factor = dual(normalize(n, [i]))
        if not multiset_fits_in_product(layer, filt.layers[0], factor):
            return False
    return True
