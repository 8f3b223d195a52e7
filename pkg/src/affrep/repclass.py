"""Good/bad classification of SL_n-representations.

The known list of irreducible representations on which no quotient of SL_n
acts generically freely is combined with a Lie-algebra stabilizer engine:
exact kernel ranks of the infinitesimal action at random integer points.
A zero kernel certifies a finite generic stabilizer, which is reported as
`GoodHeuristic` rather than `Good` because a finite stabilizer at the Lie
level does not exclude a finite non-central one at the group level.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import (
    DEFAULT_COORD_BOUND,
    DEFAULT_MAX_TENSOR_CELLS,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ResourceCapError,
)
from .linalg import Echelon, SMat, Vec
from .schur import Weight, WeightMultiset, dual, normalize, weyl_dim

GOOD = "Good"
BAD = "Bad"
GOOD_HEURISTIC = "GoodHeuristic"


@dataclass(frozen=True)
class SemisimpleRep:
    """A completely reducible SL_n-representation, given by its summands."""

    summands: WeightMultiset

    @property
    def n(self) -> int:
        return self.summands.n

    def dim(self) -> int:
        return self.summands.dim()

    @classmethod
    def of(cls, n: int, items=()) -> "SemisimpleRep":
        return cls(WeightMultiset.of(n, items))

    def __str__(self) -> str:
        return str(self.summands)


@dataclass(frozen=True)
class StabilizerReport:
    rep: SemisimpleRep
    stab_dim: int
    trials: int
    seed: int


def bad_list(n: int) -> frozenset[Weight]:
    """Canonical labels of the irreducible representations in the known bad
    family: exterior square, symmetric square, standard, trivial, the
    traceless adjoint, and all duals (deduplicated after normalization)."""
    if n < 2:
        raise ValueError("rank must be >= 2")
    base = [
        normalize(n, [1, 1]),            # exterior square
        normalize(n, [2]),               # symmetric square
        normalize(n, [1]),               # standard
        normalize(n, []),                # trivial
        normalize(n, [2] + [1] * (n - 2)),  # traceless adjoint
    ]
    return frozenset(base + [dual(w) for w in base])


# --- sl_n basis bookkeeping -------------------------------------------------

def sl_basis_keys(n: int) -> list[str]:
    """Fixed ordered basis of sl_n: elementary E_i_j (i != j, row-major),
    then Cartan differences H_k = E_k_k - E_(k+1)_(k+1)."""
    keys = [f"E_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    keys += [f"H_{k}" for k in range(1, n)]
    return keys


def sl_defining_matrix(n: int, key: str) -> SMat:
    """The n x n matrix of a basis element in the defining representation."""
    m = SMat(n, n)
    parts = key.split("_")
    if parts[0] == "E":
        i, j = int(parts[1]) - 1, int(parts[2]) - 1
        m.add_entry(i, j, 1)
    elif parts[0] == "H":
        k = int(parts[1]) - 1
        m.add_entry(k, k, 1)
        m.add_entry(k + 1, k + 1, -1)
    else:
        raise ValueError(f"unknown generator key {key!r}")
    return m


def bracket_coefficients(n: int, mat: SMat) -> dict[str, Fraction]:
    """Expand a traceless n x n matrix in the sl_basis_keys basis."""
    coeffs: dict[str, Fraction] = {}
    diag = [mat.entry(i, i) for i in range(n)]
    if sum(diag) != 0:
        raise ValueError("matrix has nonzero trace")
    for i in range(n):
        for j in range(n):
            if i != j:
                v = mat.entry(i, j)
                if v:
                    coeffs[f"E_{i + 1}_{j + 1}"] = v
    # telescoping: diag = sum c_k (e_k - e_{k+1}) with c_k = d_1 + ... + d_k
    acc = Fraction(0)
    for k in range(n - 1):
        acc += diag[k]
        if acc:
            coeffs[f"H_{k + 1}"] = acc
    return coeffs


# --- Schur functor models via Young symmetrizers ----------------------------

@dataclass(frozen=True)
class SlModel:
    """Exact matrix model of sl_n on the irreducible with a given label.

    gens maps sl_basis_keys to dim x dim matrices; grading assigns each basis
    vector its integer torus weight (an n-vector).
    """

    weight: Weight
    dim: int
    gens: dict[str, SMat]
    grading: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.weight.n


def _young_symmetrizer(shape: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Column antisymmetrizer times row symmetrizer of the row-filled standard
    tableau, as a list of (position permutation, sign)."""
    shape = tuple(p for p in shape if p > 0)
    d = sum(shape)
    rows: list[list[int]] = []
    idx = 0
    for width in shape:
        rows.append(list(range(idx, idx + width)))
        idx += width
    ncols = shape[0]
    cols = [[rows[r][c] for r in range(len(shape)) if c < shape[r]] for c in range(ncols)]

    def group_perms(blocks):
        perms = [tuple(range(d))]
        for block in blocks:
            new = []
            for base in perms:
                for sigma in itertools.permutations(block):
                    p = list(base)
                    for src, dst in zip(block, sigma):
                        p[src] = base[dst]
                    new.append(tuple(p))
            perms = new
        return perms

    def sign_of(p):
        seen = [False] * d
        sgn = 1
        for i in range(d):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn

    row_perms = group_perms(rows)
    col_perms = group_perms(cols)
    acc: dict[tuple[int, ...], int] = {}
    for q in col_perms:
        sq = sign_of(q)
        for p in row_perms:
            # row symmetrizer first, then the signed column sum; composing
            # index lookups this way keeps the row-sorted word reduction valid
            comp = tuple(p[q[i]] for i in range(d))
            acc[comp] = acc.get(comp, 0) + sq
    return [(p, c) for p, c in acc.items() if c]


def _row_sorted_words(n: int, shape: tuple[int, ...]):
    """Index words sorted inside each row block; one representative per orbit
    of the row stabilizer, enough to span the symmetrizer image."""
    blocks = []
    for width in (p for p in shape if p > 0):
        blocks.append(list(itertools.combinations_with_replacement(range(n), width)))
    for combo in itertools.product(*blocks):
        yield tuple(itertools.chain.from_iterable(combo))


@lru_cache(maxsize=None)
def _build_tensor_model(n: int, parts: tuple[int, ...], max_cells: int) -> SlModel:
    w = Weight(n, parts)
    d = w.size
    target_dim = weyl_dim(w)
    if d == 0:
        zero = {k: SMat(1, 1) for k in sl_basis_keys(n)}
        return SlModel(w, 1, zero, ((0,) * n,))
    if n ** d > max_cells:
        raise ResourceCapError("max_tensor_cells", n ** d, max_cells)

    symm = _young_symmetrizer(parts)

    def encode(word):
        code = 0
        for c in word:
            code = code * n + c
        return code

    def apply_symmetrizer(word) -> Vec:
        out: Vec = {}
        for perm, coeff in symm:
            # permutation acts on positions: letter at slot perm[i] moves to slot i
            moved = tuple(word[perm[i]] for i in range(d))
            code = encode(moved)
            val = out.get(code, 0) + coeff
            if val:
                out[code] = val
            else:
                del out[code]
        return {c: Fraction(v) for c, v in out.items()}

    def weight_of_code(code):
        g = [0] * n
        for _ in range(d):
            g[code % n] += 1
            code //= n
        return tuple(g)

    joint = Echelon()
    for word in _row_sorted_words(n, parts):
        vec = apply_symmetrizer(word)
        if vec:
            joint.insert(vec)
            if len(joint) == target_dim:
                break
    if len(joint) != target_dim:
        raise RuntimeError(f"symmetrizer image has rank {len(joint)}, expected {target_dim}")

    # the reduced echelon rows are the model basis; every ambient index has a
    # definite torus weight, so rows never mix weights and the row's pivot
    # determines its grading vector
    pivots = sorted(joint.rows)
    basis = [joint.rows[p] for p in pivots]
    grading = [weight_of_code(p) for p in pivots]
    col_of_pivot = {p: i for i, p in enumerate(pivots)}

    def act(key, vec: Vec) -> Vec:
        mat = sl_defining_matrix(n, key)
        out: Vec = {}
        for code, val in vec.items():
            word = []
            c = code
            for _ in range(d):
                word.append(c % n)
                c //= n
            word.reverse()
            for pos in range(d):
                letter = word[pos]
                col = mat.cols.get(letter)
                if not col:
                    continue
                for target, a in col.items():
                    nw = list(word)
                    nw[pos] = target
                    ncode = encode(nw)
                    nv = out.get(ncode, 0) + a * val
                    if nv:
                        out[ncode] = nv
                    else:
                        del out[ncode]
        return out

    gens: dict[str, SMat] = {}
    for key in sl_basis_keys(n):
        m = SMat(target_dim, target_dim)
        for j, vec in enumerate(basis):
            img = act(key, vec)
            coeff = joint.coords(img)
            if coeff is None:
                raise RuntimeError(f"action of {key} leaves the symmetrizer image")
            for p, c in coeff.items():
                m.add_entry(col_of_pivot[p], j, c)
        gens[key] = m
    return SlModel(w, target_dim, gens, tuple(grading))


def build_tensor_model(w: Weight, max_cells: int = DEFAULT_MAX_TENSOR_CELLS) -> SlModel:
    """Realize the irreducible with label w inside the |w|-th tensor power of
    the standard representation, via a Young symmetrizer; the Lie algebra
    acts factorwise.  Exact rational matrices with a weight grading."""
    return _build_tensor_model(w.n, w.parts, max_cells)


@lru_cache(maxsize=None)
def model_for_weight(n: int, parts: tuple[int, ...],
                     max_cells: int = DEFAULT_MAX_TENSOR_CELLS) -> SlModel:
    """Model of the labeled irreducible, built through the cheaper of the
    label and its dual (the dual of a model is the negated transpose)."""
    w = Weight(n, parts)
    dw = dual(w)
    if dw.size < w.size:
        m = _build_tensor_model(n, dw.parts, max_cells)
        gens = {k: mat.neg_transpose() for k, mat in m.gens.items()}
        grading = tuple(tuple(-x for x in g) for g in m.grading)
        return SlModel(w, m.dim, gens, grading)
    return _build_tensor_model(n, parts, max_cells)


def stabilizer_dimension(
    rep: SemisimpleRep,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    coord_bound: int = DEFAULT_COORD_BOUND,
    max_cells: int = DEFAULT_MAX_TENSOR_CELLS,
) -> StabilizerReport:
    """Minimum over trials of dim{X in sl_n : X.v = 0} at random integer
    points v, by exact rank.  0 certifies a finite generic stabilizer."""
    n = rep.n
    models: list[SlModel] = []
    for w, mult in rep.summands.entries:
        m = model_for_weight(n, w.parts, max_cells)
        models.extend([m] * mult)
    keys = sl_basis_keys(n)
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        points = [
            {i: Fraction(rng.randint(-coord_bound, coord_bound)) for i in range(m.dim)}
            for m in models
        ]
        points = [{i: v for i, v in pt.items() if v} for pt in points]
        ech = Echelon()
        r = 0
        for key in keys:
            stacked: Vec = {}
            offset = 0
            for m, pt in zip(models, points):
                img = m.gens[key].apply(pt)
                for i, v in img.items():
                    stacked[offset + i] = v
                offset += m.dim
            if ech.insert(stacked) is not None:
                r += 1
        stab = len(keys) - r
        best = stab if best is None else min(best, stab)
    return StabilizerReport(rep=rep, stab_dim=best, trials=trials, seed=seed)


@lru_cache(maxsize=None)
def classify_with_report(
    rep: SemisimpleRep,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    coord_bound: int = DEFAULT_COORD_BOUND,
    max_cells: int = DEFAULT_MAX_TENSOR_CELLS,
):
    """(classification, StabilizerReport or None).

    A summand outside the bad family makes the whole sum good outright.
    Otherwise the stabilizer engine decides: positive kernel dimension means
    no isogenous group can act generically freely; a zero kernel is reported
    as GoodHeuristic (see module docstring).  Results are memoized; all
    inputs are immutable.
    """
    bad = bad_list(rep.n)
    if any(w not in bad for w in rep.summands.weights()):
        return GOOD, None
    report = stabilizer_dimension(rep, seed=seed, trials=trials,
                                  coord_bound=coord_bound, max_cells=max_cells)
    return (BAD if report.stab_dim > 0 else GOOD_HEURISTIC), report


def classify(rep: SemisimpleRep, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS,
             coord_bound: int = DEFAULT_COORD_BOUND,
             max_cells: int = DEFAULT_MAX_TENSOR_CELLS) -> str:
    return classify_with_report(rep, seed, trials, coord_bound, max_cells)[0]


def minimal_good_power(w: Weight, max_t: int = 20, seed: int = DEFAULT_SEED,
                       trials: int = DEFAULT_TRIALS) -> int | None:
    """Smallest t for which t copies of the irreducible classify as good.

    A computed answer from the stabilizer engine, not ground truth; None when
    no t up to max_t works (always for the trivial representation)."""
    for t in range(1, max_t + 1):
        rep = SemisimpleRep.of(w.n, [(w, t)])
        if classify(rep, seed=seed, trials=trials) != BAD:
            return t
    return None
