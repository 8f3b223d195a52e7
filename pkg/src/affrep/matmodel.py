"""Exact matrix models of representations of the special affine group.

An AffMatrixRep packages matrices for the fixed sl_n basis together with n
commuting nilpotent translation generators T_1..T_n and an integer torus
weight for every basis vector.  All constructors produce models whose
defining relations can be re-verified exactly with `validate`.

Sign conventions, fixed once:
  * functions-of-degree<=l models use X.f = -(Xx).grad(f) for sl_n and
    T_i = d/dx_i for translations, so exp(t T) is the shift f -> f(. + t);
  * on the affine line (n=1, l=1) with ordered basis (1, x) this gives
    exp(t T) = [[1, t], [0, 1]].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .config import (
    DEFAULT_MAX_MODEL_DIM,
    DEFAULT_MAX_TENSOR_CELLS,
    ModelInvariantError,
    ResourceCapError,
)
from .linalg import (
    Echelon,
    SMat,
    Vec,
    invert,
    nullspace,
    poly_add_scaled,
    poly_const,
    poly_degree,
    poly_eval,
    poly_mul,
    poly_var,
)
from .repclass import (
    bracket_coefficients,
    model_for_weight,
    sl_basis_keys,
    sl_defining_matrix,
)
from .schur import Weight, WeightMultiset


@dataclass
class AffMatrixRep:
    """Matrix model: sl_n generators, translation generators, weight grading."""

    n: int
    dim: int
    sl_gens: dict[str, SMat]
    trans_gens: list[SMat]
    weight_grading: list[tuple[int, ...]]

    def sl_keys(self) -> list[str]:
        return sl_basis_keys(self.n)

    def all_gens(self) -> list[SMat]:
        return [self.sl_gens[k] for k in self.sl_keys()] + list(self.trans_gens)


@dataclass
class UnipotentImage:
    """exp of a translation: an exact unipotent matrix."""

    rep: AffMatrixRep
    v: tuple[Fraction, ...]
    matrix: SMat


def _check_cap(dim: int, max_dim: int):
    if dim > max_dim:
        raise ResourceCapError("max_model_dim", dim, max_dim)


def monomial_basis(n: int, l: int) -> list[tuple[int, ...]]:
    """Exponent vectors of monomials of total degree <= l, ordered by degree
    then lexicographically."""
    out = []
    for deg in range(l + 1):
        out.extend(sorted(e for e in itertools.product(range(deg + 1), repeat=n) if sum(e) == deg))
    return out


def model_sym_dual(n: int, l: int, max_dim: int = DEFAULT_MAX_MODEL_DIM) -> AffMatrixRep:
    """The action on polynomial functions of degree <= l in n variables.

    Basis: monomials x^alpha ordered by degree then lex; dimension C(n+l, l).
    The grading of x^alpha is -alpha (coordinates are dual vectors).
    """
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    _check_cap(comb(n + l, l), max_dim)
    basis = monomial_basis(n, l)
    index = {e: i for i, e in enumerate(basis)}
    N = len(basis)

    sl_gens: dict[str, SMat] = {}
    for key in sl_basis_keys(n):
        m = SMat(N, N)
        parts = key.split("_")
        if parts[0] == "E":
            a, b = int(parts[1]) - 1, int(parts[2]) - 1
            # X = E_ab acts as -x_b d/dx_a
            for e, i in index.items():
                if e[a] > 0:
                    ne = list(e)
                    ne[a] -= 1
                    ne[b] += 1
                    m.add_entry(index[tuple(ne)], i, -e[a])
        else:
            k = int(parts[1]) - 1
            for e, i in index.items():
                coeff = -(e[k] - e[k + 1])
                if coeff:
                    m.add_entry(i, i, coeff)
        sl_gens[key] = m

    trans = []
    for t in range(n):
        m = SMat(N, N)
        for e, i in index.items():
            if e[t] > 0:
                ne = list(e)
                ne[t] -= 1
                m.add_entry(index[tuple(ne)], i, e[t])
        trans.append(m)

    grading = [tuple(-x for x in e) for e in basis]
    return AffMatrixRep(n, N, sl_gens, trans, grading)


def dual_model(rep: AffMatrixRep) -> AffMatrixRep:
    """Contragredient model: negated transposes, negated grading."""
    return AffMatrixRep(
        rep.n,
        rep.dim,
        {k: m.neg_transpose() for k, m in rep.sl_gens.items()},
        [m.neg_transpose() for m in rep.trans_gens],
        [tuple(-x for x in g) for g in rep.weight_grading],
    )


def tensor_model(a: AffMatrixRep, b: AffMatrixRep,
                 max_dim: int = DEFAULT_MAX_MODEL_DIM) -> AffMatrixRep:
    """Tensor product with the factorwise (Leibniz) action."""
    if a.n != b.n:
        raise ValueError("rank mismatch")
    _check_cap(a.dim * b.dim, max_dim)
    ia = SMat.identity(a.dim)
    ib = SMat.identity(b.dim)

    def leibniz(ma: SMat, mb: SMat) -> SMat:
        return ma.kron(ib).add(ia.kron(mb))

    sl_gens = {k: leibniz(a.sl_gens[k], b.sl_gens[k]) for k in a.sl_keys()}
    trans = [leibniz(ta, tb) for ta, tb in zip(a.trans_gens, b.trans_gens)]
    grading = [
        tuple(x + y for x, y in zip(ga, gb))
        for ga in a.weight_grading
        for gb in b.weight_grading
    ]
    return AffMatrixRep(a.n, a.dim * b.dim, sl_gens, trans, grading)


def direct_sum_model(a: AffMatrixRep, b: AffMatrixRep) -> AffMatrixRep:
    if a.n != b.n:
        raise ValueError("rank mismatch")
    sl_gens = {k: a.sl_gens[k].direct_sum(b.sl_gens[k]) for k in a.sl_keys()}
    trans = [ta.direct_sum(tb) for ta, tb in zip(a.trans_gens, b.trans_gens)]
    return AffMatrixRep(a.n, a.dim + b.dim, sl_gens, trans,
                        list(a.weight_grading) + list(b.weight_grading))


def sl_only_model(w: Weight, max_cells: int = DEFAULT_MAX_TENSOR_CELLS) -> AffMatrixRep:
    """A pure SL_n-representation viewed as an affine-group model: all
    translation generators are zero.  Built through the cheaper of the label
    and its dual."""
    m = model_for_weight(w.n, w.parts, max_cells)
    zero = [SMat(m.dim, m.dim) for _ in range(w.n)]
    return AffMatrixRep(w.n, m.dim, dict(m.gens), zero, list(m.grading))


def shift_grading(rep: AffMatrixRep, c: int) -> AffMatrixRep:
    """Add c to every grading coordinate.  Diagonal shifts carry no
    representation content, so all model relations are preserved."""
    return AffMatrixRep(
        rep.n, rep.dim, rep.sl_gens, rep.trans_gens,
        [tuple(x + c for x in g) for g in rep.weight_grading],
    )


def sl_only_sum_model(ms: WeightMultiset, max_cells: int = DEFAULT_MAX_TENSOR_CELLS) -> AffMatrixRep:
    """Direct sum of sl-only models over a weight multiset, in canonical order.

    Each irreducible model has a constant grading coordinate-sum; summands
    whose sums are congruent mod n are shifted to a common value, so equal
    sl-weights receive equal stored gradings across the whole sum.
    """
    reps = []
    for w, mult in ms.entries:
        reps.extend([sl_only_model(w, max_cells)] * mult)
    if not reps:
        raise ValueError("empty multiset")
    n = ms.n
    sums = [sum(r.weight_grading[0]) for r in reps]
    target: dict[int, int] = {}
    for s in sums:
        r = s % n
        target[r] = min(target.get(r, s), s)
    reps = [
        shift_grading(rep, (target[s % n] - s) // n) if s != target[s % n] else rep
        for rep, s in zip(reps, sums)
    ]
    out = reps[0]
    for r in reps[1:]:
        out = direct_sum_model(out, r)
    return out


def translation_matrix(rep: AffMatrixRep, v) -> SMat:
    """Sum v_i T_i for a rational vector v."""
    if len(v) != rep.n:
        raise ValueError(f"vector has length {len(v)}, expected {rep.n}")
    m = SMat(rep.dim, rep.dim)
    for vi, t in zip(v, rep.trans_gens):
        if vi:
            m = m.add(t.scale(vi))
    return m


def unipotent_image(rep: AffMatrixRep, v) -> UnipotentImage:
    """exp(sum v_i T_i), an exact finite sum by nilpotency."""
    v = tuple(Fraction(x) for x in v)
    m = translation_matrix(rep, v)
    total = SMat.identity(rep.dim)
    term = SMat.identity(rep.dim)
    k = 1
    while True:
        term = term.matmul(m).scale(Fraction(1, k))
        if term.is_zero():
            break
        total = total.add(term)
        k += 1
        if k > rep.dim + 1:
            raise ModelInvariantError("translation sum is not nilpotent")
    return UnipotentImage(rep, v, total)


# --- validation --------------------------------------------------------------

def _expected_bracket(rep: AffMatrixRep, akey: str, bkey: str) -> SMat:
    coeffs = bracket_coefficients(
        rep.n, sl_defining_matrix(rep.n, akey).commutator(sl_defining_matrix(rep.n, bkey))
    )
    out = SMat(rep.dim, rep.dim)
    for key, c in coeffs.items():
        out = out.add(rep.sl_gens[key].scale(c))
    return out


def validate_model(rep: AffMatrixRep) -> None:
    """Re-verify every defining relation; raises ModelInvariantError naming
    the first failure."""
    n = rep.n
    keys = rep.sl_keys()
    if sorted(rep.sl_gens) != sorted(keys):
        raise ModelInvariantError("sl generator keys")
    if len(rep.trans_gens) != n:
        raise ModelInvariantError("translation generator count")
    if len(rep.weight_grading) != rep.dim:
        raise ModelInvariantError("grading length")

    for a in keys:
        for b in keys:
            if rep.sl_gens[a].commutator(rep.sl_gens[b]) != _expected_bracket(rep, a, b):
                raise ModelInvariantError(f"[{a},{b}]")

    for i in range(n):
        for j in range(i + 1, n):
            if not rep.trans_gens[i].commutator(rep.trans_gens[j]).is_zero():
                raise ModelInvariantError(f"[T_{i + 1},T_{j + 1}]")

    # [X, T_j] = sum_i X_ij T_i : translations transform like the standard rep
    for key in keys:
        x = sl_defining_matrix(n, key)
        for j in range(n):
            expect = SMat(rep.dim, rep.dim)
            col = x.cols.get(j, {})
            for i, c in col.items():
                expect = expect.add(rep.trans_gens[i].scale(c))
            got = rep.sl_gens[key].commutator(rep.trans_gens[j])
            if got != expect:
                raise ModelInvariantError(f"[{key},T_{j + 1}]")

    for j, t in enumerate(rep.trans_gens):
        power = t
        for _ in range(rep.dim):
            if power.is_zero():
                break
            power = power.matmul(t)
        if not power.is_zero():
            raise ModelInvariantError(f"T_{j + 1} nilpotency")

    # grading: E_a_b shifts weights by e_a - e_b, Cartan generators act
    # diagonally with the paired grading differences as eigenvalues
    g = rep.weight_grading
    for key in keys:
        parts = key.split("_")
        mat = rep.sl_gens[key]
        if parts[0] == "E":
            a, b = int(parts[1]) - 1, int(parts[2]) - 1
            for c, col in mat.cols.items():
                for r in col:
                    diff = tuple(x - y for x, y in zip(g[r], g[c]))
                    want = tuple(
                        (1 if i == a else 0) - (1 if i == b else 0) for i in range(n)
                    )
                    if diff != want:
                        raise ModelInvariantError(f"grading shift of {key}")
        else:
            k = int(parts[1]) - 1
            for c, col in mat.cols.items():
                for r, val in col.items():
                    if r != c:
                        raise ModelInvariantError(f"{key} not diagonal")
                    if val != g[c][k] - g[c][k + 1]:
                        raise ModelInvariantError(f"{key} eigenvalue")
    # nonzero translations shift every weight by the corresponding unit vector
    for j, t in enumerate(rep.trans_gens):
        for c, col in t.cols.items():
            for r in col:
                diff = tuple(x - y for x, y in zip(g[r], g[c]))
                want = tuple(1 if i == j else 0 for i in range(n))
                if diff != want:
                    raise ModelInvariantError(f"grading shift of T_{j + 1}")


# --- highest weight vectors and generated submodels --------------------------

def grading_rep(g: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of a torus weight modulo the diagonal:
    subtract the last coordinate from all."""
    last = g[-1]
    return tuple(x - last for x in g)


def highest_weight_vectors(rep: AffMatrixRep, label: Weight, indices=None) -> list[Vec]:
    """Echelon-canonical basis of the space of vectors of normalized weight
    `label` killed by all raising operators, optionally restricted to a
    subset of ambient coordinates (which must be sl-stable, e.g. a graded
    block of a tensor factor)."""
    if label.n != rep.n:
        raise ValueError("rank mismatch")
    pool = range(rep.dim) if indices is None else sorted(indices)
    coords = [i for i in pool if grading_rep(rep.weight_grading[i]) == label.parts]
    if not coords:
        return []
    raising = [
        rep.sl_gens[f"E_{i}_{j}"]
        for i in range(1, rep.n + 1)
        for j in range(i + 1, rep.n + 1)
    ]
    # one equation per (raising op, target row): sum_c X[r][c] x_c = 0
    by_row: dict[tuple[int, int], Vec] = {}
    for oi, op in enumerate(raising):
        for c in coords:
            col = op.cols.get(c)
            if not col:
                continue
            for r, v in col.items():
                by_row.setdefault((oi, r), {})[c] = v
    equations = [by_row[k] for k in sorted(by_row)]
    return nullspace(equations, coords)


def generated_submodel(rep: AffMatrixRep, seeds: list[Vec]) -> AffMatrixRep:
    """Smallest invariant subspace containing the seed vectors, returned as a
    self-contained model in the echelon basis of the closure.

    Seeds must be weight vectors (supported on a single grading value) so the
    restricted model keeps an exact grading.
    """
    g = rep.weight_grading
    for s in seeds:
        ws = {g[i] for i in s}
        if len(ws) != 1:
            raise ValueError("seed is not a weight vector")
    gens = rep.all_gens()
    ech = Echelon()
    work: list[Vec] = []
    for s in seeds:
        p = ech.insert(s)
        if p is not None:
            work.append(dict(s))
    while work:
        vec = work.pop()
        for m in gens:
            img = m.apply(vec)
            if img and ech.insert(img) is not None:
                work.append(img)
    pivots = sorted(ech.rows)
    basis = [ech.rows[p] for p in pivots]
    col_of = {p: i for i, p in enumerate(pivots)}
    dim = len(basis)

    def restrict(m: SMat) -> SMat:
        out = SMat(dim, dim)
        for j, b in enumerate(basis):
            img = m.apply(b)
            if not img:
                continue
            coeff = ech.coords(img)
            if coeff is None:
                raise ModelInvariantError("closure not invariant")
            for p, c in coeff.items():
                out.add_entry(col_of[p], j, c)
        return out

    sl_gens = {k: restrict(rep.sl_gens[k]) for k in rep.sl_keys()}
    trans = [restrict(t) for t in rep.trans_gens]
    grading = [g[p] for p in pivots]
    return AffMatrixRep(rep.n, dim, sl_gens, trans, grading)


# --- the polynomial degree bound ---------------------------------------------

def symbolic_unipotent(rep: AffMatrixRep) -> dict[int, dict[int, dict]]:
    """exp(sum v_i T_i) with v symbolic: column-major matrix of polynomials
    in v_1..v_n."""
    n = rep.n
    nvars = n
    # M = sum v_i T_i as a polynomial matrix
    mcols: dict[int, dict[int, dict]] = {}
    for i, t in enumerate(rep.trans_gens):
        xi = poly_var(i, nvars)
        for c, col in t.cols.items():
            for r, val in col.items():
                cell = mcols.setdefault(c, {}).setdefault(r, {})
                mcols[c][r] = poly_add_scaled(cell, xi, val)

    def pmatmul(a, b):
        out: dict[int, dict[int, dict]] = {}
        for c, bcol in b.items():
            newcol: dict[int, dict] = {}
            for k, poly in bcol.items():
                acol = a.get(k)
                if not acol:
                    continue
                for r, apoly in acol.items():
                    prod = poly_mul(apoly, poly)
                    if r in newcol:
                        newcol[r] = poly_add_scaled(newcol[r], prod, 1)
                        if not newcol[r]:
                            del newcol[r]
                    elif prod:
                        newcol[r] = prod
            if newcol:
                out[c] = newcol
        return out

    total: dict[int, dict[int, dict]] = {
        i: {i: poly_const(1, nvars)} for i in range(rep.dim)
    }
    term = {i: {i: poly_const(1, nvars)} for i in range(rep.dim)}
    k = 1
    while True:
        term = pmatmul(mcols, term)
        if not term:
            break
        for c, col in term.items():
            tc = total.setdefault(c, {})
            for r, p in col.items():
                tc[r] = poly_add_scaled(tc.get(r, {}), p, Fraction(1, factorial(k)))
                if not tc[r]:
                    del tc[r]
        k += 1
        if k > rep.dim + 1:
            raise ModelInvariantError("translation sum is not nilpotent")
    return total


def verify_degree_bound(rep: AffMatrixRep, filtration) -> bool:
    """Expand the unipotent action symbolically in a filtration-adapted basis
    and check that the block from layer j to layer i has entries of total
    degree at most j - i (in particular blocks below the diagonal vanish and
    diagonal blocks are identities)."""
    sizes = filtration.layer_sizes()
    basis = filtration.adapted_basis()
    if sum(sizes) != rep.dim or len(basis) != rep.dim:
        raise ValueError("filtration does not match the model")
    layer_of = []
    for i, s in enumerate(sizes):
        layer_of.extend([i] * s)

    bmat = SMat(rep.dim, rep.dim)
    for j, vec in enumerate(basis):
        for r, v in vec.items():
            bmat.add_entry(r, j, v)
    binv = invert(bmat)

    sym = symbolic_unipotent(rep)

    # conjugate: B^{-1} * sym * B, mixing scalar and polynomial matrices
    def scalar_times_poly(s: SMat, p):
        out: dict[int, dict[int, dict]] = {}
        for c, pcol in p.items():
            newcol: dict[int, dict] = {}
            for k, poly in pcol.items():
                scol = s.cols.get(k)
                if not scol:
                    continue
                for r, val in scol.items():
                    cur = newcol.get(r, {})
                    newcol[r] = poly_add_scaled(cur, poly, val)
                    if not newcol[r]:
                        del newcol[r]
            if newcol:
                out[c] = newcol
        return out

    def poly_times_scalar(p, s: SMat):
        out: dict[int, dict[int, dict]] = {}
        for c, scol in s.cols.items():
            newcol: dict[int, dict] = {}
            for k, val in scol.items():
                pcol = p.get(k)
                if not pcol:
                    continue
                for r, poly in pcol.items():
                    cur = newcol.get(r, {})
                    newcol[r] = poly_add_scaled(cur, poly, val)
                    if not newcol[r]:
                        del newcol[r]
            if newcol:
                out[c] = newcol
        return out

    adapted = poly_times_scalar(scalar_times_poly(binv, sym), bmat)

    # at v = 0 the matrix is the identity, so constant terms are delta_rc;
    # after subtracting the identity the degree bound alone rules out any
    # deviation from the block-unipotent shape
    for c, col in adapted.items():
        for r, poly in col.items():
            p = dict(poly)
            if r == c:
                p = poly_add_scaled(p, poly_const(1, rep.n), -1)
            if poly_degree(p) > layer_of[c] - layer_of[r]:
                return False
    return True


def evaluate_symbolic(sym, point, dim: int) -> SMat:
    """Evaluate a polynomial matrix at a rational point."""
    out = SMat(dim, dim)
    pt = [Fraction(x) for x in point]
    for c, col in sym.items():
        for r, poly in col.items():
            out.add_entry(r, c, poly_eval(poly, pt))
    return out
