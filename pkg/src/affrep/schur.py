"""Dominant weight arithmetic for SL_n: duals, dimensions, Pieri and
Littlewood-Richardson decompositions.

Weights are normalized partitions: non-increasing integer tuples of length n
whose last entry is 0 (full determinant columns are stripped, since they act
trivially on SL_n).  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, order=True)
class Weight:
    """Normalized highest-weight label for an irreducible SL_n-representation."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        if len(self.parts) != self.n:
            raise ValueError(
                f"weight {list(self.parts)} has length {len(self.parts)}, expected {self.n}"
            )
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"weight {list(self.parts)} is not non-increasing")
        if self.parts[-1] != 0:
            raise ValueError(f"weight {list(self.parts)} is not normalized (last part nonzero)")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_trivial(self) -> bool:
        return self.parts[0] == 0

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class WeightMultiset:
    """Finite multiset of same-rank weights; the semisimple data everywhere."""

    n: int
    entries: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        seen = set()
        for w, m in self.entries:
            if w.n != self.n:
                raise ValueError(f"weight {w} has rank {w.n}, expected {self.n}")
            if m < 1:
                raise ValueError(f"multiplicity of {w} must be >= 1, got {m}")
            if w in seen:
                raise ValueError(f"duplicate entry for {w}")
            seen.add(w)
        if list(self.entries) != sorted(self.entries):
            raise ValueError("entries not in canonical order; use WeightMultiset.of")

    @classmethod
    def of(cls, n: int, items=()) -> "WeightMultiset":
        """Build from (weight, mult) pairs or weights; merges repeats and sorts."""
        acc: dict[Weight, int] = {}
        for item in items:
            if isinstance(item, Weight):
                w, m = item, 1
            else:
                w, m = item
            acc[w] = acc.get(w, 0) + m
        entries = tuple(sorted((w, m) for w, m in acc.items() if m > 0))
        return cls(n, entries)

    def count(self, w: Weight) -> int:
        for v, m in self.entries:
            if v == w:
                return m
        return 0

    def dim(self) -> int:
        return sum(m * weyl_dim(w) for w, m in self.entries)

    def total_mult(self) -> int:
        return sum(m for _, m in self.entries)

    def weights(self) -> list[Weight]:
        return [w for w, _ in self.entries]

    def add(self, other: "WeightMultiset") -> "WeightMultiset":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return WeightMultiset.of(self.n, list(self.entries) + list(other.entries))

    def scale(self, k: int) -> "WeightMultiset":
        return WeightMultiset.of(self.n, [(w, m * k) for w, m in self.entries])

    def contains_multiset(self, other: "WeightMultiset") -> bool:
        """True if every weight of `other` occurs here with at least its multiplicity."""
        return all(self.count(w) >= m for w, m in other.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        terms = []
        for w, m in self.entries:
            terms.append(str(w) if m == 1 else f"{m}*{w}")
        return " + ".join(terms)


def normalize(n: int, raw) -> Weight:
    """Canonical SL_n label: pad to length n, then strip full columns.

    Accepts any non-increasing sequence of length <= n.  Idempotent.
    """
    raw = list(raw)
    if len(raw) > n:
        raise ValueError(f"sequence {raw} longer than rank {n}")
    if any(a < b for a, b in zip(raw, raw[1:])):
        raise ValueError(f"sequence {raw} is not non-increasing")
    raw = raw + [0] * (n - len(raw))
    last = raw[-1]
    return Weight(n, tuple(p - last for p in raw))


def dual(w: Weight) -> Weight:
    """Label of the dual representation: complement-reverse; involutive."""
    top = w.parts[0]
    return Weight(w.n, tuple(top - p for p in reversed(w.parts)))


@lru_cache(maxsize=None)
def _weyl_dim(n: int, parts: tuple[int, ...]) -> int:
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(parts[i] - parts[j] + j - i, j - i)
    assert d.denominator == 1
    return d.numerator


def weyl_dim(w: Weight) -> int:
    """Dimension of the irreducible with highest weight w (exact integer)."""
    return _weyl_dim(w.n, w.parts)


def lambda_gap(w: Weight) -> int:
    """Difference of the two leading parts; 0 for rank 1."""
    if w.n == 1:
        return 0
    return w.parts[0] - w.parts[1]


def sym_weight(n: int, k: int) -> Weight:
    """Label of the k-th symmetric power of the standard representation."""
    return normalize(n, [k])


def horizontal_strips(parts: tuple[int, ...], k: int, nrows: int):
    """All partitions (length <= nrows) obtained from `parts` by adding a
    horizontal strip with k boxes: at most one new box per column."""
    base = list(parts) + [0] * (nrows - len(parts))

    def rec(i, remaining, prev):
        if i == nrows:
            if remaining == 0:
                yield ()
            return
        lo = base[i]
        hi = min(prev, base[i] + remaining) if i > 0 else base[i] + remaining
        # strip condition: row i may grow at most to the old length of row i-1
        if i > 0:
            hi = min(hi, base[i - 1])
        for v in range(lo, hi + 1):
            for rest in rec(i + 1, remaining - (v - base[i]), v):
                yield (v,) + rest

    yield from rec(0, k, None)


def pieri_sym(w: Weight, k: int) -> WeightMultiset:
    """Decomposition of (irrep w) tensor Sym^k(C^n): multiplicity-free,
    one summand per horizontal strip of size k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = [normalize(w.n, nu) for nu in horizontal_strips(w.parts, k, w.n)]
    return WeightMultiset.of(w.n, out)


def _candidate_outer_shapes(a: tuple[int, ...], total: int, nrows: int):
    """Partitions nu containing a, with |nu| = total and at most nrows rows."""

    def rec(i, remaining, prev):
        if i == nrows:
            if remaining == 0:
                yield ()
            return
        lo = a[i] if i < len(a) else 0
        hi = min(prev, lo + remaining) if i > 0 else lo + remaining
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1, remaining - v + lo, v):
                yield (v,) + rest

    yield from rec(0, total - sum(a), None)


def _lr_fillings(nu: tuple[int, ...], a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Number of Littlewood-Richardson skew tableaux of shape nu/a and content b.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so that the lattice-word condition can be checked as the
    word is produced.
    """
    apad = list(a) + [0] * (len(nu) - len(a))
    cells = []
    for r, width in enumerate(nu):
        for c in range(width - 1, apad[r] - 1, -1):
            cells.append((r, c))
    counts = [0] * (len(b) + 1)  # counts[v] = letters v placed so far, 1-based
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        # column strictness only against filled cells; inner-shape cells are empty
        above = grid.get((r - 1, c)) if r > 0 and c >= apad[r - 1] else None
        total = 0
        for v in range(1, len(b) + 1):
            if counts[v] >= b[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word would fail
            grid[(r, c)] = v
            counts[v] += 1
            total += rec(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]
        return total

    return rec(0)


def lr_decompose(a: Weight, b: Weight) -> WeightMultiset:
    """Full tensor product decomposition with Littlewood-Richardson
    multiplicities, normalized to SL_n labels."""
    if a.n != b.n:
        raise ValueError("rank mismatch")
    n = a.n
    if b.size > a.size:
        a, b = b, a  # fewer fillings with the smaller content
    total = a.size + b.size
    out = []
    bparts = tuple(p for p in b.parts if p > 0)
    for nu in _candidate_outer_shapes(a.parts, total, n):
        if any(x < y for x, y in zip(nu, a.parts)):
            continue
        c = _lr_fillings(nu, a.parts, bparts) if bparts else 1
        if c:
            out.append((normalize(n, nu), c))
    return WeightMultiset.of(n, out)


def contains(target: Weight, a: Weight, b: Weight) -> int:
    """Multiplicity of `target` inside (irrep a) tensor (irrep b)."""
    return lr_decompose(a, b).count(target)


def check_lr_gap_bound(w: Weight, k: int) -> bool:
    """Gap inequality for Pieri summands: every partition U obtained from w by
    a horizontal strip of k boxes satisfies U_1 - U_2 >= k - w_1.

    Checked on the un-normalized labels, before stripping determinant columns.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    bound = k - w.parts[0]
    for nu in horizontal_strips(w.parts, k, w.n):
        gap = nu[0] - nu[1] if w.n > 1 else 0
        if gap < bound:
            return False
    return True
