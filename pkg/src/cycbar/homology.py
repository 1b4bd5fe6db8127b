"""Integral chain complexes of weight components and their homology.

The normalized reduced chains of a weight component have one free
generator per nondegenerate simplex, with the basepoint discarded.  The
boundary of an l-simplex is the alternating sum of its faces; faces that
hit the basepoint or a degenerate simplex contribute nothing.  (For the
truncated monoid the degenerate case never actually occurs: merging two
entries of a nondegenerate tuple yields an entry that is either >= 1 or
overflows to the basepoint.)

Homology is read off Smith normal forms of the boundary matrices.  All
arithmetic is exact over arbitrary-precision integers: boundary matrices
are kept as sparse (row, col, value) triplets and densified one matrix at
a time for the diagonalization, which picks pivots of minimal absolute
value and reduces with extended-gcd row/column operations.
"""

from dataclasses import dataclass
from math import gcd

from .cyclic_bar import BASEPOINT, CyclicBar, WeightComponent, is_degenerate

__all__ = [
    "AbelianGroup",
    "ChainComplex",
    "WeightPieceReport",
    "smith_normal_form",
    "chain_complex",
    "homology_groups",
    "verify_weight_piece",
]


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group Z^rank + sum of Z/d_j.

    The torsion orders form a divisibility chain d_1 | d_2 | ... with every
    d_j >= 2, which makes the representation canonical: two groups are
    isomorphic exactly when the dataclasses are equal.
    """

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion order {d} is not >= 2")
            if prev is not None and d % prev:
                raise ValueError(f"torsion orders {prev}, {d} break divisibility")
            prev = d

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order):
        """Z/order; order 1 gives the trivial group."""
        if order < 1:
            raise ValueError("cyclic order must be >= 1")
        return cls(0, ()) if order == 1 else cls(0, (order,))

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = AbelianGroup(0, ())


def _xgcd(a, b):
    """(g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Input is a list of equal-length rows; the result has min(rows, cols)
    entries: the invariant factors d_1 | d_2 | ..., nonnegative, followed
    by zeros.  The input is not modified.

    Diagonalization repeatedly moves a nonzero entry of minimal absolute
    value to the pivot position (a +-1 short-circuits the search) and
    clears its row and column, using exact division where the pivot
    divides and a unimodular extended-gcd combination otherwise; the
    latter can refill the column, so the two sweeps alternate until
    stable.  A final gcd/lcm pass on the diagonal enforces divisibility.
    """
    rows = [[int(v) for v in row] for row in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(row) != n for row in rows):
        raise ValueError("matrix rows must all have the same length")
    size = min(m, n)
    t = 0
    while t < size:
        pr = pc = -1
        best = 0
        for r in range(t, m):
            row = rows[r]
            for c in range(t, n):
                v = row[c]
                if v and (best == 0 or -best < v < best):
                    best = abs(v)
                    pr, pc = r, c
                    if best == 1:
                        break
            if best == 1:
                break
        if best == 0:
            break
        if pr != t:
            rows[t], rows[pr] = rows[pr], rows[t]
        if pc != t:
            for row in rows:
                row[t], row[pc] = row[pc], row[t]
        while True:
            for r in range(t + 1, m):
                v = rows[r][t]
                if v == 0:
                    continue
                p = rows[t][t]
                rowt, rowr = rows[t], rows[r]
                if v % p == 0:
                    q = v // p
                    for c in range(t, n):
                        rowr[c] -= q * rowt[c]
                else:
                    g, u, w = _xgcd(p, v)
                    a, b = -(v // g), p // g
                    for c in range(t, n):
                        x, y = rowt[c], rowr[c]
                        rowt[c] = u * x + w * y
                        rowr[c] = a * x + b * y
            dirty = False
            for c in range(t + 1, n):
                v = rows[t][c]
                if v == 0:
                    continue
                p = rows[t][t]
                if v % p == 0:
                    q = v // p
                    for r in range(t, m):
                        rows[r][c] -= q * rows[r][t]
                else:
                    g, u, w = _xgcd(p, v)
                    a, b = -(v // g), p // g
                    for r in range(t, m):
                        x, y = rows[r][t], rows[r][c]
                        rows[r][t] = u * x + w * y
                        rows[r][c] = a * x + b * y
                    dirty = True
            if not dirty:
                break
        t += 1
    inv = [abs(rows[j][j]) for j in range(t)]
    for a in range(len(inv)):
        for b in range(a + 1, len(inv)):
            if inv[b] % inv[a]:
                g = gcd(inv[a], inv[b])
                inv[a], inv[b] = g, inv[a] * inv[b] // g
    return inv + [0] * (size - len(inv))


@dataclass(frozen=True)
class ChainComplex:
    """Normalized reduced chains of one weight component.

    ``bases[l]`` lists the degree-l generators (nondegenerate simplices),
    ``boundaries[l]`` the matrix of the differential from degree l to
    degree l-1 as sorted (row, col, value) triplets; ``boundaries[0]`` is
    empty since there is no degree -1.
    """

    k: int
    i: int
    bases: tuple
    boundaries: tuple

    @property
    def top_degree(self):
        return len(self.bases) - 1

    def dimension(self, l):
        if 0 <= l <= self.top_degree:
            return len(self.bases[l])
        return 0

    def dimensions(self):
        return [len(b) for b in self.bases]

    def boundary_matrix(self, l):
        """Dense matrix of the degree-l differential (rows: degree l-1)."""
        if not 1 <= l <= self.top_degree:
            raise ValueError(f"no differential at degree {l}")
        dense = [[0] * self.dimension(l) for _ in range(self.dimension(l - 1))]
        for r, c, v in self.boundaries[l]:
            dense[r][c] = v
        return dense

    def boundary_composes_to_zero(self):
        """Exact check that consecutive differentials compose to zero."""
        for l in range(2, self.top_degree + 1):
            by_col = {}
            for r, c, v in self.boundaries[l - 1]:
                by_col.setdefault(c, []).append((r, v))
            acc = {}
            for mid, c, v in self.boundaries[l]:
                for r, w in by_col.get(mid, ()):
                    acc[r, c] = acc.get((r, c), 0) + w * v
            if any(acc.values()):
                return False
        return True

    def __repr__(self):
        return f"ChainComplex(k={self.k}, i={self.i}, dims={self.dimensions()})"


def chain_complex(wc):
    """Build the normalized reduced chain complex of a weight component.

    The component must be closed under faces degree by degree (true for
    both enumeration routes); a face landing outside the listed basis is
    an error rather than silently dropped.
    """
    if not isinstance(wc, WeightComponent):
        raise ValueError("expected a WeightComponent")
    bar = CyclicBar(wc.k)
    bases = wc.simplices_by_degree
    index = [{s: col for col, s in enumerate(block)} for block in bases]
    boundaries = [()]
    for l in range(1, len(bases)):
        cells = {}
        for col, s in enumerate(bases[l]):
            sign = 1
            for a in range(l + 1):
                f = bar.face(s, a)
                if f is not BASEPOINT and not is_degenerate(f):
                    row = index[l - 1].get(f)
                    if row is None:
                        raise ValueError(
                            f"face {f} of {s} missing from degree {l - 1} basis"
                        )
                    cells[row, col] = cells.get((row, col), 0) + sign
                sign = -sign
        boundaries.append(
            tuple(sorted((r, c, v) for (r, c), v in cells.items() if v))
        )
    return ChainComplex(wc.k, wc.i, bases, tuple(boundaries))


def homology_groups(cx):
    """Integral homology of the complex, one AbelianGroup per degree 0..top.

    Degree l has rank dim_l - rank(d_l) - rank(d_{l+1}) and torsion the
    invariant factors of d_{l+1} exceeding 1.
    """
    top = cx.top_degree
    factors = {}
    for l in range(1, top + 1):
        factors[l] = smith_normal_form(cx.boundary_matrix(l))
    ranks = {l: sum(1 for d in f if d) for l, f in factors.items()}
    out = {}
    for l in range(top + 1):
        rank = cx.dimension(l) - ranks.get(l, 0) - ranks.get(l + 1, 0)
        torsion = tuple(d for d in factors.get(l + 1, ()) if d > 1)
        out[l] = AbelianGroup(rank, torsion)
    return out


@dataclass
class WeightPieceReport:
    """Computed vs predicted homology of one weight component."""

    k: int
    i: int
    computed: dict
    expected: dict
    mismatched_degrees: tuple

    @property
    def matches(self):
        return not self.mismatched_degrees


def verify_weight_piece(k, i):
    """Compare computed homology of weight i with the sphere-smash prediction.

    Only weights with i not a multiple of k have the closed-form answer
    (reduced homology of S^(2d) smashed with a disjointly based circle,
    d = floor((i-1)/k)), so multiples of k are rejected.
    """
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"weight must be a positive integer, got {i!r}")
    if i % k == 0:
        raise ValueError(
            f"weight {i} is a multiple of {k}: no closed form to check against"
        )
    # imported here: tate_tp uses AbelianGroup from this module
    from .tate_tp import expected_reduced_homology

    bar = CyclicBar(k)
    computed = homology_groups(chain_complex(bar.enumerate_weight_component(i)))
    expected = expected_reduced_homology(i, k)
    degrees = sorted(set(computed) | set(expected))
    bad = tuple(
        l
        for l in degrees
        if computed.get(l, ZERO_GROUP) != expected.get(l, ZERO_GROUP)
    )
    return WeightPieceReport(k, i, computed, expected, bad)
