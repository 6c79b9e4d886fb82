"""Exact integer matrix algebra: Smith normal form and cokernel invariants.

Everything runs over plain Python integers, so there is no overflow and no
tolerance anywhere; the matrices that show up are desk-scale (at most a few
hundred rows), which keeps the classical elimination algorithms perfectly
adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .padic import Prime, vp


class IntMatrix:
    """Dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: list[list[int]], rows: int | None = None, cols: int | None = None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mismatched matrix data")
        self.rows = rows
        self.cols = cols
        self.data = [list(map(int, r)) for r in data]

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zero(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data], self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"IntMatrix({self.data!r})"

    def det(self) -> int:
        """Determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    invariant_factors: tuple[int, ...]
    source_dim: int
    target_dim: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _pivot(a: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    # Minimal |entry| in the trailing block, ties broken by row then column.
    best = None
    best_val = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = abs(a[i][j])
            if v and (best_val is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form invariant factors, canonical (positive, dividing).

    >>> snf(IntMatrix([[3, 2], [0, 3]])).invariant_factors
    (1, 9)
    """
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while t < min(rows, cols):
        pos = _pivot(a, t, rows, cols)
        if pos is None:
            break
        pi, pj = pos
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        # Clear row and column t.  Division remainders stay behind in the
        # pivot row/column and are strictly smaller than the pivot, so
        # re-pivoting on the minimum terminates.
        while True:
            pivot = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // pivot
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // pivot
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
            if not any(a[i][t] for i in range(t + 1, rows)) and not any(
                a[t][j] for j in range(t + 1, cols)
            ):
                break
            pi, pj = _pivot(a, t, rows, cols)
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        # Enforce divisibility into the trailing block: fold any bad entry
        # into column t and redo the elimination at this step.
        pivot = abs(a[t][t])
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % pivot:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(t, cols):
                a[t][j] += a[bad][j]
            continue
        factors.append(pivot)
        t += 1
    return SnfResult(tuple(factors), source_dim=cols, target_dim=rows)


@dataclass(frozen=True)
class ModuleShape:
    """Canonical shape of a module over a p-torsion-free Z_(p)-algebra R.

    torsion_exponents lists e for each cyclic factor R/p^e, sorted in
    descending order with zero exponents dropped (a factor R/n with n
    prime to p is trivial).  free_rank counts R factors, complete_rank
    counts factors of the p-adic completion.  truncated marks shapes that
    stand for a finite cut of an infinite product.
    """

    torsion_exponents: tuple[int, ...]
    free_rank: int = 0
    complete_rank: int = 0
    truncated: bool = False

    def __post_init__(self):
        canon = tuple(sorted((e for e in self.torsion_exponents if e > 0), reverse=True))
        object.__setattr__(self, "torsion_exponents", canon)

    @property
    def p_length(self) -> int:
        return sum(self.torsion_exponents)

    def is_trivial(self) -> bool:
        return not self.torsion_exponents and not self.free_rank and not self.complete_rank

    def __str__(self):
        parts = ["R^"] * self.complete_rank + ["R"] * self.free_rank
        parts += [f"R/p^{e}" if e > 1 else "R/p" for e in self.torsion_exponents]
        if self.truncated:
            parts.append("...")
        return " x ".join(parts) if parts else "0"


TRIVIAL_SHAPE = ModuleShape(())


def cokernel_shape(m: IntMatrix, p: Prime) -> ModuleShape:
    """Shape of R^rows / (column span of m), keeping only the p-primary part."""
    res = snf(m)
    exps = [vp(p, d) for d in res.invariant_factors if d != 0]
    return ModuleShape(tuple(exps), free_rank=m.rows - res.rank)


def _hnf_rows(vectors: list[list[int]], width: int) -> tuple[tuple[int, ...], ...]:
    """Canonical Hermite normal form (row style) of the lattice spanned
    by the given row vectors.  Deterministic, entries reduced above pivots."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while col < width and rows:
        carrier = None
        for r in rows:
            if r[col]:
                carrier = r
                break
        if carrier is None:
            col += 1
            continue
        rows.remove(carrier)
        # Fold every other row with a nonzero entry in this column into the
        # carrier via the extended gcd, zeroing the column below.
        rest = []
        for r in rows:
            if r[col]:
                a, b = carrier[col], r[col]
                g = gcd(a, b)
                x, y = _bezout(a, b)
                combo = [x * u + y * v for u, v in zip(carrier, r)]
                r = [(-(b // g)) * u + (a // g) * v for u, v in zip(carrier, r)]
                carrier = combo
                if any(r):
                    rest.append(r)
            elif any(r):
                rest.append(r)
        if carrier[col] < 0:
            carrier = [-u for u in carrier]
        basis.append(carrier)
        rows = rest
        col += 1
    # Reduce entries above each pivot.
    for k in range(len(basis) - 1, -1, -1):
        pcol = next(j for j, v in enumerate(basis[k]) if v)
        pval = basis[k][pcol]
        for r in range(k):
            q = basis[r][pcol] // pval
            if q:
                basis[r] = [u - q * v for u, v in zip(basis[r], basis[k])]
    return tuple(tuple(r) for r in basis)


def _bezout(a: int, b: int) -> tuple[int, int]:
    # x*a + y*b == gcd(a, b)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


def submodule_equal_mod(
    gens_a: list[list[int]] | list[tuple[int, ...]],
    gens_b: list[list[int]] | list[tuple[int, ...]],
    moduli: list[int] | tuple[int, ...],
) -> bool:
    """Do two generating sets span the same submodule of prod Z/moduli_k?

    Decided exactly: each side is lifted to the integer lattice spanned by
    its generators together with moduli_k * e_k, and the canonical Hermite
    forms are compared.
    """
    width = len(moduli)
    for g in list(gens_a) + list(gens_b):
        if len(g) != width:
            raise ValueError("generator length does not match moduli")
    scaffold = [[moduli[k] if j == k else 0 for j in range(width)] for k in range(width)]
    lat_a = _hnf_rows([list(g) for g in gens_a] + scaffold, width)
    lat_b = _hnf_rows([list(g) for g in gens_b] + scaffold, width)
    return lat_a == lat_b
