"""Independent homology oracle: cellular chain complexes and Smith normal form.

This module deliberately shares no logic with the closed-form homology
in the manifolds module; the only common code is the abelian-group
canonical form.  It builds the cellular chain complex of a total space
(cells in degrees 0, 3, 4, 7; the 4-cell attaches by a degree-m map,
the 7-cell by zero since a closed orientable 7-manifold has H_7 = Z)
and diagonalizes boundary matrices over the integers.

Smith normal form uses exact Python integers with pivoting on the
minimal nonzero absolute value, which keeps intermediate entries small.
The matrices produced here are tiny, but the routine is generic and the
CLI accepts arbitrary user complexes in a small text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .abelian import AbGroup, make_group
from .manifolds import ManifoldSpec

__all__ = [
    "IntMatrix",
    "ChainComplex",
    "SNFResult",
    "smith_normal_form",
    "complex_for_manifold",
    "homology_of",
    "parse_complex",
]


@dataclass(frozen=True)
class IntMatrix:
    """An exact integer matrix; rows and cols may be zero."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        data = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntMatrix(self.rows, other.cols, data)


class SNFResult(NamedTuple):
    diagonal: tuple[int, ...]  # nonzero invariant factors d_1 | d_2 | ...
    rank: int


def _min_pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            v = abs(a[i][j])
            if v != 0 and (best_val is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def smith_normal_form(matrix: IntMatrix) -> SNFResult:
    """Diagonalize by unimodular row/column operations.

    Only the invariants are returned: the positive diagonal entries in
    their divisibility chain, plus the rank.  The transformations are
    not tracked.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    SNFResult(diagonal=(1, 6), rank=2)
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return SNFResult((), 0)
    a = [list(row) for row in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    diagonal: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        pos = _min_pivot(a, t)
        if pos is None:
            break
        i, j = pos
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            # Clear the pivot column, restarting if a smaller remainder
            # shows up (it becomes the new pivot).
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                for j in range(t, ncols):
                    a[i][j] -= q * a[t][j]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                for i in range(t, nrows):
                    a[i][j] -= q * a[i][t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    restart = True
                    break
            if restart:
                continue
            # Pivot must divide the rest of the submatrix for the
            # diagonal to be a divisibility chain.
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
        diagonal.append(abs(a[t][t]))
        t += 1
    return SNFResult(tuple(diagonal), len(diagonal))


@dataclass(frozen=True)
class ChainComplex:
    """Cells per degree and one boundary matrix per positive degree.

    boundaries[n] is the map C_n -> C_{n-1}, an IntMatrix with
    cells[n-1] rows and cells[n] columns.  The zero-composition law
    is checked at construction.
    """

    cells: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.boundaries) != max(len(self.cells) - 1, 0):
            raise ValueError("need one boundary matrix per positive degree")
        for n, d in enumerate(self.boundaries, start=1):
            if d.rows != self.cells[n - 1] or d.cols != self.cells[n]:
                raise ValueError(f"boundary {n} has shape {d.rows}x{d.cols}, "
                                 f"expected {self.cells[n-1]}x{self.cells[n]}")
        for n in range(2, len(self.cells)):
            dd = self.boundaries[n - 2].mul(self.boundaries[n - 1])
            if not dd.is_zero():
                raise ValueError(f"boundary composition d_{n-1} o d_{n} is nonzero")

    @classmethod
    def build(cls, cells: list[int], boundary_map: dict[int, IntMatrix]) -> "ChainComplex":
        """Missing boundaries default to the zero matrix of the right shape."""
        bs = []
        for n in range(1, len(cells)):
            d = boundary_map.get(n)
            if d is None:
                d = IntMatrix.zero(cells[n - 1], cells[n])
            bs.append(d)
        return cls(tuple(cells), tuple(bs))

    def top_degree(self) -> int:
        return len(self.cells) - 1

    def boundary(self, n: int) -> IntMatrix:
        """d_n for 1 <= n <= top degree; formally zero outside that range."""
        if 1 <= n <= self.top_degree():
            return self.boundaries[n - 1]
        rows = self.cells[n - 1] if 0 <= n - 1 < len(self.cells) else 0
        cols = self.cells[n] if 0 <= n < len(self.cells) else 0
        return IntMatrix.zero(rows, cols)


def complex_for_manifold(spec: ManifoldSpec) -> ChainComplex:
    """Minimal cell structure S^3 u e^4 u e^7 of the total space.

    The 4-cell attaches to the 3-sphere by a degree-m map and the 7-cell
    has zero cellular boundary, so the only nontrivial matrix is the
    1x1 boundary (m) in degree 4.  This covers m = 0 and m = 1 as
    degenerate cases of the same complex.
    """
    cells = [1, 0, 0, 1, 1, 0, 0, 1]
    d4 = IntMatrix.from_rows([[spec.m]])
    return ChainComplex.build(cells, {4: d4})


def homology_of(complex: ChainComplex) -> tuple[AbGroup, ...]:
    """H_n = ker d_n / im d_{n+1}, one canonical group per degree.

    Ranks and torsion both come out of the Smith normal form of the
    boundary matrices.
    """
    results = []
    snf_cache: dict[int, SNFResult] = {}

    def snf(n: int) -> SNFResult:
        if n not in snf_cache:
            snf_cache[n] = smith_normal_form(complex.boundary(n))
        return snf_cache[n]

    for n in range(len(complex.cells)):
        kernel_rank = complex.cells[n] - snf(n).rank
        image = snf(n + 1)
        free = kernel_rank - image.rank
        if free < 0:
            raise ValueError("inconsistent complex: image exceeds kernel")
        torsion = [d for d in image.diagonal if d > 1]
        results.append(make_group(free, torsion))
    return tuple(results)


def parse_complex(text: str) -> ChainComplex:
    """Read a chain complex from the small text format.

    Format: a ``cells:`` line with the cell counts per degree, then one
    ``boundary N:`` block per nonzero boundary, holding cells[N-1] rows
    of cells[N] integers.  Lines starting with ``#`` are comments.

    >>> cx = parse_complex('''
    ... cells: 1 0 0 1 1 0 0 1
    ... boundary 4:
    ... 6
    ... ''')
    >>> [str(g) for g in homology_of(cx)][3]
    'Z_6'
    """
    cells: list[int] | None = None
    boundary_map: dict[int, IntMatrix] = {}
    pending: int | None = None
    pending_rows: list[list[int]] = []

    def close_pending() -> None:
        nonlocal pending, pending_rows
        if pending is None:
            return
        assert cells is not None
        mat = IntMatrix.from_rows(pending_rows, cols=cells[pending])
        if mat.rows != cells[pending - 1]:
            raise ValueError(
                f"boundary {pending} has {mat.rows} rows, expected {cells[pending - 1]}"
            )
        boundary_map[pending] = mat
        pending, pending_rows = None, []

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("cells:"):
            close_pending()
            cells = [int(x) for x in line.removeprefix("cells:").split()]
            if any(c < 0 for c in cells):
                raise ValueError("cell counts must be nonnegative")
            continue
        if line.startswith("boundary"):
            close_pending()
            if cells is None:
                raise ValueError("cells: line must come first")
            head = line.removeprefix("boundary").strip().rstrip(":")
            n = int(head)
            if not 1 <= n < len(cells):
                raise ValueError(f"boundary degree {n} out of range")
            pending = n
            continue
        if pending is None:
            raise ValueError(f"unexpected line outside a boundary block: {line!r}")
        pending_rows.append([int(x) for x in line.split()])
    close_pending()
    if cells is None:
        raise ValueError("missing cells: line")
    return ChainComplex.build(cells, boundary_map)
