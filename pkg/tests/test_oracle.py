from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from bundlegauge.abelian import make_group
from bundlegauge.manifolds import homology, normalize
from bundlegauge.oracle import (
    ChainComplex,
    IntMatrix,
    complex_for_manifold,
    homology_of,
    parse_complex,
    smith_normal_form,
)


def brute_force_minor_gcd(entries, k):
    """gcd of all k x k minors, by direct expansion.  Independent of the
    elimination code: determinants via cofactor recursion."""

    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum(
            (-1) ** j * m[0][j] * det([row[:j] + row[j + 1 :] for row in m[1:]])
            for j in range(len(m))
        )

    rows, cols = len(entries), len(entries[0])
    g = 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            g = gcd(g, det([[entries[i][j] for j in ci] for i in ri]))
    return g


@st.composite
def small_matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    entries = draw(
        st.lists(
            st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return IntMatrix.from_rows(entries, cols=cols)


class TestSmithNormalForm:
    def test_single_entry(self):
        assert smith_normal_form(IntMatrix.from_rows([[6]])) == ((6,), 1)

    def test_chain_repair(self):
        # diag(2,3) is not a chain; SNF rewrites it as diag(1,6).
        assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])) == ((1, 6), 2)

    def test_zero_matrix(self):
        assert smith_normal_form(IntMatrix.zero(3, 4)) == ((), 0)
        assert smith_normal_form(IntMatrix.zero(0, 5)) == ((), 0)

    @settings(max_examples=300)
    @given(small_matrices())
    def test_against_determinantal_divisors(self, matrix):
        diagonal, rank = smith_normal_form(matrix)
        for a, b in zip(diagonal, diagonal[1:]):
            assert b % a == 0
        entries = [list(row) for row in matrix.entries]
        running = 1
        for k, d in enumerate(diagonal, start=1):
            running *= d
            assert brute_force_minor_gcd(entries, k) == running
        if rank < min(matrix.rows, matrix.cols):
            assert brute_force_minor_gcd(entries, rank + 1) == 0

    @settings(max_examples=150)
    @given(small_matrices(), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, matrix, rng):
        rows = [list(r) for r in matrix.entries]
        rng.shuffle(rows)
        transposed = list(map(list, zip(*rows)))
        rng.shuffle(transposed)
        shuffled = IntMatrix.from_rows(
            list(map(list, zip(*transposed))), cols=matrix.cols
        )
        assert smith_normal_form(shuffled) == smith_normal_form(matrix)


class TestChainComplex:
    def test_boundary_shapes_validated(self):
        with pytest.raises(ValueError):
            ChainComplex((1, 2), (IntMatrix.zero(2, 2),))

    def test_composition_law_enforced(self):
        d2 = IntMatrix.from_rows([[1, 0], [0, 1]])
        d1 = IntMatrix.from_rows([[1, 1]])
        with pytest.raises(ValueError, match="composition"):
            ChainComplex((1, 2, 2), (d1, d2))

    def test_sphere_complex(self):
        # Two cells in degrees 0 and n.
        complex_ = ChainComplex.build([1, 0, 0, 0, 1], {})
        groups = homology_of(complex_)
        assert [g.render() for g in groups] == ["Z", "0", "0", "0", "Z"]

    def test_moore_complex(self):
        # S^3 with a 4-cell attached by degree m: single Z_m in degree 3.
        complex_ = ChainComplex.build(
            [1, 0, 0, 1, 1], {4: IntMatrix.from_rows([[9]])}
        )
        groups = homology_of(complex_)
        assert groups[3] == make_group(0, [9])
        assert groups[4].is_trivial

    def test_torus_like_complex(self):
        # One 0-cell, two 1-cells, one 2-cell with zero boundary: the torus.
        complex_ = ChainComplex.build(
            [1, 2, 1], {1: IntMatrix.zero(1, 2), 2: IntMatrix.zero(2, 1)}
        )
        groups = homology_of(complex_)
        assert [g.render() for g in groups] == ["Z", "Z + Z", "Z"]

    def test_projective_plane(self):
        complex_ = ChainComplex.build(
            [1, 1, 1], {1: IntMatrix.zero(1, 1), 2: IntMatrix.from_rows([[2]])}
        )
        groups = homology_of(complex_)
        assert [g.render() for g in groups] == ["Z", "Z_2", "0"]


class TestManifoldComplexes:
    @pytest.mark.parametrize("m", [0, 1, 2, 6, 12, 24])
    def test_composition_is_zero(self, m):
        complex_ = complex_for_manifold(normalize(1, m))
        for n in range(2, 8):
            assert complex_.boundary(n - 1).mul(complex_.boundary(n)).is_zero()

    def test_agrees_with_closed_form_on_the_grid(self):
        for l in range(-24, 25):
            for m in range(0, 25):
                spec = normalize(l, m)
                assert homology_of(complex_for_manifold(spec)) == homology(spec)


class TestComplexParsing:
    def test_manifold_style_file(self):
        complex_ = parse_complex(
            """
            # three-cell structure plus the top cell
            cells: 1 0 0 1 1 0 0 1
            boundary 4:
            6
            """
        )
        groups = homology_of(complex_)
        assert groups[3] == make_group(0, [6])

    def test_multi_row_boundaries(self):
        complex_ = parse_complex(
            """
            cells: 2 3
            boundary 1:
            1 -1 0
            -1 1 0
            """
        )
        groups = homology_of(complex_)
        assert [g.render() for g in groups] == ["Z", "Z + Z"]

    def test_row_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            parse_complex("cells: 2 1\nboundary 1:\n1\n")

    def test_missing_cells_line_rejected(self):
        with pytest.raises(ValueError):
            parse_complex("boundary 1:\n1\n")

    def test_stray_text_rejected(self):
        with pytest.raises(ValueError):
            parse_complex("cells: 1 1\nnot a number\n")
