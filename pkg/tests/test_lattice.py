import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mixedwh.lattice import (
    dot,
    find_in_cone,
    hermite_normal_form,
    in_lattice_span,
    integer_kernel,
    primitive,
    rank,
    solve_inequalities,
)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), max_size=max_rows).map(
            lambda rows: (rows, n)
        )
    )


def test_kernel_examples():
    assert integer_kernel([[-3, 2]], 2) == [(2, 3)]
    assert integer_kernel([], 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert integer_kernel([[1, 0], [0, 1]], 2) == []
    # saturated: 2x = 2y has kernel spanned by (1, 1), not (2, 2)
    assert integer_kernel([[2, -2]], 2) == [(1, 1)]


def test_primitive():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)


@settings(max_examples=200)
@given(matrices())
def test_kernel_annihilates_and_rank_nullity(data):
    rows, n = data
    K = integer_kernel(rows, n)
    for v in K:
        assert all(dot(r, v) == 0 for r in rows)
    assert rank(K) == len(K)
    assert len(K) == n - rank(rows)


@settings(max_examples=100)
@given(matrices(max_rows=3, max_cols=3))
def test_kernel_membership_brute_force(data):
    rows, n = data
    K = integer_kernel(rows, n)
    for v in itertools.product(range(-3, 4), repeat=n):
        in_kernel = all(dot(r, v) == 0 for r in rows)
        assert in_kernel == in_lattice_span(v, K) if K else in_kernel == (not any(v))


@given(matrices())
def test_hnf_idempotent_and_same_lattice(data):
    rows, _ = data
    H = hermite_normal_form(rows)
    assert hermite_normal_form(H) == H
    assert rank(H) == rank(rows) == len(H)
    for r in rows:
        assert in_lattice_span(r, H) or not any(r)


def test_solve_inequalities():
    # x >= 1, y >= 1, x + y <= 3
    x = solve_inequalities([[1, 0], [0, 1], [-1, -1]], [1, 1, -3])
    assert x is not None and x[0] >= 1 and x[1] >= 1 and x[0] + x[1] <= 3
    assert solve_inequalities([[1], [-1]], [2, -1]) is None


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-5, 5)), min_size=1, max_size=5))
def test_solve_inequalities_sound(rows):
    G = [r[:2] for r in rows]
    h = [r[2] for r in rows]
    x = solve_inequalities(G, h)
    if x is not None:
        assert all(dot(g, x) >= b for g, b in zip(G, h))
    else:
        # no rational point on a fine grid satisfies it either
        grid = [Fraction(k, 4) for k in range(-40, 41)]
        assert not any(all(dot(g, (a, b)) >= c for g, c in zip(G, h)) for a in grid for b in grid)


def test_find_in_cone():
    basis = [(1, 0), (0, 1)]
    v = find_in_cone(basis, strict=[(1, 0), (0, 1)])
    assert v is not None and v[0] > 0 and v[1] > 0
    assert find_in_cone([(1, -1)], strict=[(1, 0), (0, 1)]) is None
