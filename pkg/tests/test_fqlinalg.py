import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcodes import fqlinalg as la
from orbitcodes.errors import AmbientMismatch
from orbitcodes.gf import tower_for

FIELDS = {q: tower_for(q, 2).fq for q in (2, 3, 4, 5, 7, 8, 9)}


def M(rows, n, q):
    return la.FqMatrix.from_rows(rows, n, FIELDS[q])


@pytest.mark.parametrize("q", [4, 8, 9])
def test_extension_tables_form_a_field(q):
    f = FIELDS[q]
    for a, b, c in itertools.product(range(q), repeat=3):
        assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]
        assert f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]
    for a in range(1, q):
        assert f.mul[a][f.inv[a]] == 1
    add, sub, mul, inv = f.tables
    assert add.dtype == np.uint8 and add.shape == (q, q)


def test_rref_examples():
    f = FIELDS[3]
    zero = la.FqMatrix.zeros(4, f)
    assert la.rref(zero) == (zero, 0)
    ident = M([[1 if i == j else 0 for j in range(4)] for i in range(4)], 4, 3)
    assert la.rref(ident) == (ident, 4)
    m, r = la.rref(M([[0, 2, 1, 0], [0, 1, 2, 0], [2, 0, 0, 1]], 4, 3))
    assert r == 2 and m.rows == ((1, 0, 0, 2), (0, 1, 2, 0))


def test_ambient_errors():
    with pytest.raises(AmbientMismatch):
        la.intersection_dim(M([[1, 0]], 2, 2), M([[1, 0, 0]], 3, 2))
    with pytest.raises(AmbientMismatch):
        la.solve_membership(M([[1, 0]], 2, 2), (1, 0, 0))
    with pytest.raises(ValueError):
        M([[3, 0]], 2, 3)


@st.composite
def matrices(draw, q=None, n=None, max_rows=5):
    q = q or draw(st.sampled_from(sorted(FIELDS)))
    n = n or draw(st.integers(1, 5))
    r = draw(st.integers(0, max_rows))
    rows = [[draw(st.integers(0, q - 1)) for _ in range(n)] for _ in range(r)]
    return M(rows, n, q)


@st.composite
def matrix_pairs(draw):
    a = draw(matrices())
    b = draw(matrices(q=a.field.q, n=a.n))
    return a, b


def _is_rref(m):
    last = -1
    pivots = []
    for r in m.rows:
        p = next(i for i, x in enumerate(r) if x)
        assert p > last and r[p] == 1
        last = p
        pivots.append(p)
    for p in pivots:
        assert sum(1 for r in m.rows if r[p]) == 1
    return True


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_rref_canonical_idempotent_rowspace(m):
    r, k = la.rref(m)
    assert _is_rref(r) and k == len(r.rows)
    assert la.rref(r) == (r, k)
    assert all(la.solve_membership(r, row) for row in m.rows)
    assert all(la.solve_membership(M(m.rows, m.n, m.field.q), row) for row in r.rows)


@settings(max_examples=200, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_operations(m, rnd):
    f = m.field
    rows = [list(r) for r in m.rows]
    rnd.shuffle(rows)
    for _ in range(6):
        if len(rows) < 2:
            break
        i, j = rnd.sample(range(len(rows)), 2)
        c = rnd.randrange(f.q)
        rows[i] = list(f.axpy(c, rows[j], rows[i]))
        s = rnd.randrange(1, f.q)
        rows[j] = list(f.vscale(s, rows[j]))
    m2 = M(rows, m.n, f.q)
    assert la.rank(m2) == la.rank(m)
    assert la.rref(m2)[0] == la.rref(m)[0]


@settings(max_examples=300, deadline=None)
@given(matrix_pairs())
def test_intersection_modular_law_and_symmetry(ab):
    a, b = ab
    d = la.intersection_dim(a, b)
    assert d == la.intersection_dim(b, a)
    assert 0 <= d <= min(la.rank(a), la.rank(b))
    assert d + la.rank(a.stack(b)) == la.rank(a) + la.rank(b)
    inter = la.intersection(a, b)
    assert len(inter.rows) == d
    assert all(la.solve_membership(a, r) and la.solve_membership(b, r) for r in inter.rows)


def test_intersection_dim_against_span_sets(rng):
    for _ in range(500):
        a = M(rng.integers(0, 2, (rng.integers(0, 4), 6)).tolist(), 6, 2)
        b = M(rng.integers(0, 2, (rng.integers(0, 4), 6)).tolist(), 6, 2)
        common = la.span_vectors(a) & la.span_vectors(b)
        assert la.intersection_dim(a, b) == round(math.log2(len(common)))


def test_membership_against_span_sets(rng):
    for _ in range(100):
        a = M(rng.integers(0, 3, (2, 4)).tolist(), 4, 3)
        span = la.span_vectors(a)
        assert la.solve_membership(a, (0, 0, 0, 0))
        for row in a.rows:
            assert la.solve_membership(a, row)
        for v in itertools.product(range(3), repeat=4):
            assert la.solve_membership(a, v) == (v in span)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_nullspace(m):
    f = m.field
    ker = la.nullspace(m)
    assert len(ker.rows) + la.rank(m) == m.n
    for x in ker.rows:
        for r in m.rows:
            acc = 0
            for a, b in zip(r, x):
                acc = f.add[acc][f.mul[a][b]]
            assert acc == 0
