import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcodes.dsl import parse_subspace
from orbitcodes.errors import AlphaInBaseField, BudgetExceeded, InvalidSubfield, NotFullLength, OracleScaleExceeded
from orbitcodes.gf import tower_for
from orbitcodes.orbit import (
    IntersectionDistribution,
    count_subfield_line_shifts,
    distance_distribution,
    intersection_dims,
    intersection_distribution,
    is_sidon,
    is_sidon_by_definition,
    pair_counts,
    s_class,
    s_partition,
    trace_dual,
)
from orbitcodes.subspace import line_sum, shift, span, stabilizer, subfield


@pytest.fixture(scope="module")
def u11():
    t = tower_for(3, 11)
    return parse_subspace("span(z^13, z^17, z^21, z^23)", t)


@pytest.fixture(scope="module")
def u10():
    t = tower_for(3, 10)
    return parse_subspace("z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)", t)


def test_spread(t2_4):
    d = intersection_distribution(subfield(t2_4, 2))
    assert (d.lambdas, d.t, d.orbit_size, d.max_dim) == ((4, 0), 2, 5, 0)
    dd = distance_distribution(d)
    assert dd.delta == {0: 1, 2: 0, 4: 4} and dd.min_distance == 4
    assert pair_counts(d)[4] == 20


def test_example_distributions(u11, u10, t2_14):
    d = intersection_distribution(u11)
    assert d.lambdas == (87048, 1512, 12, 0)
    dd = distance_distribution(d)
    assert dd.delta == {0: 1, 2: 0, 4: 12, 6: 1512, 8: 87048}
    assert dd.min_distance == 4
    assert pair_counts(d)[6] == 88573 * 1512
    assert intersection_distribution(u10).lambdas == (17280, 11520, 720, 0, 3)
    u14 = parse_subspace("z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)", t2_14)
    d14 = intersection_distribution(u14)
    assert d14.lambdas == (5040, 0, 420, 0, 0, 0) and d14.t == 2


def test_partial_spread_min_distance():
    d = IntersectionDistribution((30, 0, 0), 1, 31, 3)
    assert distance_distribution(d).min_distance == 6
    assert distance_distribution(IntersectionDistribution((0,), 1, 1, 1)).min_distance is None


def test_budget(u11):
    with pytest.raises(BudgetExceeded) as exc:
        intersection_distribution(u11, budget=1000)
    assert exc.value.required == 88573
    with pytest.raises(ValueError):
        intersection_distribution(span([], u11.tower))


def test_s_class_examples(u11, u10):
    t = u11.tower
    dims = intersection_dims(u11)
    j = int(next(i for i, d in enumerate(dims) if d == 2))
    cls = s_class(t.power_of_z(j), u11)
    assert len(cls) == 12
    assert all(u11.intersection_dim(v) == 2 for v in cls.members)
    parts = s_partition(u11, 2)
    assert len(parts) == 1 and len(parts[0]) == 12
    assert s_partition(u11, 3) == []
    parts = s_partition(u10, 4)
    assert [len(c) for c in parts] == [3]
    assert u10.tower.degree_over(parts[0].representative) == 2


def test_s_class_errors(u11, t2_14):
    with pytest.raises(AlphaInBaseField):
        s_class(u11.tower.constant(2), u11)
    u14 = parse_subspace("z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)", t2_14)
    with pytest.raises(NotFullLength):
        s_class(t2_14.z, u14)
    cls = s_class(t2_14.z, u14, rebase=True)
    assert len(cls) in (4, 20)


def test_s_class_sizes_even_n(rng):
    t = tower_for(3, 6)
    for _ in range(5):
        u = span([t.power_of_z(int(j)) for j in rng.integers(0, t.group_order, 2)])
        if stabilizer(u).t != 1:
            continue
        g = t.subfield_generator(2)
        assert len(s_class(g, u)) == 3
        assert len(s_class(t.power_of_z(5), u)) == 12


def test_subfield_line_shift_counts(t3_10):
    t16 = tower_for(3, 16)
    u16 = parse_subspace(
        "(2*z^15 + z^10 + 2*z^6 + z^5 + z^4 + z^3 + 2*z + 1)*F(3,2)"
        " + (z^14 + 2*z^12 + z^5 + 2*z^4 + z^2 + 1)*F(3,2) + (z^5+1)*F(3,2) + (z^4+z^3+1)*F(3)",
        t16,
    )
    assert count_subfield_line_shifts(u16, 1) == (3, 91)
    t12 = tower_for(3, 12)
    u12 = parse_subspace("z^6643*(z^2+1)*F(3,2) + z^13286*(z^2+1)*F(3,2) + (z^3+z+1)*F(3,2)", t12)
    assert count_subfield_line_shifts(u12) == (1, 1)
    # a 2-dimensional span of 1 and z is no shift of GF(9) since z has degree 10
    assert count_subfield_line_shifts(parse_subspace("span(1, z)", t3_10)) == (0, 0)
    with pytest.raises(InvalidSubfield):
        count_subfield_line_shifts(parse_subspace("span(z)", tower_for(3, 11)), 1)


def test_trace_dual(t2_6, rng):
    t = t2_6
    assert trace_dual(span([], t)).k == 6
    for _ in range(20):
        u = span([t.power_of_z(int(j)) for j in rng.integers(0, t.group_order, 3)])
        d = trace_dual(u)
        assert d.k == 6 - u.k
        assert trace_dual(d) == u
        for x in u.basis_elements():
            for y in d.basis_elements():
                assert t.trace(t.mul(x, y)) == 0
        a = t.power_of_z(int(rng.integers(0, t.group_order)))
        assert trace_dual(shift(a, u)) == shift(t.inv(a), d)


def test_sidon_examples(u10, t2_6):
    assert not is_sidon(subfield(tower_for(2, 6), 2))
    assert not is_sidon(u10)
    with pytest.raises(OracleScaleExceeded):
        is_sidon_by_definition(span([tower_for(2, 12).power_of_z(j) for j in range(11)]))


SMALL = [(2, 5), (2, 6), (3, 4), (3, 5), (4, 3), (5, 3)]


@st.composite
def subspaces(draw):
    q, n = draw(st.sampled_from(SMALL))
    t = tower_for(q, n)
    k = draw(st.integers(1, n - 1))
    js = draw(st.lists(st.integers(0, t.group_order - 1), min_size=k, max_size=k))
    return span([t.power_of_z(j) for j in js])


@settings(max_examples=100, deadline=None)
@given(subspaces())
def test_distribution_invariants(u):
    if u.k == 0:
        return
    d = intersection_distribution(u)
    assert sum(d.lambdas) == d.orbit_size - 1
    assert all(c == 0 for i, c in enumerate(d.lambdas) if i % d.t)
    dd = distance_distribution(d)
    assert dd.delta[0] == 1
    for i, c in enumerate(d.lambdas):
        assert dd.delta[2 * u.k - 2 * i] == c
    if d.max_dim is not None:
        assert dd.min_distance == 2 * u.k - 2 * d.max_dim
    assert is_sidon(u) == (d.t == 1 and (d.max_dim is None or d.max_dim <= 1))
