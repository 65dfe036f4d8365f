import pytest

from borel_orbits import build_root_system, min_elements
from borel_orbits.ideals import (
    abelian_nilradicals,
    enumerate_abelian_ideals,
    ideal_from_shape,
    maximal_abelian_ideals,
)
from borel_orbits.orbits import (
    borel_index,
    dim_estimate_report,
    kostant_cascade,
    krull_dims,
    lower_canonical,
    orbit_dims,
    orbit_record,
    pyasetskii_dual,
    pyasetskii_map,
    pyasetskii_report,
    residual_set,
    shift_down,
    shift_up,
    strongly_orth_subsets,
    upper_canonical,
)


def eps(rs, text):
    return frozenset(rs.parse_root(t) for t in text.split(",") if t)


def labels(rs, roots):
    return sorted(rs.root_label(i) for i in roots)


@pytest.fixture(scope="module")
def a5():
    return build_root_system("A5")


@pytest.fixture(scope="module")
def shape331(a5):
    return ideal_from_shape(a5, [3, 3, 1])


def test_subset_counts(a5, shape331):
    subsets = strongly_orth_subsets(a5, shape331)
    assert len(subsets) == 20
    assert sum(1 for s in subsets if not s) == 1
    assert sum(1 for s in subsets if len(s) == 1) == len(shape331)
    # deterministic order: by size then indices
    keyed = [(len(s), sorted(s)) for s in subsets]
    assert keyed == sorted(keyed)


def test_g2_subsets():
    rs = build_root_system("G2")
    ideal = maximal_abelian_ideals(rs)[0]
    assert [len(s) for s in strongly_orth_subsets(rs, ideal)] == [0, 1, 1, 1]


def test_shift_up_examples(a5, shape331):
    assert shift_up(a5, frozenset()) == frozenset()
    assert shift_up(a5, {a5.theta_index}) == frozenset()
    s = eps(a5, "e1-e4,e2-e6")
    assert shift_up(a5, s) == eps(a5, "e1-e5,e1-e6")


def test_shift_down_examples(a5, shape331):
    assert shift_down(a5, shape331, frozenset()) == frozenset()
    # (theta - positives) inside the ideal, computed by hand on the 7 roots
    assert shift_down(a5, shape331, {a5.theta_index}) == \
        eps(a5, "e1-e4,e1-e5,e2-e6,e3-e6")
    d4 = build_root_system("D4")
    a = next(x for x in maximal_abelian_ideals(d4) if len(x) == 5)
    s = min_elements(d4, a)
    assert shift_down(d4, a, s) == frozenset()
    assert orbit_dims(d4, a, s) == (5, 3)


def test_warning_shift_down_is_within_ideal_not_positives(a5, shape331):
    # (S - positives) meets Delta+ in more roots than the ideal keeps
    s = {a5.theta_index}
    inside = shift_down(a5, shape331, s)
    in_positives = {a5.diff_index[a5.theta_index][d]
                    for d in range(a5.num_positive)} - {-1}
    assert inside < frozenset(in_positives)


def test_orbit_dims_dense(a5, shape331):
    assert orbit_dims(a5, shape331, frozenset()) == (0, 0)
    cl = lower_canonical(a5, shape331)
    assert orbit_dims(a5, shape331, cl)[0] == len(shape331)
    cu = upper_canonical(a5, shape331)
    assert orbit_dims(a5, shape331, cu)[1] == len(shape331)


def test_canonical_sets_running_example(a5, shape331):
    assert lower_canonical(a5, shape331) == eps(a5, "e2-e4,e3-e6,e1-e5")
    assert upper_canonical(a5, shape331) == eps(a5, "e1-e6,e2-e5")


def test_lower_canonical_g2_and_theta():
    g2 = build_root_system("G2")
    ideal = maximal_abelian_ideals(g2)[0]
    # min is the single root [2,1]; its hooks cover the other two
    assert lower_canonical(g2, ideal) == frozenset([g2.index_of((2, 1))])
    rs = build_root_system("B3")
    assert lower_canonical(rs, frozenset([rs.theta_index])) == \
        frozenset([rs.theta_index])


def test_upper_canonical_rejects_sum_closed_carriers():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        upper_canonical(rs, frozenset(rs.simple_indices))


def test_upper_canonical_on_residual_set(a5, shape331):
    s = eps(a5, "e1-e4,e2-e6")
    j = residual_set(a5, shape331, s)
    assert j == eps(a5, "e2-e4,e2-e5,e3-e6")
    assert upper_canonical(a5, j) == eps(a5, "e2-e5,e3-e6")


@pytest.mark.parametrize("typ,expected", [
    ("A1", ["e1-e2"]),
    ("A5", ["e1-e6", "e2-e5", "e3-e4"]),
    ("C4", ["2e1", "2e2", "2e3", "2e4"]),
    ("B2", ["e1+e2", "e1-e2"]),
])
def test_kostant_cascade(typ, expected):
    rs = build_root_system(typ)
    assert labels(rs, kostant_cascade(rs)) == expected


def test_cascade_restriction_to_ideals():
    for typ in ("A4", "B3", "C3", "D4", "G2", "F4"):
        rs = build_root_system(typ)
        cascade = kostant_cascade(rs)
        for a in enumerate_abelian_ideals(rs):
            if a:
                assert upper_canonical(rs, a) == cascade & a


def test_pyasetskii_extremes(a5, shape331):
    assert pyasetskii_dual(a5, shape331, frozenset()) == \
        upper_canonical(a5, shape331)
    assert pyasetskii_dual(a5, shape331, lower_canonical(a5, shape331)) == frozenset()


def test_pyasetskii_running_example(a5, shape331):
    s = eps(a5, "e1-e4,e2-e6")
    assert pyasetskii_dual(a5, shape331, s) == eps(a5, "e2-e5,e3-e6")


def test_pyasetskii_bijective_small_rank():
    for typ in ("A3", "B3", "C3", "G2", "D4"):
        rs = build_root_system(typ)
        for a in enumerate_abelian_ideals(rs):
            if not a:
                continue
            report = pyasetskii_report(rs, a)
            assert report["bijective"], (typ, sorted(a))


def test_dual_orbit_dimension_lower_bound(a5, shape331):
    # the dual orbit is dense in the annihilator of the tangent space
    for typ in ("A3", "B3", "C3", "G2"):
        rs = build_root_system(typ)
        for a in enumerate_abelian_ideals(rs):
            for s in strongly_orth_subsets(rs, a):
                dual = pyasetskii_dual(rs, a, s)
                da, _ = orbit_dims(rs, a, s)
                _, ds = orbit_dims(rs, a, dual)
                assert ds >= len(a) - da


def test_krull_dims_and_codim1(a5, shape331):
    assert krull_dims(a5, shape331) == (3, 2)
    c2 = build_root_system("C2")
    anr = dict(abelian_nilradicals(c2))[1]
    assert krull_dims(c2, anr) == (2, 2)


def test_borel_index():
    for n in range(2, 9):
        assert borel_index(build_root_system(f"A{n - 1}")) == (n - 1) // 2
    for n in range(2, 7):
        assert borel_index(build_root_system(f"C{n}")) == 0
    assert borel_index(build_root_system("A1")) == 0


def test_dim_estimate():
    a3 = build_root_system("A3")
    # the 2x2 rectangle has the maximal dimension [16/4] = 4
    best = next(a for a in maximal_abelian_ideals(a3) if len(a) == 4)
    est = dim_estimate_report(a3, best)
    assert est.equality and est.cascade_inside
    c3 = build_root_system("C3")
    est = dim_estimate_report(c3, maximal_abelian_ideals(c3)[0])
    assert est.lhs == est.rhs == 12
    g2 = build_root_system("G2")
    est = dim_estimate_report(g2, maximal_abelian_ideals(g2)[0])
    assert (est.lhs, est.rhs, est.equality) == (6, 8, False)


def test_anr_canonical_sets_long_and_equal():
    for typ, node in [("B3", 0), ("C3", 2), ("D4", 0), ("E6", 0)]:
        rs = build_root_system(typ)
        ideal = dict(abelian_nilradicals(rs))[node]
        cl = lower_canonical(rs, ideal)
        cu = upper_canonical(rs, ideal)
        assert len(cl) == len(cu)
        assert all(rs.long[i] for i in cl | cu)


def test_orbit_record_fields(a5, shape331):
    s = eps(a5, "e1-e4,e2-e6")
    rec = orbit_record(a5, shape331, s)
    assert rec.dim_in_a == len(s) + len(rec.m_up)
    assert rec.dim_in_a_star == len(s) + len(rec.m_down)
    assert set(rec.j_set) == set(shape331) - set(rec.orth_set) - set(rec.m_up)
    assert rec.sigma_abs_length == 2
    data = rec.to_json(a5)
    assert data["dual"] == ["e2-e5", "e3-e6"]


def test_pyasetskii_map_full_table(a5, shape331):
    table = pyasetskii_map(a5, shape331)
    assert len(table) == 20
    assert table[frozenset()] == upper_canonical(a5, shape331)
