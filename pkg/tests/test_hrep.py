from fractions import Fraction

import pytest

from circuitwalks import (
    BUNDLED,
    HRep,
    HRepError,
    apply_linear_map,
    bundled_text,
    hrep_equivalent,
    int_positive_scale,
    is_bounded,
    is_facet_defining,
    load,
    parse_hrep,
    recession_extreme_rays,
    wedge_over_facet,
    write_hrep,
)
from propsuites import _mk_hrep


def cube():
    return _mk_hrep(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        [1, 0, 1, 0, 1, 0],
    )


def test_entries_are_negated_in_the_text_format():
    p = parse_hrep("H\n1 2\nr 5 -2 -3\nEND\n")
    assert p.rows == ((Fraction(2), Fraction(3)),)
    assert p.rhs == (Fraction(5),)
    assert p.labels == ("r",)
    assert p.contains((1, 1))
    assert p.tight_labels((1, 1)) == ("r",)
    assert not p.contains((2, 1))


def test_parse_write_roundtrip_on_bundled():
    for name in BUNDLED:
        p = load(name)
        assert parse_hrep(write_hrep(p)) == p
        assert parse_hrep(bundled_text(name)) == p


def test_parse_rejects_malformed_input():
    with pytest.raises(HRepError):
        parse_hrep("H\n2 2\nr 1 -1 -1\nEND\n")  # row count mismatch
    with pytest.raises(HRepError):
        parse_hrep("H\n1 2\nr 1 -1\nEND\n")  # entry count mismatch
    with pytest.raises(HRepError):
        parse_hrep("H\n1 2\nr 1 -1 -x\nEND\n")  # non-numeric entry


def test_duplicate_labels_rejected():
    with pytest.raises(HRepError):
        HRep(
            dim=1,
            rows=((Fraction(1),), (Fraction(-1),)),
            rhs=(Fraction(1), Fraction(0)),
            labels=("a", "a"),
        )


def test_boundedness_and_recession():
    assert is_bounded(cube())
    ray = _mk_hrep([(-1, 0), (0, -1)], [0, 0])
    assert not is_bounded(ray)
    lineality, rays = recession_extreme_rays(ray)
    assert sorted(rays) == [(0, 1), (1, 0)]
    assert lineality == []
    slab = _mk_hrep([(1, 0), (-1, 0)], [1, 0])
    lineality, rays = recession_extreme_rays(slab)
    assert rays == []
    assert lineality == [(0, 1)]


def test_sub_keeps_named_rows():
    p = cube()
    q = p.sub(["1", "3", "5"])
    assert q.num_ineq == 3
    assert q.labels == ("1", "3", "5")
    assert not is_bounded(q)


def test_hrep_equivalent_modulo_scaling_and_labels():
    p = cube()
    scaled = HRep(
        dim=3,
        rows=tuple(tuple(3 * x for x in r) for r in p.rows),
        rhs=tuple(3 * d for d in p.rhs),
        labels=tuple(f"s{i}" for i in range(6)),
    )
    mapping = hrep_equivalent(p, scaled)
    assert mapping is not None
    assert sorted(mapping) == sorted(p.labels)
    pentagon = _mk_hrep([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], [3, 3, 0, 0, 5])
    assert hrep_equivalent(p, _mk_hrep([(1, 0, 0)], [1])) is None
    assert hrep_equivalent(pentagon, _mk_hrep([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 1, 0, 0])) is None


def test_apply_linear_map_coordinate_swap():
    p = cube()
    t = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    q = apply_linear_map(p, t)
    assert hrep_equivalent(q, p) is not None
    assert q.contains((Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))


def test_int_positive_scale():
    assert int_positive_scale((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)
    assert int_positive_scale((Fraction(-2), Fraction(4))) == (-1, 2)


def test_wedge_shape_on_cube():
    p = cube()
    w = wedge_over_facet(p, "1")
    assert w.dim == 4
    assert w.num_ineq == 7
    assert is_bounded(w)
    assert w.labels[-1] == "t"
    assert all(is_facet_defining(w, lab) for lab in w.labels)


def test_wedge_rejects_redundant_row():
    p = _mk_hrep(
        [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)],
        [1, 1, 0, 0, 5],
    )
    assert not is_facet_defining(p, "5")
    with pytest.raises(HRepError):
        wedge_over_facet(p, "5")


def test_equality_rows_parse_and_restrict():
    text = "H\n2 2\na 1 -1 0\nb 1 0 -1\nLIN 1\ne 1 -1 -1\nEND\n"
    p = parse_hrep(text)
    assert p.eq_rows == ((Fraction(1), Fraction(1)),)
    assert p.contains((Fraction(1, 2), Fraction(1, 2)))
    assert not p.contains((0, 0))
    assert parse_hrep(write_hrep(p)) == p
