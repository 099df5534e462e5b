from dataclasses import replace
from fractions import Fraction

import pytest

from circuitwalks import (
    BlockedStepError,
    UnboundedDirectionError,
    WalkError,
    antiblocking_walk,
    bounded_depth_search,
    delta0_upper,
    direct_step,
    is_antiblocking,
    normalize_signed,
    one_step_reach,
    take_step,
    two_step_reachable,
    validate_walk,
    walk_from_json,
    walk_to_json,
)
from propsuites import _mk_hrep, check_same_cone_spindle_walks


def square():
    return _mk_hrep([(1, 0), (-1, 0), (0, 1), (0, -1)], [1, 0, 1, 0])


def test_take_step_is_maximal_and_records_entered_rows():
    p = square()
    s = take_step(p, (Fraction(0), Fraction(0)), (1, 0))
    assert s.point == (1, 0)
    assert s.alpha == 1
    assert s.entered == ("1",)
    half = take_step(p, (Fraction(0), Fraction(1, 2)), (1, 0))
    assert half.point == (1, Fraction(1, 2))


def test_take_step_error_cases():
    p = square()
    with pytest.raises(BlockedStepError):
        take_step(p, (Fraction(0), Fraction(0)), (-1, 0))
    ray = _mk_hrep([(-1,)], [0])
    with pytest.raises(UnboundedDirectionError):
        take_step(ray, (Fraction(1),), (1,))
    with pytest.raises(WalkError):
        take_step(p, (Fraction(5), Fraction(0)), (1, 0))


def test_normalize_signed_keeps_direction():
    assert normalize_signed((4, -2)) == (2, -1)
    assert normalize_signed((-4, 2)) == (-2, 1)
    assert normalize_signed((Fraction(1, 3), Fraction(1, 6))) == (2, 1)


def test_validate_walk_detects_tampering():
    p = square()
    w = two_step_reachable(p, (0, 0), (1, 1))
    assert w is not None and len(w.steps) == 2
    assert validate_walk(p, w).ok

    shortened = replace(
        w,
        steps=(replace(w.steps[0], alpha=Fraction(1, 2), point=(Fraction(1, 2), w.steps[0].point[1])),)
        + w.steps[1:],
    )
    assert not validate_walk(p, shortened).ok

    crooked = replace(w, steps=(replace(w.steps[0], g=(1, 1)),) + w.steps[1:])
    report = validate_walk(p, crooked)
    assert not report.ok and not report.circuit_steps


def test_monotone_flag_reflects_objective():
    p = square()
    w = two_step_reachable(p, (0, 0), (1, 1))
    down = validate_walk(p, w.with_objective((-1, -1)))
    assert down.ok and down.monotone is True
    up = validate_walk(p, w.with_objective((1, 1)))
    assert up.monotone is False and not up.ok
    assert validate_walk(p, w).monotone is None


def test_direct_and_one_step_reach():
    p = square()
    s = direct_step(p, (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
    assert s is not None and s.point == (1, 0)
    assert direct_step(p, (Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))) is None
    corner = one_step_reach(p, (Fraction(0), Fraction(0)))
    assert {z for _, z in corner} == {(1, 0), (0, 1)}
    center = one_step_reach(p, (Fraction(1, 2), Fraction(1, 2)))
    assert len(center) == 4


def test_bounded_depth_search():
    p = square()
    assert bounded_depth_search(p, (0, 0), (1, 1), 1) is None
    w = bounded_depth_search(p, (0, 0), (1, 1), 2)
    assert w is not None and len(w.steps) == 2
    assert validate_walk(p, w).ok
    assert w.end == (1, 1)


def test_walk_json_roundtrip():
    p = square()
    w = two_step_reachable(p, (0, 0), (1, 1)).with_objective((-2, -1))
    text = walk_to_json(p, w)
    back = walk_from_json(text)
    assert back == w
    assert validate_walk(p, back).ok


def test_antiblocking_detection():
    assert is_antiblocking(square())
    assert is_antiblocking(
        _mk_hrep([(-1, 0), (0, -1), (1, 2), (2, 1)], [0, 0, 2, 2])
    )
    shifted = _mk_hrep([(1, 0), (-1, 0), (0, 1), (0, -1)], [2, -1, 1, 0])
    assert not is_antiblocking(shifted)
    unbounded = _mk_hrep([(-1, 0), (0, -1)], [0, 0])
    assert not is_antiblocking(unbounded)


def test_antiblocking_walk_zeroes_coordinates():
    p = square()
    w = antiblocking_walk(p, (1, 1), objective=(1, 1))
    assert len(w.steps) == 2
    assert w.end == (0, 0)
    report = validate_walk(p, w)
    assert report.ok and report.monotone is True
    assert w.steps[0].g == (0, -1)
    with pytest.raises(WalkError):
        antiblocking_walk(p, (2, 0))


def test_delta0_upper_bound():
    p = square()
    assert delta0_upper(p, 5) == 2
    assert delta0_upper(p, 1) is None


def test_same_cone_spindle_suite():
    assert check_same_cone_spindle_walks() == 50
