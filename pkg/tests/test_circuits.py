from dataclasses import replace
from math import gcd

import pytest

from circuitwalks import (
    enumerate_circuits,
    is_circuit_direction,
    seed_circuits,
    sign_compatible,
    signed_circuit_count,
)
from propsuites import (
    _mk_hrep,
    _oracle_rank,
    check_circuits_against_bruteforce,
)


def square():
    return _mk_hrep([(1, 0), (-1, 0), (0, 1), (0, -1)], [1, 0, 1, 0])


def test_square_circuits_are_the_axes():
    assert {c.g for c in enumerate_circuits(square())} == {(1, 0), (0, 1)}
    assert signed_circuit_count(square()) == 4


def test_circuit_canonical_form(m4):
    cs = enumerate_circuits(m4)
    assert cs == sorted(cs, key=lambda c: c.g)
    for c in cs:
        lead = next(x for x in c.g if x != 0)
        assert lead > 0
        g = 0
        for x in c.g:
            g = gcd(g, abs(x))
        assert g == 1
        zero_rows = [
            m4.rows[i]
            for i in range(m4.num_ineq)
            if sum(a * b for a, b in zip(m4.rows[i], c.g)) == 0
        ]
        assert _oracle_rank(zero_rows) == m4.dim - 1
        assert set(c.witness) <= set(m4.labels)


def test_is_circuit_direction_accepts_signed_multiples():
    p = square()
    assert is_circuit_direction(p, (1, 0))
    assert is_circuit_direction(p, (-3, 0))
    assert not is_circuit_direction(p, (1, 1))
    with pytest.raises(ValueError):
        is_circuit_direction(p, (0, 0))


def test_sign_compatibility():
    assert sign_compatible((1, 0, -2), (2, 0, -1))
    assert not sign_compatible((1, 0), (-1, 0))
    assert sign_compatible((0, 0), (5, -1))


def test_seed_circuits_validates_canonical_order():
    p = square()
    good = enumerate_circuits(p)
    seed_circuits(p, good)
    assert enumerate_circuits(p) == good
    flipped = [replace(good[0], g=(-1, 0))]
    with pytest.raises(ValueError):
        seed_circuits(p, flipped + good[1:])
    with pytest.raises(ValueError):
        seed_circuits(p, list(reversed(good)))


def test_bruteforce_circuit_oracle_suite():
    assert check_circuits_against_bruteforce() == 20
