"""The linear-algebra dimension oracle against the closed-form series."""

import os

import pytest

from e6inv import dimoracle as dim
from e6inv import weyl
from e6inv.modstruct import poincare_series


def test_trivial_degrees():
    assert dim.invariant_dimension(0) == 1
    assert dim.invariant_dimension(1) == 0
    assert dim.invariant_dimension(2) == 1


def test_slice_sizes():
    assert dim.slice_size(2) == 21
    assert len(dim.slice_keys(3)) == dim.slice_size(3) == 56


def test_sample_basis_degree_two():
    vecs = dim.sample_invariant_basis(2)
    assert len(vecs) == 1
    v = vecs[0]
    # a scalar multiple of t1^2 + ... + t5^2
    R = weyl.base_ring(3)
    x4 = R.parse("t1^2 + t2^2 + t3^2 + t4^2 + t5^2")
    assert v == x4 or v == x4 * 2


def test_sampled_bases_are_invariant():
    for d in (5, 8, 10):
        vecs = dim.sample_invariant_basis(d)
        assert len(vecs) == poincare_series(2 * d, "primary")[2 * d]
        for v in vecs:
            ok, _ = weyl.is_invariant(v)
            assert ok
            assert v.degree() == d


def test_matches_series_to_degree_24():
    ps = poincare_series(24, "primary")
    for d in range(0, 13):
        assert dim.invariant_dimension(d) == ps[2 * d], f"degree {2 * d}"


def test_monotone_sanity():
    for d in (4, 9):
        assert dim.invariant_dimension(d) <= dim.slice_size(d)


def test_cap_enforced():
    with pytest.raises(RuntimeError):
        dim.invariant_dimension(25, cap=1000)


def test_other_prime_runs():
    # the oracle is prime-generic (reflections reduce mod any odd prime)
    assert dim.invariant_dimension(0, p=5) == 1
    assert dim.invariant_dimension(2, p=5) >= 1


@pytest.mark.slow
def test_matches_series_to_degree_60_stretch():
    os.environ["E6INV_ORACLE_CAP"] = "400000"
    ps = poincare_series(60, "primary")
    try:
        for d in range(21, 31):
            got = dim.invariant_dimension(d, cap=400000)
            assert got == ps[2 * d], f"degree {2 * d}"
    finally:
        os.environ.pop("E6INV_ORACLE_CAP", None)
