"""Reflection endomorphisms: tabulated values, involutivity, hom property."""

import random

import pytest

from e6inv import weyl
from e6inv.poly import StructuralError

R = weyl.base_ring(3)


def rand_poly(rng, nterms=6, maxexp=4):
    f = R.zero()
    for _ in range(rng.randrange(nterms + 1)):
        f = f + R.monomial(
            {v: rng.randrange(maxexp) for v in weyl.BASE_VARS}, rng.randrange(1, 3)
        )
    return f


def test_tabulated_images():
    t1 = R.var("t1")
    assert weyl.apply(3, t1) == R.var("t2")
    assert weyl.apply(2, t1) == -R.var("t2")
    assert weyl.apply(5, R.var("t3")) == R.var("t4")
    c1 = R.linear({f"t{i}": 1 for i in range(1, 6)})
    assert weyl.apply(1, R.var("t")) == R.var("t") - t1 - c1
    assert weyl.apply(1, t1) == -t1 + c1


def test_apply_requires_base_ring():
    from e6inv.poly import PolyRing

    other = PolyRing("other", [("u", 1)], prime=3)
    with pytest.raises(StructuralError):
        weyl.apply(1, other.var("u"))


def test_involution_and_hom():
    rng = random.Random(11)
    for _ in range(15):
        f, g = rand_poly(rng), rand_poly(rng)
        for i in range(1, 7):
            assert weyl.apply(i, weyl.apply(i, f)) == f
            assert weyl.apply(i, f * g) == weyl.apply(i, f) * weyl.apply(i, g)
            assert weyl.apply(i, f + g) == weyl.apply(i, f) + weyl.apply(i, g)


def test_fast_path_equals_substitute():
    rng = random.Random(23)
    for _ in range(10):
        f = rand_poly(rng)
        for i in range(1, 7):
            assert weyl.apply(i, f) == weyl.apply_generic(i, f)


def test_is_invariant_witness(reg):
    ok, witness = weyl.is_invariant(reg["t"], gens=(1,))
    assert not ok
    i, residual = witness
    assert i == 1
    # R1(t) - t = -b
    assert residual == -reg["b"]
    ok, _ = weyl.is_invariant(reg["x4"])
    assert ok


def test_d8_invariance_residual(reg):
    ok, witness = weyl.is_invariant(reg["d8"], gens=(1,))
    assert not ok
    # residual -2 d8 = d8 mod 3
    assert witness[1] == reg["d8"]


def test_symmetric_functions_fixed_by_signed_permutations(reg):
    rng = random.Random(5)
    # any polynomial in the tower generators is fixed by R_2..R_6
    for _ in range(5):
        f = R.one()
        for name in ("p1", "p2", "c5"):
            f = f * (reg[name] ** rng.randrange(2)) if rng.random() < 0.7 else f
        ok, _ = weyl.is_invariant(f, gens=(2, 3, 4, 5, 6))
        assert ok


def test_gf5_action_consistency():
    # the same machinery works for other odd primes
    R5 = weyl.base_ring(5)
    f = R5.parse("t^2 + 3*t1*t2")
    for i in range(1, 7):
        assert weyl.apply(i, weyl.apply(i, f)) == f
        assert weyl.apply(i, f) == weyl.apply_generic(i, f)
