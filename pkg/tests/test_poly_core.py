"""Core sparse-polynomial arithmetic: exactness, canonical form, properties."""

import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from e6inv import backend
from e6inv.poly import PolyRing, RingMismatchError, SparsePoly, StructuralError

R3 = PolyRing("R3", [("t", 1), ("t1", 1), ("t2", 1)], prime=3)
R5 = PolyRing("R5", [("x", 1), ("y", 1)], prime=5)
GRADED = PolyRing("graded", [("t", 1), ("x4", 2), ("x8", 4)], prime=3)
LAURENT = PolyRing(
    "laurent", [("x4", 2), ("x8", 4)], prime=3, invertible=["x4"], width=12
)
Q = PolyRing("Q", [("a", 1), ("b", 1)], prime=0)


def test_add_three_times_is_zero():
    t = R3.var("t")
    assert (t + t * 2).is_zero()


def test_add_identity():
    f = R3.parse("t^2 + 2*t1")
    assert f + R3.zero() == f


def test_add_collects():
    assert R3.parse("t1 + t2") + R3.parse("t2 + t") == R3.parse("t1 + 2*t2 + t")


def test_mul_frobenius_cube():
    f = R3.parse("t1 + t2")
    assert f ** 3 == R3.parse("t1^3 + t2^3")
    assert f.frobenius() == f ** 3


def test_mul_unit():
    f = R3.parse("2*t^3 + t1*t2")
    assert f * R3.one() == f


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        R3.var("t") + R5.var("x")
    with pytest.raises(RingMismatchError):
        R3.var("t") * R5.var("x")


def test_substitute_square():
    f = R3.parse("t^2")
    img = f.substitute({"t": R3.parse("t1 + t2")})
    assert img == R3.parse("t1^2 + 2*t1*t2 + t2^2")


def test_substitute_identity():
    f = R3.parse("2*t*t1 + t2^4")
    ident = {v: R3.var(v) for v in ("t", "t1", "t2")}
    assert f.substitute(ident) == f


def test_substitute_unmapped_errors():
    f = R3.parse("t*t1")
    with pytest.raises(StructuralError):
        f.substitute({"t": R3.var("t2")})


def test_exact_divide_unit_and_witness():
    f = R3.parse("t^2 + t1")
    q, w = f.exact_divide(R3.one())
    assert q == f and w is None
    q, w = R3.parse("t2 + 1").exact_divide(R3.parse("t"))
    assert q is None and not w.is_zero()


def test_graded_component():
    f = GRADED.one() + GRADED.var("x4") + GRADED.var("x8")
    assert f.graded_component(8) == GRADED.var("x8")
    assert f.graded_component(100).is_zero()
    parts = f.graded_parts()
    assert sum(parts.values(), GRADED.zero()) == f
    assert sorted(parts) == [0, 4, 8]


def test_leading_form_single_term():
    x4 = GRADED.var("x4")
    assert x4.leading_form({"t": 5, "x4": 1, "x8": 2}) == x4


def test_leading_form_infinite_weights():
    f = GRADED.parse("x4*t + x8")
    lf = f.leading_form({"t": 0, "x4": None, "x8": 2})
    assert lf == GRADED.var("x8")
    g = GRADED.parse("x4*t + x4^2")
    assert g.leading_form({"t": 0, "x4": None, "x8": 2}).is_zero()
    with pytest.raises(StructuralError):
        GRADED.zero().leading_form({"t": 0, "x4": 1, "x8": 2})


def test_text_round_trip():
    f = GRADED.parse("2*x8^3*t + x4 + 1")
    assert GRADED.parse(f.to_text()) == f
    assert GRADED.zero().to_text() == "0"
    assert GRADED.parse(" x8 ^ 3 \n - 2*x4") == GRADED.parse("x8^3 + x4")


def test_gf5_arithmetic():
    x, y = R5.var("x"), R5.var("y")
    assert (x + y) ** 5 == x ** 5 + y ** 5
    assert (x * 3 + x * 2).is_zero()
    f = (x + y * 2) * (x * 4 + y)
    q, w = f.exact_divide(x + y * 2)
    assert w is None and q == x * 4 + y


def test_laurent_basics():
    x4inv = LAURENT.monomial({"x4": -1})
    assert x4inv * LAURENT.var("x4") == LAURENT.one()
    f = LAURENT.parse("x8*x4^-2 + 2")
    assert LAURENT.parse(f.to_text()) == f
    assert f.degree() == 0
    assert (x4inv ** 2) * LAURENT.monomial({"x4": 2}) == LAURENT.one()


def test_rational_ring():
    a, b = Q.var("a"), Q.var("b")
    f = a * Fraction(1, 2) + b
    assert f * 2 == a + b * 2
    assert (f - f).is_zero()
    g = f.substitute({"a": b, "b": a})
    assert g == b * Fraction(1, 2) + a


def test_fraction_coefficient_mod_p():
    f = R3.monomial({"t": 1}, Fraction(1, 2))
    # 1/2 = 2 mod 3
    assert f == R3.var("t") * 2


names = st.sampled_from(["t", "t1", "t2"])
monomials = st.dictionaries(names, st.integers(min_value=0, max_value=5), max_size=3)
coeffs = st.integers(min_value=0, max_value=2)


@st.composite
def polys(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    f = R3.zero()
    for _ in range(n):
        f = f + R3.monomial(draw(monomials), draw(coeffs))
    return f


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_substitution_is_ring_hom(f, g):
    target = {"t": R3.parse("t1 + 2*t2"), "t1": R3.parse("t*t2"), "t2": R3.var("t")}
    assert (f * g).substitute(target) == f.substitute(target) * g.substitute(target)
    assert (f + g).substitute(target) == f.substitute(target) + g.substitute(target)


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_exact_divide_round_trip(f, g):
    if g.is_zero():
        with pytest.raises(StructuralError):
            f.exact_divide(g)
        return
    q, w = (f * g).exact_divide(g)
    assert w is None and q == f


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_frobenius_is_additive(f, g):
    assert (f + g) ** 3 == f ** 3 + g ** 3


@settings(max_examples=40, deadline=None)
@given(polys())
def test_graded_partition(f):
    parts = f.graded_parts()
    assert sum(parts.values(), R3.zero()) == f
    for d, part in parts.items():
        assert part.is_homogeneous()
        assert part.cohomological_degree() == d or part.is_zero()


@pytest.mark.parametrize("name", ["pure", "compiled"])
def test_backend_equivalence(name):
    if name == "compiled":
        pytest.importorskip("e6inv._speedups")
    previous = backend.K
    try:
        backend.set_backend(name)
        f = GRADED.parse("t^3 + 2*x4*t + x8 + 1")
        g = GRADED.parse("x4^2 + 2*t^2 + x8*t")
        assert (f * g).to_text() == (g * f).to_text()
        assert (f ** 9) == (f ** 3) ** 3
        got = dict((f * g).terms)
    finally:
        backend.K = previous
    from e6inv import _kernels_pure

    assert got == _kernels_pure.mul(f.terms, g.terms, 3, 0)


def test_backends_agree_on_kernel_ops():
    from e6inv import _kernels_pure

    try:
        from e6inv import _speedups
    except ImportError:
        pytest.skip("compiled kernel not built")
    a = GRADED.parse("t^2*x4 + 2*x8 + t + 1").terms
    b = GRADED.parse("2*t*x4^3 + x8^2 + 2").terms
    assert _speedups.mul(a, b, 3, 0) == _kernels_pure.mul(a, b, 3, 0)
    assert _speedups.add_scaled(a, b, 2, 3) == _kernels_pure.add_scaled(a, b, 2, 3)
    assert _speedups.scalar_mul(a, 2, 3) == _kernels_pure.scalar_mul(a, 2, 3)
    assert _speedups.frobenius(a, 3, 0) == _kernels_pure.frobenius(a, 3, 0)
    tables = [None, [(1 << GRADED.shifts[1], 2)], [(0, 1), (2 << GRADED.shifts[1], 2)]]
    args = (GRADED.shifts[0], GRADED.masks[0], tables, 3)
    assert _speedups.apply_var_table(a, *args) == _kernels_pure.apply_var_table(a, *args)
    split_args = (GRADED.nvars, GRADED.shifts, GRADED.masks, GRADED.degrees)
    assert _speedups.graded_split(a, *split_args) == _kernels_pure.graded_split(a, *split_args)
