"""Normal forms, product relations, presentations, the Poincare series."""

import pytest

from e6inv import modstruct as ms
from e6inv import verify
from e6inv.invariants import GENERATORS_13, h_ring
from e6inv.poly import StructuralError
from e6inv.tables import Errata

H = h_ring()


def test_nf_reduced_monomial():
    nf = ms.normal_form(H.parse("t^3*h12^2"))
    assert nf.support() == [(3, 2)]
    assert nf.coefficient(3, 2) == ms.mtilde_ring().one()


def test_nf_t9():
    nf = ms.normal_form(H.parse("t^9"))
    assert ms.expand_normal_form(nf) == ms.h_to_hl(H.parse("t^9"))
    assert nf.min_x4_exponent() < 0
    with pytest.raises(StructuralError):
        ms.normal_form(H.parse("t^9"), allow_x4_inverse=False)


def test_nf_h12_cubed_contains_x36():
    nf = ms.normal_form(H.parse("h12^3"))
    c00 = nf.coefficient(0, 0)
    M = ms.mtilde_ring()
    # the slot contains x36 with unit coefficient
    assert not (c00 - M.var("x36")).terms.get(M.pack([0, 0, 0, 0, 0, 1])), \
        "x36 coefficient should be 1"
    assert ms.expand_normal_form(nf) == ms.h_to_hl(H.parse("h12^3"))


def test_nf_slot_bounds():
    import random

    rng = random.Random(4)
    for _ in range(20):
        f = verify._random_h_element(rng, max_poly_degree=13)
        if f.is_zero():
            continue
        nf = ms.normal_form(f)
        for (i, j) in nf.support():
            assert 0 <= i <= 8 and 0 <= j <= 2
        assert ms.expand_normal_form(nf) == ms.h_to_hl(f)


def test_generators_concentrate_in_slot_00(reg):
    for name in GENERATORS_13:
        nf = ms.normal_form(reg.h_form(name))
        assert nf.is_invariant_shape(), name


def test_non_invariants_have_other_slots():
    assert not ms.is_weyl_invariant_via_nf(H.var("t"))
    assert ms.normal_form(H.var("h12")).support() == [(0, 1)]
    assert not ms.is_weyl_invariant_via_nf(H.var("h12"))
    assert not ms.is_weyl_invariant_via_nf(H.var("h16"))


def test_x48_invariant_via_nf(reg):
    assert ms.is_weyl_invariant_via_nf(reg.h_form("x48"))


def test_normalform_suite(reg):
    checks = verify.suite_normalform(reg, seed=0)
    assert all(c.status == "pass" for c in checks), checks


def test_relations_table_counts():
    rows = verify.relation_rows()
    assert len(rows) == 24
    ids = [r[0] for r in rows]
    assert "rel:y60*y64" in ids and "rel:y76^2" in ids


def test_relations_h_mode(reg):
    checks = verify.suite_relations(reg, Errata.load(), mode="h")
    statuses = {c.check_id: c.status for c in checks}
    assert statuses["rel:y58*y10"] == "pass"
    assert statuses["rel:y60*y64"] == "patched-pass"
    assert statuses["rel:x54*x8^3"] == "patched-pass"
    assert statuses["rel:y64^2"] == "patched-pass"
    bad = [c for c in checks if c.status in ("fail", "bad-erratum")]
    assert not bad, bad


def test_relations_without_errata_shows_failures(reg):
    checks = verify.suite_relations(reg, Errata.empty(), mode="h")
    failing = {c.check_id for c in checks if c.status == "fail"}
    assert failing == {
        "rel:x54*x8^3", "rel:y58*y64", "rel:y58*y76", "rel:y60*y10",
        "rel:y60*y64", "rel:y64^2", "rel:y76^2",
    }
    for c in checks:
        if c.status == "fail":
            assert c.residual  # residual travels with the failure


def test_presentations_suite(reg):
    checks = verify.suite_presentations(reg, Errata.load())
    bad = [c for c in checks if c.status in ("fail", "bad-erratum")]
    assert not bad, bad
    patched = {c.check_id for c in checks if c.status == "patched-pass"}
    assert patched == {"gr_w:y60", "gr_v:y60", "gr_v:y76"}


def test_leading_forms_match_displays(reg):
    # spot checks straight against the shipped table semantics
    got = reg.h_form("x20").leading_form(ms.WEIGHTS_W)
    assert got == H.parse("x4*h16")
    got = reg.h_form("x20").leading_form(ms.WEIGHTS_V)
    assert got == H.parse("x8*h12")
    got = reg.h_form("y22").leading_form(ms.WEIGHTS_W)
    assert got == -(H.var("x4") * H.parse("t^9 - t^3*h12 + t*h16"))
    got = reg.h_form("x36").leading_form(ms.WEIGHTS_W)
    assert got == H.parse("h12^3")


def test_poincare_series_basics():
    ps = ms.poincare_series(40, "primary")
    assert ps[0] == 1
    assert ps[2] == 0
    assert ps[4] == 1
    assert ps[8] == 2
    assert ps[20] == 5
    assert ms.poincare_series(0, "primary") == [1]


def test_poincare_forms_agree_to_100():
    assert ms.poincare_series(100, "primary") == ms.poincare_series(100, "variant")


def test_poincare_nonnegative_to_200():
    ps = ms.poincare_series(200, "primary")
    assert all(c >= 0 for c in ps)
    assert all(ps[i] == 0 for i in range(1, 200, 2))
