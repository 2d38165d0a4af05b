"""Hygiene of the shipped data tables."""

import pytest

from e6inv import verify
from e6inv.invariants import elimination_ring, generator_ring, minpoly_ring
from e6inv.tables import Errata, load_table


def test_sigma_table_degrees():
    GEN = generator_ring()
    rows = load_table("sigma_table.txt", 2)
    assert len(rows) == 27
    zero_js = {1, 2, 3, 4, 5, 7, 10, 11, 13, 19}
    for j_text, expr in rows:
        j = int(j_text)
        poly = GEN.parse(expr)
        if j in zero_js:
            assert poly.is_zero(), j
        else:
            assert poly.is_homogeneous() and poly.degree() == j, j


def test_relation_rows_mostly_homogeneous():
    rows = verify.relation_rows()
    inhomogeneous = set()
    for cid, lhs, rhs in rows:
        assert lhs.is_homogeneous()
        if not rhs.is_homogeneous() or (not rhs.is_zero() and rhs.degree() != lhs.degree()):
            inhomogeneous.add(cid)
    # exactly the two displays with degree-garbled terms (see corrections.txt)
    assert inhomogeneous == {"rel:y60*y10", "rel:y64^2"}


def test_minpoly_table_homogeneous():
    MINP = minpoly_ring()
    rows = load_table("minpoly.txt", 2)
    mp = MINP.parse(rows[0][1])
    assert mp.is_homogeneous() and mp.degree() == 33
    # degree 27 in t, leading coefficient block present
    it = MINP.index["t"]
    tmax = max((k >> MINP.shifts[it]) & MINP.masks[it] for k in mp.terms)
    assert tmax == 27


def test_elimination_table_homogeneous():
    ELIM = elimination_ring()
    for cid, lhs_t, rhs_t in load_table("elimination.txt", 3):
        lhs, rhs = ELIM.parse(lhs_t), ELIM.parse(rhs_t)
        assert lhs.is_homogeneous(), cid
        assert rhs.is_homogeneous() and rhs.degree() == lhs.degree(), cid


def test_corrections_parse_and_are_homogeneous():
    GEN = generator_ring()
    errata = Errata.load()
    lhs_by_id = {cid: lhs for cid, lhs, _ in verify.relation_rows()}
    for cid, entry in errata.entries.items():
        assert entry.note, cid
        if cid.startswith("rel:"):
            corrected = GEN.parse(entry.corrected_rhs)
            assert corrected.is_homogeneous(), cid
            assert corrected.degree() == lhs_by_id[cid].degree(), cid


def test_gr_images_table_shape():
    rows = load_table("gr_images.txt", 3)
    assert len(rows) == 20
    assert {r[0] for r in rows} == {"w", "v"}


def test_errata_file_round_trip(tmp_path):
    p = tmp_path / "errata.txt"
    p.write_text("# comment\nrel:test | x4 + 2*x8 | note text | someone\n")
    e = Errata.load(p)
    entry = e.get("rel:test")
    assert entry.corrected_rhs == "x4 + 2*x8"
    assert entry.author == "someone"
    assert e.used == {"rel:test"}
    assert Errata.empty().get("rel:test") is None


def test_bad_table_raises(tmp_path):
    from e6inv.tables import parse_table

    with pytest.raises(ValueError):
        parse_table("only-one-column\n", 2, "x")


@pytest.mark.slow
def test_c_coordinate_term_count():
    # frozen observed value; the published computation reports the same count
    from e6inv import sigma

    assert sigma.count_P_in_c_coordinates(3) == 2600
