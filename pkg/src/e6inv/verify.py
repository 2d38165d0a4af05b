"""Verification suites: every displayed identity, checked exactly.

Each suite returns a list of CheckResult.  All polynomial checks are exact
comparisons in GF(3)[t, t1..t5] (or in the stated abstract ring); residual
polynomials accompany failures.  Checks whose printed form fails consult
the errata table: a verifying correction downgrades the failure to
patched-pass, a non-verifying correction is reported as bad-erratum.
"""

from __future__ import annotations

import random
import time
from functools import lru_cache

from e6inv import dimoracle, modstruct, sigma, weyl
from e6inv.invariants import (
    GENERATORS_13,
    Registry,
    elimination_ring,
    generator_ring,
    h_ring,
    minpoly_ring,
)
from e6inv.poly import PolyRing, SparsePoly
from e6inv.report import CheckResult
from e6inv.tables import Errata, load_table


def _residual_text(res: SparsePoly, limit: int = 400) -> str:
    text = res.to_text()
    if len(text) > limit:
        return f"({len(res)} terms) " + text[: limit] + "..."
    return text


def _residual_check(cid: str, desc: str, residual: SparsePoly, t0: float,
                    note: str | None = None) -> CheckResult:
    ok = residual.is_zero()
    return CheckResult(
        cid, desc, "pass" if ok else "fail",
        residual=None if ok else _residual_text(residual),
        note=note, elapsed_ms=(time.monotonic() - t0) * 1000,
    )


# -- action tables ---------------------------------------------------------------


def _tabulated_action(i: int, ring) -> dict[str, SparsePoly]:
    """The hand-tabulated mod-3 substitution maps for R_1..R_6."""
    c1 = ring.linear({f"t{k}": 1 for k in range(1, 6)})
    t = ring.var("t")
    ts = {k: ring.var(f"t{k}") for k in range(1, 6)}
    m = {"t": t, **{f"t{k}": ts[k] for k in range(1, 6)}}
    if i == 1:
        m["t"] = t - ts[1] - c1
        m["t1"] = -ts[1] + c1
        for k in range(2, 6):
            m[f"t{k}"] = ts[k] - ts[1] - c1
    elif i == 2:
        m["t1"], m["t2"] = -ts[2], -ts[1]
    else:
        a, b = i - 2, i - 1
        m[f"t{a}"], m[f"t{b}"] = ts[b], ts[a]
    return m


def suite_action_tables(reg: Registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    ring = reg.ring
    for i in range(1, 7):
        t0 = time.monotonic()
        want = _tabulated_action(i, ring)
        got = weyl.substitution_map(i, reg.prime)
        diff = ring.zero()
        for v in weyl.BASE_VARS:
            diff = diff + (got[v] - want[v])
        checks.append(_residual_check(
            f"table:R{i}",
            f"tabulated action of R_{i} equals the root-system reduction",
            diff, t0,
        ))

    e = {n: reg[n] for n in reg.names()}
    t, b = e["t"], e["b"]
    c1, c3, c5 = e["c1"], e["c3"], e["c5"]
    p1, p2, p3, p4 = e["p1"], e["p2"], e["p3"], e["p4"]
    d8 = e["d8"]

    idents = [
        ("ident:c2", "c2 = p1 - c1^2", e["c2"] - (p1 - c1 ** 2)),
        ("ident:c4", "c4 = -p2 + c1^4 + c1^2 p1 + c1 c3 + p1^2",
         e["c4"] - (-p2 + c1 ** 4 + c1 ** 2 * p1 + c1 * c3 + p1 ** 2)),
        ("ident:c3c5", "c3 c5 = p4 - c4^2", c3 * c5 - (p4 - e["c4"] ** 2)),
        ("ident:c3sq",
         "c3^2 = p3 + c1^6 + c1^3 c3 - c1^2 p2 - c1 c3 p1 + c1 c5 - p1^3 + p1 p2",
         c3 ** 2 - (p3 + c1 ** 6 + c1 ** 3 * c3 - c1 ** 2 * p2 - c1 * c3 * p1
                    + c1 * c5 - p1 ** 3 + p1 * p2)),
        ("ident:b5", "fifth-power relation for b = t1 + c1",
         b ** 5 - ((-c1 ** 5 - c1 ** 3 * p1 - c1 ** 2 * c3 + c1 * p1 ** 2
                    - c1 * p2 + c5)
                   + b * (-c1 ** 4 - c1 ** 2 * p1 - p1 ** 2 + p2)
                   + b ** 2 * (c1 ** 3 + c3) - b ** 3 * (c1 ** 2 + p1))),
        ("ident:x20y10", "-x20 y10 + y22 x8 + y26 x4 = 0",
         -(e["x20"] * e["y10"]) + e["y22"] * e["x8"] + e["y26"] * e["x4"]),
    ]
    for cid, desc, res in idents:
        checks.append(_residual_check(cid, desc, res, time.monotonic()))

    A = lambda f: weyl.apply(1, f)
    images = [
        ("act1:t", "R1(t) = t - b", A(t) - (t - b)),
        ("act1:b", "R1(b) = -b", A(b) + b),
        ("act1:c1", "R1(c1) = c1", A(c1) - c1),
        ("act1:p1", "R1(p1) = p1", A(p1) - p1),
        ("act1:p2", "R1(p2) = p2", A(p2) - p2),
        ("act1:c3", "R1(c3) = c3 - b(c1^2 + p1) + b^3",
         A(c3) - (c3 - b * (c1 ** 2 + p1) + b ** 3)),
        ("act1:c5", "R1(c5) = c5 + b(p1^2 - p2) - b^3 p1",
         A(c5) - (c5 + b * (p1 ** 2 - p2) - b ** 3 * p1)),
        ("act1:p3", "R1(p3) = p3 + b(-c1^3 p1 - c1 p1^2 + c3 p1 + c5) + ...",
         A(p3) - (p3 + b * (-c1 ** 3 * p1 - c1 * p1 ** 2 + c3 * p1 + c5)
                  + b ** 2 * (c1 ** 2 * p1 + p2) - b ** 3 * c1 * p1)),
        ("act1:p4", "R1(p4) = p4 + b(...) + b^2(...) + b^3(...) + b^4(...)",
         A(p4) - (p4
                  + b * (-c1 ** 5 * p1 + c1 ** 3 * p1 ** 2 + c1 ** 3 * p2
                         - c1 ** 2 * c3 * p1 + c3 * p1 ** 2 - c3 * p2 + c5 * p1)
                  + b ** 2 * (-c1 ** 4 * p1 - c1 ** 2 * p2)
                  + b ** 3 * (c1 ** 3 * p1 - c1 * p1 ** 2 + c1 * p2
                              + c3 * p1 + c5)
                  + b ** 4 * (-c1 ** 2 * p1 - p2))),
        ("act1:h12", "R1(h12) = h12 + d8 x4", A(e["h12"]) - (e["h12"] + d8 * e["x4"])),
        ("act1:h16", "R1(h16) = h16 - d8 x8", A(e["h16"]) - (e["h16"] - d8 * e["x8"])),
        ("act1:d8", "R1(d8) = -d8", A(d8) + d8),
        ("act1:h18", "R1(h18) = h18 + d8 y10", A(e["h18"]) - (e["h18"] + d8 * e["y10"])),
        ("act1:g24", "R1(g24) = g24 + d8^3 - d8^2 x8 - d8 h16 + d8 x8^2",
         A(e["g24"]) - (e["g24"] + d8 ** 3 - d8 ** 2 * e["x8"]
                        - d8 * e["h16"] + d8 * e["x8"] ** 2)),
    ]
    for cid, desc, res in images:
        checks.append(_residual_check(cid, desc, res, time.monotonic()))

    for name in ("p1", "p2", "p3", "p4", "c5"):
        t0 = time.monotonic()
        ok, witness = weyl.is_invariant(reg[name], gens=(2, 3, 4, 5, 6))
        res = reg.ring.zero() if ok else witness[1]
        checks.append(_residual_check(
            f"tower:{name}", f"{name} is fixed by R_2..R_6", res, t0,
        ))
    return checks


# -- definitions and division forms ----------------------------------------------


def suite_definitions(reg: Registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for name in reg.names():
        el = reg.element(name)
        t0 = time.monotonic()
        ok = (
            not el.value.is_zero()
            and el.value.is_homogeneous()
            and el.value.cohomological_degree() == el.cohomological_degree
        )
        checks.append(CheckResult(
            f"deg:{name}",
            f"{name} is homogeneous of cohomological degree {el.cohomological_degree}",
            "pass" if ok else "fail",
            elapsed_ms=(time.monotonic() - t0) * 1000,
        ))

    e = {n: reg[n] for n in reg.names()}
    t = e["t"]
    x4, x8, y10 = e["x4"], e["x8"], e["y10"]
    x20, y22, y26 = e["x20"], e["y22"], e["y26"]
    x36, x48, x54 = e["x36"], e["x48"], e["x54"]
    y58, y60, y64, y76 = e["y58"], e["y60"], e["y64"], e["y76"]
    h12 = e["h12"]

    t0 = time.monotonic()
    res = y22 - ((y10 + t * x8 + t ** 3 * x4) * h12 - t * (x20 - x4 * x8 ** 2)
                 - t ** 3 * x4 ** 2 * x8 - t ** 5 * x4 * x8 + t ** 7 * x4 ** 2
                 - t ** 9 * x4)
    checks.append(_residual_check(
        "ident:y22-linear", "y22 from the h12-linear expansion", res, t0))

    # quotient forms; small ones exercise exact division, large ones the
    # equivalent product identity (x4 is a nonzerodivisor)
    for cid, num, power, expect in [
        ("div:y26", x20 * y10 - y22 * x8, 1, y26),
        ("div:x48", -(x36 * x8 ** 3) + x20 ** 3 + x20 ** 2 * x4 * x8 ** 2
         + x20 * x4 ** 2 * x8 ** 4, 3, x48),
        ("div:x54", x36 * y10 ** 3 - y22 ** 3 + x20 * y22 * x4 * y10 ** 2
         + y22 ** 2 * x4 * x8 * y10 - y22 * x4 ** 2 * x8 ** 2 * y10 ** 2, 3, x54),
    ]:
        t0 = time.monotonic()
        q, witness = num.exact_divide(x4 ** power)
        if q is None:
            checks.append(CheckResult(
                cid, f"{cid[4:]} quotient form divides exactly", "fail",
                residual=_residual_text(witness),
                elapsed_ms=(time.monotonic() - t0) * 1000,
            ))
        else:
            checks.append(_residual_check(
                cid, f"{cid[4:]} quotient form (exact division)", q - expect, t0))

    for cid, num, power, expect in [
        ("div:y58", x36 * x8 ** 2 * y10 - x20 ** 2 * y22, 1, y58),
        ("div:y64.a", y58 * y10 - x20 * y22 * y26 - y22 ** 2 * x8 ** 3, 1, y64),
        ("div:y64.b", x36 * x8 ** 2 * y10 ** 2 + x20 ** 2 * y22 * y10
         + x20 * y22 ** 2 * x8 - y22 ** 2 * x4 * x8 ** 3, 2, y64),
        ("div:y60", x36 * x8 * y10 ** 2 - x20 * y22 ** 2, 1, y60),
        ("div:y76.a", y58 * y22 + y60 * x20 + x20 * y22 ** 2 * x8 ** 2, 1, y76),
        ("div:y76.b", x36 * x20 * x8 * y10 ** 2 + x36 * y22 * x8 ** 2 * y10
         + x20 ** 2 * y22 ** 2 + x20 * y22 ** 2 * x4 * x8 ** 2, 2, y76),
    ]:
        t0 = time.monotonic()
        res = num - expect * x4 ** power
        checks.append(_residual_check(
            cid, f"{cid[4:]} quotient form (product identity)", res, t0))
    return checks


def suite_invariance(reg: Registry) -> list[CheckResult]:
    checks = []
    for name in GENERATORS_13:
        t0 = time.monotonic()
        ok, witness = weyl.is_invariant(reg[name])
        res = reg.ring.zero() if ok else witness[1]
        note = None if ok else f"fails under R_{witness[0]}"
        checks.append(_residual_check(
            f"inv:{name}", f"{name} is fixed by all six reflections",
            res, t0, note=note,
        ))
    return checks


# -- sigma table -----------------------------------------------------------------


def suite_sigma(reg: Registry, errata: Errata) -> list[CheckResult]:
    checks: list[CheckResult] = []
    t0 = time.monotonic()
    ok = sigma.labelings_agree(reg.prime)
    checks.append(CheckResult(
        "sigma:labelings",
        "the two published descriptions of S give the same 27 linear forms",
        "pass" if ok else "fail",
        elapsed_ms=(time.monotonic() - t0) * 1000,
    ))

    P = sigma.expand_P(reg.prime)
    for i in range(1, 7):
        t0 = time.monotonic()
        res = weyl.apply(i, P) - P
        checks.append(_residual_check(
            f"sigma:P-R{i}", f"the product P is fixed by R_{i}", res, t0))

    expected = sigma.sigma_expected(reg)
    gmap = reg.generator_evaluation_map()
    for j in range(1, 28):
        t0 = time.monotonic()
        comp = P.graded_component(2 * j)
        want = expected[j].substitute(gmap) if not expected[j].is_zero() else reg.ring.zero()
        checks.append(_apply_errata(
            f"sigma:{j}", f"degree-{2 * j} part of P equals the table entry",
            comp - want, t0, errata,
            corrected_residual=lambda text: comp - generator_ring().parse(text).substitute(gmap),
        ))

    emap = {n: reg[n] for n in elimination_ring().varnames}
    for cid, lhs, rhs in sigma.elimination_rows(reg):
        t0 = time.monotonic()
        res = lhs.substitute(emap) - rhs.substitute(emap)
        checks.append(_residual_check(
            cid, f"elimination identity {cid.split(':')[1]}", res, t0))

    e = {n: reg[n] for n in reg.names()}
    t = e["t"]
    rules = [
        ("rule:t9", "t^9 reduction",
         t ** 9 - (e["h18"] + t ** 7 * e["x4"] - t ** 5 * e["x8"] + t ** 3 * e["h12"]
                   - t ** 3 * e["x4"] * e["x8"] - t * e["h16"] + t * e["x8"] ** 2)),
        ("rule:h18x8", "h18 x8 = -h16 y10 + y26",
         e["h18"] * e["x8"] + e["h16"] * e["y10"] - e["y26"]),
        ("rule:h18x4", "h18 x4 = h12 y10 - y22",
         e["h18"] * e["x4"] - e["h12"] * e["y10"] + e["y22"]),
        ("rule:h16x4", "h16 x4 = -h12 x8 + x20",
         e["h16"] * e["x4"] + e["h12"] * e["x8"] - e["x20"]),
        ("rule:y26x4", "y26 x4 = x20 y10 - y22 x8",
         e["y26"] * e["x4"] - e["x20"] * e["y10"] + e["y22"] * e["x8"]),
        ("rule:h18x20", "h18 x20 = h12 y26 - h16 y22",
         e["h18"] * e["x20"] - e["h12"] * e["y26"] + e["h16"] * e["y22"]),
        ("rule:t9x4", "t^9 x4 basis reduction",
         t ** 9 * e["x4"] - (t ** 7 * e["x4"] ** 2 - t ** 5 * e["x4"] * e["x8"]
                             + t ** 3 * e["h12"] * e["x4"]
                             - t ** 3 * e["x4"] ** 2 * e["x8"]
                             + t * e["h12"] * e["x8"] - t * e["x20"]
                             + t * e["x4"] * e["x8"] ** 2
                             + e["h12"] * e["y10"] - e["y22"])),
        ("rule:h12cubed", "h12^3 basis reduction",
         e["h12"] ** 3 - (-(t ** 8) * e["x4"] ** 3 * e["x8"]
                          + t ** 7 * e["x4"] ** 3 * e["y10"]
                          - t ** 6 * e["x4"] ** 6 + t ** 6 * e["x4"] ** 4 * e["x8"]
                          + t ** 4 * e["x4"] ** 5 * e["x8"]
                          - t ** 4 * e["x4"] ** 3 * e["x8"] ** 2
                          + t ** 3 * e["h12"] * e["x4"] ** 2 * e["y10"]
                          - t ** 3 * e["y22"] * e["x4"] ** 2
                          + t ** 3 * e["x4"] ** 5 * e["y10"]
                          - t ** 3 * e["x4"] ** 3 * e["x8"] * e["y10"]
                          + t ** 2 * e["x20"] * e["x4"] ** 3
                          - t ** 2 * e["x4"] ** 3 * e["y10"] ** 2
                          - t * e["y22"] * e["x4"] ** 3
                          - t * e["x4"] ** 4 * e["x8"] * e["y10"]
                          + e["h12"] ** 2 * e["x4"] * e["x8"]
                          + e["h12"] * e["x20"] * e["x4"]
                          - e["h12"] * e["x4"] ** 2 * e["x8"] ** 2 + e["x36"])),
    ]
    for cid, desc, res in rules:
        checks.append(_residual_check(cid, desc, res, time.monotonic()))
    return checks


# -- minimal polynomial ------------------------------------------------------------


def suite_minpoly(reg: Registry) -> list[CheckResult]:
    checks = []
    MINP = minpoly_ring()
    rows = load_table("minpoly.txt", 2)
    mp = MINP.parse(rows[0][1])
    emap = {n: reg[n] for n in MINP.varnames}
    t0 = time.monotonic()
    checks.append(_residual_check(
        "minpoly:vanishes",
        "the degree-27 algebraic relation for t evaluates to zero",
        mp.substitute(emap), t0,
    ))
    t0 = time.monotonic()
    it = MINP.index["t"]
    lead = MINP.zero()
    for k, c in mp.terms.items():
        if ((k >> MINP.shifts[it]) & MINP.masks[it]) == 27:
            lead = lead + MINP.from_terms({k - MINP.pack([27, 0, 0, 0, 0, 0, 0]): c})
    res = lead.substitute(emap) + reg["x4"] ** 3
    checks.append(_residual_check(
        "minpoly:leading", "the t^27 coefficient is -x4^3", res, t0))
    t0 = time.monotonic()
    e = {n: reg[n] for n in ("t", "x4", "x8", "y10", "x20", "y22", "h12")}
    res = (e["y10"] + e["t"] * e["x8"] + e["t"] ** 3 * e["x4"]) * e["h12"] - (
        e["y22"] + e["t"] * (e["x20"] - e["x4"] * e["x8"] ** 2)
        + e["t"] ** 3 * e["x4"] ** 2 * e["x8"] + e["t"] ** 5 * e["x4"] * e["x8"]
        - e["t"] ** 7 * e["x4"] ** 2 + e["t"] ** 9 * e["x4"]
    )
    checks.append(_residual_check(
        "minpoly:h12-linear", "the h12-linear relation behind the bound", res, t0))
    return checks


# -- product relations (with errata) ------------------------------------------------


def _apply_errata(cid, desc, residual, t0, errata: Errata, corrected_residual):
    """Turn a residual into a check, consulting the errata table on failure."""
    if residual.is_zero():
        entry = errata.entries.get(cid)
        if entry is not None:
            # an erratum for a passing check must itself verify
            res2 = corrected_residual(entry.corrected_rhs)
            if not res2.is_zero():
                return CheckResult(
                    cid, desc, "bad-erratum",
                    residual=_residual_text(res2),
                    note=f"check passes as printed but erratum does not verify: {entry.note}",
                    elapsed_ms=(time.monotonic() - t0) * 1000,
                )
        return CheckResult(cid, desc, "pass",
                           elapsed_ms=(time.monotonic() - t0) * 1000)
    entry = errata.get(cid)
    if entry is None:
        return CheckResult(
            cid, desc, "fail", residual=_residual_text(residual),
            elapsed_ms=(time.monotonic() - t0) * 1000,
        )
    res2 = corrected_residual(entry.corrected_rhs)
    if res2.is_zero():
        return CheckResult(
            cid, desc, "patched-pass", note=entry.note,
            elapsed_ms=(time.monotonic() - t0) * 1000,
        )
    return CheckResult(
        cid, desc, "bad-erratum", residual=_residual_text(res2),
        note=entry.note, elapsed_ms=(time.monotonic() - t0) * 1000,
    )


def relation_rows():
    GEN = generator_ring()
    return [
        (row[0], GEN.parse(row[1]), GEN.parse(row[2]))
        for row in load_table("relations.txt", 3)
    ]


def suite_relations(reg: Registry, errata: Errata, mode: str = "base") -> list[CheckResult]:
    """Verify the product-relation table.

    mode 'base': full expansion in GF(3)[t, t1..t5] (the brute-force
    oracle).  mode 'h': expansion over the free ring H, an order of
    magnitude faster; zero there implies zero in the base ring because the
    H-forms evaluate to the registry values by construction.
    """
    GEN = generator_ring()
    emap = reg.generator_evaluation_map() if mode == "base" else reg.generator_h_map()
    checks = []
    for cid, lhs, rhs in relation_rows():
        t0 = time.monotonic()
        residual = (lhs - rhs).substitute(emap)
        checks.append(_apply_errata(
            cid, f"relation {cid.split(':', 1)[1]}", residual, t0, errata,
            corrected_residual=lambda text, lhs=lhs: (lhs - GEN.parse(text)).substitute(emap),
        ))
    return checks


# -- presentations ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gr_ring() -> PolyRing:
    return PolyRing(
        "GR", [("t", 1), ("x4", 2), ("x8", 4), ("y10", 5),
               ("h12", 6), ("h16", 8), ("h18", 9)],
        prime=3, width=8,
    )


def _gr_images_expected():
    """(filtration, name, H-ring expected leading form) from the table."""
    GR = _gr_ring()
    H = h_ring()
    base = {v: H.var(v) for v in ("t", "x4", "x8", "y10", "h12", "h16")}
    t = H.var("t")
    h18_w = t ** 9 - t ** 3 * H.var("h12") + t * H.var("h16")
    h18_v = t ** 9
    rows = []
    for filt, name, text in load_table("gr_images.txt", 3):
        img = {**base, "h18": h18_w if filt == "w" else h18_v}
        rows.append((filt, name, GR.parse(text).substitute(img, target=H)))
    return rows


def suite_presentations(reg: Registry, errata: Errata,
                        series_bound: int = 100) -> list[CheckResult]:
    checks: list[CheckResult] = []
    GR = _gr_ring()
    H = h_ring()
    base = {v: H.var(v) for v in ("t", "x4", "x8", "y10", "h12", "h16")}
    t = H.var("t")
    h18_of = {
        "w": t ** 9 - t ** 3 * H.var("h12") + t * H.var("h16"),
        "v": t ** 9,
    }
    weights = {"w": modstruct.WEIGHTS_W, "v": modstruct.WEIGHTS_V}
    for filt, name, want in _gr_images_expected():
        t0 = time.monotonic()
        got = reg.h_form(name).leading_form(weights[filt])
        cid = f"gr_{filt}:{name}"

        def corrected(text, filt=filt, got=got):
            img = {**base, "h18": h18_of[filt]}
            return got - GR.parse(text).substitute(img, target=H)

        checks.append(_apply_errata(
            cid, f"leading form of {name} in the {filt}-filtration",
            got - want, t0, errata, corrected_residual=corrected,
        ))

    for which, filt in (("primary", "w"), ("variant", "v")):
        t0 = time.monotonic()
        forms = {}
        zero_or_dup = None
        for expr, hf in modstruct.module_generator_h_forms(reg, which).items():
            lf = hf.leading_form(weights[filt])
            if lf.is_zero():
                zero_or_dup = f"{expr} vanishes in gr"
                break
            support = frozenset(lf.terms)
            if support in forms.values():
                zero_or_dup = f"{expr} duplicates a leading support"
                break
            forms[expr] = support
        checks.append(CheckResult(
            f"gr:module-basis-{filt}",
            f"the 14 module generators have distinct leading supports ({which})",
            "pass" if zero_or_dup is None else "fail",
            note=zero_or_dup,
            elapsed_ms=(time.monotonic() - t0) * 1000,
        ))

    t0 = time.monotonic()
    a = modstruct.poincare_series(series_bound, "primary")
    b = modstruct.poincare_series(series_bound, "variant")
    ok = a == b
    checks.append(CheckResult(
        "series:agree",
        f"the two closed forms give one series to degree {series_bound}",
        "pass" if ok else "fail",
        note=None if ok else f"first difference at degree "
             f"{next(i for i in range(series_bound + 1) if a[i] != b[i])}",
        elapsed_ms=(time.monotonic() - t0) * 1000,
    ))
    return checks


# -- normal form (seeded randomized) -------------------------------------------------


def _random_h_element(rng: random.Random, max_poly_degree: int = 15) -> SparsePoly:
    H = h_ring()
    f = H.zero()
    for _ in range(rng.randrange(1, 8)):
        exps = {}
        budget = max_poly_degree
        for v, d in (("h16", 8), ("h12", 6), ("y10", 5), ("x8", 4), ("x4", 2), ("t", 1)):
            e = rng.randrange(0, budget // d + 1)
            if e:
                exps[v] = e
                budget -= e * d
        f = f + H.monomial(exps, rng.randrange(1, 3))
    return f


def suite_normalform(reg: Registry, seed: int = 0, count: int = 100) -> list[CheckResult]:
    checks = []
    rng = random.Random(seed)
    H = h_ring()

    t0 = time.monotonic()
    bad = None
    for i in range(count):
        f = _random_h_element(rng)
        if f.is_zero():
            continue
        nf = modstruct.normal_form(f)
        if modstruct.expand_normal_form(nf) != modstruct.h_to_hl(f):
            bad = f"round-trip failed at sample {i}"
            break
    checks.append(CheckResult(
        "nf:roundtrip",
        f"{count} seeded H-elements of degree <= 15 round-trip exactly",
        "pass" if bad is None else "fail", note=bad,
        elapsed_ms=(time.monotonic() - t0) * 1000,
    ))

    t0 = time.monotonic()
    M = modstruct.mtilde_ring()
    bad = None
    for i in range(20):
        want: dict = {}
        for _ in range(rng.randrange(1, 5)):
            ij = (rng.randrange(0, 9), rng.randrange(0, 3))
            coeff = M.monomial(
                {v: rng.randrange(0, 3) for v in ("x4", "x8", "y10", "x20")},
                rng.randrange(1, 3),
            )
            want[ij] = want.get(ij, M.zero()) + coeff
        want = {ij: c for ij, c in want.items() if not c.is_zero()}
        # expand through H and reduce back
        HL = modstruct.hl_ring()
        mmap = modstruct._mtilde_to_hl_map()
        f_hl = HL.zero()
        for (i_, j_), c in want.items():
            f_hl = f_hl + HL.monomial({"t": i_, "h12": j_}) * c.substitute(mmap, target=HL)
        f_h = f_hl.substitute({v: H.var(v) for v in HL.varnames}, target=H)
        nf = modstruct.normal_form(f_h)
        if {ij: c.terms for ij, c in nf.slots.items()} != {ij: c.terms for ij, c in want.items()}:
            bad = f"coefficient family not recovered at sample {i}"
            break
    checks.append(CheckResult(
        "nf:uniqueness",
        "random coefficient families over the basis t^i h12^j are recovered exactly",
        "pass" if bad is None else "fail", note=bad,
        elapsed_ms=(time.monotonic() - t0) * 1000,
    ))

    t0 = time.monotonic()
    emap = reg.h_evaluation_map()
    bad = None
    cases = []
    for name in GENERATORS_13:
        cases.append((reg.h_form(name), True))
    small = ("x4", "x8", "y10", "x20", "y22", "x36")
    for _ in range(10):
        a, b = rng.choice(small), rng.choice(small)
        cases.append((reg.h_form(a) * reg.h_form(b), True))
    for _ in range(20):
        f = _random_h_element(rng, max_poly_degree=12)
        if not f.is_zero():
            cases.append((f, None))
    for i, (f, expect) in enumerate(cases):
        via_nf = modstruct.is_weyl_invariant_via_nf(f)
        direct, _ = weyl.is_invariant(f.substitute(emap))
        if via_nf != direct or (expect is not None and via_nf != expect):
            bad = f"disagreement at case {i}: nf={via_nf} direct={direct}"
            break
    checks.append(CheckResult(
        "nf:agreement",
        "membership via normal form agrees with the direct reflection test",
        "pass" if bad is None else "fail", note=bad,
        elapsed_ms=(time.monotonic() - t0) * 1000,
    ))
    return checks


# -- oracle comparison ----------------------------------------------------------------


def suite_oracle(reg: Registry, max_cohomological_degree: int = 40) -> list[CheckResult]:
    checks = []
    series = modstruct.poincare_series(max_cohomological_degree, "primary")
    for d in range(0, max_cohomological_degree + 1, 2):
        t0 = time.monotonic()
        got = dimoracle.invariant_dimension(d // 2, reg.prime)
        want = series[d]
        checks.append(CheckResult(
            f"oracle:{d}",
            f"invariant dimension in cohomological degree {d} "
            f"(kernel={got}, series={want})",
            "pass" if got == want else "fail",
            elapsed_ms=(time.monotonic() - t0) * 1000,
        ))
    return checks


SUITES = {
    "action-tables": lambda reg, errata, **kw: suite_action_tables(reg),
    "definitions": lambda reg, errata, **kw: suite_definitions(reg),
    "invariance": lambda reg, errata, **kw: suite_invariance(reg),
    "sigma": lambda reg, errata, **kw: suite_sigma(reg, errata),
    "minpoly": lambda reg, errata, **kw: suite_minpoly(reg),
    "relations": lambda reg, errata, **kw: suite_relations(
        reg, errata, mode=kw.get("mode", "base")),
    "presentations": lambda reg, errata, **kw: suite_presentations(reg, errata),
    "normalform": lambda reg, errata, **kw: suite_normalform(
        reg, seed=kw.get("seed", 0)),
}
