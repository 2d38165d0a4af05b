"""Normal forms over the basis {t^i h12^j} and the module presentations.

Any element of H = GF(3)[t, x4, x8, y10, h12, h16] can be written uniquely
as sum_{0<=i<=8, 0<=j<=2} a_ij t^i h12^j with coefficients a_ij in
M~ = GF(3)[x4, x4^-1][x8, y10, x20, y22, x36].  The reduction eliminates
h16 first (exactly, at the cost of x4 inverses), then rewrites t^9 and
h12^3 by the two relations below until every monomial has t-exponent <= 8
and h12-exponent <= 2.  Both rules strictly decrease t + 5*h12 (exponent
weights) on every produced monomial, so the loop terminates.

An element of H lies in the invariant ring exactly when its normal form is
concentrated in the (0,0) slot; this is cross-checked against the direct
reflection test in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from e6inv import backend
from e6inv.invariants import Registry, h_ring
from e6inv.poly import PolyRing, SparsePoly, StructuralError

NF_VARS = [
    ("t", 1), ("h12", 6), ("x4", 2), ("x8", 4),
    ("y10", 5), ("x20", 10), ("y22", 11), ("x36", 18),
]


@lru_cache(maxsize=None)
def nf_ring() -> PolyRing:
    return PolyRing(
        "NF", NF_VARS, prime=3,
        widths=[7, 5, 9, 7, 7, 6, 6, 6], invertible=["x4"],
    )


@lru_cache(maxsize=None)
def mtilde_ring() -> PolyRing:
    return PolyRing(
        "Mtilde",
        [("x4", 2), ("x8", 4), ("y10", 5), ("x20", 10), ("y22", 11), ("x36", 18)],
        prime=3, width=10, invertible=["x4"],
    )


@lru_cache(maxsize=None)
def hl_ring() -> PolyRing:
    """H with x4 inverted; used for exact round-trip verification."""
    return PolyRing(
        "H[x4^-1]",
        [("t", 1), ("x4", 2), ("x8", 4), ("y10", 5), ("h12", 6), ("h16", 8)],
        prime=3, width=10, invertible=["x4"],
    )


def _build_rules():
    """The two reduction rules, as normal-form-ring polynomials."""
    R = nf_ring()
    x4inv = R.monomial({"x4": -1})
    # t^9*x4 = t^7*x4^2 - t^5*x4*x8 + t^3*h12*x4 - t^3*x4^2*x8 + t*h12*x8
    #          - t*x20 + t*x4*x8^2 + h12*y10 - y22
    t9_times_x4 = R.parse(
        "t^7*x4^2 - t^5*x4*x8 + t^3*h12*x4 - t^3*x4^2*x8 + t*h12*x8"
        " - t*x20 + t*x4*x8^2 + h12*y10 - y22"
    )
    rule_t9 = t9_times_x4 * x4inv
    rule_h12cubed = R.parse(
        "-t^8*x4^3*x8 + t^7*x4^3*y10 - t^6*x4^6 + t^6*x4^4*x8 + t^4*x4^5*x8"
        " - t^4*x4^3*x8^2 + t^3*h12*x4^2*y10 - t^3*y22*x4^2 + t^3*x4^5*y10"
        " - t^3*x4^3*x8*y10 + t^2*x20*x4^3 - t^2*x4^3*y10^2 - t*y22*x4^3"
        " - t*x4^4*x8*y10 + h12^2*x4*x8 + h12*x20*x4 - h12*x4^2*x8^2 + x36"
    )
    return rule_t9, rule_h12cubed


@lru_cache(maxsize=None)
def _rules_cached():
    return _build_rules()


@dataclass
class NormalForm:
    """Coefficients of t^i h12^j (0<=i<=8, 0<=j<=2) in M~."""

    slots: dict[tuple[int, int], SparsePoly]

    def coefficient(self, i: int, j: int) -> SparsePoly:
        return self.slots.get((i, j), mtilde_ring().zero())

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.slots)

    def is_invariant_shape(self) -> bool:
        return all(ij == (0, 0) for ij in self.slots)

    def min_x4_exponent(self) -> int:
        m = 0
        ring = mtilde_ring()
        i = ring.index["x4"]
        for poly in self.slots.values():
            for k in poly.terms:
                e = ((k >> ring.shifts[i]) & ring.masks[i]) - ring.offsets[i]
                m = min(m, e)
        return m

    def to_nf_poly(self) -> SparsePoly:
        R = nf_ring()
        out = R.zero()
        for (i, j), coeff in self.slots.items():
            mono = R.monomial({"t": i, "h12": j})
            out = out + mono * coeff.substitute(
                {v: R.var(v) for v in mtilde_ring().varnames}, target=R
            )
        return out


def _inject_h_element(f: SparsePoly) -> SparsePoly:
    """Map an H element into the normal-form ring, eliminating h16."""
    H = h_ring()
    if f.ring is not H:
        raise StructuralError("normal_form expects an element of H")
    R = nf_ring()
    x4inv = R.monomial({"x4": -1})
    h16_image = (R.parse("x20 - h12*x8")) * x4inv
    images = {v: R.var(v) for v in ("t", "x4", "x8", "y10", "h12")}
    images["h16"] = h16_image
    return f.substitute(images, target=R)


def _reduce(g: SparsePoly) -> SparsePoly:
    """Rewrite until all t-exponents <= 8 and h12-exponents <= 2."""
    R = g.ring
    rule_t9, rule_h12 = _rules_cached()
    it, ih = R.index["t"], R.index["h12"]
    st, sh = R.shifts[it], R.shifts[ih]
    mt, mh = R.masks[it], R.masks[ih]
    t9key = R.pack([9 if i == it else 0 for i in range(R.nvars)]) - R.offkey
    h3key = R.pack([3 if i == ih else 0 for i in range(R.nvars)]) - R.offkey
    p = R.prime
    while True:
        high_t: dict = {}
        high_h: dict = {}
        rest: dict = {}
        for k, c in g.terms.items():
            if ((k >> st) & mt) >= 9:
                high_t[k - t9key] = c
            elif ((k >> sh) & mh) >= 3:
                high_h[k - h3key] = c
            else:
                rest[k] = c
        if not high_t and not high_h:
            return SparsePoly(R, rest)
        acc = rest
        if high_t:
            acc = backend.K.add_scaled(
                acc, backend.K.mul(high_t, rule_t9.terms, p, R.offkey), 1, p
            )
        if high_h:
            acc = backend.K.add_scaled(
                acc, backend.K.mul(high_h, rule_h12.terms, p, R.offkey), 1, p
            )
        g = SparsePoly(R, acc)


def normal_form(f: SparsePoly, allow_x4_inverse: bool = True) -> NormalForm:
    """Normal form of an H element over the basis {t^i h12^j}.

    With allow_x4_inverse=False the result must not involve x4 inverses
    (every division by x4 along the way must have been exact); a violating
    slot raises with the witness coefficient.
    """
    g = _reduce(_inject_h_element(f))
    R = g.ring
    M = mtilde_ring()
    it, ih = R.index["t"], R.index["h12"]
    buckets: dict[tuple[int, int], dict] = {}
    for k, c in g.terms.items():
        i = (k >> R.shifts[it]) & R.masks[it]
        j = (k >> R.shifts[ih]) & R.masks[ih]
        exps = R.unpack(k)
        mk = M.pack([exps[R.index[v]] for v in M.varnames])
        buckets.setdefault((i, j), {})[mk] = c
    slots = {ij: SparsePoly(M, terms) for ij, terms in buckets.items()}
    nf = NormalForm(slots)
    if not allow_x4_inverse and nf.min_x4_exponent() < 0:
        bad = next(
            (ij, poly) for ij, poly in slots.items()
            if any(
                ((k >> M.shifts[M.index["x4"]]) & M.masks[M.index["x4"]])
                < M.offsets[M.index["x4"]]
                for k in poly.terms
            )
        )
        raise StructuralError(
            f"normal form requires x4 inverses: slot {bad[0]} has witness "
            f"{bad[1].to_text()[:120]}"
        )
    return nf


@lru_cache(maxsize=None)
def _mtilde_to_hl_map():
    HL = hl_ring()
    t, x4, x8 = HL.var("t"), HL.var("x4"), HL.var("x8")
    y10, h12, h16 = HL.var("y10"), HL.var("h12"), HL.var("h16")
    h18 = (
        t * (h16 - x8 ** 2) + t ** 3 * (-h12 + x4 * x8)
        + t ** 5 * x8 - t ** 7 * x4 + t ** 9
    )
    x20 = h12 * x8 + h16 * x4
    y22 = h12 * y10 - h18 * x4
    g24 = (
        -(t ** 8) * x8 + t ** 7 * y10 - t ** 6 * x4 ** 3 + t ** 6 * x4 * x8
        + t ** 4 * x4 ** 2 * x8 - t ** 4 * x8 ** 2 + t ** 3 * h18
        + t ** 3 * x4 ** 2 * y10 - t ** 3 * x8 * y10 + t ** 2 * x20
        - t ** 2 * y10 ** 2 - t * y22 - t * x4 * x8 * y10
    )
    x36 = (
        -g24 * x4 ** 3 + h12 ** 3 - h12 ** 2 * x4 * x8
        - h12 * x20 * x4 + h12 * x4 ** 2 * x8 ** 2
    )
    return {
        "x4": x4, "x8": x8, "y10": y10,
        "x20": x20, "y22": y22, "x36": x36,
    }


def expand_normal_form(nf: NormalForm) -> SparsePoly:
    """Re-expansion of a normal form into H[x4^-1] (round-trip check)."""
    HL = hl_ring()
    mmap = _mtilde_to_hl_map()
    out = HL.zero()
    for (i, j), coeff in nf.slots.items():
        out = out + HL.monomial({"t": i, "h12": j}) * coeff.substitute(mmap, target=HL)
    return out


def h_to_hl(f: SparsePoly) -> SparsePoly:
    HL = hl_ring()
    return f.substitute({v: HL.var(v) for v in h_ring().varnames}, target=HL)


def is_weyl_invariant_via_nf(f: SparsePoly) -> bool:
    """Membership test for the invariant ring via the normal-form basis."""
    return normal_form(f).is_invariant_shape()


# -- Poincare series ------------------------------------------------------------


def _series_inverse_product(exponents, n: int) -> list[int]:
    s = [0] * (n + 1)
    s[0] = 1
    for e in exponents:
        for i in range(e, n + 1):
            s[i] += s[i - e]
    return s


def _series_mul(a, b, n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j in range(0, n + 1 - i):
                out[i + j] += ai * b[j]
    return out


PS_NUMERATOR = {
    0: 1, 20: 1, 22: 1, 26: 1, 30: -1, 40: 1, 42: 1, 44: 1, 46: 1,
    48: 1, 50: -1, 56: -1, 58: 1, 60: 1, 64: 1, 68: -1, 76: 1,
}


def poincare_series(max_degree: int, form: str = "primary") -> list[int]:
    """Coefficients of the invariant ring's Poincare series, exactly.

    form='primary': single rational expression, numerator PS_NUMERATOR
    over (1-t^4)(1-t^8)(1-t^10)(1-t^36)(1-t^48)(1-t^54).
    form='variant': the two-summand free-module expression
    (coefficients over (1-t^4)(1-t^8)(1-t^10) and (1-t^8)(1-t^10)),
    tensored with the polynomial part on degrees 36, 48, 54.
    """
    n = max_degree
    if form == "primary":
        g = [PS_NUMERATOR.get(i, 0) for i in range(n + 1)]
        return _series_mul(g, _series_inverse_product([4, 8, 10, 36, 48, 54], n), n)
    if form == "variant":
        n1 = {0: 1, 20: 1, 40: 1, 22: 1, 44: 1, 42: 1, 58: 1, 60: 1, 76: 1}
        n2 = {26: 1, 52: 1, 48: 1, 46: 1, 64: 1}
        a = _series_mul(
            [n1.get(i, 0) for i in range(n + 1)],
            _series_inverse_product([4, 8, 10], n), n,
        )
        b = _series_mul(
            [n2.get(i, 0) for i in range(n + 1)],
            _series_inverse_product([8, 10], n), n,
        )
        both = [x + y for x, y in zip(a, b)]
        return _series_mul(both, _series_inverse_product([36, 48, 54], n), n)
    raise ValueError(f"unknown closed form {form!r}")


# -- module presentations ---------------------------------------------------------

WEIGHTS_W = {"t": 0, "h12": 0, "h16": 0, "x4": 1, "x8": 2, "y10": 3}
WEIGHTS_V = {"t": 1, "x4": None, "x8": 6, "y10": 7, "h12": 9, "h16": 9}

# free-module generators over GF(3)[x4, x8, y10] resp. GF(3)[x8, y10]
MODULE_GENERATORS = {
    "primary": (
        ["1", "x20", "x20^2", "y22", "y22^2", "x20*y22", "y58", "y60", "y76"],
        ["y26", "y26^2", "x20*y26", "y22*y26", "y64"],
    ),
    "variant": (
        ["1", "x20", "x20^2", "y26", "y26^2", "x20*y26", "y58", "y64", "y76"],
        ["y22", "y22^2", "x20*y22", "y22*y26", "y60"],
    ),
}


def module_generator_h_forms(reg: Registry, which: str) -> dict[str, SparsePoly]:
    """H-forms of the 14 module generators of the chosen presentation."""
    from e6inv.invariants import generator_ring

    GEN = generator_ring()
    hmap = reg.generator_h_map()
    fam_a, fam_b = MODULE_GENERATORS[which]
    out = {}
    for expr in fam_a + fam_b:
        if expr == "1":
            out[expr] = h_ring().one()
        else:
            out[expr] = GEN.parse(expr).substitute(hmap)
    return out
