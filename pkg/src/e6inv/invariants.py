"""The named-element registry: every symbol of the computation, concretely.

Each element is a polynomial in GF(3)[t, t1..t5], built bottom-up from
previously registered elements (the registry is immutable once built and
the build order is part of the data).  Elements fixed by the signed
permutations R_2..R_6 additionally carry their expression in the free
polynomial ring H = GF(3)[t, x4, x8, y10, h12, h16]; those expressions are
produced by the same builder closures as the base-ring values, so their
evaluation back to the base ring agrees by construction (substitution is a
ring homomorphism), not by a separate proof.

Degrees: cohomological degree = 2 * polynomial degree; x/y/h/g subscripts
are cohomological.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from e6inv import weyl
from e6inv.poly import PolyRing, SparsePoly, StructuralError

# cohomological degree of every named element
DEGREES = {
    "c1": 2, "c2": 4, "c3": 6, "c4": 8, "c5": 10,
    "p1": 4, "p2": 8, "p3": 12, "p4": 16,
    "b": 2, "d8": 8, "t": 2,
    "x4": 4, "x8": 8, "y10": 10, "h12": 12, "h16": 16, "h18": 18,
    "x20": 20, "y22": 22, "y26": 26, "g24": 24,
    "x36": 36, "x48": 48, "x54": 54,
    "y58": 58, "y60": 60, "y64": 64, "y76": 76,
}

GENERATORS_13 = [
    "x4", "x8", "y10", "x20", "y22", "y26", "x36",
    "x48", "x54", "y58", "y60", "y64", "y76",
]

# the six abstract variables of H, with their polynomial degrees
H_VARS = [("t", 1), ("x4", 2), ("x8", 4), ("y10", 5), ("h12", 6), ("h16", 8)]


@lru_cache(maxsize=None)
def h_ring() -> PolyRing:
    return PolyRing("H", H_VARS, prime=3, width=10)


@lru_cache(maxsize=None)
def generator_ring() -> PolyRing:
    """Abstract ring on the thirteen generators (for relation tables)."""
    return PolyRing(
        "GEN",
        [(n, DEGREES[n] // 2) for n in GENERATORS_13],
        prime=3,
        width=4,
    )


@lru_cache(maxsize=None)
def minpoly_ring() -> PolyRing:
    """t adjoined to the six algebraically independent generators."""
    return PolyRing(
        "MINP",
        [("t", 1)] + [(n, DEGREES[n] // 2) for n in ("x4", "x8", "y10", "x20", "y22", "x36")],
        prime=3,
        width=8,
    )


@lru_cache(maxsize=None)
def elimination_ring() -> PolyRing:
    """Mixed ring for the c-elimination identities (the c_i still present)."""
    return PolyRing(
        "ELIM",
        [("t", 1), ("c1", 1), ("c2", 2), ("c3", 3), ("c4", 4), ("c5", 5),
         ("x4", 2), ("x8", 4), ("y10", 5), ("h12", 6), ("h16", 8)],
        prime=3,
        width=5,
    )


@dataclass
class NamedElement:
    name: str
    value: SparsePoly
    cohomological_degree: int
    h_form: Optional[SparsePoly]

    def __repr__(self):
        return f"NamedElement({self.name}, deg {self.cohomological_degree})"


def _derived_builders():
    """Definitions of the derived elements over {t, x4, x8, y10, h12, h16}.

    Ordered so every builder only uses earlier names; run both over the
    base ring (on evaluated elements) and over H (on its variables).
    """

    def h18(e):
        t = e["t"]
        return (
            t * (e["h16"] - e["x8"] ** 2)
            + t ** 3 * (-e["h12"] + e["x4"] * e["x8"])
            + t ** 5 * e["x8"]
            - t ** 7 * e["x4"]
            + t ** 9
        )

    def x20(e):
        return e["h12"] * e["x8"] + e["h16"] * e["x4"]

    def y22(e):
        return e["h12"] * e["y10"] - e["h18"] * e["x4"]

    def y26(e):
        return e["h16"] * e["y10"] + e["h18"] * e["x8"]

    def g24(e):
        t, x4, x8, y10 = e["t"], e["x4"], e["x8"], e["y10"]
        return (
            -(t ** 8) * x8
            + t ** 7 * y10
            - t ** 6 * x4 ** 3
            + t ** 6 * x4 * x8
            + t ** 4 * x4 ** 2 * x8
            - t ** 4 * x8 ** 2
            + t ** 3 * e["h18"]
            + t ** 3 * x4 ** 2 * y10
            - t ** 3 * x8 * y10
            + t ** 2 * e["x20"]
            - t ** 2 * y10 ** 2
            - t * e["y22"]
            - t * x4 * x8 * y10
        )

    def x36(e):
        h12, x4, x8 = e["h12"], e["x4"], e["x8"]
        return (
            -e["g24"] * x4 ** 3
            + h12 ** 3
            - h12 ** 2 * x4 * x8
            - h12 * e["x20"] * x4
            + h12 * x4 ** 2 * x8 ** 2
        )

    def x48(e):
        h16, x8 = e["h16"], e["x8"]
        return e["g24"] * x8 ** 3 + h16 ** 3 + h16 ** 2 * x8 ** 2 + h16 * x8 ** 4

    def x54(e):
        h16, h18, x8, y10 = e["h16"], e["h18"], e["x8"], e["y10"]
        return (
            -e["g24"] * y10 ** 3
            + h18 ** 3
            - h16 * h18 * y10 ** 2
            + h18 ** 2 * x8 * y10
            + h18 * x8 ** 2 * y10 ** 2
        )

    def y58(e):
        x4, x8, y10, h16, h18 = e["x4"], e["x8"], e["y10"], e["h16"], e["h18"]
        x20, y22, y26, g24 = e["x20"], e["y22"], e["y26"], e["g24"]
        return (
            (h16 ** 2 * h18 - h16 ** 2 * x8 * y10 - h16 * x8 ** 3 * y10
             - g24 * x8 ** 2 * y10 + y26 * x8 ** 3) * x4 ** 2
            + (h16 ** 2 * y22 + h16 * h18 * x20 + x20 * y26 * x8
               + y22 * x8 ** 4) * x4
            + (h16 * x20 * y22 + h18 * x20 ** 2 + x20 * y22 * x8 ** 2)
        )

    def y64(e):
        x4, x8, y10, h16, h18 = e["x4"], e["x8"], e["y10"], e["h16"], e["h18"]
        x20, y22, y26, g24 = e["x20"], e["y22"], e["y26"], e["g24"]
        return (
            (h16 ** 2 * h18 * y10 - h16 ** 2 * x8 * y10 ** 2 + h16 * h18 * y26
             - h16 * x8 ** 3 * y10 ** 2 - g24 * x8 ** 2 * y10 ** 2) * x4
            + (y26 ** 2 * x8 + y26 * x8 ** 3 * y10) * x4
            + (h16 * y22 * y26 + h18 * x20 * y26 - y22 * y26 * x8 ** 2
               + y22 * x8 ** 4 * y10)
        )

    def y60(e):
        x4, x8, y10, h16, h18 = e["x4"], e["x8"], e["y10"], e["h16"], e["h18"]
        x20, y22, y26, g24 = e["x20"], e["y22"], e["y26"], e["g24"]
        return (
            (-h16 * h18 ** 2 - h16 ** 2 * y10 ** 2 - h16 * x8 ** 2 * y10 ** 2
             - g24 * x8 * y10 ** 2 + y26 ** 2 + x8 ** 2 * y10 * y26) * x4 ** 2
            + (h16 * h18 * y22 + h18 ** 2 * x20 - y22 * y26 * x8
               + y22 * x8 ** 3 * y10) * x4
            + (-h16 * y22 ** 2 - h18 * x20 * y22 + y22 ** 2 * x8 ** 2)
        )

    def y76(e):
        x4, x8, y10, h16, h18 = e["x4"], e["x8"], e["y10"], e["h16"], e["h18"]
        x20, y22, y26, g24 = e["x20"], e["y22"], e["y26"], e["g24"]
        return (
            (-h16 ** 2 * y10 - h16 * x8 ** 2 * y10 - g24 * x8 * y10
             + x8 ** 2 * y26) * y26 * x4 ** 2
            + (h16 ** 2 * h18 * y22 - h16 * h18 ** 2 * x20
               + h16 ** 2 * y22 * x8 * y10 + h16 * y22 * x8 ** 3 * y10) * x4
            + (g24 * y22 * x8 ** 2 * y10 + x20 * y26 ** 2) * x4
            + (h16 ** 2 * y22 ** 2 - h16 * h18 * x20 * y22 + h18 ** 2 * x20 ** 2
               - y22 ** 2 * x8 ** 4)
        )

    return [
        ("h18", h18), ("x20", x20), ("y22", y22), ("y26", y26), ("g24", g24),
        ("x36", x36), ("x48", x48), ("x54", x54),
        ("y58", y58), ("y64", y64), ("y60", y60), ("y76", y76),
    ]


class Registry:
    """Immutable store of all named elements, base values plus H-forms."""

    def __init__(self, prime: int = 3):
        if prime != 3:
            raise StructuralError("the named-element tables are mod-3 identities")
        self.prime = prime
        self.ring = weyl.base_ring(prime)
        self.h = h_ring()
        self._el: dict[str, NamedElement] = {}
        self._build()

    def __getitem__(self, name: str) -> SparsePoly:
        return self._el[name].value

    def element(self, name: str) -> NamedElement:
        return self._el[name]

    def h_form(self, name: str) -> SparsePoly:
        hf = self._el[name].h_form
        if hf is None:
            raise StructuralError(f"{name} is not fixed by R_2..R_6; no H-form")
        return hf

    def names(self):
        return list(self._el)

    def __contains__(self, name):
        return name in self._el

    def h_evaluation_map(self) -> dict[str, SparsePoly]:
        """Substitution sending the H variables to their base-ring values."""
        return {n: self[n] for n, _ in H_VARS}

    def generator_evaluation_map(self) -> dict[str, SparsePoly]:
        return {n: self[n] for n in GENERATORS_13}

    def generator_h_map(self) -> dict[str, SparsePoly]:
        """Substitution sending the thirteen generators to their H-forms."""
        return {n: self.h_form(n) for n in GENERATORS_13}

    def _add(self, name: str, value: SparsePoly, h_form: Optional[SparsePoly]):
        want = DEGREES[name]
        if value.is_zero() or 2 * value.degree() != want or not value.is_homogeneous():
            raise StructuralError(
                f"element {name}: expected homogeneous cohomological degree {want}, "
                f"got {2 * value.degree()}"
            )
        if h_form is not None and 2 * h_form.degree() != want:
            raise StructuralError(f"H-form of {name} has wrong degree")
        self._el[name] = NamedElement(name, value, want, h_form)

    def _build(self):
        R = self.ring
        t = R.var("t")
        ts = [R.var(f"t{i}") for i in range(1, 6)]
        self._add("t", t, self.h.var("t"))

        # elementary symmetric functions of the t_i and of the t_i^2
        for k in range(1, 6):
            ck = R.zero()
            for combo in combinations(ts, k):
                prod = combo[0]
                for f in combo[1:]:
                    prod = prod * f
                ck = ck + prod
            self._add(f"c{k}", ck, None)
        squares = [u * u for u in ts]
        for k in range(1, 5):
            pk = R.zero()
            for combo in combinations(squares, k):
                prod = combo[0]
                for f in combo[1:]:
                    prod = prod * f
                pk = pk + prod
            self._add(f"p{k}", pk, None)

        e = {n: self[n] for n in self.names()}
        e["b"] = e["t1"] = ts[0]
        b = ts[0] + e["c1"]
        self._add("b", b, None)
        e["b"] = b

        # the six H generators, in base coordinates
        self._add("x4", e["p1"], self.h.var("x4"))
        x8 = e["p2"] - e["p1"] ** 2
        self._add("x8", x8, self.h.var("x8"))
        y10 = e["c5"] - t * x8 - t ** 3 * e["p1"]
        self._add("y10", y10, self.h.var("y10"))
        h12 = e["p3"] + t * y10 - t ** 2 * x8 - t ** 4 * e["p1"]
        self._add("h12", h12, self.h.var("h12"))
        h16 = e["p4"] + t ** 3 * y10 - t ** 4 * x8 - t ** 6 * e["p1"]
        self._add("h16", h16, self.h.var("h16"))

        d8 = (
            b * (-(t ** 3) - e["c1"] ** 3 - e["c1"] * e["p1"] + e["c3"])
            + b ** 2 * (e["c1"] ** 2 + e["p1"])
            + b ** 3 * (t - e["c1"])
            - b ** 4
        )
        self._add("d8", d8, None)

        base_env = {n: self[n] for n in ("t", "x4", "x8", "y10", "h12", "h16")}
        h_env = {n: self.h.var(n) for n, _ in H_VARS}
        for name, builder in _derived_builders():
            value = builder(base_env)
            hf = builder(h_env)
            self._add(name, value, hf)
            base_env[name] = value
            h_env[name] = hf


@lru_cache(maxsize=None)
def registry(prime: int = 3) -> Registry:
    return Registry(prime)
