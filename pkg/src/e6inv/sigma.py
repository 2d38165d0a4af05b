"""The 27-weight product P and its decomposition into generator coordinates.

P = prod_{y in S} (1 + y) over the 27 weights of S reduced mod 3; its
graded pieces are the elementary symmetric functions of S and are compared
degree by degree against the shipped table (data/sigma_table.txt).  The
table entries and the product expansion reach the same polynomials through
disjoint code paths: the table evaluates named elements built from their
defining formulas, the product knows only the weight vectors.

Also here: symmetric decomposition (triangular elimination against the
elementary symmetric generators), the lift into the free ring H, and the
c-elimination identity suite.
"""

from __future__ import annotations

from functools import lru_cache

from e6inv import backend, rootsystem, weyl
from e6inv.invariants import Registry, elimination_ring, generator_ring, h_ring
from e6inv.poly import PolyRing, SparsePoly, StructuralError
from e6inv.tables import load_table


@lru_cache(maxsize=None)
def tower_ring(mode: str = "p") -> PolyRing:
    """Polynomial ring on the symmetric generators (t free in both)."""
    if mode == "p":
        return PolyRing(
            "TOWER", [("t", 1), ("p1", 2), ("p2", 4), ("c5", 5), ("p3", 6), ("p4", 8)],
            prime=3, width=10,
        )
    if mode == "c":
        return PolyRing(
            "TOWERC", [("t", 1), ("c1", 1), ("c2", 2), ("c3", 3), ("c4", 4), ("c5", 5)],
            prime=3, width=10,
        )
    raise ValueError(mode)


def weight_linear_forms(p: int = 3) -> list[SparsePoly]:
    """The 27 elements of S as linear polynomials in GF(p)[t, t1..t5]."""
    ring = weyl.base_ring(p)
    out = []
    for vec in rootsystem.set_S_mod_p(p):
        out.append(ring.linear({v: c for v, c in zip(weyl.BASE_VARS, vec) if c}))
    return out


def weight_forms_direct(p: int = 3) -> list[SparsePoly]:
    """S via the closed mod-3 formulas w1 = t - c1, w_i = t + c1 - t_{i-1}.

    An independent labeling of the same set (x = -c1 swaps the two cosets);
    compared against weight_linear_forms as sets.
    """
    ring = weyl.base_ring(p)
    c1 = ring.linear({f"t{i}": 1 for i in range(1, 6)})
    t = ring.var("t")
    w = {1: t - c1}
    for i in range(2, 7):
        w[i] = t + c1 - ring.var(f"t{i - 1}")
    out = []
    for i in range(1, 7):
        for j in range(i + 1, 7):
            out.append(w[i] + w[j])
    for i in range(1, 7):
        out.append(c1 - w[i])
    for i in range(1, 7):
        out.append(-c1 - w[i])
    return out


def labelings_agree(p: int = 3) -> bool:
    fingerprint = lambda polys: sorted(sorted(f.terms.items()) for f in polys)
    return fingerprint(weight_linear_forms(p)) == fingerprint(weight_forms_direct(p))


@lru_cache(maxsize=None)
def expand_P(p: int = 3) -> SparsePoly:
    """The full product over S; polynomial degree 27."""
    ring = weyl.base_ring(p)
    P = ring.one()
    for y in weight_linear_forms(p):
        P = P * (ring.one() + y)
    return P


def sigma_component(j: int, p: int = 3) -> SparsePoly:
    """sigma_j of S: the degree-j part (cohomological 2j) of expand_P."""
    if not 1 <= j <= 27:
        raise StructuralError("sigma index must be in 1..27")
    return expand_P(p).graded_component(2 * j)


# -- symmetric decomposition ---------------------------------------------------


def _elementary_symmetric(ring: PolyRing, vars_: list[str], k: int) -> SparsePoly:
    from itertools import combinations

    out = ring.zero()
    for combo in combinations(vars_, k):
        prod = ring.one()
        for v in combo:
            prod = prod * ring.var(v)
        out = out + prod
    return out


@lru_cache(maxsize=None)
def _tower_generators(mode: str, p: int):
    ring = weyl.base_ring(p)
    ts = [f"t{i}" for i in range(1, 6)]
    gens = {"t": ring.var("t")}
    if mode == "c":
        for k in range(1, 6):
            gens[f"c{k}"] = _elementary_symmetric(ring, ts, k)
    else:
        from itertools import combinations

        squares = [ring.var(v) * ring.var(v) for v in ts]
        for k in range(1, 5):
            acc = ring.zero()
            for combo in combinations(squares, k):
                prod = combo[0]
                for f in combo[1:]:
                    prod = prod * f
                acc = acc + prod
            gens[f"p{k}"] = acc
        gens["c5"] = _elementary_symmetric(ring, ts, 5)
    return gens


def decompose_symmetric(f: SparsePoly, mode: str = "p") -> SparsePoly:
    """Express f in the elementary symmetric generators, exactly.

    mode 'p': generators (t, p1, p2, c5, p3, p4), valid for polynomials
    fixed by the signed permutations R_2..R_6.  mode 'c': generators
    (t, c1..c5), valid for ordinary symmetric functions of t1..t5.
    Triangular elimination on the graded-lex leading term; the loop
    terminates exactly when the re-substituted result equals f.
    """
    p = f.ring.prime
    base = weyl.base_ring(p)
    if f.ring is not base:
        raise StructuralError("decompose_symmetric expects the Weyl base ring")
    if mode == "p":
        gens_check = (2, 3, 4, 5, 6)
        ok, witness = weyl.is_invariant(f, gens=gens_check)
        if not ok:
            raise StructuralError(
                f"input is not fixed by R_{witness[0]}; cannot decompose"
            )
    tower = tower_ring(mode)
    gen_polys = _tower_generators(mode, p)
    pow_cache: dict = {}

    def tower_eval(exps) -> dict:
        names = tower.varnames
        prod = None
        for name, e in zip(names, exps):
            if not e:
                continue
            pw = pow_cache.get((name, e))
            if pw is None:
                pw = (gen_polys[name] ** e).terms
                pow_cache[(name, e)] = pw
            if prod is None:
                prod = pw
            else:
                prod = backend.K.mul(prod, pw, p, 0)
        return prod if prod is not None else {0: 1}

    work = f
    out: dict = {}
    while not work.is_zero():
        k, coeff = work.leading_term()
        exps = base.unpack(k)
        a, es = exps[0], list(exps[1:])
        if any(es[i] > es[i + 1] for i in range(4)):
            raise StructuralError(
                "leading monomial not symmetric-sorted; input is not invariant"
            )
        if mode == "p":
            if len({e % 2 for e in es}) > 1 or any(
                (es[i + 1] - es[i]) % 2 for i in range(4)
            ):
                raise StructuralError(
                    "leading monomial has mixed parity; input is not invariant"
                )
            texps = (
                a,
                (es[4] - es[3]) // 2,  # p1
                (es[3] - es[2]) // 2,  # p2
                es[0],                 # c5
                (es[2] - es[1]) // 2,  # p3
                (es[1] - es[0]) // 2,  # p4
            )
        else:
            texps = (a, es[4] - es[3], es[3] - es[2], es[2] - es[1],
                     es[1] - es[0], es[0])
        key = tower.pack(texps)
        out[key] = coeff
        piece = SparsePoly(base, tower_eval(texps))
        work = work - piece * coeff
    return SparsePoly(tower, out)


def lift_to_H(reg: Registry, f: SparsePoly) -> SparsePoly:
    """Unique H-coordinates of a W(D5)-invariant base-ring polynomial."""
    tower = decompose_symmetric(f, mode="p")
    H = h_ring()
    t = H.var("t")
    x4, x8, y10 = H.var("x4"), H.var("x8"), H.var("y10")
    images = {
        "t": t,
        "p1": x4,
        "p2": x8 + x4 ** 2,
        "c5": y10 + t * x8 + t ** 3 * x4,
        "p3": H.var("h12") - t * y10 + t ** 2 * x8 + t ** 4 * x4,
        "p4": H.var("h16") - t ** 3 * y10 + t ** 4 * x8 + t ** 6 * x4,
    }
    return tower.substitute(images)


def count_P_in_c_coordinates(p: int = 3) -> int:
    """Term count of P expressed over (t, c1..c5); informational only."""
    return len(decompose_symmetric(expand_P(p), mode="c"))


# -- verification suites --------------------------------------------------------


def sigma_expected(reg: Registry) -> dict[int, SparsePoly]:
    """The shipped sigma table, parsed in the generator ring."""
    GEN = generator_ring()
    out = {}
    for row in load_table("sigma_table.txt", 2):
        out[int(row[0])] = GEN.parse(row[1])
    return out


def elimination_rows(reg: Registry):
    """(id, lhs, rhs) rows of the c-elimination table, parsed."""
    ELIM = elimination_ring()
    return [
        (row[0], ELIM.parse(row[1]), ELIM.parse(row[2]))
        for row in load_table("elimination.txt", 3)
    ]
