"""Reflections R_1..R_6 as ring endomorphisms of GF(p)[t, t1..t5].

Actions are linear substitutions.  They are *stored* as substitution maps
(variable -> linear polynomial) and *applied* through a factorization of
the 6x6 coefficient matrix into elementary steps (variable shears, scales,
signed permutations), each of which rewrites a term map in one pass.  This
is exactly equivalent to a single generic substitute() call, which the
tests assert on random inputs, but stays fast on operands with 10^5..10^6
terms: a reflection is an identity-plus-rank-one matrix, so a handful of
shears suffice where term-by-term expansion of images would blow up.

The matrices come from the rational reflection action reduced mod p (see
e6inv.rootsystem), so nothing here depends on hand-tabulated mod-3 data;
the tabulated form is asserted against this reduction in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from e6inv import backend, rootsystem
from e6inv.poly import PolyRing, SparsePoly, StructuralError

BASE_VARS = ["t", "t1", "t2", "t3", "t4", "t5"]


@lru_cache(maxsize=None)
def base_ring(p: int = 3) -> PolyRing:
    """GF(p)[t, t1..t5], exponents up to 1023 per variable."""
    return PolyRing(f"GF({p})[t,t1..t5]", [(v, 1) for v in BASE_VARS], prime=p, width=10)


@lru_cache(maxsize=None)
def action_matrix(i: int, p: int = 3):
    """Column c = image of the c-th base variable under R_i, over GF(p)."""
    return rootsystem.action_mod_p(i, p)


def substitution_map(i: int, p: int = 3) -> dict[str, SparsePoly]:
    """R_i as a substitution map on the base variables."""
    ring = base_ring(p)
    A = action_matrix(i, p)
    return {
        BASE_VARS[c]: ring.linear(
            {BASE_VARS[r]: A[r][c] for r in range(6) if A[r][c]}
        )
        for c in range(6)
    }


# -- elementary factorization of a linear substitution -------------------------


def _factor_substitution(S, p):
    """Split substitution matrix S (row i = image coefficients of variable i)
    into elementary steps whose left-to-right application equals it.

    Reduces S to the identity by left-multiplying elementary matrices and
    records their inverses: S = F1^-1 F2^-1 ... ; since applying step T
    after step U realizes the matrix product U*T, executing the recorded
    list in order reproduces S exactly.
    """
    n = len(S)
    A = [list(row) for row in S]
    ops = []
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] % p), None)
        if piv is None:
            raise StructuralError("singular substitution matrix")
        if piv != col:
            A[piv], A[col] = A[col], A[piv]
            ops.append(("swap", piv, col))
        a = A[col][col] % p
        if a != 1:
            inv = pow(a, p - 2, p)
            A[col] = [x * inv % p for x in A[col]]
            ops.append(("scale", col, a))
        for r in range(n):
            if r != col and A[r][col] % p:
                c = A[r][col] % p
                A[r] = [(x - c * y) % p for x, y in zip(A[r], A[col])]
                ops.append(("shear", r, col, c))
    return ops


@lru_cache(maxsize=None)
def _binom_row(e: int, p: int) -> tuple[tuple[int, int], ...]:
    return tuple((k, comb(e, k) % p) for k in range(e + 1) if comb(e, k) % p)


class LinearAction:
    """A linear variable substitution compiled to elementary kernel passes."""

    def __init__(self, ring: PolyRing, matrix):
        # matrix columns = variable images (coefficient of row-variable)
        self.ring = ring
        p = ring.prime
        if ring.offkey:
            raise StructuralError("linear actions need an offset-free ring")
        if len(set(ring.widths)) != 1:
            raise StructuralError("linear actions need uniform field widths")
        S = [[matrix[r][c] % p for r in range(ring.nvars)] for c in range(ring.nvars)]
        self.ops = _factor_substitution(S, p)

    def apply(self, f: SparsePoly) -> SparsePoly:
        if f.ring is not self.ring:
            raise StructuralError("polynomial not in the action's ring")
        ring, p = self.ring, self.ring.prime
        terms = f.terms
        maxdeg = f.degree()
        for op in self.ops:
            if not terms:
                break
            if op[0] == "swap":
                _, i, j = op
                perm = list(range(ring.nvars))
                perm[i], perm[j] = j, i
                terms = backend.K.signed_permute(
                    terms, ring.nvars, ring.widths[0], perm, [0] * ring.nvars, p
                )
            elif op[0] == "scale":
                _, i, c = op
                tables = [None] + [
                    [(0, pow(c, e, p))] for e in range(1, maxdeg + 1)
                ]
                terms = backend.K.apply_var_table(
                    terms, ring.shifts[i], ring.masks[i], tables, p
                )
            else:
                _, src, dst, c = op
                tables = _build_shear_tables(ring, src, dst, c, maxdeg)
                terms = backend.K.apply_var_table(
                    terms, ring.shifts[src], ring.masks[src], tables, p
                )
        return SparsePoly(ring, terms)


@lru_cache(maxsize=None)
def _build_shear_tables(ring: PolyRing, src: int, dst: int, c: int, maxe: int):
    """Expansion tables for v_src -> v_src + c*v_dst up to exponent maxe."""
    p = ring.prime
    tables: list = [None] * (maxe + 1)
    for e in range(1, maxe + 1):
        row = []
        for k, bc in _binom_row(e, p):
            mult = bc * pow(c, k, p) % p
            if mult:
                delta = (k << ring.shifts[dst]) - (k << ring.shifts[src])
                row.append((delta, mult))
        tables[e] = row
    return tables


@lru_cache(maxsize=None)
def _compiled_action(i: int, p: int) -> LinearAction:
    return LinearAction(base_ring(p), action_matrix(i, p))


def apply(i: int, f: SparsePoly) -> SparsePoly:
    """Image of f under R_i (f must live in the base ring for its prime)."""
    p = f.ring.prime
    ring = base_ring(p)
    if f.ring is not ring:
        raise StructuralError("apply() expects the Weyl base ring")
    return _compiled_action(i, p).apply(f)


def apply_generic(i: int, f: SparsePoly) -> SparsePoly:
    """Reference implementation via poly_core.substitute (slow path)."""
    return f.substitute(substitution_map(i, f.ring.prime))


def is_invariant(f: SparsePoly, gens=(1, 2, 3, 4, 5, 6)):
    """True iff R_i(f) = f for all listed generators.

    Returns (True, None) or (False, (i, residual)) with the first failing
    generator and the residual R_i(f) - f.
    """
    for i in gens:
        residual = apply(i, f) - f
        if not residual.is_zero():
            return False, (i, residual)
    return True, None
