"""Independent per-degree dimensions of the invariant ring by linear algebra.

For polynomial degree d, the slice of GF(p)[t, t1..t5] has the monomial
basis of size C(d+5, 5).  The reflections R_2..R_6 act as signed
permutations of monomials, so their joint fixed space has an explicit
orbit-sum basis: one vector per multiset of t_i-exponents whose entries
share a parity (mixed-parity orbits sum to zero).  The remaining condition
(R_1 - id)v = 0 is solved by exact Gaussian elimination mod p on the orbit
basis.  No averaging is possible here: p divides the group order, so there
is no Reynolds projector, and the kernel computation is the whole story.

The reflection matrices come from the rational root-system data reduced
mod p (e6inv.rootsystem), not from the hand-tabulated action, keeping this
oracle independent of the construction it cross-checks.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations
from math import comb

import numpy as np

from e6inv import weyl
from e6inv.poly import SparsePoly

DEFAULT_CAP = int(os.environ.get("E6INV_ORACLE_CAP", "300000"))


def slice_size(d: int) -> int:
    return comb(d + 5, 5)


def slice_keys(d: int, p: int = 3) -> np.ndarray:
    """Sorted packed keys of all degree-d monomials in (t, t1..t5)."""
    ring = weyl.base_ring(p)
    keys = []

    def rec(i, rem, key):
        if i == 5:
            keys.append(key | (rem << ring.shifts[5]))
            return
        for e in range(rem + 1):
            rec(i + 1, rem - e, key | (e << ring.shifts[i]))

    rec(0, d, 0)
    arr = np.array(keys, dtype=np.uint64)
    arr.sort()
    return arr


def orbit_basis(d: int, p: int = 3) -> list[dict]:
    """Term maps of the orbit-sum basis of the R_2..R_6 fixed space."""
    ring = weyl.base_ring(p)
    seen = set()
    basis = []
    for a in range(d + 1):
        rem = d - a
        # partitions of rem into at most 5 parts, all of one parity
        for part in _partitions5(rem):
            if part in seen:
                continue
            seen.add(part)
            parities = {e % 2 for e in part}
            if len(parities) > 1:
                continue
            terms = {}
            for perm in set(permutations(part)):
                exps = (a,) + perm
                terms[ring.pack(exps)] = 1
            basis.append(terms)
    return basis


def _partitions5(n: int):
    """Weakly decreasing 5-tuples of non-negative ints summing to n."""
    out = []

    def rec(rem, maxpart, acc):
        if len(acc) == 5:
            if rem == 0:
                out.append(tuple(acc))
            return
        hi = min(rem, maxpart)
        lo = -(-rem // (5 - len(acc)))  # ceil: keep weakly decreasing feasible
        for e in range(hi, -1, -1):
            if e * (5 - len(acc)) < rem:
                break
            rec(rem - e, e, acc + [e])

    rec(n, n, [])
    return out


def _column(terms: dict, keys: np.ndarray, p: int) -> np.ndarray:
    col = np.zeros(len(keys), dtype=np.uint8)
    if terms:
        tk = np.fromiter(terms.keys(), dtype=np.uint64, count=len(terms))
        tv = np.fromiter((v % p for v in terms.values()), dtype=np.uint8, count=len(terms))
        idx = np.searchsorted(keys, tk)
        col[idx] = tv
    return col


def _kernel(A: np.ndarray, k: int, p: int) -> list[np.ndarray]:
    """Kernel vectors of the N x k matrix A over GF(p), via column reduction.

    Arithmetic stays in uint8 by always adding (p - c) times the pivot
    column instead of subtracting, so values never go negative.
    """
    N = A.shape[0]
    dtype = np.uint8 if p * p < 250 else np.int32
    aug = np.concatenate([A % p, np.eye(k, dtype=A.dtype)], axis=0).astype(dtype)
    pivot_of_col = [-1] * k
    used_rows: set[int] = set()
    for j in range(k):
        col = aug[:N, j]
        nz = np.nonzero(col)[0]
        piv = next((r for r in nz if r not in used_rows), None)
        if piv is None:
            continue
        used_rows.add(piv)
        pivot_of_col[j] = piv
        inv = pow(int(aug[piv, j]), p - 2, p)
        if inv != 1:
            aug[:, j] = (aug[:, j] * inv) % p
        for jj in range(k):
            c = int(aug[piv, jj])
            if jj != j and c:
                aug[:, jj] = (aug[:, jj] + (p - c) * aug[:, j]) % p
    return [
        np.array(aug[N:, j], dtype=np.uint8)
        for j in range(k)
        if pivot_of_col[j] < 0
    ]


def invariant_kernel(d: int, p: int = 3, cap: int | None = None):
    """Orbit basis plus kernel coordinate vectors for degree d."""
    cap = DEFAULT_CAP if cap is None else cap
    n = slice_size(d)
    if n > cap:
        raise RuntimeError(
            f"degree {d} slice has {n} monomials, over the cap {cap}; "
            "raise E6INV_ORACLE_CAP to proceed"
        )
    ring = weyl.base_ring(p)
    basis = orbit_basis(d, p)
    if not basis:
        return [], []
    keys = slice_keys(d, p)
    action = weyl._compiled_action(1, p)
    cols = []
    for terms in basis:
        image = action.apply(SparsePoly(ring, dict(terms)))
        diff = {k: (image.terms.get(k, 0) - terms.get(k, 0)) % p
                for k in set(image.terms) | set(terms)}
        diff = {k: v for k, v in diff.items() if v}
        cols.append(_column(diff, keys, p))
    A = np.stack(cols, axis=1)
    return basis, _kernel(A, len(basis), p)


def invariant_dimension(d: int, p: int = 3, cap: int | None = None) -> int:
    """dim of the degree-d slice of the full invariant ring over GF(p)."""
    if d == 0:
        return 1
    basis, kernel = invariant_kernel(d, p, cap)
    return len(kernel)


def sample_invariant_basis(d: int, p: int = 3, cap: int | None = None) -> list[SparsePoly]:
    """An explicit GF(p)-basis of the degree-d invariant slice."""
    ring = weyl.base_ring(p)
    if d == 0:
        return [ring.one()]
    basis, kernel = invariant_kernel(d, p, cap)
    out = []
    for vec in kernel:
        terms: dict = {}
        for c, orbit in zip(vec, basis):
            if c:
                for k, v in orbit.items():
                    nv = (terms.get(k, 0) + c * v) % p
                    if nv:
                        terms[k] = nv
                    else:
                        terms.pop(k, None)
        out.append(SparsePoly(ring, terms))
    return out


@lru_cache(maxsize=None)
def dimension_sweep(max_cohomological_degree: int, p: int = 3) -> dict[int, int]:
    """Invariant dimensions for all even cohomological degrees up to the bound."""
    out = {}
    for d in range(0, max_cohomological_degree // 2 + 1):
        out[2 * d] = invariant_dimension(d, p)
    return out
