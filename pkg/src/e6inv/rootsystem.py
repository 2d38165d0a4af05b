"""Exact E6 root-system data in the Bourbaki numbering.

Everything here is characteristic zero: fundamental-weight coordinates are
exact rationals, reflection matrices are integer matrices in the beta
(fundamental weight) basis, and the full Weyl group is enumerated by
breadth-first closure over matrix products.  The mod-p story (reduction of
the reflection action on the t-basis) is derived from this module, which
keeps the linear-algebra dimension oracle independent of the hand-tabulated
mod-3 action used elsewhere.

Bases:
  beta   coordinates in the fundamental weights beta_1..beta_6
  tau    the auxiliary basis tau_1..tau_6 (with x = beta_2)
  t      the basis (t, t_1, ..., t_5) used for H^*(BT)
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations

import numpy as np

# Dynkin diagram edges of E6 (Bourbaki): chain 1-3-4-5-6 with 2 attached to 4.
EDGES = {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}

DEFAULT_GROUP_CAP = int(os.environ.get("E6INV_GROUP_CAP", "1000000"))


def cartan_matrix() -> list[list[int]]:
    """<alpha_i, alpha_j> with the normalization <alpha_i, alpha_i> = 2."""
    C = [[0] * 6 for _ in range(6)]
    for i in range(1, 7):
        for j in range(1, 7):
            if i == j:
                C[i - 1][j - 1] = 2
            elif (min(i, j), max(i, j)) in EDGES:
                C[i - 1][j - 1] = -1
    return C


CARTAN = cartan_matrix()


def reflection_matrix(i: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of R_i on beta coordinates (column vectors), exact integers.

    R_i fixes beta_j for j != i and sends beta_i to beta_i - alpha_i, where
    alpha_i = sum_j <alpha_i, alpha_j> beta_j.
    """
    if not 1 <= i <= 6:
        raise ValueError("generator index must be in 1..6")
    M = [[1 if r == c else 0 for c in range(6)] for r in range(6)]
    for r in range(6):
        M[r][i - 1] -= CARTAN[i - 1][r]
    return tuple(tuple(row) for row in M)


REFLECTIONS = {i: reflection_matrix(i) for i in range(1, 7)}


def mat_vec(M, v):
    return tuple(sum(M[r][c] * v[c] for c in range(6)) for r in range(6))


def reflect(i: int, v) -> tuple:
    """Apply R_i to a weight vector in beta coordinates."""
    return mat_vec(REFLECTIONS[i], v)


def _frac_matmul(A, B):
    return tuple(
        tuple(sum(A[r][k] * B[k][c] for k in range(6)) for c in range(6))
        for r in range(6)
    )


def _frac_inverse(A):
    n = 6
    aug = [[Fraction(A[r][c]) for c in range(n)] + [Fraction(int(r == c)) for c in range(n)]
           for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# -- pairing ------------------------------------------------------------------

# Gram matrix of the beta basis: <beta_j, alpha_i> = delta_ij forces
# G = C^{-1} (C is symmetric for a simply-laced diagram).
GRAM = _frac_inverse(CARTAN)


def pairing(u, v) -> Fraction:
    return sum(
        Fraction(u[r]) * GRAM[r][c] * Fraction(v[c]) for r in range(6) for c in range(6)
    )


def beta(j: int) -> tuple:
    return tuple(Fraction(int(k == j - 1)) for k in range(6))


# -- tau and t bases ----------------------------------------------------------


def tau_vectors() -> dict[int, tuple]:
    """tau_1..tau_6 in beta coordinates, built by the defining reflections."""
    tau = {6: beta(6)}
    tau[5] = reflect(6, tau[6])
    tau[4] = reflect(5, tau[5])
    tau[3] = reflect(4, tau[4])
    tau[2] = reflect(3, tau[3])
    tau[1] = reflect(1, tau[2])
    return tau


TAU = tau_vectors()
X_WEIGHT = beta(2)


def _vec_scale(v, c):
    return tuple(Fraction(x) * c for x in v)


def _vec_add(*vs):
    return tuple(sum(col) for col in zip(*vs))


def t_basis_vectors() -> list[tuple]:
    """The vectors (t, t_1..t_5) in beta coordinates."""
    t = _vec_add(X_WEIGHT, _vec_scale(TAU[1], -1))
    out = [t]
    for i in range(1, 6):
        out.append(_vec_add(TAU[i + 1], _vec_scale(t, Fraction(-1, 2))))
    return out


T_BASIS = t_basis_vectors()
# columns of _B are the t-basis vectors; its inverse converts beta -> t coords
_B = tuple(tuple(T_BASIS[c][r] for c in range(6)) for r in range(6))
_B_INV = _frac_inverse(_B)


def to_t_basis(v) -> tuple:
    """Exact coordinates of a beta-coordinate weight in (t, t1..t5)."""
    return mat_vec(_B_INV, tuple(Fraction(x) for x in v))


def from_t_basis(u) -> tuple:
    return mat_vec(_B, tuple(Fraction(x) for x in u))


def action_on_t_basis(i: int) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of R_i on (t, t1..t5) coordinates, exact rationals."""
    Mi = tuple(tuple(Fraction(x) for x in row) for row in REFLECTIONS[i])
    return _frac_matmul(_B_INV, _frac_matmul(Mi, _B))


def action_mod_p(i: int, p: int = 3) -> tuple[tuple[int, ...], ...]:
    """R_i on t coordinates reduced mod p (denominators are powers of 2)."""
    out = []
    for row in action_on_t_basis(i):
        r = []
        for c in row:
            den = c.denominator
            if den % p == 0:
                raise ValueError(f"action not reducible mod {p}")
            r.append(c.numerator * pow(den, p - 2, p) % p)
        out.append(tuple(r))
    return tuple(out)


# -- Weyl group enumeration -----------------------------------------------------


def enumerate_group(generators=(1, 2, 3, 4, 5, 6), cap: int | None = None,
                    keep_elements: bool = False, keep_words: bool = False):
    """BFS closure of the given reflections; returns (order, elements|None).

    Elements are deduplicated by exact integer matrix equality.  With
    keep_words, elements are (matrix, shortest-word) pairs; order-only
    queries store nothing.  Raises if the closure exceeds the cap
    (default 10^6, env E6INV_GROUP_CAP).
    """
    cap = DEFAULT_GROUP_CAP if cap is None else cap
    gen_list = list(generators)
    gens = np.array([REFLECTIONS[i] for i in gen_list], dtype=np.int64)
    ident = np.eye(6, dtype=np.int64)
    seen = {ident.tobytes()}
    frontier = ident[None, :, :]
    words: list[tuple[int, ...]] = [()]
    store = None
    if keep_elements or keep_words:
        store = [(ident, ()) if keep_words else ident]
    while frontier.shape[0]:
        # one BFS layer: all products frontier x generator
        prods = np.einsum("fij,gjk->fgik", frontier, gens)
        fresh = []
        fresh_words = []
        for f in range(prods.shape[0]):
            for g in range(prods.shape[1]):
                m = prods[f, g]
                b = m.tobytes()
                if b not in seen:
                    seen.add(b)
                    fresh.append(m)
                    if keep_words:
                        fresh_words.append(words[f] + (gen_list[g],))
                    if store is not None:
                        store.append(
                            (m, fresh_words[-1]) if keep_words else m
                        )
                    if len(seen) > cap:
                        raise RuntimeError(f"group enumeration exceeded cap {cap}")
        frontier = (
            np.array(fresh, dtype=np.int64) if fresh else np.empty((0, 6, 6), np.int64)
        )
        words = fresh_words
    return len(seen), store


# -- the 27-element weight set S ----------------------------------------------


class SetSError(ValueError):
    """Distinctness or closure failure while building S, with a witness."""


def build_set_S() -> list[tuple]:
    """The 27 weights {w_i + w_j (i<j), x - w_i, -x - w_i}, w_i = 2 tau_i - x.

    Verifies pairwise distinctness and closure under every generator; the
    orbit of any single element is checked to be all of S.
    """
    w = {i: _vec_add(_vec_scale(TAU[i], 2), _vec_scale(X_WEIGHT, -1)) for i in range(1, 7)}
    S = [_vec_add(w[i], w[j]) for i, j in combinations(range(1, 7), 2)]
    S += [_vec_add(X_WEIGHT, _vec_scale(w[i], -1)) for i in range(1, 7)]
    S += [_vec_add(_vec_scale(X_WEIGHT, -1), _vec_scale(w[i], -1)) for i in range(1, 7)]
    if len(set(S)) != 27:
        raise SetSError(f"expected 27 distinct weights, got {len(set(S))}")
    sset = frozenset(S)
    for i in range(1, 7):
        image = frozenset(reflect(i, v) for v in S)
        if image != sset:
            raise SetSError(f"S not closed under generator {i}")
    orbit = {S[0]}
    frontier = [S[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, 7):
                u = reflect(i, v)
                if u not in orbit:
                    orbit.add(u)
                    nxt.append(u)
        frontier = nxt
    if orbit != sset:
        raise SetSError("Weyl orbit of a single element is not all of S")
    return S


def weight_mod_p(v, p: int = 3) -> tuple[int, ...]:
    """Reduce the t-coordinates of a beta-coordinate weight mod p."""
    out = []
    for c in to_t_basis(v):
        den = c.denominator
        if den % p == 0:
            raise ValueError(f"weight not reducible mod {p}")
        out.append(c.numerator * pow(den, p - 2, p) % p)
    return tuple(out)


def set_S_mod_p(p: int = 3) -> list[tuple[int, ...]]:
    """S reduced to t-coordinate vectors mod p; fails loudly on collisions."""
    reduced = [weight_mod_p(v, p) for v in build_set_S()]
    if len(set(reduced)) != 27:
        raise SetSError(f"elements of S collide mod {p}")
    return reduced
