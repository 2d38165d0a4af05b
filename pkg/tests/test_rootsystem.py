"""Root-system data: pairing, bases, group orders, the weight set S."""

from fractions import Fraction

import pytest

from e6inv import rootsystem as rs


def test_cartan_matrix_shape():
    C = rs.CARTAN
    assert all(C[i][i] == 2 for i in range(6))
    assert C[0][2] == C[2][0] == -1  # edge 1-3
    assert C[1][3] == C[3][1] == -1  # edge 2-4
    assert C[0][1] == 0


def test_reflections_are_involutions():
    for i in range(1, 7):
        M = rs.REFLECTIONS[i]
        sq = rs._frac_matmul(M, M)
        assert sq == tuple(tuple(1 if r == c else 0 for c in range(6)) for r in range(6))


def test_reflection_fixes_other_weights():
    for i in range(1, 7):
        for j in range(1, 7):
            if i != j:
                assert rs.reflect(i, rs.beta(j)) == rs.beta(j)


def test_reflect_beta6():
    # R6(beta6) = beta5 - beta6 (= tau5)
    assert rs.reflect(6, rs.beta(6)) == rs.TAU[5]


def test_pairing_preserved():
    vs = [rs.beta(j) for j in range(1, 7)]
    for i in range(1, 7):
        for u in vs:
            for v in vs:
                assert rs.pairing(rs.reflect(i, u), rs.reflect(i, v)) == rs.pairing(u, v)


def test_beta_alpha_duality():
    # <beta_j, alpha_i> = delta_ij, with alpha_i = sum_k C[i][k] beta_k
    for i in range(6):
        alpha = tuple(rs.CARTAN[i][k] for k in range(6))
        for j in range(6):
            assert rs.pairing(rs.beta(j + 1), alpha) == (1 if i == j else 0)


def test_x_is_average_of_taus():
    total = rs._vec_add(*[rs.TAU[i] for i in range(1, 7)])
    assert tuple(Fraction(v, 3) for v in total) == rs.X_WEIGHT


def test_t_basis_round_trip():
    for j in range(1, 7):
        v = rs.beta(j)
        assert rs.from_t_basis(rs.to_t_basis(v)) == v
    assert rs.to_t_basis(rs.beta(1)) == (1, 0, 0, 0, 0, 0)
    assert rs.to_t_basis(rs.beta(6)) == (Fraction(1, 2), 0, 0, 0, 0, 1)


def test_x_reduces_to_minus_c1():
    # x = beta_2 = -c1 mod 3 in t-coordinates
    assert rs.weight_mod_p(rs.X_WEIGHT, 3) == (0, 2, 2, 2, 2, 2)


def test_c1_combination():
    # c1 = t1+...+t5 = 2x - (3/2) t
    c1 = rs.from_t_basis((0, 1, 1, 1, 1, 1))
    want = rs._vec_add(rs._vec_scale(rs.X_WEIGHT, 2),
                       rs._vec_scale(rs.beta(1), Fraction(-3, 2)))
    assert c1 == want


def test_group_orders():
    order, _ = rs.enumerate_group((1, 2, 3, 4, 5, 6))
    assert order == 51840 == 2 ** 7 * 3 ** 4 * 5
    order5, _ = rs.enumerate_group((2, 3, 4, 5, 6))
    assert order5 == 1920 == 2 ** 7 * 3 * 5
    assert rs.enumerate_group((6,))[0] == 2
    # index 27 = 3^3
    assert order // order5 == 27


def test_group_cap():
    with pytest.raises(RuntimeError):
        rs.enumerate_group((1, 2, 3, 4, 5, 6), cap=100)


def test_set_S():
    S = rs.build_set_S()
    assert len(S) == 27
    reduced = rs.set_S_mod_p(3)
    assert len(set(reduced)) == 27


def test_action_mod3_matches_table():
    # R1 on t-coordinates mod 3: column c is the image of the c-th variable
    A = rs.action_mod_p(1, 3)
    col = lambda c: tuple(A[r][c] for r in range(6))
    assert col(0) == (1, 1, 2, 2, 2, 2)   # t -> t - t1 - c1
    assert col(1) == (0, 0, 1, 1, 1, 1)   # t1 -> -t1 + c1
    assert col(2) == (0, 1, 0, 2, 2, 2)   # t2 -> t2 - t1 - c1
    A2 = rs.action_mod_p(2, 3)
    assert tuple(A2[r][1] for r in range(6)) == (0, 0, 2, 0, 0, 0)  # t1 -> -t2


def test_rational_action_table():
    # the rational reflection table for R1 (quarters and halves)
    A = rs.action_on_t_basis(1)
    col = lambda c: tuple(A[r][c] for r in range(6))
    # t -> (1/4) t - t1 + (1/2) c1
    assert col(0) == (Fraction(1, 4), Fraction(-1, 2), Fraction(1, 2),
                      Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def test_rational_action_r1_on_t():
    # image of t under R1: (1/4)t - t1 + (1/2)c1 means coefficients
    # (1/4, -1/2, 1/2, 1/2, 1/2, 1/2) after expanding c1 = sum t_i
    A = rs.action_on_t_basis(1)
    img_t = tuple(A[r][0] for r in range(6))
    want = (Fraction(1, 4), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2),
            Fraction(1, 2), Fraction(1, 2))
    assert img_t == want
