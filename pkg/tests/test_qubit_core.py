import itertools
from fractions import Fraction

import pytest

from braidqubits.arith import EXACT, FLOAT, CycScalar, Mat, acomm, comm, cyc, exp_i_pi, is_zero
from braidqubits.qubit_core import (
    GENERIC,
    INF,
    BraidLevel,
    b_matrix,
    b_matrix_from_t,
    b_poly,
    braid_relation_residual,
    convert_param,
    f_factor,
    gl11,
    level_from_f,
    level_from_g,
    level_from_s,
    level_from_t,
    level_of_root,
)


def test_gl11_bracket_table():
    ops = gl11(EXACT)
    a, b, g, d = ops.alpha, ops.beta, ops.gamma, ops.delta
    assert comm(a, b) == b
    assert comm(a, g) == -g
    assert is_zero(comm(a, d))
    assert comm(d, b) == -b
    assert comm(d, g) == g
    assert is_zero(acomm(b, b))
    assert is_zero(acomm(g, g))
    assert acomm(b, g) == a + d
    # mixed even-odd pairs not listed above also close correctly
    assert comm(a, a) == Mat.zeros(2, 2, EXACT)
    assert comm(d, d) == Mat.zeros(2, 2, EXACT)


# -- truncation polynomials ------------------------------------------------

def test_b_poly_values():
    one = CycScalar.one(1)
    assert b_poly(2, one) == 0                       # b_2(1) = 1 - t
    for n in range(1, 9):
        assert b_poly(n, CycScalar.rational(-1)) == n
    t3 = exp_i_pi(Fraction(1, 3))
    assert b_poly(3, t3) == 0
    assert b_poly(2, t3) != 0
    assert f_factor(0, t3) == 1
    assert f_factor(3, t3) == 0
    assert f_factor(2, t3) != 0


def test_b_poly_roots_are_roots_of_unity():
    # all k-1 roots of b_k show up among the 2k-th roots of unity
    for k in range(2, 9):
        m = 2 * k
        roots = [j for j in range(m) if b_poly(k, cyc(m, j)) == 0]
        assert len(roots) == k - 1
        for j in roots:
            z = cyc(m, j)
            assert z * z.conjugate() == 1


def test_level_of_root():
    assert level_of_root(CycScalar.one(1)) == 2
    assert level_of_root(exp_i_pi(Fraction(1, 2))) == 4
    assert level_of_root(CycScalar.rational(-1)) == INF
    assert level_of_root(exp_i_pi(Fraction(1, 3))) == 3
    assert level_of_root(exp_i_pi(Fraction(5, 3))) == 3
    # an exact unit-circle element that is not a root of unity
    q = CycScalar(4, [Fraction(3, 5), Fraction(4, 5), 0, 0])
    assert q * q.conjugate() == 1
    assert level_of_root(q, k_max=16) == GENERIC
    # search bound respected
    t30 = level_from_s(30).t(EXACT)
    assert level_of_root(t30, k_max=16) == GENERIC
    assert level_of_root(t30, k_max=40) == 30
    with pytest.raises(ValueError):
        level_of_root(CycScalar.rational(2))
    with pytest.raises(ValueError):
        level_of_root(0.5 + 0j)


def test_level_of_root_float_mode():
    import cmath

    assert level_of_root(cmath.exp(1j * cmath.pi / 2)) == 4
    assert level_of_root(-1 + 0j) == INF
    assert level_of_root(cmath.exp(0.7j), k_max=16) == GENERIC


def test_levels_of_standard_representatives():
    import cmath

    for s in range(2, 9):
        t = cmath.exp(1j * cmath.pi * (2 / s - 1))
        assert level_of_root(t) == s
        assert level_of_root(level_from_s(s).t(EXACT)) == s


# -- parametrization conversions --------------------------------------------

def test_convert_param_examples():
    lv = convert_param("g", Fraction(1, 2))
    assert lv.s == 2
    assert lv.t(EXACT) == 1
    assert lv.eta_over_i_pi == 0

    lv = convert_param("g", Fraction(1, 3))
    assert lv.eta_over_i_pi == Fraction(2, 3)        # eta = 2*pi*i/3
    assert lv.t(EXACT) == exp_i_pi(Fraction(-1, 3))

    lv = convert_param("g", 0)
    assert lv.s == INF
    assert lv.t(EXACT) == -1
    assert lv.eta_over_i_pi == 2                     # eta = 2*pi*i


def test_param_round_trips():
    for s in [2, 3, 4, 5, 7]:
        for r in range(1, s):
            if Fraction(r, s).denominator != s:
                continue
            lv = BraidLevel(s, r)
            assert convert_param("f", lv.f).g == lv.g
            assert convert_param("t", lv.t(EXACT)).g == lv.g
            assert convert_param("eta", lv.eta_over_i_pi).g == lv.g
            assert convert_param("eta", lv.eta()).g == lv.g
            assert level_from_g(lv.g) == lv


def test_param_validation():
    with pytest.raises(ValueError):
        level_from_g(Fraction(3, 2))
    with pytest.raises(ValueError):
        level_from_f(Fraction(5, 2))
    with pytest.raises(ValueError):
        BraidLevel(1)
    with pytest.raises(ValueError):
        BraidLevel(4, 2)  # not coprime
    with pytest.raises(ValueError):
        convert_param("q", 1)
    # representatives with r > 1 are accepted and report the same level
    assert level_from_t(exp_i_pi(Fraction(1, 3))).s == 3
    assert level_from_t(exp_i_pi(Fraction(1, 3))).r == 2


# -- the braid matrix ---------------------------------------------------------

def test_b_matrix_at_t_equal_one():
    b1 = b_matrix(level_from_s(2), EXACT)
    assert b1 == Mat.from_rows(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]], EXACT)
    assert b1 * b1 == Mat.identity(4, EXACT)


def test_braid_relation():
    for s in [2, 3, 4, INF]:
        lv = level_from_s(s) if s != INF else BraidLevel(INF)
        assert is_zero(braid_relation_residual(lv, EXACT))
    assert is_zero(braid_relation_residual(exp_i_pi(Fraction(1, 3))))


def _brute_force_det(m: Mat):
    n = m.rows
    total = None
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = m.entry(0, perm[0])
        for i in range(1, n):
            term = term * m.entry(i, perm[i])
        term = term * sign
        total = term if total is None else total + term
    return total


def test_b_matrix_determinant_is_t_squared():
    for s in [2, 3, 4, 5, INF]:
        lv = level_from_s(s) if s != INF else BraidLevel(INF)
        t = lv.t(EXACT)
        assert _brute_force_det(b_matrix(lv, EXACT)) == t * t


def test_b_matrix_float_mode():
    lv = level_from_s(3)
    bf = b_matrix(lv, FLOAT)
    assert bf.mode == FLOAT
    assert is_zero(braid_relation_residual(lv, FLOAT), 1e-12)
