import cmath
from fractions import Fraction

import pytest

from braidqubits.arith import EXACT, FLOAT, Mat, acomm, comm, is_zero, max_abs
from braidqubits.qgroup import (
    DEGENERATE,
    casimir,
    classical_rep,
    coproduct_raising,
    cross_check,
    deformed_anticommutator_target,
    eta_of_level,
    graded_block,
    gram_adjoint,
    interior,
    is_degenerate,
    materialize_word,
    multi_hamiltonian,
    qgroup_spectrum,
    quantum_rep,
    three_particle_kill_polynomial,
)
from braidqubits.braided_fock import SectorSpec, spectrum, vacuum_state
from braidqubits.qubit_core import INF, BraidLevel, level_from_s


def icmp(a, b, margin=2, tol=0.0):
    return is_zero(interior(a, margin) - interior(b, margin), tol)


# -- classical algebra ---------------------------------------------------------

@pytest.mark.parametrize("lam", [0, Fraction(1, 2)])
def test_classical_relations_on_interior(lam):
    rep = classical_rep(8, lam, EXACT)
    half = Fraction(1, 2)
    assert icmp(comm(rep.h, rep.f_plus), rep.f_plus.scale(half))
    assert icmp(comm(rep.h, rep.f_minus), rep.f_minus.scale(-half))
    assert icmp(comm(rep.h, rep.e_plus), rep.e_plus)
    assert icmp(comm(rep.h, rep.e_minus), -rep.e_minus)
    assert icmp(acomm(rep.f_plus, rep.f_minus), rep.h.scale(half))
    assert icmp(acomm(rep.f_plus, rep.f_plus), rep.e_plus.scale(half))
    assert icmp(acomm(rep.f_minus, rep.f_minus), rep.e_minus.scale(-half))
    assert icmp(comm(rep.e_plus, rep.e_minus), rep.h.scale(2))
    assert icmp(comm(rep.e_plus, rep.f_minus), -rep.f_plus)
    assert icmp(comm(rep.e_minus, rep.f_plus), -rep.f_minus)


def test_casimir_commutes_on_interior():
    rep = classical_rep(10, 0, EXACT)
    c2 = casimir(rep)
    for z in (rep.h, rep.f_plus, rep.f_minus, rep.e_plus, rep.e_minus):
        assert icmp(comm(c2, z), Mat.zeros(10, 10, EXACT), margin=3)


def test_gram_adjoint_swaps_raising_and_lowering():
    rep = classical_rep(8, Fraction(1, 2), EXACT)
    assert rep.gram is not None
    assert gram_adjoint(rep, rep.f_plus) == rep.f_minus
    assert gram_adjoint(rep, rep.f_minus) == rep.f_plus
    # vacuum weight zero makes the form degenerate
    assert classical_rep(8, 0, EXACT).gram is None


def test_classical_cutoff_validation():
    with pytest.raises(ValueError):
        classical_rep(3, 0)


# -- deformed algebra ----------------------------------------------------------

def test_quantum_relations_generic_real_eta():
    eta = 0.37
    rep = quantum_rep(eta, 9)
    assert not rep.degenerate
    assert icmp(comm(rep.h, rep.f_plus), rep.f_plus.scale(0.5), tol=1e-12)
    lhs = acomm(rep.f_plus, rep.f_minus)
    assert icmp(lhs, deformed_anticommutator_target(rep), tol=1e-9)


def test_quantum_limit_to_classical():
    rep = quantum_rep(1e-6, 9)
    target = rep.h.scale(0.5)
    assert max_abs(interior(acomm(rep.f_plus, rep.f_minus), 2)
                   - interior(target, 2)) < 1e-4


def test_degenerate_points():
    assert is_degenerate(0j)
    assert is_degenerate(1j * cmath.pi)          # the s = 4 point
    assert quantum_rep(1j * cmath.pi, 5).status == DEGENERATE
    assert quantum_rep(1j * cmath.pi, 5).f_minus is None
    # exact markers: y in eta = i*pi*y
    assert is_degenerate(Fraction(0))            # s = 2
    assert is_degenerate(Fraction(1))            # s = 4
    assert is_degenerate(Fraction(2))            # untruncated point
    assert not is_degenerate(Fraction(2, 3))     # s = 3
    rep = quantum_rep(Fraction(2, 3), 5)
    assert not rep.degenerate and rep.f_minus is not None
    assert icmp(acomm(rep.f_plus, rep.f_minus), deformed_anticommutator_target(rep))


def test_conjugation_moves_raising_by_half_unit():
    rep = quantum_rep(0.83, 7)
    for u in (0.4, -1.1, 0.3 + 0.9j):
        eu = Mat.diag([cmath.exp(u * n / 2) for n in range(7)], FLOAT)
        eu_inv = Mat.diag([cmath.exp(-u * n / 2) for n in range(7)], FLOAT)
        lhs = eu * rep.f_plus * eu_inv
        rhs = rep.f_plus.scale(cmath.exp(u / 2))
        assert max_abs(lhs - rhs) < 1e-9


# -- graded tensor blocks --------------------------------------------------------

def test_two_slot_exchange_relation():
    for eta in (Fraction(2, 3), Fraction(6, 5), 0.91):
        rep = quantum_rep(eta, 4)
        a1 = graded_block(rep, 1, 2)
        a2 = graded_block(rep, 2, 2)
        factor = _exp_minus_half(eta)
        lhs = a2 * a1
        rhs = (a1 * a2).scale(factor).scale(-1)
        tol = 0.0 if rep.mode == EXACT else 1e-12
        assert is_zero(lhs - rhs, tol)


def _exp_minus_half(eta):
    from braidqubits.qgroup import _exp_eta

    return _exp_eta(eta, Fraction(-1, 2))


def test_three_slot_exchange_relations():
    rep = quantum_rep(Fraction(2, 3), 4)
    blocks = [graded_block(rep, k, 3) for k in (1, 2, 3)]
    factor = _exp_minus_half(Fraction(2, 3))
    for k, kp in [(0, 1), (0, 2), (1, 2)]:
        lhs = blocks[kp] * blocks[k]
        rhs = (blocks[k] * blocks[kp]).scale(factor).scale(-1)
        assert is_zero(lhs - rhs)


def test_blocks_commute_when_exp_half_is_minus_one():
    # e^(-eta/2) = -1 at eta = 2*pi*i, so the exchange has no phase at all
    rep = quantum_rep(Fraction(2), 4)
    a1 = graded_block(rep, 1, 2)
    a2 = graded_block(rep, 2, 2)
    assert is_zero(a2 * a1 - a1 * a2)


def test_coassociativity_of_materialized_coproduct():
    rep = quantum_rep(Fraction(2, 3), 4)
    eye = Mat.identity(4, EXACT)
    kp, km, fp = rep.exp_plus, rep.exp_minus, rep.f_plus
    # grouping (Delta x id) Delta
    lhs = materialize_word([(fp, 1), (kp, 0), (kp, 0)], rep.parity) \
        + materialize_word([(km, 0), (fp, 1), (kp, 0)], rep.parity) \
        + materialize_word([(km, 0), (km, 0), (fp, 1)], rep.parity)
    rhs = coproduct_raising(rep, 3)
    assert is_zero(lhs - rhs)
    # grouping (id x Delta) Delta gives the same three words, with the middle
    # dressing distributed the other way; check block by block against words
    alt = materialize_word([(fp, 1), (kp * eye, 0), (kp, 0)], rep.parity) \
        + materialize_word([(km, 0), (fp, 1), (kp, 0)], rep.parity) \
        + materialize_word([(km, 0), (km * eye, 0), (fp, 1)], rep.parity)
    assert is_zero(alt - rhs)


def test_multi_hamiltonian_counts_quanta():
    rep = quantum_rep(Fraction(2, 3), 3)
    h2 = multi_hamiltonian(rep, 2)
    raised = coproduct_raising(rep, 2) * _vacuum_column(rep, 2)
    assert is_zero(h2 * raised - raised)  # one quantum <-> energy 1


def _vacuum_column(rep, n_slots):
    dim = rep.cutoff ** n_slots
    col = [0] * dim
    col[0] = 1
    return Mat.column(col, rep.mode)


# -- spectra and the cross-check ---------------------------------------------------

def test_qgroup_spectrum_examples():
    assert qgroup_spectrum(Fraction(0), 2) == [0, 1]          # eta = 0, t = 1
    assert qgroup_spectrum(Fraction(2, 3), 3) == [0, 1, 2]    # third root
    assert qgroup_spectrum(Fraction(2), 3) == [0, 1, 2, 3]    # untruncated
    assert qgroup_spectrum(Fraction(0), 1) == [0, 1]


def test_projected_two_quantum_state_dies_at_eta_zero():
    rep = quantum_rep(Fraction(0), 4)
    delta = coproduct_raising(rep, 2)
    second = delta * (delta * _vacuum_column(rep, 2))
    proj1 = Mat.diag([1, 1] + [0] * (rep.cutoff - 2), EXACT)
    proj = materialize_word([(proj1, 0), (proj1, 0)], rep.parity)
    assert is_zero(proj * second)


def test_cross_check_matches_braided_spectra():
    levels = [level_from_s(s) for s in (2, 3, 4, 5)] + [BraidLevel(INF)]
    report = cross_check(levels, range(1, 6), EXACT)
    assert report["all_match"]
    for cell in report["cells"]:
        assert cell["match"], cell


def test_cross_check_float_mode():
    report = cross_check([level_from_s(3), BraidLevel(INF)], range(1, 5), FLOAT)
    assert report["all_match"]


def test_kill_polynomial():
    assert three_particle_kill_polynomial() == (-1, 2, -2, 1)  # t^3-2t^2+2t-1


def test_deformation_parameter_cubes_to_one_at_third_root():
    from braidqubits.arith import exp_i_pi

    y = eta_of_level(level_from_s(3))
    assert y == Fraction(2, 3)
    q3 = exp_i_pi(y)          # q = e^(eta)
    assert q3 ** 3 == 1
    assert q3 != 1
