"""Lowest-weight representations of osp(1|2) and its one-parameter deformation.

The classical five-generator superalgebra is realized on a truncated
lowest-weight module with H = diag(lambda + n/2) and the raising odd
generator acting as the unit shift; relations hold away from the truncation
boundary.  The deformed algebra keeps [H, F+-] = +-F+-/2 and replaces the
odd anticommutator by sinh(eta*H)/sinh(2*eta), which fixes the lowering
matrix elements through the recursion c_0 = 0,
c_n + c_{n+1} = sinh(eta*n/2)/sinh(2*eta) at vacuum weight zero.

Multi-particle operators are materialized on ordinary tensor products with
group-like dressings e^(-eta*H/2) to the left and e^(eta*H/2) to the right
of the acting slot; Koszul signs are baked in by parity dressings so plain
matrix multiplication reproduces the graded tensor algebra.  Keeping only
per-slot occupations 0 and 1 (a projector applied after the fact) turns the
deformed coproduct tower into the braided-qubit spectra under t = e^(-eta/2).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .arith import (
    CycScalar,
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    Mat,
    exp_i_pi,
    kron_all,
    scalar_one,
    scalar_zero,
    sin_pi,
    s_is_zero,
)
from .braided_fock import SectorSpec, spectrum
from .qubit_core import BraidLevel

Eta = Union[Fraction, int, complex]

DEGENERATE = "degenerate"


def _eta_mode(eta: Eta) -> str:
    return EXACT if isinstance(eta, (int, Fraction)) else FLOAT


def _exp_eta(eta: Eta, mult: Fraction):
    """e^(eta * mult), with exact eta given through y in eta = i*pi*y."""
    if isinstance(eta, (int, Fraction)):
        return exp_i_pi(Fraction(eta) * mult)
    return cmath.exp(complex(eta) * float(mult))


def _sinh_ratio(eta: Eta, num_mult: Fraction):
    """sinh(eta*num_mult) / sinh(2*eta)."""
    if isinstance(eta, (int, Fraction)):
        y = Fraction(eta)
        return sin_pi(y * num_mult) / sin_pi(2 * y)
    e = complex(eta)
    return cmath.sinh(e * float(num_mult)) / cmath.sinh(2 * e)


def is_degenerate(eta: Eta) -> bool:
    """True when sinh(2*eta) = 0, where the lowering recursion is undefined."""
    if isinstance(eta, (int, Fraction)):
        return sin_pi(2 * Fraction(eta)).is_zero
    return abs(cmath.sinh(2 * complex(eta))) < 1e-12


# ----------------------------------------------------------------------
# classical representation
# ----------------------------------------------------------------------

@dataclass
class Osp12Rep:
    cutoff: int
    lam: Fraction
    h: Mat
    f_plus: Mat
    f_minus: Mat
    e_plus: Mat
    e_minus: Mat
    parity: Mat
    gram: tuple[Fraction, ...] | None  # weights of the invariant form, if positive


def classical_rep(cutoff: int, lam=0, mode: str = EXACT) -> Osp12Rep:
    """The lowest-weight module with H|n> = (lam + n/2)|n>, truncated at cutoff."""
    if cutoff < 4:
        raise ValueError("cutoff must be at least 4")
    lam = Fraction(lam)
    h = Mat.diag([lam + Fraction(n, 2) for n in range(cutoff)], mode) \
        if mode == EXACT else Mat.diag([float(lam) + n / 2 for n in range(cutoff)], FLOAT)
    f_plus = _shift_up(cutoff, [1] * (cutoff - 1), mode)
    cs = _classical_lowering(cutoff, lam)
    f_minus = _shift_down(cutoff, cs[1:], mode)
    e_plus = (f_plus * f_plus).scale(4)
    e_minus = (f_minus * f_minus).scale(-4)
    parity = Mat.diag([(-1) ** n for n in range(cutoff)], mode)
    gram = None
    if all(c > 0 for c in cs[1:]):
        weights = [Fraction(1)]
        for c in cs[1:]:
            weights.append(weights[-1] * c)
        gram = tuple(weights)
    return Osp12Rep(cutoff, lam, h, f_plus, f_minus, e_plus, e_minus, parity, gram)


def _classical_lowering(cutoff: int, lam: Fraction) -> list[Fraction]:
    # {F+, F-}|n> = (c_n + c_{n+1})|n> must equal (lam + n/2)/2
    cs = [Fraction(0)]
    for n in range(cutoff - 1):
        cs.append((lam + Fraction(n, 2)) / 2 - cs[-1])
    return cs


def _shift_up(n: int, amps: Sequence, mode: str) -> Mat:
    z = scalar_zero(mode)
    entries = [z] * (n * n)
    for k, a in enumerate(amps):
        entries[(k + 1) * n + k] = _num(a, mode)
    return Mat(n, n, entries, mode)


def _shift_down(n: int, amps: Sequence, mode: str) -> Mat:
    z = scalar_zero(mode)
    entries = [z] * (n * n)
    for k, a in enumerate(amps):
        entries[k * n + (k + 1)] = _num(a, mode)
    return Mat(n, n, entries, mode)


def _num(a, mode: str):
    if mode == EXACT:
        if isinstance(a, CycScalar):
            return a
        return CycScalar.rational(Fraction(a))
    if isinstance(a, CycScalar):
        return a.embed()
    return complex(a)


def casimir(rep: Osp12Rep) -> Mat:
    """H^2 + (E+E- + E-E+)/2 - (F+F- - F-F+)."""
    h2 = rep.h * rep.h
    e_part = (rep.e_plus * rep.e_minus + rep.e_minus * rep.e_plus).scale(Fraction(1, 2))
    f_part = rep.f_plus * rep.f_minus - rep.f_minus * rep.f_plus
    return h2 + e_part - f_part


def gram_adjoint(rep: Osp12Rep, m: Mat) -> Mat:
    """Adjoint with respect to the invariant form diag(gram)."""
    if rep.gram is None:
        raise ValueError("the invariant form is degenerate for this vacuum weight")
    s = Mat.diag(list(rep.gram), m.mode)
    s_inv = Mat.diag([1 / w for w in rep.gram], m.mode)
    return s_inv * _transpose(m) * s


def _transpose(m: Mat) -> Mat:
    return Mat(m.cols, m.rows,
               [m.entry(i, j) for j in range(m.cols) for i in range(m.rows)],
               m.mode)


def interior(m: Mat, margin: int = 2) -> Mat:
    """Drop the top `margin` levels, where shift truncation corrupts products."""
    k = m.rows - margin
    return Mat(k, k, [m.entry(i, j) for i in range(k) for j in range(k)], m.mode)


# ----------------------------------------------------------------------
# deformed representation
# ----------------------------------------------------------------------

@dataclass
class UqRep:
    eta: Eta
    cutoff: int
    mode: str
    h: Mat
    f_plus: Mat
    f_minus: Mat | None     # None when sinh(2*eta) = 0
    exp_plus: Mat           # e^(+eta*H/2)
    exp_minus: Mat          # e^(-eta*H/2)
    parity: Mat
    degenerate: bool

    @property
    def status(self) -> str:
        return DEGENERATE if self.degenerate else "ok"


def quantum_rep(eta: Eta, cutoff: int) -> UqRep:
    """Deformed lowest-weight module at vacuum weight zero.

    eta may be a complex number (float mode) or a rational y standing for
    eta = i*pi*y (exact mode).  At sinh(2*eta) = 0 the lowering generator is
    omitted; the truncation pipeline never needs it.
    """
    if cutoff < 3:
        raise ValueError("cutoff must be at least 3")
    mode = _eta_mode(eta)
    if mode == EXACT:
        h = Mat.diag([Fraction(n, 2) for n in range(cutoff)], EXACT)
    else:
        h = Mat.diag([n / 2 for n in range(cutoff)], FLOAT)
    f_plus = _shift_up(cutoff, [1] * (cutoff - 1), mode)
    exp_plus = Mat.diag([_exp_eta(eta, Fraction(n, 4)) for n in range(cutoff)], mode)
    exp_minus = Mat.diag([_exp_eta(eta, Fraction(-n, 4)) for n in range(cutoff)], mode)
    parity = Mat.diag([(-1) ** n for n in range(cutoff)], mode)
    degenerate = is_degenerate(eta)
    f_minus = None
    if not degenerate:
        cs = [_num(0, mode)]
        for n in range(cutoff - 1):
            cs.append(_sinh_ratio(eta, Fraction(n, 2)) - cs[-1])
        f_minus = _shift_down(cutoff, cs[1:], mode)
    return UqRep(eta, cutoff, mode, h, f_plus, f_minus, exp_plus, exp_minus,
                 parity, degenerate)


def deformed_anticommutator_target(rep: UqRep) -> Mat:
    """sinh(eta*H)/sinh(2*eta) as a diagonal matrix."""
    if rep.degenerate:
        raise ValueError("undefined at sinh(2*eta) = 0")
    vals = [_sinh_ratio(rep.eta, Fraction(n, 2)) for n in range(rep.cutoff)]
    return Mat.diag(vals, rep.mode)


# ----------------------------------------------------------------------
# graded tensor materialization
# ----------------------------------------------------------------------

def materialize_word(word: Sequence[tuple[Mat, int]], parity: Mat) -> Mat:
    """A pure graded tensor word as one plain matrix.

    word is a list of (operator, parity) per slot.  Slot i is multiplied by
    the parity operator once per odd factor to its right, which reproduces
    the Koszul sign rule (a x b)(c x d) = (-1)^(eps_b eps_c) ac x bd under
    ordinary matrix multiplication.
    """
    n = len(word)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + word[i][1]
    factors = []
    for i, (op, _) in enumerate(word):
        factors.append(op * parity if suffix[i + 1] % 2 else op)
    return kron_all(factors)


def graded_block(rep: UqRep, k: int, n_slots: int, op: str = "F+") -> Mat:
    """The coproduct building block with `op` in slot k (1-based).

    For the odd raising/lowering operators the remaining slots carry the
    group-like dressings e^(-eta*H/2) to the left and e^(eta*H/2) to the
    right; the Cartan generator is primitive and undressed.
    """
    if not 1 <= k <= n_slots:
        raise ValueError("slot index out of range")
    eye = Mat.identity(rep.cutoff, rep.mode)
    if op == "F+":
        center, par = rep.f_plus, 1
    elif op == "F-":
        if rep.f_minus is None:
            raise ValueError("lowering generator unavailable at this eta")
        center, par = rep.f_minus, 1
    elif op == "H":
        center, par = rep.h, 0
    else:
        raise ValueError(f"unknown operator {op!r}")
    if par == 1:
        word = [(rep.exp_minus, 0)] * (k - 1) + [(center, 1)] \
            + [(rep.exp_plus, 0)] * (n_slots - k)
    else:
        word = [(eye, 0)] * (k - 1) + [(center, 0)] + [(eye, 0)] * (n_slots - k)
    return materialize_word(word, rep.parity)


def coproduct_raising(rep: UqRep, n_slots: int) -> Mat:
    """Sum of the raising building blocks over all slots."""
    total = graded_block(rep, 1, n_slots, "F+")
    for k in range(2, n_slots + 1):
        total = total + graded_block(rep, k, n_slots, "F+")
    return total


def multi_hamiltonian(rep: UqRep, n_slots: int) -> Mat:
    """Sum over slots of the normalized single-particle Hamiltonian 2H."""
    total = graded_block(rep, 1, n_slots, "H").scale(2)
    for k in range(2, n_slots + 1):
        total = total + graded_block(rep, k, n_slots, "H").scale(2)
    return total


# ----------------------------------------------------------------------
# spectra via the occupation walk
# ----------------------------------------------------------------------

def qgroup_spectrum(eta: Eta, n_particles: int, n_max: int | None = None,
                    tol: float = DEFAULT_TOL) -> list[int]:
    """Energies n whose projected coproduct tower state survives.

    Applies the raising coproduct n times to the N-fold vacuum, keeps only
    per-slot occupations 0 and 1, and reads the energy with 2H per slot.
    The walk tracks occupation tuples directly, which avoids materializing
    the tensor-product matrices.
    """
    if n_particles < 1:
        raise ValueError("need at least one particle")
    n_max = n_particles if n_max is None else n_max
    mode = _eta_mode(eta)
    one = scalar_one(mode)
    # x^m = e^(eta*m/4) and its inverse, for the dressing phases
    xs = [_exp_eta(eta, Fraction(m, 4)) for m in range(n_max + 2)]
    xs_inv = [_exp_eta(eta, Fraction(-m, 4)) for m in range(n_max + 2)]

    surviving = [0]  # the vacuum always survives
    state: dict[tuple, object] = {(0,) * n_particles: one}
    for n in range(1, n_max + 1):
        nxt: dict[tuple, object] = {}
        for occ, amp in state.items():
            # suffix[k] = prod_{i >= k} x^(m_i)
            suffix = [one] * (n_particles + 1)
            for i in range(n_particles - 1, -1, -1):
                suffix[i] = xs[occ[i]] * suffix[i + 1]
            left = one
            sign = 1
            for k in range(n_particles):
                target = occ[:k] + (occ[k] + 1,) + occ[k + 1:]
                coeff = left * suffix[k + 1] * amp
                if sign < 0:
                    coeff = -coeff
                if target in nxt:
                    nxt[target] = nxt[target] + coeff
                else:
                    nxt[target] = coeff
                left = left * xs_inv[occ[k]]
                if occ[k] % 2:
                    sign = -sign
        if mode == EXACT:
            nxt = {o: a for o, a in nxt.items() if not a.is_zero}
        state = nxt
        projected_alive = any(
            max(occ) <= 1 and not s_is_zero(a, tol) for occ, a in state.items())
        if projected_alive:
            surviving.append(n)
    return surviving


def eta_of_level(level: BraidLevel) -> Fraction:
    """The exact coefficient y in eta = i*pi*y for a braid level."""
    return level.eta_over_i_pi


def cross_check(levels: Sequence[BraidLevel], n_values: Sequence[int],
                mode: str = EXACT, tol: float = DEFAULT_TOL) -> dict:
    """Compare deformed-coproduct spectra with braided-sector spectra."""
    cells = []
    all_match = True
    for level in levels:
        eta = eta_of_level(level) if mode == EXACT else level.eta()
        for n in n_values:
            qg = qgroup_spectrum(eta, n, tol=tol)
            br = spectrum(SectorSpec(n, level), mode, tol)
            match = qg == br
            all_match = all_match and match
            cells.append({
                "s": "inf" if level.s == float("inf") else level.s,
                "N": n,
                "qgroup": qg,
                "braided": br,
                "match": match,
            })
    return {"cells": cells, "all_match": all_match}


# ----------------------------------------------------------------------
# the three-quantum kill polynomial
# ----------------------------------------------------------------------

def three_particle_kill_polynomial() -> tuple[int, ...]:
    """Coefficients (low to high in t) of the cubic multiplying the projected
    three-quantum component of the 3-slot tower, normalized to content 1 and
    positive leading coefficient.

    The amplitude is computed symbolically in u = e^(eta/4); the projected
    component equals -u^3 * K(t) with t = u^(-2), and K is returned.
    """
    states: dict[tuple, dict[int, int]] = {(0, 0, 0): {0: 1}}
    for _ in range(3):
        nxt: dict[tuple, dict[int, int]] = {}
        for occ, poly in states.items():
            for k in range(3):
                sign = 1
                shift = 0
                for i in range(3):
                    if i < k:
                        if occ[i] % 2:
                            sign = -sign
                        shift -= occ[i]
                    elif i > k:
                        shift += occ[i]
                target = occ[:k] + (occ[k] + 1,) + occ[k + 1:]
                tgt = nxt.setdefault(target, {})
                for p, c in poly.items():
                    tgt[p + shift] = tgt.get(p + shift, 0) + sign * c
        states = nxt
    amp = states[(1, 1, 1)]
    # K(t) coefficients: t^k picks the u^(3-2k) component, with the -u^3 factor
    coeffs = [-amp.get(3 - 2 * k, 0) for k in range(4)]
    if any(amp.get(p, 0) for p in amp if p not in (3, 1, -1, -3)):
        raise AssertionError("unexpected powers in the projected amplitude")
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    if g:
        coeffs = [c // g for c in coeffs]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)
