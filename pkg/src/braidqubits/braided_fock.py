"""Multi-particle sectors built from intertwined ordinary tensor products.

Braided exchange of identical graded qubits is reproduced on plain tensor
products by dressing the slots to the left of a creation operator with a
diagonal intertwiner W = diag(e^(-i*pi*g), e^(i*pi*g)).  The k-th creation
block in the N-particle sector is then

    A_k = W x ... x W x gamma x I x ... x I        (k-1 copies of W),

a 2^N x 2^N matrix.  Blocks square to zero and exchange with the phase
e^(2*pi*i*g); the excitation tower (sum_k A_k)^n applied to the vacuum
carries energy n and dies exactly when f_n(t) does, which produces the
level-s truncated spectra.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

from .arith import (
    CycScalar,
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    Mat,
    cos_pi,
    kron_all,
    scalar_one,
    scalar_zero,
    sconj,
    sin_pi,
    s_is_zero,
)
from .qubit_core import INF, BraidLevel, f_factor, gl11

DEFAULT_MAX_PARTICLES = 12


def max_particles() -> int:
    return int(os.environ.get("BRAIDQUBITS_MAX_PARTICLES", DEFAULT_MAX_PARTICLES))


# ----------------------------------------------------------------------
# the intertwiner
# ----------------------------------------------------------------------

def intertwiner(level: BraidLevel, mode: str = EXACT) -> Mat:
    """W = cos(-pi*g)*I + i*sin(-pi*g)*X with X = diag(1, -1).

    Satisfies W*gamma = e^(2*pi*i*g)*gamma*W, which is what rewrites the
    braided exchange as an ordinary matrix identity.
    """
    g = level.g
    if mode == EXACT:
        c = cos_pi(-g)
        s = sin_pi(-g)
        i_unit = CycScalar.root(4, 1)
        eye = Mat.identity(2, EXACT)
        x = Mat.diag([1, -1], EXACT)
        return eye.scale(c) + x.scale(i_unit * s)
    import cmath
    import math

    gf = float(g)
    c = cmath.cos(-math.pi * gf)
    s = cmath.sin(-math.pi * gf)
    eye = Mat.identity(2, FLOAT)
    x = Mat.diag([1, -1], FLOAT)
    return eye.scale(c) + x.scale(1j * s)


# ----------------------------------------------------------------------
# sector specification and construction
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SectorSpec:
    """A request for the N-particle sector at a given level, with an
    excitation cutoff (default N)."""

    n_particles: int
    level: BraidLevel
    n_max: int | None = None

    def __post_init__(self):
        if self.n_particles < 1:
            raise ValueError("need at least one particle")
        if self.n_max is not None and self.n_max < 0:
            raise ValueError("n_max must be >= 0")

    @property
    def cutoff(self) -> int:
        return self.n_particles if self.n_max is None else self.n_max


@dataclass
class BraidedSector:
    spec: SectorSpec
    blocks: tuple[Mat, ...]          # creation blocks A_1 .. A_N
    hamiltonian: Mat                 # diagonal, eigenvalue = excitation count
    vacuum: Mat                      # 2^N column, first entry 1
    states: tuple[Mat, ...]          # unnormalized tower states n = 0..cutoff
    energies: tuple[int, ...]        # n values whose tower state survives


def creation_block(k: int, spec_n: int, level: BraidLevel, mode: str = EXACT) -> Mat:
    """A_k = W^(k-1) x gamma x I^(N-k)."""
    if not 1 <= k <= spec_n:
        raise ValueError("slot index out of range")
    w = intertwiner(level, mode)
    gamma = gl11(mode).gamma
    eye = Mat.identity(2, mode)
    factors = [w] * (k - 1) + [gamma] + [eye] * (spec_n - k)
    return kron_all(factors)


def hamiltonian(n_particles: int, mode: str = EXACT) -> Mat:
    """Diagonal with the binary popcount of each basis index."""
    dim = 1 << n_particles
    return Mat.diag([bin(i).count("1") for i in range(dim)], mode)


def vacuum_state(n_particles: int, mode: str = EXACT) -> Mat:
    dim = 1 << n_particles
    col = [scalar_zero(mode)] * dim
    col[0] = scalar_one(mode)
    return Mat(dim, 1, col, mode)


# -- sparse excitation towers -------------------------------------------

def _w_phases(level: BraidLevel, mode: str):
    """(W acting on |0>, W acting on |1>) = (e^(-i*pi*g), e^(i*pi*g))."""
    if mode == EXACT:
        wp = level.exp_i_pi_g(EXACT)
        return wp.conjugate(), wp
    wp = level.exp_i_pi_g(FLOAT)
    return wp.conjugate(), wp

def tower_states_sparse(n_particles: int, level: BraidLevel, n_max: int,
                        mode: str = EXACT) -> list[dict]:
    """Tower states as {basis index: amplitude} maps, n = 0 .. n_max.

    Index bit N-k (from the most significant end) holds slot k, matching the
    Kronecker ordering of the dense blocks.
    """
    n = n_particles
    w0, w1 = _w_phases(level, mode)
    exact = mode == EXACT
    states = [{0: scalar_one(mode)}]
    cur = states[0]
    for _ in range(n_max):
        nxt: dict = {}
        for idx, amp in cur.items():
            phase = scalar_one(mode)
            for k in range(1, n + 1):
                bit = (idx >> (n - k)) & 1
                if bit == 0:
                    target = idx | (1 << (n - k))
                    contrib = phase * amp
                    if target in nxt:
                        nxt[target] = nxt[target] + contrib
                    else:
                        nxt[target] = contrib
                # accumulate the W dressing of slot k for later slots
                phase = phase * (w1 if bit else w0)
        if exact:
            nxt = {i: a for i, a in nxt.items() if not a.is_zero}
        states.append(nxt)
        cur = nxt
    return states


def _sparse_is_zero(state: dict, mode: str, tol: float) -> bool:
    if mode == EXACT:
        return all(a.is_zero for a in state.values())
    return all(abs(a) <= tol for a in state.values())


def _sparse_to_column(state: dict, dim: int, mode: str) -> Mat:
    col = [scalar_zero(mode)] * dim
    for i, a in state.items():
        col[i] = a
    return Mat(dim, 1, col, mode)


def build_sector(spec: SectorSpec, mode: str = EXACT,
                 tol: float = DEFAULT_TOL) -> BraidedSector:
    """Materialize blocks, Hamiltonian and the excitation tower."""
    n = spec.n_particles
    if n > max_particles():
        raise ValueError(
            f"refusing to build a {1 << n}-dimensional sector; "
            f"bound is N <= {max_particles()}")
    blocks = tuple(creation_block(k, n, spec.level, mode) for k in range(1, n + 1))
    ham = hamiltonian(n, mode)
    vac = vacuum_state(n, mode)
    sparse = tower_states_sparse(n, spec.level, spec.cutoff, mode)
    dim = 1 << n
    states = tuple(_sparse_to_column(s, dim, mode) for s in sparse)
    energies = tuple(i for i, s in enumerate(sparse)
                     if not _sparse_is_zero(s, mode, tol))
    return BraidedSector(spec, blocks, ham, vac, states, energies)


def spectrum(spec: SectorSpec, mode: str = EXACT,
             tol: float = DEFAULT_TOL) -> list[int]:
    """Surviving tower energies, computed from the states (not a closed form)."""
    sparse = tower_states_sparse(spec.n_particles, spec.level, spec.cutoff, mode)
    return [i for i, s in enumerate(sparse) if not _sparse_is_zero(s, mode, tol)]


def closed_form_spectrum(s, n_particles: int) -> list[int]:
    """Truncated: 0..N below level s, plateau 0..s-1 from N >= s; untruncated
    at the infinite level: 0..N."""
    if s == INF:
        return list(range(n_particles + 1))
    if n_particles < s:
        return list(range(n_particles + 1))
    return list(range(s))


def tower_vanishing_check(spec: SectorSpec, mode: str = EXACT,
                          tol: float = DEFAULT_TOL) -> bool:
    """Tower state n vanishes exactly when the polynomial factor f_n(t) does."""
    if spec.cutoff > spec.n_particles:
        raise ValueError("the polynomial criterion applies for n <= N")
    t = spec.level.t(mode)
    sparse = tower_states_sparse(spec.n_particles, spec.level, spec.cutoff, mode)
    for n_level, state in enumerate(sparse):
        state_zero = _sparse_is_zero(state, mode, tol)
        poly_zero = s_is_zero(f_factor(n_level, t), tol)
        if state_zero != poly_zero:
            return False
    return True


# ----------------------------------------------------------------------
# the nonstandard Z2 grading of 4x4 matrices
# ----------------------------------------------------------------------

class Grading(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


def grading_sector(m: Mat, tol: float = DEFAULT_TOL) -> Grading:
    """Classify a 4x4 matrix by the nonstandard graded entry pattern.

    The even sector occupies positions with popcount(row XOR col) even
    (diagonal plus antidiagonal style), the odd sector the complement.
    """
    if m.rows != 4 or m.cols != 4:
        raise ValueError("grading is defined for 4x4 matrices")
    seen = set()
    for i in range(4):
        for j in range(4):
            if not s_is_zero(m.entry(i, j), tol):
                seen.add(bin(i ^ j).count("1") % 2)
    if seen == {0}:
        return Grading.EVEN
    if seen == {1}:
        return Grading.ODD
    return Grading.NONE


# ----------------------------------------------------------------------
# indistinguishability as superselection
# ----------------------------------------------------------------------

def indist_projector(spec: SectorSpec, mode: str = EXACT,
                     tol: float = DEFAULT_TOL) -> Mat:
    """Orthogonal projector onto the span of the surviving tower states.

    Tower states with distinct energies are orthogonal, so the projector is
    the sum of v v^dagger / <v, v> over nonvanishing states; exact mode uses
    the cyclotomic conjugation for the Hermitian inner product.
    """
    n = spec.n_particles
    dim = 1 << n
    sparse = tower_states_sparse(n, spec.level, spec.cutoff, mode)
    entries = [scalar_zero(mode)] * (dim * dim)
    for state in sparse:
        if _sparse_is_zero(state, mode, tol):
            continue
        norm = scalar_zero(mode)
        for a in state.values():
            norm = norm + a * sconj(a)
        inv_norm = norm.inverse() if mode == EXACT else 1.0 / norm
        for i, a in state.items():
            row = i * dim
            for j, b in state.items():
                entries[row + j] = entries[row + j] + a * sconj(b) * inv_norm
    return Mat(dim, dim, entries, mode)


def projector_rank(spec: SectorSpec, mode: str = EXACT) -> int:
    """Rank of the superselection projector (its exact trace)."""
    tr = indist_projector(spec, mode).trace()
    if mode == EXACT:
        return int(tr.as_fraction())
    return round(tr.real)
