"""Single-qubit data and the root-of-unity structure of the braiding parameter.

The two-state graded qubit is acted on by four 2x2 operators closing gl(1|1),
with the lower-triangular nilpotent one acting as the creation operator.  The
braiding of two qubits is governed by an invertible 4x4 matrix depending on a
unit-circle parameter t, and multi-particle truncations are controlled by the
polynomials b_k(t) = sum_{j<k} (-t)^j.  A value of t is classified by its
"level": the smallest s with b_s(t) = 0, infinite for t = -1, generic when no
such s exists below a search bound.

Four parametrizations of the same level are kept in sync:

    t = -e^(2*pi*i*g)   with g in [0, 1),
    t =  e^(i*pi*f)     with f = -2g - 1 (mod 2),
    eta = -2*pi*i*(2g - 1),

with g = r/s (r, s coprime) at finite level s and g = 0 at infinite level.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import (
    CycScalar,
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    Mat,
    cyc,
    exp_i_pi,
    kron,
    scalar_exp_i_pi,
    s_is_zero,
)

INF = math.inf
GENERIC = "generic"

Level = Union[int, float]  # an integer >= 2, or INF


# ----------------------------------------------------------------------
# gl(1|1) generators
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Gl11Generators:
    """The four 2x2 operators on the graded qubit: two diagonal (even) and
    the raising/lowering nilpotents (odd)."""

    alpha: Mat
    beta: Mat
    gamma: Mat
    delta: Mat


def gl11(mode: str = EXACT) -> Gl11Generators:
    return Gl11Generators(
        alpha=Mat.from_rows([[1, 0], [0, 0]], mode),
        beta=Mat.from_rows([[0, 1], [0, 0]], mode),
        gamma=Mat.from_rows([[0, 0], [1, 0]], mode),
        delta=Mat.from_rows([[0, 0], [0, 1]], mode),
    )


def single_particle_hamiltonian(mode: str = EXACT) -> Mat:
    """H_1 = diag(0, 1), counting the qubit excitation."""
    return gl11(mode).delta


# ----------------------------------------------------------------------
# braid level and parametrizations
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class BraidLevel:
    """A truncation level s (>= 2, or INF) with a coprime numerator r.

    Derived quantities: g = r/s (0 at INF), t = -e^(2*pi*i*g),
    f = -2g-1 mod 2, eta = -2*pi*i*(2g-1).  eta is stored through its
    coefficient y in eta = i*pi*y so exact mode can represent e^(eta/2)
    whenever g is rational.
    """

    s: Level
    r: int = 1

    def __post_init__(self):
        if self.s == INF:
            if self.r != 1:
                raise ValueError("the infinite level has no numerator choices")
            return
        if not isinstance(self.s, int) or self.s < 2:
            raise ValueError("level must be an integer >= 2 or INF")
        if not (1 <= self.r < self.s) or math.gcd(self.r, self.s) != 1:
            raise ValueError("numerator must be coprime to s and in [1, s)")

    @property
    def g(self) -> Fraction:
        if self.s == INF:
            return Fraction(0)
        return Fraction(self.r, self.s)

    @property
    def f(self) -> Fraction:
        return (-2 * self.g - 1) % 2

    @property
    def eta_over_i_pi(self) -> Fraction:
        """y in eta = i*pi*y, i.e. y = 2 - 4g."""
        return 2 - 4 * self.g

    def eta(self) -> complex:
        return 1j * math.pi * float(self.eta_over_i_pi)

    def cyclotomic_order(self) -> int:
        """Default exact order 4s: contains i, e^(i*pi/s) and every angle value."""
        return 4 if self.s == INF else 4 * self.s

    def t(self, mode: str = EXACT):
        """The braiding parameter -e^(2*pi*i*g)."""
        if mode == EXACT:
            return exp_i_pi(2 * self.g + 1)
        return cmath.exp(1j * math.pi * float(2 * self.g + 1))

    def exp_i_pi_g(self, mode: str = EXACT):
        return scalar_exp_i_pi(self.g, mode)

    def as_json_obj(self) -> dict:
        t = self.t(FLOAT)
        arg = (2 * self.g + 1) % 2  # t = e^(i*pi*arg)
        return {
            "s": "inf" if self.s == INF else self.s,
            "r": self.r,
            "g": str(self.g),
            "f": str(self.f),
            "t": [t.real, t.imag],
            "t_root": {"order": 2 * arg.denominator,
                       "power": arg.numerator % (2 * arg.denominator)},
            "eta_over_i_pi": str(self.eta_over_i_pi),
            "eta": [self.eta().real, self.eta().imag],
        }


def level_from_s(s, r: int = 1) -> BraidLevel:
    """A level from its integer s >= 2 (or INF / the token "inf")."""
    if s == INF or s == "inf":
        return BraidLevel(INF)
    return BraidLevel(int(s), r)


def level_from_g(g) -> BraidLevel:
    g = Fraction(g)
    if not 0 <= g < 1:
        raise ValueError("g must lie in [0, 1)")
    if g == 0:
        return BraidLevel(INF)
    return BraidLevel(g.denominator, g.numerator)


def level_from_f(f) -> BraidLevel:
    f = Fraction(f)
    if not 0 <= f < 2:
        raise ValueError("f must lie in [0, 2)")
    return level_from_g((-Fraction(f + 1) / 2) % 1)


def level_from_eta(eta) -> BraidLevel:
    """Accepts the coefficient y of eta = i*pi*y (rational), or a complex eta."""
    if isinstance(eta, complex):
        if abs(eta.real) > 1e-12:
            raise ValueError("eta must be purely imaginary for a unit-circle t")
        y = Fraction(eta.imag / math.pi).limit_denominator(10**6)
    else:
        y = Fraction(eta)
    return level_from_g(Fraction(2 - y, 4) % 1)


def level_from_t(t, tol: float = DEFAULT_TOL) -> BraidLevel:
    """t may be an exact scalar (a root of unity) or a complex number."""
    if isinstance(t, CycScalar):
        m = t.order
        minus_t = -t
        for k in range(m):
            if minus_t == cyc(m, k):
                return level_from_g(Fraction(k, m))
        raise ValueError("exact t is not a root of unity")
    z = complex(t)
    if abs(abs(z) - 1) > tol:
        raise ValueError("t must lie on the unit circle")
    angle = cmath.phase(-z) / (2 * math.pi)
    g = Fraction(angle % 1.0).limit_denominator(4096)
    if abs(cmath.exp(2j * math.pi * float(g)) + z) > max(tol, 1e-9):
        raise ValueError("t does not match a rational-angle root of unity")
    return level_from_g(g)


def convert_param(source: str, value) -> BraidLevel:
    """Populate a full BraidLevel from any one of the parametrizations."""
    table = {"g": level_from_g, "f": level_from_f, "t": level_from_t,
             "eta": level_from_eta}
    if source not in table:
        raise ValueError(f"unknown parametrization {source!r}")
    return table[source](value)


# ----------------------------------------------------------------------
# truncation polynomials and level classification
# ----------------------------------------------------------------------

def b_poly(k: int, t):
    """b_k(t) = sum_{j=0}^{k-1} (-t)^j, for an exact or float scalar t."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = None
    term = _one_like(t)
    for _ in range(k):
        acc = term if acc is None else acc + term
        term = term * (-t)
    return acc


def f_factor(n: int, t):
    """f_n(t) = prod_{k=1}^{n} b_k(t); f_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = _one_like(t)
    for k in range(1, n + 1):
        out = out * b_poly(k, t)
    return out


def _one_like(t):
    if isinstance(t, CycScalar):
        return CycScalar.one(t.order)
    return 1 + 0j


def level_of_root(t, k_max: int = 64, tol: float = DEFAULT_TOL):
    """Smallest s <= k_max with b_s(t) = 0 and b_k(t) != 0 below it.

    Returns INF for t = -1 (no b_k ever vanishes there) and GENERIC when
    nothing vanishes up to the search bound.
    """
    if isinstance(t, CycScalar):
        if t * t.conjugate() != 1:
            raise ValueError("t must lie on the unit circle")
        if t == -1:
            return INF
    else:
        z = complex(t)
        if abs(abs(z) - 1) > tol:
            raise ValueError("t must lie on the unit circle")
        if abs(z + 1) <= tol:
            return INF
    for s in range(2, k_max + 1):
        if s_is_zero(b_poly(s, t), tol):
            return s
    return GENERIC


# ----------------------------------------------------------------------
# the braid matrix
# ----------------------------------------------------------------------

def b_matrix(level: BraidLevel, mode: str = EXACT) -> Mat:
    """The 4x4 braiding matrix for the level's t."""
    return b_matrix_from_t(level.t(mode))


def b_matrix_from_t(t) -> Mat:
    mode = EXACT if isinstance(t, CycScalar) else FLOAT
    if mode == FLOAT:
        t = complex(t)
    one = _one_like(t)
    zero = one - one
    return Mat.from_rows(
        [
            [one, zero, zero, zero],
            [zero, one - t, t, zero],
            [zero, one, zero, zero],
            [zero, zero, zero, -t],
        ],
        mode,
    )


def braid_relation_residual(level_or_t, mode: str = EXACT) -> Mat:
    """(B x I)(I x B)(B x I) - (I x B)(B x I)(I x B); zero iff the braid
    relation holds."""
    if isinstance(level_or_t, BraidLevel):
        b = b_matrix(level_or_t, mode)
    else:
        b = b_matrix_from_t(level_or_t)
    eye = Mat.identity(2, b.mode)
    left = kron(b, eye)
    right = kron(eye, b)
    return left * right * left - right * left * right
