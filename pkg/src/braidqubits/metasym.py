"""Mixed-bracket Heisenberg-Lie algebras of the braided creation operators.

The bracket (X, Y)_theta = i*sin(theta)*[X, Y] + cos(theta)*{X, Y}
interpolates between a commutator and an anticommutator.  For the level-s
sectors the angles are produced by a small ledger: each generator carries
charges mu (raising/lowering sign) and nu (+1 for lower slot, -1 for higher
slot), and theta_IJ = k * mu_I * mu_J * (nu_I - nu_J) with the unit
k = (s+2)*pi/(4s).  Same-slot pairs then close on the central element with
plain anticommutators, cross-slot pairs vanish at a genuinely mixed angle,
and every bracket of the algebra lands in {0, central}.

The algebras satisfy the bracket-level abelianess identity
(G_I, (G_J, G_K)) = 0 for all generator triples while violating the
plain double-commutator version, and their s -> infinity limit degenerates
into a pair of parafermionic oscillators graded by two parity bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    CycScalar,
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    Mat,
    acomm,
    comm,
    cos_pi,
    cyc,
    is_zero,
    kron_all,
    max_abs,
    sin_pi,
    s_is_zero,
)
from .braided_fock import SectorSpec, build_sector, projector_rank, spectrum
from .qubit_core import INF, BraidLevel, gl11, level_from_s


# ----------------------------------------------------------------------
# the bracket itself
# ----------------------------------------------------------------------

def mixed_bracket(x: Mat, y: Mat, theta) -> Mat:
    """i*sin(theta)*[x, y] + cos(theta)*{x, y}.

    In exact mode theta must be a rational multiple of pi, passed as that
    rational; in float mode a rational is also accepted, or plain radians.
    """
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise ValueError("size mismatch")
    if x.mode == EXACT:
        if not isinstance(theta, (int, Fraction)):
            raise ValueError("exact mode needs the angle as a rational multiple of pi")
        theta = Fraction(theta)
        i_sin = cyc(4, 1) * sin_pi(theta)
        cos = cos_pi(theta)
        return comm(x, y).scale(i_sin) + acomm(x, y).scale(cos)
    rad = math.pi * float(theta) if isinstance(theta, (int, Fraction)) else float(theta)
    return comm(x, y).scale(1j * math.sin(rad)) + acomm(x, y).scale(math.cos(rad))


def normalize_angle(theta: Fraction) -> Fraction:
    """Reduce a multiple of pi into [-1, 1)."""
    return (Fraction(theta) + 1) % 2 - 1


# ----------------------------------------------------------------------
# the generator algebras
# ----------------------------------------------------------------------

@dataclass
class BracketAlgebra:
    """Labeled generators with the angle function of a level-s sector.

    Label 0 is the central element; +k / -k are the creation/annihilation
    blocks of slot k.  Angles are stored as rational multiples of pi.
    """

    level: object                 # int >= 2 or INF
    n_particles: int
    labels: tuple[int, ...]
    gens: dict[int, Mat]
    k_unit: Fraction
    mode: str

    def angle(self, i: int, j: int) -> Fraction:
        """theta_IJ as a multiple of pi, normalized into [-1, 1)."""
        if i == 0 or j == 0:
            # central brackets are plain commutators; the sign convention
            # keeps theta_JI = -theta_IJ off the diagonal
            return Fraction(1, 2) if i == 0 else Fraction(-1, 2)
        if abs(i) == abs(j):
            return Fraction(0)
        sign = (1 if i > 0 else -1) * (1 if j > 0 else -1)
        orient = 1 if abs(i) < abs(j) else -1
        return normalize_angle(2 * self.k_unit * sign * orient)

    def bracket(self, i: int, j: int) -> Mat:
        return mixed_bracket(self.gens[i], self.gens[j], self.angle(i, j))

    @property
    def central(self) -> Mat:
        return self.gens[0]


def build_algebra(s, n_particles: int = 2, mode: str = EXACT) -> BracketAlgebra:
    """Generators and angles for the N-particle level-s sector."""
    level = level_from_s(s)
    sector = build_sector(SectorSpec(n_particles, level), mode)
    dim = 1 << n_particles
    gens: dict[int, Mat] = {0: Mat.identity(dim, mode)}
    for k, blk in enumerate(sector.blocks, start=1):
        gens[k] = blk
        gens[-k] = blk.dagger()
    labels = (0,) + tuple(x for k in range(1, n_particles + 1) for x in (k, -k))
    k_unit = Fraction(1, 4) if level.s == INF else Fraction(level.s + 2, 4 * level.s)
    return BracketAlgebra(level.s, n_particles, labels, gens, k_unit, mode)


def build_algebra_2p(s, mode: str = EXACT) -> BracketAlgebra:
    return build_algebra(s, 2, mode)


def build_algebra_3p(s, mode: str = EXACT) -> BracketAlgebra:
    return build_algebra(s, 3, mode)


# ----------------------------------------------------------------------
# the angle ledger
# ----------------------------------------------------------------------

def number_operator(n_particles: int, slot: int, mode: str = EXACT) -> Mat:
    """-1/2 times the slot's occupation-sign operator diag(1, -1)."""
    ops = gl11(mode)
    eye = Mat.identity(2, mode)
    sign_op = ops.alpha - ops.delta
    factors = [eye] * (slot - 1) + [sign_op] + [eye] * (n_particles - slot)
    return kron_all(factors).scale(Fraction(-1, 2) if mode == EXACT else -0.5)


@dataclass(frozen=True)
class AngleLedger:
    """Charges lambda/mu/nu of the 2-particle generators under the two
    diagonal number operators, plus the level's angle unit."""

    n_left: Mat
    n_right: Mat
    lambda_left: dict
    lambda_right: dict
    mu: dict
    nu: dict
    k_unit: Fraction


def angle_ledger(alg: BracketAlgebra) -> AngleLedger:
    if alg.n_particles != 2:
        raise ValueError("the explicit ledger is a 2-particle object")
    nonzero = [i for i in alg.labels if i != 0]
    lam_l = {i: (1 if i > 0 else -1) if abs(i) == 1 else 0 for i in nonzero}
    lam_r = {i: (1 if i > 0 else -1) if abs(i) == 2 else 0 for i in nonzero}
    mu = {i: lam_l[i] + lam_r[i] for i in nonzero}
    nu = {i: lam_l[i] ** 2 - lam_r[i] ** 2 for i in nonzero}
    return AngleLedger(
        n_left=number_operator(2, 1, alg.mode),
        n_right=number_operator(2, 2, alg.mode),
        lambda_left=lam_l,
        lambda_right=lam_r,
        mu=mu,
        nu=nu,
        k_unit=alg.k_unit,
    )


def ledger_angle(ledger: AngleLedger, i: int, j: int) -> Fraction:
    """theta_IJ = k * mu_I * mu_J * (nu_I - nu_J), normalized into [-1, 1)."""
    return normalize_angle(ledger.k_unit * ledger.mu[i] * ledger.mu[j]
                           * (ledger.nu[i] - ledger.nu[j]))


# ----------------------------------------------------------------------
# closure and the two abelianess notions
# ----------------------------------------------------------------------

def verify_closure(alg: BracketAlgebra, tol: float = DEFAULT_TOL) -> dict:
    """Every bracket must equal 0 or the central element exactly."""
    checks = []
    ok = True
    for i in alg.labels:
        for j in alg.labels:
            b = alg.bracket(i, j)
            if is_zero(b, tol):
                verdict, coeff = True, 0
            elif is_zero(b - alg.central, tol):
                verdict, coeff = True, 1
            else:
                verdict, coeff = False, None
            ok = ok and verdict
            checks.append({
                "pair": [i, j],
                "theta_over_pi": str(alg.angle(i, j)),
                "central_coefficient": coeff,
                "pass": verdict,
                "residual": _residual(b if coeff != 1 else b - alg.central, alg.mode),
            })
    return {"passed": ok, "checks": checks}


def _residual(m: Mat, mode: str):
    if mode == EXACT:
        return is_zero(m)
    return max_abs(m)


def metaabelian_mixed(alg: BracketAlgebra, tol: float = DEFAULT_TOL) -> bool:
    """(G_I, (G_J, G_K)) = 0 for every generator triple.

    The inner bracket can only be nonzero on the central element, reached at
    J + K = 0; the outer angle is then the central one.
    """
    inner: dict[tuple[int, int], Mat | None] = {}
    for j in alg.labels:
        for k in alg.labels:
            b = alg.bracket(j, k)
            inner[j, k] = None if is_zero(b, tol) else b
    for (j, k), b in inner.items():
        if b is None:
            continue
        if j + k != 0:
            return False
        for i in alg.labels:
            outer = mixed_bracket(alg.gens[i], b, alg.angle(i, j + k))
            if not is_zero(outer, tol):
                return False
    return True


def double_commutator(alg: BracketAlgebra, triple: tuple[int, int, int]) -> Mat:
    i, j, k = triple
    return comm(alg.gens[i], comm(alg.gens[j], alg.gens[k]))


def metaabelian_ordinary(alg: BracketAlgebra, tol: float = DEFAULT_TOL):
    """First triple (in stored label order) with [G_I, [G_J, G_K]] != 0.

    Returns (triple, violation matrix), or None when the plain metaabelianess
    condition holds throughout.
    """
    inner: dict[tuple[int, int], Mat | None] = {}
    for i in alg.labels:
        for j in alg.labels:
            for k in alg.labels:
                if (j, k) not in inner:
                    b = comm(alg.gens[j], alg.gens[k])
                    inner[j, k] = None if is_zero(b, tol) else b
                b = inner[j, k]
                if b is None:
                    continue
                outer = comm(alg.gens[i], b)
                if not is_zero(outer, tol):
                    return (i, j, k), outer
    return None


# ----------------------------------------------------------------------
# the untruncated limit and its two-bit grading
# ----------------------------------------------------------------------

SECTORS = ("00", "10", "01", "11")

# bracket selection per sector pair: 0 = commutator, 1 = anticommutator
Z2Z2_TABLE = {
    ("00", "00"): 0, ("00", "10"): 0, ("00", "01"): 0, ("00", "11"): 0,
    ("10", "00"): 0, ("10", "10"): 1, ("10", "01"): 0, ("10", "11"): 1,
    ("01", "00"): 0, ("01", "10"): 0, ("01", "01"): 1, ("01", "11"): 1,
    ("11", "00"): 0, ("11", "10"): 1, ("11", "01"): 1, ("11", "11"): 0,
}


def z2z2_sector(m: Mat, tol: float = DEFAULT_TOL):
    """Two-bit sector of a 4x4 matrix from its nonzero-entry pattern.

    The sector of the entry at (row, col) is the two-bit value row XOR col;
    a matrix belongs to a sector when all its nonzero entries agree.
    """
    if m.rows != 4 or m.cols != 4:
        raise ValueError("the two-bit grading is a 4x4 pattern")
    seen = set()
    for i in range(4):
        for j in range(4):
            if not s_is_zero(m.entry(i, j), tol):
                seen.add(format(i ^ j, "02b"))
    if len(seen) == 1:
        return seen.pop()
    return None


def sector_sum(a: str, b: str) -> str:
    return format(int(a, 2) ^ int(b, 2), "02b")


def parafermion_limit(mode: str = EXACT, tol: float = DEFAULT_TOL):
    """The five untruncated-limit generators with their oscillator relations
    and the two-bit sector assignment.

    Returns (algebra, report).  The report records the fermionic-oscillator
    relations of each slot, the vanishing cross-slot commutators, the sector
    of every generator, and the table compliance of all 25 generator pairs.
    """
    alg = build_algebra(INF, 2, mode)
    g0, gp1, gm1, gp2, gm2 = (alg.gens[i] for i in (0, 1, -1, 2, -2))
    relations = [
        ("comm(central, g+1)", comm(g0, gp1)),
        ("comm(central, g-1)", comm(g0, gm1)),
        ("comm(central, g+2)", comm(g0, gp2)),
        ("comm(central, g-2)", comm(g0, gm2)),
        ("acomm(g+1, g+1)", acomm(gp1, gp1)),
        ("acomm(g-1, g-1)", acomm(gm1, gm1)),
        ("acomm(g+2, g+2)", acomm(gp2, gp2)),
        ("acomm(g-2, g-2)", acomm(gm2, gm2)),
        ("acomm(g+1, g-1) - central", acomm(gp1, gm1) - g0),
        ("acomm(g+2, g-2) - central", acomm(gp2, gm2) - g0),
        ("comm(g+1, g+2)", comm(gp1, gp2)),
        ("comm(g+1, g-2)", comm(gp1, gm2)),
        ("comm(g-1, g+2)", comm(gm1, gp2)),
        ("comm(g-1, g-2)", comm(gm1, gm2)),
    ]
    rel_report = [{"relation": name, "pass": is_zero(m, tol),
                   "residual": _residual(m, mode)} for name, m in relations]

    sectors = {i: z2z2_sector(alg.gens[i], tol) for i in alg.labels}
    composite = gp1 * gp2
    sectors_ok = (
        sectors[0] == "00"
        and sectors[1] == sectors[-1] == "10"
        and sectors[2] == sectors[-2] == "01"
        and z2z2_sector(composite, tol) == "11"
    )

    pair_checks = []
    for i in alg.labels:
        for j in alg.labels:
            a, b = sectors[i], sectors[j]
            use_acomm = Z2Z2_TABLE[a, b] == 1
            br = acomm(alg.gens[i], alg.gens[j]) if use_acomm \
                else comm(alg.gens[i], alg.gens[j])
            target = sector_sum(a, b)
            res_sector = z2z2_sector(br, tol)
            okay = is_zero(br, tol) or res_sector == target
            pair_checks.append({
                "pair": [i, j],
                "bracket": "acomm" if use_acomm else "comm",
                "sectors": [a, b],
                "pass": okay,
            })

    report = {
        "relations": rel_report,
        "sectors": {str(i): sectors[i] for i in alg.labels},
        "composite_sector": z2z2_sector(composite, tol),
        "pairs": pair_checks,
        "passed": (all(r["pass"] for r in rel_report) and sectors_ok
                   and all(p["pass"] for p in pair_checks)),
    }
    return alg, report


# ----------------------------------------------------------------------
# graded dimensions of the untruncated sectors
# ----------------------------------------------------------------------

def dimension_report(n_particles: int, mode: str = EXACT) -> dict:
    """Graded dimensions of the untruncated N-particle space against the
    one-larger-each-time count of the plain symmetric quantization."""
    if n_particles < 1:
        raise ValueError("need at least one particle")
    energies = spectrum(SectorSpec(n_particles, BraidLevel(INF)), mode)
    even = sum(1 for e in energies if e % 2 == 0)
    odd = len(energies) - even
    bosonic = n_particles + 1
    rank = projector_rank(SectorSpec(n_particles, BraidLevel(INF)), mode)
    return {
        "n_particles": n_particles,
        "even_dim": even,
        "odd_dim": odd,
        "total_dim": even + odd,
        "bosonic_dim": bosonic,
        "projector_rank": rank,
        "consistent": (even + odd == bosonic == rank
                       and even == n_particles // 2 + 1
                       and odd == (n_particles + 1) // 2),
    }
