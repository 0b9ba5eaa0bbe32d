"""Exact cyclotomic scalars and dense matrix algebra.

Scalars come in two modes that are never mixed inside one computation:

* exact mode -- elements of a cyclotomic field Q(zeta_m), stored in a
  canonical form so that equality and zero tests are decidable,
* float mode -- ordinary complex numbers with tolerance-based zero tests.

Matrices are dense, immutable and generic over the scalar mode.  Kronecker
products, commutators, anticommutators and Hermitian adjoints are provided
as module-level operations.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence, Union

EXACT = "exact"
FLOAT = "float"

DEFAULT_TOL = 1e-9

Rational = Union[int, Fraction]


# ----------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, low to high)
# ----------------------------------------------------------------------

def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials, denominator monic up to sign."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // lead
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """zeta_m^k for k in [0, m) expressed over the basis 1, zeta, .., zeta^(phi-1)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[deg - 1]
        nxt = [Fraction(0)] + cur[: deg - 1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def _pdivmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd] / den[dd]
        q[k] = c
        if c:
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _pxgcd(a: list[Fraction], b: list[Fraction]):
    """Extended Euclid in Q[x]: returns (g, s) with s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while any(r1):
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        qs = _pmul(q, s1)
        s0, s1 = s1, _psub(s0, qs)
    return r0, s0


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


# ----------------------------------------------------------------------
# exact cyclotomic scalars
# ----------------------------------------------------------------------

class CycScalar:
    """An element of the cyclotomic field Q(zeta_m) in canonical form.

    The canonical form stores the coefficients of zeta^0 .. zeta^(m-1),
    reduced modulo the m-th cyclotomic polynomial onto the power basis
    zeta^0 .. zeta^(phi(m)-1) and padded with zeros.  Two elements are
    equal iff their canonical coefficients agree (after lifting to a
    common order when the orders differ).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rational], _canonical: bool = False):
        if order < 1:
            raise ValueError("order must be a positive integer")
        if _canonical:
            self.order = order
            self.coeffs = tuple(coeffs)
            return
        acc = [Fraction(0)] * _phi(order)
        rows = _power_rows(order)
        for k, c in enumerate(coeffs):
            if c:
                c = Fraction(c)
                row = rows[k % order]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += c * r
        acc += [Fraction(0)] * (order - len(acc))
        self.order = order
        self.coeffs = tuple(acc)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "CycScalar":
        return _cached_zero(order)

    @staticmethod
    def one(order: int = 1) -> "CycScalar":
        return _cached_one(order)

    @staticmethod
    def rational(value: Rational, order: int = 1) -> "CycScalar":
        v = Fraction(value)
        c = [Fraction(0)] * order
        c[0] = v
        return CycScalar(order, c, _canonical=True)

    @staticmethod
    def root(order: int, power: int = 1) -> "CycScalar":
        c = [Fraction(0)] * order
        c[power % order] = Fraction(1)
        return CycScalar(order, c)

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def lift(self, order: int) -> "CycScalar":
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only lift to a multiple of the order")
        step = order // self.order
        c = [Fraction(0)] * order
        for k, v in enumerate(self.coeffs):
            if v:
                c[k * step] = v
        return CycScalar(order, c)

    def _common(self, other: "CycScalar"):
        if self.order == other.order:
            return self, other
        m = self.order * other.order // gcd(self.order, other.order)
        return self.lift(m), other.lift(m)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(other, 1)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a, b = self._common(other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)],
                         _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, [-x for x in self.coeffs], _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            m = self.order * other.order // gcd(self.order, other.order)
            return CycScalar.zero(m)
        if self.is_rational:
            q = self.coeffs[0]
            return CycScalar(other.order, [q * x for x in other.coeffs], _canonical=True)
        if other.is_rational:
            q = other.coeffs[0]
            return CycScalar(self.order, [q * x for x in self.coeffs], _canonical=True)
        a, b = self._common(other)
        m = a.order
        conv = [Fraction(0)] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[(i + j) % m] += x * y
        return CycScalar(m, conv)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational:
            return CycScalar.rational(1 / self.coeffs[0], self.order)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        rep = list(self.coeffs[: _phi(self.order)])
        g, s = _pxgcd(rep, phi)
        const = g[0]
        inv = [c / const for c in s]
        return CycScalar(self.order, inv + [Fraction(0)] * max(0, self.order - len(inv)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycScalar.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "CycScalar":
        m = self.order
        c = [Fraction(0)] * m
        for k, v in enumerate(self.coeffs):
            if v:
                c[(m - k) % m] += v
        return CycScalar(m, c)

    def embed(self) -> complex:
        """Numerical value under zeta_m -> exp(2*pi*i/m)."""
        m = self.order
        out = 0j
        for k, v in enumerate(self.coeffs):
            if v:
                out += float(v) * cmath.exp(2j * cmath.pi * k / m)
        return out

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # canonical forms at different orders compare equal

    def __repr__(self):
        terms = []
        for k, v in enumerate(self.coeffs):
            if v:
                if k == 0:
                    terms.append(str(v))
                else:
                    terms.append(f"{v}*z{self.order}^{k}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def _cached_zero(order: int) -> CycScalar:
    return CycScalar(order, [Fraction(0)] * order, _canonical=True)


@lru_cache(maxsize=None)
def _cached_one(order: int) -> CycScalar:
    c = [Fraction(0)] * order
    c[0] = Fraction(1)
    return CycScalar(order, c, _canonical=True)


def cyc(order: int, power: int) -> CycScalar:
    """The root of unity zeta_order^power as an exact scalar."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    return CycScalar.root(order, power)


def exp_i_pi(r: Rational) -> CycScalar:
    """Exact e^(i*pi*r) for rational r."""
    r = Fraction(r)
    return cyc(2 * r.denominator, r.numerator % (2 * r.denominator))


def sin_pi(r: Rational) -> CycScalar:
    """Exact sin(pi*r) for rational r, as an element of a cyclotomic field."""
    z = exp_i_pi(r)
    two_i = cyc(4, 1) * 2
    return (z - z.conjugate()) / two_i


def cos_pi(r: Rational) -> CycScalar:
    z = exp_i_pi(r)
    return (z + z.conjugate()) / 2


# ----------------------------------------------------------------------
# scalar-mode dispatch
# ----------------------------------------------------------------------

def scalar_zero(mode: str, order: int = 1):
    return CycScalar.zero(order) if mode == EXACT else 0j


def scalar_one(mode: str, order: int = 1):
    return CycScalar.one(order) if mode == EXACT else 1 + 0j


def scalar_rational(value: Rational, mode: str, order: int = 1):
    if mode == EXACT:
        return CycScalar.rational(value, order)
    return complex(float(Fraction(value)))


def scalar_exp_i_pi(r: Rational, mode: str):
    return exp_i_pi(r) if mode == EXACT else cmath.exp(1j * cmath.pi * float(Fraction(r)))


def sconj(x):
    if isinstance(x, CycScalar):
        return x.conjugate()
    return complex(x).conjugate()


def s_is_zero(x, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(x, CycScalar):
        return x.is_zero
    return abs(x) <= tol


def s_embed(x) -> complex:
    return x.embed() if isinstance(x, CycScalar) else complex(x)


def mode_of(x) -> str:
    return EXACT if isinstance(x, CycScalar) else FLOAT


# ----------------------------------------------------------------------
# dense matrices
# ----------------------------------------------------------------------

class Mat:
    """Dense row-major matrix over exact or float scalars."""

    __slots__ = ("rows", "cols", "mode", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence, mode: str):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {mode!r}")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.mode = mode
        self.entries = tuple(entries)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence], mode: str = EXACT) -> "Mat":
        r = len(rows)
        c = len(rows[0])
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            for x in row:
                flat.append(_lift_entry(x, mode))
        return Mat(r, c, flat, mode)

    @staticmethod
    def zeros(rows: int, cols: int, mode: str = EXACT) -> "Mat":
        z = scalar_zero(mode)
        return Mat(rows, cols, [z] * (rows * cols), mode)

    @staticmethod
    def identity(n: int, mode: str = EXACT) -> "Mat":
        z = scalar_zero(mode)
        o = scalar_one(mode)
        e = [z] * (n * n)
        for i in range(n):
            e[i * n + i] = o
        return Mat(n, n, e, mode)

    @staticmethod
    def diag(values: Sequence, mode: str = EXACT) -> "Mat":
        n = len(values)
        z = scalar_zero(mode)
        e = [z] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = _lift_entry(v, mode)
        return Mat(n, n, e, mode)

    @staticmethod
    def column(values: Sequence, mode: str = EXACT) -> "Mat":
        return Mat(len(values), 1, [_lift_entry(v, mode) for v in values], mode)

    @staticmethod
    def unit(n: int, i: int, j: int, mode: str = EXACT) -> "Mat":
        """The elementary matrix with a single 1 at row i, column j (0-based)."""
        z = scalar_zero(mode)
        e = [z] * (n * n)
        e[i * n + j] = scalar_one(mode)
        return Mat(n, n, e, mode)

    # -- access ------------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def embed(self) -> list[list[complex]]:
        return [[s_embed(self.entry(i, j)) for j in range(self.cols)]
                for i in range(self.rows)]

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = scalar_zero(self.mode)
        for i in range(self.rows):
            t = t + self.entry(i, i)
        return t

    # -- algebra -------------------------------------------------------------

    def _check_mode(self, other: "Mat"):
        if self.mode != other.mode:
            raise ValueError("mode mismatch: exact and float values cannot be mixed")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_mode(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("size mismatch")
        return Mat(self.rows, self.cols,
                   [a + b for a, b in zip(self.entries, other.entries)], self.mode)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [-a for a in self.entries], self.mode)

    def scale(self, s) -> "Mat":
        s = _lift_entry(s, self.mode)
        return Mat(self.rows, self.cols, [s * a for a in self.entries], self.mode)

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_mode(other)
        if self.cols != other.rows:
            raise ValueError("size mismatch")
        n, m, p = self.rows, self.cols, other.cols
        z = scalar_zero(self.mode)
        exact = self.mode == EXACT
        out = [z] * (n * p)
        oe = other.entries
        for i in range(n):
            base = i * m
            obase = i * p
            for k in range(m):
                a = self.entries[base + k]
                if (a.is_zero if exact else a == 0):
                    continue
                kb = k * p
                for j in range(p):
                    b = oe[kb + j]
                    if (b.is_zero if exact else b == 0):
                        continue
                    out[obase + j] = out[obase + j] + a * b
        return Mat(n, p, out, self.mode)

    def __pow__(self, n: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative matrix power")
        if n == 0:
            return Mat.identity(self.rows, self.mode)
        return reduce(lambda a, b: a * b, [self] * n)

    def dagger(self) -> "Mat":
        out = []
        for j in range(self.cols):
            for i in range(self.rows):
                out.append(sconj(self.entry(i, j)))
        return Mat(self.cols, self.rows, out, self.mode)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols, self.mode) != (other.rows, other.cols, other.mode):
            return False
        return all(a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.mode})"

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        if self.mode == EXACT:
            entries = [{"order": e.order,
                        "coeffs": [[c.numerator, c.denominator] for c in e.coeffs]}
                       for e in self.entries]
        else:
            entries = [[complex(e).real, complex(e).imag] for e in self.entries]
        return {"rows": self.rows, "cols": self.cols, "mode": self.mode,
                "entries": entries}

    @staticmethod
    def from_json_obj(obj: dict) -> "Mat":
        mode = obj["mode"]
        if mode == EXACT:
            entries = [CycScalar(e["order"],
                                 [Fraction(n, d) for n, d in e["coeffs"]],
                                 _canonical=True)
                       for e in obj["entries"]]
        else:
            entries = [complex(re, im) for re, im in obj["entries"]]
        return Mat(obj["rows"], obj["cols"], entries, mode)


def _lift_entry(x, mode: str):
    if mode == EXACT:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar.rational(x)
        raise ValueError("mode mismatch: exact and float values cannot be mixed")
    if isinstance(x, CycScalar):
        raise ValueError("mode mismatch: exact and float values cannot be mixed")
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)


# -- module-level matrix operations ---------------------------------------

def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, rows(a)*rows(b) x cols(a)*cols(b)."""
    a._check_mode(b)
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    z = scalar_zero(a.mode)
    exact = a.mode == EXACT
    out = [z] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.entry(i, j)
            if (x.is_zero if exact else x == 0):
                continue
            for k in range(b.rows):
                rbase = (i * b.rows + k) * cols + j * b.cols
                kb = k * b.cols
                for l in range(b.cols):
                    y = b.entries[kb + l]
                    if (y.is_zero if exact else y == 0):
                        continue
                    out[rbase + l] = x * y
    return Mat(rows, cols, out, a.mode)


def kron_all(mats: Sequence[Mat]) -> Mat:
    return reduce(kron, mats)


def comm(a: Mat, b: Mat) -> Mat:
    """Commutator a*b - b*a."""
    _check_square_pair(a, b)
    return a * b - b * a


def acomm(a: Mat, b: Mat) -> Mat:
    """Anticommutator a*b + b*a."""
    _check_square_pair(a, b)
    return a * b + b * a


def _check_square_pair(a: Mat, b: Mat):
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("size mismatch")


def is_zero(m: Mat, tol: float = DEFAULT_TOL) -> bool:
    """Exact mode: canonical zero test (tol ignored). Float: max-entry <= tol."""
    if m.mode == EXACT:
        return all(e.is_zero for e in m.entries)
    return all(abs(e) <= tol for e in m.entries)


def max_abs(m: Mat) -> float:
    """Largest entry magnitude under the numerical embedding."""
    return max((abs(s_embed(e)) for e in m.entries), default=0.0)
