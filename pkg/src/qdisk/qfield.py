"""Exact arithmetic in the field of rational functions of q.

Every coefficient that appears downstream (normal forms, Haar values,
q-disk expansions, verification residuals) lives in Q(q), represented as
a reduced fraction of integer-coefficient polynomials.  Identities are
checked by exact reduction to the canonical zero, never numerically, so
the canonical form matters: gcd(num, den) is a unit, den has positive
leading coefficient, and the pair carries overall integer content 1.
Zero is always the pair (0, 1).

Polynomials are plain tuples of ints, coefficient of q^i at index i, no
trailing zeros.  Negative powers of q are ordinary fractions here (for
example q^-2 is 1/q^2); there is no separate Laurent type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Coeffs = tuple  # tuple[int, ...], ascending by degree, no trailing zeros


# ----------------------------------------------------------------------
# integer polynomial helpers


def poly_from_coeffs(cs: Iterable[int]) -> Coeffs:
    cs = list(cs)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def poly_add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_from_coeffs(out)


def poly_neg(a: Coeffs) -> Coeffs:
    return tuple(-c for c in a)


def poly_sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    if a == (1,):
        return b
    if b == (1,):
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return poly_from_coeffs(out)


def poly_scale(a: Coeffs, c: int) -> Coeffs:
    if c == 0:
        return ()
    if c == 1:
        return a
    return tuple(x * c for x in a)


def poly_content(a: Coeffs) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def poly_valuation(a: Coeffs) -> int:
    """Order of vanishing at q = 0 (a must be nonzero)."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("zero polynomial has no valuation")


def poly_eval(a: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_divexact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Quotient a / b when the division is known to be exact over Z[q]."""
    if not a:
        return ()
    lb = b[-1]
    quot = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c:
            if c % lb:
                raise ArithmeticError("inexact polynomial division")
            qc = c // lb
            quot[k] = qc
            for i, bc in enumerate(b):
                rem[k + i] -= qc * bc
    return poly_from_coeffs(quot)


def _primitive(a: Coeffs) -> Coeffs:
    c = poly_content(a)
    if c <= 1:
        return a
    return tuple(x // c for x in a)


def _prem(a: Coeffs, b: Coeffs) -> Coeffs:
    """Scalar multiple of the remainder of a by b, fraction-free."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return tuple(r)


def poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if not a:
        if not b:
            return ()
        g = _primitive(b)
        return g if g[-1] > 0 else poly_neg(g)
    if not b:
        g = _primitive(a)
        return g if g[-1] > 0 else poly_neg(g)
    va, vb = poly_valuation(a), poly_valuation(b)
    v = min(va, vb)
    a = _primitive(a[va:])
    b = _primitive(b[vb:])
    while b:
        if len(b) == 1:
            # primitive constant, so the polynomial part is trivial
            b = ()
            a = (1,)
            break
        if len(a) < len(b):
            a, b = b, a
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = poly_neg(a)
    if v:
        a = (0,) * v + a
    return a


def poly_str(a: Coeffs, var: str = "q") -> str:
    if not a:
        return "0"
    parts = []
    for e, c in enumerate(a):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            pw = var if e == 1 else f"{var}^{e}"
            body = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ----------------------------------------------------------------------
# the field


def _reduce(num: Coeffs, den: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    # cancel the polynomial gcd
    g = poly_gcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = poly_divexact(num, g)
        den = poly_divexact(den, g)
    # overall content of the pair
    c = math.gcd(poly_content(num), poly_content(den))
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    if den[-1] < 0:
        num = poly_neg(num)
        den = poly_neg(den)
    return num, den


PolyLike = Union[int, Sequence]


def _as_poly(x: PolyLike) -> Coeffs:
    if isinstance(x, int):
        return (x,) if x else ()
    return poly_from_coeffs(x)


class QRat:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: PolyLike = (), den: PolyLike = 1, *, _canonical: bool = False):
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _reduce(_as_poly(num), _as_poly(den))
        self._hash = None

    # -- constructors

    @staticmethod
    def from_int(n: int) -> "QRat":
        return _INT_CACHE.get(n) or QRat((n,) if n else (), (1,), _canonical=True)

    @staticmethod
    def fraction(num: int, den: int) -> "QRat":
        return QRat((num,) if num else (), (den,))

    @staticmethod
    def q_power(k: int) -> "QRat":
        """q^k for any integer k (negative powers become denominators)."""
        cached = _QPOW_CACHE.get(k)
        if cached is not None:
            return cached
        if k >= 0:
            r = QRat((0,) * k + (1,), (1,), _canonical=True)
        else:
            r = QRat((1,), (0,) * (-k) + (1,), _canonical=True)
        _QPOW_CACHE[k] = r
        return r

    # -- predicates

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- field operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        b, d = self.den, other.den
        if b == d:
            return QRat(poly_add(self.num, other.num), b)
        if b == (1,):
            return QRat(poly_add(poly_mul(self.num, d), other.num), d)
        if d == (1,):
            return QRat(poly_add(self.num, poly_mul(other.num, b)), b)
        g = poly_gcd(b, d)
        if g == (1,):
            num = poly_add(poly_mul(self.num, d), poly_mul(other.num, b))
            den = poly_mul(b, d)
            # coprime denominators: only content can still cancel
            c = math.gcd(poly_content(num), poly_content(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
            if not num:
                return ZERO
            if den[-1] < 0:
                num, den = poly_neg(num), poly_neg(den)
            return QRat(num, den, _canonical=True)
        b1 = poly_divexact(b, g)
        d1 = poly_divexact(d, g)
        t = poly_add(poly_mul(self.num, d1), poly_mul(other.num, b1))
        return QRat(t, poly_mul(b1, d))

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return QRat(poly_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # cross-cancel before multiplying to keep intermediates small
        if d2 != (1,):
            g = poly_gcd(n1, d2)
            if g != (1,):
                n1 = poly_divexact(n1, g)
                d2 = poly_divexact(d2, g)
        if d1 != (1,):
            g = poly_gcd(n2, d1)
            if g != (1,):
                n2 = poly_divexact(n2, g)
                d1 = poly_divexact(d1, g)
        num = poly_mul(n1, n2)
        den = poly_mul(d1, d2)
        c = math.gcd(poly_content(num), poly_content(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return QRat(num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return QRat(num, den, _canonical=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = ONE, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    # -- comparisons, hashing, display

    def __eq__(self, other):
        if isinstance(other, int):
            other = QRat.from_int(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.num, self.den))
        return h

    def __str__(self):
        if self.den == (1,):
            return poly_str(self.num)
        num = poly_str(self.num)
        den = poly_str(self.den)
        if sum(1 for c in self.num if c) > 1 or (self.num and self.num[-1] < 0):
            num = f"({num})"
        if sum(1 for c in self.den if c) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"

    # -- evaluation and serialization

    def eval_at(self, r) -> Fraction:
        """Exact evaluation at a rational point q = r."""
        r = Fraction(r)
        dv = poly_eval(self.den, r)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {r}")
        return poly_eval(self.num, r) / dv

    def to_json(self) -> dict:
        return {"num": [int_to_json(c) for c in self.num],
                "den": [int_to_json(c) for c in self.den]}

    @staticmethod
    def from_json(obj: dict) -> "QRat":
        return QRat([int_from_json(c) for c in obj["num"]],
                    [int_from_json(c) for c in obj["den"]])


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat.from_int(x)
    return NotImplemented


ZERO = QRat((), (1,), _canonical=True)
ONE = QRat((1,), (1,), _canonical=True)
_INT_CACHE = {0: ZERO, 1: ONE, -1: QRat((-1,), (1,), _canonical=True),
              2: QRat((2,), (1,), _canonical=True)}
_QPOW_CACHE: dict = {0: ONE}
Q = QRat.q_power(1)


def qrat_arith(a: QRat, b: QRat, op: str) -> QRat:
    """Dispatch one of the four field operations by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


# JSON integer policy: values outside the IEEE-exact window are emitted as
# decimal strings so downstream consumers with 64-bit doubles stay exact.
_JSON_INT_MAX = 2 ** 53


def int_to_json(c: int):
    return c if -_JSON_INT_MAX < c < _JSON_INT_MAX else str(c)


def int_from_json(c) -> int:
    return int(c)


# ----------------------------------------------------------------------
# q-combinatorics


@lru_cache(maxsize=None)
def qpoch(a_exp: int, step_exp: int, k: int) -> QRat:
    """q-shifted factorial (q^a_exp; q^step_exp)_k = prod (1 - q^(a_exp + i*step_exp)).

    Both exponents may be negative; negative powers of q land in the
    denominator, e.g. qpoch(-2, 2, 1) = (q^2 - 1)/q^2.
    """
    if k < 0:
        raise ValueError("qpoch length must be nonnegative")
    if k == 0:
        return ONE
    acc = ONE
    for i in range(k):
        e = a_exp + i * step_exp
        acc = acc * (ONE - QRat.q_power(e))
        if acc.is_zero():
            return ZERO
    return acc


@lru_cache(maxsize=None)
def qnumber(m: int, base_exp: int) -> QRat:
    """The q-integer [m] in base q^base_exp: (1 - q^(m*base_exp))/(1 - q^base_exp)."""
    if m < 0:
        raise ValueError("qnumber index must be nonnegative")
    if base_exp == 0:
        raise ValueError("qnumber base exponent must be nonzero")
    if m == 0:
        return ZERO
    return (ONE - QRat.q_power(m * base_exp)) / (ONE - QRat.q_power(base_exp))


# ----------------------------------------------------------------------
# exact linear algebra over Q(q)


@dataclass
class LinearSolution:
    """Outcome of an exact linear solve: inconsistency is a result, not an error."""

    consistent: bool
    particular: list | None          # list[QRat] when consistent
    nullspace: list                  # list[list[QRat]], basis of the homogeneous space


def solve_linear(matrix: Sequence[Sequence[QRat]], rhs: Sequence[QRat]) -> LinearSolution:
    """Solve M x = rhs exactly over Q(q) by reduced row echelon form."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, nrows) if aug[i][col]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    consistent = all(not aug[i][ncols] for i in range(r, nrows))
    particular = None
    if consistent:
        particular = [ZERO] * ncols
        for i, col in enumerate(pivots):
            particular[col] = aug[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    nullspace = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for i, col in enumerate(pivots):
            vec[col] = -aug[i][fc]
        nullspace.append(vec)
    return LinearSolution(consistent, particular, nullspace)
