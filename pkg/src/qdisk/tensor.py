"""Verification of the q-disk polynomial addition formula in a tensor algebra.

The abstract algebra generated by a q-disk pair (X1, X2) and a q-circle
pair (Y1, Y2) is realized faithfully inside Z_3 (x) Z_2 via

    X1 -> z_2,  X2 -> z_3,  Q -> Q_3      (left factor, rank 3)
    Y1 -> z_1,  Y2 -> z_2,  D -> Q_2      (right factor, rank 2)

so both sides of the addition formula become concrete elements of the
tensor product, where equality is decidable by exact normal forms.  Two
variants are verified: the coupled-argument identity with arguments

    A = -q X1 (x) Y1* + X2 (x) Y2,  B = -q X1* (x) Y1 + X2* (x) Y2*,
    C = Q (x) D,

and its precursor with A = X1 (x) Y1 + X2 (x) Y2, B = q^2 X1* (x) Y1* +
X2* (x) Y2*.  The right-hand side couples disk polynomials in the X and
Y generators through explicit constants built from the spherical norms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .diskpoly import DiskSpec, disk_poly
from .haar import norm_const
from .qfield import ONE, QRat
from .zalgebra import ZElement, _accum, _mono_mul, q_element, w_gen, z_gen

LEFT_RANK = 3
RIGHT_RANK = 2


class TensorElement:
    """An element of Z_3 (x) Z_2 over Q(q), expanded over pairs of
    basis monomials.  Multiplication acts factorwise."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, QRat):
                    c = QRat.from_int(c)
                if c:
                    self.terms[key] = c

    # -- constructors

    @staticmethod
    def zero() -> "TensorElement":
        return TensorElement()

    @staticmethod
    def one() -> "TensorElement":
        zl = ((0,) * LEFT_RANK,) * 2
        zr = ((0,) * RIGHT_RANK,) * 2
        return TensorElement({(zl, zr): ONE})

    def one_like(self) -> "TensorElement":
        return TensorElement.one()

    @staticmethod
    def from_pair(left: ZElement, right: ZElement) -> "TensorElement":
        """The simple tensor left (x) right."""
        if left.rank != LEFT_RANK or right.rank != RIGHT_RANK:
            raise ValueError(f"tensor factors must have ranks ({LEFT_RANK}, {RIGHT_RANK})")
        out = {}
        for kl, cl in left.terms.items():
            for kr, cr in right.terms.items():
                out[(kl, kr)] = cl * cr
        return TensorElement(out)

    # -- queries

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    # -- ring operations

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accum(out, key, c)
        return TensorElement(out)

    def __neg__(self):
        return TensorElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QRat)):
            if not isinstance(other, QRat):
                other = QRat.from_int(other)
            if not other:
                return TensorElement.zero()
            return TensorElement({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, TensorElement):
            return NotImplemented
        out: dict = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c = c1 * c2
                for kl, sl in _mono_mul(LEFT_RANK, l1, l2):
                    csl = c * sl
                    for kr, sr in _mono_mul(RIGHT_RANK, r1, r2):
                        _accum(out, (kl, kr), csl * sr)
        return TensorElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers take nonnegative integer exponents")
        acc = TensorElement.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def star(self) -> "TensorElement":
        """Factorwise *-involution; coefficients are fixed."""
        return TensorElement({((kl[1], kl[0]), (kr[1], kr[0])): c
                              for (kl, kr), c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"TensorElement(terms={len(self.terms)})"

    def to_json(self) -> dict:
        def sort_key(item):
            (kl, kr), _ = item
            return (_tensor_order_key(kl), _tensor_order_key(kr))

        return {
            "ranks": [LEFT_RANK, RIGHT_RANK],
            "terms": [
                {
                    "left": {"lambda": list(kl[0]), "mu": list(kl[1])},
                    "right": {"lambda": list(kr[0]), "mu": list(kr[1])},
                    "coeff": c.to_json(),
                }
                for (kl, kr), c in sorted(self.terms.items(), key=sort_key, reverse=True)
            ],
        }


def _tensor_order_key(key):
    lam, mu = key
    return (sum(lam) + sum(mu),) + tuple(reversed(lam)) + tuple(mu)


# ----------------------------------------------------------------------
# generator bundle


class XYGenerators:
    """The disk and circle generator images and their tensor lifts."""

    def __init__(self):
        self.X1 = z_gen(2, LEFT_RANK)
        self.X2 = z_gen(3, LEFT_RANK)
        self.X1s = w_gen(2, LEFT_RANK)
        self.X2s = w_gen(3, LEFT_RANK)
        self.Q = q_element(3, LEFT_RANK)
        self.Y1 = z_gen(1, RIGHT_RANK)
        self.Y2 = z_gen(2, RIGHT_RANK)
        self.Y1s = w_gen(1, RIGHT_RANK)
        self.Y2s = w_gen(2, RIGHT_RANK)
        self.D = q_element(2, RIGHT_RANK)
        # Q' = Q - X2 X2*, the central element of the inner disk pair (X1, X1*)
        self.Qp = self.Q - self.X2 * self.X2s


_GENS: XYGenerators | None = None


def xy_generators() -> XYGenerators:
    global _GENS
    if _GENS is None:
        _GENS = XYGenerators()
    return _GENS


# ----------------------------------------------------------------------
# the addition formula


VARIANTS = ("final", "precursor")


def _check_addition_args(l: int, m: int, alpha: int, variant: str) -> None:
    if l < 0 or m < 0:
        raise ValueError("degrees must be nonnegative")
    if alpha < 1:
        raise ValueError("alpha must be at least 1 (alpha - 1 appears on the right)")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")


def coupling_const(l: int, m: int, r: int, s: int, alpha: int) -> QRat:
    """Coupling coefficient of the (r, s) term on the right-hand side:

    (1 - q^(2(alpha+r+s+1))) / (1 - q^(2(alpha+1)))
        * c_{l,m}^(alpha) / (c_{l-r,m-s}^(alpha+r+s) c_{r,s}^(alpha-1))."""
    if not (0 <= r <= l and 0 <= s <= m):
        raise ValueError("need 0 <= r <= l and 0 <= s <= m")
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    ratio = (ONE - QRat.q_power(2 * (alpha + r + s + 1))) / (ONE - QRat.q_power(2 * (alpha + 1)))
    return ratio * norm_const(l, m, alpha) / (
        norm_const(l - r, m - s, alpha + r + s) * norm_const(r, s, alpha - 1))


def addition_lhs(l: int, m: int, alpha: int, variant: str = "final") -> TensorElement:
    """The disk polynomial of the coupled arguments, expanded in the tensor algebra."""
    _check_addition_args(l, m, alpha, variant)
    g = xy_generators()
    pair = TensorElement.from_pair
    q = QRat.q_power(1)
    if variant == "final":
        A = pair(g.X1, g.Y1s) * (-q) + pair(g.X2, g.Y2)
        B = pair(g.X1s, g.Y1) * (-q) + pair(g.X2s, g.Y2s)
    else:
        A = pair(g.X1, g.Y1) + pair(g.X2, g.Y2)
        B = pair(g.X1s, g.Y1s) * (q * q) + pair(g.X2s, g.Y2s)
    C = pair(g.Q, g.D)
    return disk_poly(DiskSpec(l, m, alpha), A, B, C)


def addition_rhs(l: int, m: int, alpha: int, variant: str = "final") -> TensorElement:
    """The coupled sum of products of disk polynomials in the separate factors."""
    _check_addition_args(l, m, alpha, variant)
    g = xy_generators()
    total = TensorElement.zero()
    minus_q = -QRat.q_power(1)
    for r in range(l + 1):
        for s in range(m + 1):
            cc = coupling_const(l, m, r, s, alpha)
            left = (disk_poly(DiskSpec(l - r, m - s, alpha + r + s), g.X2, g.X2s, g.Q)
                    * disk_poly(DiskSpec(r, s, alpha - 1), g.X1, g.X1s, g.Qp))
            right = disk_poly(DiskSpec(l - r, m - s, alpha + r + s), g.Y2, g.Y2s, g.D)
            if variant == "final":
                right = right * g.Y1 ** s * g.Y1s ** r
                cc = cc * minus_q ** (r - s)
            else:
                right = right * g.Y1 ** r * g.Y1s ** s
            total = total + TensorElement.from_pair(left, right) * cc
    return total


@dataclass
class Verdict:
    """Outcome of one addition-formula verification."""

    l: int
    m: int
    alpha: int
    variant: str
    passed: bool
    residual_terms: list
    lhs_terms: int
    rhs_terms: int
    millis: int

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "alpha": self.alpha,
            "variant": self.variant,
            "pass": self.passed,
            "residual_terms": self.residual_terms,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "millis": self.millis,
        }


def verify_addition(l: int, m: int, alpha: int, variant: str = "final") -> Verdict:
    """Expand both sides to normal form and compare exactly.

    A failure is reported, not raised: the verdict carries the residual
    terms of lhs - rhs so a discrepancy can be inspected."""
    start = time.monotonic()
    lhs = addition_lhs(l, m, alpha, variant)
    rhs = addition_rhs(l, m, alpha, variant)
    diff = lhs - rhs
    residual = []
    for (kl, kr), c in sorted(diff.terms.items(),
                              key=lambda kv: (_tensor_order_key(kv[0][0]), _tensor_order_key(kv[0][1])),
                              reverse=True):
        residual.append({
            "left": {"lambda": list(kl[0]), "mu": list(kl[1])},
            "right": {"lambda": list(kr[0]), "mu": list(kr[1])},
            "coeff": c.to_json(),
        })
    millis = int((time.monotonic() - start) * 1000)
    return Verdict(l, m, alpha, variant, diff.is_zero(), residual,
                   lhs.term_count(), rhs.term_count(), millis)
