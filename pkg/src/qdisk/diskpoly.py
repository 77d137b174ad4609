"""q-disk polynomials in three noncommuting arguments, divisionlessly.

R_{l,m}^(alpha)(A, B, C; q^2) homogenizes the little q-Jacobi expansion:
with coef_k the base-q^2 Jacobi coefficient of x^k (q^2k included), it is

    l >= m:  sum_k coef_k C^(m-k) A^(l-m) (C - AB)^k
    l <= m:  sum_k coef_k C^(l-k) (C - AB)^k B^(m-l)

where the Jacobi parameters are (alpha, l-m) at degree m, respectively
(alpha, m-l) at degree l.  C must commute with A and with B (checked);
no inverses of C are ever formed.  Specializing (A, B, C) to
(z_n, w_n, Q_n) gives the zonal spherical elements of the quantum
sphere; with a second factor in the next lower rank it gives the
associated spherical elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qfield import QRat
from .qfunc import little_q_jacobi
from .zalgebra import ZElement, q_element, w_gen, z_gen


@dataclass(frozen=True)
class DiskSpec:
    """Degrees and parameter of one q-disk polynomial; base fixed at q^2."""

    l: int
    m: int
    alpha: int
    base_exp: int = 2

    def __post_init__(self):
        if self.l < 0 or self.m < 0:
            raise ValueError("degrees must be nonnegative")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")


def disk_poly(spec: DiskSpec, A, B, C):
    """Evaluate R_{l,m}^(alpha)(A, B, C; q^base) on elements of any algebra
    supporting +, -, * and scalar multiplication by QRat.

    Raises ValueError when C fails to commute with A or with B."""
    for name, other in (("A", A), ("B", B)):
        if C * other != other * C:
            raise ValueError(f"C does not commute with {name}")
    l, m, alpha = spec.l, spec.m, spec.alpha
    mm, beta = min(l, m), abs(l - m)
    coeffs = little_q_jacobi(mm, alpha, beta, spec.base_exp).coeffs
    D = C - A * B
    one = A.one_like()
    result = one * QRat.from_int(0)
    c_pow = [one]
    for _ in range(mm):
        c_pow.append(c_pow[-1] * C)
    d_pow = one
    a_pow = A ** (l - m) if l > m else one
    b_pow = B ** (m - l) if m > l else one
    for k in range(mm + 1):
        if k:
            d_pow = d_pow * D
        if l >= m:
            term = c_pow[mm - k] * a_pow * d_pow
        else:
            term = c_pow[mm - k] * d_pow * b_pow
        result = result + term * coeffs[k]
    return result


def spherical(l: int, m: int, n: int) -> ZElement:
    """Bidegree-(l, m) zonal spherical element of the rank-n quantum sphere,
    as its homogeneous representative R_{l,m}^(n-2)(z_n, w_n, Q_n; q^2)."""
    if n < 2:
        raise ValueError("spherical elements need rank at least 2")
    return disk_poly(DiskSpec(l, m, n - 2), z_gen(n, n), w_gen(n, n), q_element(n, n))


def assoc_spherical(l: int, m: int, r: int, s: int, n: int) -> ZElement:
    """Associated spherical element: the (l-r, m-s) disk polynomial on the
    top generators times the (r, s) one on the next level down."""
    if n < 3:
        raise ValueError("associated spherical elements need rank at least 3")
    if not (0 <= r <= l and 0 <= s <= m):
        raise ValueError("need 0 <= r <= l and 0 <= s <= m")
    outer = disk_poly(DiskSpec(l - r, m - s, n - 2 + r + s),
                      z_gen(n, n), w_gen(n, n), q_element(n, n))
    inner = disk_poly(DiskSpec(r, s, n - 3),
                      z_gen(n - 1, n), w_gen(n - 1, n), q_element(n - 1, n))
    return outer * inner
