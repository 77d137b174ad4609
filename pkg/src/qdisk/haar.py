"""The Haar functional on quantum spheres and the inner products it induces.

On basis monomials the functional is diagonal,

    h(z^lam w^mu) = delta_{lam,mu} q^(-2((n-1)lam_1 + ... + lam_{n-1}))
        (q^-2; q^-2)_{lam_1} ... (q^-2; q^-2)_{lam_n} (q^-2; q^-2)_{n-1}
        / (q^-2; q^-2)_{|lam| + n - 1},

and extends linearly.  It descends to the quotient by Q_n - 1 (checked
functionally: h(Q_n x) = h(x)); the quotient itself is never built.
The sesquilinear pairing is <a, b> = h(b* a).
"""

from __future__ import annotations

from .qfield import ONE, QRat, ZERO, qpoch
from .zalgebra import ZElement, _mono_mul, star

_MONO_HAAR_CACHE: dict = {}
_PAIR_HAAR_CACHE: dict = {}


def haar_monomial(lam, mu, n: int) -> QRat:
    """h applied to the basis monomial z^lam w^mu of Z_n."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != n or len(mu) != n:
        raise ValueError("exponent vectors must have length n")
    if lam != mu:
        return ZERO
    cached = _MONO_HAAR_CACHE.get((lam, n))
    if cached is not None:
        return cached
    e = -2 * sum((n - 1 - i) * lam[i] for i in range(n - 1))
    value = QRat.q_power(e)
    for li in lam:
        value = value * qpoch(-2, -2, li)
    value = value * qpoch(-2, -2, n - 1) / qpoch(-2, -2, sum(lam) + n - 1)
    _MONO_HAAR_CACHE[(lam, n)] = value
    return value


def haar_monomial_alt(lam, mu, n: int) -> QRat:
    """Equivalent positive-base form of the same functional, used as a
    cross-check: q-Pochhammers in base q^2 with an explicit q-power."""
    lam, mu = tuple(lam), tuple(mu)
    if lam != mu:
        return ZERO
    t = sum(lam)
    e = t * t + sum(2 * i * lam[i] - lam[i] ** 2 for i in range(n))
    value = QRat.q_power(e)
    for li in lam:
        value = value * qpoch(2, 2, li)
    return value * qpoch(2, 2, n - 1) / qpoch(2, 2, t + n - 1)


def haar(a: ZElement) -> QRat:
    """The Haar functional, linear over the monomial expansion."""
    total = ZERO
    n = a.rank
    for (lam, mu), c in a.terms.items():
        if lam == mu:
            total = total + c * haar_monomial(lam, mu, n)
    return total


def _pair_haar(rank: int, key1, key2) -> QRat:
    """h of the product of two basis monomials, memoized."""
    cached = _PAIR_HAAR_CACHE.get((rank, key1, key2))
    if cached is not None:
        return cached
    total = ZERO
    for (lam, mu), c in _mono_mul(rank, key1, key2):
        if lam == mu:
            total = total + c * haar_monomial(lam, mu, rank)
    _PAIR_HAAR_CACHE[(rank, key1, key2)] = total
    return total


def inner(a: ZElement, b: ZElement) -> QRat:
    """<a, b> = h(b* a), computed by pairing monomials directly."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    rank = a.rank
    total = ZERO
    for (lam_b, mu_b), cb in b.terms.items():
        bkey = (mu_b, lam_b)  # star of a basis monomial swaps the exponents
        db = sum(mu_b) - sum(lam_b)
        for (lam_a, mu_a), ca in a.terms.items():
            # h vanishes unless the product can hit the diagonal
            if db + sum(lam_a) - sum(mu_a) != 0:
                continue
            v = _pair_haar(rank, bkey, (lam_a, mu_a))
            if v:
                total = total + cb * ca * v
    return total


def norm_const(l: int, m: int, alpha: int) -> QRat:
    """Squared norm c_{l,m}^(alpha) of the (l, m) q-disk polynomial:

    (1 - q^(2(alpha+1))) q^(2m(alpha+1)) / (1 - q^(2(alpha+l+m+1)))
        * (q^2; q^2)_l (q^2; q^2)_m
        / ((q^(2(alpha+1)); q^2)_l (q^(2(alpha+1)); q^2)_m).

    Not symmetric in l and m: the q-power weights the w-side degree."""
    if l < 0 or m < 0 or alpha < 0:
        raise ValueError("norm constant parameters must be nonnegative")
    num = (ONE - QRat.q_power(2 * (alpha + 1))) * QRat.q_power(2 * m * (alpha + 1))
    num = num * qpoch(2, 2, l) * qpoch(2, 2, m)
    den = (ONE - QRat.q_power(2 * (alpha + l + m + 1)))
    den = den * qpoch(2 * (alpha + 1), 2, l) * qpoch(2 * (alpha + 1), 2, m)
    return num / den


def inner_via_product(a: ZElement, b: ZElement) -> QRat:
    """Reference route for <a, b>: normalize b* a fully, then apply h."""
    return haar(star(b) * a)
