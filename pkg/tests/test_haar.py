import itertools
import random
from fractions import Fraction

import pytest

from qdisk.haar import (
    haar,
    haar_monomial,
    haar_monomial_alt,
    inner,
    inner_via_product,
    norm_const,
)
from qdisk.qfield import ONE, QRat, ZERO
from qdisk.qfunc import MultiQPoly, multi_jackson
from qdisk.uqaction import act_e, act_f, act_qh
from qdisk.zalgebra import ZElement, q_element, star, w_gen, z_gen

qp = QRat.q_power


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def random_element(rng, rank, nterms=3, maxdeg=2):
    terms = {}
    for _ in range(nterms):
        lam = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        mu = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        terms[(lam, mu)] = QRat.from_int(rng.randint(-3, 3))
    return ZElement(rank, terms)


def test_monomial_values():
    # off-diagonal kills, diagonal matches the hand-reduced value
    assert haar_monomial((1, 0), (0, 1), 2) == ZERO
    assert haar_monomial((0, 1), (0, 1), 2) == QRat((0, 0, 1), (1, 0, 1))  # q^2/(1+q^2)
    assert haar_monomial((1, 0), (1, 0), 2) == QRat((1,), (1, 0, 1))       # 1/(1+q^2)
    assert haar(ZElement.one(3)) == ONE


def test_two_monomial_formulas_agree():
    for n in (2, 3, 4):
        for total in range(5):
            for lam in compositions(total, n):
                assert haar_monomial(lam, lam, n) == haar_monomial_alt(lam, lam, n), (n, lam)


@pytest.mark.parametrize("n", [2, 3])
def test_quotient_well_defined(n):
    rng = random.Random(100 + n)
    Qn = q_element(n, n)
    for _ in range(25):
        x = random_element(rng, n)
        assert haar(Qn * x) == haar(x)
        assert haar(x * Qn) == haar(x)


@pytest.mark.parametrize("n", [2, 3])
def test_ground_relation_killed(n):
    # w_n z_n - q^2 z_n w_n - (1 - q^2) vanishes against h after multiplication
    rel = (w_gen(n, n) * z_gen(n, n) - qp(2) * z_gen(n, n) * w_gen(n, n)
           - ZElement.scalar(ONE - qp(2), n))
    rng = random.Random(7)
    for _ in range(20):
        x = random_element(rng, n)
        assert haar(rel * x) == ZERO


@pytest.mark.parametrize("n", [2, 3])
def test_action_invariance(n):
    rng = random.Random(31 + n)
    for _ in range(20):
        x = random_element(rng, n)
        h = tuple(rng.randint(-2, 2) for _ in range(n))
        assert haar(act_qh(h, x)) == haar(x)
        for k in range(1, n):
            assert haar(act_e(k, x)) == ZERO
            assert haar(act_f(k, x)) == ZERO


def test_inner_example():
    z2 = z_gen(2, 2)
    assert inner(z2, z2) == QRat((1,), (1, 0, 1))  # 1/(1+q^2)


@pytest.mark.parametrize("n", [2, 3])
def test_inner_routes_agree(n):
    rng = random.Random(53 + n)
    for _ in range(15):
        a = random_element(rng, n, nterms=2)
        b = random_element(rng, n, nterms=2)
        assert inner(a, b) == inner_via_product(a, b)


@pytest.mark.parametrize("n", [2, 3])
def test_inner_symmetry(n):
    rng = random.Random(71 + n)
    for _ in range(15):
        a = random_element(rng, n, nterms=2)
        b = random_element(rng, n, nterms=2)
        assert inner(a, b) == inner(b, a)


def ladder_poly(lam, n):
    """z^lam w^lam as a polynomial in Q_1..Q_{n-1} with Q_n = 1, Q_0 = 0."""
    nv = n - 1
    out = MultiQPoly.one(nv)

    def qvar(k):  # Q_k as a MultiQPoly
        if k == 0:
            return MultiQPoly.zero(nv)
        if k == n:
            return MultiQPoly.one(nv)
        return MultiQPoly.monomial(nv, tuple(1 if t == k - 1 else 0 for t in range(nv)))

    for k in range(1, n + 1):
        for t in range(lam[k - 1]):
            out = out * (qvar(k) - qp(-2 * t) * qvar(k - 1))
    return out


@pytest.mark.parametrize("n", [2, 3, 4])
def test_integral_representation_on_monomials(n):
    for total in range(4):
        for lam in compositions(total, n):
            assert multi_jackson(ladder_poly(lam, n), n) == haar_monomial(lam, lam, n), (n, lam)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_integral_representation_on_ladder_monomials(n):
    # h of products of Q_i equals the normalized iterated Jackson integral
    for expo in itertools.product(range(3), repeat=n - 1):
        elem = ZElement.one(n)
        for i, e in enumerate(expo):
            elem = elem * q_element(i + 1, n) ** e
        phi = MultiQPoly.monomial(n - 1, expo)
        assert haar(elem) == multi_jackson(phi, n), (n, expo)


def test_norm_const_values():
    for alpha in (0, 1):
        assert norm_const(1, 0, alpha) == (ONE - qp(2)) / (ONE - qp(2 * (alpha + 2)))
    # asymmetry in (l, m): the swap costs an explicit q-power
    for alpha in range(3):
        for l in range(3):
            for m in range(3):
                assert norm_const(m, l, alpha) == qp(2 * (l - m) * (alpha + 1)) * norm_const(l, m, alpha)
    with pytest.raises(ValueError):
        norm_const(1, 0, -1)


def _fraction_matrix_is_positive_definite(mat):
    m = [row[:] for row in mat]
    size = len(m)
    for k in range(size):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, size):
            f = m[i][k] / m[k][k]
            for j in range(k, size):
                m[i][j] -= f * m[k][j]
    return True


@pytest.mark.parametrize("point", [Fraction(1, 2), Fraction(3, 4)])
def test_gram_positivity(point):
    n = 2
    keys = [(lam, mu) for lam in compositions(1, n) for mu in compositions(1, n)]
    basis = [ZElement(n, {k: ONE}) for k in keys]
    gram = [[inner(a, b).eval_at(point) for b in basis] for a in basis]
    assert gram == [list(row) for row in zip(*gram)]
    assert _fraction_matrix_is_positive_definite(gram)
