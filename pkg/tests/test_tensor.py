"""Tests for the tensor-product realization and the addition formula."""

import random
from itertools import product

import pytest

from qdisk.qfield import ONE, QRat
from qdisk.qfield import solve_linear
from qdisk.tensor import (
    TensorElement,
    addition_lhs,
    addition_rhs,
    coupling_const,
    verify_addition,
    xy_generators,
)
from qdisk.zalgebra import ZElement

Q = QRat.q_power(1)
Q2 = QRat.q_power(2)


def random_z(rng, rank, nterms=3, maxdeg=2):
    terms = {}
    for _ in range(nterms):
        lam = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        mu = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        terms[(lam, mu)] = QRat.from_int(rng.randint(-3, 3))
    return ZElement(rank, terms)


def random_tensor(rng, nterms=2):
    acc = TensorElement.zero()
    for _ in range(nterms):
        acc = acc + TensorElement.from_pair(random_z(rng, 3, nterms=2, maxdeg=1),
                                            random_z(rng, 2, nterms=2, maxdeg=1))
    return acc


# ---------------------------------------------------------- generator images


def test_disk_pair_images_satisfy_relations():
    g = xy_generators()
    one_minus_q2 = ONE - Q2
    assert g.X1 * g.X2 == Q * (g.X2 * g.X1)
    assert g.X2s * g.X1s == Q * (g.X1s * g.X2s)
    assert g.X1s * g.X2 == Q * (g.X2 * g.X1s)
    assert g.X2s * g.X1 == Q * (g.X1 * g.X2s)
    assert g.X1s * g.X1 == Q2 * (g.X1 * g.X1s) + one_minus_q2 * (g.Q - g.X2 * g.X2s)
    assert g.X2s * g.X2 == Q2 * (g.X2 * g.X2s) + one_minus_q2 * g.Q
    for x in (g.X1, g.X2, g.X1s, g.X2s):
        assert g.Q * x == x * g.Q


def test_circle_pair_images_satisfy_relations():
    g = xy_generators()
    assert g.Y1 * g.Y2 == Q * (g.Y2 * g.Y1)
    assert g.Y2s * g.Y1s == Q * (g.Y1s * g.Y2s)
    assert g.Y1s * g.Y2 == Q * (g.Y2 * g.Y1s)
    assert g.Y2s * g.Y1 == Q * (g.Y1 * g.Y2s)
    assert g.Y1s * g.Y1 == g.Y1 * g.Y1s
    assert g.Y2s * g.Y2 == Q2 * (g.Y2 * g.Y2s) + (ONE - Q2) * g.D
    for y in (g.Y1, g.Y2, g.Y1s, g.Y2s):
        assert g.D * y == y * g.D


def test_inner_disk_center_commutes():
    g = xy_generators()
    assert g.Qp == g.Q - g.X2 * g.X2s
    for x in (g.X1, g.X1s):
        assert g.Qp * x == x * g.Qp


# -------------------------------------------------------- basis faithfulness


def _pbw_image(r, s, t, u, v):
    g = xy_generators()
    h = g.Q - g.X1 * g.X1s - g.X2 * g.X2s
    return g.X1 ** r * g.X2 ** s * g.X2s ** t * g.X1s ** u * h ** v


def test_pbw_images_are_distinct_monomials():
    seen = set()
    for r, s, t, u, v in product(range(3), repeat=5):
        img = _pbw_image(r, s, t, u, v)
        assert len(img.terms) == 1
        ((lam, mu), coeff), = img.terms.items()
        assert lam == (v, r, s) and mu == (v, u, t)
        assert coeff
        seen.add((lam, mu))
    assert len(seen) == 3 ** 5


def test_pbw_images_are_linearly_independent():
    images = [_pbw_image(r, s, t, u, v)
              for r, s, t, u, v in product(range(2), repeat=5)]
    keys = sorted({key for img in images for key in img.terms})
    index = {key: i for i, key in enumerate(keys)}
    matrix = [[QRat.from_int(0)] * len(images) for _ in keys]
    for j, img in enumerate(images):
        for key, c in img.terms.items():
            matrix[index[key]][j] = c
    sol = solve_linear(matrix, [QRat.from_int(0)] * len(keys))
    assert sol.consistent
    assert sol.nullspace == []


# ----------------------------------------------------------- tensor elements


def test_from_pair_is_multiplicative():
    rng = random.Random(7)
    for _ in range(10):
        a, c = random_z(rng, 3), random_z(rng, 3)
        b, d = random_z(rng, 2), random_z(rng, 2)
        lhs = TensorElement.from_pair(a, b) * TensorElement.from_pair(c, d)
        assert lhs == TensorElement.from_pair(a * c, b * d)


def test_tensor_ring_axioms():
    rng = random.Random(11)
    for _ in range(6):
        x, y, z = (random_tensor(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) - y == x
    one = TensorElement.one()
    x = random_tensor(rng)
    assert one * x == x and x * one == x
    assert x.one_like() == one
    assert (x * 0).is_zero()


def test_star_is_an_involutive_antihomomorphism():
    rng = random.Random(13)
    for _ in range(6):
        x, y = random_tensor(rng), random_tensor(rng)
        assert x.star().star() == x
        assert (x * y).star() == y.star() * x.star()
        assert (x + y).star() == x.star() + y.star()


def test_star_swaps_coupled_arguments():
    g = xy_generators()
    pair = TensorElement.from_pair
    A = pair(g.X1, g.Y1s) * (-Q) + pair(g.X2, g.Y2)
    B = pair(g.X1s, g.Y1) * (-Q) + pair(g.X2s, g.Y2s)
    C = pair(g.Q, g.D)
    assert A.star() == B
    assert C.star() == C
    for name, other in (("A", A), ("B", B)):
        assert C * other == other * C, name


def test_validation_errors():
    rng = random.Random(3)
    with pytest.raises(ValueError):
        TensorElement.from_pair(random_z(rng, 2), random_z(rng, 2))
    with pytest.raises(ValueError):
        TensorElement.one() ** -1
    with pytest.raises(ValueError):
        coupling_const(1, 0, 2, 0, 1)
    with pytest.raises(ValueError):
        coupling_const(1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        verify_addition(1, 0, 0)
    with pytest.raises(ValueError):
        verify_addition(1, 0, 1, variant="bogus")


# ---------------------------------------------------------------- the formula


def test_coupling_const_examples():
    assert coupling_const(1, 0, 0, 0, 1) == ONE
    assert coupling_const(1, 0, 1, 0, 1) == ONE
    assert coupling_const(0, 1, 0, 1, 1) == Q2
    # r = s = 0 term: the two norm ratios collapse to 1, leaving the prefactor.
    assert coupling_const(0, 0, 0, 0, 2) == ONE


def test_verify_addition_small_grid():
    for variant in ("final", "precursor"):
        for alpha in (1, 2):
            for l, m in product(range(2), repeat=2):
                v = verify_addition(l, m, alpha, variant)
                assert v.passed, (l, m, alpha, variant, v.residual_terms)
                assert v.residual_terms == []
                assert v.lhs_terms == v.rhs_terms
                assert v.millis >= 0


def test_verify_addition_degree_two():
    v = verify_addition(2, 1, 1)
    assert v.passed
    payload = v.to_json()
    assert payload["pass"] is True
    assert payload["l"] == 2 and payload["m"] == 1 and payload["alpha"] == 1
    assert payload["variant"] == "final"
    assert payload["residual_terms"] == []


def test_variants_do_not_mix():
    lhs = addition_lhs(1, 0, 1, "final")
    rhs = addition_rhs(1, 0, 1, "precursor")
    diff = lhs - rhs
    assert not diff.is_zero()


def test_residual_reported_on_mismatch():
    # Tamper with one side by scaling: the verdict machinery must surface it.
    lhs = addition_lhs(1, 1, 1)
    rhs = addition_rhs(1, 1, 1)
    assert (lhs - rhs).is_zero()
    bad = lhs * Q2 - rhs
    assert not bad.is_zero()
    assert all(c for c in bad.terms.values())


def test_to_json_structure():
    g = xy_generators()
    elt = TensorElement.from_pair(g.X1, g.Y1) + TensorElement.one()
    payload = elt.to_json()
    assert payload["ranks"] == [3, 2]
    assert len(payload["terms"]) == 2
    top = payload["terms"][0]
    assert top["left"]["lambda"] == [0, 1, 0]
    assert top["right"]["lambda"] == [1, 0]
    assert top["coeff"] == ONE.to_json()
