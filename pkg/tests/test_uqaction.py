import random

import pytest

from qdisk.qfield import ONE, QRat, ZERO, solve_linear
from qdisk.uqaction import act_e, act_f, act_qh, invariant_subspace, is_invariant
from qdisk.zalgebra import ZElement, bidegree, q_element, w_gen, z_gen

qp = QRat.q_power


def random_element(rng, rank, nterms=3, maxdeg=2):
    terms = {}
    for _ in range(nterms):
        lam = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        mu = tuple(rng.randint(0, maxdeg) for _ in range(rank))
        terms[(lam, mu)] = QRat.from_int(rng.randint(-3, 3))
    return ZElement(rank, terms)


def test_action_examples():
    assert act_qh((1, 0), z_gen(1, 2)) == qp(1) * z_gen(1, 2)
    assert act_f(1, z_gen(1, 2)) == z_gen(2, 2)
    assert act_e(1, z_gen(2, 2)) == z_gen(1, 2)
    assert act_e(1, w_gen(1, 2)) == -qp(-1) * w_gen(2, 2)
    assert act_f(1, w_gen(2, 2)) == -qp(1) * w_gen(1, 2)


def test_ladder_index_validation():
    with pytest.raises(ValueError):
        act_e(2, z_gen(1, 2))
    with pytest.raises(ValueError):
        act_f(0, z_gen(1, 2))
    with pytest.raises(ValueError):
        act_qh((1, 0, 0), z_gen(1, 2))


def test_weight_composition():
    rng = random.Random(11)
    for _ in range(15):
        rank = rng.choice([2, 3])
        a = random_element(rng, rank)
        h1 = tuple(rng.randint(-2, 2) for _ in range(rank))
        h2 = tuple(rng.randint(-2, 2) for _ in range(rank))
        hsum = tuple(x + y for x, y in zip(h1, h2))
        assert act_qh(h1, act_qh(h2, a)) == act_qh(hsum, a)
        assert act_qh((0,) * rank, a) == a


def test_ladders_shift_weight_and_preserve_bidegree():
    rng = random.Random(5)
    for _ in range(20):
        rank = rng.choice([2, 3])
        k = rng.randint(1, rank - 1)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        mu = tuple(rng.randint(0, 2) for _ in range(rank))
        x = ZElement(rank, {(lam, mu): ONE})
        wt = tuple(l - m for l, m in zip(lam, mu))
        for op, sgn in ((act_f, -1), (act_e, +1)):
            y = op(k, x)
            for (nl, nm) in y.terms:
                nwt = tuple(l - m for l, m in zip(nl, nm))
                expect = list(wt)
                expect[k - 1] += sgn
                expect[k] -= sgn
                assert nwt == tuple(expect)
                assert (sum(nl), sum(nm)) == (sum(lam), sum(mu))
            if not y.is_zero():
                assert bidegree(y) == bidegree(x)


def test_quantum_group_commutators():
    # [e_k, f_k] acts as (q^(e_k - e_{k+1}) - q^(e_{k+1} - e_k)) / (q - q^-1)
    denom = qp(1) - qp(-1)
    rng = random.Random(23)
    for rank in (2, 3):
        for k in range(1, rank):
            hplus = [0] * rank
            hplus[k - 1], hplus[k] = 1, -1
            hminus = [-x for x in hplus]
            for _ in range(8):
                a = random_element(rng, rank)
                lhs = act_e(k, act_f(k, a)) - act_f(k, act_e(k, a))
                rhs = (act_qh(hplus, a) - act_qh(hminus, a)) * denom.inverse()
                assert lhs == rhs
    # distant ladder operators commute
    for _ in range(8):
        a = random_element(rng, 3)
        assert act_e(1, act_f(2, a)) == act_f(2, act_e(1, a))


@pytest.mark.parametrize("n", [2, 3])
def test_central_ladder_is_invariant(n):
    assert is_invariant(q_element(n, n), n)
    assert is_invariant(q_element(n, n) ** 2, n)
    if n > 1:
        assert not is_invariant(z_gen(1, n), n)


def test_full_invariants_example():
    basis = invariant_subspace(1, 1, 2, 2)
    assert len(basis) == 1
    scale = next(iter(basis[0].terms.values()))
    assert basis[0] == scale * q_element(2, 2)


def test_corank_one_invariants_example():
    basis = invariant_subspace(1, 1, 3, 2)
    assert len(basis) == 2
    for b in basis:
        assert is_invariant(b, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_full_invariant_dimensions(n):
    for l in range(3):
        for m in range(3):
            basis = invariant_subspace(l, m, n, n)
            if l != m:
                assert basis == []
            else:
                assert len(basis) == 1
                # spanned by Q_n^l
                target = q_element(n, n) ** l
                keys = sorted(set(basis[0].terms) | set(target.terms))
                mat = [[basis[0].terms.get(k, ZERO)] for k in keys]
                rhs = [target.terms.get(k, ZERO) for k in keys]
                assert solve_linear(mat, rhs).consistent


@pytest.mark.parametrize("n", [2, 3])
def test_corank_one_invariant_structure(n):
    for l in range(3):
        for m in range(3):
            basis = invariant_subspace(l, m, n, n - 1) if n > 1 else []
            if n == 1:
                continue
            assert len(basis) == min(l, m) + 1
            spanners = [
                z_gen(n, n) ** (l - j) * w_gen(n, n) ** (m - j) * q_element(n, n) ** j
                for j in range(min(l, m) + 1)
            ]
            for s in spanners:
                assert is_invariant(s, n - 1)
            keys = sorted({k for s in spanners for k in s.terms})
            mat = [[s.terms.get(k, ZERO) for s in spanners] for k in keys]
            sol = solve_linear(mat, [ZERO] * len(keys))
            assert sol.nullspace == []  # spanners independent, count matches


def test_corank_two_invariant_count():
    # rank-1 invariants in Z_3: only weight conditions apply
    for l in range(3):
        for m in range(3):
            expected = sum(
                1
                for j in range(min(l, m) + 1)
                for r in range(l - j + 1)
                for s in range(m - j + 1)
            )
            assert len(invariant_subspace(l, m, 3, 1)) == expected
