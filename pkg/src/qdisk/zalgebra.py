"""Normal-form arithmetic in the twisted coordinate *-algebra of quantum n-space.

The algebra Z_n has generators z_1..z_n and adjoints w_i = z_i*, subject to

    z_i z_j = q z_j z_i             (i < j)
    w_j w_i = q w_i w_j             (i < j)
    w_i z_j = q z_j w_i             (i != j)
    w_i z_i = z_i w_i + (1 - q^2) * sum_{k < i} z_k w_k

Every element has a unique expansion over the ordered monomial basis

    z^lam w^mu = z_1^lam_1 .. z_n^lam_n  w_n^mu_n .. w_1^mu_1

(z factors ascending, w factors descending by index).  Products are
computed by rewriting words into this basis; the rewriting terminates
because each rule either lowers the number of w-before-z inversions or
keeps it while lowering an index-inversion count, and it is confluent
(checked in the test suite by racing independent reduction strategies).

The production multiplication routine folds one letter at a time into an
already-normal prefix, memoizing the expansion of w^mu z_j; this is a
fast path behind the same contract as single-step rewriting.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .qfield import ONE, QRat, ZERO, int_from_json, int_to_json

# a letter is ("z", i) or ("w", i) with 1 <= i <= rank; a word is a tuple of letters
Letter = tuple
Word = tuple

# a monomial key is (lam, mu), two exponent tuples of length rank
Key = tuple


def _check_rank(rank: int) -> None:
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")


def _check_index(i: int, rank: int) -> None:
    if not 1 <= i <= rank:
        raise ValueError(f"generator index {i} out of range for rank {rank}")


# ----------------------------------------------------------------------
# memoized structure constants
#
# _pull_through(rank, mu, j): normal form of w^mu z_j
# _wz(rank, mu, lam):         normal form of w^mu z^lam
# _mono_mul(rank, k1, k2):    normal form of (z^lam1 w^mu1)(z^lam2 w^mu2)
#
# all return tuples of (key, coeff) pairs.

_PULL_CACHE: dict = {}
_WZ_CACHE: dict = {}
_MONO_CACHE: dict = {}


def _z_merge_exp(left: Sequence[int], right: Sequence[int]) -> int:
    """q-exponent from commuting z^right leftwards into z^left (result z^(left+right))."""
    total = 0
    for i, ri in enumerate(right):
        if ri:
            for j in range(i + 1, len(left)):
                if left[j]:
                    total += left[j] * ri
    return total


def _w_merge_exp(left: Sequence[int], right: Sequence[int]) -> int:
    """q-exponent from merging the w-blocks w^left w^right into w^(left+right)."""
    total = 0
    for i, li in enumerate(left):
        if li:
            for j in range(i + 1, len(right)):
                if right[j]:
                    total += li * right[j]
    return total


def _pull_through(rank: int, mu: tuple, j: int):
    cached = _PULL_CACHE.get((rank, mu, j))
    if cached is not None:
        return cached
    j0 = j - 1
    if not any(mu):
        lam = tuple(1 if i == j0 else 0 for i in range(rank))
        result = (((lam, mu), ONE),)
        _PULL_CACHE[(rank, mu, j)] = result
        return result
    i0 = next(i for i in range(rank) if mu[i])  # rightmost letter of the w block
    mu_rest = tuple(m - 1 if i == i0 else m for i, m in enumerate(mu))
    acc: dict = {}
    if i0 != j0:
        for (lam, nu), c in _pull_through(rank, mu_rest, j):
            e = -sum(nu[k] for k in range(i0))
            key = (lam, tuple(v + 1 if i == i0 else v for i, v in enumerate(nu)))
            _accum(acc, key, c * QRat.q_power(1 + e))
    else:
        one_minus_q2 = ONE - QRat.q_power(2)
        for t in range(i0 + 1):
            factor = ONE if t == i0 else one_minus_q2
            for (lam, nu), c in _pull_through(rank, mu_rest, t + 1):
                e = -sum(nu[k] for k in range(t))
                key = (lam, tuple(v + 1 if i == t else v for i, v in enumerate(nu)))
                _accum(acc, key, factor * c * QRat.q_power(e))
    result = tuple((k, v) for k, v in acc.items() if v)
    _PULL_CACHE[(rank, mu, j)] = result
    return result


def _wz(rank: int, mu: tuple, lam: tuple):
    cached = _WZ_CACHE.get((rank, mu, lam))
    if cached is not None:
        return cached
    if not any(lam):
        result = (((lam, mu), ONE),)
        _WZ_CACHE[(rank, mu, lam)] = result
        return result
    j0 = next(i for i in range(rank) if lam[i])
    rest = tuple(v - 1 if i == j0 else v for i, v in enumerate(lam))
    acc: dict = {}
    for (a, b), c in _pull_through(rank, mu, j0 + 1):
        for (a2, b2), c2 in _wz(rank, b, rest):
            e = _z_merge_exp(a, a2)
            key = (tuple(x + y for x, y in zip(a, a2)), b2)
            _accum(acc, key, c * c2 * QRat.q_power(-e))
    result = tuple((k, v) for k, v in acc.items() if v)
    _WZ_CACHE[(rank, mu, lam)] = result
    return result


def _mono_mul(rank: int, k1: Key, k2: Key):
    cached = _MONO_CACHE.get((rank, k1, k2))
    if cached is not None:
        return cached
    (l1, m1), (l2, m2) = k1, k2
    acc: dict = {}
    for (a, b), c in _wz(rank, m1, l2):
        e = _z_merge_exp(l1, a) + _w_merge_exp(b, m2)
        key = (tuple(x + y for x, y in zip(l1, a)),
               tuple(x + y for x, y in zip(b, m2)))
        _accum(acc, key, c * QRat.q_power(-e))
    result = tuple((k, v) for k, v in acc.items() if v)
    _MONO_CACHE[(rank, k1, k2)] = result
    return result


def _accum(acc: dict, key, coeff) -> None:
    prev = acc.get(key)
    acc[key] = coeff if prev is None else prev + coeff


# ----------------------------------------------------------------------
# elements


def _term_order_key(key: Key):
    """Total order on basis monomials: graded, then lexicographic in the
    sequence (lam_n .. lam_1, mu_1 .. mu_n)."""
    lam, mu = key
    return (sum(lam) + sum(mu),) + tuple(reversed(lam)) + tuple(mu)


class ZElement:
    """A finite Q(q)-combination of ordered basis monomials of fixed rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict | None = None):
        _check_rank(rank)
        self.rank = rank
        self.terms: dict = {}
        if terms:
            for key, coeff in terms.items():
                if not isinstance(coeff, QRat):
                    coeff = QRat.from_int(coeff)
                if coeff:
                    lam, mu = key
                    self.terms[(tuple(lam), tuple(mu))] = coeff

    # -- constructors

    @staticmethod
    def zero(rank: int) -> "ZElement":
        return ZElement(rank)

    @staticmethod
    def one(rank: int) -> "ZElement":
        return ZElement.scalar(ONE, rank)

    @staticmethod
    def scalar(c, rank: int) -> "ZElement":
        zerov = (0,) * rank
        return ZElement(rank, {(zerov, zerov): c})

    def one_like(self) -> "ZElement":
        return ZElement.one(self.rank)

    @staticmethod
    def monomial(rank: int, lam: Sequence[int], mu: Sequence[int], coeff=ONE) -> "ZElement":
        lam, mu = tuple(lam), tuple(mu)
        if len(lam) != rank or len(mu) != rank:
            raise ValueError("exponent vectors must have length equal to the rank")
        if any(e < 0 for e in lam + mu):
            raise ValueError("exponents must be nonnegative")
        return ZElement(rank, {(lam, mu): coeff})

    # -- structure queries

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _term_order_key(kv[0]), reverse=True)

    def coefficient(self, lam: Sequence[int], mu: Sequence[int]) -> QRat:
        return self.terms.get((tuple(lam), tuple(mu)), ZERO)

    # -- ring operations

    def _require_same_rank(self, other: "ZElement") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, (int, QRat)):
            other = ZElement.scalar(other, self.rank)
        if not isinstance(other, ZElement):
            return NotImplemented
        self._require_same_rank(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accum(out, key, c)
        return ZElement(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return ZElement(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QRat)):
            other = ZElement.scalar(other, self.rank)
        if not isinstance(other, ZElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QRat)):
            if not isinstance(other, QRat):
                other = QRat.from_int(other)
            if not other:
                return ZElement.zero(self.rank)
            return ZElement(self.rank, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, ZElement):
            return NotImplemented
        self._require_same_rank(other)
        out: dict = {}
        rank = self.rank
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for key, sc in _mono_mul(rank, k1, k2):
                    _accum(out, key, c * sc)
        return ZElement(rank, out)

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.__mul__(other)  # coefficients are central
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers take nonnegative integer exponents")
        acc = ZElement.one(self.rank)
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, QRat)):
            other = ZElement.scalar(other, self.rank)
        if not isinstance(other, ZElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lam, mu), c in self.sorted_terms():
            mono = _mono_str(lam, mu)
            parts.append(f"({c}) {mono}" if mono != "1" else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"ZElement(rank={self.rank}, terms={len(self.terms)})"

    # -- serialization

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"lambda": list(lam), "mu": list(mu), "coeff": c.to_json()}
                for (lam, mu), c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "ZElement":
        rank = int_from_json(obj["rank"])
        terms = {}
        for t in obj["terms"]:
            key = (tuple(int_from_json(x) for x in t["lambda"]),
                   tuple(int_from_json(x) for x in t["mu"]))
            _accum(terms, key, QRat.from_json(t["coeff"]))
        return ZElement(rank, terms)


def _mono_str(lam, mu) -> str:
    parts = []
    for i, e in enumerate(lam):
        if e:
            parts.append(f"z[{i + 1}]" + (f"^{e}" if e > 1 else ""))
    for i in range(len(mu) - 1, -1, -1):
        if mu[i]:
            parts.append(f"w[{i + 1}]" + (f"^{mu[i]}" if mu[i] > 1 else ""))
    return "*".join(parts) if parts else "1"


# ----------------------------------------------------------------------
# generators and named elements


def z_gen(i: int, rank: int) -> ZElement:
    _check_rank(rank)
    _check_index(i, rank)
    lam = tuple(1 if k == i - 1 else 0 for k in range(rank))
    return ZElement.monomial(rank, lam, (0,) * rank)


def w_gen(i: int, rank: int) -> ZElement:
    _check_rank(rank)
    _check_index(i, rank)
    mu = tuple(1 if k == i - 1 else 0 for k in range(rank))
    return ZElement.monomial(rank, (0,) * rank, mu)


def q_element(i: int, rank: int) -> ZElement:
    """Q_i = sum_{k <= i} z_k w_k; Q_rank is central."""
    _check_rank(rank)
    _check_index(i, rank)
    terms = {}
    for k in range(i):
        key = (tuple(1 if t == k else 0 for t in range(rank)),) * 2
        terms[key] = ONE
    return ZElement(rank, terms)


def mul(a: ZElement, b: ZElement) -> ZElement:
    return a * b


def star(a: ZElement) -> ZElement:
    """The *-involution: anti-linear anti-homomorphism with z_i* = w_i.

    On basis monomials it swaps the exponent vectors, (z^lam w^mu)* =
    z^mu w^lam, with no q-power; coefficients are fixed (they are their
    own conjugates in Q(q))."""
    return ZElement(a.rank, {(mu, lam): c for (lam, mu), c in a.terms.items()})


ANY_BIDEGREE = "any"


def bidegree(a: ZElement):
    """(l, m) if a is bihomogeneous, the string "any" for zero, else None."""
    if not a.terms:
        return ANY_BIDEGREE
    degs = {(sum(lam), sum(mu)) for lam, mu in a.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def embed(a: ZElement, n: int) -> ZElement:
    """Unital *-embedding of Z_s into Z_n (s <= n), z_i -> z_i."""
    s = a.rank
    if n < s:
        raise ValueError(f"cannot embed rank {s} into smaller rank {n}")
    pad = (0,) * (n - s)
    return ZElement(n, {(lam + pad, mu + pad): c for (lam, mu), c in a.terms.items()})


def restrict(a: ZElement, s: int) -> ZElement:
    """Surjective *-homomorphism Z_n -> Z_s sending z_i -> 0 for i <= n - s
    and z_i -> z_{i-n+s} for i > n - s."""
    n = a.rank
    if not 1 <= s <= n:
        raise ValueError(f"restriction target rank {s} out of range for rank {n}")
    cut = n - s
    out: dict = {}
    for (lam, mu), c in a.terms.items():
        if any(lam[:cut]) or any(mu[:cut]):
            continue
        _accum(out, (lam[cut:], mu[cut:]), c)
    return ZElement(s, out)


def counit(a: ZElement) -> QRat:
    """Algebra character sending z_n -> 1 and z_i -> 0 for i < n."""
    total = ZERO
    n = a.rank
    for (lam, mu), c in a.terms.items():
        if not any(lam[: n - 1]) and not any(mu[: n - 1]):
            total = total + c
    return total


def dim_z(l: int, m: int, n: int) -> int:
    """Dimension of the bidegree-(l, m) slice of Z_n."""
    return math.comb(l + n - 1, n - 1) * math.comb(m + n - 1, n - 1)


def dim_h(l: int, m: int, n: int) -> int:
    """Dimension of the bidegree-(l, m) slice of the quotient sphere algebra."""
    num = (l + m + n - 1) * math.factorial(l + n - 2) * math.factorial(m + n - 2)
    den = math.factorial(l) * math.factorial(m) * math.factorial(n - 1) * math.factorial(n - 2)
    return num // den


# ----------------------------------------------------------------------
# word rewriting


def word_key(word: Word, rank: int) -> Key:
    """Exponent key of a word already in normal order."""
    lam = [0] * rank
    mu = [0] * rank
    for kind, i in word:
        if kind == "z":
            lam[i - 1] += 1
        else:
            mu[i - 1] += 1
    return tuple(lam), tuple(mu)


def _reducible_positions(word: Word) -> list:
    out = []
    for p in range(len(word) - 1):
        (k1, i1), (k2, i2) = word[p], word[p + 1]
        if k1 == "z" and k2 == "z" and i1 > i2:
            out.append(p)
        elif k1 == "w" and k2 == "w" and i1 < i2:
            out.append(p)
        elif k1 == "w" and k2 == "z":
            out.append(p)
    return out


def _apply_rule(word: Word, p: int):
    """One rewriting step at position p; returns [(coeff factor, new word)]."""
    (k1, i1), (k2, i2) = word[p], word[p + 1]
    head, tail = word[:p], word[p + 2:]
    qinv = QRat.q_power(-1)
    if k1 == "z" and k2 == "z":
        return [(qinv, head + (("z", i2), ("z", i1)) + tail)]
    if k1 == "w" and k2 == "w":
        return [(qinv, head + (("w", i2), ("w", i1)) + tail)]
    if i1 != i2:
        return [(QRat.q_power(1), head + (("z", i2), ("w", i1)) + tail)]
    out = [(ONE, head + (("z", i1), ("w", i1)) + tail)]
    corr = ONE - QRat.q_power(2)
    for k in range(1, i1):
        out.append((corr, head + (("z", k), ("w", k)) + tail))
    return out


def normal_order_strategy(word: Iterable, rank: int, strategy: str = "leftmost") -> ZElement:
    """Reference rewriter: applies one relation per step at the leftmost or
    rightmost reducible position.  Independent of the memoized fast path;
    the two are raced against each other in the confluence tests."""
    _check_rank(rank)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pick = (lambda ps: ps[0]) if strategy == "leftmost" else (lambda ps: ps[-1])
    word = tuple(word)
    for kind, i in word:
        _check_index(i, rank)
        if kind not in ("z", "w"):
            raise ValueError(f"unknown generator kind {kind!r}")
    pending = {word: ONE}
    done: dict = {}
    while pending:
        nxt: dict = {}
        for wd, coeff in pending.items():
            ps = _reducible_positions(wd)
            if not ps:
                _accum(done, word_key(wd, rank), coeff)
                continue
            for factor, wd2 in _apply_rule(wd, pick(ps)):
                _accum(nxt, wd2, coeff * factor)
        pending = {w: c for w, c in nxt.items() if c}
    return ZElement(rank, done)


def normal_order(word: Iterable, rank: int) -> ZElement:
    """Normal form of a product of generators, given as a word of letters
    ("z", i) / ("w", i), folded left to right through the memoized tables."""
    _check_rank(rank)
    zero_vec = (0,) * rank
    acc: dict = {(zero_vec, zero_vec): ONE}
    for kind, i in tuple(word):
        _check_index(i, rank)
        i0 = i - 1
        nxt: dict = {}
        if kind == "z":
            for (a, b), c in acc.items():
                for (a2, b2), sc in _pull_through(rank, b, i):
                    e = _z_merge_exp(a, a2)
                    key = (tuple(x + y for x, y in zip(a, a2)), b2)
                    _accum(nxt, key, c * sc * QRat.q_power(-e))
        elif kind == "w":
            for (a, b), c in acc.items():
                e = -sum(b[k] for k in range(i0))
                key = (a, tuple(v + 1 if t == i0 else v for t, v in enumerate(b)))
                _accum(nxt, key, c * QRat.q_power(e))
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
        acc = {k: v for k, v in nxt.items() if v}
    return ZElement(rank, acc)
