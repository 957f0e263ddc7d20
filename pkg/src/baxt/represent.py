"""Faithful tropical matrix representations of the rank-n Baxter monoids.

Ranks 1..3 map straight into upper triangular matrices (dims 2, 6, 15) built
from four 2x2 generator blocks.  For rank n >= 4 each index pair (i, j) with
i < j yields a homomorphism into rank-3 pairs, split into four map families
by how i, j sit relative to their order-reversed partners; the tuple of all
of them is a complete invariant, and can be materialized as one block
diagonal matrix of dimension 30 * n(n-1)/2 compatible with skew transposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .monoid import (BaxtElement, RankMismatchError, canonical, rpi, lpi,
                     element_to_json_obj, evaluation, sharp, support)
from .semiring import (Semiring, TROPICAL, UTMatrix, block_diag, gen_J, gen_K,
                       gen_P, gen_Q, identity_matrix, mat_mul, mat_power,
                       scalar)
from .words import AWord


def _check_rank(w: AWord, n: int):
    if w.rank != n:
        raise RankMismatchError(f"expected a rank-{n} word, got rank {w.rank}")


def _generator_images_1(sr: Semiring) -> dict[int, UTMatrix]:
    return {1: mat_mul(gen_P(sr), gen_Q(sr))}


def _generator_images_2(sr: Semiring) -> dict[int, UTMatrix]:
    one = scalar(sr, sr.one)
    s = scalar(sr, sr.s)
    return {
        1: block_diag([s, gen_P(sr), gen_J(sr), one]),
        2: block_diag([one, gen_K(sr), gen_Q(sr), s]),
    }


def _generator_images_3(sr: Semiring) -> dict[int, UTMatrix]:
    one = scalar(sr, sr.one)
    s = scalar(sr, sr.s)
    P, Q, J, K, E2 = gen_P(sr), gen_Q(sr), gen_J(sr), gen_K(sr), identity_matrix(sr, 2)
    return {
        1: block_diag([s, P, P, E2, one, J, E2, J, one]),
        2: block_diag([one, K, K, P, s, Q, J, J, one]),
        3: block_diag([one, K, E2, K, one, E2, Q, Q, s]),
    }


def _fold(images: dict[int, UTMatrix], w: AWord, dim: int, sr: Semiring) -> UTMatrix:
    acc = identity_matrix(sr, dim)
    for a in w.symbols:
        acc = mat_mul(acc, images[a])
    return acc


def phi1(w: AWord, sr: Semiring = TROPICAL) -> UTMatrix:
    _check_rank(w, 1)
    return _fold(_generator_images_1(sr), w, 2, sr)


def phi2(w: AWord, sr: Semiring = TROPICAL) -> UTMatrix:
    _check_rank(w, 2)
    return _fold(_generator_images_2(sr), w, 6, sr)


def phi3(w: AWord, sr: Semiring = TROPICAL) -> UTMatrix:
    _check_rank(w, 3)
    return _fold(_generator_images_3(sr), w, 15, sr)


def generator_images(n: int, sr: Semiring = TROPICAL) -> dict[int, UTMatrix]:
    if n == 1:
        return _generator_images_1(sr)
    if n == 2:
        return _generator_images_2(sr)
    if n == 3:
        return _generator_images_3(sr)
    raise ValueError("generator matrices exist for ranks 1..3 only")


# ---------------------------------------------------------------------------
# Closed-form block evaluators (independent route to the same matrices)
# ---------------------------------------------------------------------------

def _lpi_index(lp, a: int, b: int):
    for (x, y, ell) in lp:
        if x == a and y == b:
            return ell
    return None


def _rpi_index(rp, b: int, a: int):
    for (x, y, r) in rp:
        if x == b and y == a:
            return r
    return None


def phi2_closed(w: AWord, sr: Semiring = TROPICAL) -> UTMatrix:
    """phi2 computed from (ev, lpi, rpi) alone, no letter-by-letter product."""
    _check_rank(w, 2)
    if not w.symbols:
        return identity_matrix(sr, 6)
    ev = evaluation(w)
    supp = support(w)
    lp, rp = lpi(w), rpi(w)
    P, Q, J, K = gen_P(sr), gen_Q(sr), gen_J(sr), gen_K(sr)

    b1 = scalar(sr, sr.power(sr.s, ev[0]) if 1 in supp else sr.one)

    l12 = _lpi_index(lp, 1, 2)
    if supp == {1}:
        b2 = mat_power(P, ev[0])
    elif l12 is None:
        b2 = K
    else:
        b2 = mat_mul(mat_power(P, l12), K)

    r21 = _rpi_index(rp, 2, 1)
    if supp == {2}:
        b3 = mat_power(Q, ev[1])
    elif r21 is None:
        b3 = J
    else:
        b3 = mat_mul(J, mat_power(Q, r21))

    b4 = scalar(sr, sr.power(sr.s, ev[1]) if 2 in supp else sr.one)
    return block_diag([b1, b2, b3, b4])


def phi3_closed(w: AWord, sr: Semiring = TROPICAL) -> UTMatrix:
    """phi3 from the invariant triple; the nine blocks follow the case split
    in the faithfulness proof, first matching case wins."""
    _check_rank(w, 3)
    if not w.symbols:
        return identity_matrix(sr, 15)
    ev = evaluation(w)
    supp = support(w)
    lp, rp = lpi(w), rpi(w)
    P, Q, J, K = gen_P(sr), gen_Q(sr), gen_J(sr), gen_K(sr)
    E2 = identity_matrix(sr, 2)

    def spow(k):
        return scalar(sr, sr.power(sr.s, k))

    def PK(ell):
        return mat_mul(mat_power(P, ell), K)

    def JQ(r):
        return mat_mul(J, mat_power(Q, r))

    l12 = _lpi_index(lp, 1, 2)
    l13 = _lpi_index(lp, 1, 3)
    l23 = _lpi_index(lp, 2, 3)
    r21 = _rpi_index(rp, 2, 1)
    r31 = _rpi_index(rp, 3, 1)
    r32 = _rpi_index(rp, 3, 2)

    b1 = spow(ev[0]) if 1 in supp else scalar(sr, sr.one)

    if supp == {1}:
        b2 = mat_power(P, ev[0])
    elif supp == {1, 2} and l12 is not None:
        b2 = PK(l12)
    elif {1, 3} <= supp and l13 is not None:
        b2 = PK(l13)
    elif supp == {1, 2, 3} and l12 is not None and l23 is not None:
        b2 = PK(l12)
    else:
        b2 = K

    if supp in ({1}, {1, 3}):
        b3 = mat_power(P, ev[0])
    elif supp == {3}:
        b3 = E2
    elif {1, 2} <= supp and l12 is not None:
        b3 = PK(l12)
    else:
        b3 = K

    if supp == {1}:
        b4 = E2
    elif supp in ({2}, {1, 2}):
        b4 = mat_power(P, ev[1])
    elif {2, 3} <= supp and l23 is not None:
        b4 = PK(l23)
    else:
        b4 = K

    b5 = spow(ev[1]) if 2 in supp else scalar(sr, sr.one)

    if supp in ({2}, {2, 3}):
        b6 = mat_power(Q, ev[1])
    elif supp == {3}:
        b6 = E2
    elif {1, 2} <= supp and r21 is not None:
        b6 = JQ(r21)
    else:
        b6 = J

    if supp == {1}:
        b7 = E2
    elif supp in ({3}, {1, 3}):
        b7 = mat_power(Q, ev[2])
    elif {2, 3} <= supp and r32 is not None:
        b7 = JQ(r32)
    else:
        b7 = J

    if supp == {3}:
        b8 = mat_power(Q, ev[2])
    elif {1, 3} <= supp and r31 is not None:
        b8 = JQ(r31)
    elif supp == {2, 3} and r32 is not None:
        b8 = JQ(r32)
    elif supp == {1, 2, 3} and r21 is not None and r32 is not None:
        b8 = JQ(r32)
    else:
        b8 = J

    b9 = spow(ev[2]) if 3 in supp else scalar(sr, sr.one)

    return block_diag([b1, b2, b3, b4, b5, b6, b7, b8, b9])


# ---------------------------------------------------------------------------
# Rank n >= 4: pairs of rank-3 elements, one per index pair (i, j)
# ---------------------------------------------------------------------------

class PairElement(NamedTuple):
    first: BaxtElement
    second: BaxtElement


def pair_sharp(p: PairElement) -> PairElement:
    """(e1, e2)# = (e2#, e1#)."""
    return PairElement(sharp(p.second), sharp(p.first))


def _letter_pair_words(n: int, i: int, j: int) -> dict[int, tuple[tuple, tuple]]:
    """For each letter k of 1..n, the pair of rank-3 words it maps to under
    the (i, j) component map.  The family is selected by the relative order
    of i, j and their complements i# = n+1-i, j# = n+1-j."""
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) at n={n}")
    isharp, jsharp = n + 1 - i, n + 1 - j

    def lam(k):
        if k == i:
            return (1,)
        if k == j:
            return (3,)
        if i < k < j:
            return (3, 1)
        return ()

    def low_map(i1, i2):
        # 1 on i1, 2 on i2, 21 strictly between
        def f(k):
            if k == i1:
                return (1,)
            if k == i2:
                return (2,)
            if i1 < k < i2:
                return (2, 1)
            return ()
        return f

    def high_map(i1, i2):
        # 2 on i1, 3 on i2, 32 strictly between
        def f(k):
            if k == i1:
                return (2,)
            if k == i2:
                return (3,)
            if i1 < k < i2:
                return (3, 2)
            return ()
        return f

    if isharp == j:
        first = second = lam
    elif i < j == jsharp < isharp or jsharp < i == isharp < j:
        if i < j == jsharp < isharp:
            i1, i2, i3 = i, j, isharp
        else:
            i1, i2, i3 = jsharp, i, j
        first, second = low_map(i1, i2), high_map(i2, i3)
    elif i < j < jsharp < isharp or jsharp < isharp < i < j:
        if i < j < jsharp < isharp:
            i1, i2, i3, i4 = i, j, jsharp, isharp
        else:
            i1, i2, i3, i4 = jsharp, isharp, i, j
        first, second = low_map(i1, i2), high_map(i3, i4)
    elif i < jsharp < j < isharp or jsharp < i < isharp < j:
        if i < jsharp < j < isharp:
            i1, i2, i3, i4 = i, jsharp, j, isharp
        else:
            i1, i2, i3, i4 = jsharp, i, isharp, j
        # the low map here spans i1..i3 (i2 falls in its middle range)
        first, second = low_map(i1, i3), high_map(i2, i4)
    else:
        raise AssertionError(f"index pair ({i},{j}) at n={n} matches no case")

    return {k: (first(k), second(k)) for k in range(1, n + 1)}


def phi_ij(w: AWord, i: int, j: int) -> PairElement:
    """The (i, j) component: evaluate the selected letter map over w."""
    if w.rank < 4:
        raise RankMismatchError("component maps are for rank >= 4; use phi1..phi3")
    table = _letter_pair_words(w.rank, i, j)
    first: list[int] = []
    second: list[int] = []
    for a in w.symbols:
        fa, sa = table[a]
        first.extend(fa)
        second.extend(sa)
    return PairElement(canonical(AWord(tuple(first), 3)),
                       canonical(AWord(tuple(second), 3)))


@dataclass(frozen=True)
class TupleElement:
    """Image of a rank-n word: one PairElement per (i, j), 1 <= i < j <= n."""

    rank: int
    coords: tuple  # tuple of ((i, j), PairElement), lexicographic in (i, j)

    def coord(self, i: int, j: int) -> PairElement:
        return dict(self.coords)[(i, j)]


def index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def phi_n(w: AWord) -> TupleElement:
    if w.rank < 4:
        raise RankMismatchError("phi_n needs rank >= 4; use phi1..phi3")
    n = w.rank
    coords = tuple(((i, j), phi_ij(w, i, j)) for (i, j) in index_pairs(n))
    return TupleElement(n, coords)


def tuple_equal(t1: TupleElement, t2: TupleElement) -> bool:
    if t1.rank != t2.rank:
        raise RankMismatchError(f"ranks {t1.rank} and {t2.rank} differ")
    return t1.coords == t2.coords


def tuple_sharp(t: TupleElement) -> TupleElement:
    return TupleElement(t.rank, tuple((ij, pair_sharp(p)) for ij, p in t.coords))


def materialize(t: TupleElement, sr: Semiring = TROPICAL) -> UTMatrix:
    """Flatten the tuple to one matrix: first components in lexicographic
    (i, j) order, then second components in reverse lexicographic order, each
    through the rank-3 representation, assembled block diagonally.

    With this arrangement skew transposition of the matrix matches the tuple
    involution: materialize(t#) == skew_transpose(materialize(t)).
    """
    firsts = [p.first for _, p in t.coords]
    seconds = [p.second for _, p in reversed(t.coords)]
    blocks = [phi3(e.representative, sr) for e in firsts + seconds]
    return block_diag(blocks)


def tuple_to_json_obj(t: TupleElement):
    return {
        "n": t.rank,
        "coords": [
            {"i": i, "j": j,
             "first": element_to_json_obj(p.first),
             "second": element_to_json_obj(p.second)}
            for (i, j), p in t.coords
        ],
    }
