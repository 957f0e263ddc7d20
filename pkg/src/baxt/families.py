"""Named identity families.

The rank-2 basis rows all share the shape  p1 h p2 k [xy] s p3 t p4  with the
two sides differing only in the middle xy vs yx; each display row is stored
as its four slot letters.  The rank->=4 basis is the two plain rows of that
shape.  The parametric family p_k ~ q_k (k >= 2) separates rank 3 from the
higher ranks and witnesses that rank 3 has no finite basis.
"""

from __future__ import annotations

from collections import Counter

from .checker import check
from .words import IVar, IWord, Identity, v

# Display rows of the rank-2 basis, grouped as printed: (tag, p1, p2, p3, p4).
_BASIS2_SLOTS = [
    ("e1.1", "x*", "x", "x*", "x"),
    ("e1.2", "x*", "x", "x", "x*"),
    ("e1.3", "x", "x*", "x*", "x"),
    ("e1.4", "x", "x*", "x", "x*"),
    ("e2.1", "x*", "x", "y*", "y"),
    ("e2.2", "x*", "x", "y", "y*"),
    ("e2.3", "x", "x*", "y*", "y"),
    ("e2.4", "x", "x*", "y", "y*"),
    ("e3.1", "x", "y", "x", "y"),
    ("e3.2", "x", "y", "y", "x"),
    ("e4.1", "x", "y", "x*", "y*"),
    ("e4.2", "x", "y", "y*", "x*"),
    ("e5.1", "x*", "y*", "x*", "y*"),
    ("e5.2", "x*", "y*", "y*", "x*"),
    ("e6.1", "x*", "x", "x", "y"),
    ("e6.2", "x*", "x", "y", "x"),
    ("e6.3", "x", "x*", "x", "y"),
    ("e6.4", "x", "x*", "y", "x"),
    ("e7.1", "x*", "x", "x*", "y*"),
    ("e7.2", "x*", "x", "y*", "x*"),
    ("e7.3", "x", "x*", "x*", "y*"),
    ("e7.4", "x", "x*", "y*", "x*"),
]


def _row(p1: str, p2: str, p3: str, p4: str) -> Identity:
    h, k, s, t, x, y = (IVar(c) for c in "hkstxy")

    def frame(mid):
        return (v(p1), h, v(p2), k) + mid + (s, v(p3), t, v(p4))

    return Identity(frame((x, y)), frame((y, x)))


def basis2_rows() -> list[tuple[str, Identity]]:
    """The displayed rank-2 basis rows, tagged by display position."""
    return [(tag, _row(p1, p2, p3, p4)) for tag, p1, p2, p3, p4 in _BASIS2_SLOTS]


def basis2(include_reverses: bool = True) -> list[Identity]:
    """The rank-2 basis: every displayed row, plus (by default) the reverse
    of every row, which the basis statement includes."""
    rows = [ident for _, ident in basis2_rows()]
    if include_reverses:
        rows = rows + [ident.reversed() for ident in rows]
    return rows


def basis2_reverses() -> list[Identity]:
    return [ident.reversed() for _, ident in basis2_rows()]


def basis4() -> list[Identity]:
    """The two plain rows that form a basis for every rank from 4 up."""
    return [_row("x", "y", "x", "y"), _row("x", "y", "y", "x")]


def pk_qk(k: int, pi=None, sigma=None) -> Identity:
    """The pair p_k ~ q_k; optional permutations of 1..2k rearrange the
    middle variable run on either side (identity permutations recover the
    named words)."""
    if k < 2:
        raise ValueError("pk_qk needs k >= 2")
    m = 2 * k
    if pi is None:
        pi = tuple(range(1, m + 1))
    if sigma is None:
        sigma = tuple(range(1, m + 1))
    for perm in (pi, sigma):
        if sorted(perm) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..{m}: {perm}")
    x = IVar("x")
    xs = x.star()
    xi = [IVar(f"x{i}") for i in range(1, m + 1)]
    head = tuple(t.star() for t in xi)
    tail = tuple(xi[i].star() for i in range(0, m, 2)) \
        + tuple(xi[i].star() for i in range(1, m, 2))
    p = head + (x, xs) + (xs,) + tuple(xi[i - 1] for i in pi) + (x,) \
        + (xs, x) + tail
    q = head + (x, xs) + (x,) + tuple(xi[i - 1] for i in sigma) + (xs,) \
        + (xs, x) + tail
    return Identity(p, q)


def _multiset_permutations(pool):
    """Distinct permutations of a multiset, in lexicographic order."""
    pool = sorted(pool)
    n = len(pool)
    counts = Counter(pool)
    keys = sorted(counts)
    acc: list = []

    def rec():
        if len(acc) == n:
            yield tuple(acc)
            return
        for kx in keys:
            if counts[kx]:
                counts[kx] -= 1
                acc.append(kx)
                yield from rec()
                acc.pop()
                counts[kx] += 1

    yield from rec()


def isoterm_search(u: IWord, n: int, max_len: int = 10) -> list[IWord]:
    """All rearrangements v != u of u's letters the rank-n checker accepts as
    u ~ v.  An empty result certifies u is an isoterm: every identity of the
    monoid is balanced, so only rearrangements could ever pair with u."""
    if len(u) > max_len:
        raise ValueError(f"word of length {len(u)} exceeds the bound {max_len}")
    out = []
    for cand in _multiset_permutations(u):
        if cand != u and check(Identity(u, cand), n).verdict:
            out.append(cand)
    return out
