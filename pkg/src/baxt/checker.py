"""Rank-stratified decision procedure for word identities of the Baxter
monoids with involution, plus the plain (star-free) variant.

The primary route is the polynomial-time procedure: compare, between the two
sides and for every restriction to one or two variable bases, the single-
variable prefix/suffix (with the adjacent variable), and the longest prefix/
suffix free of a mixed pair {x, x*} (content and multiplicities, plus the
adjacent variable at rank 3); rank 3 adds directional occurrence-count sums
around first/last occurrences, and rank >= 4 collapses to exact directional
counts for every ordered letter pair.  All statistics are computed from
per-letter position indexes, so a check runs in O(|u| + k^2 log |u|) for k
distinct variables.

A second, independent route (`conditions_baxt2` / `conditions_baxt3`)
evaluates the rank-2/3 pattern conditions literally on materialized
restrictions; the test suite asserts both routes agree.

The pattern conditions are evaluated for ordered role pairs over all letters,
starred included, and also for the two orientations of each mixed base pair
{x, x*}; restrictions to a single base are checked alongside two-base ones.
Without the single-base checks, one-variable identities such as
x x* ~ x* x would be accepted, yet substituting any element with a
non-self-dual image refutes them at every rank.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .words import IVar, IWord, Identity


class PlainModeError(ValueError):
    """A starred letter reached the plain (involution-free) checker."""


# ---------------------------------------------------------------------------
# Segment views
# ---------------------------------------------------------------------------

def pre(u: IWord) -> IWord:
    """Longest prefix over a single letter."""
    if not u:
        raise ValueError("pre of the empty word")
    i = 1
    while i < len(u) and u[i] == u[0]:
        i += 1
    return u[:i]


def suf(u: IWord) -> IWord:
    """Longest suffix over a single letter."""
    if not u:
        raise ValueError("suf of the empty word")
    i = len(u) - 1
    while i > 0 and u[i - 1] == u[-1]:
        i -= 1
    return u[i:]


def pren(u: IWord) -> IWord:
    """Longest prefix containing no mixed pair {x, x*}."""
    seen = set()
    for i, x in enumerate(u):
        if x.star() in seen:
            return u[:i]
        seen.add(x)
    return u


def sufn(u: IWord) -> IWord:
    """Longest suffix containing no mixed pair {x, x*}."""
    seen = set()
    for i in range(len(u) - 1, -1, -1):
        x = u[i]
        if x.star() in seen:
            return u[i + 1:]
        seen.add(x)
    return u


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    rank: int
    mode: str
    violated: Optional[str] = None   # Balanced | I | II | III | IV | V | OccLR
    witness: Optional[dict] = None

    def __bool__(self):
        return self.verdict

    def to_json_obj(self) -> dict:
        return {
            "verdict": "YES" if self.verdict else "NO",
            "n": self.rank,
            "mode": self.mode,
            "violated": self.violated,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def _yes(n, mode="involution"):
    return CheckReport(True, n, mode)


def _no(n, violated, witness, mode="involution"):
    return CheckReport(False, n, mode, violated, witness)


# ---------------------------------------------------------------------------
# Position index
# ---------------------------------------------------------------------------

class _WordIndex:
    __slots__ = ("word", "positions", "first", "last", "base_letters")

    def __init__(self, u: IWord):
        positions: dict[IVar, list[int]] = {}
        for i, x in enumerate(u):
            positions.setdefault(x, []).append(i)
        self.word = u
        self.positions = positions
        self.first = {x: p[0] for x, p in positions.items()}
        self.last = {x: p[-1] for x, p in positions.items()}
        base_letters: dict[str, list[IVar]] = {}
        for x in positions:
            base_letters.setdefault(x.base, []).append(x)
        for group in base_letters.values():
            group.sort()
        self.base_letters = base_letters

    def count_before(self, x: IVar, pos: int) -> int:
        p = self.positions.get(x)
        return bisect_left(p, pos) if p else 0

    def count_after(self, x: IVar, pos: int) -> int:
        p = self.positions.get(x)
        return len(p) - bisect_right(p, pos) if p else 0


def _pre_stat(idx: _WordIndex, letters):
    """(leading letter, run length, following letter) of the restriction."""
    lead = min(letters, key=idx.first.__getitem__)
    m1 = min(idx.first[t] for t in letters if t != lead)
    follower = next(t for t in letters if t != lead and idx.first[t] == m1)
    return lead, idx.count_before(lead, m1), follower


def _suf_stat(idx: _WordIndex, letters):
    tail = max(letters, key=idx.last.__getitem__)
    m1 = max(idx.last[t] for t in letters if t != tail)
    preceder = next(t for t in letters if t != tail and idx.last[t] == m1)
    return tail, idx.count_after(tail, m1), preceder


def _pren_stat(idx: _WordIndex, base_names, letters):
    """Occurrence counts inside the mixed-pair-free prefix of the
    restriction, plus the letter just after it; None when the restriction
    has no mixed pair at all (then balance settles everything)."""
    stop = None
    for b in base_names:
        group = idx.base_letters.get(b)
        if group and len(group) == 2:
            c = max(idx.first[group[0]], idx.first[group[1]])
            if stop is None or c < stop:
                stop = c
    if stop is None:
        return None
    counts = tuple(idx.count_before(t, stop) for t in letters)
    return counts, idx.word[stop]


def _sufn_stat(idx: _WordIndex, base_names, letters):
    start = None
    for b in base_names:
        group = idx.base_letters.get(b)
        if group and len(group) == 2:
            c = min(idx.last[group[0]], idx.last[group[1]])
            if start is None or c > start:
                start = c
    if start is None:
        return None
    counts = tuple(idx.count_after(t, start) for t in letters)
    return counts, idx.word[start]


# ---------------------------------------------------------------------------
# Rank 1 and balance
# ---------------------------------------------------------------------------

def is_balanced(ident: Identity) -> bool:
    """Same content and, letter by letter (star-sensitive), same counts."""
    return Counter(ident.lhs) == Counter(ident.rhs)


def _balance_witness(ident: Identity) -> dict:
    cu, cv = Counter(ident.lhs), Counter(ident.rhs)
    for x in sorted(set(cu) | set(cv)):
        if cu[x] != cv[x]:
            return {"letter": str(x), "lhs": cu[x], "rhs": cv[x]}
    return {}


def check_baxt1(ident: Identity) -> CheckReport:
    """Rank 1 is the free monogenic monoid with trivial star: only the
    star-blind per-base counts matter."""
    cu = Counter(x.bare() for x in ident.lhs)
    cv = Counter(x.bare() for x in ident.rhs)
    if cu == cv:
        return _yes(1)
    bad = next(x for x in sorted(set(cu) | set(cv)) if cu[x] != cv[x])
    return _no(1, "Balanced",
               {"letter": str(bad), "lhs": cu[bad], "rhs": cv[bad]})


# ---------------------------------------------------------------------------
# Ranks 2 and 3: the restriction procedure
# ---------------------------------------------------------------------------

def _base_subsets(iu: _WordIndex):
    names = sorted(iu.base_letters)
    subsets = [(b,) for b in names]
    subsets += [(names[i], names[j])
                for i in range(len(names)) for j in range(i + 1, len(names))]
    subsets.sort()
    return subsets


def _procedure_check(ident: Identity, n: int) -> CheckReport:
    if not is_balanced(ident):
        return _no(n, "Balanced", _balance_witness(ident))
    iu, iv = _WordIndex(ident.lhs), _WordIndex(ident.rhs)
    strict = n >= 3  # rank 3 also pins the variable adjacent to pren/sufn

    def differ(stat_u, stat_v):
        # rank 2 compares the counts only; rank 3 also the adjacent letter
        if stat_u is None or stat_v is None:
            return stat_u is not stat_v
        return stat_u != stat_v if strict else stat_u[0] != stat_v[0]

    def run_tag(stat):
        # a run broken by the star partner is an (I) pattern, else a (II) one
        return "I" if stat[2] == stat[0].star() else "II"

    for B in _base_subsets(iu):
        letters = sorted(t for b in B for t in iu.base_letters.get(b, ()))
        if len(letters) <= 1:
            continue
        pair = [str(b) for b in B]
        pu = _pre_stat(iu, letters)
        if pu != _pre_stat(iv, letters):
            return _no(n, run_tag(pu), {"pair": pair, "side": "left",
                                        "check": "pre"})
        if differ(_pren_stat(iu, B, letters), _pren_stat(iv, B, letters)):
            return _no(n, "III", {"pair": pair, "side": "left", "check": "pren"})
        su = _suf_stat(iu, letters)
        if su != _suf_stat(iv, letters):
            return _no(n, run_tag(su), {"pair": pair, "side": "right",
                                        "check": "suf"})
        if differ(_sufn_stat(iu, B, letters), _sufn_stat(iv, B, letters)):
            return _no(n, "III", {"pair": pair, "side": "right", "check": "sufn"})

    if n == 2:
        return _yes(2)

    # rank 3: directional occurrence sums per (base, pivot letter) ...
    pivots = sorted(iu.positions)
    names = sorted(iu.base_letters)
    for y in pivots:
        fu, fv = iu.first[y], iv.first[y]
        lu, lv = iu.last[y], iv.last[y]
        for b in names:
            if b == y.base:
                continue
            xs = iu.base_letters[b]
            if sum(iu.count_before(x, fu) for x in xs) != \
                    sum(iv.count_before(x, fv) for x in xs):
                return _no(3, "IV", {"pivot": str(y), "base": b, "side": "left"})
            if sum(iu.count_after(x, lu) for x in xs) != \
                    sum(iv.count_after(x, lv) for x in xs):
                return _no(3, "IV", {"pivot": str(y), "base": b, "side": "right"})

    # ... and exact directional counts for pivots whose star partner does not
    # occur on the relevant side of them
    for y in pivots:
        ystar = y.star()
        fu, fv = iu.first[y], iv.first[y]
        lu, lv = iu.last[y], iv.last[y]
        if iu.count_before(ystar, fu) == 0:
            for x in pivots:
                if x.base == y.base:
                    continue
                if iu.count_before(x, fu) != iv.count_before(x, fv):
                    return _no(3, "V", {"pivot": str(y), "letter": str(x),
                                        "side": "left"})
        if iu.count_after(ystar, lu) == 0:
            for x in pivots:
                if x.base == y.base:
                    continue
                if iu.count_after(x, lu) != iv.count_after(x, lv):
                    return _no(3, "V", {"pivot": str(y), "letter": str(x),
                                        "side": "right"})
    return _yes(3)


def check_baxt2(ident: Identity) -> CheckReport:
    return _procedure_check(ident, 2)


def check_baxt3(ident: Identity) -> CheckReport:
    return _procedure_check(ident, 3)


# ---------------------------------------------------------------------------
# Rank >= 4 and the plain variant
# ---------------------------------------------------------------------------

def _occ_lr_check(ident: Identity, n: int, mode: str) -> CheckReport:
    if not is_balanced(ident):
        return _no(n, "Balanced", _balance_witness(ident), mode)
    iu, iv = _WordIndex(ident.lhs), _WordIndex(ident.rhs)
    pivots = sorted(iu.positions)
    for x in pivots:
        fu, fv = iu.first[x], iv.first[x]
        lu, lv = iu.last[x], iv.last[x]
        for y in pivots:
            if y == x:
                continue
            if iu.count_before(y, fu) != iv.count_before(y, fv):
                return _no(n, "OccLR", {"pivot": str(x), "letter": str(y),
                                        "side": "left"}, mode)
            if iu.count_after(y, lu) != iv.count_after(y, lv):
                return _no(n, "OccLR", {"pivot": str(x), "letter": str(y),
                                        "side": "right"}, mode)
    return CheckReport(True, n, mode)


def check_baxt4plus(ident: Identity, n: int = 4) -> CheckReport:
    """Rank >= 4: balanced plus equal directional counts for every ordered
    letter pair; the verdict does not depend on n beyond 4."""
    if n < 4:
        raise ValueError("check_baxt4plus is for rank >= 4")
    return _occ_lr_check(ident, n, "involution")


def check_plain(ident: Identity, n: int = 2) -> CheckReport:
    """Plain monoids of rank >= 2 all satisfy the same identities: balanced
    plus equal directional counts."""
    if any(x.starred for x in ident.lhs + ident.rhs):
        raise PlainModeError("starred letter present; use the involution checker")
    if n < 2:
        r = check_baxt1(ident)
        return CheckReport(r.verdict, 1, "plain", r.violated, r.witness)
    return _occ_lr_check(ident, n, "plain")


def check(ident: Identity, n: int, mode: str = "involution") -> CheckReport:
    """Dispatch on rank (involution mode) or to the plain checker."""
    if mode == "plain":
        return check_plain(ident, n)
    if mode != "involution":
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError("rank must be >= 1")
    if n == 1:
        return check_baxt1(ident)
    if n == 2:
        return check_baxt2(ident)
    if n == 3:
        return check_baxt3(ident)
    return check_baxt4plus(ident, n)


# ---------------------------------------------------------------------------
# Independent route: the pattern conditions, evaluated literally
# ---------------------------------------------------------------------------

def _restriction(u: IWord, b1: str, b2: str) -> IWord:
    return tuple(x for x in u if x.base == b1 or x.base == b2)


def _leading_run_then(r: IWord, run_letter: IVar, next_letter: IVar):
    """Length of the leading run_letter-run when followed by next_letter."""
    i = 0
    while i < len(r) and r[i] == run_letter:
        i += 1
    if i >= 1 and i < len(r) and r[i] == next_letter:
        return i
    return None


def _mixed_prefix_then(r: IWord, allowed: frozenset, next_letter: IVar):
    """Multiset of the maximal prefix over `allowed` when it contains every
    allowed letter and is followed by next_letter; None otherwise."""
    i = 0
    while i < len(r) and r[i] in allowed:
        i += 1
    a = r[:i]
    if set(a) == set(allowed) and i < len(r) and r[i] == next_letter:
        return Counter(a)
    return None


def _mixed_prefix_matches(r: IWord, allowed: frozenset, multiset, nexts) -> bool:
    i = 0
    while i < len(r) and r[i] in allowed:
        i += 1
    return Counter(r[:i]) == multiset and i < len(r) and r[i] in nexts


def _conditions(ident: Identity, n: int) -> bool:
    """Literal evaluation of the rank-2 (n=2) or rank-3 (n=3) conditions."""
    if not is_balanced(ident):
        return False
    u, v = ident.lhs, ident.rhs
    letters = sorted(set(u))
    role_pairs = [(x, y) for x in letters for y in letters if y.base != x.base]
    same_base = [(x, x.star()) for x in letters if x.star() in set(letters)]

    for x, y in role_pairs + same_base:
        ru = _restriction(u, x.base, y.base)
        rv = _restriction(v, x.base, y.base)
        # (I): x^a x* prefix / x* x^a suffix transfer with the same a
        for r, s in ((ru, rv), (ru[::-1], rv[::-1])):
            a = _leading_run_then(r, x, x.star())
            if a is not None and _leading_run_then(s, x, x.star()) != a:
                return False
            # (II): y^a x prefix / x y^a suffix transfer with the same a
            a = _leading_run_then(r, y, x)
            if a is not None and _leading_run_then(s, y, x) != a:
                return False

    for x, y in role_pairs:
        ru = _restriction(u, x.base, y.base)
        rv = _restriction(v, x.base, y.base)
        # (III): starred-prefix block before the first plain letter
        starred = frozenset((x.star(), y.star()))
        nexts = (x,) if n == 3 else (x, y)
        for r, s in ((ru, rv), (ru[::-1], rv[::-1])):
            m = _mixed_prefix_then(r, starred, x)
            if m is not None and not _mixed_prefix_matches(s, starred, m, nexts):
                return False
        if n == 3:
            # (V): mixed base-pair block before the first y
            mixed = frozenset((x, x.star()))
            for r, s in ((ru, rv), (ru[::-1], rv[::-1])):
                m = _mixed_prefix_then(r, mixed, y)
                if m is not None and not _mixed_prefix_matches(s, mixed, m, (y,)):
                    return False

    if n == 3:
        # (IV): directional occurrence sums
        for x, y in role_pairs:
            fu, fv = u.index(y), v.index(y)
            if (u[:fu].count(x) + u[:fu].count(x.star())
                    != v[:fv].count(x) + v[:fv].count(x.star())):
                return False
            lu = len(u) - 1 - u[::-1].index(y)
            lv = len(v) - 1 - v[::-1].index(y)
            if (u[lu:].count(x) + u[lu:].count(x.star())
                    != v[lv:].count(x) + v[lv:].count(x.star())):
                return False
    return True


def conditions_baxt2(ident: Identity) -> bool:
    return _conditions(ident, 2)


def conditions_baxt3(ident: Identity) -> bool:
    return _conditions(ident, 3)
