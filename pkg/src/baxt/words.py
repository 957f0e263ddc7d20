"""Words over the ranked alphabet {1..n}, words over an involution alphabet,
star-closed terms, and the combinatorial word statistics everything else uses.

Two kinds of words live here.  An ``AWord`` is a word over the finite ordered
alphabet 1 < 2 < ... < n and is the raw input to the monoid machinery.  An
``IWord`` is a word over a countable set of variables x, y, ... together with
their starred partners x*, y*, ...; identities are pairs of these.  Terms add
a formal star and concatenation on top, and ``flatten`` pushes every star down
to the letters using (t*)* = t and (st)* = t* s*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


class ParseError(ValueError):
    """Malformed textual input (unbalanced parens, bad token, ...)."""


class RangeError(ValueError):
    """A letter falls outside the alphabet 1..n."""


class PivotAbsentError(ValueError):
    """occ_before / occ_after queried with a pivot that does not occur."""


# ---------------------------------------------------------------------------
# Words over A_n
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AWord:
    """A word over {1, ..., rank}; the empty word is allowed."""

    symbols: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise RangeError(f"rank must be >= 1, got {self.rank}")
        for a in self.symbols:
            if not 1 <= a <= self.rank:
                raise RangeError(f"letter {a} outside 1..{self.rank}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        if self.rank <= 9:
            return "".join(str(a) for a in self.symbols)
        return ",".join(str(a) for a in self.symbols)

    def concat(self, other: "AWord") -> "AWord":
        if other.rank != self.rank:
            raise RangeError("cannot concatenate words of different ranks")
        return AWord(self.symbols + other.symbols, self.rank)


def aword(symbols, n: int) -> AWord:
    return AWord(tuple(symbols), n)


def parse_aword(text: str, n: int) -> AWord:
    """Parse ``"36131"`` (digit form, n <= 9) or ``"3,6,1"`` / ``"3 6 1"``.

    Empty or all-whitespace input is the empty word.
    """
    text = text.strip()
    if not text:
        return AWord((), n)
    if "," in text or any(c.isspace() for c in text):
        tokens = text.replace(",", " ").split()
    elif text.isdigit():
        if n > 9:
            raise ParseError("digit form is only unambiguous for rank <= 9; use commas")
        tokens = list(text)
    else:
        raise ParseError(f"cannot parse word {text!r}")
    symbols = []
    for pos, tok in enumerate(tokens):
        try:
            a = int(tok)
        except ValueError:
            raise ParseError(f"bad letter token {tok!r} at position {pos}") from None
        if not 1 <= a <= n:
            raise RangeError(f"letter {a} at position {pos} outside 1..{n}")
        symbols.append(a)
    return AWord(tuple(symbols), n)


# ---------------------------------------------------------------------------
# Involution variables and words
# ---------------------------------------------------------------------------

class IVar(NamedTuple):
    """A variable x or its starred partner x*."""

    base: str
    starred: bool = False

    def star(self) -> "IVar":
        return IVar(self.base, not self.starred)

    def bare(self) -> "IVar":
        return IVar(self.base, False)

    def __str__(self) -> str:
        return self.base + ("*" if self.starred else "")


#: An IWord is just a tuple of IVars; the empty tuple is the empty word.
IWord = tuple  # tuple[IVar, ...]

EMPTY: IWord = ()


def v(name: str) -> IVar:
    """Shorthand: ``v("x*")`` is the starred partner of ``v("x")``."""
    if name.endswith("*"):
        return IVar(name[:-1], True)
    return IVar(name, False)


def iword(text: str) -> IWord:
    """Build an IWord from whitespace-separated tokens, e.g. ``"x y* z"``."""
    return tuple(v(tok) for tok in text.split())


def format_iword(u: IWord) -> str:
    return " ".join(str(x) for x in u)


def content(u: IWord) -> frozenset:
    """The set of (star-sensitive) letters occurring in u."""
    return frozenset(u)


def bar(u: IWord) -> IWord:
    """Strip every star flag."""
    return tuple(x.bare() for x in u)


def occ(x: IVar, u: IWord) -> int:
    """Number of occurrences of the exact letter x (x and x* count separately)."""
    return u.count(x)


def bases(u: IWord) -> frozenset:
    return frozenset(x.base for x in u)


def restrict(u: IWord, base_names) -> IWord:
    """Subsequence of u keeping letters whose base lies in ``base_names``.

    Both the plain and the starred letter of each retained base survive; the
    usual two-letter restriction u[x, y] is restrict(u, {x.base, y.base}).
    """
    keep = set(base_names)
    return tuple(x for x in u if x.base in keep)


def occ_before(y: IVar, x: IVar, u: IWord) -> int:
    """Occurrences of x strictly before the first occurrence of the pivot y."""
    try:
        p = u.index(y)
    except ValueError:
        raise PivotAbsentError(f"pivot {y} does not occur") from None
    return u[:p].count(x)


def occ_after(y: IVar, x: IVar, u: IWord) -> int:
    """Occurrences of x strictly after the last occurrence of the pivot y."""
    if y not in u:
        raise PivotAbsentError(f"pivot {y} does not occur")
    p = len(u) - 1 - u[::-1].index(y)
    return u[p + 1:].count(x)


def initial_part(u: IWord) -> IWord:
    """Keep, in order, the first occurrence of each base pair: the occurrence
    at which neither the letter nor its star partner has appeared earlier."""
    seen = set()
    out = []
    for x in u:
        if x.base not in seen:
            seen.add(x.base)
            out.append(x)
    return tuple(out)


def final_part(u: IWord) -> IWord:
    """Mirror of initial_part: last occurrence of each base pair."""
    seen = set()
    out = []
    for x in reversed(u):
        if x.base not in seen:
            seen.add(x.base)
            out.append(x)
    return tuple(reversed(out))


def reverse(u: IWord) -> IWord:
    """Letter order reversed, star flags untouched."""
    return u[::-1]


def star_word(u: IWord) -> IWord:
    """The formal involution: reverse the word and toggle every star flag."""
    return tuple(x.star() for x in reversed(u))


# ---------------------------------------------------------------------------
# Terms and flattening
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    var: IVar


@dataclass(frozen=True)
class Concat:
    parts: tuple  # of Terms, length >= 2


@dataclass(frozen=True)
class Star:
    inner: "Term"


Term = Atom | Concat | Star


def flatten(t: Term) -> IWord:
    """Convert a term to its unique word form: stars distribute by reversing
    factor order and toggling letter flags; double stars cancel."""
    out = []

    def walk(node, starred: bool):
        if isinstance(node, Atom):
            out.append(node.var.star() if starred else node.var)
        elif isinstance(node, Star):
            walk(node.inner, not starred)
        else:
            parts = reversed(node.parts) if starred else node.parts
            for p in parts:
                walk(p, starred)

    walk(t, False)
    return tuple(out)


def parse_term(text: str) -> Term:
    """Parse the textual term grammar.

    Juxtaposition is concatenation, postfix ``*`` is star (binds tighter than
    concatenation), parentheses group, identifiers start with a letter or
    underscore.  Whitespace only separates tokens; bare digits are not
    variables.
    """
    tokens = _lex_term(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def parse_concat():
        nonlocal pos
        parts = []
        while True:
            tok = peek()
            if tok is None or tok in (")",):
                break
            if tok == "*":
                raise ParseError("dangling star")
            if tok == "(":
                pos += 1
                inner = parse_concat()
                if peek() != ")":
                    raise ParseError("unbalanced parentheses")
                pos += 1
                node = inner
            else:
                pos += 1
                node = Atom(IVar(tok, False))
            while peek() == "*":
                pos += 1
                node = Star(node)
            parts.append(node)
        if not parts:
            raise ParseError("empty term")
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    term = parse_concat()
    if pos != len(tokens):
        raise ParseError(f"unexpected token {tokens[pos]!r}")
    return term


def _lex_term(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()*":
            tokens.append(c)
            i += 1
        elif c.isalpha() or c == "_":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ParseError(f"bad character {c!r} at position {i}")
    if not tokens:
        raise ParseError("empty term")
    return tokens


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    """A formal equation lhs ~ rhs between involution words."""

    lhs: IWord
    rhs: IWord

    def __str__(self) -> str:
        return f"{format_iword(self.lhs)} ≈ {format_iword(self.rhs)}"

    def reversed(self) -> "Identity":
        return Identity(reverse(self.lhs), reverse(self.rhs))

    def starred(self) -> "Identity":
        return Identity(star_word(self.lhs), star_word(self.rhs))


def ident(lhs_text: str, rhs_text: str) -> Identity:
    return Identity(iword(lhs_text), iword(rhs_text))


def parse_identity(text: str) -> Identity:
    """Parse ``"u ≈ v"`` or ``"u ~= v"``; each side is a term, flattened."""
    for sep in ("≈", "~="):
        if sep in text:
            left, right = text.split(sep, 1)
            return Identity(flatten(parse_term(left)), flatten(parse_term(right)))
    raise ParseError("identity needs a '≈' or '~=' separator")
