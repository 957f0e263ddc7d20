import pytest
from hypothesis import given, strategies as st

from baxt.words import (AWord, Atom, Concat, Identity, IVar, ParseError,
                        PivotAbsentError, RangeError, Star, bar, content,
                        flatten, format_iword, final_part, initial_part,
                        iword, occ, occ_after, occ_before, parse_aword,
                        parse_identity, parse_term, restrict, reverse,
                        star_word, v)

ivars = st.builds(IVar, st.sampled_from("wxyz"), st.booleans())
iwords = st.lists(ivars, max_size=12).map(tuple)

# running example word: x* z x y* x y z z x
U = iword("x* z x y* x y z z x")


def test_content_and_occ():
    assert content(U) == frozenset(iword("x y z x* y*"))
    assert occ(v("x"), U) == 3
    assert occ(v("x*"), U) == 1
    assert occ(v("y"), U) == occ(v("y*"), U) == 1


def test_bar():
    assert bar(U) == iword("x z x y x y z z x")


def test_restrict():
    assert restrict(U, {"x"}) == iword("x* x x x")
    assert restrict(U, {"x", "y"}) == iword("x* x y* x y x")
    assert restrict(U, set()) == ()


def test_occ_before_after():
    assert occ_before(v("y*"), v("x"), U) == 1
    assert occ_after(v("y*"), v("x"), U) == 2
    assert occ_before(v("x"), v("x"), U) == 0
    with pytest.raises(PivotAbsentError):
        occ_before(v("q"), v("x"), U)
    with pytest.raises(PivotAbsentError):
        occ_after(v("q*"), v("x"), U)


def test_initial_final_part():
    assert initial_part(U) == iword("x* z y*")
    assert final_part(U) == iword("y z x")
    assert initial_part(()) == ()


def test_reverse_example():
    u = iword("x x x x x z y* z* z* z* x*")
    assert reverse(u) == iword("x* z* z* z* y* z x x x x x")
    assert reverse(()) == ()
    assert reverse(iword("x")) == iword("x")


def test_star_word():
    assert star_word(iword("x y* z")) == iword("z* y x*")
    assert star_word(()) == ()
    assert star_word(iword("x")) == iword("x*")


@given(iwords)
def test_star_word_involution(u):
    assert star_word(star_word(u)) == u


@given(iwords, iwords)
def test_star_word_antihomomorphism(u, w):
    assert star_word(u + w) == star_word(w) + star_word(u)


@given(iwords)
def test_reverse_involution(u):
    assert reverse(reverse(u)) == u


@given(iwords)
def test_initial_part_counts_bases(u):
    nbases = len({x.base for x in u})
    assert len(initial_part(u)) == nbases
    assert len(final_part(u)) == nbases


@given(iwords, st.sets(st.sampled_from("wxyz")))
def test_restrict_preserves_counts(u, keep):
    r = restrict(u, keep)
    for x in set(u):
        if x.base in keep:
            assert occ(x, r) == occ(x, u)
        else:
            assert occ(x, r) == 0


def test_flatten_nested_example():
    t = parse_term("x(x x(y x*)*)* z y*")
    assert flatten(t) == iword("x y x* x* x* z y*")


def test_flatten_trivial():
    assert flatten(Star(Atom(v("x")))) == iword("x*")
    assert flatten(Star(Star(Atom(v("x"))))) == iword("x")


def test_flatten_idempotent_on_flat_words():
    text = "x y* x* z"
    assert flatten(parse_term(text)) == iword(text)


def test_parse_term_shapes():
    t = parse_term("x*")
    assert t == Star(Atom(v("x")))
    t = parse_term("x(x x(y x*)*)* z y*")
    assert isinstance(t, Concat) and len(t.parts) == 4
    assert t.parts[0] == Atom(v("x"))
    assert isinstance(t.parts[1], Star)


def test_parse_term_identifiers():
    # x2 is one identifier; a bare digit is not a variable
    assert flatten(parse_term("x2")) == (IVar("x2"),)
    with pytest.raises(ParseError):
        parse_term("x 2")


@pytest.mark.parametrize("bad", ["(x", "x)", "", "*x", "()", "x**)"])
def test_parse_term_errors(bad):
    with pytest.raises(ParseError):
        parse_term(bad)


def test_parse_aword():
    w = parse_aword("36131512665", 6)
    assert w.symbols == (3, 6, 1, 3, 1, 5, 1, 2, 6, 6, 5)
    assert parse_aword("", 3) == AWord((), 3)
    assert parse_aword("3, 6, 1", 6).symbols == (3, 6, 1)
    assert parse_aword("10 2", 12).symbols == (10, 2)


def test_parse_aword_errors():
    with pytest.raises(RangeError):
        parse_aword("4", 3)
    with pytest.raises(ParseError):
        parse_aword("1a2", 3)
    with pytest.raises(ParseError):
        parse_aword("12", 11)  # digit form is ambiguous above rank 9


def test_aword_str():
    assert str(parse_aword("2121", 2)) == "2121"
    assert str(AWord((10, 2), 12)) == "10,2"


def test_parse_identity():
    idn = parse_identity("x y* ≈ y* x")
    assert idn == Identity(iword("x y*"), iword("y* x"))
    idn = parse_identity("x(x*)* ~= x x")
    assert idn == Identity(iword("x x"), iword("x x"))
    with pytest.raises(ParseError):
        parse_identity("x y")


def test_identity_transforms():
    idn = parse_identity("x y ~= y x")
    assert idn.reversed() == parse_identity("y x ~= x y")
    assert idn.starred() == parse_identity("y* x* ~= x* y*")


def test_format_iword_roundtrip():
    assert iword(format_iword(U)) == U
