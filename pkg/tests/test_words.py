import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import st_matrices, words
from stid.matrix import mat_mul
from stid.semiring import real, trop
from stid.verifier import random_matrix
from stid.words import (
    Identity,
    TrivialPairError,
    Word,
    WordParseError,
    compose_identity,
    content,
    evaluate,
    format_identity,
    parse_identity,
    parse_word,
    substitute,
)


def test_parse_word_examples():
    assert parse_word("abba") == Word("abba")
    assert list(parse_word("ab.ba")) == ["a", "b", "b", "a"]
    assert parse_word(" a b\t") == Word("ab")
    with pytest.raises(WordParseError, match="empty"):
        parse_word("")
    with pytest.raises(WordParseError) as exc:
        parse_word("abxa")
    assert exc.value.col == 3


def test_content_examples():
    assert content(Word("abba")) == (2, 2)
    assert content(Word("a")) == (1, 0)
    assert content(Word("bbb")) == (0, 3)


def test_evaluate_examples():
    assert evaluate(Word("ab"), trop(1), trop(2), lambda x, y: x * y) == trop(3)
    assert evaluate(Word("a"), real(7), real(1), lambda x, y: x * y) == real(7)
    assert evaluate(Word("abba"), "s", "s", lambda x, y: x + y) == "ssss"
    # left fold order is visible with a non-commutative product
    assert evaluate(Word("aab"), "x", "y", lambda p, q: f"({p}{q})") == "((xx)y)"


def test_substitute_examples():
    ab, ba = Word("ab"), Word("ba")
    assert substitute(ab, ab, ba) == Word("abba")
    assert substitute(ba, ab, ba) == Word("baab")
    assert substitute(Word("a"), Word("bab"), ba) == Word("bab")


def test_compose_examples():
    comm = Identity(Word("ab"), Word("ba"))
    assert compose_identity(comm, comm) == Identity(Word("abba"), Word("baab"))
    with pytest.raises(TrivialPairError) as exc:
        compose_identity(comm, Identity(Word("a"), Word("a")))
    assert exc.value.word == Word("aa")
    outer = Identity(Word("aab"), Word("aba"))
    assert compose_identity(outer, comm) == Identity(Word("ababba"), Word("abbaab"))


@given(words, words, words)
def test_substitution_length(w, u1, v1):
    ca, cb = content(w)
    assert len(substitute(w, u1, v1)) == ca * len(u1) + cb * len(v1)


@given(words, words, words, st_matrices(2), st_matrices(2))
def test_substitution_evaluation_compatibility(w, u1, v1, A, B):
    lhs = evaluate(substitute(w, u1, v1), A, B, mat_mul)
    rhs = evaluate(w, evaluate(u1, A, B, mat_mul), evaluate(v1, A, B, mat_mul), mat_mul)
    assert lhs == rhs


def test_substitution_evaluation_compatibility_n3():
    rng = random.Random(5)
    for _ in range(30):
        w, u1, v1 = (Word("".join(rng.choice("ab") for _ in range(rng.randint(1, 4)))) for _ in range(3))
        A, B = random_matrix(rng, 3), random_matrix(rng, 3)
        lhs = evaluate(substitute(w, u1, v1), A, B, mat_mul)
        rhs = evaluate(w, evaluate(u1, A, B, mat_mul), evaluate(v1, A, B, mat_mul), mat_mul)
        assert lhs == rhs


def test_identity_file_round_trip():
    ident = Identity(Word("abba"), Word("baab"))
    text = format_identity(ident, ["made by hand", "second line"])
    assert text == "# made by hand\n# second line\nu: abba\nv: baab\n"
    assert parse_identity(text) == ident
    assert parse_identity("u: ab.ba\n\n# c\nv:  ba ab\n") == ident
    assert ident.length == 4 and not ident.trivial
    assert Identity(Word("ab"), Word("ab")).trivial
    assert Identity(Word("aab"), Word("b")).swapped_letters() == Identity(Word("bba"), Word("a"))


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("u: ab\nv: bxa\n", 2, 5),
        ("u: ab\nw: ba\n", 2, 1),
        ("u: ab\n", None, None),
        ("u: ab\nu: ba\n", 2, 1),
        ("  ab\nv: ba\n", 1, 3),
        ("u: \nv: ba\n", 1, None),
    ],
)
def test_identity_file_errors(text, line, col):
    with pytest.raises(WordParseError) as exc:
        parse_identity(text)
    assert exc.value.line == line
    assert exc.value.col == col


@given(st.text("ab", min_size=1, max_size=5), st.text("ab", min_size=1, max_size=5))
def test_identity_text_round_trip(u, v):
    ident = Identity(Word(u), Word(v))
    assert parse_identity(format_identity(ident)) == ident
