import pytest
from hypothesis import given, strategies as st

from geothue.errors import AlphabetError
from geothue.words import EMPTY, Alphabet, lenlex_key


def test_alphabet_basics():
    ab = Alphabet(["a", "b", "c"])
    assert len(ab) == 3
    assert ab.id("b") == 1
    assert ab.name(2) == "c"
    assert "a" in ab and "z" not in ab


def test_duplicate_names_rejected():
    with pytest.raises(AlphabetError):
        Alphabet(["a", "a"])


def test_empty_alphabet_rejected():
    with pytest.raises(AlphabetError):
        Alphabet([])


def test_word_parsing_tokens_and_compact():
    ab = Alphabet(["a", "b"])
    assert ab.word("a b a") == (0, 1, 0)
    assert ab.word("aba") == (0, 1, 0)
    assert ab.word(".") == EMPTY
    assert ab.word("") == EMPTY


def test_word_parsing_multichar_names():
    ab = Alphabet(["12", "13", "t"])
    assert ab.word("12 t 13") == (0, 2, 1)
    with pytest.raises(AlphabetError):
        ab.word("14")


def test_format_roundtrip():
    ab = Alphabet(["a", "b"])
    assert ab.format((0, 1, 1)) == "a b b"
    assert ab.format(EMPTY) == "."
    assert ab.word(ab.format((1, 0))) == (1, 0)


def test_words_upto_is_lenlex_sorted_and_complete():
    ab = Alphabet(["a", "b"])
    ws = list(ab.words_upto(3))
    assert len(ws) == 1 + 2 + 4 + 8
    assert ws == sorted(ws, key=lenlex_key)
    assert len(set(ws)) == len(ws)


def test_extend_keeps_prefix_ids():
    ab = Alphabet(["a", "b"])
    bigger = ab.extend(["c"])
    assert bigger.id("a") == ab.id("a")
    assert bigger.id("c") == 2


@given(st.lists(st.integers(0, 2), max_size=8),
       st.lists(st.integers(0, 2), max_size=8))
def test_lenlex_shorter_always_smaller(u, v):
    u, v = tuple(u), tuple(v)
    if len(u) < len(v):
        assert lenlex_key(u) < lenlex_key(v)
    elif u == v:
        assert lenlex_key(u) == lenlex_key(v)
