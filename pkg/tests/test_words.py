"""Word parsing, free reduction, and the Penner letter predicate."""

import pytest
from hypothesis import given, strategies as st

from mcg4.words import (
    Generator,
    MappingWord,
    WordSyntaxError,
    invert,
    is_penner_positive,
    parse_word,
    render_word,
)

letters = st.builds(
    Generator, index=st.sampled_from([1, 2, 3]), sign=st.sampled_from([1, -1])
)
letter_lists = st.lists(letters, max_size=30)


def lw(*pairs):
    return MappingWord(tuple(Generator(i, s) for i, s in pairs))


def test_parse_basic():
    assert parse_word("w1^-1 w2") == lw((1, -1), (2, 1))
    assert parse_word("w1 w1^-1") == MappingWord()
    assert parse_word("id") == MappingWord()
    assert parse_word("w2^3") == lw((2, 1), (2, 1), (2, 1))
    assert parse_word("w1^0 w2") == lw((2, 1))


def test_parse_errors_carry_positions():
    with pytest.raises(WordSyntaxError) as err:
        parse_word("w4")
    assert err.value.position == 0
    with pytest.raises(WordSyntaxError) as err:
        parse_word("w1 w4")
    assert err.value.position == 3
    with pytest.raises(WordSyntaxError):
        parse_word("w1^x")
    with pytest.raises(WordSyntaxError):
        parse_word("")
    with pytest.raises(WordSyntaxError):
        parse_word("id w1")


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator(4, 1)
    with pytest.raises(ValueError):
        Generator(1, 0)


def test_invert_examples():
    assert invert(MappingWord()) == MappingWord()
    assert invert(lw((1, 1))) == lw((1, -1))
    assert invert(lw((1, -1), (2, 1))) == lw((2, -1), (1, 1))


def test_render_collapses_runs():
    word = lw((1, -1), (1, -1), (2, 1))
    assert render_word(word) == "w1^-2 w2"
    assert render_word(MappingWord()) == "id"
    assert render_word(lw((3, 1))) == "w3"


@given(letter_lists)
def test_parse_render_round_trip(ls):
    word = MappingWord(tuple(ls))
    assert parse_word(word.render()) == word


@given(letter_lists, letter_lists)
def test_reduction_is_confluent(xs, ys):
    # reducing the concatenation equals concatenating reductions: any
    # reduction order lands on the same word
    assert MappingWord(tuple(xs + ys)) == MappingWord(tuple(xs)) * MappingWord(tuple(ys))


@given(letter_lists)
def test_word_times_inverse_is_identity(ls):
    word = MappingWord(tuple(ls))
    assert (word * word.inverse()) == MappingWord()
    assert invert(invert(word)) == word


def test_penner_positive_examples():
    assert is_penner_positive(lw((1, -1), (2, 1))) is True
    assert is_penner_positive(lw((2, 1))) is False
    assert is_penner_positive(lw((1, 1), (2, 1))) is False
    assert is_penner_positive(MappingWord()) is False
    assert is_penner_positive(lw((1, -1), (3, -1))) is False


def test_power_and_exponent_sum():
    word = parse_word("w1^-1 w2")
    assert word**2 == parse_word("w1^-1 w2 w1^-1 w2")
    assert word**-1 == parse_word("w2^-1 w1")
    assert word**0 == MappingWord()
    assert word.exponent_sum == 0
    assert parse_word("w1 w2 w3").exponent_sum == 3
