import pytest

from app.algebra.monomial import ExponentOverflowError
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.algebra.text import PolynomialSyntaxError, format_poly, parse
from app.grassmann.generators import g_poly


def test_parse_examples():
    assert parse("w2^3 + w3^2") == g_poly(6)
    assert parse("0") == Polynomial()
    assert parse("w3 + w3") == Polynomial()


def test_parse_tolerates_reordering_and_whitespace():
    assert parse("w3^2+w2 ^ 3") == parse("w2^3 + w3^2")
    assert parse("w3*w2*w2") == parse("w2^2*w3")


def test_format_is_canonical():
    assert format_poly(parse("w3^2 + w2^3")) == "w2^3 + w3^2"
    assert format_poly(parse("1 + w2*w3")) == "w2*w3 + 1"
    assert format_poly(Polynomial()) == "0"


@pytest.mark.parametrize("text", ["w2^3 + w3^2", "w2^2*w3", "w3^3", "w2*w3^2 + 1", "0"])
def test_canonical_text_round_trips(text):
    assert format_poly(parse(text)) == text


def test_extended_parse():
    x = parse("a*w2^3*w3^3 + a", t=4)
    assert isinstance(x, ExtPolynomial)
    assert x.t == 4
    assert format_poly(x) == "a*w2^3*w3^3 + a"


def test_a_requires_tower():
    with pytest.raises(PolynomialSyntaxError):
        parse("a + w2")


@pytest.mark.parametrize(
    "text,position",
    [("w2 + + w3", 5), ("w2 x", 3), ("w2^", 3), ("2*w3", 0), ("", 0)],
)
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse(text)
    assert exc.value.position == position


def test_exponent_out_of_range():
    with pytest.raises(ExponentOverflowError):
        parse(f"w2^{2**64}")
