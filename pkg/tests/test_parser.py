from fractions import Fraction

import pytest
from hypothesis import given

from rsqea.algebra import normal_form
from rsqea.coeff import R, S, LaurentCoeff
from rsqea.parser import ParseError, UnknownSymbol, parse, tokenize
from rsqea.presentations import build_presentation
from strategies import laurents, random_pbw, random_word_element, seeded


def test_chevalley_expression_normalizes(V):
    assert normal_form(parse("e1*e2 - r^2*e2*e1", V)) == V.gen("X2")


def test_scalar_square(V):
    x = parse("(r+s)^2", V)
    assert x.terms == {(): R ** 2 + 2 * R * S + S ** 2}


def test_malformed_offset(V):
    with pytest.raises(ParseError) as err:
        parse("e1 +* e2", V)
    assert err.value.position == 3


@pytest.mark.parametrize("text,pos", [
    ("X1 *", 3), ("(X1 + X2", 8), ("X1 X2", 3), ("X1^", 3), ("X1 $ X2", 3), ("", 0),
    ("X1^-1", 0), ("(r + s)^-1", 0), ("1/0", 0),
])
def test_parse_errors(V, text, pos):
    with pytest.raises(ParseError) as err:
        parse(text, V)
    assert err.value.position == pos


def test_unknown_symbols():
    u = build_presentation("U")
    with pytest.raises(UnknownSymbol) as err:
        parse("X1 + Z", u)
    assert err.value.name == "Z" and err.value.position == 5
    with pytest.raises(UnknownSymbol):
        parse("X4", u)


def test_precedence(V):
    a = parse("X1 + X2*X4^2", V)
    b = parse("X1 + (X2*(X4^2))", V)
    assert a == b
    assert parse("-X1 - X2", V) == parse("(-1)*X1 + (-1)*X2", V)
    assert parse("r^-2*s", V).terms == {(): LaurentCoeff.monomial(-2, 1)}
    assert parse("3/4*X1", V).terms == {(0,): LaurentCoeff.const(Fraction(3, 4))}


def test_whitespace_insensitive(V):
    assert parse(" X1 *  X4- r ^ 2 * X4*X1 ", V) == parse("X1*X4-r^2*X4*X1", V)


def test_tokenize():
    kinds = [k for k, _, _ in tokenize("2/3*r^-1 + X1")]
    assert kinds == ["rat", "op", "name", "op", "op", "int", "op", "name", "end"]


def test_named_elements_expand(V):
    z = normal_form(parse("Zp", V))
    manual = normal_form(parse("X1*W - s^4*W*X1", V))
    assert z == manual


@given(laurents())
def test_coefficient_text_roundtrip(c):
    p = build_presentation("V")
    val = parse(str(c), p)
    assert val.terms.get((), LaurentCoeff()) == c


@pytest.mark.parametrize("seed", range(60))
def test_pbw_text_roundtrip(P, seed):
    rng = seeded(3000 + seed)
    x = random_pbw(rng, P, 5)
    assert normal_form(parse(x.text(), P)) == x


@pytest.mark.parametrize("seed", range(30))
def test_free_text_roundtrip(P, seed):
    rng = seeded(4000 + seed)
    x = random_word_element(rng, P, 4)
    assert parse(x.text(), P) == x
