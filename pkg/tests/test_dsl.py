"""Expression parsing, printing, and evaluation."""

import pytest

import posetlab as pl
from posetlab.dsl import Builtin, ChainOf, LoadFile, ProductOf


def test_parse_trees():
    assert pl.parse("B(3)[2]") == ChainOf(Builtin("B", (3,)), 2)
    assert pl.parse("ex1") == Builtin("ex1")
    assert pl.parse("I(2,3)") == Builtin("I", (2, 3))
    assert pl.parse('load("x.json")') == LoadFile("x.json")
    assert pl.parse("T(1)[2][2]") == ChainOf(ChainOf(Builtin("T", (1,)), 2), 2)


def test_chain_binds_tighter_than_product():
    assert pl.parse("T(1)*B(2)[2]") == ProductOf(
        Builtin("T", (1,)), ChainOf(Builtin("B", (2,)), 2)
    )
    assert pl.parse("(T(1)*T(1))[2]") == ChainOf(
        ProductOf(Builtin("T", (1,)), Builtin("T", (1,))), 2
    )


def test_product_associates_left():
    assert pl.parse("B(1)*B(1)*B(1)") == ProductOf(
        ProductOf(Builtin("B", (1,)), Builtin("B", (1,))), Builtin("B", (1,))
    )


def test_whitespace_insensitive():
    assert pl.parse("B( 2 )[ 2 ]") == pl.parse("B(2)[2]")
    assert pl.parse(" I( 1 , 2 ) * ex1 ") == pl.parse("I(1,2)*ex1")


def test_to_text_round_trips():
    for text in (
        "B(3)[2]",
        "T(1)*B(2)[2]",
        "(T(1)*T(1))[2]",
        "ex1*ex2",
        'load("p.json")[3]',
        "I(2,3)[2]*T(1)",
    ):
        node = pl.parse(text)
        assert pl.parse(pl.to_text(node)) == node


def test_to_text_parenthesizes_products_under_chains():
    node = ChainOf(ProductOf(Builtin("B", (1,)), Builtin("T", (2,))), 3)
    assert pl.to_text(node) == "(B(1)*T(2))[3]"


@pytest.mark.parametrize(
    "text, message",
    [
        ("B(", "expected INT, found END (at position 2)"),
        ("B(2", "expected ), found END (at position 3)"),
        ("", "expected a poset atom, found END (at position 0)"),
        ("B(2))", "unexpected trailing ) (at position 4)"),
        ("B(2)[0]", "chain length must be positive (at position 5)"),
        ("Q(2)", "unknown name 'Q' (at position 0)"),
        ("B(-1)", "unexpected character '-' (at position 2)"),
        ('load("x', "unterminated string (at position 5)"),
        ("B(2),T(1)", "unexpected trailing , (at position 4)"),
        ("T(1)[2,3]", "expected ], found , (at position 6)"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(pl.ParseError) as err:
        pl.parse(text)
    assert str(err.value) == message


def test_unexpected_character():
    with pytest.raises(pl.ParseError, match="unexpected character"):
        pl.parse("B(2) @ T(1)")


def test_evaluate_text_and_node():
    from_text = pl.evaluate("B(2)[2]")
    from_node = pl.evaluate(pl.parse("B(2)[2]"))
    assert pl.is_isomorphic(from_text, from_node)
    assert from_text.n == 9


def test_evaluate_builtins():
    assert pl.evaluate("B(3)").n == 8
    assert pl.evaluate("T(4)").n == 5
    assert pl.evaluate("I(2)").n == 9
    assert pl.evaluate("I(1,3)").n == 4
    assert pl.evaluate("ex1").n == 7
    assert pl.evaluate("ex2").n == 6


def test_evaluate_product_and_chain_match_api():
    p = pl.evaluate("(T(1)*T(1))[2]")
    q = pl.chain_poset(pl.product(pl.total(1), pl.total(1)), 2)
    assert pl.is_isomorphic(p, q)
    assert pl.is_isomorphic(p, pl.evaluate("B(2)[2]"))


def test_evaluate_load(tmp_path):
    path = tmp_path / "saved.json"
    pl.dump(pl.boolean(2), path)
    p = pl.evaluate(f'load("{path}")')
    assert pl.is_isomorphic(p, pl.boolean(2))
    q = pl.evaluate(f'load("{path}")[2]')
    assert pl.is_isomorphic(q, pl.evaluate("B(2)[2]"))


def test_evaluate_rejects_non_nodes():
    with pytest.raises(TypeError, match="not an expression node"):
        pl.evaluate(42)
    with pytest.raises(TypeError, match="not an expression node"):
        pl.to_text(3.5)


def test_comma_only_valid_inside_builtin():
    with pytest.raises(pl.ParseError):
        pl.parse("B(1,2)")  # B takes one argument
    assert pl.parse("I(1,2)") == Builtin("I", (1, 2))


def test_parse_error_position_attribute():
    with pytest.raises(pl.ParseError) as err:
        pl.parse("B(2)[0]")
    assert err.value.position == 5
