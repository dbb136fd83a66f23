import pytest

from finitetop.operators import BiOperatorSpace
from finitetop.predicate import Atom, BinOp, Not, ParseError, UnknownAtom, evaluate, max_operator_index, parse


def test_parse_shapes():
    assert parse("b_open") == Atom("b_open")
    assert parse("!open") == Not(Atom("open"))
    assert parse("t_star_open(2)") == Atom("t_star_open", 2)
    # equal precedence, left associative
    assert parse("b_open | open & closed") == BinOp(
        "&", BinOp("|", Atom("b_open"), Atom("open")), Atom("closed")
    )
    assert parse("b_open | (open & closed)") == BinOp("|", Atom("b_open"), BinOp("&", Atom("open"), Atom("closed")))


@pytest.mark.parametrize(
    "text,pos",
    [("b_open & !", 10), ("b_open &", 8), ("(open", 5), ("open )", 5), ("open $", 5), ("t_star_open(x)", 12)],
)
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.position == pos
    assert str(e.value).startswith(f"ParseError at position {pos}:")


def test_unknown_atom():
    with pytest.raises(UnknownAtom) as e:
        parse("open & shiny")
    assert e.value.position == 7 and "b_open" in str(e.value)
    with pytest.raises(ParseError):
        parse("t_star_open(0)")


def test_evaluate(sier):
    sp = BiOperatorSpace.canonical(sier)
    expr = parse("b_open & !open")
    assert [evaluate(expr, sp, s) for s in range(4)] == [False, False, False, False]
    assert evaluate(parse("B_closed & !B_open"), sp, 0b10)
    assert evaluate(parse("t_star_open(1) | t_star_open(2)"), sp, 0b01)
    assert max_operator_index(parse("open | !t_star_open(3)")) == 3
