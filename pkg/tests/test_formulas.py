import pytest

from lpict.errors import AtomBudgetError, ParseError
from lpict.logic.formulas import (
    FALSUM,
    And,
    Atom,
    Implies,
    MissingAtomError,
    Not,
    Or,
    atoms,
    eval_formula,
    format_formula,
    parse_formula,
)
from lpict.logic.semantics import all_valuations, semantic_entails

from conftest import random_fragment_formula


def oracle_eval(f, v):
    """Independent evaluator: 0/1 arithmetic instead of boolean operators."""
    if isinstance(f, Atom):
        return int(v[f.name])
    if isinstance(f, Not):
        return 1 - oracle_eval(f.operand, v)
    if isinstance(f, And):
        return oracle_eval(f.left, v) * oracle_eval(f.right, v)
    if isinstance(f, Or):
        return max(oracle_eval(f.left, v), oracle_eval(f.right, v))
    if isinstance(f, Implies):
        return max(1 - oracle_eval(f.left, v), oracle_eval(f.right, v))
    return 0  # falsum


def test_parse_implication():
    assert parse_formula("p -> q") == Implies(Atom("p"), Atom("q"))


def test_parse_negated_conjunction():
    assert parse_formula("!(p & q)") == Not(And(Atom("p"), Atom("q")))


def test_implication_right_associative():
    assert parse_formula("p -> q -> r") == parse_formula("p -> (q -> r)")
    assert parse_formula("p -> q -> r") != parse_formula("(p -> q) -> r")


def test_precedence():
    assert parse_formula("!p & q | r -> s") == Implies(
        Or(And(Not(Atom("p")), Atom("q")), Atom("r")), Atom("s")
    )


def test_parse_error_position():
    with pytest.raises(ParseError):
        parse_formula("p -> ")
    with pytest.raises(ParseError):
        parse_formula("(p")


def test_eval_examples():
    assert eval_formula(parse_formula("p -> q"), {"p": True, "q": False}) is False
    assert eval_formula(FALSUM, {}) is False
    # (p -> q) & !q -> !p is valid: all four rows true
    f = parse_formula("(p -> q) & !q -> !p")
    for v in all_valuations(["p", "q"]):
        assert eval_formula(f, v) is True


def test_eval_missing_atom():
    with pytest.raises(MissingAtomError):
        eval_formula(Atom("p"), {})


def test_format_parse_roundtrip(rng):
    names = ["p", "q", "r"]
    for _ in range(200):
        f = random_fragment_formula(rng, names)
        assert parse_formula(format_formula(f)) == f
    # non-fragment shapes round-trip too
    for text in ("(p | q) & r", "p | q & r", "!(p -> q) | false", "!!p"):
        f = parse_formula(text)
        assert parse_formula(format_formula(f)) == f


def random_formula(r, depth):
    if depth <= 0:
        return [Atom("p"), Atom("q"), Atom("r"), FALSUM][r.randrange(4)]
    roll = r.random()
    if roll < 0.2:
        return Not(random_formula(r, depth - 1))
    ctor = [And, Or, Implies][r.randrange(3)]
    return ctor(random_formula(r, depth - 1), random_formula(r, depth - 1))


def test_eval_agrees_with_oracle():
    import random

    r = random.Random(11)
    for _ in range(200):
        f = random_formula(r, r.randrange(0, 5))
        for v in all_valuations(["p", "q", "r"]):
            assert eval_formula(f, v) == bool(oracle_eval(f, v))


def test_format_parse_roundtrip_general():
    import random

    r = random.Random(29)
    for _ in range(400):
        f = random_formula(r, r.randrange(0, 6))
        assert parse_formula(format_formula(f)) == f


def test_semantic_entails_examples():
    p, q = Atom("p"), Atom("q")
    assert semantic_entails((p, Implies(p, q)), q) is True
    assert semantic_entails((Implies(p, q), Not(q)), Not(p)) is True
    assert semantic_entails((p,), q) is False


def test_atom_budget():
    big = [Atom(f"x{i}") for i in range(21)]
    with pytest.raises(AtomBudgetError):
        semantic_entails(big, Atom("x0"))


def test_atoms():
    assert atoms(parse_formula("p -> q & !r | false")) == {"p", "q", "r"}
