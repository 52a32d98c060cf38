from lpict.pi.congruence import (
    is_standard_form,
    level_parts,
    standard_form,
    structurally_congruent,
)
from lpict.pi.parser import parse_process, pretty_print
from lpict.pi.terms import NIL, Bang, Par, Restrict, free_names

from conftest import FREE_NAMES, random_term

cong = structurally_congruent
P = parse_process


def test_parallel_unit():
    for source in ("a.0", "tau.b<>.0", "new x x.0", "!a<b>.0"):
        assert cong(P(f"{source} | 0"), P(source))
        assert cong(Par(NIL, P(source)), P(source))


def test_parallel_commutative():
    assert cong(P("a.0 | b.0"), P("b.0 | a.0"))


def test_parallel_associative():
    assert cong(P("a.0 | (b.0 | c.0)"), P("(a.0 | b.0) | c.0"))


def test_distinct_free_channels_not_congruent():
    assert not cong(P("a.0"), P("b.0"))


def test_alpha_conversion():
    assert cong(P("new x x<a>.0"), P("new y y<a>.0"))
    assert cong(P("c(x).x<>.0"), P("c(y).y<>.0"))


def test_sum_reordering():
    assert cong(P("a.0 + b.0"), P("b.0 + a.0"))


def test_scope_extrusion():
    assert cong(P("new x (a.0 | x<b>.0)"), P("a.0 | new x x<b>.0"))


def test_restriction_of_unused_name():
    assert cong(P("new x 0"), P("0"))


def test_restriction_order_irrelevant():
    assert cong(P("new x new y (x<>.0 | y<>.0)"), P("new y new x (x<>.0 | y<>.0)"))


def test_replication_unfolding():
    assert cong(P("!a.0"), P("a.0 | !a.0"))
    assert cong(P("!(a.0 | b.0)"), P("a.0 | b.0 | !(a.0 | b.0)"))
    assert cong(P("!(new x x.0)"), P("new x x.0 | !(new x x.0)"))


def test_replication_copy_count_matters():
    # two visible copies are not one visible copy
    assert not cong(P("a.0 | a.0"), P("a.0"))
    assert cong(P("a.0 | a.0 | !a.0"), P("!a.0"))


def test_binder_permutation_with_asymmetric_use():
    left = P("new m new n (m.0 | m.0 | n.0)")
    right = P("new m new n (m.0 | n.0 | n.0)")
    # congruent: swap the two binders
    assert cong(left, right)


def test_standard_form_drops_unused_restriction():
    assert standard_form(P("new x 0")) == NIL


def test_standard_form_hoists_restriction():
    term = P("a.0 | new x (x<b>.0)")
    sf = standard_form(term)
    assert cong(sf, P("new x (a.0 | x<b>.0)"))
    binders, comps = level_parts(sf)
    assert len(binders) == 1 and len(comps) == 2


def test_standard_form_same_for_swapped_restrictions():
    a = standard_form(P("new x new y (x<>.0 | y<>.0)"))
    b = standard_form(P("new y new x (x<>.0 | y<>.0)"))
    assert a == b


def test_standard_form_properties(rng):
    for _ in range(250):
        term = random_term(rng, rng.randrange(0, 6))
        sf = standard_form(term)
        assert cong(sf, term)
        assert is_standard_form(sf)
        assert free_names(sf) == free_names(term)
        assert standard_form(sf) == sf


def test_is_standard_form_shape():
    assert is_standard_form(NIL)
    assert is_standard_form(P("a.0 | !b.0"))
    assert not is_standard_form(P("a.0 | 0"))
    assert not is_standard_form(Par(Restrict("x", P("x.0")), P("a.0")))


def test_congruence_is_equivalence(rng):
    # reflexive on arbitrary terms; symmetric and transitive across
    # law-generated variants
    for _ in range(150):
        term = random_term(rng, rng.randrange(0, 6))
        assert cong(term, term)
        variant = Par(term, NIL)
        variant2 = Par(NIL, Par(term, NIL))
        assert cong(term, variant) and cong(variant, term)
        assert cong(variant, variant2) and cong(term, variant2)


def test_scope_extrusion_random(rng):
    for _ in range(150):
        left = random_term(rng, 3)
        right = random_term(rng, 3)
        name = next(n for n in FREE_NAMES + ["fresh0"] if n not in free_names(left))
        assert cong(Restrict(name, Par(left, right)), Par(left, Restrict(name, right)))


def test_replication_law_random(rng):
    for _ in range(150):
        body = random_term(rng, 3)
        assert cong(Bang(body), Par(body, Bang(body)))


def _law_rewrites(term, rng):
    """Congruence-preserving rewrites applicable at the root."""
    out = [Par(term, NIL), Par(NIL, term)]
    if isinstance(term, Par):
        out.append(Par(term.right, term.left))
        if isinstance(term.left, Par):
            out.append(Par(term.left.left, Par(term.left.right, term.right)))
        if isinstance(term.right, Par):
            out.append(Par(Par(term.left, term.right.left), term.right.right))
    if isinstance(term, Bang):
        out.append(Par(term.body, term))
    if isinstance(term, Restrict) and isinstance(term.body, Par):
        left, right = term.body.left, term.body.right
        if term.name not in free_names(left):
            out.append(Par(left, Restrict(term.name, right)))
    return out


def test_random_walk_of_laws_stays_congruent(rng):
    # apply chains of law rewrites; every intermediate stays congruent with
    # the origin, exercising transitivity through multi-step derivations
    for _ in range(60):
        origin = random_term(rng, rng.randrange(0, 4))
        current = origin
        for _ in range(rng.randrange(1, 5)):
            current = rng.choice(_law_rewrites(current, rng))
            assert cong(origin, current)
            assert cong(current, origin)


def test_congruence_symmetric_on_random_pairs(rng):
    for _ in range(150):
        left = random_term(rng, rng.randrange(0, 5))
        right = random_term(rng, rng.randrange(0, 5))
        flag = cong(left, right)
        assert flag == cong(right, left)
        if flag:
            assert free_names(left) == free_names(right)


def test_congruent_terms_print_differently_but_normalize_equal():
    a = P("new u (c<u>.0 | d.0) | e.0")
    b = P("e.0 | new w (d.0 | c<w>.0)")
    assert cong(a, b)
    assert standard_form(a) == standard_form(b)
    assert pretty_print(standard_form(a)) == pretty_print(standard_form(b))
