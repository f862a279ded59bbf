import pytest

from sgpd import catalog
from sgpd.action import PartialAction, left_regular
from sgpd.errors import BudgetExceeded, MorphismError
from sgpd.globalization import build_globalization
from sgpd.morphism import (
    ActionMorphism,
    Status,
    check_iso_to_restriction,
    check_morphism,
    compose,
    enumerate_morphisms,
    has_inverse_morphism,
    identity,
    inverse,
)
from sgpd.oracle import _is_morphism, enumerate_partial_actions, enumerate_semigroupoids


def test_identity_is_isomorphism(nm_action):
    m = identity(nm_action)
    assert m.is_isomorphism and m.status is Status.ISOMORPHISM
    assert str(Status.NOT_MORPHISM) == "not-morphism"


def test_delta_embedding_not_iso(nm_action):
    G = build_globalization(nm_action)
    m = G.delta_morphism
    assert m.is_embedding and not m.is_isomorphism
    assert check_morphism(G.delta, nm_action, G.action).witness.rule == "surjective"


def test_two_idempotents_inclusion_is_embedding():
    X = catalog.two_idempotents_restricted()
    Y = catalog.two_idempotents_global()
    i = ActionMorphism(X, Y, {1: 1, 2: 2})
    assert i.is_embedding
    assert check_iso_to_restriction(i)


def test_non_morphism_reported():
    X = catalog.two_idempotents_restricted()
    Y = catalog.two_idempotents_global()
    r = check_morphism({1: 3, 2: 2}, X, Y)
    assert r.status is Status.NOT_MORPHISM and r.witness.where["point"] == 1
    with pytest.raises(MorphismError):
        ActionMorphism(X, Y, {1: 3, 2: 2})


def test_non_injective_morphism():
    X = catalog.zero_one_pair()
    pt = catalog.zero_one_point()
    r = check_morphism({"x1": "x1", "x2": "x1"}, X, pt)
    assert r.status is Status.MORPHISM and r.witness.rule == "injective"


def test_injective_but_not_embedding():
    # the degenerate point b can go to x2, where 1 is defined
    X = catalog.zero_one_degenerate()
    Y = PartialAction(catalog.zero_one(), ("x1", "x2"), {1: {"x1": "x1", "x2": "x2"}, 0: {"x1": "x1", "x2": "x1"}})
    r = check_morphism({"a": "x1", "b": "x2"}, X, Y)
    assert r.status is Status.MORPHISM and r.witness.rule == "embedding"
    assert not check_iso_to_restriction(ActionMorphism(X, Y, {"a": "x1", "b": "x2"}))


def test_shape_errors(nm_action):
    with pytest.raises(MorphismError, match="not defined"):
        check_morphism({}, nm_action, nm_action)
    with pytest.raises(MorphismError, match="outside the target"):
        check_morphism({1: 9, 2: 2, 3: 3, 4: 4}, nm_action, nm_action)
    with pytest.raises(MorphismError, match="outside the source"):
        check_morphism({1: 1, 2: 2, 3: 3, 4: 4, 9: 1}, nm_action, nm_action)
    with pytest.raises(MorphismError, match="different semigroupoids"):
        check_morphism({}, catalog.zero_one_point(), nm_action)


def test_iso_to_restriction_needs_global_target(nm_action):
    with pytest.raises(MorphismError):
        check_iso_to_restriction(identity(nm_action))


def test_compose_and_inverse(nm_action):
    G = build_globalization(nm_action)
    d = G.delta_morphism
    assert compose(identity(G.action), d).func == d.func
    with pytest.raises(MorphismError):
        compose(d, d)
    assert not has_inverse_morphism(d)
    g = identity(left_regular(catalog.null_semigroupoid()))
    assert inverse(g).func == g.func


def test_bijective_morphism_without_inverse():
    # a -> a, b -> b from the degenerate action into the pair action with
    # nothing defined at b on the source side
    X = PartialAction(catalog.zero_one(), ("x1", "x2"), {1: {"x1": "x1"}, 0: {"x1": "x1"}})
    Y = catalog.zero_one_pair()
    m = ActionMorphism(X, Y, {"x1": "x1", "x2": "x2"})
    assert m.status is Status.MORPHISM
    assert not has_inverse_morphism(m)


def test_enumerate_morphisms_budget(nm_action):
    G = build_globalization(nm_action)
    with pytest.raises(BudgetExceeded):
        enumerate_morphisms(G.action, G.action, budget=3)


def test_enumerate_morphisms_fixed_point_outside_carrier(nm_action):
    with pytest.raises(MorphismError):
        enumerate_morphisms(nm_action, nm_action, fixed={99: 1})


@pytest.mark.parametrize("n", [1, 2])
def test_enumerate_matches_brute(n):
    from itertools import product

    for S in enumerate_semigroupoids(n):
        acts = list(enumerate_partial_actions(S, 2))[:40]
        for a in acts[:8]:
            for b in acts[:8]:
                found = enumerate_morphisms(a, b)
                brute = []
                for img in product(b.carrier, repeat=len(a.carrier)):
                    f = dict(zip(a.carrier, img))
                    if _is_morphism(f, a, b):
                        brute.append(f)
                assert sorted(map(sorted_items, found)) == sorted(map(sorted_items, brute))


def sorted_items(d):
    return tuple(sorted(d.items()))
