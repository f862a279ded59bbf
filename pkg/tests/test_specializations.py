import random
from itertools import product

import pytest

from sgpd import catalog
from sgpd.action import PartialAction, degeneracy_split
from sgpd.errors import ActionError, SgpdError
from sgpd.oracle import (
    enumerate_partial_actions,
    enumerate_semigroupoids,
    is_semigroup,
    random_categorical_action,
    small_categories,
)
from sgpd.semigroupoid import from_semigroup
from sgpd.specializations import (
    UNIT,
    category_structure,
    check_category_action,
    check_globalization_categorical,
    check_strong_semigroup_action,
    compare_tensor_universal,
    initial_nondegenerate_candidates,
    is_strong_global,
    tensor_globalization,
    tensor_label,
)


def test_strong_action_zero_one():
    act = catalog.zero_one_pair()
    assert check_strong_semigroup_action(act.sgpd, act.carrier, act.maps) == (True, None)
    assert is_strong_global(act)
    assert not is_strong_global(catalog.zero_one_degenerate())


def test_strong_action_mutation_fails_both_routes():
    S = catalog.zero_one()
    ok, w = check_strong_semigroup_action(S, ("x1", "x2"), {1: {"x1": "x1"}, 0: {"x1": "x2", "x2": "x1"}})
    assert not ok and w.rule == "S"


def test_strong_action_needs_semigroup(nm):
    with pytest.raises(SgpdError):
        check_strong_semigroup_action(nm, (), {})
    with pytest.raises(SgpdError):
        tensor_globalization(catalog.null_action())


def test_reserved_unit_name():
    S = from_semigroup({(UNIT, UNIT): UNIT})
    with pytest.raises(SgpdError, match="reserved"):
        tensor_globalization(PartialAction(S, (), {}))


def test_tensor_degenerate_example():
    T = tensor_globalization(catalog.zero_one_degenerate())
    assert len(T.classes) == 4
    b = T.class_of(UNIT, "b")
    assert T.action.maps[0][b] == T.class_of(0, "b")
    assert tensor_label(b) == "1!⊗b"


def test_compare_nondegenerate_isomorphic():
    r = compare_tensor_universal(catalog.zero_one_pair())
    assert r.isomorphic and r.level == "isomorphic" and r.nondegenerate


def test_compare_degenerate_not_bijective():
    r = compare_tensor_universal(catalog.zero_one_degenerate())
    assert r.injective and not r.surjective
    assert r.level == "incomparable" and not r.nondegenerate
    assert len(r.universal.E) == 2 and len(r.tensor.action.carrier) == 4


def left_zero():
    return from_semigroup({(x, y): x for x in "ab" for y in "ab"})


def literal_tensor_failures(act):
    """Count (s, class) where s(t⊗x) = st⊗x is ill defined under the
    relation (ut, x) ~ (t, alpha_u x)."""
    from sgpd.partition import Partition

    S = act.sgpd
    M = S.elements + (UNIT,)

    def mul(a, b):
        return b if a == UNIT else a if b == UNIT else S.product[(a, b)]

    def alpha(u):
        return {x: x for x in act.carrier} if u == UNIT else act.maps[u]

    gens = [((mul(u, t), x), (t, y)) for t in M for u in M for x, y in alpha(u).items()]
    P = Partition.closure([(s, x) for s in M for x in act.carrier], gens)
    bad = 0
    for members in P:
        for s in S.elements:
            if len({P.class_of[(mul(s, t), x)] for t, x in members}) > 1:
                bad += 1
    return bad


def test_left_zero_needs_right_factor_convention():
    S = left_zero()
    total = 0
    for act in enumerate_partial_actions(S, 2):
        tensor_globalization(act)  # implemented convention always well defined
        total += literal_tensor_failures(act) > 0
    assert total > 0


@pytest.mark.parametrize("n", [1, 2])
def test_iso_iff_nondegenerate(n):
    for S in enumerate_semigroupoids(n):
        if not is_semigroup(S):
            continue
        for m in (0, 1, 2):
            for act in enumerate_partial_actions(S, m):
                r = compare_tensor_universal(act)
                assert r.isomorphic == (not degeneracy_split(act).x0)
                assert r.injective and r.phi_is_morphism


def test_category_structure():
    cs = category_structure(catalog.arrow_category())
    assert cs.objects == {"R", "D"} and cs.dom["g"] == "D" and cs.ran["g"] == "R"
    assert category_structure(catalog.null_semigroupoid()) is None
    # a monoid is a one-object category
    assert category_structure(catalog.zero_one()).objects == {1}
    assert category_structure(catalog.two_letter_markov()) is None


def test_arrow_counterexample():
    act = catalog.arrow_category_counterexample()
    r = check_category_action(act.sgpd, act.carrier, act.maps)
    assert not r
    assert "c1-identity" in r.failed and "c2" in r.failed
    assert any(w.where.get("element") == "R" for w in r.witnesses)


def test_category_action_require_global():
    C = catalog.arrow_category()
    maps = {"R": {0: 0}, "D": {1: 1}, "g": {}}
    assert check_category_action(C, (0, 1), maps)
    r = check_category_action(C, (0, 1), maps, require_global=True)
    assert not r and r.failed == ("c4",)


def test_category_action_on_non_category(nm):
    with pytest.raises(SgpdError):
        check_category_action(nm, (), {})


def test_globalization_categorical_rejects_bad_input():
    act = catalog.arrow_category_counterexample()
    with pytest.raises(ActionError):
        check_globalization_categorical(act)


def test_small_categories():
    cats = small_categories(4)
    assert len(cats) == 18
    assert all(category_structure(C) is not None for C in cats)


@pytest.mark.parametrize("seed", range(20))
def test_random_categorical_actions(seed):
    rng = random.Random(seed)
    C = rng.choice(small_categories(4))
    act = random_categorical_action(rng, C, 3)
    if act is None:
        pytest.skip("sampler gave up")
    assert check_category_action(C, act.carrier, act.maps)
    assert check_globalization_categorical(act)


def test_route_agreement_on_raw_families():
    C = catalog.arrow_category()
    pm = [{x: y for x, y in enumerate(c) if y >= 0} for c in product(range(-1, 2), repeat=2)]
    for fam in product(pm, repeat=3):
        maps = dict(zip(C.elements, fam))
        for g in (False, True):
            check_category_action(C, (0, 1), maps, require_global=g)  # raises on disagreement


def test_two_idempotents_obstruction():
    X = catalog.two_idempotents_restricted()
    Y = catalog.two_idempotents_global()
    res = initial_nondegenerate_candidates(X, Y, {1: 1, 2: 2}, {1: 1, 2: 3}, 3)
    assert res.candidates > 0 and res.counterexamples == ()
