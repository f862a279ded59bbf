"""Laws checked on random small instances."""

import random

from hypothesis import given
from hypothesis import strategies as st

from sgpd.action import (
    PartialAction,
    degeneracy_split,
    global_violations,
    identity_action_violations,
    is_global,
    left_regular,
    restrict,
)
from sgpd.globalization import build_globalization, compute_R, verify_universality
from sgpd.morphism import ActionMorphism, Status, check_morphism, compose, has_inverse_morphism, identity
from sgpd.oracle import (
    enumerate_partial_actions,
    enumerate_semigroupoids,
    find_isomorphism,
    is_global_brute,
    is_semigroup,
    random_global_action,
    random_semigroupoid,
)
from sgpd.semigroupoid import from_semigroup, identities, is_categorical, markov_from_matrix
from sgpd.specializations import compare_tensor_universal, is_strong_global, tensor_globalization
from sgpd.textio import parse_action, serialize_action

from .conftest import small_actions

seeds = st.integers(0, 2**32 - 1)
SEMIGROUPS = [S for n in (1, 2) for S in enumerate_semigroupoids(n) if is_semigroup(S)]


@st.composite
def semigroup_actions(draw):
    S = draw(st.sampled_from(SEMIGROUPS))
    m = draw(st.integers(0, 2))
    acts = list(enumerate_partial_actions(S, m))
    return draw(st.sampled_from(acts))


# -- semigroupoids ------------------------------------------------------------

@given(seeds)
def test_composition_keeps_composable_sets(seed):
    S = random_semigroupoid(random.Random(seed), 4)
    for s, t in S.composable:
        st_ = S.product[(s, t)]
        assert S.right(t) == S.right(st_) and S.left(s) == S.left(st_)
        assert S.product.keys() == S.composable


@given(seeds)
def test_at_most_one_right_identity(seed):
    S = random_semigroupoid(random.Random(seed), 4)
    ids = identities(S)
    assert all(len(ids & S.right(s)) <= 1 for s in S.elements)


@given(st.lists(st.sampled_from("ab"), min_size=4, max_size=4))
def test_from_semigroup_categorical(values):
    table = dict(zip([(x, y) for x in "ab" for y in "ab"], values))
    try:
        S = from_semigroup(table)
    except Exception:
        return
    assert is_categorical(S)


@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda e: e[0] < e[1])))
def test_markov_words_unique_factorization(edges):
    alphabet = ("a", "b", "c", "d")
    A = {(alphabet[i], alphabet[j]) for i, j in edges}
    S = markov_from_matrix(alphabet, {e: 1 for e in A})
    # one-letter alphabet: each element spells its unique admissible path
    assert len(set(S.elements)) == len(S)
    for w in S.elements:
        assert all((w[k], w[k + 1]) in A for k in range(len(w) - 1))
    for (s, t), st_ in S.product.items():
        assert st_ == s + t and (s[-1], t[0]) in A
    admissible = {(s, t) for s in S.elements for t in S.elements if (s[-1], t[0]) in A}
    assert admissible == S.composable


# -- partial actions ------------------------------------------------------------

@given(small_actions())
def test_globality_routes_agree(act):
    assert bool(is_global(act)) == is_global_brute(act)


@given(small_actions())
def test_g1_implies_global_when_right_sets_nonempty(act):
    S = act.sgpd
    if all(S.right(s) for s in S.elements):
        g1 = [v for v in global_violations(act) if v.rule == "G1"]
        if not g1:
            assert is_global(act)


@given(small_actions())
def test_identity_projections(act):
    assert identity_action_violations(act) == []


@given(small_actions())
def test_degeneracy_split_partitions(act):
    split = degeneracy_split(act)
    assert set(split.x1) | set(split.x0) == set(act.carrier)
    assert not set(split.x1) & set(split.x0)


@given(seeds)
def test_left_regular_global(seed):
    assert is_global(left_regular(random_semigroupoid(random.Random(seed), 4)))


@given(seeds, st.data())
def test_restriction_is_partial_action(seed, data):
    rng = random.Random(seed)
    glob = random_global_action(rng, random_semigroupoid(rng, 4), 4)
    subset = data.draw(st.sets(st.sampled_from(glob.carrier)) if glob.carrier else st.just(set()))
    act = restrict(glob, subset)
    assert set(act.carrier) == set(subset)


@given(seeds)
def test_right_order_domains(seed):
    rng = random.Random(seed)
    glob = random_global_action(rng, random_semigroupoid(rng, 4), 3)
    R = compute_R(glob.sgpd)
    for members in R:
        assert len({glob.dom(s) for s in members}) == 1


# -- morphisms ------------------------------------------------------------------

@given(small_actions())
def test_identity_morphism_is_iso(act):
    assert check_morphism({x: x for x in act.carrier}, act, act).status is Status.ISOMORPHISM


@given(small_actions())
def test_iso_iff_inverse_morphism(act):
    G = build_globalization(act)
    d = G.delta_morphism
    assert d.is_isomorphism == has_inverse_morphism(d)


@given(small_actions())
def test_embeddings_compose(act):
    G = build_globalization(act)
    H = build_globalization(G.action)
    comp = compose(H.delta_morphism, G.delta_morphism)
    assert comp.is_embedding


# -- globalization --------------------------------------------------------------

@given(small_actions())
def test_globalization_laws(act):
    G = build_globalization(act)
    assert is_global(G.action)
    assert G.delta_morphism.is_embedding
    assert verify_universality(G, G.delta_morphism, identity(G.action), budget=20_000)
    S = act.sgpd
    for s, t in S.composable:
        assert G.R.same(S.product[(s, t)], t)
    for members in G.classes:
        assert sum(m.is_delta for m in members) <= 1
        tagged = [m for m in members if not m.is_delta]
        inside = [m for m in tagged if m.point in act.maps[m.tag]]
        assert not inside or len(inside) == len(tagged)
        assert len({act.maps[m.tag][m.point] for m in inside}) <= 1


@given(small_actions())
def test_globalization_restricts_back(act):
    G = build_globalization(act)
    back = restrict(G.action, set(G.delta.values()))
    onto = ActionMorphism(act, back, G.delta)
    assert onto.is_isomorphism


@given(small_actions(max_carrier=3))
def test_global_input_iso(act):
    if is_global(act):
        G = build_globalization(act)
        assert G.delta_morphism.is_isomorphism
        assert find_isomorphism(act, PartialAction(act.sgpd, G.E, G.action.maps)) is not None


# -- semigroups -----------------------------------------------------------------

@given(semigroup_actions())
def test_strong_global_iff_nondegenerate_global(act):
    assert is_strong_global(act) == (bool(is_global(act)) and not degeneracy_split(act).x0)


@given(semigroup_actions())
def test_tensor_always_global_nondegenerate(act):
    T = tensor_globalization(act)
    assert is_global(T.action) and not degeneracy_split(T.action).x0
    assert ActionMorphism(act, T.action, T.i).is_embedding


@given(semigroup_actions())
def test_tensor_comparison_iff(act):
    r = compare_tensor_universal(act)
    assert r.injective
    assert r.isomorphic == (not degeneracy_split(act).x0)


@given(semigroup_actions())
def test_semigroup_domains_miss_only_degenerate_part(act):
    G = build_globalization(act)
    rest = set(G.E) - {G.delta[x] for x in degeneracy_split(act).x0}
    for s in act.sgpd.elements:
        assert G.sE(s) == rest


# -- text format ------------------------------------------------------------------

@given(small_actions())
def test_round_trip(act):
    text = serialize_action(act)
    back = parse_action(text)
    assert back == act and back.sgpd == act.sgpd
    assert serialize_action(back) == text
