import pytest

from sgpd import catalog
from sgpd.errors import ConsistencyError, InfiniteSemigroupoidError, SemigroupoidError
from sgpd.oracle import enumerate_semigroupoids, find_graph_structure
from sgpd.semigroupoid import (
    GraphStructure,
    Semigroupoid,
    associativity_violations,
    composable_sets,
    from_category,
    from_graph,
    from_semigroup,
    identities,
    is_categorical,
    markov_from_matrix,
    markov_words,
    validate_semigroupoid,
)


def test_null_semigroupoid_is_valid(nm):
    assert len(nm) == 5
    assert nm.composable == {("s1", "t1"), ("s1", "t2"), ("s2", "t2")}


def test_single_idempotent():
    S = validate_semigroupoid(["e"], [("e", "e")], {("e", "e"): "e"})
    assert S.mul("e", "e") == "e"


def test_condition_i_violation_is_reported():
    # (a,b) and (b,c) composable with ab = c, but (c,c) is missing
    with pytest.raises(SemigroupoidError) as exc:
        validate_semigroupoid("abc", [("a", "b"), ("b", "c")], {("a", "b"): "c", ("b", "c"): "c"})
    v = exc.value.first
    assert v.rule == "assoc(i)"
    assert v.where["triple"] == ("a", "b", "c")


def test_all_triggered_conditions_listed():
    bad = associativity_violations("abc", {("a", "b"), ("b", "c")}, {("a", "b"): "c", ("b", "c"): "c"})
    assert bad and all(v.rule.startswith("assoc(") for v in bad)


@pytest.mark.parametrize(
    "pairs, product, rule",
    [
        ([("a", "a")], {("a", "b"): "a"}, "table"),
        ([("a", "z")], {("a", "z"): "a"}, "unknown"),
        ([("a", "a")], {}, "table"),
    ],
)
def test_table_errors(pairs, product, rule):
    with pytest.raises(SemigroupoidError) as exc:
        validate_semigroupoid("ab", pairs, product)
    assert exc.value.first.rule == rule


def test_composable_sets(nm):
    assert composable_sets(nm, "s1") == ({"t1", "t2"}, frozenset())
    assert composable_sets(nm, "s2")[0] == {"t2"}
    assert composable_sets(nm, 0) == (frozenset(), frozenset())
    assert nm.left("t2") == {"s1", "s2"}


def test_unknown_element(nm):
    with pytest.raises(SemigroupoidError):
        nm.right("q")


def test_categorical():
    assert not is_categorical(catalog.null_semigroupoid())
    assert is_categorical(catalog.two_letter_markov())
    assert is_categorical(validate_semigroupoid(["e"], [("e", "e")], {("e", "e"): "e"}))


def test_identities():
    assert identities(catalog.zero_one()) == {1}
    assert identities(catalog.null_semigroupoid()) == set()
    assert identities(catalog.two_idempotents()) == {"e", "f"}


def test_from_semigroup():
    S = catalog.zero_one()
    assert S.composable == {(a, b) for a in (0, 1) for b in (0, 1)}
    left_zero = from_semigroup({(x, y): x for x in "ab" for y in "ab"})
    assert is_categorical(left_zero)
    with pytest.raises(SemigroupoidError):
        from_semigroup({("a", "a"): "a", ("a", "b"): "a"}, "ab")
    with pytest.raises(SemigroupoidError):
        from_semigroup({})


def test_from_semigroup_rejects_non_associative():
    # aa = b, everything else a: (aa)b = a but a(ab) = b
    table = {(x, y): "a" for x in "ab" for y in "ab"}
    table[("a", "a")] = "b"
    with pytest.raises(SemigroupoidError):
        from_semigroup(table)


def test_from_category_arrow():
    C = catalog.arrow_category()
    assert len(C) == 3 and len(C.composable) == 4
    assert identities(C) == {"R", "D"}


def test_from_category_single_object():
    C = catalog.one_object_category()
    assert C.elements == ("e",) and C.composable == {("e", "e")}


def test_two_idempotents_as_category():
    C = from_category(("e", "f"), ("e", "f"), {}, {}, {})
    assert C == catalog.two_idempotents()
    assert identities(C) == {"e", "f"}


@pytest.mark.parametrize(
    "objects, morphisms, dom, ran, comp",
    [
        (("p",), ("g",), {"g": "p"}, {"g": "p"}, {}),  # missing identity
        (("p", "q"), ("p", "q", "g"), {"g": "p"}, {"g": "q"}, {("g", "g"): "g"}),  # dom/ran mismatch
        (("p",), ("p", "g"), {"g": "p"}, {"g": "p"}, {}),  # g o g missing
        (("p",), ("p", "g"), {"g": "p"}, {"g": "p"}, {("g", "g"): "p", ("p", "g"): "p"}),  # identity law
    ],
)
def test_from_category_errors(objects, morphisms, dom, ran, comp):
    with pytest.raises(SemigroupoidError):
        from_category(objects, morphisms, dom, ran, comp)


def test_from_graph_two_letters():
    S = catalog.two_letter_graphed()
    assert S.composable == {("s", "t")} and S.mul("s", "t") == "st"
    assert from_graph(GraphStructure(("v",), {}, {}), {}).elements == ()


def test_from_graph_rejects_bad_product():
    g = catalog.two_letter_graph()
    with pytest.raises(SemigroupoidError):
        from_graph(g, {})
    with pytest.raises(SemigroupoidError):
        from_graph(g, {("s", "t"): "s"})


def test_null_semigroupoid_has_no_graph_structure():
    assert find_graph_structure(catalog.null_semigroupoid(), 5) is None
    assert find_graph_structure(catalog.two_letter_markov(), 5) is not None


def test_markov():
    S = markov_from_matrix(("s", "t"), {("s", "t"): 1})
    assert S.elements == ("s", "t", "st")
    assert S.product == {("s", "t"): "st"}
    assert markov_from_matrix(("x",), [[0]]).composable == frozenset()
    with pytest.raises(InfiniteSemigroupoidError):
        markov_from_matrix(("x", "y"), [[0, 1], [1, 0]])
    with pytest.raises(InfiniteSemigroupoidError):
        markov_from_matrix(("x",), [[1]])
    with pytest.raises(SemigroupoidError):
        markov_from_matrix((), {})


def test_markov_long_letters_use_separator():
    S = markov_from_matrix(("ab", "c"), {("ab", "c"): 1})
    assert S.elements == ("ab", "c", "ab_c")


def test_markov_factorization_unique():
    alphabet = ("x", "y", "z")
    A = {("x", "y"): 1, ("y", "z"): 1, ("x", "z"): 1}
    words = markov_words(alphabet, A)
    assert len(set(words)) == len(words)
    S = markov_from_matrix(alphabet, A)
    assert set(S.elements) == {"".join(w) for w in words}
    for w in words:
        # re-parse the label letter by letter
        assert tuple("".join(w)) == w


@pytest.mark.parametrize("n", [1, 2, 3])
def test_composition_preserves_composable_sets(n):
    for S in enumerate_semigroupoids(n):
        for s, t in S.composable:
            st = S.mul(s, t)
            assert S.right(t) == S.right(st)
            assert S.left(s) == S.left(st)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_at_most_one_right_identity(n):
    for S in enumerate_semigroupoids(n):
        ids = identities(S)
        for s in S.elements:
            assert len(ids & S.right(s)) <= 1


def test_empty_semigroupoid_allowed():
    S = Semigroupoid((), frozenset(), {})
    assert len(S) == 0 and is_categorical(S)


def test_categorical_check_guard_is_consistent():
    # no semigroupoid of order <= 3 trips the right/left agreement guard
    for n in range(4):
        for S in enumerate_semigroupoids(n):
            try:
                is_categorical(S)
            except ConsistencyError:  # pragma: no cover
                pytest.fail(f"right/left categoricity disagree on {S}")
