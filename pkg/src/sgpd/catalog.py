"""Small named structures used throughout the tests and the CLI demos."""

from __future__ import annotations

from .action import PartialAction, restrict
from .semigroupoid import GraphStructure, Semigroupoid, from_category, from_graph, from_semigroup, markov_from_matrix


def null_semigroupoid() -> Semigroupoid:
    """Five elements, three composable pairs, every product equal to ``0``.

    Not categorical and not a Markov semigroupoid.
    """
    pairs = [("s1", "t1"), ("s1", "t2"), ("s2", "t2")]
    return Semigroupoid(("s1", "s2", "t1", "t2", 0), frozenset(pairs), {p: 0 for p in pairs})


def null_action() -> PartialAction:
    """A non-global, degenerate partial action of :func:`null_semigroupoid` on {1,2,3,4}."""
    maps = {
        "s1": {1: 2, 2: 3},
        "s2": {1: 2},
        "t1": {2: 1},
        "t2": {1: 1, 3: 3},
        0: {1: 2, 2: 2},
    }
    return PartialAction(null_semigroupoid(), (1, 2, 3, 4), maps)


def two_letter_markov() -> Semigroupoid:
    """Words over {s, t} where only ``t`` may follow ``s``: {s, t, st}."""
    return markov_from_matrix(("s", "t"), {("s", "t"): 1})


def two_letter_graph() -> GraphStructure:
    return GraphStructure(
        ("e1", "e2", "e3"),
        {"s": "e2", "t": "e1", "st": "e1"},
        {"s": "e3", "t": "e2", "st": "e3"},
    )


def two_letter_graphed() -> Semigroupoid:
    return from_graph(two_letter_graph(), {("s", "t"): "st"})


def zero_one() -> Semigroupoid:
    """The monoid {0, 1} under multiplication."""
    return from_semigroup({(a, b): a * b for a in (0, 1) for b in (0, 1)}, (0, 1))


def zero_one_point() -> PartialAction:
    """Global one-point action of :func:`zero_one`."""
    return PartialAction(zero_one(), ("x1",), {0: {"x1": "x1"}, 1: {"x1": "x1"}})


def zero_one_pair() -> PartialAction:
    """Global action of :func:`zero_one` on two points with 0 collapsing onto the first."""
    return PartialAction(zero_one(), ("x1", "x2"), {0: {"x1": "x1", "x2": "x1"}, 1: {"x1": "x1", "x2": "x2"}})


def zero_one_degenerate() -> PartialAction:
    """Both elements act as the identity on ``a``; ``b`` is untouched."""
    return PartialAction(zero_one(), ("a", "b"), {0: {"a": "a"}, 1: {"a": "a"}})


def two_idempotents() -> Semigroupoid:
    """{e, f} with ee = e, ff = f and nothing else composable."""
    return Semigroupoid(("e", "f"), frozenset({("e", "e"), ("f", "f")}), {("e", "e"): "e", ("f", "f"): "f"})


def two_idempotents_global() -> PartialAction:
    return PartialAction(
        two_idempotents(),
        (0, 1, 2, 3),
        {"e": {0: 0, 1: 1, 2: 0}, "f": {0: 0, 1: 1, 3: 0}},
    )


def two_idempotents_restricted() -> PartialAction:
    return restrict(two_idempotents_global(), {1, 2})


def arrow_category() -> Semigroupoid:
    """Two objects ``R`` and ``D`` with a single arrow ``g: D -> R``."""
    return from_category(("R", "D"), ("R", "g", "D"), {"g": "D"}, {"g": "R"}, {})


def arrow_category_counterexample() -> PartialAction:
    """Partial action of :func:`arrow_category` that is not a category action.

    Every map is constantly 0; the identity on ``R`` moves 1.
    """
    maps = {"g": {0: 0, 2: 0}, "D": {0: 0}, "R": {0: 0, 1: 0}}
    return PartialAction(arrow_category(), (0, 1, 2), maps)


def one_object_category() -> Semigroupoid:
    return from_category(("e",), ("e",), {}, {}, {})


def all_fixtures() -> dict:
    """Name -> semigroupoid or action, for round-trip style tests."""
    return {
        "null_semigroupoid": null_semigroupoid(),
        "null_action": null_action(),
        "two_letter_markov": two_letter_markov(),
        "zero_one": zero_one(),
        "zero_one_point": zero_one_point(),
        "zero_one_pair": zero_one_pair(),
        "zero_one_degenerate": zero_one_degenerate(),
        "two_idempotents": two_idempotents(),
        "two_idempotents_global": two_idempotents_global(),
        "two_idempotents_restricted": two_idempotents_restricted(),
        "arrow_category": arrow_category(),
        "arrow_category_counterexample": arrow_category_counterexample(),
        "one_object_category": one_object_category(),
    }
