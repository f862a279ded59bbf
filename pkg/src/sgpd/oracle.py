"""Brute-force oracles: exhaustive enumeration at tiny sizes and random
instance generators for property tests.

Nothing here relies on the checks in :mod:`sgpd.morphism` or on the
globalization construction; the point is to have a second opinion.
"""

from __future__ import annotations

import os
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations, product

from .action import PartialAction, action_violations, left_regular, restrict
from .errors import BudgetExceeded, SgpdError
from .semigroupoid import GraphStructure, Semigroupoid, from_category, markov_from_matrix

NAMES = "abcdefgh"


@dataclass(frozen=True)
class EnumerationBudget:
    max_semigroupoid_order: int = 3
    max_carrier: int = 3
    max_function_space: int = 10**6

    def __post_init__(self) -> None:
        if min(self.max_semigroupoid_order, self.max_carrier, self.max_function_space) <= 0:
            raise ValueError("budget values must be positive")

    @classmethod
    def from_env(cls, var: str = "SGPD_BUDGET") -> EnumerationBudget:
        """Read ``order,carrier,fnspace`` from the environment, else defaults."""
        raw = os.environ.get(var)
        if not raw:
            return cls()
        try:
            order, carrier, fnspace = (int(v) for v in raw.split(","))
        except ValueError:
            raise ValueError(f"{var} must be three comma-separated integers, got {raw!r}") from None
        return cls(order, carrier, fnspace)


# -- semigroupoids -----------------------------------------------------------

def _assoc_ok(n: int, table: Sequence[int]) -> bool:
    """Def-style associativity on an n x n table; -1 marks a non-composable pair."""
    def m(a, b):
        return table[a * n + b]

    for s in range(n):
        for t in range(n):
            st = m(s, t)
            for r in range(n):
                tr = m(t, r)
                c1 = st >= 0 and tr >= 0
                c2 = st >= 0 and m(st, r) >= 0
                c3 = tr >= 0 and m(s, tr) >= 0
                if not (c1 or c2 or c3):
                    continue
                if st < 0 or tr < 0:
                    return False
                left, right = m(st, r), m(s, tr)
                if left < 0 or right < 0 or left != right:
                    return False
    return True


def _relabel(n: int, table: Sequence[int], p: Sequence[int]) -> tuple:
    out = [-1] * (n * n)
    for i in range(n):
        for j in range(n):
            v = table[i * n + j]
            out[p[i] * n + p[j]] = p[v] if v >= 0 else -1
    return tuple(out)


def _is_canonical(n: int, table: tuple, perms: list) -> bool:
    return all(table <= _relabel(n, table, p) for p in perms)


def _to_semigroupoid(n: int, table: Sequence[int]) -> Semigroupoid:
    names = NAMES[:n]
    prod = {}
    for i in range(n):
        for j in range(n):
            v = table[i * n + j]
            if v >= 0:
                prod[(names[i], names[j])] = names[v]
    return Semigroupoid(tuple(names), frozenset(prod), prod)


def semigroupoid_tables(n: int) -> Iterator[tuple]:
    """Canonical associative tables of order ``n`` (one per isomorphism class)."""
    perms = list(permutations(range(n)))
    for table in product(range(-1, n), repeat=n * n):
        if _assoc_ok(n, table) and _is_canonical(n, table, perms):
            yield table


def enumerate_semigroupoids(n: int, budget: EnumerationBudget | None = None) -> Iterator[Semigroupoid]:
    """Every semigroupoid on ``n`` elements up to renaming, elements named a, b, c..."""
    budget = budget or EnumerationBudget.from_env()
    if n > budget.max_semigroupoid_order:
        raise BudgetExceeded(f"order {n} exceeds the budget of {budget.max_semigroupoid_order}")
    for table in semigroupoid_tables(n):
        yield _to_semigroupoid(n, table)


def count_semigroupoids(n: int, budget: EnumerationBudget | None = None) -> int:
    return sum(1 for _ in enumerate_semigroupoids(n, budget))


def is_semigroup(S: Semigroupoid) -> bool:
    return len(S.composable) == len(S) ** 2 and len(S) > 0


# -- partial actions -----------------------------------------------------------

def _partial_maps(m: int) -> list[dict]:
    """Every partial function on range(m)."""
    out = []
    for choice in product(range(-1, m), repeat=m):
        out.append({x: y for x, y in enumerate(choice) if y >= 0})
    return out


def enumerate_partial_actions(
    S: Semigroupoid, m: int, budget: EnumerationBudget | None = None
) -> Iterator[PartialAction]:
    """Every partial action of ``S`` on the carrier ``0..m-1``."""
    budget = budget or EnumerationBudget.from_env()
    if m > budget.max_carrier:
        raise BudgetExceeded(f"carrier size {m} exceeds the budget of {budget.max_carrier}")
    maps = _partial_maps(m)
    carrier = tuple(range(m))
    for family in product(maps, repeat=len(S)):
        data = dict(zip(S.elements, family))
        if not action_violations(S, carrier, data):
            yield PartialAction(S, carrier, data)


def is_global_brute(act: PartialAction) -> bool:
    """Direct reading of G1 and G2."""
    S = act.sgpd
    for s in S.elements:
        for t in S.elements:
            if S.right(s) and S.right(s) == S.right(t) and set(act.maps[s]) != set(act.maps[t]):
                return False
    for s, t in S.composable:
        if set(act.maps[t]) != set(act.maps[S.product[(s, t)]]):
            return False
    return True


# -- morphisms -----------------------------------------------------------------

def _is_morphism(func: dict, source: PartialAction, target: PartialAction) -> bool:
    for s in source.sgpd.elements:
        b = target.maps[s]
        for x, y in source.maps[s].items():
            if func[x] not in b or b[func[x]] != func[y]:
                return False
    return True


def count_commuting_morphisms(
    G, target: PartialAction, phi: dict, budget: EnumerationBudget | None = None
) -> int:
    """Number of morphisms ``Psi: E -> target`` with ``Psi o delta = phi``.

    Tries every function on the classes outside ``delta(X)``; the values on
    ``delta(X)`` are pinned by the equation.
    """
    budget = budget or EnumerationBudget.from_env()
    pinned = {G.delta[x]: phi[x] for x in G.base.carrier}
    free = [c for c in G.E if c not in pinned]
    size = len(target.carrier) ** len(free)
    if size > budget.max_function_space:
        raise BudgetExceeded(f"{size} candidate functions exceed the budget of {budget.max_function_space}")
    count = 0
    for values in product(target.carrier, repeat=len(free)):
        func = dict(pinned)
        func.update(zip(free, values))
        if _is_morphism(func, G.action, target):
            count += 1
    return count


def is_isomorphism_brute(func: dict, a: PartialAction, b: PartialAction) -> bool:
    inv = {y: x for x, y in func.items()}
    if len(inv) != len(b.carrier) or len(func) != len(a.carrier):
        return False
    return _is_morphism(func, a, b) and _is_morphism(inv, b, a)


def find_isomorphism(a: PartialAction, b: PartialAction) -> dict | None:
    """Some isomorphism of partial actions ``a -> b`` or None (tries all bijections)."""
    if a.sgpd != b.sgpd or len(a.carrier) != len(b.carrier):
        return None
    for image in permutations(b.carrier):
        func = dict(zip(a.carrier, image))
        if is_isomorphism_brute(func, a, b):
            return func
    return None


def find_graph_structure(S: Semigroupoid, max_vertices: int) -> GraphStructure | None:
    """A vertex assignment making ``S`` graphed, searching up to ``max_vertices``.

    Vertices are introduced in order of first use, so relabelings are not
    revisited.
    """
    elems = S.elements
    slots = [(e, side) for e in elems for side in ("dom", "ran")]
    val: dict = {}

    def consistent() -> bool:
        for g in elems:
            for h in elems:
                if ((g, "dom") in val) and ((h, "ran") in val):
                    if (val[(g, "dom")] == val[(h, "ran")]) != ((g, h) in S.composable):
                        return False
        for (g, h), gh in S.product.items():
            for a, b in (((gh, "dom"), (h, "dom")), ((gh, "ran"), (g, "ran"))):
                if a in val and b in val and val[a] != val[b]:
                    return False
        return True

    def search(i: int, used: int) -> bool:
        if i == len(slots):
            return True
        for v in range(min(used + 1, max_vertices)):
            val[slots[i]] = v
            if consistent() and search(i + 1, max(used, v + 1)):
                return True
            del val[slots[i]]
        return False

    if not elems:
        return GraphStructure((0,), {}, {})
    if not search(0, 0):
        return None
    used = sorted(set(val.values()))
    return GraphStructure(
        tuple(used),
        {e: val[(e, "dom")] for e in elems},
        {e: val[(e, "ran")] for e in elems},
    )


# -- random instances ------------------------------------------------------

_SMALL_CACHE: dict[int, list[tuple]] = {}


def _small_tables(n: int) -> list[tuple]:
    if n not in _SMALL_CACHE:
        _SMALL_CACHE[n] = list(semigroupoid_tables(n))
    return _SMALL_CACHE[n]


def _disjoint_union(A: Semigroupoid, B: Semigroupoid) -> Semigroupoid:
    ra = {a: f"{a}1" for a in A.elements}
    rb = {b: f"{b}2" for b in B.elements}
    prod = {(ra[s], ra[t]): ra[v] for (s, t), v in A.product.items()}
    prod.update({(rb[s], rb[t]): rb[v] for (s, t), v in B.product.items()})
    return Semigroupoid(tuple(ra.values()) + tuple(rb.values()), frozenset(prod), prod)


def random_semigroupoid(rng: random.Random, max_order: int = 4) -> Semigroupoid:
    """A random semigroupoid with at most ``max_order`` elements, mixing
    catalogued small ones, sparse random tables, Markov words and unions."""
    kind = rng.randrange(4)
    if kind == 0 or max_order < 4:
        n = rng.randint(1, min(3, max_order))
        return _to_semigroupoid(n, rng.choice(_small_tables(n)))
    if kind == 1:
        n = max_order
        for _ in range(500):
            density = rng.random()
            table = [rng.randrange(n) if rng.random() < density else -1 for _ in range(n * n)]
            if _assoc_ok(n, table):
                return _to_semigroupoid(n, table)
        return _to_semigroupoid(1, rng.choice(_small_tables(1)))
    if kind == 2:
        alphabet = ("x", "y", "z")[: rng.randint(2, 3)]
        edges = [(a, b) for i, a in enumerate(alphabet) for b in alphabet[i + 1:]]
        chosen = {e: 1 for e in edges if rng.random() < 0.5}
        S = markov_from_matrix(alphabet, chosen)
        if len(S) <= max_order:
            return S
        return markov_from_matrix(alphabet[:2], {("x", "y"): 1})
    a = rng.randint(1, 2)
    b = rng.randint(1, max_order - a)
    b = min(b, 3)
    return _disjoint_union(
        _to_semigroupoid(a, rng.choice(_small_tables(a))),
        _to_semigroupoid(b, rng.choice(_small_tables(b))),
    )


def random_partial_action(rng: random.Random, S: Semigroupoid, max_carrier: int = 4, tries: int = 300) -> PartialAction:
    """Rejection sampling biased towards small domains, falling back to a
    restriction of the left regular action."""
    m = rng.randint(0, max_carrier)
    carrier = tuple(range(m))
    for _ in range(tries):
        p = rng.choice((0.2, 0.4, 0.7))
        maps = {}
        for s in S.elements:
            maps[s] = {x: rng.randrange(m) for x in carrier if rng.random() < p}
        if not action_violations(S, carrier, maps):
            return PartialAction(S, carrier, maps)
    glob = left_regular(S)
    subset = [x for x in glob.carrier if rng.random() < 0.6]
    return restrict(glob, subset)


def random_global_action(rng: random.Random, S: Semigroupoid, max_carrier: int = 4, tries: int = 300) -> PartialAction:
    for _ in range(tries):
        act = random_partial_action(rng, S, max_carrier, tries=20)
        if is_global_brute(act):
            return act
    return left_regular(S)


# -- categories ----------------------------------------------------------------

def _hand_categories() -> list[Semigroupoid]:
    out = []
    # two objects, arrows g: D -> R and its inverse
    out.append(
        from_category(
            ("p", "q"), ("p", "g", "h", "q"),
            {"g": "p", "h": "q"}, {"g": "q", "h": "p"},
            {("g", "h"): "q", ("h", "g"): "p"},
        )
    )
    # two parallel arrows between two objects
    out.append(from_category(("p", "q"), ("p", "g", "h", "q"), {"g": "p", "h": "p"}, {"g": "q", "h": "q"}, {}))
    # one arrow between two objects plus an isolated object
    out.append(from_category(("p", "q", "r"), ("p", "g", "q", "r"), {"g": "p"}, {"g": "q"}, {}))
    return out


def small_categories(max_order: int = 4) -> list[Semigroupoid]:
    """Enumerated semigroupoids of order <= 3 that are categories, plus a few of order 4."""
    from .specializations import category_structure

    out = []
    for n in range(1, min(3, max_order) + 1):
        for table in _small_tables(n):
            S = _to_semigroupoid(n, table)
            if category_structure(S) is not None:
                out.append(S)
    if max_order >= 4:
        out.extend(C for C in _hand_categories() if len(C) <= max_order)
    return out


def random_categorical_action(rng: random.Random, C: Semigroupoid, max_carrier: int = 4, tries: int = 500) -> PartialAction | None:
    """A random partial category action of ``C``, or None if sampling fails.

    Identities act as the identity on domains covering X; every other
    domain sits inside the domain of its source identity and lands in the
    domain of its target identity.
    """
    from .specializations import category_structure

    cs = category_structure(C)
    if cs is None:
        raise SgpdError("not a category")
    objs = C.sorted(cs.objects)
    m = rng.randint(0, max_carrier)
    carrier = tuple(range(m))
    for _ in range(tries):
        edom = {e: {x for x in carrier if rng.random() < 0.6} for e in objs}
        for x in carrier:
            if not any(x in d for d in edom.values()):
                edom[rng.choice(objs)].add(x)
        maps = {e: {x: x for x in sorted(edom[e])} for e in objs}
        for g in C.elements:
            if g in cs.objects:
                continue
            src, tgt = sorted(edom[cs.dom[g]]), sorted(edom[cs.ran[g]])
            if not tgt:
                maps[g] = {}
                continue
            maps[g] = {x: rng.choice(tgt) for x in src if rng.random() < 0.6}
        if not action_violations(C, carrier, maps):
            return PartialAction(C, carrier, maps)
    return None
