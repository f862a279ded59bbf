"""Finite semigroupoids: a carrier, a composability relation and a partial product.

Elements are arbitrary hashable labels (strings in practice).  The order of
``elements`` is the canonical order for every derived output.
"""

from __future__ import annotations

import graphlib
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian

from .errors import ConsistencyError, InfiniteSemigroupoidError, SemigroupoidError, Violation

Element = Hashable
Pair = tuple[Element, Element]


def associativity_violations(
    elements: Sequence[Element],
    composable: Iterable[Pair],
    product: Mapping[Pair, Element],
    first_only: bool = False,
) -> list[Violation]:
    """Check the three-way associativity law over every triple.

    Triples are visited as (s, t, r) in element order; for each one the
    first of the conditions (i) (s,t),(t,r); (ii) (s,t),(st,r);
    (iii) (t,r),(s,tr) that holds is reported as the trigger.
    """
    comp = set(composable)
    out: list[Violation] = []
    for s, t, r in cartesian(elements, repeat=3):
        st = product.get((s, t)) if (s, t) in comp else None
        tr = product.get((t, r)) if (t, r) in comp else None
        if st is not None and (t, r) in comp:
            trigger = "i"
        elif st is not None and (st, r) in comp:
            trigger = "ii"
        elif tr is not None and (s, tr) in comp:
            trigger = "iii"
        else:
            continue
        where = {"triple": (s, t, r), "condition": trigger}
        missing = [
            p
            for p in ((s, t), (t, r), (st, r), (s, tr))
            if p[0] is None or p[1] is None or p not in comp
        ]
        if missing:
            shown = ", ".join(repr(p) for p in missing if None not in p)
            if not shown:
                shown = "a required pair"
            out.append(
                Violation(
                    f"assoc({trigger})",
                    f"triple {(s, t, r)!r} triggers condition ({trigger}) but {shown} is not composable",
                    where,
                )
            )
        elif product[(st, r)] != product[(s, tr)]:
            out.append(
                Violation(
                    f"assoc({trigger})",
                    f"triple {(s, t, r)!r}: (st)r = {product[(st, r)]!r} but s(tr) = {product[(s, tr)]!r}",
                    where,
                )
            )
        if out and first_only:
            break
    return out


def table_violations(
    elements: Sequence[Element],
    composable: Iterable[Pair],
    product: Mapping[Pair, Element],
) -> list[Violation]:
    """Shape errors: unknown elements, products off the composable set."""
    known = set(elements)
    comp = set(composable)
    out = []
    if len(known) != len(elements):
        dup = [e for e in elements if list(elements).count(e) > 1][0]
        out.append(Violation("elements", f"duplicate element {dup!r}", {"element": dup}))
    for pair in sorted(comp | set(product), key=repr):
        for e in pair:
            if e not in known:
                out.append(Violation("unknown", f"unknown element {e!r} in pair {pair!r}", {"element": e}))
        if pair in product and pair not in comp:
            out.append(Violation("table", f"product given on non-composable pair {pair!r}", {"pair": pair}))
        if pair in comp and pair not in product:
            out.append(Violation("table", f"composable pair {pair!r} has no product", {"pair": pair}))
    for pair, value in product.items():
        if value not in known:
            out.append(Violation("unknown", f"product {pair!r} -> {value!r} is not an element", {"element": value}))
    return out


@dataclass(frozen=True)
class Semigroupoid:
    """A finite semigroupoid; validated on construction."""

    elements: tuple[Element, ...]
    composable: frozenset[Pair]
    product: Mapping[Pair, Element] = field(compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "composable", frozenset(self.composable))
        object.__setattr__(self, "product", dict(self.product))
        bad = table_violations(self.elements, self.composable, self.product)
        if bad:
            raise SemigroupoidError(bad)
        bad = associativity_violations(self.elements, self.composable, self.product, first_only=True)
        if bad:
            raise SemigroupoidError(bad)

    def __hash__(self) -> int:
        return hash((self.elements, self.composable))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, s: object) -> bool:
        return s in self.index

    @cached_property
    def index(self) -> dict[Element, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def pairs(self) -> tuple[Pair, ...]:
        """Composable pairs in (element order x element order)."""
        idx = self.index
        return tuple(sorted(self.composable, key=lambda p: (idx[p[0]], idx[p[1]])))

    @cached_property
    def _right(self) -> dict[Element, frozenset]:
        right: dict[Element, set] = {e: set() for e in self.elements}
        for s, t in self.composable:
            right[s].add(t)
        return {e: frozenset(v) for e, v in right.items()}

    @cached_property
    def _left(self) -> dict[Element, frozenset]:
        left: dict[Element, set] = {e: set() for e in self.elements}
        for s, t in self.composable:
            left[t].add(s)
        return {e: frozenset(v) for e, v in left.items()}

    def right(self, s: Element) -> frozenset:
        """``S^s``: the elements t with (s, t) composable."""
        self._check(s)
        return self._right[s]

    def left(self, s: Element) -> frozenset:
        """``^sS``: the elements t with (t, s) composable."""
        self._check(s)
        return self._left[s]

    def mul(self, s: Element, t: Element) -> Element:
        try:
            return self.product[(s, t)]
        except KeyError:
            raise SemigroupoidError(f"({s!r}, {t!r}) is not composable") from None

    def sorted(self, items: Iterable[Element]) -> list[Element]:
        return sorted(items, key=self.index.__getitem__)

    def _check(self, s: Element) -> None:
        if s not in self.index:
            raise SemigroupoidError(Violation("unknown", f"unknown element {s!r}", {"element": s}))

    def __repr__(self) -> str:
        return f"Semigroupoid(elements={list(self.elements)!r}, |S2|={len(self.composable)})"


def validate_semigroupoid(
    elements: Sequence[Element],
    composable: Iterable[Pair],
    product: Mapping[Pair, Element],
) -> Semigroupoid:
    return Semigroupoid(tuple(elements), frozenset(composable), dict(product))


def composable_sets(S: Semigroupoid, s: Element) -> tuple[frozenset, frozenset]:
    """Return ``(S^s, ^sS)``."""
    return S.right(s), S.left(s)


def _disjoint_or_equal(sets: Iterable[frozenset]) -> bool:
    sets = list(sets)
    for a in sets:
        for b in sets:
            if a & b and a != b:
                return False
    return True


def is_categorical(S: Semigroupoid) -> bool:
    by_right = _disjoint_or_equal(S.right(s) for s in S.elements)
    by_left = _disjoint_or_equal(S.left(s) for s in S.elements)
    if by_right != by_left:
        raise ConsistencyError("right-set and left-set categoricity checks disagree")
    return by_right


def identities(S: Semigroupoid) -> frozenset:
    out = set()
    for e in S.elements:
        if (e, e) not in S.composable:
            continue
        if all(S.product[(s, e)] == s for s in S.left(e)) and all(
            S.product[(e, t)] == t for t in S.right(e)
        ):
            out.add(e)
    return frozenset(out)


def from_semigroup(table: Mapping[Pair, Element], elements: Sequence[Element] | None = None) -> Semigroupoid:
    """Semigroup from a total multiplication table ``{(x, y): xy}``."""
    if elements is None:
        seen: dict[Element, None] = {}
        for x, y in table:
            seen.setdefault(x)
            seen.setdefault(y)
        elements = list(seen)
    elements = tuple(elements)
    if not elements:
        raise SemigroupoidError("a semigroup must be non-empty")
    missing = [p for p in cartesian(elements, repeat=2) if p not in table]
    if missing:
        raise SemigroupoidError(f"multiplication table is not total; missing {missing[0]!r}")
    S = Semigroupoid(elements, frozenset(table), dict(table))
    if not is_categorical(S):
        raise ConsistencyError("a semigroup must be categorical")
    return S


def from_category(
    objects: Sequence[Element],
    morphisms: Sequence[Element],
    dom: Mapping[Element, Element],
    ran: Mapping[Element, Element],
    composition: Mapping[Pair, Element],
) -> Semigroupoid:
    """Category as a semigroupoid; each object doubles as its identity morphism.

    ``composition[(f, g)]`` is ``f o g`` (defined iff ``dom[f] == ran[g]``).
    Entries with an identity on either side may be omitted.
    """
    morphisms = tuple(morphisms)
    objects = tuple(objects)
    for e in objects:
        if e not in morphisms:
            raise SemigroupoidError(Violation("identity", f"missing identity for object {e!r}", {"object": e}))
    dom = dict(dom)
    ran = dict(ran)
    for e in objects:
        if dom.setdefault(e, e) != e or ran.setdefault(e, e) != e:
            raise SemigroupoidError(Violation("identity", f"identity {e!r} must have dom = ran = {e!r}", {"object": e}))
    for f in morphisms:
        if f not in dom or f not in ran:
            raise SemigroupoidError(Violation("graph", f"morphism {f!r} needs both dom and ran", {"morphism": f}))
        if dom[f] not in objects or ran[f] not in objects:
            raise SemigroupoidError(Violation("graph", f"morphism {f!r} has an endpoint that is not an object", {"morphism": f}))
    for pair in composition:
        f, g = pair
        if f not in dom or g not in dom or dom[f] != ran[g]:
            raise SemigroupoidError(Violation("graph", f"composition given for {pair!r} but dom/ran do not match", {"pair": pair}))

    table: dict[Pair, Element] = {}
    for f, g in cartesian(morphisms, repeat=2):
        if dom[f] != ran[g]:
            continue
        if (f, g) in composition:
            h = composition[(f, g)]
        elif f in objects:
            h = g
        elif g in objects:
            h = f
        else:
            raise SemigroupoidError(Violation("table", f"composite {f!r} o {g!r} is missing", {"pair": (f, g)}))
        if h not in dom:
            raise SemigroupoidError(Violation("unknown", f"composite {f!r} o {g!r} = {h!r} is not a morphism", {"pair": (f, g)}))
        if dom[h] != dom[g] or ran[h] != ran[f]:
            raise SemigroupoidError(Violation("graph", f"composite {f!r} o {g!r} = {h!r} breaks dom/ran", {"pair": (f, g)}))
        table[(f, g)] = h
    S = Semigroupoid(morphisms, frozenset(table), table)
    if identities(S) != frozenset(objects):
        bad = sorted(set(objects) - identities(S), key=repr)
        raise SemigroupoidError(Violation("identity", f"object {bad[0]!r} does not act as an identity", {"object": bad[0]}))
    if not is_categorical(S):
        raise ConsistencyError("a category must be categorical")
    return S


@dataclass(frozen=True)
class GraphStructure:
    """Directed graph whose edges are the semigroupoid elements."""

    vertices: tuple
    dom: Mapping[Element, Hashable]
    ran: Mapping[Element, Hashable]

    @property
    def edges(self) -> tuple:
        return tuple(self.dom)


def from_graph(graph: GraphStructure, product: Mapping[Pair, Element]) -> Semigroupoid:
    edges = graph.edges
    if set(graph.ran) != set(edges):
        raise SemigroupoidError("dom and ran must be defined on the same edges")
    for e in edges:
        if graph.dom[e] not in graph.vertices or graph.ran[e] not in graph.vertices:
            raise SemigroupoidError(Violation("graph", f"edge {e!r} has an unknown endpoint", {"edge": e}))
    expected = {(g, h) for g, h in cartesian(edges, repeat=2) if graph.dom[g] == graph.ran[h]}
    if set(product) != expected:
        extra = sorted(set(product) ^ expected, key=repr)[0]
        raise SemigroupoidError(Violation("graph", f"product must be defined exactly when dom(g) = ran(h); offending pair {extra!r}", {"pair": extra}))
    for (g, h), gh in product.items():
        if gh not in graph.dom:
            raise SemigroupoidError(Violation("unknown", f"product {g!r}{h!r} = {gh!r} is not an edge", {"pair": (g, h)}))
        if graph.dom[gh] != graph.dom[h] or graph.ran[gh] != graph.ran[g]:
            raise SemigroupoidError(Violation("graph", f"product {g!r}{h!r} = {gh!r} breaks dom/ran", {"pair": (g, h)}))
    S = Semigroupoid(edges, frozenset(product), dict(product))
    if not is_categorical(S):
        raise ConsistencyError("graphed semigroupoid is not categorical")
    return S


def _word_label(word: tuple, join: str) -> str:
    return join.join(str(a) for a in word)


def markov_words(alphabet: Sequence[Element], matrix) -> list[tuple]:
    """All admissible words, shortest first, then in alphabet order.

    ``matrix`` is either a mapping ``{(x, y): 0/1}`` (missing keys are 0)
    or a square sequence of rows indexed in alphabet order.
    """
    alphabet = tuple(alphabet)
    if not alphabet:
        raise SemigroupoidError("alphabet must be non-empty")
    if isinstance(matrix, Mapping):
        A = {(x, y): int(matrix.get((x, y), 0)) for x in alphabet for y in alphabet}
    else:
        rows = [list(r) for r in matrix]
        if len(rows) != len(alphabet) or any(len(r) != len(alphabet) for r in rows):
            raise SemigroupoidError("transition matrix must be square over the alphabet")
        A = {(x, y): int(rows[i][j]) for i, x in enumerate(alphabet) for j, y in enumerate(alphabet)}
    if any(v not in (0, 1) for v in A.values()):
        raise SemigroupoidError("transition matrix must be 0-1")
    succ = {x: [y for y in alphabet if A[(x, y)]] for x in alphabet}
    try:
        tuple(graphlib.TopologicalSorter({x: set(succ[x]) for x in alphabet}).static_order())
    except graphlib.CycleError as exc:
        cycle = exc.args[1] if len(exc.args) > 1 else ()
        raise InfiniteSemigroupoidError(
            f"transition graph has a cycle {cycle!r}; the Markov semigroupoid is infinite"
        ) from None

    words: list[tuple] = []
    frontier = [(a,) for a in alphabet]
    while frontier:
        words.extend(frontier)
        frontier = [w + (y,) for w in frontier for y in succ[w[-1]]]
    return words


def markov_from_matrix(alphabet: Sequence[Element], matrix) -> Semigroupoid:
    """Finite Markov semigroupoid of admissible words; concatenation as product.

    Words are labelled by concatenating letters (joined with ``_`` when some
    letter is longer than one character).
    """
    alphabet = tuple(alphabet)
    words = markov_words(alphabet, matrix)
    join = "" if all(len(str(a)) == 1 for a in alphabet) else "_"
    label = {w: _word_label(w, join) for w in words}
    if len(set(label.values())) != len(words):
        raise SemigroupoidError("letter names make word labels ambiguous")
    wordset = set(words)
    table = {}
    for u in words:
        for v in words:
            uv = u + v
            if uv in wordset:
                table[(label[u], label[v])] = label[uv]
    return Semigroupoid(tuple(label[w] for w in words), frozenset(table), table)
