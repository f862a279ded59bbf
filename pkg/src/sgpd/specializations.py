"""Semigroups and categories as special semigroupoids.

Semigroup side: the strong-action condition, the tensor product
globalization over S with a unit adjoined, and its comparison with the
universal globalization.  Category side: the category-action axioms
(c1)-(c4) next to the categorical conditions (C1)-(C3), checked along both
routes.
"""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass
from itertools import product

from .action import PartialAction, action_violations, degeneracy_split, global_violations, is_global
from .errors import ActionError, ConsistencyError, MorphismError, SgpdError, Violation
from .globalization import Globalization, build_globalization
from .morphism import ActionMorphism, Status, check_morphism, enumerate_morphisms
from .partition import Partition
from .semigroupoid import Semigroupoid, identities

UNIT = "1!"


def _require_semigroup(S: Semigroupoid) -> None:
    if not S.elements or len(S.composable) != len(S) ** 2:
        raise SgpdError("structure is not a semigroup (some pair is not composable)")


def check_strong_semigroup_action(
    S: Semigroupoid, carrier, maps
) -> tuple[bool, Violation | None]:
    """Condition (S) on every pair of a semigroup, read off directly.

    Accepts raw data so that failing families can be tested; the verdict is
    cross-checked against the general partial-action validator.
    """
    _require_semigroup(S)
    carrier = tuple(carrier)
    empty: dict = {}
    witness = None
    for s in S.elements:
        for t in S.elements:
            st = S.product[(s, t)]
            a_s, a_t, a_st = maps.get(s, empty), maps.get(t, empty), maps.get(st, empty)
            image_t = set(a_t.values())
            lhs = {x for x in a_t if a_t[x] in a_s and a_t[x] in image_t}
            rhs = {x for x in a_t if x in a_st}
            if lhs != rhs:
                witness = Violation("S", f"preimage condition fails for {(s, t)!r}", {"pair": (s, t)})
            else:
                bad = [x for x in carrier if x in rhs and a_s[a_t[x]] != a_st[x]]
                if bad:
                    witness = Violation("S", f"composition fails for {(s, t)!r} at {bad[0]!r}", {"pair": (s, t), "point": bad[0]})
            if witness:
                break
        if witness:
            break
    ok = witness is None
    if ok != (not action_violations(S, carrier, maps)):
        raise ConsistencyError("condition (S) and the partial-action axioms disagree")
    return ok, witness


def is_strong_global(act: PartialAction) -> bool:
    """Every domain is the whole carrier."""
    _require_semigroup(act.sgpd)
    return all(len(act.maps[s]) == len(act.carrier) for s in act.sgpd.elements)


@dataclass(frozen=True, eq=False)
class TensorGlobalization:
    base: PartialAction
    monoid: tuple           # S with UNIT appended
    classes: Partition      # of S^1 x X
    action: PartialAction   # gamma on the class identifiers
    i: dict

    def class_of(self, s: Hashable, x: Hashable) -> tuple:
        return self.classes.class_of[(s, x)]


def tensor_label(rep: tuple) -> str:
    return f"{rep[0]}⊗{rep[1]}"


def tensor_globalization(act: PartialAction) -> TensorGlobalization:
    S = act.sgpd
    _require_semigroup(S)
    if UNIT in S:
        raise SgpdError(f"element name {UNIT!r} is reserved for the adjoined unit")
    X = act.carrier
    monoid = S.elements + (UNIT,)

    def mul(a, b):
        if a == UNIT:
            return b
        if b == UNIT:
            return a
        return S.product[(a, b)]

    def alpha(u):
        return {x: x for x in X} if u == UNIT else act.maps[u]

    universe = [(s, x) for s in monoid for x in X]
    # (tu, x) ~ (t, alpha_u x)
    gens = [((mul(t, u), x), (t, y)) for t in monoid for u in monoid for x, y in alpha(u).items()]
    P = Partition.closure(universe, gens)

    maps: dict = {s: {} for s in S.elements}
    for rep, members in P.classes.items():
        for s in S.elements:
            outs = {P.class_of[(mul(s, t), x)] for t, x in members}
            if len(outs) != 1:
                raise ConsistencyError(f"gamma_{s} is not well defined on {tensor_label(rep)}")
            maps[s][rep] = outs.pop()
    gamma = PartialAction(S, P.representatives, maps)
    if not is_global(gamma) or degeneracy_split(gamma).x0:
        raise ConsistencyError("tensor product action is not global and non-degenerate")
    i = {x: P.class_of[(UNIT, x)] for x in X}
    m = ActionMorphism(act, gamma, i)
    if not m.is_embedding:
        raise ConsistencyError("the unit map into the tensor product is not an embedding")
    return TensorGlobalization(act, monoid, P, gamma, i)


@dataclass(frozen=True)
class TensorComparison:
    universal: Globalization
    tensor: TensorGlobalization
    phi: dict
    injective: bool
    surjective: bool
    phi_is_morphism: bool
    inverse_is_morphism: bool
    nondegenerate: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def isomorphic(self) -> bool:
        return self.bijective and self.phi_is_morphism and self.inverse_is_morphism

    @property
    def level(self) -> str:
        if self.isomorphic:
            return "isomorphic"
        if self.bijective:
            return "bijective-not-iso"
        return "incomparable"


def canonical_map(G: Globalization, T: TensorGlobalization) -> dict:
    """``[δ,x] -> 1⊗x`` and ``[s,x] -> s⊗x``, checked on every class member."""
    out = {}
    for rep, members in G.classes.classes.items():
        vals = {T.class_of(UNIT if m.is_delta else m.tag, m.point) for m in members}
        if len(vals) != 1:
            raise ConsistencyError("canonical map to the tensor product is not well defined")
        out[rep] = vals.pop()
    return out


def compare_tensor_universal(act: PartialAction) -> TensorComparison:
    G = build_globalization(act)
    T = tensor_globalization(act)
    phi = canonical_map(G, T)
    if any(phi[G.delta[x]] != T.i[x] for x in act.carrier):
        raise ConsistencyError("canonical map does not send delta to the unit map")
    image = set(phi.values())
    injective = len(image) == len(phi)
    surjective = image == set(T.action.carrier)
    is_mor = check_morphism(phi, G.action, T.action).status >= Status.MORPHISM
    inv_ok = False
    if injective and surjective:
        inv = {y: x for x, y in phi.items()}
        inv_ok = check_morphism(inv, T.action, G.action).status >= Status.MORPHISM
    nondeg = not degeneracy_split(act).x0
    return TensorComparison(G, T, phi, injective, surjective, is_mor, inv_ok, nondeg)


# -- categories ----------------------------------------------------------------

@dataclass(frozen=True)
class CategoryStructure:
    objects: frozenset
    dom: dict
    ran: dict


def category_structure(S: Semigroupoid) -> CategoryStructure | None:
    """dom/ran read off the identities, or None when ``S`` is not a category."""
    ids = identities(S)
    dom, ran = {}, {}
    for g in S.elements:
        right = [e for e in S.sorted(ids) if e in S.right(g)]
        left = [e for e in S.sorted(ids) if g in S.right(e)]
        if len(right) != 1 or len(left) != 1:
            return None
        dom[g], ran[g] = right[0], left[0]
    for f, g in product(S.elements, repeat=2):
        if ((f, g) in S.composable) != (dom[f] == ran[g]):
            return None
    return CategoryStructure(ids, dom, ran)


@dataclass(frozen=True)
class CategoryActionReport:
    ok: bool
    failed: tuple[str, ...]
    witnesses: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok


def _images(maps, s) -> set:
    return set(maps.get(s, {}).values())


def category_axiom_violations(C: Semigroupoid, carrier, maps, require_global: bool = False) -> list[Violation]:
    """(c1)-(c3), and (c4) when ``require_global``."""
    cs = category_structure(C)
    if cs is None:
        raise SgpdError("structure is not a category")
    carrier = tuple(carrier)
    empty: dict = {}
    out = []
    covered = set()
    for e in cs.objects:
        covered |= _images(maps, e)
    missing = [x for x in carrier if x not in covered]
    if missing:
        out.append(Violation("c1-cover", f"{missing[0]!r} is not in the image of any identity", {"point": missing[0]}))
    for e in C.sorted(cs.objects):
        m = maps.get(e, empty)
        moved = [x for x in carrier if x in m and m[x] != x]
        if moved:
            out.append(Violation("c1-identity", f"identity {e!r} moves {moved[0]!r}", {"element": e, "point": moved[0]}))
    for g in C.elements:
        d = cs.dom[g]
        extra = [x for x in carrier if x in maps.get(g, empty) and x not in maps.get(d, empty)]
        if extra:
            out.append(Violation("c2", f"domain of {g!r} is not inside the domain of {d!r}", {"element": g, "point": extra[0]}))
    laws = action_violations(C, carrier, maps)
    out.extend(Violation("c3", str(v), v.where) for v in laws)
    if require_global:
        for g in C.elements:
            if set(maps.get(g, empty)) != set(maps.get(cs.dom[g], empty)):
                out.append(Violation("c4", f"domain of {g!r} differs from that of {cs.dom[g]!r}", {"element": g}))
    return out


def categorical_violations(S: Semigroupoid, carrier, maps) -> list[Violation]:
    """(C1)-(C3) for a family on a semigroupoid."""
    carrier = tuple(carrier)
    empty: dict = {}
    out = []
    covered = set()
    for s in S.elements:
        covered |= _images(maps, s)
    missing = [x for x in carrier if x not in covered]
    if missing:
        out.append(Violation("C1", f"{missing[0]!r} is not in any image", {"point": missing[0]}))
    ids = identities(S)
    for e in S.sorted(ids):
        m = maps.get(e, empty)
        if any(m[x] != x for x in m):
            out.append(Violation("C2", f"identity {e!r} does not act as the identity", {"element": e}))
    for s in S.elements:
        for e in S.sorted(ids & S.right(s)):
            if not set(maps.get(s, empty)) <= set(maps.get(e, empty)):
                out.append(Violation("C3", f"domain of {s!r} is not inside the domain of {e!r}", {"pair": (s, e)}))
    return out


def check_category_action(
    C: Semigroupoid, carrier, maps, require_global: bool = False
) -> CategoryActionReport:
    """Category-action axioms, cross-checked against 'partial action + (C1)-(C3)'
    (+ (G1), (G2) when ``require_global``)."""
    direct = category_axiom_violations(C, carrier, maps, require_global)
    bridge = list(action_violations(C, carrier, maps))
    if not bridge:
        bridge += categorical_violations(C, carrier, maps)
        if require_global and not bridge:
            bridge += global_violations(PartialAction(C, carrier, maps))
    if (not direct) != (not bridge):
        raise ConsistencyError("category-action axioms and the categorical conditions disagree")
    failed = tuple(dict.fromkeys(v.rule for v in direct))
    return CategoryActionReport(not direct, failed, tuple(direct))


def check_globalization_categorical(act: PartialAction) -> bool:
    """Whether the universal globalization of a categorical partial category
    action is again categorical (expected always)."""
    if not check_category_action(act.sgpd, act.carrier, act.maps):
        raise ActionError(Violation("category", "input is not a partial category action"))
    G = build_globalization(act)
    return not categorical_violations(act.sgpd, G.action.carrier, G.action.maps)


# -- the two-idempotent obstruction ----------------------------------------------

@dataclass(frozen=True)
class ObstructionResult:
    candidates: int
    counterexamples: tuple


def initial_nondegenerate_candidates(
    act: PartialAction, target: PartialAction, i: dict, j: dict, max_size: int
) -> ObstructionResult:
    """Search non-degenerate global actions E' (carrier size <= ``max_size``)
    with an embedding ``d: X -> E'`` admitting morphisms ``i', j': E' -> target``
    with ``i' o d = i`` and ``j' o d = j``.

    Returns how many (E', d) were examined and any that pass.
    """
    from .oracle import EnumerationBudget, enumerate_partial_actions

    S = act.sgpd
    budget = EnumerationBudget(max_carrier=max_size)
    seen = 0
    found = []
    for n in range(len(act.carrier), max_size + 1):
        for glob in enumerate_partial_actions(S, n, budget):
            if not is_global(glob) or degeneracy_split(glob).x0:
                continue
            for image in product(glob.carrier, repeat=len(act.carrier)):
                d = dict(zip(act.carrier, image))
                try:
                    dm = ActionMorphism(act, glob, d)
                except MorphismError:
                    continue
                if not dm.is_embedding:
                    continue
                seen += 1
                fi = {d[x]: i[x] for x in act.carrier}
                fj = {d[x]: j[x] for x in act.carrier}
                if enumerate_morphisms(glob, target, fixed=fi) and enumerate_morphisms(glob, target, fixed=fj):
                    found.append((glob, d))
    return ObstructionResult(seen, tuple(found))
