"""Morphisms, embeddings and isomorphisms between partial actions."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import IntEnum

from .action import PartialAction, Point, is_global, restrict
from .errors import BudgetExceeded, ConsistencyError, MorphismError, Violation


class Status(IntEnum):
    NOT_MORPHISM = 0
    MORPHISM = 1
    EMBEDDING = 2
    ISOMORPHISM = 3

    def __str__(self) -> str:
        return self.name.lower().replace("_", "-")


@dataclass(frozen=True)
class MorphismReport:
    status: Status
    witness: Violation | None = None


def _check_shape(func: Mapping, source: PartialAction, target: PartialAction) -> None:
    if source.sgpd != target.sgpd:
        raise MorphismError("source and target are actions of different semigroupoids")
    for x in source.carrier:
        if x not in func:
            raise MorphismError(Violation("shape", f"map is not defined at {x!r}", {"point": x}))
        if func[x] not in target.position:
            raise MorphismError(Violation("shape", f"{x!r} maps to {func[x]!r}, outside the target", {"point": x}))
    extra = set(func) - set(source.carrier)
    if extra:
        raise MorphismError(f"map is defined on {sorted(extra, key=repr)[0]!r}, outside the source")


def check_morphism(func: Mapping[Point, Point], source: PartialAction, target: PartialAction) -> MorphismReport:
    """Classify ``func``; each level presumes the previous one held."""
    _check_shape(func, source, target)
    S = source.sgpd
    for s in S.elements:
        b_s = target.maps[s]
        for x, ax in source.maps[s].items():
            fx = func[x]
            if fx not in b_s:
                return MorphismReport(
                    Status.NOT_MORPHISM,
                    Violation("morphism", f"{x!r} is in the domain of {s!r} but its image {fx!r} is not", {"element": s, "point": x}),
                )
            if func[ax] != b_s[fx]:
                return MorphismReport(
                    Status.NOT_MORPHISM,
                    Violation("morphism", f"{s!r} at {x!r}: maps to {func[ax]!r} one way and {b_s[fx]!r} the other", {"element": s, "point": x}),
                )

    seen: dict = {}
    for x in source.carrier:
        fx = func[x]
        if fx in seen:
            return MorphismReport(
                Status.MORPHISM,
                Violation("injective", f"{seen[fx]!r} and {x!r} both map to {fx!r}", {"points": (seen[fx], x)}),
            )
        seen[fx] = x
    img = set(seen)
    for s in S.elements:
        b_s = target.maps[s]
        pulled = {x for x in source.carrier if func[x] in b_s and b_s[func[x]] in img}
        if pulled != source.dom(s):
            x = next(p for p in source.carrier if p in pulled ^ source.dom(s))
            return MorphismReport(
                Status.MORPHISM,
                Violation("embedding", f"domain of {s!r} is not the pullback of the target domain; first difference at {x!r}", {"element": s, "point": x}),
            )

    if len(img) != len(target.carrier):
        y = next(p for p in target.carrier if p not in img)
        return MorphismReport(Status.EMBEDDING, Violation("surjective", f"{y!r} is not hit", {"point": y}))
    return MorphismReport(Status.ISOMORPHISM)


@dataclass(frozen=True)
class ActionMorphism:
    """A morphism of partial actions whose status is always recomputed."""

    source: PartialAction
    target: PartialAction
    func: dict
    status: Status = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "func", dict(self.func))
        report = check_morphism(self.func, self.source, self.target)
        if report.status is Status.NOT_MORPHISM:
            raise MorphismError(report.witness)
        object.__setattr__(self, "status", report.status)

    def __call__(self, x: Point) -> Point:
        return self.func[x]

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(self.func.items())))

    @property
    def is_embedding(self) -> bool:
        return self.status >= Status.EMBEDDING

    @property
    def is_isomorphism(self) -> bool:
        return self.status is Status.ISOMORPHISM


def identity(act: PartialAction) -> ActionMorphism:
    return ActionMorphism(act, act, {x: x for x in act.carrier})


def compose(psi: ActionMorphism, phi: ActionMorphism) -> ActionMorphism:
    """``psi o phi``."""
    if phi.target != psi.source:
        raise MorphismError("cannot compose: target of the first map is not the source of the second")
    out = ActionMorphism(phi.source, psi.target, {x: psi.func[y] for x, y in phi.func.items()})
    if phi.is_embedding and psi.is_embedding and not out.is_embedding:
        raise ConsistencyError("composite of embeddings is not an embedding")
    return out


def inverse(m: ActionMorphism) -> ActionMorphism:
    """Two-sided inverse; raises :class:`MorphismError` if ``m`` is not
    bijective or its inverse function is not a morphism."""
    inv = {y: x for x, y in m.func.items()}
    if len(inv) != len(m.source.carrier) or len(inv) != len(m.target.carrier):
        raise MorphismError("map is not bijective")
    return ActionMorphism(m.target, m.source, inv)


def has_inverse_morphism(m: ActionMorphism) -> bool:
    try:
        inverse(m)
    except MorphismError:
        return False
    return True


def check_iso_to_restriction(phi: ActionMorphism, check_target_global: bool = True) -> bool:
    """Whether the source of ``phi`` is isomorphic to a restriction of its
    (global) target, decided by ``phi`` being an embedding.

    When it is, the isomorphism onto the restriction to the image is built
    and checked, and so is the converse route through the inclusion.
    """
    tgt = phi.target
    if check_target_global and not is_global(tgt):
        raise MorphismError(Violation("global", "target action is not global"))
    if not phi.is_embedding:
        return False
    image = restrict(tgt, set(phi.func.values()), check_global=False)
    onto = ActionMorphism(phi.source, image, dict(phi.func))
    if not onto.is_isomorphism:
        raise ConsistencyError("embedding is not an isomorphism onto the restriction to its image")
    inclusion = ActionMorphism(image, tgt, {z: z for z in image.carrier})
    back = compose(inclusion, onto)
    if not back.is_embedding or back.func != phi.func:
        raise ConsistencyError("inclusion after the isomorphism does not give back an embedding")
    return True


def enumerate_morphisms(
    source: PartialAction,
    target: PartialAction,
    fixed: Mapping[Point, Point] | None = None,
    budget: int | None = None,
) -> list[dict]:
    """All morphisms ``source -> target`` agreeing with ``fixed``.

    Backtracking over the fixed points, then the rest in carrier order; a partial assignment
    is dropped as soon as one of the morphism conditions involving only
    assigned points fails.  ``budget`` caps the number of search nodes and
    raises :class:`BudgetExceeded` when hit.
    """
    if source.sgpd != target.sgpd:
        raise MorphismError("source and target are actions of different semigroupoids")
    fixed = dict(fixed or {})
    S = source.sgpd
    points = list(source.carrier)
    stray = [x for x in fixed if x not in source.position]
    if stray:
        raise MorphismError(f"fixed value given at {stray[0]!r}, outside the source")
    # allowed[x]: target points lying in every domain x must land in
    allowed = {}
    for x in points:
        cand = set(target.carrier)
        for s in S.elements:
            if x in source.maps[s]:
                cand &= target.dom(s)
        allowed[x] = [y for y in target.carrier if y in cand]
    for x, y in fixed.items():
        if y not in allowed[x]:
            return []
    order = [x for x in points if x in fixed] + [x for x in points if x not in fixed]
    # checks[x]: every (s, a, b) with a -s-> b touching x
    checks: dict = {x: [] for x in points}
    for s in S.elements:
        for a, b in source.maps[s].items():
            checks[a].append((s, a, b))
            if b != a:
                checks[b].append((s, a, b))

    func: dict = {}
    found: list[dict] = []
    nodes = 0

    def consistent(x) -> bool:
        for s, a, b in checks[x]:
            if a in func and b in func and target.maps[s][func[a]] != func[b]:
                return False
        return True

    def search(i: int) -> None:
        nonlocal nodes
        if i == len(order):
            found.append(dict(func))
            return
        x = order[i]
        values = [fixed[x]] if x in fixed else allowed[x]
        for y in values:
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"morphism search exceeded {budget} nodes")
            func[x] = y
            if consistent(x):
                search(i + 1)
            del func[x]

    search(0)
    return [{x: f[x] for x in points} for f in found]
