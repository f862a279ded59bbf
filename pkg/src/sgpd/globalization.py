"""Universal globalization of a partial action.

Pipeline: the relation R on S (``compute_R``), the rho-domains, the tagged
set D (``build_D``), its quotient by the action-generated equivalence
(``compute_approx``), and finally the global action on the quotient E
together with the embedding ``delta: X -> E`` (``build_globalization``).
"""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .action import PartialAction, degeneracy_split, is_global
from .errors import ActionError, BudgetExceeded, ConsistencyError, MorphismError, Violation
from .morphism import ActionMorphism, enumerate_morphisms
from .partition import Partition
from .semigroupoid import Element, Semigroupoid

DEFAULT_FUNCTION_BUDGET = 10**6


class _Delta:
    """The extra tag ``δ`` used for the copy of X inside D."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "δ"

    __str__ = __repr__

    def __reduce__(self):
        return "DELTA"


DELTA = _Delta()


class DPair(NamedTuple):
    tag: Hashable  # DELTA or an element of S
    point: Hashable

    @property
    def is_delta(self) -> bool:
        return self.tag is DELTA

    def __str__(self) -> str:
        return f"({self.tag},{self.point})"


def class_label(rep: DPair) -> str:
    return f"[{rep.tag},{rep.point}]"


def compute_R(S: Semigroupoid) -> Partition:
    """Equivalence on S generated by: equal non-empty right-composable sets,
    and ``ut ~ t`` for every composable (u, t)."""
    pairs = []
    for i, s in enumerate(S.elements):
        for t in S.elements[i + 1:]:
            if S.right(s) and S.right(s) == S.right(t):
                pairs.append((s, t))
    for u, t in S.pairs:
        pairs.append((S.product[(u, t)], t))
    R = Partition.closure(S.elements, pairs)
    for members in R:
        if len({S.right(m) for m in members}) > 1:
            raise ConsistencyError(f"R-class {members!r} mixes different right-composable sets")
    return R


def _rho(act: PartialAction, R: Partition, s: Element) -> frozenset:
    S = act.sgpd
    out: set = set()
    for t in R.classes[R.class_of[s]]:
        out |= act.dom(t)
    for t in S.right(s):
        out |= act.image(t)
    return frozenset(out)


def rho_domain(act: PartialAction, R: Partition, s: Element) -> frozenset:
    """Union of the domains over the R-class of ``s`` and the images of the
    elements right-composable with ``s``."""
    value = _rho(act, R, s)
    for t in R.classes[R.class_of[s]]:
        if _rho(act, R, t) != value:
            raise ConsistencyError(f"rho-domain of {s!r} depends on the class representative ({t!r})")
    return value


def build_D(act: PartialAction, R: Partition) -> tuple[DPair, ...]:
    """Tagged pairs: every ``(δ, x)``, then ``(s, x)`` for x in the
    rho-domain of s, in element order x carrier order."""
    out = [DPair(DELTA, x) for x in act.carrier]
    for s in act.sgpd.elements:
        rho = rho_domain(act, R, s)
        out.extend(DPair(s, x) for x in act.carrier if x in rho)
    return tuple(out)


def approx_generators(act: PartialAction) -> list[tuple[DPair, DPair]]:
    S = act.sgpd
    gens = []
    for s in S.elements:
        for x, y in act.maps[s].items():
            gens.append((DPair(DELTA, y), DPair(s, x)))
    for t, u in S.pairs:
        tu = S.product[(t, u)]
        for x, y in act.maps[u].items():
            gens.append((DPair(tu, x), DPair(t, y)))
    return gens


def compute_approx(act: PartialAction, D: tuple[DPair, ...]) -> Partition:
    """Equivalence on D generated by ``(δ, α_s x) ~ (s, x)`` and
    ``(tu, x) ~ (t, α_u x)``."""
    members = set(D)
    gens = approx_generators(act)
    for a, b in gens:
        if a not in members or b not in members:
            raise ConsistencyError(f"generating pair {a}, {b} leaves D")
    P = Partition.closure(D, gens)
    for cls in P:
        deltas = [m for m in cls if m.is_delta]
        if len(deltas) > 1:
            raise ConsistencyError(f"class {class_label(cls[0])} holds several δ-pairs")
        inside = [m for m in cls if not m.is_delta and m.point in act.maps[m.tag]]
        tagged = [m for m in cls if not m.is_delta]
        if inside and len(inside) != len(tagged):
            raise ConsistencyError(f"class {class_label(cls[0])} is only partly inside the action domains")
        if len({act.maps[m.tag][m.point] for m in inside}) > 1:
            raise ConsistencyError(f"class {class_label(cls[0])} has members acting differently")
    return P


@dataclass(frozen=True, eq=False)
class Globalization:
    """The universal globalization ``(delta, beta, E)`` of ``base``.

    ``action`` is beta as a :class:`PartialAction` whose carrier is the tuple
    of class identifiers (each the first member of its class in D order).
    """

    base: PartialAction
    R: Partition
    rho: dict
    D: tuple
    classes: Partition
    action: PartialAction
    delta: dict

    @property
    def E(self) -> tuple:
        return self.action.carrier

    def sE(self, s: Element) -> frozenset:
        return self.action.dom(s)

    def beta(self, s: Element) -> dict:
        return self.action.maps[s]

    @cached_property
    def delta_morphism(self) -> ActionMorphism:
        return ActionMorphism(self.base, self.action, self.delta)

    def class_of(self, tag: Hashable, point: Hashable) -> DPair:
        return self.classes.class_of[DPair(tag, point)]

    def members(self, cls: DPair) -> tuple[DPair, ...]:
        return self.classes.classes[cls]


def build_globalization(act: PartialAction) -> Globalization:
    S = act.sgpd
    R = compute_R(S)
    rho = {s: rho_domain(act, R, s) for s in S.elements}
    D = build_D(act, R)
    P = compute_approx(act, D)
    cls = P.class_of

    maps: dict = {s: {} for s in S.elements}
    for s in S.elements:
        right = S.right(s)
        for rep, members in P.classes.items():
            outputs = set()
            for m in members:
                if m.is_delta:
                    if m.point in rho[s]:
                        outputs.add(cls[DPair(s, m.point)])
                elif m.tag in right:
                    st = DPair(S.product[(s, m.tag)], m.point)
                    if st not in cls:
                        raise ConsistencyError(f"{st} is missing from D")
                    outputs.add(cls[st])
            if len(outputs) > 1:
                raise ConsistencyError(f"beta_{s} is not well defined on {class_label(rep)}")
            if outputs:
                maps[s][rep] = outputs.pop()

    try:
        beta = PartialAction(S, P.representatives, maps)
    except ActionError as exc:
        raise ConsistencyError(f"constructed beta is not a partial action: {exc}") from exc
    report = is_global(beta)
    if not report:
        raise ConsistencyError(f"constructed beta is not global: {report.witness}")
    delta = {x: cls[DPair(DELTA, x)] for x in act.carrier}
    G = Globalization(act, R, rho, D, P, beta, delta)
    try:
        m = G.delta_morphism
    except MorphismError as exc:
        raise ConsistencyError(f"delta is not a morphism: {exc}") from exc
    if not m.is_embedding:
        raise ConsistencyError("delta is not an embedding")
    return G


def induced_morphism(G: Globalization, phi: ActionMorphism) -> ActionMorphism:
    """The factorization ``Phi: E -> Z`` of ``phi: X -> Z`` through delta."""
    if phi.source != G.base:
        raise MorphismError("morphism does not start at the globalized action")
    target = phi.target
    report = is_global(target)
    if not report:
        raise MorphismError(Violation("global", f"target action is not global: {report.witness}"))
    func = {}
    for rep, members in G.classes.classes.items():
        values = set()
        for m in members:
            fx = phi.func[m.point]
            if m.is_delta:
                values.add(fx)
            else:
                theta = target.maps[m.tag]
                if fx not in theta:
                    raise ConsistencyError(f"image of {m.point!r} is outside the domain of {m.tag!r} in the target")
                values.add(theta[fx])
        if len(values) != 1:
            raise ConsistencyError(f"induced map is not well defined on {class_label(rep)}")
        func[rep] = values.pop()
    try:
        Phi = ActionMorphism(G.action, target, func)
    except MorphismError as exc:
        raise ConsistencyError(f"induced map is not a morphism: {exc}") from exc
    if any(func[G.delta[x]] != phi.func[x] for x in G.base.carrier):
        raise ConsistencyError("induced map does not extend phi")
    return Phi


def commuting_morphisms(
    G: Globalization,
    target: PartialAction,
    phi: dict,
    budget: int = DEFAULT_FUNCTION_BUDGET,
) -> list[dict]:
    """Every morphism ``Psi: (beta, E) -> target`` with ``Psi o delta = phi``."""
    fixed = {}
    for x, dx in G.delta.items():
        fixed[dx] = phi[x]
    return enumerate_morphisms(G.action, target, fixed=fixed, budget=budget)


def forced_by_delta(G: Globalization) -> bool:
    """Every class is some ``delta(x)`` or ``beta_s(delta(x))``, which pins
    down any morphism agreeing with phi on ``delta(X)``."""
    hit = set(G.delta.values())
    for s in G.base.sgpd.elements:
        b = G.beta(s)
        hit.update(b[dx] for dx in G.delta.values() if dx in b)
    return hit == set(G.E)


def verify_universality(
    G: Globalization,
    phi: ActionMorphism,
    Phi: ActionMorphism,
    budget: int = DEFAULT_FUNCTION_BUDGET,
    structural_fallback: bool = True,
) -> bool:
    """Whether ``Phi`` is the only morphism E -> Z with ``Phi o delta = phi``.

    Searches all candidate maps exhaustively; when the search exceeds
    ``budget`` nodes it falls back to :func:`forced_by_delta`.
    """
    if Phi.source is not G.action and Phi.source != G.action:
        return False
    if any(Phi.func[G.delta[x]] != phi.func[x] for x in G.base.carrier):
        return False
    try:
        found = commuting_morphisms(G, Phi.target, phi.func, budget)
    except BudgetExceeded:
        if not structural_fallback:
            raise
        return forced_by_delta(G)
    return found == [Phi.func]


def degeneracy_correspondence(G: Globalization) -> bool:
    """delta maps the degenerate part of X exactly onto that of E."""
    x0 = degeneracy_split(G.base).x0
    e0 = degeneracy_split(G.action).x0
    image = [G.delta[x] for x in x0]
    return len(set(image)) == len(x0) and set(image) == set(e0)
