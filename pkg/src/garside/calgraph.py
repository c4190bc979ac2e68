"""Local pieces of the additional length graph.

Vertices are the classes g<Delta>; each class has a unique representative of
infimum 0.  Two classes are adjacent when the representative of one reaches
the other by right multiplication with a proper simple, or with an
absorbable element.  Absorbability in rank >= 3 is only semi-decidable here,
so balls are built against an explicit pool of certified absorbables: every
ball is a subgraph of the real graph and its distances are upper bounds of
the true ones.  The group acts by left multiplication (``act``).

Neighbor generation walks simple edges in both directions (right
multiplication by m and by m^{-1}; the latter lands on classes whose own
representative reaches us by a simple) and pool edges through y and y^{-1}
(the inverse of an absorbable is absorbable, with certificate x*y).
Vertex and edge lists are canonically ordered so output never depends on
scheduling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .absorb import AbsorptionCertificate
from .coxeter import ArtinSystem
from .errors import BudgetExceededError, PreconditionError
from .garside import GroupElement
from .util import enumeration_budget


@dataclass(frozen=True)
class CalVertex:
    """A vertex, held by its infimum-0 coset representative."""

    rep: GroupElement

    def __post_init__(self):
        if self.rep.inf != 0:
            raise PreconditionError("vertex representative must have infimum 0")

    def sort_key(self):
        return self.rep.sort_key()

    def to_json(self) -> dict:
        return self.rep.to_json()


def vertex_of(g: GroupElement) -> CalVertex:
    """The class g<Delta>: representative g * Delta^{-inf(g)}."""
    return CalVertex(g * GroupElement.delta_power(g.system, -g.inf))


def base_vertex(system: ArtinSystem) -> CalVertex:
    return CalVertex(GroupElement.identity(system))


def act(g: GroupElement, v: CalVertex) -> CalVertex:
    """The left-multiplication action on classes."""
    return vertex_of(g * v.rep)


@dataclass(frozen=True)
class PoolEntry:
    """A certified absorbable usable for type-2 edges."""

    element: GroupElement
    certificate: AbsorptionCertificate | None  # None: rank-2 classifier approved

    @staticmethod
    def from_element(element: GroupElement, search_radius: int = 2) -> "PoolEntry":
        from .absorb import bounded_search, classify_absorbable_small

        if element.system.rank <= 2:
            if not classify_absorbable_small(element):
                raise PreconditionError(f"{element!r} is not absorbable (exact classifier)")
            return PoolEntry(element, None)
        cert = bounded_search(element, search_radius)
        if cert is None:
            raise PreconditionError(
                f"no certificate found for {element!r} within radius {search_radius}"
            )
        return PoolEntry(element, cert)


@dataclass(frozen=True)
class CalEdge:
    source: CalVertex
    target: CalVertex
    kind: str  # "simple" | "absorbable"
    label: GroupElement  # rep(source) * label lies in the class of target
    certificate: AbsorptionCertificate | None = None  # absorbable edges only

    def verify(self) -> bool:
        if vertex_of(self.source.rep * self.label) != self.target:
            return False
        if self.kind == "absorbable" and self.certificate is not None:
            return self.certificate.absorbed == self.label and self.certificate.verify()
        return True

    def to_json(self, index: dict[CalVertex, int]) -> dict:
        return {
            "from": index[self.source],
            "to": index[self.target],
            "kind": self.kind,
            "label": self.label.to_json(),
        }


def neighbors(v: CalVertex, pool: tuple[PoolEntry, ...] = ()) -> list[CalEdge]:
    """All simple-edge neighbors plus pool-edge neighbors of ``v``.

    Edges are reported with the orientation that realizes them (the label
    right-multiplies the source representative into the target class)."""
    system = v.rep.system
    out: list[CalEdge] = []
    seen_pairs: set = set()

    def push(label: GroupElement, kind: str, forward: bool, cert=None):
        if forward:
            w = vertex_of(v.rep * label)
            edge = CalEdge(v, w, kind, label, cert)
        else:
            # v.rep * label^{-1} lands in class w; the honest edge runs w -> v
            # with the Delta-adjusted label tau^j(label), j = -inf at w.
            target_rep = v.rep * label.inv()
            j = -target_rep.inf
            w = CalVertex(target_rep * GroupElement.delta_power(system, -target_rep.inf))
            edge = CalEdge(w, v, kind, label.tau(j), cert)
        other = edge.source if edge.target == v else edge.target
        if other == v:
            return
        key = frozenset((edge.source.rep.sort_key(), edge.target.rep.sort_key()))
        if key in seen_pairs:
            return
        seen_pairs.add(key)
        if not edge.verify():
            raise PreconditionError("generated edge failed verification")
        out.append(edge)

    simples = [w for w in system.all_elements() if not w.is_identity and not w.is_longest]
    for m in simples:
        push(GroupElement.lift(m), "simple", True)
    for m in simples:
        push(GroupElement.lift(m), "simple", False)
    for entry in pool:
        push(entry.element, "absorbable", True, entry.certificate)
        inv_cert = entry.certificate.inverse() if entry.certificate is not None else None
        push(entry.element.inv(), "absorbable", True, inv_cert)
    return out


@dataclass(frozen=True)
class CalBall:
    center: CalVertex
    radius: int
    vertices: tuple[CalVertex, ...]
    edges: tuple[CalEdge, ...]
    pool: tuple[PoolEntry, ...]

    def vertex_index(self) -> dict[CalVertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def ball(
    center: CalVertex,
    radius: int,
    pool: tuple[PoolEntry, ...] = (),
    budget: int | None = None,
) -> CalBall:
    """Breadth-first closure of ``center`` under :func:`neighbors`, with all
    edges between member vertices included.  Raises (with the partial result
    attached) as soon as the vertex budget is exceeded."""
    if radius < 0:
        raise PreconditionError("radius must be nonnegative")
    cap = enumeration_budget(budget)
    dist = {center: 0}
    order = [center]
    frontier = [center]
    edges: dict = {}
    for layer in range(radius + 1):
        nxt = []
        for v in sorted(frontier, key=CalVertex.sort_key):
            for e in neighbors(v, pool):
                other = e.target if e.source == v else e.source
                if other not in dist:
                    if layer == radius:
                        continue  # would leave the ball
                    dist[other] = layer + 1
                    order.append(other)
                    nxt.append(other)
                    if len(order) > cap:
                        raise BudgetExceededError(
                            f"ball exceeded the vertex budget {cap}",
                            partial=(tuple(order), layer),
                        )
                key = frozenset((e.source.rep.sort_key(), e.target.rep.sort_key()))
                if other in dist and key not in edges:
                    edges[key] = e
        frontier = nxt
        if not frontier:
            break
    ordered_edges = tuple(
        sorted(edges.values(), key=lambda e: (e.source.sort_key(), e.target.sort_key()))
    )
    return CalBall(
        center=center,
        radius=radius,
        vertices=tuple(order),
        edges=ordered_edges,
        pool=pool,
    )


def distance_upper_bound(u: CalVertex, v: CalVertex, via) -> int:
    """Length of a certified chain from u to v: ``via`` is either an
    absorbable decomposition or an iterable of proper simples.  Each factor
    contributes one edge; the chain must actually connect the classes."""
    from .absorb import AbsorbableDecomposition

    system = u.rep.system
    if isinstance(via, AbsorbableDecomposition):
        if not via.verify():
            raise PreconditionError("decomposition failed re-verification")
        factors = list(via.factors)
    else:
        factors = list(via)
        for f in factors:
            if not (f.is_simple and not f.is_identity):
                raise PreconditionError("simple-path factors must be proper simples")
    acc = u.rep
    for f in factors:
        acc = acc * f
    if vertex_of(acc) != v:
        raise PreconditionError("the given chain does not connect the two vertices")
    return len(factors)


# ---------------------------------------------------------------------------
# Serialization.


def export_ball(b: CalBall, fmt: str) -> str:
    if fmt == "json":
        index = b.vertex_index()
        payload = {
            "system": b.center.rep.system.name,
            "center": 0,
            "radius": b.radius,
            "vertices": [v.to_json() for v in b.vertices],
            "edges": [e.to_json(index) for e in b.edges],
            "pool": [p.element.to_json() for p in b.pool],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "dot":
        index = b.vertex_index()
        lines = ["graph cal_ball {"]
        for v, i in index.items():
            lines.append(f'  {i} [label="{v.rep.nf_text()}"];')
        for e in b.edges:
            style = "solid" if e.kind == "simple" else "dashed"
            lines.append(
                f'  {index[e.source]} -- {index[e.target]} '
                f'[kind="{e.kind}", style={style}, label="{e.label.nf_text()}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def ball_from_json(system: ArtinSystem, payload) -> CalBall:
    if isinstance(payload, str):
        payload = json.loads(payload)
    vertices = tuple(CalVertex(GroupElement.from_json(system, v)) for v in payload["vertices"])
    edges = tuple(
        CalEdge(
            source=vertices[e["from"]],
            target=vertices[e["to"]],
            kind=e["kind"],
            label=GroupElement.from_json(system, e["label"]),
        )
        for e in payload["edges"]
    )
    pool = tuple(
        PoolEntry.from_element(GroupElement.from_json(system, p)) for p in payload["pool"]
    )
    return CalBall(
        center=vertices[payload["center"]],
        radius=payload["radius"],
        vertices=vertices,
        edges=edges,
        pool=pool,
    )
