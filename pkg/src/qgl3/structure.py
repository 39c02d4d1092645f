"""Submodule-structure graphs of Borel-induced modules and the layered
good-filtration graphs of induced modules.

Nodes are composition factors (thickened-kernel simples) or twisted-tensor
filtration factors; a directed edge upper -> lower records a nonsplit
extension of the lower factor by the upper one.  Edge sets and layers are
transcribed case by case from the known diagrams; the mixed congruence
variants of the nine-factor filtrations interpolate the two printed
extremes (deleting the edge named by the violated congruence and attaching
the orphaned nodes one layer further) and are flagged as reconstructions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from qgl3.charring import FormalChar, chi_l, weyl_char
from qgl3.decomp import (
    DecompResult,
    chi_decomposition,
    hat_simple_char,
    zhat_char,
    zhat_factors,
)
from qgl3.homs import zhat_head_weight
from qgl3.lattice import (
    FacetType,
    RHO,
    Weight,
    classify_restricted,
    decompose,
    dual_weight,
)

G1B_SIMPLE = "G1BSimple"
NABLA_L = "NablaL"


@dataclass(frozen=True)
class GraphNode:
    id: str
    weight: Weight
    kind: str
    layer: int


@dataclass(frozen=True)
class ModuleGraph:
    lam: Weight
    l: int
    kind: str
    nodes: tuple[GraphNode, ...]
    edges: tuple[tuple[str, str], ...]

    def node_by_id(self, node_id: str) -> GraphNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def node_weights(self) -> list[Weight]:
        return [n.weight for n in self.nodes]

    def sources(self) -> list[GraphNode]:
        lowers = {v for _, v in self.edges}
        return [n for n in self.nodes if n.id not in lowers]

    def sinks(self) -> list[GraphNode]:
        uppers = {u for u, _ in self.edges}
        return [n for n in self.nodes if n.id not in uppers]

    def character(self) -> FormalChar:
        out = FormalChar()
        for n in self.nodes:
            if self.kind == G1B_SIMPLE:
                out = out + hat_simple_char(n.weight, self.l)
            else:
                out = out + chi_l(n.weight, self.l)
        return out

    def to_jsonable(self) -> dict:
        return {
            "lambda": list(self.lam),
            "l": self.l,
            "kind": self.kind,
            "nodes": [
                {"id": n.id, "weight": list(n.weight), "kind": n.kind, "layer": n.layer}
                for n in self.nodes
            ],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable())

    @classmethod
    def from_jsonable(cls, data: dict) -> "ModuleGraph":
        return cls(
            lam=Weight(*data["lambda"]),
            l=data["l"],
            kind=data["kind"],
            nodes=tuple(
                GraphNode(n["id"], Weight(*n["weight"]), n["kind"], n["layer"])
                for n in data["nodes"]
            ),
            edges=tuple((u, v) for u, v in data["edges"]),
        )

    def to_dot(self) -> str:
        name = f"{'zhat' if self.kind == G1B_SIMPLE else 'lfilt'}_{self.lam.a}_{self.lam.b}_l{self.l}"
        label = "L̂" if self.kind == G1B_SIMPLE else "∇_l"
        lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
        for n in sorted(self.nodes, key=lambda n: (n.layer, n.id)):
            lines.append(f'  {n.id} [label="{label}({n.weight.a},{n.weight.b})"];')
        for u, v in self.edges:
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines)


# Edge and layer tables by factor position.  For Borel-induced modules the
# positions index zhat_factors (socle first); for induced-module filtrations
# they index chi_decomposition factors.

_ZHAT_CHAIN_EDGES = ((4, 3), (3, 2), (2, 1))
_ZHAT_CHAIN_LAYERS = {4: 0, 3: 1, 2: 2, 1: 3}
_ZHAT_DIAMOND_EDGES = ((4, 3), (4, 2), (3, 1), (2, 1))
_ZHAT_DIAMOND_LAYERS = {4: 0, 3: 1, 2: 1, 1: 2}

_DOWN_EDGES = (
    (9, 6), (9, 7), (9, 8),
    (6, 5), (6, 2), (7, 2), (7, 4), (8, 4), (8, 3),
    (5, 4), (3, 2),
    (4, 1), (2, 1),
)
_DOWN_LAYERS = {9: 0, 6: 1, 7: 1, 8: 1, 5: 2, 3: 2, 4: 3, 2: 3, 1: 4}

_UP_EDGES = (
    (3, 2), (3, 9),
    (2, 8), (2, 5), (2, 1), (9, 6), (9, 8), (9, 7),
    (1, 7), (6, 5),
    (7, 4), (8, 4), (5, 4),
)
_UP_LAYERS = {3: 0, 2: 1, 9: 1, 1: 2, 6: 2, 7: 3, 8: 3, 5: 3, 4: 4}

# Fully non-congruent variants of the nine-factor filtration diagrams.
_DOWN_LAYERS_LOOSE = {9: 0, 5: 1, 6: 1, 7: 1, 8: 1, 3: 1, 4: 2, 2: 2, 1: 3}
_UP_LAYERS_LOOSE = {3: 0, 2: 1, 9: 1, 1: 2, 7: 2, 8: 2, 5: 2, 6: 2, 4: 3}

_NABLA_CHAIN_EDGES = ((1, 2), (2, 3), (3, 4))
_NABLA_CHAIN_LAYERS = {1: 0, 2: 1, 3: 2, 4: 3}
_NABLA_DIAMOND_EDGES = ((1, 2), (1, 3), (2, 4), (3, 4))
_NABLA_DIAMOND_LAYERS = {1: 0, 2: 1, 3: 1, 4: 2}


def _build(
    lam: Weight,
    l: int,
    kind: str,
    factors: list[Weight],
    edges,
    layers: dict[int, int],
    keep: set[int] | None = None,
) -> ModuleGraph:
    indices = sorted(layers) if keep is None else sorted(keep)
    nodes = tuple(
        GraphNode(f"mu{i}", factors[i - 1], kind, layers[i]) for i in indices
    )
    kept = {i for i in indices}
    edge_ids = tuple(
        (f"mu{u}", f"mu{v}") for u, v in edges if u in kept and v in kept
    )
    return ModuleGraph(Weight(*lam), l, kind, nodes, edge_ids)


def zhat_structure(lam: Weight, l: int) -> ModuleGraph:
    """Submodule-structure graph of the Borel-induced module of weight lam."""
    lam = Weight(*lam)
    factors = zhat_factors(lam, l)
    facet = classify_restricted(decompose(lam, l).restricted, l)
    if facet is FacetType.VERTEX:
        return _build(lam, l, G1B_SIMPLE, factors, (), {1: 0})
    if facet in (FacetType.RIGHT_WALL, FacetType.LEFT_WALL):
        return _build(lam, l, G1B_SIMPLE, factors, _ZHAT_CHAIN_EDGES, _ZHAT_CHAIN_LAYERS)
    if facet is FacetType.HORIZONTAL_WALL:
        return _build(lam, l, G1B_SIMPLE, factors, _ZHAT_DIAMOND_EDGES, _ZHAT_DIAMOND_LAYERS)
    if facet is FacetType.DOWN_ALCOVE:
        return _build(lam, l, G1B_SIMPLE, factors, _DOWN_EDGES, _DOWN_LAYERS)
    return _build(lam, l, G1B_SIMPLE, factors, _UP_EDGES, _UP_LAYERS)


def _nine_factor_edges(base, congruent_a, congruent_b, drop_a, add_a, drop_b, add_b):
    edges = list(base)
    if not congruent_a:
        edges.remove(drop_a)
        edges.extend(add_a)
    if not congruent_b:
        edges.remove(drop_b)
        edges.extend(add_b)
    return tuple(edges)


def nabla_l_filtration(lam: Weight, l: int) -> ModuleGraph:
    """Layered graph of the good twisted-tensor filtration of the induced
    module of highest weight lam.

    Factors whose classical part is non-dominant or singular are omitted
    together with their incident edges.  On the nine-factor cases the edge
    set depends on the congruence class mod l of the classical coordinates;
    the two mixed cases are reconstructions interpolating the printed
    extreme diagrams.
    """
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"nabla_l_filtration needs a dominant weight, got {lam}")
    dec = chi_decomposition(lam, l)
    factors = list(dec.factors)
    (a, b), _ = decompose(lam, l)
    facet = dec.facet

    if facet is FacetType.VERTEX:
        return _build(lam, l, NABLA_L, factors, (), {1: 0})

    if facet in (FacetType.RIGHT_WALL, FacetType.LEFT_WALL, FacetType.HORIZONTAL_WALL):
        is_chain = (
            facet is FacetType.RIGHT_WALL
            and a % l == l - 1
            or facet is FacetType.LEFT_WALL
            and b % l == l - 1
        )
        edges = _NABLA_CHAIN_EDGES if is_chain else _NABLA_DIAMOND_EDGES
        layers = _NABLA_CHAIN_LAYERS if is_chain else _NABLA_DIAMOND_LAYERS
        keep = _surviving_indices(dec)
        return _build(lam, l, NABLA_L, factors, edges, layers, keep)

    if facet is FacetType.DOWN_ALCOVE:
        if a == 0 and b == 0:
            return _build(lam, l, NABLA_L, factors, (), {1: 0})
        if b == 0:
            keep = _surviving_indices(dec)
            return _build(lam, l, NABLA_L, factors, ((5, 4), (4, 1)), {5: 0, 4: 1, 1: 2}, keep)
        if a == 0:
            keep = _surviving_indices(dec)
            return _build(lam, l, NABLA_L, factors, ((3, 2), (2, 1)), {3: 0, 2: 1, 1: 2}, keep)
        ca, cb = a % l == 0, b % l == 0
        edges = _nine_factor_edges(
            _DOWN_EDGES, ca, cb,
            (6, 5), ((9, 5), (6, 4)),
            (8, 3), ((9, 3), (8, 2)),
        )
        layers = _DOWN_LAYERS if (ca or cb) else _DOWN_LAYERS_LOOSE
        keep = _surviving_indices(dec)
        return _build(lam, l, NABLA_L, factors, edges, layers, keep)

    ca, cb = a % l == l - 1, b % l == l - 1
    edges = _nine_factor_edges(
        _UP_EDGES, ca, cb,
        (6, 5), ((9, 5), (6, 4)),
        (1, 7), ((2, 7), (1, 4)),
    )
    layers = _UP_LAYERS if (ca or cb) else _UP_LAYERS_LOOSE
    keep = _surviving_indices(dec)
    return _build(lam, l, NABLA_L, factors, edges, layers, keep)


def _surviving_indices(dec: DecompResult) -> set[int]:
    surviving = dec.surviving_factors()
    out = set()
    pool = list(surviving)
    for i, f in enumerate(dec.factors, start=1):
        if f in pool:
            pool.remove(f)
            out.add(i)
    return out


def hat_dual_weight(nu: Weight, l: int) -> Weight:
    """Weight of the dual of a thickened-kernel simple: swap the restricted
    part, negate the classical part."""
    cls, res = decompose(nu, l)
    return dual_weight(res) - l * cls


@dataclass
class ValidationReport:
    graph: ModuleGraph
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, passed, detail in self.checks if not passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, passed, detail))


def validate_graph(g: ModuleGraph) -> ValidationReport:
    """Cross-check a structure graph against characters, head/socle data,
    the extension tables, and duality."""
    from qgl3.ext import ext1_g1b

    report = ValidationReport(g)
    if g.kind == G1B_SIMPLE:
        report.add(
            "character-sum",
            g.character() == zhat_char(g.lam, g.l),
            "node characters must sum to the induced character",
        )
        sinks = g.sinks()
        report.add(
            "unique-sink",
            len(sinks) == 1 and sinks[0].weight == g.lam,
            f"sinks: {[tuple(n.weight) for n in sinks]}",
        )
        sources = g.sources()
        head = zhat_head_weight(g.lam, g.l)
        report.add(
            "unique-source",
            len(sources) == 1 and sources[0].weight == head,
            f"sources: {[tuple(n.weight) for n in sources]}, head {tuple(head)}",
        )
        bad_edges = []
        for u, v in g.edges:
            wu = g.node_by_id(u).weight
            wv = g.node_by_id(v).weight
            if ext1_g1b(g.lam, wu, wv, g.l) != 1:
                bad_edges.append((tuple(wu), tuple(wv)))
        report.add("edges-ext-consistent", not bad_edges, f"bad edges: {bad_edges}")
        report.add("duality-reversal", _duality_check(g), "dual graph must reverse edges")
    else:
        report.add(
            "character-sum",
            g.character() == weyl_char(g.lam),
            "node characters must sum to the induced character",
        )
        expected = sorted(chi_decomposition(g.lam, g.l).surviving_factors())
        report.add(
            "nodes-match-decomposition",
            sorted(g.node_weights()) == expected,
            f"nodes {sorted(map(tuple, g.node_weights()))} vs {list(map(tuple, expected))}",
        )
    return report


def _duality_check(g: ModuleGraph) -> bool:
    dual_lam = 2 * (g.l - 1) * RHO - g.lam
    gd = zhat_structure(dual_lam, g.l)
    mapped = sorted(hat_dual_weight(w, g.l) for w in g.node_weights())
    if mapped != sorted(gd.node_weights()):
        return False
    id_by_weight = {n.weight: n.id for n in gd.nodes}
    want = {
        (id_by_weight[hat_dual_weight(g.node_by_id(v).weight, g.l)],
         id_by_weight[hat_dual_weight(g.node_by_id(u).weight, g.l)])
        for u, v in g.edges
    }
    return want == set(gd.edges)
