import itertools
import json

from qgl3.charring import weyl_char
from qgl3.decomp import chi_decomposition, zhat_char
from qgl3.homs import zhat_head_weight
from qgl3.lattice import Weight
from qgl3.structure import (
    ModuleGraph,
    hat_dual_weight,
    nabla_l_filtration,
    validate_graph,
    zhat_structure,
)


def test_zhat_vertex_single_node():
    for l in (2, 3, 5):
        lam = l * Weight(1, 2) + Weight(l - 1, l - 1)
        g = zhat_structure(lam, l)
        assert len(g.nodes) == 1 and not g.edges
        assert validate_graph(g).ok


def test_zhat_wall_chain_and_diamond():
    # right wall: four-node chain
    g = zhat_structure(Weight(5, 3), 3)
    assert len(g.nodes) == 4 and len(g.edges) == 3
    layers = sorted(n.layer for n in g.nodes)
    assert layers == [0, 1, 2, 3]
    assert validate_graph(g).ok
    # horizontal wall: diamond
    g = zhat_structure(3 * Weight(1, 1) + Weight(1, 0), 3)
    assert len(g.nodes) == 4 and len(g.edges) == 4
    assert sorted(n.layer for n in g.nodes) == [0, 1, 1, 2]
    assert validate_graph(g).ok


def test_zhat_worked_instance():
    g = zhat_structure(Weight(3, 3), 3)
    assert len(g.nodes) == 9 and len(g.edges) == 13
    assert g.sinks()[0].weight == Weight(3, 3)
    assert g.sources()[0].weight == Weight(1, 1)
    rep = validate_graph(g)
    assert rep.ok, rep.failures()


def test_zhat_structure_sweep_all_checks():
    for l in (2, 3):
        for a, b in itertools.product(range(-1, 3), repeat=2):
            for r, s in itertools.product(range(l), repeat=2):
                lam = l * Weight(a, b) + Weight(r, s)
                rep = validate_graph(zhat_structure(lam, l))
                assert rep.ok, (lam, l, rep.failures())


def test_zhat_node_counts_by_case():
    for l in (2, 3, 5):
        cls = Weight(1, 2)
        for r, s in itertools.product(range(l), repeat=2):
            lam = l * cls + Weight(r, s)
            g = zhat_structure(lam, l)
            kind = chi_decomposition(lam, l).case_id if lam.is_dominant() else None
            want = {"i": 1, "ii": 4, "iii": 4, "iv": 4, "v": 9, "vi": 9}[kind]
            assert len(g.nodes) == want
            assert g.character() == zhat_char(lam, l)


def test_corrupted_edge_fails_validation():
    g = zhat_structure(Weight(3, 3), 3)
    edges = list(g.edges)
    # rewire one edge to a non-extending pair
    bad = ModuleGraph(g.lam, g.l, g.kind, g.nodes, tuple(edges[:-1] + [("mu1", "mu9")]))
    rep = validate_graph(bad)
    assert not rep.ok
    assert any(name == "edges-ext-consistent" for name, _ in rep.failures())


def test_nabla_vertex_and_chain_cases():
    g = nabla_l_filtration(3 * Weight(1, 2) + Weight(2, 2), 3)
    assert len(g.nodes) == 1
    assert validate_graph(g).ok
    # dominant-boundary down-alcove weights give chains of length <= 3
    g = nabla_l_filtration(Weight(3, 0), 3)
    assert [n.weight for n in sorted(g.nodes, key=lambda n: n.layer)] == [
        Weight(1, 1), Weight(3, 0),
    ]
    assert len(g.edges) == 1
    assert validate_graph(g).ok
    g = nabla_l_filtration(Weight(6, 0), 3)
    assert len(g.nodes) == 3 and len(g.edges) == 2
    assert validate_graph(g).ok
    g = nabla_l_filtration(Weight(0, 6), 3)
    assert len(g.nodes) == 3 and len(g.edges) == 2
    assert validate_graph(g).ok


def test_nabla_wall_congruence_switch():
    # right wall: chain when the first classical coordinate is -1 mod l
    lam_chain = 3 * Weight(2, 1) + Weight(2, 0)
    g = nabla_l_filtration(lam_chain, 3)
    assert len(g.edges) == 3 and sorted(n.layer for n in g.nodes) == [0, 1, 2, 3]
    lam_diamond = 3 * Weight(1, 1) + Weight(2, 0)
    g = nabla_l_filtration(lam_diamond, 3)
    assert len(g.edges) == 4 and sorted(n.layer for n in g.nodes) == [0, 1, 1, 2]
    for g in (nabla_l_filtration(lam_chain, 3), nabla_l_filtration(lam_diamond, 3)):
        assert validate_graph(g).ok


def test_nabla_worked_instance_seven_nodes():
    g = nabla_l_filtration(Weight(3, 3), 3)
    assert len(g.nodes) == 7
    weights = sorted(map(tuple, g.node_weights()))
    assert weights == [(0, 0), (0, 3), (1, 1), (1, 4), (3, 0), (3, 3), (4, 1)]
    assert validate_graph(g).ok


def test_nabla_nine_factor_congruence_variants():
    l = 3
    # fully congruent: classical part (3,3), both coordinates 0 mod 3
    g = nabla_l_filtration(l * Weight(3, 3) + Weight(0, 0), l)
    assert len(g.nodes) == 9 and len(g.edges) == 13
    # one violated congruence drops one edge and reattaches two
    g = nabla_l_filtration(l * Weight(3, 2) + Weight(0, 0), l)
    assert len(g.nodes) == 9 and len(g.edges) == 14
    # both violated: the printed fifteen-edge diagram
    g = nabla_l_filtration(l * Weight(2, 2) + Weight(0, 0), l)
    assert len(g.nodes) == 9 and len(g.edges) == 15
    # up-alcove extremes: both congruent to -1
    g = nabla_l_filtration(l * Weight(2, 2) + Weight(1, 1), l)
    assert len(g.nodes) == 9 and len(g.edges) == 13
    g = nabla_l_filtration(l * Weight(1, 1) + Weight(1, 1), l)
    assert len(g.nodes) == 9 and len(g.edges) == 15
    for cls in (Weight(3, 3), Weight(3, 2), Weight(2, 2), Weight(1, 1)):
        for res in (Weight(0, 0), Weight(1, 1)):
            rep = validate_graph(nabla_l_filtration(l * cls + res, l))
            assert rep.ok, rep.failures()


def test_nabla_sweep():
    for l in (2, 3):
        for a, b in itertools.product(range(3), repeat=2):
            for r, s in itertools.product(range(l), repeat=2):
                lam = l * Weight(a, b) + Weight(r, s)
                g = nabla_l_filtration(lam, l)
                rep = validate_graph(g)
                assert rep.ok, (lam, l, rep.failures())
                assert g.character() == weyl_char(lam)


def test_hat_dual_weight():
    assert hat_dual_weight(Weight(3, 3), 3) == Weight(0, 0) - 3 * Weight(1, 1)
    for l in (2, 3):
        for w in (Weight(4, 1), Weight(-2, 3)):
            assert hat_dual_weight(hat_dual_weight(w, l), l) == w


def test_duality_head_and_source_agree():
    for l in (2, 3):
        for lam in (Weight(1, 0), Weight(3, 3), l * Weight(2, 1) + Weight(0, l - 1)):
            g = zhat_structure(lam, l)
            assert g.sources()[0].weight == zhat_head_weight(lam, l)


def test_dot_export_syntax():
    g = zhat_structure(Weight(3, 3), 3)
    dot = g.to_dot()
    assert dot.startswith("digraph") and dot.endswith("}")
    assert dot.count("{") == dot.count("}")
    body = dot[dot.index("{") + 1:]
    node_lines = [ln for ln in body.splitlines() if "label=" in ln]
    edge_lines = [ln for ln in body.splitlines() if "->" in ln]
    assert len(node_lines) == 9 and len(edge_lines) == 13
    # nodes are declared before any edge
    assert body.index("label=") < body.index("->")


def test_graph_json_roundtrip():
    for g in (zhat_structure(Weight(3, 3), 3), nabla_l_filtration(Weight(4, 4), 3)):
        data = json.loads(g.to_json())
        back = ModuleGraph.from_jsonable(data)
        assert back == g
