import json

import pytest

from chromind.graphs import FAMILY_NAMES, Family, FamilySpec, GraphError, Role, build

EDGES_PER_N = {"cycle": 1, "wheel": 2, "helm": 3, "flower": 4,
               "sunflower": 4, "closed_sunflower": 5, "blossom": 6}


@pytest.mark.parametrize("family", FAMILY_NAMES)
@pytest.mark.parametrize("n", range(3, 13))
def test_counts_and_connectivity(family, n):
    g = build(family, n)
    vertices = {"cycle": n, "wheel": n + 1}.get(family, 2 * n + 1)
    assert g.vertex_count == vertices
    assert g.edge_count == EDGES_PER_N[family] * n
    assert g.is_connected()


def test_flower_roles():
    g = build("flower", 5)
    assert g.hub == 10
    assert g.vertices_with_role(Role.RIM) == [0, 1, 2, 3, 4]
    assert g.degree(g.hub) == 10
    # pendant v_i sees u_i and the hub only
    assert g.neighbours(5) == (0, 10)


def test_sunflower_outer_sits_on_rim_edge():
    g = build("sunflower", 4)
    assert g.neighbours(4) == (0, 1)
    assert g.neighbours(7) == (0, 3)


def test_blossom_outer_degree():
    g = build(Family.BLOSSOM, 6)
    assert all(g.degree(v) == 5 for v in range(6, 12))


@pytest.mark.parametrize("n", [2, 0, -1])
def test_small_n_rejected(n):
    with pytest.raises(GraphError):
        build("flower", n)


def test_unknown_family():
    with pytest.raises(GraphError, match="unknown family"):
        build("tulip", 4)


def test_non_integer_n():
    with pytest.raises(GraphError):
        FamilySpec(Family.CYCLE, 4.0)


def test_dot_triangle():
    assert build("cycle", 3).to_dot() == (
        'graph cycle_3 {\n  0 [label="u1"];\n  1 [label="u2"];\n  2 [label="u3"];\n'
        "  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n")


def test_dot_labels_and_edge_order():
    dot = build("flower", 4).to_dot()
    assert '[label="v4"]' in dot and '[label="hub"]' in dot
    edge_lines = [ln for ln in dot.splitlines() if "--" in ln]
    pairs = [tuple(int(x) for x in ln.strip(" ;").split(" -- ")) for ln in edge_lines]
    assert pairs == sorted(pairs)


def test_json_round_trip():
    g = build("helm", 4)
    doc = json.loads(json.dumps(g.to_json_dict()))
    assert doc["vertex_count"] == 9 and len(doc["edges"]) == 12


def test_relabel_is_isomorphic():
    g = build("wheel", 5)
    perm = [5, 4, 3, 2, 1, 0]
    h = g.relabel(perm)
    assert h.edge_count == g.edge_count
    assert all(h.has_edge(perm[a], perm[b]) for a, b in g.edges)
    assert g.relabel(perm).relabel(perm) == g
