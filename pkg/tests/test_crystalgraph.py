from rank2crystal import lspath
from rank2crystal.algebra import ShapeWeight
from rank2crystal.crystalgraph import GraphDocument, build_graph, path_ball


def test_depth_one_ball(lam3):
    ball = path_ball(lam3, 1)
    assert [b.encode() for b in ball] == ["0:0:[]", "1:1:[]", "-1:-1:[]"]
    assert len(path_ball(lam3, 0)) == 1


def test_edges_are_f_arrows(lam3):
    doc = build_graph(lam3, 4)
    ids = {v["id"] for v in doc.vertices}
    for s, t, i in doc.edges:
        assert lspath.lowering(lspath.decode(lam3, s), i).encode() == t
    expected = {(b.encode(), lspath.lowering(b, i).encode(), i)
                for b in path_ball(lam3, 4) for i in (1, 2)
                if lspath.lowering(b, i) is not None and lspath.lowering(b, i).encode() in ids}
    assert set(doc.edges) == expected


def test_json_roundtrip_and_determinism():
    s = ShapeWeight.of(3, 4, 1, 1)
    doc = build_graph(s, 5, {"a1": 3})
    again = GraphDocument.from_json(doc.to_json())
    assert again == doc
    assert build_graph(s, 5, {"a1": 3}).to_json() == doc.to_json()


def test_dot_shape(lam3):
    text = build_graph(lam3, 2).to_dot()
    assert text.startswith("digraph")
    assert text.rstrip().endswith("}")
    assert 'label="f1"' in text and 'label="f2"' in text
