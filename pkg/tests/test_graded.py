from start.graded import COMMUTATIVITY, MESH, ZERO, graded_quiver
from translation.window import auslander_window
from translation.zq import ZQVertex


def test_graded_quiver_of_a2(a2):
    graded = graded_quiver(a2)
    assert graded.arrows1 == ((ZQVertex(0, 1), ZQVertex(1, 1)),)
    assert graded.arrow(2) == (ZQVertex(0, 1), ZQVertex(1, 1), 1)
    assert graded.arrow(0) == (ZQVertex(0, 2), ZQVertex(0, 1), 0)

    (mesh,) = graded.relations_of(MESH)
    assert mesh.terms == ((1, (1, 0)),)
    (zero,) = graded.relations_of(ZERO)
    assert (zero.source, zero.target) == (ZQVertex(0, 2), ZQVertex(1, 1))
    assert zero.terms == ((1, (0, 2)),)
    assert graded.relations_of(COMMUTATIVITY) == ()


def test_graded_quiver_of_running_example(d5):
    graded = graded_quiver(d5)
    assert len(graded.arrows0) == 28
    assert len(graded.arrows1) == 15
    assert len(graded.relations_of(MESH)) == 15
    assert len(graded.relations_of(COMMUTATIVITY)) + len(graded.relations_of(ZERO)) == 24


def test_degree_one_arrows_leave_non_projectives(d5):
    window = auslander_window(d5)
    graded = graded_quiver(d5)
    sources = sorted(source for source, _ in graded.arrows1)
    assert sources == sorted(x for x in window.objects if not window.is_projective(x))


def test_zero_relations_start_at_projectives(d5):
    window = auslander_window(d5)
    for relation in graded_quiver(d5).relations_of(ZERO):
        assert window.is_projective(relation.source)


def test_graph_degrees(a2):
    graph = graded_quiver(a2).graph()
    assert graph.edges[ZQVertex(0, 1), ZQVertex(1, 1)]["degree"] == 1
    assert graph.edges[ZQVertex(1, 1), ZQVertex(0, 2)]["degree"] == 0


def test_to_dict(a2):
    payload = graded_quiver(a2).to_dict()
    assert payload["arrows1"] == [[[0, 1], [1, 1]]]
    kinds = sorted(relation["kind"] for relation in payload["relations"])
    assert kinds == ["mesh", "zero"]
