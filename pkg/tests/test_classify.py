"""Sign censuses, the three classes, streaming, and minor containment."""

import pytest

from orientcorr import (
    Triple,
    classify,
    classify_stream,
    complete_graph,
    cycle_graph,
    emit_graph6,
    exact_correlation,
    graph_from_edges,
    has_minor,
    is_outerplanar,
    path_graph,
)
from orientcorr.classify import _k23
from support import diamond, star

# Frozen censuses (neg, zero, pos) over all ordered triples.
CENSUS = {
    "K4": (complete_graph(4), 0, 24, 0),
    "K5": (complete_graph(5), 0, 0, 60),
    "K6": (complete_graph(6), 0, 0, 120),
    "C4": (cycle_graph(4), 24, 0, 0),
    "C5": (cycle_graph(5), 60, 0, 0),
    "P5": (path_graph(5), 40, 20, 0),
    "star5": (star(5), 48, 12, 0),
    "diamond": (diamond(), 20, 0, 4),
}


@pytest.mark.parametrize("name", sorted(CENSUS))
def test_census_goldens(name):
    g, neg, zero, pos = CENSUS[name]
    flags = classify(g)
    assert (flags.neg_triples, flags.zero_triples, flags.pos_triples) == (neg, zero, pos)
    assert flags.total_triples == g.n * (g.n - 1) * (g.n - 2)
    assert not flags.disconnected


def test_class_flags_follow_census():
    k4 = classify(complete_graph(4))
    assert (k4.class_i, k4.class_ii, k4.class_iii) == (True, True, True)
    k5 = classify(complete_graph(5))
    assert (k5.class_i, k5.class_ii, k5.class_iii) == (False, False, True)
    c5 = classify(cycle_graph(5))
    assert (c5.class_i, c5.class_ii, c5.class_iii) == (True, False, False)
    p5 = classify(path_graph(5))
    assert (p5.class_i, p5.class_ii, p5.class_iii) == (True, True, False)
    dia = classify(diamond())
    assert (dia.class_i, dia.class_ii, dia.class_iii) == (False, True, False)


@pytest.mark.parametrize("g", [complete_graph(4), cycle_graph(4), diamond()])
def test_census_matches_per_triple_signs(g):
    neg = zero = pos = 0
    for a in range(g.n):
        for s in range(g.n):
            for b in range(g.n):
                if len({a, s, b}) != 3:
                    continue
                sign = exact_correlation(g, Triple(a, s, b)).cov.sign
                neg += sign < 0
                zero += sign == 0
                pos += sign > 0
    flags = classify(g)
    assert (flags.neg_triples, flags.zero_triples, flags.pos_triples) == (neg, zero, pos)


def test_thread_count_does_not_change_census():
    assert classify(complete_graph(5), threads=4) == classify(complete_graph(5))


def test_small_and_disconnected_rejection():
    with pytest.raises(ValueError):
        classify(path_graph(2))
    two_parts = graph_from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        classify(two_parts)
    flags = classify(two_parts, allow_disconnected=True)
    assert flags.disconnected
    assert flags.total_triples == 24


def test_stream_mixed_input():
    lines = [
        emit_graph6(complete_graph(3)),
        "",
        "!!bad",
        emit_graph6(graph_from_edges(3, [(0, 1)])),
        emit_graph6(complete_graph(4)),
    ]
    records = list(classify_stream(lines, cap=3))
    kinds = [r["type"] for r in records]
    # The blank line yields nothing; K4 has 6 edges, over the cap of 3.
    assert kinds == ["graph", "error", "skipped", "skipped", "summary"]
    assert [r["index"] for r in records[:-1]] == [0, 2, 3, 4]
    k3 = records[0]
    assert (k3["n"], k3["m"]) == (3, 3)
    assert (k3["neg_triples"], k3["zero_triples"], k3["pos_triples"]) == (6, 0, 0)
    assert k3["class_i"] and not k3["class_iii"]
    assert records[2]["reason"] == "disconnected"
    assert "Monte Carlo" in records[3]["reason"]
    summary = records[-1]
    assert (summary["graphs"], summary["errors"], summary["skipped"]) == (1, 1, 2)
    assert summary["class_i"] == 1
    assert summary["class_iii"] == 0


def test_stream_skips_tiny_graphs():
    records = list(classify_stream([emit_graph6(path_graph(2))]))
    assert records[0]["type"] == "skipped"
    assert records[0]["reason"] == "fewer than 3 vertices"


def test_stream_outerplanar_flag():
    lines = [
        emit_graph6(complete_graph(3)),
        emit_graph6(complete_graph(4)),
        emit_graph6(diamond()),
        emit_graph6(path_graph(11)),
    ]
    records = list(classify_stream(lines, outerplanar=True))
    flags = [r["outerplanar"] for r in records if r["type"] == "graph"]
    # The probe is capped at 10 vertices, hence None for the 11-path.
    assert flags == [True, False, True, None]


def test_stream_without_flag_omits_field():
    records = list(classify_stream([emit_graph6(complete_graph(3))]))
    assert "outerplanar" not in records[0]


PRISM = graph_from_edges(
    6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def test_k4_minor_goldens():
    k4 = complete_graph(4)
    assert has_minor(complete_graph(4), k4)
    assert has_minor(complete_graph(5), k4)
    assert has_minor(PRISM, k4)
    assert not has_minor(diamond(), k4)
    assert not has_minor(cycle_graph(5), k4)
    assert not has_minor(star(6), k4)


def test_k23_minor_goldens():
    k23 = _k23()
    assert has_minor(k23, k23)
    assert has_minor(complete_graph(5), k23)
    assert not has_minor(diamond(), k23)
    assert not has_minor(cycle_graph(5), k23)


def test_minor_search_bounds():
    assert not has_minor(complete_graph(3), complete_graph(4))
    with pytest.raises(ValueError):
        has_minor(path_graph(11), complete_graph(4))


def test_outerplanar_all_four_vertex_graphs():
    # On 4 vertices the only obstruction is being K4 itself.
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    for mask in range(64):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        g = graph_from_edges(4, edges)
        assert is_outerplanar(g) == (g.m < 6)


def test_outerplanar_goldens():
    assert not is_outerplanar(_k23())
    assert not is_outerplanar(PRISM)
    chorded = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    assert is_outerplanar(chorded)
    assert is_outerplanar(path_graph(7))
