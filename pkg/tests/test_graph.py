from hypothesis import given
import pytest

from layerhom.exceptions import GraphFormatError, UnknownVertexError
from layerhom.generators import random_layered
from layerhom.graph import (LayeredGraph, covers, interval, is_uniform,
                            is_uniform_literal, less_than,
                            level_window_subgraph, minimal_vertices,
                            successor_set, unique_top, validate, window)

from .strategies import PROPERTY_SETTINGS, SEEDS, random_posets


def test_validate_chain_is_clean(chain):
    assert validate(chain) == []


def test_validate_reports_level_drop():
    graph = LayeredGraph({'a': 2, '*': 0}, [('a', '*')])
    violations = validate(graph)
    assert len(violations) == 1
    assert '(a, *)' in violations[0]
    assert '2 != 1' in violations[0]


def test_validate_reports_loop():
    graph = LayeredGraph({'a': 1}, [('a', 'a')])
    assert validate(graph) == ['edge (a, a) is a loop']


def test_cassidy_shelton_shape(cs, cs_deleted):
    assert validate(cs) == []
    assert len(cs.vertices) == 11
    assert len(cs.edges) == 18
    assert len(cs_deleted.edges) == 17
    assert cs.height == 4
    assert len(cs.positive_vertices) == 10


@pytest.mark.parametrize('levels, edges', [
    ({'a': 1, 'b': 0}, [('a', 'b'), ('a', 'b')]),
    ({'a': 1}, [('a', 'zz')]),
    ({'a': -1}, []),
    ({'a': 1.5}, []),
    ({'': 0}, []),
    ({'a': 1, 'b': 0}, [('a',)]),
])
def test_construction_errors(levels, edges):
    with pytest.raises(GraphFormatError):
        LayeredGraph(levels, edges)


def test_json_round_trip_keeps_order(cs):
    data = cs.to_dict()
    assert [v['level'] for v in data['vertices']] == sorted(
        v['level'] for v in data['vertices'])
    assert data['vertices'][0] == {'id': '*', 'level': 0}
    assert LayeredGraph.from_json(cs.to_json()) == cs


@pytest.mark.parametrize('text', [
    'not json',
    '[]',
    '{"vertices": [{"id": "a"}]}',
    '{"vertices": [{"id": "a", "level": 0}, {"id": "a", "level": 1}]}',
    '{"vertices": [{"id": "a", "level": 0}], "edges": {"a": "b"}}',
])
def test_from_json_errors(text):
    with pytest.raises(GraphFormatError):
        LayeredGraph.from_json(text)


def test_less_than_follows_edge_direction(chain):
    assert less_than(chain, 'a', '*')
    assert less_than(chain, 'a', 'b')
    assert not less_than(chain, '*', 'a')
    assert not less_than(chain, 'a', 'a')
    assert chain.less('*', 'a')


def test_less_than_through_two_covers(cs):
    # b1 -> c2 -> d1, while (b1, c1) is not an edge
    assert less_than(cs, 'b1', 'd1')
    assert not covers(cs, 'b1', 'd1')
    assert not less_than(cs, 'b1', 'c1')
    assert not less_than(cs, 'd1', 'b1')


def test_unknown_vertex(chain):
    with pytest.raises(UnknownVertexError) as info:
        less_than(chain, 'a', 'nope')
    assert info.value.vertex == 'nope'
    with pytest.raises(KeyError):
        chain.successors('nope')


def test_covers_and_successors(theta2):
    assert successor_set(theta2, '{1,2}') == {'{1}', '{2}'}
    assert covers(theta2, '{1}', '{}')
    assert not covers(theta2, '{1,2}', '{}')


def test_level_windows(theta3):
    top = '{1,2,3}'
    assert len(level_window_subgraph(theta3, top, 1)) == 0
    assert len(level_window_subgraph(theta3, top, 2)) == 3
    third = level_window_subgraph(theta3, top, 3)
    assert len(third) == 6
    assert len(third.edges) == 6
    assert window(theta3, 3).vertices == third.vertices


def test_window_needs_unique_top():
    graph = LayeredGraph({'a': 1, 'b': 1, '*': 0}, [('a', '*'), ('b', '*')])
    with pytest.raises(GraphFormatError):
        window(graph, 2)
    with pytest.raises(GraphFormatError):
        unique_top(graph)
    assert unique_top(LayeredGraph({'a': 1, '*': 0}, [('a', '*')])) == 'a'


def test_induced_subgraph_is_closed(cs):
    sub = cs.subgraph(['a', 'b1', 'c2', 'd1'])
    assert sub.edges == {('a', 'b1'), ('b1', 'c2'), ('c2', 'd1')}
    assert sub.successors('b1') == {'c2'}
    assert sub.to_graph().edges == sub.edges


def test_interval(theta3):
    assert len(interval(theta3, '{}', '{1,2,3}')) == 6
    assert interval(theta3, '{1}', '{1,2}').vertices == ()


def test_uniformity(cs, cs_deleted, theta3, split_bottoms):
    assert is_uniform(cs)
    assert is_uniform(cs_deleted)
    assert is_uniform(theta3)
    report = is_uniform(split_bottoms)
    assert not report
    assert report.failing_tails == ('a',)


def test_minimal_vertices(chain, split_bottoms):
    assert minimal_vertices(chain) == (('*',), True, True)
    report = minimal_vertices(split_bottoms)
    assert report.vertices == ('z1', 'z2')
    assert report.all_level_zero
    assert not report.unique


def test_minimal_vertex_off_level_zero():
    graph = LayeredGraph({'a': 2, 'b': 1, 'c': 1, '*': 0},
                         [('a', 'b'), ('a', 'c'), ('b', '*')])
    report = minimal_vertices(graph)
    assert report.vertices == ('*', 'c')
    assert not report.all_level_zero


def test_relabel(theta2):
    renamed = theta2.relabel({v: 'x' + v for v in theta2.vertices})
    assert 'x{1,2}' in renamed
    assert len(renamed.edges) == len(theta2.edges)
    assert renamed != theta2


@PROPERTY_SETTINGS
@given(random_posets())
def test_uniformity_readings_agree(graph):
    assert is_uniform(graph).failing_tails == \
        is_uniform_literal(graph).failing_tails


@PROPERTY_SETTINGS
@given(random_posets())
def test_uniformity_survives_relabeling(graph):
    renamed = graph.relabel({v: 'r' + v for v in graph.vertices})
    assert is_uniform(graph).uniform == is_uniform(renamed).uniform


@PROPERTY_SETTINGS
@given(SEEDS)
def test_random_layered_graphs_are_valid(seed):
    graph = random_layered(seed, [2, 3, 2, 1])
    assert validate(graph) == []
    assert graph == random_layered(seed, [2, 3, 2, 1])


@PROPERTY_SETTINGS
@given(random_posets())
def test_covers_are_one_level_steps(graph):
    for u in graph.vertices:
        for v in graph.vertices:
            assert covers(graph, u, v) == (
                less_than(graph, u, v) and
                graph.level(u) == graph.level(v) + 1)


@PROPERTY_SETTINGS
@given(random_posets())
def test_less_than_is_a_strict_order(graph):
    vertices = graph.vertices
    for u in vertices:
        assert not less_than(graph, u, u)
        for v in vertices:
            if not less_than(graph, u, v):
                continue
            assert not less_than(graph, v, u)
            for w in vertices:
                if less_than(graph, v, w):
                    assert less_than(graph, u, w)


@PROPERTY_SETTINGS
@given(random_posets())
def test_level_windows_grow_to_everything_below(graph):
    for a in graph.vertices:
        top = graph.level(a)
        previous = set()
        for i in range(1, top + 3):
            current = set(level_window_subgraph(graph, a, i).vertices)
            assert previous <= current
            if i - 1 >= top:
                assert current == set(graph.below(a))
            previous = current
