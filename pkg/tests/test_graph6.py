import networkx as nx
import pytest
from hypothesis import given

from igelkit.core.errors import DirectedInputError, GraphFormatError
from igelkit.core.families import gen_empty, gen_petersen
from igelkit.core.graph import Graph
from igelkit.core.graph6 import parse_graph6, parse_graph6_collection, write_graph6
from tests.strategies import PROPERTY_SETTINGS, graphs


def test_k2():
    g = parse_graph6("A_")
    assert g.n == 2
    assert list(g.edges()) == [(0, 1)]


def test_star_centered_on_last_vertex():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert list(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_header_and_whitespace():
    assert parse_graph6(">>graph6<<A_\n") == parse_graph6("A_")
    assert parse_graph6(b"A_") == parse_graph6("A_")


def test_empty_and_single_vertex():
    assert parse_graph6("?").n == 0
    assert parse_graph6("@").n == 1
    assert write_graph6(gen_empty(0)) == "?"


@pytest.mark.parametrize("record, message", [
    ("D?", "truncated"),
    ("D?{?", "trailing"),
    ("D?}", "padding"),
    ("D?\x7f", "outside"),
    ("", "empty"),
])
def test_malformed_records(record, message):
    with pytest.raises(GraphFormatError, match=message):
        parse_graph6(record)


def test_digraph6_is_rejected():
    with pytest.raises(DirectedInputError):
        parse_graph6("&DI?AO?")


def test_sparse6_is_rejected():
    with pytest.raises(GraphFormatError, match="sparse6"):
        parse_graph6(":Fa@x^")


def test_medium_size_field():
    record = write_graph6(gen_empty(63))
    assert record.startswith("~??~")
    assert parse_graph6(record).n == 63


def test_writer_matches_networkx():
    g = gen_petersen()
    reference = nx.Graph()
    reference.add_nodes_from(range(g.n))
    reference.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(reference, header=False).strip().decode("ascii")
    assert write_graph6(g) == expected
    assert write_graph6(g, header=True) == ">>graph6<<" + expected


def test_collection_reports_line_numbers():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6_collection("A_\n\nD?}\n", source="pairs.g6")
    assert info.value.line == 3
    assert str(info.value).startswith("pairs.g6:3:")


def test_collection_keeps_error_type():
    with pytest.raises(DirectedInputError):
        parse_graph6_collection("A_\n&DI?AO?\n")


def test_collection_skips_blank_lines():
    coll = parse_graph6_collection("A_\n\nD?{\n")
    assert [g.n for g in coll] == [2, 5]
    assert coll[1] == Graph.from_edges(5, [(i, 4) for i in range(4)])


@PROPERTY_SETTINGS
@given(graphs(max_vertices=14))
def test_networkx_reads_what_we_write(graph):
    decoded = nx.from_graph6_bytes(write_graph6(graph).encode("ascii"))
    assert decoded.number_of_nodes() == graph.n
    assert sorted(tuple(sorted(e)) for e in decoded.edges()) == list(graph.edges())


@pytest.mark.parametrize("record", ["Dé", "é_", b"A\xff", b"\x80"])
def test_non_ascii_bytes_are_format_errors(record):
    with pytest.raises(GraphFormatError, match="outside"):
        parse_graph6(record)


def test_collection_reports_non_ascii_line():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6_collection("A_\nDé\n", source="odd.g6")
    assert info.value.line == 2
    with pytest.raises(GraphFormatError) as info:
        parse_graph6_collection(b"A_\nD?{\n\xfe?\n")
    assert info.value.line == 3
