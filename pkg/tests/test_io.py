import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from rek_lab.generators import complete, cycle
from rek_lab.graph import from_edge_list
from rek_lab.io import (
    ParseError,
    detect_format,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    read_graph,
    to_graph6,
    write_graph,
)


def test_parse_edge_list_with_comments():
    text = "# a cycle\nn 4\n0 1\n1 2  # inline\n\n2 3\n3 0\n"
    assert parse_edge_list(text) == cycle(4)


def test_parse_edge_list_reports_line():
    with pytest.raises(ParseError) as err:
        parse_edge_list("n 3\n0 1\n1 x\n")
    assert err.value.line == 3


def test_parse_edge_list_rejects_loop_with_line():
    with pytest.raises(ParseError) as err:
        parse_edge_list("n 3\n0 1\n2 2\n")
    assert err.value.line == 3


def test_parse_edge_list_needs_header():
    with pytest.raises(ParseError):
        parse_edge_list("0 1\n")


def test_known_graph6_strings():
    assert to_graph6(complete(4)) == "C~"
    assert to_graph6(cycle(5)) == "Dhc"
    assert from_graph6(">>graph6<<C~") == complete(4)


def test_graph6_large_order_roundtrip():
    g = from_edge_list(70, [(i, i + 1) for i in range(69)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_rejects_bad_length():
    with pytest.raises(ParseError):
        from_graph6("D")


@settings(max_examples=80)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    s = to_graph6(g)
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert from_graph6(s) == g


@given(graphs(max_n=12))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_detect_format(tmp_path):
    assert detect_format("x.g6") == "g6"
    assert detect_format("x.el") == "el"
    assert detect_format("x.dat", "g6") == "g6"
    with pytest.raises(ParseError):
        detect_format("x.dat")


@pytest.mark.parametrize("suffix", [".el", ".g6"])
def test_file_roundtrip(tmp_path, suffix):
    p = tmp_path / f"g{suffix}"
    write_graph(cycle(7), p)
    assert read_graph(p) == cycle(7)
