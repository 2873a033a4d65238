"""Edge-list and digraph6 serialization: round trips and malformed input."""

from __future__ import annotations

import pytest
from hypothesis import given

from arcconn import (
    Digraph,
    InvariantViolation,
    ParseError,
    emit_digraph6,
    emit_edge_list,
    iter_digraph6,
    load,
    parse,
    parse_digraph6,
    parse_edge_list,
    save,
)

from .conftest import digraphs


def test_four_cycle_digraph6_token(four_cycle):
    assert emit_digraph6(four_cycle) == "&CO`_"
    assert parse_digraph6("&CO`_") == four_cycle


def test_edge_list_with_comments_and_blanks():
    text = "# a square\n4 4\n0 1\n\n1 2\n2 3  # wraps\n3 0\n"
    D = parse_edge_list(text)
    assert D == Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@given(digraphs(min_n=1, max_n=8))
def test_round_trips(D):
    assert parse_edge_list(emit_edge_list(D)) == D
    assert parse_digraph6(emit_digraph6(D)) == D
    assert parse(emit_edge_list(D)) == D
    assert parse(emit_digraph6(D)) == D


@given(digraphs(min_n=1, max_n=8))
def test_emit_parse_emit_is_stable(D):
    for emit in (emit_edge_list, emit_digraph6):
        once = emit(D)
        assert emit(parse(once)) == once


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_edge_list("4 2\n0 1\nnot an arc\n")
    assert err.value.line == 3

    with pytest.raises(ParseError):
        parse_edge_list("")

    with pytest.raises(ParseError, match="claims"):
        parse_edge_list("3 2\n0 1\n")


def test_edge_list_digon_is_invariant_violation():
    with pytest.raises(InvariantViolation) as err:
        parse_edge_list("2 2\n0 1\n1 0\n")
    assert err.value.line == 3


def test_edge_list_loop_is_invariant_violation():
    with pytest.raises(InvariantViolation):
        parse_edge_list("2 1\n1 1\n")


def test_digraph6_malformed_documents():
    for bad in ("", "CO`_", "&", "&CO`", "&CO`_?", "&" + chr(62)):
        with pytest.raises(ParseError):
            parse_digraph6(bad)


def test_digraph6_digon_is_invariant_violation():
    # n=2, adjacency bits 0110 -> chunk 011000 -> chr(63 + 24)
    with pytest.raises(InvariantViolation):
        parse_digraph6("&" + chr(63 + 2) + chr(63 + 24))


def test_digraph6_loop_is_invariant_violation():
    # n=2, adjacency bits 1001 -> chunk 100100 -> chr(63 + 36)
    with pytest.raises(InvariantViolation):
        parse_digraph6("&" + chr(63 + 2) + chr(63 + 36))


def test_digraph6_rejects_orders_above_62():
    with pytest.raises(ParseError):
        emit_digraph6(Digraph(63, []))


def test_save_load_auto_detect(tmp_path, l8):
    edges = tmp_path / "l8.edges"
    d6 = tmp_path / "l8.d6"
    save(l8, edges)
    save(l8, d6)
    assert load(edges) == l8
    assert load(d6) == l8
    assert edges.read_text().startswith("8 10\n")
    assert d6.read_text().startswith("&")


def test_iter_digraph6(four_cycle, l8):
    text = "# two graphs\n" + emit_digraph6(four_cycle) + "\n\n" + emit_digraph6(l8) + "\n"
    graphs = list(iter_digraph6(text))
    assert graphs == [four_cycle, l8]
