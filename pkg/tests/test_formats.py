"""Document round-trips, parse error positions, DOT validity, CSV export."""

from __future__ import annotations

import io

import pytest

from synckit import Digraph, Histogram, ParseError, cerny, wielandt_digraph
from synckit.formats import (
    AutomatonDocument,
    automaton_to_json,
    dfa_to_dot,
    digraph_to_dot,
    digraph_to_json,
    format_automaton_text,
    format_digraph_text,
    letter_name,
    parse_automaton_text,
    parse_digraph_text,
    parse_document,
    parse_json_document,
    read_histogram_csv,
    word_to_str,
    write_histogram_csv,
)

from oracles import check_dot


class TestTextAutomaton:
    def test_roundtrip(self):
        dfa = cerny(4)
        assert parse_automaton_text(format_automaton_text(dfa)).dfa == dfa

    def test_exact_layout(self):
        assert format_automaton_text(cerny(3)) == "dfa 3 2\n0 1\n1 2\n0 0\n"

    def test_parse_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_automaton_text("dfa 2 1\n0\nx\n")
        assert err.value.line == 3 and err.value.column == 1
        assert "line 3" in str(err.value)

    def test_target_out_of_range(self):
        with pytest.raises(ParseError) as err:
            parse_automaton_text("dfa 2 1\n0\n5\n")
        assert err.value.line == 3

    def test_row_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_automaton_text("dfa 3 1\n0\n1\n")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_automaton_text("nfa 2 1\n0\n0\n")
        with pytest.raises(ParseError):
            parse_automaton_text("")


class TestTextDigraph:
    def test_roundtrip(self):
        d = wielandt_digraph(5)
        assert parse_digraph_text(format_digraph_text(d)) == d

    def test_missing_out_edge_is_parse_error(self):
        with pytest.raises(ParseError):
            parse_digraph_text("digraph 2\n0 1\n")

    def test_edge_out_of_range(self):
        with pytest.raises(ParseError) as err:
            parse_digraph_text("digraph 2\n0 2\n1 0\n")
        assert err.value.line == 2


class TestJson:
    def test_automaton_roundtrip_with_metadata(self):
        doc = AutomatonDocument(cerny(4), name="c4", metadata={"source": "family"})
        parsed = parse_json_document(automaton_to_json(doc))
        assert parsed.dfa == doc.dfa
        assert parsed.name == "c4"
        assert parsed.metadata == {"source": "family"}

    def test_digraph_roundtrip(self):
        d = wielandt_digraph(4)
        assert parse_json_document(digraph_to_json(d)) == d

    def test_bad_json_position(self):
        with pytest.raises(ParseError) as err:
            parse_json_document('{"type": "dfa",}')
        assert err.value.line is not None

    def test_unknown_type(self):
        with pytest.raises(ParseError):
            parse_json_document('{"type": "pda"}')

    def test_autodetect(self):
        assert parse_document(format_automaton_text(cerny(3))).dfa == cerny(3)
        assert parse_document(format_digraph_text(wielandt_digraph(3))) == wielandt_digraph(3)
        assert parse_document(automaton_to_json(AutomatonDocument(cerny(3)))).dfa == cerny(3)


class TestDot:
    def test_dfa_dot_is_valid_and_groups_letters(self):
        text = dfa_to_dot(cerny(4), name="c4")
        check_dot(text)
        assert 'label="a,b"' in text  # state 3 goes to 0 under both letters

    def test_digraph_dot_is_valid(self):
        check_dot(digraph_to_dot(wielandt_digraph(5)))

    def test_quoting_of_odd_names(self):
        text = dfa_to_dot(cerny(3), name='we"ird')
        check_dot(text)
        assert '\\"' in text


class TestWords:
    def test_letter_names(self):
        assert letter_name(0) == "a" and letter_name(25) == "z"
        assert letter_name(26) == "l26"

    def test_word_rendering(self):
        assert word_to_str((0, 1, 1, 0)) == "abba"
        assert word_to_str(()) == ""


class TestHistogramCsv:
    def test_roundtrip(self):
        hist = Histogram(counts={3: 5, 9: 1}, nonsync=7, total=13)
        buf = io.StringIO()
        write_histogram_csv(hist, buf)
        assert buf.getvalue() == "3,5\n9,1\nnonsync,7\ntotal,13\n"
        assert read_histogram_csv(io.StringIO(buf.getvalue())) == hist

    def test_floor_bucket(self):
        hist = Histogram(counts={9: 1}, nonsync=2, total=8, floor=8, below=5)
        buf = io.StringIO()
        write_histogram_csv(hist, buf)
        assert "below,5" in buf.getvalue()

    def test_bad_row(self):
        with pytest.raises(ParseError):
            read_histogram_csv(io.StringIO("3,x\n"))
