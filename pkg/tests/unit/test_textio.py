"""
Unit tests for the automaton text format and DOT export.
"""

import os

import pytest

from cantor_rank import corpus
from cantor_rank.automaton.derivative import rank_degree
from cantor_rank.automaton.graph import empty_automaton
from cantor_rank.automaton.ops import set_eq
from cantor_rank.automaton.textio import (
    dump_steps,
    format_automaton,
    parse_automaton,
    read_automaton,
    to_dot,
    write_automaton,
)
from cantor_rank.errors import AutomatonFormatException


class TestParse:

    def test_canon1_text(self, canon1, canon1_text):
        a = parse_automaton(canon1_text)
        assert a.structure() == canon1.structure()

    def test_comments_and_blank_lines(self):
        text = "# one loop\n\nstate a   # the only state\nroot a\nedge a 1 a\n"
        a = parse_automaton(text)
        assert a.states == frozenset({"a"})
        assert a.step("a", "1") == "a"

    def test_repeated_edge_is_accepted(self):
        a = parse_automaton("state a\nroot a\nedge a 0 a\nedge a 0 a\n")
        assert len(a.edges) == 1

    def test_dead_states_are_pruned(self):
        a = parse_automaton("state a\nstate b\nroot a\nedge a 0 a\nedge a 1 b\n")
        assert a.states == frozenset({"a"})

    def test_no_states_is_empty(self):
        assert parse_automaton("# nothing here\n").is_empty()
        assert parse_automaton("").is_empty()

    @pytest.mark.parametrize("text,line", [
        ("state a\nroot a\nroot b\n", 3),
        ("state a\nroot a\nedge a 2 a\n", 3),
        ("state a\nstate b\nroot a\nedge a 0 a\nedge a 0 b\n", 5),
        ("state a\nroot a\nfrobnicate a\n", 3),
        ("state a\nroot b\n", 2),
        ("state a\nstate b\n", 2),
        ("root a\n", 1),
        ("\nedge a 0 a\n", 2),
        ("state a\nroot a\nedge a 0 z\n", 3),
        ("state a\nroot a\nedge a 0\n", 3),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(AutomatonFormatException) as exc_info:
            parse_automaton(text, "bad.aut")
        assert exc_info.value.line == line
        assert exc_info.value.message.startswith(f"line {line}:")
        assert exc_info.value.resource == "bad.aut"

    def test_nondeterminism_names_first_declaration(self):
        with pytest.raises(AutomatonFormatException) as exc_info:
            parse_automaton("state a\nstate b\nroot a\nedge a 0 a\nedge a 0 b\n")
        assert "line 4" in exc_info.value.message


class TestFormat:

    def test_layout(self, canon1):
        assert format_automaton(canon1) == (
            "state q0\nstate q1\nroot q0\nedge q0 0 q1\nedge q0 1 q0\nedge q1 0 q1\n"
        )

    def test_empty(self):
        assert format_automaton(empty_automaton()) == "# empty family\n"
        assert parse_automaton(format_automaton(empty_automaton())).is_empty()

    def test_files(self, temp_dir):
        for name, a in list(corpus.automata().items())[:8]:
            path = write_automaton(a, os.path.join(temp_dir, "family.aut"))
            assert set_eq(read_automaton(path), a), name

    def test_read_reports_path(self, aut_file):
        path = aut_file("state a\nroot a\nedge a 0 b\n", "broken.aut")
        with pytest.raises(AutomatonFormatException) as exc_info:
            read_automaton(path)
        assert exc_info.value.resource == path


class TestDot:

    def test_nodes_and_edges(self, canon1):
        dot = to_dot(canon1, "canon1")
        assert dot.startswith('digraph "canon1" {\n')
        assert "rankdir=LR;" in dot
        assert '"q0" [shape=doublecircle];' in dot
        assert '"q1" [shape=circle];' in dot
        assert '"q0" -> "q1" [label="0"];' in dot
        assert dot.rstrip().endswith("}")

    def test_empty_family(self):
        assert "(empty)" in to_dot(empty_automaton())

    def test_dump_steps(self, canon2, temp_dir):
        target = os.path.join(temp_dir, "steps")
        paths = dump_steps(rank_degree(canon2), target)
        assert [p.name for p in paths] == ["step_00.dot", "step_01.dot", "step_02.dot", "step_03.dot"]
        assert "(empty)" in paths[-1].read_text()
        assert 'digraph "derivative 0"' in paths[0].read_text()
