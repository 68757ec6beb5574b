"""
Automaton text format and DOT export.

The text format is line based and order insensitive::

    # Canon(1)
    state q0
    state q1
    root q0
    edge q0 1 q0
    edge q0 0 q1
    edge q1 0 q1

A file without ``state`` lines denotes the empty family. Parsed automata are pruned.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Union

from ..errors import AutomatonFormatException
from ..models import DerivativeReport
from ..util import config
from .graph import BITS, PathAutomaton, empty_automaton, prune

logger = logging.getLogger("cantor_rank.automaton.textio")

PathLike = Union[str, Path]


def parse_automaton(text: str, resource: Optional[str] = None) -> PathAutomaton:
    states: Dict[str, int] = {}
    root: Optional[str] = None
    root_line = 0
    edges: Dict[tuple, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword, args = fields[0], fields[1:]
        if keyword == "state" and len(args) == 1:
            states.setdefault(args[0], lineno)
        elif keyword == "root" and len(args) == 1:
            if root is not None and root != args[0]:
                raise AutomatonFormatException(
                    f"second root {args[0]!r} (root {root!r} declared on line {root_line})", lineno, resource
                )
            root, root_line = args[0], lineno
        elif keyword == "edge" and len(args) == 3:
            q, bit, t = args
            if bit not in BITS:
                raise AutomatonFormatException(f"edge label must be 0 or 1, got {bit!r}", lineno, resource)
            previous = edges.get((q, bit))
            if previous is not None and previous[0] != t:
                raise AutomatonFormatException(
                    f"nondeterministic edge: {q} -{bit}-> {previous[0]} already declared on line {previous[1]}",
                    lineno,
                    resource,
                )
            edges[(q, bit)] = (t, lineno)
        else:
            raise AutomatonFormatException(f"cannot read {line!r}", lineno, resource)

    if not states:
        if root is not None:
            raise AutomatonFormatException(f"root {root!r} is not a declared state", root_line, resource)
        if edges:
            lineno = min(line for _, line in edges.values())
            raise AutomatonFormatException("edge declared without states", lineno, resource)
        return empty_automaton()
    if root is None:
        raise AutomatonFormatException("missing root declaration", max(states.values()), resource)
    if root not in states:
        raise AutomatonFormatException(f"root {root!r} is not a declared state", root_line, resource)
    for (q, bit), (t, lineno) in edges.items():
        for name in (q, t):
            if name not in states:
                raise AutomatonFormatException(f"edge uses unknown state {name!r}", lineno, resource)

    raw_automaton = PathAutomaton(states, root, {k: t for k, (t, _) in edges.items()})
    pruned = prune(raw_automaton)
    if len(pruned) != len(raw_automaton):
        logger.debug("pruned %d dead state(s) from %s", len(raw_automaton) - len(pruned), resource or "input")
    return pruned


def _ordered_states(a: PathAutomaton) -> List[str]:
    return [a.root] + sorted(a.states - {a.root})


def format_automaton(a: PathAutomaton) -> str:
    if a.is_empty():
        return "# empty family\n"
    order = _ordered_states(a)
    lines = [f"state {q}" for q in order]
    lines.append(f"root {a.root}")
    for q in order:
        lines += [f"edge {q} {b} {t}" for b, t in a.successors(q)]
    return "\n".join(lines) + "\n"


def read_automaton(path: PathLike) -> PathAutomaton:
    path = Path(path)
    return parse_automaton(path.read_text(encoding="utf-8"), str(path))


def write_automaton(a: PathAutomaton, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(format_automaton(a), encoding="utf-8")
    return path


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def dot_lines(a: PathAutomaton, name: str = "automaton") -> Iterator[str]:
    """DOT source, one node per state; the root is drawn with a double circle."""
    yield f"digraph {_quote(name)} {{\n"
    yield f"  rankdir={config.DOT_RANKDIR};\n"
    if a.is_empty():
        yield '  empty [shape=plaintext label="(empty)"];\n'
    else:
        for q in _ordered_states(a):
            shape = "doublecircle" if q == a.root else "circle"
            yield f"  {_quote(q)} [shape={shape}];\n"
        for q in _ordered_states(a):
            for b, t in a.successors(q):
                yield f"  {_quote(q)} -> {_quote(t)} [label={_quote(b)}];\n"
    yield "}\n"


def to_dot(a: PathAutomaton, name: str = "automaton") -> str:
    return "".join(dot_lines(a, name))


def dump_steps(report: DerivativeReport, directory: PathLike) -> List[Path]:
    """One DOT file per derivative step, step_00.dot being the input itself."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for index, step in enumerate(report.chain):
        path = directory / config.STEP_FILE_PATTERN.format(index=index)
        with path.open("w", encoding="utf-8") as f:
            f.writelines(dot_lines(step, f"derivative {index}"))
        written.append(path)
    logger.info("wrote %d derivative step(s) to %s", len(written), directory)
    return written
