"""
Built-in families: hand-built automata with known invariants and compilable DSL texts.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from .automaton.graph import PathAutomaton, from_word, full_binary, prune, relabel
from .cantor.words import UPWord
from .dsl.compile import compile_expr
from .dsl.expr import Canon, OmegaSum
from .ordinals import OrdinalCNF

Named = Tuple[str, PathAutomaton]


def graft(branches: Mapping[str, PathAutomaton]) -> PathAutomaton:
    """Disjoint union placing each automaton under its prefix (prefixes incomparable)."""
    states, edges = {"t"}, {}
    nodes = {"": "t"}
    for i, (prefix, a) in enumerate(sorted(branches.items())):
        names = {q: f"b{i}_{q}" for q in a.states}
        states |= set(names.values())
        edges.update({(names[q], b): names[t] for (q, b), t in a.edges.items()})
        for j in range(1, len(prefix)):
            nodes.setdefault(prefix[:j], f"t{prefix[:j]}")
        if a.is_empty():
            continue
        edges[(nodes[prefix[:-1]], prefix[-1])] = names[a.root]
    states |= set(nodes.values())
    for p, q in nodes.items():
        if p:
            edges[(nodes[p[:-1]], p[-1])] = q
    return relabel(prune(PathAutomaton(states, "t", edges)))


def unroll_root(a: PathAutomaton) -> PathAutomaton:
    """Same path set, with a fresh root copying the root's edges."""
    edges = dict(a.edges)
    edges.update({("u", b): t for b, t in a.successors(a.root)})
    return prune(PathAutomaton(a.states | {"u"}, "u", edges))


def lasso(text: str) -> PathAutomaton:
    prefix, _, rest = text.partition("(")
    return from_word(UPWord(prefix, rest.split(")")[0]))


def canon_automaton(k: int, n: int = 1) -> PathAutomaton:
    return compile_expr(Canon(OrdinalCNF.of(k), n))


def two_cycle() -> PathAutomaton:
    """Cycles 01 and 10 through a shared state."""
    edges = {("s", "0"): "a", ("a", "1"): "s", ("s", "1"): "b", ("b", "0"): "s"}
    return PathAutomaton(("s", "a", "b"), "s", edges)


def full_and_canon1() -> PathAutomaton:
    """Full binary tree under 0 next to Canon(1) under 1."""
    return graft({"0": full_binary(), "1": canon_automaton(1)})


def converging_sequence(period: str, escape: str) -> PathAutomaton:
    """Cycle on the period with one exit into a lasso: rank 1, degree 1, limit (period)^w."""
    cycle = [f"c{i}" for i in range(len(period))]
    edges = {(cycle[i], b): cycle[(i + 1) % len(cycle)] for i, b in enumerate(period)}
    tail = lasso(escape)
    edges.update({(f"e{q}", b): f"e{t}" for (q, b), t in tail.edges.items()})
    flip = "1" if period[0] == "0" else "0"
    edges[(cycle[0], flip)] = f"e{tail.root}"
    return PathAutomaton(cycle + [f"e{q}" for q in tail.states], cycle[0], edges)


_PERIODS = ("0", "1", "01", "001", "0111")
_ESCAPES = ("(0)", "(1)", "1(01)", "00(110)")


def converging_sequences() -> List[Named]:
    return [
        (f"converging[{period},{escape}]", converging_sequence(period, escape))
        for period in _PERIODS
        for escape in _ESCAPES
    ]


def rank1_degree3() -> PathAutomaton:
    """Three converging sequences under incomparable prefixes."""
    return graft({
        "00": converging_sequence("1", "(0)"),
        "01": converging_sequence("01", "1(01)"),
        "1": converging_sequence("0", "(1)"),
    })


def marked_blocks(m: int) -> PathAutomaton:
    """ω blocks each carrying m limit points; one global limit on top (rank 2, degree 1)."""
    return compile_expr(OmegaSum(Canon(OrdinalCNF.of(1), m)))


def rank2_handbuilt() -> PathAutomaton:
    """Rank 2, degree 1 with blocks of converging sequences to (01)^w."""
    block = converging_sequence("01", "(0)")
    edges = {("h", "1"): "h"}
    edges.update({(f"k{q}", b): f"k{t}" for (q, b), t in block.edges.items()})
    edges[("h", "0")] = f"k{block.root}"
    return PathAutomaton(["h"] + [f"k{q}" for q in block.states], "h", edges)


@lru_cache(maxsize=None)
def _automata() -> Tuple[Named, ...]:
    named: List[Named] = [
        ("full-binary", full_binary()),
        ("two-cycle", two_cycle()),
        ("full-and-canon1", full_and_canon1()),
        ("lasso[(1)]", lasso("(1)")),
        ("lasso[10(0)]", lasso("10(0)")),
        ("lasso[011(01)]", lasso("011(01)")),
        ("rank1-degree3", rank1_degree3()),
        ("rank2-handbuilt", rank2_handbuilt()),
        ("marked-blocks[2]", marked_blocks(2)),
        ("marked-blocks[3]", marked_blocks(3)),
        ("unrolled-canon1", unroll_root(canon_automaton(1))),
    ]
    named += [(f"canon[{k},{n}]", canon_automaton(k, n)) for k in range(4) for n in (1, 2, 3)]
    named += converging_sequences()
    return tuple(named)


def automata() -> Dict[str, PathAutomaton]:
    """Every named corpus automaton (all pruned)."""
    return dict(_automata())


def equal_invariant_pairs() -> List[Tuple[str, PathAutomaton, PathAutomaton]]:
    """Structurally different automata sharing (rank, degree)."""
    conv = [a for _, a in converging_sequences()]
    return [
        ("canon[2,1]~rank2-handbuilt", canon_automaton(2), rank2_handbuilt()),
        ("canon[2,1]~marked-blocks[2]", canon_automaton(2), marked_blocks(2)),
        ("canon[1,3]~rank1-degree3", canon_automaton(1, 3), rank1_degree3()),
        ("canon[1,1]~unrolled-canon1", canon_automaton(1), unroll_root(canon_automaton(1))),
        ("canon[0,1]~lasso[011(01)]", canon_automaton(0), lasso("011(01)")),
        ("canon[1,2]~converging-pair", canon_automaton(1, 2), graft({"0": conv[0], "1": conv[5]})),
        ("canon[3,1]~omega-marked", canon_automaton(3), compile_expr(OmegaSum(OmegaSum(Canon(OrdinalCNF.of(1), 2))))),
        ("converging[0]~converging[01]", conv[0], conv[9]),
        ("converging[1]~converging[0111]", conv[4], conv[18]),
        ("converging[001]~unrolled", conv[12], unroll_root(conv[13])),
    ]


def unequal_invariant_pairs() -> List[Tuple[str, PathAutomaton, PathAutomaton]]:
    conv = [a for _, a in converging_sequences()]
    return [
        ("canon[1,1]~canon[1,2]", canon_automaton(1), canon_automaton(1, 2)),
        ("canon[2,1]~canon[1,1]", canon_automaton(2), canon_automaton(1)),
        ("canon[0,1]~canon[0,2]", canon_automaton(0), canon_automaton(0, 2)),
        ("canon[3,1]~canon[2,1]", canon_automaton(3), canon_automaton(2)),
        ("canon[2,2]~rank2-handbuilt", canon_automaton(2, 2), rank2_handbuilt()),
        ("rank1-degree3~canon[1,2]", rank1_degree3(), canon_automaton(1, 2)),
        ("marked-blocks[3]~canon[1,3]", marked_blocks(3), canon_automaton(1, 3)),
        ("converging~canon[0,1]", conv[0], canon_automaton(0)),
        ("lasso~converging", lasso("10(0)"), conv[3]),
        ("canon[3,3]~canon[3,2]", canon_automaton(3, 3), canon_automaton(3, 2)),
    ]


_ATOMS = (
    "point((0)^w)",
    "point(1(0)^w)",
    "point((01)^w)",
    "point(10(110)^w)",
    "canon(1, 1)",
    "canon(2, 1)",
    "canon(1, 2)",
    "full",
)

DSL_TEXTS: Tuple[str, ...] = (
    "empty",
    "full",
    "point((1)^w)",
    "point(0110(10)^w)",
    "canon(0, 1)",
    "canon(0, 4)",
    "canon(1, 1)",
    "canon(1, 5)",
    "canon(2, 1)",
    "canon(2, 3)",
    "canon(3, 1)",
    "canon(3, 2)",
    "omega(empty)",
    "omega(full)",
    "omega(omega(point((0)^w)))",
    "omega(omega(omega(point((1)^w))))",
    "omega(canon(2, 2))",
    "omega(union(0:point((0)^w), 1:point((1)^w)))",
    "omega(union(00:full, 1:empty))",
    "union(0:empty, 1:empty)",
    "union(0:full, 1:canon(1, 1))",
    "union(0:omega(point((0)^w)), 1:omega(point((0)^w)))",
    "union(0:canon(2, 1), 10:canon(1, 1), 11:point((0)^w))",
    "union(00:omega(canon(1, 2)), 01:canon(2, 1), 1:omega(point((01)^w)))",
    "union(1:omega(omega(point(1(0)^w))))",
    "union(0:union(0:canon(1, 1), 1:canon(1, 1)), 1:canon(2, 1))",
    "union(0:omega(union(0:point((0)^w), 1:canon(1, 1))), 1:full)",
    "union(0:point((0)^w), 10:point((1)^w), 11:point((01)^w))",
    "union(0:canon(1, 1), 1:canon(1, 1))",
    "union(0:canon(3, 1), 1:omega(canon(2, 1)))",
    "omega(union(0:canon(0, 3), 1:canon(1, 2)))",
    "omega(omega(union(0:full, 1:point((1)^w))))",
    "union(000:canon(1, 2), 001:canon(2, 2), 01:empty, 1:canon(0, 3))",
    "union(010:point((1)^w), 011:canon(0, 2), 1:omega(empty))",
) + tuple(f"omega({atom})" for atom in _ATOMS) + tuple(
    f"union(0:{a}, 1:omega({b}))" for a, b in zip(_ATOMS, _ATOMS[1:] + _ATOMS[:1])
) + tuple(
    f"omega(union(0:{a}, 10:{b}, 11:empty))" for a, b in zip(_ATOMS[::2], _ATOMS[1::2])
)
