"""Seeded random pruned automata for property checks."""

from __future__ import annotations

import logging
import random
from typing import Iterator, List, Optional, Tuple

from ..automaton.graph import PathAutomaton, prune
from ..util import config

logger = logging.getLogger("cantor_rank.oracle.random_automata")


def random_automaton(rng: random.Random, max_states: Optional[int] = None) -> PathAutomaton:
    """Uniform edge map over up to max_states states, pruned; may be empty."""
    bound = config.RANDOM_MAX_STATES if max_states is None else max_states
    size = rng.randint(1, bound)
    states = [f"r{i}" for i in range(size)]
    edges = {}
    for q in states:
        if rng.random() < config.RANDOM_BOTH_EDGES_P:
            bits = "01"
        else:
            bits = rng.choice("01")
        for b in bits:
            edges[(q, b)] = rng.choice(states)
    return prune(PathAutomaton(states, states[0], edges))


def random_automata(count: int, seed: int, max_states: Optional[int] = None) -> List[PathAutomaton]:
    """count nonempty random automata; empties are discarded and redrawn."""
    rng = random.Random(seed)
    out = []
    discarded = 0
    while len(out) < count:
        a = random_automaton(rng, max_states)
        if a.is_empty():
            discarded += 1
            continue
        out.append(a)
    logger.debug("drew %d random automata (seed %d, %d empty discarded)", count, seed, discarded)
    return out


def random_pairs(count: int, seed: int, max_states: Optional[int] = None) -> Iterator[Tuple[PathAutomaton, PathAutomaton]]:
    pool = random_automata(2 * count, seed, max_states)
    return zip(pool[0::2], pool[1::2])
