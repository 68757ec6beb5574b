"""Closed families as path sets of finite automata.

Submodules are imported directly (``cantor_rank.automaton.derivative`` etc.);
``cantor_rank.models`` depends on ``graph`` so nothing is re-exported here.
"""
