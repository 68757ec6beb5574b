"""
Pytest configuration and fixtures for cantor-rank tests.
"""

import sys
import os
import pytest
import tempfile
import shutil

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from cantor_rank import corpus
from cantor_rank.automaton.graph import full_binary
from cantor_rank.automaton.textio import write_automaton

# Test configuration
TEST_SEED = 20170301
CANON1_TEXT = """\
state q0
state q1
root q0
edge q0 1 q0
edge q0 0 q1
edge q1 0 q1
"""


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir)


@pytest.fixture
def full():
    """Full binary tree: one state with both loops."""
    return full_binary()


@pytest.fixture
def canon1():
    return corpus.canon_automaton(1)


@pytest.fixture
def canon2():
    return corpus.canon_automaton(2)


@pytest.fixture
def canon3():
    return corpus.canon_automaton(3)


@pytest.fixture
def single_lasso():
    return corpus.lasso("10(0)")


@pytest.fixture
def two_cycle():
    return corpus.two_cycle()


@pytest.fixture
def full_and_canon1():
    return corpus.full_and_canon1()


@pytest.fixture
def aut_file(temp_dir):
    """Factory writing an automaton (or raw text) to a file and returning its path."""
    def write(source, name="family.aut"):
        path = os.path.join(temp_dir, name)
        if isinstance(source, str):
            with open(path, "w") as f:
                f.write(source)
        else:
            write_automaton(source, path)
        return path
    return write


@pytest.fixture
def seed():
    return TEST_SEED


@pytest.fixture
def canon1_text():
    """Canon(1) in the automaton text format."""
    return CANON1_TEXT
