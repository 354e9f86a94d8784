from __future__ import annotations

import pytest
from hypothesis import settings

from doublesum.verifier import verify_all

# exact arithmetic on large indices has uneven timing; correctness is what matters
settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def full_run():
    """Every registry entry over its default grid, computed once per session."""
    return verify_all(jobs=1)


@pytest.fixture
def announce(capsys):
    """Print a line straight to the terminal, bypassing capture."""

    def say(line: str) -> None:
        with capsys.disabled():
            print(line)

    return say
