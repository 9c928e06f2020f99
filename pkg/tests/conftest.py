import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sspec import make_zn, mult_closure  # noqa: E402
from sspec.corpus import builtin_corpus  # noqa: E402

# acceptance results are collected here and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def z12():
    return make_zn(12)


@pytest.fixture(scope="session")
def z12_s3(z12):
    return z12, mult_closure(z12, [3])


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


def corpus_pairs(max_size=None):
    out = []
    for e in builtin_corpus().entries:
        if max_size is not None and e.ring.size > max_size:
            continue
        for gens in e.mults:
            out.append((e.ring, mult_closure(e.ring, gens)))
    return out


def pair_id(pair):
    from sspec.ring import ring_label
    R, S = pair
    return f"{ring_label(R.description)}|S={','.join(map(str, S.members))}"
