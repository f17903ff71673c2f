import random
from fractions import Fraction

import pytest

from viskit.geometry import arcs, bars, in_general_position, semi_arc
from viskit.graph import Graph

BIG = 1_000_003  # prime denominator keeps random endpoints in general position


def random_semi_arc(rng: random.Random, n: int):
    """Mix of coarse (tie-heavy) and fine dyadic extents."""
    if rng.random() < 0.3:
        return semi_arc([Fraction(rng.randint(1, 15), 8) for _ in range(n)])
    return semi_arc([Fraction(2 * rng.getrandbits(30) + 1, 1 << 30) for _ in range(n)])


def random_arcs(rng: random.Random, n: int, den: int = BIG):
    return arcs([(Fraction(rng.randrange(2 * den), den), Fraction(rng.randint(1, 2 * den - 1), den))
                 for _ in range(n)])


def random_gp_arcs(rng: random.Random, n: int):
    while True:
        rep = random_arcs(rng, n)
        if in_general_position(rep, strict=True):
            return rep


def random_bars(rng: random.Random, n: int, width: int = 12):
    spec = []
    for _ in range(n):
        a = rng.randrange(width)
        spec.append((a, a + rng.randint(1, width // 2)))
    return bars(spec)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"criterion {num:>2}: {outcome:<6} {detail}")
