"""Shared fixtures and random-instance generators for the test suite."""

from __future__ import annotations

import json
import random
from pathlib import Path

from structsys import Pattern, identity_pattern, is_generically_diagonalizable

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def fixture_meta(name: str) -> dict:
    with open(FIXTURES / f"{name}.meta.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


# the worked counterexample triple: one nonzero column in A, two mixing
# output rows plus a dedicated one, a single functional state
COUNTER_A = Pattern(4, 4, {(1, 4), (2, 4), (3, 4), (4, 4)})
COUNTER_C = Pattern(3, 4, {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 4)})
COUNTER_F = Pattern(1, 4, {(1, 1)})

# its displayed numeric realization (functionally observable despite not SFO)
COUNTER_A_VALUES = {(1, 4): 1.0, (2, 4): 1.0, (3, 4): 1.0, (4, 4): 1.0}
COUNTER_C_VALUES = {
    (1, 1): 1.0, (1, 2): 1.0, (1, 3): 1.0,
    (2, 1): 2.0, (2, 2): 1.0, (2, 3): 1.0,
    (3, 4): 1.0,
}
COUNTER_F_VALUES = {(1, 1): 1.0}


def rand_pattern(rnd: random.Random, rows: int, cols: int, density: float) -> Pattern:
    nz = {
        (i, j)
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
        if rnd.random() < density
    }
    return Pattern(rows, cols, frozenset(nz))


def rand_square(rnd: random.Random, n: int, density: float | None = None) -> Pattern:
    return rand_pattern(rnd, n, n, density if density is not None else rnd.uniform(0.1, 0.6))


def rand_nonempty_rows(rnd: random.Random, rows: int, cols: int, density: float = 0.4) -> Pattern:
    entries = set()
    for i in range(1, rows + 1):
        row = [j for j in range(1, cols + 1) if rnd.random() < density]
        if not row:
            row = [rnd.randint(1, cols)]
        entries.update((i, j) for j in row)
    return Pattern(rows, cols, frozenset(entries))


def rand_gen_diag(rnd: random.Random, n: int) -> Pattern:
    """Random generically diagonalizable square pattern.

    Mixes three generators (self-loop rich, structurally symmetric, plain
    rejection) and falls back to adding every self-loop, which always
    qualifies.
    """
    for _ in range(200):
        mode = rnd.random()
        if mode < 0.35:
            nz = {(i, i) for i in range(1, n + 1) if rnd.random() < 0.85}
            nz |= rand_square(rnd, n, rnd.uniform(0.05, 0.3)).nonzeros
        elif mode < 0.6:
            nz = set()
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    if rnd.random() < rnd.uniform(0.1, 0.4):
                        nz.add((i, j))
                        nz.add((j, i))
        else:
            nz = rand_square(rnd, n).nonzeros
        cand = Pattern(n, n, frozenset(nz))
        if is_generically_diagonalizable(cand).verdict:
            return cand
    nz = set(rand_square(rnd, n, 0.2).nonzeros)
    nz.update((i, i) for i in range(1, n + 1))
    return Pattern(n, n, frozenset(nz))


def all_patterns(n: int):
    """Every n x n pattern, as a generator (2^(n^2) of them)."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for mask in range(1 << len(cells)):
        yield Pattern(n, n, frozenset(c for k, c in enumerate(cells) if mask >> k & 1))


def eye(n: int) -> Pattern:
    return identity_pattern(n)
