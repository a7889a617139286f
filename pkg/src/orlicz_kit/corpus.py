"""Seeded test corpora: reproducible simple functions on either space kind.

The generators are deterministic in the seed (stdlib Mersenne Twister), so
report payloads built from them are byte-identical across runs.
"""

from __future__ import annotations

import random

from .measure import IntegerSet, IntervalSet, MeasureSpace, SimpleFunction

__all__ = ["simple_corpus", "simple_function"]


def simple_function(rng: random.Random, kind: str, max_pieces: int = 5) -> SimpleFunction:
    """One random simple function with disjoint supports and spread-out values."""
    n_pieces = rng.randint(1, max_pieces)
    pieces = []
    if kind == "lebesgue_line":
        # 2*n_pieces sorted breakpoints -> disjoint intervals with gaps
        cuts = sorted(rng.uniform(-20.0, 20.0) for _ in range(2 * n_pieces))
        for i in range(n_pieces):
            a, b = cuts[2 * i], cuts[2 * i + 1]
            if b - a < 1e-3:
                b = a + 1e-3
            value = rng.choice([1.0, -1.0]) * 10.0 ** rng.uniform(-1.0, 1.0)
            pieces.append((IntervalSet([(a, b)]), value))
    else:
        used: set[int] = set()
        for _ in range(n_pieces):
            start = rng.randint(-40, 40)
            width = rng.randint(1, 6)
            block = set(range(start, start + width)) - used
            if not block:
                continue
            used |= block
            value = rng.choice([1.0, -1.0]) * 10.0 ** rng.uniform(-1.0, 1.0)
            pieces.append((IntegerSet(block), value))
        if not pieces:
            pieces.append((IntegerSet([rng.randint(41, 60)]), 1.0))
    return SimpleFunction(pieces)


def simple_corpus(seed: int, count: int, space: MeasureSpace,
                  max_pieces: int = 5) -> list[SimpleFunction]:
    """``count`` seeded simple functions adapted to the space's set kind."""
    rng = random.Random(seed)
    return [simple_function(rng, space.kind, max_pieces) for _ in range(count)]
