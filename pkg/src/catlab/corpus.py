"""The fixed corpus of small rings used by the verification suites."""

from __future__ import annotations

from functools import lru_cache

from .qu import PairPQ
from .ring import FiniteRing, admissible_pairs

CORPUS_SPECS = (
    *(f"Z/{n}" for n in range(1, 13)),
    "Z/16",
    "Z/2[x]/(x^2+x+1)",
    "Z/2[x]/(x^2)",
    "Z/4[x]/(x^2)",
    "Z/2 x Z/4",
    "Z/4 x Z/3",
)


@lru_cache(maxsize=None)
def corpus_ring(spec: str) -> FiniteRing:
    from .cli import parse_ring_spec
    return parse_ring_spec(spec)


def corpus_rings() -> list[FiniteRing]:
    return [corpus_ring(s) for s in CORPUS_SPECS]


def corpus_pairs(max_size: int | None = None) -> list[PairPQ]:
    out = []
    for R in corpus_rings():
        if max_size is not None and R.n > max_size:
            continue
        out.extend(PairPQ(R, p, q) for p, q in admissible_pairs(R))
    return out
