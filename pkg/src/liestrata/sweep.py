"""Deterministic census sweeps over all index sets inside Theta_n.

Strata are enumerated by size and then lexicographically by triple sequence.
Pair data (quadruple and sign per aligned pair) is cached per dimension so a
sweep touches each pair of triples once.  The rational kernel is only
computed when a stratum's multiplicity pattern can actually match one of the
classification cases, or on small dimensions where it is free.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapExceededError
from .quadruples import (EMPTY, UNCLASSIFIED, UNOBSTRUCTED, classify,
                         _pair_info)
from .jacobi import (OBSTRUCTION_AUTOMATIC, OBSTRUCTION_EMPTY,
                     OBSTRUCTION_NONTRIVIAL)
from .triples import IndexSet, THETA, Triple, enumerate_theta

WORKERS_ENV = "LIESTRATA_WORKERS"

_CLASSIFIABLE_PATTERNS = ((2,), (2, 2), (3,), (2, 3))


@dataclass(frozen=True)
class StratumSummary:
    triples: tuple[Triple, ...]
    obstruction: str
    classification: str | None
    multiplicities: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.triples)


@lru_cache(maxsize=8)
def _pair_cache(n: int):
    theta = enumerate_theta(n)
    pairs = {}
    for a in range(len(theta)):
        for b in range(a + 1, len(theta)):
            info = _pair_info(theta[a], theta[b])
            if info is not None:
                pairs[(a, b)] = info[0]
    return theta, pairs


def _summarize(n: int, combo: tuple[int, ...], theta, pairs,
               want_classification: bool) -> StratumSummary:
    counter: Counter = Counter()
    for x in range(len(combo)):
        for y in range(x + 1, len(combo)):
            quad = pairs.get((combo[x], combo[y]))
            if quad is not None:
                counter[quad] += 1
    triples = tuple(theta[i] for i in combo)
    mults = tuple(sorted(counter.values()))
    if not counter:
        obstruction = OBSTRUCTION_AUTOMATIC
    elif 1 in counter.values():
        obstruction = OBSTRUCTION_EMPTY
    else:
        obstruction = OBSTRUCTION_NONTRIVIAL
    classification = None
    if want_classification:
        if obstruction == OBSTRUCTION_AUTOMATIC:
            classification = UNOBSTRUCTED
        elif obstruction == OBSTRUCTION_EMPTY:
            classification = EMPTY
        elif mults not in _CLASSIFIABLE_PATTERNS:
            classification = UNCLASSIFIED
        else:
            classification = classify(IndexSet(n, triples, THETA))
    return StratumSummary(triples, obstruction, classification, mults)


def _check_caps(n: int, max_size, size, cap: int) -> None:
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the cap {cap}")
    if n >= 7 and max_size is None and size is None:
        raise CapExceededError(f"n={n} needs --size or --max-size")


def _sizes(n: int, max_size, size) -> list[int]:
    total = len(enumerate_theta(n))
    if size is not None:
        return [size] if 0 <= size <= total else []
    top = total if max_size is None else min(max_size, total)
    return list(range(top + 1))


def _keep(summary: StratumSummary, obstruction, classification,
          discard_obstructed: bool) -> bool:
    if discard_obstructed and summary.obstruction == OBSTRUCTION_EMPTY:
        return False
    if obstruction is not None and summary.obstruction != obstruction:
        return False
    if classification is not None and \
            summary.classification != classification:
        return False
    return True


def _block(args) -> list[StratumSummary]:
    """All matching summaries of one (size, first-index) enumeration block."""
    (n, k, first, obstruction, classification, discard, want_cls) = args
    theta, pairs = _pair_cache(n)
    out = []
    if k == 0:
        combos: Iterable[tuple[int, ...]] = [()] if first == -1 else []
    elif first == -1:
        combos = []
    else:
        combos = ((first, *rest)
                  for rest in combinations(range(first + 1, len(theta)), k - 1))
    for combo in combos:
        summary = _summarize(n, combo, theta, pairs, want_cls)
        if _keep(summary, obstruction, classification, discard):
            out.append(summary)
    return out


def sweep_strata(n: int, max_size: int | None = None, size: int | None = None,
                 cap: int = 8, obstruction: str | None = None,
                 classification: str | None = None,
                 discard_obstructed: bool = False,
                 with_classification: bool | None = None,
                 workers: int = 1) -> Iterator[StratumSummary]:
    """Yield matching strata in (size, lexicographic) order."""
    _check_caps(n, max_size, size, cap)
    theta, pairs = _pair_cache(n)
    want_cls = with_classification if with_classification is not None \
        else (n <= 6 or classification is not None)
    if classification is not None:
        want_cls = True
    tasks = []
    for k in _sizes(n, max_size, size):
        firsts = [-1] if k == 0 else list(range(len(theta) - k + 1))
        for first in firsts:
            tasks.append((n, k, first, obstruction, classification,
                          discard_obstructed, want_cls))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block in pool.map(_block, tasks, chunksize=4):
                yield from block
    else:
        for task in tasks:
            yield from _block(task)


def workers_from_env(default: int = 1) -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw)) if raw else default
    except ValueError:
        return default


def sweep_counts(summaries: Iterable[StratumSummary]) -> dict:
    """Counaccumulator used by the CLI for the trailing summary."""
    counts: dict = {"total": 0, "obstruction": Counter(),
                    "classification": Counter()}
    for s in summaries:
        counts["total"] += 1
        counts["obstruction"][s.obstruction] += 1
        if s.classification is not None:
            counts["classification"][s.classification] += 1
    return counts
