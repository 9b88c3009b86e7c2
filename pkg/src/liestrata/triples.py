"""Triples, index sets, structure vectors and sign vectors.

All indices are 1-based in external formats.  Index sets keep their triples
in dictionary order, and every vector or matrix indexed by an index set uses
that order.  Everything here is immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    DimensionMismatchError,
    DuplicateTripleError,
    IndexOutOfRangeError,
    ModeError,
    OrderViolationError,
)

THETA = "theta"
UPSILON = "upsilon"


class Triple(NamedTuple):
    i: int
    j: int
    k: int

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


def check_triple(t: Triple, n: int, mode: str = THETA) -> None:
    """Raise if t is not a valid triple of the given mode inside [n]."""
    if not (1 <= t.i <= n and 1 <= t.j <= n and 1 <= t.k <= n):
        raise IndexOutOfRangeError(f"{t} has an entry outside [1, {n}]")
    if not t.i < t.j:
        raise OrderViolationError(f"{t} needs i < j")
    if mode == THETA and not t.j < t.k:
        raise OrderViolationError(f"{t} needs i < j < k in theta mode")


def enumerate_theta(n: int) -> list[Triple]:
    """All triples with 1 <= i < j < k <= n in dictionary order."""
    if n < 1:
        raise IndexOutOfRangeError("dimension must be at least 1")
    return [Triple(*c) for c in combinations(range(1, n + 1), 3)]


@dataclass(frozen=True)
class IndexSet:
    """A set of triples marking which structure constants are nonzero."""

    n: int
    triples: tuple[Triple, ...]
    mode: str = THETA

    def __post_init__(self):
        if self.mode not in (THETA, UPSILON):
            raise ModeError(f"unknown mode {self.mode!r}")
        for t in self.triples:
            check_triple(t, self.n, self.mode)
        if list(self.triples) != sorted(set(self.triples)):
            raise OrderViolationError("triples must be strictly ascending")

    def __len__(self) -> int:
        return len(self.triples)

    def position(self, t: Triple) -> int:
        return self.triples.index(t)

    def require_theta(self, what: str) -> None:
        if self.mode != THETA:
            raise ModeError(f"{what} requires a theta-mode index set")

    def __str__(self) -> str:
        body = " ".join(str(t) for t in self.triples)
        if self.mode == THETA:
            return f"n={self.n}; {body}".rstrip()
        return f"n={self.n}; mode={self.mode}; {body}".rstrip()


def validate_index_set(raw: Iterable[tuple[int, int, int]], n: int,
                       mode: str = THETA) -> IndexSet:
    """Sort raw triples into a valid IndexSet, raising on any violation."""
    triples = [Triple(*t) for t in raw]
    for t in triples:
        check_triple(t, n, mode)
    triples.sort()
    for a, b in zip(triples, triples[1:]):
        if a == b:
            raise DuplicateTripleError(f"duplicate triple {a}")
    return IndexSet(n, tuple(triples), mode)


def parse_index_set(text: str) -> IndexSet:
    """Parse the textual format ``n=7; (1,2,4) (1,3,5) ...``.

    An optional ``mode=theta|upsilon`` segment may appear before the triples.
    JSON documents ``{"n": .., "mode": .., "triples": [[i,j,k], ...]}`` are
    accepted too.
    """
    text = text.strip()
    if text.startswith("{"):
        doc = json.loads(text)
        return validate_index_set([tuple(t) for t in doc["triples"]],
                                  int(doc["n"]), doc.get("mode", THETA))
    n = None
    mode = THETA
    triple_src = []
    for segment in text.split(";"):
        segment = segment.strip()
        if not segment:
            continue
        if segment.startswith("n="):
            n = int(segment[2:])
        elif segment.startswith("mode="):
            mode = segment[5:].strip()
        else:
            triple_src.append(segment)
    if n is None:
        raise OrderViolationError("missing 'n=' segment in index-set text")
    raw = []
    for chunk in " ".join(triple_src).replace(")", ") ").split():
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise OrderViolationError(f"bad triple token {chunk!r}")
        parts = chunk[1:-1].split(",")
        if len(parts) != 3:
            raise OrderViolationError(f"bad triple token {chunk!r}")
        raw.append(tuple(int(p) for p in parts))
    return validate_index_set(raw, n, mode)


def index_set_document(lam: IndexSet) -> dict:
    return {"n": lam.n, "mode": lam.mode,
            "triples": [list(t) for t in lam.triples]}


@dataclass(frozen=True)
class StructureVector:
    """Exact nonzero rational structure constants indexed by an index set."""

    lam: IndexSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.lam):
            raise DimensionMismatchError(
                f"expected {len(self.lam)} values, got {len(self.values)}")
        for t, v in zip(self.lam.triples, self.values):
            if v == 0:
                raise DimensionMismatchError(f"zero structure constant at {t}")

    def __getitem__(self, pos: int) -> Fraction:
        return self.values[pos]

    def serialize(self) -> list[str]:
        return [str(v) for v in self.values]


def structure_vector(lam: IndexSet, values: Iterable) -> StructureVector:
    """Build a StructureVector, coercing entries to exact Fractions."""
    return StructureVector(lam, tuple(Fraction(v) for v in values))


def sign_vector(a: StructureVector) -> tuple[int, ...]:
    """Sign vector over Z2: bit 1 exactly where the entry is negative."""
    return tuple(1 if v < 0 else 0 for v in a.values)
