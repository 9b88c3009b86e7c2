"""Aligned pairs, quadruples, w-vectors and the stratum classification.

Two distinct strictly increasing triples are aligned exactly when their root
vectors have inner product -1, which forces them to share exactly one index
r sitting in the last slot of one triple and a first/middle slot of the
other.  The relative position of r decides the sign of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ModeError, NotAlignedError, UnknownQuadrupleError
from .linalg import (IntVector, primitive_span_basis, rank, root_matrix,
                     root_vector)
from .triples import IndexSet, Triple

Quadruple = tuple[int, int, int, int]

# classification labels
EMPTY = "empty"
UNOBSTRUCTED = "unobstructed"
FINITE_1Q2 = "finite-1q2"
FINITE_2Q2_DISJOINT = "finite-2q2-disjoint"
ONEDIM_2Q2_SHARED = "onedim-2q2-shared"
ONEDIM_1Q3 = "onedim-1q3"
ONEDIM_1Q3_1Q2_SHARED = "onedim-1q3+1q2-shared"
UNCLASSIFIED = "unclassified"

CLASSIFICATIONS = (EMPTY, UNOBSTRUCTED, FINITE_1Q2, FINITE_2Q2_DISJOINT,
                   ONEDIM_2Q2_SHARED, ONEDIM_1Q3, ONEDIM_1Q3_1Q2_SHARED,
                   UNCLASSIFIED)


def _require_theta_triples(*ts: Triple) -> None:
    for t in ts:
        if not (t.i < t.j < t.k):
            raise ModeError(f"{t} is not strictly increasing")


def root_dot(t1: Triple, t2: Triple) -> int:
    """Inner product of the two root vectors, computed combinatorially."""
    pos1, pos2 = {t1.i, t1.j}, {t2.i, t2.j}
    d = len(pos1 & pos2)
    d -= 1 if t1.k in pos2 else 0
    d -= 1 if t2.k in pos1 else 0
    d += 1 if t1.k == t2.k else 0
    return d


def aligned(t1: Triple, t2: Triple) -> bool:
    """Whether the pair is aligned (root-vector inner product -1)."""
    _require_theta_triples(t1, t2)
    if t1 == t2:
        raise NotAlignedError("a triple is not aligned with itself")
    return root_dot(t1, t2) == -1


@lru_cache(maxsize=None)
def _pair_info(t1: Triple, t2: Triple) -> tuple[Quadruple, int] | None:
    """(quadruple, sign) of an aligned pair, None when not aligned.

    The shared index r is the last entry of one triple (a1, a2, r) and the
    first or middle entry of the other.  r first means the pair is the
    disjoint-above pattern with sign +1; r in the middle splits on where the
    partner's first entry falls relative to (a1, a2).  The two remaining
    patterns of the six conceivable ones contradict i < j < k and are
    unreachable.
    """
    if root_dot(t1, t2) != -1:
        return None
    shared = set(t1) & set(t2)
    assert len(shared) == 1
    r = shared.pop()
    if t1.k == r:
        low, high = t1, t2
    else:
        low, high = t2, t1
    assert low.k == r and r in (high.i, high.j)
    quad_set = set(low) ^ set(high)
    quad: Quadruple = tuple(sorted(quad_set))  # type: ignore[assignment]
    a1, a2 = low.i, low.j
    if high.i == r:
        sign = 1                      # {(q1,q2,r), (r,q3,q4)}
    else:
        b1 = high.i
        if b1 > a2:
            sign = -1                 # {(q1,q2,r), (q3,r,q4)}
        elif b1 > a1:
            sign = 1                  # {(q1,q3,r), (q2,r,q4)}
        else:
            sign = -1                 # {(q2,q3,r), (q1,r,q4)}
    return quad, sign


def quadruple_of(t1: Triple, t2: Triple) -> Quadruple:
    """Sorted symmetric difference of the index sets of an aligned pair."""
    _require_theta_triples(t1, t2)
    info = _pair_info(t1, t2)
    if info is None:
        raise NotAlignedError(f"{t1} and {t2} are not aligned")
    return info[0]


def pair_sign(t1: Triple, t2: Triple) -> int:
    """The +-1 sign attached to an aligned pair; symmetric in arguments."""
    _require_theta_triples(t1, t2)
    info = _pair_info(t1, t2)
    if info is None:
        raise NotAlignedError(f"{t1} and {t2} are not aligned")
    return info[1]


@dataclass(frozen=True)
class AlignedPair:
    """Positions p < r of two aligned triples in an index set, with sign."""

    p: int
    r: int
    sign: int


@dataclass(frozen=True)
class QuadrupleTable:
    """Aligned pairs of an index set grouped by their quadruple."""

    lam: IndexSet
    pairs: dict[Quadruple, tuple[AlignedPair, ...]]

    @property
    def quadruples(self) -> tuple[Quadruple, ...]:
        return tuple(sorted(self.pairs))

    def multiplicity(self, q: Quadruple) -> int:
        if q not in self.pairs:
            raise UnknownQuadrupleError(f"quadruple {q} not in table")
        return len(self.pairs[q])

    def multiplicities(self) -> dict[Quadruple, int]:
        return {q: len(self.pairs[q]) for q in self.quadruples}

    def participants(self, q: Quadruple) -> set[int]:
        """Positions of triples occurring in some pair of quadruple q."""
        if q not in self.pairs:
            raise UnknownQuadrupleError(f"quadruple {q} not in table")
        return {pos for pair in self.pairs[q] for pos in (pair.p, pair.r)}

    def __len__(self) -> int:
        return len(self.pairs)


def quadruple_table(lam: IndexSet) -> QuadrupleTable:
    """All aligned pairs of lam grouped by quadruple, with signs."""
    lam.require_theta("quadruple table")
    grouped: dict[Quadruple, list[AlignedPair]] = {}
    ts = lam.triples
    for p in range(len(ts)):
        for r in range(p + 1, len(ts)):
            info = _pair_info(ts[p], ts[r])
            if info is None:
                continue
            quad, sign = info
            grouped.setdefault(quad, []).append(AlignedPair(p, r, sign))
    return QuadrupleTable(lam, {q: tuple(v) for q, v in grouped.items()})


def common_triples(q1: Quadruple, q2: Quadruple,
                   table: QuadrupleTable) -> list[Triple]:
    """Triples participating in an aligned pair of both quadruples."""
    shared = table.participants(q1) & table.participants(q2)
    return [table.lam.triples[pos] for pos in sorted(shared)]


def w_vector(m1: int, m2: int, m3: int, m4: int, length: int) -> IntVector:
    """e_m1 + e_m2 - e_m3 - e_m4 over 0-based positions in an index set."""
    v = [0] * length
    v[m1] += 1
    v[m2] += 1
    v[m3] -= 1
    v[m4] -= 1
    return tuple(v)


def lambda_subspace_vectors(lam: IndexSet) -> list[IntVector]:
    """All w-vectors from pairs of aligned pairs sharing a quadruple.

    Every unordered combination of two distinct pairs with the same
    quadruple contributes one vector, oriented with the earlier pair
    positive.
    """
    table = quadruple_table(lam)
    vectors = []
    for q in table.quadruples:
        pairs = sorted(table.pairs[q], key=lambda ap: (ap.p, ap.r))
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                vectors.append(w_vector(pairs[a].p, pairs[a].r,
                                        pairs[b].p, pairs[b].r, len(lam)))
    return vectors


def lambda_subspace(lam: IndexSet) -> tuple[IntVector, ...]:
    """Primitive echelon basis of the span of all w-vectors of lam."""
    return primitive_span_basis(lambda_subspace_vectors(lam))


def null_space_spanning(lam: IndexSet) -> bool:
    """Whether the w-vectors span the whole left null space of Y."""
    lam.require_theta("null-space-spanning test")
    dim_w = len(lambda_subspace(lam))
    y = root_matrix(lam)
    dim_null = len(lam) - rank(y)
    return dim_w == dim_null


def classify(lam: IndexSet) -> str:
    """Place lam into one of the classification labels.

    Labels follow the quadruple multiplicity pattern and common-triple
    conditions; any pattern outside them, a non-spanning subspace, or two
    or more common triples gives "unclassified".
    """
    lam.require_theta("classification")
    table = quadruple_table(lam)
    if not table.pairs:
        return UNOBSTRUCTED
    mults = table.multiplicities()
    if any(m == 1 for m in mults.values()):
        return EMPTY
    if not null_space_spanning(lam):
        return UNCLASSIFIED
    quads = table.quadruples
    counts = sorted(mults.values())
    if counts == [2]:
        return FINITE_1Q2
    if counts == [2, 2]:
        shared = common_triples(quads[0], quads[1], table)
        if not shared:
            return FINITE_2Q2_DISJOINT
        if len(shared) == 1:
            return ONEDIM_2Q2_SHARED
        return UNCLASSIFIED
    if counts == [3]:
        return ONEDIM_1Q3
    if counts == [2, 3]:
        q2 = next(q for q in quads if mults[q] == 2)
        q3 = next(q for q in quads if mults[q] == 3)
        if len(common_triples(q2, q3, table)) == 1:
            return ONEDIM_1Q3_1Q2_SHARED
        return UNCLASSIFIED
    return UNCLASSIFIED


def aligned_pair_root_sum(lam: IndexSet, pair: AlignedPair) -> IntVector:
    """Sum of the pair's root vectors; equals e_q1 + e_q2 + e_q3 - e_q4."""
    t1, t2 = lam.triples[pair.p], lam.triples[pair.r]
    y1, y2 = root_vector(t1, lam.n), root_vector(t2, lam.n)
    return tuple(a + b for a, b in zip(y1, y2))
