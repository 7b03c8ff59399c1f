"""Reverse-search enumeration of optimal lotteries and displacement vectors.

Both enumerations walk a family tree rooted at a canonical object and
defined by a parent rule, so no visited set is needed: the traversal keeps
only the current path.  Nodes of odd depth are emitted on the way down and
nodes of even depth on the way back up ("prepostorder"), which bounds the
number of tree edges walked between consecutive outputs by two.

Lottery side: the root of a class is its unique member with no left tangled
triple; the parent of any other member braids away the smallest minimal
left triple, and a braid on a minimal right triple ``t`` yields a child
exactly when ``t`` becomes the smallest minimal left triple afterwards.

Vector side: the root is the lexicographically largest optimal vector; the
parent contracts the first maximum entry after the first minimum into that
minimum.  Children are read off the max-min index sequence, which is shared
by every vector in the tree, so each child takes constant bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import DisplacementVector, Permutation, optimal_dv
from .lottery import (
    Chirality,
    CyclicLadderLottery,
    apply_braid,
    construct_lottery,
    left_triples,
    tangled_triples,
)


@dataclass
class TraversalCounters:
    """Instrumentation for delay and bookkeeping bounds.

    ``max_gap`` is the largest number of tree-edge traversals between
    consecutive outputs (including the stretch before the first output).
    ``max_step_touches`` is the largest number of index-sequence reads and
    vector-entry writes performed while descending or ascending one edge of
    the vector family tree.
    """

    edges: int = 0
    outputs: int = 0
    max_gap: int = 0
    _gap: int = 0
    max_step_touches: int = 0
    _step: int = 0

    def edge(self) -> None:
        self.edges += 1
        self._gap += 1
        if self._step > self.max_step_touches:
            self.max_step_touches = self._step
        self._step = 0

    def output(self) -> None:
        self.outputs += 1
        if self._gap > self.max_gap:
            self.max_gap = self._gap
        self._gap = 0

    def touch(self, k: int = 1) -> None:
        self._step += k


# ---------------------------------------------------------------------------
# lottery family tree
# ---------------------------------------------------------------------------


def _minimal_triples(lottery, chirality):
    return [
        t.elements
        for t in tangled_triples(lottery)
        if t.minimal and t.chirality is chirality
    ]


def cll_parent(lottery: CyclicLadderLottery) -> CyclicLadderLottery:
    """Braid away the smallest minimal left tangled triple."""
    lefts = _minimal_triples(lottery, Chirality.LEFT)
    if not lefts:
        if left_triples(lottery):
            raise RuntimeError(
                "left triples exist but none is minimal; family tree is broken"
            )
        raise ValueError("the root of a class has no parent")
    return apply_braid(lottery, min(lefts))


def cll_root(pi: Permutation, y: DisplacementVector) -> CyclicLadderLottery:
    """The unique class member without left tangled triples."""
    cur = construct_lottery(pi, y)
    while left_triples(cur):
        cur = cll_parent(cur)
    return cur


def cll_children(lottery: CyclicLadderLottery) -> list[CyclicLadderLottery]:
    """Members whose parent rule points back at this lottery.

    For each minimal right triple ``t`` (ascending element order), the braid
    image is a child iff ``t`` is the smallest minimal left triple there.
    """
    children = []
    for elems in sorted(_minimal_triples(lottery, Chirality.RIGHT)):
        image = apply_braid(lottery, elems)
        if min(_minimal_triples(image, Chirality.LEFT)) == elems:
            children.append(image)
    return children


def enum_cll(
    pi: Permutation,
    y: DisplacementVector,
    counters: Optional[TraversalCounters] = None,
) -> Iterator[CyclicLadderLottery]:
    """Every lottery of ``pi`` with vector ``y`` and pairwise-single crossings.

    Emits each class member exactly once, in prepostorder over the family
    tree, starting from the root.
    """
    c = counters or TraversalCounters()

    # odd depths are emitted on arrival, even depths right after the walk
    # ascends out of them, which keeps every emission within two edge moves
    # of the previous one
    def walk(node: CyclicLadderLottery, depth: int) -> Iterator[CyclicLadderLottery]:
        if depth % 2 == 1:
            c.output()
            yield node
        for child in cll_children(node):
            c.edge()
            yield from walk(child, depth + 1)
            c.edge()
            if (depth + 1) % 2 == 0:
                c.output()
                yield child
        if depth == 0:
            c.output()
            yield node

    yield from walk(cll_root(pi, y), 0)


# ---------------------------------------------------------------------------
# displacement vector family tree
# ---------------------------------------------------------------------------


def _alpha_beta(entries) -> tuple[Optional[int], Optional[int]]:
    # first index holding the minimum, then first later index holding the
    # maximum; both 1-based, None when undefined
    mx, mn = max(entries), min(entries)
    if mx == mn:
        return None, None
    alpha = next(k + 1 for k, v in enumerate(entries) if v == mn)
    beta = next(
        (k + 1 for k, v in enumerate(entries) if k + 1 > alpha and v == mx), None
    )
    return alpha, beta


def dv_parent(x: DisplacementVector) -> DisplacementVector:
    """Contract the first maximum after the first minimum into that minimum."""
    alpha, beta = _alpha_beta(x.entries)
    if alpha is None or beta is None or max(x.entries) - min(x.entries) != x.n:
        # no legal contraction: a lone optimal vector is its own root
        raise ValueError("the root vector has no parent")
    work = list(x.entries)
    work[beta - 1] -= x.n
    work[alpha - 1] += x.n
    return DisplacementVector(tuple(work))


def dv_root(pi: Permutation) -> DisplacementVector:
    """The lexicographically largest optimal displacement vector."""
    x = optimal_dv(pi)
    while True:
        alpha, beta = _alpha_beta(x.entries)
        if alpha is None or beta is None or max(x.entries) - min(x.entries) != x.n:
            return x
        x = dv_parent(x)


def _maxmin_indices(entries) -> list[int]:
    mx, mn = max(entries), min(entries)
    return [k + 1 for k, v in enumerate(entries) if v == mx or v == mn]


def dv_children(x: DisplacementVector) -> list[DisplacementVector]:
    """Contractions of ``x`` whose parent rule points back at ``x``."""
    entries = x.entries
    mx, mn = max(entries), min(entries)
    if mx - mn != x.n or entries[_maxmin_indices(entries)[0] - 1] == mn:
        return []
    m = _maxmin_indices(entries)
    alpha, beta = _alpha_beta(entries)
    p = m.index(alpha)
    q = m.index(beta) if beta is not None else len(m)
    children = []
    for j in range(p, q):
        work = list(entries)
        work[m[p - 1] - 1] -= x.n
        work[m[j] - 1] += x.n
        children.append(DisplacementVector(tuple(work)))
    return children


def enum_dv(
    pi: Permutation, counters: Optional[TraversalCounters] = None
) -> Iterator[DisplacementVector]:
    """Every optimal displacement vector of ``pi``, exactly once.

    Walks the family tree in prepostorder with one shared work vector; each
    descend or ascend touches two index-sequence entries and two vector
    entries, so the bookkeeping per step is constant.
    """
    c = counters or TraversalCounters()
    root = dv_root(pi)
    n = pi.n
    work = list(root.entries)
    mx, mn = max(work), min(work)
    if mx - mn != n:
        c.output()
        yield root
        return
    m = _maxmin_indices(work)
    alpha, beta = _alpha_beta(work)
    p0 = m.index(alpha)
    q0 = m.index(beta) if beta is not None else len(m)

    def walk(p: int, q: int, depth: int) -> Iterator[DisplacementVector]:
        if depth % 2 == 1:
            c.output()
            yield DisplacementVector(tuple(work))
        if work[m[0] - 1] == mx:
            for j in range(p, q):
                a, b = m[p - 1], m[j]
                c.touch(2)
                work[a - 1] -= n
                work[b - 1] += n
                c.touch(2)
                c.edge()
                yield from walk(p - 1, j, depth + 1)
                snapshot = tuple(work) if (depth + 1) % 2 == 0 else None
                work[a - 1] += n
                work[b - 1] -= n
                c.touch(2)
                c.edge()
                if snapshot is not None:
                    c.output()
                    yield DisplacementVector(snapshot)
        if depth == 0:
            c.output()
            yield DisplacementVector(tuple(work))

    yield from walk(p0, q0, 0)


def enum_all(
    pi: Permutation, counters: Optional[TraversalCounters] = None
) -> Iterator[CyclicLadderLottery]:
    """Every optimal cyclic ladder lottery of ``pi``, grouped by vector.

    Streams ``enum_cll(pi, x)`` for each ``x`` produced by ``enum_dv(pi)``;
    classes are disjoint, so the concatenation is duplicate-free and
    complete.
    """
    for x in enum_dv(pi):
        yield from enum_cll(pi, x, counters)
