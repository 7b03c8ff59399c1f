"""Shortest reconfiguration for lotteries and for displacement vectors.

Lotteries with the same permutation and displacement vector form one class;
inside a class any two lotteries are connected by braid moves, and the
shortest move count equals the size of the symmetric difference of their
left-tangled-triple sets.  Across different vectors no braid sequence
exists, since a braid move never changes the vector.

Optimal displacement vectors of one permutation are connected by max-min
contractions (subtract ``n`` from a maximum entry, add ``n`` to a minimum
entry when they differ by exactly ``n``); the shortest contraction count is
half the number of differing coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DisplacementVector, Permutation, is_optimal_dv
from .lottery import (
    CyclicLadderLottery,
    apply_braid,
    dv_of,
    evaluate,
    left_triples,
    simulate,
    tangled_triples,
    _ancestor_mask,
)


class UnreachableError(ValueError):
    """The two inputs live in different reconfiguration components."""


@dataclass(frozen=True)
class BraidMove:
    triple: tuple[int, int, int]

    def to_json_obj(self) -> dict:
        return {"braid": list(self.triple)}


@dataclass(frozen=True)
class MaxMinContraction:
    max_index: int
    min_index: int

    def to_json_obj(self) -> dict:
        return {"contract": [self.max_index, self.min_index]}


ReconfigStep = BraidMove | MaxMinContraction


def _endpoint_json(obj) -> object:
    if isinstance(obj, CyclicLadderLottery):
        return {"n": obj.n, "word": list(obj.word)}
    if isinstance(obj, DisplacementVector):
        return list(obj.entries)
    raise TypeError(f"cannot serialize endpoint of type {type(obj)!r}")


@dataclass(frozen=True)
class ReconfigSequence:
    """An ordered list of steps carrying ``start`` to ``end``."""

    start: object
    steps: tuple
    end: object

    def __len__(self) -> int:
        return len(self.steps)

    def to_json_obj(self) -> dict:
        return {
            "start": _endpoint_json(self.start),
            "steps": [s.to_json_obj() for s in self.steps],
            "end": _endpoint_json(self.end),
        }


def _require_same_class(
    a: CyclicLadderLottery, b: CyclicLadderLottery
) -> tuple[Permutation, DisplacementVector]:
    if a.n != b.n or evaluate(a) != evaluate(b):
        raise ValueError("lotteries belong to different permutations")
    va, vb = dv_of(a), dv_of(b)
    if va != vb:
        raise UnreachableError(
            "lotteries have different displacement vectors; "
            "no braid sequence connects them"
        )
    return evaluate(a), va


# ---------------------------------------------------------------------------
# pushing a crossing to the top (reachability machinery)
# ---------------------------------------------------------------------------


def _positions_before(lottery: CyclicLadderLottery) -> list[dict]:
    # per bar index t: column of every element just before bar t fires
    n = lottery.n
    state = list(range(1, n + 1))
    cols = []
    for c, a, b in simulate(lottery).events:
        cols.append({e: p + 1 for p, e in enumerate(state)})
        if c == n and n >= 2:
            state[n - 1], state[0] = state[0], state[n - 1]
        else:
            state[c - 1], state[c] = state[c], state[c - 1]
    return cols


def _interior_columns(p_left: int, p_right: int, n: int) -> set[int]:
    # columns strictly between two routes, walking rightward around the circle
    cols = set()
    c = p_left % n + 1
    while c != p_right:
        cols.add(c)
        c = c % n + 1
    return cols


def _region_contents(lottery, i, i1, bar_index):
    """Contents of the region above the crossing of routes ``i`` and ``i1``.

    The region is swept between the two routes in the orientation that
    closes at the crossing: from the route that crosses rightward there to
    the other one.  Returns the foreign crossings inside it, all foreign
    routes that dip into it, and the subset of those routes that cross both
    boundary routes above the target crossing.
    """
    sim = simulate(lottery)
    cols = _positions_before(lottery)
    n = lottery.n
    left_route = sim.events[bar_index][1]
    lo, hi = (i, i1) if left_route == i else (i1, i)
    inside_crossings = []
    inside_routes = set()
    crossers = {i: set(), i1: set()}
    for t in range(bar_index):
        here = cols[t]
        interior = _interior_columns(here[lo], here[hi], n)
        _, a, b = sim.events[t]
        touched = {a, b} & {i, i1}
        if touched:
            for e in (a, b):
                if e not in (i, i1):
                    for r in touched:
                        crossers[r].add(e)
        elif here[a] in interior and here[b] in interior:
            inside_crossings.append((t, a, b))
        for e, p in here.items():
            if e not in (i, i1) and p in interior:
                inside_routes.add(e)
    here = cols[bar_index]
    interior = _interior_columns(here[lo], here[hi], n)
    for e, p in here.items():
        if e not in (i, i1) and p in interior:
            inside_routes.add(e)
    two_sided = inside_routes & crossers[i] & crossers[i1]
    return inside_crossings, inside_routes, two_sided


def push_to_top(
    lottery: CyclicLadderLottery, i: int
) -> tuple[CyclicLadderLottery, ReconfigSequence]:
    """Braid the crossing of routes ``i`` and ``i+1`` as high as it can go.

    While a foreign crossing sits in the region above the target crossing,
    a minimal triple through it is braided out; once only parallel foreign
    routes crossing both boundary routes remain, the innermost of them is
    braided below the target.  When these reductions finish, the crossing
    is topmost (no bar above its level on a column it touches) whenever any
    lottery of the class has it topmost; a route that enters the region
    around the seam and crosses only one boundary route cannot be braided
    away by any sequence, and in that case the fixed point is returned
    as-is.
    """
    n = lottery.n
    i1 = i % n + 1
    if i == i1:
        raise ValueError("routes do not cross")
    pair = frozenset((i, i1))
    moves = []
    cur = lottery
    max_rounds = len(lottery.word) ** 2 + n + 4
    for _ in range(max_rounds):
        sim = simulate(cur)
        if pair not in sim.pair_bars:
            raise ValueError(f"routes {i} and {i1} do not cross")
        bar_index = sim.pair_bars[pair][0]
        anc = _ancestor_mask(cur.word, n, bar_index)
        if not any(anc[:bar_index]):
            break
        inside_crossings, inside_routes, two_sided = _region_contents(
            cur, i, i1, bar_index
        )
        minimal = {t.elements for t in tangled_triples(cur) if t.minimal}
        candidates = []
        if inside_crossings:
            for _, a, b in inside_crossings:
                candidates.append(tuple(sorted((i, a, b))))
                candidates.append(tuple(sorted((i1, a, b))))
        elif two_sided:
            # parallel subpseudolines: peel the innermost one below the target
            last_cross = {}
            for t in range(bar_index):
                _, a, b = sim.events[t]
                for e, other in ((a, b), (b, a)):
                    if e in (i, i1) and other in two_sided:
                        last_cross[other] = t
            for j in sorted(two_sided, key=lambda e: -last_cross.get(e, -1)):
                candidates.append(tuple(sorted((i, i1, j))))
        else:
            break  # only one-sided seam entrants remain; nothing braidable
        before = (len(inside_crossings), len(two_sided), len(inside_routes))
        applied = False
        for triple in candidates:
            if triple not in minimal:
                continue
            nxt = apply_braid(cur, triple)
            nxt_bar = simulate(nxt).pair_bars[pair][0]
            after = _region_contents(nxt, i, i1, nxt_bar)
            if (len(after[0]), len(after[2]), len(after[1])) < before:
                moves.append(BraidMove(triple))
                cur = nxt
                applied = True
                break
        if not applied:
            # remaining region contents hang on seam entrants that cross only
            # one boundary route; no braid sequence can clear them
            break
    else:
        raise RuntimeError("push_to_top did not converge")
    return cur, ReconfigSequence(lottery, tuple(moves), cur)


# ---------------------------------------------------------------------------
# shortest reconfiguration of lotteries
# ---------------------------------------------------------------------------


def lt_symmetric_difference(
    a: CyclicLadderLottery, b: CyclicLadderLottery
) -> set:
    """Symmetric difference of the left-tangled-triple sets of two lotteries."""
    _require_same_class(a, b)
    return set(left_triples(a) ^ left_triples(b))


def cll_distance(a: CyclicLadderLottery, b: CyclicLadderLottery) -> int:
    """Length of a shortest braid sequence between two same-class lotteries."""
    return len(lt_symmetric_difference(a, b))


def cll_path(
    a: CyclicLadderLottery, b: CyclicLadderLottery
) -> ReconfigSequence:
    """A shortest braid sequence from ``a`` to ``b``.

    Repeatedly braids a triple of the symmetric difference that is minimal
    in the current front lottery (or, failing that, minimal in the current
    back lottery, replaying those moves in reverse at the end).  Every move
    shrinks the symmetric difference by one, so the sequence length equals
    ``cll_distance(a, b)``.
    """
    _require_same_class(a, b)
    target_len = cll_distance(a, b)
    front, back = a, b
    head: list[BraidMove] = []
    tail: list[BraidMove] = []
    while front != back:
        delta = left_triples(front) ^ left_triples(back)
        front_min = {
            t.elements for t in tangled_triples(front) if t.minimal
        }
        back_min = {
            t.elements for t in tangled_triples(back) if t.minimal
        }
        chosen = None
        for elems in sorted(delta):
            if elems in front_min:
                chosen = (elems, True)
                break
        if chosen is None:
            for elems in sorted(delta):
                if elems in back_min:
                    chosen = (elems, False)
                    break
        if chosen is None:
            raise RuntimeError(
                "no minimal triple in the symmetric difference"
            )
        elems, on_front = chosen
        if on_front:
            front = apply_braid(front, elems)
            head.append(BraidMove(elems))
        else:
            back = apply_braid(back, elems)
            tail.append(BraidMove(elems))
    steps = tuple(head) + tuple(reversed(tail))
    if len(steps) != target_len:
        raise RuntimeError(
            f"greedy path length {len(steps)} differs from distance {target_len}"
        )
    return ReconfigSequence(a, steps, b)


# ---------------------------------------------------------------------------
# shortest reconfiguration of displacement vectors
# ---------------------------------------------------------------------------


def dv_symmetric_difference(x: DisplacementVector, y: DisplacementVector) -> int:
    """Number of coordinates where the two vectors differ."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    return sum(1 for a, b in zip(x.entries, y.entries) if a != b)


def _require_optimal_pair(x, y, pi) -> None:
    if not (is_optimal_dv(pi, x) and is_optimal_dv(pi, y)):
        raise ValueError("both vectors must be optimal for the permutation")


def dv_distance(
    x: DisplacementVector, y: DisplacementVector, pi: Permutation
) -> int:
    """Length of a shortest contraction sequence between two optimal vectors."""
    _require_optimal_pair(x, y, pi)
    delta = dv_symmetric_difference(x, y)
    if delta % 2 != 0:
        raise RuntimeError(
            f"differing-coordinate count {delta} is odd for an optimal pair"
        )
    return delta // 2


def dv_path(
    x: DisplacementVector, y: DisplacementVector, pi: Permutation
) -> ReconfigSequence:
    """A shortest max-min contraction sequence from ``x`` to ``y``.

    The differing coordinates split into those holding ``max(x)`` that must
    drop and those holding ``min(x)`` that must rise; pairing them up, one
    contraction per pair reaches ``y`` in exactly half the differing count.
    """
    _require_optimal_pair(x, y, pi)
    n = x.n
    drops = [
        k + 1
        for k in range(n)
        if x.entries[k] != y.entries[k] and x.entries[k] > y.entries[k]
    ]
    rises = [
        k + 1
        for k in range(n)
        if x.entries[k] != y.entries[k] and x.entries[k] < y.entries[k]
    ]
    if len(drops) != len(rises):
        raise RuntimeError("differing coordinates do not pair up")
    steps = []
    work = list(x.entries)
    # the extreme values persist along the whole path, so each step is O(1)
    mx, mn = max(work), min(work)
    for a, b in zip(drops, rises):
        if work[a - 1] != mx or work[b - 1] != mn:
            raise RuntimeError("contraction endpoints are not extreme entries")
        if mx - mn != n:
            raise RuntimeError("contraction endpoints do not differ by n")
        work[a - 1] -= n
        work[b - 1] += n
        steps.append(MaxMinContraction(a, b))
    if tuple(work) != y.entries:
        raise RuntimeError("contraction replay missed the target vector")
    return ReconfigSequence(x, tuple(steps), y)


def apply_step(obj, step: ReconfigStep):
    """Apply one reconfiguration step to a lottery or displacement vector."""
    if isinstance(step, BraidMove):
        return apply_braid(obj, step.triple)
    if isinstance(step, MaxMinContraction):
        n = obj.n
        work = list(obj.entries)
        i, j = step.max_index, step.min_index
        if work[i - 1] != max(work) or work[j - 1] != min(work):
            raise ValueError("contraction indices must hold the extreme values")
        if work[i - 1] - work[j - 1] != n:
            raise ValueError("extreme entries must differ by exactly n")
        work[i - 1] -= n
        work[j - 1] += n
        return DisplacementVector(tuple(work))
    raise TypeError(f"unknown step type {type(step)!r}")


def replay(seq: ReconfigSequence):
    """Replay a sequence from its start; returns the final object."""
    cur = seq.start
    for step in seq.steps:
        cur = apply_step(cur, step)
    return cur
