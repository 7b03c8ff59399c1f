"""Cyclic ladder lotteries as words of bars, held in canonical form.

A lottery on ``n`` lines is a word of columns read top to bottom.  A bar at
column ``c < n`` swaps the elements at positions ``c`` and ``c+1``; a bar at
the seam column ``n`` swaps positions ``n`` and ``1``, moving the element at
position ``n`` rightward across the seam.

Two words that differ only by swapping adjacent bars on far-apart columns
(cyclic distance at least 2) describe the same arrangement of routes on the
cylinder.  ``CyclicLadderLottery`` therefore canonicalizes on construction:
each bar is scheduled greedily at the earliest level not blocked by an
earlier bar on a conflicting column, and the word is rewritten level by
level, columns ascending.  Equality of lotteries is equality of canonical
forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from .core import (
    DisplacementVector,
    Permutation,
    inversion_number,
    is_valid_dv,
)


class ConstructionError(ValueError):
    """No lottery with pairwise-at-most-once crossings realizes the input."""


class Chirality(Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> "Chirality":
        return Chirality.RIGHT if self is Chirality.LEFT else Chirality.LEFT


@dataclass(frozen=True)
class Bar:
    """One bar: its column and its level in the canonical schedule (1 = top)."""

    column: int
    level: int


@dataclass(frozen=True)
class TangledTriple:
    """Three pairwise-crossing routes, with chirality and braid-applicability."""

    elements: tuple[int, int, int]
    chirality: Chirality
    minimal: bool


def _conflict(c1: int, c2: int, n: int) -> bool:
    # bars interact when their columns coincide or are cyclically adjacent
    d = abs(c1 - c2)
    return d <= 1 or d >= n - 1


def _canonical_word(n: int, word: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    word = tuple(word)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        if word:
            raise ValueError("a one-line cylinder admits no bars")
        return (), ()
    occupied = [0] * (n + 1)
    placed = []
    for c in word:
        if not 1 <= c <= n:
            raise ValueError(f"column {c} outside [1, {n}]")
        left = c - 1 if c > 1 else n
        right = c + 1 if c < n else 1
        lvl = 1 + max(occupied[c], occupied[left], occupied[right])
        occupied[c] = lvl
        placed.append((lvl, c))
    placed.sort()
    return tuple(c for _, c in placed), tuple(lvl for lvl, _ in placed)


@dataclass(frozen=True)
class CyclicLadderLottery:
    """A word of bars over columns ``1..n``, stored canonically.

    Construct with any word; the stored ``word`` is its canonical form and
    ``levels`` the matching schedule.  Lotteries compare and hash by
    ``(n, word)``, so two words in the same commutation class are equal.
    """

    n: int
    word: tuple[int, ...]
    levels: tuple[int, ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self) -> None:
        word, levels = _canonical_word(self.n, self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "levels", levels)

    @classmethod
    def empty(cls, n: int) -> "CyclicLadderLottery":
        return cls(n, ())

    def bars(self) -> list[Bar]:
        return [Bar(c, lvl) for c, lvl in zip(self.word, self.levels)]

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "word": list(self.word)}, separators=(",", ":")
        )

    @classmethod
    def from_json(cls, text: str) -> "CyclicLadderLottery":
        data = json.loads(text)
        return cls(int(data["n"]), tuple(int(c) for c in data["word"]))


def canonicalize(lottery: CyclicLadderLottery) -> CyclicLadderLottery:
    """Recompute the canonical form (a fixed point for constructed lotteries)."""
    return CyclicLadderLottery(lottery.n, lottery.word)


class Simulation(NamedTuple):
    final: tuple[int, ...]
    dv: tuple[int, ...]
    # one event per bar, top to bottom: (column, left element, right element)
    events: tuple[tuple[int, int, int], ...]
    pair_bars: dict


@lru_cache(maxsize=4096)
def simulate(lottery: CyclicLadderLottery) -> Simulation:
    """Run the word top to bottom, recording who swaps on every bar."""
    n = lottery.n
    state = list(range(1, n + 1))
    disp = [0] * (n + 1)
    events = []
    pair_bars: dict = {}
    for idx, c in enumerate(lottery.word):
        if c == n and n >= 2:
            a, b = state[n - 1], state[0]
            state[n - 1], state[0] = b, a
        else:
            a, b = state[c - 1], state[c]
            state[c - 1], state[c] = b, a
        disp[a] += 1
        disp[b] -= 1
        events.append((c, a, b))
        pair_bars.setdefault(frozenset((a, b)), []).append(idx)
    return Simulation(
        tuple(state),
        tuple(disp[1:]),
        tuple(events),
        {k: tuple(v) for k, v in pair_bars.items()},
    )


def evaluate(lottery: CyclicLadderLottery) -> Permutation:
    """The bottom labeling produced by applying every bar to the identity."""
    return Permutation(simulate(lottery).final)


def dv_of(lottery: CyclicLadderLottery) -> DisplacementVector:
    """Net rightward movement of each element along its route."""
    return DisplacementVector(simulate(lottery).dv)


def is_at_most_once(lottery: CyclicLadderLottery) -> bool:
    """True iff no unordered pair of elements swaps on more than one bar."""
    return all(len(v) <= 1 for v in simulate(lottery).pair_bars.values())


# ---------------------------------------------------------------------------
# tangled triples
# ---------------------------------------------------------------------------


def _ancestor_mask(word: tuple[int, ...], n: int, target: int) -> list[bool]:
    # anc[e] is true when bar e must stay above bar `target` in every
    # far-commutation of the word (including e == target).
    anc = [False] * (target + 1)
    anc[target] = True
    for e in range(target - 1, -1, -1):
        ce = word[e]
        anc[e] = any(
            anc[f] and _conflict(ce, word[f], n) for f in range(e + 1, target + 1)
        )
    return anc


def _strictly_between(word: tuple[int, ...], n: int, a: int, b: int) -> list[int]:
    # bars forced between a and b by the conflict order
    down = [False] * (b + 1)
    down[a] = True
    for e in range(a + 1, b + 1):
        ce = word[e]
        down[e] = any(down[f] and _conflict(ce, word[f], n) for f in range(a, e))
    up = _ancestor_mask(word, n, b)
    return [e for e in range(a + 1, b) if down[e] and up[e]]


def _triple_chirality(triple: tuple[int, int, int], events, indices) -> Chirality:
    # Track the cyclic order of the three routes through their three mutual
    # crossings.  Slots 0, 1, 2 are the routes in cyclic column order at the
    # top; a crossing swaps two cyclically adjacent slots and its induced
    # column is the left slot.  The induced word always reads (a, a+1, a) or
    # (a, a-1, a) modulo 3; the first shape is LEFT, the second RIGHT.
    slots = {triple[0]: 0, triple[1]: 1, triple[2]: 2}
    induced = []
    for t in indices:
        _, u, v = events[t]
        su, sv = slots[u], slots[v]
        if sv != (su + 1) % 3:
            raise RuntimeError("cyclic order of a triple broke between crossings")
        induced.append(su)
        slots[u], slots[v] = sv, su
    if induced[0] != induced[2] or induced[1] == induced[0]:
        raise RuntimeError(f"induced word {induced} is not a braid factor")
    if induced[1] == (induced[0] + 1) % 3:
        return Chirality.LEFT
    return Chirality.RIGHT


def tangled_triples(lottery: CyclicLadderLottery) -> list[TangledTriple]:
    """All triples of pairwise-crossing routes, with chirality and minimality.

    A triple is minimal exactly when its three mutual crossings can be made
    consecutive by far-commutations alone, i.e. when no foreign bar is
    forced between the first and last of them by the conflict order.
    Requires every pair of routes to cross at most once.
    """
    sim = simulate(lottery)
    if any(len(v) > 1 for v in sim.pair_bars.values()):
        raise ValueError("tangled triples need pairwise at-most-once crossings")
    pair_bar = {tuple(sorted(p)): v[0] for p, v in sim.pair_bars.items()}
    partners: dict = {}
    for (a, b) in pair_bar:
        partners.setdefault(a, set()).add(b)
        partners.setdefault(b, set()).add(a)
    n, word = lottery.n, lottery.word
    triples = []
    for (a, b) in sorted(pair_bar):
        for k in sorted(partners[a] & partners[b]):
            if k <= b:
                continue
            elems = (a, b, k)
            indices = sorted(
                (pair_bar[(a, b)], pair_bar[(a, k)], pair_bar[(b, k)])
            )
            chir = _triple_chirality(elems, sim.events, indices)
            between = _strictly_between(word, n, indices[0], indices[2])
            minimal = between == [indices[1]]
            triples.append(TangledTriple(elems, chir, minimal))
    triples.sort(key=lambda t: t.elements)
    return triples


def left_triples(lottery: CyclicLadderLottery) -> frozenset:
    """The set LT of left tangled triples, as sorted element tuples."""
    return frozenset(
        t.elements for t in tangled_triples(lottery) if t.chirality is Chirality.LEFT
    )


def _triple_elements(t) -> tuple[int, int, int]:
    if isinstance(t, TangledTriple):
        return t.elements
    elems = tuple(sorted(t))
    if len(elems) != 3:
        raise ValueError(f"a triple needs three distinct elements, got {t}")
    return elems


def apply_braid(
    lottery: CyclicLadderLottery, triple
) -> CyclicLadderLottery:
    """Flip the chirality of a minimal tangled triple by one braid move.

    The three mutual crossings are brought together by far-commutations and
    their factor ``(a, a', a)`` is rewritten to ``(a', a, a')``.  The
    permutation, displacement vector and bar count are unchanged; applying
    the same move twice restores the original lottery.
    """
    elems = _triple_elements(triple)
    sim = simulate(lottery)
    try:
        indices = sorted(sim.pair_bars[frozenset(p)][0] for p in
                         ((elems[0], elems[1]), (elems[0], elems[2]), (elems[1], elems[2])))
    except KeyError:
        raise ValueError(f"triple {elems} is not tangled in this lottery") from None
    n, word = lottery.n, lottery.word
    b1, b2, b3 = indices
    if _strictly_between(word, n, b1, b3) != [b2]:
        raise ValueError(f"triple {elems} is not minimal; no braid move applies")
    a, mid = word[b1], word[b2]
    if word[b3] != a or not _conflict(a, mid, n) or a == mid:
        raise RuntimeError(f"factor columns {(word[b1], word[b2], word[b3])} malformed")
    anc = _ancestor_mask(word, n, b3)
    pre = [word[e] for e in range(b3) if e not in indices and anc[e]]
    post = [word[e] for e in range(len(word)) if e not in indices and not (e < b3 and anc[e])]
    result = CyclicLadderLottery(n, tuple(pre) + (mid, a, mid) + tuple(post))
    if simulate(result).final != sim.final or simulate(result).dv != sim.dv:
        raise RuntimeError("braid rewrite changed the permutation or vector")
    return result


# ---------------------------------------------------------------------------
# root construction from a permutation and an almost optimal vector
# ---------------------------------------------------------------------------


def construct_lottery(
    pi: Permutation, y: DisplacementVector
) -> CyclicLadderLottery:
    """Build a lottery of ``pi`` realizing ``y``, one forced crossing at a time.

    Maintains the current order of elements and their remaining rightward
    displacements, starting from the identity.  An interior column ``c`` is
    productive when the remaining displacement at position ``c`` exceeds the
    one at ``c+1``; the seam is productive when position ``n`` still has to
    move right across it and position ``1`` has to move left.  Firing the
    smallest productive column repeatedly consumes all displacement using
    exactly ``inversion_number(y)`` bars whenever ``y`` is almost optimal;
    otherwise the bar budget overflows or a pair crosses twice, and a
    ``ConstructionError`` reports it.
    """
    if not is_valid_dv(pi, y):
        raise ValueError("vector is not a valid displacement vector of the permutation")
    n = pi.n
    state = list(range(1, n + 1))
    rem = list(y.entries)
    budget = inversion_number(y)
    word: list[int] = []

    def productive(c: int) -> bool:
        if c < n:
            return rem[c - 1] > rem[c]
        return n >= 2 and rem[n - 1] >= 1 and rem[0] <= -1

    import heapq

    heap = [c for c in range(1, n + 1) if productive(c)]
    heapq.heapify(heap)
    pending = set(heap)
    while True:
        col = None
        while heap:
            cand = heapq.heappop(heap)
            pending.discard(cand)
            if productive(cand):
                col = cand
                break
        if col is None:
            if any(rem):
                raise ConstructionError(
                    "stuck: no productive column but displacement remains"
                )
            break
        if len(word) >= budget:
            raise ConstructionError(
                "bar budget exceeded: vector is not almost optimal"
            )
        if col < n:
            state[col - 1], state[col] = state[col], state[col - 1]
            rem[col - 1], rem[col] = rem[col] + 1, rem[col - 1] - 1
        else:
            state[n - 1], state[0] = state[0], state[n - 1]
            rem[n - 1], rem[0] = rem[0] + 1, rem[n - 1] - 1
        word.append(col)
        left = col - 1 if col > 1 else n
        right = col + 1 if col < n else 1
        for d in (left, col, right):
            if d not in pending and productive(d):
                heapq.heappush(heap, d)
                pending.add(d)

    if tuple(state) != pi.entries:
        raise ConstructionError("construction halted on the wrong permutation")
    result = CyclicLadderLottery(n, tuple(word))
    if not is_at_most_once(result):
        raise ConstructionError(
            "a pair of routes crosses twice: vector is not almost optimal"
        )
    return result


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

_SVG_COL = 40
_SVG_ROW = 28
_SVG_MARGIN = 40
_SVG_TOP = 36


def to_svg(lottery: CyclicLadderLottery) -> str:
    """Deterministic SVG drawing: vertical lines, bars at canonical levels.

    A seam bar is drawn as two half-segments, one leaving the right edge and
    one entering the left edge at the same level.
    """
    n = lottery.n
    depth = max(lottery.levels) if lottery.levels else 0
    width = 2 * _SVG_MARGIN + (n - 1) * _SVG_COL
    height = _SVG_TOP + (depth + 1) * _SVG_ROW + _SVG_TOP
    xs = [_SVG_MARGIN + (c - 1) * _SVG_COL for c in range(n + 1)]
    y_top = _SVG_TOP
    y_bot = _SVG_TOP + (depth + 1) * _SVG_ROW
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for c in range(1, n + 1):
        out.append(
            f'<line x1="{xs[c]}" y1="{y_top}" x2="{xs[c]}" y2="{y_bot}" '
            f'stroke="black" stroke-width="1"/>'
        )
    bottom = evaluate(lottery).entries
    for c in range(1, n + 1):
        out.append(
            f'<text x="{xs[c]}" y="{y_top - 8}" font-size="12" '
            f'text-anchor="middle">{c}</text>'
        )
        out.append(
            f'<text x="{xs[c]}" y="{y_bot + 16}" font-size="12" '
            f'text-anchor="middle">{bottom[c - 1]}</text>'
        )
    for c, lvl in zip(lottery.word, lottery.levels):
        y = y_top + lvl * _SVG_ROW
        if c < n:
            out.append(
                f'<line x1="{xs[c]}" y1="{y}" x2="{xs[c + 1]}" y2="{y}" '
                f'stroke="black" stroke-width="2"/>'
            )
        else:
            out.append(
                f'<line x1="{xs[n]}" y1="{y}" x2="{width}" y2="{y}" '
                f'stroke="black" stroke-width="2"/>'
            )
            out.append(
                f'<line x1="0" y1="{y}" x2="{xs[1]}" y2="{y}" '
                f'stroke="black" stroke-width="2"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
