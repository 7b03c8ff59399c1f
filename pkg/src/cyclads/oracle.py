"""Brute-force ground truth at desk scale.

Everything here recomputes answers by exhaustion so the main algorithms can
be checked against something independent: word search over all bar words,
shift search over all valid displacement vectors in a bounded box,
breadth-first search over reconfiguration graphs, and full scans over all
permutations of small ``n``.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .core import (
    DisplacementVector,
    Permutation,
    _base_entries,
    _inv,
    _optimal_entries,
    inversion_number,
    optimal_dv,
)
from .lottery import CyclicLadderLottery, dv_of, is_at_most_once
from .reconfig import UnreachableError

DEFAULT_WORD_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The requested exhaustive search is larger than the word budget."""


def _word_budget() -> int:
    raw = os.environ.get("CYCLADS_BUDGET")
    return int(raw) if raw else DEFAULT_WORD_BUDGET


@dataclass(frozen=True)
class BruteForceReport:
    """One oracle-versus-implementation comparison."""

    instance: str
    expected: object
    actual: object
    ok: bool

    def to_json_obj(self) -> dict:
        return {
            "instance": self.instance,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)


def _plain(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, Permutation):
        return list(value.entries)
    if isinstance(value, DisplacementVector):
        return list(value.entries)
    if isinstance(value, CyclicLadderLottery):
        return [value.n, list(value.word)]
    return value


# ---------------------------------------------------------------------------
# exhaustive searches
# ---------------------------------------------------------------------------


def brute_lotteries(pi: Permutation, max_bars: int) -> set:
    """All canonical lotteries of ``pi`` with at most ``max_bars`` bars.

    Runs a depth-first search over every bar word and keeps the words that
    evaluate to ``pi``, deduplicated by canonical form.  Refuses to start
    when the word tree exceeds the search budget (override with the
    CYCLADS_BUDGET environment variable).
    """
    n = pi.n
    words = 1
    nodes = 1
    for _ in range(max_bars):
        words *= max(n, 1)
        nodes += words
    if nodes > _word_budget():
        raise BudgetExceededError(
            f"word tree of size {nodes} exceeds budget {_word_budget()}"
        )
    target = list(pi.entries)
    found: set = set()
    if n == 1:
        return {CyclicLadderLottery.empty(1)}
    state = list(range(1, n + 1))
    word: list[int] = []

    def rec() -> None:
        if state == target:
            found.add(CyclicLadderLottery(n, tuple(word)))
        if len(word) == max_bars:
            return
        for c in range(1, n + 1):
            p, q = (c - 1, c) if c < n else (n - 1, 0)
            state[p], state[q] = state[q], state[p]
            word.append(c)
            rec()
            word.pop()
            state[p], state[q] = state[q], state[p]

    rec()
    return found


def shortest_word_length(pi: Permutation) -> int:
    """Minimum bar count of any lottery of ``pi``, by BFS over permutations."""
    n = pi.n
    start = tuple(range(1, n + 1))
    target = pi.entries
    if start == target:
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        d = dist[cur]
        for c in range(1, n + 1):
            p, q = (c - 1, c) if c < n else (n - 1, 0)
            nxt = list(cur)
            nxt[p], nxt[q] = nxt[q], nxt[p]
            nxt = tuple(nxt)
            if nxt not in dist:
                if nxt == target:
                    return d + 1
                dist[nxt] = d + 1
                queue.append(nxt)
    raise RuntimeError("permutation unreachable from the identity")


def brute_optimal_dvs(pi: Permutation, shift_radius: int = 2) -> set:
    """All inversion-minimizing valid vectors of ``pi``, by shift search.

    Every valid vector is the base vector plus per-coordinate multiples of
    ``n``; optimal vectors have spread at most ``n``, which confines them to
    shifts of magnitude at most ``2n``.  ``shift_radius`` widens the box for
    auditing that bound.
    """
    n = pi.n
    if n > 8:
        raise ValueError("shift search is limited to n <= 8")
    base = _base_entries(pi)
    best_inv: list[int | None] = [None]
    best: list[list[int]] = []
    shifts = list(range(-shift_radius, shift_radius + 1))
    work = list(base)

    def rec(k: int, ksum: int) -> None:
        remaining = n - k
        if abs(ksum) > shift_radius * remaining:
            return
        if k == n:
            v = _inv(work, n)
            if best_inv[0] is None or v < best_inv[0]:
                best_inv[0] = v
                best.clear()
            if v == best_inv[0]:
                best.append(list(work))
            return
        for s in shifts:
            work[k] = base[k] + s * n
            rec(k + 1, ksum + s)
        work[k] = base[k]

    rec(0, 0)
    return {DisplacementVector(tuple(e)) for e in best}


def bfs_distance(objects, edges, a, b) -> int:
    """Unweighted shortest-path length under an adjacency predicate."""
    objs = list(objects)
    if a not in objs or b not in objs:
        raise ValueError("both endpoints must belong to the object set")
    if a == b:
        return 0
    dist = {a: 0}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        for other in objs:
            if other not in dist and edges(cur, other):
                if other == b:
                    return dist[cur] + 1
                dist[other] = dist[cur] + 1
                queue.append(other)
    raise UnreachableError("the endpoints are in different components")


# ---------------------------------------------------------------------------
# full scans against closed-form values
# ---------------------------------------------------------------------------


def longest_scan(n: int) -> tuple[int, set]:
    """Maximum of the minimum bar count over all permutations of ``[n]``."""
    if n > 8:
        raise ValueError("full scans are limited to n <= 8")
    best = -1
    argmax: set = set()
    for entries in iter_permutations(range(1, n + 1)):
        pi = Permutation(entries)
        v = _inv(_optimal_entries(pi), n)
        if v > best:
            best = v
            argmax = {entries}
        elif v == best:
            argmax.add(entries)
    return best, {Permutation(e) for e in argmax}


def reverse_identity_min_inv(n: int) -> int:
    """Minimum bar count of the reverse identity of ``[n]``."""
    if n > 10:
        raise ValueError("limited to n <= 10")
    pi = Permutation.reverse_identity(n)
    return inversion_number(optimal_dv(pi))


def _rotation_perm(first: int, n: int) -> Permutation:
    # (first, first+1, ..., n, 1, 2, ...): the rotation starting at `first`
    return Permutation(tuple(list(range(first, n + 1)) + list(range(1, first))))


def extremal_multisets_check(m: int) -> BruteForceReport:
    """Optimal-vector multisets of the three extremal rotation permutations."""
    if m > 4:
        raise ValueError("limited to m <= 4")
    cases = [
        (_rotation_perm(m + 1, 2 * m - 1), sorted([m - 1] * m + [-m] * (m - 1))),
        (_rotation_perm(m, 2 * m - 1), sorted([m] * (m - 1) + [-m + 1] * m)),
        (_rotation_perm(m + 1, 2 * m), sorted([m] * m + [-m] * m)),
    ]
    expected = {}
    actual = {}
    ok = True
    for pi, multiset in cases:
        label = ",".join(map(str, pi.entries))
        expected[label] = [multiset]
        seen = sorted({tuple(sorted(x.entries)) for x in brute_optimal_dvs(pi)})
        actual[label] = [list(s) for s in seen]
        if seen != [tuple(multiset)]:
            ok = False
    return BruteForceReport(f"extremal rotation multisets, m={m}", expected, actual, ok)


# ---------------------------------------------------------------------------
# verification suites (oracle vs. main implementation)
# ---------------------------------------------------------------------------


def _reverse_identity_value(n: int) -> int:
    if n % 2 == 1:
        m = (n + 1) // 2
        return (m - 1) ** 2
    m = n // 2
    return m * (m - 1) + 1 if m % 2 == 1 else m * (m - 1)


def suite_reverse_identity(max_n: int = 10) -> list[BruteForceReport]:
    reports = []
    for n in range(3, max_n + 1):
        actual = reverse_identity_min_inv(n)
        reports.append(
            BruteForceReport(
                f"reverse identity min bar count, n={n}",
                _reverse_identity_value(n),
                actual,
                actual == _reverse_identity_value(n),
            )
        )
        if n <= 6:
            brute = shortest_word_length(Permutation.reverse_identity(n))
            reports.append(
                BruteForceReport(
                    f"reverse identity min bar count by BFS, n={n}",
                    _reverse_identity_value(n),
                    brute,
                    brute == _reverse_identity_value(n),
                )
            )
    return reports


def _longest_expected(n: int) -> tuple[int, set]:
    if n % 2 == 1:
        m = (n + 1) // 2
        value = m * (m - 1)
        arg = {_rotation_perm(m + 1, n), _rotation_perm(m, n)}
    else:
        m = n // 2
        value = m * m
        arg = {_rotation_perm(m + 1, n)}
    return value, arg


def suite_longest(max_n: int = 8) -> list[BruteForceReport]:
    reports = []
    for n in range(3, max_n + 1):
        value, arg = _longest_expected(n)
        got_value, got_arg = longest_scan(n)
        ok = got_value == value and got_arg == arg
        reports.append(
            BruteForceReport(
                f"hardest permutations, n={n}",
                {"max": value, "argmax": arg},
                {"max": got_value, "argmax": got_arg},
                ok,
            )
        )
    return reports


def suite_multisets(max_n: int = 8) -> list[BruteForceReport]:
    return [extremal_multisets_check(m) for m in range(2, max(2, max_n // 2) + 1)]


def _optimal_classes(pi: Permutation):
    # canonical optimal lotteries of pi, grouped by displacement vector
    shortest = shortest_word_length(pi)
    classes: dict = {}
    for lot in brute_lotteries(pi, shortest):
        if len(lot.word) == shortest and is_at_most_once(lot):
            classes.setdefault(dv_of(lot), set()).add(lot)
    return classes


def _braid_adjacent(a: CyclicLadderLottery, b: CyclicLadderLottery) -> bool:
    from .lottery import apply_braid, tangled_triples

    for t in tangled_triples(a):
        if t.minimal and apply_braid(a, t.elements) == b:
            return True
    return False


def _contraction_adjacent(x: DisplacementVector, y: DisplacementVector) -> bool:
    n = x.n
    diff = [k for k in range(n) if x.entries[k] != y.entries[k]]
    if len(diff) != 2:
        return False
    i, j = diff
    if x.entries[i] - y.entries[i] == n and y.entries[j] - x.entries[j] == n:
        hi, lo = i, j
    elif x.entries[j] - y.entries[j] == n and y.entries[i] - x.entries[i] == n:
        hi, lo = j, i
    else:
        return False
    return (
        x.entries[hi] == max(x.entries)
        and x.entries[lo] == min(x.entries)
        and x.entries[hi] - x.entries[lo] == n
    )


def suite_distances(max_n: int = 6) -> list[BruteForceReport]:
    from .reconfig import cll_distance, cll_path, dv_distance, dv_path, replay

    reports = []
    for n in range(2, min(max_n, 5) + 1):
        pairs = 0
        mismatches = 0
        for entries in iter_permutations(range(1, n + 1)):
            pi = Permutation(entries)
            for members in _optimal_classes(pi).values():
                members = sorted(members, key=lambda l: l.word)
                for a in members:
                    for b in members:
                        pairs += 1
                        want = bfs_distance(members, _braid_adjacent, a, b)
                        got = cll_distance(a, b)
                        path = cll_path(a, b)
                        if got != want or len(path) != want or replay(path) != b:
                            mismatches += 1
        reports.append(
            BruteForceReport(
                f"braid distances vs BFS, n={n} ({pairs} pairs)", 0, mismatches,
                mismatches == 0,
            )
        )
    for n in range(2, min(max_n, 6) + 1):
        pairs = 0
        mismatches = 0
        for entries in iter_permutations(range(1, n + 1)):
            pi = Permutation(entries)
            vectors = sorted(brute_optimal_dvs(pi), key=lambda v: v.entries)
            for x in vectors:
                for y in vectors:
                    pairs += 1
                    want = bfs_distance(vectors, _contraction_adjacent, x, y)
                    got = dv_distance(x, y, pi)
                    path = dv_path(x, y, pi)
                    if got != want or len(path) != want or replay(path) != y:
                        mismatches += 1
        reports.append(
            BruteForceReport(
                f"contraction distances vs BFS, n={n} ({pairs} pairs)", 0,
                mismatches, mismatches == 0,
            )
        )
    return reports


def suite_enumeration(max_n: int = 5) -> list[BruteForceReport]:
    from .enumerate import enum_all
    from .lottery import left_triples

    reports = []
    for n in range(1, min(max_n, 5) + 1):
        count = 0
        mismatches = 0
        for entries in iter_permutations(range(1, n + 1)):
            pi = Permutation(entries)
            classes = _optimal_classes(pi)
            expected = set().union(*classes.values()) if classes else set()
            emitted = list(enum_all(pi))
            count += len(emitted)
            if len(emitted) != len(set(emitted)) or set(emitted) != expected:
                mismatches += 1
                continue
            for members in classes.values():
                roots = [lot for lot in members if not left_triples(lot)]
                if len(roots) != 1:
                    mismatches += 1
        reports.append(
            BruteForceReport(
                f"enumeration vs brute force, n={n} ({count} lotteries)", 0,
                mismatches, mismatches == 0,
            )
        )
    return reports


def suite_roundtrip(max_n: int = 5) -> list[BruteForceReport]:
    from .lottery import (
        apply_braid,
        construct_lottery,
        evaluate,
        tangled_triples,
    )

    reports = []
    for n in range(1, min(max_n, 5) + 1):
        checks = 0
        mismatches = 0
        for entries in iter_permutations(range(1, n + 1)):
            pi = Permutation(entries)
            for vector, members in _optimal_classes(pi).items():
                built = construct_lottery(pi, vector)
                checks += 1
                if (
                    evaluate(built) != pi
                    or dv_of(built) != vector
                    or len(built.word) != inversion_number(vector)
                    or not is_at_most_once(built)
                ):
                    mismatches += 1
                for lot in members:
                    for t in tangled_triples(lot):
                        if not t.minimal:
                            continue
                        checks += 1
                        image = apply_braid(lot, t.elements)
                        back = apply_braid(image, t.elements)
                        if (
                            evaluate(image) != pi
                            or dv_of(image) != vector
                            or len(image.word) != len(lot.word)
                            or not is_at_most_once(image)
                            or back != lot
                        ):
                            mismatches += 1
        reports.append(
            BruteForceReport(
                f"round trips and braid preservation, n={n} ({checks} checks)",
                0, mismatches, mismatches == 0,
            )
        )
    return reports


SUITES = {
    "reverse-identity": suite_reverse_identity,
    "longest": suite_longest,
    "multisets": suite_multisets,
    "distances": suite_distances,
    "enumeration": suite_enumeration,
    "roundtrip": suite_roundtrip,
}


def run_suite(name: str, max_n: int | None = None) -> list[BruteForceReport]:
    if name == "all":
        reports = []
        for fn in SUITES.values():
            reports.extend(fn() if max_n is None else fn(max_n))
        return reports
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return fn() if max_n is None else fn(max_n)
