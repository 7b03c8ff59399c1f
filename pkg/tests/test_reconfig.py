from itertools import permutations

import pytest

from cyclads.core import DisplacementVector, Permutation
from cyclads.lottery import (
    CyclicLadderLottery,
    apply_braid,
    dv_of,
    evaluate,
    simulate,
    _ancestor_mask,
)
from cyclads.oracle import _optimal_classes, bfs_distance, brute_optimal_dvs
from cyclads.reconfig import (
    MaxMinContraction,
    UnreachableError,
    cll_distance,
    cll_path,
    dv_distance,
    dv_path,
    dv_symmetric_difference,
    lt_symmetric_difference,
    push_to_top,
    replay,
)

PI6 = Permutation((4, 2, 6, 1, 5, 3))
FIG_A = DisplacementVector((-3, 0, -3, 3, 0, 3))
FIG_B = DisplacementVector((-3, 0, 3, -3, 0, 3))


def _is_topmost(lottery, pair):
    bar = simulate(lottery).pair_bars[pair][0]
    anc = _ancestor_mask(lottery.word, lottery.n, bar)
    return not any(anc[:bar])


def test_push_to_top_noop_when_topmost():
    lot = CyclicLadderLottery(4, (1, 2, 1))
    out, seq = push_to_top(lot, 1)
    assert out == lot and len(seq) == 0


def test_push_to_top_single_move():
    lot = CyclicLadderLottery(4, (1, 2, 1))
    out, seq = push_to_top(lot, 2)
    assert out == CyclicLadderLottery(4, (2, 1, 2))
    assert len(seq) == 1
    assert _is_topmost(out, frozenset((2, 3)))


def test_push_to_top_requires_crossing():
    with pytest.raises(ValueError):
        push_to_top(CyclicLadderLottery.empty(4), 1)


def test_push_to_top_exhaustive_small():
    for n in range(2, 5):
        for entries in permutations(range(1, n + 1)):
            pi = Permutation(entries)
            for vector, members in _optimal_classes(pi).items():
                for lot in members:
                    sim = simulate(lot)
                    for i in range(1, n + 1):
                        i1 = i % n + 1
                        pair = frozenset((i, i1))
                        if i1 == i or pair not in sim.pair_bars:
                            continue
                        out, seq = push_to_top(lot, i)
                        bars = len(lot.word)
                        assert len(seq) <= max(1, bars * (bars - 1) // 2)
                        cur = lot
                        for step in seq.steps:
                            cur = apply_braid(cur, step.triple)
                        assert cur == out
                        assert evaluate(out) == pi and dv_of(out) == vector
                        if not _is_topmost(out, pair):
                            # only legitimate when no class member can do better
                            assert not any(_is_topmost(m, pair) for m in members)


def test_lt_symmetric_difference():
    a = CyclicLadderLottery(4, (1, 2, 1))
    b = CyclicLadderLottery(4, (2, 1, 2))
    assert lt_symmetric_difference(a, a) == set()
    assert lt_symmetric_difference(a, b) == {(1, 2, 3)}
    image = apply_braid(a, (1, 2, 3))
    assert lt_symmetric_difference(a, image) == {(1, 2, 3)}


def test_class_mismatch_errors():
    a = CyclicLadderLottery(4, (1, 2, 1))
    with pytest.raises(ValueError):
        lt_symmetric_difference(a, CyclicLadderLottery(4, (1,)))
    from cyclads.enumerate import cll_root

    la = cll_root(PI6, FIG_A)
    lb = cll_root(PI6, FIG_B)
    with pytest.raises(UnreachableError):
        cll_distance(la, lb)


def test_cll_distance_and_path():
    a = CyclicLadderLottery(4, (1, 2, 1))
    b = CyclicLadderLottery(4, (2, 1, 2))
    assert cll_distance(a, a) == 0
    assert cll_distance(a, b) == 1
    path = cll_path(a, b)
    assert len(path) == 1 and replay(path) == b
    assert len(cll_path(a, a)) == 0


def test_cll_distance_equals_bfs_exhaustive():
    from cyclads.oracle import _braid_adjacent

    for n in range(2, 5):
        for entries in permutations(range(1, n + 1)):
            pi = Permutation(entries)
            for members in _optimal_classes(pi).values():
                members = sorted(members, key=lambda l: l.word)
                for a in members:
                    for b in members:
                        want = bfs_distance(members, _braid_adjacent, a, b)
                        assert cll_distance(a, b) == want
                        path = cll_path(a, b)
                        assert len(path) == want and replay(path) == b


def test_dv_symmetric_difference():
    assert dv_symmetric_difference(FIG_A, FIG_A) == 0
    assert dv_symmetric_difference(FIG_A, FIG_B) == 2
    with pytest.raises(ValueError):
        dv_symmetric_difference(FIG_A, DisplacementVector.zero(4))


def test_dv_distance_and_path():
    assert dv_distance(FIG_A, FIG_A, PI6) == 0
    assert dv_distance(FIG_A, FIG_B, PI6) == 1
    path = dv_path(FIG_A, FIG_B, PI6)
    assert len(path.steps) == 1
    step = path.steps[0]
    assert step == MaxMinContraction(max_index=4, min_index=3)
    assert replay(path) == FIG_B
    with pytest.raises(ValueError):
        dv_distance(DisplacementVector((3, -3, 3, -3, 0, 0)), FIG_B, PI6)


def test_dv_distance_equals_bfs_exhaustive():
    from cyclads.oracle import _contraction_adjacent

    for n in range(2, 6):
        for entries in permutations(range(1, n + 1)):
            pi = Permutation(entries)
            vectors = sorted(brute_optimal_dvs(pi), key=lambda v: v.entries)
            for x in vectors:
                for y in vectors:
                    want = bfs_distance(vectors, _contraction_adjacent, x, y)
                    assert dv_distance(x, y, pi) == want
                    path = dv_path(x, y, pi)
                    assert len(path) == want and replay(path) == y


def test_contractions_preserve_optimality():
    from cyclads.core import inversion_number, is_optimal_dv

    for n in range(2, 6):
        for entries in permutations(range(1, n + 1)):
            pi = Permutation(entries)
            for x in brute_optimal_dvs(pi):
                mx, mn = max(x.entries), min(x.entries)
                if mx - mn != n:
                    continue
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        if x.entries[i - 1] == mx and x.entries[j - 1] == mn:
                            work = list(x.entries)
                            work[i - 1] -= n
                            work[j - 1] += n
                            image = DisplacementVector(tuple(work))
                            assert inversion_number(image) == inversion_number(x)
                            assert is_optimal_dv(pi, image)


def test_sequence_json():
    path = dv_path(FIG_A, FIG_B, PI6)
    obj = path.to_json_obj()
    assert obj["start"] == list(FIG_A.entries)
    assert obj["steps"] == [{"contract": [4, 3]}]
    assert obj["end"] == list(FIG_B.entries)
    a = CyclicLadderLottery(4, (1, 2, 1))
    b = CyclicLadderLottery(4, (2, 1, 2))
    obj = cll_path(a, b).to_json_obj()
    assert obj["steps"] == [{"braid": [1, 2, 3]}]
    assert obj["start"] == {"n": 4, "word": [1, 2, 1]}


def test_braid_graph_disconnected_across_vectors():
    from cyclads.enumerate import cll_root
    from cyclads.oracle import _braid_adjacent

    la = cll_root(PI6, FIG_A)
    lb = cll_root(PI6, FIG_B)
    with pytest.raises(UnreachableError):
        bfs_distance([la, lb], _braid_adjacent, la, lb)
