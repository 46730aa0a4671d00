"""Exit criteria, one test per criterion; each prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import contextlib
import math
import time
from collections import Counter

import numpy as np
import pytest

import oracles
from permstat.bijections import burstein, rho, rho_trace
from permstat.harness import distribution, verify
from permstat.labeling import code_of, code_trace, insert, make_labeling
from permstat.patterns import (
    MAJ_PATTERNS,
    STAT_PATTERNS,
    compute_abcd,
    count_occurrences,
    count_occurrences_batch,
    count_occurrences_naive,
)
from permstat.perm import adj, batch_stats, permutation_array

RESULTS: dict[str, tuple[bool, str]] = {}


@contextlib.contextmanager
def criterion(key: str, title: str):
    started = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[key] = (False, f"{title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    RESULTS[key] = (True, f"{title} ({time.perf_counter() - started:.2f}s)")


def summary_lines():
    return [f"[{'PASS' if ok else 'FAIL'}] {key} {text}" for key, (ok, text) in sorted(RESULTS.items())]


def _sweep(prop, ns):
    bad = {}
    for n in ns:
        report = verify(prop, n)
        assert report.cases_checked > 0 or n == 1
        if report.failures:
            bad[n] = report.failures
    return bad


def test_c1_golden_examples():
    with criterion("C1", "golden examples, exact, under 1 s"):
        started = time.perf_counter()
        assert count_occurrences("b-ca", (4, 7, 5, 3, 1, 6, 2)) == 4
        sigma = "13287546"
        assert make_labeling("inv", sigma).render() == "[8]1[7]3[6]2[5]8[4]7[3]5[2]4[1]6[0]"
        assert make_labeling("maj", sigma).render() == "[5]1[6]3[4]2[7]8[3]7[2]5[1]4[8]6[0]"
        assert make_labeling("stat", sigma).render() == "[5]1[8]3[0]2[7]8[1]7[2]5[3]4[6]6[4]"
        assert str(insert("inv", 3, sigma)) == "132879546"
        assert str(insert("maj", 3, sigma)) == "132897546"
        assert str(insert("stat", 7, sigma)) == "132987546"

        assert str(code_of("maj", sigma)) == "00204056"
        assert [(r.i, r.previous.render(), r.digit) for r in code_trace("maj", sigma)] == [
            (8, "[4]1[5]3[3]2[6]7[2]5[1]4[7]6[0]", 6),
            (7, "[3]1[4]3[2]2[5]5[1]4[6]6[0]", 5),
            (6, "[3]1[4]3[2]2[5]5[1]4[0]", 0),
            (5, "[2]1[3]3[1]2[4]4[0]", 4),
            (4, "[2]1[3]3[1]2[0]", 0),
            (3, "[1]1[2]2[0]", 2),
            (2, "[1]1[0]", 0),
        ]
        assert str(code_of("stat", "52718346")) == "01112216"
        assert [(r.i, r.previous.render(), r.digit) for r in code_trace("stat", "52718346")] == [
            (8, "[3]5[0]2[7]7[1]1[6]3[5]4[4]6[2]", 6),
            (7, "[3]5[0]2[1]1[6]3[5]4[4]6[2]", 1),
            (6, "[3]5[0]2[1]1[5]3[4]4[2]", 2),
            (5, "[2]2[0]1[4]3[3]4[1]", 2),
            (4, "[2]2[0]1[3]3[1]", 1),
            (3, "[2]2[0]1[1]", 1),
            (2, "[1]1[0]", 1),
        ]
        steps = rho_trace("52718346")
        assert [(s.i, s.digit) for s in steps] == [(5, 2), (6, 2), (7, 1), (8, 6)]
        assert [s.labeling.render() for s in steps[:3]] == [
            "[3]5[2]1[4]2[5]4[1]3[0]",
            "[3]5[4]6[2]1[5]2[6]4[1]3[0]",
            "[3]5[4]6[2]1[5]2[6]4[7]7[1]3[0]",
        ]
        assert str(steps[-1].sigma) == str(rho("52718346")) == "56128473"
        assert str(rho("543617982")) == "539784621"
        assert str(burstein("543617982")) == "537684921"

        q = compute_abcd((9, 7, 8, 4, 5, 2, 6, 1, 3))
        assert (q.A, q.B, q.C, q.D) == (
            {5, 6, 8},
            Counter([2, 4, 4, 5, 7]),
            {4, 5, 6, 7, 8},
            Counter([2, 4, 5]),
        )
        assert time.perf_counter() - started < 1.0


def test_c2_conjecture_desk_scale():
    with criterion("C2", "(des,stat) ~ (des,maj) for n=1..8 serial, n=9 with jobs"):
        started = time.perf_counter()
        for n in range(1, 9):
            assert distribution(["des", "stat"], n) == distribution(["des", "maj"], n)
        assert time.perf_counter() - started < 30
        started = time.perf_counter()
        left = distribution(["des", "stat"], 9, jobs=2)
        right = distribution(["des", "maj"], 9, jobs=2)
        assert left == right and left.total() == math.factorial(9)
        assert time.perf_counter() - started < 120


def test_c3_involution_suite():
    with criterion("C3", "rho involution, keeps F and des, swaps maj/stat, n=1..8"):
        for prop in ("involution", "preserve-des-F", "maj-stat-swap"):
            assert _sweep(prop, range(1, 9)) == {}, prop


def test_c4_additivity():
    with criterion("C4", "insertion additivity for inv/maj/stat, n=2..8"):
        for prop in ("additivity-inv", "additivity-maj", "additivity-stat"):
            assert _sweep(prop, range(2, 9)) == {}, prop
        status = {}
        for n in range(2, 9):
            details = verify("additivity-stat", n).details
            # either a concrete witness or an explicit zero count for this n
            assert (details["excluded_witness"] is None) == (details["excluded_breaks"] == 0)
            status[n] = details["excluded_witness"]
        assert status[2] is None and status[3] is None
        assert all(status[n] is not None for n in range(4, 9))


def test_c5_label_sum():
    with criterion("C5", "maj label + stat label three-case identity, n<=8"):
        assert _sweep("label-sum", range(1, 9)) == {}


def test_c6_multiset_identities():
    with criterion("C6", "A+B = C+D, anchored identity, prefix-transform pattern identity, k=1..8"):
        for prop in ("abcd-multiset", "anchored-identity", "eq-star-star"):
            assert _sweep(prop, range(1, 9)) == {}, prop


def test_c7_burstein_refinement():
    with criterion("C7", "burstein 5-tuple transport n<=8; rho moves adj at n=9"):
        assert _sweep("burstein-5tuple", range(1, 9)) == {}
        witness = "543617982"
        assert adj(rho(witness)) != adj(witness)


def test_c8_carlitz():
    with criterion("C8", "carlitz sends inv to maj bijectively; both tallies are [n]_q!"):
        assert _sweep("carlitz-transport", range(1, 9)) == {}
        for n in range(1, 9):
            table = batch_stats(permutation_array(n), ("inv", "maj"))
            expected = oracles.q_factorial(n)
            assert np.bincount(table["inv"]).tolist() == expected
            assert np.bincount(table["maj"]).tolist() == expected


ORACLE_PATTERNS = sorted(
    {str(p) for p in STAT_PATTERNS + MAJ_PATTERNS}
    | {"^c-ba", "!c-ba", "^cb-a", "!cb-a", "^c-b-a$", "b-ac"}
)


def test_c9_pattern_oracle_equivalence():
    with criterion("C9", f"optimised counts = naive subsequence oracle, {len(ORACLE_PATTERNS)} patterns on S_7"):
        arr = permutation_array(7)
        perms = [tuple(int(x) for x in row) for row in arr]
        for text in ORACLE_PATTERNS:
            batch = count_occurrences_batch(text, arr)
            for w, b in zip(perms, batch):
                naive = count_occurrences_naive(text, w)
                assert count_occurrences(text, w) == naive == b, (text, w)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
