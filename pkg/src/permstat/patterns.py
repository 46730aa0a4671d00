"""Vincular (dashed) permutation patterns with positional anchors.

Pattern strings use lowercase letters for the pattern alphabet (``a < b < c``),
``-`` between letters that need not be adjacent, and three markers:

* ``^`` prefix: the occurrence starts at the first letter of the permutation;
* ``!`` prefix: the occurrence must *not* start at the first letter;
* ``$`` suffix: the occurrence ends at the last letter of the permutation.

>>> count_occurrences("b-ca", (4, 7, 5, 3, 1, 6, 2))
4
>>> stat((5, 2, 7, 1, 8, 3, 4, 6))
14
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "PatternSyntaxError",
    "DashedPattern",
    "parse_pattern",
    "count_occurrences",
    "count_occurrences_naive",
    "count_occurrences_batch",
    "STAT_PATTERNS",
    "MAJ_PATTERNS",
    "stat",
    "maj_via_patterns",
    "stat_batch",
    "maj_via_patterns_batch",
    "MultisetQuadruple",
    "compute_abcd",
    "check_anchored_identity",
]


class PatternSyntaxError(ValueError):
    """Raised for malformed pattern strings; ``position`` is 0-based in the text."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class DashedPattern:
    blocks: tuple[tuple[int, ...], ...]
    anchor_first: bool = False
    anchor_last: bool = False
    forbid_first: bool = False

    def __post_init__(self):
        letters = sorted(x for block in self.blocks for x in block)
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError(f"pattern letters must be 1..m each once, got {self.blocks}")
        if any(len(block) == 0 for block in self.blocks):
            raise ValueError("empty block")
        if self.anchor_first and self.forbid_first:
            raise ValueError("anchor_first and forbid_first are mutually exclusive")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(x for block in self.blocks for x in block)

    def __len__(self) -> int:
        return sum(len(block) for block in self.blocks)

    def __str__(self) -> str:
        body = "-".join("".join(chr(ord("a") + x - 1) for x in block) for block in self.blocks)
        prefix = "^" if self.anchor_first else "!" if self.forbid_first else ""
        return prefix + body + ("$" if self.anchor_last else "")

    @lru_cache(maxsize=None)
    def placements(self, n: int) -> tuple[tuple[int, ...], ...]:
        """0-based index tuples of a length-``n`` word that satisfy the
        adjacency and anchor constraints (order is not checked here)."""
        sizes = [len(block) for block in self.blocks]
        result = []

        def extend(block: int, start: int, acc: list[int]):
            if block == len(sizes):
                result.append(tuple(acc))
                return
            remaining = sum(sizes[block:])
            for s in range(start, n - remaining + 1):
                extend(block + 1, s + sizes[block], acc + list(range(s, s + sizes[block])))

        extend(0, 0, [])
        m = len(self)
        if self.anchor_first:
            result = [t for t in result if t[0] == 0]
        if self.forbid_first:
            result = [t for t in result if t[0] != 0]
        if self.anchor_last:
            result = [t for t in result if t[m - 1] == n - 1]
        return tuple(result)

    @property
    def rank_order(self) -> tuple[int, ...]:
        """Pattern positions sorted by increasing letter."""
        letters = self.letters
        return tuple(sorted(range(len(letters)), key=letters.__getitem__))


def parse_pattern(text: str | DashedPattern) -> DashedPattern:
    if isinstance(text, DashedPattern):
        return text
    anchor_first = forbid_first = anchor_last = False
    pos = 0
    end = len(text)
    if pos < end and text[pos] in "^!":
        anchor_first = text[pos] == "^"
        forbid_first = text[pos] == "!"
        pos += 1
        if pos < end and text[pos] in "^!":
            raise PatternSyntaxError("conflicting first-letter markers", text, pos)
    if end > pos and text[end - 1] == "$":
        anchor_last = True
        end -= 1

    blocks: list[list[int]] = [[]]
    seen: dict[int, int] = {}
    for i in range(pos, end):
        ch = text[i]
        if ch == "-":
            if not blocks[-1]:
                raise PatternSyntaxError("empty block", text, i)
            blocks.append([])
        elif "a" <= ch <= "z":
            letter = ord(ch) - ord("a") + 1
            if letter in seen:
                raise PatternSyntaxError(f"repeated letter {ch!r}", text, i)
            seen[letter] = i
            blocks[-1].append(letter)
        else:
            raise PatternSyntaxError(f"unexpected character {ch!r}", text, i)
    if not blocks[-1]:
        raise PatternSyntaxError("empty block", text, end)
    m = len(seen)
    for letter in range(1, m + 1):
        if letter not in seen:
            bad = min(i for x, i in seen.items() if x > letter)
            raise PatternSyntaxError(f"gap in alphabet, missing {chr(ord('a') + letter - 1)!r}", text, bad)
    return DashedPattern(tuple(map(tuple, blocks)), anchor_first, anchor_last, forbid_first)


def count_occurrences(pattern: str | DashedPattern, perm: Sequence[int]) -> int:
    """Number of occurrences of ``pattern`` in ``perm``; 0 if the pattern is longer."""
    pattern = parse_pattern(pattern)
    word = tuple(perm)
    if len(pattern) > len(word):
        return 0
    order = pattern.rank_order
    pairs = tuple(zip(order, order[1:]))
    count = 0
    for t in pattern.placements(len(word)):
        if all(word[t[lo]] < word[t[hi]] for lo, hi in pairs):
            count += 1
    return count


def count_occurrences_naive(pattern: str | DashedPattern, perm: Sequence[int]) -> int:
    """Reference count: filter every subsequence of ``perm`` by the definition."""
    pattern = parse_pattern(pattern)
    word = tuple(perm)
    n, m = len(word), len(pattern)
    letters = pattern.letters
    # positions in the flattened pattern that must be immediately followed
    glued = []
    k = 0
    for block in pattern.blocks:
        glued.extend(range(k, k + len(block) - 1))
        k += len(block)
    count = 0
    for idx in itertools.combinations(range(n), m):
        if any(idx[g + 1] != idx[g] + 1 for g in glued):
            continue
        if pattern.anchor_first and idx[0] != 0:
            continue
        if pattern.forbid_first and idx[0] == 0:
            continue
        if pattern.anchor_last and idx[-1] != n - 1:
            continue
        values = [word[i] for i in idx]
        ranks = [sorted(values).index(v) + 1 for v in values]
        if tuple(ranks) == letters:
            count += 1
    return count


def count_occurrences_batch(pattern: str | DashedPattern, perms: np.ndarray) -> np.ndarray:
    """Vectorised ``count_occurrences`` over the rows of an ``(N, n)`` array."""
    pattern = parse_pattern(pattern)
    perms = np.asarray(perms)
    total = np.zeros(perms.shape[0], dtype=np.int64)
    if len(pattern) > perms.shape[1]:
        return total
    order = pattern.rank_order
    for t in pattern.placements(perms.shape[1]):
        ok = np.ones(perms.shape[0], dtype=bool)
        for lo, hi in zip(order, order[1:]):
            ok &= perms[:, t[lo]] < perms[:, t[hi]]
        total += ok
    return total


STAT_PATTERNS = tuple(map(parse_pattern, ("ac-b", "ba-c", "cb-a", "ba")))
MAJ_PATTERNS = tuple(map(parse_pattern, ("a-cb", "b-ca", "c-ba", "ba")))


def stat(perm: Sequence[int]) -> int:
    """Babson-Steingrimsson statistic (ac-b)+(ba-c)+(cb-a)+(ba)."""
    return sum(count_occurrences(p, perm) for p in STAT_PATTERNS)


def maj_via_patterns(perm: Sequence[int]) -> int:
    return sum(count_occurrences(p, perm) for p in MAJ_PATTERNS)


def stat_batch(perms: np.ndarray) -> np.ndarray:
    return sum(count_occurrences_batch(p, perms) for p in STAT_PATTERNS)


def maj_via_patterns_batch(perms: np.ndarray) -> np.ndarray:
    return sum(count_occurrences_batch(p, perms) for p in MAJ_PATTERNS)


@dataclass(frozen=True)
class MultisetQuadruple:
    """Letter collections used to match (^c-ba)+(b-ca) against (^c-b-a$)+(b-ac).

    ``A`` and ``C`` are sets; ``B`` and ``D`` keep one entry per witnessing
    index pair.
    """

    A: frozenset
    B: Counter
    C: frozenset
    D: Counter

    def left(self) -> Counter:
        return Counter(self.A) + self.B

    def right(self) -> Counter:
        return Counter(self.C) + self.D

    def balanced(self) -> bool:
        return self.left() == self.right()


def _require_max_first(word: tuple[int, ...]):
    if not word or word[0] != len(word):
        raise ValueError(f"first letter must be the maximum {len(word)}, got {word}")


def compute_abcd(perm: Sequence[int]) -> MultisetQuadruple:
    p = tuple(perm)
    _require_max_first(p)
    k = len(p)
    first, last = p[0], p[-1]
    A = {p[i] for i in range(1, k - 1) if first > p[i] > p[i + 1]}
    C = {p[i] for i in range(1, k - 1) if first > p[i] > last}
    B: Counter = Counter()
    D: Counter = Counter()
    for i in range(k):
        for j in range(i + 1, k - 1):
            x, y, z = p[i], p[j], p[j + 1]
            if z < x < y:
                B[x] += 1
            elif y < x < z:
                D[x] += 1
    return MultisetQuadruple(frozenset(A), B, frozenset(C), D)


def check_anchored_identity(perm: Sequence[int]) -> bool:
    """(^c-ba)p + (b-ca)p == (^c-b-a$)p + (b-ac)p for p with maximal first letter."""
    p = tuple(perm)
    _require_max_first(p)
    lhs = count_occurrences("^c-ba", p) + count_occurrences("b-ca", p)
    rhs = count_occurrences("^c-b-a$", p) + count_occurrences("b-ac", p)
    return lhs == rhs

