"""Permutations in one-line notation and their elementary statistics.

Positions are 1-based everywhere in this module's API, so ``descents`` of
``13287546`` is ``(2, 4, 5, 6)`` and ``maj`` is the sum of those positions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .patterns import stat as _pattern_stat
from .patterns import stat_batch

__all__ = [
    "Permutation",
    "PermLike",
    "StatVector",
    "STAT_NAMES",
    "as_letters",
    "restrict",
    "descents",
    "ascents",
    "des",
    "asc",
    "inv",
    "maj",
    "adj",
    "first",
    "stat",
    "stat_vector",
    "prefix_transform",
    "permutations",
    "permutation_array",
    "batch_stats",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` (``n >= 1``) in one-line notation."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("empty permutation")
        if sorted(letters) != list(range(1, len(letters) + 1)):
            raise ValueError(f"not a permutation of 1..{len(letters)}: {letters}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accepts ``"5,2,7,1"`` or, for ``n <= 9``, contiguous digits ``"5271"``."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
            if not all(p.isdigit() for p in parts):
                raise ValueError(f"bad permutation {text!r}")
            return cls(tuple(int(p) for p in parts))
        if not text.isdigit():
            raise ValueError(f"bad permutation {text!r}")
        if len(text) > 9:
            raise ValueError(f"permutations with n > 9 need commas: {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.letters)

    def letter(self, position: int) -> int:
        """The letter at 1-based ``position``."""
        if not 1 <= position <= self.n:
            raise IndexError(position)
        return self.letters[position - 1]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return sep.join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Permutation({self})"


PermLike = Union[Permutation, str, Sequence[int]]


def as_letters(perm: PermLike) -> tuple[int, ...]:
    if isinstance(perm, Permutation):
        return perm.letters
    if isinstance(perm, str):
        return Permutation.parse(perm).letters
    return Permutation(tuple(perm)).letters


def restrict(perm: PermLike, i: int) -> Permutation:
    """Subword of letters ``<= i``."""
    w = as_letters(perm)
    if not 1 <= i <= len(w):
        raise ValueError(f"restriction size {i} outside 1..{len(w)}")
    return Permutation(tuple(x for x in w if x <= i))


def descents(perm: PermLike) -> tuple[int, ...]:
    w = as_letters(perm)
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascents(perm: PermLike) -> tuple[int, ...]:
    w = as_letters(perm)
    return tuple(i for i in range(1, len(w)) if w[i - 1] < w[i])


def des(perm: PermLike) -> int:
    return len(descents(perm))


def asc(perm: PermLike) -> int:
    return len(ascents(perm))


def maj(perm: PermLike) -> int:
    return sum(descents(perm))


def inv(perm: PermLike) -> int:
    w = as_letters(perm)
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def adj(perm: PermLike) -> int:
    # trailing sentinel 0, so a final letter 1 counts
    w = as_letters(perm) + (0,)
    return sum(1 for i in range(len(w) - 1) if w[i] - w[i + 1] == 1)


def first(perm: PermLike) -> int:
    return as_letters(perm)[0]


def stat(perm: PermLike) -> int:
    return _pattern_stat(as_letters(perm))


STAT_NAMES = ("des", "asc", "inv", "maj", "stat", "adj", "F")


@dataclass(frozen=True)
class StatVector:
    des: int
    asc: int
    inv: int
    maj: int
    stat: int
    adj: int
    F: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def stat_vector(perm: PermLike) -> StatVector:
    w = as_letters(perm)
    return StatVector(
        des=des(w), asc=asc(w), inv=inv(w), maj=maj(w), stat=stat(w), adj=adj(w), F=w[0]
    )


def prefix_transform(perm: PermLike) -> Permutation:
    """``k p_2 ... p_k  ->  k (k-p_k) (k-p_{k-1}) ... (k-p_2)``; needs ``p_1 = k``."""
    w = as_letters(perm)
    k = len(w)
    if w[0] != k:
        raise ValueError(f"first letter must be the maximum {k}, got {w[0]}")
    return Permutation((k,) + tuple(k - x for x in reversed(w[1:])))


def permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All of S_n as letter tuples, in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def permutation_array(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``start:stop`` of the lexicographic listing of S_n as an int8 array."""
    stop = math.factorial(n) if stop is None else stop
    rows = itertools.islice(permutations(n), start, stop)
    return np.array(list(rows), dtype=np.int8).reshape(-1, n)


def batch_stats(perms: np.ndarray, names: Sequence[str] = STAT_NAMES) -> dict[str, np.ndarray]:
    """Row-wise statistics of an ``(N, n)`` array of permutations."""
    perms = np.asarray(perms, dtype=np.int16)
    count, n = perms.shape
    left, right = perms[:, :-1], perms[:, 1:]
    out = {}
    for name in names:
        if name == "des":
            out[name] = (left > right).sum(axis=1)
        elif name == "asc":
            out[name] = (left < right).sum(axis=1)
        elif name == "maj":
            out[name] = ((left > right) * np.arange(1, n)).sum(axis=1)
        elif name == "inv":
            total = np.zeros(count, dtype=np.int64)
            for i in range(n - 1):
                total += (perms[:, i, None] > perms[:, i + 1:]).sum(axis=1)
            out[name] = total
        elif name == "stat":
            out[name] = stat_batch(perms)
        elif name == "adj":
            out[name] = (left - right == 1).sum(axis=1) + (perms[:, -1] == 1)
        elif name == "F":
            out[name] = perms[:, 0].copy()
        else:
            raise ValueError(f"unknown statistic {name!r}; expected one of {STAT_NAMES}")
    return {k: v.astype(np.int64) for k, v in out.items()}
