"""Insertion labelings, the insertion maps and the code tables built from them.

A permutation of length ``m`` has ``m + 1`` insertion spaces; space ``s`` is the
gap after the ``s``-th letter (space 0 is in front). Each scheme assigns the
labels ``0..m`` to those spaces bijectively, and inserting ``m + 1`` into the
space labelled ``i`` raises the scheme's statistic by exactly ``i``:

* ``INV``: right to left, so the label counts the smaller letters passed over.
* ``MAJ``: last space 0, descents right to left ``1..des``, then the front
  space and ascents left to right ``des+1..m``.
* ``STAT``: descents and the last space left to right ``0..des``, the front
  space ``des+1``, ascents right to left ``des+2..m``. Additivity fails for the
  front space, whose label is still a legal code digit.

Iterating the inverse map down the restriction chain gives the code words
(inversion table, major index table, stat table), all elements of
``E_n = {w : 0 <= w_i <= i - 1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .perm import Permutation, PermLike, as_letters

__all__ = [
    "Scheme",
    "Labeling",
    "CodeWord",
    "TraceRow",
    "make_labeling",
    "insert",
    "uninsert",
    "code_of",
    "code_trace",
    "decode",
    "inversion_table",
    "major_index_table",
    "stat_table",
]


class Scheme(str, enum.Enum):
    INV = "inv"
    MAJ = "maj"
    STAT = "stat"

    @classmethod
    def coerce(cls, value: "Scheme | str") -> "Scheme":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown scheme {value!r}; expected inv, maj or stat") from None


def _labels(scheme: Scheme, w: Sequence[int]) -> list[int]:
    m = len(w)
    if scheme is Scheme.INV:
        return list(range(m, -1, -1))
    down = [s for s in range(1, m) if w[s - 1] > w[s]]
    up = [s for s in range(1, m) if w[s - 1] < w[s]]
    d = len(down)
    lab = [0] * (m + 1)
    if scheme is Scheme.MAJ:
        lab[m] = 0
        for label, s in enumerate(reversed(down), start=1):
            lab[s] = label
        for label, s in enumerate([0] + up, start=d + 1):
            lab[s] = label
    else:
        for label, s in enumerate(down + [m]):
            lab[s] = label
        lab[0] = d + 1
        for label, s in enumerate(reversed(up), start=d + 2):
            lab[s] = label
    return lab


@dataclass(frozen=True)
class Labeling:
    """Labels of the insertion spaces of one permutation under one scheme."""

    scheme: Scheme
    perm: Permutation
    labels: tuple[int, ...]

    def label_of(self, space: int) -> int:
        return self.labels[space]

    def space_of(self, label: int) -> int:
        return self.labels.index(label)

    def render(self) -> str:
        """Bracketed subscript style, e.g. ``[5]1[6]3[4]2[0]``."""
        parts = [f"[{self.labels[0]}]"]
        for letter, label in zip(self.perm.letters, self.labels[1:]):
            parts.append(f"{letter}[{label}]")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


def make_labeling(scheme: Scheme | str, perm: PermLike) -> Labeling:
    scheme = Scheme.coerce(scheme)
    w = as_letters(perm)
    return Labeling(scheme, Permutation(w), tuple(_labels(scheme, w)))


def _insert(scheme: Scheme, label: int, w: tuple[int, ...]) -> tuple[int, ...]:
    s = _labels(scheme, w).index(label)
    return w[:s] + (len(w) + 1,) + w[s:]


def _uninsert(scheme: Scheme, w: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    s = w.index(len(w))
    rest = w[:s] + w[s + 1:]
    return _labels(scheme, rest)[s], rest


def insert(scheme: Scheme | str, label: int, perm: PermLike) -> Permutation:
    """Insert the new maximum ``m + 1`` into the space labelled ``label``."""
    scheme = Scheme.coerce(scheme)
    w = as_letters(perm)
    if not 0 <= label <= len(w):
        raise ValueError(f"label {label} outside 0..{len(w)}")
    return Permutation(_insert(scheme, label, w))


def uninsert(scheme: Scheme | str, perm: PermLike) -> tuple[int, Permutation]:
    """Inverse of :func:`insert`: delete the maximum and report its space's label."""
    scheme = Scheme.coerce(scheme)
    w = as_letters(perm)
    if len(w) < 2:
        raise ValueError("uninsert needs a permutation of length >= 2")
    label, rest = _uninsert(scheme, w)
    return label, Permutation(rest)


@dataclass(frozen=True)
class CodeWord:
    """An element of E_n: ``digits[i-1]`` lies in ``0..i-1``."""

    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(x) for x in self.digits)
        object.__setattr__(self, "digits", digits)
        for i, d in enumerate(digits, start=1):
            if not 0 <= d <= i - 1:
                raise ValueError(f"digit {i} is {d}, must lie in 0..{i - 1}")

    @classmethod
    def parse(cls, text: str) -> "CodeWord":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(p) for p in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"bad code word {text!r}")
        return cls(tuple(int(c) for c in text))

    def digit(self, i: int) -> int:
        """1-based digit access."""
        if not 1 <= i <= len(self.digits):
            raise IndexError(i)
        return self.digits[i - 1]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        sep = "" if len(self.digits) <= 10 else ","
        return sep.join(map(str, self.digits))


def _code(scheme: Scheme, w: tuple[int, ...]) -> tuple[int, ...]:
    digits = []
    while len(w) > 1:
        label, w = _uninsert(scheme, w)
        digits.append(label)
    digits.append(0)
    return tuple(reversed(digits))


def code_of(scheme: Scheme | str, perm: PermLike) -> CodeWord:
    return CodeWord(_code(Scheme.coerce(scheme), as_letters(perm)))


class TraceRow(NamedTuple):
    i: int
    previous: Labeling  # labelling of the restriction to 1..i-1
    digit: int


def code_trace(scheme: Scheme | str, perm: PermLike) -> list[TraceRow]:
    """Rows ``i = n, n-1, ..., 2`` of the code computation, top row first."""
    scheme = Scheme.coerce(scheme)
    w = as_letters(perm)
    rows = []
    while len(w) > 1:
        i = len(w)
        label, w = _uninsert(scheme, w)
        rows.append(TraceRow(i, make_labeling(scheme, w), label))
    return rows


def _decode(scheme: Scheme, digits: Sequence[int]) -> tuple[int, ...]:
    w: tuple[int, ...] = (1,)
    for label in digits[1:]:
        w = _insert(scheme, label, w)
    return w


def decode(scheme: Scheme | str, word: CodeWord | str | Sequence[int]) -> Permutation:
    scheme = Scheme.coerce(scheme)
    if isinstance(word, str):
        word = CodeWord.parse(word)
    elif not isinstance(word, CodeWord):
        word = CodeWord(tuple(word))
    if not word.digits:
        raise ValueError("empty code word")
    return Permutation(_decode(scheme, word.digits))


def inversion_table(perm: PermLike) -> CodeWord:
    return code_of(Scheme.INV, perm)


def major_index_table(perm: PermLike) -> CodeWord:
    return code_of(Scheme.MAJ, perm)


def stat_table(perm: PermLike) -> CodeWord:
    return code_of(Scheme.STAT, perm)
