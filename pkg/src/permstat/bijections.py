"""Statistic-transporting bijections on S_n.

``carlitz``
    Decode the inversion table as a major index table; sends inv to maj.
``rho``
    Involution swapping maj and stat while keeping des and the first letter.
    With ``k`` the first letter, the restriction to ``1..k`` goes through
    :func:`~permstat.perm.prefix_transform`, then the letters ``k+1..n`` are
    re-inserted with the maj-labeling at the digits of the stat table.
``burstein``
    Closed-form map keeping adj, des and the first letter while swapping maj
    and stat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .labeling import Labeling, Scheme, _code, _decode, _insert, make_labeling
from .perm import Permutation, PermLike, StatVector, as_letters, des, maj, stat, stat_vector

__all__ = [
    "carlitz",
    "rho",
    "rho_trace",
    "RhoStep",
    "burstein",
    "check_first_max_relations",
    "BijectionReport",
    "MAPS",
    "apply_map",
]


def _carlitz(w: tuple[int, ...]) -> tuple[int, ...]:
    return _decode(Scheme.MAJ, _code(Scheme.INV, w))


def carlitz(perm: PermLike) -> Permutation:
    return Permutation(_carlitz(as_letters(perm)))


def _prefix(w: tuple[int, ...]) -> tuple[int, ...]:
    k = len(w)
    return (k,) + tuple(k - x for x in reversed(w[1:]))


def _rho_steps(w: tuple[int, ...]):
    k = w[0]
    s = _code(Scheme.STAT, w)
    sigma = _prefix(tuple(x for x in w if x <= k))
    yield k, s[k - 1], sigma
    for i in range(k + 1, len(w) + 1):
        sigma = _insert(Scheme.MAJ, s[i - 1], sigma)
        yield i, s[i - 1], sigma


def _rho(w: tuple[int, ...]) -> tuple[int, ...]:
    k = w[0]
    s = _code(Scheme.STAT, w)
    sigma = _prefix(tuple(x for x in w if x <= k))
    for i in range(k + 1, len(w) + 1):
        sigma = _insert(Scheme.MAJ, s[i - 1], sigma)
    return sigma


def rho(perm: PermLike) -> Permutation:
    return Permutation(_rho(as_letters(perm)))


class RhoStep(NamedTuple):
    i: int
    digit: int  # stat-table digit s_i
    sigma: Permutation
    source: Permutation  # restriction of the input to 1..i

    @property
    def labeling(self) -> Labeling:
        return make_labeling(Scheme.MAJ, self.sigma)


def rho_trace(perm: PermLike) -> list[RhoStep]:
    """Steps ``i = k..n`` of ``rho`` (``k`` the first letter), in build order."""
    w = as_letters(perm)
    return [
        RhoStep(i, digit, Permutation(sigma), Permutation(tuple(x for x in w if x <= i)))
        for i, digit, sigma in _rho_steps(w)
    ]


def _burstein(w: tuple[int, ...]) -> tuple[int, ...]:
    n = len(w)
    k = w[0]
    out = [k]
    for i in range(2, n + 1):
        x = w[n + 2 - i - 1]
        out.append(k - x if x < k else n + k + 1 - x)
    return tuple(out)


def burstein(perm: PermLike) -> Permutation:
    return Permutation(_burstein(as_letters(perm)))


def _check_relations(w: tuple[int, ...]) -> bool:
    n = len(w)
    sigma = _rho(w)
    rhs = (n + 1) * des(w) - (w[0] - 1)
    return maj(w) + stat(w) == rhs and maj(w) + maj(sigma) == rhs and sigma == _burstein(w)


def check_first_max_relations(perm: PermLike) -> bool:
    """For ``F(pi) = n``: both closing relations hold and ``rho`` agrees with ``burstein``.

    The relations are ``maj + stat = (n+1) des - (F-1)`` for ``pi`` and the
    same right-hand side for ``maj(pi) + maj(rho(pi))``.
    """
    w = as_letters(perm)
    if w[0] != len(w):
        raise ValueError(f"first letter must be {len(w)}, got {w[0]}")
    return _check_relations(w)


MAPS = {"rho": _rho, "carlitz": _carlitz, "burstein": _burstein}


@dataclass(frozen=True)
class BijectionReport:
    name: str
    input: Permutation
    output: Permutation
    input_stats: StatVector
    output_stats: StatVector

    def as_dict(self) -> dict:
        return {
            "map": self.name,
            "input": str(self.input),
            "output": str(self.output),
            "input_stats": self.input_stats.as_dict(),
            "output_stats": self.output_stats.as_dict(),
        }


def apply_map(name: str, perm: PermLike) -> BijectionReport:
    if name not in MAPS:
        raise ValueError(f"unknown map {name!r}; expected one of {sorted(MAPS)}")
    w = as_letters(perm)
    out = MAPS[name](w)
    return BijectionReport(name, Permutation(w), Permutation(out), stat_vector(w), stat_vector(out))
