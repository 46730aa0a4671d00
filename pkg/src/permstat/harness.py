"""Exhaustive sweeps over S_n: joint distribution tables and property checks.

Every sweep walks its domain in lexicographic order. With ``jobs > 1`` the
index range is cut into contiguous chunks handled by a process pool; each
chunk builds its own tally, and tallies are merged in chunk order, so serial
and parallel runs give identical tables and identical counterexample lists.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .bijections import _burstein, _carlitz, _check_relations, _prefix, _rho
from .labeling import Scheme, _insert, _labels
from .patterns import (
    MAJ_PATTERNS,
    STAT_PATTERNS,
    check_anchored_identity,
    compute_abcd,
    count_occurrences,
)
from .perm import STAT_NAMES, batch_stats, permutation_array, permutations

__all__ = [
    "MAX_N",
    "DEFAULT_N",
    "JOBS_ENV",
    "DistributionTable",
    "VerificationReport",
    "PROPERTIES",
    "resolve_jobs",
    "distribution",
    "verify",
    "export_table",
    "parse_table",
]

MAX_N = 10
DEFAULT_N = 8
JOBS_ENV = "PERMSTAT_JOBS"
MAX_FAILURES = 10
CHUNK_ROWS = 200_000


def resolve_jobs(jobs: int | None = None) -> int:
    """Explicit ``jobs`` wins; otherwise ``$PERMSTAT_JOBS``; otherwise 1."""
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1") or 1)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs


def _check_n(n: int, force: bool):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    if n > 9 and not force:
        raise ValueError(f"n = {n} takes minutes; pass force=True (--force) to run it")


def _chunks(size: int, jobs: int) -> list[tuple[int, int]]:
    pieces = max(1 if jobs == 1 else jobs * 4, math.ceil(size / CHUNK_ROWS))
    step = max(1, math.ceil(size / pieces))
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)] or [(0, 0)]


def _run(worker: Callable, args: list[tuple], jobs: int) -> list:
    if jobs == 1 or len(args) == 1:
        return [worker(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, *zip(*args)))


@dataclass
class DistributionTable:
    n: int
    stats: tuple[str, ...]
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def __eq__(self, other):
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def polynomial(self) -> list[int]:
        """Coefficient list of ``sum q^stat`` for a single-statistic table."""
        if len(self.stats) != 1:
            raise ValueError("polynomial() needs exactly one statistic")
        top = max(k[0] for k in self.counts)
        coeffs = [0] * (top + 1)
        for (value,), count in self.counts.items():
            coeffs[value] += count
        return coeffs


def _tally(n: int, names: tuple[str, ...], start: int, stop: int) -> Counter:
    arr = permutation_array(n, start, stop)
    if arr.shape[0] == 0:
        return Counter()
    columns = batch_stats(arr, names)
    keys = np.stack([columns[name] for name in names], axis=1)
    uniq, counts = np.unique(keys, axis=0, return_counts=True)
    return Counter({tuple(int(x) for x in row): int(c) for row, c in zip(uniq, counts)})


def distribution(
    stats: Sequence[str], n: int, jobs: int | None = 1, force: bool = False
) -> DistributionTable:
    """Exact joint distribution of ``stats`` over all of S_n."""
    names = tuple(stats)
    if not names:
        raise ValueError("at least one statistic is required")
    for name in names:
        if name not in STAT_NAMES:
            raise ValueError(f"unknown statistic {name!r}; expected one of {STAT_NAMES}")
    _check_n(n, force)
    jobs = resolve_jobs(jobs)
    args = [(n, names, lo, hi) for lo, hi in _chunks(math.factorial(n), jobs)]
    total: Counter = Counter()
    for part in _run(_tally, args, jobs):
        total.update(part)
    return DistributionTable(n, names, dict(total))


def export_table(table: DistributionTable, format: str = "json") -> bytes:
    if format == "json":
        doc = {
            "n": table.n,
            "stats": list(table.stats),
            "rows": [{"key": list(key), "count": count} for key, count in table.rows()],
        }
        return (json.dumps(doc) + "\n").encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*table.stats, "count"])
        for key, count in table.rows():
            writer.writerow([*key, count])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}; expected json or csv")


def parse_table(data: bytes | str, format: str = "json", n: int | None = None) -> DistributionTable:
    """Inverse of :func:`export_table`. CSV carries no ``n``; it is inferred
    from the total count unless given."""
    text = data.decode() if isinstance(data, bytes) else data
    if format == "json":
        doc = json.loads(text)
        counts = {tuple(row["key"]): row["count"] for row in doc["rows"]}
        return DistributionTable(doc["n"], tuple(doc["stats"]), counts)
    if format == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        counts = {tuple(int(x) for x in row[:-1]): int(row[-1]) for row in reader if row}
        if n is None:
            total = sum(counts.values())
            n = next(k for k in range(1, MAX_N + 1) if math.factorial(k) == total)
        return DistributionTable(n, tuple(header[:-1]), counts)
    raise ValueError(f"unknown format {format!r}; expected json or csv")


# ---------------------------------------------------------------------------
# property sweeps


@dataclass
class VerificationReport:
    property: str
    n: int
    cases_checked: int
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "property": self.property,
            "n": self.n,
            "cases_checked": self.cases_checked,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 6),
            "details": self.details,
            "ok": self.ok,
        }


@dataclass
class _Chunk:
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, **info):
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(info)


def _fmt(w: Iterable[int]) -> str:
    w = tuple(w)
    return ("" if len(w) <= 9 else ",").join(map(str, w))


def _flag_rows(chunk: _Chunk, perms: Sequence[tuple[int, ...]], good: np.ndarray, **extra):
    for idx in np.flatnonzero(~good)[:MAX_FAILURES]:
        chunk.fail(perm=_fmt(perms[idx]), **{k: v[idx] for k, v in extra.items()})


# domains: "sn" = S_n, "grow" = (sigma in S_{n-1}, label in 0..n-1), "top" = S_n with p_1 = n


def _domain_size(domain: str, n: int) -> int:
    if domain == "sn":
        return math.factorial(n)
    if domain == "grow":
        return math.factorial(n) if n >= 2 else 0
    return math.factorial(n - 1)


def _domain_perms(domain: str, n: int, start: int, stop: int) -> list[tuple[int, ...]]:
    if domain == "sn":
        return list(itertools.islice(permutations(n), start, stop))
    # "top": n followed by S_{n-1} in lexicographic order
    return [(n,) + w for w in itertools.islice(permutations(n - 1), start, stop)]


def _image_check(n, start, stop, fn, compare) -> _Chunk:
    perms = _domain_perms("sn", n, start, stop)
    chunk = _Chunk(len(perms))
    if perms:
        images = [fn(w) for w in perms]
        before = batch_stats(np.array(perms), STAT_NAMES)
        after = batch_stats(np.array(images), STAT_NAMES)
        _flag_rows(chunk, perms, compare(before, after), image=[_fmt(x) for x in images])
    return chunk


def _involution(n, start, stop) -> _Chunk:
    perms = _domain_perms("sn", n, start, stop)
    chunk = _Chunk(len(perms))
    for w in perms:
        image = _rho(w)
        back = _rho(image)
        if back != w:
            chunk.fail(perm=_fmt(w), image=_fmt(image), back=_fmt(back))
    return chunk


def _preserve(n, start, stop) -> _Chunk:
    return _image_check(
        n, start, stop, _rho, lambda a, b: (a["des"] == b["des"]) & (a["F"] == b["F"])
    )


def _swap(n, start, stop) -> _Chunk:
    return _image_check(
        n, start, stop, _rho, lambda a, b: (b["maj"] == a["stat"]) & (b["stat"] == a["maj"])
    )


def _burstein_tuple(n, start, stop) -> _Chunk:
    def same(a, b):
        good = (b["maj"] == a["stat"]) & (b["stat"] == a["maj"])
        for name in ("adj", "des", "F"):
            good &= a[name] == b[name]
        return good

    return _image_check(n, start, stop, _burstein, same)


def _carlitz_transport(n, start, stop) -> _Chunk:
    chunk = _image_check(n, start, stop, _carlitz, lambda a, b: b["maj"] == a["inv"])
    perms = _domain_perms("sn", n, start, stop)
    # images encoded as integers so the parent can check global distinctness
    chunk.details["images"] = [int("".join(f"{x:02d}" for x in _carlitz(w))) for w in perms]
    return chunk


def _additivity(scheme: Scheme, statistic: str):
    def check(n, start, stop) -> _Chunk:
        chunk = _Chunk()
        lo, hi = start // n, -(-stop // n)
        sigmas = list(itertools.islice(permutations(n - 1), lo, hi))
        base_rows, grown, labels, des_values = [], [], [], []
        for offset, sigma in enumerate(sigmas):
            d = sum(1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])
            for label in range(n):
                index = (lo + offset) * n + label
                if start <= index < stop:
                    base_rows.append(sigma)
                    grown.append(_insert(scheme, label, sigma))
                    labels.append(label)
                    des_values.append(d)
        chunk.checked = len(grown)
        if not grown:
            return chunk
        before = batch_stats(np.array(base_rows), (statistic,))[statistic]
        after = batch_stats(np.array(grown), (statistic,))[statistic]
        labels = np.array(labels)
        good = after == before + labels
        if scheme is Scheme.STAT:
            excluded = labels == np.array(des_values) + 1
            broken = excluded & ~good
            chunk.details["excluded_cases"] = int(excluded.sum())
            chunk.details["excluded_breaks"] = int(broken.sum())
            chunk.details["excluded_witness"] = (
                {"perm": _fmt(base_rows[int(np.argmax(broken))]), "label": int(labels[np.argmax(broken)])}
                if broken.any()
                else None
            )
            good |= excluded
        for idx in np.flatnonzero(~good)[:MAX_FAILURES]:
            chunk.fail(perm=_fmt(base_rows[idx]), label=int(labels[idx]))
        return chunk

    return check


def _label_sum(n, start, stop) -> _Chunk:
    perms = _domain_perms("sn", n, start, stop)
    chunk = _Chunk(len(perms))
    for w in perms:
        f = _labels(Scheme.MAJ, w)
        h = _labels(Scheme.STAT, w)
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        for s in range(n + 1):
            if s == 0:
                expected = 2 * d + 2
            elif s == n or w[s - 1] > w[s]:
                expected = d
            else:
                expected = n + d + 2
            if f[s] + h[s] != expected:
                chunk.fail(perm=_fmt(w), space=s)
                break
    return chunk


def _abcd(n, start, stop) -> _Chunk:
    perms = _domain_perms("top", n, start, stop)
    chunk = _Chunk(len(perms))
    for p in perms:
        if not compute_abcd(p).balanced():
            chunk.fail(perm=_fmt(p))
    return chunk


def _anchored(n, start, stop) -> _Chunk:
    perms = _domain_perms("top", n, start, stop)
    chunk = _Chunk(len(perms))
    for p in perms:
        if not check_anchored_identity(p):
            chunk.fail(perm=_fmt(p))
    return chunk


def _star_star(n, start, stop) -> _Chunk:
    perms = _domain_perms("top", n, start, stop)
    chunk = _Chunk(len(perms))
    for p in perms:
        q = _prefix(p)
        lhs = sum(count_occurrences(pat, p) for pat in STAT_PATTERNS[:3])
        rhs = sum(count_occurrences(pat, q) for pat in MAJ_PATTERNS[:3])
        if lhs != rhs:
            chunk.fail(perm=_fmt(p), transformed=_fmt(q))
    return chunk


def _first_max(n, start, stop) -> _Chunk:
    perms = _domain_perms("top", n, start, stop)
    chunk = _Chunk(len(perms))
    for p in perms:
        if not _check_relations(p):
            chunk.fail(perm=_fmt(p))
    return chunk


def _equidist(n, start, stop) -> _Chunk:
    chunk = _Chunk(stop - start)
    chunk.details["stat"] = _tally(n, ("des", "stat"), start, stop)
    chunk.details["maj"] = _tally(n, ("des", "maj"), start, stop)
    return chunk


def _general_relation(n, start, stop) -> _Chunk:
    # maj + stat = (n+1) des - (F-1) over all of S_n; reported, never asserted
    arr = permutation_array(n, start, stop)
    chunk = _Chunk(arr.shape[0])
    if arr.shape[0]:
        s = batch_stats(arr, ("maj", "stat", "des", "F"))
        good = s["maj"] + s["stat"] == (n + 1) * s["des"] - (s["F"] - 1)
        _flag_rows(chunk, [tuple(int(x) for x in row) for row in arr], good)
    return chunk


@dataclass(frozen=True)
class _Property:
    domain: str
    check: Callable[[int, int, int], _Chunk]
    description: str


PROPERTIES: dict[str, _Property] = {
    "involution": _Property("sn", _involution, "rho(rho(pi)) = pi"),
    "preserve-des-F": _Property("sn", _preserve, "rho keeps des and the first letter"),
    "maj-stat-swap": _Property("sn", _swap, "maj(rho(pi)) = stat(pi) and stat(rho(pi)) = maj(pi)"),
    "carlitz-transport": _Property("sn", _carlitz_transport, "maj(carlitz(pi)) = inv(pi), carlitz bijective"),
    "burstein-5tuple": _Property("sn", _burstein_tuple, "(adj,des,F,maj,stat) -> (adj,des,F,stat,maj) under burstein"),
    "additivity-inv": _Property("grow", _additivity(Scheme.INV, "inv"), "inv grows by the inv label"),
    "additivity-maj": _Property("grow", _additivity(Scheme.MAJ, "maj"), "maj grows by the maj label"),
    "additivity-stat": _Property("grow", _additivity(Scheme.STAT, "stat"), "stat grows by the stat label, label des+1 excepted"),
    "label-sum": _Property("sn", _label_sum, "maj label + stat label per space"),
    "abcd-multiset": _Property("top", _abcd, "A + B = C + D as multisets"),
    "anchored-identity": _Property("top", _anchored, "(^c-ba)+(b-ca) = (^c-b-a$)+(b-ac)"),
    "eq-star-star": _Property("top", _star_star, "stat-side patterns of p = maj-side patterns of prefix_transform(p)"),
    "equidist-des-stat-maj": _Property("sn", _equidist, "(des,stat) and (des,maj) equidistributed"),
    "firstmax-relations": _Property("top", _first_max, "closing relations and rho = burstein when F = n"),
}


def _sweep(name: str, n: int, start: int, stop: int) -> _Chunk:
    return PROPERTIES[name].check(n, start, stop)


def _general_sweep(n: int, start: int, stop: int) -> _Chunk:
    return _general_relation(n, start, stop)


def _merge(chunks: list[_Chunk]) -> tuple[int, list[dict]]:
    checked = sum(c.checked for c in chunks)
    failures = [f for c in chunks for f in c.failures][:MAX_FAILURES]
    return checked, failures


def verify(
    property: str, n: int = DEFAULT_N, jobs: int | None = 1, force: bool = False
) -> VerificationReport:
    """Check one named property exhaustively on its size-``n`` domain."""
    if property not in PROPERTIES:
        raise ValueError(f"unknown property {property!r}; expected one of {sorted(PROPERTIES)}")
    _check_n(n, force)
    jobs = resolve_jobs(jobs)
    prop = PROPERTIES[property]
    started = time.perf_counter()
    size = _domain_size(prop.domain, n)
    args = [(property, n, lo, hi) for lo, hi in _chunks(size, jobs)]
    chunks = _run(_sweep, args, jobs)
    checked, failures = _merge(chunks)
    details: dict = {}

    if property == "carlitz-transport":
        images = [x for c in chunks for x in c.details.get("images", [])]
        distinct = len(set(images))
        details["distinct_images"] = distinct
        if distinct != math.factorial(n):
            failures.append({"perm": None, "reason": f"only {distinct} distinct images"})
    elif property == "additivity-stat":
        details["excluded_cases"] = sum(c.details.get("excluded_cases", 0) for c in chunks)
        details["excluded_breaks"] = sum(c.details.get("excluded_breaks", 0) for c in chunks)
        details["excluded_witness"] = next(
            (c.details["excluded_witness"] for c in chunks if c.details.get("excluded_witness")), None
        )
    elif property == "equidist-des-stat-maj":
        left: Counter = Counter()
        right: Counter = Counter()
        for c in chunks:
            left.update(c.details["stat"])
            right.update(c.details["maj"])
        for key in sorted(set(left) | set(right)):
            if left[key] != right[key]:
                failures.append({"key": list(key), "des_stat": left[key], "des_maj": right[key]})
        failures = failures[:MAX_FAILURES]
        details["distinct_keys"] = len(left)
    elif property == "firstmax-relations":
        general_args = [(n, lo, hi) for lo, hi in _chunks(math.factorial(n), jobs)]
        general_checked, general_failures = _merge(_run(_general_sweep, general_args, jobs))
        details["general_relation_checked"] = general_checked
        details["general_relation_holds"] = not general_failures
        details["general_relation_counterexamples"] = general_failures

    return VerificationReport(property, n, checked, failures, time.perf_counter() - started, details)
