import json
import math

import pytest

import oracles
from permstat.harness import (
    JOBS_ENV,
    PROPERTIES,
    DistributionTable,
    distribution,
    export_table,
    parse_table,
    resolve_jobs,
    verify,
)


def test_distribution_inv_3():
    table = distribution(["inv"], 3)
    assert table.counts == {(0,): 1, (1,): 2, (2,): 2, (3,): 1}
    assert table.polynomial() == oracles.q_factorial(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_distribution_totals_and_maj_sum(n):
    table = distribution(["maj"], n)
    assert table.total() == math.factorial(n)
    assert sum(k[0] * c for k, c in table.counts.items()) * 4 == math.factorial(n) * n * (n - 1)


def test_des_stat_equals_des_maj_small():
    assert distribution(["des", "stat"], 4) == distribution(["des", "maj"], 4)


def test_distribution_errors():
    with pytest.raises(ValueError):
        distribution(["foo"], 3)
    with pytest.raises(ValueError):
        distribution(["des"], 0)
    with pytest.raises(ValueError):
        distribution(["des"], 11, force=True)
    with pytest.raises(ValueError):
        distribution(["des"], 10)
    with pytest.raises(ValueError):
        distribution([], 3)


def test_parallel_matches_serial():
    serial = distribution(["des", "stat", "F"], 6, jobs=1)
    parallel = distribution(["des", "stat", "F"], 6, jobs=3)
    assert serial == parallel
    assert export_table(serial) == export_table(parallel)
    a = verify("additivity-stat", 6, jobs=1)
    b = verify("additivity-stat", 6, jobs=3)
    assert (a.cases_checked, a.failures, a.details) == (b.cases_checked, b.failures, b.details)


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv(JOBS_ENV, "3")
    assert resolve_jobs(None) == 3
    assert resolve_jobs(2) == 2
    monkeypatch.delenv(JOBS_ENV)
    assert resolve_jobs(None) == 1
    with pytest.raises(ValueError):
        resolve_jobs(0)


def test_export_csv():
    assert export_table(distribution(["des"], 2), "csv") == b"des,count\n0,1\n1,1\n"


def test_export_json():
    doc = json.loads(export_table(distribution(["inv"], 3), "json"))
    assert doc["n"] == 3 and doc["stats"] == ["inv"]
    assert [(r["key"], r["count"]) for r in doc["rows"]] == [([0], 1), ([1], 2), ([2], 2), ([3], 1)]


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_export_round_trip(fmt):
    table = distribution(["des", "maj", "adj"], 5)
    back = parse_table(export_table(table, fmt), fmt)
    assert back == table and back.stats == table.stats
    with pytest.raises(ValueError):
        export_table(table, "xml")


def test_rows_sorted():
    table = DistributionTable(2, ("x",), {(3,): 1, (1,): 1})
    assert [k for k, _ in table.rows()] == [(1,), (3,)]


@pytest.mark.parametrize("name", sorted(PROPERTIES))
@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_every_property_holds(name, n):
    report = verify(name, n)
    assert report.ok, report.failures
    domain = PROPERTIES[name].domain
    expected = {
        "sn": math.factorial(n),
        "grow": math.factorial(n) if n >= 2 else 0,
        "top": math.factorial(n - 1),
    }[domain]
    assert report.cases_checked == expected


def test_verify_examples():
    assert verify("involution", 6).cases_checked == 720
    r = verify("involution", 1)
    assert (r.cases_checked, r.failures) == (1, [])
    assert verify("equidist-des-stat-maj", 7).ok


def test_verify_unknown_property():
    with pytest.raises(ValueError):
        verify("nope", 3)


def test_additivity_stat_reports_front_insertions():
    # inserting at the front raises stat by F(sigma), which matches des+1 only sometimes
    assert verify("additivity-stat", 3).details["excluded_breaks"] == 0
    details = verify("additivity-stat", 4).details
    assert details["excluded_breaks"] > 0
    assert details["excluded_witness"] == {"perm": "132", "label": 2}


def test_report_serialises():
    doc = verify("label-sum", 4).as_dict()
    assert json.loads(json.dumps(doc))["ok"] is True
