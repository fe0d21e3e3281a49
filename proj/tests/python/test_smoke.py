# Copyright 2026-present the rankdb authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os

import pytest

import rankdb

DATA = os.environ.get(
    "RANKDB_DATA_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data"),
)
MATCH = "project [AGENT,NAME] (join (houses, customers) on PRICE ~ BUDGET)"


@pytest.fixture
def catalog():
    return rankdb.load_config(os.path.join(DATA, "example.cfg"))


def test_tables(catalog):
    assert catalog.tables() == ["customers", "houses", "houses_alt"]
    assert catalog.scheme("customers") == ["BUDGET", "NAME"]


def test_projection(catalog):
    rows = catalog.query("project [LOCATION] houses")
    got = {r["LOCATION"]: round(r["rank"], 12) for r in rows}
    assert got == {"Vestal": 0.93, "Endicott": 0.89, "Binghamton": 0.86}
    assert [r["LOCATION"] for r in rows] == ["Vestal", "Endicott", "Binghamton"]


def test_similarity(catalog):
    r = catalog.sim("houses", "houses_alt")
    assert r["similarity"] == pytest.approx(0.98, abs=1e-12)
    hedged = catalog.sim("houses", "houses_alt", mode="hedged", hedge="identity")
    tuple_based = catalog.sim("houses", "houses_alt", mode="tuple")
    assert hedged == tuple_based


def test_bound_and_verify(catalog):
    b = catalog.bound(MATCH, {"houses": "0.98"})
    assert b["value"] == pytest.approx(0.98)
    assert b["guarantee"] == "rank-based"
    assert b["trace"][-1]["node"] == rankdb.parse_query(MATCH)
    v = catalog.verify(MATCH, {"houses": os.path.join(DATA, "houses_alt.csv")})
    assert v["holds"]
    assert v["actual"] >= 0.98 - 1e-12


def test_lattice():
    luk = rankdb.Lattice("lukasiewicz")
    assert luk.tnorm("0.93", "0.98") == pytest.approx(0.91)
    chain = rankdb.Lattice("chain", 10)
    assert chain.residuum("0.9", "0.7") == pytest.approx(0.8)
    assert chain.hedge("globalization", "0.9") == 0.0


def test_errors(catalog):
    with pytest.raises(rankdb.Error, match="out of"):
        catalog.query("shift 1.5 houses")
    with pytest.raises(rankdb.Error):
        rankdb.load_config(os.path.join(DATA, "missing.cfg"))


def test_checks():
    results = rankdb.run_checks(seed=3, iterations=50, suites=["lattice", "parser"])
    assert results and all(r["ok"] for r in results)
