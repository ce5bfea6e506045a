# Copyright 2026 The netcert Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json

import numpy as np
import pytest

import netcert


def test_networks():
    net = netcert.ghz6_network()
    assert net.num_parties == 6
    assert net.num_sources == 3
    doc = json.loads(net.to_json())
    assert netcert.network(doc).num_sources == 3
    with pytest.raises(ValueError):
        netcert.network({"sources": {"S": ["A"]}, "parties": {}})


def test_distributions_are_normalized():
    p = netcert.ghz_distribution(0.8, "XZXZXZ")
    assert p.table.shape == (1, 64)
    assert np.allclose(p.table.sum(axis=1), 1.0)
    q = netcert.trident_two_input(1.0, "XZ")
    assert q.table.shape == (64, 64)
    assert q.max_signaling() < 1e-12
    r = netcert.Distribution.from_json(p.to_json())
    assert np.array_equal(r.table, p.table)


def test_generating_set_size():
    assert netcert.InflationModel(netcert.ghz6_network(2), 2, "1").size == 41


def test_certify_and_extract():
    model = netcert.InflationModel(netcert.ghz6_network(2), 2, "1")
    assert netcert.certify(model, netcert.ghz_two_input(0.5)).status == "feasible"
    report = netcert.certify(model, netcert.ghz_two_input(1.0))
    assert report.status == "infeasible"
    w = netcert.extract(report, model)
    assert w.evaluate(netcert.ghz_two_input(1.0)) < 0
    assert w.evaluate(netcert.ghz_two_input(0.5)) > -1e-6
    again = netcert.witness(json.loads(w.to_json()))
    assert again.evaluate(netcert.ghz_two_input(1.0)) == w.evaluate(netcert.ghz_two_input(1.0))


def test_bisection():
    model = netcert.InflationModel(netcert.ghz6_network(2), 2, "1")
    res = netcert.critical_visibility(model, netcert.ghz_two_input, tol_v=1e-2)
    assert res["outcome"] == "bracketed"
    assert abs(res["estimate"] - 0.618) < 1e-2


def test_fixture_and_bootstrap():
    w1 = netcert.fixture("W1")
    assert w1.evaluate(netcert.ghz_two_input(1.0)) == pytest.approx(-0.531, abs=1e-9)
    alpha = ["XZ"] * 6
    counts = netcert.sample_counts(netcert.ghz_two_input(0.95), alpha, 500, seed=4)
    assert counts.num_settings == 64
    assert counts.total == 64 * 500
    res = netcert.bootstrap(counts, alpha, w1, 0.1, reps=10, seed=2)
    assert res.repetitions == 10
    assert len(res.values) == 10
    assert res.band_low <= res.mean <= res.band_high
    with pytest.raises(ValueError):
        netcert.fixture("W9")
