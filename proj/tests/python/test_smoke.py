# Copyright 2026 The antiembed Authors
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

import pytest

import antiembed as ae


def out_star(k):
    return ae.AntiTree(k + 1, [(0, i) for i in range(1, k + 1)])


def test_digraph_basics():
    d = ae.Digraph(3, [(0, 1), (2, 1)])
    assert d.order == 3 and d.size == 2
    assert d.in_degree(1) == 2
    assert d.has_arc(2, 1) and not d.has_arc(1, 2)
    assert d.reverse().has_arc(1, 2)
    assert ae.parse_graph(d.to_arc_list()) == d


def test_tree_validation():
    t = ae.AntiTree(3, [(0, 1), (2, 1)])
    assert t.k == 2 and t.sign(1) == "-"
    with pytest.raises(ae.NotAntidirected):
        ae.AntiTree(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        ae.Digraph(2, [(0, 0)])


def test_thresholds():
    th = ae.thresholds(13)
    assert th["s"] == 2 and th["quarter"] == 3 and th["delta2_small"] == 5
    assert th["five_twelfths_up"] == 6 and th["seven_twelfths_up"] == 8


def test_burr_refusal_and_oracle():
    d = ae.gen_burr(3)
    out = ae.embed(d, out_star(3))
    assert out["status"] == "refused" and out["exit_code"] == 2
    assert ae.oracle(d, out_star(3))["verdict"] == "not-contained"


def test_plane_pipeline():
    d = ae.gen_incidence(25)
    assert d.order == 1302 and d.size == 16926
    assert ae.is_k2s_free(d, 2)
    for seed in range(3):
        t = ae.random_antitree(13, seed, 0.5)
        out = ae.embed(d, t)
        assert out["status"] == "success"
        assert ae.is_valid_embedding(t, d, out["embedding"])


def test_caterpillar_and_good_arcs():
    d = ae.gen_random_dense(7, 3, 11)
    t = ae.random_caterpillar(3, 2)
    assert ae.is_valid_embedding(t, d, ae.embed_caterpillar(d, t))
    assert len(ae.good_arcs(d, t, order_seed=5)) >= d.size - 2 * 7


def test_freeness_witness():
    tri = ae.Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert ae.is_k2s_free(tri, 2)
    w = ae.find_k2s(tri, 1)
    assert w is not None and len(w["common"]) >= 1


def test_selection():
    d = ae.gen_random_dense(12, 4, 3)
    sel = ae.select_subdigraph(d, 4, 2)
    assert sel["case"] in ("I", "II")
    assert sel["sub"].size > 0


def test_sweep_report():
    rep = ae.run_sweep("burr-tightness", jobs=1)
    assert rep["schema"] == 1 and rep["pass"] and rep["failures"] == 0
