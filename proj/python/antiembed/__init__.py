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
"""Python bindings for the antiembed C++ library."""

import json as _json

from ._core import (
    AntiTree,
    Digraph,
    HypothesisViolated,
    InternalAssertion,
    InvalidInput,
    NotACaterpillar,
    NotAntidirected,
    NotATree,
    embed_caterpillar,
    find_k2s,
    gen_burr,
    gen_incidence,
    gen_random_dense,
    good_arcs,
    is_k2s_free,
    is_valid_embedding,
    oracle,
    parse_graph,
    prune_pseudo,
    random_antitree,
    random_caterpillar,
    select_subdigraph,
    thresholds,
)
from . import _core


def embed(host, tree, check_hypotheses=True, force_oracle=False, net_budget=200000):
    """Run the full pipeline; returns the outcome as a dict."""
    return _json.loads(_core.embed(host, tree, check_hypotheses, force_oracle, net_budget))


def run_sweep(suite, samples=-1, seed=20261018, jobs=0):
    """Run an acceptance suite; returns the JSON report as a dict."""
    return _json.loads(_core.run_sweep(suite, samples, seed, jobs))


__all__ = [
    "AntiTree",
    "Digraph",
    "HypothesisViolated",
    "InternalAssertion",
    "InvalidInput",
    "NotACaterpillar",
    "NotAntidirected",
    "NotATree",
    "embed",
    "embed_caterpillar",
    "find_k2s",
    "gen_burr",
    "gen_incidence",
    "gen_random_dense",
    "good_arcs",
    "is_k2s_free",
    "is_valid_embedding",
    "oracle",
    "parse_graph",
    "prune_pseudo",
    "random_antitree",
    "random_caterpillar",
    "run_sweep",
    "select_subdigraph",
    "thresholds",
]
