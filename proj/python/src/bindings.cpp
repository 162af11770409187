// Copyright 2026 The antiembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/convex.hpp"
#include "antiembed/embedder.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/freeness.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/oracle.hpp"
#include "antiembed/subdigraph.hpp"
#include "antiembed/sweep.hpp"

namespace py = pybind11;
using namespace antiembed;

namespace {

using ArcList = std::vector<std::pair<VertexId, VertexId>>;

Digraph make_digraph(int n, const ArcList& arcs) {
  std::vector<Arc> a;
  a.reserve(arcs.size());
  for (const auto& [u, v] : arcs) a.push_back({u, v});
  return Digraph(n, a);
}

ArcList arc_list(const Digraph& d) {
  ArcList out;
  for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Embedding antidirected trees into dense digraphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated", PyExc_ValueError);
  py::register_exception<NotATree>(m, "NotATree", PyExc_ValueError);
  py::register_exception<NotAntidirected>(m, "NotAntidirected", PyExc_ValueError);
  py::register_exception<NotACaterpillar>(m, "NotACaterpillar", PyExc_ValueError);
  py::register_exception<InternalAssertion>(m, "InternalAssertion", PyExc_RuntimeError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def("arcs", &arc_list)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("has_arc", &Digraph::has_arc)
      .def("reverse", [](const Digraph& d) { return reverse(d); })
      .def("to_arc_list", [](const Digraph& d) { return to_arc_list(d); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& d) {
        return "<Digraph n=" + std::to_string(d.order()) + " arcs=" + std::to_string(d.size()) + ">";
      });

  py::class_<AntiTree>(m, "AntiTree")
      .def(py::init([](int n, const ArcList& arcs) { return validate_antitree(make_digraph(n, arcs)); }),
           py::arg("n"), py::arg("arcs"))
      .def_property_readonly("k", &AntiTree::k)
      .def_property_readonly("order", &AntiTree::order)
      .def_property_readonly("digraph", &AntiTree::digraph)
      .def("sign", [](const AntiTree& t, VertexId v) { return std::string(1, sign_char(t.sign(v))); })
      .def("is_caterpillar", [](const AntiTree& t) { return is_caterpillar(t); })
      .def("reverse", [](const AntiTree& t) { return reverse_tree(t); })
      .def("degrees", [](const AntiTree& t) {
        const DegreeStats ds = degree_stats(t);
        return py::dict(py::arg("delta") = ds.delta, py::arg("delta2") = ds.delta2, py::arg("u") = ds.argmax_u,
                        py::arg("v") = ds.argmax2_v);
      })
      .def("__repr__", [](const AntiTree& t) { return "<AntiTree k=" + std::to_string(t.k()) + ">"; });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text).graph; }, py::arg("text"),
        "Parse the arc-list or JSON format.");

  m.def(
      "embed",
      [](const Digraph& host, const AntiTree& tree, bool check_hypotheses, bool force_oracle,
         std::uint64_t net_budget) {
        EmbedOptions opt;
        opt.check_hypotheses = check_hypotheses;
        opt.force_oracle = force_oracle;
        opt.net_budget = net_budget;
        EmbedOutcome o;
        {
          py::gil_scoped_release release;
          o = embed_antitree(host, tree, opt);
        }
        return outcome_to_json(o);
      },
      py::arg("host"), py::arg("tree"), py::arg("check_hypotheses") = true, py::arg("force_oracle") = false,
      py::arg("net_budget") = 200000, "Run the full pipeline and return the outcome as JSON text.");

  m.def(
      "embed_caterpillar",
      [](const Digraph& host, const AntiTree& tree, bool mindeg) {
        return mindeg ? embed_caterpillar_mindeg(host, tree).map : embed_caterpillar(host, tree).map;
      },
      py::arg("host"), py::arg("tree"), py::arg("mindeg") = false);

  m.def(
      "good_arcs",
      [](const Digraph& host, const AntiTree& tree, std::optional<std::uint64_t> order_seed, bool mindeg) {
        const ConvexDigraph c =
            order_seed ? ConvexDigraph::with_random_order(host, *order_seed) : ConvexDigraph::with_id_order(host);
        const GoodArcTable tab =
            compute_good_arcs(c, tree, mindeg ? GoodArcVariant::MinDegree : GoodArcVariant::Density);
        ArcList out;
        for (const Arc& a : tab.final_good()) out.emplace_back(a.tail, a.head);
        return out;
      },
      py::arg("host"), py::arg("tree"), py::arg("order_seed") = std::nullopt, py::arg("mindeg") = false);

  m.def("is_valid_embedding",
        [](const AntiTree& t, const Digraph& host, const std::vector<VertexId>& map) {
          return is_valid_embedding(t.digraph(), host, Embedding{map});
        });

  m.def("is_k2s_free", &is_k2s_free, py::arg("digraph"), py::arg("s"));
  m.def(
      "find_k2s",
      [](const Digraph& d, int s) -> std::optional<py::dict> {
        const auto w = find_k2s(d, s);
        if (!w) return std::nullopt;
        return py::dict(py::arg("a") = w->a, py::arg("b") = w->b,
                        py::arg("sign_a") = std::string(1, sign_char(w->sign_a)),
                        py::arg("sign_b") = std::string(1, sign_char(w->sign_b)), py::arg("common") = w->common);
      },
      py::arg("digraph"), py::arg("s"));

  m.def(
      "oracle",
      [](const Digraph& host, const AntiTree& tree, std::optional<std::uint64_t> budget) {
        SearchStats st;
        {
          py::gil_scoped_release release;
          st = oracle_embed(host, tree, budget);
        }
        py::dict out(py::arg("verdict") = to_string(st.verdict), py::arg("nodes") = st.nodes_expanded);
        if (st.witness) out["embedding"] = st.witness->map;
        return out;
      },
      py::arg("host"), py::arg("tree"), py::arg("budget") = std::nullopt);

  m.def(
      "select_subdigraph",
      [](const Digraph& d, int k, int r) {
        const SelectionResult sel = select_subdigraph(d, k, r);
        return py::dict(py::arg("case") = to_string(sel.tag), py::arg("witness_vertex") = sel.witness_vertex,
                        py::arg("sub") = sel.sub);
      },
      py::arg("digraph"), py::arg("k"), py::arg("r"));
  m.def("prune_pseudo", &prune_pseudo, py::arg("digraph"), py::arg("k"));

  m.def("gen_burr", &gen_burr, py::arg("k"));
  m.def("gen_incidence", &gen_incidence, py::arg("q"));
  m.def("gen_random_dense", &gen_random_dense, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("random_antitree", &random_antitree, py::arg("k"), py::arg("seed"), py::arg("hub_bias") = 0.0);
  m.def("random_caterpillar", &random_caterpillar, py::arg("k"), py::arg("seed"));

  m.def("thresholds", [](int k) {
    const Thresholds th = thresholds(k);
    return py::dict(py::arg("k") = th.k, py::arg("s") = th.s, py::arg("quarter") = th.quarter,
                    py::arg("delta2_small") = th.delta2_small, py::arg("half_up") = th.half_up,
                    py::arg("five_twelfths_up") = th.five_twelfths_up,
                    py::arg("seven_twelfths_up") = th.seven_twelfths_up);
  });

  m.def(
      "run_sweep",
      [](const std::string& suite, long samples, std::uint64_t seed, int jobs) {
        SweepConfig cfg;
        cfg.suite = suite;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.jobs = jobs;
        py::gil_scoped_release release;
        return run_sweep(cfg).json;
      },
      py::arg("suite"), py::arg("samples") = -1, py::arg("seed") = 20261018, py::arg("jobs") = 0,
      "Run an acceptance suite and return the JSON report text.");
}
