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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/digraph.hpp"
#include "antiembed/embedding.hpp"
#include "antiembed/freeness.hpp"
#include "antiembed/oracle.hpp"
#include "antiembed/subdigraph.hpp"

namespace antiembed {

// Integer thresholds used by the dispatch, all computed exactly.
struct Thresholds {
  int k = 0;
  int s = 0;             // ceil(k/12)
  int quarter = 0;       // floor(k/4)
  int delta2_small = 0;  // floor(k/4) + 2, largest second degree of the first branch
  int half_up = 0;       // ceil(k/2)
  int five_twelfths_up = 0;   // ceil(5k/12)
  int seven_twelfths_up = 0;  // ceil(7k/12)
};
Thresholds thresholds(int k);

enum class Branch { LowDelta, MidDelta, BroomA, BroomB_I, BroomB_II, Oracle };
const char* to_string(Branch b);

struct CaseTag {
  Branch branch = Branch::LowDelta;
  int k = 0;
  int s = 0;
  int delta = 0;
  int delta2 = 0;
  int r = 0;           // selection parameter, 0 when no selection was made
  std::string detail;  // sub-route, e.g. "strip", "padded-broom", "(ii)"
};

struct TraceEvent {
  std::string tag;
  std::string detail;
};

struct Checkpoint {
  std::string tag;
  bool ok = true;
  std::string detail;
};

// Decision log of one run. Checkpoints mirror the inequalities the
// construction relies on; a failed checkpoint means the state the run reached
// is one the argument rules out.
struct Trace {
  std::vector<TraceEvent> events;
  std::vector<Checkpoint> checkpoints;

  void event(std::string tag, std::string detail = {});
  bool check(std::string tag, bool ok, std::string detail = {});
  int failed() const;
  void append(const Trace& other);
};

enum class OutcomeStatus { Success, Refused, Inconclusive, InternalAssertion };
const char* to_string(OutcomeStatus s);

struct HypothesisReport {
  std::string reason;
  std::optional<ForbiddenWitness> witness;  // set when freeness failed
};

struct EmbedOutcome {
  OutcomeStatus status = OutcomeStatus::Inconclusive;
  std::optional<Embedding> embedding;       // present iff status == Success
  std::optional<HypothesisReport> failure;  // present iff status == Refused
  std::optional<CaseTag> tag;
  Trace trace;
  std::string message;                 // assertion text or inconclusive reason
  bool used_net = false;               // the bounded search finished the job
  std::optional<SearchStats> fallback; // exact search run after an assertion

  bool ok() const { return status == OutcomeStatus::Success; }
  // 0 success, 2 refusal, 3 inconclusive, 4 internal assertion.
  int exit_code() const;
};

struct EmbedOptions {
  // When false the hypotheses are not enforced. Runs that then stall are
  // reported as Inconclusive instead of InternalAssertion.
  bool check_hypotheses = true;
  // Run the exact search after an InternalAssertion to report ground truth.
  bool oracle_fallback = true;
  // Answer with the exact search instead of refusing when hypotheses fail.
  bool force_oracle = false;
  std::uint64_t net_budget = 200000;        // bounded search at the end of a lemma
  std::uint64_t fallback_budget = 2000000;  // exact search after an assertion
  int backtrack_depth = 3;                  // alternative anchors tried
};

// Whole pipeline: hypothesis checks, orientation normalisation and dispatch.
EmbedOutcome embed_antitree(const Digraph& d, const AntiTree& t, const EmbedOptions& opt = {});

// Max degree at most floor(k/4); d_core is the host restricted to a
// subdigraph of minimum pseudo-semidegree at least ceil(k/2).
EmbedOutcome embed_low_delta(const Digraph& d_core, const AntiTree& t, const EmbedOptions& opt = {});

// Max degree above floor(k/4) and second degree at most floor(k/4)+2.
EmbedOutcome embed_mid_delta(const Digraph& d, const AntiTree& t, const EmbedOptions& opt = {});

// The maximum-degree vertex u (an out-vertex) goes to anchor; non-leaves use
// only vertices of d_core, leaves of u may also use the rest of d.
EmbedOutcome embed_wide_star(const Digraph& d, const Digraph& d_core, const AntiTree& t, VertexId anchor,
                             const EmbedOptions& opt = {});
// Same contract for trees where every vertex is within distance two of u.
EmbedOutcome embed_radius_two(const Digraph& d, const Digraph& d_core, const AntiTree& t, VertexId anchor,
                              const EmbedOptions& opt = {});

// Second degree at least floor(k/4)+3.
EmbedOutcome embed_big_delta2(const Digraph& d, const AntiTree& t, const EmbedOptions& opt = {});

struct BroomPlan {
  CaseTag tag;
  SelectionResult selection;
  VertexId u = -1;
  VertexId v = -1;
  DoubleBroom broom;
  bool subcase_padded = false;  // case A via the padded broom
};

// Dispatch of the double-broom branch: case A / B-I / B-II and the selection.
BroomPlan plan_double_broom(const Digraph& d, const AntiTree& t);

struct BroomEmbedding {
  bool ok = false;
  Embedding partial;  // -1 outside the broom
  Trace trace;
  std::string message;
};

BroomEmbedding embed_double_broom(const Digraph& d, const BroomPlan& plan, const AntiTree& t,
                                  const EmbedOptions& opt = {});
EmbedOutcome extend_from_broom(const Digraph& d, const BroomPlan& plan, const AntiTree& t, const Embedding& partial,
                               const EmbedOptions& opt = {});

// Exact search, truncated at budget.
EmbedOutcome oracle_fallback(const Digraph& d, const AntiTree& t, std::uint64_t budget);

// Every non-leaf of t mapped into V(core) (vertices with an arc in core).
bool respects_mask(const AntiTree& t, const Embedding& e, const Digraph& core);

// JSON rendering of an outcome (trace, tag, status, embedding).
std::string outcome_to_json(const EmbedOutcome& o);

}  // namespace antiembed
