// Copyright 2026 The gaclab Authors
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

#ifndef GACLAB_GADGETS_HPP
#define GACLAB_GADGETS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaclab/core.hpp"
#include "gaclab/engine.hpp"
#include "gaclab/sources.hpp"
#include "json.hpp"

namespace gaclab {

// ---------------------------------------------------------------------------
// Questions as data
// ---------------------------------------------------------------------------

enum class QuestionKind {
  GacSupport,
  IsItGac,
  NoGacWipeOut,
  GacDomain,
  MaxGac,
};

const char* question_kind_name(QuestionKind k);
std::optional<QuestionKind> question_kind_from_name(const std::string& name);

/// A question bound to one instance. `var` and `value` matter only for
/// GacSupport, `candidate` only for MaxGac.
struct Question {
  QuestionKind kind = QuestionKind::NoGacWipeOut;
  VarId var;
  Value value = 0;
  DomainMap candidate;
};

/// Dispatches to the direct engine routine for the question kind.
QuestionResult answer_question(const Instance& inst, const Question& q,
                               const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Source problems
// ---------------------------------------------------------------------------

/// A decision problem a gadget reduces from, tagged by flavour. Only the
/// fields of the active tag are meaningful.
struct SourceProblem {
  enum class Tag { Sat3, OneInThree, ThreeCol, ThreeColPair, Max2Sat };
  Tag tag = Tag::Sat3;
  Cnf3 cnf;
  Graph graph;
  Graph graph2;  // ThreeColPair only
  Max2SatInput max2sat;
};

SourceProblem source_sat3(Cnf3 f);
SourceProblem source_one_in_three(Cnf3 f);
SourceProblem source_three_col(Graph g);
SourceProblem source_three_col_pair(Graph yes_graph, Graph no_graph);
SourceProblem source_max2sat(Max2SatInput w);

/// A decoded witness for a source problem: `model` for the formula
/// flavours, `coloring` for the graph ones (the first graph of a pair).
struct SourceCertificate {
  std::vector<bool> model;
  std::vector<int> coloring;
};

/// Exhaustive answer to the source problem itself. Desk scale only; throws
/// ScaleLimitError past the solver limits.
bool source_oracle_answer(const SourceProblem& src);

/// Validates a decoded certificate directly against the source problem.
bool source_certificate_ok(const SourceProblem& src,
                           const SourceCertificate& cert);

// ---------------------------------------------------------------------------
// Gadgets
// ---------------------------------------------------------------------------

/// A built reduction: the instance, the question whose answer mirrors the
/// source answer, and a decoder from a witness tuple back to a source
/// certificate. `decode` reads witness entries by variable id and treats
/// missing ids as unassigned.
struct GadgetOutput {
  std::string family;
  Instance instance;
  Question question;
  std::string source_answer_meaning;
  std::function<SourceCertificate(const Tuple&)> decode;
};

GadgetOutput build_support_gadget(const Cnf3& f);
GadgetOutput build_isitgac_gadget(const Graph& g);
GadgetOutput build_maxgac_gadget(const Graph& yes_graph, const Graph& no_graph);
GadgetOutput build_nvalue_gadget(const Cnf3& f);
GadgetOutput build_among_var_gadget(const Cnf3& f);
GadgetOutput build_common_gadget(const Cnf3& f);
GadgetOutput build_disjoint_gadget(const Cnf3& f);
GadgetOutput build_atmost1_gadget(const Cnf3& f, int cardinality = 2);
GadgetOutput build_scalarproduct_gadget(const Cnf3& f, long long target = 1);
GadgetOutput build_gcc_repeat_gadget(const Cnf3& f);
GadgetOutput build_card_gadget(const Cnf3& f);
GadgetOutput build_cardpath_3col_gadget(const Graph& g);
GadgetOutput build_cardpath_max2sat_gadget(const Max2SatInput& w);

struct GadgetParams {
  int cardinality = 2;   // atmost1
  long long target = 1;  // scalarproduct
};

/// Builder family names in catalogue order.
std::vector<std::string> gadget_family_names();

/// Dispatch by family name. Throws InvariantError on an unknown family or
/// a source of the wrong flavour.
GadgetOutput build_gadget(const std::string& family, const SourceProblem& src,
                          const GadgetParams& params = {});

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Outcome of running one gadget against its source oracle.
struct VerificationReport {
  std::optional<bool> engine_answer;  // empty when the budget ran out
  bool oracle_answer = false;
  std::optional<bool> agree;
  std::optional<bool> certificate_ok;  // set when a yes-witness was decoded
  long long tuples_explored = 0;
  bool oversized = false;  // budget exhausted before an answer
};

/// Answers the gadget question, compares against the exhaustive source
/// oracle, and when both sides say yes decodes a witness tuple and
/// revalidates it on the source. Budget exhaustion is reported in the
/// `oversized` flag, never rethrown.
VerificationReport verify_gadget(const GadgetOutput& g,
                                 const SourceProblem& src,
                                 const SearchBudget& budget = {});

/// Sidecar metadata for a written gadget file: the question name, its
/// arguments, and what a yes answer means for the source.
nlohmann::json gadget_meta_json(const GadgetOutput& g);

}  // namespace gaclab

#endif  // GACLAB_GADGETS_HPP
