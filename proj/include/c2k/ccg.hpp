// Copyright 2026 The corpus2know Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef C2K_CCG_HPP
#define C2K_CCG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c2k/category.hpp"
#include "c2k/corpus.hpp"
#include "c2k/lexicon.hpp"
#include "c2k/rational.hpp"

namespace c2k {

// One independent toggle per grammar extension; all default to on.
struct GrammarConfig {
  bool modals = true;
  bool adjective_stacking = true;
  bool fronted_pp = true;
  bool particles = true;
  bool complementizer = true;
  bool final_adverb = true;
  bool noun_coordination = true;
  bool gerund_as_noun = true;
  bool verbless_template = true;
  // Bounds both chart items and enumerated derivations per sentence.
  std::size_t max_chart_items = 100000;

  static GrammarConfig all_disabled();
  // Enables exactly one extension by its flag name ("fronted_pp", ...).
  static GrammarConfig only(const std::string& extension);
};

const std::vector<std::string>& extension_names();
bool* extension_flag(GrammarConfig& config, const std::string& name);

enum class Combinator { leaf, fwd_app, bwd_app, fwd_comp, bwd_comp, coord, unary_rule };

const std::string& combinator_name(Combinator c);

struct DerivationNode {
  Cat cat;
  Combinator rule = Combinator::leaf;
  int start = 0;
  int end = 0;           // token span [start, end)
  int token_index = -1;  // leaves only
  std::unique_ptr<DerivationNode> left;   // unary rules use left only
  std::unique_ptr<DerivationNode> right;
};

struct Derivation {
  std::unique_ptr<DerivationNode> root;
  int node_count = 0;

  // Total-order key: node count, then a canonical serialization that sorts
  // lower attachment and lower-numbered combinators first.
  std::string order_key() const;
  std::string bracketed(const Sentence& sentence) const;
  std::string to_json(const Sentence& sentence) const;
};

struct SpanInfo {
  int start = 0;
  int end = 0;
  std::vector<Cat> categories;
};

struct FailureDiagnosis {
  std::vector<int> uncovered_tokens;  // indices of tokens with no category
  std::vector<std::pair<int, Cat>> missing_category_hypotheses;
  std::vector<SpanInfo> maximal_spans;  // longest spans with a derivable category
};

struct ParseResult {
  std::vector<Derivation> derivations;            // root-s only, deterministic order
  std::optional<FailureDiagnosis> diagnosis;      // present iff derivations is empty
  bool success() const { return !derivations.empty(); }
};

// Category set for one token: lexicon categories, bootstrap defaults for
// lexicon-covered tokens, and extension grants for enabled toggles. The
// sentence provides the context (position, commas, neighbours).
std::vector<Cat> assign_categories(const Token& token, const Sentence& sentence,
                                   const Lexicon& lexicon, const GrammarConfig& config);

// CKY chart closed under application, composition, coordination and the
// template rules. ResourceError when the chart bound is exceeded.
ParseResult parse(const Sentence& sentence, const Lexicon& lexicon, const GrammarConfig& config);

FailureDiagnosis diagnose_failure(const Sentence& sentence, const Lexicon& lexicon,
                                  const GrammarConfig& config);

struct ParseRate {
  int total = 0;
  int parsed = 0;
  Rational rate;
};

// PreconditionError on an empty corpus.
ParseRate parse_rate(const Corpus& corpus, const Lexicon& lexicon, const GrammarConfig& config);

struct SvoProfile {
  int subjects = 0;
  int objects = 0;
  int verbs = 0;
  bool operator==(const SvoProfile& o) const {
    return subjects == o.subjects && objects == o.objects && verbs == o.verbs;
  }
};

SvoProfile svo_profile(const Derivation& derivation, const Sentence& sentence);

// Re-validates every node against its combinator definition and every leaf
// against the assignable category set.
bool validate_derivation(const Derivation& derivation, const Sentence& sentence,
                         const Lexicon& lexicon, const GrammarConfig& config);

// Category targets X licensed for "conj X -> X\X".
std::vector<Cat> coordination_targets(const GrammarConfig& config);

}  // namespace c2k

#endif  // C2K_CCG_HPP
