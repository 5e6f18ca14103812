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

#ifndef C2K_DISCOURSE_HPP
#define C2K_DISCOURSE_HPP

#include <map>
#include <string>
#include <vector>

#include "c2k/annotations.hpp"
#include "c2k/corpus.hpp"
#include "c2k/rational.hpp"

namespace c2k {

// Closed set of twelve discourse-level concepts.
enum class HighLevelConcept {
  electrical_quantity,
  circuit_components,
  diagrammatic_notation,
  electrical_process,
  electrical_device,
  units,
  atomic_level,
  circuits,
  environmental_factors,
  measuring_instrument,
  rules,
  materials,
};

const std::string& high_level_concept_name(HighLevelConcept c);
std::optional<HighLevelConcept> high_level_concept_from_string(const std::string& name);
const std::vector<HighLevelConcept>& all_high_level_concepts();

// sentence id -> effective handled flag
using HandledSet = std::map<std::string, bool>;

// Explicit handled attributes, with a computed fallback for sentences that
// carry none.
HandledSet resolve_handled(const Corpus& corpus,
                           const std::map<std::string, bool>& computed = {});

struct RhetoricalCount {
  RhetoricalLabel label;
  int count = 0;
  Rational mean;  // count / total
};

struct RhetoricalDistribution {
  std::vector<RhetoricalCount> rows;  // vocabulary order
  int total = 0;
};

// PreconditionError when the corpus carries no rhetorical labels.
RhetoricalDistribution rhetorical_distribution(const Corpus& corpus);

// Fraction of Cause-effect sentences that are handled.
// PreconditionError when no sentence carries a Cause-effect label.
Rational causal_coverage(const Corpus& corpus, const HandledSet& handled);

struct TopicalRow {
  int indentation = 0;
  int sentences = 0;
  Rational corpus_coverage;   // sentences at this level / annotated total
  int handled = 0;
  Rational topical_coverage;  // handled / sentences at this level
};

// PreconditionError when no sentence carries an indentation annotation.
std::vector<TopicalRow> topical_table(const Corpus& corpus, const HandledSet& handled);

struct DiscourseRow {
  HighLevelConcept concept_id = HighLevelConcept::electrical_quantity;
  int covered = 0;
  int in_discourse = 0;
  int difference = 0;        // in_discourse - covered
  Rational coverage_pct;     // covered / in_discourse
  Rational deviation_pct;    // difference / in_discourse
};

struct DiscourseTable {
  std::vector<DiscourseRow> rows;  // descending by in_discourse
  DiscourseRow totals;
};

using DiscourseOccurrences = std::map<HighLevelConcept, std::pair<int, int>>;

// ValidationError naming the concept when covered > in_discourse.
DiscourseTable discourse_table(const DiscourseOccurrences& occurrences);

// Sidecar CSV loaders.
// rhetoric: sentence_id,structure,relation
void load_rhetoric_csv(Corpus& corpus, const std::string& content);
// topical: sentence_id,indentation,progression,handled
void load_topical_csv(Corpus& corpus, const std::string& content);
// discourse: concept,covered,in_discourse
DiscourseOccurrences load_discourse_csv(const std::string& content);

}  // namespace c2k

#endif  // C2K_DISCOURSE_HPP
