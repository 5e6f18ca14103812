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

#ifndef C2K_REPRESENTATIVENESS_HPP
#define C2K_REPRESENTATIVENESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2k/corpus.hpp"
#include "c2k/rational.hpp"

namespace c2k {

struct SampleRange {
  int first_sentence = 0;  // inclusive
  int last_sentence = 0;   // exclusive
  int word_count = 0;
};

// Contiguous, sentence-boundary-preserving division of a corpus into n
// samples balanced by word count.
struct SamplePartition {
  std::vector<SampleRange> samples;
  int target_sample_count = 0;
  Rational mean_sample_words;
};

// PreconditionError when n < 1, the corpus is empty, or n exceeds the
// sentence count.
SamplePartition segment(const Corpus& corpus, int n);

struct SaturationCurve {
  std::string item_class;
  std::vector<int> per_sample_new;
  std::vector<int> cumulative;
};

// What counts as a type for a saturation curve.
struct ItemSelector {
  enum class Kind { technical_term, pos_class, labels };
  Kind kind = Kind::pos_class;
  Pos pos = Pos::verb;  // pos_class
  std::string label_class;  // labels: curve name, e.g. "concept"
  // labels: per-sentence label sets keyed by sentence id
  const std::map<std::string, std::vector<std::string>>* labels_by_sentence = nullptr;

  static ItemSelector technical_terms();
  static ItemSelector pos_class(Pos pos);
  static ItemSelector labels(std::string label_class,
                             const std::map<std::string, std::vector<std::string>>& by_sentence);
};

// New-type and cumulative counts per sample. Type identity is the
// case-folded stem for POS classes and the exact case-folded phrase for
// technical terms (longest match against the corpus term list).
SaturationCurve saturation_curve(const Corpus& corpus, const SamplePartition& partition,
                                 const ItemSelector& selector);

struct ClosureVerdict {
  bool saturated = false;
  std::optional<int> saturation_index;
  Rational threshold;
  int window = 0;
};

// Earliest index i such that per_sample_new[j]/cumulative[j] <= threshold
// for all j in [i, i+window). PreconditionError on a bad window/threshold.
ClosureVerdict closure_test(const SaturationCurve& curve, const Rational& threshold, int window);

// Share of each classified structure over all sentences; exact fractions
// that display as percentages.
std::map<SentenceStructure, Rational> sentence_type_distribution(const Corpus& corpus);

// "sample,new,cumulative" rows for external plotting.
std::string curve_csv(const SaturationCurve& curve);

}  // namespace c2k

#endif  // C2K_REPRESENTATIVENESS_HPP
