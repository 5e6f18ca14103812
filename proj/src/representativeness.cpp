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

#include "c2k/representativeness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

int max_sentence_words(const Corpus& corpus) {
  int best = 0;
  for (const auto& s : corpus.sentences) {
    best = std::max(best, static_cast<int>(s.tokens.size()));
  }
  return best;
}

std::vector<int> sample_sizes(const std::vector<int>& boundaries, const std::vector<int>& prefix) {
  std::vector<int> sizes;
  int prev = 0;
  for (int b : boundaries) {
    sizes.push_back(prefix[static_cast<std::size_t>(b)] - prefix[static_cast<std::size_t>(prev)]);
    prev = b;
  }
  return sizes;
}

int spread(const std::vector<int>& sizes) {
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo;
}

}  // namespace

SamplePartition segment(const Corpus& corpus, int n) {
  const int sentence_count = static_cast<int>(corpus.sentences.size());
  if (n < 1) throw PreconditionError("sample count must be >= 1");
  if (sentence_count == 0) throw PreconditionError("cannot segment an empty corpus");
  if (n > sentence_count) {
    throw PreconditionError("cannot form " + std::to_string(n) + " non-empty samples from " +
                            std::to_string(sentence_count) + " sentences");
  }

  std::vector<int> prefix(static_cast<std::size_t>(sentence_count) + 1, 0);
  for (int i = 0; i < sentence_count; ++i) {
    prefix[static_cast<std::size_t>(i) + 1] =
        prefix[static_cast<std::size_t>(i)] +
        static_cast<int>(corpus.sentences[static_cast<std::size_t>(i)].tokens.size());
  }
  const int total = prefix.back();

  // nearest sentence boundary to each ideal cut, keeping samples non-empty
  std::vector<int> boundaries;  // sentence indices, last is sentence_count
  int prev = 0;
  for (int k = 1; k < n; ++k) {
    double ideal = static_cast<double>(total) * k / n;
    int lo = prev + 1;
    int hi = sentence_count - (n - k);
    int best = lo;
    double best_dist = -1;
    for (int b = lo; b <= hi; ++b) {
      double dist = std::abs(prefix[static_cast<std::size_t>(b)] - ideal);
      if (best_dist < 0 || dist < best_dist) {
        best_dist = dist;
        best = b;
      }
    }
    boundaries.push_back(best);
    prev = best;
  }
  boundaries.push_back(sentence_count);

  // local repair: nudge one boundary while it tightens the word spread
  const int limit = max_sentence_words(corpus);
  for (int pass = 0; pass < 4 * n; ++pass) {
    auto sizes = sample_sizes(boundaries, prefix);
    int current = spread(sizes);
    if (current <= limit) break;
    bool improved = false;
    for (std::size_t k = 0; k + 1 < boundaries.size() && !improved; ++k) {
      int lo_bound = (k == 0 ? 0 : boundaries[k - 1]) + 1;
      int hi_bound = boundaries[k + 1] - 1;
      for (int candidate : {boundaries[k] - 1, boundaries[k] + 1}) {
        if (candidate < lo_bound || candidate > hi_bound) continue;
        auto trial = boundaries;
        trial[k] = candidate;
        if (spread(sample_sizes(trial, prefix)) < current) {
          boundaries = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }

  SamplePartition partition;
  partition.target_sample_count = n;
  partition.mean_sample_words = Rational(total, n);
  prev = 0;
  for (int b : boundaries) {
    SampleRange range;
    range.first_sentence = prev;
    range.last_sentence = b;
    range.word_count =
        prefix[static_cast<std::size_t>(b)] - prefix[static_cast<std::size_t>(prev)];
    partition.samples.push_back(range);
    prev = b;
  }
  return partition;
}

ItemSelector ItemSelector::technical_terms() {
  ItemSelector s;
  s.kind = Kind::technical_term;
  return s;
}

ItemSelector ItemSelector::pos_class(Pos pos) {
  ItemSelector s;
  s.kind = Kind::pos_class;
  s.pos = pos;
  return s;
}

ItemSelector ItemSelector::labels(
    std::string label_class, const std::map<std::string, std::vector<std::string>>& by_sentence) {
  ItemSelector s;
  s.kind = Kind::labels;
  s.label_class = std::move(label_class);
  s.labels_by_sentence = &by_sentence;
  return s;
}

namespace {

// longest-match pass over one sentence's surfaces
std::vector<std::string> matched_terms(const Sentence& sentence,
                                       const std::vector<std::vector<std::string>>& terms) {
  std::vector<std::string> folded;
  folded.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) folded.push_back(fold_case(t.surface));

  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < folded.size()) {
    const std::vector<std::string>* best = nullptr;
    for (const auto& term : terms) {
      if (term.size() > folded.size() - i) continue;
      if (best && term.size() <= best->size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < term.size(); ++k) {
        if (term[k] != folded[i + k]) {
          match = false;
          break;
        }
      }
      if (match) best = &term;
    }
    if (best) {
      std::string joined;
      for (std::size_t k = 0; k < best->size(); ++k) {
        if (k) joined += " ";
        joined += (*best)[k];
      }
      out.push_back(joined);
      i += best->size();
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<std::string> sentence_items(const Sentence& sentence, const ItemSelector& selector,
                                        const std::vector<std::vector<std::string>>& terms) {
  switch (selector.kind) {
    case ItemSelector::Kind::technical_term:
      return matched_terms(sentence, terms);
    case ItemSelector::Kind::pos_class: {
      std::vector<std::string> out;
      for (const auto& t : sentence.tokens) {
        if (t.pos == selector.pos) out.push_back(fold_case(t.stem));
      }
      return out;
    }
    case ItemSelector::Kind::labels: {
      auto it = selector.labels_by_sentence->find(sentence.id);
      if (it == selector.labels_by_sentence->end()) return {};
      return it->second;
    }
  }
  return {};
}

}  // namespace

SaturationCurve saturation_curve(const Corpus& corpus, const SamplePartition& partition,
                                 const ItemSelector& selector) {
  std::vector<std::vector<std::string>> terms;
  if (selector.kind == ItemSelector::Kind::technical_term) {
    if (corpus.term_list.empty()) {
      throw PreconditionError("technical-term curve needs a non-empty term list");
    }
    for (const auto& term : corpus.term_list) {
      std::istringstream words(fold_case(term));
      std::vector<std::string> parts;
      std::string w;
      while (words >> w) parts.push_back(w);
      if (!parts.empty()) terms.push_back(std::move(parts));
    }
  }
  if (selector.kind == ItemSelector::Kind::labels && !selector.labels_by_sentence) {
    throw PreconditionError("label curve needs per-sentence labels");
  }

  SaturationCurve curve;
  switch (selector.kind) {
    case ItemSelector::Kind::technical_term: curve.item_class = "technical_term"; break;
    case ItemSelector::Kind::pos_class: curve.item_class = pos_name(selector.pos); break;
    case ItemSelector::Kind::labels: curve.item_class = selector.label_class; break;
  }

  std::set<std::string> seen;
  for (const auto& range : partition.samples) {
    int fresh = 0;
    for (int i = range.first_sentence; i < range.last_sentence; ++i) {
      const Sentence& sentence = corpus.sentences[static_cast<std::size_t>(i)];
      for (const auto& item : sentence_items(sentence, selector, terms)) {
        if (seen.insert(item).second) ++fresh;
      }
    }
    curve.per_sample_new.push_back(fresh);
    curve.cumulative.push_back(static_cast<int>(seen.size()));
  }
  return curve;
}

ClosureVerdict closure_test(const SaturationCurve& curve, const Rational& threshold, int window) {
  const int samples = static_cast<int>(curve.per_sample_new.size());
  if (window < 1) throw PreconditionError("closure window must be >= 1");
  if (window > samples) throw PreconditionError("closure window exceeds the sample count");
  if (!(Rational(0, 1) < threshold) || !(threshold < Rational(1, 1))) {
    throw PreconditionError("closure threshold must be in (0, 1)");
  }

  ClosureVerdict verdict;
  verdict.threshold = threshold;
  verdict.window = window;
  for (int i = 0; i + window <= samples; ++i) {
    bool ok = true;
    for (int j = i; j < i + window; ++j) {
      int fresh = curve.per_sample_new[static_cast<std::size_t>(j)];
      int total = curve.cumulative[static_cast<std::size_t>(j)];
      // an empty class is trivially stable
      bool stable = total == 0 ? fresh == 0 : Rational(fresh, total) <= threshold;
      if (!stable) {
        ok = false;
        break;
      }
    }
    if (ok) {
      verdict.saturated = true;
      verdict.saturation_index = i;
      break;
    }
  }
  return verdict;
}

std::map<SentenceStructure, Rational> sentence_type_distribution(const Corpus& corpus) {
  std::map<SentenceStructure, int> counts;
  int total = 0;
  for (const auto& sentence : corpus.sentences) {
    ++counts[classify_sentence(sentence)];
    ++total;
  }
  std::map<SentenceStructure, Rational> out;
  for (const auto& [structure, count] : counts) {
    out[structure] = Rational(count, total);
  }
  return out;
}

std::string curve_csv(const SaturationCurve& curve) {
  std::ostringstream out;
  out << "sample,new,cumulative\n";
  for (std::size_t i = 0; i < curve.per_sample_new.size(); ++i) {
    out << (i + 1) << "," << curve.per_sample_new[i] << "," << curve.cumulative[i] << "\n";
  }
  return out.str();
}

}  // namespace c2k
