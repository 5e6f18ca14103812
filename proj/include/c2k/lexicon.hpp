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

#ifndef C2K_LEXICON_HPP
#define C2K_LEXICON_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "c2k/category.hpp"
#include "c2k/corpus.hpp"
#include "c2k/rational.hpp"

namespace c2k {

struct LexEntry {
  std::string lemma;  // case-folded
  Pos pos = Pos::noun;
  std::vector<Cat> categories;           // may be empty before grammar assignment
  std::vector<std::string> inflections;  // case-folded surface variants

  bool has_category(const Cat& cat) const;
  bool operator==(const LexEntry& o) const;
};

// Morphology + category store with unique (lemma, pos) keys.
class Lexicon {
 public:
  Lexicon() = default;

  // ValidationError on duplicate (lemma, pos).
  void add(LexEntry entry);

  const LexEntry* find(const std::string& lemma, Pos pos) const;

  // Appends an inflection to an existing entry, keeping the surface index
  // in step. No-op when the form is already listed.
  void add_inflection(const std::string& lemma, Pos pos, const std::string& form);

  // Entries whose lemma or inflections match the token's folded surface or
  // whose lemma matches the folded stem, restricted to the token's POS.
  std::vector<const LexEntry*> match(const Token& token) const;

  // POS-free membership test used by vocabulary coverage.
  bool covers_word(const std::string& surface, const std::string& word_stem) const;

  std::size_t size() const { return entries_.size(); }
  // Sorted by (lemma, pos); iteration order is deterministic.
  std::vector<const LexEntry*> entries() const;

  const std::string& version() const { return version_; }
  void set_version(std::string v) { version_ = std::move(v); }

  bool operator==(const Lexicon& o) const;

  static Lexicon load_tsv(const std::string& content);
  static Lexicon load_tsv_file(const std::string& path);
  std::string save_tsv() const;

 private:
  void index(const LexEntry& entry);

  std::map<std::pair<std::string, int>, LexEntry> entries_;
  // folded surface form -> entry keys claiming it (as lemma or inflection)
  std::unordered_multimap<std::string, std::pair<std::string, int>> surface_index_;
  std::string version_ = "1";
};

struct CoverageReport {
  int overlap_count = 0;
  int unique_word_count = 0;
  Rational ratio;  // overlap / unique
};

// ratio of unique corpus words covered by the lexicon (surface or stem
// matching a lemma or inflection). PreconditionError on an empty corpus.
CoverageReport vocabulary_coverage(const Lexicon& lexicon, const Corpus& corpus);

enum class AugmentKey { stem, surface };

// Adds an entry with empty categories for every distinct (key, pos) pair the
// lexicon does not cover; surfaces are recorded as inflections under the stem
// key. Returns added-entry counts per POS; a second run adds zero.
std::map<Pos, int> augment_from_corpus(Lexicon& lexicon, const Corpus& corpus,
                                       AugmentKey key = AugmentKey::stem);

// Bootstrap category table so augmented entries can participate in parsing.
const std::vector<Cat>& default_categories(Pos pos);

}  // namespace c2k

#endif  // C2K_LEXICON_HPP
