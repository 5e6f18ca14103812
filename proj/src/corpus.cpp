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

#include "c2k/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

const std::array<std::string, 9> kPosNames = {
    "noun",       "pronoun",     "verb",       "adverb", "adjective",
    "preposition", "coordinator", "determiner", "modal",
};

const std::array<std::string, 4> kStructureNames = {"simple", "compound", "complex", "unknown"};

const std::array<std::string, 3> kProgressionNames = {"parallel", "sequential",
                                                      "extended_parallel"};

const std::array<std::string, 3> kRhetStructureNames = {"text_structure", "textual_expression",
                                                        "information_structure"};

}  // namespace

const std::string& pos_name(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<Pos> pos_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

const std::string& structure_name(SentenceStructure s) {
  return kStructureNames[static_cast<std::size_t>(s)];
}

std::optional<SentenceStructure> structure_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kStructureNames.size(); ++i) {
    if (kStructureNames[i] == name) return static_cast<SentenceStructure>(i);
  }
  return std::nullopt;
}

const std::string& progression_name(Progression p) {
  return kProgressionNames[static_cast<std::size_t>(p)];
}

std::optional<Progression> progression_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kProgressionNames.size(); ++i) {
    if (kProgressionNames[i] == name) return static_cast<Progression>(i);
  }
  return std::nullopt;
}

const std::string& rhetorical_structure_name(RhetoricalStructure s) {
  return kRhetStructureNames[static_cast<std::size_t>(s)];
}

std::optional<RhetoricalStructure> rhetorical_structure_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kRhetStructureNames.size(); ++i) {
    if (kRhetStructureNames[i] == name) return static_cast<RhetoricalStructure>(i);
  }
  return std::nullopt;
}

const std::vector<RhetoricalLabel>& rhetorical_vocabulary() {
  static const std::vector<RhetoricalLabel> kVocab = {
      {RhetoricalStructure::text_structure, "Introduction"},
      {RhetoricalStructure::text_structure, "Background"},
      {RhetoricalStructure::text_structure, "Methodologies"},
      {RhetoricalStructure::text_structure, "Results"},
      {RhetoricalStructure::text_structure, "Observations"},
      {RhetoricalStructure::text_structure, "Conclusions"},
      {RhetoricalStructure::textual_expression, "Common Knowledge"},
      {RhetoricalStructure::textual_expression, "Report"},
      {RhetoricalStructure::textual_expression, "Explanation"},
      {RhetoricalStructure::textual_expression, "Claim"},
      {RhetoricalStructure::textual_expression, "Evaluation"},
      {RhetoricalStructure::textual_expression, "Inference"},
      {RhetoricalStructure::textual_expression, "Decision"},
      {RhetoricalStructure::information_structure, "Description"},
      {RhetoricalStructure::information_structure, "Classification"},
      {RhetoricalStructure::information_structure, "Comparison"},
      {RhetoricalStructure::information_structure, "Sequence"},
      {RhetoricalStructure::information_structure, "Cause-effect"},
      {RhetoricalStructure::information_structure, "Contrast"},
  };
  return kVocab;
}

RhetoricalLabel make_rhetorical_label(const std::string& structure, const std::string& relation) {
  auto s = rhetorical_structure_from_string(structure);
  if (!s) throw ValidationError("unknown rhetorical structure: " + structure);
  std::string folded = fold_case(relation);
  for (const auto& label : rhetorical_vocabulary()) {
    if (fold_case(label.relation) == folded) {
      if (label.structure != *s) {
        throw ValidationError("rhetorical relation '" + label.relation + "' belongs to " +
                              rhetorical_structure_name(label.structure) + ", not " + structure);
      }
      return label;
    }
  }
  throw ValidationError("unknown rhetorical relation: " + relation);
}

bool Sentence::operator==(const Sentence& o) const {
  return id == o.id && tokens == o.tokens && structure == o.structure &&
         indentation == o.indentation && progression == o.progression &&
         rhetorical_labels == o.rhetorical_labels && handled == o.handled;
}

int Corpus::word_count() const {
  int count = 0;
  for (const auto& s : sentences) count += static_cast<int>(s.tokens.size());
  return count;
}

bool Corpus::operator==(const Corpus& o) const {
  return sentences == o.sentences && source_count == o.source_count && term_list == o.term_list;
}

void Corpus::validate() const {
  std::unordered_set<std::string> ids;
  for (const auto& s : sentences) {
    if (s.id.empty()) throw ValidationError("sentence with empty id");
    if (!ids.insert(s.id).second) throw ValidationError("duplicate sentence id: " + s.id);
    if (s.tokens.empty()) throw ValidationError("sentence " + s.id + " has no tokens");
    if (s.indentation && *s.indentation < 1) {
      throw ValidationError("sentence " + s.id + " has indentation < 1");
    }
    for (const auto& t : s.tokens) {
      if (t.surface.empty()) throw ValidationError("empty token surface in sentence " + s.id);
      if (t.stem.empty()) throw ValidationError("empty token stem in sentence " + s.id);
    }
  }
  if (source_count < 0) throw ValidationError("negative source count");
}

std::string fold_case(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

CorpusStats compute_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.sentence_count = static_cast<int>(corpus.sentences.size());
  std::unordered_set<std::string> unique;
  for (const auto& s : corpus.sentences) {
    stats.word_count += static_cast<int>(s.tokens.size());
    for (const auto& t : s.tokens) unique.insert(fold_case(t.surface));
  }
  stats.unique_word_count = static_cast<int>(unique.size());
  return stats;
}

namespace {

bool ends_with(const std::string& s, const char* suffix) {
  std::size_t n = std::char_traits<char>::length(suffix);
  return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// bigger -> bigg -> big; the repair skips letters that double legitimately
// at word end (ll, ss, ff, zz, ee, oo).
std::string repair_doubling(std::string s) {
  if (s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] && !is_vowel(s.back()) &&
      s.back() != 'l' && s.back() != 's' && s.back() != 'f' && s.back() != 'z') {
    s.pop_back();
  }
  return s;
}

bool sibilant_before_es(const std::string& word) {
  // word ends in "es"; check the letters before the suffix
  std::string head = word.substr(0, word.size() - 2);
  return ends_with(head, "ss") || ends_with(head, "x") || ends_with(head, "z") ||
         ends_with(head, "ch") || ends_with(head, "sh");
}

}  // namespace

std::string stem(const std::string& word) {
  if (word.empty()) throw PreconditionError("stem of empty word");
  const std::string folded = fold_case(word);
  const std::size_t n = word.size();

  if (ends_with(folded, "ies") && n >= 6) return word.substr(0, n - 3) + "y";
  if (ends_with(folded, "ing") && n >= 6) return repair_doubling(word.substr(0, n - 3));
  if (ends_with(folded, "ed") && n >= 5) return repair_doubling(word.substr(0, n - 2));
  if (ends_with(folded, "es") && n >= 5 && sibilant_before_es(folded)) return word.substr(0, n - 2);
  if (ends_with(folded, "s") && n >= 4 && !ends_with(folded, "ss") && !ends_with(folded, "us") &&
      !ends_with(folded, "is")) {
    return word.substr(0, n - 1);
  }
  if (ends_with(folded, "er") && n >= 6) return repair_doubling(word.substr(0, n - 2));
  return word;
}

const std::vector<std::string>& subordinating_coordinators() {
  static const std::vector<std::string> kList = {"since", "as",       "because",
                                                 "when",  "if",       "although"};
  return kList;
}

int count_finite_verbs(const Sentence& sentence) {
  int count = 0;
  const auto& tokens = sentence.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].pos == Pos::modal && i + 1 < tokens.size() && tokens[i + 1].pos == Pos::verb) {
      ++count;
      ++i;  // the modal + verb pair counts once
    } else if (tokens[i].pos == Pos::verb) {
      ++count;
    }
  }
  return count;
}

SentenceStructure classify_sentence(const Sentence& sentence,
                                    const std::vector<std::string>& subordinators) {
  if (sentence.structure != SentenceStructure::unknown) return sentence.structure;

  int finite = count_finite_verbs(sentence);
  if (finite == 0) return SentenceStructure::unknown;
  if (finite == 1) return SentenceStructure::simple;

  const auto& tokens = sentence.tokens;
  if (tokens.front().pos == Pos::coordinator) {
    std::string first = fold_case(tokens.front().surface);
    if (std::find(subordinators.begin(), subordinators.end(), first) != subordinators.end()) {
      return SentenceStructure::complex_;
    }
  }

  // compound requires a coordinator strictly between two finite verbs
  int first_verb = -1, last_verb = -1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].pos == Pos::verb) {
      if (first_verb < 0) first_verb = static_cast<int>(i);
      last_verb = static_cast<int>(i);
    }
  }
  for (int i = first_verb + 1; i < last_verb; ++i) {
    if (tokens[static_cast<std::size_t>(i)].pos == Pos::coordinator) {
      return SentenceStructure::compound;
    }
  }
  return SentenceStructure::unknown;
}

}  // namespace c2k
