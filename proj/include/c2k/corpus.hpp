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

#ifndef C2K_CORPUS_HPP
#define C2K_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "c2k/annotations.hpp"
#include "c2k/pos.hpp"

namespace c2k {

struct Token {
  std::string surface;
  Pos pos = Pos::noun;
  std::string stem;  // equals surface when no suffix rule applies
  int index = 0;     // 0-based position in the sentence
  // Punctuation is not part of the nine-way tag set; a comma is recorded
  // on the token it follows.
  bool comma_after = false;

  bool operator==(const Token& o) const {
    return surface == o.surface && pos == o.pos && stem == o.stem && index == o.index &&
           comma_after == o.comma_after;
  }
};

enum class SentenceStructure { simple, compound, complex_, unknown };

const std::string& structure_name(SentenceStructure s);
std::optional<SentenceStructure> structure_from_string(const std::string& name);

struct Sentence {
  std::string id;
  std::vector<Token> tokens;
  // Structure annotation from the source document; `unknown` when absent.
  SentenceStructure structure = SentenceStructure::unknown;
  std::optional<int> indentation;  // topical level, >= 1
  std::optional<Progression> progression;
  std::vector<RhetoricalLabel> rhetorical_labels;
  // Explicit handled flag; absent means "derive from parsing + mapping".
  std::optional<bool> handled;

  bool operator==(const Sentence& o) const;
};

struct Corpus {
  std::vector<Sentence> sentences;
  int source_count = 0;
  std::vector<std::string> term_list;  // technical terms, multi-word allowed

  int word_count() const;
  bool operator==(const Corpus& o) const;
  // Enforces unique sentence ids, non-empty sentences/tokens, indentation >= 1.
  void validate() const;
};

struct CorpusStats {
  int sentence_count = 0;
  int word_count = 0;
  int unique_word_count = 0;  // case-folded distinct surfaces

  bool operator==(const CorpusStats& o) const {
    return sentence_count == o.sentence_count && word_count == o.word_count &&
           unique_word_count == o.unique_word_count;
  }
};

CorpusStats compute_stats(const Corpus& corpus);

// Fallback suffix stemmer used when the corpus carries no stem attribute.
// Single rule application; idempotent. Strips -ies, -es (after sibilants),
// -s, -ing, -ed, -er with doubled-consonant repair.
std::string stem(const std::string& word);

// ASCII lowercase fold used for all type identity in the toolkit.
std::string fold_case(const std::string& s);

// Clause-initial words treated as subordinating coordinators.
const std::vector<std::string>& subordinating_coordinators();

// POS-driven structure heuristic; an explicit annotation on the sentence
// takes precedence. Finite verbs are pos=verb tokens, with a modal + verb
// pair counting once.
SentenceStructure classify_sentence(
    const Sentence& sentence,
    const std::vector<std::string>& subordinators = subordinating_coordinators());

int count_finite_verbs(const Sentence& sentence);

}  // namespace c2k

#endif  // C2K_CORPUS_HPP
