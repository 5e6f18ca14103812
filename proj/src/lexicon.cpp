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

#include "c2k/lexicon.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "c2k/corpus_io.hpp"
#include "c2k/errors.hpp"

namespace c2k {

bool LexEntry::has_category(const Cat& cat) const {
  for (const auto& c : categories) {
    if (cat_equal(c, cat)) return true;
  }
  return false;
}

bool LexEntry::operator==(const LexEntry& o) const {
  if (lemma != o.lemma || pos != o.pos || inflections != o.inflections) return false;
  if (categories.size() != o.categories.size()) return false;
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (!cat_equal(categories[i], o.categories[i])) return false;
  }
  return true;
}

void Lexicon::add(LexEntry entry) {
  entry.lemma = fold_case(entry.lemma);
  for (auto& inf : entry.inflections) inf = fold_case(inf);
  if (entry.lemma.empty()) throw ValidationError("lexicon entry with empty lemma");
  auto key = std::make_pair(entry.lemma, static_cast<int>(entry.pos));
  if (entries_.count(key)) {
    throw ValidationError("duplicate lexicon entry: " + entry.lemma + "/" + pos_name(entry.pos));
  }
  index(entry);
  entries_.emplace(std::move(key), std::move(entry));
}

void Lexicon::index(const LexEntry& entry) {
  auto key = std::make_pair(entry.lemma, static_cast<int>(entry.pos));
  surface_index_.emplace(entry.lemma, key);
  for (const auto& inf : entry.inflections) surface_index_.emplace(inf, key);
}

const LexEntry* Lexicon::find(const std::string& lemma, Pos pos) const {
  auto it = entries_.find(std::make_pair(fold_case(lemma), static_cast<int>(pos)));
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::add_inflection(const std::string& lemma, Pos pos, const std::string& form) {
  auto it = entries_.find(std::make_pair(fold_case(lemma), static_cast<int>(pos)));
  if (it == entries_.end()) return;
  LexEntry& entry = it->second;
  std::string folded = fold_case(form);
  if (folded == entry.lemma) return;
  if (std::find(entry.inflections.begin(), entry.inflections.end(), folded) !=
      entry.inflections.end()) {
    return;
  }
  entry.inflections.push_back(folded);
  surface_index_.emplace(folded, it->first);
}

std::vector<const LexEntry*> Lexicon::match(const Token& token) const {
  std::vector<const LexEntry*> out;
  std::unordered_set<const LexEntry*> seen;
  auto consider = [&](const std::string& form) {
    auto [lo, hi] = surface_index_.equal_range(form);
    for (auto it = lo; it != hi; ++it) {
      if (it->second.second != static_cast<int>(token.pos)) continue;
      auto found = entries_.find(it->second);
      if (found != entries_.end() && seen.insert(&found->second).second) {
        out.push_back(&found->second);
      }
    }
  };
  consider(fold_case(token.surface));
  // the stem only matches lemmas, not other inflections
  std::string folded_stem = fold_case(token.stem);
  auto it = entries_.find(std::make_pair(folded_stem, static_cast<int>(token.pos)));
  if (it != entries_.end() && seen.insert(&it->second).second) out.push_back(&it->second);
  return out;
}

bool Lexicon::covers_word(const std::string& surface, const std::string& word_stem) const {
  if (surface_index_.count(fold_case(surface))) return true;
  std::string folded_stem = fold_case(word_stem);
  for (Pos pos : kAllPos) {
    if (entries_.count(std::make_pair(folded_stem, static_cast<int>(pos)))) return true;
  }
  return false;
}

std::vector<const LexEntry*> Lexicon::entries() const {
  std::vector<const LexEntry*> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(&entry);
  return out;
}

bool Lexicon::operator==(const Lexicon& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end(); ++a, ++b) {
    if (a->first != b->first || !(a->second == b->second)) return false;
  }
  return true;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == sep) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Lexicon Lexicon::load_tsv(const std::string& content) {
  Lexicon lexicon;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find("version=");
      if (eq != std::string::npos) lexicon.set_version(strip(line.substr(eq + 8)));
      continue;
    }
    auto fields = split(line, '\t');
    if (!header_seen) {
      if (fields.size() < 2 || strip(fields[0]) != "lemma" || strip(fields[1]) != "pos") {
        throw ParseError("lexicon TSV must start with a 'lemma<TAB>pos...' header row", line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 2 || fields.size() > 4) {
      throw ParseError("lexicon row needs 2-4 tab-separated fields", line_no);
    }
    LexEntry entry;
    entry.lemma = strip(fields[0]);
    auto pos = pos_from_string(strip(fields[1]));
    if (!pos) throw ParseError("unknown pos '" + strip(fields[1]) + "'", line_no);
    entry.pos = *pos;
    if (fields.size() >= 3) {
      for (const auto& piece : split(fields[2], ';')) {
        std::string text = strip(piece);
        if (text.empty()) continue;
        try {
          entry.categories.push_back(Category::parse(text));
        } catch (const ValidationError& e) {
          throw ParseError(std::string(e.what()), line_no);
        }
      }
    }
    if (fields.size() >= 4) {
      for (const auto& piece : split(fields[3], ',')) {
        std::string text = strip(piece);
        if (!text.empty()) entry.inflections.push_back(text);
      }
    }
    try {
      lexicon.add(std::move(entry));
    } catch (const ValidationError& e) {
      throw ParseError(std::string(e.what()), line_no);
    }
  }
  if (!header_seen) throw ParseError("empty lexicon file (missing header row)", line_no);
  return lexicon;
}

Lexicon Lexicon::load_tsv_file(const std::string& path) { return load_tsv(read_file(path)); }

std::string Lexicon::save_tsv() const {
  std::ostringstream out;
  out << "lemma\tpos\tcategories\tinflections\n";
  out << "# version=" << version_ << "\n";
  for (const auto& [key, entry] : entries_) {
    out << entry.lemma << "\t" << pos_name(entry.pos) << "\t";
    for (std::size_t i = 0; i < entry.categories.size(); ++i) {
      if (i) out << ";";
      out << entry.categories[i]->to_string();
    }
    out << "\t";
    for (std::size_t i = 0; i < entry.inflections.size(); ++i) {
      if (i) out << ",";
      out << entry.inflections[i];
    }
    out << "\n";
  }
  return out.str();
}

CoverageReport vocabulary_coverage(const Lexicon& lexicon, const Corpus& corpus) {
  if (corpus.sentences.empty()) {
    throw PreconditionError("vocabulary coverage of an empty corpus is undefined");
  }
  // first stem seen per folded surface decides the stem-side match
  std::map<std::string, std::string> words;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) {
      words.emplace(fold_case(t.surface), fold_case(t.stem));
    }
  }
  CoverageReport report;
  report.unique_word_count = static_cast<int>(words.size());
  for (const auto& [surface, word_stem] : words) {
    if (lexicon.covers_word(surface, word_stem)) ++report.overlap_count;
  }
  report.ratio = Rational(report.overlap_count, report.unique_word_count);
  return report;
}

std::map<Pos, int> augment_from_corpus(Lexicon& lexicon, const Corpus& corpus, AugmentKey key) {
  std::map<Pos, int> added;
  for (Pos pos : kAllPos) added[pos] = 0;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& token : sentence.tokens) {
      std::string folded_surface = fold_case(token.surface);
      if (lexicon.match(token).empty()) {
        LexEntry entry;
        entry.lemma = key == AugmentKey::stem ? fold_case(token.stem) : folded_surface;
        entry.pos = token.pos;
        if (key == AugmentKey::stem && folded_surface != entry.lemma) {
          entry.inflections.push_back(folded_surface);
        }
        lexicon.add(std::move(entry));
        ++added[token.pos];
      } else if (key == AugmentKey::stem) {
        // record the surface variant on its stem entry when absent
        lexicon.add_inflection(token.stem, token.pos, folded_surface);
      }
    }
  }
  return added;
}

const std::vector<Cat>& default_categories(Pos pos) {
  auto parse_all = [](std::initializer_list<const char*> texts) {
    std::vector<Cat> out;
    for (const char* t : texts) out.push_back(Category::parse(t));
    return out;
  };
  static const std::vector<Cat> kDeterminer = parse_all({"np/n"});
  static const std::vector<Cat> kNoun = parse_all({"n"});
  static const std::vector<Cat> kPronoun = parse_all({"n", "np"});
  static const std::vector<Cat> kAdjective = parse_all({"n/n"});
  static const std::vector<Cat> kPreposition = parse_all({"pp/np", "(np\\np)/np"});
  static const std::vector<Cat> kAdverb = parse_all({"s/s", "(s\\np)\\(s\\np)"});
  static const std::vector<Cat> kVerb = parse_all({"s\\np", "(s\\np)/np"});
  static const std::vector<Cat> kModal = parse_all({"(s\\np)/(s\\np)"});
  static const std::vector<Cat> kCoordinator = parse_all({"conj"});
  switch (pos) {
    case Pos::determiner: return kDeterminer;
    case Pos::noun: return kNoun;
    case Pos::pronoun: return kPronoun;
    case Pos::adjective: return kAdjective;
    case Pos::preposition: return kPreposition;
    case Pos::adverb: return kAdverb;
    case Pos::verb: return kVerb;
    case Pos::modal: return kModal;
    case Pos::coordinator: return kCoordinator;
  }
  return kNoun;
}

}  // namespace c2k
