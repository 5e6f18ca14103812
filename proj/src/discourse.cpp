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

#include "c2k/discourse.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

const std::array<std::string, 12> kConceptNames = {
    "Electrical Quantity",  "Circuit Components", "Diagrammatic Notation", "Electrical Process",
    "Electrical Device",    "Units",              "Atomic Level",          "Circuits",
    "Environmental Factors", "Measuring Instrument", "Rules",              "Materials",
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
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

Sentence* sentence_by_id(Corpus& corpus, const std::string& id) {
  for (auto& s : corpus.sentences) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace

const std::string& high_level_concept_name(HighLevelConcept c) {
  return kConceptNames[static_cast<std::size_t>(c)];
}

std::optional<HighLevelConcept> high_level_concept_from_string(const std::string& name) {
  std::string folded = fold_case(name);
  for (std::size_t i = 0; i < kConceptNames.size(); ++i) {
    if (fold_case(kConceptNames[i]) == folded) return static_cast<HighLevelConcept>(i);
  }
  return std::nullopt;
}

const std::vector<HighLevelConcept>& all_high_level_concepts() {
  static const std::vector<HighLevelConcept> kAll = [] {
    std::vector<HighLevelConcept> out;
    for (std::size_t i = 0; i < kConceptNames.size(); ++i) {
      out.push_back(static_cast<HighLevelConcept>(i));
    }
    return out;
  }();
  return kAll;
}

HandledSet resolve_handled(const Corpus& corpus, const std::map<std::string, bool>& computed) {
  HandledSet out;
  for (const auto& sentence : corpus.sentences) {
    if (sentence.handled) {
      out[sentence.id] = *sentence.handled;
    } else {
      auto it = computed.find(sentence.id);
      out[sentence.id] = it != computed.end() && it->second;
    }
  }
  return out;
}

RhetoricalDistribution rhetorical_distribution(const Corpus& corpus) {
  std::map<std::string, int> counts;
  int total = 0;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& label : sentence.rhetorical_labels) {
      ++counts[label.relation];
      ++total;
    }
  }
  if (total == 0) {
    throw PreconditionError("rhetorical distribution needs at least one annotation");
  }
  RhetoricalDistribution dist;
  dist.total = total;
  for (const auto& label : rhetorical_vocabulary()) {
    RhetoricalCount row;
    row.label = label;
    auto it = counts.find(label.relation);
    row.count = it == counts.end() ? 0 : it->second;
    row.mean = Rational(row.count, total);
    dist.rows.push_back(std::move(row));
  }
  return dist;
}

Rational causal_coverage(const Corpus& corpus, const HandledSet& handled) {
  int causal = 0;
  int covered = 0;
  for (const auto& sentence : corpus.sentences) {
    bool has_causal = false;
    for (const auto& label : sentence.rhetorical_labels) {
      if (label.relation == "Cause-effect") {
        has_causal = true;
        break;
      }
    }
    if (!has_causal) continue;
    ++causal;
    auto it = handled.find(sentence.id);
    if (it != handled.end() && it->second) ++covered;
  }
  if (causal == 0) throw PreconditionError("no Cause-effect annotations in the corpus");
  return Rational(covered, causal);
}

std::vector<TopicalRow> topical_table(const Corpus& corpus, const HandledSet& handled) {
  std::map<int, std::pair<int, int>> by_level;  // indentation -> (sentences, handled)
  int annotated = 0;
  for (const auto& sentence : corpus.sentences) {
    if (!sentence.indentation) continue;
    ++annotated;
    auto& [count, covered] = by_level[*sentence.indentation];
    ++count;
    auto it = handled.find(sentence.id);
    if (it != handled.end() && it->second) ++covered;
  }
  if (annotated == 0) throw PreconditionError("no indentation annotations in the corpus");
  std::vector<TopicalRow> rows;
  for (const auto& [level, counts] : by_level) {
    TopicalRow row;
    row.indentation = level;
    row.sentences = counts.first;
    row.handled = counts.second;
    row.corpus_coverage = Rational(counts.first, annotated);
    row.topical_coverage = Rational(counts.second, counts.first);
    rows.push_back(std::move(row));
  }
  return rows;
}

DiscourseTable discourse_table(const DiscourseOccurrences& occurrences) {
  DiscourseTable table;
  int covered_total = 0;
  int discourse_total = 0;
  for (const auto& [concept_id, pair] : occurrences) {
    const auto& [covered, in_discourse] = pair;
    if (covered > in_discourse) {
      throw ValidationError("concept '" + high_level_concept_name(concept_id) +
                            "' has covered > in_discourse");
    }
    if (in_discourse <= 0) {
      throw ValidationError("concept '" + high_level_concept_name(concept_id) +
                            "' needs a positive in_discourse count");
    }
    DiscourseRow row;
    row.concept_id = concept_id;
    row.covered = covered;
    row.in_discourse = in_discourse;
    row.difference = in_discourse - covered;
    row.coverage_pct = Rational(covered, in_discourse);
    row.deviation_pct = Rational(row.difference, in_discourse);
    table.rows.push_back(std::move(row));
    covered_total += covered;
    discourse_total += in_discourse;
  }
  if (table.rows.empty()) throw PreconditionError("discourse table needs at least one concept");
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const DiscourseRow& a, const DiscourseRow& b) {
                     return a.in_discourse > b.in_discourse;
                   });
  table.totals.covered = covered_total;
  table.totals.in_discourse = discourse_total;
  table.totals.difference = discourse_total - covered_total;
  table.totals.coverage_pct = Rational(covered_total, discourse_total);
  table.totals.deviation_pct = Rational(table.totals.difference, discourse_total);
  return table;
}

void load_rhetoric_csv(Corpus& corpus, const std::string& content) {
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.size() != 3 || strip(fields[0]) != "sentence_id") {
        throw ParseError("rhetoric CSV header must be sentence_id,structure,relation", line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) throw ParseError("rhetoric row needs 3 fields", line_no);
    Sentence* sentence = sentence_by_id(corpus, strip(fields[0]));
    if (!sentence) throw ValidationError("rhetoric CSV names unknown sentence " + strip(fields[0]));
    sentence->rhetorical_labels.push_back(
        make_rhetorical_label(strip(fields[1]), strip(fields[2])));
  }
}

void load_topical_csv(Corpus& corpus, const std::string& content) {
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.size() != 4 || strip(fields[0]) != "sentence_id") {
        throw ParseError("topical CSV header must be sentence_id,indentation,progression,handled",
                         line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) throw ParseError("topical row needs 4 fields", line_no);
    Sentence* sentence = sentence_by_id(corpus, strip(fields[0]));
    if (!sentence) throw ValidationError("topical CSV names unknown sentence " + strip(fields[0]));
    std::string indentation = strip(fields[1]);
    if (!indentation.empty()) {
      int level = std::stoi(indentation);
      if (level < 1) throw ParseError("indentation must be >= 1", line_no);
      sentence->indentation = level;
    }
    std::string progression = strip(fields[2]);
    if (!progression.empty()) {
      auto p = progression_from_string(progression);
      if (!p) throw ParseError("unknown progression '" + progression + "'", line_no);
      sentence->progression = *p;
    }
    std::string handled = strip(fields[3]);
    if (!handled.empty()) {
      if (handled != "true" && handled != "false") {
        throw ParseError("handled must be true or false", line_no);
      }
      sentence->handled = handled == "true";
    }
  }
}

DiscourseOccurrences load_discourse_csv(const std::string& content) {
  DiscourseOccurrences occurrences;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.size() != 3 || strip(fields[0]) != "concept") {
        throw ParseError("discourse CSV header must be concept,covered,in_discourse", line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) throw ParseError("discourse row needs 3 fields", line_no);
    auto concept_id = high_level_concept_from_string(strip(fields[0]));
    if (!concept_id) {
      throw ParseError("unknown high-level concept '" + strip(fields[0]) + "'", line_no);
    }
    int covered = std::stoi(strip(fields[1]));
    int in_discourse = std::stoi(strip(fields[2]));
    occurrences[*concept_id] = {covered, in_discourse};
  }
  if (!header_seen) throw ParseError("empty discourse CSV (missing header row)", line_no);
  return occurrences;
}

}  // namespace c2k
