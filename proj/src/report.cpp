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

#include "c2k/report.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include <json.hpp>

#include "c2k/corpus_io.hpp"
#include "c2k/discourse.hpp"
#include "c2k/errors.hpp"
#include "c2k/knowledge.hpp"
#include "c2k/representativeness.hpp"

namespace c2k {

namespace fs = std::filesystem;

Rational rational_from_decimal(const std::string& text) {
  std::string t = text;
  bool negative = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    negative = t[0] == '-';
    t = t.substr(1);
  }
  auto dot = t.find('.');
  std::string whole = dot == std::string::npos ? t : t.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : t.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw ValidationError("not a number: '" + text + "'");
  for (char c : whole + frac) {
    if (c < '0' || c > '9') throw ValidationError("not a number: '" + text + "'");
  }
  std::int64_t num = whole.empty() ? 0 : std::stoll(whole);
  std::int64_t den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(negative ? -num : num, den);
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  fs::path p(path);
  if (p.is_absolute()) return path;
  return (fs::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

void apply_config_line(RunConfig& config, const std::string& key, const std::string& value,
                       const std::string& base_dir) {
  if (key == "corpus") config.corpus_path = resolve(value, base_dir);
  else if (key == "lexicon") config.lexicon_path = resolve(value, base_dir);
  else if (key == "registry") config.registry_path = resolve(value, base_dir);
  else if (key == "relations") config.relations_path = resolve(value, base_dir);
  else if (key == "rhetoric") config.rhetoric_csv = resolve(value, base_dir);
  else if (key == "topical") config.topical_csv = resolve(value, base_dir);
  else if (key == "discourse") config.discourse_csv = resolve(value, base_dir);
  else if (key == "ontology") config.ontology_path = resolve(value, base_dir);
  else if (key == "out") config.out_dir = resolve(value, base_dir);
  else if (key == "rounding") config.rounding = rounding_mode_from_string(value);
  else if (key == "samples") config.samples = std::stoi(value);
  else if (key == "threshold") config.threshold = rational_from_decimal(value);
  else if (key == "window") config.window = std::stoi(value);
  else if (key == "formats") {
    config.format_csv = value.find("csv") != std::string::npos;
    config.format_json = value.find("json") != std::string::npos;
    if (!config.format_csv && !config.format_json) {
      throw ValidationError("formats must name csv and/or json");
    }
  } else if (key == "max_chart_items") {
    config.grammar.max_chart_items = static_cast<std::size_t>(std::stoll(value));
  } else if (bool* flag = extension_flag(config.grammar, key)) {
    if (value != "true" && value != "false") {
      throw ValidationError("extension toggle " + key + " must be true or false");
    }
    *flag = value == "true";
  } else {
    throw ValidationError("unknown config key: " + key);
  }
}

RunConfig load_run_config(const std::string& path) {
  RunConfig config;
  std::string content = read_file(path);
  std::string base_dir = fs::path(path).parent_path().string();
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
    try {
      apply_config_line(config, strip(t.substr(0, eq)), strip(t.substr(eq + 1)), base_dir);
    } catch (const ValidationError& e) {
      throw ParseError(std::string(e.what()), line_no);
    }
  }
  return config;
}

std::vector<std::string> validate_inputs(const RunConfig& config) {
  std::vector<std::string> diagnostics;
  if (config.corpus_path.empty()) {
    diagnostics.push_back("no corpus file configured");
  } else {
    Corpus corpus = ingest_corpus_file(config.corpus_path);  // throws on bad input
    (void)corpus;
  }
  if (!config.lexicon_path.empty()) Lexicon::load_tsv_file(config.lexicon_path);
  if (!config.registry_path.empty()) RelationRegistry::load_tsv_file(config.registry_path);
  if (!config.relations_path.empty()) RelationLexicon::load_tsv_file(config.relations_path);
  if (!config.discourse_csv.empty()) load_discourse_csv(read_file(config.discourse_csv));
  if (!config.ontology_path.empty()) ontology_from_json_file(config.ontology_path);
  if (!config.rhetoric_csv.empty() || !config.topical_csv.empty()) {
    Corpus corpus = ingest_corpus_file(config.corpus_path);
    if (!config.rhetoric_csv.empty()) load_rhetoric_csv(corpus, read_file(config.rhetoric_csv));
    if (!config.topical_csv.empty()) load_topical_csv(corpus, read_file(config.topical_csv));
  }
  return diagnostics;
}

namespace {

struct Pipeline {
  const RunConfig& config;
  Corpus corpus;
  Lexicon lexicon;
  RelationRegistry registry;
  RelationLexicon relations;
  OntologyStack ontology;
  bool have_ontology = false;

  std::map<std::string, std::string> csv_files;  // name -> content
  std::vector<std::string> notices;
  nlohmann::ordered_json json;

  explicit Pipeline(const RunConfig& cfg) : config(cfg) {}

  std::string pct(const Rational& value, int decimals) const {
    return percent_string(value, decimals, config.rounding);
  }
};

void stage_stats(Pipeline& p) {
  CorpusStats stats = compute_stats(p.corpus);
  std::ostringstream out;
  out << "metric,value\n";
  out << "sources," << p.corpus.source_count << "\n";
  out << "sentences," << stats.sentence_count << "\n";
  out << "words," << stats.word_count << "\n";
  out << "unique_words," << stats.unique_word_count << "\n";
  auto distribution = sentence_type_distribution(p.corpus);
  for (const auto& [structure, share] : distribution) {
    out << "structure_" << structure_name(structure) << "_percent," << p.pct(share, 2) << "\n";
  }
  p.csv_files["stats.csv"] = out.str();

  p.json["stats"] = {{"sources", p.corpus.source_count},
                     {"sentences", stats.sentence_count},
                     {"words", stats.word_count},
                     {"unique_words", stats.unique_word_count}};
  for (const auto& [structure, share] : distribution) {
    p.json["stats"]["structure"][structure_name(structure)] = p.pct(share, 2);
  }
}

void stage_saturation(Pipeline& p,
                      const std::map<std::string, std::vector<PredicateTriple>>& by_sentence) {
  if (p.config.samples > static_cast<int>(p.corpus.sentences.size())) {
    p.notices.push_back("saturation skipped: fewer sentences than samples");
    return;
  }
  SamplePartition partition = segment(p.corpus, p.config.samples);
  std::vector<SaturationCurve> curves;
  if (!p.corpus.term_list.empty()) {
    curves.push_back(saturation_curve(p.corpus, partition, ItemSelector::technical_terms()));
  } else {
    p.notices.push_back("technical-term curve skipped: empty term list");
  }
  for (Pos pos : {Pos::verb, Pos::preposition, Pos::coordinator}) {
    curves.push_back(saturation_curve(p.corpus, partition, ItemSelector::pos_class(pos)));
  }
  if (!by_sentence.empty()) {
    KnowledgeCurves knowledge = knowledge_saturation(p.corpus, partition, by_sentence);
    curves.push_back(knowledge.concepts);
    curves.push_back(knowledge.relations);
  }

  std::ostringstream curve_out;
  curve_out << "item_class,sample,new,cumulative\n";
  std::ostringstream closure_out;
  closure_out << "item_class,saturated,saturation_index,threshold,window\n";
  for (const auto& curve : curves) {
    for (std::size_t i = 0; i < curve.per_sample_new.size(); ++i) {
      curve_out << curve.item_class << "," << (i + 1) << "," << curve.per_sample_new[i] << ","
                << curve.cumulative[i] << "\n";
    }
    ClosureVerdict verdict = closure_test(curve, p.config.threshold, p.config.window);
    closure_out << curve.item_class << "," << (verdict.saturated ? "true" : "false") << ",";
    if (verdict.saturation_index) closure_out << *verdict.saturation_index + 1;
    closure_out << "," << p.config.threshold.to_string() << "," << p.config.window << "\n";

    nlohmann::ordered_json j;
    j["item_class"] = curve.item_class;
    j["new"] = curve.per_sample_new;
    j["cumulative"] = curve.cumulative;
    j["saturated"] = verdict.saturated;
    if (verdict.saturation_index) j["saturation_index"] = *verdict.saturation_index + 1;
    p.json["saturation"]["curves"].push_back(j);
  }
  p.json["saturation"]["samples"] = p.config.samples;
  p.json["saturation"]["mean_sample_words"] = partition.mean_sample_words.to_string();
  p.csv_files["saturation.csv"] = curve_out.str();
  p.csv_files["closure.csv"] = closure_out.str();
}

void stage_coverage(Pipeline& p) {
  CoverageReport report = vocabulary_coverage(p.lexicon, p.corpus);
  std::ostringstream out;
  out << "metric,value\n";
  out << "overlap," << report.overlap_count << "\n";
  out << "unique_words," << report.unique_word_count << "\n";
  out << "coverage_percent," << p.pct(report.ratio, 0) << "\n";
  out << "coverage_exact," << report.ratio.to_string() << "\n";
  p.csv_files["coverage.csv"] = out.str();
  p.json["coverage"] = {{"overlap", report.overlap_count},
                        {"unique_words", report.unique_word_count},
                        {"percent", p.pct(report.ratio, 0)},
                        {"exact", report.ratio.to_string()}};
}

struct ParseOutcome {
  std::vector<SentenceExtraction> extractions;
  std::map<std::string, std::vector<PredicateTriple>> triples_by_sentence;
  std::map<std::string, bool> computed_handled;
  int parsed = 0;
  std::map<std::string, std::map<int, int>> svo_histogram;  // measure -> value -> sentences
};

ParseOutcome stage_parse(Pipeline& p) {
  ParseOutcome outcome;
  std::vector<PredicateTriple> all_triples;
  for (const auto& sentence : p.corpus.sentences) {
    ParseResult result = parse(sentence, p.lexicon, p.config.grammar);
    SentenceExtraction extraction;
    extraction.sentence_id = sentence.id;
    extraction.parsed = result.success();
    if (result.success()) {
      ++outcome.parsed;
      const Derivation& first = result.derivations.front();
      SvoProfile profile = svo_profile(first, sentence);
      ++outcome.svo_histogram["subjects"][profile.subjects];
      ++outcome.svo_histogram["objects"][profile.objects];
      ++outcome.svo_histogram["verbs"][profile.verbs];
      extraction.triples = extract_triples(first, sentence, p.relations, p.registry);
      outcome.triples_by_sentence[sentence.id] = extraction.triples;
      all_triples.insert(all_triples.end(), extraction.triples.begin(),
                         extraction.triples.end());
    }
    bool mapped = extraction.parsed;
    for (const auto& triple : extraction.triples) {
      if (!triple.registered) mapped = false;
      if (p.have_ontology &&
          (!p.ontology.has_concept(triple.subject) || !p.ontology.has_concept(triple.object))) {
        mapped = false;
      }
    }
    outcome.computed_handled[sentence.id] = mapped;
    outcome.extractions.push_back(std::move(extraction));
  }

  int total = static_cast<int>(p.corpus.sentences.size());
  Rational rate(outcome.parsed, total);
  std::ostringstream out;
  out << "metric,value\n";
  out << "total," << total << "\n";
  out << "parsed," << outcome.parsed << "\n";
  out << "rate_percent," << p.pct(rate, 0) << "\n";
  out << "rate_exact," << rate.to_string() << "\n";
  out << "\n";
  out << "measure,value,sentences\n";
  for (const auto& [measure, histogram] : outcome.svo_histogram) {
    for (const auto& [value, sentences] : histogram) {
      out << measure << "," << value << "," << sentences << "\n";
    }
  }
  p.csv_files["parse.csv"] = out.str();

  p.json["parse"] = {{"total", total},
                     {"parsed", outcome.parsed},
                     {"percent", p.pct(rate, 0)},
                     {"exact", rate.to_string()}};
  for (const auto& [measure, histogram] : outcome.svo_histogram) {
    for (const auto& [value, sentences] : histogram) {
      p.json["parse"]["svo"][measure][std::to_string(value)] = sentences;
    }
  }

  std::sort(all_triples.begin(), all_triples.end());
  p.csv_files["triples.csv"] = triples_csv(all_triples);
  for (const auto& triple : all_triples) {
    p.json["triples"].push_back({{"subject", triple.subject},
                                 {"relation", triple.relation},
                                 {"object", triple.object},
                                 {"sentence_id", triple.sentence_id},
                                 {"registered", triple.registered}});
  }
  if (p.have_ontology && outcome.parsed > 0) {
    Rational mapping = ontology_mapping_rate(outcome.extractions, p.ontology);
    p.json["mapping_rate"] = {{"percent", p.pct(mapping, 0)}, {"exact", mapping.to_string()}};
  }
  return outcome;
}

void stage_rhetoric(Pipeline& p, const HandledSet& handled) {
  bool any = false;
  for (const auto& s : p.corpus.sentences) {
    if (!s.rhetorical_labels.empty()) any = true;
  }
  if (!any) {
    p.notices.push_back("rhetorical table skipped: no annotations");
    return;
  }
  RhetoricalDistribution dist = rhetorical_distribution(p.corpus);
  std::ostringstream out;
  out << "structure,relation,count,mean_percent\n";
  for (const auto& row : dist.rows) {
    out << rhetorical_structure_name(row.label.structure) << "," << row.label.relation << ","
        << row.count << "," << p.pct(row.mean, 2) << "\n";
    p.json["rhetoric"]["rows"].push_back(
        {{"structure", rhetorical_structure_name(row.label.structure)},
         {"relation", row.label.relation},
         {"count", row.count},
         {"mean_percent", p.pct(row.mean, 2)}});
  }
  out << "total,," << dist.total << ",100.00\n";
  p.json["rhetoric"]["total"] = dist.total;
  p.csv_files["rhetoric.csv"] = out.str();

  try {
    Rational causal = causal_coverage(p.corpus, handled);
    p.json["rhetoric"]["causal_coverage_percent"] = p.pct(causal, 1);
  } catch (const PreconditionError&) {
    p.notices.push_back("causal coverage skipped: no Cause-effect annotations");
  }
}

void stage_topical(Pipeline& p, const HandledSet& handled) {
  bool any = false;
  for (const auto& s : p.corpus.sentences) {
    if (s.indentation) any = true;
  }
  if (!any) {
    p.notices.push_back("topical table skipped: no annotations");
    return;
  }
  auto rows = topical_table(p.corpus, handled);
  std::ostringstream out;
  out << "indentation,sentences,corpus_coverage_percent,handled,topical_coverage_percent\n";
  for (const auto& row : rows) {
    out << row.indentation << "," << row.sentences << "," << p.pct(row.corpus_coverage, 0) << ","
        << row.handled << "," << p.pct(row.topical_coverage, 0) << "\n";
    p.json["topical"].push_back({{"indentation", row.indentation},
                                 {"sentences", row.sentences},
                                 {"corpus_coverage_percent", p.pct(row.corpus_coverage, 0)},
                                 {"handled", row.handled},
                                 {"topical_coverage_percent", p.pct(row.topical_coverage, 0)}});
  }
  p.csv_files["topical.csv"] = out.str();
}

void stage_discourse(Pipeline& p) {
  if (p.config.discourse_csv.empty()) {
    p.notices.push_back("discourse table skipped: no occurrence sidecar");
    return;
  }
  DiscourseOccurrences occurrences = load_discourse_csv(read_file(p.config.discourse_csv));
  DiscourseTable table = discourse_table(occurrences);
  std::ostringstream out;
  out << "concept,covered,in_discourse,difference,coverage_percent,deviation_percent\n";
  auto emit = [&](const std::string& name, const DiscourseRow& row) {
    out << name << "," << row.covered << "," << row.in_discourse << "," << row.difference << ","
        << p.pct(row.coverage_pct, 0) << "," << p.pct(row.deviation_pct, 0) << "\n";
    p.json["discourse"].push_back({{"concept", name},
                                   {"covered", row.covered},
                                   {"in_discourse", row.in_discourse},
                                   {"difference", row.difference},
                                   {"coverage_percent", p.pct(row.coverage_pct, 0)},
                                   {"deviation_percent", p.pct(row.deviation_pct, 0)}});
  };
  for (const auto& row : table.rows) emit(high_level_concept_name(row.concept_id), row);
  emit("Total", table.totals);
  p.csv_files["discourse.csv"] = out.str();
}

// Published figures the arithmetic does not reproduce; recomputed here so
// the report documents both sides.
void stage_reference_figures(Pipeline& p) {
  auto add = [&](const std::string& figure, const std::string& published,
                 const std::string& computed) {
    p.json["reference_figures"].push_back(
        {{"figure", figure}, {"published", published}, {"computed", computed},
         {"reproduced", false}});
  };
  add("vocabulary coverage after augmentation", "90%",
      percent_string(Rational(1783, 1902), 1, RoundingMode::half_up) + "%");
  add("mean sample words", "1267",
      Rational(18834, 15).to_string() + " (= " +
          percent_string(Rational(18834, 15 * 100), 1, RoundingMode::half_up) + ")");
  RegistryCounts counts = p.registry.counts();
  add("semantic relations with inverses", "55 relations / 42 inverses",
      std::to_string(counts.predicate_rows) + " listed / " +
          std::to_string(counts.distinct_predicates) + " distinct / " +
          std::to_string(counts.with_inverse) + " with inverses");
  add("topical coverage at indentation 6", "33%",
      percent_string(Rational(2, 4), 0, RoundingMode::half_up) + "%");
}

}  // namespace

ReportResult run_report(const RunConfig& config) {
  if (config.out_dir.empty()) throw PreconditionError("no output directory configured");
  if (config.corpus_path.empty()) throw PreconditionError("no corpus file configured");
  if (config.lexicon_path.empty()) throw PreconditionError("no lexicon file configured");

  Pipeline p(config);
  p.corpus = ingest_corpus_file(config.corpus_path);
  p.lexicon = Lexicon::load_tsv_file(config.lexicon_path);
  p.registry = config.registry_path.empty() ? RelationRegistry::builtin()
                                            : RelationRegistry::load_tsv_file(config.registry_path);
  if (!config.relations_path.empty()) {
    p.relations = RelationLexicon::load_tsv_file(config.relations_path);
  }
  if (!config.ontology_path.empty()) {
    p.ontology = ontology_from_json_file(config.ontology_path);
    p.have_ontology = true;
  }
  if (!config.rhetoric_csv.empty()) {
    load_rhetoric_csv(p.corpus, read_file(config.rhetoric_csv));
  }
  if (!config.topical_csv.empty()) {
    load_topical_csv(p.corpus, read_file(config.topical_csv));
  }
  if (p.corpus.sentences.empty()) {
    throw PreconditionError("report stage stats: corpus is empty");
  }

  p.json["rounding"] = rounding_mode_name(config.rounding);

  auto guarded = [&p](const char* stage, auto&& fn) {
    try {
      fn();
    } catch (const PreconditionError& e) {
      throw PreconditionError(std::string("report stage ") + stage + ": " + e.what());
    }
  };

  ParseOutcome outcome;
  guarded("stats", [&] { stage_stats(p); });
  guarded("parse", [&] { outcome = stage_parse(p); });
  guarded("saturate", [&] { stage_saturation(p, outcome.triples_by_sentence); });
  guarded("coverage", [&] { stage_coverage(p); });
  HandledSet handled = resolve_handled(p.corpus, outcome.computed_handled);
  guarded("rhetoric", [&] { stage_rhetoric(p, handled); });
  guarded("topical", [&] { stage_topical(p, handled); });
  guarded("discourse", [&] { stage_discourse(p); });
  stage_reference_figures(p);

  for (const auto& notice : p.notices) p.json["notices"].push_back(notice);

  fs::create_directories(config.out_dir);
  ReportResult result;
  result.notices = p.notices;
  if (config.format_csv) {
    for (const auto& [name, content] : p.csv_files) {
      write_file((fs::path(config.out_dir) / name).string(), content);
      result.files_written.push_back(name);
    }
  }
  if (config.format_json) {
    write_file((fs::path(config.out_dir) / "report.json").string(), p.json.dump(2) + "\n");
    result.files_written.push_back("report.json");
  }
  std::sort(result.files_written.begin(), result.files_written.end());
  return result;
}

}  // namespace c2k
