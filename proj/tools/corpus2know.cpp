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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "c2k/ccg.hpp"
#include "c2k/corpus_io.hpp"
#include "c2k/discourse.hpp"
#include "c2k/errors.hpp"
#include "c2k/knowledge.hpp"
#include "c2k/report.hpp"
#include "c2k/representativeness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitAnalysis = 4;

struct CliOptions {
  std::string config_path;
  c2k::RunConfig run;
  std::string sentence_id;  // parse: print this sentence's derivation
  bool derivation_json = false;
};

void attach_common(CLI::App* cmd, CliOptions& opts,
                   std::map<std::string, std::string>& overrides) {
  cmd->add_option("--config", opts.config_path, "key=value run configuration file");
  cmd->add_option("--corpus", overrides["corpus"], "corpus XML file");
  cmd->add_option("--lexicon", overrides["lexicon"], "lexicon TSV file");
  cmd->add_option("--registry", overrides["registry"], "semantic relation framework TSV");
  cmd->add_option("--relations", overrides["relations"], "verb-to-relation lexicon TSV");
  cmd->add_option("--rhetoric", overrides["rhetoric"], "rhetoric sidecar CSV");
  cmd->add_option("--topical", overrides["topical"], "topical sidecar CSV");
  cmd->add_option("--discourse", overrides["discourse"], "discourse occurrence CSV");
  cmd->add_option("--ontology", overrides["ontology"], "ontology JSON file");
  cmd->add_option("--out", overrides["out"], "output directory");
  cmd->add_option("--rounding", overrides["rounding"], "half-up|floor|ceiling");
  cmd->add_option("--samples", overrides["samples"], "saturation sample count");
  cmd->add_option("--threshold", overrides["threshold"], "closure threshold, e.g. 0.05");
  cmd->add_option("--window", overrides["window"], "closure window in samples");
  for (const auto& name : c2k::extension_names()) {
    std::string flag = name;
    for (auto& c : flag) {
      if (c == '_') c = '-';
    }
    cmd->add_flag_callback(
        "--no-" + flag, [&overrides, name] { overrides[name] = "false"; },
        "disable the " + name + " grammar extension");
  }
}

c2k::RunConfig build_config(const CliOptions& opts,
                            const std::map<std::string, std::string>& overrides) {
  c2k::RunConfig config;
  std::string config_path = opts.config_path;
  if (config_path.empty()) {
    if (const char* env = std::getenv("CORPUS2KNOW_CONFIG")) config_path = env;
  }
  if (!config_path.empty()) config = c2k::load_run_config(config_path);
  for (const auto& [key, value] : overrides) {
    if (!value.empty()) c2k::apply_config_line(config, key, value, "");
  }
  return config;
}

int cmd_validate(const c2k::RunConfig& config) {
  auto diagnostics = c2k::validate_inputs(config);
  for (const auto& d : diagnostics) std::cerr << "validate: " << d << "\n";
  if (!diagnostics.empty()) return kExitValidation;
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_stats(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::CorpusStats stats = c2k::compute_stats(corpus);
  std::cout << "sentences," << stats.sentence_count << "\n";
  std::cout << "words," << stats.word_count << "\n";
  std::cout << "unique_words," << stats.unique_word_count << "\n";
  for (const auto& [structure, share] : c2k::sentence_type_distribution(corpus)) {
    std::cout << "structure_" << c2k::structure_name(structure) << "_percent,"
              << c2k::percent_string(share, 2, config.rounding) << "\n";
  }
  return kExitOk;
}

int cmd_saturate(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::SamplePartition partition = c2k::segment(corpus, config.samples);
  std::vector<c2k::SaturationCurve> curves;
  if (!corpus.term_list.empty()) {
    curves.push_back(
        c2k::saturation_curve(corpus, partition, c2k::ItemSelector::technical_terms()));
  }
  for (c2k::Pos pos : {c2k::Pos::verb, c2k::Pos::preposition, c2k::Pos::coordinator}) {
    curves.push_back(c2k::saturation_curve(corpus, partition, c2k::ItemSelector::pos_class(pos)));
  }
  std::cout << "item_class,sample,new,cumulative,saturated,saturation_index\n";
  for (const auto& curve : curves) {
    c2k::ClosureVerdict verdict = c2k::closure_test(curve, config.threshold, config.window);
    for (std::size_t i = 0; i < curve.per_sample_new.size(); ++i) {
      std::cout << curve.item_class << "," << (i + 1) << "," << curve.per_sample_new[i] << ","
                << curve.cumulative[i] << "," << (verdict.saturated ? "true" : "false") << ",";
      if (verdict.saturation_index) std::cout << *verdict.saturation_index + 1;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_coverage(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::Lexicon lexicon = c2k::Lexicon::load_tsv_file(config.lexicon_path);
  c2k::CoverageReport report = c2k::vocabulary_coverage(lexicon, corpus);
  std::cout << "overlap," << report.overlap_count << "\n";
  std::cout << "unique_words," << report.unique_word_count << "\n";
  std::cout << "coverage_percent," << c2k::percent_string(report.ratio, 0, config.rounding)
            << "\n";
  std::cout << "coverage_exact," << report.ratio.to_string() << "\n";
  return kExitOk;
}

int cmd_augment(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::Lexicon lexicon = c2k::Lexicon::load_tsv_file(config.lexicon_path);
  auto added = c2k::augment_from_corpus(lexicon, corpus);
  for (const auto& [pos, count] : added) {
    std::cout << c2k::pos_name(pos) << "," << count << "\n";
  }
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    std::string path =
        (std::filesystem::path(config.out_dir) / "lexicon_augmented.tsv").string();
    c2k::write_file(path, lexicon.save_tsv());
    std::cerr << "wrote " << path << "\n";
  }
  return kExitOk;
}

int cmd_parse(const c2k::RunConfig& config, const CliOptions& opts) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::Lexicon lexicon = c2k::Lexicon::load_tsv_file(config.lexicon_path);
  if (!opts.sentence_id.empty()) {
    for (const auto& sentence : corpus.sentences) {
      if (sentence.id != opts.sentence_id) continue;
      c2k::ParseResult result = c2k::parse(sentence, lexicon, config.grammar);
      if (!result.success()) {
        std::cout << "no derivation\n";
        if (result.diagnosis) {
          for (int index : result.diagnosis->uncovered_tokens) {
            std::cout << "uncovered," << sentence.tokens[static_cast<std::size_t>(index)].surface
                      << "\n";
          }
          for (const auto& [index, cat] : result.diagnosis->missing_category_hypotheses) {
            std::cout << "hypothesis,"
                      << sentence.tokens[static_cast<std::size_t>(index)].surface << ","
                      << cat->to_string() << "\n";
          }
        }
        return kExitOk;
      }
      for (const auto& derivation : result.derivations) {
        std::cout << (opts.derivation_json ? derivation.to_json(sentence)
                                           : derivation.bracketed(sentence))
                  << "\n";
      }
      return kExitOk;
    }
    std::cerr << "unknown sentence id: " << opts.sentence_id << "\n";
    return kExitValidation;
  }
  c2k::ParseRate rate = c2k::parse_rate(corpus, lexicon, config.grammar);
  std::cout << "total," << rate.total << "\n";
  std::cout << "parsed," << rate.parsed << "\n";
  std::cout << "rate_percent," << c2k::percent_string(rate.rate, 0, config.rounding) << "\n";
  return kExitOk;
}

int cmd_extract(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::Lexicon lexicon = c2k::Lexicon::load_tsv_file(config.lexicon_path);
  const c2k::RelationRegistry& registry =
      config.registry_path.empty() ? c2k::RelationRegistry::builtin()
                                   : c2k::RelationRegistry::load_tsv_file(config.registry_path);
  c2k::RelationLexicon relations;
  if (!config.relations_path.empty()) {
    relations = c2k::RelationLexicon::load_tsv_file(config.relations_path);
  }
  std::vector<c2k::PredicateTriple> triples;
  for (const auto& sentence : corpus.sentences) {
    c2k::ParseResult result = c2k::parse(sentence, lexicon, config.grammar);
    if (!result.success()) continue;
    auto extracted =
        c2k::extract_triples(result.derivations.front(), sentence, relations, registry);
    triples.insert(triples.end(), extracted.begin(), extracted.end());
  }
  std::sort(triples.begin(), triples.end());
  std::cout << c2k::triples_csv(triples);
  return kExitOk;
}

int cmd_ontology(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  c2k::Lexicon lexicon = c2k::Lexicon::load_tsv_file(config.lexicon_path);
  const c2k::RelationRegistry& registry =
      config.registry_path.empty() ? c2k::RelationRegistry::builtin()
                                   : c2k::RelationRegistry::load_tsv_file(config.registry_path);
  c2k::RelationLexicon relations;
  if (!config.relations_path.empty()) {
    relations = c2k::RelationLexicon::load_tsv_file(config.relations_path);
  }
  std::vector<c2k::PredicateTriple> triples;
  for (const auto& sentence : corpus.sentences) {
    c2k::ParseResult result = c2k::parse(sentence, lexicon, config.grammar);
    if (!result.success()) continue;
    auto extracted =
        c2k::extract_triples(result.derivations.front(), sentence, relations, registry);
    triples.insert(triples.end(), extracted.begin(), extracted.end());
  }
  std::sort(triples.begin(), triples.end());
  c2k::OntologyStack stack;
  stack.levels.push_back(c2k::build_level0(triples));
  std::cout << c2k::ontology_to_json(stack);
  return kExitOk;
}

int cmd_rhetoric(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  if (!config.rhetoric_csv.empty()) {
    c2k::load_rhetoric_csv(corpus, c2k::read_file(config.rhetoric_csv));
  }
  c2k::RhetoricalDistribution dist = c2k::rhetorical_distribution(corpus);
  std::cout << "structure,relation,count,mean_percent\n";
  for (const auto& row : dist.rows) {
    std::cout << c2k::rhetorical_structure_name(row.label.structure) << "," << row.label.relation
              << "," << row.count << "," << c2k::percent_string(row.mean, 2, config.rounding)
              << "\n";
  }
  std::cout << "total,," << dist.total << ",100.00\n";
  return kExitOk;
}

int cmd_topical(const c2k::RunConfig& config) {
  c2k::Corpus corpus = c2k::ingest_corpus_file(config.corpus_path);
  if (!config.topical_csv.empty()) {
    c2k::load_topical_csv(corpus, c2k::read_file(config.topical_csv));
  }
  c2k::HandledSet handled = c2k::resolve_handled(corpus);
  std::cout << "indentation,sentences,corpus_coverage_percent,handled,topical_coverage_percent\n";
  for (const auto& row : c2k::topical_table(corpus, handled)) {
    std::cout << row.indentation << "," << row.sentences << ","
              << c2k::percent_string(row.corpus_coverage, 0, config.rounding) << "," << row.handled
              << "," << c2k::percent_string(row.topical_coverage, 0, config.rounding) << "\n";
  }
  return kExitOk;
}

int cmd_discourse(const c2k::RunConfig& config) {
  if (config.discourse_csv.empty()) {
    throw c2k::PreconditionError("discourse table needs --discourse occurrences CSV");
  }
  auto occurrences = c2k::load_discourse_csv(c2k::read_file(config.discourse_csv));
  c2k::DiscourseTable table = c2k::discourse_table(occurrences);
  std::cout << "concept,covered,in_discourse,difference,coverage_percent,deviation_percent\n";
  auto emit = [&](const std::string& name, const c2k::DiscourseRow& row) {
    std::cout << name << "," << row.covered << "," << row.in_discourse << "," << row.difference
              << "," << c2k::percent_string(row.coverage_pct, 0, config.rounding) << ","
              << c2k::percent_string(row.deviation_pct, 0, config.rounding) << "\n";
  };
  for (const auto& row : table.rows) emit(c2k::high_level_concept_name(row.concept_id), row);
  emit("Total", table.totals);
  return kExitOk;
}

int cmd_report(const c2k::RunConfig& config) {
  c2k::ReportResult result = c2k::run_report(config);
  for (const auto& notice : result.notices) std::cerr << "notice: " << notice << "\n";
  for (const auto& name : result.files_written) std::cout << name << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus-based text-to-knowledge evaluation toolkit"};
  app.require_subcommand(1);

  CliOptions opts;
  std::map<std::string, std::string> overrides;

  auto* validate = app.add_subcommand("validate", "check corpus, lexicon and sidecar files");
  auto* stats = app.add_subcommand("stats", "corpus statistics and sentence structure");
  auto* saturate = app.add_subcommand("saturate", "saturation curves and closure verdicts");
  auto* coverage = app.add_subcommand("coverage", "lexicon vocabulary coverage");
  auto* augment = app.add_subcommand("augment", "add corpus words missing from the lexicon");
  auto* parse = app.add_subcommand("parse", "parse rate, or one sentence's derivations");
  auto* extract = app.add_subcommand("extract", "predicate triples from parsed sentences");
  auto* ontology = app.add_subcommand("ontology", "level-0 concept map from extracted triples");
  auto* rhetoric = app.add_subcommand("rhetoric", "rhetorical relation distribution");
  auto* topical = app.add_subcommand("topical", "topical progression table");
  auto* discourse = app.add_subcommand("discourse", "discourse coverage and deviation");
  auto* report = app.add_subcommand("report", "run every analysis into a report directory");

  for (auto* cmd : {validate, stats, saturate, coverage, augment, parse, extract, ontology,
                    rhetoric, topical, discourse, report}) {
    attach_common(cmd, opts, overrides);
  }
  parse->add_option("--sentence", opts.sentence_id, "print derivations for this sentence id");
  parse->add_flag("--json", opts.derivation_json, "print derivations as JSON trees");

  CLI11_PARSE(app, argc, argv);

  try {
    c2k::RunConfig config = build_config(opts, overrides);
    if (validate->parsed()) return cmd_validate(config);
    if (stats->parsed()) return cmd_stats(config);
    if (saturate->parsed()) return cmd_saturate(config);
    if (coverage->parsed()) return cmd_coverage(config);
    if (augment->parsed()) return cmd_augment(config);
    if (parse->parsed()) return cmd_parse(config, opts);
    if (extract->parsed()) return cmd_extract(config);
    if (ontology->parsed()) return cmd_ontology(config);
    if (rhetoric->parsed()) return cmd_rhetoric(config);
    if (topical->parsed()) return cmd_topical(config);
    if (discourse->parsed()) return cmd_discourse(config);
    if (report->parsed()) return cmd_report(config);
  } catch (const c2k::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const c2k::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const c2k::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const c2k::PreconditionError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const c2k::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitOk;
}
