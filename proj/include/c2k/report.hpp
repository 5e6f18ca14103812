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

#ifndef C2K_REPORT_HPP
#define C2K_REPORT_HPP

#include <string>
#include <vector>

#include "c2k/ccg.hpp"
#include "c2k/rational.hpp"

namespace c2k {

// One batch run: inputs, analysis knobs, and output selection.
struct RunConfig {
  std::string corpus_path;
  std::string lexicon_path;
  std::string registry_path;    // empty -> builtin framework
  std::string relations_path;   // verb -> relation mapping; empty -> none
  std::string rhetoric_csv;     // optional sidecars
  std::string topical_csv;
  std::string discourse_csv;
  std::string ontology_path;

  GrammarConfig grammar;
  RoundingMode rounding = RoundingMode::half_up;
  int samples = 15;
  Rational threshold = Rational(1, 20);  // 0.05
  int window = 3;
  std::string out_dir;
  bool format_csv = true;
  bool format_json = true;
};

// key=value file; relative paths resolve against the file's directory.
RunConfig load_run_config(const std::string& path);
void apply_config_line(RunConfig& config, const std::string& key, const std::string& value,
                       const std::string& base_dir);

// Exact rational from a decimal string such as "0.05".
Rational rational_from_decimal(const std::string& text);

struct ReportResult {
  std::vector<std::string> files_written;  // basenames, sorted
  std::vector<std::string> notices;        // skipped stages
};

// Validates the configured inputs. Returns diagnostics; empty means clean.
std::vector<std::string> validate_inputs(const RunConfig& config);

// Runs every analysis stage and writes the report files into out_dir.
// Identical inputs and config produce byte-identical outputs.
ReportResult run_report(const RunConfig& config);

}  // namespace c2k

#endif  // C2K_REPORT_HPP
