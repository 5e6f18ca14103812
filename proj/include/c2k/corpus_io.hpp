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

#ifndef C2K_CORPUS_IO_HPP
#define C2K_CORPUS_IO_HPP

#include <string>
#include <string_view>

#include "c2k/corpus.hpp"

namespace c2k {

// Reads a corpus document, validating it against the schema in
// data/corpus.dtd (element structure, required attributes, closed
// attribute vocabularies). ParseError for malformed XML, ValidationError
// for schema violations; both name the offending element/token.
Corpus ingest_corpus(std::string_view xml);

// Convenience wrapper; IoError when the file cannot be read.
Corpus ingest_corpus_file(const std::string& path);

// Canonical document for a corpus value; re-ingests to an equal value.
std::string serialize_corpus(const Corpus& corpus);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace c2k

#endif  // C2K_CORPUS_IO_HPP
