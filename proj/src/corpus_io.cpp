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

#include "c2k/corpus_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "c2k/errors.hpp"
#include "c2k/xml.hpp"

namespace c2k {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void schema_error(const XmlElement& elem, const std::string& msg) {
  throw ValidationError("<" + elem.name + "> at line " + std::to_string(elem.line) + ": " + msg);
}

int parse_int_attr(const XmlElement& elem, const std::string& key, const std::string& value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    schema_error(elem, "attribute " + key + " is not an integer: '" + value + "'");
  }
  return out;
}

bool parse_bool_attr(const XmlElement& elem, const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  schema_error(elem, "attribute " + key + " must be true or false, got '" + value + "'");
}

void check_attributes(const XmlElement& elem, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : elem.attributes) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) schema_error(elem, "unknown attribute '" + key + "'");
  }
}

void check_no_text(const XmlElement& elem) {
  if (!trim(elem.text).empty()) schema_error(elem, "unexpected character data");
}

Token read_token(const XmlElement& elem, int index) {
  if (elem.name != "token") schema_error(elem, "expected <token>");
  check_attributes(elem, {"pos", "stem", "comma_after"});
  if (!elem.children.empty()) schema_error(elem, "token must not have child elements");

  Token token;
  token.index = index;
  token.surface = trim(elem.text);
  if (token.surface.empty()) schema_error(elem, "empty token surface");

  const std::string* pos_attr = elem.attribute("pos");
  if (!pos_attr) schema_error(elem, "token '" + token.surface + "' is missing pos");
  auto pos = pos_from_string(*pos_attr);
  if (!pos) {
    schema_error(elem, "token '" + token.surface + "' has unknown pos '" + *pos_attr + "'");
  }
  token.pos = *pos;

  if (const std::string* s = elem.attribute("stem")) {
    token.stem = trim(*s);
    if (token.stem.empty()) schema_error(elem, "token '" + token.surface + "' has empty stem");
  } else {
    token.stem = stem(token.surface);
  }
  if (const std::string* c = elem.attribute("comma_after")) {
    token.comma_after = parse_bool_attr(elem, "comma_after", *c);
  }
  return token;
}

Sentence read_sentence(const XmlElement& elem) {
  check_attributes(elem, {"id", "structure", "indentation", "progression", "handled"});
  check_no_text(elem);

  Sentence sentence;
  const std::string* id = elem.attribute("id");
  if (!id || trim(*id).empty()) schema_error(elem, "sentence is missing id");
  sentence.id = trim(*id);

  if (const std::string* s = elem.attribute("structure")) {
    auto st = structure_from_string(*s);
    if (!st) schema_error(elem, "unknown structure '" + *s + "'");
    sentence.structure = *st;
  }
  if (const std::string* s = elem.attribute("indentation")) {
    int level = parse_int_attr(elem, "indentation", *s);
    if (level < 1) schema_error(elem, "indentation must be >= 1");
    sentence.indentation = level;
  }
  if (const std::string* s = elem.attribute("progression")) {
    auto p = progression_from_string(*s);
    if (!p) schema_error(elem, "unknown progression '" + *s + "'");
    sentence.progression = *p;
  }
  if (const std::string* s = elem.attribute("handled")) {
    sentence.handled = parse_bool_attr(elem, "handled", *s);
  }

  int index = 0;
  for (const auto& child : elem.children) {
    if (child.name == "token") {
      sentence.tokens.push_back(read_token(child, index++));
    } else if (child.name == "topic") {
      check_attributes(child, {"indentation", "progression"});
      check_no_text(child);
      if (!child.children.empty()) schema_error(child, "topic must be empty");
      const std::string* ind = child.attribute("indentation");
      if (!ind) schema_error(child, "topic is missing indentation");
      int level = parse_int_attr(child, "indentation", *ind);
      if (level < 1) schema_error(child, "indentation must be >= 1");
      if (!sentence.indentation) sentence.indentation = level;
      if (const std::string* p = child.attribute("progression")) {
        auto prog = progression_from_string(*p);
        if (!prog) schema_error(child, "unknown progression '" + *p + "'");
        if (!sentence.progression) sentence.progression = *prog;
      }
    } else if (child.name == "rst") {
      check_attributes(child, {"structure", "relation"});
      check_no_text(child);
      if (!child.children.empty()) schema_error(child, "rst must be empty");
      const std::string* structure = child.attribute("structure");
      const std::string* relation = child.attribute("relation");
      if (!structure || !relation) schema_error(child, "rst needs structure and relation");
      try {
        sentence.rhetorical_labels.push_back(make_rhetorical_label(*structure, *relation));
      } catch (const ValidationError& e) {
        schema_error(child, e.what());
      }
    } else {
      schema_error(child, "not allowed inside <sentence>");
    }
  }
  if (sentence.tokens.empty()) {
    schema_error(elem, "sentence " + sentence.id + " has no tokens");
  }
  return sentence;
}

}  // namespace

Corpus ingest_corpus(std::string_view xml) {
  XmlElement root = parse_xml(xml);
  if (root.name != "corpus") {
    throw ValidationError("root element must be <corpus>, got <" + root.name + ">");
  }
  check_attributes(root, {"sources"});
  check_no_text(root);

  Corpus corpus;
  if (const std::string* s = root.attribute("sources")) {
    corpus.source_count = parse_int_attr(root, "sources", *s);
    if (corpus.source_count < 0) schema_error(root, "sources must be non-negative");
  }

  for (const auto& child : root.children) {
    if (child.name == "document") {
      check_attributes(child, {"id"});
      check_no_text(child);
      if (!child.attribute("id")) schema_error(child, "document is missing id");
      for (const auto& elem : child.children) {
        if (elem.name != "sentence") schema_error(elem, "not allowed inside <document>");
        corpus.sentences.push_back(read_sentence(elem));
      }
    } else if (child.name == "term") {
      check_attributes(child, {});
      if (!child.children.empty()) schema_error(child, "term must not have child elements");
      std::string term = trim(child.text);
      if (term.empty()) schema_error(child, "empty term");
      corpus.term_list.push_back(term);
    } else {
      schema_error(child, "not allowed inside <corpus>");
    }
  }
  corpus.validate();
  return corpus;
}

Corpus ingest_corpus_file(const std::string& path) { return ingest_corpus(read_file(path)); }

std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<corpus sources=\"" << corpus.source_count << "\">\n";
  out << "  <document id=\"d1\">\n";
  for (const auto& s : corpus.sentences) {
    out << "    <sentence id=\"" << xml_escape(s.id) << "\"";
    if (s.structure != SentenceStructure::unknown) {
      out << " structure=\"" << structure_name(s.structure) << "\"";
    }
    if (s.indentation) out << " indentation=\"" << *s.indentation << "\"";
    if (s.progression) out << " progression=\"" << progression_name(*s.progression) << "\"";
    if (s.handled) out << " handled=\"" << (*s.handled ? "true" : "false") << "\"";
    out << ">\n";
    for (const auto& t : s.tokens) {
      out << "      <token pos=\"" << pos_name(t.pos) << "\"";
      if (t.stem != stem(t.surface)) out << " stem=\"" << xml_escape(t.stem) << "\"";
      if (t.comma_after) out << " comma_after=\"true\"";
      out << ">" << xml_escape(t.surface) << "</token>\n";
    }
    for (const auto& label : s.rhetorical_labels) {
      out << "      <rst structure=\"" << rhetorical_structure_name(label.structure)
          << "\" relation=\"" << xml_escape(label.relation) << "\"/>\n";
    }
    out << "    </sentence>\n";
  }
  out << "  </document>\n";
  for (const auto& term : corpus.term_list) {
    out << "  <term>" << xml_escape(term) << "</term>\n";
  }
  out << "</corpus>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("failed writing file: " + path);
}

}  // namespace c2k
