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

#ifndef C2K_XML_HPP
#define C2K_XML_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c2k {

// Element tree for the small XML subset the corpus format needs:
// elements, attributes, character data, comments, an optional declaration,
// and the five predefined entities plus numeric character references.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;  // document order
  std::vector<XmlElement> children;
  std::string text;  // concatenated character data, entity-decoded
  int line = 0;      // 1-based line of the start tag

  const std::string* attribute(const std::string& key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

// Parses a complete document and returns its root element.
// Throws ParseError with a line number on malformed input.
XmlElement parse_xml(std::string_view input);

std::string xml_escape(const std::string& text);

}  // namespace c2k

#endif  // C2K_XML_HPP
