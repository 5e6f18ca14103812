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

#include "c2k/xml.hpp"

#include <cctype>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  XmlElement parse_document() {
    skip_misc();
    if (eof()) fail("document has no root element");
    XmlElement root = parse_element();
    skip_misc();
    if (!eof()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  bool eof() const { return pos_ >= in_.size(); }

  char peek() const { return in_[pos_]; }

  char take() {
    char c = in_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  void skip_until(std::string_view end, const char* what) {
    while (!eof()) {
      if (starts_with(end)) {
        for (std::size_t i = 0; i < end.size(); ++i) take();
        return;
      }
      take();
    }
    fail(std::string("unterminated ") + what);
  }

  // whitespace, comments, declaration/processing instructions
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!DOCTYPE")) {
        skip_until(">", "doctype");
      } else {
        return;
      }
    }
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':';
  }

  std::string parse_name() {
    std::string name;
    while (!eof() && is_name_char(peek())) name.push_back(take());
    if (name.empty()) fail("expected a name");
    return name;
  }

  std::string parse_entity() {
    // '&' already consumed
    std::string ent;
    while (!eof() && peek() != ';') {
      ent.push_back(take());
      if (ent.size() > 8) fail("unterminated entity reference");
    }
    if (eof()) fail("unterminated entity reference");
    take();  // ';'
    if (ent == "amp") return "&";
    if (ent == "lt") return "<";
    if (ent == "gt") return ">";
    if (ent == "quot") return "\"";
    if (ent == "apos") return "'";
    if (!ent.empty() && ent[0] == '#') {
      int base = 10;
      std::size_t start = 1;
      if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
        base = 16;
        start = 2;
      }
      long code = 0;
      if (start >= ent.size()) fail("empty character reference");
      for (std::size_t i = start; i < ent.size(); ++i) {
        int digit;
        char c = ent[i];
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (base == 16 && c >= 'a' && c <= 'f') digit = 10 + c - 'a';
        else if (base == 16 && c >= 'A' && c <= 'F') digit = 10 + c - 'A';
        else { fail("bad character reference: &" + ent + ";"); }
        code = code * base + digit;
        if (code > 0x10FFFF) fail("character reference out of range");
      }
      return encode_utf8(code);
    }
    fail("unknown entity: &" + ent + ";");
  }

  static std::string encode_utf8(long code) {
    std::string out;
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
    return out;
  }

  std::string parse_attr_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) fail("expected a quoted attribute value");
    char quote = take();
    std::string value;
    for (;;) {
      if (eof()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        take();
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        take();
        value += parse_entity();
      } else {
        value.push_back(take());
      }
    }
  }

  XmlElement parse_element() {
    expect('<');
    XmlElement elem;
    elem.line = line_;
    elem.name = parse_name();
    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated start tag <" + elem.name + ">");
      if (peek() == '/') {
        take();
        expect('>');
        return elem;  // self-closing
      }
      if (peek() == '>') {
        take();
        break;
      }
      std::string key = parse_name();
      for (const auto& [k, v] : elem.attributes) {
        if (k == key) fail("duplicate attribute '" + key + "' on <" + elem.name + ">");
      }
      skip_ws();
      expect('=');
      skip_ws();
      elem.attributes.emplace_back(key, parse_attr_value());
    }
    // content
    for (;;) {
      if (eof()) fail("missing end tag </" + elem.name + ">");
      if (starts_with("</")) {
        take();
        take();
        std::string closing = parse_name();
        if (closing != elem.name) {
          fail("end tag </" + closing + "> does not match <" + elem.name + ">");
        }
        skip_ws();
        expect('>');
        return elem;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
        continue;
      }
      if (peek() == '<') {
        elem.children.push_back(parse_element());
        continue;
      }
      if (peek() == '&') {
        take();
        elem.text += parse_entity();
        continue;
      }
      elem.text.push_back(take());
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

XmlElement parse_xml(std::string_view input) { return Parser(input).parse_document(); }

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace c2k
