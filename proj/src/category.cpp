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

#include "c2k/category.hpp"

#include <array>
#include <cctype>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

const std::array<std::string, 6> kAtomNames = {"s", "np", "n", "pp", "part", "conj"};

}  // namespace

const std::string& atom_name(Atom a) { return kAtomNames[static_cast<std::size_t>(a)]; }

Cat Category::atomic(Atom a) {
  static const std::array<Cat, 6> kAtoms = {
      Cat(new Category(Atom::s)),    Cat(new Category(Atom::np)),
      Cat(new Category(Atom::n)),    Cat(new Category(Atom::pp)),
      Cat(new Category(Atom::part)), Cat(new Category(Atom::conj)),
  };
  return kAtoms[static_cast<std::size_t>(a)];
}

Cat cat_s() { return Category::atomic(Atom::s); }
Cat cat_np() { return Category::atomic(Atom::np); }
Cat cat_n() { return Category::atomic(Atom::n); }
Cat cat_pp() { return Category::atomic(Atom::pp); }
Cat cat_part() { return Category::atomic(Atom::part); }
Cat cat_conj() { return Category::atomic(Atom::conj); }

Cat Category::make(Cat result, Slash slash, Cat argument) {
  return Cat(new Category(std::move(result), slash, std::move(argument)));
}

Atom Category::head_atom() const {
  const Category* c = this;
  while (!c->is_atomic()) c = c->result_.get();
  return c->atom_;
}

bool Category::equals(const Category& o) const {
  if (is_atomic() != o.is_atomic()) return false;
  if (is_atomic()) return atom_ == o.atom_;
  return slash_ == o.slash_ && result_->equals(*o.result_) && argument_->equals(*o.argument_);
}

bool operator==(const Category& a, const Category& b) { return a.equals(b); }

std::string Category::to_string() const {
  if (is_atomic()) return atom_name(atom_);
  std::string out = result_->to_string();
  out.push_back(slash_ == Slash::forward ? '/' : '\\');
  if (argument_->is_atomic()) {
    out += argument_->to_string();
  } else {
    out += "(" + argument_->to_string() + ")";
  }
  return out;
}

namespace {

class CatParser {
 public:
  explicit CatParser(std::string_view text) : in_(text) {}

  Cat parse() {
    Cat cat = parse_expr();
    skip_ws();
    if (pos_ != in_.size()) {
      throw ValidationError("trailing input in category: '" + std::string(in_) + "'");
    }
    return cat;
  }

 private:
  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  Cat parse_expr() {
    Cat left = parse_part();
    for (;;) {
      skip_ws();
      if (pos_ >= in_.size() || (in_[pos_] != '/' && in_[pos_] != '\\')) return left;
      Slash slash = in_[pos_] == '/' ? Slash::forward : Slash::backward;
      ++pos_;
      Cat right = parse_part();
      left = Category::make(std::move(left), slash, std::move(right));
    }
  }

  Cat parse_part() {
    skip_ws();
    if (pos_ >= in_.size()) throw ValidationError("truncated category: '" + std::string(in_) + "'");
    if (in_[pos_] == '(') {
      ++pos_;
      Cat inner = parse_expr();
      skip_ws();
      if (pos_ >= in_.size() || in_[pos_] != ')') {
        throw ValidationError("missing ')' in category: '" + std::string(in_) + "'");
      }
      ++pos_;
      return inner;
    }
    std::string name;
    while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) {
      name.push_back(in_[pos_++]);
    }
    for (std::size_t i = 0; i < kAtomNames.size(); ++i) {
      if (kAtomNames[i] == name) return Category::atomic(static_cast<Atom>(i));
    }
    throw ValidationError("unknown category atom '" + name + "' in '" + std::string(in_) + "'");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

Cat Category::parse(std::string_view text) { return CatParser(text).parse(); }

bool contains_atom(const Cat& cat, Atom atom) {
  if (!cat) return false;
  if (cat->is_atomic()) return cat->atom() == atom;
  return contains_atom(cat->result(), atom) || contains_atom(cat->argument(), atom);
}

}  // namespace c2k
