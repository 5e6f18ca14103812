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

#ifndef C2K_CATEGORY_HPP
#define C2K_CATEGORY_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace c2k {

enum class Atom { s, np, n, pp, part, conj };

enum class Slash { forward, backward };  // '/' seeks right, '\' seeks left

class Category;
using Cat = std::shared_ptr<const Category>;

// Immutable slash category: an atom, or result/argument pair with a
// direction. Equality is structural. Slash notation is left-associative:
// "np/n/np" reads ((np/n)/np).
class Category {
 public:
  static Cat atomic(Atom a);
  static Cat make(Cat result, Slash slash, Cat argument);

  // Parses slash notation ("s\np", "(s\np)/(s\np)", "np/n/np").
  // Throws ValidationError on malformed input.
  static Cat parse(std::string_view text);

  bool is_atomic() const { return !result_; }
  Atom atom() const { return atom_; }
  const Cat& result() const { return result_; }
  const Cat& argument() const { return argument_; }
  Slash slash() const { return slash_; }

  // Innermost result atom: s for (s\np)/np, np for np/n.
  Atom head_atom() const;

  // Minimal-parenthesis slash notation; parse(to_string(c)) == c.
  std::string to_string() const;

  bool equals(const Category& o) const;

 private:
  Category(Atom a) : atom_(a) {}
  Category(Cat result, Slash slash, Cat argument)
      : atom_(Atom::s), result_(std::move(result)), slash_(slash), argument_(std::move(argument)) {}

  Atom atom_;
  Cat result_;
  Slash slash_ = Slash::forward;
  Cat argument_;
};

bool operator==(const Category& a, const Category& b);
inline bool operator!=(const Category& a, const Category& b) { return !(a == b); }

inline bool cat_equal(const Cat& a, const Cat& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->equals(*b);
}

const std::string& atom_name(Atom a);

// Shared singletons for the six atoms.
Cat cat_s();
Cat cat_np();
Cat cat_n();
Cat cat_pp();
Cat cat_part();
Cat cat_conj();

bool contains_atom(const Cat& cat, Atom atom);

}  // namespace c2k

#endif  // C2K_CATEGORY_HPP
