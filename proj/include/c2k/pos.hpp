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

#ifndef C2K_POS_HPP
#define C2K_POS_HPP

#include <array>
#include <optional>
#include <string>

namespace c2k {

// The nine-way part-of-speech tag set used by the corpus annotation.
enum class Pos {
  noun,
  pronoun,
  verb,
  adverb,
  adjective,
  preposition,
  coordinator,
  determiner,
  modal,
};

inline constexpr std::array<Pos, 9> kAllPos = {
    Pos::noun,       Pos::pronoun,     Pos::verb,       Pos::adverb, Pos::adjective,
    Pos::preposition, Pos::coordinator, Pos::determiner, Pos::modal,
};

const std::string& pos_name(Pos pos);
std::optional<Pos> pos_from_string(const std::string& name);

}  // namespace c2k

#endif  // C2K_POS_HPP
