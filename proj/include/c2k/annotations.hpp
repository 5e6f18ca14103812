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

#ifndef C2K_ANNOTATIONS_HPP
#define C2K_ANNOTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace c2k {

// Three groups of rhetorical annotation, with a closed vocabulary of
// nineteen relations distributed over them.
enum class RhetoricalStructure {
  text_structure,
  textual_expression,
  information_structure,
};

struct RhetoricalLabel {
  RhetoricalStructure structure;
  std::string relation;  // canonical spelling, e.g. "Cause-effect"

  bool operator==(const RhetoricalLabel& o) const {
    return structure == o.structure && relation == o.relation;
  }
};

const std::string& rhetorical_structure_name(RhetoricalStructure s);
std::optional<RhetoricalStructure> rhetorical_structure_from_string(const std::string& name);

// The nineteen relations in display order, each with its owning structure.
const std::vector<RhetoricalLabel>& rhetorical_vocabulary();

// Canonical label for (structure, relation); ValidationError when the
// relation is unknown or does not belong to the given structure.
RhetoricalLabel make_rhetorical_label(const std::string& structure, const std::string& relation);

enum class Progression { parallel, sequential, extended_parallel };

const std::string& progression_name(Progression p);
std::optional<Progression> progression_from_string(const std::string& name);

}  // namespace c2k

#endif  // C2K_ANNOTATIONS_HPP
