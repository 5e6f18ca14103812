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

#ifndef C2K_KNOWLEDGE_HPP
#define C2K_KNOWLEDGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2k/ccg.hpp"
#include "c2k/corpus.hpp"
#include "c2k/rational.hpp"
#include "c2k/representativeness.hpp"

namespace c2k {

struct Concept {
  std::string label;
  int level = 0;  // 0..3
  std::optional<std::string> group;  // parent label at level + 1

  bool operator==(const Concept& o) const {
    return label == o.label && level == o.level && group == o.group;
  }
};

struct PredicateTriple {
  std::string subject;
  std::string relation;
  std::string object;
  std::string sentence_id;
  bool registered = true;  // false flags an unknown relation label

  bool operator==(const PredicateTriple& o) const {
    return subject == o.subject && relation == o.relation && object == o.object &&
           sentence_id == o.sentence_id && registered == o.registered;
  }
  bool operator<(const PredicateTriple& o) const;
};

// One predicate relation with its place in the two-tier framework.
struct RelationEntry {
  std::string tier1;                  // e.g. "Physically Related"
  std::optional<std::string> tier2;   // e.g. "Parts"
  std::string predicate;              // e.g. "Have component"
  std::optional<std::string> inverse; // e.g. "Component of"
};

struct RegistryCounts {
  int predicate_rows = 0;      // predicate labels as listed (with duplicates)
  int distinct_predicates = 0;
  int with_inverse = 0;
  int distinct_inverses = 0;
};

class RelationRegistry {
 public:
  static const RelationRegistry& builtin();
  static RelationRegistry load_tsv(const std::string& content);
  static RelationRegistry load_tsv_file(const std::string& path);
  std::string save_tsv() const;

  void add(RelationEntry entry);

  const std::vector<RelationEntry>& entries() const { return entries_; }

  // Case-insensitive lookup over predicates and inverses; first match in
  // listing order (duplicate labels resolve to their first row).
  const RelationEntry* lookup(const std::string& label) const;

  // (tier1, tier2) for a registered label; nullopt when unknown.
  std::optional<std::pair<std::string, std::optional<std::string>>> map_predicate_to_tier(
      const std::string& label) const;

  // Subject/object swap with the paired inverse label; nullopt when the
  // relation has no inverse pairing.
  std::optional<PredicateTriple> infer_inverse(const PredicateTriple& triple) const;

  RegistryCounts counts() const;

 private:
  std::vector<RelationEntry> entries_;
};

// verb key (lemma, optionally "lemma preposition") -> registered relation label
class RelationLexicon {
 public:
  static RelationLexicon load_tsv(const std::string& content);
  static RelationLexicon load_tsv_file(const std::string& path);

  void add(const std::string& verb_key, const std::string& relation);
  std::optional<std::string> find(const std::string& verb_key) const;
  const std::map<std::string, std::string>& mapping() const { return mapping_; }

 private:
  std::map<std::string, std::string> mapping_;  // folded key -> relation label
};

// Subject-relation-object triples from a root-s derivation. Coordinated
// noun phrases distribute; "or"-coordinated heads additionally yield a
// synonymy (Is) triple. Verbs without a relation-lexicon mapping keep
// their lemma as the relation, flagged unregistered.
std::vector<PredicateTriple> extract_triples(const Derivation& derivation,
                                             const Sentence& sentence,
                                             const RelationLexicon& relation_lexicon,
                                             const RelationRegistry& registry);

struct ConceptMap {
  int level = 0;
  std::map<std::string, Concept> nodes;  // keyed by label
  std::vector<PredicateTriple> edges;

  void validate() const;  // edge endpoints must be nodes
};

ConceptMap build_level0(const std::vector<PredicateTriple>& triples);

// Level k+1 map from a total grouping of level-k nodes; ValidationError
// listing ungrouped concepts when the grouping is partial.
ConceptMap group_concepts(const ConceptMap& map, const std::map<std::string, std::string>& grouping,
                          const std::vector<PredicateTriple>& group_edges);

struct OntologyStack {
  std::vector<ConceptMap> levels;  // level 0 first

  bool has_concept(const std::string& label) const;
};

std::string ontology_to_json(const OntologyStack& stack);
OntologyStack ontology_from_json(const std::string& json_text);
OntologyStack ontology_from_json_file(const std::string& path);

struct KnowledgeCurves {
  SaturationCurve concepts;
  SaturationCurve relations;
};

KnowledgeCurves knowledge_saturation(
    const Corpus& corpus, const SamplePartition& partition,
    const std::map<std::string, std::vector<PredicateTriple>>& triples_by_sentence);

struct SentenceExtraction {
  std::string sentence_id;
  bool parsed = false;
  std::vector<PredicateTriple> triples;
};

// Fraction of parsed sentences whose triples are all registered and whose
// concepts all exist in the ontology. PreconditionError when nothing parsed.
Rational ontology_mapping_rate(const std::vector<SentenceExtraction>& extractions,
                               const OntologyStack& ontology);

std::string triples_csv(const std::vector<PredicateTriple>& triples);

}  // namespace c2k

#endif  // C2K_KNOWLEDGE_HPP
