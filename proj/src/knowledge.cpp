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

#include "c2k/knowledge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "c2k/corpus_io.hpp"
#include "c2k/errors.hpp"

namespace c2k {

bool PredicateTriple::operator<(const PredicateTriple& o) const {
  if (subject != o.subject) return subject < o.subject;
  if (relation != o.relation) return relation < o.relation;
  if (object != o.object) return object < o.object;
  if (sentence_id != o.sentence_id) return sentence_id < o.sentence_id;
  return registered < o.registered;
}

void RelationRegistry::add(RelationEntry entry) {
  if (entry.predicate.empty()) throw ValidationError("registry entry with empty predicate");
  if (entry.tier1.empty()) throw ValidationError("registry entry with empty tier1");
  entries_.push_back(std::move(entry));
}

const RelationEntry* RelationRegistry::lookup(const std::string& label) const {
  std::string folded = fold_case(label);
  for (const auto& entry : entries_) {
    if (fold_case(entry.predicate) == folded) return &entry;
    if (entry.inverse && fold_case(*entry.inverse) == folded) return &entry;
  }
  return nullptr;
}

std::optional<std::pair<std::string, std::optional<std::string>>>
RelationRegistry::map_predicate_to_tier(const std::string& label) const {
  const RelationEntry* entry = lookup(label);
  if (!entry) return std::nullopt;
  return std::make_pair(entry->tier1, entry->tier2);
}

std::optional<PredicateTriple> RelationRegistry::infer_inverse(
    const PredicateTriple& triple) const {
  std::string folded = fold_case(triple.relation);
  for (const auto& entry : entries_) {
    if (!entry.inverse) continue;
    std::string replacement;
    if (fold_case(entry.predicate) == folded) {
      replacement = *entry.inverse;
    } else if (fold_case(*entry.inverse) == folded) {
      replacement = entry.predicate;
    } else {
      continue;
    }
    PredicateTriple out;
    out.subject = triple.object;
    out.relation = replacement;
    out.object = triple.subject;
    out.sentence_id = triple.sentence_id;
    out.registered = true;
    return out;
  }
  return std::nullopt;
}

RegistryCounts RelationRegistry::counts() const {
  RegistryCounts counts;
  std::set<std::string> predicates;
  std::set<std::string> inverses;
  for (const auto& entry : entries_) {
    ++counts.predicate_rows;
    predicates.insert(fold_case(entry.predicate));
    if (entry.inverse) {
      ++counts.with_inverse;
      inverses.insert(fold_case(*entry.inverse));
    }
  }
  counts.distinct_predicates = static_cast<int>(predicates.size());
  counts.distinct_inverses = static_cast<int>(inverses.size());
  return counts;
}

const RelationRegistry& RelationRegistry::builtin() {
  static const RelationRegistry registry = [] {
    RelationRegistry r;
    auto row = [&r](const char* tier1, const char* tier2, const char* predicate,
                    const char* inverse) {
      RelationEntry entry;
      entry.tier1 = tier1;
      if (tier2 && *tier2) entry.tier2 = tier2;
      entry.predicate = predicate;
      if (inverse && *inverse) entry.inverse = inverse;
      r.add(std::move(entry));
    };
    row("Hierarchy", "", "Have type", "Type of");
    row("Physically Related", "Parts", "Have component", "Component of");
    row("Physically Related", "Constituent Material", "Make", "Made of");
    row("Physically Related", "Constituent Material", "Produce", "Produced by");
    row("Spatial Relations", "Location of Objects", "Take place between", "");
    row("Spatial Relations", "Location of Objects", "Connected to", "");
    row("Spatial Relations", "Location of Objects", "Flows through", "");
    row("Spatial Relations", "Location of Objects", "Have direction", "Direction of");
    row("Spatial Relations", "Location of Activities", "Transfer", "Transferred by");
    row("Spatial Relations", "Location of Activities", "Find", "Found by");
    row("Spatial Relations", "Location of Activities", "Divide", "Divided by");
    row("Spatial Relations", "Location of Activities", "Commence from", "End to");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Affect", "Affected by");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Cause", "Caused by");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Vary in", "");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Resist", "Resisted by");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Force", "Forced by");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Limit", "Limited by");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Opposite to", "");
    row("Causally/Functionally Related", "Effect/Partial Cause", "Related to", "");
    row("Causally/Functionally Related", "Production/Generation", "Produce", "Produced by");
    row("Causally/Functionally Related", "Destruction", "Collide", "Collided by");
    row("Causally/Functionally Related", "Destruction", "Melt", "Melted by");
    row("Causally/Functionally Related", "Manifestation", "Represent", "Represented by");
    row("Instrumental Function/Usage", "Functions", "Carry", "Carried by");
    row("Instrumental Function/Usage", "Functions", "Measure", "Measured by");
    row("Instrumental Function/Usage", "Functions", "Supply", "Supplied by");
    row("Instrumental Function/Usage", "Functions", "Share", "Shared by");
    row("Instrumental Function/Usage", "Functions", "Depend on", "Depended by");
    row("Instrumental Function/Usage", "Functions", "Protect", "Protected by");
    row("Instrumental Function/Usage", "Functions", "Absorb", "Absorbed by");
    row("Instrumental Function/Usage", "Use", "Use", "Used by");
    row("Instrumental Function/Usage", "Use", "Do not use", "Not used by");
    row("Human Role", "", "Deal with", "Dealt by");
    row("Conceptually Related", "Topic", "Govern", "Governed by");
    row("Conceptually Related", "Representation", "Represent", "Represented by");
    row("Conceptually Related", "Representation", "Characterize", "Characterized by");
    row("Conceptually Related", "Property", "Have state", "State of");
    row("Conceptually Related", "Property", "Have unit", "Unit of");
    row("Conceptually Related", "Property", "Have source", "Source of");
    row("Conceptually Related", "Property", "Have Magnitude", "Magnitude of");
    row("Conceptually Related", "Property", "Have Terminal", "Terminal of");
    row("Similarity", "Synonymy", "Is", "Is");
    row("Similarity", "Synonymy", "Referred to", "");
    row("Similarity", "Hyponymy", "Have type", "Type of");
    row("Quantitative Relations", "Numerical Relations", "Proportional", "");
    row("Quantitative Relations", "Numerical Relations", "Inverse proportional to", "");
    row("Quantitative Relations", "Numerical Relations", "Gain", "");
    row("Quantitative Relations", "Numerical Relations", "Lose", "");
    row("Quantitative Relations", "Numerical Relations", "Do not gain", "");
    row("Quantitative Relations", "Numerical Relations", "Do not lose", "");
    row("Instantiation", "", "Have instance", "Instance of");
    row("Extension", "", "Have Extension", "Extension of");
    return r;
  }();
  return registry;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RelationRegistry RelationRegistry::load_tsv(const std::string& content) {
  RelationRegistry registry;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (!header_seen) {
      if (fields.size() < 3 || strip(fields[0]) != "tier1") {
        throw ParseError("registry TSV must start with a 'tier1<TAB>tier2<TAB>predicate"
                         "<TAB>inverse' header row",
                         line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError("registry row needs 3-4 tab-separated fields", line_no);
    }
    RelationEntry entry;
    entry.tier1 = strip(fields[0]);
    std::string tier2 = strip(fields[1]);
    if (!tier2.empty()) entry.tier2 = tier2;
    entry.predicate = strip(fields[2]);
    if (fields.size() == 4) {
      std::string inverse = strip(fields[3]);
      if (!inverse.empty()) entry.inverse = inverse;
    }
    try {
      registry.add(std::move(entry));
    } catch (const ValidationError& e) {
      throw ParseError(std::string(e.what()), line_no);
    }
  }
  if (!header_seen) throw ParseError("empty registry file (missing header row)", line_no);
  return registry;
}

RelationRegistry RelationRegistry::load_tsv_file(const std::string& path) {
  return load_tsv(read_file(path));
}

std::string RelationRegistry::save_tsv() const {
  std::ostringstream out;
  out << "tier1\ttier2\tpredicate\tinverse\n";
  for (const auto& entry : entries_) {
    out << entry.tier1 << "\t" << (entry.tier2 ? *entry.tier2 : "") << "\t" << entry.predicate
        << "\t" << (entry.inverse ? *entry.inverse : "") << "\n";
  }
  return out.str();
}

void RelationLexicon::add(const std::string& verb_key, const std::string& relation) {
  mapping_[fold_case(verb_key)] = relation;
}

std::optional<std::string> RelationLexicon::find(const std::string& verb_key) const {
  auto it = mapping_.find(fold_case(verb_key));
  if (it == mapping_.end()) return std::nullopt;
  return it->second;
}

RelationLexicon RelationLexicon::load_tsv(const std::string& content) {
  RelationLexicon lexicon;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (!header_seen) {
      if (fields.size() < 2 || strip(fields[0]) != "verb") {
        throw ParseError("relation lexicon must start with a 'verb<TAB>relation' header row",
                         line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError("relation lexicon row needs 2 tab-separated fields", line_no);
    }
    lexicon.add(strip(fields[0]), strip(fields[1]));
  }
  if (!header_seen) throw ParseError("empty relation lexicon (missing header row)", line_no);
  return lexicon;
}

RelationLexicon RelationLexicon::load_tsv_file(const std::string& path) {
  return load_tsv(read_file(path));
}

namespace {

struct CoordParts {
  const DerivationNode* left = nullptr;       // first conjunct
  const DerivationNode* right = nullptr;      // second conjunct
  const DerivationNode* coordinator = nullptr;
};

// A coordinated phrase is bwd_app(X, coord(conj, X)).
std::optional<CoordParts> as_coordination(const DerivationNode& node) {
  if (node.rule != Combinator::bwd_app || !node.left || !node.right) return std::nullopt;
  if (node.right->rule != Combinator::coord) return std::nullopt;
  CoordParts parts;
  parts.left = node.left.get();
  parts.coordinator = node.right->left.get();
  parts.right = node.right->right.get();
  return parts;
}

void collect_noun_stems(const DerivationNode& node, const Sentence& sentence,
                        std::vector<std::string>& out) {
  if (node.rule == Combinator::leaf) {
    const Token& t = sentence.tokens[static_cast<std::size_t>(node.token_index)];
    if (t.pos == Pos::noun || t.pos == Pos::pronoun) out.push_back(fold_case(t.stem));
    return;
  }
  if (node.left) collect_noun_stems(*node.left, sentence, out);
  if (node.right) collect_noun_stems(*node.right, sentence, out);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ";
    out += parts[i];
  }
  return out;
}

struct HeadSet {
  std::vector<std::string> labels;
  // or-coordinated conjunct pairs for synonymy triples
  std::vector<std::pair<std::string, std::string>> synonym_pairs;
};

HeadSet phrase_heads(const DerivationNode& node, const Sentence& sentence) {
  if (auto coord = as_coordination(node)) {
    HeadSet left = phrase_heads(*coord->left, sentence);
    HeadSet right = phrase_heads(*coord->right, sentence);
    HeadSet out;
    out.labels = left.labels;
    out.labels.insert(out.labels.end(), right.labels.begin(), right.labels.end());
    out.synonym_pairs = left.synonym_pairs;
    out.synonym_pairs.insert(out.synonym_pairs.end(), right.synonym_pairs.begin(),
                             right.synonym_pairs.end());
    const Token& c =
        sentence.tokens[static_cast<std::size_t>(coord->coordinator->token_index)];
    if (fold_case(c.surface) == "or") {
      for (const auto& a : left.labels) {
        for (const auto& b : right.labels) out.synonym_pairs.emplace_back(a, b);
      }
    }
    return out;
  }
  std::vector<std::string> stems;
  collect_noun_stems(node, sentence, stems);
  HeadSet out;
  if (!stems.empty()) {
    out.labels.push_back(join(stems));
  } else {
    // no nominal leaf; fall back to the span's folded stems
    std::vector<std::string> all;
    for (int i = node.start; i < node.end; ++i) {
      const Token& t = sentence.tokens[static_cast<std::size_t>(i)];
      if (t.pos == Pos::determiner) continue;
      all.push_back(fold_case(t.stem));
    }
    out.labels.push_back(all.empty() ? fold_case(sentence.tokens[static_cast<std::size_t>(
                                           node.start)].stem)
                                     : join(all));
  }
  return out;
}

const DerivationNode* leftmost_leaf_of_functor(const DerivationNode* node) {
  while (node && node->rule != Combinator::leaf) {
    switch (node->rule) {
      case Combinator::fwd_app:
      case Combinator::fwd_comp:
        node = node->left.get();
        break;
      case Combinator::bwd_app:
      case Combinator::bwd_comp:
        node = node->right.get();
        break;
      default:
        node = node->left.get();
        break;
    }
  }
  return node;
}

struct PredicateSite {
  const DerivationNode* verb_leaf = nullptr;
  const DerivationNode* object = nullptr;   // np or pp argument; may stay null
  std::string preposition;                  // folded surface when object is a pp
};

// Follows the verb-phrase spine to its deepest object-consuming application.
void walk_vp(const DerivationNode& node, const Sentence& sentence,
             std::vector<PredicateSite>& out, PredicateSite current) {
  if (node.rule == Combinator::leaf) {
    const Token& t = sentence.tokens[static_cast<std::size_t>(node.token_index)];
    if (t.pos == Pos::verb || t.pos == Pos::modal) {
      current.verb_leaf = &node;
      out.push_back(current);
    }
    return;
  }
  if (auto coord = as_coordination(node)) {
    walk_vp(*coord->left, sentence, out, current);
    walk_vp(*coord->right, sentence, out, current);
    return;
  }
  switch (node.rule) {
    case Combinator::fwd_app: {
      const Cat& arg = node.right->cat;
      if (cat_equal(arg, cat_np()) || cat_equal(arg, cat_pp())) {
        current.object = node.right.get();
        current.preposition.clear();
        if (cat_equal(arg, cat_pp())) {
          const DerivationNode* prep = leftmost_leaf_of_functor(node.right.get());
          if (prep) {
            current.preposition =
                fold_case(sentence.tokens[static_cast<std::size_t>(prep->token_index)].surface);
          }
        }
        walk_vp(*node.left, sentence, out, current);
        return;
      }
      // modal/copula functor over an inner verb phrase
      if (!arg->is_atomic()) {
        walk_vp(*node.right, sentence, out, current);
        return;
      }
      walk_vp(*node.left, sentence, out, current);
      return;
    }
    case Combinator::bwd_app:
      // modifier on the right; the core phrase is on the left
      walk_vp(*node.left, sentence, out, current);
      return;
    case Combinator::fwd_comp:
      walk_vp(*node.left, sentence, out, current);
      return;
    case Combinator::bwd_comp:
      walk_vp(*node.right, sentence, out, current);
      return;
    default:
      if (node.left) walk_vp(*node.left, sentence, out, current);
      return;
  }
}

struct Clause {
  const DerivationNode* subject = nullptr;
  std::vector<PredicateSite> predicates;
};

void find_clauses(const DerivationNode& node, const Sentence& sentence,
                  std::vector<Clause>& clauses) {
  static const Cat kVP = Category::parse("s\\np");
  if (node.rule == Combinator::bwd_app && node.left && node.right &&
      cat_equal(node.left->cat, cat_np()) && cat_equal(node.right->cat, kVP)) {
    Clause clause;
    clause.subject = node.left.get();
    walk_vp(*node.right, sentence, clause.predicates, PredicateSite{});
    clauses.push_back(std::move(clause));
    // subjects can embed further clauses; fall through to recursion
  }
  if (node.left) find_clauses(*node.left, sentence, clauses);
  if (node.right) find_clauses(*node.right, sentence, clauses);
}

}  // namespace

std::vector<PredicateTriple> extract_triples(const Derivation& derivation,
                                             const Sentence& sentence,
                                             const RelationLexicon& relation_lexicon,
                                             const RelationRegistry& registry) {
  std::vector<PredicateTriple> out;
  if (!derivation.root) return out;

  std::string is_label = "Is";
  if (const RelationEntry* is_entry = registry.lookup("is")) is_label = is_entry->predicate;

  std::vector<Clause> clauses;
  find_clauses(*derivation.root, sentence, clauses);

  auto push_unique = [&out](PredicateTriple triple) {
    if (std::find(out.begin(), out.end(), triple) == out.end()) out.push_back(std::move(triple));
  };

  for (const auto& clause : clauses) {
    HeadSet subjects = phrase_heads(*clause.subject, sentence);
    for (const auto& [a, b] : subjects.synonym_pairs) {
      PredicateTriple triple;
      triple.subject = a;
      triple.relation = is_label;
      triple.object = b;
      triple.sentence_id = sentence.id;
      triple.registered = registry.lookup(is_label) != nullptr;
      push_unique(std::move(triple));
    }
    for (const auto& site : clause.predicates) {
      if (!site.verb_leaf) continue;
      const Token& verb =
          sentence.tokens[static_cast<std::size_t>(site.verb_leaf->token_index)];
      std::string verb_stem = fold_case(verb.stem);

      if (!site.object) continue;  // no object, no predicate triple

      std::optional<std::string> label;
      if (!site.preposition.empty()) {
        label = relation_lexicon.find(verb_stem + " " + site.preposition);
      }
      if (!label) label = relation_lexicon.find(verb_stem);

      HeadSet objects = phrase_heads(*site.object, sentence);
      for (const auto& [a, b] : objects.synonym_pairs) {
        PredicateTriple triple;
        triple.subject = a;
        triple.relation = is_label;
        triple.object = b;
        triple.sentence_id = sentence.id;
        triple.registered = registry.lookup(is_label) != nullptr;
        push_unique(std::move(triple));
      }
      for (const auto& subject : subjects.labels) {
        for (const auto& object : objects.labels) {
          PredicateTriple triple;
          triple.subject = subject;
          triple.object = object;
          triple.sentence_id = sentence.id;
          if (label) {
            triple.relation = *label;
            triple.registered = registry.lookup(*label) != nullptr;
          } else {
            triple.relation = verb_stem;
            triple.registered = false;
          }
          push_unique(std::move(triple));
        }
      }
    }
  }
  return out;
}

void ConceptMap::validate() const {
  for (const auto& [label, node] : nodes) {
    if (node.level != level) {
      throw ValidationError("concept '" + label + "' has level " +
                            std::to_string(node.level) + " in a level-" +
                            std::to_string(level) + " map");
    }
  }
  for (const auto& edge : edges) {
    if (!nodes.count(edge.subject)) {
      throw ValidationError("edge subject '" + edge.subject + "' is not a node");
    }
    if (!nodes.count(edge.object)) {
      throw ValidationError("edge object '" + edge.object + "' is not a node");
    }
  }
}

ConceptMap build_level0(const std::vector<PredicateTriple>& triples) {
  ConceptMap map;
  map.level = 0;
  for (const auto& triple : triples) {
    map.nodes.emplace(triple.subject, Concept{triple.subject, 0, std::nullopt});
    map.nodes.emplace(triple.object, Concept{triple.object, 0, std::nullopt});
    map.edges.push_back(triple);
  }
  map.validate();
  return map;
}

ConceptMap group_concepts(const ConceptMap& map, const std::map<std::string, std::string>& grouping,
                          const std::vector<PredicateTriple>& group_edges) {
  if (map.level >= 3) throw PreconditionError("concept maps stop at level 3");
  std::vector<std::string> ungrouped;
  for (const auto& [label, node] : map.nodes) {
    if (!grouping.count(label)) ungrouped.push_back(label);
  }
  if (!ungrouped.empty()) {
    std::string msg = "grouping does not cover: ";
    for (std::size_t i = 0; i < ungrouped.size(); ++i) {
      if (i) msg += ", ";
      msg += ungrouped[i];
    }
    throw ValidationError(msg);
  }
  ConceptMap out;
  out.level = map.level + 1;
  for (const auto& [label, group] : grouping) {
    if (!map.nodes.count(label)) continue;
    out.nodes.emplace(group, Concept{group, out.level, std::nullopt});
  }
  out.edges = group_edges;
  out.validate();
  if (out.nodes.size() > map.nodes.size()) {
    throw ValidationError("grouping increased the node count");
  }
  return out;
}

bool OntologyStack::has_concept(const std::string& label) const {
  for (const auto& level : levels) {
    if (level.nodes.count(label)) return true;
  }
  return false;
}

std::string ontology_to_json(const OntologyStack& stack) {
  nlohmann::ordered_json doc;
  doc["levels"] = nlohmann::ordered_json::array();
  for (const auto& map : stack.levels) {
    nlohmann::ordered_json level;
    level["level"] = map.level;
    level["nodes"] = nlohmann::ordered_json::array();
    for (const auto& [label, entry] : map.nodes) {
      nlohmann::ordered_json node;
      node["label"] = label;
      if (entry.group) node["group"] = *entry.group;
      level["nodes"].push_back(node);
    }
    level["edges"] = nlohmann::ordered_json::array();
    for (const auto& edge : map.edges) {
      nlohmann::ordered_json e;
      e["subject"] = edge.subject;
      e["relation"] = edge.relation;
      e["object"] = edge.object;
      e["sentence_id"] = edge.sentence_id;
      e["registered"] = edge.registered;
      level["edges"].push_back(e);
    }
    doc["levels"].push_back(level);
  }
  return doc.dump(2) + "\n";
}

OntologyStack ontology_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ontology JSON: ") + e.what());
  }
  OntologyStack stack;
  if (!doc.contains("levels") || !doc["levels"].is_array()) {
    throw ValidationError("ontology JSON needs a 'levels' array");
  }
  for (const auto& level : doc["levels"]) {
    ConceptMap map;
    map.level = level.value("level", 0);
    for (const auto& node : level.value("nodes", nlohmann::json::array())) {
      Concept entry;
      entry.label = node.value("label", "");
      if (entry.label.empty()) throw ValidationError("ontology node without label");
      entry.level = map.level;
      if (node.contains("group")) entry.group = node["group"].get<std::string>();
      map.nodes.emplace(entry.label, std::move(entry));
    }
    for (const auto& e : level.value("edges", nlohmann::json::array())) {
      PredicateTriple edge;
      edge.subject = e.value("subject", "");
      edge.relation = e.value("relation", "");
      edge.object = e.value("object", "");
      edge.sentence_id = e.value("sentence_id", "");
      edge.registered = e.value("registered", true);
      map.edges.push_back(std::move(edge));
    }
    map.validate();
    stack.levels.push_back(std::move(map));
  }
  return stack;
}

OntologyStack ontology_from_json_file(const std::string& path) {
  return ontology_from_json(read_file(path));
}

KnowledgeCurves knowledge_saturation(
    const Corpus& corpus, const SamplePartition& partition,
    const std::map<std::string, std::vector<PredicateTriple>>& triples_by_sentence) {
  std::map<std::string, std::vector<std::string>> concepts;
  std::map<std::string, std::vector<std::string>> relations;
  for (const auto& [sentence_id, triples] : triples_by_sentence) {
    for (const auto& triple : triples) {
      concepts[sentence_id].push_back(triple.subject);
      concepts[sentence_id].push_back(triple.object);
      relations[sentence_id].push_back(fold_case(triple.relation));
    }
  }
  KnowledgeCurves curves;
  curves.concepts = saturation_curve(corpus, partition, ItemSelector::labels("concept", concepts));
  curves.relations =
      saturation_curve(corpus, partition, ItemSelector::labels("relation", relations));
  return curves;
}

Rational ontology_mapping_rate(const std::vector<SentenceExtraction>& extractions,
                               const OntologyStack& ontology) {
  int parsed = 0;
  int mapped = 0;
  for (const auto& extraction : extractions) {
    if (!extraction.parsed) continue;
    ++parsed;
    bool ok = true;
    for (const auto& triple : extraction.triples) {
      if (!triple.registered || !ontology.has_concept(triple.subject) ||
          !ontology.has_concept(triple.object)) {
        ok = false;
        break;
      }
    }
    if (ok) ++mapped;
  }
  if (parsed == 0) throw PreconditionError("mapping rate needs at least one parsed sentence");
  return Rational(mapped, parsed);
}

std::string triples_csv(const std::vector<PredicateTriple>& triples) {
  std::ostringstream out;
  out << "subject,relation,object,sentence_id\n";
  for (const auto& triple : triples) {
    out << triple.subject << "," << triple.relation << "," << triple.object << ","
        << triple.sentence_id << "\n";
  }
  return out.str();
}

}  // namespace c2k
