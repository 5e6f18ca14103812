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

#include "c2k/ccg.hpp"

#include <algorithm>
#include <sstream>

#include "c2k/errors.hpp"

namespace c2k {

namespace {

bool ends_with(const std::string& s, const char* suffix) {
  std::size_t n = std::char_traits<char>::length(suffix);
  return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool is_participle_form(const std::string& folded) {
  return ends_with(folded, "ing") || ends_with(folded, "ed") || ends_with(folded, "en");
}

bool is_comparative_form(const std::string& folded) { return ends_with(folded, "er"); }

bool sentence_has_comma(const Sentence& sentence) {
  for (const auto& t : sentence.tokens) {
    if (t.comma_after) return true;
  }
  return false;
}

bool comma_after(const Sentence& sentence, int index) {
  return index >= 0 && index < static_cast<int>(sentence.tokens.size()) &&
         sentence.tokens[static_cast<std::size_t>(index)].comma_after;
}

bool span_has_comparative(const Sentence& sentence, int start, int end) {
  for (int i = start; i < end; ++i) {
    const Token& t = sentence.tokens[static_cast<std::size_t>(i)];
    if (t.pos == Pos::adjective && is_comparative_form(fold_case(t.surface))) return true;
  }
  return false;
}

// an argument slot whose category is the bare particle atom
bool is_particle_seeking(const Cat& cat) {
  return !cat->is_atomic() && cat->argument()->is_atomic() &&
         cat->argument()->atom() == Atom::part;
}

bool has_particle_atom(const std::vector<Cat>& cats) {
  for (const auto& c : cats) {
    if (c->is_atomic() && c->atom() == Atom::part) return true;
  }
  return false;
}

bool has_particle_seeker(const std::vector<Cat>& cats) {
  for (const auto& c : cats) {
    if (is_particle_seeking(c)) return true;
  }
  return false;
}

void add_unique(std::vector<Cat>& cats, const Cat& cat) {
  for (const auto& c : cats) {
    if (cat_equal(c, cat)) return;
  }
  cats.push_back(cat);
}

}  // namespace

GrammarConfig GrammarConfig::all_disabled() {
  GrammarConfig c;
  c.modals = c.adjective_stacking = c.fronted_pp = c.particles = c.complementizer =
      c.final_adverb = c.noun_coordination = c.gerund_as_noun = c.verbless_template = false;
  return c;
}

GrammarConfig GrammarConfig::only(const std::string& extension) {
  GrammarConfig c = all_disabled();
  bool* flag = extension_flag(c, extension);
  if (!flag) throw ValidationError("unknown grammar extension: " + extension);
  *flag = true;
  return c;
}

const std::vector<std::string>& extension_names() {
  static const std::vector<std::string> kNames = {
      "modals",        "adjective_stacking", "fronted_pp",        "particles",
      "complementizer", "final_adverb",       "noun_coordination", "gerund_as_noun",
      "verbless_template"};
  return kNames;
}

bool* extension_flag(GrammarConfig& config, const std::string& name) {
  if (name == "modals") return &config.modals;
  if (name == "adjective_stacking") return &config.adjective_stacking;
  if (name == "fronted_pp") return &config.fronted_pp;
  if (name == "particles") return &config.particles;
  if (name == "complementizer") return &config.complementizer;
  if (name == "final_adverb") return &config.final_adverb;
  if (name == "noun_coordination") return &config.noun_coordination;
  if (name == "gerund_as_noun") return &config.gerund_as_noun;
  if (name == "verbless_template") return &config.verbless_template;
  return nullptr;
}

const std::string& combinator_name(Combinator c) {
  static const std::vector<std::string> kNames = {"lex",      "fwd_app",  "bwd_app", "fwd_comp",
                                                  "bwd_comp", "coord",    "unary_rule"};
  return kNames[static_cast<std::size_t>(c)];
}

std::vector<Cat> coordination_targets(const GrammarConfig& config) {
  std::vector<Cat> targets = {cat_np()};
  if (config.noun_coordination) {
    targets.push_back(cat_n());
    targets.push_back(Category::make(cat_s(), Slash::backward, cat_np()));
    targets.push_back(cat_s());
  }
  return targets;
}

namespace {

// Raw category set before particle adjacency filtering.
std::vector<Cat> raw_categories(const Token& token, const Sentence& sentence,
                                const Lexicon& lexicon, const GrammarConfig& config) {
  std::vector<Cat> cats;
  auto matches = lexicon.match(token);
  for (const LexEntry* entry : matches) {
    for (const auto& cat : entry->categories) {
      if (!config.particles && contains_atom(cat, Atom::part)) continue;
      add_unique(cats, cat);
    }
  }
  // bootstrap defaults apply to lexicon-covered tokens only
  if (!matches.empty()) {
    bool suppress = token.pos == Pos::modal && !config.modals;
    if (!suppress) {
      for (const auto& cat : default_categories(token.pos)) add_unique(cats, cat);
    }
  }

  const std::string folded = fold_case(token.surface);
  const int last = static_cast<int>(sentence.tokens.size()) - 1;
  if (config.modals && token.pos == Pos::modal) {
    add_unique(cats, Category::parse("(s\\np)/(s\\np)"));
  }
  if (config.adjective_stacking &&
      (token.pos == Pos::noun || token.pos == Pos::adverb ||
       (token.pos == Pos::verb && is_participle_form(folded)))) {
    add_unique(cats, Category::parse("n/n"));
  }
  if (config.fronted_pp && token.pos == Pos::preposition && token.index == 0 &&
      sentence_has_comma(sentence)) {
    add_unique(cats, Category::parse("(s/s)/np"));
  }
  if (config.complementizer && token.pos == Pos::coordinator && token.index == 0) {
    const auto& subs = subordinating_coordinators();
    if (std::find(subs.begin(), subs.end(), folded) != subs.end()) {
      add_unique(cats, Category::parse("(s/s)/s"));
    }
  }
  if (config.final_adverb && token.pos == Pos::adverb && token.index == last) {
    add_unique(cats, Category::parse("(s\\np)\\(s\\np)"));
    add_unique(cats, Category::parse("s\\s"));
  }
  if (config.noun_coordination && token.pos == Pos::coordinator) {
    add_unique(cats, cat_conj());
  }
  if (config.gerund_as_noun && token.pos == Pos::verb && ends_with(folded, "ing")) {
    add_unique(cats, cat_n());
  }
  if (config.verbless_template && token.pos == Pos::adjective && is_comparative_form(folded)) {
    add_unique(cats, Category::parse("n/np"));
  }
  return cats;
}

std::vector<std::vector<Cat>> assign_all(const Sentence& sentence, const Lexicon& lexicon,
                                         const GrammarConfig& config) {
  std::vector<std::vector<Cat>> raw;
  raw.reserve(sentence.tokens.size());
  for (const auto& token : sentence.tokens) {
    raw.push_back(raw_categories(token, sentence, lexicon, config));
  }
  // A particle category stands only next to a verb that takes it, and a
  // particle-taking verb category only next to its particle.
  std::vector<std::vector<Cat>> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (const auto& cat : raw[i]) {
      if (cat->is_atomic() && cat->atom() == Atom::part) {
        if (i == 0 || !has_particle_seeker(raw[i - 1])) continue;
      } else if (is_particle_seeking(cat)) {
        if (i + 1 >= raw.size() || !has_particle_atom(raw[i + 1])) continue;
      }
      out[i].push_back(cat);
    }
  }
  return out;
}

}  // namespace

std::vector<Cat> assign_categories(const Token& token, const Sentence& sentence,
                                   const Lexicon& lexicon, const GrammarConfig& config) {
  auto all = assign_all(sentence, lexicon, config);
  if (token.index < 0 || token.index >= static_cast<int>(all.size())) {
    throw PreconditionError("token index outside sentence");
  }
  return all[static_cast<std::size_t>(token.index)];
}

namespace {

struct Prod {
  Combinator rule;
  int left = -1;   // item id; -1 for leaves
  int right = -1;  // item id; -1 for unary productions and leaves
};

// Normal-form class: composition products may not serve as the primary
// functor of a same-direction application/composition. Keeps one
// derivation per semantic equivalence class instead of a spurious forest.
enum class NfClass { plain = 0, fwd_comp_product = 1, bwd_comp_product = 2 };

struct Item {
  Cat cat;
  NfClass nf = NfClass::plain;
  int start = 0;
  int end = 0;
  std::vector<Prod> prods;
};

struct Chart {
  int n = 0;
  std::vector<Item> items;
  // cell(i, j) -> ids in creation order
  std::vector<std::vector<std::vector<int>>> cells;

  explicit Chart(int tokens) : n(tokens) {
    cells.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<std::vector<int>>(static_cast<std::size_t>(n) + 1));
  }

  std::vector<int>& cell(int i, int j) {
    return cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<int>& cell(int i, int j) const {
    return cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  int add(int start, int end, const Cat& cat, NfClass nf, Prod prod, const Sentence& sentence,
          std::size_t bound) {
    for (int id : cell(start, end)) {
      Item& item = items[static_cast<std::size_t>(id)];
      if (item.nf == nf && cat_equal(item.cat, cat)) {
        item.prods.push_back(prod);
        return id;
      }
    }
    if (items.size() >= bound) {
      throw ResourceError("chart size bound exceeded for sentence " + sentence.id);
    }
    int id = static_cast<int>(items.size());
    items.push_back(Item{cat, nf, start, end, {prod}});
    cell(start, end).push_back(id);
    return id;
  }
};

struct Combined {
  Combinator rule;
  Cat result;
};

// Binary rule set: application, composition, and the coordination schema.
std::vector<Combined> combine(const Cat& left, const Cat& right,
                              const std::vector<Cat>& coord_targets) {
  std::vector<Combined> out;
  // X/Y Y -> X
  if (!left->is_atomic() && left->slash() == Slash::forward &&
      cat_equal(left->argument(), right)) {
    out.push_back({Combinator::fwd_app, left->result()});
  }
  // Y X\Y -> X
  if (!right->is_atomic() && right->slash() == Slash::backward &&
      cat_equal(right->argument(), left)) {
    out.push_back({Combinator::bwd_app, right->result()});
  }
  // X/Y Y/Z -> X/Z
  if (!left->is_atomic() && left->slash() == Slash::forward && !right->is_atomic() &&
      right->slash() == Slash::forward && cat_equal(left->argument(), right->result())) {
    out.push_back({Combinator::fwd_comp,
                   Category::make(left->result(), Slash::forward, right->argument())});
  }
  // Y\Z X\Y -> X\Z
  if (!left->is_atomic() && left->slash() == Slash::backward && !right->is_atomic() &&
      right->slash() == Slash::backward && cat_equal(right->argument(), left->result())) {
    out.push_back({Combinator::bwd_comp,
                   Category::make(right->result(), Slash::backward, left->argument())});
  }
  // conj X -> X\X
  if (left->is_atomic() && left->atom() == Atom::conj) {
    for (const auto& target : coord_targets) {
      if (cat_equal(right, target)) {
        out.push_back({Combinator::coord, Category::make(right, Slash::backward, right)});
        break;
      }
    }
  }
  return out;
}

// np spans flanked by the template's comma get promoted so the two halves
// of a comparative correlative can join by backward application.
void apply_unary(Chart& chart, int start, int end, const Sentence& sentence,
                 const GrammarConfig& config) {
  if (!config.verbless_template) return;
  if (!span_has_comparative(sentence, start, end)) return;
  std::vector<int> ids = chart.cell(start, end);  // copy; we append below
  for (int id : ids) {
    const Cat& cat = chart.items[static_cast<std::size_t>(id)].cat;
    if (!cat_equal(cat, cat_np())) continue;
    if (comma_after(sentence, end - 1)) {
      Cat promoted = Category::make(cat_s(), Slash::forward, cat_np());
      chart.add(start, end, promoted, NfClass::plain, Prod{Combinator::unary_rule, id, -1},
                sentence, config.max_chart_items);
    }
    if (start > 0 && comma_after(sentence, start - 1)) {
      Cat half = Category::make(cat_s(), Slash::forward, cat_np());
      Cat promoted = Category::make(cat_s(), Slash::backward, half);
      chart.add(start, end, promoted, NfClass::plain, Prod{Combinator::unary_rule, id, -1},
                sentence, config.max_chart_items);
    }
  }
}

Chart build_chart(const Sentence& sentence, const std::vector<std::vector<Cat>>& assigned,
                  const GrammarConfig& config) {
  const int n = static_cast<int>(sentence.tokens.size());
  Chart chart(n);
  const auto coord_targets = coordination_targets(config);
  for (int i = 0; i < n; ++i) {
    for (const auto& cat : assigned[static_cast<std::size_t>(i)]) {
      chart.add(i, i + 1, cat, NfClass::plain, Prod{Combinator::leaf, -1, -1}, sentence,
                config.max_chart_items);
    }
    apply_unary(chart, i, i + 1, sentence, config);
  }
  for (int len = 2; len <= n; ++len) {
    for (int start = 0; start + len <= n; ++start) {
      int end = start + len;
      for (int split = start + 1; split < end; ++split) {
        // copies: add() may grow the underlying vectors
        std::vector<int> left_ids = chart.cell(start, split);
        std::vector<int> right_ids = chart.cell(split, end);
        for (int li : left_ids) {
          for (int ri : right_ids) {
            const Item& left = chart.items[static_cast<std::size_t>(li)];
            const Item& right = chart.items[static_cast<std::size_t>(ri)];
            for (const auto& c : combine(left.cat, right.cat, coord_targets)) {
              // normal form: a composition product is not the primary
              // functor of a same-direction rule
              if ((c.rule == Combinator::fwd_app || c.rule == Combinator::fwd_comp) &&
                  left.nf == NfClass::fwd_comp_product) {
                continue;
              }
              if ((c.rule == Combinator::bwd_app || c.rule == Combinator::bwd_comp) &&
                  right.nf == NfClass::bwd_comp_product) {
                continue;
              }
              NfClass nf = NfClass::plain;
              if (c.rule == Combinator::fwd_comp) nf = NfClass::fwd_comp_product;
              if (c.rule == Combinator::bwd_comp) nf = NfClass::bwd_comp_product;
              chart.add(start, end, c.result, nf, Prod{c.rule, li, ri}, sentence,
                        config.max_chart_items);
            }
          }
        }
      }
      apply_unary(chart, start, end, sentence, config);
    }
  }
  return chart;
}

std::unique_ptr<DerivationNode> clone_node(const DerivationNode& node) {
  auto out = std::make_unique<DerivationNode>();
  out->cat = node.cat;
  out->rule = node.rule;
  out->start = node.start;
  out->end = node.end;
  out->token_index = node.token_index;
  if (node.left) out->left = clone_node(*node.left);
  if (node.right) out->right = clone_node(*node.right);
  return out;
}

void enumerate_item(const Chart& chart, int id, std::size_t cap,
                    std::vector<std::unique_ptr<DerivationNode>>& out) {
  const Item& item = chart.items[static_cast<std::size_t>(id)];
  for (const auto& prod : item.prods) {
    if (out.size() >= cap) return;
    if (prod.rule == Combinator::leaf) {
      auto node = std::make_unique<DerivationNode>();
      node->cat = item.cat;
      node->rule = Combinator::leaf;
      node->start = item.start;
      node->end = item.end;
      node->token_index = item.start;
      out.push_back(std::move(node));
    } else if (prod.right < 0) {
      std::vector<std::unique_ptr<DerivationNode>> children;
      enumerate_item(chart, prod.left, cap, children);
      for (auto& child : children) {
        if (out.size() >= cap) return;
        auto node = std::make_unique<DerivationNode>();
        node->cat = item.cat;
        node->rule = prod.rule;
        node->start = item.start;
        node->end = item.end;
        node->left = std::move(child);
        out.push_back(std::move(node));
      }
    } else {
      std::vector<std::unique_ptr<DerivationNode>> lefts, rights;
      enumerate_item(chart, prod.left, cap, lefts);
      enumerate_item(chart, prod.right, cap, rights);
      for (const auto& l : lefts) {
        for (const auto& r : rights) {
          if (out.size() >= cap) return;
          auto node = std::make_unique<DerivationNode>();
          node->cat = item.cat;
          node->rule = prod.rule;
          node->start = item.start;
          node->end = item.end;
          node->left = clone_node(*l);
          node->right = clone_node(*r);
          out.push_back(std::move(node));
        }
      }
    }
  }
}

int count_nodes(const DerivationNode& node) {
  int count = 1;
  if (node.left) count += count_nodes(*node.left);
  if (node.right) count += count_nodes(*node.right);
  return count;
}

void serialize_node(const DerivationNode& node, std::string& out) {
  if (node.rule == Combinator::leaf) {
    out.push_back('!');
    out += std::to_string(node.token_index);
    return;
  }
  out.push_back('(');
  out += std::to_string(static_cast<int>(node.rule));
  if (node.left) serialize_node(*node.left, out);
  if (node.right) serialize_node(*node.right, out);
  out.push_back(')');
}

std::vector<int> pool_tokens_for_repair(const std::vector<std::vector<Cat>>& assigned) {
  std::vector<int> out;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (assigned[i].empty()) out.push_back(static_cast<int>(i));
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < assigned.size(); ++i) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Cat> repair_pool(Pos pos) {
  auto parse_all = [](std::initializer_list<const char*> texts) {
    std::vector<Cat> out;
    for (const char* t : texts) out.push_back(Category::parse(t));
    return out;
  };
  switch (pos) {
    case Pos::determiner: return parse_all({"np/n"});
    case Pos::noun: return parse_all({"n", "np"});
    case Pos::pronoun: return parse_all({"np", "n"});
    case Pos::adjective: return parse_all({"n/n"});
    case Pos::preposition: return parse_all({"pp/np", "(np\\np)/np", "(s/s)/np"});
    case Pos::adverb: return parse_all({"s/s", "(s\\np)\\(s\\np)", "s\\s"});
    case Pos::verb: return parse_all({"s\\np", "(s\\np)/np", "(s\\np)/pp"});
    case Pos::modal: return parse_all({"(s\\np)/(s\\np)"});
    case Pos::coordinator: return parse_all({"conj"});
  }
  return {};
}

bool chart_has_root(const Chart& chart) {
  for (int id : chart.cell(0, chart.n)) {
    if (cat_equal(chart.items[static_cast<std::size_t>(id)].cat, cat_s())) return true;
  }
  return false;
}

FailureDiagnosis diagnose(const Sentence& sentence, const Chart& chart,
                          const std::vector<std::vector<Cat>>& assigned,
                          const GrammarConfig& config) {
  FailureDiagnosis diagnosis;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (assigned[i].empty()) diagnosis.uncovered_tokens.push_back(static_cast<int>(i));
  }

  // spans with a derivable category, not contained in a longer such span
  const int n = chart.n;
  std::vector<std::pair<int, int>> spans;
  for (int len = n; len >= 1; --len) {
    for (int start = 0; start + len <= n; ++start) {
      int end = start + len;
      if (chart.cell(start, end).empty()) continue;
      bool contained = false;
      for (const auto& [s, e] : spans) {
        if (s <= start && end <= e) {
          contained = true;
          break;
        }
      }
      if (!contained) spans.emplace_back(start, end);
    }
  }
  std::sort(spans.begin(), spans.end());
  for (const auto& [start, end] : spans) {
    SpanInfo info;
    info.start = start;
    info.end = end;
    for (int id : chart.cell(start, end)) {
      info.categories.push_back(chart.items[static_cast<std::size_t>(id)].cat);
    }
    diagnosis.maximal_spans.push_back(std::move(info));
  }

  // single-token repair: a candidate that completes a root-s parse
  if (n <= 24) {
    for (int index : pool_tokens_for_repair(assigned)) {
      const Token& token = sentence.tokens[static_cast<std::size_t>(index)];
      for (const auto& candidate : repair_pool(token.pos)) {
        bool present = false;
        for (const auto& c : assigned[static_cast<std::size_t>(index)]) {
          if (cat_equal(c, candidate)) {
            present = true;
            break;
          }
        }
        if (present) continue;
        auto patched = assigned;
        patched[static_cast<std::size_t>(index)].push_back(candidate);
        try {
          Chart repaired = build_chart(sentence, patched, config);
          if (chart_has_root(repaired)) {
            diagnosis.missing_category_hypotheses.emplace_back(index, candidate);
          }
        } catch (const ResourceError&) {
          // a repair that blows the chart bound is not a usable hypothesis
        }
      }
    }
  }
  return diagnosis;
}

}  // namespace

ParseResult parse(const Sentence& sentence, const Lexicon& lexicon, const GrammarConfig& config) {
  if (sentence.tokens.empty()) throw PreconditionError("cannot parse an empty sentence");
  auto assigned = assign_all(sentence, lexicon, config);
  Chart chart = build_chart(sentence, assigned, config);

  ParseResult result;
  for (int id : chart.cell(0, chart.n)) {
    if (!cat_equal(chart.items[static_cast<std::size_t>(id)].cat, cat_s())) continue;
    std::vector<std::unique_ptr<DerivationNode>> roots;
    enumerate_item(chart, id, config.max_chart_items, roots);
    for (auto& root : roots) {
      Derivation d;
      d.node_count = count_nodes(*root);
      d.root = std::move(root);
      result.derivations.push_back(std::move(d));
    }
  }
  std::sort(result.derivations.begin(), result.derivations.end(),
            [](const Derivation& a, const Derivation& b) {
              if (a.node_count != b.node_count) return a.node_count < b.node_count;
              return a.order_key() < b.order_key();
            });
  if (result.derivations.empty()) {
    result.diagnosis = diagnose(sentence, chart, assigned, config);
  }
  return result;
}

FailureDiagnosis diagnose_failure(const Sentence& sentence, const Lexicon& lexicon,
                                  const GrammarConfig& config) {
  auto assigned = assign_all(sentence, lexicon, config);
  Chart chart = build_chart(sentence, assigned, config);
  return diagnose(sentence, chart, assigned, config);
}

std::string Derivation::order_key() const {
  std::string out;
  if (root) serialize_node(*root, out);
  return out;
}

namespace {

void bracketed_node(const DerivationNode& node, const Sentence& sentence, std::string& out) {
  if (node.rule == Combinator::leaf) {
    out += sentence.tokens[static_cast<std::size_t>(node.token_index)].surface;
    out += ":" + node.cat->to_string();
    return;
  }
  out += "[" + combinator_name(node.rule) + " ";
  if (node.left) bracketed_node(*node.left, sentence, out);
  if (node.right) {
    out += " ";
    bracketed_node(*node.right, sentence, out);
  }
  out += " => " + node.cat->to_string() + "]";
}

void json_node(const DerivationNode& node, const Sentence& sentence, std::ostringstream& out);

void json_children(const DerivationNode& node, const Sentence& sentence, std::ostringstream& out) {
  out << "[";
  if (node.left) json_node(*node.left, sentence, out);
  if (node.right) {
    out << ",";
    json_node(*node.right, sentence, out);
  }
  out << "]";
}

void json_node(const DerivationNode& node, const Sentence& sentence, std::ostringstream& out) {
  out << "{\"category\":\"" << node.cat->to_string() << "\",\"rule\":\""
      << combinator_name(node.rule) << "\"";
  if (node.rule == Combinator::leaf) {
    out << ",\"token\":\""
        << sentence.tokens[static_cast<std::size_t>(node.token_index)].surface << "\",\"index\":"
        << node.token_index;
  } else {
    out << ",\"children\":";
    json_children(node, sentence, out);
  }
  out << "}";
}

}  // namespace

std::string Derivation::bracketed(const Sentence& sentence) const {
  std::string out;
  if (root) bracketed_node(*root, sentence, out);
  return out;
}

std::string Derivation::to_json(const Sentence& sentence) const {
  std::ostringstream out;
  if (root) json_node(*root, sentence, out);
  return out.str();
}

ParseRate parse_rate(const Corpus& corpus, const Lexicon& lexicon, const GrammarConfig& config) {
  if (corpus.sentences.empty()) {
    throw PreconditionError("parse rate of an empty corpus is undefined");
  }
  ParseRate rate;
  rate.total = static_cast<int>(corpus.sentences.size());
  for (const auto& sentence : corpus.sentences) {
    if (parse(sentence, lexicon, config).success()) ++rate.parsed;
  }
  rate.rate = Rational(rate.parsed, rate.total);
  return rate;
}

namespace {

const DerivationNode* functor_head_leaf(const DerivationNode* node) {
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
      case Combinator::coord:
        node = node->left.get();
        break;
      default:
        node = node->left.get();
        break;
    }
  }
  return node;
}

void svo_walk(const DerivationNode& node, const Sentence& sentence, SvoProfile& profile) {
  static const Cat kVP = Category::parse("s\\np");
  if (node.rule == Combinator::leaf) {
    if (node.cat->head_atom() == Atom::s) ++profile.verbs;
    return;
  }
  if (node.rule == Combinator::bwd_app && node.left && node.right &&
      cat_equal(node.left->cat, cat_np()) && cat_equal(node.right->cat, kVP)) {
    ++profile.subjects;
  }
  if (node.rule == Combinator::fwd_app && node.left && node.right &&
      (cat_equal(node.right->cat, cat_np()) || cat_equal(node.right->cat, cat_pp()))) {
    const DerivationNode* head = functor_head_leaf(node.left.get());
    if (head && node.left->cat->head_atom() == Atom::s) {
      Pos pos = sentence.tokens[static_cast<std::size_t>(head->token_index)].pos;
      if (pos == Pos::verb || pos == Pos::modal) ++profile.objects;
    }
  }
  if (node.left) svo_walk(*node.left, sentence, profile);
  if (node.right) svo_walk(*node.right, sentence, profile);
}

}  // namespace

SvoProfile svo_profile(const Derivation& derivation, const Sentence& sentence) {
  SvoProfile profile;
  if (derivation.root) svo_walk(*derivation.root, sentence, profile);
  return profile;
}

namespace {

bool validate_node(const DerivationNode& node, const Sentence& sentence,
                   const std::vector<std::vector<Cat>>& assigned, const GrammarConfig& config,
                   const std::vector<Cat>& coord_targets) {
  if (node.rule == Combinator::leaf) {
    if (node.token_index != node.start || node.end != node.start + 1) return false;
    for (const auto& cat : assigned[static_cast<std::size_t>(node.token_index)]) {
      if (cat_equal(cat, node.cat)) return true;
    }
    return false;
  }
  if (node.rule == Combinator::unary_rule) {
    if (!node.left || node.right) return false;
    if (!config.verbless_template) return false;
    if (!cat_equal(node.left->cat, cat_np())) return false;
    if (!span_has_comparative(sentence, node.start, node.end)) return false;
    Cat half = Category::make(cat_s(), Slash::forward, cat_np());
    bool ok = false;
    if (comma_after(sentence, node.end - 1) && cat_equal(node.cat, half)) ok = true;
    Cat right_half = Category::make(cat_s(), Slash::backward, half);
    if (node.start > 0 && comma_after(sentence, node.start - 1) &&
        cat_equal(node.cat, right_half)) {
      ok = true;
    }
    if (!ok) return false;
    return validate_node(*node.left, sentence, assigned, config, coord_targets);
  }
  if (!node.left || !node.right) return false;
  if (node.left->end != node.right->start || node.left->start != node.start ||
      node.right->end != node.end) {
    return false;
  }
  bool found = false;
  for (const auto& c : combine(node.left->cat, node.right->cat, coord_targets)) {
    if (c.rule == node.rule && cat_equal(c.result, node.cat)) {
      found = true;
      break;
    }
  }
  if (!found) return false;
  return validate_node(*node.left, sentence, assigned, config, coord_targets) &&
         validate_node(*node.right, sentence, assigned, config, coord_targets);
}

}  // namespace

bool validate_derivation(const Derivation& derivation, const Sentence& sentence,
                         const Lexicon& lexicon, const GrammarConfig& config) {
  if (!derivation.root) return false;
  auto assigned = assign_all(sentence, lexicon, config);
  if (derivation.root->start != 0 ||
      derivation.root->end != static_cast<int>(sentence.tokens.size())) {
    return false;
  }
  return validate_node(*derivation.root, sentence, assigned, config,
                       coordination_targets(config));
}

}  // namespace c2k
