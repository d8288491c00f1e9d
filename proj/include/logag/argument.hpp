// Copyright 2026 The logag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logag/graded.hpp"
#include "logag/parser.hpp"
#include "logag/term.hpp"

namespace logag {

// A literal of an argument system: `true`, an atom, or a negated atom.
// Negation has no logical properties here; `~p` is just another wff.
struct Wff {
  bool negated = false;
  bool is_true = false;
  std::string predicate;
  std::vector<Individual> args;

  static Wff truth() { return Wff{false, true, "", {}}; }
  static Wff atom(std::string predicate, std::vector<Individual> args = {},
                  bool negated = false) {
    return Wff{negated, false, std::move(predicate), std::move(args)};
  }

  // The complementary literal used for consistency and completeness.
  Wff complement() const;
  Term term() const;
  std::string str() const;

  friend bool operator==(const Wff& a, const Wff& b) {
    return a.str() == b.str();
  }
  friend bool operator<(const Wff& a, const Wff& b) { return a.str() < b.str(); }
};

enum class RuleKind { BaseFact, Monotonic, NonMonotonic };

struct Rule {
  std::string label;
  RuleKind kind = RuleKind::BaseFact;
  std::vector<Wff> premises;
  Wff conclusion;

  std::string str() const;
};

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label); }
  std::vector<Rule> of_kind(RuleKind kind) const;
  // Labels of the non-monotonic rules in file order.
  std::vector<std::string> nonmonotonic_labels() const;
  std::string str() const;

 private:
  std::vector<Rule> rules_;
  std::map<std::string, std::size_t> index_;
};

RuleSet parse_rules(std::string_view text);

// A node of an argument tree. Children refer to earlier arguments of the
// same enumeration, so a tree is shared, never copied.
struct Argument {
  std::string label;  // p1, p2, ... in creation order
  Wff root;
  // Base fact or rule labelling the arc into the root.
  std::string rule;
  RuleKind kind = RuleKind::BaseFact;
  std::vector<std::size_t> children;
};

struct ArgumentSystem {
  RuleSet rules;
  std::vector<Argument> arguments;

  // Wffs occurring anywhere in the tree of argument `id`.
  std::vector<Wff> nodes(std::size_t id) const;
  // Ids of the tree of argument `id`, root first.
  std::vector<std::size_t> subtree(std::size_t id) const;
  // "p3: p2 -r3-> bird(A)" style rendering.
  std::string describe(std::size_t id) const;
};

inline constexpr std::size_t kDefaultDepthCap = 16;
inline constexpr std::size_t kSubsetCap = 4096;

// Every argument of the rule set, built in rounds: each round applies the
// rules in file order to the arguments present at the start of the round.
ArgumentSystem enumerate_arguments(const RuleSet& rules,
                                   std::size_t depth_cap = kDefaultDepthCap);

struct ArgumentStructure {
  // Sorted argument ids.
  std::vector<std::size_t> arguments;
  bool maximal = false;
};

std::vector<ArgumentStructure> enumerate_structures(const ArgumentSystem& sys);

std::vector<std::string> argument_labels(const ArgumentSystem& sys,
                                         const ArgumentStructure& t);
std::vector<Wff> wffs(const ArgumentSystem& sys, const ArgumentStructure& t);
bool is_complete(const ArgumentSystem& sys, const ArgumentStructure& t,
                 const Wff& phi);
// Base facts in the structure and every rule labelling one of its arcs,
// in rule-file order.
std::vector<Rule> rules_of_structure(const ArgumentSystem& sys,
                                     const ArgumentStructure& t);

Term pi(const Rule& r);
Term chain_term(const Term& t, std::size_t d);

// Bijection from the non-empty subsets of the non-monotonic rules onto
// 1..2^k - 1. `subsets[i]` holds the sorted labels with index i + 1.
struct Indexing {
  std::vector<std::vector<std::string>> subsets;

  // 0 for the empty set. Throws InvalidArgument for an unknown subset.
  std::size_t index_of(std::vector<std::string> labels) const;
  std::string str() const;
};

Indexing default_indexing(const RuleSet& rules);
// Lines "N: label, label, ...". Must be a bijection for `rules`.
Indexing parse_indexing(std::string_view text, const RuleSet& rules);

struct Translation {
  std::vector<Term> monotonic_part;
  std::vector<Term> nonmonotonic_part;
  Indexing indexing;

  Theory theory(const std::string& name = "") const;
};

Translation translate(const RuleSet& rules, const Indexing& idx);

struct Theorem1Report {
  std::size_t level = 0;
  std::vector<std::pair<Wff, bool>> results;
  bool pass = true;
};

struct Theorem2Report {
  std::size_t level = 0;
  std::vector<std::string> greedy_extension;
  std::size_t maximal_extensions = 0;
  std::size_t consequences_checked = 0;
  // Rendered consequences not entailed classically.
  std::vector<std::string> failures;
  bool pass = true;
};

// Level of a structure: the index of its non-monotonic rules, 0 if none.
std::size_t structure_level(const ArgumentSystem& sys,
                            const ArgumentStructure& t, const Indexing& idx);

Theorem1Report check_theorem1(const ArgumentSystem& sys, const Indexing& idx,
                              const ArgumentStructure& t,
                              const TelescopeOptions& options = {});
Theorem2Report check_theorem2(const ArgumentSystem& sys, const Indexing& idx,
                              const ArgumentStructure& t,
                              const TelescopeOptions& options = {});

}  // namespace logag
