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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "logag/term.hpp"

namespace logag {

// A finite set of ground terms with the finite domains that were used to
// expand its quantified statements. Terms keep their source order and are
// pairwise structurally distinct.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::map<std::string, std::vector<Individual>>& domains() const {
    return domains_;
  }
  void add_domain(const std::string& name, std::vector<Individual> members);

  const std::vector<Term>& terms() const { return terms_; }
  // Returns false when an equal term is already present.
  bool add(const Term& t);
  bool contains(const Term& t) const { return index_.count(t) != 0; }
  TermSet term_set() const { return index_; }
  std::size_t size() const { return terms_.size(); }

  // Theory-file text that parses back to an equal theory.
  std::string str() const;

 private:
  std::string name_;
  std::map<std::string, std::vector<Individual>> domains_;
  std::vector<Term> terms_;
  TermSet index_;
};

// Parses one term. Implication is desugared; quantifiers are rejected
// because no domains are in scope.
Term parse_term(std::string_view text);

// Parses a theory file: `theory NAME.`, `domain D = {a, b}.`,
// `forall x, y in D: term.` and `term.` statements. Statement-level
// quantifiers contribute one entry per ground instance; a quantifier nested
// inside a term expands to the conjunction of its instances.
Theory parse_theory(std::string_view text, std::string default_name = "");

}  // namespace logag
