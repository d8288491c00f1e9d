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
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "logag/grade.hpp"

namespace logag {

// A ground individual term: a constant such as `Tweety` or a functional term
// such as `bird(A)` used as a predicate argument.
struct Individual {
  std::string name;
  std::vector<Individual> args;

  std::string str() const;

  friend bool operator==(const Individual& a, const Individual& b) {
    return a.name == b.name && a.args == b.args;
  }
};

enum class TermKind { True, Atom, Not, And, Or, Grade, Less, GradeEq };

// Immutable propositional term. Copies share structure. Implication is never
// stored: `a -> b` is built as `~a | b`. Identity is structural and is
// witnessed by the canonical rendering `str()`, which parses back to an
// equal term.
class Term {
 public:
  // The constant `true`.
  Term();

  static Term truth() { return Term(); }
  static Term atom(std::string predicate, std::vector<Individual> args = {});
  static Term negation(const Term& t);
  static Term conjunction(const Term& l, const Term& r);
  static Term disjunction(const Term& l, const Term& r);
  static Term implication(const Term& l, const Term& r);
  static Term graded(const Term& inner, const Grade& g);
  static Term less(const Grade& a, const Grade& b);
  static Term grade_eq(const Grade& a, const Grade& b);

  // Left-nested conjunction of `ts` in order; `true` for an empty sequence.
  static Term conjunction_of(const std::vector<Term>& ts);

  TermKind kind() const;
  bool is_grading() const { return kind() == TermKind::Grade; }
  bool is_atom() const { return kind() == TermKind::Atom; }

  // Atom accessors.
  const std::string& predicate() const;
  const std::vector<Individual>& args() const;

  // Not: operand(). And/Or: left(), right(). Grade: inner(), grade().
  // Less/GradeEq: lhs_grade(), rhs_grade().
  Term operand() const;
  Term left() const;
  Term right() const;
  Term inner() const;
  const Grade& grade() const;
  const Grade& lhs_grade() const;
  const Grade& rhs_grade() const;

  // True if a Grade node occurs anywhere in the term.
  bool contains_grading() const;
  // Nesting depth of Grade nodes.
  std::size_t grading_depth() const;

  const std::string& str() const;
  std::size_t hash() const;

  // Immediate subterms: Boolean children and the inner term of a grading
  // term. Atoms, `true` and order atoms have none.
  std::vector<Term> children() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

using TermSet = std::set<Term>;

inline const std::string& render(const Term& t) { return t.str(); }

// Renders a set as "{a, b, c}" in set order.
std::string render(const TermSet& ts);

}  // namespace logag

template <>
struct std::hash<logag::Term> {
  std::size_t operator()(const logag::Term& t) const noexcept {
    return t.hash();
  }
};
