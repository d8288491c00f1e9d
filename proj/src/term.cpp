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

#include "logag/term.hpp"

#include <algorithm>
#include <cassert>

#include "logag/error.hpp"

namespace logag {

std::string Individual::str() const {
  if (args.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].str();
  }
  return out + ")";
}

struct Term::Node {
  TermKind kind = TermKind::True;
  std::string predicate;
  std::vector<Individual> args;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  Grade g1;
  Grade g2;
  std::string text;
  std::size_t hash = 0;
  bool has_grading = false;
  std::size_t depth = 0;
};

namespace {

// Binding strength used for minimal parenthesisation.
int precedence(TermKind k) {
  switch (k) {
    case TermKind::Or:
      return 1;
    case TermKind::And:
      return 2;
    case TermKind::Not:
      return 3;
    default:
      return 4;
  }
}

std::string wrap(const std::string& s, bool paren) {
  return paren ? "(" + s + ")" : s;
}

}  // namespace

Term Term::make(Node node) {
  const Node* a = node.a.get();
  const Node* b = node.b.get();
  switch (node.kind) {
    case TermKind::True:
      node.text = "true";
      break;
    case TermKind::Atom: {
      Individual as_ind{node.predicate, node.args};
      node.text = as_ind.str();
      break;
    }
    case TermKind::Not:
      node.text = "~" + wrap(a->text, precedence(a->kind) < precedence(TermKind::Not));
      break;
    case TermKind::And:
    case TermKind::Or: {
      int p = precedence(node.kind);
      // Both connectives associate to the left.
      node.text = wrap(a->text, precedence(a->kind) < p) +
                  (node.kind == TermKind::And ? " & " : " | ") +
                  wrap(b->text, precedence(b->kind) <= p);
      break;
    }
    case TermKind::Grade:
      node.text = "G(" + a->text + ", " + node.g1.str() + ")";
      break;
    case TermKind::Less:
      node.text = node.g1.str() + " < " + node.g2.str();
      break;
    case TermKind::GradeEq:
      node.text = node.g1.str() + " == " + node.g2.str();
      break;
  }
  node.hash = std::hash<std::string>{}(node.text);
  node.has_grading = node.kind == TermKind::Grade || (a && a->has_grading) ||
                     (b && b->has_grading);
  std::size_t da = a ? a->depth : 0;
  std::size_t db = b ? b->depth : 0;
  node.depth = std::max(da, db) + (node.kind == TermKind::Grade ? 1 : 0);
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term::Term() {
  static const std::shared_ptr<const Node> kTrue = [] {
    Node n;
    n.kind = TermKind::True;
    n.text = "true";
    n.hash = std::hash<std::string>{}(n.text);
    return std::make_shared<const Node>(std::move(n));
  }();
  node_ = kTrue;
}

Term Term::atom(std::string predicate, std::vector<Individual> args) {
  if (predicate.empty()) throw InvalidArgument("empty predicate name");
  Node n;
  n.kind = TermKind::Atom;
  n.predicate = std::move(predicate);
  n.args = std::move(args);
  return make(std::move(n));
}

Term Term::negation(const Term& t) {
  Node n;
  n.kind = TermKind::Not;
  n.a = t.node_;
  return make(std::move(n));
}

Term Term::conjunction(const Term& l, const Term& r) {
  Node n;
  n.kind = TermKind::And;
  n.a = l.node_;
  n.b = r.node_;
  return make(std::move(n));
}

Term Term::disjunction(const Term& l, const Term& r) {
  Node n;
  n.kind = TermKind::Or;
  n.a = l.node_;
  n.b = r.node_;
  return make(std::move(n));
}

Term Term::implication(const Term& l, const Term& r) {
  return disjunction(negation(l), r);
}

Term Term::graded(const Term& inner, const Grade& g) {
  Node n;
  n.kind = TermKind::Grade;
  n.a = inner.node_;
  n.g1 = g;
  return make(std::move(n));
}

Term Term::less(const Grade& a, const Grade& b) {
  Node n;
  n.kind = TermKind::Less;
  n.g1 = a;
  n.g2 = b;
  return make(std::move(n));
}

Term Term::grade_eq(const Grade& a, const Grade& b) {
  Node n;
  n.kind = TermKind::GradeEq;
  n.g1 = a;
  n.g2 = b;
  return make(std::move(n));
}

Term Term::conjunction_of(const std::vector<Term>& ts) {
  if (ts.empty()) return Term();
  Term out = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) out = conjunction(out, ts[i]);
  return out;
}

TermKind Term::kind() const { return node_->kind; }

const std::string& Term::predicate() const {
  assert(kind() == TermKind::Atom);
  return node_->predicate;
}

const std::vector<Individual>& Term::args() const {
  assert(kind() == TermKind::Atom);
  return node_->args;
}

Term Term::operand() const {
  assert(kind() == TermKind::Not);
  return Term(node_->a);
}

Term Term::left() const {
  assert(kind() == TermKind::And || kind() == TermKind::Or);
  return Term(node_->a);
}

Term Term::right() const {
  assert(kind() == TermKind::And || kind() == TermKind::Or);
  return Term(node_->b);
}

Term Term::inner() const {
  assert(kind() == TermKind::Grade);
  return Term(node_->a);
}

const Grade& Term::grade() const {
  assert(kind() == TermKind::Grade);
  return node_->g1;
}

const Grade& Term::lhs_grade() const { return node_->g1; }
const Grade& Term::rhs_grade() const { return node_->g2; }

bool Term::contains_grading() const { return node_->has_grading; }
std::size_t Term::grading_depth() const { return node_->depth; }

const std::string& Term::str() const { return node_->text; }
std::size_t Term::hash() const { return node_->hash; }

std::vector<Term> Term::children() const {
  switch (kind()) {
    case TermKind::Not:
    case TermKind::Grade:
      return {Term(node_->a)};
    case TermKind::And:
    case TermKind::Or:
      return {Term(node_->a), Term(node_->b)};
    default:
      return {};
  }
}

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ ||
         (a.node_->hash == b.node_->hash && a.node_->text == b.node_->text);
}

bool operator<(const Term& a, const Term& b) {
  return a.node_ != b.node_ && a.node_->text < b.node_->text;
}

std::string render(const TermSet& ts) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : ts) {
    if (!first) out += ", ";
    first = false;
    out += t.str();
  }
  return out + "}";
}

}  // namespace logag
