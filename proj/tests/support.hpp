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

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logag/argument.hpp"
#include "logag/classical.hpp"
#include "logag/graded.hpp"
#include "logag/parser.hpp"
#include "logag/term.hpp"

namespace logag::testing {

inline std::string data_path(const std::string& name) {
  return std::string(LOGAG_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Theory load_theory(const std::string& name) {
  return parse_theory(slurp(data_path(name)), name);
}

inline TermSet terms(std::initializer_list<const char*> texts) {
  TermSet out;
  for (const char* t : texts) out.insert(parse_term(t));
  return out;
}

// Reference semantics: direct recursive evaluation under an explicit
// valuation of the opaque atoms, sharing no code with Oracle.
using Valuation = std::map<std::string, bool>;

inline void opaque_atoms(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Atom:
    case TermKind::Grade:
      out.insert(t.str());
      return;
    case TermKind::Not:
      opaque_atoms(t.operand(), out);
      return;
    case TermKind::And:
    case TermKind::Or:
      opaque_atoms(t.left(), out);
      opaque_atoms(t.right(), out);
      return;
    default:
      return;
  }
}

inline bool evaluate(const Term& t, const Valuation& v) {
  switch (t.kind()) {
    case TermKind::True: return true;
    case TermKind::Atom:
    case TermKind::Grade: return v.at(t.str());
    case TermKind::Not: return !evaluate(t.operand(), v);
    case TermKind::And: return evaluate(t.left(), v) && evaluate(t.right(), v);
    case TermKind::Or: return evaluate(t.left(), v) || evaluate(t.right(), v);
    case TermKind::Less: return t.lhs_grade() < t.rhs_grade();
    case TermKind::GradeEq: return t.lhs_grade() == t.rhs_grade();
  }
  return false;
}

// Calls f on every valuation of the atoms of `ts`; stops when f is false.
inline void for_each_valuation(const std::vector<Term>& ts,
                               const std::function<bool(const Valuation&)>& f) {
  std::set<std::string> atoms;
  for (const auto& t : ts) opaque_atoms(t, atoms);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << names.size()); ++m) {
    Valuation v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (m >> i) & 1u;
    if (!f(v)) return;
  }
}

inline bool reference_entails(const TermSet& base, const Term& goal) {
  std::vector<Term> all(base.begin(), base.end());
  all.push_back(goal);
  bool ok = true;
  for_each_valuation(all, [&](const Valuation& v) {
    for (const auto& b : base) {
      if (!evaluate(b, v)) return true;
    }
    ok = evaluate(goal, v);
    return ok;
  });
  return ok;
}

inline bool reference_consistent(const TermSet& base) {
  return !reference_entails(base, Term::negation(Term::truth()));
}

// Closure by the definition, using the reference entailment.
inline TermSet reference_closure(const TermSet& base, const Universe& u) {
  TermSet s = base;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : u.grading_terms()) {
      if (s.count(g) && s.count(g.inner())) continue;
      if (reference_entails(s, g)) {
        s.insert(g);
        s.insert(g.inner());
        changed = true;
      }
    }
  }
  return s;
}

// Hand-rolled generators over a seeded engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Grade grade() {
    static const Grade pool[] = {Grade(1), Grade(2), Grade(3), Grade(5, 2),
                                 Grade(10), Grade(1, 3)};
    return pool[below(6)];
  }

  Term atom(std::size_t atoms) {
    return Term::atom("a" + std::to_string(below(atoms)));
  }

  // Random term over `atoms` atoms; grading nodes only when `graded`.
  Term term(std::size_t atoms, std::size_t depth, bool graded) {
    if (depth == 0 || chance(0.3)) {
      if (chance(0.04)) return Term::truth();
      if (chance(0.03)) return Term::less(grade(), grade());
      if (chance(0.03)) return Term::grade_eq(grade(), grade());
      return atom(atoms);
    }
    std::size_t pick = below(graded ? 5 : 4);
    switch (pick) {
      case 0: return Term::negation(term(atoms, depth - 1, graded));
      case 1:
        return Term::conjunction(term(atoms, depth - 1, graded),
                                 term(atoms, depth - 1, graded));
      case 2:
        return Term::disjunction(term(atoms, depth - 1, graded),
                                 term(atoms, depth - 1, graded));
      case 3:
        return Term::implication(term(atoms, depth - 1, graded),
                                 term(atoms, depth - 1, graded));
      default:
        return Term::graded(term(atoms, depth - 1, graded), grade());
    }
  }

  // Grading-free theory with at most `atoms` atoms and `size` terms.
  TermSet plain_theory(std::size_t atoms, std::size_t size) {
    TermSet out;
    std::size_t n = 1 + below(size);
    while (out.size() < n) out.insert(term(atoms, 3, false));
    return out;
  }

  // Theory mixing plain terms, graded literals and nested grades.
  TermSet graded_theory(std::size_t atoms, std::size_t size) {
    TermSet out;
    std::size_t n = 1 + below(size);
    for (std::size_t guard = 0; out.size() < n && guard < 10 * n; ++guard) {
      Term t = term(atoms, 2, false);
      if (chance(0.5)) t = Term::graded(t, grade());
      if (chance(0.2)) t = Term::graded(t, grade());
      if (chance(0.2)) t = Term::implication(atom(atoms), t);
      out.insert(t);
    }
    return out;
  }

  // Ground rule set over literals of `atoms` predicates.
  RuleSet rules(std::size_t atoms, std::size_t base, std::size_t mono,
                std::size_t nm) {
    std::vector<Rule> out;
    auto literal = [&] {
      return Wff::atom("q" + std::to_string(below(atoms)), {}, chance(0.3));
    };
    std::size_t label = 1;
    auto next_label = [&] { return "r" + std::to_string(label++); };
    for (std::size_t i = 0; i < base; ++i) {
      out.push_back({next_label(), RuleKind::BaseFact, {}, literal()});
    }
    auto rule = [&](RuleKind kind) {
      Rule r{next_label(), kind, {}, literal()};
      std::size_t m = 1 + below(2);
      for (std::size_t j = 0; j < m; ++j) {
        r.premises.push_back(chance(0.15) ? Wff::truth() : literal());
      }
      return r;
    };
    for (std::size_t i = 0; i < mono; ++i) out.push_back(rule(RuleKind::Monotonic));
    for (std::size_t i = 0; i < nm; ++i) out.push_back(rule(RuleKind::NonMonotonic));
    return RuleSet(out);
  }

 private:
  std::mt19937_64 rng_;
};

// Checks the four defining conditions of an argument structure directly
// against the argument list: base facts present, closed under subtrees,
// monotonically closed, consistent.
inline bool valid_structure(const ArgumentSystem& sys,
                            const ArgumentStructure& t) {
  std::set<std::size_t> in(t.arguments.begin(), t.arguments.end());
  for (std::size_t i = 0; i < sys.arguments.size(); ++i) {
    const Argument& a = sys.arguments[i];
    if (a.kind == RuleKind::BaseFact && !in.count(i)) return false;
    if (in.count(i)) {
      for (auto c : a.children) {
        if (!in.count(c)) return false;
      }
    }
  }
  for (const auto& r : sys.rules.rules()) {
    if (r.kind != RuleKind::Monotonic) continue;
    std::set<std::string> roots;
    for (auto i : in) roots.insert(sys.arguments[i].root.str());
    bool premises_supported = std::all_of(
        r.premises.begin(), r.premises.end(),
        [&](const Wff& w) { return roots.count(w.str()) != 0; });
    if (!premises_supported) continue;
    // Every argument built by r from arguments of t must itself be in t.
    for (std::size_t i = 0; i < sys.arguments.size(); ++i) {
      const Argument& a = sys.arguments[i];
      if (a.rule != r.label) continue;
      bool children_in = std::all_of(a.children.begin(), a.children.end(),
                                     [&](std::size_t c) { return in.count(c); });
      if (children_in && !in.count(i)) return false;
    }
  }
  std::set<std::string> roots;
  for (auto i : in) roots.insert(sys.arguments[i].root.str());
  for (auto i : in) {
    if (roots.count(sys.arguments[i].root.complement().str())) return false;
  }
  return true;
}

}  // namespace logag::testing
