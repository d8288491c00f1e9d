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

#include "logag/argument.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"
#include "logag/classical.hpp"
#include "logag/error.hpp"

namespace logag {

using detail::Tok;
using detail::Token;

Wff Wff::complement() const {
  Wff w = *this;
  w.negated = !negated;
  return w;
}

Term Wff::term() const {
  Term t = is_true ? Term::truth() : Term::atom(predicate, args);
  return negated ? Term::negation(t) : t;
}

std::string Wff::str() const { return term().str(); }

std::string Rule::str() const {
  std::string out = label + ": ";
  if (kind == RuleKind::BaseFact) return out + conclusion.str() + ".";
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i) out += ", ";
    out += premises[i].str();
  }
  out += kind == RuleKind::Monotonic ? " -> " : " => ";
  return out + conclusion.str() + ".";
}

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!index_.emplace(rules_[i].label, i).second) {
      throw InvalidArgument("duplicate rule label '" + rules_[i].label + "'");
    }
  }
}

const Rule& RuleSet::rule(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InvalidArgument("unknown rule '" + label + "'");
  return rules_[it->second];
}

std::vector<Rule> RuleSet::of_kind(RuleKind kind) const {
  std::vector<Rule> out;
  for (const auto& r : rules_) {
    if (r.kind == kind) out.push_back(r);
  }
  return out;
}

std::vector<std::string> RuleSet::nonmonotonic_labels() const {
  std::vector<std::string> out;
  for (const auto& r : rules_) {
    if (r.kind == RuleKind::NonMonotonic) out.push_back(r.label);
  }
  return out;
}

std::string RuleSet::str() const {
  std::string out;
  for (const auto& r : rules_) out += r.str() + "\n";
  return out;
}

namespace {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : toks_(detail::tokenize(text)) {}

  std::vector<Rule> rules() {
    std::vector<Rule> out;
    std::set<std::string> labels;
    while (peek().kind != Tok::End) {
      Token label = expect(Tok::Ident);
      if (!labels.insert(label.text).second) {
        fail("duplicate rule label '" + label.text + "'", label);
      }
      expect(Tok::Colon);
      Rule r;
      r.label = label.text;
      std::vector<Wff> ws = {wff()};
      while (accept(Tok::Comma)) ws.push_back(wff());
      if (accept(Tok::Arrow)) {
        r.kind = RuleKind::Monotonic;
      } else if (accept(Tok::FatArrow)) {
        r.kind = RuleKind::NonMonotonic;
      } else {
        if (ws.size() != 1) fail("base fact with several wffs", peek());
        r.kind = RuleKind::BaseFact;
        r.conclusion = ws.front();
        expect(Tok::Dot);
        out.push_back(std::move(r));
        continue;
      }
      r.premises = std::move(ws);
      r.conclusion = wff();
      expect(Tok::Dot);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw SyntaxError(msg, at.line, at.column);
  }
  Token expect(Tok k) {
    const Token& t = peek();
    if (t.kind != k) {
      fail(std::string("expected ") + detail::describe(k) + ", found " +
               (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"),
           t);
    }
    return next();
  }

  Individual individual() {
    Individual ind{expect(Tok::Ident).text, {}};
    if (accept(Tok::LParen)) {
      do {
        ind.args.push_back(individual());
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    return ind;
  }

  Wff wff() {
    Token start = peek();
    bool negated = accept(Tok::Tilde);
    const Token& t = peek();
    if (t.kind == Tok::Tilde || t.kind == Tok::LParen ||
        (t.kind == Tok::Ident && t.text == "G" && peek(1).kind == Tok::LParen)) {
      fail("compound wff", start);
    }
    Wff w;
    if (t.kind == Tok::Ident && t.text == "true") {
      if (negated) fail("compound wff", start);
      next();
      w = Wff::truth();
    } else {
      Token name = expect(Tok::Ident);
      std::vector<Individual> args;
      if (accept(Tok::LParen)) {
        do {
          args.push_back(individual());
        } while (accept(Tok::Comma));
        expect(Tok::RParen);
      }
      w = Wff::atom(name.text, std::move(args), negated);
    }
    Tok k = peek().kind;
    if (k == Tok::Amp || k == Tok::Bar || k == Tok::Less || k == Tok::EqEq) {
      fail("compound wff", start);
    }
    return w;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

RuleSet parse_rules(std::string_view text) {
  return RuleSet(RuleParser(text).rules());
}

std::vector<std::size_t> ArgumentSystem::subtree(std::size_t id) const {
  std::vector<std::size_t> out = {id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto c : arguments[out[i]].children) out.push_back(c);
  }
  return out;
}

std::vector<Wff> ArgumentSystem::nodes(std::size_t id) const {
  std::vector<Wff> out;
  for (auto i : subtree(id)) out.push_back(arguments[i].root);
  return out;
}

std::string ArgumentSystem::describe(std::size_t id) const {
  const Argument& a = arguments[id];
  std::string out = a.label + ": ";
  if (a.kind == RuleKind::BaseFact) return out + a.root.str();
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (i) out += ", ";
    out += arguments[a.children[i]].label;
  }
  out += a.kind == RuleKind::Monotonic ? " -" + a.rule + "-> "
                                       : " =" + a.rule + "=> ";
  return out + a.root.str();
}

ArgumentSystem enumerate_arguments(const RuleSet& rules,
                                   std::size_t depth_cap) {
  if (depth_cap < 1) throw InvalidArgument("depth cap must be positive");
  ArgumentSystem sys;
  sys.rules = rules;
  std::set<std::pair<std::string, std::vector<std::size_t>>> seen;
  auto add = [&](const Rule& r, std::vector<std::size_t> children) {
    if (!seen.insert({r.label, children}).second) return;
    Argument a;
    a.label = "p" + std::to_string(sys.arguments.size() + 1);
    a.root = r.conclusion;
    a.rule = r.label;
    a.kind = r.kind;
    a.children = std::move(children);
    sys.arguments.push_back(std::move(a));
  };
  for (const auto& r : rules.rules()) {
    if (r.kind == RuleKind::BaseFact) add(r, {});
  }
  for (std::size_t round = 1;; ++round) {
    const std::size_t available = sys.arguments.size();
    for (const auto& r : rules.rules()) {
      if (r.kind == RuleKind::BaseFact) continue;
      std::vector<std::vector<std::size_t>> options;
      for (const auto& prem : r.premises) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < available; ++i) {
          if (sys.arguments[i].root == prem) ids.push_back(i);
        }
        options.push_back(std::move(ids));
      }
      if (std::any_of(options.begin(), options.end(),
                      [](const auto& o) { return o.empty(); })) {
        continue;
      }
      std::vector<std::size_t> pick(options.size(), 0);
      for (;;) {
        std::vector<std::size_t> children;
        bool repeats = false;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          std::size_t c = options[i][pick[i]];
          children.push_back(c);
          for (const auto& w : sys.nodes(c)) {
            if (w == r.conclusion) repeats = true;
          }
        }
        if (!repeats) add(r, std::move(children));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
    if (sys.arguments.size() == available) break;
    if (round >= depth_cap) {
      throw CapExceeded("argument depth cap of " + std::to_string(depth_cap) +
                        " exceeded");
    }
  }
  return sys;
}

namespace {

bool consistent_roots(const ArgumentSystem& sys,
                      const std::set<std::size_t>& ids) {
  std::set<std::string> roots;
  for (auto i : ids) roots.insert(sys.arguments[i].root.str());
  for (auto i : ids) {
    if (roots.count(sys.arguments[i].root.complement().str())) return false;
  }
  return true;
}

}  // namespace

std::vector<ArgumentStructure> enumerate_structures(const ArgumentSystem& sys) {
  std::vector<std::size_t> nm_rooted, base;
  for (std::size_t i = 0; i < sys.arguments.size(); ++i) {
    if (sys.arguments[i].kind == RuleKind::NonMonotonic) nm_rooted.push_back(i);
    if (sys.arguments[i].kind == RuleKind::BaseFact) base.push_back(i);
  }
  if (nm_rooted.size() >= 63 ||
      (std::size_t{1} << nm_rooted.size()) > kSubsetCap) {
    throw CapExceeded("subset cap of " + std::to_string(kSubsetCap) +
                      " exceeded by " + std::to_string(nm_rooted.size()) +
                      " non-monotonic arguments");
  }
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> ordered;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nm_rooted.size());
       ++mask) {
    std::set<std::size_t> s(base.begin(), base.end());
    for (std::size_t j = 0; j < nm_rooted.size(); ++j) {
      if ((mask >> j) & 1u) {
        for (auto i : sys.subtree(nm_rooted[j])) s.insert(i);
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < sys.arguments.size(); ++i) {
        const Argument& a = sys.arguments[i];
        if (a.kind != RuleKind::Monotonic || s.count(i)) continue;
        if (std::all_of(a.children.begin(), a.children.end(),
                        [&](std::size_t c) { return s.count(c) != 0; })) {
          s.insert(i);
          changed = true;
        }
      }
    }
    if (!consistent_roots(sys, s)) continue;
    std::vector<std::size_t> v(s.begin(), s.end());
    if (found.insert(v).second) ordered.push_back(std::move(v));
  }
  std::vector<ArgumentStructure> out;
  for (const auto& v : ordered) {
    ArgumentStructure t;
    t.arguments = v;
    t.maximal = std::none_of(ordered.begin(), ordered.end(), [&](const auto& o) {
      return o.size() > v.size() &&
             std::includes(o.begin(), o.end(), v.begin(), v.end());
    });
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> argument_labels(const ArgumentSystem& sys,
                                         const ArgumentStructure& t) {
  std::vector<std::string> out;
  for (auto i : t.arguments) out.push_back(sys.arguments[i].label);
  return out;
}

std::vector<Wff> wffs(const ArgumentSystem& sys, const ArgumentStructure& t) {
  std::set<Wff> s;
  for (auto i : t.arguments) s.insert(sys.arguments[i].root);
  return {s.begin(), s.end()};
}

bool is_complete(const ArgumentSystem& sys, const ArgumentStructure& t,
                 const Wff& phi) {
  std::vector<Wff> ws = wffs(sys, t);
  auto has = [&](const Wff& w) {
    return std::find(ws.begin(), ws.end(), w) != ws.end();
  };
  return has(phi) || has(phi.complement());
}

std::vector<Rule> rules_of_structure(const ArgumentSystem& sys,
                                     const ArgumentStructure& t) {
  std::set<std::string> labels;
  for (auto i : t.arguments) {
    for (auto j : sys.subtree(i)) labels.insert(sys.arguments[j].rule);
  }
  std::vector<Rule> out;
  for (const auto& r : sys.rules.rules()) {
    if (labels.count(r.label)) out.push_back(r);
  }
  return out;
}

Term pi(const Rule& r) {
  if (r.kind == RuleKind::BaseFact) return r.conclusion.term();
  std::vector<Term> premises;
  for (const auto& p : r.premises) premises.push_back(p.term());
  return Term::implication(Term::conjunction_of(premises), r.conclusion.term());
}

Term chain_term(const Term& t, std::size_t d) {
  if (d < 1) throw InvalidArgument("chain depth must be at least 1");
  Term out = t;
  for (std::size_t i = 0; i < d; ++i) out = Term::graded(out, Grade(1));
  return out;
}

std::size_t Indexing::index_of(std::vector<std::string> labels) const {
  if (labels.empty()) return 0;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i] == labels) return i + 1;
  }
  std::string joined;
  for (const auto& l : labels) joined += (joined.empty() ? "" : ", ") + l;
  throw InvalidArgument("subset {" + joined + "} has no index");
}

std::string Indexing::str() const {
  std::string out;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    out += std::to_string(i + 1) + ":";
    for (std::size_t j = 0; j < subsets[i].size(); ++j) {
      out += (j ? ", " : " ") + subsets[i][j];
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> sorted_nm_labels(const RuleSet& rules) {
  std::vector<std::string> labels = rules.nonmonotonic_labels();
  std::sort(labels.begin(), labels.end());
  return labels;
}

void check_subset_cap(std::size_t k) {
  if (k >= 63 || (std::size_t{1} << k) > kSubsetCap) {
    throw CapExceeded("subset cap of " + std::to_string(kSubsetCap) +
                      " exceeded by " + std::to_string(k) +
                      " non-monotonic rules");
  }
}

}  // namespace

Indexing default_indexing(const RuleSet& rules) {
  std::vector<std::string> labels = sorted_nm_labels(rules);
  check_subset_cap(labels.size());
  Indexing idx;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << labels.size());
       ++mask) {
    std::vector<std::string> s;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if ((mask >> j) & 1u) s.push_back(labels[j]);
    }
    idx.subsets.push_back(std::move(s));
  }
  std::sort(idx.subsets.begin(), idx.subsets.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return idx;
}

Indexing parse_indexing(std::string_view text, const RuleSet& rules) {
  std::vector<Token> toks = detail::tokenize(text);
  std::vector<std::string> labels = sorted_nm_labels(rules);
  check_subset_cap(labels.size());
  const std::size_t total = (std::size_t{1} << labels.size()) - 1;
  std::vector<std::optional<std::vector<std::string>>> slots(total);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    const Token& t = toks[std::min(pos, toks.size() - 1)];
    throw SyntaxError(msg, t.line, t.column);
  };
  while (toks[pos].kind != Tok::End) {
    if (toks[pos].kind != Tok::Number) fail("expected index");
    std::size_t n = 0;
    try {
      n = std::stoul(toks[pos].text);
    } catch (const std::exception&) {
      fail("bad index '" + toks[pos].text + "'");
    }
    const std::size_t line = toks[pos].line;
    ++pos;
    if (toks[pos].kind != Tok::Colon) fail("expected ':'");
    ++pos;
    std::vector<std::string> s;
    while (toks[pos].kind == Tok::Ident && toks[pos].line == line) {
      if (!std::binary_search(labels.begin(), labels.end(), toks[pos].text)) {
        fail("'" + toks[pos].text + "' is not a non-monotonic rule");
      }
      s.push_back(toks[pos].text);
      ++pos;
      if (toks[pos].kind == Tok::Comma) ++pos;
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidArgument("repeated label in the subset with index " +
                            std::to_string(n));
    }
    if (s.empty()) throw InvalidArgument("index " + std::to_string(n) +
                                         " has an empty subset");
    if (n < 1 || n > total) {
      throw InvalidArgument("index " + std::to_string(n) + " outside 1.." +
                            std::to_string(total));
    }
    if (slots[n - 1]) {
      throw InvalidArgument("index " + std::to_string(n) + " assigned twice");
    }
    slots[n - 1] = std::move(s);
  }
  Indexing idx;
  std::set<std::vector<std::string>> distinct;
  for (std::size_t i = 0; i < total; ++i) {
    if (!slots[i]) {
      throw InvalidArgument("indexing is not total: index " +
                            std::to_string(i + 1) + " is missing");
    }
    if (!distinct.insert(*slots[i]).second) {
      throw InvalidArgument("indexing is not injective");
    }
    idx.subsets.push_back(*slots[i]);
  }
  return idx;
}

Theory Translation::theory(const std::string& name) const {
  Theory th(name);
  for (const auto& t : monotonic_part) th.add(t);
  for (const auto& t : nonmonotonic_part) th.add(t);
  return th;
}

Translation translate(const RuleSet& rules, const Indexing& idx) {
  Translation tr;
  tr.indexing = idx;
  TermSet seen;
  for (const auto& r : rules.rules()) {
    if (r.kind == RuleKind::NonMonotonic) continue;
    if (seen.insert(pi(r)).second) tr.monotonic_part.push_back(pi(r));
  }
  if (!is_consistent(TermSet(tr.monotonic_part.begin(),
                             tr.monotonic_part.end()))) {
    throw InvalidArgument("the monotonic part of the rule set is inconsistent");
  }
  std::vector<std::string> nm = rules.nonmonotonic_labels();
  const std::size_t total =
      nm.empty() ? 0 : (std::size_t{1} << nm.size()) - 1;
  if (idx.subsets.size() != total) {
    throw InvalidArgument("indexing is not total over the non-monotonic rules");
  }
  auto push = [&](const Term& t) {
    if (seen.insert(t).second) tr.nonmonotonic_part.push_back(t);
  };
  for (std::size_t i = 0; i < idx.subsets.size(); ++i) {
    const auto& s = idx.subsets[i];
    auto in_s = [&](const std::string& l) {
      return std::find(s.begin(), s.end(), l) != s.end();
    };
    for (const auto& l : nm) {
      if (in_s(l)) push(chain_term(pi(rules.rule(l)), i + 1));
    }
    for (const auto& l : nm) {
      if (in_s(l)) continue;
      Term p = pi(rules.rule(l));
      push(chain_term(p, i + 1));
      push(chain_term(Term::negation(p), i + 1));
    }
  }
  return tr;
}

std::size_t structure_level(const ArgumentSystem& sys,
                            const ArgumentStructure& t, const Indexing& idx) {
  std::vector<std::string> s;
  for (const auto& r : rules_of_structure(sys, t)) {
    if (r.kind == RuleKind::NonMonotonic) s.push_back(r.label);
  }
  return idx.index_of(s);
}

Theorem1Report check_theorem1(const ArgumentSystem& sys, const Indexing& idx,
                              const ArgumentStructure& t,
                              const TelescopeOptions& options) {
  Theorem1Report report;
  report.level = structure_level(sys, t, idx);
  Theory theory = translate(sys.rules, idx).theory();
  std::vector<Wff> ws = wffs(sys, t);
  TermSet queries;
  for (const auto& w : ws) queries.insert(w.term());
  TelescopingState st(theory, Canon{Otimes::Sum, Oplus::Max, report.level},
                      queries, options);
  TelescopeTrace trace = telescope_n(st);
  for (const auto& w : ws) {
    bool ok = graded_consequence(trace, st, w.term());
    report.results.emplace_back(w, ok);
    report.pass = report.pass && ok;
  }
  return report;
}

Theorem2Report check_theorem2(const ArgumentSystem& sys, const Indexing& idx,
                              const ArgumentStructure& t,
                              const TelescopeOptions& options) {
  Theorem2Report report;
  report.level = structure_level(sys, t, idx);
  Theory theory = translate(sys.rules, idx).theory();
  TermSet queries;
  for (const auto& w : wffs(sys, t)) queries.insert(w.term());
  TelescopingState st(theory, Canon{Otimes::Sum, Oplus::Max, report.level},
                      queries, options);
  TelescopeTrace trace = telescope_n(st);
  const Oracle& oracle = st.oracle();

  TermSet core;
  for (const auto& r : rules_of_structure(sys, t)) core.insert(pi(r));
  std::vector<Rule> monotonic = sys.rules.of_kind(RuleKind::Monotonic);

  TermSet greedy = core;
  for (const auto& r : monotonic) {
    TermSet trial = greedy;
    trial.insert(pi(r));
    if (oracle.is_consistent(trial)) {
      greedy = std::move(trial);
      report.greedy_extension.push_back(r.label);
    }
  }
  std::vector<TermSet> bases = {greedy};
  if (monotonic.size() < 63 &&
      (std::size_t{1} << monotonic.size()) <= kSubsetCap) {
    std::vector<std::uint64_t> consistent;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << monotonic.size()); ++m) {
      TermSet trial = core;
      for (std::size_t j = 0; j < monotonic.size(); ++j) {
        if ((m >> j) & 1u) trial.insert(pi(monotonic[j]));
      }
      if (oracle.is_consistent(trial)) consistent.push_back(m);
    }
    for (auto m : consistent) {
      bool maximal = std::none_of(consistent.begin(), consistent.end(),
                                  [m](std::uint64_t o) {
                                    return o != m && (o & m) == m;
                                  });
      if (!maximal) continue;
      ++report.maximal_extensions;
      TermSet b = core;
      for (std::size_t j = 0; j < monotonic.size(); ++j) {
        if ((m >> j) & 1u) b.insert(pi(monotonic[j]));
      }
      bases.push_back(std::move(b));
    }
  }
  std::vector<Oracle::Table> base_models;
  for (const auto& b : bases) base_models.push_back(oracle.models(b));
  Oracle::Table final_models = oracle.models(trace.final_base());
  for (const auto& psi : st.universe().terms) {
    if (psi.contains_grading()) continue;
    if (!oracle.entails(final_models, psi)) continue;
    ++report.consequences_checked;
    bool ok = std::all_of(base_models.begin(), base_models.end(),
                          [&](const Oracle::Table& m) {
                            return oracle.entails(m, psi);
                          });
    if (!ok) {
      report.failures.push_back(psi.str());
      report.pass = false;
    }
  }
  return report;
}

}  // namespace logag
