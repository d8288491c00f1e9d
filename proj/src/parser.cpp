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

#include "logag/parser.hpp"

#include <functional>
#include <optional>
#include <set>

#include "lexer.hpp"
#include "logag/error.hpp"

namespace logag {

using detail::Tok;
using detail::Token;

void Theory::add_domain(const std::string& name,
                        std::vector<Individual> members) {
  domains_[name] = std::move(members);
}

bool Theory::add(const Term& t) {
  if (!index_.insert(t).second) return false;
  terms_.push_back(t);
  return true;
}

std::string Theory::str() const {
  std::string out;
  if (!name_.empty()) out += "theory " + name_ + ".\n";
  for (const auto& [name, members] : domains_) {
    out += "domain " + name + " = {";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += ", ";
      out += members[i].str();
    }
    out += "}.\n";
  }
  for (const auto& t : terms_) out += t.str() + ".\n";
  return out;
}

namespace {

const std::set<std::string> kKeywords = {"true", "forall", "in", "domain",
                                         "theory"};

using Binding = std::map<std::string, Individual>;

Individual substitute(const Individual& ind, const Binding& b) {
  if (ind.args.empty()) {
    if (auto it = b.find(ind.name); it != b.end()) return it->second;
    return ind;
  }
  Individual out{ind.name, {}};
  out.args.reserve(ind.args.size());
  for (const auto& a : ind.args) out.args.push_back(substitute(a, b));
  return out;
}

Term substitute(const Term& t, const Binding& b) {
  switch (t.kind()) {
    case TermKind::Atom: {
      std::vector<Individual> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, b));
      return Term::atom(t.predicate(), std::move(args));
    }
    case TermKind::Not:
      return Term::negation(substitute(t.operand(), b));
    case TermKind::And:
      return Term::conjunction(substitute(t.left(), b),
                               substitute(t.right(), b));
    case TermKind::Or:
      return Term::disjunction(substitute(t.left(), b),
                               substitute(t.right(), b));
    case TermKind::Grade:
      return Term::graded(substitute(t.inner(), b), t.grade());
    default:
      return t;
  }
}

class Parser {
 public:
  Parser(std::string_view text, Theory* theory)
      : toks_(detail::tokenize(text)), theory_(theory) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

  void theory_file() {
    std::optional<std::string> declared_name;
    while (peek().kind != Tok::End) {
      const Token& head = peek();
      if (head.kind == Tok::Ident && head.text == "theory") {
        next();
        Token name = expect(Tok::Ident);
        if (declared_name) {
          fail("duplicate theory name '" + name.text + "'", name);
        }
        declared_name = name.text;
        theory_->set_name(name.text);
        expect(Tok::Dot);
      } else if (head.kind == Tok::Ident && head.text == "domain") {
        domain_decl();
      } else if (head.kind == Tok::Ident && head.text == "forall") {
        next();
        auto [vars, members] = quantifier_head();
        Term body = term();
        expect(Tok::Dot);
        for_each_instance(vars, members, [&](const Binding& b) {
          theory_->add(substitute(body, b));
        });
      } else {
        Term t = term();
        expect(Tok::Dot);
        theory_->add(t);
      }
    }
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
      if (t.kind == Tok::FatArrow) fail("unknown operator '=>'", t);
      fail(std::string("expected ") + detail::describe(k) + ", found " +
               (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"),
           t);
    }
    return next();
  }

  Token identifier() {
    Token t = expect(Tok::Ident);
    if (kKeywords.count(t.text)) {
      fail("unexpected keyword '" + t.text + "'", t);
    }
    return t;
  }

  void domain_decl() {
    next();
    Token name = identifier();
    expect(Tok::Eq);
    expect(Tok::LBrace);
    std::vector<Individual> members;
    if (peek().kind != Tok::RBrace) {
      do {
        members.push_back({identifier().text, {}});
      } while (accept(Tok::Comma));
    }
    expect(Tok::RBrace);
    expect(Tok::Dot);
    if (members.empty()) fail("empty domain '" + name.text + "'", name);
    if (theory_->domains().count(name.text)) {
      fail("duplicate domain '" + name.text + "'", name);
    }
    theory_->add_domain(name.text, std::move(members));
  }

  std::pair<std::vector<std::string>, const std::vector<Individual>*>
  quantifier_head() {
    std::vector<std::string> vars;
    do {
      vars.push_back(identifier().text);
    } while (accept(Tok::Comma));
    Token in = expect(Tok::Ident);
    if (in.text != "in") fail("expected 'in', found '" + in.text + "'", in);
    Token dom = identifier();
    expect(Tok::Colon);
    if (theory_ == nullptr) {
      fail("quantifier outside a theory (no domains in scope)", dom);
    }
    auto it = theory_->domains().find(dom.text);
    if (it == theory_->domains().end()) {
      fail("undeclared domain '" + dom.text + "'", dom);
    }
    return {std::move(vars), &it->second};
  }

  static void for_each_instance(const std::vector<std::string>& vars,
                                const std::vector<Individual>* members,
                                const std::function<void(const Binding&)>& f) {
    Binding b;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == vars.size()) {
        f(b);
        return;
      }
      for (const auto& m : *members) {
        b[vars[i]] = m;
        rec(i + 1);
      }
    };
    rec(0);
  }

  // term := disj ("->" term)?
  Term term() {
    Term lhs = disjunction();
    if (accept(Tok::Arrow)) return Term::implication(lhs, term());
    return lhs;
  }

  Term disjunction() {
    Term t = conjunction();
    while (accept(Tok::Bar)) t = Term::disjunction(t, conjunction());
    return t;
  }

  Term conjunction() {
    Term t = unary();
    while (accept(Tok::Amp)) t = Term::conjunction(t, unary());
    return t;
  }

  Term unary() {
    if (accept(Tok::Tilde)) return Term::negation(unary());
    return primary();
  }

  Grade grade_literal() {
    Token t = peek();
    if (t.kind != Tok::Number) {
      fail("expected grade, found " +
               (t.kind == Tok::End ? std::string("end of input")
                                   : "'" + t.text + "'"),
           t);
    }
    next();
    try {
      return Grade::parse(t.text);
    } catch (const InvalidArgument& e) {
      fail(e.what(), t);
    }
  }

  Individual individual() {
    Individual ind{identifier().text, {}};
    if (accept(Tok::LParen)) {
      do {
        ind.args.push_back(individual());
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    return ind;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        Term inner = term();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Number: {
        Grade a = grade_literal();
        const Token& op = peek();
        if (op.kind == Tok::Less) {
          next();
          return Term::less(a, grade_literal());
        }
        if (op.kind == Tok::EqEq) {
          next();
          return Term::grade_eq(a, grade_literal());
        }
        fail("expected '<' or '==' after grade", op);
      }
      case Tok::Ident:
        break;
      case Tok::FatArrow:
        fail("unknown operator '=>'", t);
      case Tok::End:
        fail("unexpected end of input", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
    if (t.text == "true") {
      next();
      return Term::truth();
    }
    if (t.text == "forall") {
      Token kw = next();
      if (theory_ == nullptr) {
        fail("quantifier outside a theory (no domains in scope)", kw);
      }
      auto [vars, members] = quantifier_head();
      Term body = term();
      std::vector<Term> instances;
      for_each_instance(vars, members, [&](const Binding& b) {
        instances.push_back(substitute(body, b));
      });
      return Term::conjunction_of(instances);
    }
    if (t.text == "G" && peek(1).kind == Tok::LParen) {
      next();
      next();
      Term inner = term();
      expect(Tok::Comma);
      Grade g = grade_literal();
      expect(Tok::RParen);
      return Term::graded(inner, g);
    }
    Token name = identifier();
    std::vector<Individual> args;
    if (accept(Tok::LParen)) {
      do {
        args.push_back(individual());
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    return Term::atom(name.text, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Theory* theory_;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text, nullptr);
  return p.whole_term();
}

Theory parse_theory(std::string_view text, std::string default_name) {
  Theory theory(std::move(default_name));
  Parser p(text, &theory);
  p.theory_file();
  return theory;
}

}  // namespace logag
