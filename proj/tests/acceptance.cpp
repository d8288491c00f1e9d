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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on
// any failure.

#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>

#include "logag/argument.hpp"
#include "logag/classical.hpp"
#include "logag/error.hpp"
#include "logag/graded.hpp"
#include "support.hpp"

namespace {

using namespace logag;
using testing::Gen;
using testing::reference_closure;
using testing::reference_consistent;
using testing::reference_entails;

bool penguin_example() {
  Theory th = testing::load_theory("penguin.logag");
  TelescopingState st(th, Canon{Otimes::Mean, Oplus::Max, 3},
                      testing::terms({"p", "w", "~f"}));
  TelescopeTrace tr = telescope_n(st);
  const Oracle& o = st.oracle();
  auto at = [&](std::size_t n, const char* q) {
    return o.entails(tr.levels[n].base, parse_term(q));
  };
  bool level1 = at(1, "p") && at(1, "w") && at(1, "~f");
  bool level2 = !at(2, "p") && !at(2, "~f");
  std::vector<Kernel> expected = {testing::terms({"f", "~f"}),
                                  testing::terms({"p", "~p | ~f", "f"})};
  bool kernels = tr.levels[1].kernels == expected;
  bool fix = st.mutually_entail(tr.levels[3].base, tr.levels[2].base) &&
             tr.levels[2].fixpoint;
  return level1 && level2 && kernels && fix;
}

bool opus_examples() {
  Theory ot1 = testing::load_theory("ot1.logag");
  Theory ot2 = testing::load_theory("ot2.logag");
  Canon c{Otimes::Sum, Oplus::Max, 1};
  auto holds = [&](const Theory& th, const char* q) {
    return graded_consequence(th, c, parse_term(q));
  };
  bool de_re = holds(ot1, "Flies(Tweety)") && holds(ot1, "~Flies(Opus)") &&
               holds(ot1, "G(Flies(Opus), 5)") && !holds(ot1, "Flies(Opus)");
  FixpointResult fp = find_fixpoint(ot1, Otimes::Sum, Oplus::Max, 3);
  bool fixed = fp.found && fp.level == 1;
  bool de_dicto = holds(ot2, "~Flies(Opus)") && !holds(ot2, "Flies(Tweety)");
  return de_re && fixed && de_dicto;
}

RuleSet penguin_rules() {
  return parse_rules(testing::slurp(testing::data_path("penguin.rules")));
}

bool argument_example() {
  ArgumentSystem sys = enumerate_arguments(penguin_rules());
  const char* shapes[] = {
      "p1: true",
      "p2: penguin(A)",
      "p3: p2 -r3-> bird(A)",
      "p4: p2 -r6-> abnormal(bird(A))",
      "p5: p1 =r7=> ~abnormal(penguin(A))",
      "p6: p1 =r8=> ~abnormal(bird(A))",
      "p7: p3, p6 -r4-> flies(A)",
      "p8: p2, p5 -r5-> ~flies(A)",
  };
  if (sys.arguments.size() != 8) return false;
  for (std::size_t i = 0; i < 8; ++i) {
    if (sys.describe(i) != shapes[i]) return false;
  }
  auto sts = enumerate_structures(sys);
  if (sts.size() != 2) return false;
  using L = std::vector<std::string>;
  if (argument_labels(sys, sts[0]) != L{"p1", "p2", "p3", "p4"}) return false;
  if (argument_labels(sys, sts[1]) != L{"p1", "p2", "p3", "p4", "p5", "p8"}) {
    return false;
  }
  Individual a{"A", {}};
  Wff ab_bird = Wff::atom("abnormal", {Individual{"bird", {a}}});
  Wff ab_penguin = Wff::atom("abnormal", {Individual{"penguin", {a}}});
  return is_complete(sys, sts[1], ab_bird) &&
         is_complete(sys, sts[1], ab_penguin) &&
         !is_complete(sys, sts[0], ab_penguin);
}

bool translation_example() {
  RuleSet rs = penguin_rules();
  Translation tr = translate(rs, default_indexing(rs));
  std::set<std::string> expected = {
      "true",
      "penguin(A)",
      "~penguin(A) | bird(A)",
      "~(bird(A) & ~abnormal(bird(A))) | flies(A)",
      "~(penguin(A) & ~abnormal(penguin(A))) | ~flies(A)",
      "~penguin(A) | abnormal(bird(A))",
      "G(~true | ~abnormal(penguin(A)), 1)",
      "G(~true | ~abnormal(bird(A)), 1)",
      "G(~(~true | ~abnormal(bird(A))), 1)",
      "G(G(~true | ~abnormal(bird(A)), 1), 1)",
      "G(G(~true | ~abnormal(penguin(A)), 1), 1)",
      "G(G(~(~true | ~abnormal(penguin(A))), 1), 1)",
      "G(G(G(~true | ~abnormal(penguin(A)), 1), 1), 1)",
      "G(G(G(~true | ~abnormal(bird(A)), 1), 1), 1)",
  };
  std::set<std::string> got;
  for (const auto& t : tr.monotonic_part) got.insert(t.str());
  for (const auto& t : tr.nonmonotonic_part) got.insert(t.str());
  if (got != expected) return false;
  Theory th = tr.theory("penguin");
  for (std::size_t n = 0; n <= 3; ++n) {
    TelescopingState st(th, Canon{Otimes::Sum, Oplus::Max, n});
    TelescopeTrace trace = telescope_n(st);
    auto holds = [&](const char* q) {
      return graded_consequence(trace, st, parse_term(q));
    };
    if (!holds("bird(A)") || !holds("abnormal(bird(A))")) return false;
    bool odd = n % 2 == 1;
    if (holds("~abnormal(penguin(A))") != odd) return false;
    if (holds("~flies(A)") != odd) return false;
  }
  return true;
}

bool theorem_harness() {
  RuleSet rs = penguin_rules();
  ArgumentSystem sys = enumerate_arguments(rs);
  Indexing idx = default_indexing(rs);
  auto sts = enumerate_structures(sys);
  if (sts.size() != 2) return false;
  const std::size_t levels[] = {0, 1};
  for (std::size_t i = 0; i < 2; ++i) {
    Theorem1Report r1 = check_theorem1(sys, idx, sts[i]);
    Theorem2Report r2 = check_theorem2(sys, idx, sts[i]);
    if (r1.level != levels[i] || !r1.pass || !r2.pass) return false;
  }
  return true;
}

bool reduction_property() {
  Gen g(601);
  for (int i = 0; i < 120; ++i) {
    TermSet th = g.plain_theory(8, 12);
    TelescopingState st(th, Canon{Otimes::Mean, Oplus::Max, g.below(5)});
    TelescopeTrace tr = telescope_n(st);
    for (const auto& u : st.universe().terms) {
      if (graded_consequence(tr, st, u) != reference_entails(th, u)) {
        return false;
      }
    }
  }
  for (int i = 0; i < 120; ++i) {
    TermSet th = g.graded_theory(6, 10);
    TelescopingState st(th, Canon{Otimes::Sum, Oplus::Max, 0});
    TelescopeTrace tr = telescope_n(st);
    for (const auto& u : st.universe().terms) {
      if (graded_consequence(tr, st, u) != reference_entails(th, u)) {
        return false;
      }
    }
  }
  return true;
}

bool kernel_property() {
  Gen g(701);
  KernelOptions closure;
  closure.mode = KernelMode::EmbeddedClosure;
  for (int i = 0; i < 150; ++i) {
    TermSet q = g.graded_theory(4, 10);
    Universe u = relevant_universe(q);
    auto inconsistent = [&](const TermSet& s) {
      return !reference_consistent(reference_closure(s, u));
    };
    for (const auto& k : bottom_kernels(q, u, closure)) {
      if (!inconsistent(k)) return false;
      std::vector<Term> v(k.begin(), k.end());
      for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << v.size()); ++m) {
        TermSet sub;
        for (std::size_t j = 0; j < v.size(); ++j) {
          if ((m >> j) & 1u) sub.insert(v[j]);
        }
        if (inconsistent(sub)) return false;
      }
    }
  }
  return true;
}

bool consistency_property() {
  Gen g(801);
  int checked = 0;
  while (checked < 120) {
    TermSet th = g.graded_theory(6, 10);
    if (!reference_consistent(th)) continue;
    ++checked;
    TelescopingState st(th, Canon{Otimes::Sum, Oplus::Max, 5});
    for (const auto& l : telescope_n(st).levels) {
      if (!reference_consistent(l.base)) return false;
    }
  }
  return true;
}

bool fused_grade_law() {
  Gen g(901);
  Canon c{Otimes::Sum, Oplus::Max, 0};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    RuleSet rs = g.rules(4, 1 + g.below(2), g.below(3), 1 + g.below(3));
    std::optional<Translation> tr;
    try {
      tr = translate(rs, default_indexing(rs));
    } catch (const InvalidArgument&) {
      continue;
    }
    TermSet q = tr->theory().term_set();
    for (std::size_t n = 1; n <= tr->indexing.subsets.size(); ++n) {
      TermSet qn = embedded_up_to(q, n);
      for (const auto& label : tr->indexing.subsets[n - 1]) {
        Term p = pi(rs.rule(label));
        if (fused_grade(p, qn, c, n) != Grade(static_cast<int64_t>(n))) {
          return false;
        }
        ++checked;
      }
    }
  }
  return checked > 0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<bool()> check;
  };
  const Criterion criteria[] = {
      {"penguin and brother telescoping levels, kernels and fixpoint",
       penguin_example},
      {"de re and de dicto Opus theories", opus_examples},
      {"argument and structure enumeration", argument_example},
      {"rule translation and four-level table", translation_example},
      {"structure theorems on the penguin rules", theorem_harness},
      {"reduction to classical entailment", reduction_property},
      {"kernels minimal under embedded closure", kernel_property},
      {"consistency preservation over five levels", consistency_property},
      {"fused grade of a chain at index n equals n", fused_grade_law},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    bool ok = false;
    std::string note;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %s - %s%s\n", n, ok ? "PASS" : "FAIL",
                c.description, note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
