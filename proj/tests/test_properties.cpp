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

#include <gtest/gtest.h>

#include <set>

#include "logag/argument.hpp"
#include "logag/classical.hpp"
#include "logag/error.hpp"
#include "logag/graded.hpp"
#include "support.hpp"

namespace logag {
namespace {

using testing::Gen;
using testing::reference_closure;
using testing::reference_consistent;
using testing::reference_entails;

std::vector<Term> members(const TermSet& s) { return {s.begin(), s.end()}; }

TermSet pick(const std::vector<Term>& v, std::uint64_t mask) {
  TermSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((mask >> i) & 1u) out.insert(v[i]);
  }
  return out;
}

TEST(Properties, TermsRoundTrip) {
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Term t = g.term(5, 4, true);
    Term back = parse_term(t.str());
    EXPECT_EQ(back, t) << t.str();
    EXPECT_EQ(back.str(), t.str());
  }
}

TEST(Properties, OracleAgreesWithReference) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    TermSet base = g.graded_theory(10, 6);
    Term goal = g.term(10, 3, true);
    TermSet all = base;
    all.insert(goal);
    Oracle o(all);
    EXPECT_EQ(o.entails(base, goal), reference_entails(base, goal));
    EXPECT_EQ(o.is_consistent(base), reference_consistent(base));
  }
}

TEST(Properties, EntailmentIsMonotonic) {
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    TermSet base = g.plain_theory(5, 5);
    Term goal = g.term(5, 3, false);
    if (!entails(base, goal)) continue;
    TermSet more = base;
    more.insert(g.term(5, 3, false));
    EXPECT_TRUE(entails(more, goal));
  }
}

TEST(Properties, EmbeddedClosureMatchesReference) {
  Gen g(14);
  for (int i = 0; i < 150; ++i) {
    TermSet base = g.graded_theory(5, 6);
    Universe u = relevant_universe(base);
    TermSet closed = embedded_closure(base, u);
    EXPECT_EQ(closed, reference_closure(base, u));
    EXPECT_EQ(embedded_closure(closed, u), closed);
  }
}

// Brute force over every subset of q: kernels are exactly the minimal
// subsets that are inconsistent under the given test.
template <typename Inconsistent>
void check_kernels(const TermSet& q, const std::vector<Kernel>& ks,
                   Inconsistent inconsistent) {
  std::vector<Term> v = members(q);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
    if (inconsistent(pick(v, m))) bad.push_back(m);
  }
  std::set<TermSet> expected;
  for (auto m : bad) {
    bool minimal = true;
    for (auto o : bad) {
      if (o != m && (o & m) == o) {
        minimal = false;
        break;
      }
    }
    if (minimal) expected.insert(pick(v, m));
  }
  std::set<TermSet> got(ks.begin(), ks.end());
  EXPECT_EQ(got.size(), ks.size());
  EXPECT_EQ(got, expected);
  for (const auto& k : ks) {
    EXPECT_TRUE(inconsistent(k));
    for (const auto& t : k) {
      TermSet smaller = k;
      smaller.erase(t);
      EXPECT_FALSE(inconsistent(smaller));
    }
  }
}

TEST(Properties, ClassicalKernelsAreMinimalInconsistentSubsets) {
  Gen g(15);
  for (int i = 0; i < 150; ++i) {
    TermSet q = g.graded_theory(4, 10);
    Universe u = relevant_universe(q);
    check_kernels(q, bottom_kernels(q, u),
                  [](const TermSet& s) { return !reference_consistent(s); });
  }
}

TEST(Properties, ClosureKernelsAreMinimalUnderEmbeddedClosure) {
  Gen g(16);
  KernelOptions closure;
  closure.mode = KernelMode::EmbeddedClosure;
  for (int i = 0; i < 60; ++i) {
    TermSet q = g.graded_theory(4, 8);
    Universe u = relevant_universe(q);
    check_kernels(q, bottom_kernels(q, u, closure), [&](const TermSet& s) {
      return !reference_consistent(reference_closure(s, u));
    });
  }
}

TEST(Properties, KernelOrderIsDeterministic) {
  Gen g(17);
  for (int i = 0; i < 50; ++i) {
    TermSet q = g.graded_theory(4, 10);
    auto ks = bottom_kernels(q, relevant_universe(q));
    EXPECT_TRUE(std::is_sorted(ks.begin(), ks.end(), kernel_less));
    EXPECT_EQ(ks, bottom_kernels(q, relevant_universe(q)));
  }
}

TEST(Properties, GradingFreeTheoriesReduceToClassical) {
  Gen g(18);
  const Otimes ots[] = {Otimes::Sum, Otimes::Mean, Otimes::Min, Otimes::Max};
  for (int i = 0; i < 100; ++i) {
    TermSet th = g.plain_theory(8, 12);
    Canon c{ots[g.below(4)], g.chance(0.5) ? Oplus::Max : Oplus::Min,
            g.below(5)};
    TelescopingState st(th, c);
    TelescopeTrace tr = telescope_n(st);
    for (const auto& u : st.universe().terms) {
      EXPECT_EQ(graded_consequence(tr, st, u), reference_entails(th, u))
          << u.str();
    }
  }
}

TEST(Properties, LevelZeroIsClassicalForGradedTheories) {
  Gen g(19);
  for (int i = 0; i < 100; ++i) {
    TermSet th = g.graded_theory(6, 10);
    TelescopingState st(th, Canon{Otimes::Mean, Oplus::Max, 0});
    TelescopeTrace tr = telescope_n(st);
    for (const auto& u : st.universe().terms) {
      EXPECT_EQ(graded_consequence(tr, st, u), reference_entails(th, u))
          << u.str();
    }
  }
}

TEST(Properties, ConsistencyIsPreserved) {
  Gen g(20);
  int checked = 0;
  while (checked < 100) {
    TermSet th = g.graded_theory(6, 10);
    if (!reference_consistent(th)) continue;
    ++checked;
    TelescopingState st(th, Canon{Otimes::Sum, Oplus::Max, 5});
    TelescopeTrace tr = telescope_n(st);
    for (const auto& l : tr.levels) {
      EXPECT_TRUE(reference_consistent(l.base)) << "level " << l.index;
    }
  }
}

TEST(Properties, TracesAreDeterministic) {
  Gen g(21);
  for (int i = 0; i < 20; ++i) {
    TermSet th = g.graded_theory(5, 8);
    Canon c{Otimes::Mean, Oplus::Max, 3};
    EXPECT_EQ(telescope_n(TelescopingState(th, c)).to_json(),
              telescope_n(TelescopingState(th, c)).to_json());
  }
}

// Random rule set whose monotonic part is consistent, so it translates.
std::optional<Translation> random_translation(Gen& g, RuleSet& rs) {
  rs = g.rules(4, 1 + g.below(2), g.below(3), 1 + g.below(3));
  try {
    return translate(rs, default_indexing(rs));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

TEST(Properties, FusedGradeOfChainIsItsIndex) {
  Gen g(22);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    RuleSet rs;
    auto tr = random_translation(g, rs);
    if (!tr) continue;
    TermSet q = tr->theory().term_set();
    Canon c{Otimes::Sum, Oplus::Max, 0};
    const Indexing& idx = tr->indexing;
    for (std::size_t n = 1; n <= idx.subsets.size(); ++n) {
      TermSet qn = embedded_up_to(q, n);
      for (const auto& label : idx.subsets[n - 1]) {
        Term p = pi(rs.rule(label));
        ASSERT_TRUE(qn.count(chain_term(p, n)));
        EXPECT_EQ(fused_grade(p, qn, c, n), Grade(static_cast<int64_t>(n)))
            << p.str() << " at " << n;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Properties, TranslationShape) {
  Gen g(23);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    RuleSet rs;
    auto tr = random_translation(g, rs);
    if (!tr) continue;
    ++checked;
    std::vector<std::string> nm = rs.nonmonotonic_labels();
    EXPECT_EQ(tr->indexing.subsets.size(), (std::size_t{1} << nm.size()) - 1);
    TermSet mono;
    for (const auto& r : rs.rules()) {
      if (r.kind != RuleKind::NonMonotonic) mono.insert(pi(r));
    }
    TermSet chains;
    for (std::size_t n = 1; n <= tr->indexing.subsets.size(); ++n) {
      const auto& s = tr->indexing.subsets[n - 1];
      for (const auto& label : nm) {
        Term p = pi(rs.rule(label));
        chains.insert(chain_term(p, n));
        if (std::find(s.begin(), s.end(), label) == s.end()) {
          chains.insert(chain_term(Term::negation(p), n));
        }
      }
    }
    EXPECT_EQ(TermSet(tr->monotonic_part.begin(), tr->monotonic_part.end()),
              mono);
    EXPECT_EQ(TermSet(tr->nonmonotonic_part.begin(),
                      tr->nonmonotonic_part.end()),
              chains);
  }
  EXPECT_GT(checked, 20);
}

TEST(Properties, EnumeratedStructuresAreValid) {
  Gen g(24);
  for (int i = 0; i < 100; ++i) {
    RuleSet rs = g.rules(4, 1 + g.below(2), g.below(4), g.below(4));
    ArgumentSystem sys = enumerate_arguments(rs);
    auto sts = enumerate_structures(sys);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& t : sts) {
      EXPECT_TRUE(testing::valid_structure(sys, t));
      EXPECT_TRUE(seen.insert(t.arguments).second);
    }
    for (const auto& t : sts) {
      bool strictly_contained = false;
      for (const auto& o : sts) {
        if (o.arguments.size() > t.arguments.size() &&
            std::includes(o.arguments.begin(), o.arguments.end(),
                          t.arguments.begin(), t.arguments.end())) {
          strictly_contained = true;
        }
      }
      EXPECT_EQ(t.maximal, !strictly_contained);
    }
  }
}

TEST(Properties, TheoremOneOnRandomRuleSets) {
  Gen g(25);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 30; ++i) {
    RuleSet rs;
    auto tr = random_translation(g, rs);
    if (!tr || rs.nonmonotonic_labels().size() > 2) continue;
    ArgumentSystem sys = enumerate_arguments(rs);
    for (const auto& t : enumerate_structures(sys)) {
      Theorem1Report r = check_theorem1(sys, tr->indexing, t);
      EXPECT_TRUE(r.pass) << rs.str();
      ++checked;
    }
  }
}

}  // namespace
}  // namespace logag
