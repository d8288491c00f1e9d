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

#include "logag/classical.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "logag/error.hpp"

namespace logag {

namespace {

constexpr std::uint64_t kAtomPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

bool is_opaque(const Term& t) {
  return t.kind() == TermKind::Atom || t.kind() == TermKind::Grade;
}

bool constant_value(const Term& t) {
  if (t.kind() == TermKind::Less) return t.lhs_grade() < t.rhs_grade();
  return t.lhs_grade() == t.rhs_grade();
}

void close_over(const Term& t, TermSet& out) {
  if (!out.insert(t).second) return;
  for (const auto& c : t.children()) close_over(c, out);
}

}  // namespace

std::vector<Term> Universe::grading_terms() const {
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (t.is_grading()) out.push_back(t);
  }
  return out;
}

Universe relevant_universe(const TermSet& theory, const TermSet& extra) {
  Universe u;
  for (const auto& t : theory) close_over(t, u.terms);
  for (const auto& t : extra) close_over(t, u.terms);
  return u;
}

Universe relevant_universe(const Theory& theory, const TermSet& extra) {
  return relevant_universe(theory.term_set(), extra);
}

Oracle::Oracle(const TermSet& terms, std::size_t atom_cap)
    : atom_cap_(atom_cap) {
  for (const auto& t : terms) collect(t);
  std::sort(atoms_.begin(), atoms_.end());
  for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
  std::size_t bits = std::size_t{1} << atoms_.size();
  words_ = std::max<std::size_t>(1, bits / 64);
  tail_mask_ = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

void Oracle::collect(const Term& t) {
  if (is_opaque(t)) {
    if (index_.count(t.str())) return;
    if (atoms_.size() == atom_cap_) {
      throw CapExceeded("atom cap of " + std::to_string(atom_cap_) +
                        " exceeded");
    }
    index_[t.str()] = atoms_.size();
    atoms_.push_back(t.str());
    return;
  }
  for (const auto& c : t.children()) collect(c);
}

Oracle::Table Oracle::full() const {
  Table t(words_, ~std::uint64_t{0});
  t.back() &= tail_mask_;
  return t;
}

Oracle::Table Oracle::compute(const Term& t) const {
  switch (t.kind()) {
    case TermKind::True:
      return full();
    case TermKind::Less:
    case TermKind::GradeEq:
      return constant_value(t) ? full() : Table(words_, 0);
    case TermKind::Atom:
    case TermKind::Grade: {
      auto it = index_.find(t.str());
      if (it == index_.end()) {
        throw InvalidArgument("term outside the oracle alphabet: " + t.str());
      }
      std::size_t j = it->second;
      Table out(words_);
      for (std::size_t w = 0; w < words_; ++w) {
        if (j < 6) {
          out[w] = kAtomPattern[j];
        } else {
          out[w] = ((w >> (j - 6)) & 1u) ? ~std::uint64_t{0} : 0;
        }
      }
      out.back() &= tail_mask_;
      return out;
    }
    case TermKind::Not: {
      Table out = table(t.operand());
      for (auto& w : out) w = ~w;
      out.back() &= tail_mask_;
      return out;
    }
    case TermKind::And:
    case TermKind::Or: {
      Table out = table(t.left());
      const Table& r = table(t.right());
      bool conj = t.kind() == TermKind::And;
      for (std::size_t w = 0; w < words_; ++w) {
        out[w] = conj ? (out[w] & r[w]) : (out[w] | r[w]);
      }
      return out;
    }
  }
  return full();
}

const Oracle::Table& Oracle::table(const Term& t) const {
  auto it = memo_.find(t.str());
  if (it != memo_.end()) return it->second;
  Table computed = compute(t);
  return memo_.emplace(t.str(), std::move(computed)).first->second;
}

Oracle::Table Oracle::models(const TermSet& base) const {
  Table out = full();
  for (const auto& t : base) {
    const Table& m = table(t);
    for (std::size_t w = 0; w < words_; ++w) out[w] &= m[w];
  }
  return out;
}

bool Oracle::empty(const Table& t) {
  return std::all_of(t.begin(), t.end(), [](std::uint64_t w) { return w == 0; });
}

bool Oracle::subset(const Table& a, const Table& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

bool Oracle::entails(const Table& base_models, const Term& goal) const {
  return subset(base_models, table(goal));
}

bool Oracle::entails(const TermSet& base, const Term& goal) const {
  return entails(models(base), goal);
}

bool Oracle::is_consistent(const TermSet& base) const {
  return !empty(models(base));
}

bool entails(const TermSet& base, const Term& goal, std::size_t atom_cap) {
  TermSet all = base;
  all.insert(goal);
  return Oracle(all, atom_cap).entails(base, goal);
}

bool is_consistent(const TermSet& base, std::size_t atom_cap) {
  return Oracle(base, atom_cap).is_consistent(base);
}

TermSet embedded_closure(const TermSet& base, const Universe& u,
                         const Oracle& oracle) {
  TermSet s = base;
  std::vector<Term> graders = u.grading_terms();
  for (bool changed = true; changed;) {
    changed = false;
    Oracle::Table m = oracle.models(s);
    for (const auto& g : graders) {
      if (s.count(g) && s.count(g.inner())) continue;
      if (!oracle.entails(m, g)) continue;
      s.insert(g);
      s.insert(g.inner());
      changed = true;
    }
  }
  return s;
}

TermSet embedded_closure(const TermSet& base, const Universe& u,
                         std::size_t atom_cap) {
  TermSet all = u.terms;
  all.insert(base.begin(), base.end());
  return embedded_closure(base, u, Oracle(all, atom_cap));
}

bool kernel_less(const Kernel& a, const Kernel& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

std::size_t mask_count(const Mask& m) {
  std::size_t n = 0;
  for (auto w : m) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Minimal hitting sets of `sets` (bitmasks over at most 64 elements).
std::vector<std::uint64_t> minimal_hitting_sets(
    const std::vector<std::uint64_t>& sets) {
  std::vector<std::uint64_t> hs = {0};
  for (auto c : sets) {
    std::set<std::uint64_t> next;
    for (auto h : hs) {
      if (h & c) {
        next.insert(h);
        continue;
      }
      for (auto rest = c; rest; rest &= rest - 1) {
        next.insert(h | (rest & -rest));
      }
    }
    std::vector<std::uint64_t> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    hs.clear();
    for (auto h : sorted) {
      bool dominated = std::any_of(hs.begin(), hs.end(), [h](std::uint64_t k) {
        return (k & h) == k;
      });
      if (!dominated) hs.push_back(h);
    }
  }
  return hs;
}

std::vector<Kernel> classical_kernels(const std::vector<Term>& members,
                                      const Oracle& oracle,
                                      std::size_t kernel_cap) {
  const std::size_t k = members.size();
  const std::size_t words = (k + 63) / 64;
  std::vector<const Oracle::Table*> tables;
  tables.reserve(k);
  for (const auto& m : members) tables.push_back(&oracle.table(m));

  std::set<Mask> seen;
  Mask mask(words);
  for (std::size_t v = 0; v < oracle.valuation_count(); ++v) {
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (oracle.holds(*tables[i], v)) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    if (mask_count(mask) == k) return {};
    seen.insert(mask);
  }

  std::vector<Mask> by_size(seen.begin(), seen.end());
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Mask& a, const Mask& b) {
                     return mask_count(a) > mask_count(b);
                   });
  std::vector<Mask> maximal;
  for (const auto& m : by_size) {
    bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                 [&](const Mask& s) { return mask_subset(m, s); });
    if (!dominated) maximal.push_back(m);
  }

  // Complements of maximal satisfiable subsets; their union is exactly
  // the set of members that occur in some kernel.
  std::vector<Mask> mcs;
  Mask relevant(words);
  for (const auto& m : maximal) {
    Mask c(words);
    for (std::size_t i = 0; i < k; ++i) {
      if (!((m[i >> 6] >> (i & 63)) & 1u)) c[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    for (std::size_t w = 0; w < words; ++w) relevant[w] |= c[w];
    mcs.push_back(std::move(c));
  }
  std::vector<std::size_t> rel;
  for (std::size_t i = 0; i < k; ++i) {
    if ((relevant[i >> 6] >> (i & 63)) & 1u) rel.push_back(i);
  }
  if (rel.size() > kernel_cap || rel.size() > 64) {
    throw CapExceeded("kernel cap of " + std::to_string(kernel_cap) +
                      " exceeded: " + std::to_string(rel.size()) +
                      " members occur in kernels");
  }
  std::vector<std::uint64_t> compact;
  for (const auto& c : mcs) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < rel.size(); ++j) {
      if ((c[rel[j] >> 6] >> (rel[j] & 63)) & 1u) bits |= std::uint64_t{1} << j;
    }
    compact.push_back(bits);
  }
  std::vector<Kernel> out;
  for (auto h : minimal_hitting_sets(compact)) {
    Kernel x;
    for (std::size_t j = 0; j < rel.size(); ++j) {
      if ((h >> j) & 1u) x.insert(members[rel[j]]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Kernel> closure_kernels(const std::vector<Term>& members,
                                    const Universe& u, const Oracle& oracle,
                                    std::size_t kernel_cap) {
  const std::size_t k = members.size();
  if (k > kernel_cap || k > 63) {
    throw CapExceeded("kernel cap of " + std::to_string(kernel_cap) +
                      " exceeded: base has " + std::to_string(k) + " members");
  }
  std::vector<std::uint64_t> found;
  for (std::size_t size = 1; size <= k; ++size) {
    // Gosper's hack walks all k-bit masks of the given popcount in order.
    std::uint64_t x = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << k;
    while (x < limit) {
      bool superset = std::any_of(found.begin(), found.end(),
                                  [x](std::uint64_t f) { return (f & x) == f; });
      if (!superset) {
        TermSet s;
        for (std::size_t i = 0; i < k; ++i) {
          if ((x >> i) & 1u) s.insert(members[i]);
        }
        if (!oracle.is_consistent(embedded_closure(s, u, oracle))) {
          found.push_back(x);
        }
      }
      std::uint64_t c = x & -x;
      std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  std::vector<Kernel> out;
  for (auto f : found) {
    Kernel s;
    for (std::size_t i = 0; i < k; ++i) {
      if ((f >> i) & 1u) s.insert(members[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Kernel> bottom_kernels(const TermSet& q, const Universe& u,
                                   const Oracle& oracle,
                                   const KernelOptions& options) {
  std::vector<Term> members(q.begin(), q.end());
  std::vector<Kernel> out =
      options.mode == KernelMode::Classical
          ? classical_kernels(members, oracle, options.kernel_cap)
          : closure_kernels(members, u, oracle, options.kernel_cap);
  std::sort(out.begin(), out.end(), kernel_less);
  return out;
}

std::vector<Kernel> bottom_kernels(const TermSet& q, const Universe& u,
                                   const KernelOptions& options) {
  TermSet all = u.terms;
  all.insert(q.begin(), q.end());
  return bottom_kernels(q, u, Oracle(all, options.atom_cap), options);
}

}  // namespace logag
