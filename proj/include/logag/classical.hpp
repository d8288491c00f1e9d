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
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "logag/parser.hpp"
#include "logag/term.hpp"

namespace logag {

inline constexpr std::size_t kDefaultAtomCap = 24;
inline constexpr std::size_t kDefaultKernelCap = 20;

// Finite stand-in for the filter generated by a theory: every term of the
// theory and of the extra terms, closed under Boolean subterms and under
// the inner term of every grading term.
struct Universe {
  TermSet terms;

  bool contains(const Term& t) const { return terms.count(t) != 0; }
  // Grading terms of the universe in set order.
  std::vector<Term> grading_terms() const;
};

Universe relevant_universe(const TermSet& theory, const TermSet& extra = {});
Universe relevant_universe(const Theory& theory, const TermSet& extra = {});

// Truth tables over a fixed atom alphabet. Predicate atoms and whole
// grading terms are atoms; order atoms are evaluated numerically. One
// oracle answers any number of queries over terms whose atoms it knows,
// so callers that issue many queries over one universe build it once.
// Tables are memoized; an oracle is not safe for concurrent use.
class Oracle {
 public:
  using Table = std::vector<std::uint64_t>;

  // Collects the atoms of `terms`. Throws CapExceeded past `atom_cap`.
  explicit Oracle(const TermSet& terms, std::size_t atom_cap = kDefaultAtomCap);

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t valuation_count() const { return std::size_t{1} << atoms_.size(); }

  // Models of `t`. Atoms unknown to the oracle raise InvalidArgument.
  const Table& table(const Term& t) const;
  // Models of the conjunction of `base`.
  Table models(const TermSet& base) const;

  bool entails(const TermSet& base, const Term& goal) const;
  bool entails(const Table& base_models, const Term& goal) const;
  bool is_consistent(const TermSet& base) const;

  static bool empty(const Table& t);
  static bool subset(const Table& a, const Table& b);
  bool holds(const Table& t, std::size_t valuation) const {
    return (t[valuation >> 6] >> (valuation & 63)) & 1u;
  }

 private:
  void collect(const Term& t);
  Table compute(const Term& t) const;
  Table full() const;

  std::vector<std::string> atoms_;
  std::size_t atom_cap_;
  std::size_t words_;
  std::uint64_t tail_mask_;
  mutable std::unordered_map<std::string, Table> memo_;
  std::unordered_map<std::string, std::size_t> index_;
};

// True iff every valuation satisfying `base` satisfies `goal`.
bool entails(const TermSet& base, const Term& goal,
             std::size_t atom_cap = kDefaultAtomCap);
// True iff some valuation satisfies every member of `base`.
bool is_consistent(const TermSet& base, std::size_t atom_cap = kDefaultAtomCap);

// Least superset of `base` that contains the inner term of every grading
// term of `u` it entails, together with that grading term.
TermSet embedded_closure(const TermSet& base, const Universe& u,
                         std::size_t atom_cap = kDefaultAtomCap);
TermSet embedded_closure(const TermSet& base, const Universe& u,
                         const Oracle& oracle);

enum class KernelMode {
  // A kernel is a subset-minimal classically inconsistent subset.
  Classical,
  // A kernel is a subset-minimal subset whose embedded closure over the
  // universe is inconsistent.
  EmbeddedClosure,
};

struct KernelOptions {
  KernelMode mode = KernelMode::Classical;
  std::size_t atom_cap = kDefaultAtomCap;
  // Classical: bound on members that occur in some kernel.
  // EmbeddedClosure: bound on the size of the searched set.
  std::size_t kernel_cap = kDefaultKernelCap;
};

using Kernel = TermSet;

// All kernels of `q`, sorted by size and then by member text.
std::vector<Kernel> bottom_kernels(const TermSet& q, const Universe& u,
                                   const KernelOptions& options = {});
std::vector<Kernel> bottom_kernels(const TermSet& q, const Universe& u,
                                   const Oracle& oracle,
                                   const KernelOptions& options = {});

// Deterministic kernel order used throughout: size, then rendered members.
bool kernel_less(const Kernel& a, const Kernel& b);

}  // namespace logag
