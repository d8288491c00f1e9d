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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logag/classical.hpp"
#include "logag/grade.hpp"
#include "logag/parser.hpp"
#include "logag/term.hpp"

namespace logag {

enum class Otimes { Sum, Mean, Min, Max };
enum class Oplus { Max, Min };

std::string to_string(Otimes op);
std::string to_string(Oplus op);
// Accept the lower-case operator names; throw InvalidArgument otherwise.
Otimes parse_otimes(std::string_view name);
Oplus parse_oplus(std::string_view name);

Grade fuse(Otimes op, const std::vector<Grade>& grades);
Grade fuse(Oplus op, const std::vector<Grade>& grades);

// Grading canon: chain fusion, cross-chain fusion and level.
struct Canon {
  Otimes otimes = Otimes::Sum;
  Oplus oplus = Oplus::Max;
  std::size_t level = 0;
};

struct TelescopeOptions {
  KernelMode kernel_mode = KernelMode::Classical;
  // A member that loses a kernel whose other members all follow from the
  // top theory is discarded, and kernels containing a discarded member no
  // longer count against the other members. Off gives the bare survival
  // rule.
  bool top_defeat_discount = true;
  std::size_t atom_cap = kDefaultAtomCap;
  std::size_t kernel_cap = kDefaultKernelCap;
  std::size_t level_cap = 64;
};

// Top theory, canon and the universe every set is drawn from. The
// ordering of grades is the numeric one.
class TelescopingState {
 public:
  TelescopingState(const Theory& top, Canon canon, const TermSet& queries = {},
                   TelescopeOptions options = {});
  TelescopingState(const TermSet& top, Canon canon, const TermSet& queries = {},
                   TelescopeOptions options = {});

  const TermSet& top() const { return top_; }
  const Canon& canon() const { return canon_; }
  const Universe& universe() const { return universe_; }
  const TelescopeOptions& options() const { return options_; }
  const Oracle& oracle() const { return *oracle_; }

  bool top_entails(const Term& t) const;
  // Universe members entailed by `base`, together with `base` itself.
  TermSet filter(const TermSet& base) const;
  bool mutually_entail(const TermSet& a, const TermSet& b) const;

 private:
  TermSet top_;
  Canon canon_;
  Universe universe_;
  TelescopeOptions options_;
  std::shared_ptr<const Oracle> oracle_;
  Oracle::Table top_models_;
};

// 0 if p is in q, otherwise one more than the least degree of a grader of p
// among the terms embedded in q. Throws InvalidArgument if p is not
// embedded in q.
std::size_t embedding_degree(const Term& p, const TermSet& q);
// Terms embedded in q with degree at most n.
TermSet embedded_up_to(const TermSet& q, std::size_t n);

// Finite representative of the degree-1 embedding of the filter of `base`.
TermSet depth1_expansion(const TermSet& base, const TelescopingState& st);

struct GradingChain {
  Term target;
  // Outermost grading term of the chain.
  Term top;
  // Innermost first.
  std::vector<Grade> grades;
};

// Chains of graders of p present in q. Uncapped, one chain per maximal
// nesting; with a cap, chains are the maximal ones of length at most cap.
std::vector<GradingChain> grading_chains(
    const Term& p, const TermSet& q,
    std::optional<std::size_t> cap = std::nullopt);
bool is_graded_in(const Term& p, const TermSet& q);

// Throws InvalidArgument if p has no chain in q.
Grade fused_grade(const Term& p, const TermSet& q, const Canon& canon,
                  std::optional<std::size_t> cap = std::nullopt);

bool survives(const Term& p, const Kernel& x, const TermSet& q,
              const TelescopingState& st,
              std::optional<std::size_t> cap = std::nullopt);

struct SurvivalReport {
  std::vector<Kernel> kernels;
  // False when no member could lose, so kernels were not searched.
  bool kernels_enumerated = true;
  TermSet survivors;
  // Members discarded by kernels made of top consequences.
  TermSet top_defeated;
};

SurvivalReport survival(const TermSet& q, const TelescopingState& st,
                        std::optional<std::size_t> cap = std::nullopt);
TermSet kernel_survivors(const TermSet& q, const TelescopingState& st,
                         std::optional<std::size_t> cap = std::nullopt);

// Least set containing the universe members that follow from the top
// theory and closed under adding members of q whose grader in q follows
// from the set.
TermSet supported(const TermSet& q, const TelescopingState& st);

// One telescoping step. `step` (>= 1) is the level being produced and
// bounds the chain length used for fused grades; defaults to unbounded.
TermSet telescope_once(const TermSet& base, const TelescopingState& st,
                       std::optional<std::size_t> step = std::nullopt);

struct TelescopeLevel {
  std::size_t index = 0;
  TermSet base;
  TermSet expansion;
  std::vector<Kernel> kernels;
  bool kernels_enumerated = true;
  TermSet top_defeated;
  TermSet survivors;
  TermSet supported;
  // The step from this base returns a base with the same filter.
  bool fixpoint = false;
};

struct TelescopeTrace {
  std::string theory;
  Canon canon;
  std::vector<TelescopeLevel> levels;

  const TermSet& final_base() const { return levels.back().base; }
  // JSON document with the documented trace schema.
  std::string to_json(int indent = 2) const;
};

// Levels 0..canon.level of the telescoping of the theory.
TelescopeTrace telescope_n(const Theory& theory, const Canon& canon,
                           const TermSet& queries = {},
                           const TelescopeOptions& options = {});
TelescopeTrace telescope_n(const TelescopingState& st);

bool graded_consequence(const Theory& theory, const Canon& canon,
                        const Term& query, const TelescopeOptions& options = {});
bool graded_consequence(const TelescopeTrace& trace, const TelescopingState& st,
                        const Term& query);

struct FixpointResult {
  bool found = false;
  // Level whose base is a fixpoint, and the level at which the repeat
  // was observed (level + 1).
  std::size_t level = 0;
  std::size_t detected_at = 0;
  TelescopeTrace trace;
};

FixpointResult find_fixpoint(const Theory& theory, Otimes otimes, Oplus oplus,
                             std::size_t max_n, const TermSet& queries = {},
                             const TelescopeOptions& options = {});

}  // namespace logag
