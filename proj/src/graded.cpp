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

#include "logag/graded.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "logag/error.hpp"

namespace logag {

std::string to_string(Otimes op) {
  switch (op) {
    case Otimes::Sum: return "sum";
    case Otimes::Mean: return "mean";
    case Otimes::Min: return "min";
    case Otimes::Max: return "max";
  }
  return "sum";
}

std::string to_string(Oplus op) { return op == Oplus::Max ? "max" : "min"; }

Otimes parse_otimes(std::string_view name) {
  if (name == "sum") return Otimes::Sum;
  if (name == "mean") return Otimes::Mean;
  if (name == "min") return Otimes::Min;
  if (name == "max") return Otimes::Max;
  throw InvalidArgument("unknown otimes operator '" + std::string(name) + "'");
}

Oplus parse_oplus(std::string_view name) {
  if (name == "max") return Oplus::Max;
  if (name == "min") return Oplus::Min;
  throw InvalidArgument("unknown oplus operator '" + std::string(name) + "'");
}

Grade fuse(Otimes op, const std::vector<Grade>& grades) {
  if (grades.empty()) throw InvalidArgument("fusion of an empty chain");
  switch (op) {
    case Otimes::Sum:
    case Otimes::Mean: {
      Grade total;
      for (const auto& g : grades) total = total + g;
      if (op == Otimes::Sum) return total;
      return total / static_cast<std::int64_t>(grades.size());
    }
    case Otimes::Min:
      return *std::min_element(grades.begin(), grades.end());
    case Otimes::Max:
      return *std::max_element(grades.begin(), grades.end());
  }
  return grades.front();
}

Grade fuse(Oplus op, const std::vector<Grade>& grades) {
  if (grades.empty()) throw InvalidArgument("fusion of no chains");
  return op == Oplus::Max ? *std::max_element(grades.begin(), grades.end())
                          : *std::min_element(grades.begin(), grades.end());
}

TelescopingState::TelescopingState(const Theory& top, Canon canon,
                                   const TermSet& queries,
                                   TelescopeOptions options)
    : TelescopingState(top.term_set(), canon, queries, options) {}

TelescopingState::TelescopingState(const TermSet& top, Canon canon,
                                   const TermSet& queries,
                                   TelescopeOptions options)
    : top_(top),
      canon_(canon),
      universe_(relevant_universe(top, queries)),
      options_(options),
      oracle_(std::make_shared<const Oracle>(universe_.terms,
                                             options.atom_cap)),
      top_models_(oracle_->models(top_)) {}

bool TelescopingState::top_entails(const Term& t) const {
  return oracle_->entails(top_models_, t);
}

TermSet TelescopingState::filter(const TermSet& base) const {
  Oracle::Table m = oracle_->models(base);
  TermSet out = base;
  for (const auto& u : universe_.terms) {
    if (oracle_->entails(m, u)) out.insert(u);
  }
  return out;
}

bool TelescopingState::mutually_entail(const TermSet& a,
                                       const TermSet& b) const {
  return Oracle::subset(oracle_->models(a), oracle_->models(b)) &&
         Oracle::subset(oracle_->models(b), oracle_->models(a));
}

std::size_t embedding_degree(const Term& p, const TermSet& q) {
  std::map<Term, std::size_t> degree;
  std::vector<Term> frontier(q.begin(), q.end());
  for (const auto& t : q) degree.emplace(t, 0);
  for (std::size_t d = 0; !frontier.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& t : frontier) {
      if (!t.is_grading()) continue;
      if (degree.emplace(t.inner(), d + 1).second) next.push_back(t.inner());
    }
    frontier = std::move(next);
  }
  auto it = degree.find(p);
  if (it == degree.end()) {
    throw InvalidArgument(p.str() + " is not embedded in the set");
  }
  return it->second;
}

TermSet embedded_up_to(const TermSet& q, std::size_t n) {
  TermSet out = q;
  std::vector<Term> frontier(q.begin(), q.end());
  for (std::size_t d = 0; d < n && !frontier.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& t : frontier) {
      if (t.is_grading() && out.insert(t.inner()).second) {
        next.push_back(t.inner());
      }
    }
    frontier = std::move(next);
  }
  return out;
}

TermSet depth1_expansion(const TermSet& base, const TelescopingState& st) {
  TermSet out = st.filter(base);
  std::vector<Term> inners;
  for (const auto& t : out) {
    if (t.is_grading()) inners.push_back(t.inner());
  }
  out.insert(inners.begin(), inners.end());
  return out;
}

namespace {

std::vector<Term> graders_of(const Term& p, const TermSet& q) {
  std::vector<Term> out;
  for (const auto& t : q) {
    if (t.is_grading() && t.inner() == p) out.push_back(t);
  }
  return out;
}

}  // namespace

bool is_graded_in(const Term& p, const TermSet& q) {
  return !graders_of(p, q).empty();
}

std::vector<GradingChain> grading_chains(const Term& p, const TermSet& q,
                                         std::optional<std::size_t> cap) {
  std::vector<GradingChain> out;
  std::vector<Grade> grades;
  std::function<void(const Term&)> walk = [&](const Term& node) {
    std::vector<Term> up;
    if (!cap || grades.size() < *cap) up = graders_of(node, q);
    if (up.empty()) {
      if (!grades.empty()) out.push_back({p, node, grades});
      return;
    }
    for (const auto& g : up) {
      grades.push_back(g.grade());
      walk(g);
      grades.pop_back();
    }
  };
  walk(p);
  return out;
}

Grade fused_grade(const Term& p, const TermSet& q, const Canon& canon,
                  std::optional<std::size_t> cap) {
  std::vector<GradingChain> chains = grading_chains(p, q, cap);
  if (chains.empty()) throw InvalidArgument(p.str() + " is not graded");
  std::vector<Grade> per_chain;
  per_chain.reserve(chains.size());
  for (const auto& c : chains) per_chain.push_back(fuse(canon.otimes, c.grades));
  return fuse(canon.oplus, per_chain);
}

bool survives(const Term& p, const Kernel& x, const TermSet& q,
              const TelescopingState& st, std::optional<std::size_t> cap) {
  if (!is_graded_in(p, q)) return true;
  std::optional<Grade> mine;
  for (const auto& other : x) {
    if (other == p || st.top_entails(other)) continue;
    if (!is_graded_in(other, q)) return true;
    if (!mine) mine = fused_grade(p, q, st.canon(), cap);
    if (fused_grade(other, q, st.canon(), cap) < *mine) return true;
  }
  return false;
}

SurvivalReport survival(const TermSet& q, const TelescopingState& st,
                        std::optional<std::size_t> cap) {
  SurvivalReport report;
  KernelOptions ko;
  ko.mode = st.options().kernel_mode;
  ko.atom_cap = st.options().atom_cap;
  ko.kernel_cap = st.options().kernel_cap;
  // Only graded members can lose, and only against members the top theory
  // does not entail; otherwise kernels cannot change the survivors.
  bool any_graded = std::any_of(q.begin(), q.end(), [&](const Term& t) {
    return is_graded_in(t, q);
  });
  if (!any_graded || !st.oracle().is_consistent(st.top())) {
    report.kernels_enumerated = false;
    report.survivors = q;
    return report;
  }
  report.kernels = bottom_kernels(q, st.universe(), st.oracle(), ko);

  std::map<Term, bool> top_cache;
  auto from_top = [&](const Term& t) {
    auto it = top_cache.find(t);
    if (it != top_cache.end()) return it->second;
    return top_cache[t] = st.top_entails(t);
  };

  if (st.options().top_defeat_discount) {
    for (const auto& x : report.kernels) {
      for (const auto& p : x) {
        bool rest_from_top = std::all_of(x.begin(), x.end(), [&](const Term& o) {
          return o == p || from_top(o);
        });
        if (rest_from_top && !survives(p, x, q, st, cap)) {
          report.top_defeated.insert(p);
        }
      }
    }
  }
  auto discounted = [&](const Kernel& x) {
    return std::any_of(x.begin(), x.end(), [&](const Term& t) {
      return report.top_defeated.count(t) != 0;
    });
  };
  for (const auto& p : q) {
    if (report.top_defeated.count(p)) continue;
    bool ok = true;
    for (const auto& x : report.kernels) {
      if (!x.count(p) || discounted(x)) continue;
      if (!survives(p, x, q, st, cap)) {
        ok = false;
        break;
      }
    }
    if (ok) report.survivors.insert(p);
  }
  return report;
}

TermSet kernel_survivors(const TermSet& q, const TelescopingState& st,
                         std::optional<std::size_t> cap) {
  return survival(q, st, cap).survivors;
}

TermSet supported(const TermSet& q, const TelescopingState& st) {
  TermSet s = st.filter(st.top());
  for (bool changed = true; changed;) {
    changed = false;
    Oracle::Table m = st.oracle().models(s);
    for (const auto& p : q) {
      if (s.count(p)) continue;
      for (const auto& g : graders_of(p, q)) {
        if (st.oracle().entails(m, g)) {
          s.insert(p);
          changed = true;
          break;
        }
      }
    }
  }
  return s;
}

TermSet telescope_once(const TermSet& base, const TelescopingState& st,
                       std::optional<std::size_t> step) {
  return supported(survival(depth1_expansion(base, st), st, step).survivors,
                   st);
}

TelescopeTrace telescope_n(const TelescopingState& st) {
  const std::size_t n = st.canon().level;
  if (n > st.options().level_cap) {
    throw CapExceeded("level cap of " +
                      std::to_string(st.options().level_cap) + " exceeded");
  }
  TelescopeTrace trace;
  trace.canon = st.canon();
  TermSet base = st.top();
  for (std::size_t i = 0; i <= n; ++i) {
    TelescopeLevel level;
    level.index = i;
    level.base = base;
    level.expansion = depth1_expansion(base, st);
    SurvivalReport sr = survival(level.expansion, st, i + 1);
    level.kernels = std::move(sr.kernels);
    level.kernels_enumerated = sr.kernels_enumerated;
    level.top_defeated = std::move(sr.top_defeated);
    level.survivors = std::move(sr.survivors);
    level.supported = supported(level.survivors, st);
    level.fixpoint = st.mutually_entail(level.supported, level.base);
    base = level.supported;
    trace.levels.push_back(std::move(level));
  }
  return trace;
}

TelescopeTrace telescope_n(const Theory& theory, const Canon& canon,
                           const TermSet& queries,
                           const TelescopeOptions& options) {
  TelescopeTrace trace =
      telescope_n(TelescopingState(theory, canon, queries, options));
  trace.theory = theory.name();
  return trace;
}

bool graded_consequence(const TelescopeTrace& trace, const TelescopingState& st,
                        const Term& query) {
  return st.oracle().entails(trace.final_base(), query);
}

bool graded_consequence(const Theory& theory, const Canon& canon,
                        const Term& query, const TelescopeOptions& options) {
  TelescopingState st(theory, canon, {query}, options);
  return graded_consequence(telescope_n(st), st, query);
}

FixpointResult find_fixpoint(const Theory& theory, Otimes otimes, Oplus oplus,
                             std::size_t max_n, const TermSet& queries,
                             const TelescopeOptions& options) {
  if (max_n < 1) throw InvalidArgument("max level must be at least 1");
  FixpointResult result;
  result.trace =
      telescope_n(theory, Canon{otimes, oplus, max_n}, queries, options);
  for (const auto& level : result.trace.levels) {
    if (level.index + 1 > max_n) break;
    if (level.fixpoint) {
      result.found = true;
      result.level = level.index;
      result.detected_at = level.index + 1;
      break;
    }
  }
  return result;
}

namespace {

nlohmann::ordered_json rendered(const TermSet& ts) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& t : ts) out.push_back(t.str());
  return out;
}

}  // namespace

std::string TelescopeTrace::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["theory"] = theory;
  doc["canon"] = {{"otimes", to_string(canon.otimes)},
                  {"oplus", to_string(canon.oplus)},
                  {"level", canon.level}};
  doc["levels"] = nlohmann::ordered_json::array();
  for (const auto& l : levels) {
    nlohmann::ordered_json level;
    level["index"] = l.index;
    level["base"] = rendered(l.base);
    level["expansion"] = rendered(l.expansion);
    level["kernels"] = nlohmann::ordered_json::array();
    for (const auto& k : l.kernels) level["kernels"].push_back(rendered(k));
    level["survivors"] = rendered(l.survivors);
    level["supported"] = rendered(l.supported);
    level["fixpoint"] = l.fixpoint;
    doc["levels"].push_back(std::move(level));
  }
  return doc.dump(indent);
}

}  // namespace logag
