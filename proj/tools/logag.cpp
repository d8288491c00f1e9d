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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "logag/argument.hpp"
#include "logag/error.hpp"
#include "logag/graded.hpp"
#include "logag/parser.hpp"

namespace {

using namespace logag;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Config {
  std::string input;
  std::vector<std::string> queries;
  std::size_t level = 0;
  std::size_t max_level = 3;
  std::string otimes = "sum";
  std::string oplus = "max";
  std::string format = "text";
  std::string indexing;
  std::string kernel_mode = "classical";
  bool literal_survival = false;
  std::size_t atom_cap = kDefaultAtomCap;
  std::size_t kernel_cap = kDefaultKernelCap;
  std::size_t depth_cap = kDefaultDepthCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

TelescopeOptions options_of(const Config& c) {
  TelescopeOptions o;
  o.atom_cap = c.atom_cap;
  o.kernel_cap = c.kernel_cap;
  o.top_defeat_discount = !c.literal_survival;
  if (c.kernel_mode == "closure") o.kernel_mode = KernelMode::EmbeddedClosure;
  return o;
}

Canon canon_of(const Config& c, std::size_t level) {
  return Canon{parse_otimes(c.otimes), parse_oplus(c.oplus), level};
}

Theory load_theory(const Config& c) {
  return parse_theory(slurp(c.input), stem(c.input));
}

int cmd_check(const Config& c) {
  if (c.queries.empty()) throw UsageError("check needs at least one --query");
  Theory theory = load_theory(c);
  std::vector<Term> queries;
  for (const auto& q : c.queries) queries.push_back(parse_term(q));
  TelescopingState st(theory, canon_of(c, c.level),
                      TermSet(queries.begin(), queries.end()), options_of(c));
  TelescopeTrace trace = telescope_n(st);
  bool all = true;
  nlohmann::ordered_json doc;
  doc["theory"] = theory.name();
  doc["canon"] = {{"otimes", c.otimes}, {"oplus", c.oplus}, {"level", c.level}};
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& q : queries) {
    bool yes = graded_consequence(trace, st, q);
    all = all && yes;
    if (c.format == "json") {
      doc["results"].push_back({{"query", q.str()}, {"holds", yes}});
    } else {
      std::cout << (yes ? "YES " : "NO  ") << q.str() << "\n";
    }
  }
  if (c.format == "json") std::cout << doc.dump(2) << "\n";
  return all ? kExitYes : kExitNo;
}

std::string set_text(const TermSet& ts) { return ts.empty() ? "{}" : render(ts); }

void print_text_trace(const TelescopeTrace& trace, std::size_t max_level) {
  std::cout << "theory " << trace.theory << "  canon <" << to_string(trace.canon.otimes)
            << ", " << to_string(trace.canon.oplus) << ">\n";
  std::cout << "level 0\n";
  std::cout << "  base       " << set_text(trace.levels[0].base) << "\n";
  for (std::size_t n = 1; n <= max_level; ++n) {
    const TelescopeLevel& step = trace.levels[n - 1];
    std::cout << "level " << n << "\n";
    std::cout << "  expansion  " << set_text(step.expansion) << "\n";
    if (!step.kernels_enumerated) {
      std::cout << "  kernels    not searched (no member can lose)\n";
    } else if (step.kernels.empty()) {
      std::cout << "  kernels    none\n";
    } else {
      for (std::size_t i = 0; i < step.kernels.size(); ++i) {
        std::cout << (i == 0 ? "  kernels    " : "             ")
                  << set_text(step.kernels[i]) << "\n";
      }
    }
    if (!step.top_defeated.empty()) {
      std::cout << "  defeated   " << set_text(step.top_defeated) << "\n";
    }
    std::cout << "  survivors  " << set_text(step.survivors) << "\n";
    std::cout << "  supported  " << set_text(step.supported) << "\n";
    std::cout << "  fixpoint   " << (step.fixpoint ? "yes" : "no") << "\n";
  }
}

int cmd_trace(const Config& c) {
  Theory theory = load_theory(c);
  TermSet queries;
  for (const auto& q : c.queries) queries.insert(parse_term(q));
  TelescopeTrace trace = telescope_n(theory, canon_of(c, c.max_level), queries,
                                     options_of(c));
  if (c.format == "json") {
    std::cout << trace.to_json(2) << "\n";
  } else {
    print_text_trace(trace, c.max_level);
  }
  return kExitYes;
}

struct LoadedRules {
  ArgumentSystem sys;
  Indexing idx;
};

LoadedRules load_rules(const Config& c) {
  RuleSet rules = parse_rules(slurp(c.input));
  Indexing idx = c.indexing.empty() ? default_indexing(rules)
                                    : parse_indexing(slurp(c.indexing), rules);
  return {enumerate_arguments(rules, c.depth_cap), std::move(idx)};
}

std::string wff_list(const std::vector<Wff>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out += (i ? ", " : "") + ws[i].str();
  }
  return out + "}";
}

std::string label_list(const std::vector<std::string>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? ", " : "") + ls[i];
  return out + "}";
}

int cmd_args(const std::string& action, const Config& c) {
  if (action == "translate") {
    RuleSet rules = parse_rules(slurp(c.input));
    Indexing idx = c.indexing.empty() ? default_indexing(rules)
                                      : parse_indexing(slurp(c.indexing), rules);
    Translation tr = translate(rules, idx);
    std::cout << "# indexing\n";
    std::istringstream lines(idx.str());
    for (std::string line; std::getline(lines, line);) {
      std::cout << "#   " << line << "\n";
    }
    std::cout << tr.theory(stem(c.input)).str();
    return kExitYes;
  }
  LoadedRules lr = load_rules(c);
  const ArgumentSystem& sys = lr.sys;
  if (action == "enumerate") {
    for (std::size_t i = 0; i < sys.arguments.size(); ++i) {
      std::cout << sys.describe(i) << "\n";
    }
    return kExitYes;
  }
  std::vector<ArgumentStructure> structures = enumerate_structures(sys);
  if (action == "structures") {
    for (std::size_t i = 0; i < structures.size(); ++i) {
      const auto& t = structures[i];
      std::cout << "T" << i + 1 << ": " << label_list(argument_labels(sys, t))
                << (t.maximal ? "  maximal" : "") << "\n";
      std::cout << "  wffs   " << wff_list(wffs(sys, t)) << "\n";
    }
    return kExitYes;
  }
  bool all = true;
  TelescopeOptions o = options_of(c);
  for (std::size_t i = 0; i < structures.size(); ++i) {
    const auto& t = structures[i];
    Theorem1Report r1 = check_theorem1(sys, lr.idx, t, o);
    Theorem2Report r2 = check_theorem2(sys, lr.idx, t, o);
    std::cout << "T" << i + 1 << " " << label_list(argument_labels(sys, t))
              << " level " << r1.level << ": theorem 1 "
              << (r1.pass ? "pass" : "FAIL") << ", theorem 2 "
              << (r2.pass ? "pass" : "FAIL") << " (" << r2.consequences_checked
              << " consequences)\n";
    for (const auto& [w, ok] : r1.results) {
      if (!ok) std::cout << "  not derived: " << w.str() << "\n";
    }
    for (const auto& f : r2.failures) {
      std::cout << "  not classically entailed: " << f << "\n";
    }
    all = all && r1.pass && r2.pass;
  }
  return all ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded non-monotonic reasoning over LogAG theories"};
  app.require_subcommand(1);
  Config c;

  auto add_engine = [&c](CLI::App* sub) {
    sub->add_option("--otimes", c.otimes, "Chain fusion")
        ->check(CLI::IsMember({"sum", "mean", "min", "max"}));
    sub->add_option("--oplus", c.oplus, "Cross-chain fusion")
        ->check(CLI::IsMember({"max", "min"}));
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--atom-cap", c.atom_cap, "Atom limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--kernel-cap", c.kernel_cap, "Kernel member limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--kernel-mode", c.kernel_mode, "Kernel inconsistency test")
        ->check(CLI::IsMember({"classical", "closure"}));
    sub->add_flag("--literal-survival", c.literal_survival,
                  "Disable the top-defeat discount");
  };

  CLI::App* check = app.add_subcommand("check", "Decide graded consequence");
  check->add_option("theory", c.input, "Theory file")->required();
  check->add_option("--query", c.queries, "Query term (repeatable)");
  check->add_option("--level", c.level, "Canon level");
  add_engine(check);

  CLI::App* trace = app.add_subcommand("trace", "Print the telescoping trace");
  trace->add_option("theory", c.input, "Theory file")->required();
  trace->add_option("--max-level", c.max_level, "Last level shown");
  trace->add_option("--query", c.queries, "Extra universe terms");
  add_engine(trace);

  CLI::App* args = app.add_subcommand("args", "Argument systems");
  args->require_subcommand(1);
  std::string action;
  for (const char* name : {"enumerate", "structures", "translate", "verify"}) {
    CLI::App* sub = args->add_subcommand(name);
    sub->add_option("rules", c.input, "Rules file")->required();
    sub->add_option("--indexing", c.indexing, "Indexing file");
    sub->add_option("--depth-cap", c.depth_cap, "Argument depth limit")
        ->check(CLI::PositiveNumber);
    add_engine(sub);
    sub->callback([&action, name] { action = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(c);
    if (trace->parsed()) return cmd_trace(c);
    return cmd_args(action, c);
  } catch (const CapExceeded& e) {
    std::cerr << "logag: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "logag: " << e.what() << "\n";
    return kExitUsage;
  }
}
