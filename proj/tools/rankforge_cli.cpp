// Copyright 2026 The rankforge Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rankforge/rankforge.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Record {
  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;
};

// Record values never contain blanks.
std::string token(std::string v) {
  for (auto& c : v) {
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  }
  return v.empty() ? "-" : v;
}

class Output {
 public:
  void add(std::string type, std::vector<std::pair<std::string, std::string>> fields) {
    records_.push_back({std::move(type), std::move(fields)});
  }

  std::string render(bool as_records) const {
    std::ostringstream os;
    if (as_records) {
      for (const auto& r : records_) {
        os << r.type;
        for (const auto& [k, v] : r.fields) os << ' ' << k << '=' << token(v);
        os << '\n';
      }
      return os.str();
    }
    // Runs of one record type become a table.
    for (std::size_t i = 0; i < records_.size();) {
      std::size_t j = i;
      while (j < records_.size() && records_[j].type == records_[i].type) ++j;
      const auto& head = records_[i];
      std::vector<std::size_t> width;
      for (const auto& [k, v] : head.fields) width.push_back(k.size());
      for (std::size_t r = i; r < j; ++r) {
        for (std::size_t c = 0; c < records_[r].fields.size() && c < width.size(); ++c) {
          width[c] = std::max(width[c], records_[r].fields[c].second.size());
        }
      }
      os << head.type << '\n';
      auto row = [&](auto&& cell) {
        os << ' ';
        for (std::size_t c = 0; c < width.size(); ++c) {
          const std::string s = token(cell(c));
          os << ' ' << s << std::string(width[c] - std::min(width[c], s.size()), ' ');
        }
        os << '\n';
      };
      row([&](std::size_t c) { return head.fields[c].first; });
      for (std::size_t r = i; r < j; ++r) {
        row([&](std::size_t c) {
          return c < records_[r].fields.size() ? records_[r].fields[c].second : std::string();
        });
      }
      os << '\n';
      i = j;
    }
    return os.str();
  }

 private:
  std::vector<Record> records_;
};

// Failure carrying the process exit code.
struct Exit {
  int code;
  std::string message;
};

int exit_code_for(rf_status s) {
  switch (s) {
    case RF_OK: return kExitPass;
    case RF_ERR_BUDGET:
    case RF_ERR_DEPTH_EXCEEDED: return kExitBudget;
    case RF_ERR_INVALID_BASE_RELATION:
    case RF_ERR_INTERNAL: return kExitFail;
    default: return kExitUsage;
  }
}

std::string describe(rf_status s) {
  const std::string name = rf_status_name(s);
  const std::string msg = rf_last_error();
  return msg.rfind(name, 0) == 0 ? msg : name + ": " + msg;
}

void check(rf_status s) {
  if (s != RF_OK) throw Exit{exit_code_for(s), describe(s)};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using StructuresPtr = std::unique_ptr<rf_structures, Deleter<rf_structures, rf_structures_free>>;
using SystemPtr = std::unique_ptr<rf_system, Deleter<rf_system, rf_system_free>>;
using AnalysisPtr = std::unique_ptr<rf_analysis, Deleter<rf_analysis, rf_analysis_free>>;
using ReportPtr = std::unique_ptr<rf_report, Deleter<rf_report, rf_report_free>>;
using ScanPtr = std::unique_ptr<rf_scan, Deleter<rf_scan, rf_scan_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitUsage, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructuresPtr load_structures(const std::string& path) {
  const std::string text = read_file(path);
  rf_structures* raw = nullptr;
  const rf_status s = rf_structures_parse(text.c_str(), &raw);
  if (s != RF_OK) {
    throw Exit{exit_code_for(s), path + ": " + describe(s)};
  }
  return StructuresPtr(raw);
}

std::string flag(bool b) { return b ? "1" : "0"; }

struct Options {
  std::string format = "text";
  std::uint64_t seed = 7;
  std::string sizes;
  std::string basis;
  unsigned max_level = 0;
  bool dump = false;
  bool oracle = false;
  std::string mutate;
  rf_budget budget{};
};

std::vector<std::pair<std::string, std::string>> config_fields(const std::string& command,
                                                               const std::string& input,
                                                               const Options& o) {
  return {{"command", command},
          {"input", input.empty() ? "-" : input},
          {"basis", o.basis.empty() ? "file" : o.basis},
          {"max_level", o.max_level ? std::to_string(o.max_level) : "-"},
          {"seed", std::to_string(o.seed)},
          {"format", o.format},
          {"budget", "g=" + std::to_string(o.budget.max_group) +
                         ",x=" + std::to_string(o.budget.max_points) +
                         ",n=" + std::to_string(o.budget.max_n) +
                         ",s=" + std::to_string(o.budget.max_support) +
                         ",k=" + std::to_string(o.budget.max_k)}};
}

int cmd_scott_rank(const std::string& path, const Options& o, Output& out) {
  auto file = load_structures(path);
  out.add("CONFIG", config_fields("scott-rank", path, o));
  const std::size_t count = rf_structures_count(file.get());
  std::vector<unsigned> ranks(count);
  for (std::size_t i = 0; i < count; ++i) {
    unsigned stab = 0;
    check(rf_scott_rank(file.get(), i, &ranks[i], &stab));
    out.add("RANK", {{"point", rf_structures_id(file.get(), i)},
                     {"delta", std::to_string(ranks[i])},
                     {"stab", std::to_string(stab)},
                     {"m", "-"}});
  }
  if (!o.oracle) return kExitPass;
  std::string witness = "-";
  for (std::size_t i = 0; i < count && witness == "-"; ++i) {
    unsigned naive = 0;
    check(rf_oracle_scott_rank(file.get(), i, &naive));
    if (naive != ranks[i]) {
      witness = std::string(rf_structures_id(file.get(), i)) + ":naive=" + std::to_string(naive);
    }
  }
  out.add("CHECK", {{"name", "oracle_scott_rank"},
                    {"verdict", witness == "-" ? "pass" : "fail"},
                    {"witness", witness},
                    {"instances", std::to_string(count)}});
  return witness == "-" ? kExitPass : kExitFail;
}

struct HjorthInput {
  std::string path;
  std::string logic;  // empty for action files
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t k = 0;
};

int cmd_hjorth(const HjorthInput& in, const Options& o, Output& out) {
  rf_system* raw = nullptr;
  if (in.logic.empty()) {
    const std::string text = read_file(in.path);
    check(rf_system_from_action(text.c_str(), o.basis.empty() ? nullptr : o.basis.c_str(),
                                &o.budget, &raw));
  } else {
    if (!o.basis.empty()) throw Exit{kExitUsage, "--basis applies to action files only"};
    auto file = load_structures(in.path);
    if (in.logic == "finite") {
      check(rf_system_finite_logic(file.get(), in.n, in.k, &o.budget, &raw));
    } else {
      check(rf_system_symbolic_logic(file.get(), in.s, in.k, &o.budget, &raw));
    }
  }
  SystemPtr sys(raw);
  rf_analysis* araw = nullptr;
  check(rf_analysis_new(sys.get(), o.max_level, &araw));
  AnalysisPtr an(araw);

  auto fields = config_fields("hjorth", in.path, o);
  if (!in.logic.empty()) {
    fields.emplace_back("logic", in.logic);
    if (in.logic == "finite") {
      fields.emplace_back("n", std::to_string(in.n));
    } else {
      fields.emplace_back("s", std::to_string(in.s));
    }
    fields.emplace_back("k", std::to_string(in.k));
  }
  out.add("CONFIG", std::move(fields));

  const std::size_t nx = rf_system_num_points(sys.get());
  const std::size_t nb = rf_system_num_basis(sys.get());
  const bool stabilized = rf_analysis_stabilized(an.get());
  const unsigned top = rf_analysis_top_level(an.get());
  unsigned stab = 0;
  if (stabilized) check(rf_analysis_stab(an.get(), &stab));

  if (o.dump) {
    for (unsigned level = 1; level <= top; ++level) {
      for (std::size_t x0 = 0; x0 < nx; ++x0)
        for (std::size_t v0 = 0; v0 < nb; ++v0)
          for (std::size_t x1 = 0; x1 < nx; ++x1)
            for (std::size_t v1 = 0; v1 < nb; ++v1) {
              int val = 0;
              check(rf_leq(an.get(), x0, v0, x1, v1, level, &val));
              out.add("LEQ", {{"level", std::to_string(level)},
                              {"x0", rf_system_point_label(sys.get(), x0)},
                              {"V0", rf_system_basis_label(sys.get(), v0)},
                              {"x1", rf_system_point_label(sys.get(), x1)},
                              {"V1", rf_system_basis_label(sys.get(), v1)},
                              {"val", flag(val)}});
            }
    }
  }

  int code = kExitPass;
  if (o.oracle) {
    std::size_t instances = 0;
    std::string witness = "-";
    const unsigned last = stabilized ? stab + 1 : top;
    for (unsigned level = 1; level <= last && witness == "-"; ++level) {
      for (std::size_t x0 = 0; x0 < nx && witness == "-"; ++x0)
        for (std::size_t v0 = 0; v0 < nb && witness == "-"; ++v0)
          for (std::size_t x1 = 0; x1 < nx && witness == "-"; ++x1)
            for (std::size_t v1 = 0; v1 < nb && witness == "-"; ++v1) {
              int engine = 0;
              int naive = 0;
              check(rf_leq(an.get(), x0, v0, x1, v1, level, &engine));
              check(rf_oracle_leq(sys.get(), x0, v0, x1, v1, level, &naive));
              ++instances;
              if (engine != naive) {
                witness = "T" + std::to_string(level) + "(" +
                          rf_system_point_label(sys.get(), x0) + "," +
                          rf_system_basis_label(sys.get(), v0) + "," +
                          rf_system_point_label(sys.get(), x1) + "," +
                          rf_system_basis_label(sys.get(), v1) + ")";
              }
            }
    }
    out.add("CHECK", {{"name", "oracle_leq"},
                      {"verdict", witness == "-" ? "pass" : "fail"},
                      {"witness", witness},
                      {"instances", std::to_string(instances)}});
    if (witness != "-") code = kExitFail;
  }

  std::size_t parts = 0;
  if (stabilized) {
    for (std::size_t x = 0; x < nx; ++x) {
      unsigned rank = 0;
      int found = 0;
      unsigned m = 0;
      check(rf_rank(an.get(), x, &rank));
      check(rf_minimal_m(an.get(), x, &found, &m));
      out.add("RANK", {{"point", rf_system_point_label(sys.get(), x)},
                       {"delta", std::to_string(rank)},
                       {"stab", std::to_string(stab)},
                       {"m", found ? std::to_string(m) : "-"}});
    }
    check(rf_partition_count(an.get(), &parts));
    std::vector<std::size_t> members(nx);
    for (std::size_t p = 0; p < parts; ++p) {
      unsigned rank = 0;
      std::size_t count = 0;
      check(rf_partition_part(an.get(), p, &rank, members.data(), members.size(), &count));
      std::string list;
      for (std::size_t i = 0; i < count; ++i) {
        if (i) list += ',';
        list += rf_system_point_label(sys.get(), members[i]);
      }
      out.add("PART", {{"rank", std::to_string(rank)},
                       {"size", std::to_string(count)},
                       {"points", list}});
    }
  }
  out.add("SUMMARY", {{"system", rf_system_description(sys.get())},
                      {"points", std::to_string(nx)},
                      {"basis", std::to_string(nb)},
                      {"levels", std::to_string(top)},
                      {"stab", stabilized ? std::to_string(stab) : "-"},
                      {"parts", stabilized ? std::to_string(parts) : "-"}});
  return code;
}

std::string sizes_text(const rf_verify_config& c) {
  return "g<=" + std::to_string(c.max_group) + ",x<=" + std::to_string(c.max_points) +
         ",n<=" + std::to_string(c.max_n) + ",count=" + std::to_string(c.count);
}

int cmd_verify(const std::string& suite, const Options& o, Output& out) {
  rf_verify_config config;
  rf_verify_config_default(&config);
  config.seed = o.seed;
  if (!o.sizes.empty()) check(rf_verify_parse_sizes(o.sizes.c_str(), &config));
  if (!o.mutate.empty()) config.mutate = o.mutate.c_str();
  rf_report* raw = nullptr;
  check(rf_verify_run(suite.c_str(), &config, &raw));
  ReportPtr report(raw);

  auto fields = config_fields("verify", suite, o);
  fields.emplace_back("sizes", sizes_text(config));
  fields.emplace_back("mutate", o.mutate.empty() ? "-" : o.mutate);
  out.add("CONFIG", std::move(fields));
  std::size_t failed = 0;
  const std::size_t count = rf_report_count(report.get());
  for (std::size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    const char* witness = nullptr;
    int pass = 0;
    std::size_t instances = 0;
    check(rf_report_check(report.get(), i, &name, &pass, &witness, &instances));
    if (!pass) ++failed;
    out.add("CHECK", {{"name", name},
                      {"verdict", pass ? "pass" : "fail"},
                      {"witness", witness},
                      {"instances", std::to_string(instances)}});
  }
  out.add("SUMMARY", {{"suite", suite},
                      {"checks", std::to_string(count)},
                      {"failed", std::to_string(failed)},
                      {"verdict", failed ? "fail" : "pass"}});
  return failed ? kExitFail : kExitPass;
}

int cmd_compare(const std::string& signature, std::size_t n, std::size_t max_len,
                const Options& o, Output& out) {
  rf_scan* raw = nullptr;
  check(rf_compare_scan(signature.c_str(), n, max_len, &o.budget, &raw));
  ScanPtr scan(raw);
  auto fields = config_fields("compare", signature.empty() ? "empty" : signature, o);
  fields.emplace_back("n", std::to_string(n));
  fields.emplace_back("max_len", std::to_string(max_len));
  out.add("CONFIG", std::move(fields));
  for (std::size_t i = 0; i < rf_scan_level_rows(scan.get()); ++i) {
    const char* scott = nullptr;
    const char* hjorth = nullptr;
    std::size_t count = 0;
    check(rf_scan_level_row(scan.get(), i, &scott, &hjorth, &count));
    out.add("LEVELS", {{"scott", scott}, {"hjorth", hjorth}, {"count", std::to_string(count)}});
  }
  for (std::size_t i = 0; i < rf_scan_witness_count(scan.get()); ++i) {
    out.add("COUNTEREXAMPLE", {{"witness", rf_scan_witness(scan.get(), i)}});
  }
  rf_scan_totals t;
  rf_scan_totals_get(scan.get(), &t);
  out.add("SUMMARY", {{"structures", std::to_string(t.structures)},
                      {"orbits", std::to_string(t.orbits)},
                      {"cases", std::to_string(t.cases)},
                      {"hypothesis_true", std::to_string(t.hypothesis_true)},
                      {"counterexamples", std::to_string(t.counterexamples)},
                      {"scott_stab", std::to_string(t.scott_stab)},
                      {"verdict", t.counterexamples ? "fail" : "pass"}});
  return t.counterexamples ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scott and Hjorth rank analysis of finite and windowed group actions",
               "rankforge"};
  app.require_subcommand(1);
  Options o;
  rf_budget_default(&o.budget);

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for generated instances")->capture_default_str();
  app.add_option("--sizes", o.sizes, "Generated sizes, e.g. g<=8,x<=6,n<=3");
  app.add_option("--basis", o.basis, "all-subsets | singletons+G | sets: {..} ..");
  app.add_option("--max-level", o.max_level, "Stop after this many levels (0 = none)");
  app.add_flag("--dump", o.dump, "Emit every LEQ entry");
  app.add_flag("--oracle", o.oracle, "Cross-check queries against the naive oracles");
  app.add_option("--mutate", o.mutate, "Corrupt the base relation (verify only)")
      ->check(CLI::IsMember({"cc"}));
  app.fallthrough();

  std::string structure_path;
  auto* scott = app.add_subcommand("scott-rank", "Scott rank of each structure in a file");
  scott->add_option("file", structure_path, "Structure file")->required();

  HjorthInput hin;
  auto* hjorth = app.add_subcommand("hjorth", "Levels, ranks and rank partition of a system");
  hjorth->add_option("file", hin.path, "Action file, or structure file with --logic")
      ->required();
  hjorth->add_option("--logic", hin.logic, "Build a logic action from the structures")
      ->check(CLI::IsMember({"finite", "symbolic"}));
  hjorth->add_option("--n", hin.n, "Universe size of the finite logic action");
  hjorth->add_option("--s", hin.s, "Support window of the symbolic logic action");
  hjorth->add_option("--k", hin.k, "Tuple length cap for basis cosets");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "lemmas | iso | vaught | comparison | basis | all")
      ->required();

  std::string signature = "edge:2";
  std::size_t n = 2;
  std::size_t max_len = 2;
  auto* compare = app.add_subcommand("compare", "Scott-versus-Hjorth comparison scan");
  compare->add_option("--signature", signature, "Relations, e.g. edge:2 (empty: none)")
      ->capture_default_str();
  compare->add_option("--n", n, "Universe size")->capture_default_str();
  compare->add_option("--max-len", max_len, "Tuple length cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  Output out;
  int code = kExitPass;
  try {
    if (const char* env = std::getenv("RANKFORGE_BUDGET")) check(rf_budget_parse(env, &o.budget));
    if (!o.mutate.empty() && !verify->parsed()) {
      throw Exit{kExitUsage, "--mutate applies to verify only"};
    }
    if (scott->parsed()) {
      code = cmd_scott_rank(structure_path, o, out);
    } else if (hjorth->parsed()) {
      if (!hin.logic.empty() && hin.logic == "finite" && hin.n == 0) {
        throw Exit{kExitUsage, "--logic finite needs --n"};
      }
      if (hin.logic == "symbolic" && hin.s == 0) {
        throw Exit{kExitUsage, "--logic symbolic needs --s"};
      }
      code = cmd_hjorth(hin, o, out);
    } else if (verify->parsed()) {
      code = cmd_verify(suite, o, out);
    } else if (compare->parsed()) {
      if (o.oracle) throw Exit{kExitUsage, "--oracle is not available for compare"};
      code = cmd_compare(signature, n, max_len, o, out);
    }
  } catch (const Exit& e) {
    std::cerr << "rankforge: " << e.message << '\n';
    return e.code;
  }
  const std::string text = out.render(o.format == "records");
  std::fwrite(text.data(), 1, text.size(), stdout);
  return code;
}
