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

#include "rankforge/rankforge.h"

#include <charconv>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "rankforge/actions.hpp"
#include "rankforge/error.hpp"
#include "rankforge/generators.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/oracle.hpp"
#include "rankforge/scott.hpp"
#include "rankforge/structures.hpp"
#include "rankforge/verify.hpp"

using namespace rankforge;

struct rf_structures {
  StructureFile file;
};

struct rf_system {
  ActionSystem sys;
};

struct rf_analysis {
  const rf_system* owner;
  HjorthAnalysis analysis;
  std::vector<RankPart> parts;
};

struct rf_report {
  VerificationReport report;
};

struct rf_scan {
  ComparisonScan scan;
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> rows;
};

namespace {

thread_local std::string g_last_error;

rf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return RF_ERR_PARSE;
    case ErrorCode::kSchema: return RF_ERR_SCHEMA;
    case ErrorCode::kRange: return RF_ERR_RANGE;
    case ErrorCode::kBudget: return RF_ERR_BUDGET;
    case ErrorCode::kUsage: return RF_ERR_USAGE;
    case ErrorCode::kInvalidBaseRelation: return RF_ERR_INVALID_BASE_RELATION;
    case ErrorCode::kInvalidSystem: return RF_ERR_INVALID_SYSTEM;
    case ErrorCode::kUnsupported: return RF_ERR_UNSUPPORTED;
    case ErrorCode::kDepthExceeded: return RF_ERR_DEPTH_EXCEEDED;
  }
  return RF_ERR_INTERNAL;
}

template <typename F>
rf_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return RF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RF_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::kUsage, what);
}

Level level_of(unsigned level) {
  return level == RF_LEVEL_STAB ? Level::stabilized() : Level::at(level);
}

LogicLimits limits_of(const rf_budget* budget) {
  rf_budget b;
  rf_budget_default(&b);
  if (budget) b = *budget;
  LogicLimits limits;
  limits.max_n = b.max_n;
  limits.max_support = b.max_support;
  limits.max_k = b.max_k;
  return limits;
}

std::vector<Structure> structures_of(const rf_structures* file) {
  std::vector<Structure> out;
  for (const auto& s : file->file.structures) out.push_back(s.structure);
  return out;
}

void check_points(const ActionSystem& sys, const rf_budget* budget) {
  rf_budget b;
  rf_budget_default(&b);
  if (budget) b = *budget;
  if (sys.num_points() > b.max_points) {
    fail(ErrorCode::kBudget, "system has " + std::to_string(sys.num_points()) +
                                 " points, budget is |X| <= " + std::to_string(b.max_points));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    fail(ErrorCode::kParse, "expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "0.1.0"; }

const char* rf_status_name(rf_status status) {
  switch (status) {
    case RF_OK: return "ok";
    case RF_ERR_PARSE: return error_code_name(ErrorCode::kParse);
    case RF_ERR_SCHEMA: return error_code_name(ErrorCode::kSchema);
    case RF_ERR_RANGE: return error_code_name(ErrorCode::kRange);
    case RF_ERR_BUDGET: return error_code_name(ErrorCode::kBudget);
    case RF_ERR_USAGE: return error_code_name(ErrorCode::kUsage);
    case RF_ERR_INVALID_BASE_RELATION: return error_code_name(ErrorCode::kInvalidBaseRelation);
    case RF_ERR_INVALID_SYSTEM: return error_code_name(ErrorCode::kInvalidSystem);
    case RF_ERR_UNSUPPORTED: return error_code_name(ErrorCode::kUnsupported);
    case RF_ERR_DEPTH_EXCEEDED: return error_code_name(ErrorCode::kDepthExceeded);
    case RF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rf_last_error(void) { return g_last_error.c_str(); }

void rf_budget_default(rf_budget* out) {
  if (!out) return;
  *out = rf_budget{16, 12, 4, 3, 3};
}

rf_status rf_budget_parse(const char* text, rf_budget* inout) {
  return guarded([&] {
    require(text && inout, "null argument");
    rf_budget b = *inout;
    std::string_view rest(text);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto term = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (term.empty()) continue;
      const auto eq = term.find('=');
      if (eq == std::string_view::npos) {
        fail(ErrorCode::kParse, "budget entry '" + std::string(term) + "' lacks '='");
      }
      const auto key = trim(term.substr(0, eq));
      const std::size_t value = parse_count(trim(term.substr(eq + 1)));
      if (key == "g") {
        b.max_group = value;
      } else if (key == "x") {
        b.max_points = value;
      } else if (key == "n") {
        b.max_n = value;
      } else if (key == "s") {
        b.max_support = value;
      } else if (key == "k") {
        b.max_k = value;
      } else {
        fail(ErrorCode::kParse, "unknown budget key '" + std::string(key) + "'");
      }
    }
    *inout = b;
  });
}

rf_status rf_structures_parse(const char* text, rf_structures** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new rf_structures{parse_structure_file(text)};
  });
}

void rf_structures_free(rf_structures* file) { delete file; }

size_t rf_structures_count(const rf_structures* file) {
  return file ? file->file.structures.size() : 0;
}

const char* rf_structures_id(const rf_structures* file, size_t index) {
  if (!file || index >= file->file.structures.size()) return nullptr;
  return file->file.structures[index].id.c_str();
}

size_t rf_structures_size(const rf_structures* file, size_t index) {
  if (!file || index >= file->file.structures.size()) return 0;
  return file->file.structures[index].structure.size();
}

rf_status rf_scott_rank(const rf_structures* file, size_t index, unsigned* rank,
                        unsigned* stab) {
  return guarded([&] {
    require(file && rank, "null argument");
    if (index >= file->file.structures.size()) fail(ErrorCode::kRange, "structure index");
    const ScottRank r = scott_rank(file->file.structures[index].structure);
    *rank = r.value;
    if (stab) *stab = r.stabilized_at;
  });
}

rf_status rf_oracle_scott_rank(const rf_structures* file, size_t index, unsigned* rank) {
  return guarded([&] {
    require(file && rank, "null argument");
    if (index >= file->file.structures.size()) fail(ErrorCode::kRange, "structure index");
    const Structure& m = file->file.structures[index].structure;
    if (!m.is_finite()) fail(ErrorCode::kUnsupported, "oracle needs a finite structure");
    if (m.size() > 5) fail(ErrorCode::kBudget, "oracle Scott rank is limited to 5 elements");
    oracle::NaiveScott naive(m, m);
    std::vector<Tuple> tuples{Tuple{}};
    std::vector<Tuple> layer{Tuple{}};
    for (std::size_t len = 1; len <= m.size(); ++len) {
      std::vector<Tuple> next;
      for (const auto& t : layer) {
        for (Element e = 0; e < m.size(); ++e) {
          Tuple u = t;
          u.push_back(e);
          next.push_back(std::move(u));
        }
      }
      tuples.insert(tuples.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    for (unsigned level = 0;; ++level) {
      bool stable = true;
      for (std::size_t i = 0; i < tuples.size() && stable; ++i) {
        for (std::size_t j = i + 1; j < tuples.size() && stable; ++j) {
          if (tuples[i].size() != tuples[j].size()) continue;
          if (naive(tuples[i], tuples[j], level) && !naive(tuples[i], tuples[j], level + 1)) {
            stable = false;
          }
        }
      }
      if (stable) {
        *rank = level;
        return;
      }
    }
  });
}

rf_status rf_scott_equivalent(const rf_structures* file, size_t a, size_t b, int* out) {
  return guarded([&] {
    require(file && out, "null argument");
    const auto& ss = file->file.structures;
    if (a >= ss.size() || b >= ss.size()) fail(ErrorCode::kRange, "structure index");
    *out = scott_equiv(ss[a].structure, {}, ss[b].structure, {}, Level::stabilized());
  });
}

rf_status rf_system_from_action(const char* text, const char* basis, const rf_budget* budget,
                                rf_system** out) {
  return guarded([&] {
    require(text && out, "null argument");
    rf_budget b;
    rf_budget_default(&b);
    if (budget) b = *budget;
    FiniteDiscreteSpec spec = parse_action_file(text);
    if (basis) spec.basis = parse_basis_spec(basis);
    if (spec.size > b.max_points) {
      fail(ErrorCode::kBudget, "space has " + std::to_string(spec.size) +
                                   " points, budget is |X| <= " + std::to_string(b.max_points));
    }
    *out = new rf_system{build_finite_discrete(spec, b.max_group)};
  });
}

rf_status rf_system_finite_logic(const rf_structures* file, size_t n, size_t k,
                                 const rf_budget* budget, rf_system** out) {
  return guarded([&] {
    require(file && out, "null argument");
    auto built = build_finite_logic(file->file.signature, n, k, structures_of(file),
                                    limits_of(budget));
    check_points(built.system, budget);
    *out = new rf_system{std::move(built.system)};
  });
}

rf_status rf_system_symbolic_logic(const rf_structures* file, size_t s, size_t k,
                                   const rf_budget* budget, rf_system** out) {
  return guarded([&] {
    require(file && out, "null argument");
    auto built = build_symbolic_logic(file->file.signature, s, k, structures_of(file),
                                      limits_of(budget));
    check_points(built.system, budget);
    *out = new rf_system{std::move(built.system)};
  });
}

void rf_system_free(rf_system* sys) { delete sys; }

size_t rf_system_num_points(const rf_system* sys) { return sys ? sys->sys.num_points() : 0; }

size_t rf_system_num_basis(const rf_system* sys) { return sys ? sys->sys.num_basis() : 0; }

const char* rf_system_point_label(const rf_system* sys, size_t x) {
  if (!sys || x >= sys->sys.num_points()) return nullptr;
  return sys->sys.point_label(x).c_str();
}

const char* rf_system_basis_label(const rf_system* sys, size_t v) {
  if (!sys || v >= sys->sys.num_basis()) return nullptr;
  return sys->sys.basis_label(v).c_str();
}

const char* rf_system_description(const rf_system* sys) {
  return sys ? sys->sys.description().c_str() : nullptr;
}

rf_status rf_oracle_leq(const rf_system* sys, size_t x0, size_t v0, size_t x1, size_t v1,
                        unsigned level, int* out) {
  return guarded([&] {
    require(sys && out, "null argument");
    require(level != RF_LEVEL_STAB, "the oracle needs an explicit level");
    const auto& s = sys->sys;
    if (x0 >= s.num_points() || x1 >= s.num_points() || v0 >= s.num_basis() ||
        v1 >= s.num_basis()) {
      fail(ErrorCode::kRange, "index out of range");
    }
    *out = oracle::naive_leq(s, x0, v0, x1, v1, level);
  });
}

rf_status rf_analysis_new(const rf_system* sys, unsigned max_level, rf_analysis** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    std::optional<unsigned> cap;
    if (max_level) cap = max_level;
    auto* a = new rf_analysis{sys, HjorthAnalysis(sys->sys, cap), {}};
    if (a->analysis.table().stabilized()) a->parts = a->analysis.partition_by_rank();
    *out = a;
  });
}

void rf_analysis_free(rf_analysis* analysis) { delete analysis; }

int rf_analysis_stabilized(const rf_analysis* analysis) {
  return analysis && analysis->analysis.table().stabilized();
}

unsigned rf_analysis_top_level(const rf_analysis* analysis) {
  return analysis ? analysis->analysis.table().top_level() : 0;
}

rf_status rf_analysis_stab(const rf_analysis* analysis, unsigned* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    *out = analysis->analysis.table().stab();
  });
}

rf_status rf_leq(const rf_analysis* analysis, size_t x0, size_t v0, size_t x1, size_t v1,
                 unsigned level, int* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    *out = analysis->analysis.leq(x0, v0, x1, v1, level_of(level));
  });
}

rf_status rf_equiv(const rf_analysis* analysis, size_t x, size_t y, unsigned level, int* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    *out = analysis->analysis.equiv(x, y, level_of(level));
  });
}

rf_status rf_rank(const rf_analysis* analysis, size_t x, unsigned* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    *out = analysis->analysis.rank(x).value;
  });
}

rf_status rf_minimal_m(const rf_analysis* analysis, size_t x, int* found, unsigned* m) {
  return guarded([&] {
    require(analysis && found && m, "null argument");
    const auto r = analysis->analysis.minimal_m(x);
    *found = r.has_value();
    *m = r.value_or(0);
  });
}

rf_status rf_compare_ranks(const rf_analysis* analysis, size_t x, size_t y, int* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    const auto c = analysis->analysis.compare_ranks(x, y);
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

rf_status rf_partition_count(const rf_analysis* analysis, size_t* out) {
  return guarded([&] {
    require(analysis && out, "null argument");
    if (!analysis->analysis.table().stabilized()) {
      fail(ErrorCode::kUsage, "ranks need a stabilized table");
    }
    *out = analysis->parts.size();
  });
}

rf_status rf_partition_part(const rf_analysis* analysis, size_t part, unsigned* rank,
                            size_t* members, size_t cap, size_t* count) {
  return guarded([&] {
    require(analysis && rank && count, "null argument");
    if (part >= analysis->parts.size()) fail(ErrorCode::kRange, "part index");
    const auto& p = analysis->parts[part];
    *rank = p.rank;
    std::size_t i = 0;
    p.points.for_each([&](std::size_t x) {
      if (members && i < cap) members[i] = x;
      ++i;
    });
    *count = i;
  });
}

void rf_verify_config_default(rf_verify_config* out) {
  if (!out) return;
  const GeneratorSizes sizes;
  *out = rf_verify_config{7, sizes.max_group, sizes.max_points, sizes.max_n, sizes.count,
                          nullptr};
}

rf_status rf_verify_parse_sizes(const char* text, rf_verify_config* inout) {
  return guarded([&] {
    require(text && inout, "null argument");
    const GeneratorSizes sizes = parse_sizes(text);
    inout->max_group = sizes.max_group;
    inout->max_points = sizes.max_points;
    inout->max_n = sizes.max_n;
    inout->count = sizes.count;
  });
}

rf_status rf_verify_run(const char* suite, const rf_verify_config* config, rf_report** out) {
  return guarded([&] {
    require(suite && config && out, "null argument");
    VerifyConfig vc;
    vc.seed = config->seed;
    vc.sizes.max_group = config->max_group;
    vc.sizes.max_points = config->max_points;
    vc.sizes.max_n = config->max_n;
    vc.sizes.count = config->count;
    if (config->mutate) vc.mutate = std::string(config->mutate);
    *out = new rf_report{run_suite(suite, vc)};
  });
}

void rf_report_free(rf_report* report) { delete report; }

size_t rf_report_count(const rf_report* report) {
  return report ? report->report.checks.size() : 0;
}

rf_status rf_report_check(const rf_report* report, size_t index, const char** name, int* pass,
                          const char** witness, size_t* instances) {
  return guarded([&] {
    require(report, "null argument");
    if (index >= report->report.checks.size()) fail(ErrorCode::kRange, "check index");
    const auto& c = report->report.checks[index];
    if (name) *name = c.name.c_str();
    if (pass) *pass = c.pass;
    if (witness) *witness = c.witness.c_str();
    if (instances) *instances = c.instances;
  });
}

rf_status rf_compare_scan(const char* signature, size_t n, size_t max_len,
                          const rf_budget* budget, rf_scan** out) {
  return guarded([&] {
    require(signature && out, "null argument");
    const LogicLimits limits = limits_of(budget);
    if (n > limits.max_n) {
      fail(ErrorCode::kBudget, "n = " + std::to_string(n) + " exceeds the budget n <= " +
                                   std::to_string(limits.max_n));
    }
    auto* s = new rf_scan{comparison_scan(parse_signature_spec(signature), n, max_len, limits),
                          {}};
    s->rows.assign(s->scan.levels.begin(), s->scan.levels.end());
    *out = s;
  });
}

void rf_scan_free(rf_scan* scan) { delete scan; }

void rf_scan_totals_get(const rf_scan* scan, rf_scan_totals* out) {
  if (!scan || !out) return;
  const auto& s = scan->scan;
  *out = rf_scan_totals{s.structures, s.orbits,          s.cases,
                        s.hypothesis_true, s.counterexamples, s.scott_stab};
}

size_t rf_scan_level_rows(const rf_scan* scan) { return scan ? scan->rows.size() : 0; }

rf_status rf_scan_level_row(const rf_scan* scan, size_t index, const char** scott,
                            const char** hjorth, size_t* count) {
  return guarded([&] {
    require(scan, "null argument");
    if (index >= scan->rows.size()) fail(ErrorCode::kRange, "row index");
    const auto& [levels, c] = scan->rows[index];
    if (scott) *scott = levels.first.c_str();
    if (hjorth) *hjorth = levels.second.c_str();
    if (count) *count = c;
  });
}

size_t rf_scan_witness_count(const rf_scan* scan) {
  return scan ? scan->scan.witnesses.size() : 0;
}

const char* rf_scan_witness(const rf_scan* scan, size_t index) {
  if (!scan || index >= scan->scan.witnesses.size()) return nullptr;
  return scan->scan.witnesses[index].c_str();
}

}  // extern "C"
