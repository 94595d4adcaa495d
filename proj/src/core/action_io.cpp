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

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "rankforge/actions.hpp"
#include "rankforge/error.hpp"
#include "text_util.hpp"

namespace rankforge {

namespace {

[[noreturn]] void line_error(ErrorCode code, std::size_t line, const std::string& what) {
  fail(code, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    line_error(ErrorCode::kParse, line, "expected a number, got '" + std::string(tok) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BasisSpec parse_basis_spec(std::string_view text) {
  text = trim(text);
  if (text == "all-subsets") return {BasisKind::kAllSubsets, {}};
  if (text == "singletons+G") return {BasisKind::kSingletonsPlusG, {}};
  constexpr std::string_view kSets = "sets:";
  if (text.substr(0, kSets.size()) != kSets) {
    fail(ErrorCode::kParse, "unknown basis '" + std::string(text) +
                                "' (expected all-subsets, singletons+G or sets: {..} ...)");
  }
  BasisSpec out{BasisKind::kExplicit, {}};
  std::string_view rest = text.substr(kSets.size());
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    if (rest.front() != '{') fail(ErrorCode::kParse, "expected '{' in basis set list");
    const auto close = rest.find('}');
    if (close == std::string_view::npos) fail(ErrorCode::kParse, "unterminated basis set");
    std::string inner(rest.substr(1, close - 1));
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::vector<std::string> labels;
    for (auto tok : detail::tokenize(inner)) labels.emplace_back(tok);
    out.sets.push_back(std::move(labels));
    rest = rest.substr(close + 1);
  }
  if (out.sets.empty()) fail(ErrorCode::kParse, "basis set list is empty");
  return out;
}

std::string to_string(const BasisSpec& spec) {
  switch (spec.kind) {
    case BasisKind::kAllSubsets: return "all-subsets";
    case BasisKind::kSingletonsPlusG: return "singletons+G";
    case BasisKind::kExplicit: break;
  }
  std::string out = "sets:";
  for (const auto& set : spec.sets) {
    out += " {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += ',';
      out += set[i];
    }
    out += '}';
  }
  return out;
}

FiniteDiscreteSpec parse_action_file(std::string_view text) {
  FiniteDiscreteSpec out;
  bool have_space = false;
  bool have_group = false;
  bool have_basis = false;
  bool in_group = false;
  std::set<std::string> labels;

  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    const auto toks = detail::tokenize(lines[ln]);
    if (toks.empty()) continue;

    if (in_group) {
      if (toks.size() == 1 && toks[0] == "end") {
        in_group = false;
        continue;
      }
      if (toks.size() < 3 || toks[0] != "elem" || toks[2] != ":") {
        line_error(ErrorCode::kParse, line, "expected 'elem <label> : <images>' or 'end'");
      }
      std::string label(toks[1]);
      if (!labels.insert(label).second) {
        line_error(ErrorCode::kSchema, line, "duplicate element '" + label + "'");
      }
      if (toks.size() - 3 != out.size) {
        line_error(ErrorCode::kSchema, line,
                   "element '" + label + "' lists " + std::to_string(toks.size() - 3) +
                       " images, space has size " + std::to_string(out.size));
      }
      Permutation p;
      std::vector<bool> hit(out.size, false);
      for (std::size_t i = 3; i < toks.size(); ++i) {
        const std::size_t v = parse_count(toks[i], line);
        if (v >= out.size) {
          line_error(ErrorCode::kRange, line, "image " + std::to_string(v) + " out of range");
        }
        if (hit[v]) {
          line_error(ErrorCode::kInvalidSystem, line,
                     "element '" + label + "' is not a permutation");
        }
        hit[v] = true;
        p.push_back(static_cast<Element>(v));
      }
      out.labels.push_back(std::move(label));
      out.perms.push_back(std::move(p));
      continue;
    }

    if (toks[0] == "space") {
      if (toks.size() != 3 || toks[1] != "size") {
        line_error(ErrorCode::kParse, line, "expected 'space size <n>'");
      }
      if (have_space) line_error(ErrorCode::kParse, line, "duplicate 'space' line");
      out.size = parse_count(toks[2], line);
      if (out.size == 0) line_error(ErrorCode::kRange, line, "space must be nonempty");
      have_space = true;
    } else if (toks[0] == "group" && toks.size() == 1) {
      if (!have_space) line_error(ErrorCode::kParse, line, "'group' before 'space'");
      if (have_group) line_error(ErrorCode::kParse, line, "duplicate 'group' block");
      have_group = in_group = true;
    } else if (toks[0] == "basis") {
      if (have_basis) line_error(ErrorCode::kParse, line, "duplicate 'basis' line");
      const auto pos = lines[ln].find("basis");
      try {
        out.basis = parse_basis_spec(lines[ln].substr(pos + 5));
      } catch (const Error& e) {
        line_error(e.code(), line, e.what());
      }
      have_basis = true;
    } else {
      line_error(ErrorCode::kParse, line, "unexpected '" + std::string(toks[0]) + "'");
    }
  }
  if (in_group) fail(ErrorCode::kParse, "unterminated 'group' block");
  if (!have_space) fail(ErrorCode::kParse, "missing 'space size <n>'");
  if (!have_group || out.perms.empty()) fail(ErrorCode::kParse, "missing group elements");
  return out;
}

std::string serialize(const FiniteDiscreteSpec& spec) {
  std::ostringstream os;
  os << "space size " << spec.size << "\ngroup\n";
  for (std::size_t g = 0; g < spec.perms.size(); ++g) {
    os << "elem " << spec.labels[g] << " :";
    for (auto v : spec.perms[g]) os << ' ' << v;
    os << '\n';
  }
  os << "end\nbasis " << to_string(spec.basis) << '\n';
  return os.str();
}

}  // namespace rankforge
