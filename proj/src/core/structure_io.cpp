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

#include <charconv>
#include <set>
#include <sstream>

#include "rankforge/error.hpp"
#include "rankforge/structures.hpp"
#include "text_util.hpp"

namespace rankforge {

namespace {

[[noreturn]] void line_error(ErrorCode code, std::size_t line,
                             const std::string& what) {
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

}  // namespace

StructureFile parse_structure_file(std::string_view text) {
  StructureFile out;
  std::vector<Relation> rels;
  bool have_signature = false;
  bool signature_frozen = false;
  std::set<std::string> ids;

  enum class Block { kNone, kSignature, kStructure };
  Block block = Block::kNone;
  StructureKind kind = StructureKind::kFinite;
  std::string id;
  std::size_t size = 0;
  std::vector<std::vector<Tuple>> facts;

  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    const auto toks = detail::tokenize(lines[ln]);
    if (toks.empty()) continue;

    if (block == Block::kSignature) {
      if (toks[0] == "end" && toks.size() == 1) {
        out.signature = Signature(rels);
        block = Block::kNone;
      } else if (toks[0] == "rel" && toks.size() == 3) {
        Relation r{std::string(toks[1]),
                   static_cast<unsigned>(parse_count(toks[2], line))};
        if (r.arity == 0) line_error(ErrorCode::kSchema, line, "arity must be positive");
        for (const auto& prev : rels) {
          if (prev.name == r.name) {
            line_error(ErrorCode::kSchema, line, "duplicate relation '" + r.name + "'");
          }
        }
        rels.push_back(std::move(r));
      } else {
        line_error(ErrorCode::kParse, line, "expected 'rel <name> <arity>' or 'end'");
      }
      continue;
    }

    if (block == Block::kStructure) {
      if (toks[0] == "end" && toks.size() == 1) {
        try {
          Structure s = kind == StructureKind::kFinite
                            ? Structure::finite(out.signature, size, std::move(facts))
                            : Structure::supported(out.signature, size, std::move(facts));
          out.structures.push_back({id, std::move(s)});
        } catch (const Error& e) {
          line_error(e.code(), line, e.what());
        }
        block = Block::kNone;
        continue;
      }
      const auto r = out.signature.find(toks[0]);
      if (!r) {
        line_error(ErrorCode::kSchema, line, "unknown relation '" + std::string(toks[0]) + "'");
      }
      const unsigned arity = out.signature.relations()[*r].arity;
      if (toks.size() - 1 != arity) {
        line_error(ErrorCode::kSchema, line,
                   "relation '" + std::string(toks[0]) + "' expects " +
                       std::to_string(arity) + " arguments");
      }
      Tuple t;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::size_t e = parse_count(toks[i], line);
        if (e >= size) {
          line_error(ErrorCode::kRange, line,
                     "element " + std::to_string(e) + " out of range for " +
                         (kind == StructureKind::kFinite ? "size " : "support ") +
                         std::to_string(size));
        }
        t.push_back(static_cast<Element>(e));
      }
      facts[*r].push_back(std::move(t));
      continue;
    }

    // Top level.
    if (toks[0] == "signature" && toks.size() == 1) {
      if (have_signature || signature_frozen) {
        line_error(ErrorCode::kParse, line, "signature must come first and only once");
      }
      have_signature = true;
      block = Block::kSignature;
    } else if ((toks[0] == "structure" || toks[0] == "supported") && toks.size() == 4) {
      const bool finite = toks[0] == "structure";
      if (toks[2] != (finite ? "size" : "support")) {
        line_error(ErrorCode::kParse, line,
                   finite ? "expected 'structure <id> size <n>'"
                          : "expected 'supported <id> support <s>'");
      }
      signature_frozen = true;
      kind = finite ? StructureKind::kFinite : StructureKind::kSupported;
      id = std::string(toks[1]);
      if (!ids.insert(id).second) {
        line_error(ErrorCode::kSchema, line, "duplicate structure id '" + id + "'");
      }
      size = parse_count(toks[3], line);
      facts.assign(out.signature.size(), {});
      block = Block::kStructure;
    } else {
      line_error(ErrorCode::kParse, line, "unexpected '" + std::string(toks[0]) + "'");
    }
  }
  if (block != Block::kNone) {
    line_error(ErrorCode::kParse, lines.size(), "missing 'end'");
  }
  return out;
}

std::string serialize(const StructureFile& file) {
  std::ostringstream os;
  os << "signature\n";
  for (const auto& r : file.signature.relations()) {
    os << "rel " << r.name << ' ' << r.arity << '\n';
  }
  os << "end\n";
  for (const auto& [id, s] : file.structures) {
    os << (s.is_finite() ? "structure " : "supported ") << id
       << (s.is_finite() ? " size " : " support ") << s.size() << '\n';
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
      for (const auto& t : s.facts(r)) {
        os << s.signature().relations()[r].name;
        for (auto e : t) os << ' ' << e;
        os << '\n';
      }
    }
    os << "end\n";
  }
  return os.str();
}

Structure parse_structure(std::string_view text) {
  auto file = parse_structure_file(text);
  if (file.structures.empty()) fail(ErrorCode::kParse, "no structure in input");
  return std::move(file.structures.front().structure);
}

}  // namespace rankforge
