// Copyright 2026 The hypercut Authors
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

#include "hypercut/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "hypercut/errors.hpp"

namespace hypercut {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t to_uint(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<HypergraphBuilder> builder;
  int r = 0;
  Vertex n = 0;
  std::vector<Vertex> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!builder) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'r n'");
      const auto r_value = to_uint(tokens[0], line_no, "uniformity");
      const auto n_value = to_uint(tokens[1], line_no, "vertex count");
      if (r_value < kMinUniformity || r_value > kMaxUniformity) {
        throw ParseError(line_no, "uniformity " + std::to_string(r_value) + " not supported");
      }
      if (n_value > std::numeric_limits<Vertex>::max() - 1) {
        throw ParseError(line_no, "vertex count too large");
      }
      r = static_cast<int>(r_value);
      n = static_cast<Vertex>(n_value);
      builder.emplace(r, n);
      continue;
    }
    if (tokens.size() != static_cast<std::size_t>(r) && tokens.size() != static_cast<std::size_t>(r) + 1) {
      throw ParseError(line_no, "expected " + std::to_string(r) + " vertices and an optional multiplicity, got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    vertices.clear();
    for (int j = 0; j < r; ++j) {
      const auto v = to_uint(tokens[static_cast<std::size_t>(j)], line_no, "vertex");
      if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
      vertices.push_back(static_cast<Vertex>(v));
    }
    Multiplicity mult = 1;
    if (tokens.size() == static_cast<std::size_t>(r) + 1) {
      mult = to_uint(tokens.back(), line_no, "multiplicity");
    }
    try {
      builder->add_edge(vertices, mult);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!builder) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'r n' header");
  return builder->build();
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_hypergraph(in);
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.num_vertices() << '\n';
  for (std::size_t i = 0; i < h.num_distinct_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    if (h.multiplicity(i) != 1) out << ' ' << h.multiplicity(i);
    out << '\n';
  }
}

void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_hypergraph(out, h);
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace hypercut
