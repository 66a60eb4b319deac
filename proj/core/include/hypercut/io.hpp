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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Text format, one hypergraph per file:
//
//   # comment
//   r n
//   v1 v2 ... vr [mult]
//   ...
//
// '#' starts a comment anywhere on a line. mult defaults to 1. Repeated
// vertex sets are merged into one edge with summed multiplicity.

/// Throws ParseError naming the offending line.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::filesystem::path& path);
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical form: header, then distinct edges in lexicographic order, with
/// the multiplicity column only when it differs from 1.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

}  // namespace hypercut
