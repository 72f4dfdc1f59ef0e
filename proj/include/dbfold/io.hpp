// Copyright 2026 The dbfold Authors
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

#ifndef DBFOLD_IO_HPP_
#define DBFOLD_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/decomposition.hpp"
#include "dbfold/graph_aut.hpp"
#include "dbfold/sliding_block.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

// Line-oriented text formats. Blank lines and text after '#' are ignored.
//
//   automaton n=<n> states=<m>
//   state <i>: <delta row>
//
//   transducer n=<n> states=<m>
//   state <i>: <delta row> | <output row>
//
//   rule n=<n> window=<w>
//   table: <n^w letters, indexed by window rank>
//
//   partition states=<m> classes=<c>
//   labels: <class of each state>
//
//   automorphism n=<n> states=<m>
//   vertices: <image of each vertex>
//   edges: <output label of each edge (q, x), row-major>
//
// Syntax errors throw ParseError; well-formed input with out-of-range values
// throws ValidationError.

std::string render(const Automaton& a);
std::string render(const Transducer& t);
std::string render(const LocalRule& f);
std::string render(const StatePartition& p);
std::string render(const DigraphAutomorphism& phi, std::size_t alphabet_size);

// First keyword of the first non-comment line.
std::string header_kind(std::string_view text);

Automaton parse_automaton(std::string_view text);
Transducer parse_transducer(std::string_view text);
LocalRule parse_rule(std::string_view text);
StatePartition parse_partition(std::string_view text);
DigraphAutomorphism parse_automorphism(std::string_view text);

std::string to_dot(const Automaton& a);
std::string to_dot(const Transducer& t);

struct ManifestEntry {
  std::string file;
  std::string role;  // "remainder" or "factor"
  std::size_t states = 0;
  std::size_t order = 0;
  std::size_t step = 0;  // 1-based decomposition step; 0 for the remainder
  std::size_t level = 0;
  State p = 0;
  State q = 0;
  bool operator==(const ManifestEntry&) const = default;
};

struct Manifest {
  std::size_t alphabet_size = 0;
  std::vector<ManifestEntry> entries;
  bool verified = false;
  bool operator==(const Manifest&) const = default;
};

// Entries are the remainder followed by the inverse factors, each stored in
// factor_<index>.txt; the original equals their product in that order.
Manifest make_manifest(const Factorization& f, bool verified);
std::string render(const Manifest& m);
Manifest parse_manifest(std::string_view text);

}  // namespace dbfold

#endif  // DBFOLD_IO_HPP_
