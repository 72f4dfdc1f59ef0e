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

#ifndef DBFOLD_GRAPH_AUT_HPP_
#define DBFOLD_GRAPH_AUT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/permutation.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

inline constexpr std::size_t kDefaultAutomorphismCap = 10'000;

// An automorphism of the unlabeled digraph underlying an automaton. Edges
// are the pairs (state, letter); edge (q, x) is sent to
// (vertex_perm[q], edge_label[q * n + x]).
struct DigraphAutomorphism {
  Permutation vertex_perm;
  std::vector<Letter> edge_label;

  bool operator==(const DigraphAutomorphism&) const = default;
  auto operator<=>(const DigraphAutomorphism&) const = default;
};

// Checks bijectivity plus source and target consistency against `a`.
bool is_valid_automorphism(const Automaton& a, const DigraphAutomorphism& phi);

DigraphAutomorphism identity_automorphism(const Automaton& a);
// Right action: apply `first`, then `second`.
DigraphAutomorphism then(const DigraphAutomorphism& first,
                         const DigraphAutomorphism& second, std::size_t n);
DigraphAutomorphism inverse(const DigraphAutomorphism& phi, std::size_t n);
std::size_t automorphism_order(const DigraphAutomorphism& phi, std::size_t n);

// All automorphisms in lexicographic order of (vertex_perm, edge_label).
// Throws CapExceeded when more than `cap` exist.
std::vector<DigraphAutomorphism> enumerate_automorphisms(
    const Automaton& a, std::size_t cap = kDefaultAutomorphismCap);

// The automorphism induced by relabeling forced words letterwise with
// `rho`, or nullopt when rho does not permute the word classes.
std::optional<DigraphAutomorphism> automorphism_from_alphabet_perm(
    const Automaton& a, const Permutation& rho);

// H(A, phi): base automaton A; reading x at p outputs the label of the
// image edge.
Transducer transducer_from_automorphism(const Automaton& a,
                                        const DigraphAutomorphism& phi);

std::optional<Permutation> is_permutation_induced(
    const Automaton& a, const DigraphAutomorphism& phi);

// H(A, phi then psi) equals H(A, phi) * H(A, psi) after minimization, and
// a non-trivial phi gives a non-identity transducer.
bool verify_embedding(const Automaton& a, const DigraphAutomorphism& phi,
                      const DigraphAutomorphism& psi);

// Splits a vertex-fixing automorphism into vertex-fixing automorphisms of
// order <= 2 whose composition, in order, is phi.
std::vector<DigraphAutomorphism> involution_factors(
    const Automaton& a, const DigraphAutomorphism& phi);

// Maximum number of parallel edges between an ordered pair of states.
std::size_t max_parallel_edges(const Automaton& a);

}  // namespace dbfold

#endif  // DBFOLD_GRAPH_AUT_HPP_
