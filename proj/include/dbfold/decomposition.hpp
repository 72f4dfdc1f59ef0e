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

#ifndef DBFOLD_DECOMPOSITION_HPP_
#define DBFOLD_DECOMPOSITION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/graph_aut.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

inline constexpr std::size_t kDefaultAmalgamationCap = 100'000;

struct DecompositionStep {
  State p = 0;
  State q = 0;
  Permutation alpha;
  std::size_t level_i = 0;
  Automaton b_i;                  // term of the inverse-side sync sequence
  DigraphAutomorphism tau;        // vertex-fixing, acts on b_i
  Transducer factor;              // weak_minimize(H(b_i, tau))
  std::vector<Transducer> involutions;  // split of `factor`, if requested
  Transducer reduced;
  std::vector<State> reduced_state;     // input state -> state of `reduced`
};

// original = remainder * inverse_factors[0] * inverse_factors[1] * ...
struct Factorization {
  Transducer original;
  Transducer remainder;
  std::vector<Transducer> inverse_factors;
  std::vector<DecompositionStep> steps;
};

// Lexicographically least pair p < q of states with equal transition rows.
std::pair<State, State> find_collapsible_pair(const Transducer& t);

// The permutation alpha with alpha(out(q, x)) = out(p, x) for every x.
Permutation alignment_permutation(const Transducer& t, State p, State q);

struct FactorChoice {
  std::size_t level_i = 0;
  Automaton b_i;
  DigraphAutomorphism tau;
  Transducer machine;  // H(b_i, tau), unminimized
};
FactorChoice find_factor(const Transducer& t, State p, State q);

DecompositionStep decompose_step(const Transducer& t, bool split_involutions = false);

Factorization decompose(const Transducer& t);
Factorization decompose_involutions(const Transducer& t);

// Re-multiplies the factors and compares with the original, checks factor
// orders, and replays each step's amalgamation certificate against the
// digraph of the normalized original.
bool verify(const Factorization& f);

// Canonical form of the unlabeled multigraph underlying `a`.
std::vector<std::uint32_t> digraph_canonical_form(const Automaton& a);

// True iff the digraph of `gb` is reachable from the digraph of `ga` by
// merging vertices with identical out-edge counts, up to isomorphism.
bool is_amalgamation(const Automaton& gb, const Automaton& ga,
                     std::size_t cap = kDefaultAmalgamationCap);

// True iff merging amalgamable pairs inside the classes of `p` collapses
// every class of the digraph of `ga` and leaves a digraph isomorphic to that
// of `gb`. The merge order is irrelevant.
bool is_amalgamation_along(const Automaton& gb, const Automaton& ga,
                           const StatePartition& p);

}  // namespace dbfold

#endif  // DBFOLD_DECOMPOSITION_HPP_
