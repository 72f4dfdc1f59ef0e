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

#ifndef DBFOLD_FINITE_ORDER_HPP_
#define DBFOLD_FINITE_ORDER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/graph_aut.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

using StateWord = std::vector<State>;

inline constexpr std::size_t kDefaultSubgroupCap = 512;
inline constexpr std::size_t kDefaultWWordSteps = std::size_t{1} << 16;

// Reads the state word `p` against `gamma`: o_i is the state reached from
// p_i on gamma_{i-1}, and gamma_i is the output produced on that run.
StateWord dual_read(const Transducer& h, std::span<const Letter> gamma,
                    std::span<const State> p);

// Minimal period of dual_read(h, gamma, P), which does not depend on P for
// torsion elements. Throws InvariantViolation if the forced state at some
// step depends on the earlier choice of states, or if the sequence is not
// purely periodic. Throws CapExceeded after `max_steps` iterations.
StateWord w_word(const Transducer& h, std::span<const Letter> gamma,
                 std::size_t max_steps = kDefaultWWordSteps);

struct SubgroupClosure {
  std::size_t alphabet_size = 0;
  std::vector<Transducer> generators;
  std::vector<Transducer> elements;  // minimal forms, identity first
  std::vector<CanonicalKey> keys;    // parallel to elements
  std::size_t max_sync_level = 0;

  // Position of the element omega-equal to `t`, or elements.size().
  std::size_t index_of(const Transducer& t) const;
};

SubgroupClosure subgroup_closure(const std::vector<Transducer>& generators,
                                 std::size_t cap = kDefaultSubgroupCap);

struct SubgroupAutomaton {
  Automaton automaton;
  StatePartition word_classes;                  // over X_n^k by rank
  std::vector<DigraphAutomorphism> embedding;   // parallel to elements
};

SubgroupAutomaton subgroup_automaton(const SubgroupClosure& g);

}  // namespace dbfold

#endif  // DBFOLD_FINITE_ORDER_HPP_
