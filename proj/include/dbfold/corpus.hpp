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

#ifndef DBFOLD_CORPUS_HPP_
#define DBFOLD_CORPUS_HPP_

#include <cstddef>
#include <random>

#include "dbfold/automaton.hpp"
#include "dbfold/sliding_block.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

// Seeded generators for test and benchmark corpora. All draws go through the
// supplied engine, so a fixed seed reproduces the corpus.
using Rng = std::mt19937_64;

Word random_word(std::size_t n, std::size_t length, Rng& rng);

// Quotient of G(n, m) by the closure of a few random state pairs.
Automaton random_folding(std::size_t n, std::size_t m, Rng& rng);

// weak_minimize(H(A, phi)) for a random folding A of G(n, m) and a uniformly
// chosen automorphism phi of its digraph.
Transducer random_automorphism_machine(std::size_t n, std::size_t m, Rng& rng);

// Minimized product of `factors` random automorphism machines; factors that
// would push the product past `state_cap` states are skipped.
Transducer random_hn_element(std::size_t n, std::size_t m, std::size_t factors, Rng& rng,
                             std::size_t state_cap = 64);

LocalRule random_rule(std::size_t n, std::size_t window, Rng& rng);

}  // namespace dbfold

#endif  // DBFOLD_CORPUS_HPP_
