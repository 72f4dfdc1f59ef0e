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

#ifndef DBFOLD_TRANSDUCER_HPP_
#define DBFOLD_TRANSDUCER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/permutation.hpp"

namespace dbfold {

// A synchronous transducer: an automaton plus one output letter per
// transition.
class Transducer {
 public:
  // Throws ValidationError when `output` has the wrong size or holds an
  // invalid letter.
  Transducer(Automaton base, std::vector<Letter> output);

  const Automaton& automaton() const { return base_; }
  std::size_t alphabet_size() const { return base_.alphabet_size(); }
  std::size_t state_count() const { return base_.state_count(); }
  State next(State q, Letter x) const { return base_.next(q, x); }
  Letter output(State q, Letter x) const {
    return output_[q * alphabet_size() + x];
  }
  std::span<const Letter> output_row(State q) const {
    return {output_.data() + q * alphabet_size(), alphabet_size()};
  }
  const std::vector<Letter>& output_table() const { return output_; }

  // Output word produced while reading `w` from `q`.
  Word translate(State q, std::span<const Letter> w) const;

  bool operator==(const Transducer&) const = default;

 private:
  Automaton base_;
  std::vector<Letter> output_;
};

using CanonicalKey = std::vector<std::uint32_t>;

Transducer identity_transducer(std::size_t n);
// Reading x from state i outputs i and moves to state x.
Transducer shift_transducer(std::size_t n);
Transducer single_state(const Permutation& perm);

// States Q_T x Q_U indexed p * |U| + q; T's output is U's input.
Transducer product_raw(const Transducer& t, const Transducer& u);

// Merges omega-equivalent states (Moore refinement starting from output
// rows).
Transducer weak_minimize(const Transducer& t);
// Restriction to the core of the underlying automaton.
Transducer core_of(const Transducer& t);
// weak_minimize(core_of(product_raw(t, u))). Both operands must be
// strongly synchronizing.
Transducer product_min(const Transducer& t, const Transducer& u);
// Canonical representative of the omega class: minimized core.
Transducer normalize(const Transducer& t);

bool is_invertible(const Transducer& t);
Transducer invert(const Transducer& t);

// (level of t, level of its inverse) when t is invertible and both are
// strongly synchronizing.
std::optional<std::pair<std::size_t, std::size_t>> bisync_levels(
    const Transducer& t);
bool is_in_hn(const Transducer& t);

// Equal keys iff the transducers are isomorphic as labeled machines.
CanonicalKey canonical_key(const Transducer& t);
bool equal_omega(const Transducer& t, const Transducer& u);
bool is_identity(const Transducer& t);

// Output period of f_T on the bi-infinite periodic point with the given
// period. T must be strongly synchronizing and core.
Word apply_periodic(const Transducer& t, std::span<const Letter> period);

struct OrderCap {
  std::size_t max_states = 10'000;
  std::size_t max_iterations = 1'000;
};

// Least k >= 1 with t^k the identity, or nullopt when the cap is hit first.
std::optional<std::size_t> order(const Transducer& t, OrderCap cap = {});

}  // namespace dbfold

#endif  // DBFOLD_TRANSDUCER_HPP_
