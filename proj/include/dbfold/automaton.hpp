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

#ifndef DBFOLD_AUTOMATON_HPP_
#define DBFOLD_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dbfold/permutation.hpp"

namespace dbfold {

// Default limits. All are overridable per call.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultCollapseSearchCap = 1'000'000;

// A complete deterministic automaton over the alphabet {0, ..., n-1}.
// States are dense indices; transitions are stored row-major, one row of n
// targets per state.
class Automaton {
 public:
  // Throws ValidationError unless n >= 1, states >= 1, and every entry of
  // `delta` (size states * n) is a valid state.
  Automaton(std::size_t alphabet_size, std::size_t state_count,
            std::vector<State> delta);

  static Automaton from_rows(const std::vector<std::vector<State>>& rows);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return state_count_; }

  State next(State q, Letter x) const { return delta_[q * alphabet_size_ + x]; }
  std::span<const State> row(State q) const {
    return {delta_.data() + q * alphabet_size_, alphabet_size_};
  }
  const std::vector<State>& table() const { return delta_; }

  // Final state after reading `w` from `q`.
  State run(State q, std::span<const Letter> w) const;

  bool operator==(const Automaton&) const = default;

 private:
  std::size_t alphabet_size_;
  std::size_t state_count_;
  std::vector<State> delta_;
};

// An equivalence relation on states, normalized so that class indices
// appear in order of first occurrence by state index.
class StatePartition {
 public:
  StatePartition() = default;
  // Accepts arbitrary labels and normalizes them.
  explicit StatePartition(std::span<const std::size_t> labels);
  explicit StatePartition(const std::vector<std::size_t>& labels)
      : StatePartition(std::span<const std::size_t>(labels)) {}

  static StatePartition discrete(std::size_t size);
  static StatePartition single(std::size_t size);

  std::size_t size() const { return class_of_.size(); }
  std::size_t class_count() const { return class_count_; }
  std::size_t class_of(std::size_t q) const { return class_of_[q]; }
  const std::vector<std::size_t>& labels() const { return class_of_; }
  std::vector<std::vector<State>> classes() const;

  bool operator==(const StatePartition&) const = default;
  auto operator<=>(const StatePartition& other) const {
    return class_of_ <=> other.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

// Lexicographic rank of a word over {0..n-1}; the first letter is the most
// significant digit.
std::size_t word_rank(std::span<const Letter> w, std::size_t n);
Word word_of_rank(std::size_t rank, std::size_t n, std::size_t length);
// n^k, throwing CapExceeded when the result would exceed `cap`.
std::size_t checked_power(std::size_t n, std::size_t k, std::size_t cap);

// The de Bruijn graph G(n,m): state = rank of a_1...a_m, and reading x
// leads to a_2...a_m x.
Automaton de_bruijn(std::size_t n, std::size_t m,
                    std::size_t cap = kDefaultStateCap);

bool is_folding(const Automaton& a, const StatePartition& p);
Automaton quotient(const Automaton& a, const StatePartition& p);

// Merges states whose transition rows agree class-wise under `current`;
// the result partitions the original states.
StatePartition row_merge(const Automaton& a, const StatePartition& current);

struct SyncTerm {
  Automaton automaton;
  StatePartition partition;  // of the original states
};

struct SyncSequence {
  std::vector<SyncTerm> terms;
  std::size_t stabilization_index = 0;  // index of the last term
};

SyncSequence sync_sequence(const Automaton& a);
// Minimal synchronizing level, or nullopt when not strongly synchronizing.
std::optional<std::size_t> sync_level(const Automaton& a);
bool is_strongly_synchronizing(const Automaton& a);

// The state forced by `w`. Requires |w| >= sync_level(a).
State sync_map(const Automaton& a, std::span<const Letter> w);

struct CoreResult {
  Automaton core;
  std::vector<State> embedding;  // core state -> original state
};
CoreResult core_of(const Automaton& a);
bool is_core(const Automaton& a);

// The folding of G(n, level) whose quotient is `a`; `level` defaults to
// max(sync_level(a), 1) and must be at least the synchronizing level.
StatePartition folding_from_sync(const Automaton& a,
                                 std::optional<std::size_t> level = {});

// Encoding invariant under state renumbering. Strongly connected inputs
// cost one breadth-first pass per state; other inputs branch over the
// choice of each new root.
std::vector<std::uint32_t> canonical_form(const Automaton& a);
bool is_isomorphic(const Automaton& a, const Automaton& b);

// Whether single-pair merges of states with equal transition rows turn `a`
// into an automaton isomorphic to `b`. Throws CapExceeded when more than
// `cap` automata are visited.
bool is_collapse_equivalent(const Automaton& a, const Automaton& b,
                            std::size_t cap = kDefaultCollapseSearchCap);

namespace detail {
// Shared canonical encoder: `labels` (optional, same layout as delta) are
// carried through the renumbering, so transducers reuse it.
std::vector<std::uint32_t> canonical_encoding(
    std::size_t n, std::size_t m, std::span<const State> delta,
    std::span<const Letter> labels);
}  // namespace detail

}  // namespace dbfold

#endif  // DBFOLD_AUTOMATON_HPP_
