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

#ifndef DBFOLD_TESTS_FIXTURES_HPP_
#define DBFOLD_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "dbfold/automaton.hpp"
#include "dbfold/sliding_block.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold::testing {

// Folded automaton of G(3,2) with classes q0 = {00,21,10},
// q1 = {01,11,20}, q2 = {02,12,22}.
inline Automaton nonpermaut_automaton() {
  return Automaton::from_rows({{0, 1, 2}, {0, 1, 2}, {1, 0, 2}});
}

// A 3-state element of H_3 built on the folded automaton above.
inline Transducer nonpermaut_transducer() {
  return Transducer(nonpermaut_automaton(), {2, 0, 1, 2, 1, 0, 1, 2, 0});
}

// A 3-state invertible machine T (states q0, q1, q2).
inline Transducer inversion_example() {
  return Transducer(Automaton::from_rows({{1, 2, 0}, {2, 1, 0}, {2, 1, 0}}),
                    {1, 2, 0, 2, 1, 0, 2, 0, 1});
}

// T^{-1}, with state i standing for q_i^{-1}.
inline Transducer inversion_example_inverse() {
  return Transducer(Automaton::from_rows({{0, 1, 2}, {0, 1, 2}, {1, 0, 2}}),
                    {2, 0, 1, 2, 1, 0, 1, 2, 0});
}

// Sample factors t, P, Q whose product lies in H_3.
inline Transducer decomposition_t() {
  return Transducer(Automaton::from_rows({{0, 0, 0}}), {2, 1, 0});
}
inline Transducer decomposition_p() {
  return Transducer(Automaton::from_rows({{1, 0, 0}, {1, 0, 0}}), {0, 1, 2, 0, 2, 1});
}
inline Transducer decomposition_q() {
  return Transducer(Automaton::from_rows({{1, 1, 0}, {1, 1, 0}}), {1, 0, 2, 0, 1, 2});
}

// Rules over X_3 with window 2: ax -> x for a in {0,1}; 20 -> 1, 21 -> 0,
// 22 -> 2 (g), and a0 -> 0, a1 -> 2, a2 -> 1 with the same last row (f).
inline LocalRule sample_rule_g() {
  return LocalRule(3, 2, {0, 1, 2, 0, 1, 2, 1, 0, 2});
}
inline LocalRule sample_rule_f() {
  return LocalRule(3, 2, {0, 2, 1, 0, 2, 1, 1, 0, 2});
}

// Reference implementations kept deliberately naive.

// Least k such that every word of length k drives all states together.
inline std::optional<std::size_t> brute_sync_level(const Automaton& a, std::size_t max_k = 8) {
  const auto n = a.alphabet_size();
  for (std::size_t k = 0; k <= max_k; ++k) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= n;
    bool all = true;
    for (std::size_t r = 0; r < count && all; ++r) {
      auto w = word_of_rank(r, n, k);
      const auto s = a.run(0, w);
      for (State q = 1; q < a.state_count() && all; ++q) all = a.run(q, w) == s;
    }
    if (all) return k;
  }
  return std::nullopt;
}

// Sets of output words produced from each state on all words of length
// `len`, used to compare machines state-by-state.
inline std::set<std::vector<Word>> behaviours(const Transducer& t, std::size_t len) {
  const auto n = t.alphabet_size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= n;
  std::set<std::vector<Word>> out;
  for (State q = 0; q < t.state_count(); ++q) {
    std::vector<Word> row;
    for (std::size_t r = 0; r < count; ++r) row.push_back(t.translate(q, word_of_rank(r, n, len)));
    out.insert(std::move(row));
  }
  return out;
}

// Output word of the bi-infinite sequence obtained by sliding f over the
// periodic extension of `period`.
inline Word periodic_windows(const LocalRule& f, const Word& period) {
  Word x;
  const auto reps = (f.window() + period.size() - 1) / period.size() + 1;
  for (std::size_t r = 0; r < reps; ++r) x.insert(x.end(), period.begin(), period.end());
  auto y = apply_windows(f, x);
  return Word(y.end() - static_cast<std::ptrdiff_t>(period.size()), y.end());
}

inline Word rotate_left(Word w) {
  if (!w.empty()) std::rotate(w.begin(), w.begin() + 1, w.end());
  return w;
}

}  // namespace dbfold::testing

#endif  // DBFOLD_TESTS_FIXTURES_HPP_
