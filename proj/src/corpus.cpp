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

#include "dbfold/corpus.hpp"

#include "dbfold/counting.hpp"
#include "dbfold/error.hpp"
#include "dbfold/graph_aut.hpp"

namespace dbfold {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Word random_word(std::size_t n, std::size_t length, Rng& rng) {
  Word w(length);
  for (auto& x : w) x = static_cast<Letter>(uniform(rng, 0, n - 1));
  return w;
}

Automaton random_folding(std::size_t n, std::size_t m, Rng& rng) {
  const auto g = de_bruijn(n, m);
  const auto size = g.state_count();
  std::vector<std::pair<State, State>> pairs(uniform(rng, 0, size / 2));
  for (auto& [p, q] : pairs) {
    p = static_cast<State>(uniform(rng, 0, size - 1));
    q = static_cast<State>(uniform(rng, 0, size - 1));
  }
  return quotient(g, congruence_closure(g, pairs));
}

Transducer random_automorphism_machine(std::size_t n, std::size_t m, Rng& rng) {
  const auto a = random_folding(n, m, rng);
  const auto group = enumerate_automorphisms(a);
  const auto& phi = group[uniform(rng, 0, group.size() - 1)];
  return weak_minimize(transducer_from_automorphism(a, phi));
}

Transducer random_hn_element(std::size_t n, std::size_t m, std::size_t factors, Rng& rng,
                             std::size_t state_cap) {
  auto product = random_automorphism_machine(n, m, rng);
  for (std::size_t i = 1; i < factors; ++i) {
    auto next = product_min(product, random_automorphism_machine(n, m, rng));
    if (next.state_count() <= state_cap) product = std::move(next);
  }
  return product;
}

LocalRule random_rule(std::size_t n, std::size_t window, Rng& rng) {
  std::vector<Letter> table(checked_power(n, window, kDefaultStateCap));
  for (auto& y : table) y = static_cast<Letter>(uniform(rng, 0, n - 1));
  return LocalRule(n, window, std::move(table));
}

}  // namespace dbfold
