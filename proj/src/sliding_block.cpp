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

#include "dbfold/sliding_block.hpp"

#include <algorithm>
#include <string>

#include "dbfold/automaton.hpp"
#include "dbfold/error.hpp"

namespace dbfold {

LocalRule::LocalRule(std::size_t alphabet_size, std::size_t window,
                     std::vector<Letter> table)
    : alphabet_size_(alphabet_size), window_(window), table_(std::move(table)) {
  if (alphabet_size_ < 2) throw ValidationError("alphabet size must be >= 2");
  if (window_ < 1) throw ValidationError("window must be >= 1");
  if (table_.size() != checked_power(alphabet_size_, window_, kDefaultStateCap))
    throw ValidationError("rule table has wrong size");
  for (auto y : table_) {
    if (y >= alphabet_size_)
      throw ValidationError("rule output " + std::to_string(y) + " out of range");
  }
}

Letter LocalRule::operator()(std::span<const Letter> window_word) const {
  return table_[word_rank(window_word, alphabet_size_)];
}

LocalRule shift_rule(std::size_t n) {
  std::vector<Letter> table(n * n);
  for (std::size_t r = 0; r < n * n; ++r) table[r] = static_cast<Letter>(r / n);
  return LocalRule(n, 2, std::move(table));
}

LocalRule identity_rule(std::size_t n) {
  return LocalRule(n, 1, identity_permutation(n));
}

Word apply_windows(const LocalRule& f, std::span<const Letter> x) {
  const auto m = f.window();
  if (x.size() < m) throw PreconditionError("input shorter than the window");
  Word y;
  y.reserve(x.size() - m + 1);
  for (std::size_t i = 0; i + m <= x.size(); ++i) y.push_back(f(x.subspan(i, m)));
  return y;
}

namespace {

// Whether x -> f(a with x inserted at `slot`) is a bijection for every
// block a of length m-1.
bool permutive_at(const LocalRule& f, bool rightmost) {
  const auto n = f.alphabet_size();
  const auto blocks = checked_power(n, f.window() - 1, kDefaultStateCap);
  const auto high = blocks;  // weight of the leftmost letter
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < blocks; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t x = 0; x < n; ++x) {
      const auto r = rightmost ? a * n + x : x * high + a;
      auto y = f.table()[r];
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

}  // namespace

bool is_right_permutive(const LocalRule& f) { return permutive_at(f, true); }
bool is_left_permutive(const LocalRule& f) { return permutive_at(f, false); }

LocalRule extend(const LocalRule& f, std::size_t k) {
  const auto n = f.alphabet_size();
  const auto old_size = f.table().size();
  const auto size = old_size * checked_power(n, k, kDefaultStateCap);
  if (size > kDefaultStateCap) throw CapExceeded("extended rule too large");
  std::vector<Letter> table(size);
  for (std::size_t r = 0; r < size; ++r) table[r] = f.table()[r % old_size];
  return LocalRule(n, f.window() + k, std::move(table));
}

LocalRule compose(const LocalRule& f, const LocalRule& g) {
  if (f.alphabet_size() != g.alphabet_size())
    throw PreconditionError("alphabet mismatch in composition");
  const auto n = f.alphabet_size();
  const auto window = f.window() + g.window() - 1;
  const auto size = checked_power(n, window, kDefaultStateCap);
  std::vector<Letter> table(size);
  for (std::size_t r = 0; r < size; ++r) {
    auto a = word_of_rank(r, n, window);
    table[r] = g(apply_windows(f, a));
  }
  return LocalRule(n, window, std::move(table));
}

Transducer rule_to_transducer(const LocalRule& f) {
  if (f.window() < 2) return rule_to_transducer(extend(f, 1));
  const auto n = f.alphabet_size();
  auto graph = de_bruijn(n, f.window() - 1);
  std::vector<Letter> out(graph.table().size());
  // The window is the state word followed by the letter read.
  for (std::size_t q = 0; q < graph.state_count(); ++q) {
    for (std::size_t x = 0; x < n; ++x) out[q * n + x] = f.table()[q * n + x];
  }
  return Transducer(std::move(graph), std::move(out));
}

LocalRule transducer_to_rule(const Transducer& t) {
  auto level = sync_level(t.automaton());
  if (!level) throw PreconditionError("transducer is not strongly synchronizing");
  if (!is_core(t.automaton())) throw PreconditionError("transducer is not core");
  const auto n = t.alphabet_size();
  const auto window = *level + 1;
  const auto size = checked_power(n, window, kDefaultStateCap);
  std::vector<Letter> table(size);
  for (std::size_t r = 0; r < size; ++r) {
    auto a = word_of_rank(r, n, window);
    const auto history = std::span<const Letter>(a).first(*level);
    table[r] = t.output(t.automaton().run(0, history), a.back());
  }
  return LocalRule(n, window, std::move(table));
}

}  // namespace dbfold
