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

#ifndef DBFOLD_SLIDING_BLOCK_HPP_
#define DBFOLD_SLIDING_BLOCK_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dbfold/permutation.hpp"
#include "dbfold/transducer.hpp"

namespace dbfold {

// A local rule f: X_n^m -> X_n. `table[word_rank(w)]` is the image of the
// window w, whose last letter is the current position.
class LocalRule {
 public:
  LocalRule(std::size_t alphabet_size, std::size_t window,
            std::vector<Letter> table);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t window() const { return window_; }
  const std::vector<Letter>& table() const { return table_; }
  Letter operator()(std::span<const Letter> window_word) const;

  bool operator==(const LocalRule&) const = default;

 private:
  std::size_t alphabet_size_;
  std::size_t window_;
  std::vector<Letter> table_;
};

// (x_{-1} x_0) -> x_{-1}.
LocalRule shift_rule(std::size_t n);
LocalRule identity_rule(std::size_t n);

// Slides the window over `x` (|x| >= m) and returns the |x| - m + 1 outputs.
Word apply_windows(const LocalRule& f, std::span<const Letter> x);

bool is_right_permutive(const LocalRule& f);
bool is_left_permutive(const LocalRule& f);

// Same map on sequences, window widened by `k` ignored leading letters.
LocalRule extend(const LocalRule& f, std::size_t k);

// h with h_inf = f_inf followed by g_inf; window l + m - 1.
LocalRule compose(const LocalRule& f, const LocalRule& g);

// T_f on G(n, m-1); window-1 rules are extended to window 2 first.
Transducer rule_to_transducer(const LocalRule& f);
// Window k+1 rule of a strongly synchronizing core transducer, k its level.
LocalRule transducer_to_rule(const Transducer& t);

}  // namespace dbfold

#endif  // DBFOLD_SLIDING_BLOCK_HPP_
