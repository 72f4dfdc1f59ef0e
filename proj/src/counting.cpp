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

#include "dbfold/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "dbfold/error.hpp"

namespace dbfold {

namespace {

BigCount factorial(std::size_t k) {
  BigCount f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Calls visit(parts) for every integer partition of `total` into
// non-increasing parts.
void integer_partitions(std::size_t total,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (std::size_t p = std::min(left, max); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(total, total);
}

// Number of set partitions of a `total`-set whose block sizes are `parts`.
BigCount partitions_of_type(std::size_t total, const std::vector<std::size_t>& parts) {
  BigCount denom = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    denom *= factorial(parts[i]);
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    denom *= run;
  }
  return factorial(total) / denom;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = find(v);
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

StatePartition close_from(const Automaton& a, const StatePartition& start,
                          std::vector<std::pair<State, State>> pending) {
  UnionFind uf(a.state_count());
  const auto& labels = start.labels();
  std::vector<std::size_t> first(start.class_count(), a.state_count());
  for (State q = 0; q < a.state_count(); ++q) {
    if (first[labels[q]] == a.state_count()) {
      first[labels[q]] = q;
    } else {
      uf.unite(first[labels[q]], q);
    }
  }
  while (!pending.empty()) {
    auto [p, q] = pending.back();
    pending.pop_back();
    if (!uf.unite(p, q)) continue;
    for (Letter x = 0; x < a.alphabet_size(); ++x)
      pending.emplace_back(a.next(p, x), a.next(q, x));
  }
  return StatePartition(uf.labels());
}

void for_each_rgs(std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> rgs(k, 0);
  std::vector<std::size_t> max_prefix(k, 0);  // max of rgs[0..i]
  for (;;) {
    visit(rgs);
    // Increment the rightmost position that can grow.
    std::size_t i = k - 1;
    while (i > 0 && rgs[i] > max_prefix[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      rgs[j] = 0;
      max_prefix[j] = max_prefix[i];
    }
  }
}

}  // namespace

BigCount bell(std::size_t k) {
  static std::vector<BigCount> memo{1};
  while (memo.size() <= k) {
    const auto n = memo.size();
    BigCount sum = 0;
    BigCount binom = 1;  // C(n-1, j-1)
    for (std::size_t j = 1; j <= n; ++j) {
      sum += binom * memo[n - j];
      binom = binom * (n - j) / j;
    }
    memo.push_back(sum);
  }
  return memo[k];
}

std::vector<StatePartition> set_partitions(std::size_t k) {
  if (k > kSetPartitionCap)
    throw CapExceeded("set_partitions is capped at " + std::to_string(kSetPartitionCap));
  std::vector<StatePartition> out;
  for_each_rgs(k, [&](const auto& rgs) { out.emplace_back(rgs); });
  return out;
}

BigCount moebius_R(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw PreconditionError("moebius_R needs s, t >= 1");
  BigCount total = 0;
  integer_partitions(t, [&](const std::vector<std::size_t>& parts) {
    BigCount term = partitions_of_type(t, parts) * factorial(parts.size() - 1);
    for (auto c : parts) term *= bell(c * s);
    if (parts.size() % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  });
  return total;
}

BigCount count_foldings_g_n_2(std::size_t n) {
  if (n < 1) throw PreconditionError("alphabet must be nonempty");
  if (n > kFormulaCap)
    throw CapExceeded("count_foldings_g_n_2 is capped at n = " + std::to_string(kFormulaCap));
  BigCount total = 0;
  integer_partitions(n, [&](const std::vector<std::size_t>& parts) {
    BigCount term = partitions_of_type(n, parts);
    for (auto a : parts) term *= moebius_R(parts.size(), a);
    total += term;
  });
  return total;
}

StatePartition congruence_closure(const Automaton& a,
                                  const std::vector<std::pair<State, State>>& pairs) {
  for (auto [p, q] : pairs) {
    if (p >= a.state_count() || q >= a.state_count())
      throw PreconditionError("state out of range");
  }
  return close_from(a, StatePartition::discrete(a.state_count()), pairs);
}

std::vector<StatePartition> enumerate_foldings(const Automaton& a,
                                               EnumerationMethod method) {
  const auto m = a.state_count();
  std::vector<StatePartition> out;
  if (method == EnumerationMethod::kExhaustive) {
    if (m > kExhaustiveStateCap)
      throw CapExceeded("exhaustive enumeration is capped at " +
                        std::to_string(kExhaustiveStateCap) + " states");
    for_each_rgs(m, [&](const auto& rgs) {
      StatePartition p(rgs);
      if (is_folding(a, p)) out.push_back(std::move(p));
    });
    return out;
  }

  std::vector<std::pair<State, State>> generators;
  for (State p = 0; p < m; ++p) {
    for (State q = p + 1; q < m; ++q) generators.emplace_back(p, q);
  }
  std::set<StatePartition> seen{StatePartition::discrete(m)};
  std::vector<StatePartition> work{StatePartition::discrete(m)};
  while (!work.empty()) {
    auto current = std::move(work.back());
    work.pop_back();
    for (auto [p, q] : generators) {
      if (current.class_of(p) == current.class_of(q)) continue;
      auto joined = close_from(a, current, {{p, q}});
      if (seen.contains(joined)) continue;
      if (seen.size() >= kLatticeCap) throw CapExceeded("folding lattice exceeds cap");
      seen.insert(joined);
      work.push_back(std::move(joined));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace dbfold
