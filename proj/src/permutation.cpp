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

#include "dbfold/permutation.hpp"

#include <numeric>

#include "dbfold/error.hpp"

namespace dbfold {

bool is_permutation(std::span<const std::uint32_t> table) {
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(std::size_t size) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation inverse(std::span<const std::uint32_t> perm) {
  if (!is_permutation(perm)) throw PreconditionError("not a permutation");
  Permutation inv(perm.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

Permutation then(std::span<const std::uint32_t> first,
                 std::span<const std::uint32_t> second) {
  if (first.size() != second.size())
    throw PreconditionError("permutation size mismatch");
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

std::vector<std::vector<std::uint32_t>> cycles(
    std::span<const std::uint32_t> perm) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (auto x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t permutation_order(std::span<const std::uint32_t> perm) {
  std::uint64_t order = 1;
  for (const auto& c : cycles(perm)) order = std::lcm(order, c.size());
  return order;
}

}  // namespace dbfold
