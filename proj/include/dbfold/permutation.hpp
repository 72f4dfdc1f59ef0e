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

#ifndef DBFOLD_PERMUTATION_HPP_
#define DBFOLD_PERMUTATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace dbfold {

using Letter = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Letter>;

// A permutation of {0, ..., size-1}, stored as its image table.
using Permutation = std::vector<std::uint32_t>;

bool is_permutation(std::span<const std::uint32_t> table);
Permutation identity_permutation(std::size_t size);
Permutation inverse(std::span<const std::uint32_t> perm);

// Right-action composition: x -> second(first(x)).
Permutation then(std::span<const std::uint32_t> first,
                 std::span<const std::uint32_t> second);

// Disjoint cycles of length >= 2, each starting at its least element,
// ordered by that element.
std::vector<std::vector<std::uint32_t>> cycles(
    std::span<const std::uint32_t> perm);

std::uint64_t permutation_order(std::span<const std::uint32_t> perm);

}  // namespace dbfold

#endif  // DBFOLD_PERMUTATION_HPP_
