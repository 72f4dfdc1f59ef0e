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

#ifndef DBFOLD_COUNTING_HPP_
#define DBFOLD_COUNTING_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dbfold/automaton.hpp"

namespace dbfold {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t kSetPartitionCap = 12;
inline constexpr std::size_t kFormulaCap = 12;
inline constexpr std::size_t kExhaustiveStateCap = 12;
inline constexpr std::size_t kLatticeCap = 1'000'000;

BigCount bell(std::size_t k);

// Restricted growth strings of length k in lexicographic order.
std::vector<StatePartition> set_partitions(std::size_t k);

// Signed; sums over all set partitions of {1..t}.
BigCount moebius_R(std::size_t s, std::size_t t);

BigCount count_foldings_g_n_2(std::size_t n);

// Least folding containing every given pair.
StatePartition congruence_closure(const Automaton& a,
                                  const std::vector<std::pair<State, State>>& pairs);

enum class EnumerationMethod { kExhaustive, kLattice };

// Sorted by label sequence.
std::vector<StatePartition> enumerate_foldings(const Automaton& a,
                                               EnumerationMethod method);

}  // namespace dbfold

#endif  // DBFOLD_COUNTING_HPP_
