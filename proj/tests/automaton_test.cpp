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

#include "dbfold/automaton.hpp"

#include <functional>
#include <random>

#include "dbfold/error.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace dbfold {
namespace {

using testing::brute_sync_level;
using testing::nonpermaut_automaton;

StatePartition labels(std::initializer_list<std::size_t> l) {
  return StatePartition(std::vector<std::size_t>(l));
}

// Random complete automaton; not necessarily synchronizing.
Automaton random_automaton(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<State> delta(n * m);
  for (auto& t : delta) t = static_cast<State>(rng() % m);
  return Automaton(n, m, std::move(delta));
}

TEST(PermutationTest, InverseAndComposition) {
  const Permutation rho{1, 2, 0};
  EXPECT_TRUE(is_permutation(rho));
  EXPECT_FALSE(is_permutation(Permutation{0, 0, 1}));
  EXPECT_EQ(inverse(rho), (Permutation{2, 0, 1}));
  EXPECT_EQ(then(rho, inverse(rho)), identity_permutation(3));
  // Right action: first rho, then the swap of 0 and 1.
  EXPECT_EQ(then(rho, Permutation{1, 0, 2}), (Permutation{0, 2, 1}));
  EXPECT_EQ(permutation_order(rho), 3u);
  EXPECT_EQ(cycles(Permutation{1, 0, 3, 4, 2}),
            (std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3, 4}}));
  EXPECT_TRUE(cycles(identity_permutation(4)).empty());
}

TEST(AutomatonTest, RejectsMalformedTables) {
  EXPECT_THROW(Automaton(2, 2, {0, 1, 2, 0}), ValidationError);
  EXPECT_THROW(Automaton(2, 2, {0, 1, 0}), ValidationError);
  EXPECT_THROW(Automaton(2, 0, {}), ValidationError);
}

TEST(DeBruijnTest, SmallGraphs) {
  const auto g21 = de_bruijn(2, 1);
  EXPECT_EQ(g21.state_count(), 2u);
  for (State q = 0; q < 2; ++q) {
    for (Letter x = 0; x < 2; ++x) EXPECT_EQ(g21.next(q, x), x);
  }
  const auto g32 = de_bruijn(3, 2);
  EXPECT_EQ(g32.state_count(), 9u);
  EXPECT_EQ(g32.table().size(), 27u);
  EXPECT_EQ(g32.next(word_rank(Word{0, 0}, 3), 1), word_rank(Word{0, 1}, 3));
  EXPECT_EQ(g32.next(0, 0), 0u);
}

TEST(DeBruijnTest, LevelEqualsWordLength) {
  for (auto [n, m] : {std::pair{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto g = de_bruijn(n, m);
    EXPECT_EQ(sync_level(g), std::optional<std::size_t>(m));
    EXPECT_TRUE(is_core(g));
  }
}

TEST(DeBruijnTest, CapIsEnforced) {
  EXPECT_THROW(de_bruijn(2, 30, 1024), CapExceeded);
}

TEST(FoldingTest, NonpermautClassesFormAFolding) {
  const auto g = de_bruijn(3, 2);
  // 00,21,10 -> 0; 01,11,20 -> 1; 02,12,22 -> 2, indexed by word rank.
  std::vector<std::size_t> cls(9);
  for (auto w : {Word{0, 0}, Word{2, 1}, Word{1, 0}}) cls[word_rank(w, 3)] = 0;
  for (auto w : {Word{0, 1}, Word{1, 1}, Word{2, 0}}) cls[word_rank(w, 3)] = 1;
  for (auto w : {Word{0, 2}, Word{1, 2}, Word{2, 2}}) cls[word_rank(w, 3)] = 2;
  StatePartition p(cls);
  EXPECT_TRUE(is_folding(g, p));
  EXPECT_TRUE(is_isomorphic(quotient(g, p), nonpermaut_automaton()));
}

TEST(FoldingTest, DiscreteAndSingleAlwaysFold) {
  const auto g = de_bruijn(2, 2);
  EXPECT_TRUE(is_folding(g, StatePartition::discrete(4)));
  EXPECT_TRUE(is_folding(g, StatePartition::single(4)));
  EXPECT_EQ(quotient(g, StatePartition::single(4)).state_count(), 1u);
  EXPECT_EQ(quotient(g, StatePartition::discrete(4)), g);
}

TEST(FoldingTest, RejectsNonFolding) {
  // {00,01 | 10 | 11}: reading 0 sends 00 -> 00 and 01 -> 10.
  const auto g = de_bruijn(2, 2);
  const auto p = labels({0, 0, 1, 2});
  EXPECT_FALSE(is_folding(g, p));
  EXPECT_THROW(quotient(g, p), PreconditionError);
  EXPECT_THROW(is_folding(g, StatePartition::discrete(3)), PreconditionError);
}

TEST(StatePartitionTest, NormalizesByFirstOccurrence) {
  const auto p = labels({5, 2, 5, 7});
  EXPECT_EQ(p.labels(), (std::vector<std::size_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.class_count(), 3u);
  EXPECT_EQ(p.classes(), (std::vector<std::vector<State>>{{0, 2}, {1}, {3}}));
}

TEST(SyncSequenceTest, DeBruijnDescendsThroughLowerGraphs) {
  const auto seq = sync_sequence(de_bruijn(3, 2));
  ASSERT_EQ(seq.terms.size(), 3u);
  EXPECT_TRUE(is_isomorphic(seq.terms[0].automaton, de_bruijn(3, 2)));
  EXPECT_TRUE(is_isomorphic(seq.terms[1].automaton, de_bruijn(3, 1)));
  EXPECT_EQ(seq.terms[2].automaton.state_count(), 1u);
  EXPECT_EQ(seq.terms[0].partition, StatePartition::discrete(9));
}

TEST(SyncSequenceTest, NonpermautCounts) {
  const auto seq = sync_sequence(nonpermaut_automaton());
  std::vector<std::size_t> counts;
  for (const auto& t : seq.terms) counts.push_back(t.automaton.state_count());
  EXPECT_EQ(counts, (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(sync_level(nonpermaut_automaton()), std::optional<std::size_t>(2));
}

TEST(SyncSequenceTest, SingleStateAndNonSynchronizing) {
  const auto one = Automaton(2, 1, {0, 0});
  EXPECT_EQ(sync_sequence(one).terms.size(), 1u);
  EXPECT_EQ(sync_level(one), std::optional<std::size_t>(0));
  const auto loops = Automaton(2, 2, {0, 0, 1, 1});
  EXPECT_FALSE(sync_level(loops).has_value());
  EXPECT_FALSE(is_strongly_synchronizing(loops));
}

TEST(SyncSequenceTest, MatchesWordOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 1 + rng() % 6;
    const auto a = random_automaton(n, m, rng);
    EXPECT_EQ(sync_level(a), brute_sync_level(a, m)) << "trial " << trial;
  }
}

// p and q share a class in term i iff every word of length i sends them to
// the same state.
TEST(SyncSequenceTest, TermsSeparateExactlyByWords) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 2 + rng() % 5;
    const auto a = random_automaton(n, m, rng);
    const auto seq = sync_sequence(a);
    for (std::size_t i = 0; i < seq.terms.size(); ++i) {
      const auto& part = seq.terms[i].partition;
      std::size_t count = 1;
      for (std::size_t j = 0; j < i; ++j) count *= n;
      for (State p = 0; p < m; ++p) {
        for (State q = p + 1; q < m; ++q) {
          bool together = true;
          for (std::size_t r = 0; r < count && together; ++r) {
            auto w = word_of_rank(r, n, i);
            together = a.run(p, w) == a.run(q, w);
          }
          EXPECT_EQ(part.class_of(p) == part.class_of(q), together);
        }
      }
      if (i > 0) {
        EXPECT_LT(part.class_count(), seq.terms[i - 1].partition.class_count());
      }
    }
    EXPECT_LE(seq.stabilization_index, m);
  }
}

TEST(SyncMapTest, ForcedStates) {
  const auto g = de_bruijn(3, 2);
  EXPECT_EQ(sync_map(g, Word{2, 1}), word_rank(Word{2, 1}, 3));
  EXPECT_EQ(sync_map(nonpermaut_automaton(), Word{0, 2}), 2u);
  EXPECT_EQ(sync_map(Automaton(2, 1, {0, 0}), Word{1, 0, 1}), 0u);
  EXPECT_THROW(sync_map(g, Word{1}), PreconditionError);
  EXPECT_THROW(sync_map(Automaton(2, 2, {0, 0, 1, 1}), Word{0}), PreconditionError);
}

TEST(CoreTest, DropsTransientStates) {
  // G(2,1) plus a state 2 that feeds into it.
  const auto a = Automaton(2, 3, {0, 1, 0, 1, 0, 1});
  const auto core = core_of(a);
  EXPECT_EQ(core.core, de_bruijn(2, 1));
  EXPECT_EQ(core.embedding, (std::vector<State>{0, 1}));
  EXPECT_FALSE(is_core(a));
  EXPECT_EQ(core_of(de_bruijn(2, 3)).core, de_bruijn(2, 3));
  EXPECT_EQ(core_of(Automaton(3, 1, {0, 0, 0})).core.state_count(), 1u);
  EXPECT_THROW(core_of(Automaton(2, 2, {0, 0, 1, 1})), PreconditionError);
}

TEST(FoldingFromSyncTest, NonpermautGivesListedClasses) {
  const auto p = folding_from_sync(nonpermaut_automaton());
  ASSERT_EQ(p.size(), 9u);
  auto same = [&](Word a, Word b) {
    return p.class_of(word_rank(a, 3)) == p.class_of(word_rank(b, 3));
  };
  EXPECT_TRUE(same({0, 0}, {2, 1}) && same({0, 0}, {1, 0}));
  EXPECT_TRUE(same({0, 1}, {1, 1}) && same({0, 1}, {2, 0}));
  EXPECT_TRUE(same({0, 2}, {1, 2}) && same({0, 2}, {2, 2}));
  EXPECT_EQ(p.class_count(), 3u);
}

TEST(FoldingFromSyncTest, DeBruijnIsDiscrete) {
  EXPECT_EQ(folding_from_sync(de_bruijn(2, 3)), StatePartition::discrete(8));
}

TEST(FoldingFromSyncTest, RoundTripsEveryFoldingOfG22) {
  const auto g = de_bruijn(2, 2);
  std::size_t foldings = 0;
  for (std::size_t code = 0; code < 256; ++code) {
    std::vector<std::size_t> l(4);
    for (std::size_t i = 0; i < 4; ++i) l[i] = (code >> (2 * i)) & 3;
    StatePartition p(l);
    if (p.labels() != l || !is_folding(g, p)) continue;
    ++foldings;
    const auto q = quotient(g, p);
    EXPECT_EQ(folding_from_sync(q, 2), p);
    EXPECT_TRUE(is_isomorphic(quotient(g, folding_from_sync(q, 2)), q));
  }
  EXPECT_EQ(foldings, 5u);
}

TEST(FoldingFromSyncTest, Preconditions) {
  EXPECT_THROW(folding_from_sync(Automaton(2, 3, {0, 1, 0, 1, 0, 1})), PreconditionError);
  EXPECT_THROW(folding_from_sync(de_bruijn(2, 2), 1), PreconditionError);
}

TEST(CanonicalFormTest, InvariantUnderRenumbering) {
  std::mt19937_64 rng(3);
  const auto a = nonpermaut_automaton();
  for (const Permutation& sigma : {Permutation{1, 2, 0}, Permutation{2, 0, 1}, Permutation{0, 2, 1}}) {
    std::vector<State> delta(a.table().size());
    for (State q = 0; q < 3; ++q) {
      for (Letter x = 0; x < 3; ++x) delta[sigma[q] * 3 + x] = sigma[a.next(q, x)];
    }
    EXPECT_EQ(canonical_form(Automaton(3, 3, delta)), canonical_form(a));
  }
  EXPECT_FALSE(is_isomorphic(de_bruijn(2, 2), de_bruijn(2, 1)));
}

TEST(CollapseEquivalenceTest, Examples) {
  EXPECT_TRUE(is_collapse_equivalent(nonpermaut_automaton(), nonpermaut_automaton()));
  EXPECT_TRUE(is_collapse_equivalent(de_bruijn(2, 2), de_bruijn(2, 1)));
  EXPECT_FALSE(is_collapse_equivalent(de_bruijn(2, 1), de_bruijn(2, 2)));
  EXPECT_TRUE(is_collapse_equivalent(de_bruijn(3, 2), Automaton(3, 1, {0, 0, 0})));
}

TEST(CollapseEquivalenceTest, CapIsReported) {
  EXPECT_THROW(is_collapse_equivalent(de_bruijn(2, 4), Automaton(2, 2, {0, 0, 1, 1}), 3),
               CapExceeded);
}

// Quotients of a synchronizing automaton synchronize no later.
TEST(FoldingTest, QuotientsKeepSynchronizing) {
  std::mt19937_64 rng(5);
  const auto g = de_bruijn(2, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> l(8);
    for (auto& v : l) v = rng() % 4;
    StatePartition p(l);
    if (!is_folding(g, p)) continue;
    const auto q = quotient(g, p);
    ASSERT_TRUE(sync_level(q).has_value());
    EXPECT_LE(*sync_level(q), 3u);
    EXPECT_TRUE(is_core(q));
  }
}

// If term j-1 of the sequence is G(n,1), the letter images partition states.
TEST(FoldingTest, LettersPartitionStatesBelowG1) {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    const auto g = de_bruijn(n, m);
    const std::size_t size = g.state_count();
    std::size_t checked = 0;
    std::vector<std::size_t> l(size, 0);
    // Restricted growth strings of length `size`.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max) {
      if (i == size) {
        StatePartition p(l);
        if (!is_folding(g, p)) return;
        const auto a = quotient(g, p);
        const auto seq = sync_sequence(a);
        const auto j = seq.stabilization_index;
        if (j == 0 || !is_isomorphic(seq.terms[j - 1].automaton, de_bruijn(n, 1))) return;
        ++checked;
        std::vector<int> owner(a.state_count(), -1);
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
          for (State q = 0; q < a.state_count(); ++q) {
            auto& o = owner[a.next(q, x)];
            EXPECT_TRUE(o == -1 || o == static_cast<int>(x));
            o = static_cast<int>(x);
          }
        }
        for (auto o : owner) EXPECT_NE(o, -1);
        return;
      }
      for (std::size_t c = 0; c <= max + 1 && c < size; ++c) {
        l[i] = c;
        rec(i + 1, std::max(max, c));
      }
    };
    l[0] = 0;
    rec(1, 0);
    EXPECT_GT(checked, 0u);
  }
}

}  // namespace
}  // namespace dbfold
