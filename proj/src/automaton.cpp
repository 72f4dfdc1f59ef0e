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

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "dbfold/error.hpp"

namespace dbfold {

Automaton::Automaton(std::size_t alphabet_size, std::size_t state_count,
                     std::vector<State> delta)
    : alphabet_size_(alphabet_size),
      state_count_(state_count),
      delta_(std::move(delta)) {
  if (alphabet_size_ < 2) throw ValidationError("alphabet size must be >= 2");
  if (state_count_ < 1) throw ValidationError("automaton needs a state");
  if (delta_.size() != alphabet_size_ * state_count_)
    throw ValidationError("transition table has wrong size");
  for (auto t : delta_) {
    if (t >= state_count_)
      throw ValidationError("transition target " + std::to_string(t) +
                            " out of range");
  }
}

Automaton Automaton::from_rows(const std::vector<std::vector<State>>& rows) {
  if (rows.empty()) throw ValidationError("automaton needs a state");
  std::vector<State> delta;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size())
      throw ValidationError("ragged transition rows");
    delta.insert(delta.end(), r.begin(), r.end());
  }
  return Automaton(rows.front().size(), rows.size(), std::move(delta));
}

State Automaton::run(State q, std::span<const Letter> w) const {
  for (auto x : w) q = next(q, x);
  return q;
}

StatePartition::StatePartition(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::size_t> renumber;
  class_of_.reserve(labels.size());
  for (auto l : labels) {
    auto [it, inserted] = renumber.try_emplace(l, renumber.size());
    class_of_.push_back(it->second);
  }
  class_count_ = renumber.size();
}

StatePartition StatePartition::discrete(std::size_t size) {
  std::vector<std::size_t> labels(size);
  for (std::size_t i = 0; i < size; ++i) labels[i] = i;
  return StatePartition(labels);
}

StatePartition StatePartition::single(std::size_t size) {
  return StatePartition(std::vector<std::size_t>(size, 0));
}

std::vector<std::vector<State>> StatePartition::classes() const {
  std::vector<std::vector<State>> out(class_count_);
  for (std::size_t q = 0; q < class_of_.size(); ++q)
    out[class_of_[q]].push_back(static_cast<State>(q));
  return out;
}

std::size_t word_rank(std::span<const Letter> w, std::size_t n) {
  std::size_t r = 0;
  for (auto x : w) r = r * n + x;
  return r;
}

Word word_of_rank(std::size_t rank, std::size_t n, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Letter>(rank % n);
    rank /= n;
  }
  return w;
}

std::size_t checked_power(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (p > cap / n) throw CapExceeded("n^k exceeds size cap");
    p *= n;
  }
  if (p > cap) throw CapExceeded("n^k exceeds size cap");
  return p;
}

Automaton de_bruijn(std::size_t n, std::size_t m, std::size_t cap) {
  if (n < 2) throw PreconditionError("de Bruijn graph needs n >= 2");
  if (m < 1) throw PreconditionError("de Bruijn graph needs m >= 1");
  const std::size_t count = checked_power(n, m, cap);
  const std::size_t suffix_mod = count / n;
  std::vector<State> delta(count * n);
  for (std::size_t q = 0; q < count; ++q) {
    for (std::size_t x = 0; x < n; ++x)
      delta[q * n + x] = static_cast<State>((q % suffix_mod) * n + x);
  }
  return Automaton(n, count, std::move(delta));
}

namespace {

void require_partition_of(const Automaton& a, const StatePartition& p) {
  if (p.size() != a.state_count())
    throw PreconditionError("partition size does not match state count");
}

}  // namespace

bool is_folding(const Automaton& a, const StatePartition& p) {
  require_partition_of(a, p);
  // Compare each state with the first member of its class.
  std::vector<State> representative(p.class_count(),
                                    std::numeric_limits<State>::max());
  for (State q = 0; q < a.state_count(); ++q) {
    auto& rep = representative[p.class_of(q)];
    if (rep == std::numeric_limits<State>::max()) {
      rep = q;
      continue;
    }
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      if (p.class_of(a.next(q, x)) != p.class_of(a.next(rep, x))) return false;
    }
  }
  return true;
}

Automaton quotient(const Automaton& a, const StatePartition& p) {
  if (!is_folding(a, p)) throw PreconditionError("partition is not a folding");
  const auto n = a.alphabet_size();
  std::vector<State> delta(p.class_count() * n);
  for (State q = 0; q < a.state_count(); ++q) {
    for (Letter x = 0; x < n; ++x)
      delta[p.class_of(q) * n + x] = static_cast<State>(p.class_of(a.next(q, x)));
  }
  return Automaton(n, p.class_count(), std::move(delta));
}

StatePartition row_merge(const Automaton& a, const StatePartition& current) {
  require_partition_of(a, current);
  std::map<std::vector<std::size_t>, std::size_t> keys;
  std::vector<std::size_t> labels(a.state_count());
  std::vector<std::size_t> key(a.alphabet_size());
  for (State q = 0; q < a.state_count(); ++q) {
    for (Letter x = 0; x < a.alphabet_size(); ++x)
      key[x] = current.class_of(a.next(q, x));
    labels[q] = keys.try_emplace(key, keys.size()).first->second;
  }
  return StatePartition(labels);
}

SyncSequence sync_sequence(const Automaton& a) {
  SyncSequence seq;
  auto partition = StatePartition::discrete(a.state_count());
  seq.terms.push_back({a, partition});
  for (;;) {
    auto next = row_merge(a, partition);
    if (next.class_count() == partition.class_count()) break;
    partition = std::move(next);
    seq.terms.push_back({quotient(a, partition), partition});
  }
  seq.stabilization_index = seq.terms.size() - 1;
  return seq;
}

std::optional<std::size_t> sync_level(const Automaton& a) {
  auto seq = sync_sequence(a);
  if (seq.terms.back().partition.class_count() != 1) return std::nullopt;
  return seq.stabilization_index;
}

bool is_strongly_synchronizing(const Automaton& a) {
  return sync_level(a).has_value();
}

State sync_map(const Automaton& a, std::span<const Letter> w) {
  auto level = sync_level(a);
  if (!level) throw PreconditionError("automaton is not strongly synchronizing");
  if (w.size() < *level)
    throw PreconditionError("word shorter than the synchronizing level");
  for (auto x : w) {
    if (x >= a.alphabet_size()) throw PreconditionError("letter out of range");
  }
  const State forced = a.run(0, w);
  for (State q = 1; q < a.state_count(); ++q) {
    if (a.run(q, w) != forced)
      throw InvariantViolation("word does not force a unique state");
  }
  return forced;
}

CoreResult core_of(const Automaton& a) {
  auto level = sync_level(a);
  if (!level) throw PreconditionError("automaton is not strongly synchronizing");
  std::vector<bool> in(a.state_count(), true);
  for (std::size_t step = 0; step < *level; ++step) {
    std::vector<bool> image(a.state_count(), false);
    for (State q = 0; q < a.state_count(); ++q) {
      if (!in[q]) continue;
      for (Letter x = 0; x < a.alphabet_size(); ++x) image[a.next(q, x)] = true;
    }
    in = std::move(image);
  }
  std::vector<State> embedding;
  std::vector<State> index(a.state_count(), 0);
  for (State q = 0; q < a.state_count(); ++q) {
    if (in[q]) {
      index[q] = static_cast<State>(embedding.size());
      embedding.push_back(q);
    }
  }
  const auto n = a.alphabet_size();
  std::vector<State> delta(embedding.size() * n);
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    for (Letter x = 0; x < n; ++x) delta[i * n + x] = index[a.next(embedding[i], x)];
  }
  return {Automaton(n, embedding.size(), std::move(delta)), std::move(embedding)};
}

bool is_core(const Automaton& a) {
  if (!is_strongly_synchronizing(a)) return false;
  return core_of(a).core.state_count() == a.state_count();
}

StatePartition folding_from_sync(const Automaton& a,
                                 std::optional<std::size_t> level) {
  auto min_level = sync_level(a);
  if (!min_level)
    throw PreconditionError("automaton is not strongly synchronizing");
  const std::size_t k = level.value_or(std::max<std::size_t>(*min_level, 1));
  if (k < *min_level || k < 1)
    throw PreconditionError("level below the synchronizing level");
  if (!is_core(a)) throw PreconditionError("automaton is not core");
  const auto n = a.alphabet_size();
  const auto count = checked_power(n, k, kDefaultStateCap);
  std::vector<std::size_t> labels(count);
  for (std::size_t r = 0; r < count; ++r) {
    auto w = word_of_rank(r, n, k);
    labels[r] = a.run(0, w);
  }
  return StatePartition(labels);
}

namespace detail {

namespace {

struct CanonicalSearch {
  std::size_t n;
  std::size_t m;
  std::span<const State> delta;
  std::span<const Letter> labels;
  std::vector<std::uint32_t> best;
  std::size_t leaves = 0;
  static constexpr std::size_t kLeafCap = 2'000'000;

  std::vector<std::uint32_t> encode(const std::vector<State>& order,
                                    const std::vector<State>& index) const {
    std::vector<std::uint32_t> out;
    out.reserve(2 + m * n * (labels.empty() ? 1 : 2));
    out.push_back(static_cast<std::uint32_t>(n));
    out.push_back(static_cast<std::uint32_t>(m));
    for (auto q : order) {
      for (std::size_t x = 0; x < n; ++x) out.push_back(index[delta[q * n + x]]);
      if (!labels.empty()) {
        for (std::size_t x = 0; x < n; ++x) out.push_back(labels[q * n + x]);
      }
    }
    return out;
  }

  void extend(std::vector<State> order, std::vector<State> index) {
    if (order.size() == m) {
      if (++leaves > kLeafCap)
        throw CapExceeded("canonical form search exceeded its cap");
      auto code = encode(order, index);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    const auto unset = std::numeric_limits<State>::max();
    for (State root = 0; root < m; ++root) {
      if (index[root] != unset) continue;
      auto o = order;
      auto idx = index;
      idx[root] = static_cast<State>(o.size());
      o.push_back(root);
      for (std::size_t head = o.size() - 1; head < o.size(); ++head) {
        for (std::size_t x = 0; x < n; ++x) {
          auto t = delta[o[head] * n + x];
          if (idx[t] == unset) {
            idx[t] = static_cast<State>(o.size());
            o.push_back(t);
          }
        }
      }
      extend(std::move(o), std::move(idx));
    }
  }
};

}  // namespace

std::vector<std::uint32_t> canonical_encoding(std::size_t n, std::size_t m,
                                              std::span<const State> delta,
                                              std::span<const Letter> labels) {
  CanonicalSearch search{n, m, delta, labels, {}};
  search.extend({}, std::vector<State>(m, std::numeric_limits<State>::max()));
  return std::move(search.best);
}

}  // namespace detail

std::vector<std::uint32_t> canonical_form(const Automaton& a) {
  return detail::canonical_encoding(a.alphabet_size(), a.state_count(),
                                    a.table(), {});
}

bool is_isomorphic(const Automaton& a, const Automaton& b) {
  if (a.alphabet_size() != b.alphabet_size() ||
      a.state_count() != b.state_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_collapse_equivalent(const Automaton& a, const Automaton& b,
                            std::size_t cap) {
  if (a.alphabet_size() != b.alphabet_size()) return false;
  if (b.state_count() > a.state_count()) return false;
  const auto target = canonical_form(b);
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<Automaton> queue;
  seen.insert(canonical_form(a));
  queue.push_back(a);
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    if (current.state_count() == b.state_count()) {
      if (canonical_form(current) == target) return true;
      continue;
    }
    const auto m = current.state_count();
    for (State p = 0; p < m; ++p) {
      for (State q = p + 1; q < m; ++q) {
        auto rp = current.row(p);
        if (!std::equal(rp.begin(), rp.end(), current.row(q).begin())) continue;
        std::vector<std::size_t> labels(m);
        for (State s = 0; s < m; ++s) labels[s] = (s == q) ? p : s;
        auto merged = quotient(current, StatePartition(labels));
        if (seen.insert(canonical_form(merged)).second) {
          if (seen.size() > cap)
            throw CapExceeded("collapse-equivalence search exceeded its cap");
          queue.push_back(std::move(merged));
        }
      }
    }
  }
  return false;
}

}  // namespace dbfold
