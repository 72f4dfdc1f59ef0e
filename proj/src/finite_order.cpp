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

#include "dbfold/finite_order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "dbfold/error.hpp"

namespace dbfold {

namespace {

void require_letters(const Transducer& h, std::span<const Letter> w) {
  for (auto x : w) {
    if (x >= h.alphabet_size()) throw PreconditionError("letter out of range");
  }
}

}  // namespace

StateWord dual_read(const Transducer& h, std::span<const Letter> gamma,
                    std::span<const State> p) {
  if (gamma.empty()) throw PreconditionError("dual_read needs a nonempty word");
  require_letters(h, gamma);
  Word current(gamma.begin(), gamma.end());
  StateWord out;
  out.reserve(p.size());
  for (auto s : p) {
    if (s >= h.state_count()) throw PreconditionError("state out of range");
    out.push_back(h.automaton().run(s, current));
    current = h.translate(s, current);
  }
  return out;
}

StateWord w_word(const Transducer& h, std::span<const Letter> gamma,
                 std::size_t max_steps) {
  require_letters(h, gamma);
  auto level = sync_level(h.automaton());
  if (!level) throw PreconditionError("transducer is not strongly synchronizing");
  if (gamma.size() < *level)
    throw PreconditionError("word shorter than the synchronizing level");

  const auto m = h.state_count();
  std::set<Word> reachable{Word(gamma.begin(), gamma.end())};
  std::map<std::set<Word>, std::size_t> seen;
  StateWord forced;
  while (!seen.contains(reachable)) {
    if (forced.size() >= max_steps) throw CapExceeded("w_word did not cycle");
    seen.emplace(reachable, forced.size());
    const State s = h.automaton().run(0, *reachable.begin());
    std::set<Word> next;
    for (const auto& w : reachable) {
      for (State p = 0; p < m; ++p) {
        if (h.automaton().run(p, w) != s)
          throw InvariantViolation("forced state depends on earlier choices");
        next.insert(h.translate(p, w));
      }
    }
    forced.push_back(s);
    reachable = std::move(next);
  }

  // forced[i] for i >= start repeats with period `cycle`.
  const auto start = seen.at(reachable);
  const auto cycle = forced.size() - start;
  auto at = [&](std::size_t i) {
    return i < forced.size() ? forced[i] : forced[start + (i - start) % cycle];
  };
  for (std::size_t period = 1; period <= cycle; ++period) {
    bool ok = true;
    for (std::size_t i = 0; i < start + cycle && ok; ++i) ok = at(i) == at(i + period);
    if (ok) {
      StateWord w;
      for (std::size_t i = 0; i < period; ++i) w.push_back(at(i));
      return w;
    }
  }
  throw InvariantViolation("forced-state sequence is not purely periodic");
}

std::size_t SubgroupClosure::index_of(const Transducer& t) const {
  const auto key = canonical_key(normalize(t));
  auto it = std::find(keys.begin(), keys.end(), key);
  return static_cast<std::size_t>(it - keys.begin());
}

SubgroupClosure subgroup_closure(const std::vector<Transducer>& generators,
                                 std::size_t cap) {
  if (generators.empty()) throw PreconditionError("no generators given");
  SubgroupClosure g;
  g.alphabet_size = generators.front().alphabet_size();
  std::vector<Transducer> steps;
  for (const auto& t : generators) {
    if (t.alphabet_size() != g.alphabet_size)
      throw PreconditionError("generators use different alphabets");
    if (!is_in_hn(t)) throw PreconditionError("generator is not an element of H_n");
    g.generators.push_back(normalize(t));
    steps.push_back(g.generators.back());
    steps.push_back(normalize(invert(g.generators.back())));
  }

  std::set<CanonicalKey> known;
  std::deque<std::size_t> queue;
  auto add = [&](Transducer t) {
    auto key = canonical_key(t);
    if (!known.insert(key).second) return;
    if (g.elements.size() >= cap)
      throw CapExceeded("subgroup has more than " + std::to_string(cap) + " elements");
    g.elements.push_back(std::move(t));
    g.keys.push_back(std::move(key));
    queue.push_back(g.elements.size() - 1);
  };
  add(identity_transducer(g.alphabet_size));
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (const auto& s : steps) add(product_min(g.elements[i], s));
  }
  for (const auto& e : g.elements)
    g.max_sync_level = std::max(g.max_sync_level, *sync_level(e.automaton()));
  return g;
}

SubgroupAutomaton subgroup_automaton(const SubgroupClosure& g) {
  const auto n = g.alphabet_size;
  const auto k = g.max_sync_level;
  const auto count = checked_power(n, k, kDefaultStateCap);

  std::vector<std::size_t> labels(count);
  {
    std::map<std::vector<StateWord>, std::size_t> signature;
    for (std::size_t r = 0; r < count; ++r) {
      const auto gamma = word_of_rank(r, n, k);
      std::vector<StateWord> key;
      for (const auto& h : g.elements) key.push_back(w_word(h, gamma));
      labels[r] = signature.try_emplace(std::move(key), signature.size()).first->second;
    }
  }
  StatePartition classes(labels);
  const auto states = classes.class_count();

  auto successor = [&](std::size_t r, Letter x) -> std::size_t {
    return k == 0 ? 0 : (r * n + x) % count;
  };

  std::vector<State> delta(states * n, static_cast<State>(states));
  for (std::size_t r = 0; r < count; ++r) {
    const auto c = classes.class_of(r);
    for (Letter x = 0; x < n; ++x) {
      const auto target = static_cast<State>(classes.class_of(successor(r, x)));
      auto& slot = delta[c * n + x];
      if (slot != states && slot != target)
        throw InvariantViolation("A(G) transition is not well defined");
      slot = target;
    }
  }
  SubgroupAutomaton result{Automaton(n, states, std::move(delta)), classes, {}};

  for (const auto& h : g.elements) {
    DigraphAutomorphism phi{Permutation(states, static_cast<State>(states)),
                            std::vector<Letter>(states * n, static_cast<Letter>(n))};
    for (std::size_t r = 0; r < count; ++r) {
      const auto gamma = word_of_rank(r, n, k);
      const auto c = classes.class_of(r);
      for (State p = 0; p < h.state_count(); ++p) {
        const auto image = static_cast<State>(
            classes.class_of(word_rank(h.translate(p, gamma), n)));
        if (phi.vertex_perm[c] != states && phi.vertex_perm[c] != image)
          throw InvariantViolation("vertex map of phi_H is not well defined");
        phi.vertex_perm[c] = image;
      }
      const auto forced = h.automaton().run(0, gamma);
      for (Letter x = 0; x < n; ++x) {
        const auto y = h.output(forced, x);
        auto& slot = phi.edge_label[c * n + x];
        if (slot != n && slot != y)
          throw InvariantViolation("edge map of phi_H is not well defined");
        slot = y;
      }
    }
    if (!is_valid_automorphism(result.automaton, phi))
      throw InvariantViolation("phi_H is not a digraph automorphism");
    result.embedding.push_back(std::move(phi));
  }
  return result;
}

}  // namespace dbfold
