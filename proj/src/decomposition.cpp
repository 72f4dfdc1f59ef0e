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

#include "dbfold/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "dbfold/error.hpp"

namespace dbfold {

namespace {

using CountMatrix = std::vector<std::vector<std::uint32_t>>;
using Encoding = std::vector<std::uint32_t>;

inline constexpr std::size_t kCanonicalLeafCap = 200'000;

CountMatrix count_matrix(const Automaton& a) {
  const auto m = a.state_count();
  CountMatrix c(m, std::vector<std::uint32_t>(m, 0));
  for (State q = 0; q < m; ++q) {
    for (Letter x = 0; x < a.alphabet_size(); ++x) ++c[q][a.next(q, x)];
  }
  return c;
}

std::vector<std::size_t> refine(const CountMatrix& c, std::vector<std::size_t> colour) {
  const auto m = c.size();
  std::size_t distinct = std::set<std::size_t>(colour.begin(), colour.end()).size();
  for (;;) {
    using Profile = std::vector<std::pair<std::size_t, std::uint32_t>>;
    std::vector<std::tuple<std::size_t, Profile, Profile>> sig(m);
    for (std::size_t v = 0; v < m; ++v) {
      Profile out, in;
      for (std::size_t w = 0; w < m; ++w) {
        if (c[v][w]) out.emplace_back(colour[w], c[v][w]);
        if (c[w][v]) in.emplace_back(colour[w], c[w][v]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sig[v] = {colour[v], std::move(out), std::move(in)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < m; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == distinct) return colour;
    distinct = sorted.size();
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const CountMatrix& c) : c_(c) {}

  Encoding run() {
    search(std::vector<std::size_t>(c_.size(), 0));
    return best_;
  }

 private:
  void search(std::vector<std::size_t> colour) {
    colour = refine(c_, std::move(colour));
    const auto m = c_.size();
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < m; ++v) cells[colour[v]].push_back(v);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& cell) { return cell.second.size() > 1; });
    if (target == cells.end()) {
      if (++leaves_ > kCanonicalLeafCap)
        throw CapExceeded("digraph canonical labeling exceeds the leaf cap");
      std::vector<std::size_t> order(m);
      for (std::size_t v = 0; v < m; ++v) order[colour[v]] = v;
      Encoding e{static_cast<std::uint32_t>(m)};
      for (auto v : order) {
        for (auto w : order) e.push_back(c_[v][w]);
      }
      if (best_.empty() || e < best_) best_ = std::move(e);
      return;
    }
    const auto cell = target->first;
    for (auto v : target->second) {
      std::vector<std::size_t> next(m);
      for (std::size_t u = 0; u < m; ++u)
        next[u] = 2 * colour[u] + (colour[u] == cell && u != v ? 1 : 0);
      search(std::move(next));
    }
  }

  const CountMatrix& c_;
  Encoding best_;
  std::size_t leaves_ = 0;
};

Encoding canonical(const CountMatrix& c) { return CanonicalSearch(c).run(); }

CountMatrix merge_vertices(const CountMatrix& c, std::size_t keep, std::size_t drop) {
  const auto m = c.size();
  CountMatrix out;
  out.reserve(m - 1);
  for (std::size_t v = 0; v < m; ++v) {
    if (v == drop) continue;
    std::vector<std::uint32_t> row;
    row.reserve(m - 1);
    for (std::size_t w = 0; w < m; ++w) {
      if (w == drop) continue;
      auto k = c[v][w];
      if (w == keep) k += c[v][drop];
      row.push_back(k);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Merges amalgamable pairs of vertices sharing a class of `target` until
// none remain; nullopt if some class is left with several vertices.
std::optional<CountMatrix> merge_along(CountMatrix c, std::vector<std::size_t> target) {
  for (;;) {
    const auto m = c.size();
    bool merged = false;
    bool pending = false;
    for (std::size_t v = 0; v < m && !merged; ++v) {
      for (std::size_t w = v + 1; w < m && !merged; ++w) {
        if (target[v] != target[w]) continue;
        pending = true;
        if (c[v] != c[w]) continue;
        c = merge_vertices(c, v, w);
        target.erase(target.begin() + static_cast<std::ptrdiff_t>(w));
        merged = true;
      }
    }
    if (!merged) return pending ? std::nullopt : std::optional(std::move(c));
  }
}

// Maps each state of `t` to the state of `reduced` forced by the same words,
// using the pairs reachable by a common word longer than both levels.
std::vector<State> reduced_state_map(const Transducer& t, const Transducer& reduced) {
  const auto n = t.alphabet_size();
  const auto level = std::max(*sync_level(t.automaton()), *sync_level(reduced.automaton()));
  const auto width = reduced.state_count();
  std::vector<bool> pairs(t.state_count() * width, true);
  for (std::size_t step = 0; step < level; ++step) {
    std::vector<bool> next(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!pairs[i]) continue;
      const auto p = static_cast<State>(i / width);
      const auto r = static_cast<State>(i % width);
      for (Letter x = 0; x < n; ++x) next[t.next(p, x) * width + reduced.next(r, x)] = true;
    }
    pairs = std::move(next);
  }
  const auto unset = static_cast<State>(width);
  std::vector<State> map(t.state_count(), unset);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!pairs[i]) continue;
    auto& slot = map[i / width];
    if (slot != unset)
      throw InvariantViolation("reduced machine does not factor through the input states");
    slot = static_cast<State>(i % width);
  }
  if (std::ranges::find(map, unset) != map.end())
    throw InvariantViolation("input is not core");
  return map;
}

void check_step_input(const Transducer& t) {
  if (t.state_count() < 2) throw PreconditionError("transducer has a single state");
}

}  // namespace

std::pair<State, State> find_collapsible_pair(const Transducer& t) {
  check_step_input(t);
  const auto& a = t.automaton();
  for (State p = 0; p < t.state_count(); ++p) {
    for (State q = p + 1; q < t.state_count(); ++q) {
      if (std::ranges::equal(a.row(p), a.row(q))) return {p, q};
    }
  }
  throw PreconditionError("no two states share a transition row");
}

Permutation alignment_permutation(const Transducer& t, State p, State q) {
  const auto n = t.alphabet_size();
  if (!is_permutation(t.output_row(p)) || !is_permutation(t.output_row(q)))
    throw PreconditionError("output rows are not permutations");
  Permutation alpha(n);
  for (Letter x = 0; x < n; ++x) alpha[t.output(q, x)] = t.output(p, x);
  if (alpha == identity_permutation(n))
    throw PreconditionError("states have equal output rows");
  return alpha;
}

FactorChoice find_factor(const Transducer& t, State p, State q) {
  const auto n = t.alphabet_size();
  const auto alpha = alignment_permutation(t, p, q);
  const auto alpha_cycles = cycles(alpha);
  const auto seq = sync_sequence(invert(t).automaton());
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    const auto& [b, partition] = seq.terms[i];
    if (partition.class_of(p) == partition.class_of(q)) break;
    const auto vertex = static_cast<State>(partition.class_of(q));
    const bool parallel = std::ranges::all_of(alpha_cycles, [&](const auto& c) {
      return std::ranges::all_of(c, [&](Letter x) {
        return b.next(vertex, x) == b.next(vertex, c.front());
      });
    });
    if (!parallel) continue;
    auto tau = identity_automorphism(b);
    for (Letter x = 0; x < n; ++x) tau.edge_label[vertex * n + x] = alpha[x];
    auto machine = transducer_from_automorphism(b, tau);
    return {i, b, std::move(tau), std::move(machine)};
  }
  throw InvariantViolation("no synchronizing-sequence term admits the factor");
}

DecompositionStep decompose_step(const Transducer& t, bool split_involutions) {
  check_step_input(t);
  auto [p, q] = find_collapsible_pair(t);
  auto choice = find_factor(t, p, q);
  std::vector<Transducer> involutions;
  Transducer reduced = t;
  if (split_involutions) {
    for (const auto& tau : involution_factors(choice.b_i, choice.tau)) {
      auto h = transducer_from_automorphism(choice.b_i, tau);
      reduced = weak_minimize(core_of(product_raw(reduced, h)));
      involutions.push_back(weak_minimize(h));
    }
  } else {
    reduced = weak_minimize(core_of(product_raw(t, choice.machine)));
  }
  if (reduced.state_count() >= t.state_count())
    throw InvariantViolation("decomposition step did not reduce the state count");
  auto map = reduced_state_map(t, reduced);
  return {p,
          q,
          alignment_permutation(t, p, q),
          choice.level_i,
          std::move(choice.b_i),
          std::move(choice.tau),
          weak_minimize(choice.machine),
          std::move(involutions),
          std::move(reduced),
          std::move(map)};
}

namespace {

Factorization run_decomposition(const Transducer& t, bool split) {
  if (!is_in_hn(t)) throw PreconditionError("transducer is not an element of H_n");
  Factorization f{t, normalize(t), {}, {}};
  std::vector<Transducer> discovered;
  while (f.remainder.state_count() > 1) {
    auto step = decompose_step(f.remainder, split);
    if (split) {
      discovered.insert(discovered.end(), step.involutions.begin(), step.involutions.end());
    } else {
      discovered.push_back(step.factor);
    }
    f.remainder = step.reduced;
    f.steps.push_back(std::move(step));
  }
  for (auto it = discovered.rbegin(); it != discovered.rend(); ++it)
    f.inverse_factors.push_back(normalize(invert(*it)));
  return f;
}

}  // namespace

Factorization decompose(const Transducer& t) { return run_decomposition(t, false); }

Factorization decompose_involutions(const Transducer& t) {
  return run_decomposition(t, true);
}

bool verify(const Factorization& f) {
  if (f.remainder.state_count() != 1) return false;
  auto product = f.remainder;
  for (const auto& h : f.inverse_factors) {
    if (!order(h)) return false;
    product = product_min(product, h);
  }
  const auto base = normalize(f.original);
  if (canonical_key(product) != canonical_key(base)) return false;

  // to_input[q]: the state of the current step's input that base state q
  // has been merged into.
  std::vector<State> to_input(base.state_count());
  for (State q = 0; q < base.state_count(); ++q) to_input[q] = q;
  const Transducer* input = &base;
  for (const auto& step : f.steps) {
    if (step.reduced_state.size() != input->state_count()) return false;
    const auto seq = sync_sequence(invert(*input).automaton());
    if (step.level_i >= seq.terms.size()) return false;
    const auto& [b, partition] = seq.terms[step.level_i];
    if (b != step.b_i) return false;
    std::vector<std::size_t> labels(base.state_count());
    for (State q = 0; q < base.state_count(); ++q) labels[q] = partition.class_of(to_input[q]);
    if (!is_amalgamation_along(step.b_i, base.automaton(), StatePartition(labels))) return false;
    for (auto& s : to_input) s = step.reduced_state[s];
    input = &step.reduced;
  }
  return input->state_count() == 1;
}

std::vector<std::uint32_t> digraph_canonical_form(const Automaton& a) {
  return canonical(count_matrix(a));
}

bool is_amalgamation(const Automaton& gb, const Automaton& ga, std::size_t cap) {
  if (gb.state_count() > ga.state_count()) return false;
  const auto goal = digraph_canonical_form(gb);
  std::set<Encoding> seen;
  std::deque<CountMatrix> queue;
  auto start = count_matrix(ga);
  seen.insert(canonical(start));
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    auto c = std::move(queue.front());
    queue.pop_front();
    const auto m = c.size();
    if (m == gb.state_count()) {
      if (canonical(c) == goal) return true;
      continue;
    }
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = v + 1; w < m; ++w) {
        if (c[v] != c[w]) continue;
        auto merged = merge_vertices(c, v, w);
        if (!seen.insert(canonical(merged)).second) continue;
        if (seen.size() > cap) throw CapExceeded("amalgamation search exceeds cap");
        queue.push_back(std::move(merged));
      }
    }
  }
  return false;
}

bool is_amalgamation_along(const Automaton& gb, const Automaton& ga,
                           const StatePartition& p) {
  if (p.size() != ga.state_count()) throw PreconditionError("partition size mismatch");
  const auto merged = merge_along(count_matrix(ga), p.labels());
  return merged && canonical(*merged) == digraph_canonical_form(gb);
}

}  // namespace dbfold
