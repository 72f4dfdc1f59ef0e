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

#include "dbfold/transducer.hpp"

#include <map>
#include <string>

#include "dbfold/error.hpp"

namespace dbfold {

Transducer::Transducer(Automaton base, std::vector<Letter> output)
    : base_(std::move(base)), output_(std::move(output)) {
  if (output_.size() != base_.table().size())
    throw ValidationError("output table has wrong size");
  for (auto y : output_) {
    if (y >= base_.alphabet_size())
      throw ValidationError("output letter " + std::to_string(y) +
                            " out of range");
  }
}

Word Transducer::translate(State q, std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size());
  for (auto x : w) {
    out.push_back(output(q, x));
    q = next(q, x);
  }
  return out;
}

Transducer identity_transducer(std::size_t n) {
  return single_state(identity_permutation(n));
}

Transducer shift_transducer(std::size_t n) {
  std::vector<State> delta(n * n);
  std::vector<Letter> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      delta[i * n + x] = static_cast<State>(x);
      out[i * n + x] = static_cast<Letter>(i);
    }
  }
  return Transducer(Automaton(n, n, std::move(delta)), std::move(out));
}

Transducer single_state(const Permutation& perm) {
  if (!is_permutation(perm))
    throw PreconditionError("single-state output table is not a permutation");
  return Transducer(Automaton(perm.size(), 1, std::vector<State>(perm.size(), 0)),
                    perm);
}

Transducer product_raw(const Transducer& t, const Transducer& u) {
  if (t.alphabet_size() != u.alphabet_size())
    throw PreconditionError("alphabet mismatch in product");
  const auto n = t.alphabet_size();
  const auto mt = t.state_count();
  const auto mu = u.state_count();
  if (mt > kDefaultStateCap / mu) throw CapExceeded("product too large");
  std::vector<State> delta(mt * mu * n);
  std::vector<Letter> out(mt * mu * n);
  for (State p = 0; p < mt; ++p) {
    for (State q = 0; q < mu; ++q) {
      const auto s = p * mu + q;
      for (Letter x = 0; x < n; ++x) {
        const auto y = t.output(p, x);
        delta[s * n + x] = static_cast<State>(t.next(p, x) * mu + u.next(q, y));
        out[s * n + x] = u.output(q, y);
      }
    }
  }
  return Transducer(Automaton(n, mt * mu, std::move(delta)), std::move(out));
}

Transducer weak_minimize(const Transducer& t) {
  const auto n = t.alphabet_size();
  const auto m = t.state_count();
  std::vector<std::size_t> labels(m);
  {
    std::map<std::vector<Letter>, std::size_t> rows;
    for (State q = 0; q < m; ++q) {
      auto r = t.output_row(q);
      labels[q] = rows.try_emplace({r.begin(), r.end()}, rows.size()).first->second;
    }
  }
  StatePartition current(labels);
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> keys;
    std::vector<std::size_t> key(n + 1);
    for (State q = 0; q < m; ++q) {
      key[0] = current.class_of(q);
      for (Letter x = 0; x < n; ++x) key[x + 1] = current.class_of(t.next(q, x));
      labels[q] = keys.try_emplace(key, keys.size()).first->second;
    }
    StatePartition refined(labels);
    if (refined.class_count() == current.class_count()) break;
    current = std::move(refined);
  }
  const auto c = current.class_count();
  std::vector<State> delta(c * n);
  std::vector<Letter> out(c * n);
  for (State q = 0; q < m; ++q) {
    const auto k = current.class_of(q);
    for (Letter x = 0; x < n; ++x) {
      delta[k * n + x] = static_cast<State>(current.class_of(t.next(q, x)));
      out[k * n + x] = t.output(q, x);
    }
  }
  return Transducer(Automaton(n, c, std::move(delta)), std::move(out));
}

Transducer core_of(const Transducer& t) {
  auto core = core_of(t.automaton());
  const auto n = t.alphabet_size();
  std::vector<Letter> out;
  out.reserve(core.embedding.size() * n);
  for (auto q : core.embedding) {
    auto r = t.output_row(q);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Transducer(std::move(core.core), std::move(out));
}

Transducer product_min(const Transducer& t, const Transducer& u) {
  if (!is_strongly_synchronizing(t.automaton()) ||
      !is_strongly_synchronizing(u.automaton()))
    throw PreconditionError("product_min operand is not strongly synchronizing");
  // Taking cores first does not change the core of the product.
  return weak_minimize(core_of(product_raw(core_of(t), core_of(u))));
}

Transducer normalize(const Transducer& t) {
  if (is_strongly_synchronizing(t.automaton())) return weak_minimize(core_of(t));
  return weak_minimize(t);
}

bool is_invertible(const Transducer& t) {
  for (State q = 0; q < t.state_count(); ++q) {
    if (!is_permutation(t.output_row(q))) return false;
  }
  return true;
}

Transducer invert(const Transducer& t) {
  if (!is_invertible(t))
    throw PreconditionError("transducer has a non-bijective output row");
  const auto n = t.alphabet_size();
  const auto m = t.state_count();
  std::vector<State> delta(m * n);
  std::vector<Letter> out(m * n);
  for (State q = 0; q < m; ++q) {
    for (Letter x = 0; x < n; ++x) {
      const auto y = t.output(q, x);
      delta[q * n + y] = t.next(q, x);
      out[q * n + y] = x;
    }
  }
  return Transducer(Automaton(n, m, std::move(delta)), std::move(out));
}

std::optional<std::pair<std::size_t, std::size_t>> bisync_levels(
    const Transducer& t) {
  if (!is_invertible(t)) return std::nullopt;
  auto forward = sync_level(t.automaton());
  if (!forward) return std::nullopt;
  auto backward = sync_level(invert(t).automaton());
  if (!backward) return std::nullopt;
  return std::pair{*forward, *backward};
}

bool is_in_hn(const Transducer& t) {
  if (!bisync_levels(t)) return false;
  return is_core(weak_minimize(t).automaton());
}

CanonicalKey canonical_key(const Transducer& t) {
  return detail::canonical_encoding(t.alphabet_size(), t.state_count(),
                                    t.automaton().table(), t.output_table());
}

bool equal_omega(const Transducer& t, const Transducer& u) {
  if (t.alphabet_size() != u.alphabet_size()) return false;
  return canonical_key(normalize(t)) == canonical_key(normalize(u));
}

bool is_identity(const Transducer& t) {
  auto m = normalize(t);
  if (m.state_count() != 1) return false;
  auto row = m.output_row(0);
  for (Letter x = 0; x < row.size(); ++x) {
    if (row[x] != x) return false;
  }
  return true;
}

Word apply_periodic(const Transducer& t, std::span<const Letter> period) {
  if (period.empty()) throw PreconditionError("empty period");
  for (auto x : period) {
    if (x >= t.alphabet_size()) throw PreconditionError("letter out of range");
  }
  auto level = sync_level(t.automaton());
  if (!level) throw PreconditionError("transducer is not strongly synchronizing");
  if (!is_core(t.automaton())) throw PreconditionError("transducer is not core");
  const auto repeats = (*level + period.size() - 1) / period.size();
  State q = 0;
  for (std::size_t r = 0; r < repeats; ++r) q = t.automaton().run(q, period);
  return t.translate(q, period);
}

std::optional<std::size_t> order(const Transducer& t, OrderCap cap) {
  if (!is_in_hn(t)) throw PreconditionError("order requires an element of H_n");
  const auto base = normalize(t);
  auto power = base;
  for (std::size_t k = 1; k <= cap.max_iterations; ++k) {
    if (is_identity(power)) return k;
    power = product_min(power, base);
    if (power.state_count() > cap.max_states) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace dbfold
