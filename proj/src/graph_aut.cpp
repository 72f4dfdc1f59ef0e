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

#include "dbfold/graph_aut.hpp"

#include <algorithm>
#include <map>

#include "dbfold/error.hpp"

namespace dbfold {

namespace {

using CountMatrix = std::vector<std::vector<std::size_t>>;

CountMatrix edge_counts(const Automaton& a) {
  const auto m = a.state_count();
  CountMatrix c(m, std::vector<std::size_t>(m, 0));
  for (State q = 0; q < m; ++q) {
    for (Letter x = 0; x < a.alphabet_size(); ++x) ++c[q][a.next(q, x)];
  }
  return c;
}

// Isomorphism-invariant vertex signature used to prune candidate images.
std::vector<std::size_t> vertex_signature(const CountMatrix& c, State q) {
  const auto m = c.size();
  std::vector<std::size_t> out_counts;
  std::vector<std::size_t> in_counts;
  for (std::size_t r = 0; r < m; ++r) {
    if (c[q][r]) out_counts.push_back(c[q][r]);
    if (c[r][q]) in_counts.push_back(c[r][q]);
  }
  std::sort(out_counts.begin(), out_counts.end());
  std::sort(in_counts.begin(), in_counts.end());
  std::vector<std::size_t> sig{c[q][q], out_counts.size(), in_counts.size()};
  sig.insert(sig.end(), out_counts.begin(), out_counts.end());
  sig.insert(sig.end(), in_counts.begin(), in_counts.end());
  return sig;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Automaton& a, std::size_t cap)
      : a_(a), cap_(cap), counts_(edge_counts(a)) {
    const auto m = a.state_count();
    for (State q = 0; q < m; ++q) signatures_.push_back(vertex_signature(counts_, q));
    image_.assign(m, 0);
    used_.assign(m, false);
  }

  std::vector<DigraphAutomorphism> run() {
    assign_vertex(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void assign_vertex(State q) {
    const auto m = a_.state_count();
    if (q == m) {
      expand_edges();
      return;
    }
    for (State v = 0; v < m; ++v) {
      if (used_[v] || signatures_[v] != signatures_[q]) continue;
      image_[q] = v;
      bool ok = true;
      for (State p = 0; p <= q && ok; ++p) {
        ok = counts_[q][p] == counts_[v][image_[p]] &&
             counts_[p][q] == counts_[image_[p]][v];
      }
      if (!ok) continue;
      used_[v] = true;
      assign_vertex(q + 1);
      used_[v] = false;
    }
  }

  // Enumerates every bijection between parallel classes for the current
  // vertex permutation.
  void expand_edges() {
    const auto n = a_.alphabet_size();
    const auto m = a_.state_count();
    struct ParallelClass {
      std::vector<Letter> from;  // letters at q
      std::vector<Letter> to;    // letters at image(q), permuted in place
      State q;
    };
    std::vector<ParallelClass> groups;
    for (State q = 0; q < m; ++q) {
      std::map<State, ParallelClass> by_target;
      for (Letter x = 0; x < n; ++x) by_target[a_.next(q, x)].from.push_back(x);
      for (Letter y = 0; y < n; ++y) {
        // Find the preimage target r with image_[r] == next(image q, y).
        const auto t = a_.next(image_[q], y);
        for (auto& [r, g] : by_target) {
          if (image_[r] == t) {
            g.to.push_back(y);
            break;
          }
        }
      }
      for (auto& [r, g] : by_target) {
        g.q = q;
        groups.push_back(std::move(g));
      }
    }
    std::vector<Letter> labels(m * n);
    expand_group(groups, 0, labels);
  }

  template <typename Groups>
  void expand_group(Groups& groups, std::size_t index,
                    std::vector<Letter>& labels) {
    const auto n = a_.alphabet_size();
    if (index == groups.size()) {
      if (found_.size() >= cap_)
        throw CapExceeded("automorphism group exceeds the enumeration cap");
      found_.push_back({image_, labels});
      return;
    }
    auto& g = groups[index];
    auto to = g.to;
    std::sort(to.begin(), to.end());
    do {
      for (std::size_t i = 0; i < g.from.size(); ++i)
        labels[g.q * n + g.from[i]] = to[i];
      expand_group(groups, index + 1, labels);
    } while (std::next_permutation(to.begin(), to.end()));
  }

  const Automaton& a_;
  std::size_t cap_;
  CountMatrix counts_;
  std::vector<std::vector<std::size_t>> signatures_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<DigraphAutomorphism> found_;
};

}  // namespace

bool is_valid_automorphism(const Automaton& a, const DigraphAutomorphism& phi) {
  const auto n = a.alphabet_size();
  const auto m = a.state_count();
  if (phi.vertex_perm.size() != m || phi.edge_label.size() != m * n) return false;
  if (!is_permutation(phi.vertex_perm)) return false;
  for (State q = 0; q < m; ++q) {
    std::span<const Letter> row(phi.edge_label.data() + q * n, n);
    if (!is_permutation(row)) return false;
    for (Letter x = 0; x < n; ++x) {
      if (a.next(phi.vertex_perm[q], row[x]) != phi.vertex_perm[a.next(q, x)])
        return false;
    }
  }
  return true;
}

DigraphAutomorphism identity_automorphism(const Automaton& a) {
  DigraphAutomorphism id{identity_permutation(a.state_count()), {}};
  id.edge_label.reserve(a.table().size());
  for (State q = 0; q < a.state_count(); ++q) {
    for (Letter x = 0; x < a.alphabet_size(); ++x) id.edge_label.push_back(x);
  }
  return id;
}

DigraphAutomorphism then(const DigraphAutomorphism& first,
                         const DigraphAutomorphism& second, std::size_t n) {
  DigraphAutomorphism out{then(first.vertex_perm, second.vertex_perm),
                          std::vector<Letter>(first.edge_label.size())};
  const auto m = first.vertex_perm.size();
  for (State q = 0; q < m; ++q) {
    const auto mid = first.vertex_perm[q];
    for (Letter x = 0; x < n; ++x) {
      out.edge_label[q * n + x] = second.edge_label[mid * n + first.edge_label[q * n + x]];
    }
  }
  return out;
}

DigraphAutomorphism inverse(const DigraphAutomorphism& phi, std::size_t n) {
  DigraphAutomorphism out{inverse(phi.vertex_perm),
                          std::vector<Letter>(phi.edge_label.size())};
  const auto m = phi.vertex_perm.size();
  for (State q = 0; q < m; ++q) {
    for (Letter x = 0; x < n; ++x)
      out.edge_label[phi.vertex_perm[q] * n + phi.edge_label[q * n + x]] = x;
  }
  return out;
}

std::size_t automorphism_order(const DigraphAutomorphism& phi, std::size_t n) {
  DigraphAutomorphism id{identity_permutation(phi.vertex_perm.size()), {}};
  for (std::size_t q = 0; q < phi.vertex_perm.size(); ++q) {
    for (Letter x = 0; x < n; ++x) id.edge_label.push_back(x);
  }
  auto power = phi;
  std::size_t k = 1;
  while (power != id) {
    power = then(power, phi, n);
    ++k;
  }
  return k;
}

std::vector<DigraphAutomorphism> enumerate_automorphisms(const Automaton& a,
                                                         std::size_t cap) {
  return AutomorphismSearch(a, cap).run();
}

std::optional<DigraphAutomorphism> automorphism_from_alphabet_perm(
    const Automaton& a, const Permutation& rho) {
  const auto n = a.alphabet_size();
  if (rho.size() != n || !is_permutation(rho))
    throw PreconditionError("rho is not a permutation of the alphabet");
  auto level = sync_level(a);
  if (!level || !is_core(a))
    throw PreconditionError("automaton is not strongly synchronizing and core");
  const auto m = a.state_count();
  DigraphAutomorphism phi{Permutation(m, static_cast<State>(m)), {}};
  const auto count = checked_power(n, *level, kDefaultStateCap);
  for (std::size_t r = 0; r < count; ++r) {
    auto w = word_of_rank(r, n, *level);
    const auto from = a.run(0, w);
    for (auto& x : w) x = rho[x];
    const auto to = a.run(0, w);
    if (phi.vertex_perm[from] == m) {
      phi.vertex_perm[from] = to;
    } else if (phi.vertex_perm[from] != to) {
      return std::nullopt;
    }
  }
  if (!is_permutation(phi.vertex_perm)) return std::nullopt;
  phi.edge_label.resize(m * n);
  for (State q = 0; q < m; ++q) {
    for (Letter x = 0; x < n; ++x) phi.edge_label[q * n + x] = rho[x];
  }
  if (!is_valid_automorphism(a, phi)) return std::nullopt;
  return phi;
}

Transducer transducer_from_automorphism(const Automaton& a,
                                        const DigraphAutomorphism& phi) {
  if (!is_valid_automorphism(a, phi))
    throw PreconditionError("not an automorphism of the underlying digraph");
  return Transducer(a, phi.edge_label);
}

std::optional<Permutation> is_permutation_induced(
    const Automaton& a, const DigraphAutomorphism& phi) {
  auto h = weak_minimize(transducer_from_automorphism(a, phi));
  if (h.state_count() != 1) return std::nullopt;
  auto row = h.output_row(0);
  return Permutation(row.begin(), row.end());
}

bool verify_embedding(const Automaton& a, const DigraphAutomorphism& phi,
                      const DigraphAutomorphism& psi) {
  const auto n = a.alphabet_size();
  const auto h_phi = transducer_from_automorphism(a, phi);
  const auto h_psi = transducer_from_automorphism(a, psi);
  const auto h_both = transducer_from_automorphism(a, then(phi, psi, n));
  if (!equal_omega(h_both, product_min(h_phi, h_psi))) return false;
  if (phi != identity_automorphism(a) && is_identity(h_phi)) return false;
  return true;
}

std::vector<DigraphAutomorphism> involution_factors(
    const Automaton& a, const DigraphAutomorphism& phi) {
  if (!is_valid_automorphism(a, phi))
    throw PreconditionError("not an automorphism of the underlying digraph");
  const auto n = a.alphabet_size();
  const auto m = a.state_count();
  for (State q = 0; q < m; ++q) {
    if (phi.vertex_perm[q] != q)
      throw PreconditionError("automorphism moves a vertex");
  }
  std::vector<DigraphAutomorphism> factors;
  for (State q = 0; q < m; ++q) {
    std::span<const Letter> row(phi.edge_label.data() + q * n, n);
    for (const auto& c : cycles(row)) {
      const auto l = c.size();
      // (c_{l-2} c_{l-1}), then (c_{l-3} c_{l-2}), ..., then (c_0 c_1).
      for (std::size_t j = 1; j < l; ++j) {
        if (factors.size() < j) factors.push_back(identity_automorphism(a));
        auto& f = factors[j - 1];
        std::swap(f.edge_label[q * n + c[l - j - 1]], f.edge_label[q * n + c[l - j]]);
      }
    }
  }
  return factors;
}

std::size_t max_parallel_edges(const Automaton& a) {
  std::size_t best = 0;
  for (const auto& row : edge_counts(a))
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

}  // namespace dbfold
