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

// dbfold: command-line front end for the library.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage, parse or validation
// error, 3 cap exceeded, 4 internal invariant failure.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dbfold/automaton.hpp"
#include "dbfold/corpus.hpp"
#include "dbfold/counting.hpp"
#include "dbfold/decomposition.hpp"
#include "dbfold/error.hpp"
#include "dbfold/finite_order.hpp"
#include "dbfold/graph_aut.hpp"
#include "dbfold/io.hpp"
#include "dbfold/sliding_block.hpp"
#include "dbfold/transducer.hpp"

namespace {

using namespace dbfold;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;
constexpr int kInternal = 4;

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Underlying automaton of an automaton or transducer file.
Automaton load_automaton(const std::string& path) {
  const auto text = read_file(path);
  if (header_kind(text) == "transducer") return parse_transducer(text).automaton();
  return parse_automaton(text);
}

Transducer load_transducer(const std::string& path) {
  return parse_transducer(read_file(path));
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path_);
    out << text;
  }

 private:
  const std::string& path_;
};

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly synchronizing automata, foldings and the transducer group H_n"};
  app.require_subcommand(1);
  std::string out_path;
  int status = kOk;
  std::function<void()> action;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-o,--output", out_path, "Write to PATH instead of standard output");
    return sub;
  };
  Output out(out_path);

  std::size_t n = 0, m = 0, k = 0, cap = 0;
  std::string file, file2;
  std::vector<std::string> files;
  bool involutions = false;
  std::string method;
  std::uint64_t seed = 1;
  std::size_t factors = 4;

  auto* debruijn = add("debruijn", "Print the de Bruijn automaton G(n,m)");
  debruijn->add_option("n", n)->required();
  debruijn->add_option("m", m)->required();
  debruijn->callback([&] { action = [&] { out.write(render(de_bruijn(n, m))); }; });

  auto* sync = add("sync", "Print the synchronizing sequence and level");
  sync->add_option("file", file)->required();
  sync->callback([&] {
    action = [&] {
      const auto a = load_automaton(file);
      const auto seq = sync_sequence(a);
      std::ostringstream os;
      for (std::size_t i = 0; i < seq.terms.size(); ++i)
        os << "term " << i << ": states=" << seq.terms[i].automaton.state_count() << '\n';
      if (auto level = sync_level(a)) {
        os << "level: " << *level << '\n';
      } else {
        os << "level: none\n";
        status = kNegative;
      }
      out.write(os.str());
    };
  });

  auto* core = add("core", "Print the core of a strongly synchronizing machine");
  core->add_option("file", file)->required();
  core->callback([&] {
    action = [&] {
      const auto text = read_file(file);
      if (header_kind(text) == "transducer") {
        out.write(render(core_of(parse_transducer(text))));
      } else {
        out.write(render(core_of(parse_automaton(text)).core));
      }
    };
  });

  auto* minimize = add("minimize", "Merge omega-equivalent states of a transducer");
  minimize->add_option("file", file)->required();
  minimize->callback([&] { action = [&] { out.write(render(weak_minimize(load_transducer(file)))); }; });

  auto* product = add("product", "Minimal core of the product A * B (A acts first)");
  product->add_option("a", file)->required();
  product->add_option("b", file2)->required();
  product->callback([&] {
    action = [&] { out.write(render(product_min(load_transducer(file), load_transducer(file2)))); };
  });

  auto* inv = add("invert", "Inverse of a transducer with bijective output rows");
  inv->add_option("file", file)->required();
  inv->callback([&] { action = [&] { out.write(render(invert(load_transducer(file)))); }; });

  auto* check = add("check-hn", "Decide membership in H_n (exit 1 if not)");
  check->add_option("file", file)->required();
  check->callback([&] {
    action = [&] {
      const bool in = is_in_hn(load_transducer(file));
      out.write(in ? "true\n" : "false\n");
      if (!in) status = kNegative;
    };
  });

  auto* r2t = add("rule2trans", "Transducer of a local rule");
  r2t->add_option("file", file)->required();
  r2t->callback([&] { action = [&] { out.write(render(rule_to_transducer(parse_rule(read_file(file))))); }; });

  auto* t2r = add("trans2rule", "Local rule of a core synchronizing transducer");
  t2r->add_option("file", file)->required();
  t2r->callback([&] { action = [&] { out.write(render(transducer_to_rule(load_transducer(file)))); }; });

  cap = kDefaultAutomorphismCap;
  auto* aut = add("aut", "List the automorphisms of the underlying digraph");
  aut->add_option("file", file)->required();
  aut->add_option("--cap", cap, "Maximum group size");
  aut->callback([&] {
    action = [&] {
      const auto a = load_automaton(file);
      const auto group = enumerate_automorphisms(a, cap);
      std::ostringstream os;
      os << "# automorphisms: " << group.size() << '\n';
      for (std::size_t i = 0; i < group.size(); ++i) {
        os << "# automorphism " << i << ": ";
        if (auto rho = is_permutation_induced(a, group[i])) {
          os << "induced by permutation " << join(*rho) << '\n';
        } else {
          os << "not permutation-induced\n";
        }
        os << render(group[i], a.alphabet_size());
      }
      out.write(os.str());
    };
  });

  auto* haphi = add("haphi", "Transducer H(A, phi) of an automaton and a digraph automorphism");
  haphi->add_option("file", file)->required();
  haphi->add_option("automorphism", file2)->required();
  haphi->callback([&] {
    action = [&] {
      const auto a = load_automaton(file);
      const auto phi = parse_automorphism(read_file(file2));
      if (!is_valid_automorphism(a, phi))
        throw ValidationError("not an automorphism of the underlying digraph");
      out.write(render(transducer_from_automorphism(a, phi)));
    };
  });

  auto* dec = add("decompose", "Factor an element of H_n into finite-order elements");
  dec->add_option("file", file)->required();
  dec->add_flag("--involutions", involutions, "Split every factor into involutions");
  dec->callback([&] {
    action = [&] {
      const auto t = load_transducer(file);
      const auto f = involutions ? decompose_involutions(t) : decompose(t);
      const bool ok = verify(f);
      const auto manifest = make_manifest(f, ok);
      std::vector<const Transducer*> machines{&f.remainder};
      for (const auto& h : f.inverse_factors) machines.push_back(&h);
      if (out_path.empty()) {
        std::ostringstream os;
        os << render(manifest);
        for (std::size_t i = 0; i < machines.size(); ++i)
          os << "# " << manifest.entries[i].file << '\n' << render(*machines[i]);
        std::cout << os.str();
      } else {
        const std::filesystem::path dir(out_path);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < machines.size(); ++i)
          std::ofstream(dir / manifest.entries[i].file, std::ios::binary) << render(*machines[i]);
        std::ofstream(dir / "manifest.txt", std::ios::binary) << render(manifest);
      }
      if (!ok) status = kNegative;
    };
  });

  OrderCap order_cap;
  auto* ord = add("order", "Order of an element of H_n");
  ord->add_option("file", file)->required();
  ord->add_option("--cap", order_cap.max_iterations, "Maximum power to try");
  ord->callback([&] {
    action = [&] {
      auto o = order(load_transducer(file), order_cap);
      if (!o) throw CapExceeded("order not reached within the cap");
      out.write(std::to_string(*o) + "\n");
    };
  });

  auto* fcount = add("fold-count", "Number of foldings of G(n,m)");
  fcount->add_option("n", n)->required();
  fcount->add_option("m", m)->required();
  fcount->callback([&] {
    action = [&] {
      BigCount c;
      if (m == 1) {
        c = bell(n);
      } else if (m == 2) {
        c = count_foldings_g_n_2(n);
      } else {
        c = enumerate_foldings(de_bruijn(n, m), EnumerationMethod::kLattice).size();
      }
      out.write(c.str() + "\n");
    };
  });

  auto* fenum = add("fold-enum", "List the foldings of G(n,m), one partition per line");
  fenum->add_option("n", n)->required();
  fenum->add_option("m", m)->required();
  fenum->add_option("--method", method, "exhaustive or lattice")
      ->check(CLI::IsMember({"exhaustive", "lattice"}));
  fenum->callback([&] {
    action = [&] {
      const auto g = de_bruijn(n, m);
      auto how = method.empty() ? (g.state_count() <= 10 ? EnumerationMethod::kExhaustive
                                                         : EnumerationMethod::kLattice)
                 : method == "lattice" ? EnumerationMethod::kLattice
                                       : EnumerationMethod::kExhaustive;
      std::ostringstream os;
      for (const auto& p : enumerate_foldings(g, how)) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.class_of(i);
        os << '\n';
      }
      out.write(os.str());
    };
  });

  auto* bellc = add("bell", "Bell number B(k)");
  bellc->add_option("k", k)->required();
  bellc->callback([&] { action = [&] { out.write(bell(k).str() + "\n"); }; });

  cap = kDefaultAutomorphismCap;
  std::size_t group_cap = kDefaultSubgroupCap;
  auto* sag = add("subgroup-ag", "Automaton A(G) of the finite group generated by the inputs");
  sag->add_option("generators", files)->required();
  sag->add_option("--cap", group_cap, "Maximum group size");
  sag->callback([&] {
    action = [&] {
      std::vector<Transducer> gens;
      for (const auto& f : files) gens.push_back(load_transducer(f));
      const auto g = subgroup_closure(gens, group_cap);
      const auto ag = subgroup_automaton(g);
      std::ostringstream os;
      os << "# group order: " << g.elements.size() << "\n# level: " << g.max_sync_level << '\n';
      os << render(ag.automaton);
      for (std::size_t i = 0; i < g.elements.size(); ++i) {
        os << "# element " << i << '\n' << render(g.elements[i]);
        os << render(ag.embedding[i], g.alphabet_size);
      }
      out.write(os.str());
    };
  });

  auto* dot = add("dot", "Graphviz rendering of an automaton or transducer");
  dot->add_option("file", file)->required();
  dot->callback([&] {
    action = [&] {
      const auto text = read_file(file);
      out.write(header_kind(text) == "transducer" ? to_dot(parse_transducer(text))
                                                  : to_dot(parse_automaton(text)));
    };
  });

  std::size_t word_length = 2;
  auto* rnd = add("random-hn", "Random element of H_n built from folding automorphisms");
  rnd->add_option("n", n)->required();
  rnd->add_option("--m", word_length, "Word length of the de Bruijn graph");
  rnd->add_option("--factors", factors, "Number of random factors");
  rnd->add_option("--seed", seed, "Random seed");
  rnd->callback([&] {
    action = [&] {
      Rng rng(seed);
      out.write(render(random_hn_element(n, word_length, factors, rng)));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    action();
  } catch (const CapExceeded& e) {
    std::cerr << "dbfold: " << e.what() << '\n';
    return kCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "dbfold: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "dbfold: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
