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

#include "dbfold/io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "dbfold/error.hpp"

namespace dbfold {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    auto raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == ':' || c == '|') {
        line.tokens.push_back({std::string(1, c), i + 1});
        ++i;
      } else {
        const auto start = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' &&
               raw[i] != ':' && raw[i] != '|')
          ++i;
        line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(const char* what) {
    if (pos_ >= lines_.size())
      throw ParseError(end_line(), 1, std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }

  void expect_end() const {
    if (pos_ < lines_.size())
      throw ParseError(lines_[pos_].number, lines_[pos_].tokens.front().column,
                       "unexpected trailing content");
  }

 private:
  std::size_t end_line() const { return lines_.empty() ? 1 : lines_.back().number + 1; }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::size_t to_uint(std::string_view s, std::size_t line, std::size_t column) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError(line, column, "expected a non-negative integer, got '" + std::string(s) + "'");
  return value;
}

std::size_t to_uint(const Line& l, const Token& t) { return to_uint(t.text, l.number, t.column); }

void expect_token(const Line& l, std::size_t index, std::string_view literal) {
  if (index >= l.tokens.size())
    throw ParseError(l.number, 1, "expected '" + std::string(literal) + "'");
  if (l.tokens[index].text != literal)
    throw ParseError(l.number, l.tokens[index].column,
                     "expected '" + std::string(literal) + "', got '" + l.tokens[index].text + "'");
}

// Parses `<kind> key=value ...` requiring exactly the listed keys.
std::map<std::string, std::size_t> parse_header(const Line& l, std::string_view kind,
                                                std::initializer_list<std::string_view> keys) {
  expect_token(l, 0, kind);
  std::map<std::string, std::size_t> values;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    const auto& t = l.tokens[i];
    const auto eq = t.text.find('=');
    if (eq == std::string::npos)
      throw ParseError(l.number, t.column, "expected key=value, got '" + t.text + "'");
    auto key = t.text.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(l.number, t.column, "unknown header key '" + key + "'");
    if (values.contains(key))
      throw ParseError(l.number, t.column, "duplicate header key '" + key + "'");
    values[key] = to_uint(std::string_view(t.text).substr(eq + 1), l.number, t.column + eq + 1);
  }
  for (auto key : keys) {
    if (!values.contains(std::string(key)))
      throw ParseError(l.number, 1, "missing header key '" + std::string(key) + "'");
  }
  return values;
}

// Reads `<name> : v1 v2 ...` and returns the values.
std::vector<std::size_t> parse_list(const Line& l, std::string_view name) {
  expect_token(l, 0, name);
  expect_token(l, 1, ":");
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i < l.tokens.size(); ++i) out.push_back(to_uint(l, l.tokens[i]));
  return out;
}

void check_count(const Line& l, std::size_t got, std::size_t want, std::string_view what) {
  if (got != want)
    throw ParseError(l.number, 1, "expected " + std::to_string(want) + " " + std::string(what) +
                                      ", got " + std::to_string(got));
}

[[noreturn]] void out_of_range(const Line& l, std::size_t column, std::string_view what,
                               std::size_t value, std::size_t bound) {
  throw ValidationError("line " + std::to_string(l.number) + ", column " + std::to_string(column) +
                        ": " + std::string(what) + " " + std::to_string(value) +
                        " out of range (must be < " + std::to_string(bound) + ")");
}

void check_sizes(const Line& header, std::size_t n, std::size_t m) {
  if (n < 1) out_of_range(header, 1, "alphabet size", n, 0);
  if (m < 1) throw ValidationError("line " + std::to_string(header.number) + ": no states");
  if (m > kDefaultStateCap) throw CapExceeded("state count exceeds cap");
}

// Reads m state lines; each holds n targets and, if `with_output`, a '|' and
// n output letters. Lines may appear in any order but each id exactly once.
void parse_state_lines(Reader& r, std::size_t n, std::size_t m, bool with_output,
                       std::vector<State>& delta, std::vector<Letter>& out) {
  delta.assign(m * n, 0);
  out.assign(with_output ? m * n : 0, 0);
  std::vector<bool> seen(m, false);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& l = r.next("a state line");
    expect_token(l, 0, "state");
    if (l.tokens.size() < 2) throw ParseError(l.number, 1, "missing state id");
    const auto id = to_uint(l, l.tokens[1]);
    if (id >= m) out_of_range(l, l.tokens[1].column, "state id", id, m);
    if (seen[id]) throw ParseError(l.number, l.tokens[1].column, "duplicate state id");
    seen[id] = true;
    expect_token(l, 2, ":");
    const std::size_t want = with_output ? 2 * n + 4 : n + 3;
    if (with_output) expect_token(l, 3 + n, "|");
    check_count(l, l.tokens.size(), want, "tokens");
    for (std::size_t x = 0; x < n; ++x) {
      const auto& t = l.tokens[3 + x];
      const auto v = to_uint(l, t);
      if (v >= m) out_of_range(l, t.column, "target state", v, m);
      delta[id * n + x] = static_cast<State>(v);
      if (with_output) {
        const auto& u = l.tokens[4 + n + x];
        const auto y = to_uint(l, u);
        if (y >= n) out_of_range(l, u.column, "output letter", y, n);
        out[id * n + x] = static_cast<Letter>(y);
      }
    }
  }
}

template <typename Range>
void append_row(std::ostringstream& os, const Range& row) {
  for (auto v : row) os << ' ' << v;
}

}  // namespace

std::string render(const Automaton& a) {
  std::ostringstream os;
  os << "automaton n=" << a.alphabet_size() << " states=" << a.state_count() << '\n';
  for (State q = 0; q < a.state_count(); ++q) {
    os << "state " << q << ':';
    append_row(os, a.row(q));
    os << '\n';
  }
  return os.str();
}

std::string render(const Transducer& t) {
  std::ostringstream os;
  os << "transducer n=" << t.alphabet_size() << " states=" << t.state_count() << '\n';
  for (State q = 0; q < t.state_count(); ++q) {
    os << "state " << q << ':';
    append_row(os, t.automaton().row(q));
    os << " |";
    append_row(os, t.output_row(q));
    os << '\n';
  }
  return os.str();
}

std::string render(const LocalRule& f) {
  std::ostringstream os;
  os << "rule n=" << f.alphabet_size() << " window=" << f.window() << "\ntable:";
  append_row(os, f.table());
  os << '\n';
  return os.str();
}

std::string render(const StatePartition& p) {
  std::ostringstream os;
  os << "partition states=" << p.size() << " classes=" << p.class_count() << "\nlabels:";
  append_row(os, p.labels());
  os << '\n';
  return os.str();
}

std::string render(const DigraphAutomorphism& phi, std::size_t alphabet_size) {
  std::ostringstream os;
  os << "automorphism n=" << alphabet_size << " states=" << phi.vertex_perm.size()
     << "\nvertices:";
  append_row(os, phi.vertex_perm);
  os << "\nedges:";
  append_row(os, phi.edge_label);
  os << '\n';
  return os.str();
}

std::string header_kind(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  return lines.front().tokens.front().text;
}

Automaton parse_automaton(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "automaton", {"n", "states"});
  const auto n = h["n"], m = h["states"];
  check_sizes(header, n, m);
  std::vector<State> delta;
  std::vector<Letter> unused;
  parse_state_lines(r, n, m, false, delta, unused);
  r.expect_end();
  return Automaton(n, m, std::move(delta));
}

Transducer parse_transducer(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "transducer", {"n", "states"});
  const auto n = h["n"], m = h["states"];
  check_sizes(header, n, m);
  std::vector<State> delta;
  std::vector<Letter> out;
  parse_state_lines(r, n, m, true, delta, out);
  r.expect_end();
  return Transducer(Automaton(n, m, std::move(delta)), std::move(out));
}

LocalRule parse_rule(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "rule", {"n", "window"});
  const auto n = h["n"], w = h["window"];
  if (n < 1 || w < 1) throw ValidationError("rule needs n >= 1 and window >= 1");
  const auto size = checked_power(n, w, kDefaultStateCap);
  const auto& l = r.next("a table line");
  auto values = parse_list(l, "table");
  check_count(l, values.size(), size, "table entries");
  std::vector<Letter> table;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= n) out_of_range(l, l.tokens[i + 2].column, "letter", values[i], n);
    table.push_back(static_cast<Letter>(values[i]));
  }
  r.expect_end();
  return LocalRule(n, w, std::move(table));
}

StatePartition parse_partition(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "partition", {"states", "classes"});
  const auto& l = r.next("a labels line");
  auto values = parse_list(l, "labels");
  check_count(l, values.size(), h["states"], "labels");
  StatePartition p(values);
  if (p.labels() != values)
    throw ValidationError("line " + std::to_string(l.number) +
                          ": labels are not normalized by first occurrence");
  if (p.class_count() != h["classes"])
    throw ValidationError("line " + std::to_string(l.number) +
                          ": class count does not match the header");
  r.expect_end();
  return p;
}

DigraphAutomorphism parse_automorphism(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "automorphism", {"n", "states"});
  const auto n = h["n"], m = h["states"];
  check_sizes(header, n, m);
  const auto& lv = r.next("a vertices line");
  auto vertices = parse_list(lv, "vertices");
  check_count(lv, vertices.size(), m, "vertex images");
  const auto& le = r.next("an edges line");
  auto edges = parse_list(le, "edges");
  check_count(le, edges.size(), m * n, "edge labels");
  DigraphAutomorphism phi;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= m) out_of_range(lv, lv.tokens[i + 2].column, "vertex", vertices[i], m);
    phi.vertex_perm.push_back(static_cast<State>(vertices[i]));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= n) out_of_range(le, le.tokens[i + 2].column, "letter", edges[i], n);
    phi.edge_label.push_back(static_cast<Letter>(edges[i]));
  }
  if (!is_permutation(phi.vertex_perm))
    throw ValidationError("line " + std::to_string(lv.number) + ": vertex map is not a permutation");
  r.expect_end();
  return phi;
}

namespace {

std::string dot(const Automaton& a, const std::vector<Letter>* outputs, const char* name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State q = 0; q < a.state_count(); ++q) os << "  q" << q << ";\n";
  const auto n = a.alphabet_size();
  for (State q = 0; q < a.state_count(); ++q) {
    for (Letter x = 0; x < n; ++x) {
      os << "  q" << q << " -> q" << a.next(q, x) << " [label=\"" << x;
      if (outputs) os << '|' << (*outputs)[q * n + x];
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Automaton& a) { return dot(a, nullptr, "automaton"); }

std::string to_dot(const Transducer& t) {
  return dot(t.automaton(), &t.output_table(), "transducer");
}

Manifest make_manifest(const Factorization& f, bool verified) {
  Manifest m;
  m.alphabet_size = f.original.alphabet_size();
  m.verified = verified;
  ManifestEntry rem;
  rem.file = "factor_0.txt";
  rem.role = "remainder";
  rem.states = f.remainder.state_count();
  rem.order = order(f.remainder).value_or(0);
  m.entries.push_back(rem);

  // Discovery order of factors, each tagged with its step.
  std::vector<std::size_t> step_of;
  for (std::size_t s = 0; s < f.steps.size(); ++s) {
    const auto parts = f.steps[s].involutions.empty() ? 1 : f.steps[s].involutions.size();
    step_of.insert(step_of.end(), parts, s);
  }
  for (std::size_t i = 0; i < f.inverse_factors.size(); ++i) {
    const auto& h = f.inverse_factors[i];
    const auto& step = f.steps[step_of[step_of.size() - 1 - i]];
    ManifestEntry e;
    e.file = "factor_" + std::to_string(i + 1) + ".txt";
    e.role = "factor";
    e.states = h.state_count();
    e.order = order(h).value_or(0);
    e.step = step_of[step_of.size() - 1 - i] + 1;
    e.level = step.level_i;
    e.p = step.p;
    e.q = step.q;
    m.entries.push_back(std::move(e));
  }
  return m;
}

std::string render(const Manifest& m) {
  std::ostringstream os;
  os << "factorization n=" << m.alphabet_size << " factors=" << m.entries.size() << '\n';
  os << "# original = factor_0 * factor_1 * ... (left to right)\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    const auto& e = m.entries[i];
    os << "factor " << i << ": file=" << e.file << " role=" << e.role << " states=" << e.states
       << " order=" << e.order;
    if (e.role == "factor")
      os << " step=" << e.step << " level=" << e.level << " pair=" << e.p << ',' << e.q;
    os << '\n';
  }
  os << "verified: " << (m.verified ? "true" : "false") << '\n';
  return os.str();
}

Manifest parse_manifest(std::string_view text) {
  Reader r(text);
  const auto& header = r.next("a header");
  auto h = parse_header(header, "factorization", {"n", "factors"});
  Manifest m;
  m.alphabet_size = h["n"];
  for (std::size_t i = 0; i < h["factors"]; ++i) {
    const auto& l = r.next("a factor line");
    expect_token(l, 0, "factor");
    if (l.tokens.size() < 2 || to_uint(l, l.tokens[1]) != i)
      throw ParseError(l.number, 1, "expected factor " + std::to_string(i));
    expect_token(l, 2, ":");
    ManifestEntry e;
    for (std::size_t k = 3; k < l.tokens.size(); ++k) {
      const auto& t = l.tokens[k];
      const auto eq = t.text.find('=');
      if (eq == std::string::npos) throw ParseError(l.number, t.column, "expected key=value");
      const auto key = t.text.substr(0, eq);
      const auto value = t.text.substr(eq + 1);
      const auto col = t.column + eq + 1;
      if (key == "file") {
        e.file = value;
      } else if (key == "role") {
        if (value != "remainder" && value != "factor")
          throw ParseError(l.number, col, "unknown role '" + value + "'");
        e.role = value;
      } else if (key == "states") {
        e.states = to_uint(value, l.number, col);
      } else if (key == "order") {
        e.order = to_uint(value, l.number, col);
      } else if (key == "step") {
        e.step = to_uint(value, l.number, col);
      } else if (key == "level") {
        e.level = to_uint(value, l.number, col);
      } else if (key == "pair") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw ParseError(l.number, col, "expected p,q");
        e.p = static_cast<State>(to_uint(value.substr(0, comma), l.number, col));
        e.q = static_cast<State>(to_uint(value.substr(comma + 1), l.number, col + comma + 1));
      } else {
        throw ParseError(l.number, t.column, "unknown key '" + key + "'");
      }
    }
    m.entries.push_back(std::move(e));
  }
  const auto& l = r.next("a verified line");
  expect_token(l, 0, "verified");
  expect_token(l, 1, ":");
  if (l.tokens.size() != 3 || (l.tokens[2].text != "true" && l.tokens[2].text != "false"))
    throw ParseError(l.number, l.tokens.size() > 2 ? l.tokens[2].column : 1, "expected true or false");
  m.verified = l.tokens[2].text == "true";
  r.expect_end();
  return m;
}

}  // namespace dbfold
