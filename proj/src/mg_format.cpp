// Copyright 2026 The orient2 Authors
//
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

#include <charconv>
#include <iterator>
#include <map>
#include <sstream>

#include "orient2/error.hpp"
#include "orient2/graph.hpp"

namespace orient2 {
namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void syntax(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::uint64_t parse_count(const Token& t, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || t.text.empty() || !(t.text.front() >= '0' && t.text.front() <= '9')) {
    syntax(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

struct Seen {
  bool undirected = false;
  VertexPair arc;
  std::size_t line = 0;
};

}  // namespace

MixedGraph parse_mg(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_n = false;
  std::uint64_t n = 0;
  std::vector<VertexPair> undirected;
  std::vector<VertexPair> arcs;
  std::map<VertexPair, Seen> seen;

  while (pos < text.size() || line_no == 0) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    const auto tokens = tokenize(line);

    if (line_no == 1) {
      if (tokens.size() != 2 || tokens[0].text != "mgraph" || tokens[1].text != "1") {
        syntax(1, 1, "expected header 'mgraph 1'");
      }
      continue;
    }
    if (tokens.empty()) continue;

    const Token& directive = tokens[0];
    if (directive.text == "n") {
      if (have_n) syntax(line_no, directive.column, "duplicate 'n' line");
      if (tokens.size() != 2) syntax(line_no, directive.column, "expected 'n <N>'");
      n = parse_count(tokens[1], line_no);
      if (n > kMaxOrder) {
        throw Error(ErrorCode::kTooLarge, "line " + std::to_string(line_no) + ": order " +
                                              std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxOrder));
      }
      have_n = true;
      continue;
    }
    if (directive.text != "e" && directive.text != "a") {
      syntax(line_no, directive.column, "unknown directive '" + std::string(directive.text) + "'");
    }
    if (!have_n) syntax(line_no, directive.column, "edge before 'n' line");
    if (tokens.size() != 3) {
      syntax(line_no, directive.column, "expected '" + std::string(directive.text) + " <u> <v>'");
    }
    const std::uint64_t u = parse_count(tokens[1], line_no);
    const std::uint64_t v = parse_count(tokens[2], line_no);
    for (const auto& [x, t] : {std::pair{u, &tokens[1]}, std::pair{v, &tokens[2]}}) {
      if (x >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "line " + std::to_string(line_no) + ", column " + std::to_string(t->column) +
                        ": vertex " + std::to_string(x) + " outside 0.." +
                        std::to_string(n == 0 ? 0 : n - 1));
      }
    }
    if (u == v) {
      throw Error(ErrorCode::kLoopEdge,
                  "line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    }
    const VertexPair edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    const VertexPair key{std::min(edge.u, edge.v), std::max(edge.u, edge.v)};
    const bool is_undirected = directive.text == "e";
    auto [it, inserted] = seen.try_emplace(key, Seen{is_undirected, edge, line_no});
    if (!inserted) {
      const bool same = it->second.undirected == is_undirected &&
                        (is_undirected || it->second.arc == edge);
      if (!same) {
        throw Error(ErrorCode::kParallelEdge,
                    "line " + std::to_string(line_no) + ": parallel connections on pair (" +
                        std::to_string(key.u) + "," + std::to_string(key.v) +
                        "), first seen at line " + std::to_string(it->second.line));
      }
      continue;
    }
    (is_undirected ? undirected : arcs).push_back(edge);
  }
  if (!have_n) syntax(line_no, 1, "missing 'n <N>' line");
  return MixedGraph::validate(n, std::move(undirected), std::move(arcs));
}

MixedGraph parse_mg(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_mg(std::string_view(text));
}

std::string serialize_mg(const MixedGraph& g) {
  std::string out = "mgraph 1\nn " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.undirected_edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  for (const auto& [u, v] : g.arcs()) {
    out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::uint64_t graph_hash(const MixedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_mg(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace orient2
