#pragma once

// Text formats for problem instances and mapping certificates.
//
// An instance file is line oriented; '#' starts a comment and blank lines are
// ignored.  Sections appear in this order:
//
//   k <1|2>
//   g <n> <m>          followed by m lines "<u> <v>"
//   h <n'> <m'>        followed by m' lines "<u> <v>"
//   wdefault <value>   optional, defaults to 0
//   w <u> <v> <value>  zero or more overrides, u < v required
//   budget <value>     optional; absent means "minimize"
//
// A mapping file lists "map <overlay_vertex> <host_vertex>" lines followed by
// a single trailing "weight <value>" line.  The solver commands emit exactly
// this format, so their stdout can be fed back to the checker.

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sca/graph.hpp"
#include "sca/mapping.hpp"

namespace sca {

struct Instance {
  int k = 1;
  Graph g{0};
  Graph h{0};
  WeightFn omega;
  std::optional<Weight> budget;
};

inline bool operator==(const Instance& a, const Instance& b) {
  return a.k == b.k && a.g.n() == b.g.n() && a.g.edges() == b.g.edges() &&
         a.h.n() == b.h.n() && a.h.edges() == b.h.edges() &&
         a.omega.default_weight() == b.omega.default_weight() &&
         a.omega.overrides() == b.omega.overrides() && a.budget == b.budget;
}
inline bool operator!=(const Instance& a, const Instance& b) { return !(a == b); }

// Parse failure with the 1-based line number of the offending input line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

namespace detail {

struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> token_lines(const std::string& text) {
  std::vector<TokenLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    TokenLine line{number, {}};
    std::string tok;
    while (fields >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline void expect_arity(const TokenLine& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "expected " + std::to_string(count) +
                                      " fields on a '" + line.tokens[0] + "' line");
}

inline long long parse_count(const TokenLine& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size())
    throw ParseError(line.number, std::string(what) + " is missing");
  const std::string& s = line.tokens[index];
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("malformed ") + what + " '" + s + "'");
  }
  if (used != s.size())
    throw ParseError(line.number, std::string("malformed ") + what + " '" + s + "'");
  if (value < 0) throw ParseError(line.number, std::string(what) + " must be nonnegative");
  return value;
}

inline Weight parse_weight_field(const TokenLine& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size())
    throw ParseError(line.number, std::string(what) + " is missing");
  const std::string& s = line.tokens[index];
  if (!s.empty() && s[0] == '-')
    throw ParseError(line.number, std::string("negative ") + what);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("malformed ") + what + " '" + s + "'");
  }
  if (used != s.size())
    throw ParseError(line.number, std::string("malformed ") + what + " '" + s + "'");
  return static_cast<Weight>(value);
}

// Reads "<tag> <n> <m>" plus the m edge lines that follow, advancing `index`.
inline Graph parse_graph_section(const std::vector<TokenLine>& lines, std::size_t& index,
                                 const char* tag) {
  const TokenLine& head = lines[index];
  expect_arity(head, 3);
  long long n = parse_count(head, 1, "vertex count");
  long long m = parse_count(head, 2, "edge count");
  ++index;
  std::vector<VertexPair> edges;
  std::set<VertexPair> seen;
  for (long long e = 0; e < m; ++e, ++index) {
    if (index >= lines.size())
      throw ParseError(head.number, std::string("section '") + tag + "' promises " +
                                        std::to_string(m) + " edges but the input ends early");
    const TokenLine& line = lines[index];
    if (line.tokens.size() != 2)
      throw ParseError(line.number, "expected an edge line '<u> <v>'");
    long long u = parse_count(line, 0, "vertex");
    long long v = parse_count(line, 1, "vertex");
    if (u == v) throw ParseError(line.number, "self-loop");
    if (u >= n || v >= n) throw ParseError(line.number, "vertex out of range");
    VertexPair edge = ordered(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(edge).second) throw ParseError(line.number, "duplicate edge");
    edges.push_back(edge);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  auto lines = detail::token_lines(text);
  std::size_t index = 0;
  auto expect_tag = [&](const char* tag) -> const detail::TokenLine& {
    if (index >= lines.size()) {
      int at = lines.empty() ? 1 : lines.back().number;
      throw ParseError(at, std::string("expected a '") + tag + "' line");
    }
    if (lines[index].tokens[0] != tag)
      throw ParseError(lines[index].number,
                       std::string("expected '") + tag + "', found '" + lines[index].tokens[0] + "'");
    return lines[index];
  };

  Instance inst;
  {
    const auto& kline = expect_tag("k");
    detail::expect_arity(kline, 2);
    long long k = detail::parse_count(kline, 1, "connectivity target");
    if (k != 1 && k != 2) throw ParseError(kline.number, "connectivity target must be 1 or 2");
    inst.k = static_cast<int>(k);
    ++index;
  }
  expect_tag("g");
  inst.g = detail::parse_graph_section(lines, index, "g");
  expect_tag("h");
  inst.h = detail::parse_graph_section(lines, index, "h");

  bool saw_default = false;
  bool saw_budget = false;
  Weight default_weight = 0;
  std::vector<std::pair<VertexPair, Weight>> overrides;
  std::set<VertexPair> override_seen;
  for (; index < lines.size(); ++index) {
    const auto& line = lines[index];
    const std::string& tag = line.tokens[0];
    if (tag == "wdefault") {
      detail::expect_arity(line, 2);
      if (saw_default) throw ParseError(line.number, "repeated 'wdefault'");
      saw_default = true;
      default_weight = detail::parse_weight_field(line, 1, "weight");
    } else if (tag == "w") {
      detail::expect_arity(line, 4);
      long long u = detail::parse_count(line, 1, "vertex");
      long long v = detail::parse_count(line, 2, "vertex");
      Weight value = detail::parse_weight_field(line, 3, "weight");
      if (u >= v) throw ParseError(line.number, "weight override needs u < v");
      if (v >= inst.g.n()) throw ParseError(line.number, "vertex out of range");
      VertexPair pair{static_cast<Vertex>(u), static_cast<Vertex>(v)};
      if (!override_seen.insert(pair).second)
        throw ParseError(line.number, "duplicate weight override");
      overrides.emplace_back(pair, value);
    } else if (tag == "budget") {
      detail::expect_arity(line, 2);
      if (saw_budget) throw ParseError(line.number, "repeated 'budget'");
      saw_budget = true;
      inst.budget = detail::parse_weight_field(line, 1, "budget");
    } else {
      throw ParseError(line.number, "unknown directive '" + tag + "'");
    }
  }
  inst.omega = WeightFn(default_weight);
  for (const auto& [pair, value] : overrides) inst.omega.set(pair.first, pair.second, value);
  return inst;
}

// Canonical form: 'wdefault' is always written, overrides are sorted, and
// 'budget' appears only when the instance carries one.  serialize ∘ parse is
// the identity on canonical text, and parse ∘ serialize is the identity on
// instances.
inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "k " << inst.k << "\n";
  out << "g " << inst.g.n() << " " << inst.g.edges().size() << "\n";
  for (const auto& [u, v] : inst.g.edges()) out << u << " " << v << "\n";
  out << "h " << inst.h.n() << " " << inst.h.edges().size() << "\n";
  for (const auto& [u, v] : inst.h.edges()) out << u << " " << v << "\n";
  out << "wdefault " << inst.omega.default_weight() << "\n";
  for (const auto& [pair, value] : inst.omega.overrides())
    out << "w " << pair.first << " " << pair.second << " " << value << "\n";
  if (inst.budget) out << "budget " << *inst.budget << "\n";
  return out.str();
}

inline Solution parse_solution(const std::string& text) {
  auto lines = detail::token_lines(text);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::set<Vertex> sources;
  std::set<Vertex> images;
  std::optional<Weight> weight;
  for (const auto& line : lines) {
    const std::string& tag = line.tokens[0];
    if (tag == "map") {
      if (weight) throw ParseError(line.number, "'map' after the 'weight' line");
      detail::expect_arity(line, 3);
      long long from = detail::parse_count(line, 1, "vertex");
      long long to = detail::parse_count(line, 2, "vertex");
      if (!sources.insert(static_cast<Vertex>(from)).second)
        throw ParseError(line.number, "vertex mapped twice");
      if (!images.insert(static_cast<Vertex>(to)).second)
        throw ParseError(line.number, "not injective");
      pairs.emplace_back(static_cast<Vertex>(from), static_cast<Vertex>(to));
    } else if (tag == "weight") {
      if (weight) throw ParseError(line.number, "repeated 'weight'");
      detail::expect_arity(line, 2);
      weight = detail::parse_weight_field(line, 1, "weight");
    } else {
      throw ParseError(line.number, "unknown directive '" + tag + "'");
    }
  }
  if (!weight) {
    int at = lines.empty() ? 1 : lines.back().number;
    throw ParseError(at, "missing trailing 'weight' line");
  }
  return Solution{Mapping(std::move(pairs)), *weight};
}

inline std::string serialize_solution(const Solution& sol) {
  std::ostringstream out;
  for (const auto& [from, to] : sol.phi.pairs()) out << "map " << from << " " << to << "\n";
  out << "weight " << sol.weight << "\n";
  return out.str();
}

}  // namespace sca
