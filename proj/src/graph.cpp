#include "glie/graph.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <utility>

namespace glie {

std::optional<std::size_t> LabeledDigraph::vertex_index(std::string_view name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> LabeledDigraph::label_index(std::string_view name) const {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t LabeledDigraph::add_vertex(std::string_view name) {
  if (auto idx = vertex_index(name)) return *idx;
  vertices.emplace_back(name);
  return vertices.size() - 1;
}

std::size_t LabeledDigraph::add_label(std::string_view name) {
  if (auto idx = label_index(name)) return *idx;
  labels.emplace_back(name);
  return labels.size() - 1;
}

void LabeledDigraph::add_edge(std::string_view source, std::string_view target, std::string_view label) {
  const auto s = add_vertex(source);
  const auto t = add_vertex(target);
  edges.push_back({s, t, add_label(label)});
}

GraphError::GraphError(std::string rule, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(rule + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      rule_(std::move(rule)),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Arrow, Colon } kind;
  std::string text;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Tokenizes one statement; `offset` is the 0-based column of stmt[0].
std::vector<Token> tokenize(std::string_view stmt, std::size_t line, std::size_t offset) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < stmt.size()) {
    const char c = stmt[i];
    const std::size_t column = offset + i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < stmt.size() && ident_char(stmt[j])) ++j;
      tokens.push_back({Token::Ident, std::string(stmt.substr(i, j - i)), column});
      i = j;
    } else if (c == '-' && i + 1 < stmt.size() && stmt[i + 1] == '>') {
      tokens.push_back({Token::Arrow, "->", column});
      i += 2;
    } else if (c == ':') {
      tokens.push_back({Token::Colon, ":", column});
      ++i;
    } else {
      throw GraphError("syntax", line, column, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

}  // namespace

LabeledDigraph parse_graph(std::string_view text) {
  LabeledDigraph g;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t start = 0;
    while (start <= line.size()) {
      const auto semi = line.find(';', start);
      const auto stmt = line.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      const auto tokens = tokenize(stmt, line_no, start);
      start = semi == std::string_view::npos ? line.size() + 1 : semi + 1;
      if (tokens.empty()) continue;

      if (tokens.size() == 1 && tokens[0].kind == Token::Ident) {
        g.add_vertex(tokens[0].text);
        continue;
      }
      const bool edge_shape = tokens.size() == 5 && tokens[0].kind == Token::Ident &&
                              tokens[1].kind == Token::Arrow && tokens[2].kind == Token::Ident &&
                              tokens[3].kind == Token::Colon && tokens[4].kind == Token::Ident;
      if (!edge_shape) {
        const auto& bad = tokens.size() > 1 ? tokens[1] : tokens[0];
        throw GraphError("syntax", line_no, bad.column,
                         "expected 'IDENT' or 'IDENT -> IDENT : IDENT', got '" + bad.text + "'");
      }
      const auto& src = tokens[0].text;
      const auto& dst = tokens[2].text;
      if (src == dst) throw GraphError("self-loop", line_no, tokens[0].column, "edge " + src + " -> " + dst);

      const auto s = g.add_vertex(src);
      const auto t = g.add_vertex(dst);
      if (seen.count({s, t}))
        throw GraphError("duplicate-edge", line_no, tokens[0].column, "edge " + src + " -> " + dst + " repeated");
      if (seen.count({t, s}))
        throw GraphError("antiparallel-edge", line_no, tokens[0].column,
                         "edge " + src + " -> " + dst + " reverses an existing edge");
      seen.insert({s, t});
      g.edges.push_back({s, t, g.add_label(tokens[4].text)});
    }
  }
  return g;
}

std::string render_graph(const LabeledDigraph& g) {
  std::vector<std::string> implied;
  for (const auto& e : g.edges)
    for (auto v : {e.source, e.target})
      if (std::find(implied.begin(), implied.end(), g.vertices[v]) == implied.end())
        implied.push_back(g.vertices[v]);

  std::string out;
  if (implied != g.vertices)
    for (const auto& v : g.vertices) out += v + "\n";
  for (const auto& e : g.edges)
    out += g.vertices[e.source] + " -> " + g.vertices[e.target] + " : " + g.labels[e.label] + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Queries

std::vector<Neighbor> neighbors(const LabeledDigraph& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
  std::vector<Neighbor> out;
  for (const auto& e : g.edges) {
    if (e.source == vertex) out.push_back({e.target, e.label, +1});
    if (e.target == vertex) out.push_back({e.source, e.label, -1});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return out;
}

std::size_t degree(const LabeledDigraph& g, std::size_t vertex) { return neighbors(g, vertex).size(); }

bool is_connected(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges) {
    if (e.source >= n || e.target >= n) continue;
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

VertexStats vertex_stats(const LabeledDigraph& g, std::string_view vertex) {
  const auto idx = g.vertex_index(vertex);
  if (!idx) throw std::out_of_range("unknown vertex '" + std::string(vertex) + "'");
  VertexStats stats;
  for (const auto& nb : neighbors(g, *idx)) {
    stats.neighbors.push_back(g.vertices[nb.vertex]);
    stats.incident_labels.push_back(g.labels[nb.label]);
  }
  stats.degree = stats.neighbors.size();
  return stats;
}

ValidationReport validate(const LabeledDigraph& g) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  auto violation = [&](std::string rule, std::string message) {
    report.violations.push_back({std::move(rule), std::move(message)});
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.vertices[i] == g.vertices[j]) violation("duplicate-vertex", "vertex '" + g.vertices[i] + "' declared twice");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<bool> label_used(g.label_count(), false);
  bool indices_ok = true;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.source >= n || e.target >= n || e.label >= g.label_count()) {
      violation("dangling-edge", "edge #" + std::to_string(k) + " refers to an unknown vertex or label");
      indices_ok = false;
      continue;
    }
    label_used[e.label] = true;
    const auto name = g.vertices[e.source] + " -> " + g.vertices[e.target];
    if (e.source == e.target) violation("self-loop", "edge " + name);
    if (seen.count({e.source, e.target})) violation("duplicate-edge", "edge " + name + " repeated");
    if (seen.count({e.target, e.source})) violation("antiparallel-edge", "edge " + name + " reverses an existing edge");
    seen.insert({e.source, e.target});
  }
  for (std::size_t l = 0; l < g.label_count(); ++l)
    if (!label_used[l]) violation("unused-label", "label '" + g.labels[l] + "' is not carried by any edge");
  report.ok = report.violations.empty();

  auto& stats = report.stats;
  stats.vertex_count = n;
  stats.edge_count = g.edge_count();
  stats.label_count = g.label_count();
  stats.satisfies_h = g.label_count() == g.edge_count();
  if (indices_ok) {
    stats.connected = is_connected(g);
    for (std::size_t v = 0; v < n; ++v) {
      stats.degrees.push_back(degree(g, v));
      if (stats.degrees.back() == 0 && n > 1)
        report.warnings.push_back({"isolated-vertex", "vertex '" + g.vertices[v] + "' has no incident edge"});
    }
  } else {
    stats.connected = false;
  }
  if (g.edges.empty()) report.warnings.insert(report.warnings.begin(), {"edgeless", "graph has no edges"});
  return report;
}

// ---------------------------------------------------------------------------
// Generators

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::Complete;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star-same-label") return Family::StarSameLabel;
  if (name == "random") return Family::Random;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Complete: return "complete";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::StarSameLabel: return "star-same-label";
    case Family::Random: return "random";
  }
  return "unknown";
}

LabeledDigraph generate_family(Family family, std::size_t n, std::optional<std::uint64_t> seed) {
  const std::size_t min_n = family == Family::Cycle ? 3 : family == Family::StarSameLabel ? 2 : 1;
  if (n < min_n)
    throw std::invalid_argument(std::string(family_name(family)) + " needs n >= " + std::to_string(min_n));
  if (family == Family::Random && !seed) throw std::invalid_argument("random family needs a seed");

  LabeledDigraph g;
  auto x = [](std::size_t i) { return "x" + std::to_string(i + 1); };
  auto next_label = [&g] { return "e" + std::to_string(g.edges.size() + 1); };

  switch (family) {
    case Family::Complete:
      for (std::size_t i = 0; i < n; ++i) g.add_vertex(x(i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(x(i), x(j), next_label());
      break;
    case Family::Path:
      g.add_vertex(x(0));
      for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(x(i), x(i + 1), next_label());
      break;
    case Family::Cycle:
      for (std::size_t i = 0; i < n; ++i) g.add_edge(x(i), x((i + 1) % n), next_label());
      break;
    case Family::StarSameLabel:
      for (std::size_t i = 0; i < n; ++i) g.add_edge("v", "w" + std::to_string(i + 1), "c");
      break;
    case Family::Random: {
      // Raw engine output only: std distributions are not portable.
      std::mt19937_64 rng(*seed);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::set<std::pair<std::size_t, std::size_t>> tree;
      for (std::size_t i = 1; i < n; ++i) tree.insert({rng() % i, i});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (tree.count({i, j}) || (rng() & 1U)) pairs.emplace_back(i, j);
      for (std::size_t i = 0; i < n; ++i) g.add_vertex(x(i));
      for (auto [i, j] : pairs) {
        if (rng() & 1U) std::swap(i, j);
        g.add_edge(x(i), x(j), next_label());
      }
      break;
    }
  }
  return g;
}

}  // namespace glie
