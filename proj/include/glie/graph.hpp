#ifndef GLIE_GRAPH_HPP
#define GLIE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glie {

struct Edge {
  std::size_t source;
  std::size_t target;
  std::size_t label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled directed graph (V, E, c). Vertices and labels are kept in first
/// appearance order; edges refer to them by index. The labeling is surjective
/// when every entry of `labels` is used by some edge.
///
/// The struct itself does not enforce the simple-graph invariants so that
/// hand-built graphs can be inspected by validate(); parse_graph() and
/// generate_family() only ever produce valid graphs.
struct LabeledDigraph {
  std::vector<std::string> vertices;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  std::optional<std::size_t> vertex_index(std::string_view name) const;
  std::optional<std::size_t> label_index(std::string_view name) const;

  /// Returns the index, appending the vertex if it is new.
  std::size_t add_vertex(std::string_view name);
  std::size_t add_label(std::string_view name);
  /// Unchecked append (declares endpoints and label as needed).
  void add_edge(std::string_view source, std::string_view target, std::string_view label);

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t label_count() const { return labels.size(); }

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

/// Rejection raised by parse_graph. `rule` is one of "syntax", "self-loop",
/// "duplicate-edge", "antiparallel-edge"; line and column are 1-based.
class GraphError : public std::runtime_error {
 public:
  GraphError(std::string rule, std::size_t line, std::size_t column, const std::string& message);

  const std::string& rule() const { return rule_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string rule_;
  std::size_t line_;
  std::size_t column_;
};

/// Grammar, one statement per line (';' also separates statements, '#'
/// starts a comment):
///
///     IDENT                      vertex declaration
///     IDENT -> IDENT : IDENT     edge source -> target : label
///
/// IDENT = [A-Za-z_][A-Za-z0-9_]*. Any violation rejects the whole input.
LabeledDigraph parse_graph(std::string_view text);

/// Canonical text form. Bare vertex lines are emitted (all of them, first)
/// only when the edge list alone would not reproduce the vertex order.
std::string render_graph(const LabeledDigraph& g);

struct Violation {
  std::string rule;
  std::string message;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t label_count = 0;
  std::vector<std::size_t> degrees;
  bool connected = true;
  bool satisfies_h = false;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Conditions accepted but flagged: "edgeless", "isolated-vertex".
  std::vector<Violation> warnings;
  GraphStats stats;
};

/// Never throws. `ok` holds iff no invariant of LabeledDigraph is violated.
ValidationReport validate(const LabeledDigraph& g);

struct VertexStats {
  std::size_t degree = 0;
  std::vector<std::string> neighbors;
  std::vector<std::string> incident_labels;
};

/// Neighbourhood on the underlying undirected graph, in vertex order. Throws
/// std::out_of_range for an unknown vertex.
VertexStats vertex_stats(const LabeledDigraph& g, std::string_view vertex);

struct Neighbor {
  std::size_t vertex;
  std::size_t label;
  /// +1 when the edge points away from the queried vertex, -1 otherwise.
  int orientation;
};

/// Index-level neighbourhood, sorted by neighbour index.
std::vector<Neighbor> neighbors(const LabeledDigraph& g, std::size_t vertex);
std::size_t degree(const LabeledDigraph& g, std::size_t vertex);
bool is_connected(const LabeledDigraph& g);

enum class Family { Complete, Path, Cycle, StarSameLabel, Random };

Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Deterministic generators. complete/path/cycle label every edge distinctly;
/// star-same-label(n) is a center "v" joined to w1..wn by edges sharing the
/// label "c"; random(n) is a connected graph with distinct labels (random
/// spanning tree plus each remaining pair with probability 1/2, random
/// orientation) and requires a seed. Throws std::invalid_argument when n is
/// out of range for the family.
LabeledDigraph generate_family(Family family, std::size_t n, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace glie

#endif
