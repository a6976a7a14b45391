#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semiproper {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown for malformed graph or orientation text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are positions in the
/// edge list; they are stable and used by Orientation to address arcs.
class Graph {
 public:
  struct Incidence {
    Vertex neighbor;
    EdgeId edge;
  };

  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or bad endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> incident(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  /// Edge id joining a and b, or -1.
  EdgeId find_edge(Vertex a, Vertex b) const;

  /// Subgraph induced by the given edge ids, with vertices relabelled densely
  /// in increasing order of their id in this graph. `local_to_global` receives
  /// the mapping.
  Graph edge_subgraph(std::span<const EdgeId> edge_ids, std::vector<Vertex>* local_to_global) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Edge-list text: "n m" header followed by m "u v" lines.
Graph parse_graph(std::string_view text);
/// Canonical form: endpoints ordered u < v, edges sorted lexicographically.
std::string serialize_graph(const Graph& g);
/// Graph with the same vertex set whose edge list is in canonical order.
Graph canonical(const Graph& g);

/// Δ(G). Throws std::invalid_argument for the empty graph.
int max_degree(const Graph& g);

struct Arc {
  Vertex tail;
  Vertex head;
  std::int64_t weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A weighted orientation of a graph: one arc per edge, in edge-id order,
/// with the derived in-weights and their maximum.
class Orientation {
 public:
  Orientation() = default;
  /// arcs[i] must orient graph edge i and carry a positive weight; throws
  /// std::invalid_argument otherwise.
  Orientation(const Graph& g, std::vector<Arc> arcs);

  int vertex_count() const { return static_cast<int>(in_weight_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  std::int64_t in_weight(Vertex v) const { return in_weight_[v]; }
  const std::vector<std::int64_t>& in_weights() const { return in_weight_; }
  std::int64_t mu() const { return mu_; }
  std::int64_t total_weight() const;

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.arcs_ == b.arcs_; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> in_weight_;
  std::int64_t mu_ = 0;
};

/// Orientation text: "n m" header followed by m "u v w" lines meaning u->v
/// with weight w, in the edge order of `g`.
Orientation parse_orientation(std::string_view text, const Graph& g);
std::string serialize_orientation(const Orientation& o);

/// Unvalidated arc list from orientation text; used by the validator so that
/// structural mismatches can be reported rather than thrown.
struct RawOrientation {
  int vertex_count = 0;
  std::vector<Arc> arcs;
};
RawOrientation parse_raw_orientation(std::string_view text);

}  // namespace semiproper
