#include "semiproper/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace semiproper {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge " + std::to_string(e) + " has an out-of-range endpoint");
    if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw std::invalid_argument("edge " + std::to_string(e) + " is a duplicate");
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const { return find_edge(a, b) >= 0; }

EdgeId Graph::find_edge(Vertex a, Vertex b) const {
  const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  for (const auto& inc : list)
    if (inc.neighbor == target) return inc.edge;
  return -1;
}

Graph Graph::edge_subgraph(std::span<const EdgeId> edge_ids,
                           std::vector<Vertex>* local_to_global) const {
  std::vector<Vertex> verts;
  for (EdgeId e : edge_ids) {
    verts.push_back(edges_[e].u);
    verts.push_back(edges_[e].v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  std::vector<Edge> sub;
  sub.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) sub.push_back({local(edges_[e].u), local(edges_[e].v)});
  Graph out(static_cast<int>(verts.size()), std::move(sub));
  if (local_to_global) *local_to_global = std::move(verts);
  return out;
}

namespace {

// Splits text into lines (LF separated) and parses whitespace-separated
// non-negative integers. A single trailing empty line is tolerated.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view* line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    *line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_no_;
    return true;
  }
  int line_no() const { return line_no_; }

  /// Reads exactly `count` integers from the line.
  std::vector<std::int64_t> ints(std::string_view line, std::size_t count) const {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (true) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value < 0)
        throw ParseError(line_no_, "expected a non-negative integer, got '" +
                                       std::string(line.substr(i)) + "'");
      out.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
        throw ParseError(line_no_, "unexpected character '" + std::string(1, line[i]) + "'");
    }
    if (out.size() != count)
      throw ParseError(line_no_, "expected " + std::to_string(count) + " fields, got " +
                                     std::to_string(out.size()));
    return out;
  }

  void expect_end() {
    std::string_view line;
    while (next(&line)) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos)
        throw ParseError(line_no_, "unexpected trailing content");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

constexpr std::int64_t kMaxVertices = 1 << 28;

std::pair<int, int> read_header(LineReader& reader) {
  std::string_view line;
  if (!reader.next(&line)) throw ParseError(1, "missing header");
  auto header = reader.ints(line, 2);
  if (header[0] > kMaxVertices || header[1] > kMaxVertices)
    throw ParseError(reader.line_no(), "header counts too large");
  return {static_cast<int>(header[0]), static_cast<int>(header[1])};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader reader(text);
  auto [n, m] = read_header(reader);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::string_view line;
  for (int i = 0; i < m; ++i) {
    if (!reader.next(&line))
      throw ParseError(reader.line_no() + 1, "expected " + std::to_string(m) + " edges, got " +
                                                 std::to_string(i));
    auto f = reader.ints(line, 2);
    if (f[0] >= n || f[1] >= n) throw ParseError(reader.line_no(), "endpoint out of range");
    auto u = static_cast<Vertex>(f[0]);
    auto v = static_cast<Vertex>(f[1]);
    if (u == v) throw ParseError(reader.line_no(), "self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError(reader.line_no(),
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({u, v});
  }
  reader.expect_end();
  return Graph(n, std::move(edges));
}

Graph canonical(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return Graph(g.vertex_count(), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  Graph c = canonical(g);
  std::string out = std::to_string(c.vertex_count()) + " " + std::to_string(c.edge_count()) + "\n";
  for (const auto& e : c.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

int max_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("max_degree of the empty graph");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Orientation::Orientation(const Graph& g, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)), in_weight_(g.vertex_count(), 0) {
  if (static_cast<int>(arcs_.size()) != g.edge_count())
    throw std::invalid_argument("orientation has " + std::to_string(arcs_.size()) +
                                " arcs for " + std::to_string(g.edge_count()) + " edges");
  std::int64_t arc_sum = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Arc& a = arcs_[e];
    const Edge& edge = g.edge(e);
    bool matches = (a.tail == edge.u && a.head == edge.v) || (a.tail == edge.v && a.head == edge.u);
    if (!matches) throw std::invalid_argument("arc " + std::to_string(e) + " does not orient edge " + std::to_string(e));
    if (a.weight <= 0) throw std::invalid_argument("arc " + std::to_string(e) + " has non-positive weight");
    in_weight_[a.head] += a.weight;
    arc_sum += a.weight;
  }
  std::int64_t in_sum = 0;
  for (auto w : in_weight_) {
    in_sum += w;
    mu_ = std::max(mu_, w);
  }
  if (in_sum != arc_sum) throw std::logic_error("in-weight sum does not match arc weight sum");
}

std::int64_t Orientation::total_weight() const {
  std::int64_t s = 0;
  for (const auto& a : arcs_) s += a.weight;
  return s;
}

RawOrientation parse_raw_orientation(std::string_view text) {
  LineReader reader(text);
  auto [n, m] = read_header(reader);
  RawOrientation raw;
  raw.vertex_count = n;
  std::string_view line;
  for (int i = 0; i < m; ++i) {
    if (!reader.next(&line))
      throw ParseError(reader.line_no() + 1, "expected " + std::to_string(m) + " arcs, got " +
                                                 std::to_string(i));
    auto f = reader.ints(line, 3);
    if (f[0] >= n || f[1] >= n) throw ParseError(reader.line_no(), "endpoint out of range");
    if (f[2] == 0) throw ParseError(reader.line_no(), "arc weight must be positive");
    raw.arcs.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), f[2]});
  }
  reader.expect_end();
  return raw;
}

Orientation parse_orientation(std::string_view text, const Graph& g) {
  RawOrientation raw = parse_raw_orientation(text);
  if (raw.vertex_count != g.vertex_count())
    throw ParseError(1, "vertex count " + std::to_string(raw.vertex_count) +
                            " does not match graph (" + std::to_string(g.vertex_count()) + ")");
  if (static_cast<int>(raw.arcs.size()) != g.edge_count())
    throw ParseError(1, "arc count does not match graph edge count");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Arc& a = raw.arcs[e];
    const Edge& edge = g.edge(e);
    if (!((a.tail == edge.u && a.head == edge.v) || (a.tail == edge.v && a.head == edge.u)))
      throw ParseError(e + 2, "arc does not orient graph edge " + std::to_string(e));
  }
  return Orientation(g, std::move(raw.arcs));
}

std::string serialize_orientation(const Orientation& o) {
  std::string out = std::to_string(o.vertex_count()) + " " + std::to_string(o.arcs().size()) + "\n";
  for (const auto& a : o.arcs())
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + " " + std::to_string(a.weight) + "\n";
  return out;
}

}  // namespace semiproper
