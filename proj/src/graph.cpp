#include "listcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "listcolor/text_format.hpp"

namespace lc {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adjacency_.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

Graph build_graph(int vertex_count, const std::vector<Edge>& edges) {
  return Graph(vertex_count, edges);
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<Vertex>& sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw std::out_of_range("vertex " + std::to_string(s) + " out of range");
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> shortest_path_distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  int d = bfs_distances(g, {u})[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<int> subgraph_distance(const Graph& g, const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
  auto dist = bfs_distances(g, a);
  std::optional<int> best;
  for (Vertex v : b) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (dist[v] != kUnreachable && (!best || dist[v] < *best)) best = dist[v];
  }
  return best;
}

FourCycle canonical_cycle(const FourCycle& cycle) {
  FourCycle best = cycle;
  for (int start = 0; start < 4; ++start) {
    FourCycle fwd{}, rev{};
    for (int i = 0; i < 4; ++i) {
      fwd[i] = cycle[(start + i) % 4];
      rev[i] = cycle[(start - i + 4) % 4];
    }
    best = std::min({best, fwd, rev});
  }
  return best;
}

CycleList enumerate_4cycles(const Graph& g) {
  // Root each cycle at its least vertex a; the b < d condition picks one of
  // the two traversal directions, so each cycle is produced once, canonical.
  CycleList cycles;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d <= b || d == c) continue;
          if (g.adjacent(d, a)) cycles.push_back({a, b, c, d});
        }
      }
    }
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<bool> four_cycle_membership(const Graph& g, const CycleList& cycles) {
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (const auto& cycle : cycles) {
    for (Vertex v : cycle) on_cycle.at(v) = true;
  }
  return on_cycle;
}

std::optional<CyclePairDistance> min_pairwise_4cycle_distance(const Graph& g) {
  CycleList cycles = enumerate_4cycles(g);
  if (cycles.size() < 2) return std::nullopt;
  std::optional<CyclePairDistance> best;
  auto better = [](const std::optional<int>& lhs, const std::optional<int>& rhs) {
    if (!lhs) return false;
    return !rhs || *lhs < *rhs;
  };
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::vector<Vertex> sources(cycles[i].begin(), cycles[i].end());
    auto dist = bfs_distances(g, sources);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      std::optional<int> d;
      for (Vertex v : cycles[j]) {
        if (dist[v] != kUnreachable && (!d || dist[v] < *d)) d = dist[v];
      }
      if (!best || better(d, best->distance)) best = CyclePairDistance{cycles[i], cycles[j], d};
      if (best->distance == 0) return best;
    }
  }
  return best;
}

HypothesisVerdict validate_hypothesis(const Graph& g, int distance) {
  HypothesisVerdict verdict;
  verdict.required_distance = distance;
  verdict.cycle_count = enumerate_4cycles(g).size();
  verdict.closest = min_pairwise_4cycle_distance(g);
  if (verdict.closest && verdict.closest->distance) {
    verdict.satisfied = *verdict.closest->distance >= distance;
  }
  return verdict;
}

Graph parse_graph(std::string_view text) {
  std::optional<int> vertex_count;
  std::vector<Edge> edges;
  for (const auto& line : tokenize(text)) {
    const std::string& key = line.tokens.front();
    if (key == "vertices") {
      expect_token_count(line, 2);
      if (vertex_count) throw ParseError(line.number, "duplicate 'vertices' line");
      vertex_count = parse_int(line, 1);
      if (*vertex_count < 0) throw ParseError(line.number, "vertex count must be nonnegative");
    } else if (key == "edge") {
      expect_token_count(line, 3);
      if (!vertex_count) throw ParseError(line.number, "'edge' before 'vertices'");
      int u = parse_int(line, 1), v = parse_int(line, 2);
      if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= *vertex_count || v >= *vertex_count) {
        throw ParseError(line.number, "edge endpoint out of range");
      }
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!vertex_count) throw ParseError(1, "missing 'vertices' line");
  return Graph(*vertex_count, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

std::string format_cycle(const FourCycle& cycle) {
  return "[" + std::to_string(cycle[0]) + "," + std::to_string(cycle[1]) + "," +
         std::to_string(cycle[2]) + "," + std::to_string(cycle[3]) + "]";
}

}  // namespace lc
