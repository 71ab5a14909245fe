#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lc {

using Vertex = int;
// Undirected edge; Graph stores each with first < second.
using Edge = std::pair<Vertex, Vertex>;

// Simple finite undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Duplicate edges (in either orientation) collapse to one. Throws
  // std::invalid_argument on a loop and std::out_of_range on a bad endpoint.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

Graph build_graph(int vertex_count, const std::vector<Edge>& edges);

inline constexpr int kUnreachable = -1;

// Breadth-first distances from a set of sources; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, const std::vector<Vertex>& sources);

// nullopt when u and v lie in different components.
std::optional<int> shortest_path_distance(const Graph& g, Vertex u, Vertex v);

// Minimum distance between any vertex of `a` and any vertex of `b`; 0 when
// they share a vertex, nullopt when no pair is connected.
std::optional<int> subgraph_distance(const Graph& g, const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b);

using FourCycle = std::array<Vertex, 4>;
// Canonical 4-cycles, sorted, no duplicates.
using CycleList = std::vector<FourCycle>;

// Lexicographically least of the 8 rotations/reflections.
FourCycle canonical_cycle(const FourCycle& cycle);

CycleList enumerate_4cycles(const Graph& g);

// Vertices that lie on at least one 4-cycle.
std::vector<bool> four_cycle_membership(const Graph& g, const CycleList& cycles);

struct CyclePairDistance {
  FourCycle first{};
  FourCycle second{};
  std::optional<int> distance;  // nullopt: in different components
};

// Closest pair of distinct 4-cycles; nullopt when fewer than two exist.
std::optional<CyclePairDistance> min_pairwise_4cycle_distance(const Graph& g);

struct HypothesisVerdict {
  bool satisfied = true;
  int required_distance = 5;
  std::size_t cycle_count = 0;
  // Set whenever two or more 4-cycles exist; on violation this is the
  // witnessing pair.
  std::optional<CyclePairDistance> closest;
};

// Whether every two 4-cycles of g are at distance at least `distance`.
HypothesisVerdict validate_hypothesis(const Graph& g, int distance = 5);

// `vertices <n>` followed by `edge <u> <v>` lines.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

std::string format_cycle(const FourCycle& cycle);

}  // namespace lc
