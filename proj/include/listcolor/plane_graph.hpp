#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "listcolor/graph.hpp"

namespace lc {

// Combinatorial embedding: rotation[v] lists v's neighbours in clockwise order.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Throws std::invalid_argument unless the adjacency is symmetric, simple and
  // loop-free.
  explicit PlaneGraph(std::vector<std::vector<Vertex>> rotation);

  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  int edge_count() const noexcept { return graph_.edge_count(); }
  int degree(Vertex v) const { return static_cast<int>(rotation_.at(v).size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotation_; }
  const Graph& graph() const noexcept { return graph_; }

  // Neighbour following `from` in the rotation at `at`.
  Vertex successor(Vertex at, Vertex from) const;

  bool connected() const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.rotation_ == b.rotation_;
  }

 private:
  std::vector<std::vector<Vertex>> rotation_;
  Graph graph_;
};

struct Face {
  // Closed walk: boundary[i] -> boundary[i + 1 mod d]. A bridge contributes
  // both of its directions, so a vertex may repeat.
  std::vector<Vertex> boundary;
  int degree() const noexcept { return static_cast<int>(boundary.size()); }
};

// Face tracing: the directed edge u -> v is followed by v -> successor(v, u).
// Faces are numbered in order of their least directed edge (tail, head), and
// each boundary starts at that edge. An edgeless single vertex yields one
// face of degree 0.
std::vector<Face> trace_faces(const PlaneGraph& pg);

// `vertices <n>` then `rotation <v>: <u1> ... <uk>` per vertex.
PlaneGraph parse_plane_graph(std::string_view text);
std::string format_plane_graph(const PlaneGraph& pg);

}  // namespace lc
