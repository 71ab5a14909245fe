#pragma once

// Test-only builders and brute-force oracles. Nothing here calls the code
// paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/plane_graph.hpp"

namespace lc::testing {

using Point = std::array<double, 3>;

// Rotation of a convex polyhedron: neighbours sorted by angle about the
// outward normal at each vertex (positions centred at the origin).
inline PlaneGraph convex_polyhedron(const std::vector<Point>& pos, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<Vertex>> nbrs(n);
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) {
    const Point& p = pos[v];
    double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    Point nrm{p[0] / len, p[1] / len, p[2] / len};
    // Tangent frame (e1, e2) with e1 x e2 = nrm.
    Point helper = std::abs(nrm[0]) < 0.9 ? Point{1, 0, 0} : Point{0, 1, 0};
    auto cross = [](const Point& a, const Point& b) {
      return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    Point e1 = cross(helper, nrm);
    Point e2 = cross(nrm, e1);
    std::vector<std::pair<double, Vertex>> angles;
    for (Vertex w : nbrs[v]) {
      Point d{pos[w][0] - p[0], pos[w][1] - p[1], pos[w][2] - p[2]};
      double x = d[0] * e1[0] + d[1] * e1[1] + d[2] * e1[2];
      double y = d[0] * e2[0] + d[1] * e2[1] + d[2] * e2[2];
      angles.emplace_back(-std::atan2(y, x), w);  // clockwise seen from outside
    }
    std::sort(angles.begin(), angles.end());
    for (auto& [_, w] : angles) rotation[v].push_back(w);
  }
  return PlaneGraph(rotation);
}

// Edges joining points at the given squared distance.
inline std::vector<Edge> edges_at_distance(const std::vector<Point>& pos, double squared) {
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(pos.size()); ++j) {
      double d = 0;
      for (int k = 0; k < 3; ++k) d += (pos[i][k] - pos[j][k]) * (pos[i][k] - pos[j][k]);
      if (std::abs(d - squared) < 1e-9) edges.emplace_back(i, j);
    }
  }
  return edges;
}

inline PlaneGraph tetrahedron() {
  std::vector<Point> pos{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return convex_polyhedron(pos, edges_at_distance(pos, 8));
}

// Vertex i has coordinates given by its bits: x = bit 0, y = bit 1, z = bit 2.
inline PlaneGraph cube() {
  std::vector<Point> pos;
  for (int i = 0; i < 8; ++i) {
    pos.push_back({(i & 1) ? 1.0 : -1.0, (i & 2) ? 1.0 : -1.0, (i & 4) ? 1.0 : -1.0});
  }
  return convex_polyhedron(pos, edges_at_distance(pos, 4));
}

inline PlaneGraph icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point> pos;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      pos.push_back({0, a, b});
      pos.push_back({a, b, 0});
      pos.push_back({b, 0, a});
    }
  }
  return convex_polyhedron(pos, edges_at_distance(pos, 4));
}

// Builds the rotation system whose traced faces are exactly `faces`. Each
// face lists its boundary in tracing order: consecutive u, v, w mean the
// successor of u at v is w.
inline PlaneGraph from_faces(int n, const std::vector<std::vector<Vertex>>& faces) {
  std::vector<std::map<Vertex, Vertex>> succ(n);
  for (const auto& f : faces) {
    const std::size_t d = f.size();
    for (std::size_t i = 0; i < d; ++i) {
      Vertex u = f[i], v = f[(i + 1) % d], w = f[(i + 2) % d];
      if (!succ[v].emplace(u, w).second) throw std::logic_error("corner listed twice");
    }
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    Vertex start = succ[v].begin()->first, cur = start;
    do {
      rotation[v].push_back(cur);
      cur = succ[v].at(cur);
    } while (cur != start);
    if (rotation[v].size() != succ[v].size()) throw std::logic_error("corners do not form one cycle");
  }
  return PlaneGraph(rotation);
}

// Central 6-vertex 0 on a wheel a0..a5 (vertices 1..6). Each of the rim edges
// a0a1, a2a3, a4a5 borders a 5-face of 4-vertices (a, a', p, q, r); the rest
// of the graph pads degrees through a hub. Exactly three triangles at vertex 0
// have their opposite edge on a bad 5-face.
inline PlaneGraph zeta_three_example() {
  auto a = [](int i) { return 1 + (i % 6); };
  auto p = [](int j) { return 7 + 3 * j; };
  auto q = [](int j) { return 8 + 3 * j; };
  auto r = [](int j) { return 9 + 3 * j; };
  const int hub = 16;
  auto w = [](int j) { return 17 + j; };
  auto z = [](int j) { return 20 + j; };
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < 6; ++i) faces.push_back({0, a(i), a(i + 1)});
  for (int j = 0; j < 3; ++j) {
    faces.push_back({a(2 * j + 1), a(2 * j), r(j), q(j), p(j)});  // bad 5-face
    faces.push_back({hub, p(j), w(j)});
    faces.push_back({p(j), q(j), w(j)});
    faces.push_back({q(j), hub, w(j)});
    faces.push_back({hub, q(j), r(j), z(j)});
    faces.push_back({r(j), hub, z(j)});
    // Outer face between p_j and r_{j+1}, passing the unmarked rim edge.
    faces.push_back({hub, r((j + 1) % 3), a(2 * j + 2), a(2 * j + 1), p(j)});
  }
  return from_faces(23, faces);
}

// Central L-face 0..L-1 whose vertices each carry a fan of m outer
// neighbours (m - 1 triangles); consecutive fans meet in 4-faces and one
// outer face closes the drawing. Inner vertices get degree m + 2.
inline PlaneGraph ringed_polygon(int L, int m) {
  auto outer = [&](int i, int k) { return L + ((i % L + L) % L) * m + k; };
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> centre, rim;
  for (int i = 0; i < L; ++i) centre.push_back(i);
  faces.push_back(centre);
  for (int i = 0; i < L; ++i) {
    const int next = (i + 1) % L;
    faces.push_back({next, i, outer(i, 0), outer(next, m - 1)});
    for (int k = 0; k + 1 < m; ++k) faces.push_back({outer(i, k), i, outer(i, k + 1)});
  }
  for (int i = L - 1; i >= 0; --i) {
    for (int k = 0; k < m; ++k) rim.push_back(outer(i, k));
  }
  faces.push_back(rim);
  return from_faces(L + L * m, faces);
}

// Pentagon 0..4 with an ear vertex 5 + i on every edge i(i+1); the ears sit
// on no 4-cycle.
inline PlaneGraph eared_pentagon() {
  std::vector<std::vector<Vertex>> faces{{0, 1, 2, 3, 4}};
  std::vector<Vertex> rim;
  for (int i = 0; i < 5; ++i) faces.push_back({(i + 1) % 5, i, 5 + i});
  for (int i = 4; i >= 0; --i) {
    rim.push_back(5 + i);
    rim.push_back(i);
  }
  faces.push_back(rim);
  return from_faces(10, faces);
}

// Random connected plane graph grown by corner insertions, which preserve
// genus 0: attach a new vertex inside a corner, or join two vertices of one
// face by an edge drawn through that face.
inline PlaneGraph random_plane_graph(std::mt19937_64& rng, int n, double edge_attempts_per_vertex) {
  std::vector<std::vector<Vertex>> rot{{1}, {0}};
  auto insert_after = [&](Vertex at, Vertex after, Vertex x) {
    auto& r = rot[at];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, x);
  };
  auto pick = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };
  while (static_cast<int>(rot.size()) < n) {
    // Random directed edge u -> v; the corner at v after u.
    Vertex v = static_cast<Vertex>(pick(rot.size()));
    Vertex u = rot[v][pick(rot[v].size())];
    Vertex x = static_cast<Vertex>(rot.size());
    insert_after(v, u, x);
    rot.push_back({v});
  }
  const int attempts = static_cast<int>(edge_attempts_per_vertex * n);
  for (int t = 0; t < attempts; ++t) {
    PlaneGraph pg(rot);
    auto faces = trace_faces(pg);
    const auto& b = faces[pick(faces.size())].boundary;
    const std::size_t d = b.size();
    std::size_t i = pick(d), j = pick(d);
    Vertex s = b[i], e = b[j];
    if (s == e || pg.graph().adjacent(s, e)) continue;
    insert_after(s, b[(i + d - 1) % d], e);
    insert_after(e, b[(j + d - 1) % d], s);
  }
  return PlaneGraph(rot);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Every ordered 4-tuple of distinct vertices forming a closed walk, reduced
// to the least of its 8 rotations and reflections.
inline std::set<std::array<Vertex, 4>> brute_force_4cycles(const Graph& g) {
  std::set<std::array<Vertex, 4>> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::set<int> distinct{a, b, c, d};
          if (distinct.size() != 4) continue;
          if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d) || !g.adjacent(d, a)) continue;
          std::array<Vertex, 4> t{a, b, c, d}, best = t;
          for (int s = 0; s < 4; ++s) {
            std::array<Vertex, 4> rotated{t[s], t[(s + 1) % 4], t[(s + 2) % 4], t[(s + 3) % 4]};
            std::array<Vertex, 4> mirrored{t[s], t[(s + 3) % 4], t[(s + 2) % 4], t[(s + 1) % 4]};
            best = std::min({best, rotated, mirrored});
          }
          out.insert(best);
        }
  return out;
}

// Two 4-cycles 0-1-2-3 and 4-5-6-7 whose nearest vertices 3 and 4 are joined
// by a path of `length` edges through fresh vertices.
inline Graph two_squares_joined(int length) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  int next = 8;
  Vertex prev = 3;
  for (int i = 0; i < length - 1; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, 4);
  return Graph(next, edges);
}

}  // namespace lc::testing
