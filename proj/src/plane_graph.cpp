#include "listcolor/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "listcolor/text_format.hpp"

namespace lc {

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {
  const int n = vertex_count();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : rotation_[v]) {
      if (u < 0 || u >= n) {
        throw std::invalid_argument("rotation of " + std::to_string(v) + " names vertex " +
                                    std::to_string(u) + " out of range");
      }
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " repeats in rotation of " +
                                    std::to_string(v));
      }
      const auto& back = rotation_[u];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw std::invalid_argument("asymmetric rotation: " + std::to_string(u) +
                                    " is in the rotation of " + std::to_string(v) +
                                    " but not vice versa");
      }
      if (v < u) edges.emplace_back(v, u);
    }
  }
  graph_ = Graph(n, edges);
}

Vertex PlaneGraph::successor(Vertex at, Vertex from) const {
  const auto& rot = rotation_.at(at);
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) {
    throw std::invalid_argument(std::to_string(from) + " is not a neighbour of " +
                                std::to_string(at));
  }
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

bool PlaneGraph::connected() const {
  if (vertex_count() == 0) return false;
  auto dist = bfs_distances(graph_, {0});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::vector<Face> trace_faces(const PlaneGraph& pg) {
  std::vector<Face> faces;
  if (pg.edge_count() == 0) {
    if (pg.vertex_count() == 1) faces.push_back(Face{});
    return faces;
  }
  std::set<std::pair<Vertex, Vertex>> used;
  for (Vertex u = 0; u < pg.vertex_count(); ++u) {
    // Ascending head order keeps face numbering independent of rotation start.
    std::vector<Vertex> heads = pg.rotation(u);
    std::sort(heads.begin(), heads.end());
    for (Vertex v : heads) {
      if (used.count({u, v})) continue;
      Face face;
      Vertex tail = u, head = v;
      while (used.insert({tail, head}).second) {
        face.boundary.push_back(tail);
        Vertex next = pg.successor(head, tail);
        tail = head;
        head = next;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

PlaneGraph parse_plane_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<bool> given;
  int last_line = 1;
  for (const auto& line : tokenize(text)) {
    last_line = line.number;
    const std::string& key = line.tokens.front();
    if (key == "vertices") {
      expect_token_count(line, 2);
      if (n) throw ParseError(line.number, "duplicate 'vertices' line");
      n = parse_int(line, 1);
      if (*n < 0) throw ParseError(line.number, "vertex count must be nonnegative");
      rotation.assign(*n, {});
      given.assign(*n, false);
    } else if (key == "rotation") {
      if (!n) throw ParseError(line.number, "'rotation' before 'vertices'");
      // Accept both `rotation 3: ...` and `rotation 3 : ...`.
      TextLine normalized = line;
      std::string& label = normalized.tokens.at(1 < line.tokens.size() ? 1 : 0);
      std::size_t first_neighbor = 2;
      if (label.size() > 1 && label.back() == ':') {
        label.pop_back();
      } else if (line.tokens.size() > 2 && line.tokens[2] == ":") {
        first_neighbor = 3;
      } else {
        throw ParseError(line.number, "expected 'rotation <v>: <neighbours>'");
      }
      int v = parse_int(normalized, 1);
      if (v < 0 || v >= *n) throw ParseError(line.number, "vertex index out of range");
      if (given[v]) throw ParseError(line.number, "duplicate rotation for vertex " + label);
      given[v] = true;
      for (std::size_t i = first_neighbor; i < line.tokens.size(); ++i) {
        rotation[v].push_back(parse_int(normalized, i));
      }
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!n) throw ParseError(1, "missing 'vertices' line");
  try {
    return PlaneGraph(std::move(rotation));
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line, std::string("invalid rotation system: ") + e.what());
  }
}

std::string format_plane_graph(const PlaneGraph& pg) {
  std::ostringstream out;
  out << "vertices " << pg.vertex_count() << '\n';
  for (Vertex v = 0; v < pg.vertex_count(); ++v) {
    out << "rotation " << v << ':';
    for (Vertex u : pg.rotation(v)) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

}  // namespace lc
