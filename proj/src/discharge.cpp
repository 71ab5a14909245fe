#include "listcolor/discharge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lc {

Statistics face_statistics(const PlaneGraph& pg, const std::vector<Face>& faces) {
  Statistics stats;
  stats.vertices.resize(pg.vertex_count());
  for (Vertex v = 0; v < pg.vertex_count(); ++v) {
    auto& vs = stats.vertices[v];
    vs.degree = pg.degree(v);
    for (Vertex w : pg.rotation(v)) {
      const int d = pg.degree(w);
      vs.n4 += d == 4;
      vs.n5 += d == 5;
      vs.n6plus += d >= 6;
    }
  }
  for (const Face& face : faces) {
    FaceStats fs;
    fs.degree = face.degree();
    for (Vertex v : face.boundary) {
      const int d = pg.degree(v);
      fs.n4 += d == 4;
      fs.n5 += d == 5;
      fs.n6plus += d >= 6;
      fs.n5plus += d >= 5;
    }
    fs.bad5 = fs.degree == 5 && fs.n4 == 5;
    stats.faces.push_back(fs);
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const FaceStats& fs = stats.faces[f];
    for (Vertex v : faces[f].boundary) {
      auto& vs = stats.vertices[v];
      vs.f3 += fs.degree == 3;
      vs.f4 += fs.degree == 4;
      vs.f5 += fs.degree == 5;
      vs.f5b += fs.bad5;
      vs.f6plus += fs.degree >= 6;
    }
  }
  return stats;
}

PlaneAnalysis::PlaneAnalysis(PlaneGraph pg)
    : plane_(std::move(pg)),
      faces_(trace_faces(plane_)),
      stats_(face_statistics(plane_, faces_)),
      four_cycles_(enumerate_4cycles(plane_.graph())),
      on_four_cycle_(four_cycle_membership(plane_.graph(), four_cycles_)) {
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& b = faces_[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      face_of_edge_[{b[i], b[(i + 1) % b.size()]}] = static_cast<int>(f);
    }
  }
}

int PlaneAnalysis::face_of(Vertex tail, Vertex head) const {
  auto it = face_of_edge_.find({tail, head});
  if (it == face_of_edge_.end()) {
    throw std::invalid_argument("no directed edge " + std::to_string(tail) + "->" +
                                std::to_string(head));
  }
  return it->second;
}

int zeta(const PlaneAnalysis& a, Vertex v) {
  auto on_bad5 = [&](Vertex x, Vertex y) {
    return a.stats().faces[a.face_of(x, y)].bad5 || a.stats().faces[a.face_of(y, x)].bad5;
  };
  int count = 0;
  for (const Face& face : a.faces()) {
    if (face.degree() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      if (face.boundary[i] != v) continue;
      Vertex x = face.boundary[(i + 1) % 3], y = face.boundary[(i + 2) % 3];
      if (a.degree(x) == 4 && a.degree(y) == 4 && on_bad5(x, y)) ++count;
    }
  }
  return count;
}

Rational gamma(int n4, int n5plus) {
  if (n5plus == 0) throw std::domain_error("gamma is undefined for a face without 5+-vertices");
  Rational r = (Rational(2) - Rational(n4) / 3) / n5plus;
  r.canonicalize();
  return r;
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2_1: return "R2.1";
    case Rule::R2_2: return "R2.2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
  }
  return "?";
}

std::string to_string(const Element& e) {
  return (e.kind == Element::Kind::vertex ? "v" : "f") + std::to_string(e.index);
}

Rational ChargeState::total() const {
  Rational sum = 0;
  for (const auto& c : vertex_charge) sum += c;
  for (const auto& c : face_charge) sum += c;
  return sum;
}

const Rational& ChargeState::operator[](const Element& e) const {
  return e.kind == Element::Kind::vertex ? vertex_charge.at(e.index) : face_charge.at(e.index);
}

Rational& ChargeState::operator[](const Element& e) {
  return e.kind == Element::Kind::vertex ? vertex_charge.at(e.index) : face_charge.at(e.index);
}

ChargeState initial_charges(const PlaneAnalysis& a) {
  if (!a.plane().connected()) {
    throw std::invalid_argument(
        "initial charges need a connected plane graph; a disconnected one with c components "
        "totals -2-2c");
  }
  ChargeState ch;
  ch.stage = 0;
  for (Vertex v = 0; v < a.plane().vertex_count(); ++v) ch.vertex_charge.emplace_back(a.degree(v) - 2);
  ch.face_charge.assign(a.faces().size(), Rational(-2));
  return ch;
}

ChargeState apply_ledger(const ChargeState& start, const TransferLedger& ledger, Rule first,
                         Rule last, int stage) {
  ChargeState out = start;
  out.stage = stage;
  for (const auto& t : ledger) {
    if (t.rule < first || t.rule > last) continue;
    out[t.source] -= t.amount;
    out[t.target] += t.amount;
  }
  return out;
}

namespace {

// Amount a k-vertex sends to an incident 4- or 5-face under R2-R4, or nullopt
// for vertices of degree at most 3.
std::optional<std::pair<Rational, Rule>> medium_face_share(const PlaneAnalysis& a, Vertex v,
                                                           const Face& face, const FaceStats& fs) {
  const int k = a.degree(v);
  const int len = fs.degree;
  if (k == 4) {
    if (fs.bad5 && a.stats().vertices[v].f3 <= 1) {
      std::set<Vertex> tf;
      for (Vertex w : face.boundary) {
        if (a.degree(w) == 4 && a.stats().vertices[w].f3 <= 1) tf.insert(w);
      }
      return std::pair{tf.size() == 1 ? make_rational(2, 3) : make_rational(1, 2), Rule::R2_1};
    }
    return std::pair{make_rational(1, 3), Rule::R2_2};
  }
  if (k == 5) {
    if (len == 4 && fs.n6plus == 1) return std::pair{make_rational(5, 9), Rule::R3};
    if (len == 5 && fs.n6plus == 1) return std::pair{make_rational(4, 9), Rule::R3};
    return std::pair{gamma(fs), Rule::R3};
  }
  if (k >= 6) {
    if (len == 4 && fs.n5 == 1) return std::pair{make_rational(7, 9), Rule::R4};
    if (len == 5 && fs.n5 == 1) return std::pair{make_rational(5, 9), Rule::R4};
    return std::pair{gamma(fs), Rule::R4};
  }
  return std::nullopt;
}

}  // namespace

RoundResult round1(const PlaneAnalysis& a) {
  RoundResult result;
  result.charges = initial_charges(a);
  result.charges.stage = 1;
  auto send = [&](Element from, Element to, Rational amount, Rule rule) {
    result.charges[from] -= amount;
    result.charges[to] += amount;
    result.ledger.push_back({from, to, std::move(amount), rule});
  };

  for (std::size_t fi = 0; fi < a.faces().size(); ++fi) {
    const Face& face = a.faces()[fi];
    const FaceStats& fs = a.stats().faces[fi];
    const Element target = Element::face(static_cast<int>(fi));
    for (Vertex v : face.boundary) {
      const Element source = Element::vertex(v);
      if (fs.degree == 3) {
        send(source, target, make_rational(2, 3), Rule::R1);
      } else if (fs.degree >= 6) {
        send(source, target, make_rational(1, 3), Rule::R1);
      } else if (fs.degree == 4 || fs.degree == 5) {
        if (auto share = medium_face_share(a, v, face, fs)) {
          send(source, target, share->first, share->second);
        }
      }
    }
  }

  for (std::size_t fi = 0; fi < a.faces().size(); ++fi) {
    const Face& face = a.faces()[fi];
    if (!a.stats().faces[fi].bad5) continue;
    const auto& b = face.boundary;
    bool all_two = std::all_of(b.begin(), b.end(),
                               [&](Vertex v) { return a.stats().vertices[v].f3 == 2; });
    if (!all_two) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Vertex x = b[i], y = b[(i + 1) % b.size()];
      const int across = a.face_of(y, x);
      const Face& other = a.faces()[across];
      if (other.degree() != 3) {
        result.diagnostics.push_back("R5: face f" + std::to_string(fi) + " edge " +
                                     std::to_string(x) + "-" + std::to_string(y) +
                                     " has no 3-face on its other side");
        continue;
      }
      Vertex u = -1;
      for (Vertex w : other.boundary) {
        if (w != x && w != y) u = w;
      }
      if (!a.on_four_cycle(u)) {
        send(Element::vertex(u), Element::face(static_cast<int>(fi)), make_rational(1, 9),
             Rule::R5);
      }
    }
  }
  return result;
}

VertexClassification classify(const PlaneAnalysis& a, const ChargeState& ch1) {
  VertexClassification out(a.plane().vertex_count());
  for (Vertex v = 0; v < a.plane().vertex_count(); ++v) {
    const auto& vs = a.stats().vertices[v];
    const Rational& c = ch1.vertex_charge.at(v);
    out[v].rich = c > 0;
    out[v].poor = c < 0 && a.on_four_cycle(v);
    out[v].good4 = vs.degree == 4 && vs.f3 + vs.f5b <= 1;
    out[v].bad4 = vs.degree == 4 && vs.f3 == 1 && vs.f5b == 1;
  }
  return out;
}

std::vector<Path> nice_paths(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("vertex out of range");
  if (g.degree(u) < 5 || g.degree(u) > 6) {
    throw std::invalid_argument("nice paths start at a vertex of degree 5 or 6");
  }
  std::vector<Path> paths;
  if (u == v) return paths;
  if (g.adjacent(u, v)) paths.push_back({{u, v}});
  for (Vertex w : g.neighbors(u)) {
    if (w != v && g.adjacent(w, v) && g.degree(w) <= 5) paths.push_back({{u, w, v}});
  }
  return paths;
}

RoundResult round2(const PlaneAnalysis& a, const ChargeState& ch1,
                   const VertexClassification& classification) {
  RoundResult result;
  result.charges = ch1;
  result.charges.stage = 2;
  const Graph& g = a.graph();
  std::vector<Vertex> poor;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (classification[u].poor && g.degree(u) >= 5 && g.degree(u) <= 6) poor.push_back(u);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!classification[v].rich) continue;
    std::vector<Vertex> targets;
    for (Vertex u : poor) {
      if (!nice_paths(g, u, v).empty()) targets.push_back(u);
    }
    if (targets.empty()) continue;
    if (targets.size() > 1) {
      std::string names;
      for (Vertex u : targets) names += " v" + std::to_string(u);
      result.diagnostics.push_back("contested rich vertex v" + std::to_string(v) +
                                   ": nice paths to poor vertices" + names + "; sending to v" +
                                   std::to_string(targets.front()));
    }
    const Rational amount = ch1.vertex_charge[v];
    const Element from = Element::vertex(v), to = Element::vertex(targets.front());
    result.charges[from] -= amount;
    result.charges[to] += amount;
    result.ledger.push_back({from, to, amount, Rule::R6});
  }
  return result;
}

std::vector<Element> DischargeReport::negative(int s) const {
  const ChargeState& ch = stage(s);
  std::vector<Element> out;
  for (std::size_t v = 0; v < ch.vertex_charge.size(); ++v) {
    if (ch.vertex_charge[v] < 0) out.push_back(Element::vertex(static_cast<int>(v)));
  }
  for (std::size_t f = 0; f < ch.face_charge.size(); ++f) {
    if (ch.face_charge[f] < 0) out.push_back(Element::face(static_cast<int>(f)));
  }
  return out;
}

const ChargeState& DischargeReport::stage(int s) const {
  switch (s) {
    case 0: return ch0;
    case 1: return ch1;
    case 2: return ch2;
  }
  throw std::out_of_range("stage must be 0, 1 or 2");
}

DischargeReport report(const PlaneGraph& pg) {
  DischargeReport out{PlaneAnalysis(pg), {}, {}, {}, {}, {}, {}, {}, {}};
  const PlaneAnalysis& a = out.analysis;
  out.ch0 = initial_charges(a);
  RoundResult first = round1(a);
  out.ch1 = first.charges;
  out.ledger = first.ledger;
  out.diagnostics = first.diagnostics;
  out.classification = classify(a, out.ch1);
  RoundResult second = round2(a, out.ch1, out.classification);
  out.ch2 = second.charges;
  out.ledger.insert(out.ledger.end(), second.ledger.begin(), second.ledger.end());
  out.diagnostics.insert(out.diagnostics.end(), second.diagnostics.begin(),
                         second.diagnostics.end());
  for (Vertex v = 0; v < pg.vertex_count(); ++v) {
    const int d = pg.degree(v);
    if (a.stats().vertices[v].f3 > (d + 1) / 2) out.fact1_violations.push_back(v);
  }
  out.hypothesis = validate_hypothesis(a.graph(), 5);
  if (a.graph().min_degree() < 4) {
    out.diagnostics.push_back("minimum degree " + std::to_string(a.graph().min_degree()) +
                              " is below 4");
  }
  if (!out.hypothesis.satisfied) {
    out.diagnostics.push_back("two 4-cycles lie closer than distance 5");
  }
  return out;
}

}  // namespace lc
