#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "listcolor/graph.hpp"
#include "listcolor/plane_graph.hpp"
#include "listcolor/rational.hpp"

namespace lc {

// Counts over a face's boundary walk; a vertex met twice counts twice.
struct FaceStats {
  int degree = 0;
  int n4 = 0;
  int n5 = 0;
  int n6plus = 0;
  int n5plus = 0;
  bool bad5 = false;  // 5-face whose boundary vertices all have degree 4
};

// f_k(v) count face incidences around v; n_k(v) count neighbours of degree k.
struct VertexStats {
  int degree = 0;
  int f3 = 0;
  int f4 = 0;
  int f5 = 0;
  int f5b = 0;
  int f6plus = 0;
  int n4 = 0;
  int n5 = 0;
  int n6plus = 0;
};

struct Statistics {
  std::vector<FaceStats> faces;
  std::vector<VertexStats> vertices;
};

Statistics face_statistics(const PlaneGraph& pg, const std::vector<Face>& faces);

// Everything the rules read, computed once per plane graph.
class PlaneAnalysis {
 public:
  explicit PlaneAnalysis(PlaneGraph pg);

  const PlaneGraph& plane() const noexcept { return plane_; }
  const Graph& graph() const noexcept { return plane_.graph(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Statistics& stats() const noexcept { return stats_; }
  const CycleList& four_cycles() const noexcept { return four_cycles_; }
  bool on_four_cycle(Vertex v) const { return on_four_cycle_.at(v); }
  int degree(Vertex v) const { return plane_.degree(v); }

  // Index of the face whose boundary contains the directed edge tail -> head.
  int face_of(Vertex tail, Vertex head) const;

 private:
  PlaneGraph plane_;
  std::vector<Face> faces_;
  Statistics stats_;
  CycleList four_cycles_;
  std::vector<bool> on_four_cycle_;
  std::map<std::pair<Vertex, Vertex>, int> face_of_edge_;
};

// Number of 3-faces (x, y, v) at v with d(x) = d(y) = 4 and xy on a bad 5-face.
int zeta(const PlaneAnalysis& analysis, Vertex v);

// (2 - n4/3) / n5plus. Throws std::domain_error when n5plus == 0.
Rational gamma(int n4, int n5plus);
inline Rational gamma(const FaceStats& f) { return gamma(f.n4, f.n5plus); }

enum class Rule { R1, R2_1, R2_2, R3, R4, R5, R6 };
std::string to_string(Rule rule);

struct Element {
  enum class Kind { vertex, face };
  Kind kind = Kind::vertex;
  int index = 0;

  static Element vertex(int i) { return {Kind::vertex, i}; }
  static Element face(int i) { return {Kind::face, i}; }
  friend bool operator==(const Element&, const Element&) = default;
};
std::string to_string(const Element& e);  // "v3" / "f2"

struct Transfer {
  Element source;
  Element target;
  Rational amount;
  Rule rule = Rule::R1;
};
using TransferLedger = std::vector<Transfer>;

struct ChargeState {
  int stage = 0;
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;

  Rational total() const;
  const Rational& operator[](const Element& e) const;
  Rational& operator[](const Element& e);
  friend bool operator==(const ChargeState&, const ChargeState&) = default;
};

// ch0(v) = d(v) - 2, ch0(f) = -2. Throws std::invalid_argument when
// disconnected, since the total would then be -2 - 2c rather than -4.
ChargeState initial_charges(const PlaneAnalysis& analysis);

// Applies records whose rule is in [first, last] to a copy of `start`.
ChargeState apply_ledger(const ChargeState& start, const TransferLedger& ledger, Rule first,
                         Rule last, int stage);

struct RoundResult {
  ChargeState charges;
  TransferLedger ledger;
  std::vector<std::string> diagnostics;
};

// Rules R1-R5, one branch per (vertex, face) incidence.
RoundResult round1(const PlaneAnalysis& analysis);

struct VertexClass {
  bool rich = false;   // ch1 > 0
  bool poor = false;   // ch1 < 0 and on some 4-cycle
  bool good4 = false;  // d = 4, f3 + f5b <= 1
  bool bad4 = false;   // d = 4, f3 = 1, f5b = 1
};
using VertexClassification = std::vector<VertexClass>;

VertexClassification classify(const PlaneAnalysis& analysis, const ChargeState& ch1);

// A path of length one or two; `vertices` runs from u to v.
struct Path {
  std::vector<Vertex> vertices;
  friend bool operator==(const Path&, const Path&) = default;
};

// u-v paths of length at most 2 whose internal vertex, if any, has degree at
// most 5. Throws std::invalid_argument unless 5 <= d(u) <= 6.
std::vector<Path> nice_paths(const Graph& g, Vertex u, Vertex v);

// Rule R6. Each rich vertex with a nice path to a poor 5- or 6-vertex sends
// all of ch1 to the lowest-indexed such vertex; more than one candidate is
// reported as a "contested rich vertex" diagnostic.
RoundResult round2(const PlaneAnalysis& analysis, const ChargeState& ch1,
                   const VertexClassification& classification);

struct DischargeReport {
  PlaneAnalysis analysis;
  ChargeState ch0, ch1, ch2;
  TransferLedger ledger;  // R1-R5 records, then R6
  VertexClassification classification;
  std::vector<Vertex> fact1_violations;  // f3(v) > ceil(d(v) / 2)
  HypothesisVerdict hypothesis;
  std::vector<std::string> diagnostics;

  // Elements with negative charge at the given stage, vertices first.
  std::vector<Element> negative(int stage = 2) const;
  const ChargeState& stage(int s) const;
};

DischargeReport report(const PlaneGraph& pg);

}  // namespace lc
