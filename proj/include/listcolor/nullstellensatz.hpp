#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "listcolor/configuration.hpp"
#include "listcolor/graph.hpp"

namespace lc {

using BigInt = mpz_class;

// Factor (x_tail - x_head) of the graph polynomial.
struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};
using OrientedEdgeList = std::vector<OrientedEdge>;

using Exponent = std::vector<int>;
// Sparse polynomial restricted to the cap box. Never stores a zero coefficient.
using ExpansionTable = std::map<Exponent, BigInt>;

// Edges sorted lexicographically, each oriented low -> high.
OrientedEdgeList default_orientation(const Graph& g);

// Expands prod (x_tail - x_head) one factor at a time, dropping every monomial
// that leaves the box exponent <= caps. Because exponents only grow, the
// result equals full expansion followed by truncation.
ExpansionTable expand(const OrientedEdgeList& edges, const CapVector& caps);

inline constexpr std::size_t kNaiveExpandEdgeLimit = 16;

// Term-by-term 2^m expansion, truncated afterwards. Test oracle for expand().
ExpansionTable naive_expand(const OrientedEdgeList& edges, const CapVector& caps);

enum class ReducibilityStatus { reducible, inconclusive };

struct ReducibilityVerdict {
  ReducibilityStatus status = ReducibilityStatus::inconclusive;
  CapVector caps;
  // Every surviving monomial, ascending, with its coefficient.
  ExpansionTable table;
  std::vector<Exponent> witnesses;

  std::size_t count() const noexcept { return witnesses.size(); }
  bool reducible() const noexcept { return status == ReducibilityStatus::reducible; }
};

// A nonzero coefficient on some monomial inside the cap box certifies that
// every list assignment with sizes caps + 1 admits a proper colouring. An empty
// table proves nothing, hence "inconclusive".
ReducibilityVerdict is_reducible(const Configuration& c);
ReducibilityVerdict is_reducible(const Configuration& c, const OrientedEdgeList& orientation);

std::string to_string(ReducibilityStatus status);
std::string format_exponent(const Exponent& e);

}  // namespace lc
