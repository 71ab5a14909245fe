#include "listcolor/nullstellensatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace lc {

namespace {

void check_edges(const OrientedEdgeList& edges, const CapVector& caps) {
  const int n = static_cast<int>(caps.size());
  for (int t : caps) {
    if (t < 0) throw std::invalid_argument("caps must be nonnegative");
  }
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw std::out_of_range("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                              ") has an endpoint not indexed by caps");
    }
    if (e.tail == e.head) throw std::invalid_argument("loop in oriented edge list");
  }
}

void accumulate(ExpansionTable& table, Exponent&& key, const BigInt& delta) {
  auto [it, inserted] = table.try_emplace(std::move(key), delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) table.erase(it);
  }
}

}  // namespace

OrientedEdgeList default_orientation(const Graph& g) {
  OrientedEdgeList out;
  out.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

ExpansionTable expand(const OrientedEdgeList& edges, const CapVector& caps) {
  check_edges(edges, caps);
  ExpansionTable table;
  table.emplace(Exponent(caps.size(), 0), BigInt(1));
  for (const auto& [a, b] : edges) {
    ExpansionTable next;
    for (const auto& [exponent, coefficient] : table) {
      // (x_a - x_b) * c x^e = c x^(e + u_a) - c x^(e + u_b)
      if (exponent[a] < caps[a]) {
        Exponent raised = exponent;
        ++raised[a];
        accumulate(next, std::move(raised), coefficient);
      }
      if (exponent[b] < caps[b]) {
        Exponent raised = exponent;
        ++raised[b];
        accumulate(next, std::move(raised), -coefficient);
      }
    }
    table = std::move(next);
  }
  return table;
}

ExpansionTable naive_expand(const OrientedEdgeList& edges, const CapVector& caps) {
  check_edges(edges, caps);
  if (edges.size() > kNaiveExpandEdgeLimit) {
    throw std::length_error("naive_expand supports at most " +
                            std::to_string(kNaiveExpandEdgeLimit) + " edges");
  }
  const std::size_t m = edges.size();
  std::map<Exponent, long long> full;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    Exponent e(caps.size(), 0);
    long long sign = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1UL) {
        ++e[edges[i].head];
        sign = -sign;
      } else {
        ++e[edges[i].tail];
      }
    }
    full[e] += sign;
  }
  ExpansionTable out;
  for (const auto& [e, coefficient] : full) {
    if (coefficient == 0) continue;
    bool inside = true;
    for (std::size_t v = 0; v < caps.size(); ++v) inside = inside && e[v] <= caps[v];
    if (inside) out.emplace(e, BigInt(static_cast<long>(coefficient)));
  }
  return out;
}

ReducibilityVerdict is_reducible(const Configuration& c) {
  return is_reducible(c, default_orientation(c.internal));
}

ReducibilityVerdict is_reducible(const Configuration& c, const OrientedEdgeList& orientation) {
  std::vector<Edge> given;
  for (const auto& e : orientation) {
    given.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
  }
  std::sort(given.begin(), given.end());
  if (given != c.internal.edges()) {
    throw std::invalid_argument("orientation does not cover exactly the configuration's edges");
  }
  ReducibilityVerdict verdict;
  verdict.caps = derive_caps(c);
  verdict.table = expand(orientation, verdict.caps);
  for (const auto& entry : verdict.table) verdict.witnesses.push_back(entry.first);
  verdict.status =
      verdict.table.empty() ? ReducibilityStatus::inconclusive : ReducibilityStatus::reducible;
  return verdict;
}

std::string to_string(ReducibilityStatus status) {
  return status == ReducibilityStatus::reducible ? "reducible" : "inconclusive";
}

std::string format_exponent(const Exponent& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "]";
}

}  // namespace lc
