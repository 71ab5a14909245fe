#include "listcolor/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lc {

namespace {

void check_lists(const Graph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.vertex_count()) {
    throw std::invalid_argument("list assignment must cover every vertex");
  }
  for (std::size_t v = 0; v < lists.size(); ++v) {
    if (lists[v].empty()) throw std::invalid_argument("empty list on vertex " + std::to_string(v));
  }
}

void check_sizes(const Graph& g, const SizeVector& sizes) {
  if (static_cast<int>(sizes.size()) != g.vertex_count()) {
    throw std::invalid_argument("size vector must cover every vertex");
  }
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("list sizes must be at least 1");
  }
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const ListAssignment& lists) : g_(g), lists_(lists) {
    order_.resize(g.vertex_count());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    coloring_.assign(g.vertex_count(), 0);
    colored_.assign(g.vertex_count(), false);
  }

  std::optional<Coloring> run() {
    if (search(0)) return coloring_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Color c : lists_[v]) {
      bool clash = false;
      for (Vertex w : g_.neighbors(v)) {
        if (colored_[w] && coloring_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      coloring_[v] = c;
      colored_[v] = true;
      if (search(depth + 1)) return true;
      colored_[v] = false;
    }
    return false;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<Vertex> order_;
  Coloring coloring_;
  std::vector<bool> colored_;
};

// All size-s subsets of 1..universe in lexicographic order.
std::vector<std::vector<Color>> subsets(int universe, int s) {
  std::vector<std::vector<Color>> out;
  if (s > universe) return out;
  std::vector<Color> current(s);
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(current);
    int i = s - 1;
    while (i >= 0 && current[i] == universe - s + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < s; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t range) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  while (true) {
    std::uint64_t x = engine();
    if (x <= limit) return x % range;
  }
}

ListAssignment nested_assignment(const SizeVector& sizes) {
  ListAssignment lists(sizes.size());
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    lists[v].resize(sizes[v]);
    std::iota(lists[v].begin(), lists[v].end(), 1);
  }
  return lists;
}

}  // namespace

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists,
                             const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != g.vertex_count() ||
      static_cast<int>(lists.size()) != g.vertex_count()) {
    return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::find(lists[v].begin(), lists[v].end(), coloring[v]) == lists[v].end()) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::optional<Coloring> l_colorable(const Graph& g, const ListAssignment& lists) {
  check_lists(g, lists);
  return Backtracker(g, lists).run();
}

ChoosabilityVerdict f_choosable_exhaustive(const Graph& g, const SizeVector& sizes,
                                           const ExhaustiveOptions& options) {
  check_sizes(g, sizes);
  const int universe = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (universe > options.budget && !options.override_budget) {
    throw std::invalid_argument("sum of list sizes " + std::to_string(universe) +
                                " exceeds the exhaustive budget " +
                                std::to_string(options.budget));
  }
  ChoosabilityVerdict verdict;
  const int n = g.vertex_count();
  if (n == 0) return verdict;

  std::vector<std::vector<std::vector<Color>>> choices(n);
  choices[0] = {nested_assignment({sizes[0]})[0]};
  for (Vertex v = 1; v < n; ++v) choices[v] = subsets(universe, sizes[v]);

  std::vector<std::size_t> index(n, 0);
  ListAssignment lists(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) lists[v] = choices[v][index[v]];
    ++verdict.assignments_checked;
    if (!l_colorable(g, lists)) {
      verdict.status = ChoosabilityStatus::not_choosable;
      verdict.counterexample = lists;
      return verdict;
    }
    int v = n - 1;
    while (v >= 0 && ++index[v] == choices[v].size()) index[v--] = 0;
    if (v < 0) break;
  }
  return verdict;
}

ChoosabilityVerdict f_choosable_sampled(const Graph& g, const SizeVector& sizes, long trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  check_sizes(g, sizes);
  const int universe = std::accumulate(sizes.begin(), sizes.end(), 0);
  ChoosabilityVerdict verdict;
  verdict.status = ChoosabilityStatus::no_counterexample_found;

  std::mt19937_64 engine(seed);
  std::vector<Color> pool(universe);
  for (long trial = 0; trial < trials; ++trial) {
    ListAssignment lists;
    if (trial == 0) {
      lists = nested_assignment(sizes);
    } else {
      lists.resize(sizes.size());
      for (std::size_t v = 0; v < sizes.size(); ++v) {
        std::iota(pool.begin(), pool.end(), 1);
        for (int j = 0; j < sizes[v]; ++j) {
          auto r = bounded(engine, static_cast<std::uint64_t>(universe - j));
          std::swap(pool[j], pool[j + r]);
        }
        lists[v].assign(pool.begin(), pool.begin() + sizes[v]);
        std::sort(lists[v].begin(), lists[v].end());
      }
    }
    ++verdict.assignments_checked;
    if (!l_colorable(g, lists)) {
      verdict.status = ChoosabilityStatus::not_choosable;
      verdict.counterexample = std::move(lists);
      verdict.failing_trial = trial;
      return verdict;
    }
  }
  return verdict;
}

CrossCheckReport cross_check(const Configuration& c, const OracleMode& mode) {
  CrossCheckReport report;
  report.cn = is_reducible(c);
  for (int t : report.cn.caps) report.sizes.push_back(t + 1);
  if (const auto* exhaustive = std::get_if<ExhaustiveMode>(&mode)) {
    report.oracle = f_choosable_exhaustive(c.internal, report.sizes, exhaustive->options);
  } else {
    const auto& sampled = std::get<SampledMode>(mode);
    report.oracle = f_choosable_sampled(c.internal, report.sizes, sampled.trials, sampled.seed);
  }
  report.passed = !(report.cn.reducible() && report.oracle.found_counterexample());
  return report;
}

std::string to_string(ChoosabilityStatus status) {
  switch (status) {
    case ChoosabilityStatus::choosable: return "choosable";
    case ChoosabilityStatus::no_counterexample_found: return "no_counterexample_found";
    case ChoosabilityStatus::not_choosable: return "not_choosable";
  }
  return "unknown";
}

std::string format_list_assignment(const ListAssignment& lists) {
  std::ostringstream out;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out << "list " << v << ":";
    for (Color c : lists[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace lc
