#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "listcolor/configuration.hpp"
#include "listcolor/graph.hpp"
#include "listcolor/nullstellensatz.hpp"

namespace lc {

using Color = int;
// lists[v] is sorted ascending without repeats.
using ListAssignment = std::vector<std::vector<Color>>;
using SizeVector = std::vector<int>;
using Coloring = std::vector<Color>;

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring);

// Exhaustive backtracking, so nullopt is a proof of non-colourability.
// Vertices are tried by descending degree (ties by index), colours ascending.
std::optional<Coloring> l_colorable(const Graph& g, const ListAssignment& lists);

enum class ChoosabilityStatus { choosable, no_counterexample_found, not_choosable };

struct ChoosabilityVerdict {
  ChoosabilityStatus status = ChoosabilityStatus::choosable;
  std::optional<ListAssignment> counterexample;
  // Sampled search only: index of the trial that produced the counterexample.
  std::optional<long> failing_trial;
  std::uint64_t assignments_checked = 0;

  bool found_counterexample() const noexcept { return counterexample.has_value(); }
};

struct ExhaustiveOptions {
  int budget = 8;
  bool override_budget = false;
};

// Every assignment of lists with the given sizes drawn from colours
// 1..sum(sizes), with vertex 0 pinned to {1..sizes[0]}. Any list system
// relabels injectively into this universe, so the search is complete.
// Assignments are visited in odometer order: lists are lexicographic subsets,
// the highest-indexed vertex varies fastest. Throws std::invalid_argument when
// sum(sizes) exceeds the budget and the override is not set.
ChoosabilityVerdict f_choosable_exhaustive(const Graph& g, const SizeVector& sizes,
                                           const ExhaustiveOptions& options = {});

// Seeded random search over the same universe 1..U, U = sum(sizes).
//
// Trial 0 is the nested assignment lists[v] = {1..sizes[v]} (identical lists
// when sizes agree). Trials 1..trials-1 come from one std::mt19937_64 stream
// seeded with `seed` and consumed in trial order, vertex 0 first. Each list is
// drawn by a partial Fisher-Yates shuffle of 1..U: for j = 0..s-1 swap slot j
// with slot j + r, r uniform in [0, U - j), where r takes the next engine
// output x and rejects x >= 2^64 - (2^64 mod (U - j)) before reducing mod
// (U - j). The first s slots, sorted, form the list. This mapping is stable.
ChoosabilityVerdict f_choosable_sampled(const Graph& g, const SizeVector& sizes, long trials,
                                        std::uint64_t seed);

struct ExhaustiveMode {
  ExhaustiveOptions options;
};
struct SampledMode {
  long trials = 100000;
  std::uint64_t seed = 42;
};
using OracleMode = std::variant<ExhaustiveMode, SampledMode>;

struct CrossCheckReport {
  ReducibilityVerdict cn;
  SizeVector sizes;  // caps + 1
  ChoosabilityVerdict oracle;
  // False only when CN claims reducible yet the oracle found a failing
  // assignment. An inconclusive CN verdict asserts nothing.
  bool passed = true;
};

CrossCheckReport cross_check(const Configuration& c, const OracleMode& mode);

std::string to_string(ChoosabilityStatus status);
// One line per vertex: `list <v>: <c1> <c2> ...`
std::string format_list_assignment(const ListAssignment& lists);

}  // namespace lc
