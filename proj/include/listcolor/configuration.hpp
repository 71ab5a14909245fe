#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "listcolor/graph.hpp"

namespace lc {

// Per-vertex exponent budget t_i: a vertex with cap t is guaranteed at least
// t + 1 colours left after the host graph outside the configuration is coloured.
using CapVector = std::vector<int>;

// A reducible-configuration candidate: the internal graph plus the degree each
// vertex has in the host graph.
struct Configuration {
  std::string name;
  std::string note;
  Graph internal;
  std::vector<int> full_degree;
  int k = 4;
  std::optional<CapVector> explicit_caps;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Raised when some vertex is left with an empty residual list.
class UncheckableConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument when an invariant (k >= 1, full degree at least
// the internal degree, one entry per vertex) fails.
void validate_configuration(const Configuration& c);

// t_i = (k - 1) - (full_degree_i - internal_degree_i), or explicit caps
// verbatim when present.
CapVector derive_caps(const Configuration& c);

// Configuration text format:
//   name <label>
//   note <free text>               (optional)
//   k <int>                        (optional, default 4)
//   vertices <n>
//   vertex <i> degree <d>          (one per vertex unless caps are given)
//   edge <u> <v>
//   caps <t0> ... <tn-1>           (optional)
// Vertices without a degree line default to max(1, internal degree).
Configuration parse_configuration(std::string_view text);
std::string format_configuration(const Configuration& c);

// A catalog is a sequence of configurations, each starting at its `name` line.
std::vector<Configuration> parse_catalog(std::string_view text);

}  // namespace lc
