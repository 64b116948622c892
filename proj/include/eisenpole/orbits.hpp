#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenpole/rootdata.hpp"

namespace eisenpole {

// Weighted Dynkin diagrams (node weights in {0,2}, paper labeling) of the
// distinguished nilpotent orbits of the dual group, with orbit dimensions.
struct OrbitEntry {
  std::string label;
  std::vector<long> weights;
  long dim;
};

// Static table for the exceptional groups; empty for classical types (only
// the principal orbit is reported there).
const std::vector<OrbitEntry>& distinguished_orbits(const TypeLabel& t);

// Enumeration oracle: {0,2} weightings h of the dual root system with
// dim g(0) = dim g(2), returned as (weights, orbit dimension) sorted by
// decreasing dimension. The static table must agree with this.
std::vector<std::pair<std::vector<long>, long>> distinguished_weightings(const RootDatum& d);

// Matches a doubled dominant weight 2*t(s0) against the table; the principal
// all-twos diagram is labeled by the group name for every type.
std::optional<std::string> match_orbit(const RootDatum& d, const Weight& two_t);

}  // namespace eisenpole
