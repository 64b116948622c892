#include "eisenpole/orbits.hpp"

#include <algorithm>
#include <map>

namespace eisenpole {

// Frozen from the Bala-Carter enumeration below (tests re-derive and compare)
// and labeled in decreasing orbit dimension following the standard tables of
// distinguished orbits; the E8 b-series interleaves at dims 230, 226, 220.
const std::vector<OrbitEntry>& distinguished_orbits(const TypeLabel& t) {
  static const std::map<std::string, std::vector<OrbitEntry>> tables = {
      {"G2",
       {{"G2", {2, 2}, 12},  //
        {"G2(a1)", {2, 0}, 10}}},
      {"F4",
       {{"F4", {2, 2, 2, 2}, 48},
        {"F4(a1)", {2, 0, 2, 2}, 46},
        {"F4(a2)", {2, 0, 2, 0}, 44},
        {"F4(a3)", {0, 0, 2, 0}, 40}}},
      {"E6",
       {{"E6", {2, 2, 2, 2, 2, 2}, 72},
        {"E6(a1)", {2, 2, 2, 0, 2, 2}, 70},
        {"E6(a3)", {2, 0, 0, 2, 0, 2}, 66}}},
      {"E7",
       {{"E7", {2, 2, 2, 2, 2, 2, 2}, 126},
        {"E7(a1)", {2, 2, 2, 0, 2, 2, 2}, 124},
        {"E7(a2)", {2, 2, 2, 0, 2, 0, 2}, 122},
        {"E7(a3)", {2, 0, 0, 2, 0, 2, 2}, 120},
        {"E7(a4)", {2, 0, 0, 2, 0, 0, 2}, 116},
        {"E7(a5)", {0, 0, 0, 2, 0, 0, 2}, 112}}},
      {"E8",
       {{"E8", {2, 2, 2, 2, 2, 2, 2, 2}, 240},
        {"E8(a1)", {2, 2, 2, 0, 2, 2, 2, 2}, 238},
        {"E8(a2)", {2, 2, 2, 0, 2, 0, 2, 2}, 236},
        {"E8(a3)", {2, 0, 0, 2, 0, 2, 2, 2}, 234},
        {"E8(a4)", {2, 0, 0, 2, 0, 2, 0, 2}, 232},
        {"E8(b4)", {2, 0, 0, 2, 0, 0, 2, 2}, 230},
        {"E8(a5)", {2, 0, 0, 2, 0, 0, 2, 0}, 228},
        {"E8(b5)", {0, 0, 0, 2, 0, 0, 2, 2}, 226},
        {"E8(a6)", {0, 0, 0, 2, 0, 0, 2, 0}, 224},
        {"E8(b6)", {0, 0, 0, 2, 0, 0, 0, 2}, 220},
        {"E8(a7)", {0, 0, 0, 0, 2, 0, 0, 0}, 208}}},
  };
  static const std::vector<OrbitEntry> empty;
  auto it = tables.find(t.str());
  return it == tables.end() ? empty : it->second;
}

std::vector<std::pair<std::vector<long>, long>> distinguished_weightings(const RootDatum& d) {
  int n = d.rank();
  const auto& dual_roots = d.positive_coroots();
  std::vector<std::pair<std::vector<long>, long>> found;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<long> w(n);
    for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? 2 : 0;
    long z0 = 0, p2 = 0;
    for (const auto& a : dual_roots) {
      long val = 0;
      for (int i = 0; i < n; ++i) val += a[i] * w[i];
      if (val == 0) ++z0;
      if (val == 2) ++p2;
    }
    // dim g(0) = n + 2 z0 must equal dim g(2) = p2
    if (static_cast<long>(n) + 2 * z0 == p2)
      found.emplace_back(w, 2 * static_cast<long>(dual_roots.size()) - 2 * z0);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  return found;
}

std::optional<std::string> match_orbit(const RootDatum& d, const Weight& two_t) {
  std::vector<long> w(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    if (!is_integer(two_t[i])) return std::nullopt;
    w[i] = to_long(two_t[i]);
  }
  bool all_two = std::all_of(w.begin(), w.end(), [](long x) { return x == 2; });
  const auto& table = distinguished_orbits(d.type());
  if (table.empty()) return all_two ? std::optional<std::string>(d.type().str()) : std::nullopt;
  for (const auto& e : table)
    if (e.weights == w) return e.label;
  return std::nullopt;
}

}  // namespace eisenpole
