#pragma once

#include <string>
#include <vector>

#include "eisenpole/rootdata.hpp"

namespace eisenpole {

// Affine-linear function a*s + b with exact rational coefficients.
struct AffLin {
  Rat slope;
  Rat offset;

  Rat at(const Rat& s0) const { return slope * s0 + offset; }
  bool operator==(const AffLin& o) const { return slope == o.slope && offset == o.offset; }
  bool operator<(const AffLin& o) const {
    if (slope != o.slope) return slope < o.slope;
    return offset < o.offset;
  }
  std::string str() const;    // "8s+3", "16s-3", "4"
  std::string latex() const;  // "8 s+ 3" in the zeta-argument style
};

// One-parameter family of characters chi(s) = s*direction + offset, both in
// the fundamental-weight basis.
struct AffineWeight {
  Weight direction;
  Weight offset;

  Weight at(const Rat& s0) const { return s0 * direction + offset; }
};

// The two sign conventions for chi_{P,s}; the pole pipeline uses PlusHalf
// (delta_P^{s+1/2} (x) delta_B^{-1/2}), the identities pipeline MinusHalf
// (delta_P^{s-1/2} (x) delta_B^{1/2}). They are exchanged by the longest
// element of W_P.
enum class Convention { PlusHalf, MinusHalf };

Weight delta_B(const RootDatum& d);
// Sum of positive roots outside the Levi subsystem spanned by I.
Weight delta_P(const RootDatum& d, const std::vector<int>& levi);

// b_ii with delta_{P_i} = b_ii * w_i, and b_ij (i != j) with
// delta_{P_i cap P_j} = b_ij * w_i + b_ji * w_j.
struct BMatrix {
  std::vector<std::vector<Rat>> entries;
  std::string latex() const;
  std::string json() const;
};
BMatrix b_matrix(const RootDatum& d);

AffineWeight chi_family(const RootDatum& d, int parabolic, Convention conv);
AffLin pair_family(const RootDatum& d, const AffineWeight& chi, const CorootVec& cv);

// N_eps(chi) = { a > 0 : <chi, a^vee> = eps }, as indices into positive_roots.
std::vector<int> n_epsilon(const RootDatum& d, const Weight& chi, const Rat& eps);

// d_P(chi_{s0}) = |N_1| - |N_0| - (n-1), MinusHalf convention.
long d_P(const RootDatum& d, int parabolic, const Rat& s0);

}  // namespace eisenpole
