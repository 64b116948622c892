#pragma once

#include <optional>

#include "eisenpole/gkfactors.hpp"

namespace eisenpole {

// Quintuple (P_i, s0, P_j, t0, w) with w . chi_{P_i,s0} = chi_{P_j,t0}
// (MinusHalf convention). `special` marks the c_ij construction.
struct AdmissibleData {
  int pi = 0, pj = 0;  // 0-based parabolic indices
  Rat s0, t0;
  WeylWord w;
  bool positive = false;
  bool special = false;
};

// Verifies the defining weight equation exactly.
bool is_admissible(const RootDatum& d, const AdmissibleData& a);

// The base pair (c_ij, -c_ji) with witness w_R w_{P_i}, plus the |c| variant
// through the longest coset representatives when -1 lies in W. Every output
// is verified against the weight equation; sign-negative data are kept with
// positive = false.
std::vector<AdmissibleData> special_admissible(const RootDatum& d, int i, int j);

// One linear piece of s -> dom(chi_P(s)): on [lo, hi] the chamber-reducing
// element is constant and the dominant value is affine in s.
struct DomSegment {
  Rat lo, hi;
  AffineWeight dom;
  WeylWord chamber;
};

// Exact piecewise-linear profile: breakpoints are the zeros of the coroot
// pairings of chi_P(s), so no sampling is involved.
std::vector<DomSegment> dom_profile(const RootDatum& d, int parabolic, const Rat& lo,
                                    const Rat& hi);

// Solves dom_P(s) = dom_Q(t) over all segment pairs; duplicates merged,
// witnesses are the shortest dominant-izing elements at the exact points.
std::vector<AdmissibleData> find_admissible(const RootDatum& d, int i, int j, bool positive_only,
                                            const Rat& lo = Rat(0), const Rat& hi = rat(1, 2));

// eps_{s0} = b_ii^{|N1|-|N0|-(n-1)} prod_{N0} 1/n_i prod_{N1 \ Delta_P} n_i.
Rat epsilon_factor(const RootDatum& d, int parabolic, const Rat& s0);

struct AssembledConstant {
  Rat prefactor;                  // rational part
  int r_power = 0;                // power of R
  std::map<Rat, int> zeta;        // argument -> exponent
  std::string str() const;
  std::string latex() const;
};

struct ZetaAssumption {
  Rat arg;
  bool critical;  // inside the critical strip after functional-equation normalization
  std::string str() const;
};

struct IdentityConstant {
  Rat eps_s, eps_t;
  long d = 0;  // |N_-1(chi_t)| - |N_-1(chi_s)|
  ZetaProduct h_quotient;
  ResidueFactor a_num, a_den;  // A_{P_j} and A_{P_i}
  long d_pi = 0, d_pj = 0;
  AssembledConstant assembled;
  std::vector<ZetaAssumption> assumptions;
};

IdentityConstant identity_constant(const RootDatum& d, const AdmissibleData& a);

std::string render_identity_text(const RootDatum& d, const AdmissibleData& a,
                                 const IdentityConstant& c);
std::string render_identity_latex(const RootDatum& d, const AdmissibleData& a,
                                  const IdentityConstant& c);
std::string render_identity_json(const RootDatum& d, const AdmissibleData& a,
                                 const IdentityConstant& c);

// The full positive search over all ordered pairs, merged and sorted by
// (i, j, s0, t0); includes the trivial (P_i, 1/2, P_j, 1/2, e) data.
std::vector<AdmissibleData> all_positive_admissible(const RootDatum& d);

// Connected components of the identity graph on the endpoints (P, s0),
// ignoring the trivial all-groups point at 1/2.
std::vector<std::vector<std::pair<int, Rat>>> identity_chains(
    const RootDatum& d, const std::vector<AdmissibleData>& data);

std::string chains_dot(const RootDatum& d, const std::vector<AdmissibleData>& data);

}  // namespace eisenpole
