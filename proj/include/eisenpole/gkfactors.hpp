#pragma once

#include <map>
#include <string>
#include <vector>

#include "eisenpole/characters.hpp"

namespace eisenpole {

// Product prod zeta(p_i(s)) / prod zeta(q_j(s)) with affine-linear arguments,
// stored as argument -> exponent (positive: numerator, negative: denominator).
// The map form is reduced by construction; the unreduced factor lists of a
// C_w are exposed separately where the factor count matters.
struct ZetaProduct {
  std::map<AffLin, int> factors;

  bool is_one() const { return factors.empty(); }
  bool operator==(const ZetaProduct& o) const { return factors == o.factors; }
  void mul_zeta(const AffLin& arg, int exp);
  ZetaProduct& operator*=(const ZetaProduct& o);
  std::vector<AffLin> numerator() const;
  std::vector<AffLin> denominator() const;
  std::string str() const;
  std::string latex() const;  // \frac{\zeta( 16 s -3 )...}{...}
  std::string json() const;
};

struct CFactor {
  std::vector<AffLin> unreduced_numerator;    // <chi_s, a^vee>, one per inversion
  std::vector<AffLin> unreduced_denominator;  // same + 1
  ZetaProduct reduced;
};

// Gindikin-Karpelevich factor C_w(chi_s) as a product over the inversion set.
CFactor c_factor(const RootDatum& d, const WeylWord& w, const AffineWeight& chi);

// C_{w1 w2}(chi) = C_{w1}(w2 chi) * C_{w2}(chi) for a reduced factorization;
// throws ConfigError when l(w1 w2) != l(w1) + l(w2).
bool cocycle_check(const RootDatum& d, const WeylWord& w1, const WeylWord& w2,
                   const AffineWeight& chi);

struct DenominatorReport {
  struct Violation {
    WeylWord w;
    AffLin arg;
    Rat value;
  };
  int cosets_checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that every reduced denominator argument of every C_w, w in W(G,P),
// exceeds 1 at s0 (the pole pipeline then only ever looks at numerators).
DenominatorReport verify_denominator_assumption(const RootDatum& d, int parabolic, const Rat& s0);

// A_{w_P} = R^{n-1} / prod zeta(k_j): the iterated residue of C_{w_P} along
// the simple-root hyperplanes, telescoped over the Levi coroot heights.
struct ResidueFactor {
  int power_of_R = 0;
  std::map<long, int> zeta_exponents;  // argument -> exponent (<= 0 here)

  std::string str() const;
  std::string latex() const;
};

ResidueFactor residue_factor(const RootDatum& d, int parabolic);

}  // namespace eisenpole
