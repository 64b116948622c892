#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "eisenpole/characters.hpp"
#include "eisenpole/sympoly.hpp"
#include "eisenpole/zetanum.hpp"

namespace eisenpole {

struct DegenerateZeta : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in (s - s0) over SymPoly; absent exponents are
// zero, `trunc` is the highest exponent the series is reliable for and is
// propagated as the minimum under multiplication.
struct LaurentPoly {
  Rat s0;
  std::map<int, SymPoly> coeffs;
  int trunc = INT_MAX;

  void set(int e, const SymPoly& p) {
    if (!p.is_zero()) coeffs[e] = p;
  }
  SymPoly coeff(int e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? SymPoly() : it->second;
  }
  bool empty() const { return coeffs.empty(); }
  int min_exp() const { return coeffs.empty() ? trunc : coeffs.begin()->first; }

  std::string str() const;
  std::string latex() const;  // pole terms first, Appendix style
};

LaurentPoly laurent_one(const Rat& s0, int trunc);

// Expansion of zeta(arg(s)) around s0 up to (s-s0)^order. Arguments with
// value <= 1/2 at s0 are first rewritten through zeta(s) = zeta(1-s); a pole
// (value 1 after rewriting, or 0 before) with slope 0 is a degenerate input.
LaurentPoly zeta_expand(const AffLin& arg, const Rat& s0, int order);

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);

struct PoleOrder {
  bool conclusive = false;
  int order = 0;     // -(least exponent with nonzero coefficient)
  SymPoly leading;
  enum Cert { kMonomialNonzero, kNumericNonzero, kNumericZeroSuspected, kSymbolicOnly } cert =
      kSymbolicOnly;
  long leading_mag10 = 0;                  // decimal magnitude of the numeric value
  std::vector<Rat> conditional_zeta_args;  // zeta arguments inside the critical strip
};

// Finds the pole order and leading coefficient of p within its truncation
// window. `num` (optional) certifies nonvanishing numerically; conclusive is
// false when every retained coefficient is symbolically zero, in which case
// the caller should retry with a deeper truncation.
PoleOrder pole_order(const LaurentPoly& p, const ZetaNumeric* num);

BigFloat eval_laurent(const LaurentPoly& p, const ZetaNumeric& num, const BigFloat& ds);

}  // namespace eisenpole
