#pragma once

#include <mpfr.h>

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "eisenpole/sympoly.hpp"

namespace eisenpole {

// Small RAII wrapper over mpfr_t; every value carries its own precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_set(v, o.v, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_swap(v, o.v);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v, mpfr_get_prec(o.v));
      mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v, o.v);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v); }

  static BigFloat of(const Rat& q, mpfr_prec_t prec);
  static BigFloat of(long x, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v); }
  int sign() const { return mpfr_sgn(v); }
  bool is_zero() const { return mpfr_zero_p(v); }
  double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
  std::string str(int digits = 30) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat neg() const;
  BigFloat abs() const;
  BigFloat pow_si(long e) const;
  // floor(log10 |x|), very negative for zero
  long mag10() const;

  mpfr_t v;
};

// Numeric backend for the formal symbols: the completed zeta
// xi(s) = pi^{-s/2} Gamma(s/2) zeta_Riemann(s), its residue R = 1 at s = 1,
// and Taylor coefficients at arbitrary rational centers, all to a configured
// number of decimal digits. Derivatives come from Newton divided differences
// on a tiny symmetric grid at much higher working precision. The coefficient
// cache is shared and synchronized.
class ZetaNumeric {
 public:
  explicit ZetaNumeric(long digits = 120);

  long digits() const { return digits_; }
  mpfr_prec_t result_prec() const { return result_prec_; }

  BigFloat xi(const Rat& s) const;       // s not in {0,1}
  BigFloat xi(const BigFloat& s) const;  // at the argument's precision

  BigFloat atom(const SymbolAtom& a) const;
  BigFloat eval(const SymPoly& p) const;

  // prod xi(arg(s))^exp over (arg, exp) pairs, at rational s.
  BigFloat eval_zeta_product(const std::vector<std::pair<Rat, int>>& args_at_s) const;

  // Number of agreeing decimal digits, relative to the larger magnitude.
  static long digits_agree(const BigFloat& x, const BigFloat& y);

 private:
  std::vector<BigFloat> taylor_family(const Rat& center, long maxj, bool times_s_minus_1) const;
  const BigFloat& cached_coeff(const Rat& center, long j, bool c_family) const;

  long digits_;
  mpfr_prec_t result_prec_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Rat, bool>, std::vector<BigFloat>> cache_;
};

}  // namespace eisenpole
