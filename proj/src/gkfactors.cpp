#include "eisenpole/gkfactors.hpp"

#include <algorithm>
#include <sstream>

namespace eisenpole {

void ZetaProduct::mul_zeta(const AffLin& arg, int exp) {
  if (exp == 0) return;
  auto it = factors.find(arg);
  if (it == factors.end()) {
    factors[arg] = exp;
    return;
  }
  it->second += exp;
  if (it->second == 0) factors.erase(it);
}

ZetaProduct& ZetaProduct::operator*=(const ZetaProduct& o) {
  for (const auto& [arg, exp] : o.factors) mul_zeta(arg, exp);
  return *this;
}

std::vector<AffLin> ZetaProduct::numerator() const {
  std::vector<AffLin> out;
  for (const auto& [arg, exp] : factors)
    for (int k = 0; k < exp; ++k) out.push_back(arg);
  return out;
}

std::vector<AffLin> ZetaProduct::denominator() const {
  std::vector<AffLin> out;
  for (const auto& [arg, exp] : factors)
    for (int k = 0; k < -exp; ++k) out.push_back(arg);
  return out;
}

std::string ZetaProduct::str() const {
  if (is_one()) return "1";
  auto side = [&](bool num) {
    std::string s;
    for (const auto& [arg, exp] : factors) {
      if ((exp > 0) != num) continue;
      for (int k = 0; k < std::abs(exp); ++k) s += "zeta(" + arg.str() + ")";
    }
    return s;
  };
  std::string n = side(true), d = side(false);
  if (n.empty()) n = "1";
  return d.empty() ? n : n + " / " + d;
}

std::string ZetaProduct::latex() const {
  if (is_one()) return "1";
  auto side = [&](bool num) {
    std::string s;
    for (const auto& [arg, exp] : factors) {
      if ((exp > 0) != num) continue;
      std::string z = "\\zeta( " + arg.latex() + " )";
      int e = std::abs(exp);
      s += z;
      if (e > 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
  };
  std::string n = side(true), d = side(false);
  if (n.empty()) n = "1";
  if (d.empty()) return n;
  return "\\frac{" + n + "}{" + d + "}";
}

std::string ZetaProduct::json() const {
  std::ostringstream os;
  os << "{\"numerator\":[";
  bool first = true;
  for (const auto& a : numerator()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << a.str() << "\"";
  }
  os << "],\"denominator\":[";
  first = true;
  for (const auto& a : denominator()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << a.str() << "\"";
  }
  os << "]}";
  return os.str();
}

CFactor c_factor(const RootDatum& d, const WeylWord& w, const AffineWeight& chi) {
  CFactor out;
  for (int k : d.inversions(w)) {
    AffLin arg = pair_family(d, chi, d.positive_coroots()[k]);
    out.unreduced_numerator.push_back(arg);
    out.unreduced_denominator.push_back(AffLin{arg.slope, arg.offset + 1});
    out.reduced.mul_zeta(arg, +1);
    out.reduced.mul_zeta(AffLin{arg.slope, arg.offset + 1}, -1);
  }
  return out;
}

bool cocycle_check(const RootDatum& d, const WeylWord& w1, const WeylWord& w2,
                   const AffineWeight& chi) {
  WeylWord prod = d.compose(w1, w2);
  if (static_cast<int>(prod.size()) != d.length(w1) + d.length(w2))
    throw ConfigError("cocycle_check: factorization is not reduced");
  AffineWeight w2chi{d.apply(w2, chi.direction), d.apply(w2, chi.offset)};
  CFactor lhs = c_factor(d, prod, chi);
  CFactor rhs1 = c_factor(d, w1, w2chi);
  CFactor rhs2 = c_factor(d, w2, chi);
  auto key = [](std::vector<AffLin> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<AffLin> rn = rhs1.unreduced_numerator;
  rn.insert(rn.end(), rhs2.unreduced_numerator.begin(), rhs2.unreduced_numerator.end());
  std::vector<AffLin> rd = rhs1.unreduced_denominator;
  rd.insert(rd.end(), rhs2.unreduced_denominator.begin(), rhs2.unreduced_denominator.end());
  return key(lhs.unreduced_numerator) == key(rn) && key(lhs.unreduced_denominator) == key(rd);
}

DenominatorReport verify_denominator_assumption(const RootDatum& d, int parabolic,
                                                const Rat& s0) {
  DenominatorReport rep;
  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);
  for (const auto& w : d.coset_representatives(d.levi_of(parabolic))) {
    ++rep.cosets_checked;
    CFactor c = c_factor(d, w, chi);
    for (const auto& q : c.reduced.denominator()) {
      Rat v = q.at(s0);
      if (v <= 1) rep.violations.push_back({w, q, v});
    }
  }
  return rep;
}

ResidueFactor residue_factor(const RootDatum& d, int parabolic) {
  // Coroot heights over the Levi subsystem; each zeta(h)/zeta(h+1) telescopes
  // and the n-1 height-one factors contribute R/zeta(2) each via the residue.
  std::map<long, int> height_mult;
  for (int k = 0; k < d.num_positive(); ++k) {
    const RootVec& a = d.positive_roots()[k];
    if (a[parabolic] != 0) continue;
    long h = 0;
    for (long c : d.positive_coroots()[k]) h += c;
    ++height_mult[h];
  }
  ResidueFactor rf;
  rf.power_of_R = height_mult.count(1) ? height_mult[1] : 0;
  long max_h = height_mult.empty() ? 0 : height_mult.rbegin()->first;
  for (long k = 2; k <= max_h + 1; ++k) {
    int mk = height_mult.count(k) ? height_mult[k] : 0;
    int mk1 = height_mult.count(k - 1) ? height_mult[k - 1] : 0;
    if (mk - mk1 != 0) rf.zeta_exponents[k] = mk - mk1;
  }
  return rf;
}

std::string ResidueFactor::str() const {
  std::string num = power_of_R ? (power_of_R == 1 ? std::string("R")
                                                  : "R^" + std::to_string(power_of_R))
                               : std::string("1");
  std::string den;
  for (const auto& [k, e] : zeta_exponents) {
    if (e >= 0) continue;  // never happens for Levi heights; kept for safety
    for (int c = 0; c < -e; ++c) den += "zeta(" + std::to_string(k) + ")";
  }
  return den.empty() ? num : num + " / " + den;
}

std::string ResidueFactor::latex() const {
  std::string num =
      power_of_R ? (power_of_R == 1 ? std::string("R") : "R^{" + std::to_string(power_of_R) + "}")
                 : std::string("1");
  std::string den;
  for (const auto& [k, e] : zeta_exponents) {
    if (e >= 0) continue;
    den += "\\zeta ( " + std::to_string(k) + " )";
    if (e < -1) den += "^{" + std::to_string(-e) + "}";
  }
  if (den.empty()) return num;
  return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace eisenpole
