#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eisenpole/rational.hpp"

namespace eisenpole {

// Formal coefficient symbols of the completed zeta function:
//   R          residue at s = 1 (identical to c_{-1})
//   c_j        Taylor coefficients at s = 1, j >= 0
//   Z(a)_j     Taylor coefficients at s = a, a in lowest terms, a > 1/2 or
//              a = 1/2 (odd j at 1/2 never occur; the expansion drops them)
struct SymbolAtom {
  enum Kind { kR = 0, kC = 1, kZ = 2 };
  Kind kind = kR;
  long index = 0;  // j
  Rat a;           // only for kZ

  static SymbolAtom residue() { return {kR, 0, Rat(0)}; }
  static SymbolAtom c(long j) { return {kC, j, Rat(0)}; }
  static SymbolAtom z(const Rat& at, long j) { return {kZ, j, at}; }

  bool operator==(const SymbolAtom& o) const {
    return kind == o.kind && index == o.index && a == o.a;
  }
  bool operator<(const SymbolAtom& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == kZ && a != o.a) return a < o.a;
    return index < o.index;
  }
  std::string str() const;    // "R", "c_0", "zeta(2)_1"
  std::string latex() const;  // "c_{-1}", "c_{ 0 }", "\zeta( 2 )_{ 1 }"
};

// Monomial: sorted (atom, exponent) pairs, exponents > 0.
using Monomial = std::vector<std::pair<SymbolAtom, int>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);

// Multivariate polynomial over Q in the atoms; canonical sorted form, so the
// syntactic zero test is the semantic one (the coefficient ring is free).
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(const Rat& c);
  static SymPoly atom(const SymbolAtom& a, const Rat& coeff = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_single_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Rat& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator*(const Rat& c) const;
  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }

  std::vector<SymbolAtom> atoms() const;
  std::string str() const;
  std::string latex() const;

 private:
  std::map<Monomial, Rat> terms_;
};

}  // namespace eisenpole
