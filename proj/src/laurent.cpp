#include "eisenpole/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace eisenpole {

std::string LaurentPoly::str() const {
  if (coeffs.empty()) return "0 (trunc " + std::to_string(trunc) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*(s-" << rat_str(s0) << ")^" << e;
  }
  os << " + O((s-" << rat_str(s0) << ")^" << trunc + 1 << ")";
  return os.str();
}

std::string LaurentPoly::latex() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    std::string body = c.latex();
    bool sum = c.terms().size() > 1;
    if (e == 0) {
      os << (sum ? "\\left(" + body + "\\right)" : body);
    } else if (e < 0) {
      os << "\\frac{" << body << "}{(s- " << rat_latex(s0) << " )";
      if (e != -1) os << "^{" << -e << "}";
      os << "}";
    } else {
      os << (sum ? "\\left(" + body + "\\right)" : body);
      os << "(s- " << rat_latex(s0) << " )";
      if (e != 1) os << "^{" << e << "}";
    }
  }
  os << " + \\dots";
  return os.str();
}

LaurentPoly laurent_one(const Rat& s0, int trunc) {
  LaurentPoly p;
  p.s0 = s0;
  p.trunc = trunc;
  p.set(0, SymPoly(Rat(1)));
  return p;
}

LaurentPoly zeta_expand(const AffLin& arg, const Rat& s0, int order) {
  AffLin a = arg;
  Rat v = a.at(s0);
  if (a.slope == 0) {
    if (v == 1 || v == 0) throw DegenerateZeta("constant zeta argument at a pole: " + arg.str());
    LaurentPoly p;
    p.s0 = s0;
    p.trunc = order;
    Rat c = v <= rat(1, 2) ? Rat(1) - v : v;
    p.set(0, SymPoly::atom(SymbolAtom::z(c, 0)));
    return p;
  }
  if (v <= rat(1, 2)) {  // functional equation zeta(s) = zeta(1-s)
    a = AffLin{-a.slope, Rat(1) - a.offset};
    v = Rat(1) - v;
  }
  LaurentPoly p;
  p.s0 = s0;
  p.trunc = order;
  if (v == 1) {
    p.set(-1, SymPoly::atom(SymbolAtom::residue(), Rat(1) / a.slope));
    for (int j = 0; j <= order; ++j)
      p.set(j, SymPoly::atom(SymbolAtom::c(j), rat_pow(a.slope, j)));
  } else if (v == rat(1, 2)) {
    for (int j = 0; j <= order; j += 2)  // odd derivatives vanish at 1/2
      p.set(j, SymPoly::atom(SymbolAtom::z(v, j), rat_pow(a.slope, j)));
  } else {
    for (int j = 0; j <= order; ++j)
      p.set(j, SymPoly::atom(SymbolAtom::z(v, j), rat_pow(a.slope, j)));
  }
  return p;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.s0 != b.s0) throw std::invalid_argument("laurent mul: mismatched expansion points");
  LaurentPoly r;
  r.s0 = a.s0;
  if (a.empty() || b.empty()) {
    r.trunc = std::min(a.trunc, b.trunc);
    return r;
  }
  long t1 = static_cast<long>(a.trunc) + b.min_exp();
  long t2 = static_cast<long>(b.trunc) + a.min_exp();
  r.trunc = static_cast<int>(std::min(t1, t2));
  for (const auto& [e1, c1] : a.coeffs)
    for (const auto& [e2, c2] : b.coeffs) {
      int e = e1 + e2;
      if (e > r.trunc) continue;
      SymPoly prod = c1 * c2;
      if (prod.is_zero()) continue;
      auto it = r.coeffs.find(e);
      if (it == r.coeffs.end())
        r.coeffs[e] = prod;
      else {
        it->second += prod;
        if (it->second.is_zero()) r.coeffs.erase(it);
      }
    }
  return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.s0 != b.s0) throw std::invalid_argument("laurent add: mismatched expansion points");
  LaurentPoly r;
  r.s0 = a.s0;
  r.trunc = std::min(a.trunc, b.trunc);
  r.coeffs = a.coeffs;
  for (const auto& [e, c] : b.coeffs) {
    auto it = r.coeffs.find(e);
    if (it == r.coeffs.end())
      r.coeffs[e] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs.erase(it);
    }
  }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
    it = it->first > r.trunc ? r.coeffs.erase(it) : std::next(it);
  return r;
}

PoleOrder pole_order(const LaurentPoly& p, const ZetaNumeric* num) {
  PoleOrder out;
  if (p.coeffs.empty()) {
    out.conclusive = false;
    return out;
  }
  out.conclusive = true;
  int e = p.coeffs.begin()->first;
  out.order = -e;
  out.leading = p.coeffs.begin()->second;
  for (const SymbolAtom& a : out.leading.atoms())
    if (a.kind == SymbolAtom::kZ && a.a < 1) {
      // after functional-equation rewriting every stored center is >= 1/2,
      // so a < 1 means the critical strip: nonvanishing is an assumption
      // for general F, verified numerically for F = Q
      if (out.conditional_zeta_args.empty() || out.conditional_zeta_args.back() != a.a)
        out.conditional_zeta_args.push_back(a.a);
    }
  std::sort(out.conditional_zeta_args.begin(), out.conditional_zeta_args.end());
  out.conditional_zeta_args.erase(
      std::unique(out.conditional_zeta_args.begin(), out.conditional_zeta_args.end()),
      out.conditional_zeta_args.end());
  if (num) {
    BigFloat v = num->eval(out.leading);
    out.leading_mag10 = v.mag10();
    bool nonzero = !v.is_zero() && out.leading_mag10 > -(num->digits() / 2);
    if (out.leading.is_single_monomial())
      out.cert = PoleOrder::kMonomialNonzero;
    else
      out.cert = nonzero ? PoleOrder::kNumericNonzero : PoleOrder::kNumericZeroSuspected;
  } else {
    out.cert = PoleOrder::kSymbolicOnly;
  }
  return out;
}

BigFloat eval_laurent(const LaurentPoly& p, const ZetaNumeric& num, const BigFloat& ds) {
  BigFloat acc(ds.prec());
  for (const auto& [e, c] : p.coeffs) acc = acc + num.eval(c) * ds.pow_si(e);
  return acc;
}

}  // namespace eisenpole
