#include "eisenpole/sympoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eisenpole {

std::string SymbolAtom::str() const {
  switch (kind) {
    case kR:
      return "R";
    case kC:
      return "c_" + std::to_string(index);
    default:
      return "zeta(" + rat_str(a) + ")_" + std::to_string(index);
  }
}

std::string SymbolAtom::latex() const {
  switch (kind) {
    case kR:
      return "c_{-1}";
    case kC:
      return "c_{ " + std::to_string(index) + " }";
    default:
      return "\\zeta( " + rat_latex(a) + " )_{ " + std::to_string(index) + " }";
  }
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

SymPoly::SymPoly(const Rat& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SymPoly SymPoly::atom(const SymbolAtom& a, const Rat& coeff) {
  SymPoly p;
  if (coeff != 0) p.terms_[Monomial{{a, 1}}] = coeff;
  return p;
}

void SymPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  r += o;
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

SymPoly SymPoly::operator*(const Rat& c) const {
  SymPoly r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
  return r;
}

std::vector<SymbolAtom> SymPoly::atoms() const {
  std::set<SymbolAtom> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [a, e] : m) s.insert(a);
  return {s.begin(), s.end()};
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    Rat ac = abs(c);
    bool wrote = false;
    if (ac != 1 || m.empty()) {
      os << rat_str(ac);
      wrote = true;
    }
    for (const auto& [a, e] : m) {
      if (wrote) os << "*";
      os << a.str();
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::string SymPoly::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " ");
    first = false;
    Rat ac = abs(c);
    if (c < 0) os << "-";
    if (ac != 1 || m.empty()) os << rat_latex(ac) << " ";
    for (const auto& [a, e] : m) {
      os << a.latex();
      if (e > 1) os << "^{" << e << "}";
      os << " ";
    }
  }
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace eisenpole
