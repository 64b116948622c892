#include "eisenpole/characters.hpp"

#include <sstream>

namespace eisenpole {

namespace {
std::string lin_str(const Rat& a, const Rat& b, const char* times, const char* plus,
                    const char* minus) {
  std::ostringstream os;
  if (a != 0) {
    if (a == -1)
      os << "-";
    else if (a != 1)
      os << rat_str(a) << times;
    else
      os << "";
    os << "s";
    if (b > 0)
      os << plus << rat_str(b);
    else if (b < 0)
      os << minus << rat_str(-b);
  } else {
    os << rat_str(b);
  }
  return os.str();
}
}  // namespace

std::string AffLin::str() const { return lin_str(slope, offset, "", "+", "-"); }

std::string AffLin::latex() const {
  std::ostringstream os;
  if (slope == 0) return rat_latex(offset);
  if (slope == -1)
    os << "-";
  else if (slope != 1)
    os << rat_latex(slope) << " ";
  os << "s";
  if (offset > 0)
    os << "+ " << rat_latex(offset);
  else if (offset < 0)
    os << "- " << rat_latex(-offset);
  return os.str();
}

Weight delta_B(const RootDatum& d) {
  RootVec sum(d.rank(), 0);
  for (const auto& a : d.positive_roots())
    for (int i = 0; i < d.rank(); ++i) sum[i] += a[i];
  return d.root_to_weight(sum);
}

Weight delta_P(const RootDatum& d, const std::vector<int>& levi) {
  std::vector<bool> in(d.rank(), false);
  for (int i : levi) in[i] = true;
  RootVec sum(d.rank(), 0);
  for (const auto& a : d.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < d.rank(); ++i)
      if (a[i] != 0 && !in[i]) inside = false;
    if (inside) continue;
    for (int i = 0; i < d.rank(); ++i) sum[i] += a[i];
  }
  return d.root_to_weight(sum);
}

BMatrix b_matrix(const RootDatum& d) {
  int n = d.rank();
  BMatrix b;
  b.entries.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    Weight dpi = delta_P(d, d.levi_of(i));
    b.entries[i][i] = dpi[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<int> levi;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) levi.push_back(k);
      Weight dr = delta_P(d, levi);
      b.entries[i][j] = dr[i];
    }
  return b;
}

std::string BMatrix::latex() const {
  std::ostringstream os;
  os << "\\left(\\begin{array}{" << std::string(entries.size(), 'r') << "}\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j) os << " & ";
      os << rat_latex(entries[i][j]);
    }
    os << (i + 1 < entries.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{array}\\right)";
  return os.str();
}

std::string BMatrix::json() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j) os << ",";
      os << "\"" << rat_str(entries[i][j]) << "\"";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

AffineWeight chi_family(const RootDatum& d, int parabolic, Convention conv) {
  Weight dp = delta_P(d, d.levi_of(parabolic));
  Weight db = delta_B(d);
  Rat half = rat(1, 2);
  AffineWeight chi;
  chi.direction = dp;
  if (conv == Convention::MinusHalf)
    chi.offset = half * db - half * dp;
  else
    chi.offset = half * dp - half * db;
  return chi;
}

AffLin pair_family(const RootDatum& d, const AffineWeight& chi, const CorootVec& cv) {
  return AffLin{d.pair(chi.direction, cv), d.pair(chi.offset, cv)};
}

std::vector<int> n_epsilon(const RootDatum& d, const Weight& chi, const Rat& eps) {
  std::vector<int> out;
  for (int k = 0; k < d.num_positive(); ++k)
    if (d.pair(chi, d.positive_coroots()[k]) == eps) out.push_back(k);
  return out;
}

long d_P(const RootDatum& d, int parabolic, const Rat& s0) {
  Weight chi = chi_family(d, parabolic, Convention::MinusHalf).at(s0);
  long n1 = static_cast<long>(n_epsilon(d, chi, Rat(1)).size());
  long n0 = static_cast<long>(n_epsilon(d, chi, Rat(0)).size());
  return n1 - n0 - (d.rank() - 1);
}

}  // namespace eisenpole
