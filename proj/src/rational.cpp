#include "eisenpole/rational.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace eisenpole {

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    return std::nullopt;
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    return std::nullopt;
  }
  mpq_canonicalize(q);
  Rat out(q);
  mpq_clear(q);
  return out;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string rat_latex(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  Rat a = abs(q);
  return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0^negative");
    return Rat(1) / rat_pow(base, -exp);
  }
  Rat r(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::size_t RatHash::operator()(const Rat& q) const {
  std::size_t h = std::hash<double>{}(q.get_d());
  std::size_t lo = mpz_get_ui(q.get_num_mpz_t());
  return h ^ (lo + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(const Rat& c, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(w[i]);
  }
  return s + "]";
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  RatHash rh;
  for (const Rat& q : w) h = h * 1099511628211ULL + rh(q);
  return h;
}

}  // namespace eisenpole
