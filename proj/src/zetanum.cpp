#include "eisenpole/zetanum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eisenpole {

BigFloat BigFloat::of(const Rat& q, mpfr_prec_t prec) {
  BigFloat b(prec);
  mpfr_set_q(b.v, q.get_mpq_t(), MPFR_RNDN);
  return b;
}

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
  BigFloat b(prec);
  mpfr_set_si(b.v, x, MPFR_RNDN);
  return b;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.v), mpfr_get_prec(b.v));
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.v, a.v, b.v, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.v, a.v, b.v, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.v, a.v, b.v, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_div(r.v, a.v, b.v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::neg() const {
  BigFloat r(prec());
  mpfr_neg(r.v, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(prec());
  mpfr_pow_si(r.v, v, e, MPFR_RNDN);
  return r;
}

long BigFloat::mag10() const {
  if (mpfr_zero_p(v)) return -1000000000L;
  mpfr_exp_t e2 = mpfr_get_exp(v);
  return static_cast<long>(static_cast<double>(e2) * 0.30102999566398119);
}

// Grid spacing 2^-83 (exact in binary) for the divided
// differences; the working precision grows with the table depth to absorb
// the cancellation, roughly 25 digits per level.
constexpr long kGridBits = 24;
constexpr long kMaxJ = 14;

ZetaNumeric::ZetaNumeric(long digits) : digits_(std::max(30L, digits)) {
  result_prec_ = static_cast<mpfr_prec_t>((digits_ + 12) * 3.33) + 16;
}

BigFloat ZetaNumeric::xi(const BigFloat& s) const {
  mpfr_prec_t p = s.prec();
  BigFloat z(p), g(p), pi(p), lnpi(p), expo(p), half_s(p), r(p);
  mpfr_zeta(z.v, s.v, MPFR_RNDN);
  mpfr_div_ui(half_s.v, s.v, 2, MPFR_RNDN);
  mpfr_gamma(g.v, half_s.v, MPFR_RNDN);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  mpfr_log(lnpi.v, pi.v, MPFR_RNDN);
  mpfr_mul(expo.v, half_s.v, lnpi.v, MPFR_RNDN);
  mpfr_neg(expo.v, expo.v, MPFR_RNDN);
  mpfr_exp(expo.v, expo.v, MPFR_RNDN);
  mpfr_mul(r.v, z.v, g.v, MPFR_RNDN);
  mpfr_mul(r.v, r.v, expo.v, MPFR_RNDN);
  return r;
}

BigFloat ZetaNumeric::xi(const Rat& s) const {
  if (s == 0 || s == 1) throw std::domain_error("xi has poles at 0 and 1");
  return xi(BigFloat::of(s, result_prec_));
}

// Taylor coefficients of f at `center` for j = 0..maxj, where f = xi or
// f = (s-1) xi(s) (the latter is entire near 1 with f(1) = R = 1 exactly).
std::vector<BigFloat> ZetaNumeric::taylor_family(const Rat& center, long maxj,
                                                 bool times_s_minus_1) const {
  const long m = maxj + 2;  // grid -m..m, degree 2m interpolation
  const mpfr_prec_t P =
      static_cast<mpfr_prec_t>((digits_ + 40) * 3.33) + kGridBits * (2 * m + 1) + 64;
  BigFloat h(P);
  mpfr_set_ui_2exp(h.v, 1, -kGridBits, MPFR_RNDN);
  BigFloat c = BigFloat::of(center, P);

  std::vector<BigFloat> xs, ys;
  for (long k = -m; k <= m; ++k) {
    BigFloat x = BigFloat::of(k, P) * h;  // offset from the center
    if (k == 0 && times_s_minus_1 && center == 1) {
      // exact center value: (s-1) xi(s) -> R = 1 at s = 1
      xs.push_back(x);
      ys.push_back(BigFloat::of(1, P));
      continue;
    }
    BigFloat s = c + x;
    BigFloat val = xi(s);
    if (times_s_minus_1) {
      BigFloat one = BigFloat::of(1, P);
      val = (s - one) * val;
    }
    xs.push_back(x);
    ys.push_back(val);
  }

  // Newton divided differences, then conversion to monomial coefficients.
  const std::size_t npts = xs.size();
  std::vector<BigFloat> dd = ys;
  std::vector<std::vector<BigFloat>> table;
  table.push_back(dd);
  for (std::size_t lvl = 1; lvl < npts; ++lvl) {
    std::vector<BigFloat> next;
    for (std::size_t i = 0; i + lvl < npts; ++i)
      next.push_back((table[lvl - 1][i + 1] - table[lvl - 1][i]) / (xs[i + lvl] - xs[i]));
    table.push_back(std::move(next));
  }
  std::vector<BigFloat> coeff(npts, BigFloat(P));
  std::vector<BigFloat> basis(npts, BigFloat(P));  // running prod (x - x_0)...(x - x_{k-1})
  mpfr_set_ui(basis[0].v, 1, MPFR_RNDN);
  std::size_t basis_deg = 0;
  for (std::size_t k = 0; k < npts; ++k) {
    for (std::size_t d = 0; d <= basis_deg; ++d) coeff[d] = coeff[d] + table[k][0] * basis[d];
    if (k + 1 < npts) {
      // basis *= (x - x_k)
      BigFloat xk = xs[k];
      std::vector<BigFloat> nb(npts, BigFloat(P));
      for (std::size_t d = 0; d <= basis_deg; ++d) {
        nb[d + 1] = nb[d + 1] + basis[d];
        nb[d] = nb[d] - xk * basis[d];
      }
      basis = std::move(nb);
      ++basis_deg;
    }
  }

  std::vector<BigFloat> out;
  for (long j = 0; j <= maxj; ++j) {
    BigFloat rounded(result_prec_);
    mpfr_set(rounded.v, coeff[j].v, MPFR_RNDN);
    out.push_back(std::move(rounded));
  }
  return out;
}

const BigFloat& ZetaNumeric::cached_coeff(const Rat& center, long j, bool c_family) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(center, c_family);
  auto it = cache_.find(key);
  if (it == cache_.end() || static_cast<long>(it->second.size()) <= j) {
    long maxj = std::max(j + 2, 8L);
    if (maxj > kMaxJ) throw std::domain_error("taylor coefficient order too large");
    cache_[key] = taylor_family(center, maxj, c_family);
    it = cache_.find(key);
  }
  return it->second[j];
}

BigFloat ZetaNumeric::atom(const SymbolAtom& a) const {
  switch (a.kind) {
    case SymbolAtom::kR:
      return BigFloat::of(1, result_prec_);  // residue of the completed zeta at 1
    case SymbolAtom::kC:
      // (s-1) xi(s) = R + sum_j c_j (s-1)^{j+1}
      return cached_coeff(Rat(1), a.index + 1, true);
    default:
      return cached_coeff(a.a, a.index, false);
  }
}

BigFloat ZetaNumeric::eval(const SymPoly& p) const {
  BigFloat acc(result_prec_);
  for (const auto& [mono, c] : p.terms()) {
    BigFloat term = BigFloat::of(c, result_prec_);
    for (const auto& [at, e] : mono) term = term * atom(at).pow_si(e);
    acc = acc + term;
  }
  return acc;
}

BigFloat ZetaNumeric::eval_zeta_product(const std::vector<std::pair<Rat, int>>& args_at_s) const {
  BigFloat acc = BigFloat::of(1, result_prec_);
  for (const auto& [arg, exp] : args_at_s) acc = acc * xi(arg).pow_si(exp);
  return acc;
}

long ZetaNumeric::digits_agree(const BigFloat& x, const BigFloat& y) {
  BigFloat diff = (x - y).abs();
  if (diff.is_zero()) return 1000;
  long scale = std::max({x.abs().mag10(), y.abs().mag10(), 0L});
  return scale - diff.mag10();
}

}  // namespace eisenpole
