#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eisenpole/laurent.hpp"

using namespace eisenpole;

namespace {

SymPoly mono(const Rat& c, std::vector<SymbolAtom> atoms) {
  SymPoly p(c);
  for (const auto& a : atoms) p = p * SymPoly::atom(a);
  return p;
}

const SymbolAtom R = SymbolAtom::residue();
SymbolAtom C(long j) { return SymbolAtom::c(j); }
SymbolAtom Z(long num, long den, long j) { return SymbolAtom::z(rat(num, den), j); }

}  // namespace

TEST_CASE("expansion of zeta(16s-3) at 1/4 (pole case)") {
  LaurentPoly y1 = zeta_expand(AffLin{Rat(16), Rat(-3)}, rat(1, 4), 3);
  CHECK(y1.coeff(-1) == mono(rat(1, 16), {R}));
  CHECK(y1.coeff(0) == mono(Rat(1), {C(0)}));
  CHECK(y1.coeff(1) == mono(Rat(16), {C(1)}));
  CHECK(y1.coeff(2) == mono(Rat(256), {C(2)}));
  CHECK(y1.coeff(3) == mono(Rat(4096), {C(3)}));
}

TEST_CASE("expansion of zeta(8s-2) at 1/4 routes through the functional equation") {
  LaurentPoly y2 = zeta_expand(AffLin{Rat(8), Rat(-2)}, rat(1, 4), 3);
  CHECK(y2.coeff(-1) == mono(rat(-1, 8), {R}));
  CHECK(y2.coeff(0) == mono(Rat(1), {C(0)}));
  CHECK(y2.coeff(1) == mono(Rat(-8), {C(1)}));
  CHECK(y2.coeff(2) == mono(Rat(64), {C(2)}));
  CHECK(y2.coeff(3) == mono(Rat(-512), {C(3)}));
  // rewriting is an identity: the rewritten argument gives the same series
  LaurentPoly alt = zeta_expand(AffLin{Rat(-8), Rat(3)}, rat(1, 4), 3);
  CHECK(y2.coeffs == alt.coeffs);
}

TEST_CASE("expansion of zeta(8s) at 1/4 (regular value 2)") {
  LaurentPoly y3 = zeta_expand(AffLin{Rat(8), Rat(0)}, rat(1, 4), 3);
  CHECK(y3.coeff(0) == mono(Rat(1), {Z(2, 1, 0)}));
  CHECK(y3.coeff(1) == mono(Rat(8), {Z(2, 1, 1)}));
  CHECK(y3.coeff(2) == mono(Rat(64), {Z(2, 1, 2)}));
}

TEST_CASE("degenerate constant-pole input is rejected") {
  CHECK_THROWS_AS(zeta_expand(AffLin{Rat(0), Rat(1)}, rat(1, 4), 2), DegenerateZeta);
  CHECK_THROWS_AS(zeta_expand(AffLin{Rat(0), Rat(0)}, rat(1, 4), 2), DegenerateZeta);
  LaurentPoly c = zeta_expand(AffLin{Rat(0), Rat(4)}, rat(1, 4), 2);
  CHECK(c.coeff(0) == mono(Rat(1), {Z(4, 1, 0)}));
}

TEST_CASE("multiplying by the constant series 1 changes nothing") {
  LaurentPoly y1 = zeta_expand(AffLin{Rat(16), Rat(-3)}, rat(1, 4), 4);
  LaurentPoly one = laurent_one(rat(1, 4), 4);
  LaurentPoly prod = mul(y1, one);
  CHECK(prod.trunc == 3);  // a pole factor costs one order of reliability
  for (int e = -1; e <= prod.trunc; ++e) CHECK(prod.coeff(e) == y1.coeff(e));
}

TEST_CASE("Appendix products: y1 y2 y3 and y1 y3 y7 and their sum") {
  Rat s0 = rat(1, 4);
  int ord = 4;
  LaurentPoly y1 = zeta_expand(AffLin{Rat(16), Rat(-3)}, s0, ord);
  LaurentPoly y2 = zeta_expand(AffLin{Rat(8), Rat(-2)}, s0, ord);
  LaurentPoly y3 = zeta_expand(AffLin{Rat(8), Rat(0)}, s0, ord);
  LaurentPoly y7 = zeta_expand(AffLin{Rat(8), Rat(-1)}, s0, ord);

  LaurentPoly p123 = mul(mul(y1, y2), y3);
  SymPoly lead123 = mono(rat(-1, 128), {R, R, Z(2, 1, 0)});
  CHECK(p123.coeff(-2) == lead123);
  SymPoly next123 = mono(rat(-1, 16), {R, C(0), Z(2, 1, 0)}) + mono(rat(-1, 16), {R, R, Z(2, 1, 1)});
  CHECK(p123.coeff(-1) == next123);

  LaurentPoly p137 = mul(mul(y1, y3), y7);
  CHECK(p137.coeff(-2) == mono(rat(1, 128), {R, R, Z(2, 1, 0)}));
  CHECK(p137.coeff(-1) ==
        mono(rat(3, 16), {R, C(0), Z(2, 1, 0)}) + mono(rat(1, 16), {R, R, Z(2, 1, 1)}));

  LaurentPoly sum = add(p123, p137);
  CHECK(sum.coeff(-2).is_zero());
  CHECK(sum.coeff(-1) == mono(rat(1, 8), {R, C(0), Z(2, 1, 0)}));

  ZetaNumeric num(60);
  PoleOrder po = pole_order(sum, &num);
  CHECK(po.conclusive);
  CHECK(po.order == 1);
  CHECK(po.leading == mono(rat(1, 8), {R, C(0), Z(2, 1, 0)}));
  CHECK(po.cert == PoleOrder::kMonomialNonzero);
  CHECK(po.conditional_zeta_args.empty());
}

TEST_CASE("pole order of trivial and cancelled series") {
  LaurentPoly one = laurent_one(rat(1, 2), 3);
  PoleOrder po = pole_order(one, nullptr);
  CHECK(po.order == 0);
  CHECK(po.leading == SymPoly(Rat(1)));

  // c_{-1}x - c_{-1}x is an exact symbolic zero: the order drops
  LaurentPoly a;
  a.s0 = rat(1, 2);
  a.trunc = 2;
  a.set(-1, mono(Rat(1), {R}));
  a.set(0, mono(Rat(2), {C(0)}));
  LaurentPoly b;
  b.s0 = rat(1, 2);
  b.trunc = 2;
  b.set(-1, mono(Rat(-1), {R}));
  LaurentPoly s = add(a, b);
  PoleOrder po2 = pole_order(s, nullptr);
  CHECK(po2.order == 0);
  CHECK(po2.leading == mono(Rat(2), {C(0)}));

  LaurentPoly z = add(a, LaurentPoly{rat(1, 2), {{-1, mono(Rat(-1), {R})},
                                                 {0, mono(Rat(-2), {C(0)})}},
                                     2});
  CHECK_FALSE(pole_order(z, nullptr).conclusive);
}

TEST_CASE("odd coefficients at 1/2 never appear") {
  LaurentPoly p = zeta_expand(AffLin{Rat(2), Rat(0)}, rat(1, 4), 6);
  for (const auto& [e, c] : p.coeffs) {
    CHECK(e % 2 == 0);
    for (const SymbolAtom& at : c.atoms()) {
      CHECK(at.kind == SymbolAtom::kZ);
      CHECK(at.a == rat(1, 2));
      CHECK(at.index % 2 == 0);
    }
  }
}

TEST_CASE("chain rule: coefficient j scales by slope^j") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> sl(1, 12);
  for (int trial = 0; trial < 10; ++trial) {
    Rat a = rat(sl(rng), 1 + trial % 2);
    Rat s0 = rat(1, 3);
    Rat v = rat(7, 3);  // target value of the argument at s0
    // arg(s) = a s + (v - a s0)
    LaurentPoly scaled = zeta_expand(AffLin{a, v - a * s0}, s0, 5);
    LaurentPoly unit = zeta_expand(AffLin{Rat(1), v - s0}, s0, 5);
    for (int j = 0; j <= 5; ++j) CHECK(scaled.coeff(j) == unit.coeff(j) * rat_pow(a, j));
  }
}

TEST_CASE("numeric backend: completed zeta basics") {
  ZetaNumeric num(60);
  // xi(2) = pi/6
  BigFloat x2 = num.xi(Rat(2));
  BigFloat pi(num.result_prec());
  mpfr_const_pi(pi.v, MPFR_RNDN);
  BigFloat ref = pi / BigFloat::of(6, num.result_prec());
  CHECK(ZetaNumeric::digits_agree(x2, ref) >= 58);
  // functional equation xi(s) = xi(1-s)
  CHECK(ZetaNumeric::digits_agree(num.xi(rat(1, 3)), num.xi(rat(2, 3))) >= 58);
  CHECK(ZetaNumeric::digits_agree(num.xi(rat(-3, 2)), num.xi(rat(5, 2))) >= 58);
  // R = 1 exactly, and Z(a)_0 = xi(a)
  CHECK(num.atom(SymbolAtom::residue()).str(5) == "1");
  CHECK(ZetaNumeric::digits_agree(num.atom(SymbolAtom::z(rat(7, 2), 0)), num.xi(rat(7, 2))) >=
        58);
}

TEST_CASE("numeric certificate: series evaluation matches the zeta product") {
  ZetaNumeric num(60);
  Rat s0 = rat(1, 4);
  std::vector<AffLin> args{{Rat(16), Rat(-3)}, {Rat(8), Rat(-2)}, {Rat(8), Rat(0)}};
  LaurentPoly prod = laurent_one(s0, 8);
  for (const auto& a : args) prod = mul(prod, zeta_expand(a, s0, 8));

  BigFloat ds(num.result_prec());
  mpfr_set_ui(ds.v, 10, MPFR_RNDN);
  mpfr_pow_si(ds.v, ds.v, -8, MPFR_RNDN);
  BigFloat series_val = eval_laurent(prod, num, ds);

  std::vector<std::pair<Rat, int>> at;
  Rat s = s0 + rat(1, 100000000);
  for (const auto& a : args) at.emplace_back(a.at(s), 1);
  BigFloat direct = num.eval_zeta_product(at);
  CHECK(ZetaNumeric::digits_agree(series_val, direct) >= 30);
}

TEST_CASE("taylor coefficients drive xi reconstruction at a regular point") {
  ZetaNumeric num(60);
  // xi(a + d) ~= sum_j Z(a)_j d^j to high accuracy for small d
  Rat a = rat(5, 2);
  BigFloat d(num.result_prec());
  mpfr_set_ui(d.v, 10, MPFR_RNDN);
  mpfr_pow_si(d.v, d.v, -9, MPFR_RNDN);
  BigFloat acc(num.result_prec());
  for (long j = 0; j <= 6; ++j)
    acc = acc + num.atom(SymbolAtom::z(a, j)) * d.pow_si(j);
  BigFloat direct = num.xi(BigFloat::of(a, num.result_prec()) + d);
  CHECK(ZetaNumeric::digits_agree(acc, direct) >= 50);
}

TEST_CASE("critical-strip atoms are reported as conditional") {
  LaurentPoly p = zeta_expand(AffLin{Rat(2), Rat(0)}, rat(1, 4), 2);  // value 1/2
  ZetaNumeric num(60);
  PoleOrder po = pole_order(p, &num);
  REQUIRE(po.conditional_zeta_args.size() == 1);
  CHECK(po.conditional_zeta_args[0] == rat(1, 2));
  LaurentPoly q = zeta_expand(AffLin{Rat(3), Rat(-1)}, rat(5, 9), 2);  // value 2/3
  PoleOrder pq = pole_order(q, &num);
  REQUIRE(pq.conditional_zeta_args.size() == 1);
  CHECK(pq.conditional_zeta_args[0] == rat(2, 3));
}

TEST_CASE("mismatched expansion points are rejected") {
  LaurentPoly a = laurent_one(rat(1, 4), 2), b = laurent_one(rat(1, 2), 2);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
}

TEST_CASE("appendix latex rendering of the final sum") {
  LaurentPoly sum;
  sum.s0 = rat(1, 4);
  sum.trunc = 0;
  sum.set(-1, mono(rat(1, 8), {R, C(0), Z(2, 1, 0)}));
  CHECK(sum.latex() ==
        "\\frac{\\frac{1}{8} c_{-1} c_{ 0 } \\zeta( 2 )_{ 0 }}{(s- \\frac{1}{4} )} + \\dots");
}
