// Tests for the character-sum laboratory.
//
// Frozen values, re-derived here by direct summation:
//   G(trivial) = -1;  |G(chi)|^2 = field order for nontrivial chi
//   G_q(eta) = i sqrt(q) for prime q = 3 (mod 4);  G_{q^3}(chi_2')^2 = -q^3
//   semiprimitive evaluations over F_{q^6}:
//     q=3:  m=4 -> -27,  m=7 -> +27,  m=14 -> +27,  m=28 -> -27
//     q=7:  m=4 -> +343, m=8 -> -343, m=43 -> +343, m=86 -> +343
//     q=11: m=3 -> +1331, m=4 -> -1331, m=9 -> +1331, m=12 -> -1331
//   G(chi_4) = rho_q q^3 with rho_q = -1 iff q = 3 (mod 8)

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hemi/charsum.hpp"
#include "hemi/field.hpp"

using namespace hemi;

namespace {

const FieldCtx& field3() {
  static FieldCtx F = build_field(3, 1);
  return F;
}
const FieldCtx& field7() {
  static FieldCtx F = build_field(7, 1);
  return F;
}
const FieldCtx& field11() {
  static FieldCtx F = build_field(11, 1);
  return F;
}
CharLab& lab3() {
  static CharLab L(field3());
  return L;
}
CharLab& lab7() {
  static CharLab L(field7());
  return L;
}
CharLab& lab11() {
  static CharLab L(field11());
  return L;
}

MultChar random_char(const FieldCtx& F, Level L, std::mt19937_64& rng, bool nontrivial) {
  std::uint64_t n1 = F.level_order(L) - 1;
  std::uniform_int_distribution<std::uint64_t> dr(1, n1);
  for (;;) {
    std::uint64_t k = n1 / std::gcd(n1, dr(rng));
    std::uint64_t j = dr(rng) % k;
    if (nontrivial && j == 0) continue;
    return make_char(F, L, k, j);
  }
}

}  // namespace

TEST_CASE("character algebra: orders, products, powers, restriction") {
  const FieldCtx& F = field3();
  MultChar c4 = make_char(F, Level::Fq6, 4, 1);
  MultChar c13 = make_char(F, Level::Fq6, 13, 1);
  REQUIRE(c4.order() == 4);
  REQUIRE(c13.order() == 13);
  REQUIRE(make_char(F, Level::Fq6, 4, 2).order() == 2);
  REQUIRE(make_char(F, Level::Fq6, 4, 0).order() == 1);

  MultChar prod = char_product(F, c4, c13);
  REQUIRE(prod.modulus == 52);
  REQUIRE(prod.index == 17);  // 13*1 + 4*1
  REQUIRE(prod.order() == 52);
  REQUIRE(char_pow(F, prod, 4).order() == 13);
  REQUIRE(char_pow(F, c13, -1).index == 12);
  REQUIRE(conj_char(F, c4).index == 3);

  // modulus must divide the group order; products need one level
  REQUIRE_THROWS_AS(make_char(F, Level::Fq6, 5, 1), error);
  REQUIRE_THROWS_AS(char_product(F, c4, make_char(F, Level::Fq3, 2, 1)), error);

  // restriction to F_q: index-13 characters die, index-8 ones survive as the quadratic
  MultChar r13 = restrict_char(F, c13, Level::Fq);
  REQUIRE(r13.is_trivial());
  MultChar r8 = restrict_char(F, make_char(F, Level::Fq6, 8, 1), Level::Fq);
  REQUIRE(r8.modulus == 2);
  REQUIRE(r8.index == 1);

  // values are multiplicative and live on the unit circle
  CharLab& lab = lab3();
  std::mt19937_64 rng(201);
  std::uniform_int_distribution<std::uint64_t> de(0, F.P.order - 1);
  for (int t = 0; t < 2000; ++t) {
    FElem x = FElem::from_exp((std::uint32_t)de(rng));
    FElem y = FElem::from_exp((std::uint32_t)de(rng));
    std::complex<double> lhs = lab.char_value(prod, mul(F, x, y));
    std::complex<double> rhs = lab.char_value(prod, x) * lab.char_value(prod, y);
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
    REQUIRE(std::fabs(std::abs(lhs) - 1.0) < 1e-12);
  }
}

TEST_CASE("gauss sums: trivial value, modulus, error bound") {
  for (CharLab* labp : {&lab3(), &lab7()}) {
    CharLab& lab = *labp;
    const FieldCtx& F = lab.field();
    for (Level L : {Level::Fq, Level::Fq3, Level::Fq6}) {
      ComplexVal g0 = lab.gauss_sum(make_char(F, L, 1, 0));
      REQUIRE(std::abs(g0.z() - std::complex<double>(-1.0, 0.0)) < 1e-9);
      double n = (double)F.level_order(L);
      std::mt19937_64 rng(202 + (int)L);
      for (int t = 0; t < 12; ++t) {
        MultChar chi = random_char(F, L, rng, true);
        ComplexVal g = lab.gauss_sum(chi);
        REQUIRE(std::fabs(g.abs() * g.abs() - n) < 1e-6 * n);
        REQUIRE(g.err > 0);
        REQUIRE(g.err <= 1e-6 * std::sqrt(n - 1));  // conservative bound stays tiny
      }
    }
  }
}

TEST_CASE("quadratic gauss sums across the tower") {
  struct Row {
    CharLab* lab;
    double q;
  };
  for (Row row : {Row{&lab3(), 3.0}, Row{&lab7(), 7.0}, Row{&lab11(), 11.0}}) {
    CharLab& lab = *row.lab;
    const FieldCtx& F = lab.field();
    ComplexVal g = lab.gauss_sum(make_char(F, Level::Fq, 2, 1));
    REQUIRE(std::fabs(g.re) < 1e-9);
    REQUIRE(std::fabs(g.im - std::sqrt(row.q)) < 1e-9);  // G_q(eta) = +i sqrt(q)

    ComplexVal g3 = lab.gauss_sum(make_char(F, Level::Fq3, 2, 1));
    std::complex<double> sq = g3.z() * g3.z();
    REQUIRE(std::abs(sq - std::complex<double>(-row.q * row.q * row.q, 0.0)) < 1e-6);
    // the cubic lift of eta: G_{q^3}(chi_2') = G_q(eta)^3
    std::complex<double> cube = g.z() * g.z() * g.z();
    REQUIRE(std::abs(g3.z() - cube) < 1e-6);
  }

  // eta(2) = -1 exactly when q = 3 (mod 8)
  REQUIRE(std::abs(lab3().char_value(make_char(field3(), Level::Fq, 2, 1), scalar(field3(), 2)) -
                   std::complex<double>(-1.0, 0.0)) < 1e-12);
  REQUIRE(std::abs(lab11().char_value(make_char(field11(), Level::Fq, 2, 1), scalar(field11(), 2)) -
                   std::complex<double>(-1.0, 0.0)) < 1e-12);
  REQUIRE(std::abs(lab7().char_value(make_char(field7(), Level::Fq, 2, 1), scalar(field7(), 2)) -
                   std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("conjugation and Galois invariance of gauss sums") {
  for (CharLab* labp : {&lab3(), &lab7()}) {
    CharLab& lab = *labp;
    const FieldCtx& F = lab.field();
    std::mt19937_64 rng(203);
    for (Level L : {Level::Fq3, Level::Fq6}) {
      for (int t = 0; t < 25; ++t) {
        MultChar chi = random_char(F, L, rng, true);
        ComplexVal g = lab.gauss_sum(chi);
        // G(conj chi) = chi(-1) conj(G(chi))
        std::complex<double> chim1 = lab.char_value(chi, neg(F, one(F)));
        ComplexVal gc = lab.gauss_sum(conj_char(F, chi));
        REQUIRE(std::abs(gc.z() - chim1 * std::conj(g.z())) < 1e-7);
        // G(chi^p) = G(chi)
        ComplexVal gp = lab.gauss_sum(char_pow(F, chi, (std::int64_t)F.P.p));
        REQUIRE(std::abs(gp.z() - g.z()) < 1e-7);
      }
    }
  }
}

TEST_CASE("norm lifting: identity and pointwise lift relation") {
  const FieldCtx& F3 = field3();
  for (std::uint64_t m : {2ull, 13ull, 26ull}) {
    IdentityCheck c = verify_lifting(lab3(), make_char(F3, Level::Fq3, m, 1), Level::Fq6);
    INFO(c.name << " dev=" << c.deviation);
    REQUIRE(c.pass);
  }
  // from the bottom of the tower: s = 3 and s = 6
  REQUIRE(verify_lifting(lab3(), make_char(F3, Level::Fq, 2, 1), Level::Fq3).pass);
  REQUIRE(verify_lifting(lab3(), make_char(F3, Level::Fq, 2, 1), Level::Fq6).pass);
  REQUIRE(verify_lifting(lab7(), make_char(field7(), Level::Fq3, 3, 1), Level::Fq6).pass);
  REQUIRE(verify_lifting(lab7(), make_char(field7(), Level::Fq3, 57, 2), Level::Fq6).pass);

  // the lift is chi' after a norm, pointwise
  MultChar chi_sub = make_char(F3, Level::Fq3, 13, 1);
  MultChar chi = lift_char(F3, chi_sub, Level::Fq6);
  REQUIRE(chi.lifted_from == Level::Fq3);
  std::mt19937_64 rng(204);
  std::uniform_int_distribution<std::uint64_t> de(0, F3.P.order - 1);
  for (int t = 0; t < 2000; ++t) {
    FElem a = FElem::from_exp((std::uint32_t)de(rng));
    std::complex<double> lhs = lab3().char_value(chi, a);
    std::complex<double> rhs = lab3().char_value(chi_sub, norm(F3, a, Level::Fq6, Level::Fq3));
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
  }

  REQUIRE_THROWS_AS(verify_lifting(lab3(), make_char(F3, Level::Fq3, 13, 0), Level::Fq6), error);
  REQUIRE_THROWS_AS(verify_lifting(lab3(), make_char(F3, Level::Fq6, 4, 1), Level::Fq3), error);
}

TEST_CASE("semiprimitive gauss sum evaluations") {
  struct Row {
    CharLab* lab;
    std::uint64_t m;
    double expected;
  };
  std::vector<Row> rows = {
      {&lab3(), 4, -27.0},    {&lab3(), 7, 27.0},    {&lab3(), 14, 27.0},  {&lab3(), 28, -27.0},
      {&lab7(), 4, 343.0},    {&lab7(), 8, -343.0},  {&lab7(), 43, 343.0}, {&lab7(), 86, 343.0},
      {&lab11(), 3, 1331.0},  {&lab11(), 4, -1331.0}, {&lab11(), 9, 1331.0}, {&lab11(), 12, -1331.0},
  };
  for (const Row& r : rows) {
    IdentityCheck c = verify_semiprimitive(*r.lab, r.m);
    INFO(c.name << " lhs=(" << c.lhs.re << "," << c.lhs.im << ") dev=" << c.deviation);
    REQUIRE(c.pass);
    REQUIRE(std::abs(c.lhs.z() - std::complex<double>(r.expected, 0.0)) < c.tolerance);
  }
  // both quartic characters give the same value
  REQUIRE(std::abs(verify_semiprimitive(lab3(), 4, 3).lhs.z() - std::complex<double>(-27.0, 0.0)) < 1e-6);

  // G(chi_4) = rho_q q^3, matching the quartic identity's sign convention
  REQUIRE(std::fabs(lab3().gauss_sum(make_char(field3(), Level::Fq6, 4, 1)).re - (-27.0)) < 1e-6);
  REQUIRE(std::fabs(lab7().gauss_sum(make_char(field7(), Level::Fq6, 4, 1)).re - 343.0) < 1e-6);
  REQUIRE(std::fabs(lab11().gauss_sum(make_char(field11(), Level::Fq6, 4, 1)).re - (-1331.0)) < 1e-6);

  // p has no odd-power reaching -1 mod 13 at p=3; 5 does not divide 3^6-1
  REQUIRE_THROWS_AS(verify_semiprimitive(lab3(), 13), error);
  REQUIRE_THROWS_AS(verify_semiprimitive(lab3(), 5), error);
  REQUIRE_THROWS_AS(verify_semiprimitive(lab3(), 4, 2), error);
}

TEST_CASE("product formula instances") {
  const FieldCtx& F3 = field3();
  REQUIRE(verify_product_formula(lab3(), make_char(F3, Level::Fq6, 4, 1), 2).pass);
  REQUIRE(verify_product_formula(lab3(), make_char(F3, Level::Fq3, 26, 1), 2).pass);
  // the ell = 4 instance behind the quartic identity, chi = chi_4 chi_13
  MultChar chi413 = char_product(F3, make_char(F3, Level::Fq6, 4, 1), make_char(F3, Level::Fq6, 13, 1));
  REQUIRE(verify_product_formula(lab3(), chi413, 4).pass);
  REQUIRE(verify_product_formula(lab7(), make_char(field7(), Level::Fq3, 19, 1), 3).pass);
  REQUIRE(verify_product_formula(lab7(), make_char(field7(), Level::Fq6, 8, 3), 4).pass);

  // ell must be invertible in the field and eta of exact order ell
  REQUIRE_THROWS_AS(verify_product_formula(lab3(), chi413, 3), error);
  REQUIRE_THROWS_AS(verify_product_formula(lab7(), chi413, 7), error);
  REQUIRE_THROWS_AS(verify_product_formula(lab3(), chi413, 4, 2), error);
  REQUIRE_THROWS_AS(verify_product_formula(lab3(), make_char(F3, Level::Fq6, 4, 0), 2), error);

  // squared-identity shape: G(chi_4 chi_13)^2 = q^6 G(chi_13^4) / G(chi_13^2)
  ComplexVal lhs = lab3().gauss_sum(chi413);
  std::complex<double> l2 = lhs.z() * lhs.z();
  std::complex<double> r2 = 729.0 * lab3().gauss_sum(make_char(F3, Level::Fq6, 13, 4)).z() /
                            lab3().gauss_sum(make_char(F3, Level::Fq6, 13, 2)).z();
  REQUIRE(std::abs(l2 - r2) < 1e-5);
}

TEST_CASE("quartic-times-odd-order identity and corollary") {
  struct Row {
    CharLab* lab;
    std::uint64_t m;
  };
  for (Row r : {Row{&lab3(), 13}, Row{&lab7(), 3}, Row{&lab7(), 19}, Row{&lab7(), 57}}) {
    std::vector<IdentityCheck> cs = verify_main_identity(*r.lab, r.m);
    REQUIRE(cs.size() == 3);
    for (const IdentityCheck& c : cs) {
      INFO(c.name << " dev=" << c.deviation << " tol=" << c.tolerance);
      REQUIRE(c.pass);
    }
    // the sign is sharp: flipping rho moves the right side by 2 q^3, far past tolerance
    REQUIRE(std::abs(cs[1].lhs.z() + cs[1].rhs.z()) > 1.0);
  }

  REQUIRE_THROWS_AS(verify_main_identity(lab7(), 2), error);
  REQUIRE_THROWS_AS(verify_main_identity(lab7(), 5), error);
  FieldCtx F5 = build_field(5, 1);
  CharLab lab5(F5);
  REQUIRE_THROWS_AS(verify_main_identity(lab5, 31), error);
}

TEST_CASE("singer-set gauss identity") {
  for (std::uint64_t h = 1; h < 13; ++h) {
    IdentityCheck c = verify_singer_gauss(lab3(), h);
    INFO(c.name << " dev=" << c.deviation);
    REQUIRE(c.pass);
  }
  REQUIRE(verify_singer_gauss(lab7(), 1).pass);
  REQUIRE(verify_singer_gauss(lab7(), 29).pass);
  REQUIRE_THROWS_AS(verify_singer_gauss(lab3(), 0), error);
  REQUIRE_THROWS_AS(verify_singer_gauss(lab3(), 13), error);

  // degenerate index: left side -1, right side q(q+1)
  const FieldCtx& F = field3();
  ComplexVal g0 = lab3().gauss_sum(make_char(F, Level::Fq3, 13, 0));
  std::uint64_t zero_traces = 0;
  for (std::uint64_t i = 0; i < F.P.N; ++i)
    if (trace(F, pow_elem(F, omega(F), (std::int64_t)i), Level::Fq3, Level::Fq).is_zero()) ++zero_traces;
  REQUIRE(std::abs(g0.z() - std::complex<double>(-1.0, 0.0)) < 1e-9);
  REQUIRE(zero_traces == F.P.q + 1);
  REQUIRE(std::fabs((double)(F.P.q * zero_traces) - (-1.0)) > 1.0);
}

TEST_CASE("trace coset sums against gauss-sum ratios") {
  const FieldCtx& F3 = field3();
  REQUIRE(verify_trace_coset_sum(lab3(), make_char(F3, Level::Fq6, 8, 1), Level::Fq).pass);
  REQUIRE(verify_trace_coset_sum(lab3(), make_char(F3, Level::Fq6, 13, 1), Level::Fq).pass);  // trivial restriction
  REQUIRE(verify_trace_coset_sum(lab3(), make_char(F3, Level::Fq6, 26, 1), Level::Fq3).pass);
  REQUIRE(verify_trace_coset_sum(lab3(), make_char(F3, Level::Fq3, 13, 1), Level::Fq).pass);
  REQUIRE(verify_trace_coset_sum(lab7(), make_char(field7(), Level::Fq3, 57, 1), Level::Fq).pass);
  REQUIRE_THROWS_AS(verify_trace_coset_sum(lab3(), make_char(F3, Level::Fq6, 13, 0), Level::Fq), error);
}

TEST_CASE("gauss periods: direct sums equal the expansion") {
  const FieldCtx& F3 = field3();
  for (std::uint64_t k : {1ull, 4ull, 13ull, 52ull}) {
    CompensatedSum total;
    for (std::uint64_t i = 0; i < k; ++i) {
      IdentityCheck c = verify_gauss_period(lab3(), Level::Fq6, k, i);
      INFO(c.name << " dev=" << c.deviation);
      REQUIRE(c.pass);
      total.add(lab3().gauss_period(Level::Fq6, k, i).z());
    }
    // classes partition the nonzero elements, so the periods sum to -1
    REQUIRE(std::abs(total.value().z() - std::complex<double>(-1.0, 0.0)) < 1e-9);
  }
  REQUIRE(verify_gauss_period(lab3(), Level::Fq3, 2, 0).pass);
  REQUIRE(verify_gauss_period(lab7(), Level::Fq6, 4, 3).pass);
  REQUIRE_THROWS_AS(lab3().gauss_period(Level::Fq6, 5, 0), error);
  (void)F3;
}
