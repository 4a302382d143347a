// Multiplicative characters and Gauss sums over the field tower.
//
// A character is stored as (level, modulus k, index j) against the fixed
// generator gamma_L = gamma^{(q^6-1)/(|L|-1)} of F_L^*:
//   chi(gamma_L^e) = zeta_k^{j e},  zeta_k = exp(2 pi i / k).
// In this indexing a norm lift keeps (k, j) unchanged and a restriction to a
// subfield multiplies j by the exponent step, so every character in play is
// reproducible from two integers.  All sums are direct, with compensated
// accumulation and a conservative running error bound.
//
// The verify_* functions evaluate both sides of the classical Gauss-sum
// identities this construction rests on (semiprimitive evaluation, norm
// lifting, the product formula, the quartic-times-odd-order identity and its
// corollary, and the Singer-set identity) and report the deviation.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hemi/field.hpp"

namespace hemi {

// complex value with a conservative absolute error bound
struct ComplexVal {
  double re = 0, im = 0;
  double err = 0;

  std::complex<double> z() const { return {re, im}; }
  double abs() const { return std::hypot(re, im); }

  static ComplexVal exact(std::complex<double> v) { return {v.real(), v.imag(), 0.0}; }
};

inline ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
  std::complex<double> v = a.z() * b.z();
  double err = a.err * b.abs() + b.err * a.abs() + a.err * b.err + 4e-16 * std::abs(v);
  return {v.real(), v.imag(), err};
}

inline ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
  std::complex<double> v = a.z() / b.z();
  double bb = b.abs();
  double err = (a.err + std::abs(v) * b.err) / bb + 4e-16 * std::abs(v);
  return {v.real(), v.imag(), err};
}

inline ComplexVal operator*(double s, const ComplexVal& a) { return {s * a.re, s * a.im, std::fabs(s) * a.err}; }
inline ComplexVal operator-(const ComplexVal& a) { return {-a.re, -a.im, a.err}; }

inline ComplexVal cpow_int(ComplexVal base, std::uint32_t n) {
  ComplexVal acc = ComplexVal::exact(1.0);
  for (std::uint32_t i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

// Neumaier-compensated complex accumulator; the bound charges a few ulps per term
class CompensatedSum {
 public:
  void add(std::complex<double> t) {
    add_one(sre_, cre_, t.real());
    add_one(sim_, cim_, t.imag());
    abs_total_ += std::abs(t);
  }
  ComplexVal value() const { return {sre_ + cre_, sim_ + cim_, 1e-15 * abs_total_}; }

 private:
  static void add_one(double& s, double& c, double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double sre_ = 0, cre_ = 0, sim_ = 0, cim_ = 0;
  double abs_total_ = 0;
};

struct MultChar {
  Level level = Level::Fq6;
  std::uint64_t modulus = 1;  // k, divides |F_level| - 1
  std::uint64_t index = 0;    // j, reduced mod k
  Level lifted_from = Level::Fq6;  // == level unless built by lift_char

  bool is_trivial() const { return index == 0; }
  std::uint64_t order() const { return modulus / std::gcd(modulus, index); }
};

inline MultChar make_char(const FieldCtx& F, Level L, std::uint64_t k, std::uint64_t j) {
  if (k == 0 || (F.level_order(L) - 1) % k != 0)
    throw error(errc::not_a_divisor, "character modulus must divide the multiplicative group order");
  return {L, k, j % k, L};
}

inline MultChar char_product(const FieldCtx& F, const MultChar& a, const MultChar& b) {
  if (a.level != b.level) throw error(errc::level_mismatch, "character product needs a common level");
  std::uint64_t g = std::gcd(a.modulus, b.modulus);
  std::uint64_t k = a.modulus / g * b.modulus;
  std::uint64_t j = (a.index * (k / a.modulus) + b.index * (k / b.modulus)) % k;
  return make_char(F, a.level, k, j);
}

inline MultChar char_pow(const FieldCtx& F, const MultChar& a, std::int64_t s) {
  std::int64_t k = (std::int64_t)a.modulus;
  std::int64_t r = s % k;
  if (r < 0) r += k;
  return make_char(F, a.level, a.modulus, (a.index * (std::uint64_t)r) % a.modulus);
}

inline MultChar conj_char(const FieldCtx& F, const MultChar& a) { return char_pow(F, a, -1); }

// norm lift: chi'(x) = chi(Norm_{to/level}(x)); (k, j) are unchanged against gamma_to
inline MultChar lift_char(const FieldCtx& F, const MultChar& a, Level to) {
  if (F.level_degree(to) % F.level_degree(a.level) != 0)
    throw error(errc::level_mismatch, "lift target is not an extension of the character's field");
  MultChar r{to, a.modulus, a.index, a.level};
  (void)F;
  return r;
}

// restriction to a subfield, reduced to lowest terms
inline MultChar restrict_char(const FieldCtx& F, const MultChar& a, Level to) {
  if (F.level_degree(a.level) % F.level_degree(to) != 0)
    throw error(errc::level_mismatch, "restriction target is not a subfield of the character's field");
  std::uint64_t r = (F.level_order(a.level) - 1) / (F.level_order(to) - 1);
  std::uint64_t jr = (a.index * (r % a.modulus)) % a.modulus;
  std::uint64_t g = std::gcd(jr, a.modulus);  // g = k when jr = 0
  return make_char(F, to, a.modulus / g, jr / g);
}

// Caches per-level trace tables, root-of-unity tables, and Gauss sums.
class CharLab {
 public:
  explicit CharLab(const FieldCtx& F) : F_(&F) {}
  const FieldCtx& field() const { return *F_; }

  const std::vector<std::complex<double>>& roots(std::uint64_t k) {
    auto it = roots_.find(k);
    if (it != roots_.end()) return it->second;
    std::vector<std::complex<double>> v(k);
    for (std::uint64_t t = 0; t < k; ++t) {
      double ang = 2.0 * M_PI * (double)t / (double)k;
      v[t] = {std::cos(ang), std::sin(ang)};
    }
    return roots_.emplace(k, std::move(v)).first->second;
  }

  // integer lift of Tr_{L/p}(gamma_L^e), e in [0, |L|-1)
  const std::uint8_t* trace_table(Level L) {
    if (L == Level::Fq6) return F_->trace_p.data();
    auto it = traces_.find(L);
    if (it != traces_.end()) return it->second.data();
    std::uint64_t n1 = F_->level_order(L) - 1;
    std::uint64_t step = F_->level_step(L);
    std::vector<std::uint8_t> v(n1);
    for (std::uint64_t e = 0; e < n1; ++e) {
      FElem x = FElem::from_exp((std::uint32_t)(e * step % F_->P.order));
      v[e] = (std::uint8_t)lift_fp(*F_, trace(*F_, x, L, Level::Fp));
    }
    return traces_.emplace(L, std::move(v)).first->second.data();
  }

  std::complex<double> char_value(const MultChar& chi, FElem x) {
    std::uint64_t e = dlog_in_level(*F_, x, chi.level);
    return roots(chi.modulus)[chi.index * (e % chi.modulus) % chi.modulus];
  }

  ComplexVal gauss_sum(const MultChar& chi) {
    std::array<std::uint64_t, 3> key{(std::uint64_t)chi.level, chi.modulus, chi.index};
    auto it = gauss_.find(key);
    if (it != gauss_.end()) return it->second;
    const std::uint8_t* tr = trace_table(chi.level);
    const auto& zk = roots(chi.modulus);
    const auto& zp = roots(F_->P.p);
    std::uint64_t n1 = F_->level_order(chi.level) - 1;
    CompensatedSum acc;
    std::uint64_t idx = 0;
    for (std::uint64_t e = 0; e < n1; ++e) {
      acc.add(zk[idx] * zp[tr[e]]);
      idx += chi.index;
      if (idx >= chi.modulus) idx -= chi.modulus;
    }
    ComplexVal v = acc.value();
    gauss_.emplace(key, v);
    return v;
  }

  // direct sum of the additive character over the cyclotomic class
  // C_i^{(k)} = { gamma_L^{e} : e = i mod k }
  ComplexVal gauss_period(Level L, std::uint64_t k, std::uint64_t i) {
    std::uint64_t n1 = F_->level_order(L) - 1;
    if (k == 0 || n1 % k != 0) throw error(errc::not_a_divisor, "class count must divide the group order");
    const std::uint8_t* tr = trace_table(L);
    const auto& zp = roots(F_->P.p);
    CompensatedSum acc;
    for (std::uint64_t e = i % k; e < n1; e += k) acc.add(zp[tr[e]]);
    return acc.value();
  }

  // the same period through the Gauss-sum expansion (1/k) sum_j G(chi^j) chi^{-j}(gamma_L^i)
  ComplexVal gauss_period_via_sums(Level L, std::uint64_t k, std::uint64_t i) {
    std::uint64_t n1 = F_->level_order(L) - 1;
    if (k == 0 || n1 % k != 0) throw error(errc::not_a_divisor, "class count must divide the group order");
    const auto& zk = roots(k);
    CompensatedSum acc;
    for (std::uint64_t j = 0; j < k; ++j) {
      ComplexVal g = gauss_sum(make_char(*F_, L, k, j));
      acc.add(g.z() * std::conj(zk[j * (i % k) % k]));
    }
    return (1.0 / (double)k) * acc.value();
  }

 private:
  const FieldCtx* F_;
  std::map<std::uint64_t, std::vector<std::complex<double>>> roots_;
  std::map<Level, std::vector<std::uint8_t>> traces_;
  std::map<std::array<std::uint64_t, 3>, ComplexVal> gauss_;
};

struct IdentityCheck {
  std::string name;
  ComplexVal lhs, rhs;
  double deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

inline double default_tolerance(const FieldCtx& F, Level L) {
  return 1e-6 * std::sqrt((double)F.level_order(L));
}

inline IdentityCheck make_check(std::string name, ComplexVal lhs, ComplexVal rhs, double tol) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.deviation = std::abs(lhs.z() - rhs.z());
  c.tolerance = tol;
  c.pass = c.deviation <= tol;
  return c;
}

// G(chi_m) = +- p^{3f} when p is semiprimitive mod m: some p^s = -1 (mod m),
// s minimal, 6f = 2st, sign (-1)^{t-1+(p^s+1)t/m} for odd p.
inline IdentityCheck verify_semiprimitive(CharLab& lab, std::uint64_t m, std::uint64_t j = 1, double tol = 0) {
  const FieldCtx& F = lab.field();
  if (m <= 2) throw error(errc::invalid_argument, "semiprimitive evaluation needs m > 2");
  if ((F.P.order) % m != 0) throw error(errc::not_a_divisor, "m must divide q^6 - 1");
  if (std::gcd(j, m) != 1) throw error(errc::invalid_argument, "index must give a character of exact order m");
  std::uint64_t D = 6ull * F.P.f;
  std::uint64_t s = 0;
  std::uint64_t pw = 1 % m;
  for (std::uint64_t i = 1; i <= D; ++i) {
    pw = pw * (F.P.p % m) % m;
    if (pw == m - 1) {
      s = i;
      break;
    }
  }
  if (s == 0 || D % (2 * s) != 0)
    throw error(errc::not_applicable, "p is not semiprimitive mod m for this field degree");
  std::uint64_t t = D / (2 * s);
  std::uint64_t ps = detail::ipow_checked(F.P.p, (std::uint32_t)s);
  std::uint64_t expo = (t - 1) + (ps + 1) / m * t;
  double expected = ((expo & 1) ? -1.0 : 1.0) * (double)detail::ipow_checked(F.P.p, (std::uint32_t)(D / 2));
  if (tol <= 0) tol = default_tolerance(F, Level::Fq6);
  ComplexVal g = lab.gauss_sum(make_char(F, Level::Fq6, m, j));
  return make_check("semiprimitive m=" + std::to_string(m) + " j=" + std::to_string(j), g,
                    ComplexVal::exact(expected), tol);
}

// G_{to}(lift of chi) = (-1)^{s-1} G(chi)^s, s the relative degree
inline IdentityCheck verify_lifting(CharLab& lab, const MultChar& chi_sub, Level to = Level::Fq6, double tol = 0) {
  const FieldCtx& F = lab.field();
  if (chi_sub.is_trivial()) throw error(errc::invalid_argument, "lifting formula needs a nontrivial character");
  std::uint32_t s = (std::uint32_t)(F.level_degree(to) / F.level_degree(chi_sub.level));
  if (F.level_degree(to) % F.level_degree(chi_sub.level) != 0 || s < 2)
    throw error(errc::level_mismatch, "lift target must be a proper extension");
  ComplexVal lhs = lab.gauss_sum(lift_char(F, chi_sub, to));
  ComplexVal rhs = cpow_int(lab.gauss_sum(chi_sub), s);
  if (s % 2 == 0) rhs = -rhs;
  if (tol <= 0) tol = default_tolerance(F, to);
  return make_check("lifting k=" + std::to_string(chi_sub.modulus) + " j=" + std::to_string(chi_sub.index) +
                        " s=" + std::to_string(s),
                    lhs, rhs, tol);
}

// G(chi) = G(chi^l) / chi^l(l) * prod_{i<l} G(eta^i)/G(chi eta^i), eta of exact order l
inline IdentityCheck verify_product_formula(CharLab& lab, const MultChar& chi, std::uint64_t ell,
                                            std::uint64_t eta_index = 1, double tol = 0) {
  const FieldCtx& F = lab.field();
  if (chi.is_trivial()) throw error(errc::invalid_argument, "product formula needs a nontrivial character");
  if (ell < 2) throw error(errc::invalid_argument, "eta must have order at least 2");
  if (ell % F.P.p == 0) throw error(errc::invalid_argument, "the order of eta must be invertible in the field");
  if (std::gcd(eta_index, ell) != 1) throw error(errc::invalid_argument, "eta index must give exact order ell");
  MultChar eta = make_char(F, chi.level, ell, eta_index);
  MultChar chi_ell = char_pow(F, chi, (std::int64_t)ell);
  ComplexVal lhs = lab.gauss_sum(chi);
  ComplexVal rhs = lab.gauss_sum(chi_ell);
  rhs = rhs / ComplexVal::exact(lab.char_value(chi_ell, scalar(F, ell)));
  for (std::uint64_t i = 1; i < ell; ++i) {
    MultChar eta_i = char_pow(F, eta, (std::int64_t)i);
    rhs = rhs * (lab.gauss_sum(eta_i) / lab.gauss_sum(char_product(F, chi, eta_i)));
  }
  if (tol <= 0) tol = default_tolerance(F, chi.level);
  return make_check("product k=" + std::to_string(chi.modulus) + " j=" + std::to_string(chi.index) +
                        " ell=" + std::to_string(ell),
                    lhs, rhs, tol);
}

// The quartic-times-odd-order identity and its corollary, for odd m | N:
//   G_{q6}(chi4 chi_m) = G_{q6}(chi4^3 chi_m)
//                      = rho_q G_{q3}(chi'_m^4) G_{q3}(chi'_m^{-2})
//                      = rho_q q^3 G_{q3}(chi'_2 chi'_m^2) / G_{q3}(chi'_2)
// with rho_q = -1 for q = 3 (mod 8) and +1 for q = 7 (mod 8).
inline std::vector<IdentityCheck> verify_main_identity(CharLab& lab, std::uint64_t m, double tol = 0) {
  const FieldCtx& F = lab.field();
  if (F.P.q % 4 != 3) throw error(errc::bad_congruence, "identity needs q = 3 (mod 4)");
  if (m < 2 || m % 2 == 0) throw error(errc::invalid_argument, "m must be odd and > 1");
  if (F.P.N % m != 0) throw error(errc::not_a_divisor, "m must divide q^2 + q + 1");
  if (tol <= 0) tol = default_tolerance(F, Level::Fq6);
  double rho = (F.P.q % 8 == 3) ? -1.0 : 1.0;
  std::string tag = " m=" + std::to_string(m);

  MultChar chi4 = make_char(F, Level::Fq6, 4, 1);
  MultChar chim_sub = make_char(F, Level::Fq3, m, 1);
  MultChar chim = lift_char(F, chim_sub, Level::Fq6);
  ComplexVal A = lab.gauss_sum(char_product(F, chi4, chim));
  ComplexVal B = lab.gauss_sum(char_product(F, char_pow(F, chi4, 3), chim));

  ComplexVal main_rhs = rho * (lab.gauss_sum(char_pow(F, chim_sub, 4)) * lab.gauss_sum(char_pow(F, chim_sub, -2)));

  MultChar chi2_sub = make_char(F, Level::Fq3, 2, 1);
  ComplexVal cor_rhs = rho * (double)(F.P.q3) *
                       (lab.gauss_sum(char_product(F, chi2_sub, char_pow(F, chim_sub, 2))) / lab.gauss_sum(chi2_sub));

  std::vector<IdentityCheck> out;
  out.push_back(make_check("quartic conjugate pair" + tag, A, B, tol));
  out.push_back(make_check("quartic main identity" + tag, A, main_rhs, tol));
  out.push_back(make_check("quartic corollary" + tag, A, cor_rhs, tol));
  return out;
}

// G_{q3}(chi_N^{-h}) = q * sum_{s in S} chi_N^{-h}(omega^s), h != 0 (mod N),
// S = { i in Z_N : Tr_{q3/q}(omega^i) = 0 } the Singer zero set.
inline IdentityCheck verify_singer_gauss(CharLab& lab, std::uint64_t h, double tol = 0) {
  const FieldCtx& F = lab.field();
  std::uint64_t N = F.P.N;
  if (h % N == 0) throw error(errc::invalid_argument, "the identity degenerates for the trivial index");
  MultChar chi = char_pow(F, make_char(F, Level::Fq3, N, 1), -(std::int64_t)(h % N));
  ComplexVal lhs = lab.gauss_sum(chi);
  const auto& zN = lab.roots(N);
  CompensatedSum acc;
  for (std::uint64_t i = 0; i < N; ++i) {
    FElem w = pow_elem(F, omega(F), (std::int64_t)i);
    if (trace(F, w, Level::Fq3, Level::Fq).is_zero()) acc.add(zN[chi.index * (i % N) % N]);
  }
  ComplexVal rhs = (double)F.P.q * acc.value();
  if (tol <= 0) tol = default_tolerance(F, Level::Fq3);
  return make_check("singer h=" + std::to_string(h), lhs, rhs, tol);
}

// Coset-sum identity: with L a transversal of F_L^*/F_sub^* scaled so the
// relative trace hits {0,1}, sum over the trace-1 part of chi equals
// G_L(chi)/G_sub(chi|_sub), or -G_L(chi)/|sub| when the restriction is trivial.
inline IdentityCheck verify_trace_coset_sum(CharLab& lab, const MultChar& chi, Level sub, double tol = 0) {
  const FieldCtx& F = lab.field();
  if (chi.is_trivial()) throw error(errc::invalid_argument, "the coset-sum identity needs a nontrivial character");
  if (F.level_degree(chi.level) % F.level_degree(sub) != 0)
    throw error(errc::level_mismatch, "second argument must be a subfield of the character's field");
  std::uint64_t reps = (F.level_order(chi.level) - 1) / (F.level_order(sub) - 1);
  std::uint64_t step = F.level_step(chi.level);
  CompensatedSum acc;
  for (std::uint64_t e = 0; e < reps; ++e) {
    FElem x = FElem::from_exp((std::uint32_t)(e * step % F.P.order));
    FElem t = trace(F, x, chi.level, sub);
    if (t.is_zero()) continue;
    acc.add(lab.char_value(chi, mul(F, x, inv(F, t))));
  }
  ComplexVal lhs = acc.value();
  MultChar res = restrict_char(F, chi, sub);
  ComplexVal rhs = res.is_trivial() ? (-1.0 / (double)F.level_order(sub)) * lab.gauss_sum(chi)
                                    : lab.gauss_sum(chi) / lab.gauss_sum(res);
  if (tol <= 0) tol = default_tolerance(F, chi.level);
  return make_check("trace coset sum k=" + std::to_string(chi.modulus) + " j=" + std::to_string(chi.index), lhs,
                    rhs, tol);
}

// direct class sum against the Gauss-sum expansion of the same period
inline IdentityCheck verify_gauss_period(CharLab& lab, Level L, std::uint64_t k, std::uint64_t i, double tol = 0) {
  ComplexVal lhs = lab.gauss_period(L, k, i);
  ComplexVal rhs = lab.gauss_period_via_sums(L, k, i);
  if (tol <= 0) tol = default_tolerance(lab.field(), L);
  return make_check("period k=" + std::to_string(k) + " i=" + std::to_string(i), lhs, rhs, tol);
}

}  // namespace hemi
