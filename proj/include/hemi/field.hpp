// Finite field tower F_p < F_q < F_q3 < F_q6 (q = p^f) in discrete-log form.
//
// A field context fixes the lexicographically smallest primitive polynomial of
// degree 6f over F_p and represents every nonzero element as an exponent of the
// companion root gamma.  Multiplication is exponent addition; addition goes
// through a Zech logarithm table Z with gamma^Z(e) = 1 + gamma^e.  Subfields are
// the unique subgroups of gamma's powers, so membership and Frobenius maps are
// congruence arithmetic on exponents.  Tables are O(p^{6f}) and guarded by an
// explicit budget.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hemi {

enum class errc {
  non_prime,
  table_budget_exceeded,
  zero_input,
  division_by_zero,
  level_mismatch,
  not_in_subfield,
  invalid_d0,
  bad_congruence,
  not_a_divisor,
  collision_detected,
  scalar_orbit_not_closed,
  non_integer_character_value,
  budget_exceeded,
  io_error,
  invalid_argument,
  verification_failure,
  not_applicable,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ascending list of distinct prime factors
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t ipow_checked(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) throw error(errc::table_budget_exceeded, "power overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace detail

inline constexpr std::uint32_t kNoExp = 0xFFFFFFFFu;  // sentinel: the zero element / "no logarithm"

// Nonzero elements carry their gamma-exponent; zero carries the sentinel.
struct FElem {
  std::uint32_t raw = kNoExp;

  static constexpr FElem zero() { return FElem{kNoExp}; }
  static constexpr FElem from_exp(std::uint32_t e) { return FElem{e}; }
  constexpr bool is_zero() const { return raw == kNoExp; }
  constexpr std::uint32_t exp() const { return raw; }
  friend constexpr bool operator==(FElem a, FElem b) { return a.raw == b.raw; }
  friend constexpr bool operator!=(FElem a, FElem b) { return a.raw != b.raw; }
};

enum class Level : int { Fp = 0, Fq = 1, Fq3 = 2, Fq6 = 3 };

struct FieldParams {
  std::uint32_t p = 0;   // odd prime characteristic
  std::uint32_t f = 0;   // q = p^f
  std::uint64_t q = 0;
  std::uint64_t q2 = 0, q3 = 0, q6 = 0;
  std::uint64_t order = 0;  // q6 - 1, the exponent modulus
  std::uint64_t N = 0;      // q^2 + q + 1
  bool construction_ready = false;  // q == 3 (mod 4)
};

struct FieldCtx {
  FieldParams P;
  std::vector<std::uint32_t> modulus;  // primitive polynomial, coeffs low to high, monic degree 6f
  std::vector<std::uint32_t> antilog;  // exponent -> packed base-p coefficient vector, size order
  std::vector<std::uint32_t> logtab;   // packed vector -> exponent, size q6; logtab[0] = kNoExp
  std::vector<std::uint32_t> zech;     // gamma^zech[e] = 1 + gamma^e; kNoExp when 1 + gamma^e = 0
  std::vector<std::uint8_t> trace_p;   // integer lift of Tr_{q6/p}(gamma^e), size order
  std::vector<std::uint64_t> trq_zero; // bitset over exponents: Tr_{q6/q}(gamma^e) == 0
  std::array<std::uint64_t, 6> q_pow_mod{};           // q^k mod order
  std::vector<std::uint64_t> p_pow_mod;               // p^j mod order, j < 6f

  bool tr_q6_to_q_is_zero(std::uint64_t e) const {
    return (trq_zero[e >> 6] >> (e & 63)) & 1u;
  }

  int level_degree(Level L) const {
    switch (L) {
      case Level::Fp: return 1;
      case Level::Fq: return (int)P.f;
      case Level::Fq3: return (int)(3 * P.f);
      default: return (int)(6 * P.f);
    }
  }
  std::uint64_t level_order(Level L) const { return detail::ipow_checked(P.p, (std::uint32_t)level_degree(L)); }
  // exponent step of the subgroup F_L^* inside <gamma>
  std::uint64_t level_step(Level L) const { return P.order / (level_order(L) - 1); }
};

// ---- basic arithmetic -------------------------------------------------------

inline FElem mul(const FieldCtx& F, FElem x, FElem y) {
  if (x.is_zero() || y.is_zero()) return FElem::zero();
  std::uint64_t e = (std::uint64_t)x.exp() + y.exp();
  if (e >= F.P.order) e -= F.P.order;
  return FElem::from_exp((std::uint32_t)e);
}

inline FElem inv(const FieldCtx& F, FElem x) {
  if (x.is_zero()) throw error(errc::division_by_zero, "inverse of zero");
  return FElem::from_exp(x.exp() == 0 ? 0u : (std::uint32_t)(F.P.order - x.exp()));
}

inline FElem neg(const FieldCtx& F, FElem x) {
  if (x.is_zero()) return x;
  std::uint64_t e = x.exp() + F.P.order / 2;  // -1 = gamma^{(q6-1)/2}, char is odd
  if (e >= F.P.order) e -= F.P.order;
  return FElem::from_exp((std::uint32_t)e);
}

inline FElem add(const FieldCtx& F, FElem x, FElem y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::uint64_t d = (std::uint64_t)y.exp() + F.P.order - x.exp();
  if (d >= F.P.order) d -= F.P.order;
  std::uint32_t z = F.zech[d];
  if (z == kNoExp) return FElem::zero();
  std::uint64_t e = (std::uint64_t)x.exp() + z;
  if (e >= F.P.order) e -= F.P.order;
  return FElem::from_exp((std::uint32_t)e);
}

inline FElem sub(const FieldCtx& F, FElem x, FElem y) { return add(F, x, neg(F, y)); }

inline FElem pow_elem(const FieldCtx& F, FElem x, std::int64_t k) {
  if (x.is_zero()) {
    if (k > 0) return FElem::zero();
    if (k == 0) return FElem::from_exp(0);
    throw error(errc::division_by_zero, "negative power of zero");
  }
  std::int64_t m = (std::int64_t)F.P.order;
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return FElem::from_exp((std::uint32_t)(((std::uint64_t)x.exp() * (std::uint64_t)r) % F.P.order));
}

inline FElem one(const FieldCtx&) { return FElem::from_exp(0); }
inline FElem gamma(const FieldCtx&) { return FElem::from_exp(1); }
// omega = gamma^{q3+1} generates F_q3^*
inline FElem omega(const FieldCtx& F) { return FElem::from_exp((std::uint32_t)(F.P.q3 + 1)); }

// small integer c as an element of F_p
inline FElem scalar(const FieldCtx& F, std::uint64_t c) {
  c %= F.P.p;
  if (c == 0) return FElem::zero();
  return FElem::from_exp(F.logtab[c]);
}

inline bool in_level(const FieldCtx& F, FElem x, Level L) {
  if (x.is_zero()) return true;
  return x.exp() % F.level_step(L) == 0;
}

// discrete log of x to base gamma^{level_step(L)}, the canonical generator of F_L^*
inline std::uint64_t dlog_in_level(const FieldCtx& F, FElem x, Level L) {
  if (x.is_zero()) throw error(errc::zero_input, "zero has no discrete log");
  std::uint64_t step = F.level_step(L);
  if (x.exp() % step != 0) throw error(errc::not_in_subfield, "element lies outside the requested subfield");
  return x.exp() / step;
}

// x^{q^k}
inline FElem frobenius(const FieldCtx& F, FElem x, std::uint32_t k) {
  if (x.is_zero()) return x;
  return FElem::from_exp((std::uint32_t)(((std::uint64_t)x.exp() * F.q_pow_mod[k % 6]) % F.P.order));
}

// x^{p^j}
inline FElem frobenius_p(const FieldCtx& F, FElem x, std::uint32_t j) {
  if (x.is_zero()) return x;
  return FElem::from_exp((std::uint32_t)(((std::uint64_t)x.exp() * F.p_pow_mod[j % (6 * F.P.f)]) % F.P.order));
}

// Tr_{top/bottom}(x) = sum of x^{|bottom|^i}; result lies in bottom.
inline FElem trace(const FieldCtx& F, FElem x, Level top, Level bottom) {
  int dt = F.level_degree(top), db = F.level_degree(bottom);
  if (dt % db != 0) throw error(errc::level_mismatch, "bottom field is not a subfield of top");
  if (!in_level(F, x, top)) throw error(errc::level_mismatch, "element lies outside the top field");
  if (x.is_zero()) return x;
  FElem acc = x, cur = x;
  for (int i = 1; i < dt / db; ++i) {
    cur = frobenius_p(F, cur, (std::uint32_t)db);
    acc = add(F, acc, cur);
  }
  return acc;
}

inline FElem norm(const FieldCtx& F, FElem x, Level top, Level bottom) {
  int dt = F.level_degree(top), db = F.level_degree(bottom);
  if (dt % db != 0) throw error(errc::level_mismatch, "bottom field is not a subfield of top");
  if (!in_level(F, x, top)) throw error(errc::level_mismatch, "element lies outside the top field");
  if (x.is_zero()) return x;
  std::uint64_t ot = F.level_order(top), ob = F.level_order(bottom);
  return pow_elem(F, x, (std::int64_t)((ot - 1) / (ob - 1)));
}

// integer lift of an F_p element (its packed vector is the lift itself)
inline std::uint32_t lift_fp(const FieldCtx& F, FElem x) {
  if (x.is_zero()) return 0;
  std::uint32_t v = F.antilog[x.exp()];
  if (v >= F.P.p) throw error(errc::not_in_subfield, "element is not in the prime field");
  return v;
}

// quadratic character of F_q3: +1 squares, -1 nonsquares, 0 at zero
inline int sgn(const FieldCtx& F, FElem x) {
  if (x.is_zero()) return 0;
  std::uint64_t step = F.P.q3 + 1;
  if (x.exp() % step != 0) throw error(errc::not_in_subfield, "sgn expects an element of F_q3");
  return (x.exp() / step) % 2 == 0 ? 1 : -1;
}

// canonical additive character psi(x) = e^{2 pi i Tr_{L/p}(a x) / p}
inline std::complex<double> additive_char(const FieldCtx& F, FElem a, FElem x, Level L) {
  if (!in_level(F, a, L) || !in_level(F, x, L)) throw error(errc::level_mismatch, "additive_char arguments outside level");
  std::uint32_t t = lift_fp(F, trace(F, mul(F, a, x), L, Level::Fp));
  double ang = 2.0 * M_PI * (double)t / (double)F.P.p;
  return {std::cos(ang), std::sin(ang)};
}

// ---- construction -----------------------------------------------------------

namespace detail {

// multiply two polynomials mod (monic modulus g, coeffs low..high, degree d), coeffs mod p
inline void polymulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                       const std::vector<std::uint32_t>& g, std::uint32_t p,
                       std::vector<std::uint32_t>& out, std::vector<std::uint64_t>& tmp) {
  std::size_t d = g.size() - 1;
  std::fill(tmp.begin(), tmp.end(), 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) tmp[i + j] += (std::uint64_t)a[i] * b[j];
  }
  for (std::size_t k = 2 * d - 2; k + 1 > d; --k) {
    std::uint64_t c = tmp[k] % p;
    if (c == 0) continue;
    // x^k = x^{k-d} * (-(g_0 + ... + g_{d-1} x^{d-1}))
    for (std::size_t j = 0; j < d; ++j) tmp[k - d + j] += c * (p - g[j] % p);
    tmp[k] = 0;
  }
  for (std::size_t i = 0; i < d; ++i) out[i] = (std::uint32_t)(tmp[i] % p);
}

// x^e mod g over F_p
inline std::vector<std::uint32_t> poly_x_pow(std::uint64_t e, const std::vector<std::uint32_t>& g, std::uint32_t p) {
  std::size_t d = g.size() - 1;
  std::vector<std::uint32_t> r(d, 0), base(d, 0), t(d, 0);
  std::vector<std::uint64_t> tmp(2 * d, 0);
  r[0] = 1;
  if (d == 1) {
    // x = -g_0 mod g; handle by plain modular power
    std::uint64_t x = (p - g[0] % p) % p, acc = 1;
    while (e) { if (e & 1) acc = acc * x % p; x = x * x % p; e >>= 1; }
    r[0] = (std::uint32_t)acc;
    return r;
  }
  base[1] = 1;
  while (e) {
    if (e & 1) { polymulmod(r, base, g, p, t, tmp); r = t; }
    polymulmod(base, base, g, p, t, tmp);
    base = t;
    e >>= 1;
  }
  return r;
}

inline bool poly_is_one(const std::vector<std::uint32_t>& v) {
  if (v[0] != 1) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

// g (monic, degree d) is primitive over F_p iff x has order p^d - 1 in F_p[x]/(g)
inline bool poly_is_primitive(const std::vector<std::uint32_t>& g, std::uint32_t p, std::uint64_t order,
                              const std::vector<std::uint64_t>& order_factors) {
  if (g[0] == 0) return false;  // x would be a zero divisor
  if (!poly_is_one(poly_x_pow(order, g, p))) return false;
  for (std::uint64_t r : order_factors)
    if (poly_is_one(poly_x_pow(order / r, g, p))) return false;
  return true;
}

inline bool is_primitive_root_mod_p(std::uint32_t a, std::uint32_t p, const std::vector<std::uint64_t>& pm1_factors) {
  if (a % p == 0) return false;
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1; b %= p;
    while (e) { if (e & 1) r = r * b % p; b = b * b % p; e >>= 1; }
    return r;
  };
  for (std::uint64_t r : pm1_factors)
    if (powmod(a, (p - 1) / r) == 1) return false;
  return true;
}

}  // namespace detail

// Lexicographically smallest primitive polynomial of degree d over F_p, monic,
// coefficients compared from the constant term upward.
inline std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t d) {
  std::uint64_t order = detail::ipow_checked(p, d) - 1;
  auto ofac = detail::prime_factors(order);
  auto pm1fac = detail::prime_factors(p - 1);
  std::vector<std::uint32_t> c(d + 1, 0);
  c[d] = 1;
  // constant term of a primitive polynomial equals (-1)^d * Norm(root), which must
  // generate F_p^*; d = 6f is even here, so c0 itself must be a primitive root mod p.
  for (c[0] = 1; c[0] < p; ++c[0]) {
    if (!detail::is_primitive_root_mod_p(c[0], p, pm1fac)) continue;
    // odometer over c1..c_{d-1}, last coefficient fastest
    for (std::size_t i = 1; i < d; ++i) c[i] = 0;
    while (true) {
      if (detail::poly_is_primitive(c, p, order, ofac)) return c;
      std::size_t i = d - 1;
      while (i >= 1) {
        if (++c[i] < p) break;
        c[i] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  throw error(errc::invalid_argument, "no primitive polynomial found (unreachable for valid p, d)");
}

inline FieldCtx build_field(std::uint32_t p, std::uint32_t f, std::uint64_t table_budget = 50'000'000) {
  if (p < 3 || !detail::is_prime_u64(p)) throw error(errc::non_prime, "characteristic must be an odd prime");
  if (f == 0) throw error(errc::invalid_argument, "extension degree f must be positive");
  if (table_budget > 0xFFFFFFFEull) table_budget = 0xFFFFFFFEull;  // exponents are 32-bit
  std::uint64_t q6 = detail::ipow_checked(p, 6 * f);
  if (q6 > table_budget) throw error(errc::table_budget_exceeded, "q^6 exceeds the table budget");

  FieldCtx F;
  F.P.p = p;
  F.P.f = f;
  F.P.q = detail::ipow_checked(p, f);
  F.P.q2 = F.P.q * F.P.q;
  F.P.q3 = F.P.q2 * F.P.q;
  F.P.q6 = q6;
  F.P.order = q6 - 1;
  F.P.N = F.P.q2 + F.P.q + 1;
  F.P.construction_ready = (F.P.q % 4 == 3);

  std::uint32_t d = 6 * f;
  F.modulus = smallest_primitive_polynomial(p, d);

  for (int k = 0; k < 6; ++k) F.q_pow_mod[k] = detail::ipow_checked(p, (std::uint32_t)(f * k)) % F.P.order;
  F.p_pow_mod.resize(d);
  for (std::uint32_t j = 0; j < d; ++j) F.p_pow_mod[j] = detail::ipow_checked(p, j) % F.P.order;

  // antilog by repeated multiplication with the companion root
  F.antilog.assign(F.P.order, 0);
  std::vector<std::uint32_t> cur(d, 0);
  cur[0] = 1;
  std::vector<std::uint64_t> ppow(d + 1, 1);
  for (std::uint32_t i = 1; i <= d; ++i) ppow[i] = ppow[i - 1] * p;
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    std::uint64_t packed = 0;
    for (std::uint32_t i = 0; i < d; ++i) packed += cur[i] * ppow[i];
    F.antilog[e] = (std::uint32_t)packed;
    std::uint32_t carry = cur[d - 1];
    for (std::uint32_t i = d - 1; i >= 1; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry) {
      for (std::uint32_t i = 0; i < d; ++i)
        cur[i] = (std::uint32_t)((cur[i] + (std::uint64_t)carry * (p - F.modulus[i] % p)) % p);
    }
  }
  // gamma^order must return to 1
  if (!(cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](std::uint32_t v) { return v == 0; })))
    throw error(errc::collision_detected, "companion root does not have full order");

  F.logtab.assign(q6, kNoExp);
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    if (F.logtab[F.antilog[e]] != kNoExp) throw error(errc::collision_detected, "antilog table is not injective");
    F.logtab[F.antilog[e]] = (std::uint32_t)e;
  }

  F.zech.assign(F.P.order, 0);
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    std::uint32_t v = F.antilog[e];
    std::uint32_t v0 = v % p;
    std::uint32_t v2 = v - v0 + (v0 + 1) % p;
    F.zech[e] = (v2 == 0) ? kNoExp : F.logtab[v2];
  }

  // Tr_{q6/p} is F_p-linear: evaluate on the power basis, then on digits.
  std::vector<std::uint32_t> tb(d, 0);
  for (std::uint32_t j = 0; j < d; ++j) {
    FElem acc = FElem::zero();
    for (std::uint32_t i = 0; i < d; ++i) {
      std::uint64_t e = ((std::uint64_t)j * F.p_pow_mod[i]) % F.P.order;
      acc = add(F, acc, FElem::from_exp((std::uint32_t)e));
    }
    tb[j] = lift_fp(F, acc);
  }
  F.trace_p.assign(F.P.order, 0);
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    std::uint32_t v = F.antilog[e];
    std::uint64_t t = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      t += (std::uint64_t)(v % p) * tb[j];
      v /= p;
    }
    F.trace_p[e] = (std::uint8_t)(t % p);
  }

  F.trq_zero.assign((F.P.order + 63) / 64, 0);
  if (f == 1) {
    for (std::uint64_t e = 0; e < F.P.order; ++e)
      if (F.trace_p[e] == 0) F.trq_zero[e >> 6] |= 1ull << (e & 63);
  } else {
    for (std::uint64_t e = 0; e < F.P.order; ++e) {
      FElem x = FElem::from_exp((std::uint32_t)e);
      FElem acc = x, cur2 = x;
      for (int k = 1; k < 6; ++k) {
        cur2 = frobenius(F, cur2, 1);
        acc = add(F, acc, cur2);
      }
      if (acc.is_zero()) F.trq_zero[e >> 6] |= 1ull << (e & 63);
    }
  }
  return F;
}

// ---- binary cache -----------------------------------------------------------
//
// Layout (all integers little-endian u32):
//   "FF6C" | version | p | f | ncoeff | coeffs... | antilog[order] | zech[order]
// The log table and derived tables are rebuilt on load.

inline constexpr std::uint32_t kCacheVersion = 1;

namespace detail {

inline void put_u32(std::ofstream& os, std::uint32_t v) {
  unsigned char b[4] = {(unsigned char)(v & 0xFF), (unsigned char)((v >> 8) & 0xFF),
                        (unsigned char)((v >> 16) & 0xFF), (unsigned char)((v >> 24) & 0xFF)};
  os.write((const char*)b, 4);
}

inline std::uint32_t get_u32(std::ifstream& is) {
  unsigned char b[4];
  is.read((char*)b, 4);
  if (!is) throw error(errc::io_error, "truncated field cache");
  return (std::uint32_t)b[0] | ((std::uint32_t)b[1] << 8) | ((std::uint32_t)b[2] << 16) | ((std::uint32_t)b[3] << 24);
}

inline void put_u32_block(std::ofstream& os, const std::vector<std::uint32_t>& v) {
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_LITTLE_ENDIAN__
  os.write((const char*)v.data(), (std::streamsize)(v.size() * 4));
#else
  for (std::uint32_t x : v) put_u32(os, x);
#endif
}

inline void get_u32_block(std::ifstream& is, std::vector<std::uint32_t>& v) {
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_LITTLE_ENDIAN__
  is.read((char*)v.data(), (std::streamsize)(v.size() * 4));
  if (!is) throw error(errc::io_error, "truncated field cache");
#else
  for (auto& x : v) x = get_u32(is);
#endif
}

}  // namespace detail

inline void save_field_cache(const FieldCtx& F, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw error(errc::io_error, "cannot open cache file for writing: " + path.string());
  os.write("FF6C", 4);
  detail::put_u32(os, kCacheVersion);
  detail::put_u32(os, F.P.p);
  detail::put_u32(os, F.P.f);
  detail::put_u32(os, (std::uint32_t)F.modulus.size());
  for (std::uint32_t c : F.modulus) detail::put_u32(os, c);
  detail::put_u32_block(os, F.antilog);
  detail::put_u32_block(os, F.zech);
  if (!os) throw error(errc::io_error, "write failure on cache file: " + path.string());
}

inline FieldCtx load_field_cache(const std::filesystem::path& path, std::uint64_t table_budget = 50'000'000) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw error(errc::io_error, "cannot open cache file: " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "FF6C", 4) != 0) throw error(errc::io_error, "bad cache magic");
  if (detail::get_u32(is) != kCacheVersion) throw error(errc::io_error, "unsupported cache version");
  std::uint32_t p = detail::get_u32(is), f = detail::get_u32(is);
  std::uint32_t nc = detail::get_u32(is);
  if (nc != 6 * f + 1) throw error(errc::io_error, "cache polynomial length mismatch");

  // rebuild the cheap skeleton with build_field-equivalent parameters, then load tables
  if (p < 3 || !detail::is_prime_u64(p)) throw error(errc::non_prime, "cached characteristic is not an odd prime");
  std::uint64_t q6 = detail::ipow_checked(p, 6 * f);
  if (q6 > table_budget) throw error(errc::table_budget_exceeded, "cached field exceeds the table budget");

  FieldCtx F;
  F.P.p = p;
  F.P.f = f;
  F.P.q = detail::ipow_checked(p, f);
  F.P.q2 = F.P.q * F.P.q;
  F.P.q3 = F.P.q2 * F.P.q;
  F.P.q6 = q6;
  F.P.order = q6 - 1;
  F.P.N = F.P.q2 + F.P.q + 1;
  F.P.construction_ready = (F.P.q % 4 == 3);
  F.modulus.resize(nc);
  for (auto& c : F.modulus) c = detail::get_u32(is);
  std::uint32_t d = 6 * f;
  for (int k = 0; k < 6; ++k) F.q_pow_mod[k] = detail::ipow_checked(p, (std::uint32_t)(f * k)) % F.P.order;
  F.p_pow_mod.resize(d);
  for (std::uint32_t j = 0; j < d; ++j) F.p_pow_mod[j] = detail::ipow_checked(p, j) % F.P.order;

  F.antilog.assign(F.P.order, 0);
  detail::get_u32_block(is, F.antilog);
  F.zech.assign(F.P.order, 0);
  detail::get_u32_block(is, F.zech);

  F.logtab.assign(q6, kNoExp);
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    if (F.antilog[e] == 0 || F.antilog[e] >= q6) throw error(errc::io_error, "cache antilog entry out of range");
    if (F.logtab[F.antilog[e]] != kNoExp) throw error(errc::collision_detected, "cache antilog table is not injective");
    F.logtab[F.antilog[e]] = (std::uint32_t)e;
  }

  std::vector<std::uint32_t> tb(d, 0);
  for (std::uint32_t j = 0; j < d; ++j) {
    FElem acc = FElem::zero();
    for (std::uint32_t i = 0; i < d; ++i)
      acc = add(F, acc, FElem::from_exp((std::uint32_t)(((std::uint64_t)j * F.p_pow_mod[i]) % F.P.order)));
    tb[j] = lift_fp(F, acc);
  }
  F.trace_p.assign(F.P.order, 0);
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    std::uint32_t v = F.antilog[e];
    std::uint64_t t = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      t += (std::uint64_t)(v % p) * tb[j];
      v /= p;
    }
    F.trace_p[e] = (std::uint8_t)(t % p);
  }
  F.trq_zero.assign((F.P.order + 63) / 64, 0);
  if (f == 1) {
    for (std::uint64_t e = 0; e < F.P.order; ++e)
      if (F.trace_p[e] == 0) F.trq_zero[e >> 6] |= 1ull << (e & 63);
  } else {
    for (std::uint64_t e = 0; e < F.P.order; ++e) {
      FElem x = FElem::from_exp((std::uint32_t)e);
      FElem acc = x, cur2 = x;
      for (int k = 1; k < 6; ++k) {
        cur2 = frobenius(F, cur2, 1);
        acc = add(F, acc, cur2);
      }
      if (acc.is_zero()) F.trq_zero[e >> 6] |= 1ull << (e & 63);
    }
  }
  return F;
}

inline std::filesystem::path field_cache_name(std::uint32_t p, std::uint32_t f) {
  return "ff6c_p" + std::to_string(p) + "_f" + std::to_string(f) + ".bin";
}

inline FieldCtx build_field_cached(std::uint32_t p, std::uint32_t f, const std::filesystem::path& cache_dir,
                                   std::uint64_t table_budget = 50'000'000) {
  if (cache_dir.empty()) return build_field(p, f, table_budget);
  std::filesystem::create_directories(cache_dir);
  auto path = cache_dir / field_cache_name(p, f);
  if (std::filesystem::exists(path)) {
    FieldCtx F = load_field_cache(path, table_budget);
    if (F.P.p == p && F.P.f == f) return F;
    throw error(errc::io_error, "cache file parameters do not match request");
  }
  FieldCtx F = build_field(p, f, table_budget);
  save_field_cache(F, path);
  return F;
}

}  // namespace hemi
