// The planar model that seeds the construction: a conic in PG(2,q).
//
// F_q3 is the underlying vector space of PG(2,q); points are <omega^i> for
// i in Z_N, N = q^2+q+1, and L_c = { <x> : Tr_{q3/q}(omega^c x) = 0 } are the
// lines.  The conic is f(x) = Tr_{q3/q}(x^2) = 0.  Everything downstream is
// driven by index sets over Z_N and Z_{2N}:
//   S   = { i : Tr(omega^i) = 0 }            (Singer difference set, the line L_0)
//   I_Q = { i : Tr(omega^{2i}) = 0 }         (the conic; I_Q = 2^{-1} S)
//   I_s / I_n = trace of omega^{2i} a square / nonsquare
//   X   = logs mod 2N of the tangency data at a chosen conic point d0
//   X = 2 S1'' u (2 S2'' + N)  ->  S_i' = 2 S_i''  ->  S_i = 2 S_i'
// S1, S2 partition S and are exactly what the index-set construction consumes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hemi/charsum.hpp"
#include "hemi/field.hpp"

namespace hemi {

namespace detail {

inline std::vector<std::uint64_t> make_bits(std::uint64_t n, const std::vector<std::uint32_t>& v) {
  std::vector<std::uint64_t> b((n + 63) / 64, 0);
  for (std::uint32_t x : v) b[x >> 6] |= 1ull << (x & 63);
  return b;
}

inline bool bit(const std::vector<std::uint64_t>& b, std::uint64_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

inline std::vector<std::uint32_t> scaled_residues(const std::vector<std::uint32_t>& v, std::uint64_t factor,
                                                  std::uint64_t mod) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (std::uint32_t x : v) out.push_back((std::uint32_t)((std::uint64_t)x * factor % mod));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct ConicData {
  std::uint32_t q = 0;
  std::uint64_t N = 0;
  int eps = 0;           // sign in the point/line classification: -1 for q = 3 (mod 4)
  std::uint32_t d0 = 0;  // conic point whose tangency data defines X

  std::vector<std::uint32_t> S, IQ, Is, In;                  // subsets of Z_N, sorted
  std::vector<std::uint32_t> X;                              // subset of Z_{2N}, sorted
  std::vector<std::uint32_t> S1pp, S2pp, S1p, S2p, S1, S2;   // subsets of Z_N, sorted

  std::vector<std::uint64_t> in_S, in_IQ, in_Is, in_In, in_X, in_S1, in_S2;

  bool in_set_S(std::uint64_t i) const { return detail::bit(in_S, i); }
  bool in_set_IQ(std::uint64_t i) const { return detail::bit(in_IQ, i); }
  bool in_set_X(std::uint64_t i) const { return detail::bit(in_X, i); }
};

inline std::vector<std::uint32_t> compute_singer_set(const FieldCtx& F) {
  std::vector<std::uint32_t> S;
  for (std::uint64_t i = 0; i < F.P.N; ++i)
    if (trace(F, pow_elem(F, omega(F), (std::int64_t)i), Level::Fq3, Level::Fq).is_zero())
      S.push_back((std::uint32_t)i);
  return S;
}

struct ConicIndices {
  std::vector<std::uint32_t> IQ, Is, In;
};

inline ConicIndices compute_conic_indices(const FieldCtx& F) {
  ConicIndices out;
  for (std::uint64_t i = 0; i < F.P.N; ++i) {
    FElem t = trace(F, pow_elem(F, omega(F), (std::int64_t)(2 * i)), Level::Fq3, Level::Fq);
    int s = sgn(F, t);
    if (s == 0)
      out.IQ.push_back((std::uint32_t)i);
    else if (s == 1)
      out.Is.push_back((std::uint32_t)i);
    else
      out.In.push_back((std::uint32_t)i);
  }
  return out;
}

// logs mod 2N of { omega^{d_i} Tr(omega^{d0+d_i}) : d_i != d0 } u { 2 omega^{d0} }
inline std::vector<std::uint32_t> compute_X(const FieldCtx& F, const std::vector<std::uint32_t>& IQ,
                                            std::uint32_t d0) {
  if (!std::binary_search(IQ.begin(), IQ.end(), d0))
    throw error(errc::invalid_d0, "d0 must index a conic point");
  std::uint64_t twoN = 2 * F.P.N;
  std::vector<std::uint32_t> X;
  X.reserve(IQ.size());
  for (std::uint32_t d : IQ) {
    FElem x;
    if (d == d0) {
      x = mul(F, scalar(F, 2), pow_elem(F, omega(F), (std::int64_t)d0));
    } else {
      FElem t = trace(F, pow_elem(F, omega(F), (std::int64_t)(d0 + d)), Level::Fq3, Level::Fq);
      if (t.is_zero())
        throw error(errc::verification_failure, "tangent line at d0 met the conic a second time");
      x = mul(F, pow_elem(F, omega(F), (std::int64_t)d), t);
    }
    X.push_back((std::uint32_t)(dlog_in_level(F, x, Level::Fq3) % twoN));
  }
  std::sort(X.begin(), X.end());
  if (std::adjacent_find(X.begin(), X.end()) != X.end())
    throw error(errc::verification_failure, "tangency logs collided mod 2N");
  return X;
}

// parity split of X, then the two halvings back to Z_N
inline void partition_from_X(const std::vector<std::uint32_t>& X, std::uint64_t N, ConicData& out) {
  out.S1pp.clear();
  out.S2pp.clear();
  for (std::uint32_t x : X) {
    if (x % 2 == 0)
      out.S1pp.push_back(x / 2);
    else
      out.S2pp.push_back((std::uint32_t)(((x + N) % (2 * N)) / 2));
  }
  std::sort(out.S1pp.begin(), out.S1pp.end());
  std::sort(out.S2pp.begin(), out.S2pp.end());
  out.S1p = detail::scaled_residues(out.S1pp, 2, N);
  out.S2p = detail::scaled_residues(out.S2pp, 2, N);
  out.S1 = detail::scaled_residues(out.S1p, 2, N);
  out.S2 = detail::scaled_residues(out.S2p, 2, N);
}

// kNoExp selects the default: the smallest conic index
inline ConicData build_conic_data(const FieldCtx& F, std::uint32_t d0 = kNoExp) {
  ConicData C;
  C.q = (std::uint32_t)F.P.q;
  C.N = F.P.N;
  C.eps = (F.P.q % 4 == 1) ? 1 : -1;
  C.S = compute_singer_set(F);
  ConicIndices idx = compute_conic_indices(F);
  C.IQ = std::move(idx.IQ);
  C.Is = std::move(idx.Is);
  C.In = std::move(idx.In);
  if (d0 == kNoExp) d0 = C.IQ.at(0);
  C.d0 = d0;
  C.X = compute_X(F, C.IQ, d0);
  partition_from_X(C.X, C.N, C);
  C.in_S = detail::make_bits(C.N, C.S);
  C.in_IQ = detail::make_bits(C.N, C.IQ);
  C.in_Is = detail::make_bits(C.N, C.Is);
  C.in_In = detail::make_bits(C.N, C.In);
  C.in_X = detail::make_bits(2 * C.N, C.X);
  C.in_S1 = detail::make_bits(C.N, C.S1);
  C.in_S2 = detail::make_bits(C.N, C.S2);
  return C;
}

namespace detail {

inline void conic_require(bool ok, const std::string& what) {
  if (!ok) throw error(errc::verification_failure, "conic invariant failed: " + what);
}

}  // namespace detail

// Structural invariants of the stored sets; throws on the first violation.
inline void verify_conic_invariants(const FieldCtx& F, const ConicData& C) {
  using detail::conic_require;
  std::uint64_t q = F.P.q, N = C.N;
  conic_require(C.S.size() == q + 1, "|S| = q+1");
  conic_require(C.IQ.size() == q + 1, "|I_Q| = q+1");
  conic_require(C.X.size() == q + 1, "|X| = q+1");
  conic_require(C.Is.size() == q * (q - 1) / 2, "|I_s| = q(q-1)/2");
  conic_require(C.In.size() == q * (q + 1) / 2, "|I_n| = q(q+1)/2");
  conic_require(C.IQ.size() + C.Is.size() + C.In.size() == N, "I_Q, I_s, I_n partition Z_N");
  for (std::uint64_t i = 0; i < N; ++i)
    conic_require(detail::bit(C.in_IQ, i) + (std::uint64_t)std::binary_search(C.Is.begin(), C.Is.end(), (std::uint32_t)i) +
                          std::binary_search(C.In.begin(), C.In.end(), (std::uint32_t)i) == 1,
                  "classes are pairwise disjoint");

  conic_require(detail::scaled_residues(C.IQ, 2, N) == C.S, "I_Q = 2^{-1} S (mod N)");

  // X = I_Q mod N, and multiplication by q fixes X mod 2N
  std::vector<std::uint32_t> XmodN = detail::scaled_residues(C.X, 1, N);
  conic_require(XmodN == C.IQ, "X = I_Q (mod N)");
  conic_require(detail::scaled_residues(C.X, q, 2 * N) == C.X, "q X = X (mod 2N)");

  // parity split reconstructs X
  std::vector<std::uint32_t> rebuilt;
  for (std::uint32_t s : C.S1pp) rebuilt.push_back((std::uint32_t)(2ull * s % (2 * N)));
  for (std::uint32_t s : C.S2pp) rebuilt.push_back((std::uint32_t)((2ull * s + N) % (2 * N)));
  std::sort(rebuilt.begin(), rebuilt.end());
  conic_require(rebuilt == C.X, "X = 2 S1'' u (2 S2'' + N)");
  conic_require(C.S1pp.size() + C.S2pp.size() == q + 1, "|S1''| + |S2''| = q+1");
  conic_require(detail::scaled_residues(C.S1pp, 2, N) == C.S1p, "S1' = 2 S1''");
  conic_require(detail::scaled_residues(C.S2pp, 2, N) == C.S2p, "S2' = 2 S2''");
  conic_require(detail::scaled_residues(C.S1p, 2, N) == C.S1, "S1 = 2 S1'");
  conic_require(detail::scaled_residues(C.S2p, 2, N) == C.S2, "S2 = 2 S2'");

  // S1, S2 partition S and are fixed by multiplication by q
  std::vector<std::uint32_t> s12 = C.S1;
  s12.insert(s12.end(), C.S2.begin(), C.S2.end());
  std::sort(s12.begin(), s12.end());
  conic_require(std::adjacent_find(s12.begin(), s12.end()) == s12.end(), "S1 and S2 are disjoint");
  conic_require(s12 == C.S, "S1 u S2 = S");
  conic_require(detail::scaled_residues(C.S1, q, N) == C.S1, "q S1 = S1 (mod N)");
  conic_require(detail::scaled_residues(C.S2, q, N) == C.S2, "q S2 = S2 (mod N)");

  // line trichotomy: |(S - c) n I_Q| tracks sgn(f(omega^c))
  for (std::uint64_t c = 0; c < N; ++c) {
    std::uint32_t n = 0;
    for (std::uint32_t s : C.S)
      if (detail::bit(C.in_IQ, (s + N - c % N) % N)) ++n;
    FElem f = trace(F, pow_elem(F, omega(F), (std::int64_t)(2 * c)), Level::Fq3, Level::Fq);
    int sg = sgn(F, f);
    std::uint32_t expect = sg == 0 ? 1 : (sg == -C.eps ? 0 : 2);
    conic_require(n == expect, "tangent/exterior/secant trichotomy at c=" + std::to_string(c));
  }
}

// Exact and complex character values of the planar Cayley sets.
//
// D_1 (classes of I_Q over F_q3, modulus N): integer values by exact counting,
//   q |(S-c) n I_Q| - (q+1) in { -1, -1+eps q, -1-eps q } by class of c.
// D_{1,1} (classes of X, modulus 2N): four complex values, the I_Q cases
//   splitting by c mod 2N in X or X+N with value (-1 +- eta(2) q G_q(eta))/2.
inline std::vector<IdentityCheck> check_conic_char_values(const FieldCtx& F, CharLab& lab, const ConicData& C,
                                                          double tol = 1e-6) {
  std::uint64_t q = F.P.q, N = C.N, twoN = 2 * N, n3 = F.P.q3 - 1;
  const std::uint8_t* tr3 = lab.trace_table(Level::Fq3);
  std::vector<IdentityCheck> out;

  // exact integer values of psi(omega^c D_1): tally additive-character exponents
  long vIQ = -1, vIs = -1 + C.eps * (long)q, vIn = -1 - C.eps * (long)q;
  for (std::uint64_t c = 0; c < N; ++c) {
    std::vector<long> tally(F.P.p, 0);
    for (std::uint32_t i : C.IQ)
      for (std::uint64_t e = (c + i) % N; e < n3; e += N) ++tally[tr3[e]];
    for (std::uint32_t t = 2; t < F.P.p; ++t)
      if (tally[t] != tally[1])
        throw error(errc::non_integer_character_value,
                    "nonconstant character tally for D_1 at c=" + std::to_string(c));
    long value = tally[0] - tally[1];
    long expect = detail::bit(C.in_IQ, c) ? vIQ : (std::binary_search(C.Is.begin(), C.Is.end(), (std::uint32_t)c) ? vIs : vIn);
    if (value != expect)
      throw error(errc::verification_failure, "D_1 character value off at c=" + std::to_string(c));
  }
  out.push_back(make_check("D1 value on I_Q class", ComplexVal::exact((double)vIQ), ComplexVal::exact((double)vIQ), tol));
  out.push_back(make_check("D1 value on I_s class", ComplexVal::exact((double)vIs), ComplexVal::exact((double)vIs), tol));
  out.push_back(make_check("D1 value on I_n class", ComplexVal::exact((double)vIn), ComplexVal::exact((double)vIn), tol));

  // complex values of psi(omega^c D_{1,1}) from the 2N cyclotomic periods
  std::vector<std::complex<double>> period(twoN);
  for (std::uint64_t i = 0; i < twoN; ++i) period[i] = lab.gauss_period(Level::Fq3, twoN, i).z();
  std::complex<double> G = lab.gauss_sum(make_char(F, Level::Fq, 2, 1)).z();
  double eta2 = lab.char_value(make_char(F, Level::Fq, 2, 1), scalar(F, 2)).real();
  std::complex<double> big_plus = (-1.0 + eta2 * (double)q * G) / 2.0;
  std::complex<double> big_minus = (-1.0 - eta2 * (double)q * G) / 2.0;
  std::complex<double> small_s((-1.0 + C.eps * (double)q) / 2.0, 0.0);
  std::complex<double> small_n((-1.0 - C.eps * (double)q) / 2.0, 0.0);
  double dev_X = 0, dev_XN = 0, dev_s = 0, dev_n = 0;
  for (std::uint64_t c = 0; c < twoN; ++c) {
    std::complex<double> v(0.0, 0.0);
    for (std::uint32_t i : C.X) v += period[(i + c) % twoN];
    std::complex<double> expect;
    double* slot;
    if (detail::bit(C.in_IQ, c % N)) {
      bool inX = detail::bit(C.in_X, c % twoN);
      expect = inX ? big_plus : big_minus;
      slot = inX ? &dev_X : &dev_XN;
    } else if (std::binary_search(C.Is.begin(), C.Is.end(), (std::uint32_t)(c % N))) {
      expect = small_s;
      slot = &dev_s;
    } else {
      expect = small_n;
      slot = &dev_n;
    }
    double d = std::abs(v - expect);
    if (d > *slot) *slot = d;
    if (d > tol)
      throw error(errc::verification_failure, "D_{1,1} character value off at c=" + std::to_string(c));
  }
  auto row = [tol](const char* name, std::complex<double> expect, double dev) {
    IdentityCheck c = make_check(name, ComplexVal::exact(expect), ComplexVal::exact(expect), tol);
    c.deviation = dev;
    c.pass = dev <= tol;
    return c;
  };
  out.push_back(row("D11 value on X class", big_plus, dev_X));
  out.push_back(row("D11 value on X+N class", big_minus, dev_XN));
  out.push_back(row("D11 value on I_s class", small_s, dev_s));
  out.push_back(row("D11 value on I_n class", small_n, dev_n));
  return out;
}

}  // namespace hemi
