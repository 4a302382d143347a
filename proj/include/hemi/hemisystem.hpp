// Hemisystem construction on the elliptic quadric in PG(5,q), q = 3 (mod 4).
//
// Everything lives in exponent land.  With gamma the fixed primitive element
// of F_q6 and omega = gamma^(q^3+1), the vector set D of the hemisystem is a
// union of cosets of the index-4N subgroup of F_q6^*, so it is determined by
// a set I of residues mod 4N:
//
//   I = { N*i - (q+1)*j  (mod 4N) : (i,j) in (J1 x S1) u (J2 x S2) },
//
// where J1 = {0,3}, J2 = {1,2} and S1, S2 are the halves of the Singer set
// produced by the conic partition.  Since N is odd, x = N*i - (q+1)*j gives
// x = i (mod 4) and x = q^2 j (mod N), and q^2 S_t = S_t, so membership in I
// is a pair of congruence conditions on (x mod 4, x mod N).  The scalar
// stride N(q^3+1) between representatives of a projective point vanishes
// mod 4N, so D is a union of full punctured 1-spaces and the point set M
// is well defined with |M| = (q+1)/2 * (q^3+1).
//
// The dual index set J (the residues a with psi(gamma^a D) on the small
// branch -q^3 + (q^2-1)/2) uses K1 = {0,1}, K2 = {2,3} in the same formula
// and coincides with q^3 * I mod 4N; build_descriptor computes it both ways
// and refuses to return if they disagree.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "hemi/conic.hpp"
#include "hemi/field.hpp"
#include "hemi/geometry.hpp"

namespace hemi {

// Complete index-set description of one hemisystem, including the conic
// partition it was built from.  Sufficient to rebuild D, M and the dual,
// and to re-verify every claimed property from scratch.
struct HemisystemDescriptor {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  std::uint64_t q = 0;
  std::uint64_t N = 0;                    // q^2 + q + 1
  std::vector<std::uint32_t> polynomial;  // field modulus, coeffs low to high
  std::uint32_t d0 = 0;                   // tangent base point of the conic partition
  std::array<std::uint32_t, 2> J1{{0, 3}};  // mod-4 classes attached to S1
  std::array<std::uint32_t, 2> J2{{1, 2}};  // mod-4 classes attached to S2
  ConicData conic;
  std::vector<std::uint32_t> I;  // hemisystem coset residues mod 4N, sorted
  std::vector<std::uint32_t> J;  // dual residues mod 4N, sorted; J = q^3 I
  std::uint64_t m = 0;           // (q+1)/2, the ovoid multiplicity
  std::uint64_t size_D = 0;      // (q^3+1)(q^2-1)/2 vectors
  std::uint64_t size_M = 0;      // m(q^3+1) points

  std::vector<std::uint64_t> in_I_bits;  // membership bitset over Z_4N

  bool in_index_set(std::uint64_t r) const { return detail::bit(in_I_bits, r % (4 * N)); }
};

namespace detail {

inline std::uint32_t index_residue(std::uint64_t N, std::uint64_t q, std::uint64_t i,
                                   std::uint64_t j) {
  std::uint64_t m4 = 4 * N;
  std::uint64_t a = (N % m4) * (i % 4) % m4;
  std::uint64_t b = ((q + 1) % m4) * (j % m4) % m4;
  return (std::uint32_t)((a + m4 - b) % m4);
}

}  // namespace detail

// Residues N*i - (q+1)*j mod 4N with i running over for_S1 against j in S1
// and over for_S2 against j in S2.  The 2(q+1) residues are pairwise
// distinct by the congruence characterization; a collision means the conic
// partition is broken, so it is treated as a verification failure.
inline std::vector<std::uint32_t> index_set_from_cosets(const ConicData& C,
                                                        std::array<std::uint32_t, 2> for_S1,
                                                        std::array<std::uint32_t, 2> for_S2) {
  if (C.q % 4 != 3)
    throw error(errc::bad_congruence, "hemisystem construction needs q = 3 (mod 4)");
  std::vector<std::uint32_t> out;
  out.reserve(2 * (C.S1.size() + C.S2.size()));
  for (std::uint32_t i : for_S1)
    for (std::uint32_t j : C.S1) out.push_back(detail::index_residue(C.N, C.q, i, j));
  for (std::uint32_t i : for_S2)
    for (std::uint32_t j : C.S2) out.push_back(detail::index_residue(C.N, C.q, i, j));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw error(errc::verification_failure, "hemisystem index residues collide");
  return out;
}

inline std::vector<std::uint32_t> build_index_set(const ConicData& C) {
  return index_set_from_cosets(C, {0, 3}, {1, 2});
}

// Dual pattern: K1 = {0,1} attached to S1, K2 = {2,3} attached to S2.
inline std::vector<std::uint32_t> build_dual_index_set(const ConicData& C) {
  return index_set_from_cosets(C, {0, 1}, {2, 3});
}

// The other half of the quadric coset classes; its point set is the
// complement of M inside the quadric and is itself a hemisystem.
inline std::vector<std::uint32_t> build_complement_index_set(const ConicData& C) {
  return index_set_from_cosets(C, {1, 2}, {0, 3});
}

// Validates I as a sorted subset of Z_4N and rebuilds the membership bitset.
// Call after deserializing or editing a descriptor by hand.
inline void rebuild_membership(HemisystemDescriptor& H) {
  std::uint64_t m4 = 4 * H.N;
  for (std::size_t t = 0; t < H.I.size(); ++t)
    if (H.I[t] >= m4 || (t > 0 && H.I[t] <= H.I[t - 1]))
      throw error(errc::invalid_argument, "index set is not a sorted subset of Z_4N");
  H.in_I_bits = detail::make_bits(m4, H.I);
}

inline HemisystemDescriptor build_descriptor(const FieldCtx& F, const ConicData& C) {
  if (C.q != F.P.q || C.N != F.P.N)
    throw error(errc::invalid_argument, "conic data does not belong to this field");
  if (!F.P.construction_ready)
    throw error(errc::bad_congruence, "hemisystem construction needs q = 3 (mod 4)");

  HemisystemDescriptor H;
  H.p = F.P.p;
  H.f = F.P.f;
  H.q = F.P.q;
  H.N = F.P.N;
  H.polynomial = F.modulus;
  H.d0 = C.d0;
  H.conic = C;
  H.I = build_index_set(C);
  H.J = build_dual_index_set(C);
  H.m = (F.P.q + 1) / 2;
  H.size_D = (F.P.q3 + 1) * (F.P.q * F.P.q - 1) / 2;
  H.size_M = H.m * (F.P.q3 + 1);

  std::uint64_t m4 = 4 * F.P.N;
  if (H.I.size() != 2 * (F.P.q + 1) || H.J.size() != H.I.size())
    throw error(errc::verification_failure, "hemisystem index set has the wrong size");
  // scalar orbits of projective points must stay inside single cosets
  if (F.P.N * (F.P.q3 + 1) % m4 != 0)
    throw error(errc::verification_failure, "scalar stride does not vanish mod 4N");
  // the dual must agree with the Frobenius image q^3 * I
  if (detail::scaled_residues(H.I, F.P.q3 % m4, m4) != H.J)
    throw error(errc::verification_failure, "dual index set disagrees with q^3 * I");

  rebuild_membership(H);
  return H;
}

// Same construction with the roles of S1 and S2 exchanged; yields the
// complementary hemisystem.  Its dual is computed as q^3 * I directly.
inline HemisystemDescriptor build_complement_descriptor(const FieldCtx& F, const ConicData& C) {
  HemisystemDescriptor H = build_descriptor(F, C);
  H.J1 = {{1, 2}};
  H.J2 = {{0, 3}};
  H.I = build_complement_index_set(C);
  H.J = detail::scaled_residues(H.I, F.P.q3 % (4 * F.P.N), 4 * F.P.N);
  rebuild_membership(H);
  return H;
}

// x = gamma^e lies in D iff e mod 4N is one of the hemisystem residues.
inline bool vector_in_D(const HemisystemDescriptor& H, FElem x) {
  return !x.is_zero() && H.in_index_set(x.exp());
}

// A projective point id c stands for the vectors gamma^(c + t N(q^3+1));
// the stride is 0 mod 4N, so membership depends on c alone.
inline bool point_in_M(const HemisystemDescriptor& H, PointId c) { return H.in_index_set(c); }

// All exponents e in [0, q^6-1) with gamma^e in D, ascending.
inline std::vector<std::uint32_t> enumerate_vector_exponents(const FieldCtx& F,
                                                             const HemisystemDescriptor& H) {
  std::vector<std::uint32_t> out;
  out.reserve(H.size_D);
  for (std::uint64_t e = 0; e < F.P.order; ++e)
    if (H.in_index_set(e)) out.push_back((std::uint32_t)e);
  return out;
}

struct PointSet {
  std::uint64_t n_points_total = 0;
  std::vector<PointId> points;      // ascending
  std::vector<std::uint64_t> bits;  // membership by point id

  bool contains(PointId c) const { return detail::bit(bits, c); }
  std::uint64_t size() const { return points.size(); }
};

inline PointSet hemisystem_points(const FieldCtx& F, const HemisystemDescriptor& H) {
  PointSet M;
  M.n_points_total = projective_point_count(F);
  M.points.reserve(H.size_M);
  for (std::uint64_t c = 0; c < M.n_points_total; ++c)
    if (H.in_index_set(c)) M.points.push_back((PointId)c);
  M.bits = detail::make_bits(M.n_points_total, M.points);
  return M;
}

}  // namespace hemi
