// Elliptic quadric model in PG(5,q) over the field tower.
//
// F_q6 is the 6-dimensional F_q vector space underlying PG(5,q).  Projective
// points are cosets of F_q^* in F_q6^*; since F_q^* = <gamma^{(q^6-1)/(q-1)}>,
// the coset of gamma^e is e mod n_points and that residue doubles as the point
// id.  The quadric is Q(x) = Tr_{q3/q}(x^{q3+1}), the polar form is
// B(x,y) = Tr_{q6/q}(x y^{q3}), and a perp test is a single lookup into the
// trace-zero bitset at exponent x + q^3 y.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hemi/field.hpp"

namespace hemi {

using PointId = std::uint32_t;

inline std::uint64_t projective_point_count(const FieldCtx& F) { return F.P.order / (F.P.q - 1); }

// Q(x) = Tr_{q3/q}(x^{q3+1})
inline FElem quadric_form(const FieldCtx& F, FElem x) {
  if (x.is_zero()) return x;
  FElem y = pow_elem(F, x, (std::int64_t)(F.P.q3 + 1));
  return trace(F, y, Level::Fq3, Level::Fq);
}

// B(x,y) = Tr_{q6/q}(x y^{q3}), the polar form of Q
inline FElem bilinear_form(const FieldCtx& F, FElem x, FElem y) {
  return trace(F, mul(F, x, frobenius(F, y, 3)), Level::Fq6, Level::Fq);
}

inline PointId point_of(const FieldCtx& F, FElem x) {
  if (x.is_zero()) throw error(errc::zero_input, "the zero vector spans no point");
  return (PointId)(x.exp() % projective_point_count(F));
}

inline FElem point_rep(const FieldCtx&, PointId c) { return FElem::from_exp(c); }

// R lies on the polar hyperplane of P
inline bool perp_contains(const FieldCtx& F, PointId P, PointId R) {
  std::uint64_t e = (P + F.q_pow_mod[3] * R) % F.P.order;
  return F.tr_q6_to_q_is_zero(e);
}

struct Quadric {
  std::uint64_t n_points_total = 0;       // points of PG(5,q)
  std::vector<PointId> points;            // singular points, ascending
  std::vector<std::uint64_t> bits;        // membership bitset over point ids
  std::vector<std::uint32_t> index_of;    // point id -> position in `points`, kNoExp if off the quadric

  bool contains(PointId c) const { return (bits[c >> 6] >> (c & 63)) & 1u; }
  std::size_t size() const { return points.size(); }
};

inline Quadric quadric_points(const FieldCtx& F) {
  Quadric Q;
  Q.n_points_total = projective_point_count(F);
  Q.bits.assign((Q.n_points_total + 63) / 64, 0);
  Q.index_of.assign(Q.n_points_total, kNoExp);
  for (std::uint64_t c = 0; c < Q.n_points_total; ++c) {
    if (quadric_form(F, FElem::from_exp((std::uint32_t)c)).is_zero()) {
      Q.index_of[c] = (std::uint32_t)Q.points.size();
      Q.points.push_back((PointId)c);
      Q.bits[c >> 6] |= 1ull << (c & 63);
    }
  }
  return Q;
}

// all q+1 points on the line through two distinct points, ascending
inline std::vector<PointId> span_line(const FieldCtx& F, PointId a, PointId b) {
  if (a == b) throw error(errc::invalid_argument, "span_line needs two distinct points");
  std::uint64_t n = projective_point_count(F);
  std::vector<PointId> line;
  line.reserve(F.P.q + 1);
  line.push_back(a);
  line.push_back(b);
  // remaining points are a + lambda b, lambda in F_q^*; lambda = gamma^{t n}
  for (std::uint64_t t = 0; t < F.P.q - 1; ++t) {
    std::uint64_t d = (b + t * n + F.P.order - a) % F.P.order;
    std::uint32_t z = F.zech[d];
    if (z == kNoExp) throw error(errc::collision_detected, "degenerate span: points coincide projectively");
    line.push_back((PointId)(((std::uint64_t)a + z) % F.P.order % n));
  }
  std::sort(line.begin(), line.end());
  return line;
}

struct LineSet {
  std::uint32_t points_per_line = 0;  // q + 1
  std::vector<PointId> flat;          // size() * points_per_line, each line sorted

  std::size_t size() const { return points_per_line ? flat.size() / points_per_line : 0; }
  const PointId* line(std::size_t i) const { return flat.data() + i * points_per_line; }
};

// All totally singular lines of the quadric.  Two distinct singular points span
// a singular line iff they are orthogonal; each line is emitted once, from its
// minimal point.  Expected count: (q^2+1)(q^3+1).
inline LineSet enumerate_lines(const FieldCtx& F, const Quadric& Q) {
  LineSet L;
  L.points_per_line = (std::uint32_t)(F.P.q + 1);
  const std::size_t nq = Q.points.size();
  std::vector<std::uint32_t> epoch(nq, 0);
  std::uint32_t cur = 0;
  std::uint64_t order = F.P.order;
  for (std::size_t ip = 0; ip < nq; ++ip) {
    PointId P = Q.points[ip];
    std::uint64_t pq3 = F.q_pow_mod[3] * P % order;
    ++cur;
    for (std::size_t ir = ip + 1; ir < nq; ++ir) {
      if (epoch[ir] == cur) continue;
      PointId R = Q.points[ir];
      std::uint64_t e = pq3 + R;  // B(R, P) exponent; B is symmetric
      if (e >= order) e -= order;
      if (!F.tr_q6_to_q_is_zero(e)) continue;
      std::vector<PointId> line = span_line(F, P, R);
      bool minimal = line[0] == P;
      for (PointId x : line) {
        if (x == P) continue;
        std::uint32_t ix = Q.index_of[x];
        if (ix == kNoExp) throw error(errc::collision_detected, "span of orthogonal singular points left the quadric");
        epoch[ix] = cur;
      }
      if (minimal) L.flat.insert(L.flat.end(), line.begin(), line.end());
    }
  }
  return L;
}

}  // namespace hemi
