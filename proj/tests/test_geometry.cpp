// Tests for the quadric model: forms, perp tests, and singular-line enumeration.
//
// Frozen counts, all re-derived here by exhaustive evaluation:
//   |Q-(5,q)|            = (q+1)(q^3+1)        -> 112 (q=3), 2752 (q=7)
//   nonzero singular vectors = (q^2-1)(q^3+1)  -> 224 (q=3)
//   |P^perp ∩ quadric|   = q^3+q+1 singular P  -> 31  (q=3)
//                        = q^3+q^2+q+1 else    -> 40  (q=3)
//   singular lines       = (q^2+1)(q^3+1)      -> 280 (q=3), 17200 (q=7)
//   lines through a singular point = q^2+1     -> 10  (q=3), 50 (q=7)

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hemi/field.hpp"
#include "hemi/geometry.hpp"

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

FElem rand_elem(const FieldCtx& F, std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<std::uint64_t> d(0, F.P.order - (allow_zero ? 0 : 1));
  std::uint64_t v = d(rng);
  if (allow_zero && v == F.P.order) return FElem::zero();
  return FElem::from_exp((std::uint32_t)v);
}

FElem two(const FieldCtx& F) { return add(F, one(F), one(F)); }

}  // namespace

TEST_CASE("projective points: ids, representatives, counts") {
  const FieldCtx& F = field3();
  std::uint64_t n = projective_point_count(F);
  REQUIRE(n == 364);  // (3^6-1)/2
  REQUIRE(projective_point_count(field7()) == 19608);

  // every nonzero vector maps to the id of its scalar class
  for (std::uint64_t e = 0; e < F.P.order; ++e) {
    FElem x = FElem::from_exp((std::uint32_t)e);
    PointId c = point_of(F, x);
    REQUIRE(c == e % n);
    REQUIRE(point_of(F, point_rep(F, c)) == c);
  }
  REQUIRE_THROWS_AS(point_of(F, FElem::zero()), error);
}

TEST_CASE("quadric form: codomain, homogeneity, point counts") {
  std::mt19937_64 rng(101);
  for (const FieldCtx* Fp : {&field3(), &field7()}) {
    const FieldCtx& F = *Fp;
    // Q maps into F_q and scales by lambda^2 on the vector level
    for (int t = 0; t < 2000; ++t) {
      FElem x = rand_elem(F, rng);
      FElem qx = quadric_form(F, x);
      REQUIRE(in_level(F, qx, Level::Fq));
      std::uint64_t n = projective_point_count(F);
      std::uniform_int_distribution<std::uint64_t> dl(0, F.P.q - 2);
      FElem lam = FElem::from_exp((std::uint32_t)(dl(rng) * n));
      FElem lhs = quadric_form(F, mul(F, lam, x));
      FElem rhs = mul(F, mul(F, lam, lam), qx);
      REQUIRE(lhs.raw == rhs.raw);
    }
  }

  const FieldCtx& F = field3();
  std::uint64_t zero_vectors = 0;
  for (std::uint64_t e = 0; e < F.P.order; ++e)
    if (quadric_form(F, FElem::from_exp((std::uint32_t)e)).is_zero()) ++zero_vectors;
  REQUIRE(zero_vectors == 224);  // (q^2-1)(q^3+1)

  Quadric Q3 = quadric_points(F);
  REQUIRE(Q3.size() == 112);
  REQUIRE(zero_vectors == (F.P.q - 1) * Q3.size());
  REQUIRE(quadric_points(field7()).size() == 2752);

  // membership bitset and index agree with the point list
  std::size_t seen = 0;
  for (std::uint64_t c = 0; c < Q3.n_points_total; ++c) {
    bool in = Q3.contains((PointId)c);
    REQUIRE(in == (Q3.index_of[c] != kNoExp));
    if (in) {
      REQUIRE(Q3.points[Q3.index_of[c]] == c);
      ++seen;
    }
  }
  REQUIRE(seen == Q3.size());
}

TEST_CASE("polar form: symmetry, bilinearity, polarization of Q") {
  std::mt19937_64 rng(102);
  for (const FieldCtx* Fp : {&field3(), &field7()}) {
    const FieldCtx& F = *Fp;
    for (int t = 0; t < 2000; ++t) {
      FElem x = rand_elem(F, rng), y = rand_elem(F, rng), z = rand_elem(F, rng);
      FElem bxy = bilinear_form(F, x, y);
      REQUIRE(in_level(F, bxy, Level::Fq));
      REQUIRE(bxy.raw == bilinear_form(F, y, x).raw);
      // additivity in the first slot
      FElem lhs = bilinear_form(F, add(F, x, y), z);
      FElem rhs = add(F, bilinear_form(F, x, z), bilinear_form(F, y, z));
      REQUIRE(lhs.raw == rhs.raw);
      // B(x,x) = 2 Q(x)
      REQUIRE(bilinear_form(F, x, x).raw == mul(F, two(F), quadric_form(F, x)).raw);
      // Q(x+y) = Q(x) + Q(y) + B(x,y)
      FElem ql = quadric_form(F, add(F, x, y));
      FElem qr = add(F, add(F, quadric_form(F, x), quadric_form(F, y)), bxy);
      REQUIRE(ql.raw == qr.raw);
    }
  }
}

TEST_CASE("perp test agrees with the polar form") {
  const FieldCtx& F = field3();
  std::uint64_t n = projective_point_count(F);
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b) {
      bool fast = perp_contains(F, a, b);
      bool slow = bilinear_form(F, point_rep(F, a), point_rep(F, b)).is_zero();
      REQUIRE(fast == slow);
    }

  const FieldCtx& F7 = field7();
  std::uint64_t n7 = projective_point_count(F7);
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::uint64_t> d(0, n7 - 1);
  for (int t = 0; t < 20000; ++t) {
    PointId a = (PointId)d(rng), b = (PointId)d(rng);
    bool fast = perp_contains(F7, a, b);
    REQUIRE(fast == bilinear_form(F7, point_rep(F7, a), point_rep(F7, b)).is_zero());
    REQUIRE(fast == perp_contains(F7, b, a));
  }
}

TEST_CASE("polar hyperplane sections of the quadric") {
  const FieldCtx& F = field3();
  Quadric Q = quadric_points(F);
  std::uint64_t n = Q.n_points_total;
  for (PointId P = 0; P < n; ++P) {
    std::uint64_t sec = 0;
    for (PointId R : Q.points)
      if (perp_contains(F, P, R)) ++sec;
    if (Q.contains(P)) {
      REQUIRE(sec == 31);  // cone point: 1 + q(q^2+1)
      REQUIRE(perp_contains(F, P, P));
    } else {
      REQUIRE(sec == 40);  // parabolic section, (q^4-1)/(q-1)
    }
  }
  // perps are hyperplanes: (q^5-1)/(q-1) points each
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
  for (int t = 0; t < 24; ++t) {
    PointId P = (PointId)d(rng);
    std::uint64_t sz = 0;
    for (PointId R = 0; R < n; ++R)
      if (perp_contains(F, P, R)) ++sz;
    REQUIRE(sz == 121);
  }
}

TEST_CASE("span_line: size, membership, degeneracy guard") {
  const FieldCtx& F = field3();
  std::uint64_t n = projective_point_count(F);
  std::mt19937_64 rng(105);
  std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
  for (int t = 0; t < 3000; ++t) {
    PointId a = (PointId)d(rng), b = (PointId)d(rng);
    if (a == b) {
      REQUIRE_THROWS_AS(span_line(F, a, b), error);
      continue;
    }
    std::vector<PointId> line = span_line(F, a, b);
    REQUIRE(line.size() == F.P.q + 1);
    REQUIRE(std::is_sorted(line.begin(), line.end()));
    REQUIRE(std::adjacent_find(line.begin(), line.end()) == line.end());
    REQUIRE(std::binary_search(line.begin(), line.end(), a));
    REQUIRE(std::binary_search(line.begin(), line.end(), b));
  }
}

TEST_CASE("singular lines: counts, regularity, generalized-quadrangle axiom") {
  const FieldCtx& F = field3();
  Quadric Q = quadric_points(F);
  LineSet L = enumerate_lines(F, Q);
  REQUIRE(L.points_per_line == 4);
  REQUIRE(L.size() == 280);  // (q^2+1)(q^3+1)

  // lines are sorted, distinct, fully singular, and internally orthogonal
  std::set<std::vector<PointId>> distinct;
  std::vector<std::uint32_t> incidence(Q.n_points_total, 0);
  for (std::size_t i = 0; i < L.size(); ++i) {
    const PointId* ln = L.line(i);
    std::vector<PointId> v(ln, ln + L.points_per_line);
    REQUIRE(std::is_sorted(v.begin(), v.end()));
    distinct.insert(v);
    for (std::uint32_t a = 0; a < L.points_per_line; ++a) {
      REQUIRE(Q.contains(v[a]));
      ++incidence[v[a]];
      for (std::uint32_t b = a + 1; b < L.points_per_line; ++b) {
        REQUIRE(perp_contains(F, v[a], v[b]));
        REQUIRE(span_line(F, v[a], v[b]) == v);  // any two points regenerate the line
      }
    }
  }
  REQUIRE(distinct.size() == L.size());
  for (PointId c = 0; c < Q.n_points_total; ++c)
    REQUIRE(incidence[c] == (Q.contains(c) ? 10u : 0u));  // q^2+1 lines per singular point

  // GQ(q, q^2) axiom: a point off a line is collinear with exactly one of its points
  for (std::size_t i = 0; i < L.size(); ++i) {
    const PointId* ln = L.line(i);
    for (PointId P : Q.points) {
      if (std::binary_search(ln, ln + L.points_per_line, P)) continue;
      std::uint32_t coll = 0;
      for (std::uint32_t a = 0; a < L.points_per_line; ++a)
        if (perp_contains(F, P, ln[a])) ++coll;
      REQUIRE(coll == 1);
    }
  }
}

TEST_CASE("singular lines at q=7: count and incidence") {
  const FieldCtx& F = field7();
  Quadric Q = quadric_points(F);
  LineSet L = enumerate_lines(F, Q);
  REQUIRE(L.points_per_line == 8);
  REQUIRE(L.size() == 17200);  // (q^2+1)(q^3+1)

  std::vector<std::uint32_t> incidence(Q.n_points_total, 0);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::uint32_t a = 0; a < L.points_per_line; ++a) ++incidence[L.line(i)[a]];
  for (PointId c = 0; c < Q.n_points_total; ++c)
    REQUIRE(incidence[c] == (Q.contains(c) ? 50u : 0u));

  std::mt19937_64 rng(106);
  std::uniform_int_distribution<std::size_t> d(0, L.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const PointId* ln = L.line(d(rng));
    REQUIRE(span_line(F, ln[1], ln[6]) == std::vector<PointId>(ln, ln + 8));
  }
}
