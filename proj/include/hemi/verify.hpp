// Verification engine: independent pass/fail checks on a hemisystem candidate.
//
// Each check recomputes its claim through a different route than the
// construction used: line intersections and polar counts come from the
// PG(5,q) incidence machinery, character spectra from exact integer tallies
// of additive-character exponents, graph parameters from direct neighbor
// counting, and the Gauss-sum battery from the generic character laboratory.
// A candidate must pass all of them.  Checks report structured results
// instead of throwing, so broken candidates can be examined; only malformed
// inputs (unknown check names, mismatched fields) raise errors.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hemi/charsum.hpp"
#include "hemi/conic.hpp"
#include "hemi/field.hpp"
#include "hemi/geometry.hpp"
#include "hemi/hemisystem.hpp"

namespace hemi {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;                                       // one-line summary
  std::vector<std::pair<std::string, std::int64_t>> stats;  // named counters
  std::vector<std::pair<std::string, double>> metrics;      // named real values
  double seconds = 0.0;                                     // filled by run_checks
};

struct VerifyOptions {
  std::uint64_t srg_samples = 10000;  // differences sampled when the sweep is not exhaustive
  bool srg_full = false;              // force the exhaustive difference sweep
  double tolerance = 0.0;             // 0 = per-identity defaults
};

namespace detail {

inline void put_stat(CheckResult& r, const std::string& k, std::int64_t v) {
  r.stats.emplace_back(k, v);
}

// membership bitset over the whole exponent range [0, q^6-1); turns the
// mod-4N residue test into a single indexed bit read in hot loops
inline std::vector<std::uint64_t> coset_bits(const FieldCtx& F, const HemisystemDescriptor& H) {
  std::vector<std::uint64_t> b((F.P.order + 63) / 64, 0);
  for (std::uint64_t e = 0; e < F.P.order; ++e)
    if (H.in_index_set(e)) b[e >> 6] |= 1ull << (e & 63);
  return b;
}

}  // namespace detail

// Every totally singular line must meet the point set in exactly m points;
// together with |M| = m(q^3+1) this characterizes an m-ovoid.  Reports the
// full histogram of intersection sizes.
inline CheckResult check_line_intersections(const FieldCtx& F, const PointSet& M,
                                            std::uint64_t m) {
  CheckResult r;
  r.name = "lines";
  Quadric Q = quadric_points(F);
  LineSet L = enumerate_lines(F, Q);
  std::uint64_t expected_lines = (F.P.q2 + 1) * (F.P.q3 + 1);

  std::map<std::uint32_t, std::uint64_t> histo;
  for (std::size_t i = 0; i < L.size(); ++i) {
    const PointId* line = L.line(i);
    std::uint32_t cnt = 0;
    for (std::uint32_t t = 0; t < L.points_per_line; ++t) cnt += M.contains(line[t]);
    ++histo[cnt];
  }

  bool size_ok = M.size() == m * (F.P.q3 + 1);
  bool lines_ok = L.size() == expected_lines;
  bool meet_ok = histo.size() == 1 && histo.begin()->first == m;
  r.pass = size_ok && lines_ok && meet_ok;

  detail::put_stat(r, "lines_total", (std::int64_t)L.size());
  detail::put_stat(r, "lines_expected", (std::int64_t)expected_lines);
  detail::put_stat(r, "set_size", (std::int64_t)M.size());
  detail::put_stat(r, "required_meet", (std::int64_t)m);
  for (auto& [k, v] : histo) detail::put_stat(r, "lines_meeting_" + std::to_string(k), (std::int64_t)v);

  std::ostringstream os;
  if (r.pass) {
    os << "all " << L.size() << " singular lines meet the set in exactly " << m << " points";
  } else {
    os << "intersection sizes {";
    bool first = true;
    for (auto& [k, v] : histo) {
      if (!first) os << ", ";
      os << k << ":" << v;
      first = false;
    }
    os << "}, set size " << M.size() << " (want " << m * (F.P.q3 + 1) << ")";
  }
  r.detail = os.str();
  return r;
}

inline CheckResult check_line_intersections(const FieldCtx& F, const HemisystemDescriptor& H) {
  return check_line_intersections(F, hemisystem_points(F, H), H.m);
}

// Polar dichotomy: for P on the quadric, |P^perp cap M| must be
// (m-1)(q^2+1)+1 when P is in M and m(q^2+1) otherwise; points off the
// quadric must all give m(q^2+1).  Both scopes are swept exhaustively.
inline CheckResult check_perp_counts(const FieldCtx& F, const PointSet& M, std::uint64_t m) {
  CheckResult r;
  r.name = "perp";
  Quadric Q = quadric_points(F);
  std::uint64_t n = Q.n_points_total;
  std::uint64_t want_in = (m - 1) * (F.P.q2 + 1) + 1;
  std::uint64_t want_out = m * (F.P.q2 + 1);

  // B(gamma^P, gamma^R) = 0 iff Tr(gamma^(R + q^3 P)) = 0; hoist q^3 P
  std::uint64_t ord = F.P.order;
  std::uint64_t mass_in = 0, mass_on = 0, mass_off = 0, bad = 0;
  for (std::uint64_t P = 0; P < n; ++P) {
    std::uint64_t base = F.q_pow_mod[3] * P % ord;
    std::uint64_t cnt = 0;
    for (PointId R : M.points) {
      std::uint64_t e = base + R;
      if (e >= ord) e -= ord;
      cnt += F.tr_q6_to_q_is_zero(e);
    }
    if (!Q.contains((PointId)P)) {
      mass_off += 1;
      if (cnt != want_out) ++bad;
    } else if (M.contains((PointId)P)) {
      mass_in += 1;
      if (cnt != want_in) ++bad;
    } else {
      mass_on += 1;
      if (cnt != want_out) ++bad;
    }
  }

  r.pass = bad == 0 && mass_in == M.size() && mass_on == Q.size() - M.size();
  detail::put_stat(r, "expected_on_set", (std::int64_t)want_in);
  detail::put_stat(r, "expected_elsewhere", (std::int64_t)want_out);
  detail::put_stat(r, "points_in_set", (std::int64_t)mass_in);
  detail::put_stat(r, "points_on_quadric_off_set", (std::int64_t)mass_on);
  detail::put_stat(r, "points_off_quadric", (std::int64_t)mass_off);
  detail::put_stat(r, "violations", (std::int64_t)bad);

  std::ostringstream os;
  if (r.pass)
    os << "perp counts " << want_in << "/" << want_out << " over " << mass_in << "+" << mass_on
       << " quadric points, " << want_out << " at all " << mass_off << " ambient points";
  else
    os << bad << " points have perp counts off the (" << want_in << ", " << want_out
       << ") dichotomy";
  r.detail = os.str();
  return r;
}

inline CheckResult check_perp_counts(const FieldCtx& F, const HemisystemDescriptor& H) {
  return check_perp_counts(F, hemisystem_points(F, H), H.m);
}

// Exact additive-character spectrum of the vector set D, one value per
// coset class a mod 4N.  Each sum is tallied as integer counts of the
// p-th-root exponents; rationality forces the counts over nonzero
// exponents to agree, and the value is then n_0 - n_1.
inline std::vector<std::int64_t> character_spectrum(const FieldCtx& F,
                                                    const HemisystemDescriptor& H) {
  std::uint64_t m4 = 4 * H.N, ord = F.P.order, p = F.P.p;
  std::vector<std::uint32_t> D = enumerate_vector_exponents(F, H);
  std::vector<std::int64_t> out(m4, 0);
  std::vector<std::uint64_t> tally(p, 0);
  for (std::uint64_t a = 0; a < m4; ++a) {
    std::fill(tally.begin(), tally.end(), 0);
    for (std::uint32_t d : D) {
      std::uint64_t e = a + d;
      if (e >= ord) e -= ord;
      ++tally[F.trace_p[e]];
    }
    for (std::uint64_t t = 2; t < p; ++t)
      if (tally[t] != tally[1])
        throw error(errc::non_integer_character_value,
                    "character sum of a coset union is not rational");
    out[a] = (std::int64_t)tally[0] - (std::int64_t)tally[1];
  }
  return out;
}

// The spectrum must take the value m(q-1) - q^3 exactly on the dual residue
// classes J and m(q-1) everywhere else; the weighted total must satisfy the
// orthogonality mass sum(psi_a(D)) over all nonzero a equal to -|D|.
inline CheckResult check_char_spectrum(const FieldCtx& F, const HemisystemDescriptor& H) {
  CheckResult r;
  r.name = "chars";
  std::uint64_t m4 = 4 * H.N;
  std::int64_t small = (std::int64_t)(H.m * (F.P.q - 1));
  std::int64_t big = small - (std::int64_t)F.P.q3;

  std::vector<std::int64_t> v;
  try {
    v = character_spectrum(F, H);
  } catch (const error& e) {
    r.detail = e.what();
    return r;
  }

  std::set<std::uint32_t> dual(H.J.begin(), H.J.end());
  std::uint64_t big_seen = 0, bad = 0;
  for (std::uint64_t a = 0; a < m4; ++a) {
    std::int64_t want = dual.count((std::uint32_t)a) ? big : small;
    if (v[a] == big) ++big_seen;
    if (v[a] != want) ++bad;
  }

  std::int64_t class_size = (std::int64_t)(F.P.order / m4);
  std::int64_t mass = 0;
  for (std::int64_t x : v) mass += x * class_size;
  bool ortho_ok = mass == -(std::int64_t)H.size_D;

  r.pass = bad == 0 && big_seen == H.J.size() && ortho_ok;
  detail::put_stat(r, "classes", (std::int64_t)m4);
  detail::put_stat(r, "value_on_dual", big);
  detail::put_stat(r, "value_elsewhere", small);
  detail::put_stat(r, "dual_classes_expected", (std::int64_t)H.J.size());
  detail::put_stat(r, "dual_classes_seen", (std::int64_t)big_seen);
  detail::put_stat(r, "violations", (std::int64_t)bad);
  detail::put_stat(r, "orthogonality_mass", mass);

  std::ostringstream os;
  if (r.pass)
    os << "spectrum is two-valued {" << big << ", " << small << "} with the " << big_seen
       << " low classes exactly on the dual residues";
  else
    os << bad << " of " << m4 << " classes deviate from the expected two-valued spectrum";
  r.detail = os.str();
  return r;
}

// Strong regularity of the Cayley graph on (F_q6, +) with connection set D.
// Common-neighbor counts depend only on the difference w = x - y, so the
// sweep runs over differences: exhaustively when the field is small or
// forced, otherwise over seeded random samples plus one representative of
// each branch.  Also enforces the parameter feasibility identity.
inline CheckResult check_srg(const FieldCtx& F, const HemisystemDescriptor& H,
                             const VerifyOptions& opts = {}) {
  CheckResult r;
  r.name = "srg";
  std::uint64_t ord = F.P.order;
  std::int64_t v = (std::int64_t)F.P.q6;
  std::int64_t k = (std::int64_t)H.size_D;
  std::int64_t ev_pos = (std::int64_t)(H.m * (F.P.q - 1));
  std::int64_t ev_neg = ev_pos - (std::int64_t)F.P.q3;
  std::int64_t lam = k + ev_pos + ev_neg + ev_pos * ev_neg;
  std::int64_t mu = k + ev_pos * ev_neg;

  bool feasible = k * (k - lam - 1) == (v - k - 1) * mu;

  // undirectedness: -D = D, i.e. the half-order shift fixes the residues
  std::uint64_t rneg = (ord / 2) % (4 * H.N);
  bool symmetric = true;
  for (std::uint32_t c : H.I)
    if (!H.in_index_set(c + rneg)) symmetric = false;

  std::vector<std::uint64_t> inD = detail::coset_bits(F, H);
  std::vector<std::uint32_t> D = enumerate_vector_exponents(F, H);

  bool full = opts.srg_full || ord <= 1000;
  std::vector<std::uint64_t> ws;
  if (full) {
    ws.resize(ord);
    std::iota(ws.begin(), ws.end(), 0);
  } else {
    ws.push_back(H.I[0]);  // an adjacent difference
    std::uint64_t w1 = 0;
    while (H.in_index_set(w1)) ++w1;
    ws.push_back(w1);  // a non-adjacent difference
    std::mt19937_64 rng(0x5ac1);
    std::uniform_int_distribution<std::uint64_t> dist(0, ord - 1);
    for (std::uint64_t t = 0; t + 2 < opts.srg_samples; ++t) ws.push_back(dist(rng));
  }

  std::uint64_t bad = 0, lam_seen = 0, mu_seen = 0;
  for (std::uint64_t w : ws) {
    FElem x = FElem::from_exp((std::uint32_t)w);
    std::int64_t cnt = 0;
    for (std::uint32_t d : D) {
      FElem sum = add(F, x, FElem::from_exp(d));
      if (!sum.is_zero() && detail::bit(inD, sum.exp())) ++cnt;
    }
    bool adjacent = detail::bit(inD, w);
    std::int64_t want = adjacent ? lam : mu;
    (adjacent ? lam_seen : mu_seen) += 1;
    if (cnt != want) ++bad;
  }

  r.pass = feasible && symmetric && bad == 0 && lam_seen > 0 && mu_seen > 0;
  detail::put_stat(r, "v", v);
  detail::put_stat(r, "k", k);
  detail::put_stat(r, "lambda", lam);
  detail::put_stat(r, "mu", mu);
  detail::put_stat(r, "eigenvalue_pos", ev_pos);
  detail::put_stat(r, "eigenvalue_neg", ev_neg);
  detail::put_stat(r, "differences_checked", (std::int64_t)ws.size());
  detail::put_stat(r, "adjacent_checked", (std::int64_t)lam_seen);
  detail::put_stat(r, "nonadjacent_checked", (std::int64_t)mu_seen);
  detail::put_stat(r, "violations", (std::int64_t)bad);
  detail::put_stat(r, "exhaustive", full ? 1 : 0);

  std::ostringstream os;
  if (r.pass)
    os << "srg(" << v << ", " << k << ", " << lam << ", " << mu << ") confirmed on "
       << ws.size() << (full ? " (all)" : " sampled") << " differences";
  else
    os << bad << " differences contradict srg(" << v << ", " << k << ", " << lam << ", " << mu
       << ")";
  r.detail = os.str();
  return r;
}

// Invariance of the point set under the stabilizer generators: translation
// t (multiplication by gamma^{4N}) of order (q^3+1)/4 and the Frobenius
// square f: x -> x^{q^2} of order 3, with f t f^{-1} = t^{q^2}.  Also
// reports the orbit structure of <t, f> on the point set.
inline CheckResult check_group_invariance(const FieldCtx& F, const HemisystemDescriptor& H) {
  CheckResult r;
  r.name = "group";
  PointSet M = hemisystem_points(F, H);
  std::uint64_t n = M.n_points_total;
  std::uint64_t m4 = 4 * H.N;
  std::uint64_t t_order = n / std::gcd(n, m4);
  std::uint64_t group_order = 3 * (F.P.q3 + 1) / 4;

  bool t_order_ok = t_order == (F.P.q3 + 1) / 4;
  bool f_cubes = F.P.q6 % n == 1 && F.P.q2 % n != 1;

  bool closed = true, relation = true;
  for (PointId c : M.points) {
    std::uint64_t tc = (c + m4) % n;
    std::uint64_t fc = F.P.q2 * c % n;
    if (!M.contains((PointId)tc) || !M.contains((PointId)fc)) closed = false;
    // f(t(c)) = t^{q^2}(f(c))
    std::uint64_t lhs = F.P.q2 * tc % n;
    std::uint64_t rhs = (fc + m4 * F.P.q2 % n) % n;
    if (lhs != rhs) relation = false;
  }

  // orbit partition of <t, f> on M
  std::vector<std::uint64_t> seen((n + 63) / 64, 0);
  std::map<std::uint64_t, std::uint64_t> orbit_histo;
  std::uint64_t covered = 0;
  bool divides = true;
  if (closed) {
    std::vector<std::uint64_t> stack;
    for (PointId c0 : M.points) {
      if (detail::bit(seen, c0)) continue;
      std::uint64_t size = 0;
      stack.push_back(c0);
      seen[c0 >> 6] |= 1ull << (c0 & 63);
      while (!stack.empty()) {
        std::uint64_t c = stack.back();
        stack.pop_back();
        ++size;
        for (std::uint64_t nx : {(c + m4) % n, F.P.q2 * c % n}) {
          if (!detail::bit(seen, nx)) {
            seen[nx >> 6] |= 1ull << (nx & 63);
            stack.push_back(nx);
          }
        }
      }
      ++orbit_histo[size];
      covered += size;
      if (group_order % size != 0) divides = false;
    }
  }

  r.pass = closed && relation && t_order_ok && f_cubes && divides && covered == M.size();
  detail::put_stat(r, "group_order", (std::int64_t)group_order);
  detail::put_stat(r, "translation_order", (std::int64_t)t_order);
  detail::put_stat(r, "set_size", (std::int64_t)M.size());
  std::uint64_t orbits = 0;
  for (auto& [sz, cnt] : orbit_histo) {
    detail::put_stat(r, "orbits_of_" + std::to_string(sz), (std::int64_t)cnt);
    orbits += cnt;
  }
  detail::put_stat(r, "orbits", (std::int64_t)orbits);

  std::ostringstream os;
  if (r.pass)
    os << "point set fixed by the order-" << group_order << " group; " << orbits
       << " orbits partition all " << M.size() << " points";
  else
    os << "stabilizer generators " << (closed ? "fix" : "do not fix")
       << " the point set (relation " << (relation ? "holds" : "fails") << ")";
  r.detail = os.str();
  return r;
}

// Re-derives the conic partition from the stored base point and re-runs the
// structural invariants and the planar character values on the descriptor's
// own copy.
inline CheckResult check_conic_partition(const FieldCtx& F, const HemisystemDescriptor& H,
                                         double tol = 0) {
  CheckResult r;
  r.name = "conic";
  if (tol <= 0) tol = 1e-6;
  try {
    ConicData fresh = build_conic_data(F, H.d0);
    bool same = fresh.S == H.conic.S && fresh.IQ == H.conic.IQ && fresh.X == H.conic.X &&
                fresh.S1 == H.conic.S1 && fresh.S2 == H.conic.S2 && fresh.d0 == H.conic.d0;
    verify_conic_invariants(F, H.conic);
    CharLab lab(F);
    std::vector<IdentityCheck> rows = check_conic_char_values(F, lab, H.conic, tol);
    double maxdev = 0;
    bool rows_ok = true;
    for (const IdentityCheck& c : rows) {
      maxdev = std::max(maxdev, c.deviation);
      rows_ok = rows_ok && c.pass;
    }
    r.pass = same && rows_ok;
    detail::put_stat(r, "rebuild_matches", same ? 1 : 0);
    detail::put_stat(r, "value_rows", (std::int64_t)rows.size());
    r.metrics.emplace_back("max_deviation", maxdev);
    std::ostringstream os;
    if (r.pass)
      os << "partition rebuilds identically; " << rows.size()
         << " character-value classes within tolerance";
    else
      os << (same ? "character values off" : "stored partition differs from a fresh rebuild");
    r.detail = os.str();
  } catch (const error& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

// Battery of Gauss-sum identities over this field: the quartic-times-odd
// identity and its corollary for every odd divisor m > 1 of N, all
// semiprimitive evaluations with modulus up to 128, lifting along the
// tower, the factorization over translates of the quadratic character,
// Singer-set sums, trace-coset sums, and Gauss periods.
inline std::vector<IdentityCheck> gauss_identity_rows(const FieldCtx& F, CharLab& lab,
                                                      double tol = 0) {
  std::vector<IdentityCheck> rows;

  // quadratic ground facts: G_q(eta)^2 = -q and G_{q^3}(chi_2) = G_q(eta)^3
  MultChar eta = make_char(F, Level::Fq, 2, 1);
  MultChar chi2 = make_char(F, Level::Fq3, 2, 1);
  ComplexVal gq = lab.gauss_sum(eta);
  rows.push_back(make_check("quadratic square", cpow_int(gq, 2),
                            ComplexVal::exact({-(double)F.P.q, 0}),
                            tol > 0 ? tol : default_tolerance(F, Level::Fq)));
  rows.push_back(make_check("quadratic cube lift", lab.gauss_sum(chi2), cpow_int(gq, 3),
                            tol > 0 ? tol : default_tolerance(F, Level::Fq3)));

  // the main quartic identity for every odd divisor m > 1 of N
  for (std::uint64_t m = 3; m <= F.P.N; m += 2) {
    if (F.P.N % m != 0) continue;
    std::vector<IdentityCheck> trio = verify_main_identity(lab, m, tol);
    rows.insert(rows.end(), trio.begin(), trio.end());
  }

  // all semiprimitive evaluations with small modulus
  for (std::uint64_t m = 3; m <= 128; ++m) {
    if (F.P.order % m != 0) continue;
    try {
      rows.push_back(verify_semiprimitive(lab, m, 1, tol));
    } catch (const error& e) {
      if (e.code() != errc::not_applicable) throw;
    }
  }

  // lifting the quadratic character of F_q up the tower
  rows.push_back(verify_lifting(lab, eta, Level::Fq3, tol));
  rows.push_back(verify_lifting(lab, eta, Level::Fq6, tol));

  // product formula with the quadratic character against the quartic one
  rows.push_back(verify_product_formula(lab, make_char(F, Level::Fq6, 4, 1), 2, 1, tol));

  // Singer-set Gauss sums and trace-coset sums
  for (std::uint64_t h : {(std::uint64_t)1, (std::uint64_t)2, F.P.N - 1})
    rows.push_back(verify_singer_gauss(lab, h, tol));
  rows.push_back(verify_trace_coset_sum(lab, make_char(F, Level::Fq6, 4, 1), Level::Fq3, tol));
  rows.push_back(
      verify_trace_coset_sum(lab, make_char(F, Level::Fq6, F.P.N, 1), Level::Fq3, tol));

  // Gauss periods for the quartic classes
  for (std::uint64_t i = 0; i < 4; ++i)
    rows.push_back(verify_gauss_period(lab, Level::Fq6, 4, i, tol));
  return rows;
}

inline CheckResult check_gauss_identities(const FieldCtx& F, double tol = 0) {
  CheckResult r;
  r.name = "gauss";
  CharLab lab(F);
  std::vector<IdentityCheck> rows;
  try {
    rows = gauss_identity_rows(F, lab, tol);
  } catch (const error& e) {
    r.pass = false;
    r.detail = e.what();
    return r;
  }

  double maxdev = 0;
  std::uint64_t failed = 0;
  for (const IdentityCheck& c : rows) {
    maxdev = std::max(maxdev, c.deviation);
    if (!c.pass) ++failed;
  }
  r.pass = failed == 0 && !rows.empty();
  detail::put_stat(r, "identities", (std::int64_t)rows.size());
  detail::put_stat(r, "failed", (std::int64_t)failed);
  r.metrics.emplace_back("max_deviation", maxdev);

  std::ostringstream os;
  if (r.pass)
    os << rows.size() << " gauss-sum identities hold within tolerance (max deviation " << maxdev
       << ")";
  else
    os << failed << " of " << rows.size() << " gauss-sum identities fail";
  r.detail = os.str();
  return r;
}

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {"conic", "lines", "perp", "chars",
                                                 "srg",   "group", "gauss"};
  return names;
}

// Runs the selected checks (all of them when `names` is empty) in canonical
// order and stamps wall-clock durations.
inline std::vector<CheckResult> run_checks(const FieldCtx& F, const HemisystemDescriptor& H,
                                           const VerifyOptions& opts = {},
                                           std::vector<std::string> names = {}) {
  if (names.empty()) names = all_check_names();
  for (const std::string& n : names)
    if (std::find(all_check_names().begin(), all_check_names().end(), n) ==
        all_check_names().end())
      throw error(errc::invalid_argument, "unknown check: " + n);

  std::vector<CheckResult> out;
  for (const std::string& n : all_check_names()) {
    if (std::find(names.begin(), names.end(), n) == names.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    if (n == "conic")
      r = check_conic_partition(F, H, opts.tolerance);
    else if (n == "lines")
      r = check_line_intersections(F, H);
    else if (n == "perp")
      r = check_perp_counts(F, H);
    else if (n == "chars")
      r = check_char_spectrum(F, H);
    else if (n == "srg")
      r = check_srg(F, H, opts);
    else if (n == "group")
      r = check_group_invariance(F, H);
    else
      r = check_gauss_identities(F, opts.tolerance);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline bool verification_passed(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs)
    if (!r.pass) return false;
  return !rs.empty();
}

}  // namespace hemi
