// JSON descriptors, verification reports, and Cayley-graph export.
//
// Serialized payloads are deterministic: the same descriptor or check
// results always produce the same bytes.  Timestamps and wall-clock
// timings live only inside a `provenance` object, so stripping that one
// key makes files bytewise comparable across runs.  The loader validates
// format and internal consistency only; whether the data is actually a
// hemisystem is the verification engine's job, so a structurally sound
// but mathematically wrong file loads fine and then fails its checks.

#pragma once

#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hemi/conic.hpp"
#include "hemi/field.hpp"
#include "hemi/hemisystem.hpp"
#include "hemi/verify.hpp"

namespace hemi {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "hemi 1.0.0";

namespace detail {

inline std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline void require_sorted_below(const std::vector<std::uint32_t>& v, std::uint64_t bound,
                                 const std::string& what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= bound || (i > 0 && v[i] <= v[i - 1]))
      throw error(errc::invalid_argument, what + " is not a sorted set of residues");
}

inline std::vector<std::uint32_t> residues(const nlohmann::json& j, const std::string& key,
                                           std::uint64_t bound) {
  std::vector<std::uint32_t> v = j.at(key).get<std::vector<std::uint32_t>>();
  require_sorted_below(v, bound, key);
  return v;
}

}  // namespace detail

inline nlohmann::json descriptor_to_json(const HemisystemDescriptor& H) {
  nlohmann::json j;
  j["version"] = kFormatVersion;
  j["p"] = H.p;
  j["f"] = H.f;
  j["q"] = H.q;
  j["N"] = H.N;
  j["polynomial"] = H.polynomial;
  j["d0"] = H.d0;
  j["J1"] = H.J1;
  j["J2"] = H.J2;
  j["conic"] = {{"N", H.conic.N}, {"d0", H.conic.d0}, {"S", H.conic.S},   {"IQ", H.conic.IQ},
                {"Is", H.conic.Is}, {"In", H.conic.In}, {"X", H.conic.X}, {"S1", H.conic.S1},
                {"S2", H.conic.S2}};
  j["I"] = H.I;
  j["J"] = H.J;
  j["sizes"] = {{"index", H.I.size()}, {"vectors", H.size_D}, {"points", H.size_M}, {"m", H.m}};
  return j;
}

inline HemisystemDescriptor descriptor_from_json(const nlohmann::json& j) {
  HemisystemDescriptor H;
  try {
    if (j.at("version").get<int>() != kFormatVersion)
      throw error(errc::invalid_argument, "unsupported descriptor format version");
    H.p = j.at("p").get<std::uint32_t>();
    H.f = j.at("f").get<std::uint32_t>();
    H.q = j.at("q").get<std::uint64_t>();
    H.N = j.at("N").get<std::uint64_t>();
    H.polynomial = j.at("polynomial").get<std::vector<std::uint32_t>>();
    H.d0 = j.at("d0").get<std::uint32_t>();
    H.J1 = j.at("J1").get<std::array<std::uint32_t, 2>>();
    H.J2 = j.at("J2").get<std::array<std::uint32_t, 2>>();

    if (H.q != detail::ipow_checked(H.p, H.f)) throw error(errc::invalid_argument, "q is not p^f");
    if (H.N != H.q * H.q + H.q + 1) throw error(errc::invalid_argument, "N is not q^2 + q + 1");
    if (H.polynomial.size() != 6 * H.f + 1)
      throw error(errc::invalid_argument, "polynomial does not have degree 6f");

    const nlohmann::json& c = j.at("conic");
    H.conic.q = (std::uint32_t)H.q;
    H.conic.N = c.at("N").get<std::uint64_t>();
    if (H.conic.N != H.N) throw error(errc::invalid_argument, "conic modulus differs from N");
    H.conic.eps = (H.q % 4 == 1) ? 1 : -1;
    H.conic.d0 = c.at("d0").get<std::uint32_t>();
    H.conic.S = detail::residues(c, "S", H.N);
    H.conic.IQ = detail::residues(c, "IQ", H.N);
    H.conic.Is = detail::residues(c, "Is", H.N);
    H.conic.In = detail::residues(c, "In", H.N);
    H.conic.X = detail::residues(c, "X", 2 * H.N);
    std::vector<std::uint32_t> s1 = detail::residues(c, "S1", H.N);
    std::vector<std::uint32_t> s2 = detail::residues(c, "S2", H.N);

    // the halving chain is derivable from X; a stored partition that does
    // not match it means the file was assembled inconsistently
    partition_from_X(H.conic.X, H.conic.N, H.conic);
    if (H.conic.S1 != s1 || H.conic.S2 != s2)
      throw error(errc::invalid_argument, "stored S1/S2 do not match the tangency set X");

    H.conic.in_S = detail::make_bits(H.N, H.conic.S);
    H.conic.in_IQ = detail::make_bits(H.N, H.conic.IQ);
    H.conic.in_Is = detail::make_bits(H.N, H.conic.Is);
    H.conic.in_In = detail::make_bits(H.N, H.conic.In);
    H.conic.in_X = detail::make_bits(2 * H.N, H.conic.X);
    H.conic.in_S1 = detail::make_bits(H.N, H.conic.S1);
    H.conic.in_S2 = detail::make_bits(H.N, H.conic.S2);

    H.I = detail::residues(j, "I", 4 * H.N);
    H.J = detail::residues(j, "J", 4 * H.N);

    const nlohmann::json& s = j.at("sizes");
    if (s.at("index").get<std::uint64_t>() != H.I.size())
      throw error(errc::invalid_argument, "sizes.index disagrees with the index set");
    H.size_D = s.at("vectors").get<std::uint64_t>();
    H.size_M = s.at("points").get<std::uint64_t>();
    H.m = s.at("m").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::invalid_argument, std::string("malformed descriptor: ") + e.what());
  }
  rebuild_membership(H);
  return H;
}

inline void save_descriptor(const std::filesystem::path& path, const HemisystemDescriptor& H) {
  nlohmann::json j = descriptor_to_json(H);
  j["provenance"] = {{"tool_version", kToolVersion}, {"timestamp", detail::iso_timestamp()}};
  std::ofstream os(path);
  if (!os) throw error(errc::io_error, "cannot write " + path.string());
  os << j.dump(2) << '\n';
  if (!os) throw error(errc::io_error, "short write to " + path.string());
}

inline HemisystemDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw error(errc::io_error, "cannot read " + path.string());
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::io_error, "not a JSON descriptor: " + std::string(e.what()));
  }
  return descriptor_from_json(j);
}

// The exponent tables only line up when the descriptor was built over the
// same modulus polynomial; refuse anything else before verification.
inline void validate_descriptor_against_field(const FieldCtx& F, const HemisystemDescriptor& H) {
  if (H.p != F.P.p || H.f != F.P.f || H.q != F.P.q || H.N != F.P.N)
    throw error(errc::invalid_argument, "descriptor parameters do not match the field");
  if (H.polynomial != F.modulus)
    throw error(errc::invalid_argument, "descriptor was built over a different modulus polynomial");
}

inline nlohmann::json report_to_json(const HemisystemDescriptor& H,
                                     const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["version"] = kFormatVersion;
  j["p"] = H.p;
  j["f"] = H.f;
  j["q"] = H.q;
  j["N"] = H.N;
  j["d0"] = H.d0;
  j["passed"] = verification_passed(results);
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json timings;
  for (const CheckResult& r : results) {
    nlohmann::json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    nlohmann::json stats;
    for (auto& [k, v] : r.stats) stats[k] = v;
    c["stats"] = stats;
    nlohmann::json metrics;
    for (auto& [k, v] : r.metrics) metrics[k] = v;
    c["metrics"] = metrics;
    checks.push_back(c);
    timings[r.name] = r.seconds;
  }
  j["checks"] = checks;
  j["provenance"] = {{"tool_version", kToolVersion},
                     {"timestamp", detail::iso_timestamp()},
                     {"timings", timings}};
  return j;
}

inline void save_report(const std::filesystem::path& path, const HemisystemDescriptor& H,
                        const std::vector<CheckResult>& results) {
  std::ofstream os(path);
  if (!os) throw error(errc::io_error, "cannot write " + path.string());
  os << report_to_json(H, results).dump(2) << '\n';
  if (!os) throw error(errc::io_error, "short write to " + path.string());
}

namespace detail {

// digitwise sum of two packed base-p coefficient vectors
inline std::uint32_t packed_add(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                                std::uint32_t ndigits) {
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < ndigits; ++i) {
    out += (a % p + b % p) % p * mul;
    a /= p;
    b /= p;
    mul *= p;
  }
  return out;
}

}  // namespace detail

// Writes the Cayley graph of the vector set D on the additive group of the
// field as an edge list.  Vertex ids are the packed coefficient vectors
// (id = sum c_i p^i), so vertex 0 is the zero element.  Each edge appears
// once as "u v" with u < v.  Returns the number of edges written.  The
// vertex budget guards against accidentally asking for gigabyte files.
inline std::uint64_t write_edge_list(std::ostream& os, const FieldCtx& F,
                                     const HemisystemDescriptor& H,
                                     std::uint64_t vertex_budget = 1024) {
  if (F.P.q6 > vertex_budget)
    throw error(errc::budget_exceeded, "graph on " + std::to_string(F.P.q6) +
                                           " vertices exceeds the export budget; raise it to force");
  std::uint32_t ndigits = 6 * F.P.f;
  std::vector<std::uint32_t> D = enumerate_vector_exponents(F, H);

  os << "# cayley graph of the hemisystem vector set on the additive group of the field\n";
  os << "# p=" << F.P.p << " f=" << F.P.f << " polynomial=";
  for (std::size_t i = 0; i < H.polynomial.size(); ++i)
    os << (i ? "," : "") << H.polynomial[i];
  os << " (low to high)\n";
  os << "# vertex id = sum c_i p^i over the coordinate vector (c_0..c_" << ndigits - 1 << ")\n";
  os << "# connection residues mod " << 4 * H.N << ":";
  for (std::uint32_t r : H.I) os << ' ' << r;
  os << '\n';
  os << "# vertices=" << F.P.q6 << " edges=" << F.P.q6 * D.size() / 2 << " degree=" << D.size()
     << '\n';

  std::uint64_t edges = 0;
  for (std::uint32_t u = 0; u < F.P.q6; ++u) {
    for (std::uint32_t d : D) {
      std::uint32_t v = detail::packed_add(u, F.antilog[d], (std::uint32_t)F.P.p, ndigits);
      if (u < v) {
        os << u << ' ' << v << '\n';
        ++edges;
      }
    }
  }
  if (!os) throw error(errc::io_error, "short write while exporting the edge list");
  return edges;
}

inline std::uint64_t save_edge_list(const std::filesystem::path& path, const FieldCtx& F,
                                    const HemisystemDescriptor& H,
                                    std::uint64_t vertex_budget = 1024) {
  std::ofstream os(path);
  if (!os) throw error(errc::io_error, "cannot write " + path.string());
  return write_edge_list(os, F, H, vertex_budget);
}

}  // namespace hemi
