// Command-line front end: construct hemisystem descriptors, verify them,
// run the character-sum battery, export the Cayley graph, and print the
// parameters of a given field.
//
// Exit codes: 0 success / all checks passed, 1 a verification check
// failed, 2 invalid input or file problem, 3 work refused because it
// exceeds a size budget (raise with --force where offered).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hemi/conic.hpp"
#include "hemi/field.hpp"
#include "hemi/geometry.hpp"
#include "hemi/hemisystem.hpp"
#include "hemi/io.hpp"
#include "hemi/verify.hpp"

namespace {

struct FieldOpts {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  std::string cache_dir = ".hemi-cache";
  bool no_cache = false;
};

void add_field_options(CLI::App* sub, FieldOpts& o) {
  sub->add_option("--q", o.q, "field size q = p^f (default 3)");
  sub->add_option("--p", o.p, "field characteristic, alternative to --q");
  sub->add_option("--f", o.f, "extension degree over the prime field (with --p, default 1)");
  sub->add_option("--cache-dir", o.cache_dir, "directory for field table caches")
      ->capture_default_str();
  sub->add_flag("--no-cache", o.no_cache, "always rebuild field tables from scratch");
}

// splits q into p^f with p prime; rejects anything else
void resolve_pf(FieldOpts& o) {
  if (o.q != 0) {
    if (o.p != 0 || o.f != 0)
      throw hemi::error(hemi::errc::invalid_argument, "give either --q or --p/--f, not both");
    std::uint32_t p = 2;
    while (o.q % p != 0) {
      ++p;
      if ((std::uint64_t)p * p > o.q) {
        p = o.q;
        break;
      }
    }
    std::uint32_t f = 0, rest = o.q;
    while (rest % p == 0) {
      rest /= p;
      ++f;
    }
    if (rest != 1 || o.q < 2)
      throw hemi::error(hemi::errc::invalid_argument,
                        "q = " + std::to_string(o.q) + " is not a prime power");
    o.p = p;
    o.f = f;
  } else if (o.p != 0) {
    if (o.f == 0) o.f = 1;
  } else {
    o.p = 3;
    o.f = 1;
  }
}

hemi::FieldCtx make_field(FieldOpts o) {
  resolve_pf(o);
  std::filesystem::path dir = o.no_cache ? std::filesystem::path{} : std::filesystem::path{o.cache_dir};
  return hemi::build_field_cached(o.p, o.f, dir);
}

std::uint32_t d0_or_default(std::int64_t d0) {
  return d0 < 0 ? hemi::kNoExp : (std::uint32_t)d0;
}

int cmd_construct(const FieldOpts& fo, std::int64_t d0, bool complement,
                  const std::string& out) {
  hemi::FieldCtx F = make_field(fo);
  hemi::ConicData C = hemi::build_conic_data(F, d0_or_default(d0));
  hemi::HemisystemDescriptor H =
      complement ? hemi::build_complement_descriptor(F, C) : hemi::build_descriptor(F, C);
  if (out.empty()) {
    nlohmann::json j = hemi::descriptor_to_json(H);
    j["provenance"] = {{"tool_version", hemi::kToolVersion},
                       {"timestamp", hemi::detail::iso_timestamp()}};
    std::cout << j.dump(2) << '\n';
  } else {
    hemi::save_descriptor(out, H);
    std::cout << "wrote descriptor for q=" << H.q << " (|I|=" << H.I.size()
              << ", vectors=" << H.size_D << ", points=" << H.size_M << ") to " << out << '\n';
  }
  return 0;
}

hemi::HemisystemDescriptor obtain_descriptor(const hemi::FieldCtx& F, const std::string& desc,
                                             std::int64_t d0) {
  if (!desc.empty()) {
    hemi::HemisystemDescriptor H = hemi::load_descriptor(desc);
    hemi::validate_descriptor_against_field(F, H);
    return H;
  }
  return hemi::build_descriptor(F, hemi::build_conic_data(F, d0_or_default(d0)));
}

int cmd_verify(const FieldOpts& fo, const std::string& desc, std::int64_t d0,
               const std::vector<std::string>& checks, std::uint64_t samples, double tolerance,
               const std::string& out) {
  hemi::FieldCtx F = make_field(fo);
  hemi::HemisystemDescriptor H = obtain_descriptor(F, desc, d0);

  hemi::VerifyOptions opts;
  opts.srg_samples = samples;
  opts.tolerance = tolerance;
  std::vector<hemi::CheckResult> results = hemi::run_checks(F, H, opts, checks);

  for (const hemi::CheckResult& r : results)
    std::printf("[%s] %-6s %8.3fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  bool passed = hemi::verification_passed(results);
  std::size_t ok = 0;
  for (const hemi::CheckResult& r : results) ok += r.pass;
  std::printf("verification %s (%zu/%zu checks)\n", passed ? "PASSED" : "FAILED", ok,
              results.size());
  if (!out.empty()) hemi::save_report(out, H, results);
  return passed ? 0 : 1;
}

int cmd_charsums(const FieldOpts& fo, double tolerance, const std::string& out) {
  hemi::FieldCtx F = make_field(fo);
  hemi::CharLab lab(F);
  std::vector<hemi::IdentityCheck> rows = hemi::gauss_identity_rows(F, lab, tolerance);
  hemi::ConicData C = hemi::build_conic_data(F);
  std::vector<hemi::IdentityCheck> conic_rows =
      hemi::check_conic_char_values(F, lab, C, tolerance > 0 ? tolerance : 1e-6);
  rows.insert(rows.end(), conic_rows.begin(), conic_rows.end());

  std::size_t failed = 0;
  double maxdev = 0;
  std::printf("%-44s %12s  %s\n", "identity", "deviation", "status");
  for (const hemi::IdentityCheck& c : rows) {
    std::printf("%-44s %12.3e  %s\n", c.name.c_str(), c.deviation, c.pass ? "ok" : "FAIL");
    maxdev = std::max(maxdev, c.deviation);
    failed += !c.pass;
  }
  std::printf("%zu identities, %zu failed, max deviation %.3e\n", rows.size(), failed, maxdev);

  if (!out.empty()) {
    nlohmann::json j;
    j["version"] = hemi::kFormatVersion;
    j["q"] = F.P.q;
    j["passed"] = failed == 0;
    nlohmann::json arr = nlohmann::json::array();
    for (const hemi::IdentityCheck& c : rows)
      arr.push_back({{"name", c.name},
                     {"deviation", c.deviation},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
    j["identities"] = arr;
    j["provenance"] = {{"tool_version", hemi::kToolVersion},
                       {"timestamp", hemi::detail::iso_timestamp()}};
    std::ofstream os(out);
    if (!os) throw hemi::error(hemi::errc::io_error, "cannot write " + out);
    os << j.dump(2) << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int cmd_export_graph(const FieldOpts& fo, const std::string& desc, std::int64_t d0,
                     const std::string& out, bool force) {
  hemi::FieldCtx F = make_field(fo);
  hemi::HemisystemDescriptor H = obtain_descriptor(F, desc, d0);
  std::uint64_t budget = force ? F.P.q6 : 1024;
  if (out.empty()) {
    hemi::write_edge_list(std::cout, F, H, budget);
  } else {
    std::uint64_t edges = hemi::save_edge_list(out, F, H, budget);
    std::cout << "wrote " << edges << " edges on " << F.P.q6 << " vertices to " << out << '\n';
  }
  return 0;
}

int cmd_info(const FieldOpts& fo, std::int64_t d0) {
  hemi::FieldCtx F = make_field(fo);
  hemi::ConicData C = hemi::build_conic_data(F, d0_or_default(d0));
  hemi::HemisystemDescriptor H = hemi::build_descriptor(F, C);

  std::cout << "field        q = " << F.P.q << " = " << F.P.p << "^" << F.P.f
            << ", |F| = q^6 = " << F.P.q6 << '\n';
  std::cout << "polynomial  ";
  for (std::size_t i = 0; i < F.modulus.size(); ++i) std::cout << ' ' << F.modulus[i];
  std::cout << "  (low to high)\n";
  std::cout << "orders       multiplicative " << F.P.order << ", N = q^2+q+1 = " << F.P.N
            << ", residues mod " << 4 * F.P.N << '\n';
  std::cout << "geometry     " << hemi::projective_point_count(F) << " projective points, "
            << (F.P.q + 1) * (F.P.q3 + 1) << " on the quadric, "
            << (F.P.q * F.P.q + 1) * (F.P.q3 + 1) << " lines of " << F.P.q + 1 << " points\n";
  std::cout << "conic        d0 = " << C.d0 << ", |S1| = " << C.S1.size()
            << ", |S2| = " << C.S2.size() << '\n';
  std::cout << "hemisystem   m = " << H.m << ", |I| = " << H.I.size() << ", vectors = " << H.size_D
            << ", points = " << H.size_M << '\n';
  std::cout << "index set   ";
  for (std::uint32_t r : H.I) std::cout << ' ' << r;
  std::cout << '\n';
  std::cout << "dual set    ";
  for (std::uint32_t r : H.J) std::cout << ' ' << r;
  std::cout << '\n';
  std::cout << "stabilizer   order " << 3 * (F.P.q3 + 1) / 4 << " (translation order "
            << (F.P.q3 + 1) / 4 << ", cubed Frobenius)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify hemisystems of the elliptic quadric in PG(5,q)"};
  app.set_config("--config");
  app.require_subcommand(1);

  FieldOpts fo_construct, fo_verify, fo_charsums, fo_export, fo_info;
  std::int64_t d0_construct = -1, d0_verify = -1, d0_export = -1, d0_info = -1;
  bool complement = false, force = false;
  std::string out_construct, out_verify, out_charsums, out_export;
  std::string desc_verify, desc_export;
  std::vector<std::string> checks;
  std::uint64_t samples = 10000;
  double tol_verify = 0, tol_charsums = 0;

  CLI::App* construct = app.add_subcommand("construct", "build a hemisystem descriptor");
  add_field_options(construct, fo_construct);
  construct->add_option("--d0", d0_construct, "conic base exponent (default: smallest)");
  construct->add_flag("--complement", complement, "build the complementary hemisystem");
  construct->add_option("--out,-o", out_construct, "write the descriptor here (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks on a hemisystem");
  add_field_options(verify, fo_verify);
  verify->add_option("--desc", desc_verify, "descriptor file to verify (default: construct one)");
  verify->add_option("--d0", d0_verify, "conic base exponent when constructing");
  verify->add_option("--checks", checks,
                     "subset of checks: conic lines perp chars srg group gauss (default all)")
      ->delimiter(',');
  verify->add_option("--sample", samples, "difference samples for the graph check on large fields")
      ->capture_default_str();
  verify->add_option("--tolerance", tol_verify, "override the character-sum tolerance");
  verify->add_option("--out,-o", out_verify, "also write a JSON report here");

  CLI::App* charsums = app.add_subcommand("charsums", "print the character-sum identity table");
  add_field_options(charsums, fo_charsums);
  charsums->add_option("--tolerance", tol_charsums, "override the default tolerance");
  charsums->add_option("--out,-o", out_charsums, "also write the table as JSON here");

  CLI::App* export_graph =
      app.add_subcommand("export-graph", "write the Cayley graph of the vector set as an edge list");
  add_field_options(export_graph, fo_export);
  export_graph->add_option("--desc", desc_export, "descriptor file (default: construct one)");
  export_graph->add_option("--d0", d0_export, "conic base exponent when constructing");
  export_graph->add_option("--out,-o", out_export, "write the edge list here (default stdout)");
  export_graph->add_flag("--force", force, "export even when the field is large");

  CLI::App* info = app.add_subcommand("info", "print field and hemisystem parameters");
  add_field_options(info, fo_info);
  info->add_option("--d0", d0_info, "conic base exponent (default: smallest)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(construct))
      return cmd_construct(fo_construct, d0_construct, complement, out_construct);
    if (app.got_subcommand(verify))
      return cmd_verify(fo_verify, desc_verify, d0_verify, checks, samples, tol_verify,
                        out_verify);
    if (app.got_subcommand(charsums)) return cmd_charsums(fo_charsums, tol_charsums, out_charsums);
    if (app.got_subcommand(export_graph))
      return cmd_export_graph(fo_export, desc_export, d0_export, out_export, force);
    if (app.got_subcommand(info)) return cmd_info(fo_info, d0_info);
  } catch (const hemi::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case hemi::errc::verification_failure:
        return 1;
      case hemi::errc::budget_exceeded:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
