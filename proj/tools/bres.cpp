// bres: compute, verify and cross-check the boundary terms of the covered
// theorem configurations.
//
// Exit codes: 0 success, 1 failed checks (or soft mismatches under --strict),
// 2 unsupported configuration, 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bres/report.hpp"
#include "bres/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;

struct Target {
  std::string theorem;
  int m = 0;
  int n = 0, p1 = -1, p2 = -1;
};

struct QuadFlags {
  std::uint64_t seed = 42;
  int samples = 4;
  double h_value = 1.0;
  double rel_tol = 1e-6;
  double abs_tol = 1e-8;
};

void add_target_flags(CLI::App* cmd, Target& t) {
  auto* th = cmd->add_option("--theorem", t.theorem, "theorem id: 1.1, 3.1, 3.2, 3.3 or 3.4");
  cmd->add_option("--m", t.m, "half-dimension m (with --theorem)");
  auto* n = cmd->add_option("--n", t.n, "dimension n");
  cmd->add_option("--p1", t.p1, "power of the left inverse Dirac operator");
  cmd->add_option("--p2", t.p2, "power of the right inverse Dirac operator");
  th->excludes(n);
}

void add_quad_flags(CLI::App* cmd, QuadFlags& q) {
  cmd->add_option("--seed", q.seed, "sphere sampling seed")->capture_default_str();
  cmd->add_option("--samples", q.samples, "sphere samples per case")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--h-value", q.h_value, "value substituted for h")->capture_default_str();
  cmd->add_option("--rel-tol", q.rel_tol, "oracle relative tolerance")->capture_default_str();
  cmd->add_option("--abs-tol", q.abs_tol, "oracle absolute tolerance for zero values")->capture_default_str();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bres::Configuration resolve(const Target& t) {
  if (!t.theorem.empty()) {
    if (t.m < 1) throw UsageError("--theorem needs --m >= 1");
    return bres::configuration_for(t.theorem, t.m);
  }
  if (t.n <= 0 || t.p1 < 0 || t.p2 < 0) throw UsageError("give --theorem and --m, or all of --n, --p1, --p2");
  return {t.n, t.p1, t.p2};
}

bres::OracleReport oracle_for(const bres::PhiReport& rep, const QuadFlags& qf) {
  bres::QuadratureConfig q;
  q.seed = qf.seed;
  q.sphere_samples = qf.samples;
  q.h_value = qf.h_value;
  bres::OracleReport o = bres::run_oracle(rep, q);
  // re-judge with the requested tolerances
  o.agreement = true;
  for (std::size_t t = 0; t < o.cases.size(); ++t) {
    auto& c = o.cases[t];
    c.verdict = bres::compare(rep.cases[t].value_q, rep.config.n, c.numeric.value, q.h_value, qf.rel_tol, qf.abs_tol);
    o.agreement = o.agreement && c.verdict.pass;
  }
  o.phi_verdict = bres::compare(rep.phi_q, rep.config.n, o.phi_numeric, q.h_value, qf.rel_tol, qf.abs_tol);
  o.agreement = o.agreement && o.phi_verdict.pass && o.max_variance < 1e-10;
  return o;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact boundary terms of noncommutative residues for inverse Dirac powers"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the flags; flags given on the command line win");

  Target target;
  QuadFlags quad;
  std::string format = "json";
  std::string out_path;
  bool no_oracle = false;

  auto* compute = app.add_subcommand("compute", "exact boundary term with per-case breakdown");
  add_target_flags(compute, target);
  add_quad_flags(compute, quad);
  compute->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  compute->add_option("--out", out_path, "write the report here instead of stdout");
  compute->add_flag("--no-oracle", no_oracle, "skip the numeric cross-check");

  bres::VerifyOptions vopt;
  bool strict = false;
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "printed comparisons, invariants and oracle agreement");
  verify->add_option("--m-max", vopt.m_max, "largest m to verify")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--oracle-m-max", vopt.oracle_m_max, "largest m for the oracle runs")->capture_default_str();
  verify->add_flag("--strict", strict, "fail on soft mismatches too");
  verify->add_option("--only", only, "restrict to groups")->check(CLI::IsMember(bres::kVerifyGroups))->delimiter(',');

  Target otarget;
  QuadFlags oquad;
  std::string oout;
  auto* oracle = app.add_subcommand("oracle", "numeric cross-check only, as a JSON document");
  add_target_flags(oracle, otarget);
  add_quad_flags(oracle, oquad);
  oracle->add_option("--out", oout, "write the document here instead of stdout");

  int cat_m = 1, cat_n = 0;
  std::string entry, cat_format = "text";
  auto* catalog = app.add_subcommand("catalog", "dump the symbol catalog with equation anchors");
  catalog->add_option("--m", cat_m, "half-dimension m")->capture_default_str()->check(CLI::PositiveNumber);
  catalog->add_option("--n", cat_n, "dimension (default 2m+2)");
  catalog->add_option("--entry", entry, "print a single entry by label, e.g. sigma_-4_D-3");
  catalog->add_option("--format", cat_format, "text or json")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (*compute) {
      const bres::Configuration cfg = resolve(target);
      const bres::PhiReport rep = bres::compute_phi(cfg.n, cfg.p1, cfg.p2);
      const auto comparisons = bres::paper_comparisons(rep);
      std::optional<bres::OracleReport> o;
      if (!no_oracle) o = oracle_for(rep, quad);
      if (format == "json")
        emit(bres::report_json(rep, comparisons, o).dump(2) + "\n", out_path);
      else
        emit(bres::report_text(rep, comparisons, o), out_path);
      return kExitOk;
    }
    if (*verify) {
      vopt.only.insert(only.begin(), only.end());
      const bres::VerifySummary s = bres::run_verify(vopt);
      std::string group;
      for (const auto& c : s.checks) {
        if (c.group != group) std::cout << "\n[" << (group = c.group) << "]\n";
        const char* tag = c.pass ? "pass" : c.severity == bres::Severity::hard ? "FAIL" : "warn";
        std::cout << "  " << tag << "  " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
      }
      std::cout << "\n" << s.checks.size() << " checks, " << s.hard_failures() << " hard failures, "
                << s.soft_failures() << " warnings (soft mismatches)\n";
      if (s.hard_failures() > 0) return kExitFailed;
      if (strict && s.soft_failures() > 0) return kExitFailed;
      return kExitOk;
    }
    if (*oracle) {
      const bres::Configuration cfg = resolve(otarget);
      const bres::PhiReport rep = bres::compute_phi(cfg.n, cfg.p1, cfg.p2);
      const bres::OracleReport o = oracle_for(rep, oquad);
      bres::Json doc = {{"config", {{"n", cfg.n}, {"p1", cfg.p1}, {"p2", cfg.p2}}},
                        {"theorem", {{"id", rep.theorem.id}, {"m", rep.theorem.m}}},
                        {"oracle", bres::oracle_json(o)}};
      emit(doc.dump(2) + "\n", oout);
      return o.agreement ? kExitOk : kExitFailed;
    }
    if (*catalog) {
      if (cat_m > 4) std::cerr << "warning: m = " << cat_m << " gives large catalog entries\n";
      const int n = cat_n > 0 ? cat_n : 2 * cat_m + 2;
      auto entries = bres::catalog(cat_m, n);
      if (!entry.empty()) {
        std::erase_if(entries, [&](const bres::SymbolJet& s) { return s.label != entry; });
        if (entries.empty()) throw UsageError("no catalog entry '" + entry + "' at m = " + std::to_string(cat_m));
      }
      if (cat_format == "json") {
        bres::Json arr = bres::Json::array();
        for (const auto& s : entries) arr.push_back(bres::jet_json(s));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << bres::catalog_text(entries);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const bres::UnsupportedConfiguration& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}
