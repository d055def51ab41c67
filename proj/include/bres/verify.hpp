#pragma once

// The self-verification suite behind `bres verify`: printed comparisons,
// structural invariants and oracle agreement, grouped so a run can be
// restricted to some of them.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "published.hpp"

namespace bres {

inline const std::vector<std::string> kVerifyGroups = {"trace-tables", "symbols",   "cases",      "l0",
                                                       "theorem-3.1",  "vanishing", "invariants", "oracle"};

struct Check {
  std::string group;
  std::string name;
  bool pass = false;
  Severity severity = Severity::hard;
  std::string detail;
};

struct VerifyOptions {
  int m_max = 4;
  int oracle_m_max = 2;
  std::vector<std::uint64_t> seeds = {42, 7};
  std::vector<double> h_values = {1.0, 0.37};
  int sphere_samples = 4;
  std::set<std::string> only;  // empty: every group
};

struct VerifySummary {
  std::vector<Check> checks;

  int hard_failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const Check& c) { return !c.pass && c.severity == Severity::hard; }));
  }
  int soft_failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const Check& c) { return !c.pass && c.severity == Severity::soft; }));
  }
};

namespace detail {

inline void add_comparisons(VerifySummary& s, const std::string& group, const std::vector<Comparison>& cs) {
  for (const auto& c : cs)
    s.checks.push_back({group, c.eq + " " + c.what + " (m=" + std::to_string(c.m) + ", n=" + std::to_string(c.n) + ")",
                        c.match, c.severity, c.detail});
}

}  // namespace detail

inline VerifySummary run_verify(const VerifyOptions& opt) {
  VerifySummary s;
  auto wanted = [&](const std::string& g) { return opt.only.empty() || opt.only.count(g) > 0; };
  for (const auto& g : opt.only)
    if (std::find(kVerifyGroups.begin(), kVerifyGroups.end(), g) == kVerifyGroups.end())
      throw Error("unknown verify group '" + g + "'");

  if (wanted("trace-tables"))
    for (int n = 4; n <= 8; ++n) detail::add_comparisons(s, "trace-tables", trace_table_comparisons(n));

  for (int m = 1; m <= opt.m_max; ++m) {
    if (wanted("symbols")) detail::add_comparisons(s, "symbols", symbol_comparisons(m));
    if (!wanted("cases") && !wanted("l0") && !wanted("invariants")) continue;
    const PhiReport rep = compute_phi(2 * m + 2, 1, 2 * m - 1);
    if (wanted("cases")) {
      detail::add_comparisons(s, "cases", case_comparisons(rep));
      if (m <= 3) {
        const Configuration t31 = configuration_for("3.1", m);
        const PhiReport r31 = compute_phi(t31.n, t31.p1, t31.p2);
        for (const auto& c : paper_comparisons(r31))
          if (c.eq == "(3.46)") detail::add_comparisons(s, "cases", {c});
      }
    }
    if (wanted("l0")) detail::add_comparisons(s, "l0", l0_comparisons(rep));
  }

  if (wanted("theorem-3.1"))
    for (int m = 1; m <= std::min(opt.m_max, 3); ++m) {
      const Configuration cfg = configuration_for("3.1", m);
      const PhiReport rep = compute_phi(cfg.n, cfg.p1, cfg.p2);
      s.checks.push_back({"theorem-3.1", "phi has h-degree 0 (m=" + std::to_string(m) + ")", rep.phi_q.is_constant(),
                          Severity::hard, "phi_q = " + rep.phi_q.str()});
      for (const auto& c : paper_comparisons(rep))
        if (c.eq == "(3.48)") detail::add_comparisons(s, "theorem-3.1", {c});
    }

  if (wanted("vanishing"))
    for (const char* id : {"3.2", "3.3", "3.4"})
      for (int m = 1; m <= std::min(opt.m_max, 3); ++m) {
        const Configuration cfg = configuration_for(id, m);
        detail::add_comparisons(s, "vanishing", paper_comparisons(compute_phi(cfg.n, cfg.p1, cfg.p2)));
      }

  if (wanted("invariants"))
    for (const auto& id : kTheoremIds)
      for (int m = 1; m <= std::min(opt.m_max, 3); ++m) {
        const Configuration cfg = configuration_for(id, m);
        const PhiReport rep = compute_phi(cfg.n, cfg.p1, cfg.p2);
        const std::string where = " (theorem " + id + ", m=" + std::to_string(m) + ")";
        bool ibp = true, homogeneous = true;
        for (const auto& c : rep.cases) {
          ibp = ibp && c.ibp_agrees();
          if (id == "1.1" && !c.value_q.is_zero())
            homogeneous = homogeneous && c.value_q.homogeneous_of_degree(1) && c.value_q.all_real();
        }
        s.checks.push_back({"invariants", "integration by parts agrees" + where, ibp, Severity::hard, ""});
        if (id == "1.1") {
          s.checks.push_back({"invariants", "case values real, h-degree 1" + where, homogeneous, Severity::hard, ""});
          s.checks.push_back({"invariants", "case a)I vanishes" + where, rep.cases.front().value_q.is_zero(),
                              Severity::hard, ""});
        }
      }

  if (wanted("oracle"))
    for (const auto& id : kTheoremIds)
      for (int m = 1; m <= std::min(opt.m_max, opt.oracle_m_max); ++m) {
        const Configuration cfg = configuration_for(id, m);
        const PhiReport rep = compute_phi(cfg.n, cfg.p1, cfg.p2);
        for (double hv : opt.h_values)
          for (auto seed : opt.seeds) {
            QuadratureConfig q;
            q.h_value = hv;
            q.seed = seed;
            q.sphere_samples = opt.sphere_samples;
            const OracleReport o = run_oracle(rep, q);
            double worst = 0;
            for (const auto& c : o.cases) worst = std::max(worst, c.verdict.error);
            s.checks.push_back({"oracle",
                                "theorem " + id + " m=" + std::to_string(m) + " h=" + std::to_string(hv).substr(0, 4) +
                                    " seed=" + std::to_string(seed),
                                o.agreement && o.max_variance < 1e-10, Severity::hard,
                                "worst case error " + std::to_string(worst)});
          }
      }
  return s;
}

}  // namespace bres
