#pragma once

// Analysis report: runs the requested membership tests on one sequence and
// assembles a JSON document. Keys are sorted (nlohmann's default object is a
// std::map) and doubles print in shortest round-trip form, so identical inputs
// give byte-identical output.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geomseq/config.hpp"
#include "geomseq/convergence.hpp"
#include "geomseq/duals.hpp"
#include "geomseq/orlicz.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/truncation.hpp"

namespace geomseq {

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& known_spaces() {
  static const std::vector<std::string> names = {"C1",       "absC1",   "Vlam",    "absVlam",  "linf",
                                                 "orliczL",  "orlicz0", "orliczInf", "stat",   "statLam",
                                                 "VlamP",    "VlamInf", "uVlamInf", "alphaDual"};
  return names;
}

struct AnalyzeOptions {
  unsigned m = 1;
  std::string lambda = "n";
  std::vector<std::string> spaces;  // empty: all
  std::vector<double> eps_logs = {0.1, 0.5, 1.0};
  double tol = 1e-2;
  double tail_fraction = 0.2;
  std::string orlicz = R"({"family":"power","q":1})";
  std::string p = "const:1";
};

namespace detail {

/// Curve sampled at n = 1, 2, 4, ... and at the last point.
inline nlohmann::json checkpoint_curve(std::span<const double> v) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t n = 1; n <= v.size(); n *= 2) pts.push_back({n, v[n - 1]});
  if (!v.empty() && (v.size() & (v.size() - 1)) != 0) pts.push_back({v.size(), v.back()});
  return pts;
}

inline nlohmann::json tail_json(const TailTest& t) {
  return {{"last_increment", t.last_increment}, {"tail_mass", t.tail_mass}, {"checkpoints", t.checkpoints}};
}

inline void validate_options(const AnalyzeOptions& o) {
  if (!(o.tol > 0.0)) throw ParameterError("tol must be positive");
  if (!(o.tail_fraction > 0.0 && o.tail_fraction <= 1.0)) throw ParameterError("tail fraction must lie in (0, 1]");
  if (o.eps_logs.empty()) throw ParameterError("empty epsilon grid");
  for (double e : o.eps_logs)
    if (!(e > 0.0)) throw ParameterError("epsilon logs must be positive");
  for (const std::string& s : o.spaces)
    if (std::find(known_spaces().begin(), known_spaces().end(), s) == known_spaces().end())
      throw ParameterError("unknown space \"" + s + "\"");
}

}  // namespace detail

inline nlohmann::json run_analysis(const GeoSeq& x, const AnalyzeOptions& o) {
  using nlohmann::json;
  detail::validate_options(o);
  if (x.size() <= o.m) throw ParameterError("sequence is too short for difference order " + std::to_string(o.m));

  const LambdaSeq lam = make_lambda(o.lambda, x.size());
  const OrliczFn M = orlicz_from_string(o.orlicz);
  const PSeq p = make_pseq(o.p);
  const std::vector<std::string> spaces = o.spaces.empty() ? known_spaces() : o.spaces;
  const std::set<std::string> want(spaces.begin(), spaces.end());
  const std::size_t dlen = x.size() - o.m;

  json rep;
  rep["schema_version"] = kSchemaVersion;
  rep["truncation_conditional"] = true;
  rep["input"] = {{"source", x.source()}, {"length", x.size()}};
  rep["parameters"] = {{"m", o.m},
                       {"lambda", lam.name()},
                       {"eps_logs", o.eps_logs},
                       {"tol", o.tol},
                       {"tail_fraction", o.tail_fraction},
                       {"N", x.size()},
                       {"orlicz", orlicz_to_json(M)},
                       {"p", p.describe()},
                       {"spaces", spaces}};

  json results = json::object();
  const std::pair<const char*, Space> basic[] = {{"C1", Space::cesaro},
                                                 {"absC1", Space::abs_cesaro},
                                                 {"Vlam", Space::vallee_poussin},
                                                 {"absVlam", Space::abs_vallee_poussin},
                                                 {"linf", Space::bounded}};
  for (const auto& [name, space] : basic) {
    if (!want.count(name)) continue;
    const MembershipResult r = space_membership(x, o.m, lam, space, o.tol, o.tail_fraction);
    results[name] = {{"verdict", to_string(r.verdict)},
                     {"L_log", r.limit.L.log()},
                     {"residual", r.limit.residual},
                     {"sup", r.sup},
                     {"points", r.points}};
  }

  for (OrliczVariant v : {OrliczVariant::with_limit, OrliczVariant::null, OrliczVariant::bounded}) {
    const std::string name = to_string(v);
    if (!want.count(name)) continue;
    const OrliczMembership r = space_membership_orlicz(x, o.m, lam, M, p, v, o.tol, o.tail_fraction);
    json j = {{"verdict", to_string(r.verdict)},
              {"statistic", r.statistic},
              {"grid_exhausted", r.grid_exhausted},
              {"witness_rho_log", r.witness_rho_log ? json(*r.witness_rho_log) : json(nullptr)}};
    if (r.L) j["L_log"] = r.L->log();
    results[name] = j;
  }

  for (const char* name : {"stat", "statLam"}) {
    if (!want.count(name)) continue;
    const bool natural = std::string(name) == "stat";
    const LambdaSeq windows = natural ? LambdaSeq::cesaro(dlen) : lam;
    const StatResult s = stat_convergence(x, o.m, windows, o.eps_logs, o.tol, o.tail_fraction);
    json curves = json::object();
    for (double e : o.eps_logs) {
      const DensityCurve c = stat_density_curve(x, o.m, s.L, GeoNum::from_log(e), windows);
      std::vector<double> dens;
      dens.reserve(c.points.size());
      for (const auto& pt : c.points) dens.push_back(pt.second);
      std::ostringstream key;
      key.precision(17);
      key << e;
      curves[key.str()] = detail::checkpoint_curve(dens);
    }
    results[name] = {{"verdict", to_string(s.verdict)},
                     {"L_log", s.L.log()},
                     {"tail_max_density", s.tail_max_density},
                     {"density_curves", curves}};
  }

  if (want.count("VlamP")) {
    const VlamResult r = vlambda_membership(x, o.m, lam, VlamVariant::p_summable, p, o.tol);
    results["VlamP"] = {{"verdict", to_string(r.verdict)}, {"sup", r.sup}, {"tail", detail::tail_json(r.tail)}};
  }
  if (want.count("VlamInf")) {
    const VlamResult r = vlambda_membership(x, o.m, lam, VlamVariant::sup_bounded, p, o.tol);
    results["VlamInf"] = {{"verdict", to_string(r.verdict)}, {"sup", r.sup}};
  }
  if (want.count("uVlamInf")) {
    const VlamResult r = u_vlambda_inf(x, o.m, lam, o.tol);
    json j = {{"verdict", to_string(r.verdict)}, {"sup", r.sup}};
    try {
      const LemmaReport l = lemma_growth_check(x, o.m, lam, o.tol);
      j["lemma"] = {{"sup_lower_order", l.sup_lower_order},
                    {"sup_scaled", l.sup_scaled},
                    {"lower_order_trend", l.lower_order_trend},
                    {"scaled_trend", l.scaled_trend},
                    {"telescoping_residual", l.telescoping_residual},
                    {"passed", l.passed()}};
    } catch (const PreconditionError& e) {
      j["lemma"] = {{"refused", e.what()}};
    }
    results["uVlamInf"] = j;
  }
  if (want.count("alphaDual")) {
    const AlphaDualResult r = alpha_dual_membership(x, lam, o.m, o.tol);
    results["alphaDual"] = {
        {"verdict", to_string(r.verdict)}, {"weighted_sum", r.weighted_sum}, {"tail", detail::tail_json(r.tail)}};
  }
  rep["results"] = results;

  const GeoNum ns = delta_norm(x, o.m, lam, MeanKind::signed_mean);
  const GeoNum na = delta_norm(x, o.m, lam, MeanKind::absolute);
  rep["norms"] = {{"signed_log", ns.log()}, {"absolute_log", na.log()}};

  const ParanormResult g = paranorm_g(x, o.m, lam, M, p);
  rep["paranorm"] = {{"g_log", g.g ? json(g.g->log()) : json(nullptr)},
                     {"inf_rho_log", g.inf_rho_log},
                     {"exponent_ambiguous", g.exponent_ambiguous}};

  std::vector<double> tgrid;
  for (int j = -10; j <= 10; ++j) tgrid.push_back(std::ldexp(1.0, j));
  const Delta2Report d2 = delta2_probe(M, tgrid);
  rep["delta2"] = {{"sup_ratio", std::isfinite(d2.sup_ratio) ? json(d2.sup_ratio) : json(nullptr)},
                   {"satisfied", d2.satisfied}};
  return rep;
}

/// Deterministic text form: sorted keys, two-space indent, trailing newline.
inline std::string render(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace geomseq
