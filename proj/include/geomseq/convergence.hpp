#pragma once

// Cesàro and de la Vallée-Poussin means of Δ_G^m x, membership in the four
// summability spaces and l_∞^G(Δ_G^m), the Δ-norms, and (λ-)statistical
// convergence.
//
// Throughout, d_i = log Δ_G^m x_i. A geometric mean
//   (e ⊘ e^{λ_n}) ⊙ _G∑_{i∈I_n} s_i
// has log (1/λ_n) Σ_{i∈I_n} log s_i, and a set cardinality |S| inside a
// geometric expression is read as e^{|S|}, so densities are classical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "geomseq/diff.hpp"
#include "geomseq/errors.hpp"
#include "geomseq/geonum.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/truncation.hpp"

namespace geomseq {

enum class MeanKind { signed_mean, absolute };
enum class WindowKind { cesaro, vallee_poussin };

inline std::string to_string(MeanKind k) { return k == MeanKind::signed_mean ? "signed" : "absolute"; }
inline std::string to_string(WindowKind w) { return w == WindowKind::cesaro ? "cesaro" : "vallee-poussin"; }

struct MeanSeries {
  std::vector<GeoNum> values;  // t_1, t_2, ...
  MeanKind kind;
  WindowKind window;

  std::vector<double> logs() const {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), [](GeoNum g) { return g.log(); });
    return out;
  }
};

struct LimitEstimate {
  GeoNum L;
  Verdict converged = Verdict::inconclusive;
  double residual = 0.0;
};

inline MeanSeries mean_series(const GeoSeq& x, unsigned m, const LambdaSeq& lam, GeoNum center, MeanKind kind) {
  std::vector<double> s = diff_logs(x.logs(), m);
  for (double& v : s) {
    v -= center.log();
    if (kind == MeanKind::absolute) v = std::fabs(v);
  }
  const std::vector<double> t = windowed_means(s, lam);
  MeanSeries out{{}, kind, lam.is_cesaro() ? WindowKind::cesaro : WindowKind::vallee_poussin};
  out.values.reserve(t.size());
  for (double v : t) out.values.push_back(GeoNum::from_log(v));
  return out;
}

/// L is the median of the trailing `tail_fraction` of the series; converged
/// iff every tail point lies within `tol` of it.
inline LimitEstimate estimate_limit(std::span<const double> series_logs, double tol, double tail_fraction) {
  if (series_logs.empty()) throw ParameterError("cannot estimate the limit of an empty series");
  const std::size_t c = tail_count(series_logs.size(), tail_fraction);
  const auto tail = series_logs.last(c);
  const double L = median(std::vector<double>(tail.begin(), tail.end()));
  double residual = 0.0;
  for (double v : tail) residual = std::max(residual, std::fabs(v - L));
  LimitEstimate e{GeoNum::from_log(L), Verdict::no, residual};
  if (c < kMinTailPoints)
    e.converged = Verdict::inconclusive;
  else if (residual <= tol)
    e.converged = Verdict::yes;
  return e;
}

inline LimitEstimate estimate_limit(const MeanSeries& series, double tol, double tail_fraction) {
  const std::vector<double> l = series.logs();
  return estimate_limit(l, tol, tail_fraction);
}

enum class Space { cesaro, abs_cesaro, vallee_poussin, abs_vallee_poussin, bounded };

/// CLI / report names: C1, absC1, Vlam, absVlam, linf.
inline std::string to_string(Space s) {
  switch (s) {
    case Space::cesaro: return "C1";
    case Space::abs_cesaro: return "absC1";
    case Space::vallee_poussin: return "Vlam";
    case Space::abs_vallee_poussin: return "absVlam";
    case Space::bounded: return "linf";
  }
  return "?";
}

struct MembershipResult {
  Space space;
  Verdict verdict = Verdict::inconclusive;
  LimitEstimate limit;
  double sup = 0.0;  // sup_k |d_k| for linf, sup_n |t_n| otherwise
  std::size_t points = 0;
};

namespace detail {

inline Verdict tail_vanishes(std::span<const double> series, double tol, double tail_fraction, double* residual) {
  const std::size_t c = tail_count(series.size(), tail_fraction);
  *residual = max_abs(series.last(c));
  if (c < kMinTailPoints) return Verdict::inconclusive;
  return *residual <= tol ? Verdict::yes : Verdict::no;
}

/// argmin_L max_n |t_n - L r_n| over the given points (convex, piecewise linear).
inline double minimax_center(std::span<const double> t, std::span<const double> r) {
  bool uniform = true;
  for (double v : r) uniform = uniform && v == r.front();
  if (uniform) {
    const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
    return (*lo + (*hi - *lo) / 2.0) / r.front();
  }
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < t.size(); ++i) {
    lo = std::min(lo, t[i] / r[i]);
    hi = std::max(hi, t[i] / r[i]);
  }
  auto f = [&](double L) {
    double m = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, std::fabs(t[i] - L * r[i]));
    return m;
  };
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
    if (f(a) <= f(b))
      hi = b;
    else
      lo = a;
  }
  return lo + (hi - lo) / 2.0;
}

/// |I_n| / λ_n; 1 whenever λ_n is an integer.
inline std::vector<double> window_fill(const LambdaSeq& lam, std::size_t len) {
  std::vector<double> r(len);
  for (std::size_t n = 1; n <= len; ++n) r[n - 1] = static_cast<double>(window(lam, n).size()) / lam.at(n);
  return r;
}

}  // namespace detail

/// Two-stage test. Signed spaces take L as the minimax centre of the tail of
/// the signed means; bracketed spaces take L as the tail median of d (the
/// minimiser of the tail's absolute residual). The centred mean series must
/// then stay within `tol` of 0 over its tail. `bounded` tests sup_k |d_k|.
inline MembershipResult space_membership(const GeoSeq& x, unsigned m, const LambdaSeq& lam, Space space, double tol,
                                         double tail_fraction = 0.2) {
  const std::vector<double> d = diff_logs(x.logs(), m);
  MembershipResult r;
  r.space = space;
  r.points = d.size();

  if (space == Space::bounded) {
    std::vector<double> a(d.size());
    std::transform(d.begin(), d.end(), a.begin(), [](double v) { return std::fabs(v); });
    r.sup = max_abs(a);
    r.verdict = bounded_on_truncation(a, tol);
    r.limit = {GeoNum::zero(), r.verdict, r.sup};
    return r;
  }

  const bool cesaro = space == Space::cesaro || space == Space::abs_cesaro;
  const LambdaSeq windows = cesaro ? LambdaSeq::cesaro(d.size()) : lam;
  const std::size_t c = tail_count(d.size(), tail_fraction);
  std::vector<double> centred;
  double L = 0.0;

  if (space == Space::cesaro || space == Space::vallee_poussin) {
    const std::vector<double> t0 = windowed_means(d, windows);
    const std::vector<double> fill = detail::window_fill(windows, d.size());
    L = detail::minimax_center(std::span(t0).last(c), std::span(fill).last(c));
    centred.resize(t0.size());
    for (std::size_t i = 0; i < t0.size(); ++i) centred[i] = t0[i] - L * fill[i];
  } else {
    L = tail_median(d, tail_fraction);
    std::vector<double> s(d.size());
    std::transform(d.begin(), d.end(), s.begin(), [L](double v) { return std::fabs(v - L); });
    centred = windowed_means(s, windows);
  }

  double residual = 0.0;
  r.verdict = detail::tail_vanishes(centred, tol, tail_fraction, &residual);
  r.limit = {GeoNum::from_log(L), r.verdict, residual};
  r.sup = max_abs(centred);
  return r;
}

/// ‖x‖ = _G∑_{i≤m} |x_i|^G ⊕ sup_n |mean_n|^G, with signed means |(1/λ_n)Σ d|
/// or absolute means (1/λ_n)Σ|d|.
inline GeoNum delta_norm(const GeoSeq& x, unsigned m, const LambdaSeq& lam, MeanKind kind) {
  CompensatedSum head;
  for (std::size_t i = 0; i < std::min<std::size_t>(m, x.size()); ++i) head.add(std::fabs(x.logs()[i]));
  std::vector<double> d = diff_logs(x.logs(), m);
  if (kind == MeanKind::absolute)
    for (double& v : d) v = std::fabs(v);
  const double sup = max_abs(windowed_means(d, lam));
  return GeoNum::from_log(head.value() + sup);
}

struct DensityCurve {
  GeoNum epsilon;
  WindowKind window;
  std::vector<std::pair<std::size_t, double>> points;  // (n, density)
};

namespace detail {

inline std::vector<double> densities(std::span<const double> d, double center, double eps_log, const LambdaSeq& lam) {
  if (lam.size() < d.size()) throw ParameterError("lambda sequence is shorter than the difference sequence");
  std::vector<std::size_t> prefix(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + (std::fabs(d[i] - center) >= eps_log ? 1 : 0);
  std::vector<double> out(d.size());
  for (std::size_t n = 1; n <= d.size(); ++n) {
    const Window w = window(lam, n);
    out[n - 1] = static_cast<double>(prefix[w.last] - prefix[w.first - 1]) / lam.at(n);
  }
  return out;
}

}  // namespace detail

/// density(n) = |{k ∈ I_n : |d_k - log L| >= log ε}| / λ_n. Pass
/// LambdaSeq::cesaro for the natural (Cesàro) density.
inline DensityCurve stat_density_curve(const GeoSeq& x, unsigned m, GeoNum L, GeoNum eps, const LambdaSeq& lam) {
  if (!(eps.log() > 0.0)) throw ParameterError("epsilon must exceed 1 (log epsilon > 0)");
  const std::vector<double> d = diff_logs(x.logs(), m);
  const std::vector<double> dens = detail::densities(d, L.log(), eps.log(), lam);
  DensityCurve c{eps, lam.is_cesaro() ? WindowKind::cesaro : WindowKind::vallee_poussin, {}};
  c.points.reserve(dens.size());
  for (std::size_t n = 1; n <= dens.size(); ++n) c.points.emplace_back(n, dens[n - 1]);
  return c;
}

struct StatResult {
  Verdict verdict = Verdict::inconclusive;
  GeoNum L;
  std::vector<double> eps_logs;
  std::vector<double> tail_max_density;  // per epsilon
};

/// L: median of the tail of d, re-taken over the points within the smallest
/// ε of that first median. Yes iff for every ε the density tail stays <= tol.
inline StatResult stat_convergence(const GeoSeq& x, unsigned m, const LambdaSeq& lam, std::span<const double> eps_logs,
                                   double tol, double tail_fraction = 0.2) {
  if (eps_logs.empty()) throw ParameterError("empty epsilon grid");
  for (double e : eps_logs)
    if (!(e > 0.0)) throw ParameterError("epsilon must exceed 1 (log epsilon > 0)");
  const std::vector<double> d = diff_logs(x.logs(), m);
  const std::size_t c = tail_count(d.size(), tail_fraction);
  const auto tail = std::span(d).last(c);

  const double first = median(std::vector<double>(tail.begin(), tail.end()));
  const double eps_min = *std::min_element(eps_logs.begin(), eps_logs.end());
  std::vector<double> majority;
  for (double v : tail)
    if (std::fabs(v - first) < eps_min) majority.push_back(v);
  const double L = majority.empty() ? first : median(std::move(majority));

  StatResult r{Verdict::yes, GeoNum::from_log(L), {eps_logs.begin(), eps_logs.end()}, {}};
  for (double e : eps_logs) {
    const std::vector<double> dens = detail::densities(d, L, e, lam);
    const double worst = max_abs(std::span(dens).last(c));
    r.tail_max_density.push_back(worst);
    if (worst > tol) r.verdict = Verdict::no;
  }
  if (c < kMinTailPoints) r.verdict = Verdict::inconclusive;
  return r;
}

struct SubsetEntry {
  std::string source;
  Verdict s_verdict;
  Verdict s_lambda_verdict;
  bool counterexample;
};

struct SubsetReport {
  double observed_min_ratio = 0.0;
  std::vector<SubsetEntry> entries;
  std::size_t counterexamples = 0;
};

/// S(Δ_G^m) ⊂ S_λ(Δ_G^m) under liminf λ_n / n > 0. The hypothesis is read on
/// the truncation as min over the tail of λ_n / n >= `min_ratio`; otherwise
/// the check is refused.
inline SubsetReport check_s_subset_slambda(std::span<const GeoSeq> family, unsigned m, const LambdaSeq& lam,
                                           std::span<const double> eps_logs, double tol, double tail_fraction = 0.2,
                                           double min_ratio = 0.25) {
  if (!(min_ratio > 0.0)) throw ParameterError("declared lower bound for lambda_n / n must be positive");
  const std::size_t len = lam.size();
  const std::size_t c = tail_count(len, tail_fraction);
  SubsetReport rep;
  rep.observed_min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t n = len - c + 1; n <= len; ++n)
    rep.observed_min_ratio = std::min(rep.observed_min_ratio, lam.at(n) / static_cast<double>(n));
  if (rep.observed_min_ratio < min_ratio)
    throw PreconditionError("lambda_n / n falls to " + std::to_string(rep.observed_min_ratio) +
                            " on the tail, below the declared bound " + std::to_string(min_ratio));

  for (const GeoSeq& x : family) {
    const std::size_t dlen = x.size() - m;
    const StatResult s = stat_convergence(x, m, LambdaSeq::cesaro(dlen), eps_logs, tol, tail_fraction);
    const StatResult sl = stat_convergence(x, m, lam, eps_logs, tol, tail_fraction);
    const bool bad = s.verdict == Verdict::yes && sl.verdict != Verdict::yes;
    rep.entries.push_back({x.source(), s.verdict, sl.verdict, bad});
    if (bad) ++rep.counterexamples;
  }
  return rep;
}

}  // namespace geomseq
