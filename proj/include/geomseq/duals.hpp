#pragma once

// V^λ_p(Δ_G^m), V^λ_∞(Δ_G^m), the u-padding operator and α-dual tests.
//
// Every "< ∞" here is the dyadic tail test from truncation.hpp, so verdicts
// are conditional on the truncation length.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geomseq/diff.hpp"
#include "geomseq/errors.hpp"
#include "geomseq/geonum.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/truncation.hpp"

namespace geomseq {

/// e^{(λ_k)^m}: the weight of the α-dual series.
struct DualWeight {
  std::size_t k;
  GeoNum w;
};

inline std::vector<DualWeight> dual_weights(const LambdaSeq& lam, unsigned m, std::size_t n) {
  if (lam.size() < n) throw ParameterError("lambda sequence is shorter than the requested weights");
  std::vector<DualWeight> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back({k, GeoNum::from_log(std::pow(lam.at(k), m))});
  return out;
}

/// u(x) = (1, ..., 1, x_{m+1}, ...): the first m terms become 0_G.
inline GeoSeq u_transform(const GeoSeq& x, unsigned m) {
  if (x.size() <= m) throw ParameterError("sequence must be longer than m for the u-operator");
  if (m == 0) return x;
  std::vector<double> logs(x.logs().begin(), x.logs().end());
  std::fill(logs.begin(), logs.begin() + m, 0.0);
  return GeoSeq(std::move(logs), "u" + std::to_string(m) + "(" + x.source() + ")");
}

/// x_k = 1 for k <= m and e^{(λ_k)^m} beyond.
inline GeoSeq dual_canonical(const LambdaSeq& lam, unsigned m, std::size_t n) {
  if (n <= m) throw ParameterError("canonical dual sequence needs more than m terms");
  std::vector<double> logs(n, 0.0);
  for (const DualWeight& w : dual_weights(lam, m, n))
    if (w.k > m) logs[w.k - 1] = w.w.log();
  return GeoSeq(std::move(logs), "dual-canonical(m=" + std::to_string(m) + ",lambda=" + lam.name() + ")");
}

enum class VlamVariant { p_summable, sup_bounded };

struct VlamResult {
  VlamVariant variant;
  Verdict verdict = Verdict::inconclusive;
  double sup = 0.0;           // sup_n |(1/λ_n) Σ_{I_n} d_k|
  TailTest tail;              // p-variant only
};

/// p-variant: Σ_n |(1/λ_n) Σ_{I_n} d_k|^{p_n} passes the dyadic tail test.
/// sup-variant: the means are bounded on the truncation.
inline VlamResult vlambda_membership(const GeoSeq& x, unsigned m, const LambdaSeq& lam, VlamVariant variant,
                                     const PSeq& p, double tol) {
  const std::vector<double> d = diff_logs(x.logs(), m);
  const std::vector<double> t = windowed_means(d, lam);
  VlamResult r;
  r.variant = variant;
  r.sup = max_abs(t);
  if (variant == VlamVariant::sup_bounded) {
    std::vector<double> a(t.size());
    std::transform(t.begin(), t.end(), a.begin(), [](double v) { return std::fabs(v); });
    r.verdict = bounded_on_truncation(a, tol);
    return r;
  }
  std::vector<double> terms(t.size());
  for (std::size_t n = 1; n <= t.size(); ++n) terms[n - 1] = std::pow(std::fabs(t[n - 1]), p.at(n));
  r.tail = dyadic_tail_test(terms, 0, tol);
  r.verdict = r.tail.verdict;
  return r;
}

/// Membership of u(x) in V^λ_∞(Δ_G^m).
inline VlamResult u_vlambda_inf(const GeoSeq& x, unsigned m, const LambdaSeq& lam, double tol) {
  return vlambda_membership(u_transform(x, m), m, lam, VlamVariant::sup_bounded, PSeq::constant(1.0), tol);
}

struct LemmaReport {
  double sup_lower_order = 0.0;  // sup_k |Δ^{m-1} log x|_k / λ_k
  double sup_scaled = 0.0;       // sup_k |log x_k| / (λ_k)^m
  bool lower_order_trend = false;
  bool scaled_trend = false;
  double telescoping_residual = 0.0;  // Cesàro windows
  bool passed() const noexcept { return !lower_order_trend && !scaled_trend; }
};

/// Max over n of |Σ_{k<=n} Δ^m l_k + Δ^{m-1} l_{n+1}| for padded logs.
inline double telescoping_residual(const GeoSeq& x, unsigned m) {
  if (m == 0) throw ParameterError("telescoping identity needs m >= 1");
  const GeoSeq ux = u_transform(x, m);
  const std::vector<double> dm = diff_logs(ux.logs(), m);
  const std::vector<double> dm1 = diff_logs(ux.logs(), m - 1);
  double worst = 0.0;
  long double partial = 0.0L;
  for (std::size_t n = 1; n <= dm.size(); ++n) {
    partial += dm[n - 1];
    worst = std::max(worst, static_cast<double>(std::fabs(partial + dm1[n])));
  }
  return worst;
}

/// Both growth sups for u(x). Refused unless m >= 1 and u(x) lies in
/// V^λ_∞(Δ_G^m). A trend flag means the ratio series failed the truncation
/// boundedness test.
inline LemmaReport lemma_growth_check(const GeoSeq& x, unsigned m, const LambdaSeq& lam, double tol) {
  if (m == 0) throw PreconditionError("growth lemma needs m >= 1");
  if (u_vlambda_inf(x, m, lam, tol).verdict != Verdict::yes)
    throw PreconditionError("sequence is not in uV^lambda_inf(Delta^m)");
  const GeoSeq ux = u_transform(x, m);
  const std::vector<double> lower = diff_logs(ux.logs(), m - 1);

  std::vector<double> r1(lower.size()), r2(ux.size());
  for (std::size_t k = 1; k <= lower.size(); ++k) r1[k - 1] = std::fabs(lower[k - 1]) / lam.at(k);
  for (std::size_t k = 1; k <= ux.size(); ++k) r2[k - 1] = std::fabs(ux.logs()[k - 1]) / std::pow(lam.at(k), m);

  LemmaReport rep;
  rep.sup_lower_order = max_abs(r1);
  rep.sup_scaled = max_abs(r2);
  rep.lower_order_trend = bounded_on_truncation(r1, tol) == Verdict::no;
  rep.scaled_trend = bounded_on_truncation(r2, tol) == Verdict::no;
  rep.telescoping_residual = telescoping_residual(x, m);
  return rep;
}

struct AlphaDualResult {
  Verdict verdict = Verdict::inconclusive;
  double weighted_sum = 0.0;  // Σ_{k>m} (λ_k)^m |log a_k| on the truncation
  TailTest tail;
};

/// a ∈ [uV^λ_∞(Δ_G^m)]^α iff Σ (λ_k)^m |log a_k| < ∞. Terms k <= m are not read.
inline AlphaDualResult alpha_dual_membership(const GeoSeq& a, const LambdaSeq& lam, unsigned m, double tol) {
  if (lam.size() < a.size()) throw ParameterError("lambda sequence is shorter than the coefficient sequence");
  std::vector<double> terms(a.size());
  for (std::size_t k = 1; k <= a.size(); ++k) terms[k - 1] = std::pow(lam.at(k), m) * std::fabs(a.logs()[k - 1]);
  AlphaDualResult r;
  CompensatedSum s;
  for (std::size_t k = m; k < terms.size(); ++k) s.add(terms[k]);
  r.weighted_sum = s.value();
  r.tail = dyadic_tail_test(terms, m, tol);
  r.verdict = r.tail.verdict;
  return r;
}

namespace detail {

inline void require_pairing(const GeoSeq& a, const GeoSeq& x, std::size_t n) {
  if (n == 0 || a.size() < n || x.size() < n) throw ParameterError("pairing needs both sequences to have N terms");
}

inline std::vector<double> pairing_terms(const GeoSeq& a, const GeoSeq& x, std::size_t n) {
  require_pairing(a, x, n);
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = std::fabs(a.logs()[k] * x.logs()[k]);
  return t;
}

}  // namespace detail

/// Partial sums _G∑_{k<=N'} |a_k ⊙ x_k|^G for N' = 1..N.
inline std::vector<GeoNum> pairing_sum(const GeoSeq& a, const GeoSeq& x, std::size_t n) {
  const std::vector<double> t = detail::pairing_terms(a, x, n);
  std::vector<GeoNum> curve;
  curve.reserve(n);
  CompensatedSum s;
  for (double v : t) {
    s.add(v);
    curve.push_back(GeoNum::from_log(s.value()));
  }
  return curve;
}

/// Signed partial sums _G∑ a_k ⊙ x_k: a convergence probe, nothing more.
inline std::vector<GeoNum> pairing_sum_signed(const GeoSeq& a, const GeoSeq& x, std::size_t n) {
  detail::require_pairing(a, x, n);
  std::vector<GeoNum> curve;
  curve.reserve(n);
  CompensatedSum s;
  for (std::size_t k = 0; k < n; ++k) {
    s.add(a.logs()[k] * x.logs()[k]);
    curve.push_back(GeoNum::from_log(s.value()));
  }
  return curve;
}

/// Verdict on Σ_{k>m} |log a_k · log x_k| < ∞.
inline TailTest pairing_finite(const GeoSeq& a, const GeoSeq& x, unsigned m, double tol) {
  const std::size_t n = std::min(a.size(), x.size());
  return dyadic_tail_test(detail::pairing_terms(a, x, n), m, tol);
}

struct PairingBound {
  double pairing = 0.0;  // Σ_{k>m} |log a_k · log x_k|
  double bound = 0.0;    // sup_{k>m} |log x_k| / λ_k^m · Σ_{k>m} λ_k^m |log a_k|
  bool holds(double rel_tol = 1e-12) const noexcept { return pairing <= bound * (1.0 + rel_tol) + rel_tol; }
};

inline PairingBound pairing_bound(const GeoSeq& a, const GeoSeq& x, const LambdaSeq& lam, unsigned m) {
  const std::size_t n = std::min(a.size(), x.size());
  if (lam.size() < n) throw ParameterError("lambda sequence is shorter than the pairing");
  CompensatedSum pair, weighted;
  double sup = 0.0;
  for (std::size_t k = m + 1; k <= n; ++k) {
    const double w = std::pow(lam.at(k), m);
    pair.add(std::fabs(a.logs()[k - 1] * x.logs()[k - 1]));
    weighted.add(w * std::fabs(a.logs()[k - 1]));
    sup = std::max(sup, std::fabs(x.logs()[k - 1]) / w);
  }
  return {pair.value(), sup * weighted.value()};
}

struct UEquivalenceEntry {
  std::string source;
  Verdict verdict_x;
  Verdict verdict_u;
  double head_difference;  // Σ_{k<=m} |log a_k · log x_k|
};

struct UEquivalenceReport {
  std::vector<UEquivalenceEntry> entries;
  std::size_t flips = 0;
};

/// Pairing verdicts of a against each x and against u(x).
inline UEquivalenceReport alpha_dual_u_equivalence(const GeoSeq& a, const LambdaSeq& lam, unsigned m,
                                                   std::span<const GeoSeq> family, double tol) {
  UEquivalenceReport rep;
  for (const GeoSeq& x : family) {
    const std::size_t n = std::min({a.size(), x.size(), lam.size()});
    if (n <= m) throw ParameterError("sequences must be longer than m");
    const GeoSeq ux = u_transform(x, m);
    const TailTest tx = pairing_finite(a, x, m, tol);
    const TailTest tu = pairing_finite(a, ux, m, tol);
    const auto cx = pairing_sum(a, x, n), cu = pairing_sum(a, ux, n);
    rep.entries.push_back({x.source(), tx.verdict, tu.verdict, cx.back().log() - cu.back().log()});
    if (tx.verdict != tu.verdict) ++rep.flips;
  }
  return rep;
}

}  // namespace geomseq
