#pragma once

// Orlicz functions and the [V,λ,M,p]^G(Δ_G^m) modulars.
//
// M acts on the log of its geometric argument, geometric division by ρ
// divides logs by log ρ, and the exponent (p_k)^G is the classical power p_k
// on the log level. With d_k = log Δ_G^m x_k and centre L the modular at n is
//
//   (1/λ_n) Σ_{k∈I_n} [ M(|d_k - log L| / log ρ) ]^{p_k}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geomseq/convergence.hpp"
#include "geomseq/diff.hpp"
#include "geomseq/errors.hpp"
#include "geomseq/geonum.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/truncation.hpp"

namespace geomseq {

class OrliczFn {
 public:
  struct Power {
    double q;
  };
  struct Expm1 {};
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> knots;  // (t, M(t)), starts at (0, 0)
  };

  /// M(t) = t^q, q >= 1.
  static OrliczFn power(double q) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw ParameterError("power Orlicz function needs q >= 1");
    return OrliczFn(Power{q});
  }

  /// M(t) = e^t - 1.
  static OrliczFn expm1() { return OrliczFn(Expm1{}); }

  /// Convex piecewise-linear M through the knots, extended linearly past the
  /// last knot. A missing (0, 0) knot is prepended.
  static OrliczFn pwl(std::vector<std::pair<double, double>> knots) {
    std::sort(knots.begin(), knots.end());
    if (knots.empty() || knots.front().first > 0.0) knots.insert(knots.begin(), {0.0, 0.0});
    if (knots.front().first != 0.0 || knots.front().second != 0.0)
      throw ParameterError("piecewise-linear Orlicz function must satisfy M(0) = 0");
    if (knots.size() < 2) throw ParameterError("piecewise-linear Orlicz function needs a knot with t > 0");
    double prev_slope = 0.0;
    for (std::size_t i = 1; i < knots.size(); ++i) {
      const double dt = knots[i].first - knots[i - 1].first;
      if (!(dt > 0.0)) throw ParameterError("piecewise-linear knots must have distinct t");
      const double slope = (knots[i].second - knots[i - 1].second) / dt;
      if (slope < prev_slope) throw ParameterError("piecewise-linear Orlicz function must be convex and non-decreasing");
      prev_slope = slope;
    }
    if (!(prev_slope > 0.0)) throw ParameterError("piecewise-linear Orlicz function must grow without bound");
    return OrliczFn(PiecewiseLinear{std::move(knots)});
  }

  /// M(t) for t >= 0. May return +inf on overflow.
  double operator()(double t) const {
    return std::visit(
        [t](const auto& f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Power>) {
            return f.q == 1.0 ? t : std::pow(t, f.q);
          } else if constexpr (std::is_same_v<T, Expm1>) {
            return std::expm1(t);
          } else {
            const auto& k = f.knots;
            auto it = std::upper_bound(k.begin(), k.end(), t, [](double v, const auto& knot) { return v < knot.first; });
            if (it == k.end()) it = k.end() - 1;
            const auto& a = *(it - 1);
            const auto& b = *it;
            return a.second + (t - a.first) * (b.second - a.second) / (b.first - a.first);
          }
        },
        fn_);
  }

  bool is_power() const noexcept { return std::holds_alternative<Power>(fn_); }
  const std::variant<Power, Expm1, PiecewiseLinear>& kind() const noexcept { return fn_; }

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Power>)
            os << "power(q=" << f.q << ")";
          else if constexpr (std::is_same_v<T, Expm1>)
            os << "expm1";
          else
            os << "pwl(" << f.knots.size() << " knots)";
        },
        fn_);
    return os.str();
  }

 private:
  explicit OrliczFn(std::variant<Power, Expm1, PiecewiseLinear> f) : fn_(std::move(f)) {}

  std::variant<Power, Expm1, PiecewiseLinear> fn_;
};

/// M(0) = 0, non-decreasing and convex (second differences >= 0) on an
/// ascending grid starting at 0.
inline bool orlicz_shape_ok(const OrliczFn& M, std::span<const double> grid, double slack = 1e-12) {
  if (M(0.0) != 0.0) return false;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double a = M(grid[i - 1]), b = M(grid[i]);
    if (b < a - slack * std::max(1.0, std::fabs(a))) return false;
    if (i + 1 < grid.size()) {
      const double c = M(grid[i + 1]);
      const double s1 = (b - a) / (grid[i] - grid[i - 1]);
      const double s2 = (c - b) / (grid[i + 1] - grid[i]);
      if (s2 < s1 - slack * std::max(1.0, std::fabs(s1))) return false;
    }
  }
  return true;
}

/// Geometric transport of M: result.log = M(a.log). Requires a.log >= 0.
inline GeoNum geo_orlicz_apply(const OrliczFn& M, GeoNum a) {
  if (a.log() < 0.0) throw DomainError("Orlicz functions act on geometric absolute values (log >= 0)");
  return GeoNum::from_log(M(a.log()));
}

struct ModularParams {
  unsigned m = 1;
  LambdaSeq lam;
  OrliczFn M;
  PSeq p;
  double rho_log = 1.0;          // log ρ > 0
  std::optional<GeoNum> L;       // absent: centre 0_G
};

namespace detail {

/// Modular values from precomputed d; +inf entries mark overflow.
inline std::vector<double> modular_values(std::span<const double> d, const LambdaSeq& lam, const OrliczFn& M,
                                          const PSeq& p, double center, double rho_log) {
  std::vector<double> f(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double base = M(std::fabs(d[k] - center) / rho_log);
    const double pk = p.at(k + 1);
    f[k] = pk == 1.0 ? base : std::pow(base, pk);
  }
  return windowed_means(f, lam);
}

/// Modular of the constant unit deviation, the scale for "tends to 0".
inline std::vector<double> unit_modular(std::size_t len, const LambdaSeq& lam, const OrliczFn& M, const PSeq& p,
                                        double rho_log) {
  const std::vector<double> one(len, 1.0);
  return modular_values(one, lam, M, p, 0.0, rho_log);
}

inline void require_rho(double rho_log) {
  if (!(rho_log > 0.0) || !std::isfinite(rho_log)) throw ParameterError("rho must exceed 1 (log rho > 0)");
}

}  // namespace detail

inline std::vector<double> modular_logs(const GeoSeq& x, const ModularParams& params) {
  detail::require_rho(params.rho_log);
  const std::vector<double> d = diff_logs(x.logs(), params.m);
  return detail::modular_values(d, params.lam, params.M, params.p, params.L ? params.L->log() : 0.0, params.rho_log);
}

struct ModularSeries {
  std::vector<GeoNum> values;
  WindowKind window;
};

inline ModularSeries modular_series(const GeoSeq& x, const ModularParams& params) {
  const std::vector<double> v = modular_logs(x, params);
  ModularSeries s{{}, params.lam.is_cesaro() ? WindowKind::cesaro : WindowKind::vallee_poussin};
  s.values.reserve(v.size());
  for (double l : v) s.values.push_back(GeoNum::from_log(l));
  return s;
}

enum class OrliczVariant { with_limit, null, bounded };

inline std::string to_string(OrliczVariant v) {
  switch (v) {
    case OrliczVariant::with_limit: return "orliczL";
    case OrliczVariant::null: return "orlicz0";
    case OrliczVariant::bounded: return "orliczInf";
  }
  return "?";
}

/// Dyadic ρ grid: log ρ = 2^j, j = -20..20.
inline std::vector<double> rho_grid() {
  std::vector<double> g;
  for (int j = -20; j <= 20; ++j) g.push_back(std::ldexp(1.0, j));
  return g;
}

struct OrliczMembership {
  OrliczVariant variant;
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> witness_rho_log;
  std::optional<GeoNum> L;  // with_limit only
  double statistic = 0.0;   // normalised tail max (L/0) or sup (bounded) at the witness
  bool grid_exhausted = false;
};

/// Searches log ρ over the dyadic grid in ascending order and reports the
/// first ρ that works. L and 0 variants: the tail of the modular, divided by
/// the modular of a unit deviation, must stay <= tol. Bounded variant: the
/// modular must pass the truncation growth test.
inline OrliczMembership space_membership_orlicz(const GeoSeq& x, unsigned m, const LambdaSeq& lam, const OrliczFn& M,
                                                const PSeq& p, OrliczVariant variant, double tol,
                                                double tail_fraction = 0.2) {
  const std::vector<double> d = diff_logs(x.logs(), m);
  OrliczMembership r;
  r.variant = variant;
  double center = 0.0;
  if (variant == OrliczVariant::with_limit) {
    center = tail_median(d, tail_fraction);
    r.L = GeoNum::from_log(center);
  }
  const std::size_t c = tail_count(d.size(), tail_fraction);
  bool any_conclusive = false;

  for (double rho_log : rho_grid()) {
    const std::vector<double> mod = detail::modular_values(d, lam, M, p, center, rho_log);
    Verdict v;
    double stat = 0.0;
    if (variant == OrliczVariant::bounded) {
      v = bounded_on_truncation(mod, tol);
      stat = max_abs(mod);
    } else {
      const std::vector<double> unit = detail::unit_modular(d.size(), lam, M, p, rho_log);
      for (std::size_t i = d.size() - c; i < d.size(); ++i) {
        const double ratio = mod[i] / unit[i];
        stat = std::isfinite(ratio) ? std::max(stat, ratio) : std::numeric_limits<double>::infinity();
      }
      v = c < kMinTailPoints ? Verdict::inconclusive : (stat <= tol ? Verdict::yes : Verdict::no);
    }
    if (v != Verdict::inconclusive) any_conclusive = true;
    if (v == Verdict::yes) {
      r.verdict = Verdict::yes;
      r.witness_rho_log = rho_log;
      r.statistic = stat;
      return r;
    }
  }
  r.verdict = any_conclusive ? Verdict::no : Verdict::inconclusive;
  r.grid_exhausted = true;
  return r;
}

/// sup_n of the modular at one ρ.
inline double modular_sup(const GeoSeq& x, unsigned m, const LambdaSeq& lam, const OrliczFn& M, const PSeq& p,
                          double rho_log, double center_log = 0.0) {
  detail::require_rho(rho_log);
  const std::vector<double> d = diff_logs(x.logs(), m);
  return max_abs(detail::modular_values(d, lam, M, p, center_log, rho_log));
}

struct ParanormResult {
  std::optional<GeoNum> g;  // empty: not attained on the grid
  double inf_rho_log = 0.0;
  bool exponent_ambiguous = false;
};

/// g(x) = inf{ ρ^{p/H} : sup_n (modular_n at ρ)^{1/H} <= 1 }.
///
/// Feasibility is monotone in log ρ, so the infimum is bracketed on the ρ grid
/// and refined by bisection to `tol_rho` (absolute, on log ρ). For constant
/// p the result has log (inf log ρ)^{p/H}. For non-constant p the exponent is
/// not determined; g then carries the raw infimum and the ambiguity flag.
inline ParanormResult paranorm_g(const GeoSeq& x, unsigned m, const LambdaSeq& lam, const OrliczFn& M, const PSeq& p,
                                 double tol_rho = 1e-10) {
  if (!(tol_rho > 0.0)) throw ParameterError("tol_rho must be positive");
  const std::vector<double> d = diff_logs(x.logs(), m);
  const double H = p.H();
  ParanormResult r;
  const std::optional<double> pc = p.constant_value();
  r.exponent_ambiguous = !pc.has_value();

  auto finish = [&](double inf_log) {
    r.inf_rho_log = inf_log;
    const double expo = pc ? *pc / H : 1.0;
    r.g = GeoNum::from_log(inf_log == 0.0 ? 0.0 : std::pow(inf_log, expo));
    return r;
  };

  if (max_abs(d) == 0.0) return finish(0.0);

  auto feasible = [&](double rho_log) {
    const std::vector<double> mod = detail::modular_values(d, lam, M, p, 0.0, rho_log);
    for (double v : mod)
      if (!(std::pow(v, 1.0 / H) <= 1.0)) return false;
    return true;
  };

  const std::vector<double> grid = rho_grid();
  std::size_t j = 0;
  while (j < grid.size() && !feasible(grid[j])) ++j;
  if (j == grid.size()) {
    r.inf_rho_log = grid.back();
    return r;
  }
  double lo = j == 0 ? 0.0 : grid[j - 1];
  double hi = grid[j];
  while (hi - lo > tol_rho) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return finish(hi);
}

struct Delta2Report {
  double sup_ratio = 0.0;          // sup over the grid of M(2t)/M(t)
  double sup_ratio_lower = 0.0;    // same over the lower half of the grid
  bool satisfied = false;
};

/// Δ₂ probe: sup_t M(2t)/M(t) must be finite, at most K, and unchanged (to
/// 1e-9 relative) when the upper half of the grid is added.
inline Delta2Report delta2_probe(const OrliczFn& M, std::span<const double> t_grid, double K = 1e3) {
  if (t_grid.size() < 2) throw ParameterError("delta2 probe needs at least two grid points");
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  std::sort(grid.begin(), grid.end());
  Delta2Report rep;
  const std::size_t half = (grid.size() + 1) / 2;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    if (!(t > 0.0)) throw ParameterError("delta2 grid points must be positive");
    const double mt = M(t);
    if (mt == 0.0) throw ParameterError("invalid Orlicz function: M(t) = 0 at t = " + std::to_string(t));
    const double ratio = M(2.0 * t) / mt;
    const double r = std::isfinite(ratio) ? ratio : std::numeric_limits<double>::infinity();
    rep.sup_ratio = std::max(rep.sup_ratio, r);
    if (i < half) rep.sup_ratio_lower = std::max(rep.sup_ratio_lower, r);
  }
  rep.satisfied = std::isfinite(rep.sup_ratio) && rep.sup_ratio <= K &&
                  rep.sup_ratio <= rep.sup_ratio_lower * (1.0 + 1e-9);
  return rep;
}

struct SolidityReport {
  std::optional<double> rho_log;  // witness ρ of x
  double base_statistic = 0.0;
  double scaled_statistic = 0.0;
  bool violated = false;
};

/// Scales the coordinates the modular reads, d_k -> α_k ⊙ d_k (for m = 0 this
/// is α ⊙ x itself), and re-tests 0-variant membership at x's witness ρ.
/// Requires |log α_k| <= cap and x in the 0-variant space.
inline SolidityReport solidity_check(const GeoSeq& x, std::span<const GeoNum> alphas, unsigned m,
                                     const LambdaSeq& lam, const OrliczFn& M, const PSeq& p, double tol,
                                     double tail_fraction = 0.2, double cap = 1.0) {
  const std::vector<double> d = diff_logs(x.logs(), m);
  if (alphas.size() < d.size()) throw ParameterError("need one scalar per difference coordinate");
  for (std::size_t k = 0; k < d.size(); ++k)
    if (std::fabs(alphas[k].log()) > cap) throw ParameterError("scalar exceeds the geometric modulus cap");

  const OrliczMembership base = space_membership_orlicz(x, m, lam, M, p, OrliczVariant::null, tol, tail_fraction);
  if (base.verdict != Verdict::yes) throw PreconditionError("sequence is not in the null Orlicz space");

  std::vector<double> scaled(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) scaled[k] = alphas[k].log() * d[k];

  const double rho = *base.witness_rho_log;
  const std::vector<double> mod = detail::modular_values(scaled, lam, M, p, 0.0, rho);
  const std::vector<double> unit = detail::unit_modular(d.size(), lam, M, p, rho);
  const std::size_t c = tail_count(d.size(), tail_fraction);
  double stat = 0.0;
  for (std::size_t i = d.size() - c; i < d.size(); ++i) stat = std::max(stat, mod[i] / unit[i]);

  SolidityReport rep{rho, base.statistic, stat, !(stat <= tol)};
  return rep;
}

}  // namespace geomseq
