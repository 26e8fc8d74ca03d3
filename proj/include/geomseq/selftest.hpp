#pragma once

// Seeded invariant suites, one per module. Each check is a small property
// evaluated on sampled inputs; the suite reports pass/total counts.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geomseq/config.hpp"
#include "geomseq/convergence.hpp"
#include "geomseq/diff.hpp"
#include "geomseq/duals.hpp"
#include "geomseq/generators.hpp"
#include "geomseq/geonum.hpp"
#include "geomseq/io.hpp"
#include "geomseq/orlicz.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few only
  bool ok() const noexcept { return passed == total; }
};

namespace detail {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { r_.name = std::move(name); }
  void check(bool cond, const std::string& what) {
    ++r_.total;
    if (cond) {
      ++r_.passed;
    } else if (r_.failures.size() < 5) {
      r_.failures.push_back(what);
    }
  }
  SuiteResult result() && { return std::move(r_); }

 private:
  SuiteResult r_;
};

inline std::vector<double> random_logs(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace detail

inline SuiteResult selftest_geocore(std::uint64_t seed) {
  detail::SuiteRecorder s("geocore");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng), b = u(rng);
    const GeoNum x = GeoNum::from_log(a), y = GeoNum::from_log(b);
    bool ok = geo_add(x, y).log() == a + b && geo_sub(x, y).log() == a - b && geo_mul(x, y).log() == a * b &&
              geo_abs(x).log() == std::fabs(a);
    if (b != 0.0) ok = ok && geo_div(x, y).log() == a / b;
    s.check(ok, "isomorphism at sample " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> v = detail::random_logs(rng, 500, 1e3);
    std::vector<GeoNum> g;
    long double ref = 0.0L;
    for (double l : v) {
      g.push_back(GeoNum::from_log(l));
      ref += l;
    }
    s.check(std::fabs(geo_sum(g).log() - static_cast<double>(ref)) <= 1e-9, "compensated sum " + std::to_string(i));
  }
  s.check(geo_add(GeoNum::zero(), GeoNum::one()) == GeoNum::one(), "0_G is the additive identity");
  s.check(geo_mul(GeoNum::one(), GeoNum::from_log(3.5)).log() == 3.5, "1_G is the multiplicative identity");
  return std::move(s).result();
}

inline SuiteResult selftest_seqmodel(std::uint64_t seed) {
  detail::SuiteRecorder s("seqmodel");
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 50; ++i) {
    const GeoSeq x(detail::random_logs(rng, 1 + rng() % 64, 100.0), "sample");
    std::istringstream in(serialize(x));
    s.check(ingest(in) == x, "serialize/ingest round trip " + std::to_string(i));
  }
  for (const char* name : {"n", "const1", "half", "sqrt"}) {
    const LambdaSeq lam = make_lambda(name, 1000);
    bool ok = true;
    for (std::size_t n = 1; n <= lam.size(); ++n) {
      const Window w = window(lam, n);
      ok = ok && w.last == n && w.size() == static_cast<std::size_t>(std::ceil(lam.at(n)));
    }
    s.check(ok, std::string("window sizes for lambda ") + name);
  }
  s.check(!LambdaSeq::first_violation(LambdaSeq::cesaro(100).values()).has_value(), "cesaro lambda valid");
  const std::vector<double> bad = {1.0, 2.5};
  s.check(LambdaSeq::first_violation(bad) == std::optional<std::size_t>(2), "jump > 1 rejected");
  return std::move(s).result();
}

inline SuiteResult selftest_diffops(std::uint64_t seed) {
  detail::SuiteRecorder s("diffops");
  std::mt19937_64 rng(seed + 2);
  for (int i = 0; i < 200; ++i) {
    const unsigned m = static_cast<unsigned>(rng() % 11);
    const GeoSeq x(detail::random_logs(rng, m + 1 + rng() % 100), "sample");
    const GeoSeq a = diff_recursive(x, m), b = diff_binomial(x, m);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::fabs(a.logs()[k] - b.logs()[k]));
    s.check(worst <= 1e-10, "binomial vs recursive, m=" + std::to_string(m));
  }
  for (unsigned m = 1; m <= 4; ++m) {
    const GeoSeq x = generate(LogPolynomial{m}, 200);
    const double expect = (m % 2 == 0 ? 1.0 : -1.0) * std::tgamma(m + 1.0);
    double worst = 0.0;
    for (double v : diff_logs(x.logs(), m)) worst = std::max(worst, std::fabs(v - expect));
    s.check(worst <= 1e-9, "closed form (-1)^m m! for m=" + std::to_string(m));
  }
  {
    const GeoSeq x(detail::random_logs(rng, 50), "x");
    const GeoSeq y(detail::random_logs(rng, 50), "y");
    const GeoNum alpha = GeoNum::from_log(1.7);
    const auto lhs = diff_recursive(seq_add(seq_scale(alpha, x), y), 3);
    const auto rx = diff_recursive(x, 3), ry = diff_recursive(y, 3);
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k)
      worst = std::max(worst, std::fabs(lhs.logs()[k] - (1.7 * rx.logs()[k] + ry.logs()[k])));
    s.check(worst <= 1e-10, "linearity");
  }
  return std::move(s).result();
}

inline SuiteResult selftest_convergence(std::uint64_t seed) {
  detail::SuiteRecorder s("convergence");
  std::mt19937_64 rng(seed + 3);
  const std::size_t n = 4096;
  std::vector<GeoSeq> family = {generate(GeometricConstant{0.5}, n), generate(LogOscillatory{1}, n),
                                generate(LogPolynomial{1}, n),
                                generate(SparseSpike{SpikeSet::cubes, SpikeHeight::unit, 1.0}, n),
                                generate(CustomLog{"1/k"}, n), generate(CustomLog{"sin(k)"}, n)};
  for (int i = 0; i < 4; ++i) {
    std::vector<double> v(n);
    std::normal_distribution<double> g(0.0, 1.0);
    for (double& x : v) x = g(rng);
    family.emplace_back(std::move(v), "gaussian");
  }
  for (const char* lname : {"n", "half"}) {
    for (const GeoSeq& x : family) {
      const LambdaSeq lam = make_lambda(lname, n);
      auto in = [&](Space sp, unsigned m) {
        return space_membership(x, m, lam, sp, 1e-2).verdict == Verdict::yes;
      };
      s.check(!in(Space::abs_cesaro, 1) || in(Space::cesaro, 1), "[C,1] in (C,1) for " + x.source());
      s.check(!in(Space::abs_vallee_poussin, 1) || in(Space::vallee_poussin, 1), "[V,l] in (V,l) for " + x.source());
    }
  }
  const GeoSeq osc = generate(LogOscillatory{1}, n);
  const LambdaSeq ces = LambdaSeq::cesaro(n);
  s.check(space_membership(osc, 1, ces, Space::cesaro, 1e-2).verdict == Verdict::yes, "oscillatory in (C,1)");
  s.check(space_membership(osc, 1, ces, Space::abs_cesaro, 1e-2).verdict == Verdict::no, "oscillatory not in [C,1]");
  return std::move(s).result();
}

inline SuiteResult selftest_orlicz(std::uint64_t seed) {
  detail::SuiteRecorder s("orlicz");
  std::mt19937_64 rng(seed + 4);
  const std::size_t n = 256;
  const LambdaSeq lam = LambdaSeq::cesaro(n);
  for (double c : {0.5, 1.0, 2.0}) {
    std::vector<double> logs(n);
    for (std::size_t k = 0; k < n; ++k) logs[k] = -c * static_cast<double>(k);  // d_k = c
    const ParanormResult g = paranorm_g(GeoSeq(logs, "ramp"), 1, lam, OrliczFn::power(1.0), PSeq::constant(1.0), 1e-8);
    s.check(g.g && std::fabs(g.g->log() - c) <= 1e-6, "closed-form paranorm c=" + std::to_string(c));
  }
  const OrliczFn M = OrliczFn::power(2.0);
  for (int i = 0; i < 20; ++i) {
    const GeoSeq x(detail::random_logs(rng, n), "x"), y(detail::random_logs(rng, n), "y");
    const auto gx = paranorm_g(x, 1, lam, M, PSeq::constant(1.0));
    const auto gy = paranorm_g(y, 1, lam, M, PSeq::constant(1.0));
    const auto gs = paranorm_g(seq_add(x, y), 1, lam, M, PSeq::constant(1.0));
    s.check(gs.g->log() <= gx.g->log() + gy.g->log() + 1e-8, "subadditivity " + std::to_string(i));
  }
  std::vector<double> grid;
  for (int j = 0; j <= 40; ++j) grid.push_back(0.25 * j);
  s.check(orlicz_shape_ok(OrliczFn::power(1.5), grid), "power shape");
  s.check(orlicz_shape_ok(OrliczFn::expm1(), grid), "expm1 shape");
  std::vector<double> tg;
  for (int j = -10; j <= 10; ++j) tg.push_back(std::ldexp(1.0, j));
  s.check(delta2_probe(OrliczFn::power(2.0), tg).satisfied, "t^2 satisfies delta2");
  s.check(!delta2_probe(OrliczFn::expm1(), tg).satisfied, "expm1 fails delta2");
  return std::move(s).result();
}

inline SuiteResult selftest_duals(std::uint64_t seed) {
  detail::SuiteRecorder s("duals");
  std::mt19937_64 rng(seed + 5);
  const std::size_t n = 2048;
  for (unsigned m = 1; m <= 3; ++m) {
    const GeoSeq x(detail::random_logs(rng, n), "x");
    s.check(u_transform(u_transform(x, m), m) == u_transform(x, m), "u idempotent m=" + std::to_string(m));
    s.check(telescoping_residual(x, m) <= 1e-9,
            "telescoping m=" + std::to_string(m));
    const LambdaSeq lam = LambdaSeq::cesaro(n);
    const GeoSeq canon = dual_canonical(lam, m, n);
    s.check(u_vlambda_inf(canon, m, lam, 1e-2).verdict == Verdict::yes, "canonical in uV_inf m=" + std::to_string(m));
    std::vector<double> a(n);
    for (std::size_t k = 1; k <= n; ++k) a[k - 1] = std::pow(static_cast<double>(k), -static_cast<double>(m) - 2.0);
    const GeoSeq coef(a, "member");
    const std::vector<GeoSeq> fam = {canon, x};
    s.check(alpha_dual_u_equivalence(coef, lam, m, fam, 1e-2).flips == 0, "head invariance m=" + std::to_string(m));
    s.check(pairing_bound(coef, canon, lam, m).holds(), "pairing bound m=" + std::to_string(m));
  }
  return std::move(s).result();
}

inline std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {selftest_geocore(seed), selftest_seqmodel(seed),  selftest_diffops(seed),
          selftest_convergence(seed), selftest_orlicz(seed), selftest_duals(seed)};
}

}  // namespace geomseq
