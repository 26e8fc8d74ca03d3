// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geomseq/geomseq.hpp"
#include "oracles.hpp"

using namespace geomseq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::vector<double> uniform(std::mt19937_64& rng, std::size_t n, double a) {
  std::uniform_real_distribution<double> u(-a, a);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

LambdaSeq lambda_by_name(const std::string& name, std::size_t n) { return make_lambda(name, n); }

// ---------------------------------------------------------------------------

Outcome ac1() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double a = u(rng), b = u(rng);
    const GeoNum x = GeoNum::from_log(a), y = GeoNum::from_log(b);
    // Oracle: ⊕/⊖/|.|^G through the values, ⊙/⊘ as classical operations on logs.
    const double va = std::exp(a), vb = std::exp(b);
    double err = 0.0;
    switch (i % 5) {
      case 0: err = std::fabs(geo_add(x, y).log() - std::log(va * vb)); break;
      case 1: err = std::fabs(geo_sub(x, y).log() - std::log(va / vb)); break;
      case 2: err = std::fabs(geo_mul(x, y).log() - a * b); break;
      case 3: err = std::fabs(geo_div(x, y).log() - a / b); break;
      case 4: err = std::fabs(geo_abs(x).log() - std::log(std::max(va, 1.0 / va))); break;
    }
    worst = std::max(worst, err);
  }
  return {worst <= 1e-12, "1e5 operations, max log error " + fmt(worst)};
}

Outcome ac2() {
  std::mt19937_64 rng(2);
  double eq = 0.0, lin = 0.0, tel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const unsigned m = static_cast<unsigned>(rng() % 11);
    const std::size_t len = std::max<std::size_t>(m + 2, 1 + rng() % 200);
    const GeoSeq x(uniform(rng, len, 1.0), "x"), y(uniform(rng, len, 1.0), "y");
    const GeoSeq a = diff_recursive(x, m), b = diff_binomial(x, m);
    for (std::size_t k = 0; k < a.size(); ++k) eq = std::max(eq, std::fabs(a.logs()[k] - b.logs()[k]));

    const double alpha = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const GeoSeq lhs = diff_binomial(seq_add(seq_scale(GeoNum::from_log(alpha), x), y), m);
    const GeoSeq dy = diff_recursive(y, m);
    for (std::size_t k = 0; k < lhs.size(); ++k)
      lin = std::max(lin, std::fabs(lhs.logs()[k] - (alpha * a.logs()[k] + dy.logs()[k])));

    if (m >= 1) {
      // Σ_{k<=n} Δ^m l_k = Δ^{m-1} l_1 - Δ^{m-1} l_{n+1}
      const GeoSeq lower = diff_recursive(x, m - 1);
      long double s = 0.0L;
      for (std::size_t n = 0; n < a.size(); ++n) {
        s += a.logs()[n];
        tel = std::max(tel, std::fabs(static_cast<double>(s) - (lower.logs()[0] - lower.logs()[n + 1])));
      }
    }
  }
  const bool ok = eq <= 1e-10 && lin <= 1e-10 && tel <= 1e-10;
  return {ok, "1e3 sequences; equivalence " + fmt(eq) + ", linearity " + fmt(lin) + ", telescoping " + fmt(tel)};
}

Outcome ac3() {
  const std::size_t n = 1000;
  const LambdaSeq lam = LambdaSeq::cesaro(n);
  const OrliczFn M2 = OrliczFn::power(2.0), M1 = OrliczFn::power(1.0);
  const PSeq p = PSeq::constant(1.0);
  bool ok = true;
  std::string detail;
  for (unsigned m = 1; m <= 4; ++m) {
    const GeoSeq x = generate(LogPolynomial{m}, n);
    const double expect = ((m % 2) ? -1.0 : 1.0) * oracle::factorial(m);
    double worst = 0.0;
    for (double v : diff_logs(x.logs(), m)) worst = std::max(worst, std::fabs(v - expect));

    const OrliczMembership top = space_membership_orlicz(x, m, lam, M2, p, OrliczVariant::bounded, 1e-2);
    const OrliczMembership low = space_membership_orlicz(x, m - 1, lam, M2, p, OrliczVariant::bounded, 1e-2);
    const double rho = top.witness_rho_log.value_or(1.0);
    const double ratio = modular_sup(x, m - 1, lam, M2, p, rho) / modular_sup(x, m, lam, M2, p, rho);
    const double ratio_t = modular_sup(x, m - 1, lam, M1, p, rho) / modular_sup(x, m, lam, M1, p, rho);

    const bool pass = worst <= 1e-9 && top.verdict == Verdict::yes && low.verdict == Verdict::no && ratio > 1e3;
    ok = ok && pass;
    detail += "m=" + std::to_string(m) + ": err " + fmt(worst) + ", sup ratio " + fmt(ratio) +
              " [M=t: " + fmt(ratio_t) + "]; ";
  }
  detail += "M(t)=t^2";
  return {ok, detail};
}

Outcome ac4() {
  std::mt19937_64 rng(4);
  const char* lambdas[] = {"n", "half", "sqrt"};
  std::size_t violations = 0, zeros = 0;
  bool zero_is_all_ones = false;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 50 + rng() % 150;
    const unsigned m = 1 + static_cast<unsigned>(rng() % 3);
    const LambdaSeq lam = lambda_by_name(lambdas[i % 3], n);
    const MeanKind kind = (i % 2) ? MeanKind::absolute : MeanKind::signed_mean;
    const bool is_zero_sample = i == 0;
    const GeoSeq x = is_zero_sample ? GeoSeq(std::vector<double>(n, 0.0), "ones") : GeoSeq(uniform(rng, n, 2.0), "x");
    const GeoSeq y(uniform(rng, n, 2.0), "y");
    const double a = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);

    const double nx = delta_norm(x, m, lam, kind).log(), ny = delta_norm(y, m, lam, kind).log();
    const double nsum = delta_norm(seq_add(x, y), m, lam, kind).log();
    const double nscaled = delta_norm(seq_scale(GeoNum::from_log(a), x), m, lam, kind).log();
    if (nx < 0.0 || ny < 0.0) ++violations;
    if (nsum > nx + ny + 1e-10) ++violations;
    if (std::fabs(nscaled - std::fabs(a) * nx) > 1e-10 * std::max(1.0, nx)) ++violations;
    if (nx == 0.0) {
      ++zeros;
      zero_is_all_ones = is_zero_sample;
    }
    if (ny == 0.0) ++zeros;
  }
  const bool ok = violations == 0 && zeros == 1 && zero_is_all_ones;
  return {ok, "1e3 samples, " + std::to_string(violations) + " axiom violations, " + std::to_string(zeros) +
                  " zero-norm points (all-1 sequence: " + (zero_is_all_ones ? "yes" : "no") + ")"};
}

std::vector<GeoSeq> audit_families(std::size_t n) {
  std::mt19937_64 rng(5);
  std::vector<GeoSeq> f = {
      generate(GeometricConstant{0.0}, n),
      generate(GeometricConstant{2.0}, n),
      generate(LogOscillatory{0}, n),
      generate(LogOscillatory{1}, n),
      generate(LogOscillatory{2}, n),
      generate(LogPolynomial{1}, n),
      generate(LogPolynomial{2}, n),
      generate(LogPolynomial{3}, n),
      generate(SparseSpike{SpikeSet::cubes, SpikeHeight::unit, 1.0}, n),
      generate(SparseSpike{SpikeSet::powers_of_two, SpikeHeight::unit, 1.0}, n),
      generate(SparseSpike{SpikeSet::powers_of_two, SpikeHeight::sqrt_index, 1.0}, n),
      generate(SparseSpike{SpikeSet::cubes, SpikeHeight::sqrt_index, 0.5}, n),
      generate(CustomLog{"1/k^2"}, n),
      generate(CustomLog{"1 + 1/k"}, n),
      generate(CustomLog{"log(k)"}, n),
      generate(CustomLog{"sin(k)"}, n),
      generate(CustomLog{"cos(k/10)"}, n),
      generate(CustomLog{"k*cos(pi*k)"}, n),
      generate(CustomLog{"sqrt(k)"}, n),
      generate(CustomLog{"2 - 3/k^3"}, n),
      generate(CustomLog{"k/2 + cos(pi*k)"}, n),
  };
  std::vector<double> noise = uniform(rng, n, 1e-3);
  f.emplace_back(std::move(noise), "uniform-noise(1e-3)");
  return f;
}

Outcome ac5() {
  const std::size_t n = 10000;
  const double tol = 1e-2;
  const auto families = audit_families(n);
  const char* lambdas[] = {"n", "half", "sqrt"};
  const Space all[] = {Space::cesaro, Space::abs_cesaro, Space::vallee_poussin, Space::abs_vallee_poussin,
                       Space::bounded};
  std::size_t checks = 0, violations = 0, margin_violations = 0;
  std::string first;
  for (const char* ln : lambdas) {
    const LambdaSeq lam = lambda_by_name(ln, n);
    for (const GeoSeq& x : families) {
      for (unsigned m = 1; m <= 2; ++m) {
        auto in = [&](Space s, unsigned order, double t) {
          return space_membership(x, order, lam, s, t).verdict == Verdict::yes;
        };
        auto flag = [&](bool bad, const std::string& what) {
          ++checks;
          if (bad) {
            ++violations;
            if (first.empty()) first = what + " for " + x.source() + ", lambda " + ln + ", m=" + std::to_string(m);
          }
        };
        flag(in(Space::abs_cesaro, m, tol) && !in(Space::cesaro, m, tol), "[C,1] not in (C,1)");
        flag(in(Space::abs_vallee_poussin, m, tol) && !in(Space::vallee_poussin, m, tol), "[V,l] not in (V,l)");
        for (Space s : all) {
          flag(in(s, m - 1, tol) && !in(s, m, tol), to_string(s) + "(D^{m-1}) not in (D^m)");
          // Informational: Δ can double a residual, so test the lower order at tol/2.
          if (in(s, m - 1, tol / 2) && !in(s, m, tol)) ++margin_violations;
        }
      }
    }
  }
  // Strictness witnesses.
  bool strict = true;
  const LambdaSeq ces = LambdaSeq::cesaro(n);
  for (unsigned m = 1; m <= 3; ++m) {
    const GeoSeq osc = generate(LogOscillatory{m}, n);
    strict = strict && space_membership(osc, m, ces, Space::cesaro, tol).verdict == Verdict::yes &&
             space_membership(osc, m, ces, Space::abs_cesaro, tol).verdict == Verdict::no;
    const GeoSeq poly = generate(LogPolynomial{m}, n);
    for (Space s : all)
      strict = strict && space_membership(poly, m, ces, s, tol).verdict == Verdict::yes &&
               space_membership(poly, m - 1, ces, s, tol).verdict == Verdict::no;
  }
  const bool ok = violations == 0 && strict && families.size() >= 20;
  std::string d = std::to_string(families.size()) + " families x 3 lambdas, " + std::to_string(checks) + " checks, " +
                  std::to_string(violations) + " violations [" + std::to_string(margin_violations) +
                  " with lower order at tol/2]; witnesses " + (strict ? "strict" : "NOT strict");
  if (!first.empty()) d += "; first: " + first;
  return {ok, d};
}

Outcome ac6() {
  const double tol = 1e-2;
  const std::vector<double> eps = {0.1, 0.5, 1.0};
  std::string detail;
  bool ok = true;

  // Density of the squares at N = 1e6.
  {
    const std::size_t n = 1000000;
    const GeoSeq x = generate(SparseSpike{SpikeSet::squares, SpikeHeight::unit, 1.0}, n);
    const StatResult s = stat_convergence(x, 0, LambdaSeq::cesaro(n), eps, tol);
    double worst = 0.0;
    bool oracle_agrees = true;
    for (double e : eps) {
      const DensityCurve c = stat_density_curve(x, 0, s.L, GeoNum::from_log(e), LambdaSeq::cesaro(n));
      const double got = c.points.back().second;
      const double brute = oracle::natural_density_at(x.logs(), s.L.log(), e, n);
      oracle_agrees = oracle_agrees && got == brute &&
                      brute == static_cast<double>(oracle::squares_up_to(n)) / static_cast<double>(n);
      worst = std::max(worst, got);
    }
    ok = ok && worst <= 1.1e-3 && oracle_agrees && s.verdict == Verdict::yes;
    detail += "squares N=1e6 density " + fmt(worst) + (oracle_agrees ? " (oracle agrees)" : " (ORACLE MISMATCH)");
  }

  // Inclusions among [V,λ], S_λ, [C,1] and S on the audit families.
  const std::size_t n = 10000;
  const auto families = audit_families(n);
  std::size_t v_to_s = 0, bs_to_v = 0, s_to_sl = 0, checked = 0;
  std::string first;
  for (const char* ln : {"n", "half", "sqrt"}) {
    const LambdaSeq lam = lambda_by_name(ln, n);
    for (const GeoSeq& x : families) {
      for (unsigned m = 0; m <= 1; ++m) {
        const std::size_t dlen = n - m;
        const bool v = space_membership(x, m, lam, Space::abs_vallee_poussin, tol).verdict == Verdict::yes;
        const bool c1 = space_membership(x, m, lam, Space::abs_cesaro, tol).verdict == Verdict::yes;
        const bool bounded = space_membership(x, m, lam, Space::bounded, tol).verdict == Verdict::yes;
        const bool sl = stat_convergence(x, m, lam, eps, tol).verdict == Verdict::yes;
        ++checked;
        if (v && !sl) {
          ++v_to_s;
          if (first.empty()) first = "[V,l] not in S_l: " + x.source() + " " + ln;
        }
        if (bounded && sl && !(v && c1)) {
          ++bs_to_v;
          if (first.empty()) first = "bounded S_l not in [V,l]/[C,1]: " + x.source() + " " + ln;
        }
        if (std::string(ln) != "sqrt") {
          const std::vector<GeoSeq> one = {x};
          const SubsetReport r = check_s_subset_slambda(one, m, lam, eps, tol, 0.2, 0.5);
          s_to_sl += r.counterexamples;
          if (r.counterexamples && first.empty()) first = "S not in S_l: " + x.source() + " " + ln;
        }
        (void)dlen;
      }
    }
  }
  ok = ok && v_to_s == 0 && bs_to_v == 0 && s_to_sl == 0;
  detail += "; " + std::to_string(checked) + " samples: [V,l]->S_l " + std::to_string(v_to_s) +
            " violations, bounded S_l->[V,l],[C,1] " + std::to_string(bs_to_v) + ", S->S_l " + std::to_string(s_to_sl);
  if (!first.empty()) detail += "; first: " + first;
  return {ok, detail};
}

Outcome ac7() {
  bool ok = true;
  std::string detail;
  {
    const std::size_t n = 1000;
    const LambdaSeq lam = LambdaSeq::cesaro(n);
    for (double c : {0.5, 1.0, 2.0}) {
      std::vector<double> l(n);
      for (std::size_t k = 0; k < n; ++k) l[k] = -c * static_cast<double>(k);
      const ParanormResult g = paranorm_g(GeoSeq(l, "ramp"), 1, lam, OrliczFn::power(1.0), PSeq::constant(1.0), 1e-6);
      const double err = g.g ? std::fabs(g.g->log() - c) : INFINITY;
      ok = ok && err <= 1e-6;
      detail += "c=" + fmt(c) + " err " + fmt(err) + "; ";
    }
  }
  std::mt19937_64 rng(7);
  const OrliczFn fns[] = {OrliczFn::power(1.0), OrliczFn::power(2.0), OrliczFn::pwl({{1.0, 0.5}, {2.0, 2.0}})};
  const double ps[] = {1.0, 1.5, 2.0};
  const char* lambdas[] = {"n", "half", "sqrt"};
  std::size_t violations = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 100 + rng() % 100;
    const unsigned m = 1 + static_cast<unsigned>(rng() % 2);
    const LambdaSeq lam = lambda_by_name(lambdas[rng() % 3], n);
    const OrliczFn& M = fns[rng() % 3];
    const PSeq p = PSeq::constant(ps[rng() % 3]);
    const GeoSeq x(uniform(rng, n, 3.0), "x"), y(uniform(rng, n, 3.0), "y");
    const auto gx = paranorm_g(x, m, lam, M, p, 1e-10), gy = paranorm_g(y, m, lam, M, p, 1e-10);
    const auto gs = paranorm_g(seq_add(x, y), m, lam, M, p, 1e-10);
    if (!gx.g || !gy.g || !gs.g) {
      ++violations;
      continue;
    }
    const double excess = gs.g->log() - gx.g->log() - gy.g->log();
    worst = std::max(worst, excess);
    if (excess > 1e-8) ++violations;
  }
  ok = ok && violations == 0;
  detail += "1e3 subadditivity pairs, " + std::to_string(violations) + " violations, max excess " + fmt(worst);
  return {ok, detail};
}

Outcome ac8() {
  const std::size_t n = 4096;
  const double tol = 1e-2;
  std::mt19937_64 rng(8);
  bool ok = true;
  std::size_t canon_ok = 0, canon_total = 0, bound_fail = 0, members = 0, flips = 0, pairs = 0;
  std::string first;
  for (const char* ln : {"n", "const1", "half"}) {
    const LambdaSeq lam = lambda_by_name(ln, n);
    for (unsigned m = 1; m <= 3; ++m) {
      const GeoSeq canon = dual_canonical(lam, m, n);
      ++canon_total;
      if (u_vlambda_inf(canon, m, lam, tol).verdict == Verdict::yes)
        ++canon_ok;
      else if (first.empty()) {
        const LambdaSeq big = lambda_by_name(ln, 4 * n);
        const double grow = u_vlambda_inf(dual_canonical(big, m, 4 * n), m, big, tol).sup;
        first = "canonical rejected, lambda " + std::string(ln) + " m=" + std::to_string(m) + ", mean sup " +
                fmt(u_vlambda_inf(canon, m, lam, tol).sup) + " at N, " + fmt(grow) + " at 4N";
      }
    }
  }
  const LambdaSeq lam = LambdaSeq::cesaro(n);
  for (int i = 0; i < 100; ++i) {
    const unsigned m = 1 + static_cast<unsigned>(i % 3);
    const double s = std::uniform_real_distribution<double>(1.0, 2.0)(rng);
    std::vector<double> a(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const double w = std::pow(lam.at(k), m);
      const double sign = (rng() & 1) ? 1.0 : -1.0;
      a[k - 1] = sign * std::uniform_real_distribution<double>(0.0, 1.0)(rng) / (w * std::pow(static_cast<double>(k), 1.0 + s));
    }
    const GeoSeq coef(a, "sampled-member");
    if (alpha_dual_membership(coef, lam, m, tol).verdict != Verdict::yes) {
      if (first.empty()) first = "sampled coefficient not accepted as a dual member";
      ok = false;
      continue;
    }
    ++members;
    const std::vector<GeoSeq> fam = {dual_canonical(lam, m, n), u_transform(GeoSeq(uniform(rng, n, 5.0), "noise"), m),
                                     u_transform(generate(LogPolynomial{m}, n), m)};
    for (const GeoSeq& x : fam) {
      ++pairs;
      if (!pairing_bound(coef, x, lam, m).holds()) ++bound_fail;
    }
    flips += alpha_dual_u_equivalence(coef, lam, m, fam, tol).flips;

    // Non-members must flip neither.
    std::vector<double> bad(a);
    for (std::size_t k = 1; k <= n; ++k) bad[k - 1] = 1.0 / std::pow(lam.at(k), m);
    flips += alpha_dual_u_equivalence(GeoSeq(bad, "non-member"), lam, m, fam, tol).flips;
  }
  ok = ok && canon_ok == canon_total && bound_fail == 0 && flips == 0;
  std::string d = "canonical accepted " + std::to_string(canon_ok) + "/" + std::to_string(canon_total) + "; " +
                  std::to_string(members) + " dual members, " + std::to_string(pairs) + " pairings, " +
                  std::to_string(bound_fail) + " bound failures, " + std::to_string(flips) + " u-flips";
  if (!first.empty()) d += "; first: " + first;
  return {ok, d};
}

Outcome ac9() {
  AnalyzeOptions o;
  o.m = 2;
  o.lambda = "half";
  const GeoSeq x = generate(CustomLog{"sin(k)/sqrt(k) + 1/k"}, 5000);
  const std::string a = render(run_analysis(x, o));
  const std::string b = render(run_analysis(x, o));
  return {a == b, "two analyze runs, " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  report("AC1", "isomorphism oracle", ac1);
  report("AC2", "difference operator equivalence", ac2);
  report("AC3", "log-polynomial example", ac3);
  report("AC4", "norm axioms", ac4);
  report("AC5", "inclusion audit", ac5);
  report("AC6", "statistical convergence", ac6);
  report("AC7", "paranorm", ac7);
  report("AC8", "dual suite", ac8);
  report("AC9", "determinism", ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
