#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "geomseq/convergence.hpp"
#include "geomseq/generators.hpp"
#include "oracles.hpp"

using namespace geomseq;

namespace {

std::vector<double> random_logs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

Verdict member(const GeoSeq& x, unsigned m, const LambdaSeq& lam, Space s) {
  return space_membership(x, m, lam, s, 1e-2).verdict;
}

}  // namespace

TEST(WindowedMeans, AgreeWithOracleForEveryLambda) {
  const auto s = random_logs(500, 1);
  for (const LambdaSeq& lam :
       {LambdaSeq::cesaro(500), LambdaSeq::half(500), LambdaSeq::sqrt_growth(500), LambdaSeq::constant_one(500)}) {
    const auto got = windowed_means(s, lam);
    const auto ref = oracle::windowed_means(s, lam.values());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_NEAR(got[i], ref[i], 1e-12) << lam.name() << " n=" << i + 1;
  }
}

TEST(WindowedMeans, NonIntegerLambdaFromFile) {
  const LambdaSeq lam({1.0, 1.5, 2.5, 3.0}, false);
  const std::vector<double> s = {1.0, 2.0, 3.0, 4.0};
  const auto got = windowed_means(s, lam);
  const auto ref = oracle::windowed_means(s, lam.values());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got[i], ref[i], 1e-15);
  EXPECT_THROW(windowed_means(std::vector<double>(5, 1.0), lam), ParameterError);
}

TEST(Membership, ConstantSequenceIsEverywhereMember) {
  const GeoSeq x = generate(GeometricConstant{2.0}, 2000);
  const LambdaSeq lam = LambdaSeq::half(2000);
  for (Space s : {Space::cesaro, Space::abs_cesaro, Space::vallee_poussin, Space::abs_vallee_poussin, Space::bounded}) {
    const MembershipResult r = space_membership(x, 1, lam, s, 1e-2);
    EXPECT_EQ(r.verdict, Verdict::yes) << to_string(s);
    EXPECT_EQ(r.limit.L.log(), 0.0);
  }
}

TEST(Membership, OscillatoryWitnessSeparatesSignedFromAbsolute) {
  const std::size_t n = 10000;
  const LambdaSeq ces = LambdaSeq::cesaro(n);
  for (unsigned m = 1; m <= 3; ++m) {
    const GeoSeq x = generate(LogOscillatory{m}, n);
    EXPECT_EQ(member(x, m, ces, Space::cesaro), Verdict::yes);
    EXPECT_EQ(member(x, m, ces, Space::abs_cesaro), Verdict::no);
  }
}

TEST(Membership, LogPolynomialLimitIsSignedFactorial) {
  const std::size_t n = 10000;
  const LambdaSeq lam = LambdaSeq::cesaro(n);
  for (unsigned m = 1; m <= 3; ++m) {
    const GeoSeq x = generate(LogPolynomial{m}, n);
    const MembershipResult r = space_membership(x, m, lam, Space::abs_cesaro, 1e-2);
    EXPECT_EQ(r.verdict, Verdict::yes);
    EXPECT_NEAR(r.limit.L.log(), ((m % 2) ? -1.0 : 1.0) * oracle::factorial(m), 1e-9);
    EXPECT_EQ(member(x, m - 1, lam, Space::cesaro), Verdict::no);
    EXPECT_EQ(member(x, m - 1, lam, Space::bounded), Verdict::no);
  }
}

TEST(Membership, ShortTruncationIsInconclusive) {
  const GeoSeq x = generate(GeometricConstant{1.0}, 10);
  EXPECT_EQ(member(x, 1, LambdaSeq::cesaro(10), Space::cesaro), Verdict::inconclusive);
}

TEST(Norm, AxiomsAndZero) {
  const std::size_t n = 200;
  const LambdaSeq lam = LambdaSeq::half(n);
  const GeoSeq zero = generate(GeometricConstant{0.0}, n);
  EXPECT_EQ(delta_norm(zero, 2, lam, MeanKind::absolute).log(), 0.0);
  // A non-trivial constant is not the zero of the norm: its head is nonzero.
  EXPECT_GT(delta_norm(generate(GeometricConstant{1.0}, n), 2, lam, MeanKind::absolute).log(), 0.0);

  const GeoSeq x(random_logs(n, 2), "x"), y(random_logs(n, 3), "y");
  for (MeanKind k : {MeanKind::signed_mean, MeanKind::absolute}) {
    const double nx = delta_norm(x, 2, lam, k).log(), ny = delta_norm(y, 2, lam, k).log();
    EXPECT_LE(delta_norm(seq_add(x, y), 2, lam, k).log(), nx + ny + 1e-10);
    EXPECT_NEAR(delta_norm(seq_scale(GeoNum::from_log(-3.0), x), 2, lam, k).log(), 3.0 * nx, 1e-10);
  }
}

TEST(Density, CurveMatchesBruteForceCount) {
  const std::size_t n = 5000;
  const GeoSeq x = generate(SparseSpike{SpikeSet::squares, SpikeHeight::unit, 1.0}, n);
  const LambdaSeq ces = LambdaSeq::cesaro(n);
  const DensityCurve c = stat_density_curve(x, 0, GeoNum::zero(), GeoNum::from_log(0.5), ces);
  for (std::size_t k : {1ul, 10ul, 100ul, 4999ul, 5000ul}) {
    EXPECT_DOUBLE_EQ(c.points[k - 1].second, oracle::natural_density_at(x.logs(), 0.0, 0.5, k));
    EXPECT_DOUBLE_EQ(c.points[k - 1].second, static_cast<double>(oracle::squares_up_to(k)) / k);
  }
  EXPECT_THROW(stat_density_curve(x, 0, GeoNum::zero(), GeoNum::zero(), ces), ParameterError);
}

TEST(Statistical, SpikesOnSquaresConvergeToZero) {
  const std::size_t n = 100000;
  const GeoSeq x = generate(SparseSpike{SpikeSet::squares, SpikeHeight::sqrt_index, 1.0}, n);
  const std::vector<double> eps = {0.1, 0.5, 1.0};
  const StatResult s = stat_convergence(x, 0, LambdaSeq::cesaro(n), eps, 1e-2);
  EXPECT_EQ(s.verdict, Verdict::yes);
  EXPECT_EQ(s.L.log(), 0.0);
  // Unbounded spikes: statistically convergent but not Cesàro-summable.
  EXPECT_EQ(member(x, 0, LambdaSeq::cesaro(n), Space::abs_cesaro), Verdict::no);
}

TEST(Statistical, OscillationIsNotStatisticallyConvergent) {
  const std::size_t n = 10000;
  const std::vector<double> eps = {0.1};
  EXPECT_EQ(stat_convergence(generate(LogOscillatory{0}, n), 0, LambdaSeq::cesaro(n), eps, 1e-2).verdict,
            Verdict::no);
}

TEST(Statistical, SubsetCheckRefusesWithoutRatioBound) {
  const std::size_t n = 4096;
  const std::vector<GeoSeq> fam = {generate(GeometricConstant{1.0}, n)};
  const std::vector<double> eps = {0.5};
  EXPECT_THROW(check_s_subset_slambda(fam, 1, LambdaSeq::sqrt_growth(n), eps, 1e-2), PreconditionError);
  const SubsetReport r = check_s_subset_slambda(fam, 1, LambdaSeq::half(n), eps, 1e-2);
  EXPECT_EQ(r.counterexamples, 0u);
  EXPECT_NEAR(r.observed_min_ratio, 0.5, 1e-3);
}
