#pragma once

// Desk-scale stand-ins for asymptotic statements. A truncation can never
// certify a limit; these helpers fix reproducible protocols for "tends to",
// "is bounded" and "is finitely summable" on N terms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geomseq/errors.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Fewer tail points than this makes a limit verdict inconclusive.
inline constexpr std::size_t kMinTailPoints = 8;
/// Growth tests need at least this many points.
inline constexpr std::size_t kMinGrowthPoints = 16;

/// Number of trailing points covered by `fraction` of `len` (at least one).
inline std::size_t tail_count(std::size_t len, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw ParameterError("tail fraction must lie in (0, 1]");
  const auto c = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(len)));
  return std::clamp<std::size_t>(c, 1, std::max<std::size_t>(len, 1));
}

inline double median(std::vector<double> v) {
  if (v.empty()) throw ParameterError("median of an empty set");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return lo + (hi - lo) / 2.0;
}

inline double tail_median(std::span<const double> v, double fraction) {
  const std::size_t c = tail_count(v.size(), fraction);
  return median(std::vector<double>(v.end() - static_cast<std::ptrdiff_t>(c), v.end()));
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

/// Bounded on the truncation: the sup over all N points does not exceed the
/// sup over the first half by more than a relative `tol`. Scale-free, so a
/// linearly growing series is flagged whatever its magnitude.
inline Verdict bounded_on_truncation(std::span<const double> v, double tol) {
  if (v.size() < kMinGrowthPoints) return Verdict::inconclusive;
  const double full = max_abs(v);
  const double half = max_abs(v.first((v.size() + 1) / 2));
  if (!std::isfinite(full)) return Verdict::no;
  return full <= half * (1.0 + tol) ? Verdict::yes : Verdict::no;
}

/// (1/λ_n) Σ_{i ∈ I_n} s_i for n = 1..s.size().
inline std::vector<double> windowed_means(std::span<const double> s, const LambdaSeq& lam) {
  if (lam.size() < s.size())
    throw ParameterError("lambda sequence (" + std::to_string(lam.size()) + " terms) is shorter than the series (" +
                         std::to_string(s.size()) + " terms)");
  std::vector<long double> prefix(s.size() + 1, 0.0L);
  for (std::size_t i = 0; i < s.size(); ++i) prefix[i + 1] = prefix[i] + s[i];
  std::vector<double> out(s.size());
  for (std::size_t n = 1; n <= s.size(); ++n) {
    const Window w = window(lam, n);
    out[n - 1] = static_cast<double>((prefix[w.last] - prefix[w.first - 1]) / lam.at(n));
  }
  return out;
}

/// Partial sums of non-negative terms are "finite" when the last dyadic
/// increment S_N - S_{N/2} is at most `tol` times the mass accumulated after
/// the first checkpoint. Only terms with index > `head` are read, so changing
/// the first `head` terms never changes the verdict.
struct TailTest {
  Verdict verdict = Verdict::inconclusive;
  double last_increment = 0.0;
  double tail_mass = 0.0;
  std::vector<std::size_t> checkpoints;  // ascending, 1-based term counts
};

inline TailTest dyadic_tail_test(std::span<const double> terms, std::size_t head, double tol) {
  TailTest r;
  for (std::size_t c = terms.size(); c > head && c >= 2; c /= 2) r.checkpoints.push_back(c);
  std::reverse(r.checkpoints.begin(), r.checkpoints.end());
  if (r.checkpoints.size() < 3) return r;

  // Sums start after the first checkpoint, so the head never enters the arithmetic.
  const std::size_t base = r.checkpoints.front();
  const std::size_t n = terms.size();
  const std::size_t prev = r.checkpoints[r.checkpoints.size() - 2];
  long double mass = 0.0L, last = 0.0L;
  for (std::size_t k = base; k < n; ++k) {
    mass += terms[k];
    if (k >= prev) last += terms[k];
  }
  r.tail_mass = static_cast<double>(mass);
  r.last_increment = static_cast<double>(last);
  if (!std::isfinite(r.tail_mass)) {
    r.verdict = Verdict::no;
    return r;
  }
  r.verdict = r.last_increment <= tol * r.tail_mass ? Verdict::yes : Verdict::no;
  return r;
}

}  // namespace geomseq
