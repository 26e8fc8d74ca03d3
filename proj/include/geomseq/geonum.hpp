#pragma once

// Arithmetic over the geometric reals R(G) = {e^x : x in R}.
//
// A GeoNum is stored by its natural logarithm. The raw positive value only
// appears at I/O boundaries; sequences such as e^{k^m} would overflow any
// direct representation long before their logs become inconvenient.
//
//   a (+) b = a*b            log: la + lb
//   a (-) b = a/b            log: la - lb
//   a (*) b = e^{ln a ln b}  log: la * lb
//   a (/) b = e^{ln a/ln b}  log: la / lb
//   |a|^G   = e^{|ln a|}     log: |la|

#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <string>

#include "geomseq/errors.hpp"

namespace geomseq {

class GeoNum {
 public:
  /// Geometric zero 0_G (value 1).
  constexpr GeoNum() noexcept = default;

  static GeoNum from_log(double log) {
    if (!std::isfinite(log)) throw RangeError("geometric number with non-finite log");
    return GeoNum(log);
  }

  static GeoNum from_value(double value) {
    if (!std::isfinite(value) || value <= 0.0)
      throw DomainError("R(G) holds strictly positive finite values, got " + std::to_string(value));
    return GeoNum(std::log(value));
  }

  static constexpr GeoNum zero() noexcept { return GeoNum(0.0); }
  /// Geometric one 1_G = e.
  static constexpr GeoNum one() noexcept { return GeoNum(1.0); }

  constexpr double log() const noexcept { return log_; }
  double value() const noexcept { return std::exp(log_); }

  friend constexpr auto operator<=>(const GeoNum&, const GeoNum&) = default;

 private:
  constexpr explicit GeoNum(double log) noexcept : log_(log) {}

  double log_ = 0.0;
};

inline constexpr double kDefaultLogTolerance = 1e-12;

inline bool approx_equal(GeoNum a, GeoNum b, double tol = kDefaultLogTolerance) {
  return std::fabs(a.log() - b.log()) <= tol;
}

inline GeoNum geo_add(GeoNum a, GeoNum b) { return GeoNum::from_log(a.log() + b.log()); }

inline GeoNum geo_sub(GeoNum a, GeoNum b) { return GeoNum::from_log(a.log() - b.log()); }

inline GeoNum geo_mul(GeoNum a, GeoNum b) { return GeoNum::from_log(a.log() * b.log()); }

inline GeoNum geo_div(GeoNum a, GeoNum b) {
  if (b.log() == 0.0) throw DomainError("geometric division by 0_G");
  return GeoNum::from_log(a.log() / b.log());
}

inline GeoNum geo_abs(GeoNum a) { return GeoNum::from_log(std::fabs(a.log())); }

/// ⊖a, the additive inverse (value 1/a).
inline GeoNum geo_neg(GeoNum a) { return GeoNum::from_log(-a.log()); }

/// a^{n_G}: the n-fold ⊙ product; a^{0_G} = e.
inline GeoNum geo_int_pow(GeoNum a, unsigned n) {
  if (n == 0) return GeoNum::one();
  GeoNum r = a;
  for (unsigned i = 1; i < n; ++i) r = geo_mul(r, a);
  return r;
}

/// Neumaier-compensated sum of doubles.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Geometric sum: the product of values, i.e. the (compensated) sum of logs.
inline GeoNum geo_sum(std::span<const GeoNum> xs) {
  CompensatedSum s;
  for (GeoNum x : xs) s.add(x.log());
  return GeoNum::from_log(s.value());
}

}  // namespace geomseq
