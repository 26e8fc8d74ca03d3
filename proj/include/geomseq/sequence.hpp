#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geomseq/errors.hpp"
#include "geomseq/geonum.hpp"

namespace geomseq {

/// Finite truncation x_1..x_N of a geometric sequence. Indices are 1-based
/// in the public accessors; `logs()` exposes the 0-based storage.
class GeoSeq {
 public:
  GeoSeq(std::vector<double> logs, std::string source) : logs_(std::move(logs)), source_(std::move(source)) {
    if (logs_.empty()) throw ParameterError("a geometric sequence needs at least one term");
    for (std::size_t i = 0; i < logs_.size(); ++i)
      if (!std::isfinite(logs_[i]))
        throw RangeError("term " + std::to_string(i + 1) + " has a non-finite log");
  }

  static GeoSeq from_terms(std::span<const GeoNum> terms, std::string source) {
    std::vector<double> logs;
    logs.reserve(terms.size());
    for (GeoNum t : terms) logs.push_back(t.log());
    return GeoSeq(std::move(logs), std::move(source));
  }

  std::size_t size() const noexcept { return logs_.size(); }
  GeoNum at(std::size_t i) const {
    if (i == 0 || i > logs_.size()) throw ParameterError("sequence index out of range");
    return GeoNum::from_log(logs_[i - 1]);
  }
  std::span<const double> logs() const noexcept { return logs_; }
  const std::string& source() const noexcept { return source_; }

  friend bool operator==(const GeoSeq& a, const GeoSeq& b) { return a.logs_ == b.logs_; }

 private:
  std::vector<double> logs_;
  std::string source_;
};

/// Termwise x ⊕ y.
inline GeoSeq seq_add(const GeoSeq& x, const GeoSeq& y) {
  if (x.size() != y.size()) throw ParameterError("sequence lengths differ");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.logs()[i] + y.logs()[i];
  return GeoSeq(std::move(out), "(" + x.source() + ") + (" + y.source() + ")");
}

/// Scalar α ⊙ x.
inline GeoSeq seq_scale(GeoNum alpha, const GeoSeq& x) {
  std::vector<double> out(x.logs().begin(), x.logs().end());
  for (double& v : out) v *= alpha.log();
  return GeoSeq(std::move(out), x.source());
}

/// Integer index interval [first, last], 1-based, inclusive.
struct Window {
  std::size_t first;
  std::size_t last;
  std::size_t size() const noexcept { return last - first + 1; }
  bool contains(std::size_t k) const noexcept { return first <= k && k <= last; }
};

/// λ = (λ_n): λ_1 = 1, non-decreasing, λ_{n+1} <= λ_n + 1.
class LambdaSeq {
 public:
  /// Validates and throws ParameterError naming the first offending index.
  LambdaSeq(std::vector<double> values, bool unbounded, std::string name = "file")
      : values_(std::move(values)), unbounded_(unbounded), name_(std::move(name)) {
    if (values_.empty()) throw ParameterError("empty lambda sequence");
    if (auto bad = first_violation(values_))
      throw ParameterError("lambda sequence invalid at index " + std::to_string(*bad));
  }

  /// Returns the 1-based index of the first violated constraint, if any.
  static std::optional<std::size_t> first_violation(std::span<const double> v) {
    if (v.empty()) return std::nullopt;
    if (v[0] != 1.0) return 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || v[i] < v[i - 1] || v[i] > v[i - 1] + 1.0) return i + 1;
    }
    return std::nullopt;
  }

  /// λ_n = n: windows are the full prefix and the means are Cesàro means.
  static LambdaSeq cesaro(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
    return LambdaSeq(std::move(v), true, "n");
  }

  static LambdaSeq constant_one(std::size_t n) { return LambdaSeq(std::vector<double>(n, 1.0), false, "const1"); }

  /// λ_n = ceil(n/2); λ_n / n >= 1/2.
  static LambdaSeq half(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::ceil(static_cast<double>(i + 1) / 2.0);
    return LambdaSeq(std::move(v), true, "half");
  }

  /// λ_n = ceil(sqrt(n)); liminf λ_n / n = 0.
  static LambdaSeq sqrt_growth(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::ceil(std::sqrt(static_cast<double>(i + 1)));
    return LambdaSeq(std::move(v), true, "sqrt");
  }

  std::size_t size() const noexcept { return values_.size(); }
  /// λ_n, 1-based.
  double at(std::size_t n) const {
    if (n == 0 || n > values_.size()) throw ParameterError("lambda index out of range");
    return values_[n - 1];
  }
  std::span<const double> values() const noexcept { return values_; }
  bool unbounded() const noexcept { return unbounded_; }
  const std::string& name() const noexcept { return name_; }

  bool is_cesaro() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != static_cast<double>(i + 1)) return false;
    return true;
  }

 private:
  std::vector<double> values_;
  bool unbounded_;
  std::string name_;
};

/// I_n = [ceil(n - λ_n + 1), n], clipped to start at 1.
inline Window window(const LambdaSeq& lam, std::size_t n) {
  if (n == 0 || n > lam.size()) throw ParameterError("window index out of range");
  const double start = std::ceil(static_cast<double>(n) - lam.at(n) + 1.0);
  const std::size_t first = start < 1.0 ? 1 : static_cast<std::size_t>(start);
  return {std::min(first, n), n};
}

/// Exponent sequence p = (p_k), strictly positive and bounded.
class PSeq {
 public:
  static PSeq constant(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("exponent must be positive and finite");
    PSeq s;
    s.constant_ = p;
    return s;
  }

  explicit PSeq(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ParameterError("empty exponent sequence");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!(values_[i] > 0.0) || !std::isfinite(values_[i]))
        throw ParameterError("exponent p_" + std::to_string(i + 1) + " must be positive and finite");
  }

  /// p_k, 1-based. A finite list repeats its last value past its end.
  double at(std::size_t k) const {
    if (constant_) return *constant_;
    if (k == 0) throw ParameterError("exponent index out of range");
    return values_[std::min(k, values_.size()) - 1];
  }

  bool is_constant() const noexcept {
    if (constant_) return true;
    return std::all_of(values_.begin(), values_.end(), [&](double v) { return v == values_.front(); });
  }
  std::optional<double> constant_value() const noexcept {
    if (constant_) return constant_;
    if (is_constant()) return values_.front();
    return std::nullopt;
  }

  double sup() const noexcept {
    if (constant_) return *constant_;
    return *std::max_element(values_.begin(), values_.end());
  }
  /// H = max(1, sup p_k).
  double H() const noexcept { return std::max(1.0, sup()); }

  std::string describe() const {
    if (constant_) return "const:" + std::to_string(*constant_);
    return "list[" + std::to_string(values_.size()) + "]";
  }

 private:
  PSeq() = default;

  std::optional<double> constant_;
  std::vector<double> values_;
};

}  // namespace geomseq
