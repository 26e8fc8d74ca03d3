#pragma once

// The m-th order geometric difference operator
//
//   Δ_G^0 x = x,   Δ_G^m x_i = Δ_G^{m-1} x_i ⊖ Δ_G^{m-1} x_{i+1},
//
// which on logs is the classical forward difference with the sign
// convention d_i = l_i - l_{i+1}. Equivalently
//
//   log Δ_G^m x_k = Σ_{ν=0}^{m} (-1)^ν C(m,ν) log x_{k+ν}.
//
// Both routes are exposed so each can serve as the other's oracle.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geomseq/errors.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

inline constexpr unsigned kMaxBinomialOrder = 60;

namespace detail {

inline void require_order(std::size_t len, unsigned m) {
  if (len < static_cast<std::size_t>(m) + 1)
    throw ParameterError("sequence of length " + std::to_string(len) + " is too short for difference order " +
                         std::to_string(m));
}

inline void require_finite(std::span<const double> v) {
  for (double d : v)
    if (!std::isfinite(d)) throw RangeError("difference overflowed");
}

}  // namespace detail

/// Order-m differences of a log vector, by repeated first differences.
inline std::vector<double> diff_logs(std::span<const double> logs, unsigned m) {
  detail::require_order(logs.size(), m);
  std::vector<double> d(logs.begin(), logs.end());
  for (unsigned step = 0; step < m; ++step) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
#ifdef GEOMSEQ_FAULT_FLIP_DELTA_SIGN
      d[i] = d[i + 1] - d[i];
#else
      d[i] = d[i] - d[i + 1];
#endif
    }
    d.pop_back();
  }
  detail::require_finite(d);
  return d;
}

inline GeoSeq diff_recursive(const GeoSeq& x, unsigned m) {
  return GeoSeq(diff_logs(x.logs(), m), "D^" + std::to_string(m) + "(" + x.source() + ")");
}

/// Exact C(m, ν) for m <= 60.
inline std::vector<std::uint64_t> binomial_row(unsigned m) {
  if (m > kMaxBinomialOrder) throw RangeError("binomial coefficients beyond order 60 are not exact");
  std::vector<std::uint64_t> row(m + 1, 1);
  for (unsigned v = 1; v < m; ++v) {
    // C(m,v) = C(m,v-1) * (m-v+1) / v. Splitting prev = q*v + r keeps every
    // intermediate below 2^64; v divides r*num because it divides prev*num.
    const std::uint64_t prev = row[v - 1];
    const std::uint64_t num = m - v + 1;
    row[v] = prev / v * num + prev % v * num / v;
  }
  return row;
}

inline GeoSeq diff_binomial(const GeoSeq& x, unsigned m) {
  detail::require_order(x.size(), m);
  const std::vector<std::uint64_t> c = binomial_row(m);
  const std::span<const double> l = x.logs();
  std::vector<double> d(x.size() - m);
  for (std::size_t k = 0; k < d.size(); ++k) {
    long double acc = 0.0L;
    for (unsigned v = 0; v <= m; ++v) {
      const long double term = static_cast<long double>(c[v]) * l[k + v];
      acc += (v % 2 == 0) ? term : -term;
    }
    d[k] = static_cast<double>(acc);
  }
  detail::require_finite(d);
  return GeoSeq(std::move(d), "D^" + std::to_string(m) + "(" + x.source() + ")");
}

}  // namespace geomseq
