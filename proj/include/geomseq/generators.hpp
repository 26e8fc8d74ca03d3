#pragma once

// Canonical sequence families. Every family is defined by a closed-form
// formula for log x_k, k = 1..N.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "geomseq/errors.hpp"
#include "geomseq/expr.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

/// log x_k = k^power (the x = e^{k^m} family).
struct LogPolynomial {
  unsigned power = 1;
};

/// log x_k = c for all k.
struct GeometricConstant {
  double c_log = 0.0;
};

/// Chosen so that the order-`order` difference of the logs is (-1)^k.
struct LogOscillatory {
  unsigned order = 0;
};

enum class SpikeSet { squares, cubes, powers_of_two };
enum class SpikeHeight { unit, sqrt_index };

/// log x_k = height(k) on the index set, 0 elsewhere.
struct SparseSpike {
  SpikeSet set = SpikeSet::squares;
  SpikeHeight height = SpikeHeight::unit;
  double amplitude = 1.0;
};

/// log x_k given by an expression in k.
struct CustomLog {
  std::string expr;
};

using Family = std::variant<LogPolynomial, GeometricConstant, LogOscillatory, SparseSpike, CustomLog>;

inline bool in_spike_set(SpikeSet set, std::uint64_t k) {
  switch (set) {
    case SpikeSet::squares: {
      auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(k))));
      return r * r == k;
    }
    case SpikeSet::cubes: {
      auto r = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(k))));
      return r * r * r == k;
    }
    case SpikeSet::powers_of_two:
      return k != 0 && (k & (k - 1)) == 0;
  }
  return false;
}

inline std::string spike_set_name(SpikeSet s) {
  switch (s) {
    case SpikeSet::squares: return "squares";
    case SpikeSet::cubes: return "cubes";
    case SpikeSet::powers_of_two: return "powers2";
  }
  return "?";
}

inline std::string describe(const Family& f) {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, LogPolynomial>)
          os << "log-polynomial(m=" << fam.power << ")";
        else if constexpr (std::is_same_v<T, GeometricConstant>)
          os << "geometric-constant(c=" << fam.c_log << ")";
        else if constexpr (std::is_same_v<T, LogOscillatory>)
          os << "log-oscillatory(m=" << fam.order << ")";
        else if constexpr (std::is_same_v<T, SparseSpike>)
          os << "sparse-spike(set=" << spike_set_name(fam.set)
             << ",height=" << (fam.height == SpikeHeight::unit ? "unit" : "sqrt") << ",amp=" << fam.amplitude << ")";
        else
          os << "custom-log(" << fam.expr << ")";
      },
      f);
  return os.str();
}

inline GeoSeq generate(const Family& family, std::size_t n) {
  if (n == 0) throw ParameterError("generated length must be at least 1");
  std::vector<double> logs(n);
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, LogPolynomial>) {
          for (std::size_t k = 1; k <= n; ++k) {
            double v = 1.0;
            for (unsigned j = 0; j < fam.power; ++j) v *= static_cast<double>(k);
            logs[k - 1] = v;
          }
        } else if constexpr (std::is_same_v<T, GeometricConstant>) {
          std::fill(logs.begin(), logs.end(), fam.c_log);
        } else if constexpr (std::is_same_v<T, LogOscillatory>) {
          // Δ of (-1)^k / 2^j is (-1)^k / 2^{j-1}, so dividing by 2^m is exact.
          const double scale = std::ldexp(1.0, -static_cast<int>(fam.order));
          for (std::size_t k = 1; k <= n; ++k) logs[k - 1] = (k % 2 == 0 ? 1.0 : -1.0) * scale;
        } else if constexpr (std::is_same_v<T, SparseSpike>) {
          for (std::size_t k = 1; k <= n; ++k) {
            if (!in_spike_set(fam.set, k)) continue;
            const double h = fam.height == SpikeHeight::unit ? 1.0 : std::sqrt(static_cast<double>(k));
            logs[k - 1] = fam.amplitude * h;
          }
        } else {
          const LogExpression e(fam.expr);
          for (std::size_t k = 1; k <= n; ++k) {
            const double v = e(static_cast<double>(k));
            if (!std::isfinite(v))
              throw ParameterError("expression \"" + fam.expr + "\" is not finite at k=" + std::to_string(k));
            logs[k - 1] = v;
          }
        }
      },
      family);
  return GeoSeq(std::move(logs), describe(family));
}

}  // namespace geomseq
