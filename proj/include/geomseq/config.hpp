#pragma once

// Textual parameter specs shared by the CLI and the report: λ, p, Orlicz
// functions and generator families.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "geomseq/duals.hpp"
#include "geomseq/errors.hpp"
#include "geomseq/generators.hpp"
#include "geomseq/io.hpp"
#include "geomseq/orlicz.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

/// n | const1 | half | sqrt | <path>. Builtins are generated with `len` terms.
inline LambdaSeq make_lambda(const std::string& spec, std::size_t len) {
  if (spec == "n") return LambdaSeq::cesaro(len);
  if (spec == "const1") return LambdaSeq::constant_one(len);
  if (spec == "half") return LambdaSeq::half(len);
  if (spec == "sqrt") return LambdaSeq::sqrt_growth(len);
  LambdaSeq lam = read_lambda_file(spec);
  if (lam.size() < len)
    throw ParameterError("lambda file has " + std::to_string(lam.size()) + " terms, need " + std::to_string(len));
  return lam;
}

inline double parse_number(std::string_view s, const std::string& what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw ParameterError("malformed " + what + " \"" + std::string(s) + "\"");
  return v;
}

/// const:<v> | <path>.
inline PSeq make_pseq(const std::string& spec) {
  constexpr std::string_view prefix = "const:";
  if (spec.starts_with(prefix)) return PSeq::constant(parse_number(std::string_view(spec).substr(prefix.size()), "p"));
  return read_exponents_file(spec);
}

/// {"family":"power","q":2} | {"family":"expm1"} | {"family":"pwl","knots":[[t,M],...]}.
inline OrliczFn orlicz_from_json(const nlohmann::json& j) {
  try {
    const std::string family = j.at("family").get<std::string>();
    if (family == "power") return OrliczFn::power(j.value("q", 1.0));
    if (family == "expm1") return OrliczFn::expm1();
    if (family == "pwl") {
      std::vector<std::pair<double, double>> knots;
      for (const auto& k : j.at("knots")) knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
      return OrliczFn::pwl(std::move(knots));
    }
    throw ParameterError("unknown Orlicz family \"" + family + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad Orlicz spec: ") + e.what());
  }
}

inline OrliczFn orlicz_from_string(const std::string& spec) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("Orlicz spec is not JSON: ") + e.what());
  }
  return orlicz_from_json(j);
}

inline nlohmann::json orlicz_to_json(const OrliczFn& M) {
  return std::visit(
      [](const auto& f) -> nlohmann::json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, OrliczFn::Power>) {
          return {{"family", "power"}, {"q", f.q}};
        } else if constexpr (std::is_same_v<T, OrliczFn::Expm1>) {
          return {{"family", "expm1"}};
        } else {
          nlohmann::json knots = nlohmann::json::array();
          for (const auto& [t, v] : f.knots) knots.push_back({t, v});
          return {{"family", "pwl"}, {"knots", knots}};
        }
      },
      M.kind());
}

struct FamilySpec {
  std::string name;
  unsigned power = 1;           // log-polynomial
  double c = 0.0;               // geometric-constant
  unsigned order = 1;           // log-oscillatory
  std::string set = "squares";  // sparse-spike
  std::string height = "unit";
  double amplitude = 1.0;
  std::string expr;             // custom
  unsigned m = 1;               // dual-canonical
  std::string lambda = "n";
};

inline GeoSeq generate_from_spec(const FamilySpec& s, std::size_t n) {
  if (s.name == "log-polynomial") return generate(LogPolynomial{s.power}, n);
  if (s.name == "geometric-constant") return generate(GeometricConstant{s.c}, n);
  if (s.name == "log-oscillatory") return generate(LogOscillatory{s.order}, n);
  if (s.name == "sparse-spike") {
    SparseSpike f;
    if (s.set == "squares")
      f.set = SpikeSet::squares;
    else if (s.set == "cubes")
      f.set = SpikeSet::cubes;
    else if (s.set == "powers2")
      f.set = SpikeSet::powers_of_two;
    else
      throw ParameterError("unknown spike set \"" + s.set + "\"");
    if (s.height == "unit")
      f.height = SpikeHeight::unit;
    else if (s.height == "sqrt")
      f.height = SpikeHeight::sqrt_index;
    else
      throw ParameterError("unknown spike height \"" + s.height + "\"");
    f.amplitude = s.amplitude;
    return generate(f, n);
  }
  if (s.name == "custom") {
    if (s.expr.empty()) throw ParameterError("custom family needs --expr");
    return generate(CustomLog{s.expr}, n);
  }
  if (s.name == "dual-canonical") {
    if (s.lambda != "n" && s.lambda != "const1" && s.lambda != "half" && s.lambda != "sqrt")
      throw ParameterError("dual-canonical accepts builtin lambdas only");
    return dual_canonical(make_lambda(s.lambda, n), s.m, n);
  }
  throw ParameterError("unknown family \"" + s.name + "\"");
}

}  // namespace geomseq
