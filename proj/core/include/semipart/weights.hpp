#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semipart {

/// Exact rational with a small denominator, used for the generating
/// function weights.
struct Rat {
  long num = 0;
  long den = 1;

  constexpr Rat() = default;
  constexpr Rat(long n, long d) : num(n), den(d) {}

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class ConfigName { p2, p2_distinct, p2_sharp, custom };

/// Weights (lambda, mu) of the combined generating function
/// exp(lambda*Phi_P2 + mu*Phi_Psq). A part m carries the effective
/// exponent e(m) = lambda*w2(m) + mu*[m is a prime square], which must be
/// a nonnegative integer for exact counting.
struct WeightConfig {
  Rat lambda{1, 2};
  Rat mu{1, 2};
  ConfigName name = ConfigName::p2;

  // Effective exponent of a non-square part (w2 = 2) and a square part.
  int exp_nonsquare() const;
  int exp_square() const;

  double lambda_real() const { return lambda.to_double(); }
  double mu_real() const { return mu.to_double(); }
  const char* token() const;

  static WeightConfig p2() { return {{1, 2}, {1, 2}, ConfigName::p2}; }
  static WeightConfig p2_distinct() { return {{1, 2}, {-1, 2}, ConfigName::p2_distinct}; }
  static WeightConfig p2_sharp() { return {{1, 1}, {0, 1}, ConfigName::p2_sharp}; }
  static WeightConfig custom(Rat lambda, Rat mu);

  /// Parses the CLI tokens p2 | p2ne | p2sharp.
  static WeightConfig from_token(const std::string& token);
};

inline int checked_exponent(long num, long den, const char* what, std::uint64_t part) {
  if (den == 0) throw std::domain_error("WeightConfig: zero denominator");
  if (num % den != 0 || num / den < 0)
    throw std::domain_error(std::string("WeightConfig: effective exponent of ") + what +
                            " part " + std::to_string(part) + " is not a nonnegative integer");
  return static_cast<int>(num / den);
}

inline int WeightConfig::exp_nonsquare() const {
  // e(m) = 2*lambda for the smallest non-square part, m = 6.
  return checked_exponent(2 * lambda.num * 1, lambda.den, "non-square", 6);
}

inline int WeightConfig::exp_square() const {
  // e(m) = lambda + mu for the smallest square part, m = 4.
  return checked_exponent(lambda.num * mu.den + mu.num * lambda.den, lambda.den * mu.den,
                          "square", 4);
}

inline WeightConfig WeightConfig::custom(Rat lambda, Rat mu) {
  WeightConfig cfg{lambda, mu, ConfigName::custom};
  cfg.exp_nonsquare();
  cfg.exp_square();
  return cfg;
}

inline const char* WeightConfig::token() const {
  switch (name) {
    case ConfigName::p2: return "p2";
    case ConfigName::p2_distinct: return "p2ne";
    case ConfigName::p2_sharp: return "p2sharp";
    default: return "custom";
  }
}

inline WeightConfig WeightConfig::from_token(const std::string& token) {
  if (token == "p2") return p2();
  if (token == "p2ne") return p2_distinct();
  if (token == "p2sharp") return p2_sharp();
  throw std::domain_error("unknown part set '" + token + "' (expected p2|p2ne|p2sharp)");
}

}  // namespace semipart
