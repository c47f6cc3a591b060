#ifndef INDICATRIX_GAUGE_HPP
#define INDICATRIX_GAUGE_HPP

#include "indicatrix/circle_set.hpp"
#include "indicatrix/scalar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace indicatrix {

enum class GaugeFamily { constant, power, logpow, mixed, reciprocal };

/**
 * A gauge phi from one of the built-in families:
 *   constant    phi = 1
 *   power       phi = t^-alpha,                      0 <= alpha <= 1
 *   logpow      phi = (log 1/t)^alpha,               0 <= alpha <= 1
 *   mixed       phi = t^-alpha exp(gamma |log t|^beta), 0 <= alpha, beta < 1, gamma > 0
 *   reciprocal  phi = 1/t
 * `c` marks the interval (0, 1/c) on which t*phi(t) is non-decreasing,
 * concave and bounded.
 */
class GaugeFunction {
 public:
  static GaugeFunction constant();
  static GaugeFunction power(double alpha);
  static GaugeFunction logpow(double alpha);
  static GaugeFunction mixed(double alpha, double beta, double gamma);
  static GaugeFunction reciprocal();

  GaugeFamily family() const noexcept { return family_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double c() const noexcept { return c_; }

  /// Replaces c; must be >= the family's smallest admissible value.
  GaugeFunction with_c(double c) const;

  double operator()(double t) const;

  std::string literal() const;

 private:
  GaugeFunction(GaugeFamily family, double alpha, double beta, double gamma, double c)
      : family_(family), alpha_(alpha), beta_(beta), gamma_(gamma), c_(c) {}

  GaugeFamily family_;
  double alpha_ = 0, beta_ = 0, gamma_ = 0;
  double c_ = 1;
};

struct PhiViolation {
  std::string condition;  // "non-increasing", "t*phi non-decreasing", "concavity", "bounded"
  double t0 = 0;
  double t1 = 0;
};

struct PhiReport {
  bool is_member = true;
  std::vector<PhiViolation> witnesses;
};

/// Falsification check of the class conditions on a geometric grid in (0, 1/c).
PhiReport validate_phi(const std::function<double(double)>& phi, double c, std::size_t grid_size,
                       double tolerance = 1e-12);
PhiReport validate_phi(const GaugeFunction& phi, std::size_t grid_size, double tolerance = 1e-12);

/// m * rho^(k-1) copies of length a * r^k for k = 1..stages (stages empty = infinite).
struct GeometricLengths {
  double count_base = 1;
  double count_ratio = 1;
  double length_base = 1;
  double length_ratio = 0.5;
  std::optional<std::size_t> stages;
};

class LengthFamily {
 public:
  static LengthFamily explicit_lengths(std::vector<Rational> lengths);
  static LengthFamily geometric(GeometricLengths g);
  static LengthFamily of(const CircleOpenSet& set);

  bool is_explicit() const noexcept { return std::holds_alternative<std::vector<Rational>>(data_); }
  const std::vector<Rational>& lengths() const { return std::get<std::vector<Rational>>(data_); }
  const GeometricLengths& geometric_params() const { return std::get<GeometricLengths>(data_); }

  /// Sum of all lengths (+inf when it diverges).
  double total_measure() const;

 private:
  explicit LengthFamily(std::variant<std::vector<Rational>, GeometricLengths> d) : data_(std::move(d)) {}
  std::variant<std::vector<Rational>, GeometricLengths> data_;
};

/// sum_k l_k phi(l_k); +infinity when the series diverges.
double gauge_sum(const LengthFamily& lengths, const GaugeFunction& phi);

/// |E| phi(|E| / N(E)). Throws InvalidInput on an empty set.
double jensen_bound(const CircleOpenSet& set, const GaugeFunction& phi);

struct IndexEstimate {
  double value = 0;
  bool truncated = false;  // finite family: the index is 0 by definition
};

/// inf{beta : sum l_k^beta < inf}.
IndexEstimate bt_index(const LengthFamily& lengths);

/// `power:0.5`, `logpow:1`, `mixed:0.3,0.5,1.0`, `const`, `recip`, optional `@c`.
GaugeFunction parse_gauge(std::string_view text);
/// `geom:m,rho,a,r[,stages]` or `list:1/2,1/8,...`.
LengthFamily parse_length_family(std::string_view text);

}  // namespace indicatrix

#endif  // INDICATRIX_GAUGE_HPP
