#ifndef INDICATRIX_BOUNDS_HPP
#define INDICATRIX_BOUNDS_HPP

#include "indicatrix/circle_set.hpp"
#include "indicatrix/gauge.hpp"
#include "indicatrix/pl_function.hpp"

#include <functional>
#include <string>
#include <vector>

namespace indicatrix {

struct Witness {
  std::string parameter;
  double quantity = 0;
  double bound = 0;
};

/// quantity <= bound, checked over a parameter sweep. `witnesses` holds
/// every evaluated point; `quantity`/`bound` are taken at the worst slack.
struct BoundReport {
  std::string name;
  double quantity = 0;
  double bound = 0;
  double slack = 0;
  std::vector<Witness> witnesses;
  bool exact = false;  // compared as rationals; tolerance does not apply

  bool passed(double tolerance) const { return slack >= (exact ? 0.0 : -tolerance); }
};

/// Builds a report from witnesses, keeping the one with the smallest slack.
BoundReport summarize(std::string name, std::vector<Witness> witnesses, bool exact = false);

/// 2 sum_{l_k >= h} h + 2 sum_{l_k < h} l_k over the components of E.
Rational lemma33_bound(const CircleOpenSet& set, const Rational& h);

/// Thrown when a gauge sum diverges; `witness` names the diverging family.
class DivergentSum : public InvalidInput {
 public:
  DivergentSum(const std::string& witness)
      : InvalidInput("gauge sum diverges for " + witness), witness_(witness) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// (2 / phi(h)) (c h phi(h) + sum_k l_k phi(l_k)), for 0 < h < 1/c.
double theorem34_bound(const LengthFamily& lengths, const GaugeFunction& phi, double h);

struct CertifiedValue {
  double value = 0;
  double error_bound = 0;
};

/**
 * integral over y of tau_sup(E_y, t)^(1/p).
 *
 * Midpoint rule on `y_nodes` cells per indicatrix strip. Inside a strip the
 * endpoints of E_y move linearly in y, so y -> tau_sup(E_y, t) is Lipschitz
 * with constant 2 * sum |dx/dy| over the endpoints; error_bound is the
 * resulting worst case of the p-th root over each cell.
 */
CertifiedValue prop32_rhs(const PLFunction& f, const Rational& t, double p, std::size_t y_nodes = 32);

/// integral over y in [0,1] of tau(h, E_y), exact. tau(h, E_y) is linear in
/// y between the levels where two endpoints of E_y sit h apart (mod 1).
Rational integrated_tau(const PLFunction& f, const Rational& h);

/// integral over y of sum_k l_{y,k} phi(l_{y,k}), Gauss-Legendre per strip.
double gauge_level_integral(const PLFunction& f, const GaugeFunction& phi);

struct Envelope {
  double lower = 0;
  double upper = 0;
};

/// Two-sided bound on tau(h, E) for the complement of the fat Cantor set,
/// 0 < lambda < 1/3 and 0 < h <= lambda.
Envelope fcs_envelope(const Rational& lambda, double h);

struct SlopeFit {
  double slope = 0;
  double r2 = 0;
};

/// Least-squares slope of log(value) against log(h); needs >= 4 samples.
SlopeFit scaling_exponent(const std::vector<std::pair<double, double>>& samples);

/// Monotone-tail check on a ratio sequence split into head (first two
/// thirds) and tail. Passes when the tail never exceeds the head maximum, or
/// when its mean growth per step is at most half that of the head, so the
/// sequence is levelling off. A ratio growing like |log t| has constant
/// steps and fails.
BoundReport bounded_tail(std::string name, const std::vector<std::pair<double, double>>& t_and_ratio);

/// omega(f,t)_q / rate(t) over t = 2^-j, j in [j_lo, j_hi], using the
/// certified upper value of the modulus.
BoundReport rate_check(std::string name, const PLFunction& f, double q, const std::function<double(double)>& rate,
                       int j_lo, int j_hi);

enum class GsVariant { log, sqrt_log, power_p };

/// Checks the conclusion of the implication selected by `variant` on
/// t = 2^-j, j = 3..16. For power_p the check is the direct inequality
/// omega(f,t)_p <= t^(1/p) integral n^(1/p) dy.
BoundReport gs_implication_check(const PLFunction& f, GsVariant variant, double p = 2.0);

/// omega(f,t)_1 phi(t) <= 2 (phi(1/c) + integral sum l phi(l) dy) for t = 2^-j < 1/c.
BoundReport theorem23_check(const PLFunction& f, const GaugeFunction& phi);

}  // namespace indicatrix

#endif  // INDICATRIX_BOUNDS_HPP
