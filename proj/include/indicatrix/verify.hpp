#ifndef INDICATRIX_VERIFY_HPP
#define INDICATRIX_VERIFY_HPP

#include "indicatrix/bounds.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indicatrix {

struct VerifyOptions {
  std::size_t trials = 0;  // 0 keeps each suite's own default
  std::uint64_t seed = 7;
  std::vector<std::size_t> resolutions{512, 1024};
};

/// sharpness, lemma33, banach, fcs, prop32, terekhin, pierpont, gs, plane,
/// theorem34, theorem23, jensen.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidInput on an unknown name.
std::vector<BoundReport> run_suite(std::string_view name, const VerifyOptions& options);

/// 30 dyadic rationals lambda^(1 + 9i/30), i = 0..29, in (lambda^10, lambda].
std::vector<Rational> fcs_h_grid(const Rational& lambda);

/// Slope of log tau against log h on the stage-12 fat Cantor complement,
/// sampled at h = lambda^j, j = 2..10.
SlopeFit fcs_exponent_fit(const Rational& lambda);

/// Witness with the smallest slack across all reports.
const Witness* worst_witness(const std::vector<BoundReport>& reports);

}  // namespace indicatrix

#endif  // INDICATRIX_VERIFY_HPP
