#ifndef INDICATRIX_CONSTRUCTIONS_HPP
#define INDICATRIX_CONSTRUCTIONS_HPP

#include "indicatrix/circle_set.hpp"
#include "indicatrix/gauge.hpp"
#include "indicatrix/pl_function.hpp"

#include <cstdint>

namespace indicatrix {

/// n congruent unit-height tents over [0,1).
PLFunction tent_train(std::size_t n);

/// Peaks f(1/k) = 1/k with zeros at the midpoints between 1/(k+1) and 1/k,
/// for k <= K, on [0, b] rescaled to the unit period; f = 0 on [0, a_K].
PLFunction pierpont(const Rational& b, std::size_t K);

/// Unit-height tents on [2^-k, 2^(1-k)] for k = 1..K and f = 0 on [0, 2^-K].
PLFunction terekhin(std::size_t K);

struct FatCantorSpec {
  Rational lambda;
  std::size_t stage = 1;
};

struct FatCantorComplement {
  CircleOpenSet set;     // every middle interval removed through the stage
  LengthFamily lengths;  // 2^(k-1) copies of lambda^k, k = 1..stage
};

/// Throws InvalidInput unless 0 < lambda < 1/3 and stage >= 1.
FatCantorComplement fat_cantor_complement(const FatCantorSpec& spec);

/// Length of each of the 2^m closed intervals that survive stage m.
Rational fat_cantor_survivor_length(const Rational& lambda, std::size_t stage);

/// Measure removed after stage m: sum_{k>m} 2^(k-1) lambda^k.
Rational fat_cantor_tail(const Rational& lambda, std::size_t stage);

/// Seeded generator with a fixed bit-level contract: splitmix64, so outputs
/// match on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Independent stream derived from this one.
  SplitMix64 split();

 private:
  std::uint64_t state_;
};

/// n_arcs disjoint, non-touching arcs with endpoints on a random common
/// denominator d <= denom_bound (reduced denominators divide d).
CircleOpenSet random_open_set(std::size_t n_arcs, std::uint64_t denom_bound, std::uint64_t seed);

/// PL function with n_nodes nodes at distinct x = i/d and values j/d.
PLFunction random_pl_function(std::size_t n_nodes, std::uint64_t denom_bound, std::uint64_t seed);

}  // namespace indicatrix

#endif  // INDICATRIX_CONSTRUCTIONS_HPP
