#include "indicatrix/constructions.hpp"

#include <set>

namespace indicatrix {

PLFunction tent_train(std::size_t n) {
  if (n == 0) throw InvalidInput("tent_train: n must be >= 1");
  std::vector<Node<Rational>> nodes;
  nodes.reserve(2 * n);
  const Rational width(1, static_cast<long>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Rational left = width * static_cast<long>(k);
    nodes.push_back({left, Rational(0)});
    nodes.push_back({left + width / 2, Rational(1)});
  }
  return PLFunction(std::move(nodes));
}

PLFunction pierpont(const Rational& b, std::size_t K) {
  if (!(b > 1)) throw InvalidInput("pierpont: b must exceed 1");
  if (K < 2) throw InvalidInput("pierpont: K must be >= 2");
  std::vector<Node<Rational>> nodes;
  nodes.reserve(2 * K + 1);
  nodes.push_back({Rational(0), Rational(0)});
  for (std::size_t k = K; k >= 1; --k) {
    const Rational peak(1, static_cast<long>(k));
    const Rational midpoint = (Rational(1, static_cast<long>(k + 1)) + peak) / 2;
    nodes.push_back({midpoint / b, Rational(0)});
    nodes.push_back({peak / b, peak});
  }
  return PLFunction(std::move(nodes));
}

PLFunction terekhin(std::size_t K) {
  if (K == 0) throw InvalidInput("terekhin: K must be >= 1");
  std::vector<Node<Rational>> nodes;
  nodes.reserve(2 * K + 1);
  nodes.push_back({Rational(0), Rational(0)});
  for (std::size_t k = K; k >= 1; --k) {
    const Rational left = Rational(1) / Rational(Integer(1) << k);
    nodes.push_back({left, Rational(0)});
    nodes.push_back({left * 3 / 2, Rational(1)});
  }
  return PLFunction(std::move(nodes));
}

namespace {

void check_lambda(const Rational& lambda) {
  if (!(lambda > 0 && lambda < Rational(1, 3))) throw InvalidInput("fat cantor: lambda must lie in (0, 1/3)");
}

}  // namespace

FatCantorComplement fat_cantor_complement(const FatCantorSpec& spec) {
  check_lambda(spec.lambda);
  if (spec.stage == 0) throw InvalidInput("fat cantor: stage must be >= 1");
  std::vector<Piece<Rational>> survivors{{Rational(0), Rational(1)}};
  std::vector<Arc> removed;
  Rational gap = 1;
  for (std::size_t k = 1; k <= spec.stage; ++k) {
    gap *= spec.lambda;
    std::vector<Piece<Rational>> next;
    next.reserve(2 * survivors.size());
    for (const auto& j : survivors) {
      const Rational mid = (j.lo + j.hi) / 2;
      const Rational lo = mid - gap / 2, hi = mid + gap / 2;
      removed.push_back({lo, gap});
      next.push_back({j.lo, lo});
      next.push_back({hi, j.hi});
    }
    survivors = std::move(next);
  }
  GeometricLengths g{1.0, 2.0, 1.0, to_double(spec.lambda), spec.stage};
  return {CircleOpenSet::normalize(std::move(removed)), LengthFamily::geometric(g)};
}

Rational fat_cantor_survivor_length(const Rational& lambda, std::size_t stage) {
  check_lambda(lambda);
  Rational two_lambda_m = 1;
  for (std::size_t k = 0; k < stage; ++k) two_lambda_m *= 2 * lambda;
  const Rational inner = 1 - lambda * (1 - two_lambda_m) / (1 - 2 * lambda);
  return inner / Rational(Integer(1) << stage);
}

Rational fat_cantor_tail(const Rational& lambda, std::size_t stage) {
  check_lambda(lambda);
  // sum_{k>m} 2^(k-1) lambda^k = (2 lambda)^(m+1) / (2 (1 - 2 lambda))
  Rational p = 1;
  for (std::size_t k = 0; k <= stage; ++k) p *= 2 * lambda;
  return p / (2 * (1 - 2 * lambda));
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? next() : lo + next() % span;
}

SplitMix64 SplitMix64::split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }

namespace {

std::vector<std::uint64_t> distinct_sorted(SplitMix64& rng, std::size_t count, std::uint64_t below) {
  std::set<std::uint64_t> picked;
  while (picked.size() < count) picked.insert(rng.uniform(0, below - 1));
  return {picked.begin(), picked.end()};
}

}  // namespace

CircleOpenSet random_open_set(std::size_t n_arcs, std::uint64_t denom_bound, std::uint64_t seed) {
  if (n_arcs == 0) throw InvalidInput("random_open_set: n_arcs must be >= 1");
  if (denom_bound < 2 * n_arcs) throw InvalidInput("random_open_set: denominator bound too small for the arc count");
  SplitMix64 rng(seed);
  const std::uint64_t d = rng.uniform(2 * n_arcs, denom_bound);
  const auto ends = distinct_sorted(rng, 2 * n_arcs, d);
  const std::uint64_t offset = rng.uniform(0, d - 1);
  std::vector<Arc> arcs;
  arcs.reserve(n_arcs);
  const Integer den(d);
  for (std::size_t i = 0; i < n_arcs; ++i) {
    const std::uint64_t a = ends[2 * i], b = ends[2 * i + 1];
    arcs.push_back({Rational(Integer((a + offset) % d), den), Rational(Integer(b - a), den)});
  }
  auto set = CircleOpenSet::normalize(std::move(arcs));
  if (set.component_count() != n_arcs) throw InvalidInput("random_open_set: generator post-check failed");
  return set;
}

PLFunction random_pl_function(std::size_t n_nodes, std::uint64_t denom_bound, std::uint64_t seed) {
  if (n_nodes < 2) throw InvalidInput("random_pl_function: need at least 2 nodes");
  if (denom_bound < n_nodes) throw InvalidInput("random_pl_function: denominator bound too small");
  SplitMix64 rng(seed);
  const std::uint64_t d = rng.uniform(n_nodes, denom_bound);
  const auto xs = distinct_sorted(rng, n_nodes, d);
  const Integer den(d);
  std::vector<Node<Rational>> nodes;
  nodes.reserve(n_nodes);
  for (auto x : xs) nodes.push_back({Rational(Integer(x), den), Rational(Integer(rng.uniform(0, d)), den)});
  return PLFunction(std::move(nodes));
}

}  // namespace indicatrix
