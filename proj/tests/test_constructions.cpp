#include "indicatrix/constructions.hpp"

#include <doctest.h>

#include <cmath>

using namespace indicatrix;

TEST_CASE("tent train") {
  for (std::size_t n : {1, 2, 5}) {
    const auto f = tent_train(n);
    CHECK(total_variation(f) == Rational(static_cast<long>(2 * n)));
    CHECK(banach_integral(f) == Rational(static_cast<long>(2 * n)));
    CHECK(superlevel_set(f, Rational(1, 3)).component_count() == n);
  }
  CHECK_THROWS_AS(tent_train(0), InvalidInput);
}

TEST_CASE("pierpont nodes and values") {
  const auto f = pierpont(Rational(2), 10);
  for (long k = 1; k <= 10; ++k) CHECK(f(Rational(1, k) / 2) == Rational(1, k));
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f.nodes()[i - 1].x < f.nodes()[i].x);
  // each strip (1/(k+1), 1/k) contributes k^alpha / (k (k+1)) to the integral of N^alpha
  for (const auto& s : indicatrix_profile(f).strips) {
    const Rational width = s.y_hi - s.y_lo;
    if (s.N >= 1 && s.N < 10) CHECK(width == Rational(1, static_cast<long>(s.N * (s.N + 1))));
  }
  CHECK_THROWS_AS(pierpont(Rational(1), 5), InvalidInput);
  CHECK_THROWS_AS(pierpont(Rational(2), 1), InvalidInput);
  const auto big = pierpont(Rational(3, 2), 1000);
  for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big.nodes()[i - 1].x < big.nodes()[i].x);
}

TEST_CASE("pierpont variation grows like the harmonic sum") {
  Rational previous(0);
  for (std::size_t K : {5, 10, 20, 40}) {
    const Rational v = banach_integral(pierpont(Rational(2), K));
    CHECK(v == total_variation(pierpont(Rational(2), K)));
    CHECK(v > previous);
    previous = v;
  }
}

TEST_CASE("terekhin level sets") {
  const std::size_t K = 8;
  const auto f = terekhin(K);
  for (const Rational& y : {Rational(1, 5), Rational(1, 2), Rational(7, 8)}) {
    const auto set = superlevel_set(f, y);
    CHECK(set.component_count() == K);
    std::vector<Rational> expected;
    for (std::size_t k = 1; k <= K; ++k) expected.push_back((1 - y) / Rational(Integer(1) << k));
    auto got = set.lengths();
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
  const auto big = terekhin(60);
  for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big.nodes()[i - 1].x < big.nodes()[i].x);
}

TEST_CASE("fat Cantor complement") {
  const auto s2 = fat_cantor_complement({Rational(1, 4), 2});
  REQUIRE(s2.set.component_count() == 3);
  auto lengths = s2.set.lengths();
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<Rational>{Rational(1, 16), Rational(1, 16), Rational(1, 4)});
  CHECK(s2.set.measure() == Rational(3, 8));

  for (const Rational& lambda : {Rational(1, 4), Rational(1, 5), Rational(3, 10)}) {
    for (std::size_t m = 1; m <= 10; ++m) {
      const auto built = fat_cantor_complement({lambda, m});
      const Rational survivors = fat_cantor_survivor_length(lambda, m) * Rational(Integer(1) << m);
      CHECK(built.set.measure() + survivors == 1);
      CHECK(built.set.measure() + fat_cantor_tail(lambda, m) == lambda / (1 - 2 * lambda));
    }
  }
  CHECK_THROWS_AS(fat_cantor_complement({Rational(1, 3), 2}), InvalidInput);
  CHECK_THROWS_AS(fat_cantor_complement({Rational(1, 4), 0}), InvalidInput);
}

TEST_CASE("fat Cantor survivor length matches the stage formula") {
  const Rational lambda(1, 5);
  for (std::size_t m = 1; m <= 6; ++m) {
    Rational removed(0), power(1);
    for (std::size_t j = 1; j <= m; ++j) {
      power *= lambda;
      removed += Rational(Integer(1) << (j - 1)) * power;
    }
    CHECK(fat_cantor_survivor_length(lambda, m) == (1 - removed) / Rational(Integer(1) << m));
  }
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("random generators are reproducible and valid") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto a = random_open_set(1 + seed % 6, 64, seed);
    CHECK(a == random_open_set(1 + seed % 6, 64, seed));
    CHECK(a.component_count() == 1 + seed % 6);
    CHECK(a.measure() < 1);
    for (const auto& arc : a.arcs()) {
      CHECK(denominator(arc.start) <= 64);
      CHECK(denominator(arc.length) <= 64);
    }
  }
  CHECK_THROWS_AS(random_open_set(10, 8, 1), InvalidInput);
  const auto f = random_pl_function(8, 50, 3);
  CHECK(f == random_pl_function(8, 50, 3));
  CHECK(f.size() == 8);
}
