#include "indicatrix/circle_set.hpp"
#include "indicatrix/constructions.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace indicatrix;

namespace {

Rational q(long a, long b) { return Rational(a, b); }

CircleOpenSet family_member(SplitMix64& rng) {
  const std::size_t n = rng.uniform(1, 6);
  return random_open_set(n, 64, rng.next());
}

}  // namespace

TEST_CASE("normalize merges overlaps and wraps") {
  const auto a = CircleOpenSet::normalize({{q(1, 10), q(2, 10)}, {q(25, 100), q(2, 10)}});
  REQUIRE(a.component_count() == 1);
  CHECK(a.arcs()[0] == Arc{q(1, 10), q(35, 100)});

  const auto w = CircleOpenSet::normalize({{q(9, 10), q(2, 10)}, {q(5, 100), q(1, 10)}});
  REQUIRE(w.component_count() == 1);
  CHECK(w.arcs()[0] == Arc{q(9, 10), q(25, 100)});
  for (int i = 0; i < 10000; ++i) {
    const Rational x(i, 10000);
    const bool expected = (x > q(9, 10)) || (x < q(15, 100));
    CHECK(w.contains(x) == expected);
  }

  const auto e = CircleOpenSet::normalize({});
  CHECK(e.empty());
  CHECK(e.measure() == 0);
}

TEST_CASE("touching arcs stay separate components") {
  const auto s = CircleOpenSet::normalize({{q(0, 1), q(1, 4)}, {q(1, 4), q(1, 4)}});
  CHECK(s.component_count() == 2);
  CHECK(s.measure() == q(1, 2));
}

TEST_CASE("normalize rejects degenerate arcs") {
  CHECK_THROWS_AS(CircleOpenSet::normalize({{q(0, 1), q(0, 1)}}), InvalidInput);
  CHECK_THROWS_AS(CircleOpenSet::normalize({{q(0, 1), q(3, 2)}}), InvalidInput);
  CHECK_THROWS_AS(CircleOpenSet::normalize({{q(0, 1), q(-1, 4)}}), InvalidInput);
}

TEST_CASE("full circle") {
  const auto f = CircleOpenSet::normalize({{q(1, 3), q(1, 1)}});
  CHECK(f.full());
  CHECK(tau(f, q(1, 7)) == 0);
  CHECK(kh_deficit(f, q(1, 7)) == 0);
  const auto g = CircleOpenSet::normalize({{q(0, 1), q(3, 4)}, {q(1, 2), q(3, 4)}});
  CHECK(g.full());
}

TEST_CASE("measure and translate") {
  CHECK(measure(CircleOpenSet::normalize({{q(0, 1), q(1, 2)}})) == q(1, 2));
  const auto e = CircleOpenSet::normalize({{q(0, 1), q(1, 4)}});
  const auto t = translate(e, q(-1, 2));
  REQUIRE(t.component_count() == 1);
  CHECK(t.arcs()[0].start == q(1, 2));
  CHECK(translate(e, Rational(0)) == e);

  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto s = family_member(rng);
    const Rational h(static_cast<long>(rng.uniform(0, 200)) - 100, 97);
    CHECK(translate(translate(s, h), Rational(-h)) == s);
    CHECK(translate(s, h).measure() == s.measure());
  }
}

TEST_CASE("tau worked values") {
  CHECK(tau(CircleOpenSet::normalize({{q(0, 1), q(1, 2)}}), q(1, 8)) == q(1, 4));
  const auto two = CircleOpenSet::normalize({{q(0, 1), q(1, 4)}, {q(1, 2), q(1, 4)}});
  CHECK(tau(two, q(1, 8)) == q(1, 2));
  CHECK(tau(two, Rational(0)) == 0);
  CHECK(tau(CircleOpenSet{}, q(1, 3)) == 0);
}

TEST_CASE("tau agrees with indicator comparison on the refinement grid") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const auto s = family_member(rng);
    for (int k = 0; k < 5; ++k) {
      const Rational h(static_cast<long>(rng.uniform(0, 128)), 128);
      const Rational t = tau(s, h);
      REQUIRE(t == oracle::tau(s, h));
      CHECK(t == tau(s, Rational(-h)));
      CHECK(t >= 0);
      CHECK(t <= 2 * min_of(s.measure(), Rational(1 - s.measure())));
      CHECK(t <= 2 * h * static_cast<long>(s.component_count()));
    }
  }
}

TEST_CASE("tau is rotation invariant") {
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto s = family_member(rng);
    const Rational c(static_cast<long>(rng.uniform(0, 999)), 1000);
    const Rational h(static_cast<long>(rng.uniform(1, 63)), 64);
    CHECK(tau(s, h) == tau(translate(s, c), h));
  }
}

TEST_CASE("exact results do not depend on the denominator used to write endpoints") {
  const auto a = parse_circle_set("1/8+1/4, 3/4+1/8");
  const auto b = parse_circle_set("3/24+6/24, 18/24+3/24");
  CHECK(a == b);
  CHECK(tau(a, q(1, 16)) == tau(b, q(2, 32)));
}

TEST_CASE("tau is linear with slope 2N below the smallest length and gap") {
  const auto s = parse_circle_set("0/1+1/8, 1/4+1/8, 1/2+1/4");
  for (int k = 1; k <= 8; ++k) {
    const Rational h(k, 64);
    CHECK(tau(s, h) == 2 * h * 3);
  }
}

TEST_CASE("tau_sup worked values and domain") {
  const auto half = CircleOpenSet::normalize({{q(0, 1), q(1, 2)}});
  CHECK(tau_sup(half, q(1, 4)) == q(1, 2));
  const auto two = CircleOpenSet::normalize({{q(0, 1), q(1, 4)}, {q(1, 2), q(1, 4)}});
  CHECK(tau_sup(two, q(1, 2)) == 1);
  CHECK_THROWS_AS(tau_sup(half, Rational(0)), InvalidInput);
  CHECK_THROWS_AS(tau_sup(half, q(3, 5)), InvalidInput);
  CHECK(tau_sup(CircleOpenSet{}, q(1, 4)) == 0);
}

TEST_CASE("tau_sup matches dense-grid maximization") {
  SplitMix64 rng(99);
  const double step = 1e-5;
  for (int i = 0; i < 40; ++i) {
    const auto s = family_member(rng);
    const Rational t(static_cast<long>(rng.uniform(1, 32)), 64);
    const Rational exact = tau_sup(s, t);
    const double dense = oracle::dense_tau_sup(s, to_double(t), step);
    CHECK(to_double(exact) >= dense - 1e-12);
    CHECK(to_double(exact) <= dense + 2 * step * static_cast<double>(s.component_count()) + 1e-12);
    CHECK(exact >= tau(s, t));
  }
}

TEST_CASE("tau_sup is non-decreasing in t") {
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto s = family_member(rng);
    Rational prev(0);
    for (int k = 1; k <= 16; ++k) {
      const Rational cur = tau_sup(s, Rational(k, 32));
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("kh_deficit against a direct neighborhood construction") {
  const auto half = CircleOpenSet::normalize({{q(0, 1), q(1, 2)}});
  CHECK(kh_deficit(half, q(1, 8)) == q(1, 4));
  CHECK(kh_deficit(half, Rational(0)) == 0);
  CHECK(kh_deficit(half, q(1, 4)) == q(1, 2));
  CHECK(kh_deficit(CircleOpenSet{}, q(1, 4)) == 0);

  SplitMix64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto s = family_member(rng);
    const Rational h(static_cast<long>(rng.uniform(0, 64)), 128);
    CHECK(kh_deficit(s, h) == oracle::kh_deficit(s, h));
    CHECK(escape_measure(s, h) == oracle::escape(s, h));
  }
}

TEST_CASE("tau can exceed |K(h) \\ K|; only the escape set is contained in it") {
  // A short arc moved by more than its length leaves both halves of the
  // disagreement set outside E, and the K-side half is not in K(h) \ K.
  const auto s = CircleOpenSet::normalize({{q(0, 1), q(1, 10)}});
  const Rational h(1, 5);
  CHECK(tau(s, h) == q(1, 5));
  CHECK(kh_deficit(s, h) == q(1, 10));
  CHECK(tau(s, h) > kh_deficit(s, h));
  CHECK(escape_measure(s, h) == q(1, 10));

  SplitMix64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto e = family_member(rng);
    const Rational h2(static_cast<long>(rng.uniform(0, 64)), 128);
    CHECK(escape_measure(e, h2) <= kh_deficit(e, h2));
    CHECK(tau(e, h2) <= 2 * kh_deficit(e, h2));
    CHECK(tau(e, h2) <= kh_deficit(e, h2) + (1 - e.measure()));
  }
}

TEST_CASE("set literal parsing") {
  const auto s = parse_circle_set("0/1+1/2");
  CHECK(format_circle_set(s) == "0+1/2");
  CHECK(parse_circle_set("").empty());
  CHECK(format_circle_set(parse_circle_set("1/2+1/4, 0+1/8")) == "0+1/8, 1/2+1/4");
  CHECK_THROWS_AS(parse_circle_set("0.5+1/4"), ParseError);
  CHECK_THROWS_AS(parse_circle_set("1+1/4"), ParseError);
  try {
    parse_circle_set("0/1+1/2, 1/4+x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 13);
  }
}

TEST_CASE("double and rational instantiations agree") {
  SplitMix64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto s = family_member(rng);
    const Rational h(static_cast<long>(rng.uniform(0, 64)), 128);
    CHECK(tau(s.cast<double>(), to_double(h)) == doctest::Approx(to_double(tau(s, h))).epsilon(1e-12));
  }
}
