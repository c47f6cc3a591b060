#include "indicatrix/verify.hpp"

#include "indicatrix/constructions.hpp"
#include "indicatrix/parallel.hpp"
#include "indicatrix/plane_incidence.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace indicatrix {

namespace {

std::size_t trials_or(const VerifyOptions& o, std::size_t fallback) { return o.trials ? o.trials : fallback; }

Rational dyadic(int j) { return Rational(Integer(1), Integer(1) << j); }

std::string describe(const CircleOpenSet& set, const Rational& h) {
  return "E={" + format_circle_set(set) + "} h=" + format_rational(h);
}

// Smallest arc length or gap between consecutive arcs.
Rational min_length_or_gap(const CircleOpenSet& set) {
  const auto& arcs = set.arcs();
  Rational m = arcs.front().length;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    const auto& b = arcs[(i + 1) % arcs.size()];
    m = min_of(m, a.length);
    m = min_of(m, wrap01(b.start - a.start - a.length));
  }
  return m;
}

Witness exact_excess(std::string parameter, const Rational& quantity, const Rational& bound) {
  return {std::move(parameter), to_double(quantity - bound), 0.0};
}

// Random set family used by the exact suites: up to 6 arcs, denominators <= 64.
CircleOpenSet family_set(SplitMix64& rng) {
  const std::size_t n = rng.uniform(1, 6);
  return random_open_set(n, 64, rng.next());
}

std::vector<BoundReport> sharpness(const VerifyOptions& o) {
  SplitMix64 rng(o.seed);
  std::vector<Witness> w;
  for (std::size_t trial = 0; trial < trials_or(o, 200); ++trial) {
    const auto set = family_set(rng);
    const Rational m = min_length_or_gap(set);
    const Rational n(static_cast<long>(set.component_count()));
    for (int k = 1; k <= 8; ++k) {
      const Rational h = m * k / 8;
      const Rational gap = abs_of(tau(set, h) - 2 * h * n);
      w.push_back(exact_excess(describe(set, h), gap, Rational(0)));
    }
  }
  return {summarize("sharpness: tau = 2hN below min length and gap", std::move(w), true)};
}

std::vector<BoundReport> lemma33(const VerifyOptions& o) {
  SplitMix64 rng(o.seed);
  std::vector<Witness> lemma, escape, doubled;
  for (std::size_t trial = 0; trial < trials_or(o, 1000); ++trial) {
    const auto set = family_set(rng);
    for (int k = 1; k <= 20; ++k) {
      const Rational h(k, 40);
      const Rational t = tau(set, h);
      const auto p = describe(set, h);
      lemma.push_back(exact_excess(p, t, lemma33_bound(set, h)));
      escape.push_back(exact_excess(p, escape_measure(set, h), kh_deficit(set, h)));
      doubled.push_back(exact_excess(p, t, 2 * kh_deficit(set, h)));
    }
  }
  return {summarize("lemma33: tau <= 2 sum min(l, h)", std::move(lemma), true),
          summarize("inclusion: |escape set| <= |K(h)\\K|", std::move(escape), true),
          summarize("inclusion: tau <= 2 |K(h)\\K|", std::move(doubled), true)};
}

std::vector<BoundReport> banach(const VerifyOptions& o) {
  SplitMix64 rng(o.seed);
  std::vector<Witness> w;
  for (std::size_t trial = 0; trial < trials_or(o, 500); ++trial) {
    const std::size_t nodes = rng.uniform(2, 20);
    const auto f = random_pl_function(nodes, 97, rng.next());
    w.push_back(exact_excess(format_pl_function(f), abs_of(banach_integral(f) - total_variation(f)), Rational(0)));
  }
  for (std::size_t K = 2; K <= 100; ++K) {
    const auto f = pierpont(Rational(2), K);
    w.push_back(exact_excess("pierpont:2," + std::to_string(K), abs_of(banach_integral(f) - total_variation(f)),
                             Rational(0)));
  }
  return {summarize("banach: integral of n(y) = V(f)", std::move(w), true)};
}

}  // namespace

// Sample points for the envelope check: 30 dyadic rationals in (lambda^10, lambda].
std::vector<Rational> fcs_h_grid(const Rational& lambda) {
  std::vector<Rational> hs;
  const double lam = to_double(lambda);
  for (int i = 0; i < 30; ++i) {
    Rational h = dyadic_approximation(std::pow(lam, 1.0 + 9.0 * i / 30.0));
    if (h > lambda) h = lambda;
    hs.push_back(h);
  }
  return hs;
}

SlopeFit fcs_exponent_fit(const Rational& lambda) {
  const auto built = fat_cantor_complement({lambda, 12});
  std::vector<std::pair<double, double>> samples(9);
  parallel_for(samples.size(), [&](std::size_t i) {
    Rational h(1);
    for (std::size_t k = 0; k < i + 2; ++k) h *= lambda;
    samples[i] = {to_double(h), to_double(tau(built.set, h))};
  });
  return scaling_exponent(samples);
}

namespace {

BoundReport fcs_exponent_report(const Rational& lambda) {
  const auto fit = fcs_exponent_fit(lambda);
  const double target = 1.0 - std::log(2.0) / std::log(1.0 / to_double(lambda));
  return summarize("fcs lambda=" + format_rational(lambda) + ": fitted exponent within 0.05 of " + format_real(target),
                   {{"slope=" + format_real(fit.slope), std::abs(fit.slope - target), 0.05}});
}

std::vector<BoundReport> fcs(const VerifyOptions&) {
  constexpr std::size_t stage = 12;
  std::vector<BoundReport> out;
  for (const Rational& lambda : {Rational(1, 4), Rational(1, 5), Rational(3, 10)}) {
    const auto built = fat_cantor_complement({lambda, stage});
    const double tail = to_double(fat_cantor_tail(lambda, stage));
    const auto hs = fcs_h_grid(lambda);
    std::vector<double> taus(hs.size());
    parallel_for(hs.size(), [&](std::size_t i) { taus[i] = to_double(tau(built.set, hs[i])); });
    std::vector<Witness> upper, lower;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const double h = to_double(hs[i]);
      const auto env = fcs_envelope(lambda, h);
      const std::string p = "lambda=" + format_rational(lambda) + " h=" + format_rational(hs[i]);
      upper.push_back({p, taus[i], env.upper});
      lower.push_back({p, env.lower - tail, taus[i]});
    }
    const std::string tag = "fcs lambda=" + format_rational(lambda);
    out.push_back(summarize(tag + ": tau <= upper envelope", std::move(upper)));
    out.push_back(summarize(tag + ": lower envelope - tail <= tau", std::move(lower)));
  }
  out.push_back(fcs_exponent_report(Rational(1, 4)));
  return out;
}

std::vector<BoundReport> prop32(const VerifyOptions&) {
  const std::vector<std::pair<std::string, PLFunction>> fs{
      {"tent:3", tent_train(3)}, {"pierpont:2,30", pierpont(Rational(2), 30)}, {"terekhin:12", terekhin(12)}};
  std::vector<BoundReport> out;
  for (const auto& [name, f] : fs) {
    for (double p : {1.0, 2.0}) {
      std::vector<Witness> w;
      for (int j = 3; j <= 10; ++j) {
        const Rational t = dyadic(j);
        const auto om = modulus(f, t, p);
        const auto rhs = prop32_rhs(f, t, p);
        w.push_back({"t=" + format_rational(t), om.value, rhs.value + rhs.error_bound + om.error_bound});
      }
      out.push_back(summarize("prop32 " + name + " p=" + format_real(p), std::move(w)));
    }
  }
  return out;
}

std::vector<BoundReport> terekhin_rate(const VerifyOptions&) {
  const auto f = terekhin(16);
  std::vector<std::pair<double, double>> ratios(12);
  parallel_for(ratios.size(), [&](std::size_t i) {
    const Rational h = dyadic(static_cast<int>(i) + 3);
    const double hd = to_double(h);
    ratios[i] = {hd, to_double(integrated_tau(f, h)) / (hd * std::abs(std::log(hd)))};
  });
  return {bounded_tail("terekhin:16 integral of tau / (h |log h|)", ratios)};
}

std::vector<BoundReport> pierpont_rate(const VerifyOptions&) {
  return {rate_check("pierpont:2,50 omega_1 / t^0.9", pierpont(Rational(2), 50), 1.0,
                     [](double t) { return std::pow(t, 0.9); }, 3, 14)};
}

std::vector<BoundReport> gs(const VerifyOptions&) {
  std::vector<BoundReport> out;
  const std::vector<std::pair<std::string, PLFunction>> fs{{"tent:4", tent_train(4)},
                                                           {"pierpont:2,50", pierpont(Rational(2), 50)}};
  for (const auto& [name, f] : fs) {
    for (auto variant : {GsVariant::log, GsVariant::sqrt_log, GsVariant::power_p}) {
      auto r = gs_implication_check(f, variant, 2.0);
      r.name = name + " " + r.name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BoundReport> plane(const VerifyOptions& o) {
  std::vector<BoundReport> out;
  const std::vector<Eigen::Vector2d> dirs{{1, 0}, {0, 1}, {1, 1}, {3, 4}};
  // Small enough that curvature terms are negligible, at least two cells at R = 512.
  const std::vector<double> fit_h{1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
  for (std::size_t res : o.resolutions) {
    for (const std::string shape : {"disk:0.25", "square:0.5", "cantor:1/4"}) {
      const auto set = raster_shape(shape, res);
      const double cell = 1.0 / static_cast<double>(res);
      std::vector<Witness> chain;
      for (double h : {1.0 / 32, 1.0 / 16, 1.0 / 8}) {
        const auto kh = kh_cells(set, h + cell);
        const auto gamma = gamma_cells(set, h + cell);
        const bool kh_in_gamma = is_subset(kh, gamma);
        for (const auto& v : dirs) {
          const auto dis = disagreement_cells(set, h, v);
          const auto esc = escape_cells(set, h, v);
          const auto outside = [](const RasterSet::Grid& a, const RasterSet::Grid& b) {
            return static_cast<double>(((a != 0) && (b == 0)).count());
          };
          const std::string p = shape + " R=" + std::to_string(res) + " h=" + format_real(h) + " v=(" +
                                format_real(v.x()) + "," + format_real(v.y()) + ")";
          chain.push_back({p + " escape in K(h)\\K", outside(esc, kh), 0});
          chain.push_back({p + " disagreement in Gamma(h)", outside(dis, gamma), 0});
          chain.push_back({p + " K(h)\\K in Gamma(h)", kh_in_gamma ? 0.0 : 1.0, 0});
        }
      }
      out.push_back(summarize("plane chain " + shape + " R=" + std::to_string(res), std::move(chain)));
      const auto d = dimension_estimates(set, fit_h);
      std::vector<Witness> dims{{"d_X=" + format_real(d.d_X) + " d_B=" + format_real(d.d_B), d.d_X, d.d_B + 0.05}};
      if (shape.rfind("cantor", 0) == 0) dims.push_back({"d_X=" + format_real(d.d_X), std::abs(d.d_X - 1.5), 0.1});
      out.push_back(summarize("plane dimensions " + shape + " R=" + std::to_string(res), std::move(dims)));
    }
  }
  return out;
}

std::vector<BoundReport> theorem34(const VerifyOptions& o) {
  SplitMix64 rng(o.seed);
  const std::vector<GaugeFunction> phis{GaugeFunction::constant(), GaugeFunction::power(0.5),
                                        GaugeFunction::power(0.4), GaugeFunction::logpow(1.0),
                                        GaugeFunction::logpow(0.5)};
  std::vector<Witness> w;
  for (std::size_t trial = 0; trial < trials_or(o, 200); ++trial) {
    const auto set = family_set(rng);
    const auto lengths = LengthFamily::of(set);
    for (const auto& phi : phis) {
      for (int k = 1; k <= 10; ++k) {
        const Rational h(k, 40);
        if (!(to_double(h) < 1.0 / phi.c())) continue;
        w.push_back({describe(set, h) + " phi=" + phi.literal(), to_double(lemma33_bound(set, h)),
                     theorem34_bound(lengths, phi, to_double(h))});
      }
    }
  }
  return {summarize("theorem34: lemma33 bound <= gauge bound", std::move(w))};
}

std::vector<BoundReport> theorem23(const VerifyOptions&) {
  std::vector<BoundReport> out;
  const std::vector<std::pair<std::string, PLFunction>> fs{
      {"pierpont:2,30", pierpont(Rational(2), 30)}, {"terekhin:12", terekhin(12)}, {"tent:3", tent_train(3)}};
  for (const auto& [name, f] : fs) {
    for (double alpha : {1.0, 0.5}) {
      auto r = theorem23_check(f, GaugeFunction::logpow(alpha));
      r.name = name + " " + r.name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BoundReport> jensen(const VerifyOptions& o) {
  SplitMix64 rng(o.seed);
  const std::vector<GaugeFunction> phis{GaugeFunction::power(0.5), GaugeFunction::logpow(1.0)};
  std::vector<Witness> w;
  for (std::size_t trial = 0; trial < trials_or(o, 1000); ++trial) {
    const auto set = family_set(rng);
    const auto lengths = LengthFamily::of(set);
    for (const auto& phi : phis) {
      bool inside = true;
      for (const auto& a : set.arcs()) inside = inside && to_double(a.length) < 1.0 / phi.c();
      if (!inside) continue;
      w.push_back({"E={" + format_circle_set(set) + "} phi=" + phi.literal(), gauge_sum(lengths, phi),
                   jensen_bound(set, phi)});
    }
  }
  return {summarize("jensen: gauge sum <= |E| phi(|E|/N)", std::move(w))};
}

using Suite = std::function<std::vector<BoundReport>(const VerifyOptions&)>;

const std::map<std::string, Suite, std::less<>>& registry() {
  static const std::map<std::string, Suite, std::less<>> suites{
      {"sharpness", sharpness}, {"lemma33", lemma33},          {"banach", banach},
      {"fcs", fcs},             {"prop32", prop32},            {"terekhin", terekhin_rate},
      {"pierpont", pierpont_rate}, {"gs", gs},                 {"plane", plane},
      {"theorem34", theorem34}, {"theorem23", theorem23},      {"jensen", jensen}};
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sharpness", "lemma33",  "banach", "fcs",       "prop32",    "terekhin",
                                              "pierpont",  "gs",       "plane",  "theorem34", "theorem23", "jensen"};
  return names;
}

std::vector<BoundReport> run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<BoundReport> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, options);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidInput("unknown suite: " + std::string(name));
  return it->second(options);
}

const Witness* worst_witness(const std::vector<BoundReport>& reports) {
  const Witness* worst = nullptr;
  for (const auto& r : reports)
    for (const auto& w : r.witnesses)
      if (!worst || w.bound - w.quantity < worst->bound - worst->quantity) worst = &w;
  return worst;
}

}  // namespace indicatrix
