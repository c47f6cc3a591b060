#include "indicatrix/gauge.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace indicatrix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_real(std::string_view text, std::size_t offset) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1), ++offset;
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ParseError("expected a real number", offset + static_cast<std::size_t>(end - text.data()));
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// Smallest c for which t phi(t) is non-decreasing and concave on (0, 1/c).
// For the mixed family, t phi(t) = exp(psi(L)) with L = log 1/t and
// psi(L) = -(1-alpha) L + gamma L^beta; both conditions reduce to
// -psi'(L) >= 0, i.e. L >= (gamma beta / (1-alpha))^(1/(1-beta)).
double admissible_c(GaugeFamily family, double alpha, double beta, double gamma) {
  switch (family) {
    case GaugeFamily::constant:
    case GaugeFamily::power:
    case GaugeFamily::reciprocal:
      return 1.0;
    case GaugeFamily::logpow:
      return std::exp(1.0);
    case GaugeFamily::mixed: {
      const double knee = std::pow(gamma * beta / (1.0 - alpha), 1.0 / (1.0 - beta));
      return std::max(std::exp(1.0), std::exp(knee));
    }
  }
  return 1.0;
}

}  // namespace

GaugeFunction GaugeFunction::constant() { return {GaugeFamily::constant, 0, 0, 0, 1}; }

GaugeFunction GaugeFunction::power(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) throw InvalidInput("power gauge: alpha must lie in [0,1]");
  return {GaugeFamily::power, alpha, 0, 0, 1};
}

GaugeFunction GaugeFunction::logpow(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) throw InvalidInput("logpow gauge: alpha must lie in [0,1]");
  return {GaugeFamily::logpow, alpha, 0, 0, std::exp(1.0)};
}

GaugeFunction GaugeFunction::mixed(double alpha, double beta, double gamma) {
  if (!(alpha >= 0 && alpha < 1 && beta >= 0 && beta < 1 && gamma > 0))
    throw InvalidInput("mixed gauge: need 0 <= alpha, beta < 1 and gamma > 0");
  return {GaugeFamily::mixed, alpha, beta, gamma, admissible_c(GaugeFamily::mixed, alpha, beta, gamma)};
}

GaugeFunction GaugeFunction::reciprocal() { return {GaugeFamily::reciprocal, 1, 0, 0, 1}; }

GaugeFunction GaugeFunction::with_c(double c) const {
  if (!(c >= admissible_c(family_, alpha_, beta_, gamma_)))
    throw InvalidInput("gauge: c below the admissible value for this family");
  GaugeFunction g = *this;
  g.c_ = c;
  return g;
}

double GaugeFunction::operator()(double t) const {
  switch (family_) {
    case GaugeFamily::constant:
      return 1.0;
    case GaugeFamily::power:
      return std::pow(t, -alpha_);
    case GaugeFamily::logpow:
      return std::pow(std::max(0.0, -std::log(t)), alpha_);
    case GaugeFamily::mixed:
      return std::pow(t, -alpha_) * std::exp(gamma_ * std::pow(std::abs(std::log(t)), beta_));
    case GaugeFamily::reciprocal:
      return 1.0 / t;
  }
  return 0.0;
}

std::string GaugeFunction::literal() const {
  switch (family_) {
    case GaugeFamily::constant:
      return "const";
    case GaugeFamily::power:
      return "power:" + format_real(alpha_);
    case GaugeFamily::logpow:
      return "logpow:" + format_real(alpha_);
    case GaugeFamily::mixed:
      return "mixed:" + format_real(alpha_) + "," + format_real(beta_) + "," + format_real(gamma_);
    case GaugeFamily::reciprocal:
      return "recip";
  }
  return {};
}

PhiReport validate_phi(const std::function<double(double)>& phi, double c, std::size_t grid_size,
                       double tolerance) {
  if (grid_size < 3) throw InvalidInput("validate_phi: grid_size must be >= 3");
  const double top = 1.0 / c;
  const double span = std::log(1e12) / static_cast<double>(grid_size);
  std::vector<double> ts(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i)
    ts[i] = top * std::exp(-span * static_cast<double>(grid_size - i));  // ascending, all < 1/c
  auto u = [&](double t) { return t * phi(t); };
  auto slack = [&](double v) { return tolerance * std::max(1.0, std::abs(v)); };

  PhiReport report;
  auto flag = [&](const char* what, double a, double b) {
    report.is_member = false;
    report.witnesses.push_back({what, a, b});
  };
  for (double t : ts)
    if (!std::isfinite(u(t)) || !std::isfinite(phi(t))) flag("bounded", t, t);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double a = ts[i], b = ts[i + 1];
    if (phi(b) > phi(a) + slack(phi(a))) flag("non-increasing", a, b);
    if (u(b) < u(a) - slack(u(a))) flag("t*phi non-decreasing", a, b);
    for (std::size_t k = 1; k <= 4 && i + k < ts.size(); ++k) {
      const double e = ts[i + k];
      const double mid = u(0.5 * (a + e));
      const double chord = 0.5 * (u(a) + u(e));
      if (mid < chord - slack(chord)) flag("concavity", a, e);
    }
  }
  return report;
}

PhiReport validate_phi(const GaugeFunction& phi, std::size_t grid_size, double tolerance) {
  return validate_phi([&](double t) { return phi(t); }, phi.c(), grid_size, tolerance);
}

LengthFamily LengthFamily::explicit_lengths(std::vector<Rational> lengths) {
  for (const auto& l : lengths)
    if (l <= 0 || l > 1) throw InvalidInput("lengths must lie in (0,1]");
  return LengthFamily(std::move(lengths));
}

LengthFamily LengthFamily::geometric(GeometricLengths g) {
  if (!(g.count_base >= 1 && g.count_ratio >= 1 && g.length_base > 0 && g.length_ratio > 0 &&
        g.length_ratio < 1 && g.length_base * g.length_ratio <= 1))
    throw InvalidInput("geometric family: need m >= 1, rho >= 1, a > 0, 0 < r < 1, a*r <= 1");
  return LengthFamily(g);
}

LengthFamily LengthFamily::of(const CircleOpenSet& set) { return explicit_lengths(set.lengths()); }

double LengthFamily::total_measure() const {
  if (is_explicit()) {
    Rational sum(0);
    for (const auto& l : lengths()) sum += l;
    return to_double(sum);
  }
  const auto& g = geometric_params();
  const double q = g.count_ratio * g.length_ratio;
  const double first = g.count_base * g.length_base * g.length_ratio;
  if (!g.stages) return q < 1 ? first / (1 - q) : kInf;
  if (q == 1) return first * static_cast<double>(*g.stages);
  return first * (1 - std::pow(q, static_cast<double>(*g.stages))) / (1 - q);
}

double gauge_sum(const LengthFamily& lengths, const GaugeFunction& phi) {
  if (lengths.is_explicit()) {
    if (phi.family() == GaugeFamily::reciprocal) return static_cast<double>(lengths.lengths().size());
    if (phi.family() == GaugeFamily::constant) return lengths.total_measure();
    double sum = 0;
    for (const auto& l : lengths.lengths()) {
      const double x = to_double(l);
      sum += x * phi(x);
    }
    return sum;
  }

  const auto& g = lengths.geometric_params();
  auto term = [&](double k) {
    const double count = g.count_base * std::pow(g.count_ratio, k - 1);
    const double len = g.length_base * std::pow(g.length_ratio, k);
    return count * len * phi(len);
  };
  if (g.stages) {
    double sum = 0;
    for (std::size_t k = 1; k <= *g.stages; ++k) sum += term(static_cast<double>(k));
    return sum;
  }

  // Ratio of consecutive terms up to a sub-exponential factor.
  double q = 0;
  switch (phi.family()) {
    case GaugeFamily::constant:
    case GaugeFamily::logpow:
      q = g.count_ratio * g.length_ratio;
      break;
    case GaugeFamily::power:
    case GaugeFamily::mixed:
      q = g.count_ratio * std::pow(g.length_ratio, 1.0 - phi.alpha());
      break;
    case GaugeFamily::reciprocal:
      q = g.count_ratio;
      break;
  }
  if (q >= 1) return kInf;

  if (phi.family() == GaugeFamily::constant || phi.family() == GaugeFamily::power) {
    const double e = 1.0 - phi.alpha();
    return g.count_base * std::pow(g.length_base * g.length_ratio, e) / (1 - q);
  }
  // logpow / mixed: sum until the ratio has settled below (1+q)/2 and the
  // terms are negligible, then close with a geometric tail.
  const double settle = 0.5 * (1 + q);
  double sum = 0;
  double prev = term(1);
  sum += prev;
  for (double k = 2;; k += 1) {
    const double cur = term(k);
    sum += cur;
    const double ratio = prev > 0 ? cur / prev : 0;
    if (ratio < settle && cur <= 1e-17 * sum) {
      sum += cur * settle / (1 - settle);
      break;
    }
    if (k > 1e7) break;
    prev = cur;
  }
  return sum;
}

double jensen_bound(const CircleOpenSet& set, const GaugeFunction& phi) {
  if (set.empty()) throw InvalidInput("jensen_bound: empty set");
  const double m = to_double(set.measure());
  return m * phi(m / static_cast<double>(set.component_count()));
}

IndexEstimate bt_index(const LengthFamily& lengths) {
  if (lengths.is_explicit()) return {0.0, true};
  const auto& g = lengths.geometric_params();
  if (g.count_ratio * g.length_ratio >= 1) throw InvalidInput("bt_index: family has infinite measure");
  if (g.stages) return {0.0, true};
  return {std::log(g.count_ratio) / std::log(1.0 / g.length_ratio), false};
}

GaugeFunction parse_gauge(std::string_view text) {
  std::optional<double> c;
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    c = parse_real(text.substr(at + 1), at + 1);
    text = text.substr(0, at);
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string_view::npos) {
    std::size_t offset = colon + 1;
    for (auto part : split(text.substr(colon + 1), ',')) {
      args.push_back(parse_real(part, offset));
      offset += part.size() + 1;
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("wrong number of gauge parameters", colon);
  };
  GaugeFunction g = GaugeFunction::constant();
  if (head == "const") {
    need(0);
  } else if (head == "recip") {
    need(0);
    g = GaugeFunction::reciprocal();
  } else if (head == "power") {
    need(1);
    g = GaugeFunction::power(args[0]);
  } else if (head == "logpow") {
    need(1);
    g = GaugeFunction::logpow(args[0]);
  } else if (head == "mixed") {
    need(3);
    g = GaugeFunction::mixed(args[0], args[1], args[2]);
  } else {
    throw ParseError("unknown gauge family", 0);
  }
  return c ? g.with_c(*c) : g;
}

LengthFamily parse_length_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'geom:' or 'list:'", 0);
  const std::string_view head = text.substr(0, colon);
  const auto parts = split(text.substr(colon + 1), ',');
  if (head == "list") {
    std::vector<Rational> out;
    std::size_t offset = colon + 1;
    for (auto part : parts) {
      out.push_back(parse_rational(part, offset));
      offset += part.size() + 1;
    }
    return LengthFamily::explicit_lengths(std::move(out));
  }
  if (head == "geom") {
    if (parts.size() != 4 && parts.size() != 5) throw ParseError("geom needs m,rho,a,r[,stages]", colon + 1);
    std::vector<double> v;
    std::size_t offset = colon + 1;
    for (auto part : parts) {
      v.push_back(parse_real(part, offset));
      offset += part.size() + 1;
    }
    GeometricLengths g{v[0], v[1], v[2], v[3], std::nullopt};
    if (parts.size() == 5) g.stages = static_cast<std::size_t>(v[4]);
    return LengthFamily::geometric(g);
  }
  throw ParseError("unknown length family", 0);
}

}  // namespace indicatrix
