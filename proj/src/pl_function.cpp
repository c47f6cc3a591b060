#include "indicatrix/pl_function.hpp"

#include "indicatrix/parallel.hpp"

#include <cctype>

namespace indicatrix {

IndicatrixProfile indicatrix_profile(const PLFunction& f) {
  IndicatrixProfile profile;
  std::vector<Rational> levels;
  levels.reserve(f.size());
  for (const auto& nd : f.nodes()) levels.push_back(nd.y);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.size() < 2) {
    profile.degenerate = true;
    return profile;
  }
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    Strip s{levels[i], levels[i + 1]};
    const Rational mid = (s.y_lo + s.y_hi) / 2;
    s.n = crossing_count(f, mid);
    s.N = superlevel_set(f, mid).component_count();
    profile.strips.push_back(std::move(s));
  }
  return profile;
}

Rational banach_integral(const PLFunction& f) {
  Rational sum(0);
  for (const auto& s : indicatrix_profile(f).strips) sum += Rational(s.n) * (s.y_hi - s.y_lo);
  return sum;
}

double indicatrix_power_integral(const PLFunction& f, double p) {
  double sum = 0;
  for (const auto& s : indicatrix_profile(f).strips)
    sum += std::pow(static_cast<double>(s.n), 1.0 / p) * to_double(s.y_hi - s.y_lo);
  return sum;
}

namespace {

// First, last, and every interior value where the direction of travel
// reverses. Monotone runs never gain from intermediate partition points.
template <class T>
std::vector<T> extremal_values(const std::vector<T>& values) {
  std::vector<T> dedup;
  for (const auto& v : values)
    if (dedup.empty() || dedup.back() != v) dedup.push_back(v);
  if (dedup.size() <= 2) return dedup;
  std::vector<T> out{dedup.front()};
  for (std::size_t i = 1; i + 1 < dedup.size(); ++i) {
    const bool peak = dedup[i - 1] < dedup[i] && dedup[i + 1] < dedup[i];
    const bool pit = dedup[i] < dedup[i - 1] && dedup[i] < dedup[i + 1];
    if (peak || pit) out.push_back(dedup[i]);
  }
  out.push_back(dedup.back());
  return out;
}

template <class T>
T extremal_dp(const std::vector<T>& values, double p) {
  const auto ext = extremal_values(values);
  if (ext.size() < 2) return T(0);
  std::vector<T> best(ext.size(), T(0));
  for (std::size_t j = 1; j < ext.size(); ++j) {
    T top = best[0] + detail::power(abs_of(T(ext[j] - ext[0])), p);
    for (std::size_t i = 1; i < j; ++i) {
      T cand = best[i] + detail::power(abs_of(T(ext[j] - ext[i])), p);
      if (top < cand) top = cand;
    }
    best[j] = top;
  }
  return best.back();
}

}  // namespace

double p_variation(const PLFunction& f, double p) {
  if (p < 1.0) throw InvalidInput("p_variation: p must be >= 1");
  if (p == 1.0) return to_double(p_variation_exact(f));
  return extremal_dp(partition_values(f.cast<double>()), p);
}

Rational p_variation_exact(const PLFunction& f) { return extremal_dp(partition_values(f), 1.0); }

double modulus_at(const PLFunction& f, const Rational& h, double p) {
  if (p == 1.0) return to_double(increment_integral(f, h, 1.0));
  return increment_integral(f.cast<double>(), to_double(h), p);
}

ModulusEstimate modulus(const PLFunction& f, const Rational& t, double p, std::size_t grid) {
  if (!(Rational(0) < t) || Rational(1, 2) < t) throw InvalidInput("modulus: t must lie in (0, 1/2]");
  if (p < 1.0) throw InvalidInput("modulus: p must be >= 1");
  if (grid == 0) throw InvalidInput("modulus: grid must be positive");

  const auto fd = f.cast<double>();
  const double td = to_double(t);
  std::vector<double> shifts;
  for (const auto& a : fd.nodes())
    for (const auto& b : fd.nodes()) {
      const double d = wrap01(a.x - b.x);
      if (d > 0 && d <= td) shifts.push_back(d);
    }
  const double step = td / static_cast<double>(grid);
  for (std::size_t k = 1; k < grid; ++k) shifts.push_back(step * static_cast<double>(k));
  shifts.push_back(td);
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

  std::vector<double> values(shifts.size());
  parallel_for(shifts.size(), [&](std::size_t i) {
    values[i] = std::pow(increment_integral(fd, shifts[i], p), 1.0 / p);
  });

  ModulusEstimate out;
  for (double v : values) out.value = std::max(out.value, v);
  const double half = step / 2;
  const double lip = lipschitz_constant(fd);
  const double var = total_variation(fd);
  const double osc = fd.max_value() - fd.min_value();
  const double by_lip = lip * half;
  const double by_var = std::pow(var * half, 1.0 / p) * std::pow(osc, 1.0 - 1.0 / p);
  out.error_bound = std::min(by_lip, by_var);
  return out;
}

PLFunction parse_pl_function(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos, 3) != "pl:") throw ParseError("expected 'pl:' prefix", pos);
  pos += 3;
  std::vector<Node<Rational>> nodes;
  for (;;) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated node", pos);
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t sep = body.find(',');
    if (sep == std::string_view::npos) {
      const std::size_t first = body.find_first_not_of(" \t");
      sep = first == std::string_view::npos ? first : body.find_first_of(" \t", first);
    }
    if (sep == std::string_view::npos) throw ParseError("expected 'x,y' inside node", pos + 1);
    Rational x = parse_rational(body.substr(0, sep), pos + 1);
    Rational y = parse_rational(body.substr(sep + 1), pos + 2 + sep);
    nodes.push_back({std::move(x), std::move(y)});
    pos = close + 1;
  }
  try {
    return PLFunction(std::move(nodes));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), text.size());
  }
}

std::string format_pl_function(const PLFunction& f) {
  std::string out = "pl:";
  for (const auto& nd : f.nodes()) out += " (" + format_rational(nd.x) + "," + format_rational(nd.y) + ")";
  return out;
}

}  // namespace indicatrix
