#ifndef INDICATRIX_PL_FUNCTION_HPP
#define INDICATRIX_PL_FUNCTION_HPP

#include "indicatrix/circle_set.hpp"
#include "indicatrix/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace indicatrix {

template <class T>
struct Node {
  T x;
  T y;

  friend bool operator==(const Node&, const Node&) = default;
};

/**
 * Continuous 1-periodic piecewise-linear function with values in [0,1].
 *
 * Nodes have strictly increasing x in [0,1); segment i joins node i to node
 * i+1 and the last segment joins the last node to the first one shifted by
 * the period.
 */
template <class T>
class BasicPLFunction {
 public:
  struct Segment {
    T x0, y0, x1, y1;  // x1 may exceed 1 on the closing segment
  };

  explicit BasicPLFunction(std::vector<Node<T>> nodes);

  const std::vector<Node<T>>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  Segment segment(std::size_t i) const;

  T operator()(const T& x) const;

  T min_value() const;
  T max_value() const;
  bool is_constant() const { return min_value() == max_value(); }

  template <class U>
  BasicPLFunction<U> cast() const;

  friend bool operator==(const BasicPLFunction&, const BasicPLFunction&) = default;

 private:
  std::vector<Node<T>> nodes_;
};

using PLFunction = BasicPLFunction<Rational>;

/// Level strip (y_lo, y_hi) on which the indicatrix n and component count N are constant.
struct Strip {
  Rational y_lo;
  Rational y_hi;
  std::size_t n = 0;
  std::size_t N = 0;
};

struct IndicatrixProfile {
  std::vector<Strip> strips;
  bool degenerate = false;  // f is constant; no strips
};

template <class T>
BasicPLFunction<T>::BasicPLFunction(std::vector<Node<T>> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw InvalidInput("PL function needs at least 2 nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& nd = nodes_[i];
    if (nd.x < T(0) || !(nd.x < T(1))) throw InvalidInput("node x must lie in [0,1)");
    if (nd.y < T(0) || T(1) < nd.y) throw InvalidInput("node y must lie in [0,1]");
    if (i > 0 && !(nodes_[i - 1].x < nd.x)) throw InvalidInput("node x must be strictly increasing");
  }
}

template <class T>
typename BasicPLFunction<T>::Segment BasicPLFunction<T>::segment(std::size_t i) const {
  const auto& a = nodes_[i];
  if (i + 1 < nodes_.size()) {
    const auto& b = nodes_[i + 1];
    return {a.x, a.y, b.x, b.y};
  }
  return {a.x, a.y, nodes_.front().x + T(1), nodes_.front().y};
}

template <class T>
T BasicPLFunction<T>::operator()(const T& x) const {
  T u = wrap01(x);
  if (u < nodes_.front().x) u += T(1);
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), u,
                             [](const T& v, const Node<T>& nd) { return v < nd.x; });
  const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  const auto s = segment(i);
  return s.y0 + (s.y1 - s.y0) * (u - s.x0) / (s.x1 - s.x0);
}

template <class T>
T BasicPLFunction<T>::min_value() const {
  T m = nodes_.front().y;
  for (const auto& nd : nodes_) m = min_of(m, nd.y);
  return m;
}

template <class T>
T BasicPLFunction<T>::max_value() const {
  T m = nodes_.front().y;
  for (const auto& nd : nodes_) m = max_of(m, nd.y);
  return m;
}

template <class T>
template <class U>
BasicPLFunction<U> BasicPLFunction<T>::cast() const {
  std::vector<Node<U>> out;
  out.reserve(nodes_.size());
  for (const auto& nd : nodes_) {
    if constexpr (std::is_same_v<U, double>)
      out.push_back({to_double(nd.x), to_double(nd.y)});
    else
      out.push_back({U(nd.x), U(nd.y)});
  }
  return BasicPLFunction<U>(std::move(out));
}

/// Maximal run of {f > y}: the open interval (start, end) in unwrapped
/// coordinates with the segments holding each endpoint.
template <class T>
struct LevelRun {
  T start;
  T end;
  std::size_t start_segment;
  std::size_t end_segment;
};

/// Runs of {f > y} in circular order. Empty when y >= max f; a single
/// full-period run is reported only when some node sits at level <= y.
template <class T>
std::vector<LevelRun<T>> level_runs(const BasicPLFunction<T>& f, const T& y) {
  std::vector<LevelRun<T>> runs;
  const std::size_t n = f.size();
  std::size_t anchor = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.nodes()[i].y <= y) {
      anchor = i;
      break;
    }
  }
  if (anchor == n) return runs;  // every node above y: the whole circle

  bool open = false;
  T start(0);
  std::size_t start_seg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (anchor + k) % n;
    auto s = f.segment(i);
    // keep coordinates monotone once we pass the end of the node list
    if (i < anchor) {
      s.x0 += T(1);
      s.x1 += T(1);
    }
    const bool above0 = y < s.y0;
    const bool above1 = y < s.y1;
    auto crossing = [&] { return s.x0 + (y - s.y0) * (s.x1 - s.x0) / (s.y1 - s.y0); };
    if (!above0 && above1) {
      start = (s.y0 == y) ? s.x0 : crossing();
      start_seg = i;
      open = true;
    } else if (above0 && !above1 && open) {
      T end = (s.y1 == y) ? s.x1 : crossing();
      runs.push_back({start, end, start_seg, i});
      open = false;
    }
  }
  return runs;
}

/// The open set {x : f(x) > y}.
template <class T>
BasicCircleSet<T> superlevel_set(const BasicPLFunction<T>& f, const T& y) {
  if (y < f.min_value()) return BasicCircleSet<T>::normalize({BasicArc<T>{T(0), T(1)}});
  std::vector<BasicArc<T>> arcs;
  for (const auto& run : level_runs(f, y)) arcs.push_back({wrap01(run.start), run.end - run.start});
  return BasicCircleSet<T>::normalize(std::move(arcs));
}

/// Number of segments crossing level y strictly (neither endpoint at y).
template <class T>
std::size_t crossing_count(const BasicPLFunction<T>& f, const T& y) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto s = f.segment(i);
    if ((s.y0 < y && y < s.y1) || (s.y1 < y && y < s.y0)) ++count;
  }
  return count;
}

IndicatrixProfile indicatrix_profile(const PLFunction& f);

/// Integral of n(y) over [0,1], exact from the strip profile.
Rational banach_integral(const PLFunction& f);

/// Integral of n(y)^(1/p) over [0,1].
double indicatrix_power_integral(const PLFunction& f, double p);

template <class T>
T total_variation(const BasicPLFunction<T>& f) {
  T sum(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto s = f.segment(i);
    sum += abs_of(T(s.y1 - s.y0));
  }
  return sum;
}

/// Largest |slope| over all segments.
template <class T>
T lipschitz_constant(const BasicPLFunction<T>& f) {
  T best(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto s = f.segment(i);
    best = max_of(best, T(abs_of(T(s.y1 - s.y0)) / (s.x1 - s.x0)));
  }
  return best;
}

/// Values of f at 0, at every node in (0,1), and at 1.
template <class T>
std::vector<T> partition_values(const BasicPLFunction<T>& f) {
  std::vector<T> values;
  values.push_back(f(T(0)));
  for (const auto& nd : f.nodes())
    if (T(0) < nd.x) values.push_back(nd.y);
  values.push_back(values.front());
  return values;
}

/// sup over partitions of [0,1] of sum |f(x_i) - f(x_{i-1})|^p, p >= 1.
double p_variation(const PLFunction& f, double p);

/// p_variation at p = 1, exact.
Rational p_variation_exact(const PLFunction& f);

namespace detail {

template <class T>
T power(const T& base, double p) {
  if constexpr (std::is_same_v<T, double>) {
    return p == 1.0 ? base : std::pow(base, p);
  } else {
    if (p < 0 || p != std::floor(p) || p > 64) throw InvalidInput("exact arithmetic supports only integer p");
    T out(1);
    for (int k = 0; k < static_cast<int>(p); ++k) out *= base;
    return out;
  }
}

// Integral over an interval of width w of |g|^p where g is linear from a to b.
template <class T>
T linear_abs_power_integral(const T& w, const T& a, const T& b, double p) {
  const T zero(0);
  if ((a < zero && zero < b) || (b < zero && zero < a)) {
    const T z = w * a / (a - b);  // distance to the root
    const T denom(p + 1.0);
    return z * power(abs_of(a), p) / denom + (w - z) * power(abs_of(b), p) / denom;
  }
  const T ua = abs_of(a), ub = abs_of(b);
  if (ua == ub) return w * power(ua, p);
  if constexpr (std::is_same_v<T, double>) {
    // ratio form: the difference quotient cancels badly when |a| ~ |b|
    const double hi = std::max(ua, ub);
    const double d = (std::min(ua, ub) - hi) / hi;  // in [-1, 0)
    if (d == -1.0) return w * std::pow(hi, p) / (p + 1.0);
    return w * std::pow(hi, p) * std::expm1((p + 1.0) * std::log1p(d)) / ((p + 1.0) * d);
  } else {
    return w * (power(ua, p + 1.0) - power(ub, p + 1.0)) / (T(p + 1.0) * (ua - ub));
  }
}

}  // namespace detail

/// Integral over one period of |f(x+h) - f(x)|^p (no p-th root).
template <class T>
T increment_integral(const BasicPLFunction<T>& f, const T& h, double p = 1.0) {
  if (p < 1.0) throw InvalidInput("p must be >= 1");
  if (wrap01(h) == T(0)) return T(0);
  std::vector<T> cuts;
  cuts.reserve(2 * f.size() + 2);
  cuts.push_back(T(0));
  cuts.push_back(T(1));
  for (const auto& nd : f.nodes()) {
    cuts.push_back(nd.x);
    cuts.push_back(wrap01(nd.x - h));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  T total(0);
  T prev = f(h) - f(T(0));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const T& u = cuts[i];
    const T& w = cuts[i + 1];
    T next = f(w + h) - f(w);
    total += detail::linear_abs_power_integral(T(w - u), prev, next, p);
    prev = std::move(next);
  }
  return total;
}

/// modulus_at: the inner integral of the L^p modulus at a fixed shift.
double modulus_at(const PLFunction& f, const Rational& h, double p);

struct ModulusEstimate {
  double value = 0;        // max of (integral)^(1/p) over candidate shifts
  double error_bound = 0;  // true sup lies in [value, value + error_bound]
};

/**
 * omega(f, t)_p = sup_{0 < h <= t} (integral |f(x+h) - f(x)|^p dx)^(1/p).
 *
 * Evaluated on every node difference in (0, t], on t, and on a uniform grid
 * of `grid` steps. Any h is within delta/2 of a grid point, and the shift
 * map is Lipschitz in L^p, which gives error_bound.
 */
ModulusEstimate modulus(const PLFunction& f, const Rational& t, double p, std::size_t grid = 256);

/// Parses `pl: (x1,y1) (x2,y2) ...` with exact rational coordinates.
PLFunction parse_pl_function(std::string_view text);
std::string format_pl_function(const PLFunction& f);

}  // namespace indicatrix

#endif  // INDICATRIX_PL_FUNCTION_HPP
