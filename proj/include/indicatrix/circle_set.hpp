#ifndef INDICATRIX_CIRCLE_SET_HPP
#define INDICATRIX_CIRCLE_SET_HPP

#include "indicatrix/scalar.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indicatrix {

/// Open arc (start, start + length) on the circle [0,1); may wrap past 1.
template <class T>
struct BasicArc {
  T start;
  T length;

  friend bool operator==(const BasicArc&, const BasicArc&) = default;
};

/// Open interval (lo, hi) with 0 <= lo < hi <= 1, an unwrapped piece of an arc.
template <class T>
struct Piece {
  T lo;
  T hi;
};

/**
 * A finite disjoint union of open arcs on the circle of circumference 1.
 *
 * Arcs are sorted by start; at most one (the last) wraps past 1. Arcs that
 * merely touch are kept as separate components, so `component_count()` is
 * the number of connected components of the open set. The full circle is
 * stored as the single arc (0, 1); the missing point has measure zero.
 */
template <class T>
class BasicCircleSet {
 public:
  BasicCircleSet() = default;

  /// Union of the raw arcs. Throws InvalidInput on length <= 0 or > 1.
  static BasicCircleSet normalize(std::vector<BasicArc<T>> raw);

  const std::vector<BasicArc<T>>& arcs() const noexcept { return arcs_; }
  std::size_t component_count() const noexcept { return arcs_.size(); }
  const T& measure() const noexcept { return measure_; }
  bool empty() const noexcept { return arcs_.empty(); }
  bool full() const { return measure_ == T(1); }

  /// Arcs cut at 0 into open intervals of [0,1], sorted by lo.
  std::vector<Piece<T>> pieces() const;

  /// Component lengths in arc order.
  std::vector<T> lengths() const;

  bool contains(const T& x) const;

  template <class U>
  BasicCircleSet<U> cast() const;

  friend bool operator==(const BasicCircleSet&, const BasicCircleSet&) = default;

 private:
  std::vector<BasicArc<T>> arcs_;
  T measure_{0};
};

using Arc = BasicArc<Rational>;
using CircleOpenSet = BasicCircleSet<Rational>;

template <class T>
BasicCircleSet<T> BasicCircleSet<T>::normalize(std::vector<BasicArc<T>> raw) {
  std::vector<Piece<T>> pieces;
  pieces.reserve(raw.size() * 2);
  bool zero_covered = false;
  for (const auto& arc : raw) {
    if (!(T(0) < arc.length) || T(1) < arc.length)
      throw InvalidInput("arc length must lie in (0,1]");
    T s = wrap01(arc.start);
    T e = s + arc.length;
    if (e <= T(1)) {
      pieces.push_back({s, e});
    } else {
      pieces.push_back({s, T(1)});
      pieces.push_back({T(0), e - T(1)});
      zero_covered = true;
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece<T>& a, const Piece<T>& b) { return a.lo < b.lo; });

  std::vector<Piece<T>> merged;
  for (auto& p : pieces) {
    if (!merged.empty() && p.lo < merged.back().hi) {
      merged.back().hi = max_of(merged.back().hi, p.hi);
    } else {
      merged.push_back(std::move(p));
    }
  }

  BasicCircleSet out;
  if (merged.empty()) return out;
  if (merged.size() == 1 && merged.front().lo == T(0) && merged.front().hi == T(1)) {
    out.arcs_.push_back({T(0), T(1)});
    out.measure_ = T(1);
    return out;
  }
  const bool join = zero_covered && merged.size() >= 2 && merged.front().lo == T(0) &&
                    merged.back().hi == T(1);
  const std::size_t first = join ? 1 : 0;
  for (std::size_t i = first; i < merged.size(); ++i) {
    const auto& p = merged[i];
    T len = p.hi - p.lo;
    if (join && i + 1 == merged.size()) len += merged.front().hi;
    out.measure_ += len;
    out.arcs_.push_back({p.lo, std::move(len)});
  }
  return out;
}

template <class T>
std::vector<Piece<T>> BasicCircleSet<T>::pieces() const {
  std::vector<Piece<T>> out;
  out.reserve(arcs_.size() + 1);
  for (const auto& a : arcs_) {
    T e = a.start + a.length;
    if (e <= T(1)) {
      out.push_back({a.start, e});
    } else {
      out.push_back({a.start, T(1)});
      out.insert(out.begin(), Piece<T>{T(0), e - T(1)});
    }
  }
  return out;
}

template <class T>
std::vector<T> BasicCircleSet<T>::lengths() const {
  std::vector<T> out;
  out.reserve(arcs_.size());
  for (const auto& a : arcs_) out.push_back(a.length);
  return out;
}

template <class T>
bool BasicCircleSet<T>::contains(const T& x) const {
  const T y = wrap01(x);
  for (const auto& a : arcs_) {
    const T d = wrap01(y - a.start);
    if (T(0) < d && d < a.length) return true;
  }
  return false;
}

template <class T>
template <class U>
BasicCircleSet<U> BasicCircleSet<T>::cast() const {
  std::vector<BasicArc<U>> raw;
  raw.reserve(arcs_.size());
  for (const auto& a : arcs_) {
    if constexpr (std::is_same_v<U, double>) {
      raw.push_back({to_double(a.start), to_double(a.length)});
    } else {
      raw.push_back({U(a.start), U(a.length)});
    }
  }
  return BasicCircleSet<U>::normalize(std::move(raw));
}

namespace detail {

// Intersection of two sorted lists of disjoint open intervals.
template <class T>
std::vector<Piece<T>> intersect(const std::vector<Piece<T>>& a, const std::vector<Piece<T>>& b) {
  std::vector<Piece<T>> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    T lo = max_of(a[i].lo, b[j].lo);
    T hi = min_of(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({std::move(lo), std::move(hi)});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

template <class T>
T total_length(const std::vector<Piece<T>>& pieces) {
  T sum(0);
  for (const auto& p : pieces) sum += p.hi - p.lo;
  return sum;
}

}  // namespace detail

template <class T>
const T& measure(const BasicCircleSet<T>& set) {
  return set.measure();
}

/// The rotated set {x - h mod 1 : x in E}.
template <class T>
BasicCircleSet<T> translate(const BasicCircleSet<T>& set, const T& h) {
  std::vector<BasicArc<T>> raw;
  raw.reserve(set.arcs().size());
  for (const auto& a : set.arcs()) raw.push_back({a.start - h, a.length});
  return BasicCircleSet<T>::normalize(std::move(raw));
}

/// Measure of {x : chi_E(x+h) != chi_E(x)}, i.e. |E symdiff (E - h)|.
template <class T>
T tau(const BasicCircleSet<T>& set, const T& h) {
  if (set.empty() || wrap01(h) == T(0)) return T(0);
  const auto overlap = detail::total_length(detail::intersect(set.pieces(), translate(set, h).pieces()));
  return T(2) * (set.measure() - overlap);
}

/**
 * sup of tau(E, h) over h in (0, t].
 *
 * |E cap (E + h)| is a sum of trapezoids in h, one per ordered pair of pieces
 * and per lift (0 or -1), each a signed combination of four ramps
 * max(0, h - p). Sweeping the sorted ramp positions evaluates tau at every
 * breakpoint in (0, t) and at t itself in O(n^2 log n).
 */
template <class T>
T tau_sup(const BasicCircleSet<T>& set, const T& t) {
  if (!(T(0) < t) || T(1) < T(2) * t) throw InvalidInput("tau_sup: t must lie in (0, 1/2]");
  if (set.empty() || set.full()) return T(0);

  struct Ramp {
    T at;
    int sign;
  };
  const auto pieces = set.pieces();
  std::vector<Ramp> ramps;
  T slope0(0), offset0(0);  // ramps already active for every h > 0
  auto add = [&](T at, int sign) {
    if (!(at < t)) return;
    if (at <= T(0)) {
      slope0 += T(sign);
      offset0 += T(sign) * at;
    } else {
      ramps.push_back({std::move(at), sign});
    }
  };
  for (const auto& pi : pieces) {
    for (const auto& pj : pieces) {
      T lo_lo = pi.lo - pj.lo;
      T hi_hi = pi.hi - pj.hi;
      T q1 = pi.lo - pj.hi;
      T q2 = min_of(lo_lo, hi_hi);
      T q3 = max_of(lo_lo, hi_hi);
      T q4 = pi.hi - pj.lo;
      for (int lift = 0; lift <= 1; ++lift) {
        const T shift(lift);
        add(q1 + shift, +1);
        add(q2 + shift, -1);
        add(q3 + shift, -1);
        add(q4 + shift, +1);
      }
    }
  }
  std::sort(ramps.begin(), ramps.end(), [](const Ramp& a, const Ramp& b) { return a.at < b.at; });

  T best(0);
  T slope = slope0, offset = offset0;
  std::size_t k = 0;
  auto visit = [&](const T& h) {
    while (k < ramps.size() && ramps[k].at < h) {
      slope += T(ramps[k].sign);
      offset += T(ramps[k].sign) * ramps[k].at;
      ++k;
    }
    T value = T(2) * (set.measure() - (h * slope - offset));
    if (best < value) best = value;
  };
  for (std::size_t i = 0; i < ramps.size(); ++i) {
    if (i > 0 && ramps[i].at == ramps[i - 1].at) continue;
    visit(ramps[i].at);
  }
  visit(t);
  return best;
}

/// |K(h) \ K| for K the complement: the points of E within h of K.
template <class T>
T kh_deficit(const BasicCircleSet<T>& set, const T& h) {
  if (set.empty() || set.full() || !(T(0) < h)) return T(0);
  T sum(0);
  const T reach = T(2) * h;
  for (const auto& a : set.arcs()) sum += min_of(a.length, reach);
  return sum;
}

/// |{x in E : x+h in K} cup {x in E : x-h in K}|, the part of E carried into
/// the complement by a step of +h or -h. Always <= kh_deficit(E, h).
template <class T>
T escape_measure(const BasicCircleSet<T>& set, const T& h) {
  if (set.empty() || wrap01(h) == T(0)) return T(0);
  auto stay = detail::intersect(set.pieces(), translate(set, h).pieces());
  stay = detail::intersect(stay, translate(set, T(-h)).pieces());
  return set.measure() - detail::total_length(stay);
}

/// Parses `a/b+L/M, c/d+P/Q, ...` (start+length pairs, exact rationals).
CircleOpenSet parse_circle_set(std::string_view text);
std::string format_circle_set(const CircleOpenSet& set);

}  // namespace indicatrix

#endif  // INDICATRIX_CIRCLE_SET_HPP
