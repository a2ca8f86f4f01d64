#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "unasp/error.hpp"

namespace unasp {

inline constexpr double eps_cmp = 1e-9;

// Sub-interval [lower, upper] of [0,1].
class Interval {
 public:
  constexpr Interval() = default;

  Interval(double lower, double upper) : lo_(lower), hi_(upper) {
    if (!(lower >= 0.0 && upper <= 1.0 && lower <= upper))
      throw Error(Errc::InvalidInterval, "interval [" + std::to_string(lower) + "," +
                                             std::to_string(upper) + "] is not a sub-interval of [0,1]");
  }

  static Interval exact(double x) { return Interval(x, x); }
  static Interval unknown() { return Interval(0.0, 1.0); }

  // Result of arithmetic on valid intervals: absorbs rounding noise only.
  static Interval rounded(double lower, double upper) {
    constexpr double noise = 1e-12;
    if (lower < 0.0 && lower > -noise) lower = 0.0;
    if (upper > 1.0 && upper < 1.0 + noise) upper = 1.0;
    if (lower > upper && lower - upper < noise) lower = upper = (lower + upper) / 2;
    return Interval(lower, upper);
  }

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  double midpoint() const { return (lo_ + hi_) / 2; }
  double width() const { return hi_ - lo_; }

  bool approx(const Interval& o, double tol = eps_cmp) const {
    return std::abs(lo_ - o.lo_) <= tol && std::abs(hi_ - o.hi_) <= tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline double distance(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lower() - b.lower()), std::abs(a.upper() - b.upper()));
}

// Shortest decimal with at most 9 fractional digits.
inline std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

inline std::string to_string(const Interval& x) {
  return "[" + format_number(x.lower()) + "," + format_number(x.upper()) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

// An interval or the inconsistency marker produced by knowledge aggregation.
class EpistemicValue {
 public:
  EpistemicValue(const Interval& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static EpistemicValue inconsistent() { return EpistemicValue(); }

  bool consistent() const { return v_.has_value(); }
  const Interval& interval() const {
    if (!v_) throw Error(Errc::InvalidInterval, "inconsistent value has no interval");
    return *v_;
  }

  friend bool operator==(const EpistemicValue&, const EpistemicValue&) = default;

 private:
  EpistemicValue() = default;
  std::optional<Interval> v_;
};

inline std::string to_string(const EpistemicValue& x) {
  return x.consistent() ? to_string(x.interval()) : std::string("inconsistent");
}

inline std::ostream& operator<<(std::ostream& os, const EpistemicValue& x) { return os << to_string(x); }

enum class OrderFamily { TruthBilattice, KnowledgeBilattice, TruthPreorder, KnowledgePreorder };
enum class Ordering { Less, Equal, Greater, Incomparable };

namespace detail {
inline bool leq(double a, double b) { return a <= b + eps_cmp; }

inline Ordering from_leq(bool xy, bool yx) {
  if (xy && yx) return Ordering::Equal;
  if (xy) return Ordering::Less;
  if (yx) return Ordering::Greater;
  return Ordering::Incomparable;
}

inline Ordering from_keys(double kx, double ky) {
  if (std::abs(kx - ky) <= eps_cmp) return Ordering::Equal;
  return kx < ky ? Ordering::Less : Ordering::Greater;
}
}  // namespace detail

inline Ordering compare(const Interval& x, const Interval& y, OrderFamily family) {
  using detail::leq;
  switch (family) {
    case OrderFamily::TruthBilattice:
      return detail::from_leq(leq(x.lower(), y.lower()) && leq(x.upper(), y.upper()),
                              leq(y.lower(), x.lower()) && leq(y.upper(), x.upper()));
    case OrderFamily::KnowledgeBilattice:
      return detail::from_leq(leq(x.lower(), y.lower()) && leq(y.upper(), x.upper()),
                              leq(y.lower(), x.lower()) && leq(x.upper(), y.upper()));
    case OrderFamily::TruthPreorder:
      return detail::from_keys(x.midpoint(), y.midpoint());
    case OrderFamily::KnowledgePreorder:
      // narrower is more certain, hence greater
      return detail::from_keys(-x.width(), -y.width());
  }
  return Ordering::Incomparable;
}

inline bool more_certain(const Interval& x, const Interval& y) {
  return compare(x, y, OrderFamily::KnowledgePreorder) == Ordering::Greater;
}

inline Interval negate(const Interval& x) { return Interval::rounded(1.0 - x.upper(), 1.0 - x.lower()); }
inline Interval naf(const Interval& x) { return Interval::exact(std::clamp(1.0 - x.lower(), 0.0, 1.0)); }
inline Interval tnorm(const Interval& x, const Interval& y) {
  return Interval::rounded(x.lower() * y.lower(), x.upper() * y.upper());
}
inline Interval tconorm(const Interval& x, const Interval& y) {
  auto s = [](double a, double b) { return a + b - a * b; };
  return Interval::rounded(s(x.lower(), y.lower()), s(x.upper(), y.upper()));
}

inline EpistemicValue negate(const EpistemicValue& x) {
  return x.consistent() ? EpistemicValue(negate(x.interval())) : x;
}
inline EpistemicValue naf(const EpistemicValue& x) {
  return x.consistent() ? EpistemicValue(naf(x.interval())) : x;
}
inline EpistemicValue tnorm(const EpistemicValue& x, const EpistemicValue& y) {
  if (!x.consistent()) return x;
  if (!y.consistent()) return y;
  return tnorm(x.interval(), y.interval());
}
inline EpistemicValue tconorm(const EpistemicValue& x, const EpistemicValue& y) {
  if (!x.consistent()) return x;
  if (!y.consistent()) return y;
  return tconorm(x.interval(), y.interval());
}

// max_k: the more certain of two intervals; undefined for equal widths and
// different values.
inline std::optional<Interval> try_kmax(const Interval& x, const Interval& y) {
  if (x.approx(y)) return x;
  switch (compare(x, y, OrderFamily::KnowledgePreorder)) {
    case Ordering::Greater: return x;
    case Ordering::Less: return y;
    default: return std::nullopt;
  }
}

inline Interval kmax(const Interval& x, const Interval& y) {
  if (auto r = try_kmax(x, y)) return *r;
  throw Error(Errc::InvalidInterval, "kmax undefined for " + to_string(x) + " and " + to_string(y));
}

inline EpistemicValue kagg(const EpistemicValue& x, const EpistemicValue& y) {
  if (!x.consistent()) return x;
  if (!y.consistent()) return y;
  if (auto r = try_kmax(x.interval(), y.interval())) return *r;
  return EpistemicValue::inconsistent();
}

}  // namespace unasp
