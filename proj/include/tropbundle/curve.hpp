#pragma once

// The tropical elliptic curve as a circle of lattice length L covered by s
// arcs, together with integer-affine and piecewise-linear functions on lifted
// coordinates and zero-cycles on the circle.
//
// Chart layout (0-based chart index i in [0, s)):
//   arc_i     = ((i-1)·L/s, (i+1)·L/s)       in chart-i coordinates
//   overlap_k = arc_k ∩ arc_{k+1} = (k·L/s, (k+1)·L/s) in chart-k coordinates
// Charts 1..s-1 share one lifted coordinate with chart 0's overlap O_0;
// the last overlap O_{s-1} is read by chart 0 at coordinate x - L.

#include "tropbundle/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tropbundle {

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains_closed(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class Curve {
 public:
  Curve(Rational length, int charts);

  const Rational& length() const { return length_; }
  int charts() const { return charts_; }

  Interval arc(int chart) const;
  /// Overlap of chart k with chart k+1 (cyclically), in chart-k coordinates.
  Interval overlap(int k) const;
  /// Chart-(k+1) coordinate minus chart-k coordinate on overlap k.
  Rational overlap_shift(int k) const;
  /// Half-open [iL/s - L/2s, iL/s + L/2s): these tile the circle and each
  /// lies strictly inside its arc.
  Interval core(int chart) const;
  Rational center(int chart) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Rational length_;
  int charts_;
};

/// Canonical layout: s equal arcs of length 2L/s centered at i·L/s.
/// Throws std::invalid_argument unless L > 0 and s >= 3.
Curve make_curve(const Rational& length, int charts);

/// x ↦ slope·x + value_at_0 in some lifted coordinate. Slopes are stored as
/// rationals so that malformed input can be represented and reported; valid
/// bundle data has integer slopes.
struct AffineFn {
  Rational slope;
  Rational value_at_0;

  static AffineFn constant(const Rational& c) { return {Rational(0), c}; }

  Rational operator()(const Rational& x) const { return slope * x + value_at_0; }
  bool is_integer_affine() const { return is_integer(slope); }
  bool is_zero() const { return slope == 0 && value_at_0 == 0; }

  friend AffineFn operator+(const AffineFn& a, const AffineFn& b) {
    return {a.slope + b.slope, a.value_at_0 + b.value_at_0};
  }
  friend AffineFn operator-(const AffineFn& a, const AffineFn& b) {
    return {a.slope - b.slope, a.value_at_0 - b.value_at_0};
  }
  friend AffineFn operator-(const AffineFn& a) { return {-a.slope, -a.value_at_0}; }
  friend bool operator==(const AffineFn&, const AffineFn&) = default;
};

/// The affine extension after winding `steps` loops: x ↦ f(x + steps·L).
AffineFn continue_affine(const AffineFn& f, std::int64_t steps, const Rational& length);

/// Continuous piecewise-linear function with integer slopes on a closed
/// lifted interval. Stored by its values at the breakpoints; collinear
/// breakpoints are dropped, so equality is equality of functions.
class PLFn {
 public:
  /// Throws std::invalid_argument unless xs is strictly increasing with at
  /// least two entries, ys has the same length, and all slopes are integers.
  PLFn(std::vector<Rational> xs, std::vector<Rational> ys);

  static PLFn affine(const Interval& domain, const AffineFn& f);
  static PLFn constant(const Interval& domain, const Rational& c) { return affine(domain, AffineFn::constant(c)); }
  /// Breakpoints xs, slope of each piece, value at xs.front().
  static PLFn from_slopes(std::vector<Rational> xs, const std::vector<std::int64_t>& slopes, const Rational& start);

  Interval domain() const { return {xs_.front(), xs_.back()}; }
  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }
  std::int64_t piece_slope(std::size_t piece) const;

  /// Value at x in the closed domain.
  Rational operator()(const Rational& x) const;
  std::int64_t slope_right(const Rational& x) const;
  std::int64_t slope_left(const Rational& x) const;

  PLFn restrict(const Interval& sub) const;
  /// g(y) = f(y + shift) on the domain moved by -shift.
  PLFn translate(const Rational& shift) const;

  /// Interior kinks (slope_right - slope_left) at positions in [from, to).
  std::vector<std::pair<Rational, std::int64_t>> kinks(const Rational& from, const Rational& to) const;

  friend PLFn operator+(const PLFn& a, const PLFn& b);
  friend PLFn operator+(const PLFn& a, const AffineFn& b);
  friend PLFn operator-(const PLFn& a);
  friend PLFn operator-(const PLFn& a, const PLFn& b) { return a + (-b); }
  friend bool operator==(const PLFn&, const PLFn&) = default;

  std::string str() const;

 private:
  PLFn() = default;
  void simplify();

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

/// Piecewise-linear function on the circle, given on a fundamental interval
/// [a, a + L]. Across the wrap point the function continues as
/// x ↦ f(x - L) + wrap_jump(x); a global rational function has a zero jump.
class CircleFn {
 public:
  /// Throws std::invalid_argument if f(a + L) != f(a) + wrap_jump(a + L).
  CircleFn(PLFn fn, AffineFn wrap_jump = {});

  const PLFn& fn() const { return fn_; }
  const AffineFn& wrap_jump() const { return wrap_jump_; }
  Rational period() const { return fn_.domain().length(); }
  bool is_global() const { return wrap_jump_.is_zero(); }

  /// Unrolls a global function onto an arbitrary lifted interval.
  PLFn on_interval(const Interval& target) const;

  friend CircleFn operator+(const CircleFn& a, const CircleFn& b);

 private:
  PLFn fn_;
  AffineFn wrap_jump_;
};

struct DivisorPoint {
  Rational position;
  std::int64_t weight;
  friend bool operator==(const DivisorPoint&, const DivisorPoint&) = default;
};

/// Zero-cycle on the circle: distinct positions in [0, L), nonzero weights,
/// sorted by position.
class Divisor {
 public:
  Divisor() = default;
  /// Reduces positions mod L, merges coincident points and drops zeros.
  Divisor(const std::vector<DivisorPoint>& points, const Rational& length);

  const std::vector<DivisorPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a);
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string str() const;

 private:
  std::vector<DivisorPoint> points_;
};

/// Weight at p is slope_right(p) - slope_left(p); at the wrap point the
/// right-hand slope is that of the first piece plus the jump slope.
Divisor pl_divisor(const CircleFn& f);

std::int64_t divisor_degree(const Divisor& d);

}  // namespace tropbundle
