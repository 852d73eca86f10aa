#include "tropbundle/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tropbundle {

Curve::Curve(Rational length, int charts) : length_(std::move(length)), charts_(charts) {
  length_.canonicalize();
  if (length_ <= 0) throw std::invalid_argument("curve length must be positive");
  if (charts_ < 3) throw std::invalid_argument("a curve needs at least 3 charts");
}

Rational Curve::center(int chart) const { return Rational(chart) * length_ / charts_; }

Interval Curve::arc(int chart) const {
  const Rational step = length_ / charts_;
  return {center(chart) - step, center(chart) + step};
}

Interval Curve::overlap(int k) const {
  const Rational step = length_ / charts_;
  return {center(k), center(k) + step};
}

Rational Curve::overlap_shift(int k) const { return k == charts_ - 1 ? Rational(-length_) : Rational(0); }

Interval Curve::core(int chart) const {
  const Rational half = length_ / (2 * charts_);
  return {center(chart) - half, center(chart) + half};
}

Curve make_curve(const Rational& length, int charts) { return Curve(length, charts); }

AffineFn continue_affine(const AffineFn& f, std::int64_t steps, const Rational& length) {
  return {f.slope, f.value_at_0 + f.slope * Rational(static_cast<long>(steps)) * length};
}

// ---------------------------------------------------------------------------
// PLFn

namespace {

std::int64_t integral_slope(const Rational& dy, const Rational& dx) {
  const Rational slope = dy / dx;
  if (!is_integer(slope)) throw std::invalid_argument("slope " + to_string(slope) + " is not an integer");
  return to_int64(slope);
}

}  // namespace

PLFn::PLFn(std::vector<Rational> xs, std::vector<Rational> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() < 2 || xs_.size() != ys_.size()) throw std::invalid_argument("PLFn needs matching breakpoints and values");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (!(xs_[i] < xs_[i + 1])) throw std::invalid_argument("PLFn breakpoints must increase strictly");
    integral_slope(ys_[i + 1] - ys_[i], xs_[i + 1] - xs_[i]);
  }
  for (auto& v : xs_) v.canonicalize();
  for (auto& v : ys_) v.canonicalize();
  simplify();
}

PLFn PLFn::affine(const Interval& domain, const AffineFn& f) {
  return PLFn({domain.lo, domain.hi}, {f(domain.lo), f(domain.hi)});
}

PLFn PLFn::from_slopes(std::vector<Rational> xs, const std::vector<std::int64_t>& slopes, const Rational& start) {
  if (xs.size() != slopes.size() + 1) throw std::invalid_argument("one slope per piece expected");
  std::vector<Rational> ys{start};
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    ys.push_back(ys.back() + Rational(static_cast<long>(slopes[i])) * (xs[i + 1] - xs[i]));
  }
  return PLFn(std::move(xs), std::move(ys));
}

void PLFn::simplify() {
  std::vector<Rational> xs{xs_.front()};
  std::vector<Rational> ys{ys_.front()};
  for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
    const Rational left = (ys_[i] - ys.back()) / (xs_[i] - xs.back());
    const Rational right = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    if (left != right) {
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  xs.push_back(xs_.back());
  ys.push_back(ys_.back());
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

std::int64_t PLFn::piece_slope(std::size_t piece) const {
  return integral_slope(ys_[piece + 1] - ys_[piece], xs_[piece + 1] - xs_[piece]);
}

Rational PLFn::operator()(const Rational& x) const {
  if (!domain().contains_closed(x)) {
    throw std::out_of_range("PLFn evaluated at " + to_string(x) + " outside [" + to_string(xs_.front()) + ", " +
                            to_string(xs_.back()) + "]");
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return ys_.back();
  const std::size_t piece = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return ys_[piece] + Rational(static_cast<long>(piece_slope(piece))) * (x - xs_[piece]);
}

std::int64_t PLFn::slope_right(const Rational& x) const {
  if (!(xs_.front() <= x && x < xs_.back())) throw std::out_of_range("no piece to the right of " + to_string(x));
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  return piece_slope(static_cast<std::size_t>(it - xs_.begin()) - 1);
}

std::int64_t PLFn::slope_left(const Rational& x) const {
  if (!(xs_.front() < x && x <= xs_.back())) throw std::out_of_range("no piece to the left of " + to_string(x));
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  return piece_slope(static_cast<std::size_t>(it - xs_.begin()) - 1);
}

PLFn PLFn::restrict(const Interval& sub) const {
  if (!(sub.lo < sub.hi) || !domain().contains_closed(sub.lo) || !domain().contains_closed(sub.hi)) {
    throw std::invalid_argument("restriction interval is not inside the domain");
  }
  std::vector<Rational> xs{sub.lo};
  for (const auto& x : xs_) {
    if (sub.lo < x && x < sub.hi) xs.push_back(x);
  }
  xs.push_back(sub.hi);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back((*this)(x));
  return PLFn(std::move(xs), std::move(ys));
}

PLFn PLFn::translate(const Rational& shift) const {
  PLFn out;
  out.xs_ = xs_;
  for (auto& x : out.xs_) x -= shift;
  out.ys_ = ys_;
  return out;
}

std::vector<std::pair<Rational, std::int64_t>> PLFn::kinks(const Rational& from, const Rational& to) const {
  std::vector<std::pair<Rational, std::int64_t>> out;
  for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
    if (from <= xs_[i] && xs_[i] < to) out.emplace_back(xs_[i], piece_slope(i) - piece_slope(i - 1));
  }
  return out;
}

PLFn operator+(const PLFn& a, const PLFn& b) {
  if (a.domain() != b.domain()) throw std::invalid_argument("PLFn sum needs equal domains");
  std::vector<Rational> xs;
  std::set_union(a.xs_.begin(), a.xs_.end(), b.xs_.begin(), b.xs_.end(), std::back_inserter(xs));
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(a(x) + b(x));
  return PLFn(std::move(xs), std::move(ys));
}

PLFn operator+(const PLFn& a, const AffineFn& b) {
  if (!b.is_integer_affine()) throw std::invalid_argument("adding a non-integer affine function");
  PLFn out = a;
  for (std::size_t i = 0; i < out.xs_.size(); ++i) out.ys_[i] += b(out.xs_[i]);
  out.simplify();
  return out;
}

PLFn operator-(const PLFn& a) {
  PLFn out = a;
  for (auto& y : out.ys_) y = -y;
  return out;
}

std::string PLFn::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    out << (i ? " " : "") << '(' << to_string(xs_[i]) << ", " << to_string(ys_[i]) << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// CircleFn

CircleFn::CircleFn(PLFn fn, AffineFn wrap_jump) : fn_(std::move(fn)), wrap_jump_(std::move(wrap_jump)) {
  if (!wrap_jump_.is_integer_affine()) throw std::invalid_argument("wrap jump must be integer affine");
  const Interval d = fn_.domain();
  if (fn_(d.hi) != fn_(d.lo) + wrap_jump_(d.hi)) {
    throw std::invalid_argument("circle function is discontinuous across the wrap point");
  }
}

PLFn CircleFn::on_interval(const Interval& target) const {
  if (!is_global()) throw std::invalid_argument("only global circle functions unroll periodically");
  const Interval d = fn_.domain();
  const Rational period = d.length();
  // First period copy whose right end lies past target.lo.
  Rational k = floor_div(target.lo - d.lo, period);
  std::vector<Rational> xs{target.lo};
  for (;; k += 1) {
    const Rational shift = k * period;
    for (std::size_t i = 1; i < fn_.breakpoints().size(); ++i) {
      const Rational x = fn_.breakpoints()[i] + shift;
      if (x >= target.hi) break;
      if (x > target.lo) xs.push_back(x);
    }
    if (d.hi + shift >= target.hi) break;
  }
  xs.push_back(target.hi);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(fn_(d.lo + mod_positive(x - d.lo, period)));
  return PLFn(std::move(xs), std::move(ys));
}

CircleFn operator+(const CircleFn& a, const CircleFn& b) { return {a.fn_ + b.fn_, a.wrap_jump_ + b.wrap_jump_}; }

// ---------------------------------------------------------------------------
// Divisor

namespace {

std::vector<DivisorPoint> collect(const std::map<Rational, std::int64_t>& weights) {
  std::vector<DivisorPoint> out;
  for (const auto& [pos, w] : weights) {
    if (w != 0) out.push_back({pos, w});
  }
  return out;
}

}  // namespace

Divisor::Divisor(const std::vector<DivisorPoint>& points, const Rational& length) {
  std::map<Rational, std::int64_t> weights;
  for (const auto& p : points) weights[mod_positive(p.position, length)] += p.weight;
  points_ = collect(weights);
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  std::map<Rational, std::int64_t> weights;
  for (const auto& p : a.points_) weights[p.position] += p.weight;
  for (const auto& p : b.points_) weights[p.position] += p.weight;
  Divisor out;
  out.points_ = collect(weights);
  return out;
}

Divisor operator-(const Divisor& a) {
  Divisor out = a;
  for (auto& p : out.points_) p.weight = -p.weight;
  return out;
}

std::string Divisor::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < points_.size(); ++i) {
    out << (i ? ", " : "") << '(' << to_string(points_[i].position) << ", " << points_[i].weight << ')';
  }
  out << '}';
  return out.str();
}

Divisor pl_divisor(const CircleFn& f) {
  const PLFn& fn = f.fn();
  const Interval d = fn.domain();
  auto points = std::vector<DivisorPoint>{};
  for (auto& [pos, w] : fn.kinks(d.lo, d.hi)) points.push_back({pos, w});
  const std::int64_t right = fn.slope_right(d.lo) + to_int64(f.wrap_jump().slope);
  points.push_back({d.lo, right - fn.slope_left(d.hi)});
  return Divisor(points, d.length());
}

std::int64_t divisor_degree(const Divisor& d) {
  std::int64_t total = 0;
  for (const auto& p : d.points()) total += p.weight;
  return total;
}

}  // namespace tropbundle
