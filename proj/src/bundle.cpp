#include "tropbundle/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tropbundle {

// ---------------------------------------------------------------------------
// AffineMonomial

AffineMonomial AffineMonomial::identity(std::size_t n) { return {Permutation::identity(n), std::vector<AffineFn>(n)}; }

AffineMonomial AffineMonomial::constant(const MonomialMatrix& m) {
  AffineMonomial out{m.perm(), {}};
  for (const auto& v : m.row_values()) out.rows.push_back(AffineFn::constant(v));
  return out;
}

bool AffineMonomial::is_identity() const {
  return perm.is_identity() && std::all_of(rows.begin(), rows.end(), [](const AffineFn& f) { return f.is_zero(); });
}

MonomialMatrix AffineMonomial::at(const Rational& x) const {
  std::vector<Rational> values;
  values.reserve(rows.size());
  for (const auto& f : rows) values.push_back(f(x));
  return {perm, std::move(values)};
}

AffineMonomial AffineMonomial::continued(std::int64_t steps, const Rational& length) const {
  AffineMonomial out = *this;
  for (auto& f : out.rows) f = continue_affine(f, steps, length);
  return out;
}

AffineMonomial operator*(const AffineMonomial& m2, const AffineMonomial& m1) {
  if (m2.size() != m1.size()) throw std::invalid_argument("monomial sizes differ");
  AffineMonomial out{m2.perm.then(m1.perm), {}};
  out.rows.reserve(m2.size());
  for (std::size_t i = 0; i < m2.size(); ++i) out.rows.push_back(m2.rows[i] + m1.rows[m2.perm(i)]);
  return out;
}

AffineMonomial inverse(const AffineMonomial& m) {
  AffineMonomial out{m.perm.inverse(), {}};
  out.rows.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) out.rows.push_back(-m.rows[out.perm(j)]);
  return out;
}

// ---------------------------------------------------------------------------
// TransitionMap, Bundle, Gauge

TransitionMap::TransitionMap(std::size_t size) : size_(size), cells_(size * size) {}

TransitionMap::TransitionMap(const AffineMonomial& m) : TransitionMap(m.size()) {
  for (std::size_t i = 0; i < size_; ++i) cell(i, m.perm(i)) = m.rows[i];
}

std::optional<AffineMonomial> TransitionMap::as_monomial() const {
  std::vector<int> images(size_, -1);
  std::vector<AffineFn> rows(size_);
  std::vector<int> column_hits(size_, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (!cell(i, j)) continue;
      if (images[i] != -1) return std::nullopt;
      images[i] = static_cast<int>(j);
      rows[i] = *cell(i, j);
      ++column_hits[j];
    }
    if (images[i] == -1) return std::nullopt;
  }
  if (std::any_of(column_hits.begin(), column_hits.end(), [](int c) { return c != 1; })) return std::nullopt;
  return AffineMonomial{Permutation(std::move(images)), std::move(rows)};
}

bool TransitionMap::is_identity() const {
  const auto m = as_monomial();
  return m && m->is_identity();
}

Bundle::Bundle(Curve curve, int rank, std::vector<TransitionMap> transitions)
    : curve_(std::move(curve)), rank_(rank), transitions_(std::move(transitions)) {
  if (rank_ < 1) throw std::invalid_argument("bundle rank must be at least 1");
  if (transitions_.size() != static_cast<std::size_t>(curve_.charts())) {
    throw std::invalid_argument("expected one transition per overlap");
  }
  for (const auto& t : transitions_) {
    if (t.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("transition size differs from rank");
  }
}

Bundle Bundle::trivial(const Curve& curve, int rank) {
  if (rank < 1) throw std::invalid_argument("bundle rank must be at least 1");
  return {curve, rank, std::vector<TransitionMap>(curve.charts(), TransitionMap::identity(rank))};
}

Bundle Bundle::single_transition(const Curve& curve, const AffineMonomial& m) {
  const int rank = static_cast<int>(m.size());
  std::vector<TransitionMap> transitions(curve.charts(), TransitionMap::identity(m.size()));
  transitions[0] = m;
  return {curve, rank, std::move(transitions)};
}

Gauge Gauge::identity(const Curve& curve, std::size_t rank) {
  return {std::vector<AffineMonomial>(curve.charts(), AffineMonomial::identity(rank))};
}

Gauge Gauge::constant(const Curve& curve, const MonomialMatrix& m) {
  return {std::vector<AffineMonomial>(curve.charts(), AffineMonomial::constant(m))};
}

Gauge compose(const Gauge& second, const Gauge& first) {
  if (second.charts.size() != first.charts.size()) throw std::invalid_argument("gauges live on different covers");
  Gauge out;
  for (std::size_t i = 0; i < first.charts.size(); ++i) out.charts.push_back(second.charts[i] * first.charts[i]);
  return out;
}

bool operator<(const IndecClass& a, const IndecClass& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.offset != b.offset) return a.offset < b.offset;
  return a.modulus < b.modulus;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate_bundle(const Bundle& f) {
  std::vector<std::string> violations;
  for (std::size_t k = 0; k < f.transitions().size(); ++k) {
    const TransitionMap& t = f.transitions()[k];
    const std::string where = "overlap " + std::to_string(k + 1) + ": ";
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t finite = 0;
      for (std::size_t j = 0; j < t.size(); ++j) finite += t.cell(i, j) ? 1 : 0;
      if (finite != 1) {
        violations.push_back(where + "not in G(r): row " + std::to_string(i + 1) + " has " + std::to_string(finite) +
                             " finite entries");
      }
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::size_t finite = 0;
      for (std::size_t i = 0; i < t.size(); ++i) finite += t.cell(i, j) ? 1 : 0;
      if (finite != 1) {
        violations.push_back(where + "not in G(r): column " + std::to_string(j + 1) + " has " +
                             std::to_string(finite) + " finite entries");
      }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t.cell(i, j) && !t.cell(i, j)->is_integer_affine()) {
          violations.push_back(where + "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") not integer affine: slope " + to_string(t.cell(i, j)->slope));
        }
      }
    }
  }
  return violations;
}

namespace {

std::vector<AffineMonomial> checked_monomials(const Bundle& f) {
  const auto violations = validate_bundle(f);
  if (!violations.empty()) throw std::invalid_argument("invalid bundle: " + violations.front());
  std::vector<AffineMonomial> out;
  out.reserve(f.transitions().size());
  for (const auto& t : f.transitions()) out.push_back(*t.as_monomial());
  return out;
}

Bundle from_monomials(const Bundle& like, const std::vector<AffineMonomial>& ms) {
  return {like.curve(), like.rank(), std::vector<TransitionMap>(ms.begin(), ms.end())};
}

void require_same_curve(const Bundle& f, const Bundle& g) {
  if (f.curve() != g.curve()) throw std::invalid_argument("bundles live on different curves");
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructions

Bundle direct_sum(const Bundle& f, const Bundle& g) {
  require_same_curve(f, g);
  const auto fm = checked_monomials(f);
  const auto gm = checked_monomials(g);
  const int r = f.rank();
  std::vector<AffineMonomial> out;
  for (std::size_t k = 0; k < fm.size(); ++k) {
    std::vector<int> images = fm[k].perm.images();
    for (int v : gm[k].perm.images()) images.push_back(v + r);
    std::vector<AffineFn> rows = fm[k].rows;
    rows.insert(rows.end(), gm[k].rows.begin(), gm[k].rows.end());
    out.push_back({Permutation(std::move(images)), std::move(rows)});
  }
  return {f.curve(), f.rank() + g.rank(), std::vector<TransitionMap>(out.begin(), out.end())};
}

Bundle apply_gauge(const Bundle& f, const Gauge& e) {
  const Curve& curve = f.curve();
  const int s = curve.charts();
  if (e.charts.size() != static_cast<std::size_t>(s)) throw std::invalid_argument("gauge has wrong chart count");
  for (const auto& chart : e.charts) {
    if (chart.size() != static_cast<std::size_t>(f.rank())) throw std::invalid_argument("gauge size differs from rank");
    for (const auto& entry : chart.rows) {
      if (!entry.is_integer_affine()) throw std::invalid_argument("gauge entry is not integer affine");
    }
  }
  auto ms = checked_monomials(f);
  for (int k = 0; k < s; ++k) {
    // On the last overlap chart 0 is read one loop back.
    const AffineMonomial next = k == s - 1 ? e.charts[0].continued(-1, curve.length()) : e.charts[k + 1];
    ms[k] = next * ms[k] * inverse(e.charts[k]);
  }
  return from_monomials(f, ms);
}

Gauge normalizing_gauge(const Bundle& f) {
  const Curve& curve = f.curve();
  Bundle current = from_monomials(f, checked_monomials(f));
  Gauge total = Gauge::identity(curve, f.rank());
  for (int k = 1; k < curve.charts(); ++k) {
    const auto m = *current.transitions()[k].as_monomial();
    if (m.is_identity()) continue;
    // Charts 1..k share chart k's coordinate, so m extends to them unchanged.
    Gauge step = Gauge::identity(curve, f.rank());
    for (int i = 1; i <= k; ++i) step.charts[i] = m;
    current = apply_gauge(current, step);
    total = compose(step, total);
  }
  return total;
}

Bundle normalize(const Bundle& f) { return apply_gauge(f, normalizing_gauge(f)); }

std::vector<Bundle> decompose(const Bundle& f) {
  const Bundle n = normalize(f);
  const AffineMonomial m = *n.transitions()[0].as_monomial();
  std::vector<Bundle> out;
  for (auto orbit : m.perm.cycles()) {
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> local(m.size(), -1);
    for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<int>(i);
    AffineMonomial part{};
    std::vector<int> images;
    for (int i : orbit) {
      images.push_back(local[m.perm(i)]);
      part.rows.push_back(m.rows[i]);
    }
    part.perm = Permutation(std::move(images));
    out.push_back(Bundle::single_transition(f.curve(), part));
  }
  return out;
}

Permutation standard_cycle(std::size_t r) {
  std::vector<int> images(r);
  for (std::size_t i = 0; i < r; ++i) images[i] = static_cast<int>((i + r - 1) % r);
  return Permutation(std::move(images));
}

IndecClass normal_form(const Bundle& f) {
  const auto parts = decompose(f);
  if (parts.size() != 1) throw std::invalid_argument("decomposable");
  const Curve& curve = f.curve();
  const Rational& length = curve.length();
  const std::size_t r = static_cast<std::size_t>(f.rank());

  // Conjugate the cycle onto the standard one with a constant A_ϱ, where
  // ϱ(r - m) = σ^m(1).
  const AffineMonomial m = *parts[0].transitions()[0].as_monomial();
  std::vector<int> rho(r, 0);
  int c = 0;
  for (std::size_t step = 1; step < r; ++step) {
    c = m.perm(c);
    rho[r - step] = c;
  }
  const Bundle conjugated = apply_gauge(parts[0], Gauge::constant(curve, MonomialMatrix::permutation(Permutation(rho))));
  const AffineMonomial cyc = *conjugated.transitions()[0].as_monomial();
  if (cyc.perm != standard_cycle(r)) throw std::logic_error("normal_form: conjugation missed the standard cycle");

  // δ_p = Σ_{j≥p} (j-p+1)·α_j (1-based), with δ_{r+1} = 0.
  std::vector<Rational> delta(r + 1);
  for (std::size_t p = 1; p <= r; ++p) {
    for (std::size_t j = p; j < r; ++j) delta[p] += Rational(static_cast<long>(j - p + 1)) * cyc.rows[j].slope;
  }
  // e_i = φ_{i+1} + … + φ_r - δ_{i+1}·L; chart 0 sees the continuation.
  AffineMonomial diag = AffineMonomial::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    AffineFn e = AffineFn::constant(-delta[i + 1] * length);
    for (std::size_t j = i + 1; j < r; ++j) e = e + cyc.rows[j];
    diag.rows[i] = e;
  }
  Gauge collapse = Gauge::identity(curve, r);
  collapse.charts[0] = diag.continued(1, length);
  for (int i = 1; i < curve.charts(); ++i) collapse.charts[i] = diag;
  const AffineMonomial collapsed = *apply_gauge(conjugated, collapse).transitions()[0].as_monomial();

  AffineFn expected = AffineFn::constant(-delta[1] * length);
  for (const auto& phi : cyc.rows) expected = expected + phi;
  const bool shape_ok = collapsed.perm == cyc.perm && collapsed.rows[0] == expected &&
                        std::all_of(collapsed.rows.begin() + 1, collapsed.rows.end(),
                                    [](const AffineFn& g) { return g.is_zero(); });
  if (!shape_ok) throw std::logic_error("normal_form: collapse did not reach D(φ', 0, …, 0)");

  const std::int64_t d = -to_int64(expected.slope);
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(r), d);  // gcd(r, 0) = r
  IndecClass out{static_cast<std::int64_t>(r), d, {}, Rational(g) * length};
  out.modulus.canonicalize();
  out.offset = mod_positive(expected(Rational(0)), out.modulus);
  return out;
}

std::vector<IndecClass> classify(const Bundle& f) {
  std::vector<IndecClass> out;
  for (const auto& part : decompose(f)) out.push_back(normal_form(part));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const Bundle& f, const Bundle& g) {
  require_same_curve(f, g);
  if (f.rank() != g.rank()) return false;
  return classify(f) == classify(g);
}

std::int64_t degree(const Bundle& f) {
  Rational total;
  for (const auto& m : checked_monomials(f)) {
    for (const auto& entry : m.rows) total -= entry.slope;
  }
  return to_int64(total);
}

std::optional<std::int64_t> chern_k_degree(const Bundle& f, int k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return degree(f);
  return 0;
}

Bundle pull_back_cover(const Bundle& f, int m) {
  if (m < 1) throw std::invalid_argument("cover degree must be at least 1");
  const Curve& base = f.curve();
  const Curve cover(base.length() * m, base.charts() * m);
  std::vector<TransitionMap> transitions;
  for (int sheet = 0; sheet < m; ++sheet) {
    for (const auto& t : f.transitions()) {
      TransitionMap lifted = t;
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (auto& cell = lifted.cell(i, j)) *cell = continue_affine(*cell, -sheet, base.length());
        }
      }
      transitions.push_back(std::move(lifted));
    }
  }
  return {cover, f.rank(), std::move(transitions)};
}

// ---------------------------------------------------------------------------
// Sections

Section Section::plus(const CircleFn& h, const Curve& curve) const {
  Section out = *this;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const Interval arc = curve.arc(static_cast<int>(i));
    for (auto& component : out.components[i]) component = component + h.on_interval(arc);
  }
  return out;
}

std::vector<std::string> section_mismatches(const Bundle& f, const Section& s) {
  const Curve& curve = f.curve();
  const auto ms = checked_monomials(f);
  std::vector<std::string> problems;
  if (s.components.size() != static_cast<std::size_t>(curve.charts())) {
    problems.push_back("section has " + std::to_string(s.components.size()) + " charts, bundle has " +
                       std::to_string(curve.charts()));
    return problems;
  }
  for (int i = 0; i < curve.charts(); ++i) {
    const auto& chart = s.components[i];
    if (chart.size() != static_cast<std::size_t>(f.rank())) {
      problems.push_back("chart " + std::to_string(i + 1) + ": wrong number of coordinates");
      continue;
    }
    for (std::size_t j = 0; j < chart.size(); ++j) {
      if (chart[j].domain() != curve.arc(i)) {
        problems.push_back("chart " + std::to_string(i + 1) + ", coordinate " + std::to_string(j + 1) +
                           ": domain is not the arc");
      }
    }
  }
  if (!problems.empty()) return problems;

  for (int k = 0; k < curve.charts(); ++k) {
    const int next = (k + 1) % curve.charts();
    const Interval o = curve.overlap(k);
    const Rational shift = curve.overlap_shift(k);
    for (std::size_t j = 0; j < ms[k].size(); ++j) {
      const PLFn lhs = s.components[next][j].restrict({o.lo + shift, o.hi + shift}).translate(shift);
      const PLFn rhs = s.components[k][ms[k].perm(j)].restrict(o) + ms[k].rows[j];
      if (lhs != rhs) {
        problems.push_back("overlap " + std::to_string(k + 1) + ", coordinate " + std::to_string(j + 1) +
                           ": transition not satisfied");
      }
    }
  }
  return problems;
}

bool is_section_of(const Bundle& f, const Section& s) { return section_mismatches(f, s).empty(); }

namespace {

/// Integer-slope path from value 0 at `from` to `target` at `from + width`:
/// one piece when target/width is an integer, else slopes a+1 then a.
void append_ramp(std::vector<Rational>& xs, std::vector<Rational>& ys, const Rational& from, const Rational& width,
                 const Rational& target) {
  const Rational a = floor_div(target, width);
  const Rational rise = target - a * width;
  if (rise != 0) {
    xs.push_back(from + rise);
    ys.push_back((a + 1) * rise);
  }
  xs.push_back(from + width);
  ys.push_back(target);
}

}  // namespace

Section canonical_section(const Bundle& f) {
  const Curve& curve = f.curve();
  const Rational& length = curve.length();
  const int s = curve.charts();
  const Rational w = length / s;
  const Gauge e = normalizing_gauge(f);
  const AffineMonomial m = *apply_gauge(f, e).transitions()[0].as_monomial();

  // Coordinate c = σ(j) on the lifted stretch [0, L + w]: zero up to (s-1)·w,
  // a ramp across the last overlap, then -v_j(x - L) where chart 0 repeats
  // overlap 0 one loop later.
  std::vector<PLFn> lifted(m.size(), PLFn::constant({0, 1}, 0));
  for (std::size_t j = 0; j < m.size(); ++j) {
    const AffineFn tail = -continue_affine(m.rows[j], -1, length);
    std::vector<Rational> xs{Rational(0), w * (s - 1)};
    std::vector<Rational> ys{Rational(0), Rational(0)};
    append_ramp(xs, ys, w * (s - 1), w, tail(length));
    xs.push_back(length + w);
    ys.push_back(tail(length + w));
    lifted[m.perm(j)] = PLFn(std::move(xs), std::move(ys));
  }

  Section out;
  for (int i = 0; i < s; ++i) {
    const Interval arc = curve.arc(i);
    const AffineMonomial back = inverse(e.charts[i]);
    std::vector<PLFn> normalized;
    for (const auto& u : lifted) {
      normalized.push_back(i == 0 ? u.restrict({arc.lo + length, arc.hi + length}).translate(length) : u.restrict(arc));
    }
    std::vector<PLFn> chart;
    for (std::size_t j = 0; j < back.size(); ++j) chart.push_back(normalized[back.perm(j)] + back.rows[j]);
    out.components.push_back(std::move(chart));
  }
  return out;
}

Divisor chern1(const Bundle& f, const Section& s) {
  const auto problems = section_mismatches(f, s);
  if (!problems.empty()) throw std::invalid_argument("not a section of this bundle: " + problems.front());
  const Curve& curve = f.curve();
  std::vector<DivisorPoint> points;
  for (int i = 0; i < curve.charts(); ++i) {
    PLFn total = s.components[i][0];
    for (std::size_t j = 1; j < s.components[i].size(); ++j) total = total + s.components[i][j];
    const Interval core = curve.core(i);
    for (const auto& [pos, w] : total.kinks(core.lo, core.hi)) points.push_back({pos, w});
  }
  return Divisor(points, curve.length());
}

}  // namespace tropbundle
