#pragma once

// Tropical vector bundles on the circle curve, given by gluing data on the
// consecutive chart overlaps, and everything that can be computed from
// them: gauge transformations, the single-transition reduction, splitting
// into indecomposables, normal forms and classification, sections, the
// first Chern class and pull-backs along m-fold covers.
//
// Orientation: the transition on overlap k maps chart-k fiber coordinates to
// chart-(k+1) coordinates, b = M_k(x) ⊙ a, with x the chart-k coordinate.

#include "tropbundle/curve.hpp"
#include "tropbundle/trop_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropbundle {

/// G(r)-valued map with affine entries: row i's only finite entry is
/// rows[i], at column perm(i).
struct AffineMonomial {
  Permutation perm;
  std::vector<AffineFn> rows;

  static AffineMonomial identity(std::size_t n);
  static AffineMonomial constant(const MonomialMatrix& m);

  std::size_t size() const { return perm.size(); }
  bool is_identity() const;
  MonomialMatrix at(const Rational& x) const;
  /// Same map read in a coordinate displaced by `steps` loops.
  AffineMonomial continued(std::int64_t steps, const Rational& length) const;

  friend bool operator==(const AffineMonomial&, const AffineMonomial&) = default;
};

/// Pointwise M2(x) ⊙ M1(x).
AffineMonomial operator*(const AffineMonomial& m2, const AffineMonomial& m1);
AffineMonomial inverse(const AffineMonomial& m);

/// Gluing datum on one overlap, held as a dense r×r grid of entries
/// (std::nullopt is -inf) so that malformed data can be represented and
/// reported by validate_bundle.
class TransitionMap {
 public:
  explicit TransitionMap(std::size_t size);
  TransitionMap(const AffineMonomial& m);  // NOLINT(google-explicit-constructor)

  static TransitionMap identity(std::size_t size) { return AffineMonomial::identity(size); }

  std::size_t size() const { return size_; }
  const std::optional<AffineFn>& cell(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }
  std::optional<AffineFn>& cell(std::size_t i, std::size_t j) { return cells_[i * size_ + j]; }

  /// Monomial view; std::nullopt unless exactly one finite entry sits in
  /// every row and every column.
  std::optional<AffineMonomial> as_monomial() const;
  bool is_identity() const;

  friend bool operator==(const TransitionMap&, const TransitionMap&) = default;

 private:
  std::size_t size_;
  std::vector<std::optional<AffineFn>> cells_;
};

class Bundle {
 public:
  /// One transition per overlap of `curve`, each of size `rank`. Throws
  /// std::invalid_argument on rank < 1 or structurally mismatched data.
  Bundle(Curve curve, int rank, std::vector<TransitionMap> transitions);

  static Bundle trivial(const Curve& curve, int rank);
  /// Bundle whose only non-identity transition sits on overlap 0.
  static Bundle single_transition(const Curve& curve, const AffineMonomial& m);

  const Curve& curve() const { return curve_; }
  int rank() const { return rank_; }
  const std::vector<TransitionMap>& transitions() const { return transitions_; }

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  Curve curve_;
  int rank_;
  std::vector<TransitionMap> transitions_;
};

/// Change of trivialization: chart i's fiber coordinates become E_i ⊙ a,
/// with E_i affine in chart-i coordinates on the whole arc.
struct Gauge {
  std::vector<AffineMonomial> charts;

  static Gauge identity(const Curve& curve, std::size_t rank);
  static Gauge constant(const Curve& curve, const MonomialMatrix& m);
};

/// Gauge applying `first` and then `second`.
Gauge compose(const Gauge& second, const Gauge& first);

/// Isomorphism invariant of an indecomposable bundle: rank, degree and the
/// moduli offset t in [0, gcd(r, d)·L).
struct IndecClass {
  std::int64_t rank;
  std::int64_t degree;
  Rational offset;
  Rational modulus;

  friend bool operator==(const IndecClass&, const IndecClass&) = default;
  friend bool operator<(const IndecClass& a, const IndecClass& b);
};

/// Chart-major section data: components[i][j] is coordinate j on chart i,
/// defined on the closure of arc i in chart-i coordinates.
struct Section {
  std::vector<std::vector<PLFn>> components;

  /// Adds a global function to every coordinate on every chart.
  Section plus(const CircleFn& h, const Curve& curve) const;
};

/// Empty when F is valid; otherwise one message per violation in overlap,
/// row, column order.
std::vector<std::string> validate_bundle(const Bundle& f);

Bundle direct_sum(const Bundle& f, const Bundle& g);
Bundle apply_gauge(const Bundle& f, const Gauge& e);

/// Gauge that folds every transition into overlap 0.
Gauge normalizing_gauge(const Bundle& f);
/// Isomorphic bundle with identity transitions away from overlap 0.
Bundle normalize(const Bundle& f);

/// Splits along the orbits of the remaining permutation after normalizing.
std::vector<Bundle> decompose(const Bundle& f);

/// The standard cycle the normal form is conjugated to: row i's entry sits
/// at column i-1 (row 1 at column r).
Permutation standard_cycle(std::size_t r);

/// Throws std::invalid_argument("decomposable") unless F is indecomposable.
IndecClass normal_form(const Bundle& f);
/// Sorted multiset of the classes of the indecomposable summands.
std::vector<IndecClass> classify(const Bundle& f);
bool is_isomorphic(const Bundle& f, const Bundle& g);

/// Minus the total slope of all transition entries.
std::int64_t degree(const Bundle& f);
/// Degree of c_k(F)·X: degree(F) for k = 1, 0 for k outside {0, 1} (the
/// base is a curve), std::nullopt for k = 0 where c_0 is the identity.
std::optional<std::int64_t> chern_k_degree(const Bundle& f, int k);

/// Pull-back along the m-fold cover of the curve by the curve of length m·L.
Bundle pull_back_cover(const Bundle& f, int m);

/// Empty when `s` is a section of F; otherwise a description of each
/// mismatch.
std::vector<std::string> section_mismatches(const Bundle& f, const Section& s);
bool is_section_of(const Bundle& f, const Section& s);

Section canonical_section(const Bundle& f);
/// Divisor of the sum of the section's coordinates, assembled chart by chart.
Divisor chern1(const Bundle& f, const Section& s);

}  // namespace tropbundle
