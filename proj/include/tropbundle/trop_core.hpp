#pragma once

// Max-plus scalars and matrices, the group G(r) of tropical monomial
// matrices, and the coordinate map f_A.

#include "tropbundle/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropbundle {

/// Element of R ∪ {-inf} with an exact finite part.
class TropValue {
 public:
  /// -inf, the neutral element of ⊕.
  TropValue() = default;
  TropValue(Rational v) : value_(std::move(v)) { value_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  TropValue(long v) : value_(Rational(v)) {}                                 // NOLINT(google-explicit-constructor)

  static TropValue neg_infinity() { return {}; }

  bool is_finite() const { return value_.has_value(); }
  /// Finite part. Throws std::logic_error on -inf.
  const Rational& value() const;

  friend TropValue operator+(const TropValue& a, const TropValue& b);  // ⊕ = max
  friend TropValue operator*(const TropValue& a, const TropValue& b);  // ⊙ = +
  friend bool operator==(const TropValue& a, const TropValue& b) = default;

  std::string str() const;

 private:
  std::optional<Rational> value_;
};

class TropMatrix {
 public:
  /// rows × cols matrix filled with -inf.
  TropMatrix(std::size_t rows, std::size_t cols);
  /// Row-major construction; every row must have the same length.
  TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows);

  static TropMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const TropValue& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  TropValue& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  std::size_t finite_in_row(std::size_t i) const;
  std::size_t finite_in_col(std::size_t j) const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropValue> cells_;
};

/// c_ij = max_k (a_ik + b_kj). Throws std::invalid_argument on an inner
/// dimension mismatch.
TropMatrix tmat_mul(const TropMatrix& a, const TropMatrix& b);

/// True iff `a` is square with exactly one finite entry per row and column.
bool tmat_is_invertible(const TropMatrix& a);

/// f_A(x): coordinate i is (A ⊙ x)_i if finite and 0 otherwise. A must have
/// at most one finite entry per row and `x.size() == A.cols()`.
std::vector<Rational> apply_f_A(const TropMatrix& a, std::span<const Rational> x);

/// Bijection of {0, …, n-1}. Printed and serialized 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  /// Parses 1-based images (the file format convention).
  static Permutation from_one_based(std::span<const int> images);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  bool is_identity() const;
  Permutation inverse() const;
  /// i ↦ next(this(i)).
  Permutation then(const Permutation& next) const;
  /// Orbits, each listed from its smallest element along i ↦ σ(i); orbits
  /// are ordered by smallest element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Element of G(r): row i carries its only finite entry v_i at column σ(i).
/// The dense rendering equals A_σ ⊙ D(a) with a_j = v_{σ⁻¹(j)}.
class MonomialMatrix {
 public:
  MonomialMatrix(Permutation perm, std::vector<Rational> row_values);

  static MonomialMatrix identity(std::size_t n);
  /// A_σ.
  static MonomialMatrix permutation(Permutation perm);
  /// D(a_1, …, a_r).
  static MonomialMatrix diagonal(std::vector<Rational> values);
  /// Factors a dense matrix; throws std::invalid_argument unless it is in G(r).
  static MonomialMatrix from_dense(const TropMatrix& m);

  std::size_t size() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<Rational>& row_values() const { return row_values_; }
  /// a_j = v_{σ⁻¹(j)}, the diagonal factor of A_σ ⊙ D(a).
  std::vector<Rational> diagonal_factor() const;

  TropMatrix dense() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  Permutation perm_;
  std::vector<Rational> row_values_;
};

/// M2 ⊙ M1: permutation i ↦ σ₁(σ₂(i)), row value v2_i + v1_{σ₂(i)}.
MonomialMatrix gmat_mul(const MonomialMatrix& m2, const MonomialMatrix& m1);
MonomialMatrix gmat_inverse(const MonomialMatrix& m);

}  // namespace tropbundle
