#include "tropbundle/trop_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropbundle {

const Rational& TropValue::value() const {
  if (!value_) throw std::logic_error("value() of -inf");
  return *value_;
}

TropValue operator+(const TropValue& a, const TropValue& b) {
  if (!a.is_finite()) return b;
  if (!b.is_finite()) return a;
  return a.value() >= b.value() ? a : b;
}

TropValue operator*(const TropValue& a, const TropValue& b) {
  if (!a.is_finite() || !b.is_finite()) return TropValue::neg_infinity();
  return TropValue(Rational(a.value() + b.value()));
}

std::string TropValue::str() const { return is_finite() ? to_string(*value_) : "-inf"; }

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  cells_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = TropValue(0L);
  return e;
}

std::size_t TropMatrix::finite_in_row(std::size_t i) const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < cols_; ++j) count += (*this)(i, j).is_finite() ? 1 : 0;
  return count;
}

std::size_t TropMatrix::finite_in_col(std::size_t j) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < rows_; ++i) count += (*this)(i, j).is_finite() ? 1 : 0;
  return count;
}

std::string TropMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
    out << ']';
  }
  out << ']';
  return out.str();
}

TropMatrix tmat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("tmat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      TropValue acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

bool tmat_is_invertible(const TropMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.finite_in_row(i) != 1 || a.finite_in_col(i) != 1) return false;
  }
  return true;
}

std::vector<Rational> apply_f_A(const TropMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("apply_f_A: vector length differs from column count");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.finite_in_row(i) > 1) {
      throw std::invalid_argument("apply_f_A: row " + std::to_string(i + 1) + " has more than one finite entry");
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_finite()) y[i] = a(i, j).value() + x[j];
    }
  }
  return y;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (int& v : zero_based) --v;
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next(images_[i]);
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    for (int i = static_cast<int>(start); !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
  }
  return out;
}

MonomialMatrix::MonomialMatrix(Permutation perm, std::vector<Rational> row_values)
    : perm_(std::move(perm)), row_values_(std::move(row_values)) {
  if (row_values_.size() != perm_.size()) throw std::invalid_argument("row value count differs from permutation size");
  for (auto& v : row_values_) v.canonicalize();
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  return {Permutation::identity(n), std::vector<Rational>(n)};
}

MonomialMatrix MonomialMatrix::permutation(Permutation perm) {
  const std::size_t n = perm.size();
  return {std::move(perm), std::vector<Rational>(n)};
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Rational> values) {
  const std::size_t n = values.size();
  return {Permutation::identity(n), std::move(values)};
}

MonomialMatrix MonomialMatrix::from_dense(const TropMatrix& m) {
  if (!tmat_is_invertible(m)) throw std::invalid_argument("matrix is not in G(r): " + m.str());
  std::vector<int> images(m.rows());
  std::vector<Rational> values(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_finite()) {
        images[i] = static_cast<int>(j);
        values[i] = m(i, j).value();
      }
    }
  }
  return {Permutation(std::move(images)), std::move(values)};
}

std::vector<Rational> MonomialMatrix::diagonal_factor() const {
  std::vector<Rational> a(size());
  for (std::size_t i = 0; i < size(); ++i) a[perm_(i)] = row_values_[i];
  return a;
}

TropMatrix MonomialMatrix::dense() const {
  TropMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, perm_(i)) = TropValue(row_values_[i]);
  return m;
}

MonomialMatrix gmat_mul(const MonomialMatrix& m2, const MonomialMatrix& m1) {
  if (m2.size() != m1.size()) throw std::invalid_argument("gmat_mul: sizes differ");
  std::vector<Rational> values(m2.size());
  for (std::size_t i = 0; i < m2.size(); ++i) {
    values[i] = m2.row_values()[i] + m1.row_values()[m2.perm()(i)];
  }
  return {m2.perm().then(m1.perm()), std::move(values)};
}

MonomialMatrix gmat_inverse(const MonomialMatrix& m) {
  // Row j of the inverse sits at column σ⁻¹(j) with value -v_{σ⁻¹(j)}.
  Permutation inv = m.perm().inverse();
  std::vector<Rational> values(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) values[j] = -m.row_values()[inv(j)];
  return {std::move(inv), std::move(values)};
}

}  // namespace tropbundle
