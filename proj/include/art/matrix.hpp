#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "art/field.hpp"

namespace art {

/// Dense matrices over an exact field. Entries are always in canonical form
/// (reduced fractions / residues in [0,p)). Elimination uses one fixed rule:
/// leftmost nonzero column, first available row, so every echelon form, basis
/// and solution produced here is deterministic.
template <class F>
class Mat {
 public:
  using Elt = typename F::Elt;

  Mat() : fld_(), rows_(0), cols_(0) {}
  Mat(F f, std::size_t rows, std::size_t cols)
      : fld_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Mat identity(F f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return fld_; }

  Elt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(fld_ == o.fld_)) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!fld_.eq(a_[k], o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!fld_.is_zero(v)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(fld_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Mat r(fld_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (fld_.is_zero(at(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = fld_.add(r.at(i, j), fld_.mul(at(i, k), o.at(k, j)));
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o, "sum");
    Mat r(fld_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.add(a_[k], o.a_[k]);
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o, "difference");
    Mat r(fld_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.sub(a_[k], o.a_[k]);
    return r;
  }

  Mat scaled(const Elt& c) const {
    Mat r(fld_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.mul(a_[k], c);
    return r;
  }

  Mat negated() const {
    Mat r(fld_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.neg(a_[k]);
    return r;
  }

  /// Kronecker product, row-major block layout.
  Mat kron(const Mat& o) const {
    Mat r(fld_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l)
            r.at(i * o.rows_ + k, j * o.cols_ + l) = fld_.mul(at(i, j), o.at(k, l));
    return r;
  }

  Mat hstack(const Mat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
    Mat r(fld_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Mat vstack(const Mat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
    Mat r(fld_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Mat block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    Mat r(fld_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
  }

  void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }

  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Mat col(std::size_t j) const { return block(0, j, rows_, 1); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? " [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << fld_.to_string(at(i, j));
      os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
  }

 private:
  void require_same_shape(const Mat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("matrix ") + what + ": shape mismatch");
  }

  F fld_;
  std::size_t rows_, cols_;
  std::vector<Elt> a_;
};

template <class F>
Mat<F> block_diag(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

/// Reduced row echelon form plus its pivot columns. The pivoting rule is
/// fixed (scan columns left to right, take the first row with a nonzero
/// entry), so the output is a canonical invariant of the row space.
template <class F>
struct Echelon {
  Mat<F> rref;
  std::vector<std::size_t> pivots;
};

template <class F>
Echelon<F> echelon(Mat<F> m) {
  const F f = m.field();
  Echelon<F> e{m, {}};
  Mat<F>& a = e.rref;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!f.is_zero(a.at(i, c))) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    const auto d = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), d);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      const auto q = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(q, a.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return echelon(m).pivots.size();
}

/// A linear subspace of k^ambient, stored as a canonical (RREF) row basis.
template <class F>
struct Subspace {
  std::size_t ambient = 0;
  Mat<F> basis;  // dim x ambient, rows in RREF

  std::size_t dim() const { return basis.rows(); }

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

template <class F>
Subspace<F> row_space(const Mat<F>& m) {
  auto e = echelon(m);
  Mat<F> b(m.field(), e.pivots.size(), m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = e.rref.at(i, j);
  return Subspace<F>{m.cols(), b};
}

/// Canonical basis of {v : m v = 0}, dim = cols - rank.
template <class F>
Subspace<F> kernel_basis(const Mat<F>& m) {
  const F f = m.field();
  auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> b(f, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    b.at(k, free_cols[k]) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      b.at(k, e.pivots[i]) = f.neg(e.rref.at(i, free_cols[k]));
  }
  return row_space(b);
}

/// Any particular solution x of m x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent. rhs may have several columns.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& m, const Mat<F>& rhs) {
  const F f = m.field();
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row count mismatch");
  auto e = echelon(m.hstack(rhs));
  for (auto c : e.pivots)
    if (c >= m.cols()) return std::nullopt;
  Mat<F> x(f, m.cols(), rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.at(e.pivots[i], j) = e.rref.at(i, m.cols() + j);
  return x;
}

/// Solve x m = rhs (acting on the other side).
template <class F>
std::optional<Mat<F>> solve_left(const Mat<F>& m, const Mat<F>& rhs) {
  auto xt = solve(m.transpose(), rhs.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Mat<F>::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((*x * m) == Mat<F>::identity(m.field(), m.rows()))) return std::nullopt;
  return x;
}

template <class F>
bool is_invertible(const Mat<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class F>
bool contains(const Subspace<F>& s, const Mat<F>& column_vector) {
  if (s.basis.rows() == 0) return column_vector.is_zero();
  return solve(s.basis.transpose(), column_vector).has_value();
}

/// A surjection q : k^n -> k^(n-dim sub) whose kernel is exactly sub.
template <class F>
Mat<F> quotient_map(std::size_t ambient_dim, const Subspace<F>& sub) {
  if (sub.ambient != ambient_dim)
    throw std::invalid_argument("quotient_map: ambient dimension mismatch");
  return kernel_basis(sub.basis).basis;
}

/// Canonical inclusion of the column space: columns form the RREF basis of
/// the space spanned by the columns of m.
template <class F>
Mat<F> column_space_inclusion(const Mat<F>& m) {
  return row_space(m.transpose()).basis.transpose();
}

/// Sum and intersection of subspaces of the same ambient space.
template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  return row_space(a.basis.vstack(b.basis));
}

template <class F>
bool subspace_leq(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_leq: ambient mismatch");
  return subspace_sum(a, b) == b;
}

}  // namespace art
