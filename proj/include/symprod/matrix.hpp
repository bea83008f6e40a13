#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symprod/errors.hpp"
#include "symprod/field.hpp"

namespace symprod {

// Dense row-major matrix over an exact field. Sizes in this toolkit are tiny
// (a handful of rows, at most a few dozen columns), so plain Gauss-Jordan
// with exact scalars is the right tool; no pivoting heuristics needed for
// correctness, and blowup is a non-issue at these dimensions.
template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat(F field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, f_.zero()) {}

  static Mat identity(F field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field().one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return f_; }

  Elem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  std::vector<Elem> row(std::size_t r) const {
    return std::vector<Elem>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const std::vector<Elem>& v) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (!(a.f_ == b.f_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!a.f_.eq(a.e_[i], b.e_[i])) return false;
    return true;
  }

 private:
  F f_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

struct RrefSummary {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan to reduced row echelon form. The RREF is the canonical
// representative of a row space: two matrices span the same subspace iff
// their nonzero RREF rows agree, which is what Subspace equality leans on.
template <class F>
RrefSummary rref_in_place(Mat<F>& m) {
  const F& f = m.field();
  RrefSummary s;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t r = pr;
    while (r < m.rows() && f.is_zero(m.at(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(pr, r);
    auto piv_inv = f.inv(m.at(pr, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) = f.mul(m.at(pr, j), piv_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pr, j)));
    }
    s.pivot_cols.push_back(c);
    ++pr;
  }
  s.rank = pr;
  return s;
}

template <class F>
std::pair<Mat<F>, RrefSummary> rref(Mat<F> m) {
  RrefSummary s = rref_in_place(m);
  return {std::move(m), std::move(s)};
}

template <class F>
std::size_t rank_of(Mat<F> m) {
  return rref_in_place(m).rank;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.cols() || !(a.field() == b.field()))
    fail(Errc::invalid_argument, "vstack: incompatible shapes or fields");
  Mat<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

// Rows of the result form a basis of the right null space {x : m x^T = 0}.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  const F& f = m.field();
  auto [red, s] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : s.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat<F> ker(f, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    ker.at(i, fc) = f.one();
    for (std::size_t pr = 0; pr < s.rank; ++pr)
      ker.at(i, s.pivot_cols[pr]) = f.neg(red.at(pr, fc));
  }
  return ker;
}

// One particular solution of m x^T = rhs^T, or absent when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_linear(
    const Mat<F>& m, const std::vector<typename F::Elem>& rhs) {
  if (rhs.size() != m.rows()) fail(Errc::invalid_argument, "solve_linear: rhs size mismatch");
  const F& f = m.field();
  Mat<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  auto [red, s] = rref(std::move(aug));
  if (!s.pivot_cols.empty() && s.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols(), f.zero());
  for (std::size_t pr = 0; pr < s.rank; ++pr) x[s.pivot_cols[pr]] = red.at(pr, m.cols());
  return x;
}

template <class F>
typename F::Elem det(Mat<F> m) {
  if (m.rows() != m.cols()) fail(Errc::invalid_argument, "det of non-square matrix");
  const F& f = m.field();
  auto d = f.one();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t r = c;
    while (r < m.rows() && f.is_zero(m.at(r, c))) ++r;
    if (r == m.rows()) return f.zero();
    if (r != c) {
      m.swap_rows(r, c);
      d = f.neg(d);
    }
    d = f.mul(d, m.at(c, c));
    auto piv_inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      auto factor = f.mul(m.at(i, c), piv_inv);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return d;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const Mat<F>& m,
                                      const std::vector<typename F::Elem>& v) {
  if (v.size() != m.cols()) fail(Errc::invalid_argument, "mat_vec: size mismatch");
  const F& f = m.field();
  std::vector<typename F::Elem> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] = f.add(out[r], f.mul(m.at(r, c), v[c]));
  return out;
}

// Row vector times matrix: (x M) with x of length m.rows().
template <class F>
std::vector<typename F::Elem> vec_mat(const std::vector<typename F::Elem>& x,
                                      const Mat<F>& m) {
  if (x.size() != m.rows()) fail(Errc::invalid_argument, "vec_mat: size mismatch");
  const F& f = m.field();
  std::vector<typename F::Elem> out(m.cols(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (f.is_zero(x[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] = f.add(out[c], f.mul(x[r], m.at(r, c)));
  }
  return out;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    fail(Errc::invalid_argument, "mat_mul: incompatible shapes or fields");
  const F& f = a.field();
  Mat<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return out;
}

using QMat = Mat<RationalField>;
using PMat = Mat<PrimeField>;

}  // namespace symprod
