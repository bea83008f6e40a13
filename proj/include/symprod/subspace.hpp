#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symprod/matrix.hpp"

namespace symprod::proj {

using symprod::Mat;

// All k-subsets of {0..n-1} in lexicographic order. This fixed order is the
// Plücker coordinate convention for the whole toolkit: coordinate t of a
// (k-1)-plane is the k x k minor on column set kth_subset(n, k)[t].
std::vector<std::vector<int>> subsets_lex(int n, int k);
std::size_t subset_rank_lex(int n, const std::vector<int>& subset);  // inverse of the above
std::size_t binomial_index_count(int n, int k);                      // C(n, k) as size_t

// Parity of the permutation (I, complement of I) of (0..n-1), written with
// both halves ascending. Used as the Laplace sign in the bilinear pairing.
int complement_sign(int n, const std::vector<int>& subset);

// Linear subspace of P^n, stored as the RREF of any spanning matrix. The
// RREF is canonical, so operator== is genuine subspace equality and Plücker
// coordinates are re-presentation independent.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  // Spans the row space of `rows`; throws when the rows are all zero.
  static Subspace from_rows(int ambient_n, Mat<F> rows) {
    if (ambient_n < 1) fail(Errc::invalid_argument, "ambient dimension must be >= 1");
    if (rows.cols() != static_cast<std::size_t>(ambient_n) + 1)
      fail(Errc::invalid_argument, "spanning rows must have ambient_n + 1 columns");
    auto [red, s] = rref(std::move(rows));
    if (s.rank == 0) fail(Errc::invalid_argument, "all-zero spanning set");
    Mat<F> basis(red.field(), s.rank, red.cols());
    for (std::size_t r = 0; r < s.rank; ++r)
      for (std::size_t c = 0; c < red.cols(); ++c) basis.at(r, c) = red.at(r, c);
    return Subspace(ambient_n, std::move(basis));
  }

  static Subspace from_point(int ambient_n, const F& f, const std::vector<Elem>& coords) {
    Mat<F> m(f, 1, coords.size());
    m.set_row(0, coords);
    return from_rows(ambient_n, std::move(m));
  }

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }  // projective dimension
  const Mat<F>& basis() const { return basis_; }
  const F& field() const { return basis_.field(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(int n, Mat<F> basis) : n_(n), basis_(std::move(basis)) {}
  int n_;
  Mat<F> basis_;

  template <class G>
  friend Subspace<G> trusted_echelon_subspace(int, Mat<G>);
};

// Fast path for enumerators that construct matrices already in RREF with
// full row rank (the F_p Schubert-cell walk). Skips re-reduction.
template <class F>
Subspace<F> trusted_echelon_subspace(int ambient_n, Mat<F> echelon_rows) {
  return Subspace<F>(ambient_n, std::move(echelon_rows));
}

template <class F>
Subspace<F> join(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) fail(Errc::invalid_argument, "join: ambient mismatch");
  return Subspace<F>::from_rows(a.ambient(), vstack(a.basis(), b.basis()));
}

// Intersection, absent when empty (two skew lines really do meet nowhere).
// Left-kernel route: z = (x, y) with x A + y B = 0 gives the common vector
// x A; those vectors are independent because A and B have full row rank.
template <class F>
std::optional<Subspace<F>> meet(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) fail(Errc::invalid_argument, "meet: ambient mismatch");
  Mat<F> stacked = vstack(a.basis(), b.basis());
  Mat<F> left_ker = kernel_basis(transpose(stacked));
  if (left_ker.rows() == 0) return std::nullopt;
  const std::size_t ra = a.basis().rows();
  Mat<F> rows(a.field(), left_ker.rows(), a.basis().cols());
  for (std::size_t i = 0; i < left_ker.rows(); ++i) {
    std::vector<typename F::Elem> z = left_ker.row(i);
    std::vector<typename F::Elem> x(z.begin(), z.begin() + ra);
    rows.set_row(i, vec_mat(x, a.basis()));
  }
  return Subspace<F>::from_rows(a.ambient(), std::move(rows));
}

template <class F>
bool incident(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) fail(Errc::invalid_argument, "incident: ambient mismatch");
  // Nonempty intersection iff the stacked spanning rows are rank-deficient.
  return rank_of(vstack(a.basis(), b.basis())) < a.basis().rows() + b.basis().rows();
}

template <class F>
bool contains(const Subspace<F>& outer, const Subspace<F>& inner) {
  if (outer.ambient() != inner.ambient())
    fail(Errc::invalid_argument, "contains: ambient mismatch");
  return rank_of(vstack(outer.basis(), inner.basis())) == outer.basis().rows();
}

template <class F>
struct PluckerVector {
  int ambient_n;
  int k;  // number of spanning rows; coords has C(ambient_n + 1, k) entries
  std::vector<typename F::Elem> coords;

  friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
    if (a.ambient_n != b.ambient_n || a.k != b.k || a.coords.size() != b.coords.size())
      return false;
    return a.coords == b.coords;
  }
};

template <class F>
typename F::Elem minor_on_columns(const Mat<F>& m, const std::vector<int>& cols) {
  Mat<F> sub(m.field(), m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub.at(r, c) = m.at(r, cols[c]);
  return det(std::move(sub));
}

// Raw minor vector of the stored canonical basis, no rescaling. This is the
// vector the determinant pairing expands over, so the cross-check in
// incidence_pairing is an exact identity rather than up-to-scale.
template <class F>
PluckerVector<F> plucker_raw(const Subspace<F>& s) {
  const int k = s.dim() + 1;
  PluckerVector<F> p{s.ambient(), k, {}};
  for (const auto& cols : subsets_lex(s.ambient() + 1, k))
    p.coords.push_back(minor_on_columns(s.basis(), cols));
  return p;
}

template <class F>
void canonicalize_plucker(const F& f, std::vector<typename F::Elem>& v) {
  if constexpr (F::is_rational) {
    // Scale to a primitive integer vector with positive first nonzero entry.
    Int den_lcm = 1;
    for (const auto& e : v) den_lcm = lcm(den_lcm, e.den());
    Int content = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      ints[i] = v[i].num() * (den_lcm / v[i].den());
      content = gcd(content, ints[i]);
    }
    if (sgn(content) == 0) return;  // zero vector: cannot occur for a subspace
    for (const auto& z : ints) {
      if (sgn(z) == 0) continue;
      if (sgn(z) < 0) content = -content;
      break;
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(Int(ints[i] / content));
  } else {
    typename F::Elem lead = 0;
    for (auto e : v)
      if (!f.is_zero(e)) {
        lead = e;
        break;
      }
    if (f.is_zero(lead)) return;
    auto scale = f.inv(lead);
    for (auto& e : v) e = f.mul(e, scale);
  }
}

// Canonical Plücker coordinates: over Q a primitive integer vector with
// positive leading entry; over F_p leading entry 1. Injective on subspaces.
template <class F>
PluckerVector<F> plucker(const Subspace<F>& s) {
  PluckerVector<F> p = plucker_raw(s);
  canonicalize_plucker(s.field(), p.coords);
  return p;
}

// Determinant of the stacked spanning matrices of complementary subspaces
// (dim l + dim L = n - 1). Zero iff the two subspaces meet. The sign is a
// convention: rows of `l` on top, rows of `L` below.
template <class F>
typename F::Elem incidence_pairing(const Subspace<F>& l, const Subspace<F>& L) {
  if (l.ambient() != L.ambient())
    fail(Errc::invalid_argument, "incidence_pairing: ambient mismatch");
  if (l.dim() + L.dim() != l.ambient() - 1)
    fail(Errc::invalid_argument, "incidence_pairing: dimensions are not complementary");
  return det(vstack(l.basis(), L.basis()));
}

// Laplace expansion of the same determinant over the two raw minor vectors:
// sum_I sign(I) p_I(l) p_{I^c}(L). Exactly equals incidence_pairing; kept as
// an independent route so tests can confront the two against each other.
template <class F>
typename F::Elem plucker_pairing(const F& f, const PluckerVector<F>& pl,
                                 const PluckerVector<F>& pL) {
  if (pl.ambient_n != pL.ambient_n || pl.k + pL.k != pl.ambient_n + 1)
    fail(Errc::invalid_argument, "plucker_pairing: not complementary");
  const int N = pl.ambient_n + 1;
  auto subs = subsets_lex(N, pl.k);
  auto acc = f.zero();
  for (std::size_t t = 0; t < subs.size(); ++t) {
    std::vector<int> comp;
    comp.reserve(N - pl.k);
    std::size_t u = 0;
    for (int c = 0; c < N; ++c) {
      if (u < subs[t].size() && subs[t][u] == c) {
        ++u;
        continue;
      }
      comp.push_back(c);
    }
    auto term = f.mul(pl.coords[t], pL.coords[subset_rank_lex(N, comp)]);
    if (complement_sign(N, subs[t]) < 0) term = f.neg(term);
    acc = f.add(acc, term);
  }
  return acc;
}

// Row-vector coordinate change: points x map to x M, subspace spanning rows
// map the same way. M must be invertible.
template <class F>
Subspace<F> apply_transform(const Subspace<F>& s, const Mat<F>& m) {
  if (m.rows() != m.cols() || m.rows() != s.basis().cols())
    fail(Errc::invalid_argument, "apply_transform: matrix shape mismatch");
  if (s.field().is_zero(det(m))) fail(Errc::invalid_argument, "apply_transform: singular matrix");
  return Subspace<F>::from_rows(s.ambient(), mat_mul(s.basis(), m));
}

// Number of k-dimensional linear subspaces of F_q^n (Gaussian binomial).
Int gaussian_binomial(int n, int k, const Int& q);

}  // namespace symprod::proj
