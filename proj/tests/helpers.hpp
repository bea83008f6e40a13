// Small builders shared by the test binaries: literal matrices, subspaces
// and configurations without the ceremony of field plumbing in every test.
#pragma once

#include <string>
#include <vector>

#include "symprod/rng.hpp"
#include "symprod/specpos.hpp"
#include "symprod/subspace.hpp"

namespace testutil {

using namespace symprod;

inline Rational Q(const std::string& s) { return Rational::from_string(s); }

inline QMat qmat(const std::vector<std::vector<long long>>& rows) {
  QMat m(RationalField{}, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
  return m;
}

inline proj::Subspace<RationalField> qspace(int n,
                                            const std::vector<std::vector<long long>>& rows) {
  return proj::Subspace<RationalField>::from_rows(n, qmat(rows));
}

inline PMat pmat(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
  PrimeField f(p);
  PMat m(f, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = f.from_int(int_of(rows[r][c]));
  return m;
}

inline proj::Subspace<PrimeField> pspace(std::uint32_t p, int n,
                                         const std::vector<std::vector<long long>>& rows) {
  return proj::Subspace<PrimeField>::from_rows(n, pmat(p, rows));
}

inline specpos::Configuration<RationalField> qconfig(
    int n, int k, const std::vector<std::vector<std::vector<long long>>>& planes) {
  std::vector<proj::Subspace<RationalField>> subs;
  for (const auto& rows : planes) subs.push_back(qspace(n, rows));
  return specpos::make_configuration(n, k, std::move(subs));
}

inline QMat random_qmat(SplitMix64& rng, std::size_t rows, std::size_t cols,
                        long long lo = -9, long long hi = 9) {
  QMat m(RationalField{}, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.bounded(lo, hi));
  return m;
}

inline PMat random_pmat(std::uint32_t p, SplitMix64& rng, std::size_t rows, std::size_t cols) {
  PrimeField f(p);
  PMat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<std::uint32_t>(rng.bounded(0, p - 1));
  return m;
}

// Entrywise reduction of an integer-valued rational matrix mod p.
inline PMat reduce_qmat(const QMat& m, std::uint32_t p) {
  PrimeField f(p);
  PMat out(f, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = f.from_rational(m.at(r, c));
  return out;
}

}  // namespace testutil
