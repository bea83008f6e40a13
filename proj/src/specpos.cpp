#include "symprod/specpos.hpp"

#include <atomic>
#include <cstdint>

namespace symprod::specpos {

namespace {

constexpr std::uint64_t kOracleGuard = 10'000'000;

struct Cell {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free_slots;  // (row, col) in fill order
  std::uint64_t size = 1;
  std::uint64_t offset = 0;
};

}  // namespace

OracleReport oracle_ffield(const Configuration<PrimeField>& c) {
  const PrimeField f = c.planes.front().field();
  const std::uint32_t p = f.modulus();
  const int N = c.n + 1;
  const int m = c.n - c.k + 1;  // linear dimension of the planes we enumerate

  Int expected = proj::gaussian_binomial(N, m, Int(p));
  if (expected > Int(kOracleGuard))
    fail(Errc::too_large, "oracle would enumerate " + int_to_string(expected) +
                              " planes, guard is " + std::to_string(kOracleGuard));

  // Schubert-cell decomposition: one cell per pivot column set, free entries
  // to the right of each pivot in non-pivot columns. Every plane has exactly
  // one reduced-echelon spanning matrix, so the walk is a bijection.
  std::vector<Cell> cells;
  std::uint64_t total = 0;
  for (auto& pivots : proj::subsets_lex(N, m)) {
    Cell cell;
    cell.pivots = pivots;
    std::vector<bool> is_pivot(N, false);
    for (int col : pivots) is_pivot[col] = true;
    for (int r = 0; r < m; ++r)
      for (int col = pivots[r] + 1; col < N; ++col)
        if (!is_pivot[col]) cell.free_slots.emplace_back(r, col);
    for (std::size_t i = 0; i < cell.free_slots.size(); ++i) cell.size *= p;
    cell.offset = total;
    total += cell.size;
    cells.push_back(std::move(cell));
  }
  if (Int(static_cast<unsigned long>(total)) != expected)
    fail(Errc::inconsistent, "cell decomposition disagrees with gaussian_binomial");

  std::atomic<bool> violation{false};
  std::atomic<std::uint64_t> visited{0};
  const std::size_t d = c.planes.size();

  parallel_ranges(total, [&](std::uint64_t begin, std::uint64_t end) {
    // Locate the starting cell for this chunk.
    std::size_t ci = 0;
    while (ci + 1 < cells.size() && cells[ci + 1].offset <= begin) ++ci;
    std::uint64_t count = 0;
    bool bad = false;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      while (ci + 1 < cells.size() && cells[ci + 1].offset <= idx) ++ci;
      const Cell& cell = cells[ci];
      std::uint64_t digits = idx - cell.offset;

      Mat<PrimeField> rows(f, m, N);
      for (int r = 0; r < m; ++r) rows.at(r, cell.pivots[r]) = 1;
      for (const auto& [r, col] : cell.free_slots) {
        rows.at(r, col) = static_cast<std::uint32_t>(digits % p);
        digits /= p;
      }
      Subspace<PrimeField> L = proj::trusted_echelon_subspace(c.n, std::move(rows));

      int misses = 0;
      for (std::size_t i = 0; i < d && misses < 2; ++i) {
        // Complementary dimensions: incidence is one square determinant.
        auto val = det(vstack(L.basis(), c.planes[i].basis()));
        if (!f.is_zero(val)) ++misses;
      }
      if (misses == 1) bad = true;  // meets all but exactly one: not special
      ++count;
    }
    if (bad) violation.store(true, std::memory_order_relaxed);
    visited.fetch_add(count, std::memory_order_relaxed);
  });

  if (visited.load() != total) fail(Errc::inconsistent, "oracle enumeration miscount");
  return OracleReport{!violation.load(), total, p};
}

Configuration<PrimeField> reduce_mod(const Configuration<RationalField>& c, std::uint32_t p) {
  PrimeField f(p);
  std::vector<Subspace<PrimeField>> planes;
  planes.reserve(c.planes.size());
  for (const auto& s : c.planes) {
    const auto& b = s.basis();
    Mat<PrimeField> rows(f, b.rows(), b.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col)
        rows.at(r, col) = f.from_rational(b.at(r, col));
    auto reduced = Subspace<PrimeField>::from_rows(c.n, std::move(rows));
    if (reduced.dim() != s.dim())
      fail(Errc::inconsistent,
           "plane rank drops mod " + std::to_string(p) + "; pick another prime");
    planes.push_back(std::move(reduced));
  }
  // Plane dimensions alone do not make the reduction faithful: two distinct
  // planes may collide mod p, or more generally a pairwise join may lose
  // rank, which changes which transversals exist. Demand that every pairwise
  // join and the total span keep their dimension.
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      if (join(planes[i], planes[j]).dim() != join(c.planes[i], c.planes[j]).dim())
        fail(Errc::inconsistent, "join of planes " + std::to_string(i) + " and " +
                                     std::to_string(j) + " loses rank mod " +
                                     std::to_string(p) + "; pick another prime");
  if (!planes.empty()) {
    auto whole = planes.front();
    auto whole_q = c.planes.front();
    for (std::size_t i = 1; i < planes.size(); ++i) {
      whole = join(whole, planes[i]);
      whole_q = join(whole_q, c.planes[i]);
    }
    if (whole.dim() != whole_q.dim())
      fail(Errc::inconsistent, "configuration span loses rank mod " + std::to_string(p) +
                                   "; pick another prime");
  }
  return make_configuration(c.n, c.k, std::move(planes));
}

std::vector<std::uint32_t> good_reduction_primes(const Configuration<RationalField>& c,
                                                 int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; out.size() < static_cast<std::size_t>(count) && p < 10000; ++p) {
    if (!is_prime_u32(p)) continue;
    try {
      reduce_mod(c, p);
      out.push_back(p);
    } catch (const Error&) {
      // bad reduction at p, try the next prime
    }
  }
  if (out.size() < static_cast<std::size_t>(count))
    fail(Errc::invalid_argument, "could not find enough good-reduction primes");
  return out;
}

namespace {

using QSub = Subspace<RationalField>;

QSub line_through(int n, const std::vector<long long>& a, const std::vector<long long>& b) {
  RationalField f;
  QMat m(f, 2, static_cast<std::size_t>(n) + 1);
  for (int c = 0; c <= n; ++c) {
    m.at(0, c) = Rational(a[c]);
    m.at(1, c) = Rational(b[c]);
  }
  return QSub::from_rows(n, std::move(m));
}

std::vector<long long> unit_vec(int n, int i) {
  std::vector<long long> v(static_cast<std::size_t>(n) + 1, 0);
  v[i] = 1;
  return v;
}

Rational quadric_xw_yz(const std::vector<Rational>& pt) {
  return pt[0] * pt[3] - pt[1] * pt[2];
}

}  // namespace

Configuration<RationalField> fixture_pencil(int d, int n) {
  if (d < 2 || n < 3) fail(Errc::invalid_argument, "pencil fixture needs d >= 2, n >= 3");
  std::vector<QSub> lines;
  if (d == 2) {
    // Two distinct concurrent lines are never special; the d = 2 member of
    // the family is the doubled line.
    lines.push_back(line_through(n, unit_vec(n, 0), unit_vec(n, 1)));
    lines.push_back(lines.front());
  } else {
    lines.push_back(line_through(n, unit_vec(n, 0), unit_vec(n, 1)));
    lines.push_back(line_through(n, unit_vec(n, 0), unit_vec(n, 2)));
    for (int i = 1; i <= d - 2; ++i) {
      auto dir = unit_vec(n, 1);
      dir[2] = i;  // e1 + i*e2: stays in the common plane, through e0
      lines.push_back(line_through(n, unit_vec(n, 0), dir));
    }
  }
  return make_configuration(n, 2, std::move(lines));
}

Configuration<RationalField> fixture_quadric_ruling(int d) {
  if (d < 2) fail(Errc::invalid_argument, "quadric ruling fixture needs d >= 2");
  std::vector<QSub> lines;
  for (long long t = 0; t < d; ++t)
    lines.push_back(line_through(3, {1, t, 0, 0}, {0, 0, 1, t}));
  auto cfg = make_configuration(3, 2, std::move(lines));
  for (const auto& l : cfg.planes) {
    // A line lies on the quadric iff the form vanishes on two spanning
    // points and on their sum (the form is quadratic, not linear).
    auto u = l.basis().row(0);
    auto v = l.basis().row(1);
    std::vector<Rational> sum(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) sum[i] = u[i] + v[i];
    if (!quadric_xw_yz(u).is_zero() || !quadric_xw_yz(v).is_zero() ||
        !quadric_xw_yz(sum).is_zero())
      fail(Errc::inconsistent, "ruling line left the quadric xw = yz");
  }
  return cfg;
}

Configuration<RationalField> fixture_scroll(int d) {
  if (d < 4) fail(Errc::invalid_argument, "scroll fixture needs d >= 4");
  const int n = d - 1;
  std::vector<QSub> lines;
  for (long long t = 0; t < d; ++t) {
    std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    a[1] = t;
    std::vector<long long> b(static_cast<std::size_t>(n) + 1, 0);
    long long pw = 1;
    for (int c = 2; c <= n; ++c) {
      b[c] = pw;  // (0, 0, 1, t, t^2, ..., t^{d-3})
      pw *= t;
    }
    lines.push_back(line_through(n, a, b));
  }
  auto cfg = make_configuration(n, 2, std::move(lines));
  for (std::size_t i = 0; i < cfg.planes.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.planes.size(); ++j)
      if (proj::incident(cfg.planes[i], cfg.planes[j]))
        fail(Errc::inconsistent, "scroll lines must be pairwise skew");
  return cfg;
}

Configuration<RationalField> fixture_triangle() {
  std::vector<QSub> sides;
  sides.push_back(line_through(3, unit_vec(3, 0), unit_vec(3, 1)));
  sides.push_back(line_through(3, unit_vec(3, 1), unit_vec(3, 2)));
  sides.push_back(line_through(3, unit_vec(3, 0), unit_vec(3, 2)));
  return make_configuration(3, 2, std::move(sides));
}

Configuration<RationalField> fixture_random_skew(int d, int n, std::uint64_t seed) {
  if (d < 2 || n < 3) fail(Errc::invalid_argument, "random skew fixture needs d >= 2, n >= 3");
  RationalField f;
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng = derived_stream(seed, 0xF15ED, attempt);
    std::vector<QSub> lines;
    int redraws = 0;
    while (static_cast<int>(lines.size()) < d && redraws < 256) {
      QMat m(f, 2, static_cast<std::size_t>(n) + 1);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c <= n; ++c) m.at(r, c) = Rational(rng.bounded(-9, 9));
      if (rank_of(m) != 2) {
        ++redraws;
        continue;
      }
      QSub cand = QSub::from_rows(n, std::move(m));
      bool skew = true;
      for (const auto& prev : lines)
        if (proj::incident(prev, cand)) skew = false;
      if (skew)
        lines.push_back(std::move(cand));
      else
        ++redraws;
    }
    if (static_cast<int>(lines.size()) < d) continue;  // fresh attempt, fresh stream
    auto cfg = make_configuration(n, 2, std::move(lines));
    // Random integer lines are never special, but keep the promise explicit.
    if (cb_linear_test(cfg)) continue;
    return cfg;
  }
}

}  // namespace symprod::specpos
